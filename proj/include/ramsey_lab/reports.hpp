#pragma once

#include <string>

#include "ramsey_lab/greedy.hpp"
#include "ramsey_lab/io.hpp"
#include "ramsey_lab/properties.hpp"

namespace ramsey_lab {

Json paper_params_to_json(const PaperParams& params);
Json audit_to_json(const CertificateAudit& audit);
Json outcome_to_json(const GreedyOutcome& outcome);
Json property_report_to_json(const PropertyReport& report, bool emit_trials);
Json growth_report_to_json(const GrowthReport& report);
Json concentration_report_to_json(const ConcentrationReport& report, bool emit_trials);

/// Header: trial,statistic,value,expectation,ratio
inline constexpr const char* kCsvHeader = "trial,statistic,value,expectation,ratio\n";
std::string property_rows_csv(const PropertyReport& report);
std::string concentration_rows_csv(const ConcentrationReport& report);

}  // namespace ramsey_lab
