#include "ramsey_lab/reports.hpp"

#include <cmath>
#include <sstream>

namespace ramsey_lab {

namespace {

Json path_json(const ProperPath& p) { return p.vertices; }

Json family_json(const TrashFamily& fam) {
  Json out = Json::array();
  for (const auto& p : fam.paths) out.push_back(path_json(p));
  return out;
}

// Non-finite doubles have no JSON spelling; report them as null.
Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

std::string csv_number(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

}  // namespace

Json paper_params_to_json(const PaperParams& p) {
  return Json{{"k", p.k}, {"r", p.r}, {"n", p.n}, {"c", p.c}, {"p", p.p}, {"part_size", p.part_size}};
}

Json audit_to_json(const CertificateAudit& a) {
  Json rounds = Json::array();
  for (const auto& r : a.rounds)
    rounds.push_back({{"y", r.y},
                      {"t_B", r.t_b},
                      {"deleted", r.deleted},
                      {"deleted_within_y", r.deleted <= r.y},
                      {"property_i", r.property_i},
                      {"margin_i", number(r.margin_i)}});
  return Json{{"k", a.k},
              {"r", a.r},
              {"color", a.color},
              {"rounds", std::move(rounds)},
              {"z_C", a.z_c},
              {"t_k", a.t_k},
              {"edges", a.edges},
              {"e_b", a.e_b},
              {"sum_y", a.sum_y},
              {"sum_t_B", a.sum_t_b},
              {"checks",
               {{"a_accounting", a.accounting},
                {"b_property_i_all_rounds", a.all_property_i},
                {"c_property_ii", a.property_ii},
                {"d_extension_budget", a.extension_budget},
                {"e_minority", a.minority}}},
              {"margin_ii", number(a.margin_ii)},
              {"margin_minority", number(a.margin_minority)},
              {"families_disjoint", a.families_disjoint},
              {"implication_holds", a.implication_holds()}};
}

Json outcome_to_json(const GreedyOutcome& outcome) {
  if (const auto* path = std::get_if<PathOutcome>(&outcome)) {
    return Json{{"kind", "Path"},
                {"color", path->color},
                {"round", path->round},
                {"length", path->vertices.size()},
                {"path", path->vertices}};
  }
  const auto& cert = std::get<Certificate>(outcome);
  Json rounds = Json::array();
  for (const auto& r : cert.rounds)
    rounds.push_back({{"A", r.path_snapshot}, {"B", family_json(r.trash)}, {"deleted_edges", r.deleted_edges}});
  return Json{{"kind", "Certificate"},
              {"color", cert.color},
              {"n", cert.n},
              {"rounds", std::move(rounds)},
              {"final_trash", family_json(cert.final_trash)},
              {"C", cert.intersecting_set},
              {"audit", audit_to_json(cert.audit)}};
}

Json property_report_to_json(const PropertyReport& rep, bool emit_trials) {
  Json out{{"property", rep.property},
           {"parameters",
            {{"k", rep.k},
             {"r", rep.params.r},
             {"n", rep.params.n},
             {"c", number(rep.params.c)},
             {"p", number(rep.params.p)},
             {"m", rep.m}}},
           {"summary",
            {{"trials", rep.trials},
             {"violations", rep.violations},
             {"passes", rep.passes},
             {"skips", rep.skips},
             {"margin_min", number(rep.margin_min)},
             {"margin_mean", number(rep.margin_mean)}}}};
  if (emit_trials) {
    Json rows = Json::array();
    for (const auto& row : rep.rows)
      rows.push_back({{"trial", row.trial},
                      {"sampler", row.sampler},
                      {"outcome", std::string(outcome_name(row.outcome))},
                      {"statistic", row.statistic},
                      {"lhs", row.lhs},
                      {"aux", row.aux},
                      {"rhs", number(row.rhs)},
                      {"note", row.note}});
    out["trials"] = std::move(rows);
  }
  return out;
}

Json growth_report_to_json(const GrowthReport& rep) {
  return Json{{"property", "iii"},
              {"t_k", rep.t_k},
              {"scale", number(rep.scale)},
              {"ratio_c", number(rep.ratio_c)},
              {"ratio_r", number(rep.ratio_r)},
              {"parameters",
               {{"r", rep.params.r}, {"n", rep.params.n}, {"c", number(rep.params.c)}, {"p", number(rep.params.p)}}}};
}

Json concentration_report_to_json(const ConcentrationReport& rep, bool emit_trials) {
  Json rows = Json::array();
  for (const auto& d : rep.deviations)
    rows.push_back({{"epsilon", d.epsilon},
                    {"fraction_below", d.fraction_below},
                    {"fraction_above", d.fraction_above},
                    {"fraction_outside", d.fraction_outside},
                    {"chernoff_lower", number(d.chernoff_lower)},
                    {"chernoff_upper", number(d.chernoff_upper)},
                    {"kim_vu_lambda", number(d.kim_vu_lambda)},
                    {"kim_vu_exponent", number(d.kim_vu_exponent)},
                    {"kim_vu_applicable", d.kim_vu_applicable}});
  Json out{{"statistic", std::string(statistic_name(rep.statistic))},
           {"parameters", {{"k", rep.k}, {"m", rep.m}, {"p", number(rep.p)}, {"seed", rep.seed}, {"vertex", rep.vertex}}},
           {"summary",
            {{"trials", rep.trials},
             {"expectation", number(rep.expectation)},
             {"mean", number(rep.mean)},
             {"variance", number(rep.variance)},
             {"min", rep.min},
             {"max", rep.max}}},
           {"deviations", std::move(rows)}};
  if (emit_trials) out["values"] = rep.values;
  return out;
}

std::string property_rows_csv(const PropertyReport& rep) {
  std::string out = kCsvHeader;
  for (const auto& row : rep.rows) {
    if (row.outcome == TrialOutcome::skipped) continue;
    const double ratio = row.rhs > 0.0 ? static_cast<double>(row.lhs) / row.rhs : 0.0;
    out += std::to_string(row.trial) + "," + row.statistic + "," + std::to_string(row.lhs) + "," +
           csv_number(row.rhs) + "," + csv_number(ratio) + "\n";
  }
  return out;
}

std::string concentration_rows_csv(const ConcentrationReport& rep) {
  std::string out = kCsvHeader;
  const std::string name(statistic_name(rep.statistic));
  for (std::size_t t = 0; t < rep.values.size(); ++t) {
    const double v = static_cast<double>(rep.values[t]);
    const double ratio = rep.expectation > 0.0 ? v / rep.expectation : 0.0;
    out += std::to_string(t) + "," + name + "," + std::to_string(rep.values[t]) + "," +
           csv_number(rep.expectation) + "," + csv_number(ratio) + "\n";
  }
  return out;
}

}  // namespace ramsey_lab
