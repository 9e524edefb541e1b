#include "pcx/report.hpp"

#include <sstream>

namespace pcx {

namespace {

Json labels(const std::vector<AxisVertex>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_string(v.rep));
  return a;
}

Json witness_labels(const std::vector<std::vector<std::size_t>>& ws, const ProjectionSystem& s) {
  Json a = Json::array();
  for (const auto& w : ws) {
    Json t = Json::array();
    for (std::size_t i : w) t.push_back(s.label(i));
    a.push_back(t);
  }
  return a;
}

}  // namespace

Json to_json(const Rational& r) {
  const Rational n = r.normalized();
  if (n.den == 1) return n.num;
  return n.str();
}

Json to_json(const AxiomReport& r, const ProjectionSystem& system) {
  Json j;
  j["window_size"] = r.window_size;
  j["triangle_window"] = r.triangle_window;
  j["finiteness_inner"] = r.finiteness_inner;
  j["finiteness_tested"] = r.finiteness_tested;
  j["symmetry"] = r.symmetry;
  j["triangle"] = r.triangle;
  j["triples"] = r.triples;
  j["finiteness"] = r.finiteness;
  j["theta_declared"] = to_json(r.theta_declared);
  j["theta_measured"] = to_json(r.theta_measured);
  j["witnesses"] = {{"symmetry", witness_labels(r.symmetry_witnesses, system)},
                    {"triangle", witness_labels(r.triangle_witnesses, system)},
                    {"triples", witness_labels(r.triples_witnesses, system)},
                    {"finiteness", witness_labels(r.finiteness_witnesses, system)}};
  return j;
}

Json to_json(const Constants& c) {
  return Json{{"theta", to_json(c.theta)},   {"c_e", to_json(c.c_e)},         {"c_p", to_json(c.c_p)},
              {"c_g", to_json(c.c_g)},       {"B", to_json(c.B)},             {"m", to_json(c.m)},
              {"l0", to_json(c.l0)},         {"l_short", to_json(c.l_short)}, {"l_lift", to_json(c.l_lift)},
              {"l_pro", to_json(c.l_pro)},   {"l_hyp", to_json(c.l_hyp)},     {"l_wpd", to_json(c.l_wpd)}};
}

Json to_json(const DeltaReport& r) {
  return Json{{"delta", to_json(r.delta)},
              {"method", r.method == DeltaMethod::FourPoint ? "four-point" : "thin-triangle"},
              {"samples", r.samples},
              {"witness", r.witness}};
}

Json to_json(const ImageConstants& c) {
  return Json{{"c_e", to_json(c.c_e)},
              {"c_p", to_json(c.c_p)},
              {"c_g", to_json(c.c_g)},
              {"max_projection", to_json(c.max_projection)},
              {"c_e_within_bound", c.c_e_within_bound},
              {"ordered", c.ordered}};
}

Json to_json(const WindmillData& w) {
  Json j;
  j["v0"] = to_string(w.v0.rep);
  j["p"] = w.p;
  j["window_radius"] = w.window_radius;
  j["max_stage"] = w.max_stage;
  j["truncated"] = w.truncated;
  Json st = Json::array();
  for (const auto& s : w.stages)
    st.push_back(Json{{"i", s.i},
                      {"W", s.W.size()},
                      {"N", s.N.size()},
                      {"L", s.L.size()},
                      {"O", s.O.size()},
                      {"O_vertices", labels(s.O)},
                      {"W_connected", s.W_connected},
                      {"contains_previous", s.contains_previous},
                      {"L_matches", s.L_matches},
                      {"O_one_per_orbit", s.O_one_per_orbit}});
  j["stages"] = st;
  return j;
}

Json to_json(const QuotientComplex& q) {
  std::int32_t diameter = 0;
  for (std::int32_t d : q.dist) diameter = std::max(diameter, d);
  Json j{{"window_size", q.window.size()},
         {"classes", q.size()},
         {"edges", q.num_edges},
         {"diameter", diameter},
         {"well_defined", q.well_defined},
         {"lipschitz", q.lipschitz},
         {"exact", q.exact},
         {"inexact_pairs", q.inexact_pairs},
         {"bfs_checked", q.bfs_checked}};
  if (q.bfs_checked) {
    j["bfs_sound"] = q.bfs_sound;
    j["unstable_classes"] = q.unstable;
  }
  return j;
}

Json to_json(const QuotientStability& s) {
  return Json{{"inner_classes", s.inner_classes},
              {"outer_classes", s.outer_classes},
              {"compared_pairs", s.compared_pairs},
              {"differing_pairs", s.differing_pairs},
              {"stable", s.stable}};
}

Json to_json(const QuotientDeltaReport& r) {
  return Json{{"samples", r.samples}, {"max_thinness_quotient", r.max_thinness}, {"witness", r.witness}};
}

Json to_json(const ProjectedGeodesicReport& r) {
  return Json{{"length", r.length},
              {"max_projection", r.max_projection},
              {"applicable", r.applicable},
              {"length_condition", r.length_condition},
              {"quotient_distance", r.quotient_distance},
              {"window_distance", r.window_distance},
              {"geodesic", r.geodesic}};
}

Json to_json(const BoundedProjectionReport& r) {
  return Json{{"f", to_string(r.f)},
              {"x0", to_string(r.x0.rep)},
              {"M1", r.M1},
              {"M2", r.M2},
              {"M", r.M},
              {"N", r.N},
              {"C_p", r.C_p},
              {"B_f", r.B_f},
              {"exponent_range", r.exponent_range},
              {"per_exponent", r.per_exponent},
              {"empirical_max", r.empirical_max},
              {"window_max", r.window_max},
              {"holds", r.holds}};
}

Json to_json(const WpdProbe& p) {
  Json w = Json::array();
  for (const auto& g : p.witnesses) w.push_back(to_string(g));
  return Json{{"f", to_string(p.f)},
              {"x0", to_string(p.x0.rep)},
              {"D", p.D},
              {"M", p.M},
              {"ball_radius", p.ball_radius},
              {"degenerate", p.degenerate},
              {"K", p.K},
              {"K_quotient", p.K_quotient},
              {"witnesses", w},
              {"series", p.series},
              {"series_non_decreasing", p.series_non_decreasing},
              {"source_translation", p.source_translation},
              {"quotient_translation", p.quotient_translation},
              {"translation_equal", p.translation_equal}};
}

Json to_json(const IndependenceReport& r) {
  return Json{{"f1", to_string(r.f1)},
              {"f2", to_string(r.f2)},
              {"x0", to_string(r.x0.rep)},
              {"range", r.range},
              {"B0", r.B0},
              {"B_f1", r.B_f1},
              {"B_f2", r.B_f2},
              {"B", r.B},
              {"source", r.source},
              {"quotient", r.quotient},
              {"shell_minimum", r.shell_minimum},
              {"shell_strictly_increasing", r.shell_strictly_increasing},
              {"quotient_equal", r.quotient_equal},
              {"diagonal_max", r.diagonal_max}};
}

Json to_json(const ShortenResult& r) {
  return Json{{"v", to_string(r.v.rep)},
              {"h_v", r.h_v.str()},
              {"product", r.product.str()},
              {"branch", shorten_case_name(r.branch)},
              {"J", r.J},
              {"before", {r.before.i, r.before.n}},
              {"after", {r.after.i, r.after.n}}};
}

Json to_json(const PivotFactsReport& r) {
  return Json{{"samples", r.samples},
              {"pivots", r.pivots},
              {"pairs", r.pairs},
              {"failures", r.failures},
              {"witnesses", r.witnesses}};
}

Json to_json(const EssentialLawsReport& r) {
  return Json{{"conjugation_samples", r.conjugation_samples},
              {"conjugation_literal", r.conjugation_literal},
              {"conjugation_failures", r.conjugation_failures},
              {"power_samples", r.power_samples},
              {"power_failures", r.power_failures},
              {"witnesses", r.witnesses}};
}

Json to_json(const ShortenSuiteReport& r) {
  Json b = Json::object();
  for (const auto& [k, v] : r.branches) b[k] = v;
  return Json{{"samples", r.samples},
              {"steps", r.steps},
              {"max_steps", r.max_steps},
              {"postcondition_failures", r.postcondition_failures},
              {"complexity_failures", r.complexity_failures},
              {"bound_failures", r.bound_failures},
              {"branches", b},
              {"witnesses", r.witnesses}};
}

Json to_json(const LiftSuiteReport& r) {
  return Json{{"triangles", r.triangles},
              {"quadrilaterals", r.quadrilaterals},
              {"constrained", r.constrained},
              {"bends", r.bends},
              {"failures", r.failures},
              {"translate_failures", r.translate_failures},
              {"witnesses", r.witnesses}};
}

std::string to_dot(const QuotientComplex& q) {
  std::ostringstream out;
  out << "graph quotient {\n";
  for (const auto& r : q.reps) out << "  \"" << to_string(r.rep) << "\";\n";
  for (std::size_t a = 0; a < q.size(); ++a)
    for (std::uint32_t b : q.adj[a])
      if (b > a) out << "  \"" << to_string(q.reps[a].rep) << "\" -- \"" << to_string(q.reps[b].rep) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pcx
