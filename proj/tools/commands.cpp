#include "commands.hpp"

#include <algorithm>
#include <memory>

#include "pcx/error.hpp"
#include "pcx/tree_system.hpp"

namespace pcxcli {

using namespace pcx;

namespace {

Rational num(const std::string& s) { return Rational::parse(s); }

long long integer(const std::string& s, const char* name) {
  const Rational r = num(s).normalized();
  if (r.den != 1) throw Error(ErrorKind::Config, std::string(name) + " must be an integer for the tree backend");
  return r.num;
}

TreeBackend backend(const RunConfig& c) {
  try {
    return TreeBackend(c.k, parse_word(c.f, c.k));
  } catch (const Error& e) {
    throw Error(ErrorKind::Config, std::string("base word: ") + e.what());
  }
}

Word word(const std::string& s, const RunConfig& c) { return parse_word(s, c.k); }

std::unique_ptr<ProjectionSystem> system(const RunConfig& c, const TreeBackend* tb, int radius) {
  if (!c.table.empty()) return std::make_unique<TableSystem>(TableSystem::from_file(c.table, num(c.theta)));
  return std::make_unique<TreeSystem>(*tb, radius, c.tree_radius, integer(c.theta, "theta"));
}

Outcome check_axioms_cmd(const RunConfig& c) {
  std::unique_ptr<TreeBackend> tb;
  if (c.table.empty()) tb = std::make_unique<TreeBackend>(backend(c));
  const auto sys = system(c, tb.get(), c.radius);
  AxiomOptions opt;
  if (tb) {
    // Quadruple scan one radius down, finiteness against the window two radii down.
    if (c.radius >= 1) opt.triangle_prefix = tb->window(c.radius - 1).size();
    if (c.radius >= 2) opt.inner = tb->window(c.radius - 2).size();
  } else {
    opt.inner = static_cast<std::size_t>(c.inner);
  }
  const AxiomReport r = check_axioms(*sys, opt);
  return {r.all_pass(), to_json(r, *sys), {}};
}

Outcome build_cmd(const RunConfig& c) {
  std::unique_ptr<TreeBackend> tb;
  if (c.table.empty()) tb = std::make_unique<TreeBackend>(backend(c));
  const auto sys = system(c, tb.get(), c.radius);
  const ComplexGraph g = build_complex(*sys, c.K);
  const ImageConstants ic = measure_image_constants(g, *sys);
  std::int32_t diameter = 0;
  for (std::int32_t d : g.dist) diameter = std::max(diameter, d);
  Json j{{"vertices", g.size()},
         {"edges", g.num_edges},
         {"components", g.num_components},
         {"diameter", diameter},
         {"K", g.K},
         {"image_constants", to_json(ic)}};
  return {ic.c_e_within_bound, j, to_dot(g)};
}

Outcome constants_cmd(const RunConfig& c) {
  const Constants k = constants_ladder(num(c.theta), num(c.ce), num(c.cp), num(c.cg), num(c.B));
  return {true, to_json(k), {}};
}

Outcome windmill_cmd(const RunConfig& c) {
  const TreeBackend tb = backend(c);
  const SpinningFamily fam = make_family(tb, c.p);
  const Descent d(fam);
  const TreeSystem sys(tb, c.radius, c.tree_radius);
  const ComplexGraph g = build_complex(sys, c.K);
  const WindmillData w = build_windmill(d, sys.vertices(), g, c.stages);
  bool pass = true;
  for (const auto& s : w.stages) pass &= s.W_connected && s.contains_previous && s.L_matches && s.O_one_per_orbit;
  return {pass, to_json(w), {}};
}

std::vector<AxisVertex> pool_of(const Descent& d, const TreeBackend& tb, int radius) {
  return canonical_pool(d, tb.window(std::min(radius, 4)), 2);
}

Outcome shorten_cmd(const RunConfig& c) {
  const TreeBackend tb = backend(c);
  const SpinningFamily fam = make_family(tb, c.p);
  const Descent d(fam);
  if (c.h.empty()) {
    const auto r = shorten_suite(d, pool_of(d, tb, c.radius), tb.window(std::min(c.radius, 3)),
                                 static_cast<std::size_t>(c.samples), c.seed);
    return {r.pass(), to_json(r), {}};
  }
  const AxisVertex x = tb.canonical(word(c.x, c));
  RotationWord h = RotationWord::parse(c.h, c.k);
  const Complexity c0 = complexity(d, h).c;
  const std::size_t bound = c0.n * static_cast<std::size_t>(c0.i + 2) + 4;
  Json steps = Json::array();
  bool pass = true;
  while (!h.empty() && tb.act(shadow(fam, h), x) != x) {
    const AxisVertex hx = tb.act(shadow(fam, h), x);
    const ShortenResult s = shorten(d, x, h);
    pass &= (s.v == x || s.v == hx || 10 * tb.distance(s.v, x, hx) > fam.L) && s.after < s.before;
    steps.push_back(to_json(s));
    h = s.product;
    if (steps.size() > bound) {
      pass = false;
      break;
    }
  }
  return {pass, Json{{"x", to_string(x.rep)}, {"bound", bound}, {"steps", steps}}, {}};
}

Outcome lift_cmd(const RunConfig& c) {
  const TreeBackend tb = backend(c);
  const SpinningFamily fam = make_family(tb, c.p);
  const Descent d(fam);
  const auto n = static_cast<std::size_t>(c.samples);
  const auto r = lift_suite(d, pool_of(d, tb, c.radius), n, n / 2, n / 2, c.seed);
  return {r.pass(), to_json(r), {}};
}

struct QuotientPair {
  TreeSystem inner_sys, outer_sys;
  ComplexGraph inner_g, outer_g;
  QuotientComplex inner, outer;
};

std::unique_ptr<QuotientPair> quotients(const RunConfig& c, const TreeBackend& tb, const Descent& d) {
  if (c.radius < 1) throw Error(ErrorKind::Config, "quotient needs radius >= 1");
  auto q = std::unique_ptr<QuotientPair>(new QuotientPair{TreeSystem(tb, c.radius - 1, c.tree_radius),
                                                          TreeSystem(tb, c.radius, c.tree_radius), {}, {}, {}, {}});
  q->inner_g = build_complex(q->inner_sys, c.K);
  q->outer_g = build_complex(q->outer_sys, c.K);
  QuotientOptions opt;
  opt.move_depth = c.move_depth;
  opt.bfs_cap = c.bfs_cap;
  // The orbit search is quadratic in the window; it runs on windows of at most 200 axes.
  opt.bfs_depth = q->inner_sys.size() <= 200 ? c.bfs_depth : 0;
  q->inner = build_quotient(q->inner_g, d, q->inner_sys.vertices(), opt);
  opt.bfs_depth = 0;
  q->outer = build_quotient(q->outer_g, d, q->outer_sys.vertices(), opt);
  return q;
}

Outcome quotient_cmd(const RunConfig& c) {
  const TreeBackend tb = backend(c);
  const SpinningFamily fam = make_family(tb, c.p);
  const Descent d(fam);
  const auto q = quotients(c, tb, d);
  const QuotientStability st = compare_quotients(q->inner, q->outer, d);
  bool pass = st.stable && q->outer.well_defined && q->outer.lipschitz && q->inner.well_defined &&
              q->inner.lipschitz && (!q->inner.bfs_checked || q->inner.bfs_sound);
  if (c.K == 0) pass &= q->inner.exact && q->outer.exact;
  Json j{{"classes", q->outer.size()},
         {"edges", q->outer.num_edges},
         {"stability_radius", st.stable ? c.radius - 1 : -1},
         {"inner", to_json(q->inner)},
         {"outer", to_json(q->outer)},
         {"stability", to_json(st)}};
  return {pass, j, to_dot(q->outer)};
}

Outcome delta_cmd(const RunConfig& c) {
  const TreeBackend tb = backend(c);
  const SpinningFamily fam = make_family(tb, c.p);
  const Descent d(fam);
  const TreeSystem small(tb, std::min(c.radius, 4), c.tree_radius);
  const DeltaReport src = estimate_delta(build_complex(small, c.K), DeltaMethod::FourPoint);
  const auto q = quotients(c, tb, d);
  const QuotientStability st = compare_quotients(q->inner, q->outer, d);
  const QuotientDeltaReport r = quotient_triangle_thinness(q->outer, static_cast<std::size_t>(c.samples), c.seed);
  Json j{{"delta_source", to_json(src.delta)},
         {"source", to_json(src)},
         {"max_thinness_quotient", r.max_thinness},
         {"quotient", to_json(r)},
         {"stable", st.stable}};
  return {st.stable && Rational{r.max_thinness, 1} <= src.delta, j, {}};
}

Outcome wpd_cmd(const RunConfig& c) {
  const TreeBackend tb = backend(c);
  const SpinningFamily fam = make_family(tb, c.p);
  const Descent d(fam);
  const QuotientGroup qg(tb, c.p);
  const Word f = word(c.element, c);
  WpdOptions opt;
  opt.D = c.D;
  opt.M = c.M;
  opt.conjugator = word(c.conjugator, c);
  opt.series_length = c.series;
  opt.ball_radius = c.ball_radius;
  const WpdProbe outer = wpd_suite(d, qg, f, tb.base(), opt);
  opt.ball_radius = c.ball_radius - 1;
  const WpdProbe inner = wpd_suite(d, qg, f, tb.base(), opt);
  const bool stable = inner.K == outer.K && inner.K_quotient == outer.K_quotient;
  const Rational cw = num(c.c_wpd);
  long long first = -1;
  for (std::size_t n = 0; n < outer.series.size() && first < 0; ++n)
    if (cw < Rational{outer.series[n], 1}) first = static_cast<long long>(n) + 1;

  const BoundedProjectionReport bp = bounded_projection_constant(tb, f, tb.base(), 6);
  Json geo = Json::array();
  bool geo_ok = true;
  for (long long n = 1; n <= opt.translation_range; ++n) {
    const auto alpha = tb.intersection_path(tb.base(), tb.act(power(f, n), tb.base()));
    const auto g = verify_projected_geodesic(d, alpha, bp.B_f);
    geo_ok &= !g.applicable || g.geodesic;
    geo.push_back(to_json(g));
  }
  Json j{{"probe", to_json(outer)},
         {"smaller_ball", {{"ball_radius", inner.ball_radius}, {"K", inner.K}, {"K_quotient", inner.K_quotient}}},
         {"stable", stable},
         {"c_wpd", to_json(cw)},
         {"first_n_above_c_wpd", first},
         {"bounded_projections", to_json(bp)},
         {"projected_geodesics", geo}};
  const bool pass = outer.K_quotient <= outer.K && inner.K_quotient <= inner.K && stable &&
                    outer.translation_equal && bp.holds && geo_ok;
  return {pass, j, {}};
}

Outcome independence_cmd(const RunConfig& c) {
  const TreeBackend tb = backend(c);
  const SpinningFamily fam = make_family(tb, c.p);
  const Descent d(fam);
  const auto r = independence_suite(d, word(c.f1, c), word(c.f2, c), tb.base(), c.range);
  return {r.quotient_equal && r.shell_strictly_increasing, to_json(r), {}};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check-axioms", "build", "constants", "windmill",     "shorten",
                                              "lift",         "quotient", "delta", "wpd", "independence"};
  return names;
}

Outcome run_command(const std::string& name, const RunConfig& c) {
  if (name == "check-axioms") return check_axioms_cmd(c);
  if (name == "build") return build_cmd(c);
  if (name == "constants") return constants_cmd(c);
  if (name == "windmill") return windmill_cmd(c);
  if (name == "shorten") return shorten_cmd(c);
  if (name == "lift") return lift_cmd(c);
  if (name == "quotient") return quotient_cmd(c);
  if (name == "delta") return delta_cmd(c);
  if (name == "wpd") return wpd_cmd(c);
  if (name == "independence") return independence_cmd(c);
  throw Error(ErrorKind::Config, "unknown command " + name);
}

}  // namespace pcxcli
