// Acceptance run on the default instance: F_2, f = ab, p = 5 (p = 90 where the
// projected-geodesic length hypothesis is wanted), window radius 6. One line
// per criterion; the exit status is the number of failing criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>

#include "cli_run.hpp"
#include "pcx/error.hpp"
#include "pcx/pivot.hpp"
#include "pcx/quotient.hpp"
#include "pcx/quotient_group.hpp"
#include "pcx/report.hpp"
#include "pcx/suites.hpp"
#include "pcx/tree_system.hpp"

using namespace pcx;

namespace {

constexpr int kRadius = 6;
constexpr long long kP = 5;

struct Verdict {
  bool pass = false;
  std::string detail;
};

const TreeBackend& ab() {
  static const TreeBackend tb(2, parse_word("ab"));
  return tb;
}

struct Instance {
  SpinningFamily fam;
  Descent d;
  std::vector<AxisVertex> pool;
  explicit Instance(long long p) : fam(make_family(ab(), p)), d(fam), pool(canonical_pool(d, ab().window(4), 2)) {}
};

Instance& p5() {
  static Instance s(kP);
  return s;
}

// Radius 5 and 6 quotients of P_0 at p = 5, shared by criteria 9 and 10.
struct Quotients {
  TreeSystem inner_sys{ab(), kRadius - 1}, outer_sys{ab(), kRadius};
  ComplexGraph inner_g = build_complex(inner_sys, 0), outer_g = build_complex(outer_sys, 0);
  QuotientComplex inner, outer;
  QuotientStability stability;
  Quotients() {
    QuotientOptions opt;
    opt.move_depth = 2;
    inner = build_quotient(inner_g, p5().d, inner_sys.vertices(), opt);
    outer = build_quotient(outer_g, p5().d, outer_sys.vertices(), opt);
    stability = compare_quotients(inner, outer, p5().d);
  }
};

Quotients& quotients() {
  static Quotients q;
  return q;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// --- 1 -------------------------------------------------------------------

using Key = std::tuple<int, int, int>;

AxiomReport small_table(const std::map<Key, int>& edits) {
  std::map<Key, int> ov{{{2, 0, 1}, 2}, {{2, 1, 0}, 2}};
  for (const auto& [k, v] : edits) ov[k] = v;
  std::ostringstream text;
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 8; ++x)
      for (int z = 0; z < 8; ++z) {
        if (x == y || z == y) continue;
        auto it = ov.find({y, x, z});
        text << 'v' << y << " v" << x << " v" << z << ' ' << (it == ov.end() ? 1 : it->second) << '\n';
      }
  std::istringstream in(text.str());
  AxiomOptions opt;
  opt.inner = 6;
  return check_axioms(TableSystem::parse(in, Rational{1, 1}), opt);
}

Verdict axioms() {
  const TreeSystem sys(ab(), kRadius);
  AxiomOptions opt;
  opt.triangle_prefix = ab().window(kRadius - 1).size();
  opt.inner = ab().window(kRadius - 2).size();
  const AxiomReport tree = check_axioms(sys, opt);
  bool ok = tree.all_pass() && tree.finiteness_tested;

  const AxiomReport base = small_table({});
  ok &= base.all_pass();
  struct Mutation {
    std::map<Key, int> edits;
    int flag;  // 0 symmetry, 1 triangle, 2 triples, 3 finiteness
  };
  const std::vector<Mutation> mutations = {{{{{3, 4, 5}, 2}}, 0},
                                           {{{{3, 4, 5}, 3}, {{3, 5, 4}, 3}}, 1},
                                           {{{{1, 0, 2}, 2}, {{1, 2, 0}, 2}}, 2},
                                           {{{{7, 0, 1}, 2}, {{7, 1, 0}, 2}}, 3}};
  int flipped = 0;
  for (const auto& m : mutations) {
    const AxiomReport r = small_table(m.edits);
    const bool flags[4] = {r.symmetry, r.triangle, r.triples, r.finiteness};
    bool only = true;
    for (int i = 0; i < 4; ++i) only &= flags[i] == (i != m.flag);
    flipped += only;
  }
  ok &= flipped == 4;
  return {ok, fmt("tree window %zu axes, all four axioms %s; %d/4 mutations flip exactly their flag",
                  sys.size(), tree.all_pass() ? "hold" : "FAIL", flipped)};
}

// --- 2 -------------------------------------------------------------------

Verdict ladder() {
  const Constants k = constants_ladder({2, 1}, {1, 1}, {3, 1}, {2, 1}, {0, 1});
  const bool ok = k.m == Rational{38, 1} && k.l0 == Rational{161, 1} && k.l_short == Rational{190, 1} &&
                  k.l_hyp == Rational{190, 1};
  return {ok, "m = " + k.m.str() + ", L0 = " + k.l0.str() + ", L_short = " + k.l_short.str() +
                  ", L_hyp = " + k.l_hyp.str()};
}

// --- 3 -------------------------------------------------------------------

Verdict spinning() {
  const auto win = ab().window(kRadius);
  const auto& fam = p5().fam;
  const SpinningReport at = verify_spinning(fam, win, 2 * kP, 3);
  const SpinningReport over = verify_spinning(fam, win, 2 * kP + 1, 3);
  const bool ok = at.pass && at.minimum == 2 * kP && !over.pass && !over.witnesses.empty() &&
                  over.witnesses.front().value == 2 * kP;
  return {ok, fmt("%zu checks, minimum %lld; L = %lld passes, L = %lld fails with witness value %lld", at.checked,
                  at.minimum, 2 * kP, 2 * kP + 1, over.witnesses.empty() ? -1LL : over.witnesses.front().value)};
}

// --- 4 -------------------------------------------------------------------

Verdict free_product() {
  std::vector<AxisVertex> canon;
  for (const auto& x : ab().window(kRadius))
    if (p5().d.is_canonical(x)) canon.push_back(x);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> pick(0, canon.size() - 1);
  std::uniform_int_distribution<long long> ex(1, 3);
  int failures = 0, words = 0;
  for (; words < 200; ++words) {
    RotationWord w;
    const int len = 1 + static_cast<int>(rng() % 8);
    while (static_cast<int>(w.size()) < len) {
      const auto& v = canon[pick(rng)];
      if (!w.empty() && w.letters.back().v == v) continue;
      w.letters.push_back({v, (rng() & 1) ? ex(rng) : -ex(rng)});
    }
    if (!is_normal_form(p5().d, w) || reduce(shadow(p5().fam, w)).empty()) ++failures;
  }
  return {failures == 0, fmt("%d normal-form words over %zu canonical axes, %d trivial shadows", words,
                             canon.size(), failures)};
}

// --- 5-8 -----------------------------------------------------------------

Verdict pivots() {
  const auto r = pivot_facts_suite(p5().d, p5().pool, 100, 5);
  return {r.pass() && r.samples == 100,
          fmt("%zu elements, %zu pivots, %zu consecutive pairs, %zu failures", r.samples, r.pivots, r.pairs,
              r.failures)};
}

Verdict essential_laws() {
  const auto r = essential_laws_suite(p5().d, p5().pool, 100, 6);
  return {r.pass() && r.conjugation_literal >= 100 && r.power_samples >= 100,
          fmt("conjugation %zu compared (%zu failures), power %zu compared (%zu failures)", r.conjugation_literal,
              r.conjugation_failures, r.power_samples, r.power_failures)};
}

Verdict shortening() {
  const auto r = shorten_suite(p5().d, p5().pool, ab().window(3), 100, 7);
  return {r.pass() && r.samples == 100,
          fmt("%zu pairs, %zu steps (max %zu); postcondition %zu, complexity %zu, bound %zu failures", r.samples,
              r.steps, r.max_steps, r.postcondition_failures, r.complexity_failures, r.bound_failures)};
}

Verdict lifting() {
  const auto r = lift_suite(p5().d, p5().pool, 50, 25, 25, 8);
  return {r.pass() && r.triangles == 50 && r.quadrilaterals == 25,
          fmt("%zu triangles, %zu quadrilaterals, %zu constrained, %zu bends; %zu failures, %zu non-translates",
              r.triangles, r.quadrilaterals, r.constrained, r.bends, r.failures, r.translate_failures)};
}

// --- 9 -------------------------------------------------------------------

Verdict delta_persistence() {
  // Exact four-point constant on the largest window the exact method accepts.
  const TreeSystem src(ab(), 4);
  const DeltaReport d0 = estimate_delta(build_complex(src, 0), DeltaMethod::FourPoint);
  auto& q = quotients();
  const QuotientDeltaReport r = quotient_triangle_thinness(q.outer, 200, 9);
  const bool ok = r.samples == 200 && Rational{r.max_thinness, 1} <= d0.delta && q.stability.stable;
  return {ok, fmt("delta0 = %s (four-point, %zu axes); %zu quotient triangles over %zu classes, max defect %d",
                  d0.delta.str().c_str(), src.size(), r.samples, q.outer.size(), r.max_thinness)};
}

// --- 10 ------------------------------------------------------------------

Verdict projected_geodesics() {
  const Word f = parse_word("aab");
  const AxisVertex x0 = ab().base();
  const auto bp = bounded_projection_constant(ab(), f, x0, 6);
  auto& q = quotients();
  Instance p90(90);
  int checked = 0, in_window = 0, bad = 0, hypothesis = 0;
  for (long long n = -8; n <= 8; ++n) {
    if (n == 0) continue;
    const auto alpha = ab().intersection_path(x0, ab().act(power(f, n), x0));
    for (const auto* inst : {&p5(), &p90}) {
      const auto r = verify_projected_geodesic(inst->d, alpha, bp.B_f, inst == &p5() ? &q.outer : nullptr);
      ++checked;
      hypothesis += r.length_condition;
      if (!r.applicable || !r.source_geodesic || !r.geodesic || r.length != (n < 0 ? -n : n)) ++bad;
      if (r.window_distance >= 0) {
        ++in_window;
        if (r.window_distance != r.length) ++bad;
      }
    }
  }
  return {bad == 0 && in_window > 0 && hypothesis > 0,
          fmt("B_f = %lld; %d orbit geodesics (p = 5 and p = 90), %d with the length hypothesis, %d compared in "
              "the radius-6 class graph, %d mismatches",
              bp.B_f, checked, hypothesis, in_window, bad)};
}

// --- 11 ------------------------------------------------------------------

Verdict bounded_projections() {
  const auto win = ab().window(kRadius);
  bool ok = true;
  std::string detail;
  for (const char* f : {"aab", "baa"}) {
    const auto r = bounded_projection_constant(ab(), parse_word(f), ab().base(), 6, 0, &win);
    ok &= r.holds && r.empirical_max <= r.B_f && r.B_f == r.N * r.M + 2 * r.C_p;
    detail += fmt("%s%s: N = %lld, M = %lld, B_f = %lld, max = %lld", detail.empty() ? "" : "; ", f, r.N, r.M,
                  r.B_f, r.empirical_max);
  }
  return {ok, detail + " over |n| <= 6"};
}

// --- 12 ------------------------------------------------------------------

Verdict wpd() {
  const QuotientGroup qg(ab(), kP);
  WpdOptions opt;
  opt.conjugator = parse_word("a");
  int probes = 0, fails = 0;
  for (const char* f : {"aab", "abb", "BBA", "BAA"})
    for (long long M = 1; M <= 5; ++M) {
      opt.M = M;
      opt.ball_radius = 5;
      const auto a = wpd_suite(p5().d, qg, parse_word(f), ab().base(), opt);
      opt.ball_radius = 6;
      const auto b = wpd_suite(p5().d, qg, parse_word(f), ab().base(), opt);
      ++probes;
      if (!(a.K_quotient <= a.K && b.K_quotient <= b.K && a.K == b.K && a.K_quotient == b.K_quotient &&
            b.translation_equal))
        ++fails;
    }
  return {fails == 0 && probes == 20,
          fmt("%d probes (D = 1, M = 1..5): K' <= K, K and K' equal at ball radii 5 and 6, translation lengths "
              "equal; %d failures",
              probes, fails)};
}

// --- 13 ------------------------------------------------------------------

Verdict determinism() {
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"check-axioms", "--radius 4"},
      {"build", "--radius 4 --dot"},
      {"constants", "--theta 2 --ce 1 --cg 2 --cp 3"},
      {"windmill", "--radius 5"},
      {"shorten", "--samples 50 --seed 3"},
      {"lift", "--samples 20 --seed 3"},
      {"quotient", "--radius 5 --dot"},
      {"delta", "--radius 5 --samples 200 --seed 3"},
      {"wpd", ""},
      {"independence", ""}};
  const auto dir = clirun::scratch("determinism");
  int identical = 0;
  std::string mismatched;
  for (const auto& [cmd, args] : runs) {
    const auto first = clirun::run(cmd, args, dir);
    const auto second = clirun::run(cmd, args, dir);
    if (first.status == 0 && !first.report.empty() && first.report == second.report && first.dot == second.dot)
      ++identical;
    else
      mismatched += " " + cmd;
  }
  std::filesystem::remove_all(dir);
  return {identical == static_cast<int>(runs.size()),
          fmt("%d/%zu commands rerun with byte-identical reports%s", identical, runs.size(),
              mismatched.empty() ? "" : (", differing:" + mismatched).c_str())};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"axioms", axioms},
      {"constant ladder", ladder},
      {"spinning", spinning},
      {"free product certificate", free_product},
      {"pivot facts", pivots},
      {"essential-pivot laws", essential_laws},
      {"shortening", shortening},
      {"lifting", lifting},
      {"delta persistence", delta_persistence},
      {"projected geodesics", projected_geodesics},
      {"bounded projections", bounded_projections},
      {"wpd persistence surrogate", wpd},
      {"determinism", determinism}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !v.pass;
    std::printf("%s %2zu %-26s %6.1fs  %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
