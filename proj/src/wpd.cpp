#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "pcx/error.hpp"
#include "pcx/quotient.hpp"

namespace pcx {

long long max_projection(const TreeBackend& tb, const AxisVertex& x, const AxisVertex& z) {
  if (x == z) return 0;
  const std::vector<AxisVertex> path = tb.intersection_path(x, z);
  long long m = 0;
  for (std::size_t t = 1; t + 1 < path.size(); ++t) m = std::max(m, tb.distance(path[t], x, z));
  return m;
}

ProjectedGeodesicReport verify_projected_geodesic(const Descent& d, const std::vector<AxisVertex>& alpha, long long B,
                                                  const QuotientComplex* q, long long C_p, long long C_g,
                                                  long long theta, long long C_e) {
  if (alpha.empty()) throw Error(ErrorKind::Rejected, "empty path");
  const TreeBackend& tb = d.backend();
  ProjectedGeodesicReport r;
  r.length = static_cast<long long>(alpha.size()) - 1;
  for (std::size_t t = 0; t + 1 < alpha.size(); ++t)
    if (tb.intersection_distance(alpha[t], alpha[t + 1]) != 1) r.source_geodesic = false;
  if (tb.intersection_distance(alpha.front(), alpha.back()) != r.length) r.source_geodesic = false;
  if (!r.source_geodesic) throw Error(ErrorKind::Rejected, "path is not a geodesic of the source");

  r.max_projection = max_projection(tb, alpha.front(), alpha.back());
  r.applicable = r.max_projection <= B;
  const Constants c = constants_ladder(Rational{theta, 1}, Rational{C_e, 1}, Rational{C_p, 1}, Rational{C_g, 1},
                                       Rational{B, 1});
  r.length_condition = !(Rational{d.family().L, 1} < c.l_pro);
  r.quotient_distance = d.quotient_distance(alpha.front(), alpha.back());
  if (q) {
    const long a = q->class_index(d, alpha.front()), b = q->class_index(d, alpha.back());
    if (a >= 0 && b >= 0) r.window_distance = q->distance(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }
  r.geodesic = r.quotient_distance == r.length && (r.window_distance < 0 || r.window_distance == r.length);
  return r;
}

BoundedProjectionReport bounded_projection_constant(const TreeBackend& tb, const Word& f, const AxisVertex& x0,
                                                    long long exponent_range, long long C_p,
                                                    const std::vector<AxisVertex>* window) {
  const AxisVertex fx = tb.act(f, x0);
  if (fx == x0) throw Error(ErrorKind::Rejected, to_string(f) + " fixes " + to_string(x0.rep));
  BoundedProjectionReport r;
  r.f = reduce(f);
  r.x0 = x0;
  r.C_p = C_p;
  r.exponent_range = exponent_range;
  r.M1 = max_projection(tb, x0, fx);
  r.M2 = tb.distance(x0, tb.act(inverse(f), x0), fx);
  r.M = std::max(r.M1, r.M2);

  // N: past the last n at which some pair of vertices of alpha comes within 4.
  const std::vector<AxisVertex> alpha = tb.intersection_path(x0, fx);
  constexpr long long scan = 64;
  long long last_close = 0;
  for (long long n = 1; n <= scan; ++n) {
    const Word fn = power(f, n);
    bool close = false;
    for (const auto& x : alpha)
      for (const auto& y : alpha)
        if (!close && tb.intersection_distance(x, tb.act(fn, y)) <= 4) close = true;
    if (close) last_close = n;
  }
  if (last_close == scan)
    throw Error(ErrorKind::Rejected, to_string(f) + " is not hyperbolic on the intersection tree within the scan");
  r.N = last_close + 1;
  r.B_f = r.N * r.M + 2 * C_p;

  if (window) r.window_max = 0;
  for (long long n = -exponent_range; n <= exponent_range; ++n) {
    const AxisVertex y = tb.act(power(f, n), x0);
    const long long m = max_projection(tb, x0, y);
    r.per_exponent.push_back(m);
    r.empirical_max = std::max(r.empirical_max, m);
    if (window && y != x0)
      for (const auto& v : *window)
        if (v != x0 && v != y) r.window_max = std::max(r.window_max, tb.distance(v, x0, y));
  }
  r.holds = r.empirical_max <= r.B_f && r.window_max <= r.B_f;
  return r;
}

namespace {

std::vector<Word> group_ball(int k, int radius) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (int len = 1; len <= radius; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (int g = 1; g <= k; ++g)
        for (int l : {g, -g})
          if (out[i].empty() || out[i].back() != -l) {
            Word w = out[i];
            w.push_back(l);
            out.push_back(std::move(w));
          }
    begin = end;
  }
  return out;
}

}  // namespace

WpdProbe wpd_suite(const Descent& d, const QuotientGroup& qg, const Word& f, const AxisVertex& x0,
                   const WpdOptions& opt) {
  const TreeBackend& tb = d.backend();
  if (tb.act(f, x0) == x0) throw Error(ErrorKind::Rejected, to_string(f) + " fixes " + to_string(x0.rep));
  WpdProbe r;
  r.f = reduce(f);
  r.x0 = x0;
  r.D = opt.D;
  r.M = opt.M;
  r.ball_radius = opt.ball_radius;
  r.degenerate = opt.ball_radius <= 0;

  const AxisVertex y0 = tb.act(power(f, opt.M), x0);
  std::set<std::string> classes;
  for (const Word& g : group_ball(tb.rank(), std::max(opt.ball_radius, 0))) {
    const AxisVertex gx = tb.act(g, x0), gy = tb.act(g, y0);
    if (tb.intersection_distance(x0, gx) <= opt.D && tb.intersection_distance(y0, gy) <= opt.D)
      r.witnesses.push_back(g);
    if (d.quotient_distance(x0, gx) <= opt.D && d.quotient_distance(y0, gy) <= opt.D) classes.insert(qg.key(g));
  }
  std::sort(r.witnesses.begin(), r.witnesses.end(), shortlex_less);
  r.K = r.witnesses.size();
  r.K_quotient = classes.size();

  Word e = opt.conjugator;
  for (long long n = 1; n <= opt.series_length; ++n) {
    e = mul(e, tb.f());
    const AxisVertex fwd = tb.act(e, x0), back = tb.act(inverse(e), x0);
    if (fwd == x0 || back == x0)
      throw Error(ErrorKind::Rejected, "the series element " + to_string(e) + " fixes " + to_string(x0.rep));
    r.series.push_back(tb.distance(x0, back, fwd));
    if (r.series.size() > 1 && r.series.back() < r.series[r.series.size() - 2]) r.series_non_decreasing = false;
  }

  for (long long n = 1; n <= opt.translation_range; ++n) {
    const AxisVertex y = tb.act(power(f, n), x0);
    r.source_translation.push_back(tb.intersection_distance(x0, y));
    r.quotient_translation.push_back(d.quotient_distance(x0, y));
    if (r.source_translation.back() != r.quotient_translation.back()) r.translation_equal = false;
  }
  return r;
}

IndependenceReport independence_suite(const Descent& d, const Word& f1, const Word& f2, const AxisVertex& x0,
                                      long long range, long long C_p) {
  const TreeBackend& tb = d.backend();
  IndependenceReport r;
  r.f1 = reduce(f1);
  r.f2 = reduce(f2);
  r.x0 = x0;
  r.range = range;
  r.B0 = max_projection(tb, tb.act(f1, x0), tb.act(f2, x0));
  r.B_f1 = bounded_projection_constant(tb, f1, x0, 0, C_p).B_f;
  r.B_f2 = bounded_projection_constant(tb, f2, x0, 0, C_p).B_f;
  r.B = r.B0 + r.B_f1 + r.B_f2;

  const long long side = 2 * range + 1;
  std::vector<AxisVertex> o1, o2;
  for (long long n = -range; n <= range; ++n) {
    o1.push_back(tb.act(power(f1, n), x0));
    o2.push_back(tb.act(power(f2, n), x0));
  }
  r.shell_minimum.assign(static_cast<std::size_t>(range + 1), -1);
  for (long long i = 0; i < side; ++i)
    for (long long j = 0; j < side; ++j) {
      const auto& a = o1[static_cast<std::size_t>(i)];
      const auto& b = o2[static_cast<std::size_t>(j)];
      const long long s = tb.intersection_distance(a, b), q = d.quotient_distance(a, b);
      r.source.push_back(s);
      r.quotient.push_back(q);
      if (s != q) r.quotient_equal = false;
      if (i == j) r.diagonal_max = std::max(r.diagonal_max, s);
      long long& m = r.shell_minimum[static_cast<std::size_t>(std::max(std::llabs(i - range), std::llabs(j - range)))];
      if (m < 0 || s < m) m = s;
    }
  for (std::size_t t = 1; t < r.shell_minimum.size(); ++t)
    if (r.shell_minimum[t] <= r.shell_minimum[t - 1]) r.shell_strictly_increasing = false;
  return r;
}

}  // namespace pcx
