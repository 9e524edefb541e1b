#include "pcx/tree_backend.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "pcx/error.hpp"

namespace pcx {

TreeBackend::TreeBackend(int k, Word f) : k_(k), f_(std::move(f)) {
  if (k_ < 1) throw Error(ErrorKind::Rejected, "rank must be >= 1");
  for (int l : f_)
    if (l == 0 || std::abs(l) > k_) throw Error(ErrorKind::Rejected, "base word uses a generator outside F_k");
  if (f_.empty()) throw Error(ErrorKind::Rejected, "base word must be nontrivial");
  if (!is_cyclically_reduced(f_))
    throw Error(ErrorKind::Rejected, "base word " + to_string(f_) + " is not cyclically reduced");
  if (is_proper_power(f_))
    throw Error(ErrorKind::ProperPower, "base word " + to_string(f_) + " is a proper power");
  finv_ = inverse(f_);
  std::vector<int> seen(static_cast<std::size_t>(k_) + 1, 0);
  for (int l : f_) ++seen[static_cast<std::size_t>(std::abs(l))];
  simple_ = std::all_of(seen.begin() + 1, seen.end(), [](int c) { return c == 1; });
}

long long TreeBackend::lcp_with_ray(const Word& w, int sign, std::size_t offset) const {
  const Word& per = sign > 0 ? f_ : finv_;
  const std::size_t n = per.size();
  std::size_t i = 0;
  while (i < w.size() && w[i] == per[(i + offset) % n]) ++i;
  return static_cast<long long>(i);
}

Word TreeBackend::axis_point(long long t) const {
  const Word& per = t >= 0 ? f_ : finv_;
  const std::size_t len = static_cast<std::size_t>(t >= 0 ? t : -t);
  Word out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = per[i % per.size()];
  return out;
}

Word TreeBackend::point_on(const AxisVertex& v, long long t) const { return mul(v.rep, axis_point(t)); }

AxisVertex TreeBackend::canonical(const Word& g0) const {
  const Word g = reduce(g0);
  const long long n = period();
  const long long K = 2 * static_cast<long long>(g.size()) / n + 1;
  Word best = g;
  Word fwd = g, bwd = g;
  for (long long k = 1; k <= K; ++k) {
    fwd = mul(fwd, f_);
    bwd = mul(bwd, finv_);
    if (shortlex_less(fwd, best)) best = fwd;
    if (shortlex_less(bwd, best)) best = bwd;
  }
  return AxisVertex{best};
}

AxisVertex TreeBackend::act(const Word& g, const AxisVertex& v) const { return canonical(mul(g, v.rep)); }

std::pair<long long, long long> TreeBackend::project_vertex_to_base(const Word& w) const {
  const long long lp = lcp_with_ray(w, +1);
  const long long lm = lcp_with_ray(w, -1);
  const long long t = lp > 0 ? lp : -lm;
  return {t, static_cast<long long>(w.size()) - std::max(lp, lm)};
}

bool TreeBackend::on_axis(const AxisVertex& v, const Word& w) const {
  return project_vertex_to_base(mul(inverse(v.rep), w)).second == 0;
}

long long TreeBackend::distance_to_identity(const AxisVertex& v) const {
  return project_vertex_to_base(inverse(v.rep)).second;
}

Word TreeBackend::foot_of_identity(const AxisVertex& v) const {
  return point_on(v, project_vertex_to_base(inverse(v.rep)).first);
}

long long TreeBackend::end_parameter(const Word& u, int sign) const {
  const long long n = period();
  long long m = static_cast<long long>(u.size()) / n + 4;
  const Word w = mul(u, power(f_, sign * m));
  const long long lp = lcp_with_ray(w, +1);
  const long long lm = lcp_with_ray(w, -1);
  if (lp == static_cast<long long>(w.size()) || lm == static_cast<long long>(w.size()))
    throw Error(ErrorKind::UndefinedProjection, "axis shares an end with the target axis");
  return lp > 0 ? lp : -lm;
}

ProjInterval TreeBackend::project_interval(const AxisVertex& y, const AxisVertex& x) const {
  if (x == y) throw Error(ErrorKind::UndefinedProjection, "projection of " + to_string(x.rep) + " to itself");
  const Word u = mul(inverse(y.rep), x.rep);
  const long long a = end_parameter(u, +1);
  const long long b = end_parameter(u, -1);
  return ProjInterval{std::min(a, b), std::max(a, b)};
}

TreeSegment TreeBackend::project_axis(const AxisVertex& y, const AxisVertex& x, long long R) const {
  const ProjInterval iv = project_interval(y, x);
  TreeSegment s{point_on(y, iv.lo), point_on(y, iv.hi), true};
  s.exact = static_cast<long long>(s.from.size()) < R && static_cast<long long>(s.to.size()) < R;
  if (!s.exact)
    throw Error(ErrorKind::NeedsLargerRadius, "projection of " + to_string(x.rep) + " onto " +
                                                  to_string(y.rep) + " leaves the radius-" +
                                                  std::to_string(R) + " truncation");
  return s;
}

long long TreeBackend::axis_distance(const AxisVertex& y, const AxisVertex& x, const AxisVertex& z,
                                     long long R) const {
  if (x == y || z == y) throw Error(ErrorKind::UndefinedProjection, "d_y requires x != y and z != y");
  (void)project_axis(y, x, R);
  (void)project_axis(y, z, R);
  const ProjInterval a = project_interval(y, x);
  const ProjInterval b = project_interval(y, z);
  return std::max(a.hi, b.hi) - std::min(a.lo, b.lo);
}

long long TreeBackend::auto_radius(std::initializer_list<const AxisVertex*> vs) const {
  long long m = 0;
  for (const AxisVertex* v : vs) m = std::max(m, distance_to_identity(*v));
  return 4 * m + 4 * period() + 4;
}

long long TreeBackend::distance(const AxisVertex& y, const AxisVertex& x, const AxisVertex& z) const {
  if (x == y || z == y) throw Error(ErrorKind::UndefinedProjection, "d_y requires x != y and z != y");
  const ProjInterval a = project_interval(y, x);
  const ProjInterval b = project_interval(y, z);
  return std::max(a.hi, b.hi) - std::min(a.lo, b.lo);
}

std::vector<AxisVertex> TreeBackend::window(int r) const {
  std::vector<Word> ball{Word{}};
  std::size_t layer_begin = 0;
  for (int len = 1; len <= r; ++len) {
    const std::size_t layer_end = ball.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (int g = 1; g <= k_; ++g) {
        for (int l : {g, -g}) {
          const Word& w = ball[i];
          if (!w.empty() && w.back() == -l) continue;
          Word nw = w;
          nw.push_back(l);
          ball.push_back(std::move(nw));
        }
      }
    }
    layer_begin = layer_end;
  }
  std::unordered_set<Word, WordHash> seen;
  std::vector<AxisVertex> out;
  for (const Word& w : ball) {
    for (long long t = 0; t < period(); ++t) {
      AxisVertex v = canonical(mul(w, inverse(axis_point(t))));
      if (seen.insert(v.rep).second) out.push_back(std::move(v));
    }
  }
  std::vector<std::pair<long long, AxisVertex>> keyed;
  keyed.reserve(out.size());
  for (auto& v : out) keyed.emplace_back(distance_to_identity(v), std::move(v));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  out.clear();
  for (auto& kv : keyed)
    if (kv.first <= r) out.push_back(std::move(kv.second));
  return out;
}

std::pair<AxisVertex, int> TreeBackend::axis_of_edge(const Word& w, int letter) const {
  if (!simple_) throw Error(ErrorKind::Rejected, "axis_of_edge needs every generator exactly once in f");
  for (std::size_t j = 0; j < f_.size(); ++j) {
    if (f_[j] == letter) return {canonical(mul(w, inverse(axis_point(static_cast<long long>(j))))), +1};
    if (f_[j] == -letter)
      return {canonical(mul(w, inverse(axis_point(static_cast<long long>(j) + 1)))), -1};
  }
  throw Error(ErrorKind::Rejected, "letter not in base word");
}

std::vector<AxisVertex> TreeBackend::axes_meeting(const AxisVertex& v, long long t0, long long t1) const {
  std::vector<AxisVertex> out;
  std::unordered_set<Word, WordHash> seen;
  for (long long t = t0; t <= t1; ++t) {
    const Word q = point_on(v, t);
    for (long long s = 0; s < period(); ++s) {
      AxisVertex u = canonical(mul(q, inverse(axis_point(s))));
      if (u != v && seen.insert(u.rep).second) out.push_back(std::move(u));
    }
  }
  return out;
}

std::vector<AxisVertex> TreeBackend::intersection_path(const AxisVertex& x, const AxisVertex& z) const {
  if (x == z) return {x};
  if (!simple_) throw Error(ErrorKind::Rejected, "intersection_path needs every generator exactly once in f");
  const Word u = mul(inverse(x.rep), z.rep);  // z translated so that x becomes the base axis
  const ProjInterval iv = project_interval(base(), AxisVertex{u});
  const Word p = axis_point(iv.lo);
  const auto pr = project_vertex_to_base(mul(inverse(u), p));
  std::vector<AxisVertex> out{x};
  if (pr.second != 0) {
    // Each maximal run of bridge edges on one axis contributes that axis.
    const Word q = mul(u, axis_point(pr.first));
    Word cur = mul(x.rep, p);
    for (int l : mul(inverse(p), q)) {
      AxisVertex a = axis_of_edge(cur, l).first;
      if (a != out.back()) out.push_back(std::move(a));
      cur = mul(cur, Word{l});
    }
  }
  out.push_back(z);
  return out;
}

long long TreeBackend::intersection_distance(const AxisVertex& x, const AxisVertex& z) const {
  return static_cast<long long>(intersection_path(x, z).size()) - 1;
}

Word TreeBackend::rotation(const AxisVertex& v, long long p, long long k) const {
  return mul(v.rep, power(f_, p * k), inverse(v.rep));
}

}  // namespace pcx
