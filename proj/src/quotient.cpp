#include <algorithm>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "pcx/error.hpp"
#include "pcx/quotient.hpp"

namespace pcx {

namespace {

bool rep_less(const TreeBackend& tb, const AxisVertex& a, const AxisVertex& b) {
  const long long da = tb.distance_to_identity(a), db = tb.distance_to_identity(b);
  return da != db ? da < db : a < b;
}

// Window indices reachable from s by at most `depth` rotation letters (c, k),
// c canonical in the window and 1 <= |k| <= cap, without leaving the window.
std::vector<std::uint32_t> window_orbit(const Descent& d, const std::vector<AxisVertex>& window,
                                        const std::unordered_map<Word, std::uint32_t, WordHash>& index,
                                        std::uint32_t s, long long cap, int depth) {
  std::vector<Word> moves;
  for (const auto& c : window)
    if (d.is_canonical(c))
      for (long long k = -cap; k <= cap; ++k)
        if (k != 0) moves.push_back(d.family().rotation(c, k));
  std::unordered_set<std::uint32_t> seen{s};
  std::vector<std::pair<std::uint32_t, int>> frontier{{s, 0}};
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const auto [u, dep] = frontier[head];
    if (dep == depth) continue;
    for (const Word& mv : moves) {
      auto it = index.find(d.backend().act(mv, window[u]).rep);
      if (it != index.end() && seen.insert(it->second).second) frontier.push_back({it->second, dep + 1});
    }
  }
  std::vector<std::uint32_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::unordered_map<Word, std::uint32_t, WordHash> index_window(const std::vector<AxisVertex>& window) {
  std::unordered_map<Word, std::uint32_t, WordHash> index;
  for (std::size_t i = 0; i < window.size(); ++i) index.emplace(window[i].rep, static_cast<std::uint32_t>(i));
  return index;
}

}  // namespace

long QuotientComplex::class_index(const Descent& d, const AxisVertex& v) const {
  auto it = class_by_canon.find(d.canon(v).rep);
  return it == class_by_canon.end() ? -1 : static_cast<long>(it->second);
}

AxisVertex canonical_rep(const Descent& d, const AxisVertex& v, const std::vector<AxisVertex>& window, long long cap,
                         int depth, bool* stable) {
  const auto index = index_window(window);
  auto it = index.find(v.rep);
  if (it == index.end()) throw Error(ErrorKind::OutOfWindow, to_string(v.rep) + " is not a window vertex");
  auto best = [&](long long c, int dep) {
    AxisVertex r = v;
    for (std::uint32_t u : window_orbit(d, window, index, it->second, c, dep))
      if (rep_less(d.backend(), window[u], r)) r = window[u];
    return r;
  };
  AxisVertex r = best(cap, depth);
  if (stable) *stable = best(cap + 1, depth + 1) == r;
  return r;
}

QuotientComplex build_quotient(const ComplexGraph& graph, const Descent& d, const std::vector<AxisVertex>& window,
                               const QuotientOptions& opt) {
  if (graph.size() != window.size())
    throw Error(ErrorKind::Rejected, "graph and window have different sizes");
  const TreeBackend& tb = d.backend();
  QuotientComplex q;
  q.source = &graph;
  q.family = &d.family();
  q.window = window;
  q.class_of.resize(window.size());
  for (std::size_t i = 0; i < window.size(); ++i) {
    const AxisVertex& c = d.canon(window[i]);
    auto [it, fresh] = q.class_by_canon.emplace(c.rep, static_cast<std::uint32_t>(q.canon.size()));
    if (fresh) {
      q.canon.push_back(c);
      q.reps.push_back(window[i]);
      q.members.emplace_back();
    } else if (rep_less(tb, window[i], q.reps[it->second])) {
      q.reps[it->second] = window[i];
    }
    q.class_of[i] = it->second;
    q.members[it->second].push_back(static_cast<std::uint32_t>(i));
  }

  const std::size_t n = q.canon.size();
  q.adj.assign(n, {});
  for (std::size_t i = 0; i < window.size(); ++i)
    for (std::uint32_t j : graph.adj[i])
      if (q.class_of[i] != q.class_of[j]) q.adj[q.class_of[i]].push_back(q.class_of[j]);
  for (auto& row : q.adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    q.num_edges += row.size();
  }
  q.num_edges /= 2;
  q.dist = all_pairs_bfs(q.adj);

  // Generator moves: rotations about canonical window vertices of bounded depth.
  const auto index = index_window(window);
  std::vector<Word> moves;
  for (const auto& c : window)
    if (d.is_canonical(c) && (opt.move_depth < 0 || d.depth(c) <= opt.move_depth))
      for (long long k : {-1LL, 1LL}) moves.push_back(d.family().rotation(c, k));
  for (std::size_t i = 0; i < window.size() && q.well_defined; ++i)
    for (const Word& mv : moves) {
      auto it = index.find(tb.act(mv, window[i]).rep);
      if (it != index.end() && q.class_of[it->second] != q.class_of[i]) {
        q.well_defined = false;
        break;
      }
    }

  for (std::size_t i = 0; i < window.size() && q.lipschitz; ++i)
    for (std::size_t j = i + 1; j < window.size(); ++j) {
      const std::int32_t s = graph.distance(i, j);
      const std::int32_t t = q.distance(q.class_of[i], q.class_of[j]);
      if (s >= 0 && (t < 0 || t > s)) {
        q.lipschitz = false;
        break;
      }
    }

  std::vector<const std::vector<AxisVertex>*> chains(n);
  for (std::size_t a = 0; a < n; ++a) chains[a] = &d.descend(q.canon[a]).chain;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto& ca = *chains[a];
      const auto& cb = *chains[b];
      std::size_t common = 0;
      while (common < ca.size() && common < cb.size() && ca[common] == cb[common]) ++common;
      if (q.distance(a, b) != static_cast<std::int32_t>(ca.size() + cb.size() - 2 * common)) ++q.inexact_pairs;
    }
  q.exact = q.inexact_pairs == 0;

  if (opt.bfs_depth > 0) {
    q.bfs_checked = true;
    q.stable.assign(n, true);
    for (const OrbitSearch& o : {bounded_orbits(d, window, opt.bfs_cap, opt.bfs_depth),
                                 bounded_orbits(d, window, opt.bfs_cap + 1, opt.bfs_depth + 1)}) {
      for (const auto& cls : o.classes) {
        const std::uint32_t c = q.class_of[cls.front()];
        for (std::uint32_t v : cls)
          if (q.class_of[v] != c) q.bfs_sound = false;
      }
      for (std::size_t c = 0; c < n; ++c) {
        const std::uint32_t b = o.class_of[q.members[c].front()];
        if (o.classes[b].size() != q.members[c].size()) q.stable[c] = false;
      }
    }
    q.unstable = static_cast<std::size_t>(std::count(q.stable.begin(), q.stable.end(), false));
  }
  return q;
}

QuotientStability compare_quotients(const QuotientComplex& inner, const QuotientComplex& outer, const Descent& d) {
  QuotientStability s;
  s.inner_classes = inner.size();
  s.outer_classes = outer.size();
  std::vector<long> map(inner.size());
  for (std::size_t a = 0; a < inner.size(); ++a) {
    map[a] = outer.class_index(d, inner.canon[a]);
    if (map[a] < 0) s.stable = false;
  }
  for (std::size_t a = 0; a < inner.size(); ++a)
    for (std::size_t b = a + 1; b < inner.size(); ++b) {
      if (map[a] < 0 || map[b] < 0) continue;
      ++s.compared_pairs;
      if (inner.distance(a, b) != outer.distance(static_cast<std::size_t>(map[a]), static_cast<std::size_t>(map[b])))
        ++s.differing_pairs;
    }
  if (s.differing_pairs) s.stable = false;
  return s;
}

QuotientDeltaReport quotient_triangle_thinness(const QuotientComplex& q, std::size_t samples, std::uint64_t seed) {
  QuotientDeltaReport r;
  if (q.size() == 0) return r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(q.size() - 1));
  for (std::size_t s = 0; s < samples; ++s) {
    const std::uint32_t a = pick(rng), b = pick(rng), c = pick(rng);
    if (q.distance(a, b) < 0 || q.distance(b, c) < 0 || q.distance(a, c) < 0)
      throw Error(ErrorKind::NoPath, "quotient window graph is disconnected");
    const std::vector<std::vector<std::uint32_t>> sides{shortest_path(q.adj, q.dist, a, b),
                                                        shortest_path(q.adj, q.dist, b, c),
                                                        shortest_path(q.adj, q.dist, c, a)};
    const std::int32_t t = triangle_thinness(q.dist, q.size(), sides);
    ++r.samples;
    if (r.witness.empty() || t > r.max_thinness) {
      r.max_thinness = t;
      r.witness = {a, b, c};
    }
  }
  return r;
}

}  // namespace pcx
