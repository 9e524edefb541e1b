#include "pcx/spinning.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <unordered_set>

#include "pcx/complex_graph.hpp"
#include "pcx/error.hpp"

namespace pcx {

SpinningFamily make_family(const TreeBackend& backend, long long p) {
  if (p < 1) throw Error(ErrorKind::Domain, "power p must be >= 1");
  SpinningFamily fam;
  fam.backend = &backend;
  fam.p = p;
  fam.L = p * translation_length(backend.f());
  fam.v0 = backend.base();
  return fam;
}

SpinningReport verify_spinning(const SpinningFamily& fam, const std::vector<AxisVertex>& window, long long L_target,
                               long long cap, std::size_t witness_cap) {
  const TreeBackend& tb = *fam.backend;
  SpinningReport rep;
  rep.L_target = L_target;
  rep.exponent_cap = static_cast<std::size_t>(cap);
  // After translating by rep_v^-1, v is the base axis and h = f^{pk}; f^{pk}
  // preserves the base axis and shifts every projection onto it by pk|f|.
  // Every 61st pair is recomputed from the projection of h·w itself.
  std::size_t pair = 0;
  for (std::size_t v = 0; v < window.size(); ++v) {
    const Word vinv = inverse(window[v].rep);
    for (std::size_t w = 0; w < window.size(); ++w) {
      if (v == w) continue;
      const Word u = mul(vinv, window[w].rep);
      const ProjInterval a = tb.project_interval(tb.base(), AxisVertex{u});
      const bool spot = pair++ % 61 == 0;
      for (long long k = -cap; k <= cap; ++k) {
        if (k == 0) continue;
        const long long s = k * fam.shift();
        const long long d = (a.hi - a.lo) + std::abs(s);
        if (spot) {
          const AxisVertex hw = tb.act(fam.rotation(window[v], k), window[w]);
          if (tb.distance(window[v], window[w], hw) != d)
            throw Error(ErrorKind::Rejected, "spinning shortcut disagrees with direct projection");
        }
        ++rep.checked;
        const SpinningWitness wit{v, w, k, d};
        if (rep.minimum < 0 || d < rep.minimum) {
          rep.minimum = d;
          rep.minimizer = wit;
        }
        if (d < L_target) {
          rep.pass = false;
          if (rep.witnesses.size() < witness_cap) rep.witnesses.push_back(wit);
        }
      }
    }
  }
  return rep;
}

Descent::Descent(const SpinningFamily& family) : family_(family) {
  if (!family_.backend->simple_base())
    throw Error(ErrorKind::Rejected, "rotation descent needs a base word using every generator exactly once");
}

long long Descent::reduce_offset(long long o) const {
  const long long P = family_.shift();
  long long r = ((o % P) + P) % P;  // [0, P)
  if (2 * r > P) r -= P;            // (-P/2, P/2]
  return r;
}

AxisChain Descent::chain(const AxisVertex& x) const {
  const TreeBackend& tb = backend();
  AxisChain c;
  c.axes.push_back(tb.base());
  if (x == tb.base()) return c;
  const Word foot = tb.foot_of_identity(x);
  Word cur;
  bool first = true;
  for (int l : foot) {
    const auto [axis, dir] = tb.axis_of_edge(cur, l);
    if (first) {
      if (axis != tb.base()) {
        c.offsets.push_back(0);
        c.axes.push_back(axis);
        c.offsets.push_back(0);
      } else {
        c.offsets.push_back(0);
      }
      first = false;
    } else if (axis != c.axes.back()) {
      c.axes.push_back(axis);
      c.offsets.push_back(0);
    }
    c.offsets.back() += dir;
    cur.push_back(l);
  }
  if (first) c.offsets.push_back(0);  // x passes through the identity vertex
  c.axes.push_back(x);
  return c;
}

const DescentResult& Descent::descend(const AxisVertex& x0) const {
  auto it = cache_.find(x0.rep);
  if (it != cache_.end()) return it->second;
  const TreeBackend& tb = backend();
  const long long P = family_.shift();
  DescentResult res;
  AxisVertex x = x0;
  AxisChain c = chain(x);
  std::vector<RotationLetter> applied;
  for (;;) {
    std::size_t j = 0;
    while (j < c.offsets.size() && reduced(c.offsets[j])) ++j;
    if (j == c.offsets.size()) break;
    const long long k = (reduce_offset(c.offsets[j]) - c.offsets[j]) / P;
    const AxisVertex u = c.axes[j];
    x = tb.act(family_.rotation(u, k), x);
    applied.push_back({u, k});
    c = chain(x);
  }
  res.canon = x;
  res.chain = c.axes;
  res.depth = static_cast<int>(c.depth());
  res.word.assign(applied.rbegin(), applied.rend());
  return cache_.emplace(x0.rep, std::move(res)).first->second;
}

int Descent::stage(const AxisVertex& x) const {
  const AxisChain c = chain(x);
  int s = 0;
  for (const auto& y : c.axes) s = std::max(s, depth(y));
  return s;
}

AxisVertex Descent::parent(const AxisVertex& c) const {
  const auto& r = descend(c);
  if (r.canon != c) throw Error(ErrorKind::Rejected, "parent() needs a canonical vertex");
  if (r.depth == 0) throw Error(ErrorKind::Domain, "the base vertex has no parent");
  return r.chain[r.chain.size() - 2];
}

long long Descent::quotient_distance(const AxisVertex& x, const AxisVertex& z) const {
  const auto& a = descend(x).chain;
  const auto& b = descend(z).chain;
  std::size_t common = 0;
  while (common < a.size() && common < b.size() && a[common] == b[common]) ++common;
  return static_cast<long long>(a.size() + b.size() - 2 * common);
}

OrbitSearch bounded_orbits(const Descent& d, const std::vector<AxisVertex>& window, long long cap, int depth) {
  const TreeBackend& tb = d.backend();
  std::unordered_map<Word, std::uint32_t, WordHash> index;
  for (std::size_t i = 0; i < window.size(); ++i) index.emplace(window[i].rep, static_cast<std::uint32_t>(i));
  std::vector<AxisVertex> gens;
  for (const auto& v : window)
    if (d.is_canonical(v)) gens.push_back(v);
  std::vector<std::vector<Word>> moves(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (long long k = -cap; k <= cap; ++k)
      if (k != 0) moves[g].push_back(d.family().rotation(gens[g], k));

  OrbitSearch out;
  constexpr std::uint32_t none = ~0u;
  out.class_of.assign(window.size(), none);
  for (std::size_t s = 0; s < window.size(); ++s) {
    if (out.class_of[s] != none) continue;
    const std::uint32_t cls = static_cast<std::uint32_t>(out.classes.size());
    out.classes.emplace_back();
    std::vector<std::pair<std::uint32_t, int>> frontier{{static_cast<std::uint32_t>(s), 0}};
    out.class_of[s] = cls;
    out.classes.back().push_back(static_cast<std::uint32_t>(s));
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const auto [u, dep] = frontier[head];
      if (dep == depth) continue;
      for (const auto& mv : moves)
        for (const Word& m : mv) {
          const AxisVertex t = tb.act(m, window[u]);
          auto it = index.find(t.rep);
          if (it == index.end() || out.class_of[it->second] != none) continue;
          out.class_of[it->second] = cls;
          out.classes.back().push_back(it->second);
          frontier.push_back({it->second, dep + 1});
        }
    }
  }
  return out;
}

WindmillData build_windmill(const Descent& d, const std::vector<AxisVertex>& window, const ComplexGraph& graph,
                            int max_stage) {
  if (graph.size() != window.size()) throw Error(ErrorKind::Rejected, "graph and window differ in size");
  WindmillData out;
  out.v0 = d.family().v0;
  out.p = d.family().p;
  out.max_stage = max_stage;
  long long r = 0;
  for (const auto& v : window) r = std::max(r, d.backend().distance_to_identity(v));
  out.window_radius = static_cast<int>(r);

  const std::size_t n = window.size();
  std::vector<int> stage(n), dep(n);
  for (std::size_t i = 0; i < n; ++i) {
    stage[i] = d.stage(window[i]);
    dep[i] = d.depth(window[i]);
  }
  std::vector<bool> inW_prev(n, false);
  for (int i = 0; i <= max_stage; ++i) {
    WindmillStage st;
    st.i = i;
    std::vector<bool> inW(n), inN(n, false);
    for (std::size_t x = 0; x < n; ++x) inW[x] = stage[x] <= i;
    if (i == 0) {
      for (std::size_t x = 0; x < n; ++x) inN[x] = inW[x];
    } else {
      for (std::size_t x = 0; x < n; ++x) {
        if (inW_prev[x]) inN[x] = true;
        for (std::uint32_t z : graph.adj[x])
          if (inW_prev[z]) inN[x] = true;
      }
    }
    std::unordered_set<Word, WordHash> Oset;
    for (std::size_t x = 0; x < n; ++x) {
      if (inW[x]) st.W.push_back(window[x]);
      if (inN[x]) st.N.push_back(window[x]);
      if (i > 0 && inN[x] && !inW_prev[x]) st.L.push_back(window[x]);
      if (dep[x] == i && d.is_canonical(window[x])) {
        st.O.push_back(window[x]);
        Oset.insert(window[x].rep);
      }
      if (i > 0 && inW_prev[x] && !inW[x]) st.contains_previous = false;
    }
    if (i == 0) st.O_one_per_orbit = st.O.size() == 1 && st.O[0] == out.v0;
    for (const auto& x : st.L) {
      // L_i lies at exact quotient depth i, inside W_i, and descends into O_i.
      if (d.depth(x) != i || d.stage(x) != i) st.L_matches = false;
      if (!Oset.count(d.canon(x).rep)) st.O_one_per_orbit = false;
    }
    for (const auto& o : st.O) {
      bool in_L = i == 0 || std::find(st.L.begin(), st.L.end(), o) != st.L.end();
      if (!in_L) st.O_one_per_orbit = false;
    }
    // Connectivity of W_i inside the window graph.
    if (!st.W.empty()) {
      std::vector<bool> seen(n, false);
      std::vector<std::uint32_t> q;
      for (std::size_t x = 0; x < n && q.empty(); ++x)
        if (inW[x]) {
          q.push_back(static_cast<std::uint32_t>(x));
          seen[x] = true;
        }
      for (std::size_t h = 0; h < q.size(); ++h)
        for (std::uint32_t z : graph.adj[q[h]])
          if (inW[z] && !seen[z]) {
            seen[z] = true;
            q.push_back(z);
          }
      st.W_connected = q.size() == st.W.size();
    }
    if (i > 0 && st.L.empty()) out.truncated = true;
    out.stages.push_back(std::move(st));
    inW_prev = inW;
  }
  return out;
}

}  // namespace pcx
