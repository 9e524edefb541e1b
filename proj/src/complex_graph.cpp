#include "pcx/complex_graph.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <sstream>

#include "pcx/error.hpp"

namespace pcx {

std::vector<std::int32_t> all_pairs_bfs(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<std::int32_t> dist(n * n, -1);
  std::vector<std::uint32_t> queue(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::int32_t* d = &dist[s * n];
    std::size_t head = 0, tail = 0;
    d[s] = 0;
    queue[tail++] = static_cast<std::uint32_t>(s);
    while (head < tail) {
      const std::uint32_t u = queue[head++];
      for (std::uint32_t v : adj[u])
        if (d[v] < 0) {
          d[v] = d[u] + 1;
          queue[tail++] = v;
        }
    }
  }
  return dist;
}

std::vector<std::uint32_t> shortest_path(const Adjacency& adj, const std::vector<std::int32_t>& dist,
                                         std::uint32_t x, std::uint32_t z) {
  const std::size_t n = adj.size();
  if (x >= n || z >= n) throw Error(ErrorKind::OutOfWindow, "vertex index outside graph");
  const std::int32_t* dx = &dist[x * n];
  if (dx[z] < 0) throw Error(ErrorKind::NoPath, "vertices lie in different components");
  std::vector<std::uint32_t> path{z};
  std::uint32_t cur = z;
  while (cur != x) {
    for (std::uint32_t u : adj[cur])
      if (dx[u] == dx[cur] - 1) {
        cur = u;
        break;
      }
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::int32_t triangle_thinness(const std::vector<std::int32_t>& dist, std::size_t n,
                               const std::vector<std::vector<std::uint32_t>>& sides) {
  std::int32_t worst = 0;
  for (std::size_t s = 0; s < sides.size(); ++s)
    for (std::uint32_t p : sides[s]) {
      std::int32_t best = std::numeric_limits<std::int32_t>::max();
      for (std::size_t t = 0; t < sides.size(); ++t) {
        if (t == s) continue;
        for (std::uint32_t q : sides[t]) best = std::min(best, dist[p * n + q]);
      }
      if (best != std::numeric_limits<std::int32_t>::max()) worst = std::max(worst, best);
    }
  return worst;
}

bool ComplexGraph::adjacent(std::size_t x, std::size_t z) const {
  return std::binary_search(adj[x].begin(), adj[x].end(), static_cast<std::uint32_t>(z));
}

ComplexGraph build_complex(const ProjectionSystem& sys, long long K) {
  if (K < 0) throw Error(ErrorKind::Domain, "K must be non-negative");
  const std::size_t n = sys.size();
  if (n < 1) throw Error(ErrorKind::DegenerateWindow, "empty window");
  const long long limit = K * sys.scale();
  std::vector<std::uint8_t> bad(n * n, 0);
  std::vector<std::int32_t> row(n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      if (x == y) continue;
      sys.fill_row(y, x, row.data());
      std::uint8_t* b = &bad[x * n];
      for (std::size_t z = x + 1; z < n; ++z) b[z] |= static_cast<std::uint8_t>(row[z] > limit);
    }
  ComplexGraph g;
  g.K = K;
  g.adj.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) g.labels.push_back(sys.label(i));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = x + 1; z < n; ++z)
      if (!bad[x * n + z]) {
        g.adj[x].push_back(static_cast<std::uint32_t>(z));
        g.adj[z].push_back(static_cast<std::uint32_t>(x));
        ++g.num_edges;
      }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  g.dist = all_pairs_bfs(g.adj);
  g.component.assign(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    for (std::size_t v = 0; v < n; ++v)
      if (g.dist[s * n + v] >= 0) {
        seen[v] = true;
        g.component[v] = static_cast<std::uint32_t>(g.num_components);
      }
    ++g.num_components;
  }
  return g;
}

std::vector<std::uint32_t> geodesic(const ComplexGraph& g, std::uint32_t x, std::uint32_t z) {
  return shortest_path(g.adj, g.dist, x, z);
}

ImageConstants measure_image_constants(const ComplexGraph& g, const ProjectionSystem& sys) {
  const std::size_t n = g.size();
  // Euler-tour intervals of the chosen-geodesic trees: y lies on geodesic(x, z)
  // iff y is an ancestor of z in the tree rooted at x.
  std::vector<std::int32_t> tin(n * n, -1), tout(n * n, -1);
  {
    std::vector<std::vector<std::uint32_t>> children(n);
    std::vector<std::pair<std::uint32_t, std::size_t>> stack;
    for (std::size_t x = 0; x < n; ++x) {
      const std::int32_t* dx = &g.dist[x * n];
      for (auto& c : children) c.clear();
      for (std::size_t v = 0; v < n; ++v) {
        if (v == x || dx[v] < 0) continue;
        for (std::uint32_t u : g.adj[v])
          if (dx[u] == dx[v] - 1) {
            children[u].push_back(static_cast<std::uint32_t>(v));
            break;
          }
      }
      std::int32_t clock = 0;
      stack.assign(1, {static_cast<std::uint32_t>(x), 0});
      tin[x * n + x] = clock++;
      while (!stack.empty()) {
        auto& [u, i] = stack.back();
        if (i < children[u].size()) {
          const std::uint32_t c = children[u][i++];
          tin[x * n + c] = clock++;
          stack.push_back({c, 0});
        } else {
          tout[x * n + u] = clock++;
          stack.pop_back();
        }
      }
    }
  }

  ImageConstants out;
  std::int32_t ce = 0, cp = 0, cg = 0, mx = 0;
  std::vector<std::int32_t> row(n);
  std::vector<std::int32_t> comp(n);
  std::vector<std::uint32_t> queue(n);
  for (std::size_t y = 0; y < n; ++y) {
    // Components of the graph with the closed 2-ball of y removed.
    const std::int32_t* dy = &g.dist[y * n];
    for (std::size_t v = 0; v < n; ++v) comp[v] = (dy[v] >= 0 && dy[v] <= 2) ? -2 : -1;
    std::int32_t ncomp = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (comp[s] != -1) continue;
      std::size_t head = 0, tail = 0;
      queue[tail++] = static_cast<std::uint32_t>(s);
      comp[s] = ncomp;
      while (head < tail) {
        const std::uint32_t u = queue[head++];
        for (std::uint32_t v : g.adj[u])
          if (comp[v] == -1) {
            comp[v] = ncomp;
            queue[tail++] = v;
          }
      }
      ++ncomp;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (x == y) continue;
      sys.fill_row(y, x, row.data());
      for (std::size_t z = 0; z < n; ++z)
        if (z != y && row[z] > mx) mx = row[z];
      for (std::uint32_t z : g.adj[x])
        if (z != y && row[z] > ce) {
          ce = row[z];
          out.c_e_witness = {y, x, z};
        }
      if (comp[x] >= 0)
        for (std::size_t z = 0; z < n; ++z)
          if (comp[z] == comp[x] && row[z] > cp) {
            cp = row[z];
            out.c_p_witness = {y, x, z};
          }
      const std::int32_t* tx = &tin[x * n];
      const std::int32_t* ox = &tout[x * n];
      const std::int32_t ty = tx[y], oy = ox[y];
      for (std::size_t z = 0; z < n; ++z) {
        if (z == y || tx[z] < 0) continue;
        const bool on_path = ty >= 0 && ty <= tx[z] && ox[z] <= oy;
        if (!on_path && row[z] > cg) {
          cg = row[z];
          out.c_g_witness = {y, x, z};
        }
      }
    }
  }
  const long long s = sys.scale();
  out.c_e = Rational{ce, s}.normalized();
  out.c_p = Rational{cp, s}.normalized();
  out.c_g = Rational{cg, s}.normalized();
  out.max_projection = Rational{mx, s}.normalized();
  out.c_e_within_bound = ce <= g.K * s + 2 * sys.scaled_theta();
  out.ordered = cg <= cp && cp <= mx;
  return out;
}

DeltaReport four_point_delta(const std::vector<std::int32_t>& dist, std::size_t n, std::size_t cap) {
  if (n > cap)
    throw Error(ErrorKind::SizeCap,
                "four-point scan over " + std::to_string(n) + " vertices exceeds the cap " + std::to_string(cap));
  DeltaReport rep;
  rep.method = DeltaMethod::FourPoint;
  std::int32_t best = 0;
  auto d = [&](std::size_t a, std::size_t b) { return dist[a * n + b]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d(i, j) < 0) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (d(i, k) < 0 || d(j, k) < 0) continue;
        for (std::size_t l = k + 1; l < n; ++l) {
          if (d(i, l) < 0) continue;
          std::int32_t s1 = d(i, j) + d(k, l), s2 = d(i, k) + d(j, l), s3 = d(i, l) + d(j, k);
          if (s1 < s2) std::swap(s1, s2);
          if (s2 < s3) std::swap(s2, s3);
          if (s1 < s2) std::swap(s1, s2);
          ++rep.samples;
          if (s1 - s2 > best) {
            best = s1 - s2;
            rep.witness = {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                           static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(l)};
          }
        }
      }
    }
  rep.delta = Rational{best, 2}.normalized();
  return rep;
}

DeltaReport estimate_delta(const ComplexGraph& g, DeltaMethod method, const DeltaOptions& opt) {
  if (g.num_components != 1) throw Error(ErrorKind::NoPath, "delta needs a connected graph");
  if (method == DeltaMethod::FourPoint) return four_point_delta(g.dist, g.size(), opt.cap);
  DeltaReport rep;
  rep.method = DeltaMethod::ThinTriangle;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(g.size() - 1));
  std::int32_t best = 0;
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const std::uint32_t a = pick(rng), b = pick(rng), c = pick(rng);
    const std::int32_t t =
        triangle_thinness(g.dist, g.size(), {geodesic(g, a, b), geodesic(g, b, c), geodesic(g, c, a)});
    ++rep.samples;
    if (t > best || rep.witness.empty()) {
      best = std::max(best, t);
      rep.witness = {a, b, c};
    }
  }
  rep.delta = Rational{best, 1};
  return rep;
}

std::string to_dot(const ComplexGraph& g) {
  std::ostringstream out;
  out << "graph P_" << g.K << " {\n";
  for (const auto& l : g.labels) out << "  \"" << l << "\";\n";
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::uint32_t z : g.adj[x])
      if (z > x) out << "  \"" << g.labels[x] << "\" -- \"" << g.labels[z] << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pcx
