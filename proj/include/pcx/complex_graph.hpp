#pragma once
// The finite-window graph P_K, its geodesics, the measured image constants,
// the constant ladder and hyperbolicity estimates.
#include <cstdint>
#include <string>
#include <vector>

#include "pcx/projection_system.hpp"

namespace pcx {

using Adjacency = std::vector<std::vector<std::uint32_t>>;  // sorted neighbour lists

// All-pairs BFS distances, row-major; -1 marks unreachable pairs.
std::vector<std::int32_t> all_pairs_bfs(const Adjacency& adj);

// Shortest path from x to z choosing, walking back from z, the smallest-index
// neighbour one step closer to x. Throws Error(NoPath) for disconnected pairs.
std::vector<std::uint32_t> shortest_path(const Adjacency& adj, const std::vector<std::int32_t>& dist,
                                         std::uint32_t x, std::uint32_t z);

// Max over vertices p of one side of the distance from p to the union of the
// other two sides.
std::int32_t triangle_thinness(const std::vector<std::int32_t>& dist, std::size_t n,
                               const std::vector<std::vector<std::uint32_t>>& sides);

struct ComplexGraph {
  std::vector<std::string> labels;
  long long K = 0;
  Adjacency adj;
  std::vector<std::int32_t> dist;
  std::vector<std::uint32_t> component;  // component id per vertex, ids in order of first vertex
  std::size_t num_components = 0;
  std::size_t num_edges = 0;

  std::size_t size() const { return adj.size(); }
  std::int32_t distance(std::size_t x, std::size_t z) const { return dist[x * adj.size() + z]; }
  bool adjacent(std::size_t x, std::size_t z) const;
};

// Edge {x, z} iff d_y(x, z) <= K for every window vertex y outside {x, z}.
ComplexGraph build_complex(const ProjectionSystem& system, long long K);

std::vector<std::uint32_t> geodesic(const ComplexGraph& g, std::uint32_t x, std::uint32_t z);

struct ImageConstants {
  Rational c_e, c_p, c_g;
  Rational max_projection;  // max d_y(x, z) over all admissible window triples
  bool c_e_within_bound = true;  // C_e <= K + 2 theta
  bool ordered = true;           // C_g <= C_p <= max_projection
  std::vector<std::size_t> c_e_witness, c_p_witness, c_g_witness;  // (y, x, z), empty when the constant is 0
};

// Exhaustive over the window: C_e over edges; C_p over pairs joined by a path
// outside the closed 2-ball of y; C_g over pairs whose chosen geodesic misses y.
ImageConstants measure_image_constants(const ComplexGraph& g, const ProjectionSystem& system);

Rational operator+(const Rational& a, const Rational& b);
Rational operator*(long long c, const Rational& a);
Rational max(const Rational& a, const Rational& b);

struct Constants {
  Rational theta, c_e, c_p, c_g, B;
  Rational m, l0, l_short, l_lift, l_pro, l_hyp, l_wpd;
};

// Throws Error(Domain) on a negative input.
Constants constants_ladder(const Rational& theta, const Rational& c_e, const Rational& c_p, const Rational& c_g,
                           const Rational& B);

enum class DeltaMethod { FourPoint, ThinTriangle };

struct DeltaReport {
  DeltaMethod method = DeltaMethod::FourPoint;
  Rational delta;
  std::size_t samples = 0;
  std::vector<std::uint32_t> witness;  // quadruple or triangle corners
};

struct DeltaOptions {
  std::size_t cap = 300;      // exact method refuses larger windows
  std::size_t samples = 200;  // triangles for the sampled method
  std::uint64_t seed = 1;
};

// Four-point constant of the given metric on vertices 0..n-1 (unreachable pairs are skipped).
DeltaReport four_point_delta(const std::vector<std::int32_t>& dist, std::size_t n, std::size_t cap = 300);

// Requires a connected graph.
DeltaReport estimate_delta(const ComplexGraph& g, DeltaMethod method, const DeltaOptions& options = {});

std::string to_dot(const ComplexGraph& g);

}  // namespace pcx
