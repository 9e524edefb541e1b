#pragma once
// The quotient P/H on a window, the verification suites that compare it with
// the source (projected geodesics, bounded projections, WPD probes,
// independence tables) and triangle thinness downstairs.
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pcx/complex_graph.hpp"
#include "pcx/quotient_group.hpp"
#include "pcx/spinning.hpp"

namespace pcx {

struct QuotientOptions {
  // Caps of the bounded H-BFS cross-check; bfs_depth = 0 skips it.
  long long bfs_cap = 3;
  int bfs_depth = 0;
  // Well-definedness is checked on rotations about canonical window vertices
  // of depth <= move_depth (-1: all of them).
  int move_depth = -1;
};

struct QuotientComplex {
  const ComplexGraph* source = nullptr;
  const SpinningFamily* family = nullptr;
  std::vector<AxisVertex> window;            // source vertex order
  std::vector<std::uint32_t> class_of;       // per window vertex
  std::vector<AxisVertex> reps;              // minimal window member per class
  std::vector<AxisVertex> canon;             // descent normal form per class
  std::vector<std::vector<std::uint32_t>> members;
  std::unordered_map<Word, std::uint32_t, WordHash> class_by_canon;
  Adjacency adj;
  std::vector<std::int32_t> dist;
  std::size_t num_edges = 0;

  // Generator moves never separate classes.
  bool well_defined = true;
  // Quotient distance <= source distance on every window pair.
  bool lipschitz = true;
  // Class-graph distance equals the quotient-tree distance on every class pair.
  bool exact = true;
  std::size_t inexact_pairs = 0;

  // Filled by the BFS cross-check: a class is stable when the bounded orbit
  // search at the caps and at caps + 1 both recover it exactly.
  bool bfs_checked = false;
  std::vector<bool> stable;
  std::size_t unstable = 0;
  bool bfs_sound = true;  // no BFS orbit mixes two classes

  std::size_t size() const { return adj.size(); }
  std::int32_t distance(std::size_t a, std::size_t b) const { return dist[a * adj.size() + b]; }
  // Class of a vertex by its descent normal form, or -1 when no lift lies in the window.
  long class_index(const Descent& d, const AxisVertex& v) const;
};

// Shortest (distance to the identity), then shortlex least, vertex of the
// bounded H-orbit of v inside the window. stable reports whether caps + 1
// give the same answer. Throws Error(OutOfWindow) if v is outside the window.
AxisVertex canonical_rep(const Descent& d, const AxisVertex& v, const std::vector<AxisVertex>& window,
                         long long cap = 3, int depth = 4, bool* stable = nullptr);

// The graph must be built over `window` in the same order.
QuotientComplex build_quotient(const ComplexGraph& graph, const Descent& d, const std::vector<AxisVertex>& window,
                               const QuotientOptions& opt = {});

struct QuotientStability {
  std::size_t inner_classes = 0, outer_classes = 0;
  std::size_t compared_pairs = 0, differing_pairs = 0;
  bool stable = true;  // every inner class pair has the same distance in both quotients
};
QuotientStability compare_quotients(const QuotientComplex& inner, const QuotientComplex& outer, const Descent& d);

// Geodesic triangles on random class triples; thinness measured in the class graph.
struct QuotientDeltaReport {
  std::size_t samples = 0;
  std::int32_t max_thinness = 0;
  std::vector<std::uint32_t> witness;  // corner classes of the thickest triangle
};
QuotientDeltaReport quotient_triangle_thinness(const QuotientComplex& q, std::size_t samples, std::uint64_t seed);

struct ProjectedGeodesicReport {
  bool applicable = true;           // the projection hypothesis held
  bool length_condition = true;     // declared L >= L_pro(B)
  bool source_geodesic = true;
  long long max_projection = 0;     // max over interior vertices of d_v(start, end)
  long long length = 0;
  long long quotient_distance = 0;  // exact quotient-tree distance of the endpoint classes
  long long window_distance = -1;   // class-graph distance, -1 when an endpoint has no window lift
  bool geodesic = true;             // quotient_distance == length
};

// alpha is a path of axes. L_pro is taken from constants_ladder with the
// given image constants.
ProjectedGeodesicReport verify_projected_geodesic(const Descent& d, const std::vector<AxisVertex>& alpha, long long B,
                                                  const QuotientComplex* q = nullptr, long long C_p = 0,
                                                  long long C_g = 0, long long theta = 0, long long C_e = 0);

// max d_v(x, z) over all vertices v outside {x, z}. On the tree backend only
// interior vertices of the P_0 geodesic can carry a positive value.
long long max_projection(const TreeBackend& tb, const AxisVertex& x, const AxisVertex& z);

struct BoundedProjectionReport {
  Word f;
  AxisVertex x0;
  long long M1 = 0, M2 = 0, M = 0, N = 0, C_p = 0, B_f = 0;
  long long exponent_range = 0;
  std::vector<long long> per_exponent;  // max_v d_v(x0, f^n x0) for n = -range..range
  long long empirical_max = 0;
  long long window_max = -1;            // the same maximum restricted to window vertices, -1 without a window
  bool holds = true;                    // empirical_max <= B_f
};

// Throws Error(Rejected) when f does not move x0 (then f is not hyperbolic on P_0).
BoundedProjectionReport bounded_projection_constant(const TreeBackend& tb, const Word& f, const AxisVertex& x0,
                                                    long long exponent_range, long long C_p = 0,
                                                    const std::vector<AxisVertex>* window = nullptr);

struct WpdOptions {
  long long D = 1;
  long long M = 2;
  int ball_radius = 6;
  Word conjugator;            // g in the series n -> d_v((g f0^n)^-1 v, g f0^n v), f0 the backend axis word
  long long series_length = 8;
  long long translation_range = 6;
};

struct WpdProbe {
  Word f;
  AxisVertex x0;
  long long D = 0, M = 0;
  int ball_radius = 0;
  std::vector<Word> witnesses;  // source witnesses in the ball, shortlex order
  std::size_t K = 0;
  std::size_t K_quotient = 0;   // distinct G/H classes meeting the quotient conditions
  bool degenerate = false;      // ball radius 0
  std::vector<long long> series;
  bool series_non_decreasing = true;
  std::vector<long long> source_translation, quotient_translation;  // n = 1..range
  bool translation_equal = true;
};

WpdProbe wpd_suite(const Descent& d, const QuotientGroup& qg, const Word& f, const AxisVertex& x0,
                   const WpdOptions& opt = {});

struct IndependenceReport {
  Word f1, f2;
  AxisVertex x0;
  long long range = 0;
  long long B0 = 0, B_f1 = 0, B_f2 = 0, B = 0;
  // Row-major (2 range + 1)^2 tables of d(f1^n1 x0, f2^n2 x0), n1 and n2 in [-range, range].
  std::vector<long long> source, quotient;
  std::vector<long long> shell_minimum;  // min over max(|n1|, |n2|) = r, r = 0..range
  bool shell_strictly_increasing = true;
  bool quotient_equal = true;
  long long diagonal_max = 0;  // max over n of d(f1^n x0, f2^n x0)
};

IndependenceReport independence_suite(const Descent& d, const Word& f1, const Word& f2, const AxisVertex& x0,
                                      long long range, long long C_p = 0);

}  // namespace pcx
