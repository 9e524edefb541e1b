#pragma once
// Equivariant spinning families R_{g v0} = g <f^p> g^-1 on the tree backend,
// rotation descent (canonical orbit representatives under H = <<f^p>>), and
// the windmill tower restricted to a window.
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pcx/tree_backend.hpp"

namespace pcx {

struct SpinningFamily {
  const TreeBackend* backend = nullptr;
  long long p = 1;
  long long L = 0;  // declared spinning constant p * translation_length(f)
  AxisVertex v0;

  // Generator of R_v: rep·f^p·rep^-1, raised to k.
  Word rotation(const AxisVertex& v, long long k) const { return backend->rotation(v, p, k); }
  // Translation of R_v's generator along v, in tree edges.
  long long shift() const { return p * backend->period(); }
};

// Throws Error(Domain) for p < 1.
SpinningFamily make_family(const TreeBackend& backend, long long p);

struct SpinningWitness {
  std::size_t v = 0, w = 0;  // window indices
  long long k = 0;
  long long value = 0;
};

struct SpinningReport {
  bool pass = true;
  long long L_target = 0;
  long long minimum = -1;  // -1 when nothing was checked
  std::size_t checked = 0;
  std::size_t exponent_cap = 0;
  std::vector<SpinningWitness> witnesses;       // violations, capped
  std::optional<SpinningWitness> minimizer;     // first pair attaining the minimum
};

// d_v(w, h w) >= L_target for all v != w in the window and h = (v-generator)^k, 1 <= |k| <= cap.
SpinningReport verify_spinning(const SpinningFamily& family, const std::vector<AxisVertex>& window,
                               long long L_target, long long exponent_cap, std::size_t witness_cap = 8);

// One rotation letter (v, k): the element rep_v f^{pk} rep_v^-1 of R_v.
struct RotationLetter {
  AxisVertex v;
  long long k = 0;
  bool operator==(const RotationLetter& o) const { return v == o.v && k == o.k; }
};

// The path of axes from the base axis to x in the intersection tree, with the
// signed offset travelled along each axis on the Cayley geodesic from 1.
// axes = (v0 = Y_0, ..., Y_d = x); offsets[j] runs along Y_j, j < d.
struct AxisChain {
  std::vector<AxisVertex> axes;
  std::vector<long long> offsets;
  std::size_t depth() const { return axes.size() - 1; }
};

struct DescentResult {
  AxisVertex canon;
  // word applied to x gives canon; letters are listed left to right as a
  // group product, so the first applied letter is the last one listed.
  std::vector<RotationLetter> word;
  std::vector<AxisVertex> chain;  // canonical chain of canon
  int depth = 0;
};

// Rotation descent for a family whose base word uses every generator exactly once.
class Descent {
 public:
  explicit Descent(const SpinningFamily& family);

  const SpinningFamily& family() const { return family_; }
  const TreeBackend& backend() const { return *family_.backend; }

  AxisChain chain(const AxisVertex& x) const;
  const DescentResult& descend(const AxisVertex& x) const;
  const AxisVertex& canon(const AxisVertex& x) const { return descend(x).canon; }
  int depth(const AxisVertex& x) const { return descend(x).depth; }
  bool is_canonical(const AxisVertex& x) const { return descend(x).canon == x; }
  // Minimal i with x in W_i: the largest canonical depth along the chain of x.
  int stage(const AxisVertex& x) const;
  // Distance in the quotient tree between the classes of x and z.
  long long quotient_distance(const AxisVertex& x, const AxisVertex& z) const;
  // Canonical parent of a canonical vertex of depth >= 1.
  AxisVertex parent(const AxisVertex& c) const;

  std::size_t cache_size() const { return cache_.size(); }

 private:
  long long reduce_offset(long long o) const;
  bool reduced(long long o) const { return reduce_offset(o) == o; }

  SpinningFamily family_;
  mutable std::unordered_map<Word, DescentResult, WordHash> cache_;
};

// Bounded orbit search: rotation letters (c, k) for canonical window vertices
// c with 1 <= |k| <= cap, words of length <= depth, never leaving the window.
struct OrbitSearch {
  std::vector<std::vector<std::uint32_t>> classes;  // window indices, one list per discovered class
  std::vector<std::uint32_t> class_of;              // per window vertex
};
OrbitSearch bounded_orbits(const Descent& d, const std::vector<AxisVertex>& window, long long cap, int depth);

struct WindmillStage {
  int i = 0;
  std::vector<AxisVertex> W, N, L, O;  // window-restricted
  bool W_connected = true;
  bool contains_previous = true;
  bool L_matches = true;      // L_i = N_i minus W_{i-1}
  bool O_one_per_orbit = true;  // every L_i vertex descends into O_i, O_i pairwise distinct
};

struct WindmillData {
  AxisVertex v0;
  long long p = 1;
  int window_radius = 0;
  int max_stage = 0;
  bool truncated = false;  // the window ran out of vertices before max_stage
  std::vector<WindmillStage> stages;
};

// Requires the window graph of P_K with vertex order equal to window.
struct ComplexGraph;
WindmillData build_windmill(const Descent& d, const std::vector<AxisVertex>& window, const ComplexGraph& graph,
                            int max_stage);

}  // namespace pcx
