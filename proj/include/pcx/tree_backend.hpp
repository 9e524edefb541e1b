#pragma once
// The free group F_k acting on its Cayley tree. Vertices of the projection
// system are the translates g·A of the axis A of a fixed element f; each is
// named by the canonical (shortest, then shortlex least) element of g<f>.
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "pcx/free_group.hpp"

namespace pcx {

struct AxisVertex {
  Word rep;
  bool operator==(const AxisVertex& o) const { return rep == o.rep; }
  bool operator!=(const AxisVertex& o) const { return rep != o.rep; }
  // Window order: shortlex on representatives.
  bool operator<(const AxisVertex& o) const { return shortlex_less(rep, o.rep); }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int l : w) {
      h ^= static_cast<std::size_t>(l + 64);
      h *= 1099511628211ull;
    }
    return h;
  }
};
struct AxisHash {
  std::size_t operator()(const AxisVertex& v) const noexcept { return WordHash{}(v.rep); }
};

// The geodesic segment between two tree vertices.
struct TreeSegment {
  Word from;
  Word to;
  bool exact = true;
};

// Projection of one axis onto another, in the parameter of the target axis
// (t -> rep·A(t)); the segment is [lo, hi].
struct ProjInterval {
  long long lo = 0;
  long long hi = 0;
};

class TreeBackend {
 public:
  // Throws Error(Rejected) unless f is nontrivial and cyclically reduced, and
  // Error(ProperPower) if f is a proper power.
  TreeBackend(int k, Word f);

  int rank() const { return k_; }
  const Word& f() const { return f_; }
  long long period() const { return static_cast<long long>(f_.size()); }

  AxisVertex base() const { return AxisVertex{}; }
  AxisVertex canonical(const Word& g) const;
  AxisVertex act(const Word& g, const AxisVertex& v) const;

  // Vertex A(t) of the base axis.
  Word axis_point(long long t) const;
  // Vertex rep·A(t) of the axis v.
  Word point_on(const AxisVertex& v, long long t) const;
  // Nearest point of the base axis to the tree vertex w: (parameter, distance).
  std::pair<long long, long long> project_vertex_to_base(const Word& w) const;
  bool on_axis(const AxisVertex& v, const Word& w) const;

  long long distance_to_identity(const AxisVertex& v) const;
  // Nearest vertex of the axis v to the identity vertex.
  Word foot_of_identity(const AxisVertex& v) const;

  // Projection of the line x onto the line y, in y's parameter. Throws
  // Error(UndefinedProjection) when x == y.
  ProjInterval project_interval(const AxisVertex& y, const AxisVertex& x) const;
  // Same projection as a tree segment, flagged exact when it lies strictly
  // inside the ball of radius R. Throws Error(NeedsLargerRadius) otherwise.
  TreeSegment project_axis(const AxisVertex& y, const AxisVertex& x, long long R) const;
  long long axis_distance(const AxisVertex& y, const AxisVertex& x, const AxisVertex& z,
                          long long R) const;
  // axis_distance with a truncation radius large enough for the three axes.
  long long distance(const AxisVertex& y, const AxisVertex& x, const AxisVertex& z) const;
  long long auto_radius(std::initializer_list<const AxisVertex*> vs) const;

  // All axes within tree distance r of the identity vertex, ordered by that
  // distance and then shortlex.
  std::vector<AxisVertex> window(int r) const;

  // True when every generator occurs exactly once in f (up to sign), so each
  // Cayley edge lies on exactly one axis.
  bool simple_base() const { return simple_; }
  // The axis containing the edge w -> w·letter, and the direction (+1 along
  // the orientation of f, -1 against). Requires simple_base().
  std::pair<AxisVertex, int> axis_of_edge(const Word& w, int letter) const;

  // Axes meeting the line v in at least one vertex, other than v, whose
  // meeting point has parameter in [t0, t1] along v.
  std::vector<AxisVertex> axes_meeting(const AxisVertex& v, long long t0, long long t1) const;

  // Intersection-graph distance (the graph P_0) between two axes:
  // 0 if equal, 1 if they share a vertex, otherwise 1 + number of axis
  // segments on the Cayley bridge between them. Requires simple_base().
  long long intersection_distance(const AxisVertex& x, const AxisVertex& z) const;
  // The geodesic of P_0 from x to z: x, the bridge axes in order, z.
  std::vector<AxisVertex> intersection_path(const AxisVertex& x, const AxisVertex& z) const;

  // Rotation generator of R_v: rep·f^p·rep^-1, raised to k.
  Word rotation(const AxisVertex& v, long long p, long long k) const;

 private:
  // Parameter of the projection onto A of the end u·f^{sign·inf}.
  long long end_parameter(const Word& u, int sign) const;
  long long lcp_with_ray(const Word& w, int sign, std::size_t offset = 0) const;

  int k_;
  Word f_;
  Word finv_;
  bool simple_ = false;
};

}  // namespace pcx
