#pragma once
// The projection system induced by a TreeBackend on a finite window of axes.
// Projection intervals are tabulated once, so d_y(x, z) is two min/max ops.
#include <unordered_map>

#include "pcx/projection_system.hpp"
#include "pcx/tree_backend.hpp"

namespace pcx {

class TreeSystem final : public ProjectionSystem {
 public:
  // Builds the window of radius r. tree_radius <= 0 selects 4r + 4|f|.
  // Throws Error(NeedsLargerRadius) if some projection leaves the truncation.
  TreeSystem(const TreeBackend& backend, int radius, long long tree_radius = 0, long long theta = 0);
  TreeSystem(const TreeBackend& backend, std::vector<AxisVertex> vertices, long long tree_radius,
             long long theta = 0);

  std::size_t size() const override { return verts_.size(); }
  std::string label(std::size_t i) const override { return to_string(verts_[i].rep); }
  std::int32_t scaled_distance(std::size_t y, std::size_t x, std::size_t z) const override {
    const std::size_t n = verts_.size();
    return std::max(hi_[y * n + x], hi_[y * n + z]) - std::min(lo_[y * n + x], lo_[y * n + z]);
  }
  long long scaled_theta() const override { return theta_; }
  void fill_row(std::size_t y, std::size_t x, std::int32_t* out) const override;
  void fill_column(std::size_t y, std::size_t x, std::int32_t* out) const override;
  void fill_cross(std::size_t x, std::size_t y, std::int32_t* out) const override;

  const TreeBackend& backend() const { return *backend_; }
  const std::vector<AxisVertex>& vertices() const { return verts_; }
  const AxisVertex& vertex(std::size_t i) const { return verts_[i]; }
  int radius() const { return radius_; }
  long long tree_radius() const { return tree_radius_; }
  // Index of v in the window, or -1.
  long index_of(const AxisVertex& v) const;

 private:
  void build();

  const TreeBackend* backend_;
  std::vector<AxisVertex> verts_;
  std::unordered_map<Word, long, WordHash> index_;
  // lo_[y*n + x], hi_[y*n + x]: projection of x onto y. The *_t_ copies are
  // transposed, indexed [x*n + y].
  std::vector<std::int32_t> lo_, hi_, lo_t_, hi_t_;
  int radius_ = -1;
  long long tree_radius_ = 0;
  long long theta_ = 0;
};

}  // namespace pcx
