#include "pcx/tree_system.hpp"

#include <algorithm>

#include "pcx/error.hpp"

namespace pcx {

TreeSystem::TreeSystem(const TreeBackend& backend, int radius, long long tree_radius, long long theta)
    : backend_(&backend), radius_(radius), theta_(theta) {
  verts_ = backend.window(radius);
  tree_radius_ = tree_radius > 0 ? tree_radius : 4LL * radius + 4 * backend.period();
  build();
}

TreeSystem::TreeSystem(const TreeBackend& backend, std::vector<AxisVertex> vertices, long long tree_radius,
                       long long theta)
    : backend_(&backend), verts_(std::move(vertices)), tree_radius_(tree_radius), theta_(theta) {
  long long r = 0;
  for (const auto& v : verts_) r = std::max(r, backend.distance_to_identity(v));
  radius_ = static_cast<int>(r);
  if (tree_radius_ <= 0) tree_radius_ = 4 * r + 4 * backend.period();
  build();
}

void TreeSystem::build() {
  const std::size_t n = verts_.size();
  for (std::size_t i = 0; i < n; ++i) index_.emplace(verts_[i].rep, static_cast<long>(i));
  lo_.assign(n * n, 0);
  hi_.assign(n * n, 0);
  for (std::size_t y = 0; y < n; ++y) {
    const long long ylen = static_cast<long long>(verts_[y].rep.size());
    for (std::size_t x = 0; x < n; ++x) {
      if (x == y) continue;
      const ProjInterval iv = backend_->project_interval(verts_[y], verts_[x]);
      for (long long t : {iv.lo, iv.hi}) {
        // |rep·A(t)| <= |rep| + |t|; compute exactly only when the bound is not enough.
        if (ylen + std::abs(t) >= tree_radius_ &&
            static_cast<long long>(backend_->point_on(verts_[y], t).size()) >= tree_radius_)
          throw Error(ErrorKind::NeedsLargerRadius,
                      "projection of " + label(x) + " onto " + label(y) + " leaves the truncation");
      }
      lo_[y * n + x] = static_cast<std::int32_t>(iv.lo);
      hi_[y * n + x] = static_cast<std::int32_t>(iv.hi);
    }
  }
  lo_t_.assign(n * n, 0);
  hi_t_.assign(n * n, 0);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      lo_t_[x * n + y] = lo_[y * n + x];
      hi_t_[x * n + y] = hi_[y * n + x];
    }
}

long TreeSystem::index_of(const AxisVertex& v) const {
  auto it = index_.find(v.rep);
  return it == index_.end() ? -1 : it->second;
}

void TreeSystem::fill_row(std::size_t y, std::size_t x, std::int32_t* out) const {
  const std::size_t n = verts_.size();
  const std::int32_t* lo = &lo_[y * n];
  const std::int32_t* hi = &hi_[y * n];
  const std::int32_t lx = lo[x], hx = hi[x];
  for (std::size_t z = 0; z < n; ++z) out[z] = std::max(hx, hi[z]) - std::min(lx, lo[z]);
  out[y] = 0;
}

void TreeSystem::fill_column(std::size_t y, std::size_t x, std::int32_t* out) const {
  const std::size_t n = verts_.size();
  const std::int32_t* lo = &lo_[y * n];
  const std::int32_t* hi = &hi_[y * n];
  const std::int32_t lx = lo[x], hx = hi[x];
  for (std::size_t z = 0; z < n; ++z) out[z] = std::max(hi[z], hx) - std::min(lo[z], lx);
  out[y] = 0;
}

void TreeSystem::fill_cross(std::size_t x, std::size_t y, std::int32_t* out) const {
  const std::size_t n = verts_.size();
  const std::int32_t* lx = &lo_t_[x * n];
  const std::int32_t* hx = &hi_t_[x * n];
  const std::int32_t* ly = &lo_t_[y * n];
  const std::int32_t* hy = &hi_t_[y * n];
  for (std::size_t z = 0; z < n; ++z) out[z] = std::max(hx[z], hy[z]) - std::min(lx[z], ly[z]);
  out[x] = 0;
  out[y] = 0;
}

}  // namespace pcx
