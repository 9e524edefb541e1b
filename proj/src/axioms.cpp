#include <algorithm>
#include <cstdint>

#include "pcx/error.hpp"
#include "pcx/projection_system.hpp"

namespace pcx {

namespace {

void push_capped(std::vector<std::vector<std::size_t>>& list, std::vector<std::size_t> w, std::size_t cap) {
  if (list.size() < cap) list.push_back(std::move(w));
}

}  // namespace

AxiomReport check_axioms(const ProjectionSystem& sys, const AxiomOptions& opt) {
  const std::size_t n = sys.size();
  if (n < 3) throw Error(ErrorKind::DegenerateWindow, "window needs at least 3 vertices");
  const long long theta = sys.scaled_theta();
  const std::size_t tp = std::min(opt.triangle_prefix, n);
  const std::size_t inner = std::min(opt.inner, n);

  AxiomReport rep;
  rep.window_size = n;
  rep.triangle_window = tp;
  rep.finiteness_inner = inner;
  rep.finiteness_tested = inner > 0;
  rep.theta_declared = sys.theta();

  std::vector<std::int32_t> row(n), col(n);
  std::vector<std::int32_t> P(tp * tp), T(tp * tp);
  std::vector<long long> count_inner(inner * inner, 0), count_full(inner * inner, 0);
  constexpr std::int32_t BIG = std::numeric_limits<std::int32_t>::max() / 4;

  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      if (x == y) continue;
      sys.fill_row(y, x, row.data());
      sys.fill_column(y, x, col.data());
      // Symmetry: d_y(x, z) == d_y(z, x).
      bool same = true;
      for (std::size_t z = 0; z < n; ++z) same &= row[z] == col[z];
      if (!same)
        for (std::size_t z = x + 1; z < n; ++z)
          if (z != y && row[z] != col[z]) {
            rep.symmetry = false;
            push_capped(rep.symmetry_witnesses, {y, x, z}, opt.witness_cap);
          }
      if (x < inner)
        for (std::size_t z = 0; z < inner; ++z)
          if (z != y && z != x && row[z] > theta) {
            ++count_full[x * inner + z];
            if (y < inner) ++count_inner[x * inner + z];
          }
      // Prefix copy for the triangle scan; row/column y act as a sentinel.
      if (y < tp && x < tp)
        for (std::size_t z = 0; z < tp; ++z) P[x * tp + z] = z == y ? BIG : row[z];
    }
    // Triangle inequality d_y(x,w) <= d_y(x,z) + d_y(z,w), z ranging over the prefix.
    if (y < tp) {
      std::fill(P.begin() + static_cast<std::ptrdiff_t>(y * tp), P.begin() + static_cast<std::ptrdiff_t>((y + 1) * tp),
                BIG);
      for (std::size_t i = 0; i < tp; ++i)
        for (std::size_t j = 0; j < tp; ++j) T[j * tp + i] = P[i * tp + j];
      for (std::size_t x = 0; x < tp; ++x) {
        if (x == y) continue;
        const std::int32_t* rx = &P[x * tp];
        for (std::size_t w = 0; w < tp; ++w) {
          if (w == y) continue;
          const std::int32_t* cw = &T[w * tp];
          std::int32_t best = BIG;
          for (std::size_t z = 0; z < tp; ++z) best = std::min(best, rx[z] + cw[z]);
          if (rx[w] > best) {
            rep.triangle = false;
            std::size_t zz = 0;
            while (rx[zz] + cw[zz] != best) ++zz;
            push_capped(rep.triangle_witnesses, {y, x, zz, w}, opt.witness_cap);
          }
        }
      }
    }
  }

  // Inequality on triples: min{d_y(x,z), d_z(x,y)} <= theta for distinct x, y, z.
  long long measured = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      sys.fill_row(y, x, row.data());    // d_y(x, z)
      sys.fill_cross(x, y, col.data());  // d_z(x, y)
      std::int32_t best = 0;
      for (std::size_t z = 0; z < n; ++z) best = std::max(best, std::min(row[z], col[z]));
      // Positions z in {x, y} are zero in the cross row, so they never win.
      measured = std::max<long long>(measured, best);
      if (best > theta) {
        rep.triples = false;
        for (std::size_t z = 0; z < n && rep.triples_witnesses.size() < opt.witness_cap; ++z)
          if (z != x && z != y && std::min(row[z], col[z]) > theta) rep.triples_witnesses.push_back({x, y, z});
      }
    }
  rep.theta_measured = Rational{measured, sys.scale()}.normalized();

  for (std::size_t i = 0; i < inner * inner; ++i)
    if (count_inner[i] != count_full[i]) {
      rep.finiteness = false;
      push_capped(rep.finiteness_witnesses, {i / inner, i % inner}, opt.witness_cap);
    }
  return rep;
}

}  // namespace pcx
