#include <algorithm>

#include "pcx/error.hpp"
#include "pcx/pivot.hpp"

namespace pcx {

RotationWord descent_element(const Descent& d, const AxisVertex& x) {
  return normal_form(d, RotationWord{d.descend(x).word});
}

RotationWord transporter(const Descent& d, const AxisVertex& x, const AxisVertex& z) {
  if (d.canon(x) != d.canon(z))
    throw Error(ErrorKind::Rejected, to_string(x.rep) + " and " + to_string(z.rep) + " lie in different orbits");
  return normal_form(d, concat(inverse(descent_element(d, z)), descent_element(d, x)));
}

Path bend(const Descent& d, const Path& path, std::size_t n0, const RotationWord& h_v) {
  if (n0 >= path.size()) throw Error(ErrorKind::Rejected, "bend index outside the path");
  const TreeBackend& tb = d.backend();
  const Word g = shadow(d.family(), h_v);
  if (tb.act(g, path[n0]) != path[n0])
    throw Error(ErrorKind::Rejected, "bending element does not fix " + to_string(path[n0].rep));
  Path out = path;
  for (std::size_t t = n0 + 1; t < out.size(); ++t) out[t] = tb.act(g, out[t]);
  return out;
}

std::vector<AxisVertex> quotient_geodesic(const Descent& d, const AxisVertex& a, const AxisVertex& b) {
  const std::vector<AxisVertex> ca = d.descend(a).chain;
  const std::vector<AxisVertex> cb = d.descend(b).chain;
  std::size_t m = 0;
  while (m < ca.size() && m < cb.size() && ca[m] == cb[m]) ++m;
  std::vector<AxisVertex> out(ca.rbegin(), ca.rend() - static_cast<std::ptrdiff_t>(m - 1));
  out.insert(out.end(), cb.begin() + static_cast<std::ptrdiff_t>(m), cb.end());
  return out;
}

Path lift_path(const Descent& d, const std::vector<AxisVertex>& qpath, const AxisVertex& x, long long radius,
               std::mt19937_64* rng) {
  if (qpath.empty()) throw Error(ErrorKind::Rejected, "empty quotient path");
  const TreeBackend& tb = d.backend();
  if (d.canon(x) != qpath[0])
    throw Error(ErrorKind::Rejected, to_string(x.rep) + " does not lie over " + to_string(qpath[0].rep));
  Path out{x};
  for (std::size_t t = 0; t + 1 < qpath.size(); ++t) {
    const AxisVertex& c = qpath[t];
    const AxisVertex& n = qpath[t + 1];
    const bool up = d.depth(c) > 0 && d.parent(c) == n;
    const bool down = d.is_canonical(n) && d.depth(n) > 0 && d.parent(n) == c;
    if (!up && !down)
      throw Error(ErrorKind::Rejected, "quotient path step " + std::to_string(t) + " is not an edge");
    // out.back() = u^-1 c with u its descent element; the lift of the step is u^-1 n.
    const Word u = shadow(d.family(), descent_element(d, out.back()));
    Word step = inverse(u);
    if (rng) {
      const long long k = static_cast<long long>((*rng)() % 5) - 2;
      if (k != 0) step = mul(step, d.family().rotation(c, k));
    }
    AxisVertex y = tb.act(step, n);
    if (radius >= 0 && tb.distance_to_identity(y) > radius)
      throw Error(ErrorKind::WindowExhausted, "lift of step " + std::to_string(t) + " leaves the radius-" +
                                                  std::to_string(radius) + " window");
    out.push_back(std::move(y));
  }
  return out;
}

namespace {

long long projection_bound(const TreeBackend& tb, const Path& p) {
  long long m = 0;
  for (std::size_t t = 1; t + 1 < p.size(); ++t)
    if (p[t] != p.front() && p[t] != p.back()) m = std::max(m, tb.distance(p[t], p.front(), p.back()));
  return m;
}

}  // namespace

QuadrilateralLift lift_quadrilateral(const Descent& d, const QuadrilateralInput& in, const ShortenOptions& opt) {
  const TreeBackend& tb = d.backend();
  const SpinningFamily& fam = d.family();
  for (std::size_t k = 0; k < 4; ++k) {
    if (in.sides[k].empty()) throw Error(ErrorKind::Rejected, "quadrilateral side " + std::to_string(k) + " is empty");
    if (in.sides[k].back() != in.sides[(k + 1) % 4].front())
      throw Error(ErrorKind::Rejected, "quadrilateral sides " + std::to_string(k) + " and " +
                                           std::to_string((k + 1) % 4) + " do not meet");
  }
  QuadrilateralLift out;
  out.lift_condition = fam.L >= std::max({in.l_short, 40 * in.B, 40 * in.c_g});
  const std::array<const std::optional<Path>*, 4> constrained{&in.side0, nullptr, &in.side2, nullptr};

  // Special lift: consecutive sides, constrained ones as H-translates.
  std::array<std::size_t, 5> off{};
  Path path;
  AxisVertex cur = in.start ? *in.start : in.sides[0].front();
  std::array<RotationWord, 4> tr;
  std::mt19937_64 rng(in.scramble.value_or(0));
  for (std::size_t k = 0; k < 4; ++k) {
    Path side;
    if (constrained[k] && constrained[k]->has_value()) {
      const Path& src = constrained[k]->value();
      if (src.size() != in.sides[k].size())
        throw Error(ErrorKind::Rejected, "constrained side " + std::to_string(k) + " has the wrong length");
      if (projection_bound(tb, src) > in.B) out.constraints_ok = false;
      tr[k] = transporter(d, src.front(), cur);
      const Word t = shadow(fam, tr[k]);
      for (const auto& y : src) side.push_back(tb.act(t, y));
      for (std::size_t s = 0; s < side.size(); ++s)
        if (d.canon(side[s]) != in.sides[k][s])
          throw Error(ErrorKind::Rejected, "constrained side " + std::to_string(k) + " does not lie over its side");
    } else {
      side = lift_path(d, in.sides[k], cur, -1, in.scramble ? &rng : nullptr);
    }
    off[k] = path.empty() ? 0 : path.size() - 1;
    if (path.empty()) path.push_back(side.front());
    path.insert(path.end(), side.begin() + 1, side.end());
    cur = side.back();
  }
  off[4] = path.size() - 1;

  RotationWord h = transporter(d, path.front(), path.back());
  out.h_initial = h;
  auto interior_of_constrained = [&](std::size_t idx) {
    for (std::size_t k : {0u, 2u})
      if (constrained[k]->has_value() && idx > off[k] && idx < off[k + 1]) return true;
    return false;
  };
  while (path.back() != path.front() && out.bends < in.max_bends) {
    const ShortenResult sr = shorten(d, path.front(), h, opt);
    std::size_t n0 = path.size();
    for (std::size_t t = 0; t < path.size() && n0 == path.size(); ++t)
      if (path[t] == sr.v && !interior_of_constrained(t)) n0 = t;
    if (n0 == path.size()) break;  // the shortening vertex is not on the lift
    path = bend(d, path, n0, sr.h_v);
    for (std::size_t k : {0u, 2u})
      if (constrained[k]->has_value() && n0 <= off[k]) tr[k] = normal_form(d, concat(sr.h_v, tr[k]));
    out.bend_vertices.push_back(sr.v);
    h = sr.product;
    ++out.bends;
  }
  out.closed = path.back() == path.front();
  out.h_final = out.closed ? RotationWord{} : h;
  for (std::size_t k = 0; k < 4; ++k)
    out.sides[k].assign(path.begin() + static_cast<std::ptrdiff_t>(off[k]),
                        path.begin() + static_cast<std::ptrdiff_t>(off[k + 1]) + 1);
  for (std::size_t k : {0u, 2u})
    if (constrained[k]->has_value()) out.translators.push_back(tr[k]);
  return out;
}

}  // namespace pcx
