#include "pcx/suites.hpp"

#include <algorithm>

#include "pcx/error.hpp"

namespace pcx {

namespace {

void note(std::vector<std::string>& w, const std::string& s) {
  if (w.size() < kWitnessCap) w.push_back(s);
}

std::vector<AxisVertex> translate(const Descent& d, const RotationWord& g, const std::vector<AxisVertex>& xs) {
  const Word s = shadow(d.family(), g);
  std::vector<AxisVertex> out;
  for (const auto& x : xs) out.push_back(d.backend().act(s, x));
  return out;
}

}  // namespace

RotationWord random_high_element(const Descent& d, const std::vector<AxisVertex>& pool, std::mt19937_64& rng,
                                 int max_letters) {
  if (max_letters < 1) throw Error(ErrorKind::Domain, "max_letters must be positive");
  bool high = false;
  for (const auto& v : pool) high |= d.depth(v) >= 1;
  if (!high) throw Error(ErrorKind::Domain, "the pool has no vertex of depth >= 1");
  for (;;) {
    RotationWord h =
        normal_form(d, random_rotation_word(pool, rng, 1 + static_cast<int>(rng() % static_cast<unsigned>(max_letters))));
    if (level(d, h) >= 1) return h;
  }
}

PivotFactsReport pivot_facts_suite(const Descent& d, const std::vector<AxisVertex>& pool, std::size_t samples,
                                   std::uint64_t seed, long long theta, int max_letters) {
  const TreeBackend& tb = d.backend();
  const AxisVertex v0 = d.family().v0;
  const long long L = d.family().L;
  std::mt19937_64 rng(seed);
  PivotFactsReport r;
  for (; r.samples < samples; ++r.samples) {
    const RotationWord h = random_high_element(d, pool, rng, max_letters);
    const AxisVertex hv0 = tb.act(shadow(d.family(), h), v0);
    const auto piv = pivot_points(d, h).pivots;
    bool ok = !piv.empty();
    for (std::size_t a = 0; a < piv.size() && ok; ++a) {
      ++r.pivots;
      ok = piv[a] != v0 && piv[a] != hv0 && 2 * tb.distance(piv[a], v0, hv0) > L;
      for (std::size_t b = a + 1; b < piv.size() && ok; ++b) {
        ++r.pairs;
        ok = tb.distance(piv[b], v0, piv[a]) <= theta;
      }
    }
    if (!ok) {
      ++r.failures;
      note(r.witnesses, h.str());
    }
  }
  return r;
}

EssentialLawsReport essential_laws_suite(const Descent& d, const std::vector<AxisVertex>& pool, std::size_t samples,
                                         std::uint64_t seed) {
  const TreeBackend& tb = d.backend();
  std::mt19937_64 rng(seed);
  EssentialLawsReport r;
  const std::size_t max_draws = 20 * samples + 100;
  while (r.conjugation_literal < samples && r.conjugation_samples < max_draws) {
    const RotationWord h = random_high_element(d, pool, rng, 5);
    const RotationWord g =
        normal_form(d, random_rotation_word(pool, rng, 1 + static_cast<int>(rng() % 5)));
    const RotationWord conj = normal_form(d, concat(g, h, inverse(g)));
    ++r.conjugation_samples;
    const auto lhs = essential_pivots(d, conj).pivots;
    const auto rhs = translate(d, g, essential_pivots(d, h).pivots);
    bool ok = lhs.size() == rhs.size();
    if (ok && conj.size() == 2 * g.size() + h.size()) {
      ++r.conjugation_literal;
      ok = lhs == rhs;
    } else if (ok) {
      const Word c = shadow(d.family(), conj), ci = inverse(c);
      for (const auto& w : rhs) {
        bool found = false;
        for (const auto& u : lhs) found |= u == w || tb.act(c, u) == w || tb.act(ci, u) == w;
        ok &= found;
      }
    }
    if (!ok) {
      ++r.conjugation_failures;
      note(r.witnesses, "conjugation " + h.str() + " by " + g.str());
    }
  }
  if (r.conjugation_literal < samples) ++r.conjugation_failures;

  for (; r.power_samples < samples; ++r.power_samples) {
    const RotationWord h = random_high_element(d, pool, rng, 6);
    const auto one = essential_pivots(d, h).pivots;
    std::vector<AxisVertex> expect = one;
    for (const auto& w : translate(d, h, one))
      if (std::find(expect.begin(), expect.end(), w) == expect.end()) expect.push_back(w);
    if (essential_pivots(d, normal_form(d, concat(h, h))).pivots != expect) {
      ++r.power_failures;
      note(r.witnesses, "power " + h.str());
    }
  }
  return r;
}

ShortenSuiteReport shorten_suite(const Descent& d, const std::vector<AxisVertex>& pool,
                                 const std::vector<AxisVertex>& xs, std::size_t samples, std::uint64_t seed,
                                 int max_letters) {
  const TreeBackend& tb = d.backend();
  const SpinningFamily& fam = d.family();
  if (xs.empty()) throw Error(ErrorKind::Domain, "no base points to shorten from");
  std::mt19937_64 rng(seed);
  ShortenSuiteReport r;
  while (r.samples < samples) {
    const RotationWord h = normal_form(
        d, random_rotation_word(pool, rng, 1 + static_cast<int>(rng() % static_cast<unsigned>(max_letters))));
    const AxisVertex& x = xs[rng() % xs.size()];
    if (h.empty() || tb.act(shadow(fam, h), x) == x) continue;
    ++r.samples;
    const Complexity c0 = complexity(d, h).c;
    const std::size_t bound = c0.n * static_cast<std::size_t>(c0.i + 2) + 4;
    RotationWord cur = h;
    std::size_t steps = 0;
    while (!cur.empty() && tb.act(shadow(fam, cur), x) != x) {
      const AxisVertex hx = tb.act(shadow(fam, cur), x);
      const ShortenResult s = shorten(d, x, cur);
      ++r.branches[shorten_case_name(s.branch)];
      const bool post = tb.act(shadow(fam, s.h_v), s.v) == s.v &&
                        (s.v == x || s.v == hx || 10 * tb.distance(s.v, x, hx) > fam.L);
      if (!post) {
        ++r.postcondition_failures;
        note(r.witnesses, "postcondition " + cur.str() + " at " + to_string(x.rep));
      }
      if (!(s.after < s.before)) {
        ++r.complexity_failures;
        note(r.witnesses, "complexity " + cur.str() + " at " + to_string(x.rep));
      }
      cur = s.product;
      if (++steps > bound) {
        ++r.bound_failures;
        note(r.witnesses, "bound " + h.str() + " at " + to_string(x.rep));
        break;
      }
    }
    r.steps += steps;
    r.max_steps = std::max(r.max_steps, steps);
  }
  return r;
}

namespace {

// Side k of the lift lies over side k of the input, vertex by vertex, and is a geodesic upstairs.
bool closed_over(const Descent& d, const QuadrilateralInput& in, const QuadrilateralLift& q) {
  if (!q.closed || !q.h_final.empty()) return false;
  for (std::size_t k = 0; k < 4; ++k) {
    const Path& s = q.sides[k];
    if (s.size() != in.sides[k].size() || s.back() != q.sides[(k + 1) % 4].front()) return false;
    for (std::size_t t = 0; t < s.size(); ++t)
      if (d.canon(s[t]) != in.sides[k][t]) return false;
    if (d.backend().intersection_distance(s.front(), s.back()) != static_cast<long long>(s.size()) - 1) return false;
  }
  return true;
}

AxisVertex quotient_neighbour(const Descent& d, const std::vector<AxisVertex>& pool, const AxisVertex& c,
                              std::mt19937_64& rng) {
  std::vector<AxisVertex> opts;
  if (d.depth(c) > 0) opts.push_back(d.parent(c));
  for (const auto& v : pool)
    if (d.depth(v) > 0 && d.parent(v) == c) opts.push_back(v);
  if (opts.empty()) throw Error(ErrorKind::Domain, "isolated pool vertex " + to_string(c.rep));
  return opts[rng() % opts.size()];
}

}  // namespace

LiftSuiteReport lift_suite(const Descent& d, const std::vector<AxisVertex>& pool, std::size_t triangles,
                           std::size_t quadrilaterals, std::size_t constrained, std::uint64_t seed) {
  const TreeBackend& tb = d.backend();
  if (pool.empty()) throw Error(ErrorKind::Domain, "empty vertex pool");
  std::mt19937_64 rng(seed);
  LiftSuiteReport r;
  auto corner = [&] { return pool[rng() % pool.size()]; };
  for (std::size_t s = 0; s < triangles + quadrilaterals; ++s) {
    std::vector<AxisVertex> cs{corner(), corner(), corner()};
    cs.push_back(s < triangles ? cs[2] : corner());
    QuadrilateralInput in;
    for (int k = 0; k < 4; ++k) in.sides[k] = quotient_geodesic(d, cs[k], cs[(k + 1) % 4]);
    in.scramble = seed + s;
    const auto q = lift_quadrilateral(d, in);
    r.bends += q.bends;
    (s < triangles ? r.triangles : r.quadrilaterals)++;
    if (!closed_over(d, in, q)) {
      ++r.failures;
      note(r.witnesses, "figure " + std::to_string(s));
    }
  }
  for (std::size_t s = 0, tries = 0; s < constrained && tries < 100 * constrained + 100; ++tries) {
    std::vector<AxisVertex> cs{corner(), {}, corner(), {}};
    cs[1] = quotient_neighbour(d, pool, cs[0], rng);
    cs[3] = quotient_neighbour(d, pool, cs[2], rng);
    QuadrilateralInput in;
    for (int k = 0; k < 4; ++k) in.sides[k] = quotient_geodesic(d, cs[k], cs[(k + 1) % 4]);
    in.scramble = seed + 7919 * (tries + 1);
    const RotationWord u0 = normal_form(d, random_rotation_word(pool, rng, 2));
    const RotationWord u2 = normal_form(d, random_rotation_word(pool, rng, 2));
    const Path s0 = lift_path(d, in.sides[0], tb.act(shadow(d.family(), u0), cs[0]), -1, &rng);
    const Path s2 = lift_path(d, in.sides[2], tb.act(shadow(d.family(), u2), cs[2]), -1, &rng);
    in.side0 = s0;
    in.side2 = s2;
    const auto q = lift_quadrilateral(d, in);
    r.bends += q.bends;
    ++r.constrained;
    ++s;
    if (!q.constraints_ok || !closed_over(d, in, q) || q.translators.size() != 2) {
      ++r.failures;
      note(r.witnesses, "constrained " + std::to_string(s));
      continue;
    }
    if (translate(d, q.translators[0], s0) != q.sides[0] || translate(d, q.translators[1], s2) != q.sides[2]) {
      ++r.translate_failures;
      note(r.witnesses, "translate " + std::to_string(s));
    }
  }
  if (r.constrained < constrained) ++r.failures;
  return r;
}

}  // namespace pcx
