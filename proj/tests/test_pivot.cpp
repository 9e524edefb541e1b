#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "oracles.hpp"
#include "pcx/error.hpp"
#include "pcx/pivot.hpp"
#include "pcx/suites.hpp"

using namespace pcx;

namespace {

const TreeBackend& ab() {
  static TreeBackend tb(2, parse_word("ab"));
  return tb;
}

struct Fixture {
  SpinningFamily fam;
  Descent d;
  std::vector<AxisVertex> pool;  // canonical vertices of depth <= 2
  explicit Fixture(long long p = 5) : fam(make_family(ab(), p)), d(fam), pool(canonical_pool(d, ab().window(4), 2)) {}
};

Fixture& fx() {
  static Fixture f;
  return f;
}

RotationWord nf(const RotationWord& w) { return normal_form(fx().d, w); }
RotationWord letter(const AxisVertex& v, long long k) { return RotationWord{{{v, k}}}; }

// A random element of level >= 1 with at most `len` letters.
RotationWord random_high(std::mt19937_64& rng, int len) {
  for (;;) {
    RotationWord h = nf(random_rotation_word(fx().pool, rng, 1 + static_cast<int>(rng() % len)));
    if (level(fx().d, h) >= 1) return h;
  }
}

// Independent complexity: the best (level, linear syllable count) over conjugates by prefixes.
Complexity brute_complexity(const Descent& d, const RotationWord& h) {
  Complexity best{1 << 20, 0};
  for (std::size_t j = 0; j <= h.size(); ++j) {
    const RotationWord p = slice(h, 0, j);
    const RotationWord c = normal_form(d, concat(inverse(p), h, p));
    Complexity cc{level(d, c), c.empty() ? 0 : syllable_length(d, c)};
    if (cc < best) best = cc;
  }
  return best;
}

std::vector<AxisVertex> translate(const Descent& d, const RotationWord& g, const std::vector<AxisVertex>& xs) {
  const Word s = shadow(d.family(), g);
  std::vector<AxisVertex> out;
  for (const auto& x : xs) out.push_back(d.backend().act(s, x));
  return out;
}

}  // namespace

TEST(PivotPoints, Examples) {
  auto& f = fx();
  const AxisVertex v0 = ab().base();
  EXPECT_TRUE(pivot_points(f.d, letter(v0, 2)).pivots.empty());
  EXPECT_TRUE(pivot_points(f.d, RotationWord{}).pivots.empty());
  const AxisVertex v1 = ab().canonical(parse_word("a"));
  ASSERT_TRUE(f.d.is_canonical(v1));
  ASSERT_EQ(f.d.depth(v1), 1);
  auto single = pivot_points(f.d, letter(v1, -1));
  ASSERT_EQ(single.pivots.size(), 1u);
  EXPECT_EQ(single.pivots[0], v1);
  EXPECT_TRUE(single.essential[0]);
  // Two top letters at distinct depth-1 vertices.
  AxisVertex v2;
  for (const auto& v : f.pool)
    if (f.d.depth(v) == 1 && v != v1) {
      v2 = v;
      break;
    }
  const RotationWord h = concat(letter(v1, 2), letter(v2, -1));
  auto two = pivot_points(f.d, h);
  ASSERT_EQ(two.pivots.size(), 2u);
  EXPECT_EQ(two.pivots[0], v1);
  EXPECT_EQ(two.pivots[1], ab().act(f.fam.rotation(v1, 2), v2));
  // Non-normal input.
  const RotationWord bad = concat(letter(v1, 1), letter(v1, 1));
  try {
    pivot_points(f.d, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNormalForm);
  }
}

TEST(PivotPoints, Facts) {
  auto& f = fx();
  const TreeBackend& tb = ab();
  const AxisVertex v0 = tb.base();
  const long long L = f.fam.L, theta = 0;
  std::mt19937_64 rng(31);
  std::size_t checked = 0;
  for (int s = 0; s < 100; ++s) {
    const RotationWord h = random_high(rng, 6);
    const AxisVertex hv0 = tb.act(shadow(f.fam, h), v0);
    const auto piv = pivot_points(f.d, h).pivots;
    ASSERT_FALSE(piv.empty()) << h.str();
    for (std::size_t a = 0; a < piv.size(); ++a) {
      ASSERT_NE(piv[a], v0);
      EXPECT_GT(2 * tb.distance(piv[a], v0, hv0), L) << h.str();
      for (std::size_t b = a + 1; b < piv.size(); ++b) {
        EXPECT_LE(tb.distance(piv[b], v0, piv[a]), theta) << h.str();
        EXPECT_GT(2 * tb.distance(piv[a], v0, piv[b]), L - 2 * theta) << h.str();
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 50u);
}

TEST(Complexity, Examples) {
  auto& f = fx();
  const Complexity id = complexity(f.d, RotationWord{}).c;
  EXPECT_EQ(id.i, -1);
  EXPECT_EQ(id.n, 0u);
  const Complexity r = complexity(f.d, letter(ab().base(), -3)).c;
  EXPECT_EQ(r.i, 0);
  EXPECT_EQ(r.n, 1u);
}

TEST(Complexity, MatchesPrefixConjugateOracleAndIsConjugationInvariant) {
  auto& f = fx();
  std::mt19937_64 rng(44);
  for (int s = 0; s < 150; ++s) {
    const RotationWord h = nf(random_rotation_word(f.pool, rng, 1 + static_cast<int>(rng() % 7)));
    const ConjugateForm cf = complexity(f.d, h);
    EXPECT_EQ(cf.c, brute_complexity(f.d, h)) << h.str();
    // The form really conjugates to h.
    EXPECT_EQ(nf(concat(cf.g, cf.core, inverse(cf.g))), h);
    const RotationWord g = nf(random_rotation_word(f.pool, rng, 1 + static_cast<int>(rng() % 4)));
    EXPECT_EQ(complexity(f.d, nf(concat(g, h, inverse(g)))).c, cf.c);
  }
}

TEST(EssentialPivots, MinimalSyllableLengthMeansAllPivotsEssential) {
  auto& f = fx();
  std::mt19937_64 rng(50);
  int hits = 0;
  for (int s = 0; s < 300 && hits < 60; ++s) {
    const RotationWord h = random_high(rng, 6);
    const ConjugateForm cf = complexity(f.d, h);
    if (syllable_length(f.d, h) != cf.c.n || level(f.d, h) != cf.c.i) continue;
    ++hits;
    const PivotData all = pivot_points(f.d, h);
    EXPECT_EQ(essential_pivots(f.d, h).pivots, all.pivots) << h.str();
    for (bool e : all.essential) EXPECT_TRUE(e);
  }
  EXPECT_GE(hits, 30);
}

TEST(EssentialPivots, ConjugationLaw) {
  auto& f = fx();
  std::mt19937_64 rng(61);
  int exact = 0;
  for (int s = 0; s < 200; ++s) {
    const RotationWord h = random_high(rng, 5);
    const RotationWord g = nf(random_rotation_word(f.pool, rng, 1 + static_cast<int>(rng() % 5)));
    const RotationWord conj = nf(concat(g, h, inverse(g)));
    const auto lhs = essential_pivots(f.d, conj).pivots;
    const auto rhs = translate(f.d, g, essential_pivots(f.d, h).pivots);
    ASSERT_EQ(lhs.size(), rhs.size());
    const bool literal = conj.size() == 2 * g.size() + h.size();
    if (literal) {
      // No letter of g merges with h: equality as ordered lists.
      EXPECT_EQ(lhs, rhs) << h.str() << " by " << g.str();
      ++exact;
    } else {
      // Otherwise the lists agree up to translation by powers of the conjugate.
      const Word c = shadow(f.fam, conj), ci = inverse(c);
      for (const auto& w : rhs) {
        bool found = false;
        for (const auto& u : lhs)
          found |= u == w || ab().act(c, u) == w || ab().act(ci, u) == w;
        EXPECT_TRUE(found) << h.str() << " by " << g.str();
      }
    }
  }
  EXPECT_GE(exact, 100);
}

TEST(EssentialPivots, PowerLaw) {
  auto& f = fx();
  std::mt19937_64 rng(72);
  for (int s = 0; s < 100; ++s) {
    const RotationWord h = random_high(rng, 6);
    const auto one = essential_pivots(f.d, h).pivots;
    for (int k : {2, 3}) {
      RotationWord hk;
      for (int j = 0; j < k; ++j) hk = concat(hk, h);
      hk = nf(hk);
      std::vector<AxisVertex> expect;
      RotationWord hj;
      for (int j = 0; j < k; ++j) {
        for (const auto& w : translate(f.d, hj, one))
          if (std::find(expect.begin(), expect.end(), w) == expect.end()) expect.push_back(w);
        hj = nf(concat(hj, h));
      }
      EXPECT_EQ(essential_pivots(f.d, hk).pivots, expect) << h.str() << " ^" << k;
    }
  }
}

TEST(Shorten, LevelZeroCase) {
  auto& f = fx();
  std::mt19937_64 rng(80);
  const AxisVertex v0 = ab().base();
  const auto xs = ab().window(3);
  for (int s = 0; s < 40; ++s) {
    const RotationWord g = nf(random_rotation_word(f.pool, rng, static_cast<int>(rng() % 4)));
    const RotationWord h = nf(concat(g, letter(v0, 1 + static_cast<long long>(rng() % 3)), inverse(g)));
    const AxisVertex& x = xs[rng() % xs.size()];
    if (ab().act(shadow(f.fam, h), x) == x) continue;
    const ShortenResult r = shorten(f.d, x, h);
    EXPECT_EQ(r.branch, ShortenCase::LevelZero);
    EXPECT_EQ(r.v, ab().act(shadow(f.fam, g), v0));
    EXPECT_TRUE(r.product.empty()) << h.str();
  }
}

TEST(Shorten, PivotHitUsesThatPivot) {
  auto& f = fx();
  std::mt19937_64 rng(81);
  int runs = 0;
  for (int s = 0; s < 60; ++s) {
    const RotationWord h = random_high(rng, 5);
    const auto ess = essential_pivots(f.d, h).pivots;
    const AxisVertex& x = ess[rng() % ess.size()];
    if (ab().act(shadow(f.fam, h), x) == x) continue;
    const ShortenResult r = shorten(f.d, x, h);
    EXPECT_EQ(r.branch, ShortenCase::PivotHit);
    EXPECT_TRUE(r.v == x || r.v == ab().act(shadow(f.fam, h), x));
    EXPECT_LT(r.after, r.before);
    ++runs;
  }
  EXPECT_GT(runs, 30);
}

TEST(Shorten, NoOpWhenFixed) {
  auto& f = fx();
  try {
    shorten(f.d, ab().base(), letter(ab().base(), 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoOp);
  }
}

TEST(Shorten, RandomPostconditionsAndTermination) {
  auto& f = fx();
  const TreeBackend& tb = ab();
  const auto xs = tb.window(3);
  std::mt19937_64 rng(90);
  std::map<ShortenCase, int> seen;
  int samples = 0;
  while (samples < 100) {
    const RotationWord h = nf(random_rotation_word(f.pool, rng, 1 + static_cast<int>(rng() % 6)));
    const AxisVertex& x = xs[rng() % xs.size()];
    if (h.empty() || tb.act(shadow(f.fam, h), x) == x) continue;
    ++samples;
    const Complexity c0 = complexity(f.d, h).c;
    const std::size_t bound = c0.n * static_cast<std::size_t>(c0.i + 2) + 4;
    RotationWord cur = h;
    std::size_t steps = 0;
    while (!cur.empty() && tb.act(shadow(f.fam, cur), x) != x) {
      const AxisVertex hx = tb.act(shadow(f.fam, cur), x);
      const ShortenResult r = shorten(f.d, x, cur);
      ++seen[r.branch];
      // h_v fixes v, and the product is h_v h.
      EXPECT_EQ(tb.act(shadow(f.fam, r.h_v), r.v), r.v);
      EXPECT_EQ(reduce(shadow(f.fam, r.product)), reduce(mul(shadow(f.fam, r.h_v), shadow(f.fam, cur))));
      const bool on = r.v == x || r.v == hx || 10 * tb.distance(r.v, x, hx) > f.fam.L;
      EXPECT_TRUE(on) << cur.str() << " at " << to_string(x.rep);
      EXPECT_LT(brute_complexity(f.d, r.product), brute_complexity(f.d, cur)) << cur.str();
      cur = r.product;
      ASSERT_LE(++steps, bound) << h.str();
    }
  }
  EXPECT_GT(seen[ShortenCase::JScan], 0);
  EXPECT_GT(seen[ShortenCase::InsideWindmill] + seen[ShortenCase::PivotHit], 0);
}

TEST(Bend, IdentityInverseAndQuotientImage) {
  auto& f = fx();
  const TreeBackend& tb = ab();
  std::mt19937_64 rng(100);
  for (int s = 0; s < 30; ++s) {
    const AxisVertex a = f.pool[rng() % f.pool.size()], b = f.pool[rng() % f.pool.size()];
    const auto q = quotient_geodesic(f.d, a, b);
    const Path path = lift_path(f.d, q, a);
    const std::size_t n0 = rng() % path.size();
    EXPECT_EQ(bend(f.d, path, n0, RotationWord{}), path);
    const RotationWord hv = descent_element(f.d, path[n0]);
    // An element of R_{path[n0]}: conjugate of a base-class letter.
    const AxisVertex c = f.d.canon(path[n0]);
    const RotationWord rv = nf(concat(inverse(hv), letter(c, 2), hv));
    ASSERT_EQ(tb.act(shadow(f.fam, rv), path[n0]), path[n0]);
    const Path bent = bend(f.d, path, n0, rv);
    EXPECT_EQ(bend(f.d, bent, n0, inverse(rv)), path);
    for (std::size_t t = 0; t < path.size(); ++t) EXPECT_EQ(f.d.canon(bent[t]), f.d.canon(path[t]));
    for (std::size_t t = 0; t + 1 < bent.size(); ++t) EXPECT_EQ(tb.intersection_distance(bent[t], bent[t + 1]), 1);
  }
  const Path p{ab().base(), ab().canonical(parse_word("a"))};
  try {
    bend(f.d, p, 0, letter(ab().canonical(parse_word("a")), 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Rejected);
  }
}

TEST(LiftPath, TrivialAndGeodesic) {
  auto& f = fx();
  const TreeBackend& tb = ab();
  EXPECT_EQ(lift_path(f.d, {tb.base()}, tb.base()), Path{tb.base()});
  const auto xs = tb.window(3);
  std::mt19937_64 rng(110);
  for (int s = 0; s < 60; ++s) {
    const AxisVertex& x = xs[rng() % xs.size()];
    const AxisVertex& z = f.pool[rng() % f.pool.size()];
    const auto q = quotient_geodesic(f.d, x, z);
    EXPECT_EQ(static_cast<long long>(q.size()) - 1, f.d.quotient_distance(x, z));
    const Path p = lift_path(f.d, q, x);
    ASSERT_EQ(p.size(), q.size());
    EXPECT_EQ(p.front(), x);
    for (std::size_t t = 0; t < p.size(); ++t) EXPECT_EQ(f.d.canon(p[t]), q[t]);
    for (std::size_t t = 0; t + 1 < p.size(); ++t) EXPECT_EQ(tb.intersection_distance(p[t], p[t + 1]), 1);
    // A lift of a quotient geodesic is a geodesic upstairs.
    EXPECT_EQ(tb.intersection_distance(p.front(), p.back()), static_cast<long long>(p.size()) - 1);
  }
  try {
    lift_path(f.d, quotient_geodesic(f.d, tb.base(), f.pool.back()), tb.base(), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WindowExhausted);
  }
}

namespace {

void expect_closed_geodesic(const Descent& d, const QuadrilateralInput& in, const QuadrilateralLift& q) {
  const TreeBackend& tb = d.backend();
  ASSERT_TRUE(q.closed);
  EXPECT_TRUE(q.h_final.empty());
  for (std::size_t k = 0; k < 4; ++k) {
    const Path& s = q.sides[k];
    ASSERT_EQ(s.size(), in.sides[k].size());
    EXPECT_EQ(s.back(), q.sides[(k + 1) % 4].front());
    for (std::size_t t = 0; t < s.size(); ++t) EXPECT_EQ(d.canon(s[t]), in.sides[k][t]);
    EXPECT_EQ(tb.intersection_distance(s.front(), s.back()), static_cast<long long>(s.size()) - 1);
  }
}

}  // namespace

TEST(LiftQuadrilateral, TrivialSides) {
  auto& f = fx();
  const AxisVertex c = f.pool[3];
  QuadrilateralInput in;
  for (auto& s : in.sides) s = {c};
  const auto q = lift_quadrilateral(f.d, in);
  expect_closed_geodesic(f.d, in, q);
  EXPECT_EQ(q.bends, 0u);
  for (const auto& s : q.sides) EXPECT_EQ(s, Path{c});
}

TEST(LiftQuadrilateral, TrianglesAndQuadrilateralsClose) {
  auto& f = fx();
  std::mt19937_64 rng(120);
  std::size_t bends = 0;
  for (int s = 0; s < 75; ++s) {
    const int corners = s < 50 ? 3 : 4;
    std::vector<AxisVertex> cs;
    for (int j = 0; j < corners; ++j) cs.push_back(f.pool[rng() % f.pool.size()]);
    if (corners == 3) cs.push_back(cs[2]);
    QuadrilateralInput in;
    for (int k = 0; k < 4; ++k) in.sides[k] = quotient_geodesic(f.d, cs[k], cs[(k + 1) % 4]);
    in.scramble = static_cast<std::uint64_t>(s);
    const auto q = lift_quadrilateral(f.d, in);
    expect_closed_geodesic(f.d, in, q);
    bends += q.bends;
  }
  EXPECT_GT(bends, 0u);
}

namespace {

// A quotient neighbour of a canonical vertex: its parent, or a child found in the pool.
AxisVertex neighbour(const Fixture& f, const AxisVertex& c, std::mt19937_64& rng) {
  std::vector<AxisVertex> opts;
  if (f.d.depth(c) > 0) opts.push_back(f.d.parent(c));
  for (const auto& v : f.pool)
    if (f.d.depth(v) > 0 && f.d.parent(v) == c) opts.push_back(v);
  return opts[rng() % opts.size()];
}

void run_constrained(Fixture& f, long long B, std::size_t side_len, int count, std::uint64_t seed) {
  const TreeBackend& tb = ab();
  std::mt19937_64 rng(seed);
  int done = 0;
  for (int s = 0; s < 400 && done < count; ++s) {
    // Corners 0 -> 1 and 2 -> 3 are side_len apart in the quotient tree.
    std::vector<AxisVertex> cs(4);
    cs[0] = f.pool[rng() % f.pool.size()];
    cs[1] = cs[0];
    for (std::size_t j = 0; j < side_len; ++j) cs[1] = neighbour(f, cs[1], rng);
    cs[2] = f.pool[rng() % f.pool.size()];
    cs[3] = cs[2];
    for (std::size_t j = 0; j < side_len; ++j) cs[3] = neighbour(f, cs[3], rng);
    QuadrilateralInput in;
    for (int k = 0; k < 4; ++k) in.sides[k] = quotient_geodesic(f.d, cs[k], cs[(k + 1) % 4]);
    if (in.sides[0].size() != side_len + 1 || in.sides[2].size() != side_len + 1) continue;
    in.B = B;
    in.scramble = seed + static_cast<std::uint64_t>(s);
    const RotationWord u0 = normal_form(f.d, random_rotation_word(f.pool, rng, 2));
    const RotationWord u2 = normal_form(f.d, random_rotation_word(f.pool, rng, 2));
    const Path s0 = lift_path(f.d, in.sides[0], tb.act(shadow(f.fam, u0), cs[0]), -1, &rng);
    const Path s2 = lift_path(f.d, in.sides[2], tb.act(shadow(f.fam, u2), cs[2]), -1, &rng);
    auto bound = [&](const Path& p) {
      long long m = 0;
      for (std::size_t t = 1; t + 1 < p.size(); ++t) m = std::max(m, tb.distance(p[t], p.front(), p.back()));
      return m;
    };
    if (bound(s0) > B || bound(s2) > B) continue;
    in.side0 = s0;
    in.side2 = s2;
    const auto q = lift_quadrilateral(f.d, in);
    EXPECT_TRUE(q.lift_condition);
    EXPECT_TRUE(q.constraints_ok);
    expect_closed_geodesic(f.d, in, q);
    ASSERT_EQ(q.translators.size(), 2u);
    EXPECT_EQ(translate(f.d, q.translators[0], s0), q.sides[0]);
    EXPECT_EQ(translate(f.d, q.translators[1], s2), q.sides[2]);
    ++done;
  }
  EXPECT_EQ(done, count);
}

}  // namespace

TEST(LiftQuadrilateral, ConstrainedSidesAreTranslates) {
  // Single quotient edges have all projections 0, so B = 0 and L_lift(0) = 1.
  run_constrained(fx(), 0, 1, 25, 130);
}

TEST(Suites, SampledDriversPass) {
  auto& f = fx();
  const auto facts = pivot_facts_suite(f.d, f.pool, 40, 5);
  EXPECT_TRUE(facts.pass());
  EXPECT_GT(facts.pairs, 0u);
  const auto laws = essential_laws_suite(f.d, f.pool, 30, 6);
  EXPECT_TRUE(laws.pass()) << (laws.witnesses.empty() ? "" : laws.witnesses[0]);
  EXPECT_EQ(laws.conjugation_literal, 30u);
  const auto sh = shorten_suite(f.d, f.pool, ab().window(3), 40, 7);
  EXPECT_TRUE(sh.pass());
  EXPECT_GT(sh.branches.count("j-scan"), 0u);
  const auto lift = lift_suite(f.d, f.pool, 10, 5, 5, 8);
  EXPECT_TRUE(lift.pass()) << (lift.witnesses.empty() ? "" : lift.witnesses[0]);
  EXPECT_EQ(lift.constrained, 5u);
  EXPECT_GT(lift.bends, 0u);
}
