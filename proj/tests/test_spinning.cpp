#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "pcx/complex_graph.hpp"
#include "pcx/error.hpp"
#include "pcx/quotient_group.hpp"
#include "pcx/rotation_word.hpp"
#include "pcx/spinning.hpp"
#include "pcx/tree_system.hpp"

using namespace pcx;

namespace {

const TreeBackend& ab() {
  static TreeBackend tb(2, parse_word("ab"));
  return tb;
}

// Spinning minimum from direct projections of w and h·w, without translating to the base axis.
long long direct_spin_min(const SpinningFamily& fam, const std::vector<AxisVertex>& win, std::mt19937_64& rng,
                          int samples) {
  const TreeBackend& tb = *fam.backend;
  std::uniform_int_distribution<std::size_t> pick(0, win.size() - 1);
  long long best = -1;
  for (int s = 0; s < samples; ++s) {
    const auto& v = win[pick(rng)];
    const auto& w = win[pick(rng)];
    if (v == w) continue;
    for (long long k : {-2, -1, 1, 2}) {
      const AxisVertex hw = tb.act(fam.rotation(v, k), w);
      const long long d = tb.distance(v, w, hw);
      if (best < 0 || d < best) best = d;
    }
  }
  return best;
}

RotationWord random_normal_word(const std::vector<AxisVertex>& canon, std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<std::size_t> pick(0, canon.size() - 1);
  std::uniform_int_distribution<long long> ex(1, 3);
  RotationWord w;
  while (static_cast<int>(w.size()) < len) {
    const auto& v = canon[pick(rng)];
    if (!w.empty() && w.letters.back().v == v) continue;
    w.letters.push_back({v, (rng() & 1) ? ex(rng) : -ex(rng)});
  }
  return w;
}

}  // namespace

TEST(Family, DeclaredConstantMatchesDirectMinimum) {
  std::mt19937_64 rng(5);
  auto win = ab().window(3);
  for (long long p : {1, 10}) {
    auto fam = make_family(ab(), p);
    EXPECT_EQ(fam.L, 2 * p);
    EXPECT_EQ(direct_spin_min(fam, win, rng, 400), 2 * p);
  }
  EXPECT_THROW(make_family(ab(), 0), Error);
  EXPECT_THROW(TreeBackend(2, parse_word("abab")), Error);
}

TEST(Family, EquivarianceOfRotationGroups) {
  auto fam = make_family(ab(), 3);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const Word g = reduce(oracle::random_word(rng, 2, 8));
    const AxisVertex gv = ab().act(g, fam.v0);
    EXPECT_EQ(fam.rotation(gv, 1), mul(g, power(ab().f(), 3), inverse(g)));
  }
}

TEST(VerifySpinning, ThresholdsAndWitnesses) {
  auto win = ab().window(4);
  auto fam10 = make_family(ab(), 10);
  auto zero = verify_spinning(fam10, win, 0, 3);
  EXPECT_TRUE(zero.pass);
  auto r = verify_spinning(fam10, win, 20, 3);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.minimum, 20);
  EXPECT_EQ(r.checked, win.size() * (win.size() - 1) * 6);
  auto over = verify_spinning(fam10, win, 21, 3);
  EXPECT_FALSE(over.pass);
  ASSERT_FALSE(over.witnesses.empty());
  const auto& w = over.witnesses[0];
  EXPECT_EQ(ab().distance(win[w.v], win[w.w], ab().act(fam10.rotation(win[w.v], w.k), win[w.w])), w.value);
  auto fam1 = make_family(ab(), 1);
  auto bad = verify_spinning(fam1, win, 100, 3);
  EXPECT_FALSE(bad.pass);
  EXPECT_EQ(bad.minimum, 2);
}

TEST(QuotientGroup, NormalFormBasics) {
  QuotientGroup q(ab(), 3);
  EXPECT_TRUE(q.is_trivial(Word{}));
  EXPECT_TRUE(q.is_trivial(power(parse_word("ab"), 3)));
  EXPECT_FALSE(q.is_trivial(power(parse_word("ab"), 2)));
  EXPECT_TRUE(q.is_trivial(mul(parse_word("ba"), power(parse_word("ab"), 3), parse_word("AB"))));
  EXPECT_FALSE(q.is_trivial(parse_word("a")));
  EXPECT_EQ(q.key(parse_word("abab")), q.key(parse_word("BA")));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const Word g = oracle::random_word(rng, 2, 10), h = oracle::random_word(rng, 2, 10);
    // Normal form is a homomorphism invariant: g h^-1 trivial iff keys agree.
    EXPECT_EQ(q.key(g) == q.key(h), q.is_trivial(mul(g, inverse(h))));
  }
}

TEST(Descent, CanonicalFormsAreConsistent) {
  auto fam = make_family(ab(), 3);
  Descent d(fam);
  auto win = ab().window(5);
  for (const auto& x : win) {
    const auto& r = d.descend(x);
    EXPECT_EQ(ab().act(shadow(fam, RotationWord{r.word}), x), r.canon) << to_string(x.rep);
    EXPECT_TRUE(d.is_canonical(r.canon));
    EXPECT_EQ(static_cast<int>(r.chain.size()) - 1, r.depth);
    for (const auto& y : r.chain) EXPECT_TRUE(d.is_canonical(y));
    for (const auto& l : r.word) EXPECT_TRUE(d.is_canonical(l.v));
    EXPECT_LE(ab().distance_to_identity(r.canon), ab().distance_to_identity(x));
  }
}

TEST(Descent, CanonIsAnOrbitInvariant) {
  auto fam = make_family(ab(), 3);
  Descent d(fam);
  auto win = ab().window(4);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> pick(0, win.size() - 1);
  for (int i = 0; i < 300; ++i) {
    const auto& x = win[pick(rng)];
    const auto& u = win[pick(rng)];
    const long long k = static_cast<long long>(rng() % 5) - 2;
    const AxisVertex y = ab().act(fam.rotation(u, k), x);
    EXPECT_EQ(d.canon(y), d.canon(x));
  }
}

TEST(Descent, ClassesMatchQuotientGroupOracle) {
  for (long long p : {2, 3}) {
    auto fam = make_family(ab(), p);
    Descent d(fam);
    QuotientGroup q(ab(), p);
    auto win = ab().window(3);
    for (std::size_t i = 0; i < win.size(); ++i)
      for (std::size_t j = i; j < win.size(); ++j)
        EXPECT_EQ(d.canon(win[i]) == d.canon(win[j]), same_h_orbit(q, ab(), p, win[i], win[j]))
            << p << ' ' << to_string(win[i].rep) << ' ' << to_string(win[j].rep);
  }
}

TEST(Descent, QuotientTreeValence) {
  for (long long p : {2, 5}) {
    auto fam = make_family(ab(), p);
    Descent d(fam);
    auto win = ab().window(static_cast<int>(p) + 1);
    std::set<Word> depth1;
    for (const auto& x : win)
      if (d.is_canonical(x) && d.depth(x) == 1) depth1.insert(x.rep);
    EXPECT_EQ(depth1.size(), static_cast<std::size_t>(2 * p));
  }
  // Children of one depth-1 class: 2p - 1 more neighbours in the quotient tree.
  auto fam = make_family(ab(), 2);
  Descent d(fam);
  const AxisVertex v1 = ab().canonical(parse_word("a"));
  ASSERT_EQ(d.depth(v1), 1);
  std::set<Word> children;
  for (const auto& x : ab().window(5))
    if (d.is_canonical(x) && d.depth(x) == 2 && d.parent(x) == v1) children.insert(x.rep);
  EXPECT_EQ(children.size(), 3u);
}

TEST(Windmill, FirstStages) {
  auto fam = make_family(ab(), 5);
  Descent d(fam);
  for (int r : {5, 6}) {
    TreeSystem sys(ab(), r);
    auto g = build_complex(sys, 0);
    auto wm = build_windmill(d, sys.vertices(), g, 2);
    ASSERT_EQ(wm.stages.size(), 3u);
    const auto& s0 = wm.stages[0];
    EXPECT_EQ(s0.W, std::vector<AxisVertex>{fam.v0});
    EXPECT_EQ(s0.O, std::vector<AxisVertex>{fam.v0});
    const auto& s1 = wm.stages[1];
    std::vector<AxisVertex> ball{fam.v0};
    for (std::uint32_t z : g.adj[0]) ball.push_back(sys.vertex(z));
    std::sort(ball.begin(), ball.end());
    auto N1 = s1.N;
    std::sort(N1.begin(), N1.end());
    EXPECT_EQ(N1, ball);
    EXPECT_EQ(s1.L.size(), ball.size() - 1);
    EXPECT_EQ(s1.O.size(), 10u) << "radius " << r;
    for (const auto& st : wm.stages) {
      EXPECT_TRUE(st.W_connected);
      EXPECT_TRUE(st.contains_previous);
      EXPECT_TRUE(st.L_matches);
      EXPECT_TRUE(st.O_one_per_orbit);
    }
  }
}

TEST(Windmill, BoundedOrbitsAgreeWithDescent) {
  auto fam = make_family(ab(), 2);
  Descent d(fam);
  auto win = ab().window(4);
  auto o3 = bounded_orbits(d, win, 3, 4);
  auto o4 = bounded_orbits(d, win, 4, 5);
  for (const auto& cls : o3.classes)
    for (std::uint32_t v : cls) EXPECT_EQ(d.canon(win[v]), d.canon(win[cls[0]]));
  // Every window vertex whose canonical form is also in the window reaches it.
  std::size_t reached = 0, eligible = 0;
  std::unordered_map<Word, std::uint32_t, WordHash> idx;
  for (std::uint32_t i = 0; i < win.size(); ++i) idx[win[i].rep] = i;
  for (std::uint32_t i = 0; i < win.size(); ++i) {
    auto it = idx.find(d.canon(win[i]).rep);
    ASSERT_NE(it, idx.end());
    ++eligible;
    if (o3.class_of[i] == o3.class_of[it->second]) ++reached;
  }
  EXPECT_EQ(reached, eligible);
  EXPECT_EQ(o3.classes.size(), o4.classes.size());
}

TEST(RotationWord, SerializationRoundTrip) {
  RotationWord w;
  w.letters = {{AxisVertex{}, 2}, {AxisVertex{parse_word("a")}, -1}, {AxisVertex{parse_word("Ba")}, 3}};
  EXPECT_EQ(w.str(), "(1^2)(a^-1)(Ba^3)");
  EXPECT_EQ(RotationWord::parse(w.str()), w);
  EXPECT_EQ(RotationWord::parse("1").str(), "1");
  EXPECT_THROW(RotationWord::parse("(a^0)"), Error);
  EXPECT_THROW(RotationWord::parse("(a 1)"), Error);
}

TEST(RotationWord, NormalFormExamples) {
  auto fam = make_family(ab(), 5);
  Descent d(fam);
  const AxisVertex v = ab().canonical(parse_word("a"));
  const AxisVertex w = ab().canonical(parse_word("B"));
  ASSERT_TRUE(d.is_canonical(v));
  RotationWord c1{{{v, 1}, {v, -1}}};
  auto n1 = normal_form(d, c1);
  EXPECT_TRUE(n1.empty());
  EXPECT_EQ(level(d, n1), -1);
  EXPECT_EQ(syllable_length(d, n1), 0u);
  RotationWord single{{{fam.v0, 4}}};
  EXPECT_EQ(normal_form(d, single), single);
  EXPECT_EQ(level(d, single), 0);
  EXPECT_EQ(syllable_length(d, single), 1u);
  RotationWord c3{{{v, 1}, {w, 1}, {w, -1}, {v, 2}}};
  EXPECT_EQ(normal_form(d, c3), (RotationWord{{{v, 3}}}));
  EXPECT_THROW(normal_form(d, RotationWord{{{ab().canonical(parse_word("aaaaaaa")), 1}}}, 3), Error);
}

TEST(RotationWord, NormalFormIsIdempotentAndShadowPreserving) {
  auto fam = make_family(ab(), 5);
  Descent d(fam);
  auto win = ab().window(5);
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> pick(0, win.size() - 1);
  for (int s = 0; s < 200; ++s) {
    RotationWord w;
    const int len = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i) w.letters.push_back({win[pick(rng)], static_cast<long long>(rng() % 5) - 2});
    auto n = normal_form(d, w);
    EXPECT_TRUE(is_normal_form(d, n));
    EXPECT_EQ(normal_form(d, n), n);
    EXPECT_EQ(reduce(shadow(fam, n)), reduce(shadow(fam, w)));
    int mx = -1;
    for (const auto& l : n.letters) mx = std::max(mx, d.depth(l.v));
    EXPECT_EQ(level(d, n), mx);
  }
}

TEST(RotationWord, FreeProductCertificate) {
  auto fam = make_family(ab(), 5);
  Descent d(fam);
  std::vector<AxisVertex> canon;
  for (const auto& x : ab().window(6))
    if (d.is_canonical(x)) canon.push_back(x);
  std::mt19937_64 rng(21);
  for (int s = 0; s < 200; ++s) {
    auto w = random_normal_word(canon, rng, 1 + static_cast<int>(rng() % 8));
    ASSERT_TRUE(is_normal_form(d, w));
    EXPECT_FALSE(reduce(shadow(fam, w)).empty()) << w.str();
  }
}

TEST(RotationWord, SyllablesGroupLowerRuns) {
  auto fam = make_family(ab(), 5);
  Descent d(fam);
  const AxisVertex v1 = ab().canonical(parse_word("a"));  // depth 1
  ASSERT_EQ(d.depth(v1), 1);
  AxisVertex v2;
  for (const auto& x : ab().window(4))
    if (d.is_canonical(x) && d.depth(x) == 2) {
      v2 = x;
      break;
    }
  RotationWord w{{{fam.v0, 1}, {v1, 2}, {v2, 1}, {fam.v0, -1}, {v1, 1}, {fam.v0, 2}, {v2, -2}}};
  ASSERT_TRUE(is_normal_form(d, w));
  EXPECT_EQ(level(d, w), 2);
  auto syl = syllables(d, w);
  ASSERT_EQ(syl.size(), 4u);
  EXPECT_FALSE(syl[0].top);
  EXPECT_EQ(syl[0].end, 2u);
  EXPECT_TRUE(syl[1].top);
  EXPECT_FALSE(syl[2].top);
  EXPECT_EQ(syl[2].end - syl[2].begin, 3u);
  EXPECT_TRUE(syl[3].top);
}
