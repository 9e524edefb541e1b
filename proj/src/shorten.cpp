#include <algorithm>

#include "pcx/error.hpp"
#include "pcx/pivot.hpp"

namespace pcx {

const char* shorten_case_name(ShortenCase c) {
  switch (c) {
    case ShortenCase::LevelZero: return "level-zero";
    case ShortenCase::SingleSyllable: return "single-syllable";
    case ShortenCase::PivotHit: return "pivot-hit";
    case ShortenCase::InsideWindmill: return "inside-windmill";
    case ShortenCase::JScan: return "j-scan";
  }
  return "?";
}

namespace {

RotationWord power(const RotationWord& h, long long e) {
  const RotationWord base = e >= 0 ? h : inverse(h);
  RotationWord r;
  for (long long i = 0; i < (e >= 0 ? e : -e); ++i) r = concat(r, base);
  return r;
}

}  // namespace

ShortenResult shorten(const Descent& d, const AxisVertex& x, const RotationWord& h, const ShortenOptions& opt) {
  const TreeBackend& tb = d.backend();
  const SpinningFamily& fam = d.family();
  if (!is_normal_form(d, h)) throw Error(ErrorKind::NotNormalForm, "shorten needs a normal-form word: " + h.str());
  const Word hs = shadow(fam, h);
  const AxisVertex hx = tb.act(hs, x);
  if (hx == x) throw Error(ErrorKind::NoOp, "h fixes x; nothing to shorten");

  const ConjugateForm cf = complexity(d, h);
  ShortenResult res;
  res.before = cf.c;

  // Removing syllable `li` of the core, conjugated by h^P.
  auto remove = [&](std::size_t li, long long P) {
    const RotationWord conj = normal_form(d, concat(power(h, P), cf.g, slice(cf.core, 0, li)));
    const RotationLetter hk = cf.core.letters[li];
    res.v = tb.act(shadow(fam, conj), hk.v);
    res.h_v = normal_form(d, concat(conj, RotationWord{{{hk.v, -hk.k}}}, inverse(conj)));
    res.J = P;
  };

  if (cf.c.i == 0) {
    res.branch = ShortenCase::LevelZero;
    remove(0, 0);
  } else if (cf.core.size() == 1) {
    // h = g h_1 g^-1 rotates about g v_1, exactly as in level zero.
    res.branch = ShortenCase::SingleSyllable;
    remove(0, 0);
  } else {
    // Pivots of the core, carried by g to the essential pivots of h.
    const Word g = shadow(fam, cf.g);
    std::vector<std::size_t> top;
    std::vector<AxisVertex> ess;
    Word prefix;
    for (std::size_t i = 0; i < cf.core.size(); ++i) {
      const RotationLetter& l = cf.core.letters[i];
      if (d.depth(l.v) == cf.c.i) {
        top.push_back(i);
        ess.push_back(tb.act(mul(g, prefix), l.v));
      }
      prefix = mul(prefix, fam.rotation(l.v, l.k));
    }
    std::size_t hit = ess.size();
    for (std::size_t k = 0; k < ess.size() && hit == ess.size(); ++k)
      if (ess[k] == x || ess[k] == hx) hit = k;
    if (hit < ess.size()) {
      res.branch = ShortenCase::PivotHit;
      remove(top[hit], 0);
    } else if (d.stage(tb.act(inverse(g), x)) <= cf.c.i) {
      res.branch = ShortenCase::InsideWindmill;
      remove(top[0], 0);
    } else {
      res.branch = ShortenCase::JScan;
      const long long C = opt.exponent_cap >= 0 ? opt.exponent_cap : 2 * static_cast<long long>(h.size()) + 8;
      const AxisVertex& w = ess[0];
      // a[j + C + 1] = h^j w for j in [-C-1, C+1].
      std::vector<AxisVertex> a(static_cast<std::size_t>(2 * C + 3));
      Word fwd, bwd;
      const Word hinv = inverse(hs);
      a[static_cast<std::size_t>(C + 1)] = w;
      for (long long j = 1; j <= C + 1; ++j) {
        fwd = mul(fwd, hs);
        bwd = mul(bwd, hinv);
        a[static_cast<std::size_t>(C + 1 + j)] = tb.act(fwd, w);
        a[static_cast<std::size_t>(C + 1 - j)] = tb.act(bwd, w);
      }
      auto at = [&](long long j) -> const AxisVertex& { return a[static_cast<std::size_t>(j + C + 1)]; };
      std::vector<long long> c(static_cast<std::size_t>(2 * C + 2));
      auto cj = [&](long long j) -> long long& { return c[static_cast<std::size_t>(j + C)]; };
      for (long long j = -C; j <= C + 1; ++j) {
        if (at(j) == x || at(j) == at(j - 1))
          throw Error(ErrorKind::Rejected, "J-scan met a degenerate pivot translate");
        cj(j) = tb.distance(at(j), at(j - 1), x);
      }
      long long J = -C - 1;
      for (long long j = -C; j <= C + 1; ++j)
        if (cj(j) > opt.theta) J = j;
      bool settled = J >= -C && J <= C;
      for (long long j = -C; j <= J && settled; ++j) settled = cj(j) > opt.theta;
      if (!settled)
        throw Error(ErrorKind::CapExceeded, "J-scan did not settle within |j| <= " + std::to_string(C));
      remove(top[0], 4 * cj(J) <= fam.L ? J : J + 1);
    }
  }
  res.product = normal_form(d, concat(res.h_v, h));
  res.after = complexity(d, res.product).c;
  return res;
}

}  // namespace pcx
