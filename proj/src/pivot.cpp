#include "pcx/pivot.hpp"

#include "pcx/error.hpp"

namespace pcx {

namespace {

void require_normal(const Descent& d, const RotationWord& h) {
  if (!is_normal_form(d, h)) throw Error(ErrorKind::NotNormalForm, "expected a normal-form rotation word: " + h.str());
}

// Pivots of a normal-form word read from its own syllables.
PivotData read_pivots(const Descent& d, const RotationWord& w) {
  PivotData out;
  out.expression = w;
  const int lv = level(d, w);
  if (lv <= 0) return out;
  const SpinningFamily& fam = d.family();
  const TreeBackend& tb = d.backend();
  Word prefix;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const RotationLetter& l = w.letters[i];
    if (d.depth(l.v) == lv) {
      out.pivots.push_back(tb.act(prefix, l.v));
      out.letter.push_back(i);
    }
    prefix = mul(prefix, fam.rotation(l.v, l.k));
  }
  return out;
}

void push_merge(std::vector<RotationLetter>& out, const RotationLetter& l) {
  if (!out.empty() && out.back().v == l.v) {
    out.back().k += l.k;
    if (out.back().k == 0) out.pop_back();
  } else if (l.k != 0) {
    out.push_back(l);
  }
}

}  // namespace

ConjugateForm complexity(const Descent& d, const RotationWord& h) {
  require_normal(d, h);
  ConjugateForm out;
  std::vector<RotationLetter> c = h.letters;
  // Peel: a m b with a, b at one vertex equals a (m (b a)) a^-1.
  while (c.size() >= 2 && c.front().v == c.back().v) {
    const RotationLetter a = c.front();
    out.g.letters.push_back(a);
    c.erase(c.begin());
    push_merge(c, a);
  }
  out.core.letters = std::move(c);
  if (out.core.empty()) return out;  // (-1, 0)
  const int lv = level(d, out.core);
  if (lv == 0) {
    out.c = {0, 1};
    return out;
  }
  // A lower run at both ends merges cyclically: move the leading run to the end.
  auto lower = [&](const RotationLetter& l) { return d.depth(l.v) < lv; };
  if (lower(out.core.letters.front()) && lower(out.core.letters.back())) {
    std::size_t j = 0;
    while (lower(out.core.letters[j])) ++j;
    RotationWord run = slice(out.core, 0, j);
    out.core = concat(slice(out.core, j, out.core.size()), run);
    out.g = concat(out.g, run);
  }
  out.g = normal_form(d, out.g);
  out.c = {lv, syllable_length(d, out.core)};
  return out;
}

PivotData essential_pivots(const Descent& d, const RotationWord& h) {
  const ConjugateForm cf = complexity(d, h);
  PivotData out = read_pivots(d, cf.core);
  const Word g = shadow(d.family(), cf.g);
  for (auto& w : out.pivots) w = d.backend().act(g, w);
  out.essential.assign(out.pivots.size(), true);
  out.g = cf.g;
  return out;
}

PivotData pivot_points(const Descent& d, const RotationWord& h) {
  require_normal(d, h);
  PivotData out = read_pivots(d, h);
  out.essential.assign(out.pivots.size(), false);
  if (out.pivots.empty()) return out;
  const PivotData ess = essential_pivots(d, h);
  for (std::size_t i = 0; i < out.pivots.size(); ++i)
    for (const auto& w : ess.pivots)
      if (w == out.pivots[i]) out.essential[i] = true;
  return out;
}

}  // namespace pcx
