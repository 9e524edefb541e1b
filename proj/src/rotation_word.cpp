#include "pcx/rotation_word.hpp"

#include <cctype>

#include "pcx/error.hpp"

namespace pcx {

std::string RotationWord::str() const {
  if (letters.empty()) return "1";
  std::string s;
  for (const auto& l : letters) s += "(" + to_string(l.v.rep) + "^" + std::to_string(l.k) + ")";
  return s;
}

RotationWord RotationWord::parse(const std::string& s, int k) {
  RotationWord w;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip();
  if (s.substr(i) == "1") return w;
  while (skip(), i < s.size()) {
    if (s[i] != '(') throw Error(ErrorKind::Parse, "rotation word: expected '(' at position " + std::to_string(i));
    const std::size_t caret = s.find('^', i);
    const std::size_t close = s.find(')', i);
    if (caret == std::string::npos || close == std::string::npos || caret > close)
      throw Error(ErrorKind::Parse, "rotation word: malformed letter at position " + std::to_string(i));
    const Word v = parse_word(s.substr(i + 1, caret - i - 1), k);
    long long e = 0;
    try {
      std::size_t used = 0;
      e = std::stoll(s.substr(caret + 1, close - caret - 1), &used);
      if (used != close - caret - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "rotation word: bad exponent at position " + std::to_string(caret + 1));
    }
    if (e == 0) throw Error(ErrorKind::Parse, "rotation word: zero exponent");
    w.letters.push_back({AxisVertex{v}, e});
    i = close + 1;
  }
  return w;
}

RotationWord inverse(const RotationWord& w) {
  RotationWord r;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back({it->v, -it->k});
  return r;
}

RotationWord concat(const RotationWord& a, const RotationWord& b) {
  RotationWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

RotationWord concat(const RotationWord& a, const RotationWord& b, const RotationWord& c) {
  return concat(concat(a, b), c);
}

Word shadow(const SpinningFamily& fam, const RotationWord& w) {
  Word out;
  for (const auto& l : w.letters) out = mul(out, fam.rotation(l.v, l.k));
  return out;
}

namespace {

void push_merge(std::vector<RotationLetter>& out, const RotationLetter& l) {
  if (!out.empty() && out.back().v == l.v) {
    out.back().k += l.k;
    if (out.back().k == 0) out.pop_back();
  } else if (l.k != 0) {
    out.push_back(l);
  }
}

}  // namespace

RotationWord normal_form(const Descent& d, const RotationWord& w, long long limit) {
  const TreeBackend& tb = d.backend();
  RotationWord r;
  for (const auto& l0 : w.letters) {
    const AxisVertex v = tb.canonical(l0.v.rep);
    if (limit >= 0 && tb.distance_to_identity(v) > limit)
      throw Error(ErrorKind::OutOfWindow, "letter vertex " + to_string(v.rep) + " lies outside the window");
    const DescentResult& dr = d.descend(v);
    if (dr.canon == v) {
      push_merge(r.letters, {v, l0.k});
      continue;
    }
    // (v, k) = W^-1 (canon, k) W where W v = canon.
    for (auto it = dr.word.rbegin(); it != dr.word.rend(); ++it) push_merge(r.letters, {it->v, -it->k});
    push_merge(r.letters, {dr.canon, l0.k});
    for (const auto& x : dr.word) push_merge(r.letters, x);
  }
  return r;
}

bool is_normal_form(const Descent& d, const RotationWord& w) {
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const auto& l = w.letters[i];
    if (l.k == 0 || !d.is_canonical(l.v)) return false;
    if (i > 0 && w.letters[i - 1].v == l.v) return false;
  }
  return true;
}

int level(const Descent& d, const RotationWord& w) {
  int lv = -1;
  for (const auto& l : w.letters) lv = std::max(lv, d.depth(l.v));
  return lv;
}

std::vector<Syllable> syllables(const Descent& d, const RotationWord& w) {
  const int lv = level(d, w);
  std::vector<Syllable> out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const bool top = d.depth(w.letters[i].v) == lv;
    if (!top && !out.empty() && !out.back().top) {
      out.back().end = i + 1;
    } else {
      out.push_back({top, i, i + 1});
    }
  }
  return out;
}

std::size_t syllable_length(const Descent& d, const RotationWord& w) { return syllables(d, w).size(); }

std::vector<AxisVertex> canonical_pool(const Descent& d, const std::vector<AxisVertex>& window, int max_depth) {
  std::vector<AxisVertex> out;
  for (const auto& v : window)
    if (d.is_canonical(v) && (max_depth < 0 || d.depth(v) <= max_depth)) out.push_back(v);
  return out;
}

RotationWord random_rotation_word(const std::vector<AxisVertex>& pool, std::mt19937_64& rng, int len,
                                  long long max_exp) {
  if (pool.size() < 2 && len > 1) throw Error(ErrorKind::Domain, "vertex pool too small for a reduced word");
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<long long> ex(1, max_exp);
  RotationWord w;
  while (static_cast<int>(w.size()) < len) {
    const AxisVertex& v = pool[pick(rng)];
    if (!w.empty() && w.letters.back().v == v) continue;
    const long long k = ex(rng);
    w.letters.push_back({v, (rng() & 1) ? k : -k});
  }
  return w;
}

RotationWord slice(const RotationWord& w, std::size_t begin, std::size_t end) {
  RotationWord r;
  r.letters.assign(w.letters.begin() + static_cast<std::ptrdiff_t>(begin),
                   w.letters.begin() + static_cast<std::ptrdiff_t>(end));
  return r;
}

}  // namespace pcx
