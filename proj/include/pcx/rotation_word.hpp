#pragma once
// Elements of H = <<f^p>> as words in rotation letters. In normal form every
// letter sits at a canonical vertex and adjacent letters sit at distinct
// vertices: the reduced form in the free product of the R_v over canonical v.
#include <random>
#include <string>
#include <vector>

#include "pcx/spinning.hpp"

namespace pcx {

struct RotationWord {
  std::vector<RotationLetter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  bool operator==(const RotationWord& o) const { return letters == o.letters; }

  // "(vertexWord^exponent)..." with "1" for the base vertex; the identity is "1".
  std::string str() const;
  // Inverse of str(); k bounds the generators (0 = unchecked).
  static RotationWord parse(const std::string& s, int k = 0);
};

RotationWord inverse(const RotationWord& w);
RotationWord concat(const RotationWord& a, const RotationWord& b);
RotationWord concat(const RotationWord& a, const RotationWord& b, const RotationWord& c);

// The free-group element the word evaluates to.
Word shadow(const SpinningFamily& family, const RotationWord& w);

// Rewrites letters at non-canonical vertices through their descent words and
// merges adjacent letters at the same vertex. limit >= 0 makes letters at
// vertices farther than limit from the identity an Error(OutOfWindow).
RotationWord normal_form(const Descent& d, const RotationWord& w, long long limit = -1);
bool is_normal_form(const Descent& d, const RotationWord& w);

// Level of a normal-form word: the largest depth among its vertices, -1 for
// the identity.
int level(const Descent& d, const RotationWord& w);

// Syllables at the word's own level i: each letter at depth i is one
// syllable, each maximal run of lower letters is one syllable.
struct Syllable {
  bool top = false;
  std::size_t begin = 0, end = 0;  // letter range [begin, end)
};
std::vector<Syllable> syllables(const Descent& d, const RotationWord& w);
std::size_t syllable_length(const Descent& d, const RotationWord& w);

// Canonical vertices of a window with depth at most max_depth (-1: any).
std::vector<AxisVertex> canonical_pool(const Descent& d, const std::vector<AxisVertex>& window, int max_depth = -1);
// A normal-form word of exactly len letters over the pool, exponents 1 <= |k| <= max_exp.
RotationWord random_rotation_word(const std::vector<AxisVertex>& pool, std::mt19937_64& rng, int len,
                                  long long max_exp = 3);

RotationWord slice(const RotationWord& w, std::size_t begin, std::size_t end);

}  // namespace pcx
