#pragma once
// Words in a free group F_k. A letter is +i for the i-th generator and -i for
// its inverse (i >= 1). Printed form: generator i is the i-th lowercase letter,
// its inverse the matching uppercase letter; the identity prints as "1".
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pcx {

using Word = std::vector<int>;

Word reduce(const Word& w);
Word inverse(const Word& w);
Word mul(const Word& a, const Word& b);
Word mul(const Word& a, const Word& b, const Word& c);
Word power(const Word& w, long long n);

bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

// w = c * core * c^-1 with core cyclically reduced.
struct CyclicReduction {
  Word conjugator;
  Word core;
};
CyclicReduction cyclic_reduce(const Word& w);

// Length of the cyclic reduction: the translation length of w on the Cayley tree.
long long translation_length(const Word& w);

// Primitive root r and exponent e with w = r^e for a cyclically reduced w.
std::pair<Word, int> root_of(const Word& w);
bool is_proper_power(const Word& w);

// Shortlex order with letter order a < A < b < B < ...
int letter_rank(int letter);
bool shortlex_less(const Word& a, const Word& b);

std::string to_string(const Word& w);
// Accepts lowercase/uppercase letters, optional spaces, and "1" for the identity.
// Throws Error(Parse) on unknown characters or generators beyond k (k = 0 disables the check).
Word parse_word(const std::string& s, int k = 0);

}  // namespace pcx
