#pragma once
// Word problem in G/H = F_k / <<f^p>> for a base word f that uses every
// generator exactly once. Such an f is primitive, so in the basis
// {f, other generators} the quotient is Z/p * F_{k-1} and has an exact
// normal form.
#include <string>
#include <vector>

#include "pcx/tree_backend.hpp"

namespace pcx {

class QuotientGroup {
 public:
  struct Syllable {
    int gen = 0;  // generator index in the new basis; f takes the index of f's first generator
    long long e = 0;
    bool operator==(const Syllable& o) const { return gen == o.gen && e == o.e; }
  };

  QuotientGroup(const TreeBackend& backend, long long p);

  // Unique normal form: adjacent syllables use distinct generators, f-exponents lie in [1, p-1].
  std::vector<Syllable> normal_form(const Word& g) const;
  bool is_trivial(const Word& g) const { return normal_form(g).empty(); }
  std::string key(const Word& g) const;
  int f_index() const { return f_gen_; }

 private:
  Word rewrite(const Word& g) const;  // F_k word in the new basis

  long long p_;
  int f_gen_ = 0;
  Word image_pos_;  // image of generator f_gen_ in the new basis
};

// Whether z lies in the H-orbit of x: some rep_z f^n rep_x^-1 with 0 <= n < p is trivial in G/H.
bool same_h_orbit(const QuotientGroup& q, const TreeBackend& tb, long long p, const AxisVertex& x,
                  const AxisVertex& z);

}  // namespace pcx
