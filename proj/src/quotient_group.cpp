#include "pcx/quotient_group.hpp"

#include <cstdlib>

#include "pcx/error.hpp"

namespace pcx {

QuotientGroup::QuotientGroup(const TreeBackend& tb, long long p) : p_(p) {
  if (p < 1) throw Error(ErrorKind::Domain, "power p must be >= 1");
  if (!tb.simple_base()) throw Error(ErrorKind::Rejected, "quotient word problem needs a simple base word");
  const Word& f = tb.f();
  const int first = f.front();
  f_gen_ = std::abs(first);
  // f = first * rest, so first = t * rest^-1 with t the new generator for f.
  Word rest(f.begin() + 1, f.end());
  Word t_rest = mul(Word{f_gen_}, inverse(rest));  // letter +f_gen_ now stands for t
  image_pos_ = first > 0 ? t_rest : inverse(t_rest);
}

Word QuotientGroup::rewrite(const Word& g) const {
  Word out;
  for (int l : reduce(g)) {
    if (std::abs(l) != f_gen_) {
      out = mul(out, Word{l});
    } else {
      out = mul(out, l > 0 ? image_pos_ : inverse(image_pos_));
    }
  }
  return out;
}

std::vector<QuotientGroup::Syllable> QuotientGroup::normal_form(const Word& g) const {
  std::vector<Syllable> st;
  auto norm = [&](Syllable& s) {
    if (s.gen == f_gen_) s.e = ((s.e % p_) + p_) % p_;
  };
  for (int l : rewrite(g)) {
    Syllable s{std::abs(l), l > 0 ? 1 : -1};
    norm(s);
    if (s.e == 0) continue;
    if (!st.empty() && st.back().gen == s.gen) {
      st.back().e += s.e;
      norm(st.back());
      if (st.back().e == 0) st.pop_back();
    } else {
      st.push_back(s);
    }
    // Popping can bring equal generators together; merge until stable.
    while (st.size() >= 2 && st[st.size() - 1].gen == st[st.size() - 2].gen) {
      Syllable top = st.back();
      st.pop_back();
      st.back().e += top.e;
      norm(st.back());
      if (st.back().e == 0) st.pop_back();
    }
  }
  return st;
}

std::string QuotientGroup::key(const Word& g) const {
  std::string s;
  for (const auto& x : normal_form(g)) s += std::to_string(x.gen) + "^" + std::to_string(x.e) + " ";
  return s;
}

bool same_h_orbit(const QuotientGroup& q, const TreeBackend& tb, long long p, const AxisVertex& x,
                  const AxisVertex& z) {
  const Word xinv = inverse(x.rep);
  for (long long n = 0; n < p; ++n)
    if (q.is_trivial(mul(z.rep, power(tb.f(), n), xinv))) return true;
  return false;
}

}  // namespace pcx
