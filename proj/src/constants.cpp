#include <string>

#include "pcx/complex_graph.hpp"
#include "pcx/error.hpp"

namespace pcx {

Rational operator+(const Rational& a, const Rational& b) {
  const Rational x = a.normalized(), y = b.normalized();
  return Rational{x.num * y.den + y.num * x.den, x.den * y.den}.normalized();
}

Rational operator*(long long c, const Rational& a) { return Rational{c * a.num, a.den}.normalized(); }

Rational max(const Rational& a, const Rational& b) { return a < b ? b.normalized() : a.normalized(); }

Constants constants_ladder(const Rational& theta, const Rational& c_e, const Rational& c_p, const Rational& c_g,
                           const Rational& B) {
  const Rational zero{0, 1};
  const std::pair<const char*, const Rational*> inputs[] = {
      {"theta", &theta}, {"C_e", &c_e}, {"C_p", &c_p}, {"C_g", &c_g}, {"B", &B}};
  for (const auto& [name, v] : inputs)
    if (*v < zero) throw Error(ErrorKind::Domain, std::string(name) + " must be non-negative, got " + v->str());

  Constants c;
  c.theta = theta.normalized();
  c.c_e = c_e.normalized();
  c.c_p = c_p.normalized();
  c.c_g = c_g.normalized();
  c.B = B.normalized();
  c.m = 11 * c_e + 6 * c_g + 5 * c_p;
  c.l0 = 4 * (c.m + theta) + Rational{1, 1};
  c.l_short = max(max(c.l0, 5 * c.m), 14 * theta);
  auto lift = [&](const Rational& b) { return max(max(c.l_short, 40 * b), 40 * c_g); };
  c.l_lift = lift(B);
  c.l_pro = max(c.l_short, 10 * B + 10 * c_g);
  c.l_hyp = lift(zero);
  c.l_wpd = max(c.l_lift, c.l_pro);
  return c;
}

}  // namespace pcx
