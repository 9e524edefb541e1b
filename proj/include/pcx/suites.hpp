#pragma once
// Seeded sampling drivers shared by the command-line tool and the acceptance
// run: pivot facts, essential-pivot laws, iterated shortening and lifting of
// quotient triangles and quadrilaterals.
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pcx/pivot.hpp"

namespace pcx {

// Up to this many failing samples are recorded as text.
constexpr std::size_t kWitnessCap = 8;

// A random normal-form element of level >= 1 with 1..max_letters letters.
RotationWord random_high_element(const Descent& d, const std::vector<AxisVertex>& pool, std::mt19937_64& rng,
                                 int max_letters);

struct PivotFactsReport {
  std::size_t samples = 0, pivots = 0, pairs = 0, failures = 0;
  std::vector<std::string> witnesses;
  bool pass() const { return failures == 0 && samples > 0; }
};
// For each sample h: every pivot w has d_w(v0, h v0) > L/2, and pivots
// w < w' satisfy d_{w'}(v0, w) <= theta.
PivotFactsReport pivot_facts_suite(const Descent& d, const std::vector<AxisVertex>& pool, std::size_t samples,
                                   std::uint64_t seed, long long theta = 0, int max_letters = 6);

struct EssentialLawsReport {
  std::size_t conjugation_samples = 0;
  std::size_t conjugation_literal = 0;   // g h g^-1 reduced as written: ordered lists compared
  std::size_t conjugation_failures = 0;  // includes agreement failures up to one power of the conjugate
  std::size_t power_samples = 0, power_failures = 0;
  std::vector<std::string> witnesses;
  bool pass() const { return conjugation_failures == 0 && power_failures == 0; }
};
// Draws until `samples` literal conjugation samples were compared; power
// law for h^2 on `samples` elements.
EssentialLawsReport essential_laws_suite(const Descent& d, const std::vector<AxisVertex>& pool, std::size_t samples,
                                         std::uint64_t seed);

struct ShortenSuiteReport {
  std::size_t samples = 0, steps = 0, max_steps = 0;
  std::size_t postcondition_failures = 0, complexity_failures = 0, bound_failures = 0;
  std::map<std::string, std::size_t> branches;
  std::vector<std::string> witnesses;
  bool pass() const { return postcondition_failures == 0 && complexity_failures == 0 && bound_failures == 0; }
};
// Random (x, h) with x from xs and h x != x, shortened until h fixes x.
ShortenSuiteReport shorten_suite(const Descent& d, const std::vector<AxisVertex>& pool,
                                 const std::vector<AxisVertex>& xs, std::size_t samples, std::uint64_t seed,
                                 int max_letters = 6);

struct LiftSuiteReport {
  std::size_t triangles = 0, quadrilaterals = 0, constrained = 0;
  std::size_t bends = 0;
  std::size_t failures = 0;            // figures that did not close onto geodesic lifts
  std::size_t translate_failures = 0;  // constrained sides that are not H-translates
  std::vector<std::string> witnesses;
  bool pass() const { return failures == 0 && translate_failures == 0; }
};
// Triangles are quadrilaterals with one trivial side. Constrained samples use
// single-edge sides 0 and 2 with random lifts (projection bound B = 0).
LiftSuiteReport lift_suite(const Descent& d, const std::vector<AxisVertex>& pool, std::size_t triangles,
                           std::size_t quadrilaterals, std::size_t constrained, std::uint64_t seed);

}  // namespace pcx
