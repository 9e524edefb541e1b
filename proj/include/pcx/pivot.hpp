#pragma once
// Pivot points, complexity and shortening for H = <<f^p>> acting on the
// intersection tree, plus path bending and lifting from the quotient tree.
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pcx/rotation_word.hpp"

namespace pcx {

using Path = std::vector<AxisVertex>;

struct Complexity {
  int i = -1;
  std::size_t n = 0;
  bool operator==(const Complexity& o) const { return i == o.i && n == o.n; }
  bool operator<(const Complexity& o) const { return i != o.i ? i < o.i : n < o.n; }
};

// h = g core g^-1 with core cyclically reduced, its level minimal over
// conjugates and its syllable count equal to n(h).
struct ConjugateForm {
  Complexity c;
  RotationWord g, core;
};

struct PivotData {
  std::vector<AxisVertex> pivots;
  std::vector<bool> essential;
  std::vector<std::size_t> letter;  // index of the top-level letter in the expression word
  RotationWord g, expression;       // the word whose syllables were read, and its conjugator
};

// Piv(h) read off the syllables of h itself; essential flags mark members of Piv*(h).
// Throws Error(NotNormalForm) unless h is in normal form.
PivotData pivot_points(const Descent& d, const RotationWord& h);

ConjugateForm complexity(const Descent& d, const RotationWord& h);

// Piv*(h) = g Piv(core) for the form returned by complexity().
PivotData essential_pivots(const Descent& d, const RotationWord& h);

struct ShortenOptions {
  long long theta = 0;           // axiom constant in backend units
  long long exponent_cap = -1;   // J-scan bound; -1 selects 2|h| + 8
};

enum class ShortenCase { LevelZero, SingleSyllable, PivotHit, InsideWindmill, JScan };
const char* shorten_case_name(ShortenCase c);

struct ShortenResult {
  AxisVertex v;
  RotationWord h_v;      // normal form, an element of R_v
  RotationWord product;  // normal form of h_v h
  ShortenCase branch = ShortenCase::LevelZero;
  long long J = 0;       // the power of h conjugating the removed syllable
  Complexity before, after;
};

// Throws Error(NoOp) when h x = x and Error(CapExceeded) when the J-scan
// does not settle inside the exponent cap.
ShortenResult shorten(const Descent& d, const AxisVertex& x, const RotationWord& h, const ShortenOptions& opt = {});

// Keeps path[0..n0] and translates the rest by h_v. Throws Error(Rejected)
// when h_v does not fix path[n0].
Path bend(const Descent& d, const Path& path, std::size_t n0, const RotationWord& h_v);

// Lift of a quotient-tree path (a sequence of canonical vertices, each
// adjacent to the next) starting at x. radius >= 0 bounds the distance of
// lifted vertices from the identity; leaving it raises Error(WindowExhausted).
// With rng set, each step is further rotated about the current vertex by a
// random element of its rotation group, giving a random lift.
Path lift_path(const Descent& d, const std::vector<AxisVertex>& qpath, const AxisVertex& x, long long radius = -1,
               std::mt19937_64* rng = nullptr);

// Geodesic of the quotient tree between the classes of two vertices.
std::vector<AxisVertex> quotient_geodesic(const Descent& d, const AxisVertex& a, const AxisVertex& b);

// The element u with u x = canon(x), as a normal-form rotation word.
RotationWord descent_element(const Descent& d, const AxisVertex& x);
// Some h in H with h x = z; Error(Rejected) when x and z lie in different orbits.
RotationWord transporter(const Descent& d, const AxisVertex& x, const AxisVertex& z);

struct QuadrilateralInput {
  std::array<std::vector<AxisVertex>, 4> sides;  // quotient paths, side k ends where side k+1 starts
  std::optional<AxisVertex> start;               // lift of the first corner, canonical by default
  std::optional<Path> side0, side2;              // constrained lifts of sides 0 and 2
  long long B = 0;                               // projection bound claimed for the constrained sides
  long long l_short = 1, c_g = 0;                // constants entering L_lift(B)
  std::size_t max_bends = 10000;
  std::optional<std::uint64_t> scramble;         // seed for random lifts of the unconstrained sides
};

struct QuadrilateralLift {
  std::array<Path, 4> sides;
  bool closed = false;
  std::size_t bends = 0;
  RotationWord h_initial;  // element carrying the first corner to the open endpoint of the first lift
  RotationWord h_final;    // the same after bending; the identity once closed
  std::vector<AxisVertex> bend_vertices;
  bool constraints_ok = true;  // constrained sides satisfied the bound B
  bool lift_condition = true;  // declared L >= L_lift(B)
  std::vector<RotationWord> translators;  // elements carrying side0 and side2 onto the produced sides
};

QuadrilateralLift lift_quadrilateral(const Descent& d, const QuadrilateralInput& in, const ShortenOptions& opt = {});

}  // namespace pcx
