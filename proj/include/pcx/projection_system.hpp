#pragma once
// Abstract projection system over a finite window, the table backend, and the
// exhaustive axiom checker.
//
// Distances are exact: every backend reports integers together with a common
// positive scale, so d_y(x, z) = scaled_distance(y, x, z) / scale().
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace pcx {

struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational parse(const std::string& s);  // "3", "-1/2", "0.25"
  Rational normalized() const;
  std::string str() const;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational& o) const;
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return !(o < *this); }
};

class ProjectionSystem {
 public:
  virtual ~ProjectionSystem() = default;

  virtual std::size_t size() const = 0;
  virtual std::string label(std::size_t i) const = 0;
  // Raw scaled value; callers guarantee y != x and y != z.
  virtual std::int32_t scaled_distance(std::size_t y, std::size_t x, std::size_t z) const = 0;
  virtual long long scale() const { return 1; }
  virtual long long scaled_theta() const = 0;

  // Bulk accessors used by the exhaustive scans; out has size() entries and
  // inadmissible positions are 0. Requires x != y.
  //   fill_row:    out[z] = d_y(x, z)
  //   fill_column: out[z] = d_y(z, x)
  //   fill_cross:  out[z] = d_z(x, y)
  virtual void fill_row(std::size_t y, std::size_t x, std::int32_t* out) const;
  virtual void fill_column(std::size_t y, std::size_t x, std::int32_t* out) const;
  virtual void fill_cross(std::size_t x, std::size_t y, std::int32_t* out) const;

  // Checked accessor. Throws Error(UndefinedProjection) when y is x or z.
  Rational distance(std::size_t y, std::size_t x, std::size_t z) const;
  Rational theta() const;
};

// Finite table backend. Lines "y x z value"; '#' starts a comment; tokens are
// opaque; a listed entry also defines the reverse orientation (y z x) unless
// that orientation is listed too; missing entries are 0. Vertex order is the
// order of first appearance.
class TableSystem final : public ProjectionSystem {
 public:
  static TableSystem parse(std::istream& in, const Rational& theta);
  static TableSystem from_file(const std::string& path, const Rational& theta);

  std::size_t size() const override { return labels_.size(); }
  std::string label(std::size_t i) const override { return labels_[i]; }
  std::int32_t scaled_distance(std::size_t y, std::size_t x, std::size_t z) const override {
    return cube_[(y * labels_.size() + x) * labels_.size() + z];
  }
  long long scale() const override { return scale_; }
  long long scaled_theta() const override { return theta_; }

  std::size_t index_of(const std::string& label) const;  // throws Error(Parse) if unknown

 private:
  std::vector<std::string> labels_;
  std::vector<std::int32_t> cube_;
  long long scale_ = 1;
  long long theta_ = 0;
};

struct AxiomOptions {
  // The triangle inequality (quadruple scan) runs over vertices [0, triangle_prefix).
  std::size_t triangle_prefix = std::numeric_limits<std::size_t>::max();
  // Finiteness compares, for x, z < inner, the count of y with d_y(x,z) > theta
  // over y < inner against y < n. inner == 0 leaves the axiom untested.
  std::size_t inner = 0;
  std::size_t witness_cap = 8;
};

struct AxiomReport {
  std::size_t window_size = 0;
  std::size_t triangle_window = 0;
  std::size_t finiteness_inner = 0;
  bool symmetry = true;
  bool triangle = true;
  bool triples = true;
  bool finiteness = true;
  bool finiteness_tested = false;
  Rational theta_declared;
  Rational theta_measured;
  std::vector<std::vector<std::size_t>> symmetry_witnesses;  // (y, x, z)
  std::vector<std::vector<std::size_t>> triangle_witnesses;  // (y, x, z, w)
  std::vector<std::vector<std::size_t>> triples_witnesses;   // (x, y, z)
  std::vector<std::vector<std::size_t>> finiteness_witnesses;  // (x, z)
  bool all_pass() const { return symmetry && triangle && triples && finiteness; }
};

// Exhaustive scan of the window. Throws Error(DegenerateWindow) for fewer than
// three vertices.
AxiomReport check_axioms(const ProjectionSystem& system, const AxiomOptions& options = {});

}  // namespace pcx
