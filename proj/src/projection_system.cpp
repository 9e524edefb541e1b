#include "pcx/projection_system.hpp"

#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "pcx/error.hpp"

namespace pcx {

Rational Rational::normalized() const {
  if (den == 0) throw Error(ErrorKind::Domain, "zero denominator");
  long long g = std::gcd(num, den);
  if (g == 0) g = 1;
  Rational r{num / g, den / g};
  if (r.den < 0) {
    r.num = -r.num;
    r.den = -r.den;
  }
  return r;
}

Rational Rational::parse(const std::string& s) {
  try {
    std::size_t slash = s.find('/');
    if (slash != std::string::npos) {
      std::size_t p1 = 0, p2 = 0;
      long long n = std::stoll(s.substr(0, slash), &p1);
      long long d = std::stoll(s.substr(slash + 1), &p2);
      if (p1 != slash || p2 != s.size() - slash - 1) throw std::invalid_argument(s);
      return Rational{n, d}.normalized();
    }
    std::size_t dot = s.find('.');
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::size_t p = 0;
      long long n = std::stoll(digits, &p);
      if (p != digits.size()) throw std::invalid_argument(s);
      long long d = 1;
      for (std::size_t i = dot + 1; i < s.size(); ++i) d *= 10;
      return Rational{n, d}.normalized();
    }
    std::size_t p = 0;
    long long n = std::stoll(s, &p);
    if (p != s.size()) throw std::invalid_argument(s);
    return Rational{n, 1};
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "not a rational number: '" + s + "'");
  }
}

std::string Rational::str() const {
  Rational r = normalized();
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

bool Rational::operator==(const Rational& o) const {
  Rational a = normalized(), b = o.normalized();
  return a.num == b.num && a.den == b.den;
}

bool Rational::operator<(const Rational& o) const {
  Rational a = normalized(), b = o.normalized();
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

void ProjectionSystem::fill_row(std::size_t y, std::size_t x, std::int32_t* out) const {
  for (std::size_t z = 0; z < size(); ++z) out[z] = z == y ? 0 : scaled_distance(y, x, z);
}

void ProjectionSystem::fill_column(std::size_t y, std::size_t x, std::int32_t* out) const {
  for (std::size_t z = 0; z < size(); ++z) out[z] = z == y ? 0 : scaled_distance(y, z, x);
}

void ProjectionSystem::fill_cross(std::size_t x, std::size_t y, std::int32_t* out) const {
  for (std::size_t z = 0; z < size(); ++z) out[z] = (z == x || z == y) ? 0 : scaled_distance(z, x, y);
}

Rational ProjectionSystem::distance(std::size_t y, std::size_t x, std::size_t z) const {
  if (y == x || y == z) throw Error(ErrorKind::UndefinedProjection, "d_y(x, z) needs y outside {x, z}");
  if (x >= size() || y >= size() || z >= size()) throw Error(ErrorKind::OutOfWindow, "vertex index outside window");
  return Rational{scaled_distance(y, x, z), scale()}.normalized();
}

Rational ProjectionSystem::theta() const { return Rational{scaled_theta(), scale()}.normalized(); }

TableSystem TableSystem::parse(std::istream& in, const Rational& theta) {
  struct Entry {
    std::size_t y, x, z;
    Rational v;
  };
  std::vector<Entry> entries;
  std::unordered_map<std::string, std::size_t> ids;
  TableSystem sys;
  auto id = [&](const std::string& tok) {
    auto it = ids.find(tok);
    if (it != ids.end()) return it->second;
    ids.emplace(tok, sys.labels_.size());
    sys.labels_.push_back(tok);
    return sys.labels_.size() - 1;
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 4)
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected 'y x z value'");
    Rational v = Rational::parse(tok[3]);
    if (v.num < 0) throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": negative distance");
    std::size_t y = id(tok[0]), x = id(tok[1]), z = id(tok[2]);
    if (y == x || y == z)
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": y must differ from x and z");
    entries.push_back({y, x, z, v});
  }
  if (theta.num < 0) throw Error(ErrorKind::Domain, "theta must be non-negative");
  long long scale = theta.normalized().den;
  for (const auto& e : entries) scale = std::lcm(scale, e.v.den);
  const std::size_t n = sys.labels_.size();
  if (n > 400) throw Error(ErrorKind::SizeCap, "table backend supports at most 400 vertices");
  sys.scale_ = scale;
  sys.theta_ = theta.normalized().num * (scale / theta.normalized().den);
  sys.cube_.assign(n * n * n, 0);
  std::vector<char> explicit_(n * n * n, 0);
  auto at = [n](std::size_t y, std::size_t x, std::size_t z) { return (y * n + x) * n + z; };
  auto scaled = [&](const Rational& v) {
    __int128 s = static_cast<__int128>(v.num) * (scale / v.den);
    if (s > std::numeric_limits<std::int32_t>::max()) throw Error(ErrorKind::Domain, "distance too large");
    return static_cast<std::int32_t>(s);
  };
  for (const auto& e : entries) {
    sys.cube_[at(e.y, e.x, e.z)] = scaled(e.v);
    explicit_[at(e.y, e.x, e.z)] = 1;
  }
  for (const auto& e : entries)
    if (!explicit_[at(e.y, e.z, e.x)]) sys.cube_[at(e.y, e.z, e.x)] = scaled(e.v);
  return sys;
}

TableSystem TableSystem::from_file(const std::string& path, const Rational& theta) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Config, "cannot open table file '" + path + "'");
  return parse(in, theta);
}

std::size_t TableSystem::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw Error(ErrorKind::Parse, "unknown vertex '" + label + "'");
}

}  // namespace pcx
