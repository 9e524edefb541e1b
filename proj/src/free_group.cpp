#include "pcx/free_group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "pcx/error.hpp"

namespace pcx {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DegenerateWindow: return "degenerate-window";
    case ErrorKind::UndefinedProjection: return "undefined-projection";
    case ErrorKind::NeedsLargerRadius: return "needs-larger-radius";
    case ErrorKind::NoPath: return "no-path";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::SizeCap: return "size-cap";
    case ErrorKind::ProperPower: return "proper-power";
    case ErrorKind::NoOp: return "no-op";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::NotNormalForm: return "not-normal-form";
    case ErrorKind::OutOfWindow: return "out-of-window";
    case ErrorKind::WindowExhausted: return "window-exhausted";
    case ErrorKind::Config: return "config";
    case ErrorKind::Rejected: return "rejected";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

Word reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

Word mul(const Word& a, const Word& b) {
  // Both factors are assumed reduced; cancel only across the seam.
  std::size_t c = 0;
  while (c < a.size() && c < b.size() && a[a.size() - 1 - c] == -b[c]) ++c;
  Word out;
  out.reserve(a.size() + b.size() - 2 * c);
  out.insert(out.end(), a.begin(), a.end() - static_cast<long>(c));
  out.insert(out.end(), b.begin() + static_cast<long>(c), b.end());
  return out;
}

Word mul(const Word& a, const Word& b, const Word& c) { return mul(mul(a, b), c); }

Word power(const Word& w, long long n) {
  Word base = n >= 0 ? reduce(w) : inverse(reduce(w));
  long long e = n >= 0 ? n : -n;
  Word out;
  Word acc = base;
  while (e > 0) {
    if (e & 1) out = mul(out, acc);
    e >>= 1;
    if (e) acc = mul(acc, acc);
  }
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == -w[i - 1]) return false;
  for (int l : w)
    if (l == 0) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  return is_reduced(w) && (w.size() < 2 || w.front() != -w.back());
}

CyclicReduction cyclic_reduce(const Word& w) {
  Word r = reduce(w);
  std::size_t i = 0;
  while (2 * i + 1 < r.size() && r[i] == -r[r.size() - 1 - i]) ++i;
  CyclicReduction out;
  out.conjugator.assign(r.begin(), r.begin() + static_cast<long>(i));
  out.core.assign(r.begin() + static_cast<long>(i), r.end() - static_cast<long>(i));
  return out;
}

long long translation_length(const Word& w) {
  return static_cast<long long>(cyclic_reduce(w).core.size());
}

std::pair<Word, int> root_of(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = (w[i] == w[i - d]);
    if (ok) return {Word(w.begin(), w.begin() + static_cast<long>(d)), static_cast<int>(n / d)};
  }
  return {w, 1};
}

bool is_proper_power(const Word& w) {
  if (w.empty()) return false;
  return root_of(cyclic_reduce(w).core).second > 1;
}

int letter_rank(int letter) { return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0); }

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return letter_rank(a[i]) < letter_rank(b[i]);
  }
  return false;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  s.reserve(w.size());
  for (int l : w) {
    char c = static_cast<char>('a' + std::abs(l) - 1);
    s.push_back(l > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return s;
}

Word parse_word(const std::string& s, int k) {
  Word w;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '1') {
      if (s.find_first_not_of(" \t1") != std::string::npos)
        throw Error(ErrorKind::Parse, "identity symbol mixed with letters in '" + s + "'");
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(ch)))
      throw Error(ErrorKind::Parse, std::string("bad character '") + ch + "' in word '" + s + "'");
    int idx = std::tolower(static_cast<unsigned char>(ch)) - 'a' + 1;
    if (k > 0 && idx > k)
      throw Error(ErrorKind::Parse, std::string("generator '") + ch + "' outside F_" + std::to_string(k));
    w.push_back(std::islower(static_cast<unsigned char>(ch)) ? idx : -idx);
  }
  return reduce(w);
}

}  // namespace pcx
