#pragma once
#include <cstdint>
#include <string>

#include "pcx/report.hpp"

namespace pcxcli {

struct RunConfig {
  // Backend: a table file, or the free group F_k acting on the axes of f.
  std::string table;
  std::string theta = "0";
  int k = 2;
  std::string f = "ab";
  long long p = 5;
  long long K = 0;
  int radius = 6;
  long long tree_radius = 0;  // 0: automatic
  long long inner = 0;        // table finiteness prefix, 0 leaves it untested

  // Caps.
  long long exponent_cap = 3;
  long long bfs_cap = 3;
  int bfs_depth = 4;
  int move_depth = 2;
  int ball_radius = 6;
  int stages = 3;

  std::uint64_t seed = 1;
  long long samples = 100;
  std::string out = "pcx-out";
  bool dot = false;

  // Constant ladder inputs.
  std::string ce = "0", cg = "0", cp = "0", B = "0";

  // Single shortening run; h empty selects random sampling.
  std::string h;
  std::string x = "1";

  // WPD and independence.
  std::string element = "aab";
  long long D = 1;
  long long M = 2;
  std::string c_wpd = "0";
  std::string conjugator = "a";
  long long series = 10;
  std::string f1 = "aab", f2 = "baabB";
  long long range = 6;
};

// Throws pcx::Error(Config) on out-of-range values.
void validate(const RunConfig& c);
pcx::Json to_json(const RunConfig& c);

}  // namespace pcxcli
