#pragma once
#include <string>
#include <vector>

#include "config.hpp"

namespace pcxcli {

struct Outcome {
  bool pass = true;
  pcx::Json result;
  std::string dot;  // written next to the report when non-empty and dot output is on
};

const std::vector<std::string>& command_names();

// Throws pcx::Error for configuration and input problems.
Outcome run_command(const std::string& name, const RunConfig& c);

}  // namespace pcxcli
