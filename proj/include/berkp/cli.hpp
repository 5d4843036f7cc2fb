#pragma once

#include "berkp/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace berkp {

struct Invocation {
  std::string subcommand;
  Json input;
  std::int64_t p = 5;
  int precision = 64;
  std::uint64_t seed = 0;
  /// "json" or "csv".
  std::string format = "json";
  /// Log quantities are printed as decimals in natural-log units.
  bool natural = false;
};

struct Outcome {
  /// 0 success, 1 malformed input, 2 domain error.
  int status = 0;
  std::string output;
};

const std::vector<std::string>& subcommands();

Outcome run(const Invocation& inv);

}  // namespace berkp
