#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "algser/chains.hpp"
#include "algser/construction.hpp"
#include "algser/series.hpp"

namespace algser::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,
  kUsage = 2,
  kGuard = 3,
  kNumeric = 4,
};

struct Limits {
  int gb_degree = 12;      // construct/gb/chains/normalwords/euler
  int series_degree = 400; // formula/closedform/langfun
};

// Full command line without the program name, e.g. {"gb", "--preset", "example2"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Hilbert series of a presentation by one of the four methods.
RatSeries hilbert_by_method(const PresentationSpec& spec, const std::string& method, int bound);

// Chains L_0, L_1, ... until the first empty level (or t = bound).
ChainTable full_chain_table(const ObstructionSet& obs, const Alphabet& a, int bound);

}  // namespace algser::cli
