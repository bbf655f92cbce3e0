// Batch execution over map sets and k ranges, with CSV and markdown output.
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "jpca/period.hpp"
#include "jpca/rule.hpp"

namespace jpca {

// Decimal truncation toward zero, never rounding: 1.429 -> "1.42".
std::string format_parity(double value, unsigned places);

// Fixed-point rounding, the convention the experiment tables use for the
// two average columns.
std::string format_round(double value, unsigned places);

enum class OutputFormat { csv, markdown };

struct RunConfig {
  std::vector<std::string> maps;       // library names or rulespec texts
  std::vector<unsigned> ks;            // nonempty, ascending not required
  unsigned m = 10;                     // density word length
  std::uint64_t samples = 10;
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 100000000;
  std::uint64_t memory_budget = kDefaultMemoryBudget;
  OutputFormat format = OutputFormat::csv;
  bool parity = false;                 // display truncated/rounded like the tables
  bool spectrum = false;               // fperiod: emit cycle spectra rows
  bool least = false;                  // fperiod: emit least-shift-period counts
};

// Parses "lo..hi" (inclusive) or a comma-separated list.
std::vector<unsigned> parse_k_range(const std::string& text);

// Each runner streams rows to `out` and returns the number of row errors.
int run_fperiod(const RunConfig& config, std::ostream& out);
// Missing patterns go to `missing_sidecar` when given, one per line,
// otherwise inline as comment rows.
int run_fdense(const RunConfig& config, std::ostream& out,
               std::ostream* missing_sidecar = nullptr);
int run_fprobperiod(const RunConfig& config, std::ostream& out);
int run_analyze(const RunConfig& config, std::ostream& out);
int run_list_maps(std::ostream& out);

}  // namespace jpca
