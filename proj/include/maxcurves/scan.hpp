#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxcurves/decomp.hpp"

namespace mc {

enum class Family { Genus4, Genus5, Genus10 };
enum class Format { Tsv, Json };

const char* family_name(Family f);
std::optional<Family> parse_family(const std::string& s);

struct ScanConfig {
  Family family = Family::Genus4;
  u64 pmin = 3;
  u64 pmax = 0;
  unsigned workers = 1;
  std::string out;  // empty writes to stdout
  Format format = Format::Tsv;
  std::optional<std::string> phi3;
  bool level2 = false;
  bool resume = false;
  bool timing = false;
  u64 seed = 1;
  std::optional<KTag> tag;
  std::optional<u64> b;
};

struct ScanRecord {
  Family family = Family::Genus4;
  u64 p = 0;
  std::string param = "-";
  std::string verdict;
  std::vector<std::pair<std::string, i64>> traces;
  u64 elapsed_ns = 0;
  // ordering within p
  int tag_order = 0;
  u64 a = 0;
  // a failed internal cross-check (phi3, direct count)
  bool inconsistent = false;
};

// Throws ConfigError.
void validate(const ScanConfig& c);

std::vector<u64> primes_in(u64 lo, u64 hi);

// Records of one prime, in output order.
std::vector<ScanRecord> scan_prime(const ScanConfig& c, u64 p, const ModularPolynomial* phi3 = nullptr);

// Fixed worker pool over the primes; sink receives each prime's records in increasing p.
void run_scan(const ScanConfig& c, const std::vector<u64>& primes,
              const std::function<void(u64, std::vector<ScanRecord>&&)>& sink);

std::string tsv_header();
std::string format_record(const ScanRecord& r, Format f);
// Reads records back from a file written by format_record, dropping an unterminated last line. Throws DataFormat.
std::vector<std::pair<u64, std::string>> read_record_lines(std::istream& in, Format f);

struct ScanSummary {
  std::size_t records = 0;
  std::size_t inconsistent = 0;
  std::vector<std::pair<u64, std::string>> maximal;  // (p, param)
};

// Runs the configured scan with resume handling and writes the output.
ScanSummary run_scan_to_output(const ScanConfig& c);

}  // namespace mc
