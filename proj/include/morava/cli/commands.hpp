#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "morava/error.hpp"

namespace morava::cli {

// Stable process exit codes.
enum Exit : int {
  kOk = 0,
  kSelftestFailed = 1,
  kZeroSeries = 2,
  kTruncationTooCoarse = 3,
  kBudgetExhausted = 4,
  kMissingCertificate = 5,
  kUsage = 64,
};

enum class Format { Json, Csv };

struct RunConfig {
  std::uint64_t prime = 5;
  int precision = 10;
  int degree = 16;  // series truncation D
  int target = 50;
  int modulus = 6;
  std::uint64_t seed = 0;
  Format format = Format::Json;
  std::string cache_dir;
  bool assume_density = false;

  // ConfigError unless p is an odd prime, 2 <= D, k + 2 <= N and p^N fits.
  void validate() const;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// --cache-dir, else $MORAVA_CACHE_DIR, else ./morava-cache
std::string default_cache_dir();

// Each command writes its report to `out`, diagnostics to `err`, and returns
// an exit code; library errors are mapped onto the codes above.
int cmd_weierstrass(const RunConfig& cfg, const std::string& series_file, std::ostream& out, std::ostream& err);
// `point` is an integer (mu in Z_p), or a JSON file holding a WittElem
// {prime, precision, coeffs} or {"poly": [...]} for a root of a distinguished
// polynomial.
int cmd_orbit(const RunConfig& cfg, const std::string& point, std::ostream& out, std::ostream& err);
int cmd_classify(const RunConfig& cfg, const std::string& series_file, std::ostream& out, std::ostream& err);
// mode "chain" (n = size - 1) or "nodescent" (maximal polynomial degree).
int cmd_coeq(const RunConfig& cfg, const std::string& mode, int n, std::ostream& out, std::ostream& err);

struct SelftestOptions {
  // Negative control: tamper with a certificate before verification.
  bool corrupt_certificate = false;
};
int cmd_selftest(const RunConfig& cfg, const SelftestOptions& opts, std::ostream& out, std::ostream& err);

// 64-bit FNV-1a, used for deterministic cache file names.
std::uint64_t fnv1a(const std::string& text);

}  // namespace morava::cli
