#ifndef LAURICELLA_TOOLS_CLI_HPP
#define LAURICELLA_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <mpfr.h>

namespace lauricella::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitVerificationFailure = 1,
  kExitConfigError = 2,
  kExitNonGeneric = 3,
  kExitDomainError = 4,
};

enum class Mode { kMatrices, kVerify, kDet, kSeries, kSampleParams };
enum class Format { kJson, kLatex, kCsv };

/// Deliberate defects for exercising the failure paths in tests.
struct FaultInjection {
  /// Negates the closed-form determinant before it is compared.
  bool det_sign_flip = false;
};

inline constexpr const char* kPrecisionEnv = "LAURICELLA_PRECISION";
inline constexpr int kDefaultMaxNumerator = 12;

struct RunConfig {
  int m = 2;
  Mode mode = Mode::kVerify;
  std::optional<std::string> params_file;
  std::uint64_t seed = 1;
  int samples = 1;
  mpfr_prec_t precision = 256;
  int order = 8;
  Format format = Format::kJson;
  std::optional<std::string> out_path;
  int max_numerator = kDefaultMaxNumerator;
  FaultInjection faults;
};

std::string to_string(Mode mode);
std::optional<Mode> parse_mode(const std::string& text);
std::optional<Format> parse_format(const std::string& text);

/// Throws std::invalid_argument describing the first problem.
void validate(const RunConfig& cfg);

/// Parses argv into `cfg`. Returns an exit code if the program should stop
/// (help requested or a parse error), after printing to `out`/`err`.
std::optional<int> parse_args(int argc, const char* const* argv, RunConfig& cfg, std::ostream& out,
                              std::ostream& err);

/// Runs one mode. Results go to cfg.out_path when set, otherwise to `out`;
/// diagnostics go to `err`. Returns the process exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_matrices(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_det(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_series(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sample_params(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace lauricella::cli

#endif  // LAURICELLA_TOOLS_CLI_HPP
