#ifndef GERMKIT_CLI_HPP
#define GERMKIT_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "germkit/groupoid.hpp"
#include "germkit/inverse_monoid.hpp"
#include "germkit/partial_bijection.hpp"
#include "germkit/report.hpp"

namespace germkit::cli {

inline constexpr const char* kToolVersion = "germkit 0.1.0";

/// Stable exit-code contract.
enum ExitCode : int {
  kPass = 0,
  kVerificationFailed = 1,
  kCapExceeded = 2,
  kInputError = 3,
};

struct Caps {
  std::size_t elements = kDefaultElementCap;
  std::size_t units = kDefaultUnitCap;
  std::size_t points = kDefaultPointCap;
};

/// Default caps, with GERMKIT_CAP_ELEMENTS applied when set.
Caps caps_from_environment();

enum class Suite { kAxioms, kLemmas, kRoundtrip, kAll };

/// Report of one `verify` run. Everything except `timings` depends only on the
/// input bytes and the flags.
struct RunReport {
  std::string command;
  std::string input_digest;
  std::size_t input_bytes = 0;
  std::size_t elements = 0;
  /// Atom names of E(S) in character order; empty when no groupoid was built.
  std::vector<std::string> atoms;
  std::vector<Report> sections;
  std::vector<std::pair<std::string, double>> timings_ms;

  bool passed() const;
  void render(std::ostream& os, bool with_timings) const;
  nlohmann::ordered_json to_json(bool with_timings) const;
};

/// SHA-256 of the bytes, lowercase hex.
std::string sha256_hex(const std::string& bytes);

RunReport verify_monoid_bytes(const std::string& bytes, const std::string& command, Suite suite, const Caps& caps);

int cmd_gen_symmetric(std::size_t n, const std::string& out_path, const Caps& caps, std::ostream& err);
int cmd_gen_coarse(const std::string& space_path, const std::string& out_path, const Caps& caps, std::ostream& err);
int cmd_verify(const std::string& monoid_path,
               Suite suite,
               const std::optional<std::string>& json_report,
               bool timings,
               const Caps& caps,
               const std::string& command,
               std::ostream& out,
               std::ostream& err);
int cmd_export(const std::string& monoid_path,
               const std::string& format,
               const std::string& out_path,
               const Caps& caps,
               std::ostream& err);

/// Parses argv and dispatches; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace germkit::cli

#endif // GERMKIT_CLI_HPP
