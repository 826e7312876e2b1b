#ifndef SC_CLI_VERIFY_HPP
#define SC_CLI_VERIFY_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sc/census.hpp"

namespace sc::cli {

struct VerifyLine {
  std::string suite;
  std::string name;
  bool pass = true;
  std::string expected;
  std::string actual;
  /// A failing non-fatal line is a finding, not a failure.
  bool fatal = true;
};

struct VerifyReport {
  std::vector<VerifyLine> lines;

  bool passed() const;
  /// One line per check: PASS, FAIL or NOTE (non-fatal mismatch).
  std::string render() const;
};

struct VerifyOptions {
  std::size_t kmax = 10;
  std::size_t jobs = 0;
  /// Used for census lengths it can hold; may be null.
  const CensusCache* cache = nullptr;
};

inline constexpr std::string_view kSuites[] = {"tables", "routes", "props", "census", "conjecture", "all"};

/// Runs one suite, or every suite for "all". Throws DomainError for an unknown name.
VerifyReport run_verify(std::string_view suite, const VerifyOptions& options);

}  // namespace sc::cli

#endif  // SC_CLI_VERIFY_HPP
