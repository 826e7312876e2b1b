#ifndef SC_CENSUS_HPP
#define SC_CENSUS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sc/bigcount.hpp"

namespace sc {

/// Longest word length the census accepts (Bell(12) ~ 4.2M patterns).
inline constexpr std::size_t kCensusMaxLength = 12;

/// Number of restricted-growth patterns of length k per (complexity, blocks).
struct PatternCensus {
  std::size_t k = 0;
  /// counts[C][m]: patterns with complexity C and m distinct letters.
  std::vector<std::vector<std::uint64_t>> counts;

  std::uint64_t at(std::uint64_t complexity, std::size_t blocks) const;
};

/// Enumerates every restricted-growth word of length k. `jobs` = 0 uses all
/// hardware threads; the result does not depend on it.
/// Throws CapacityExceeded unless 1 <= k <= kCensusMaxLength.
PatternCensus pattern_census(std::size_t k, std::size_t jobs = 0);

/// f_k(C): how many of the k^k words of length k over a k-letter alphabet
/// have complexity C.
class FrequencyTable {
 public:
  /// Missing entries in [k, k(k+1)/2] are zero. A non-zero count outside
  /// that range is rejected with InternalInvariantBroken.
  FrequencyTable(std::size_t k, const std::map<std::uint64_t, BigCount>& counts);

  std::size_t k() const noexcept { return k_; }
  std::uint64_t min_complexity() const noexcept { return k_; }
  std::uint64_t max_complexity() const noexcept { return k_ * (k_ + 1) / 2; }
  /// Every C in [k, k(k+1)/2], zeros included.
  const std::map<std::uint64_t, BigCount>& counts() const noexcept { return counts_; }
  const BigCount& total() const noexcept { return total_; }
  /// f_k(C), zero outside the stored range.
  BigCount at(std::uint64_t complexity) const;
  /// total == k^k
  bool mass_conserved() const;

  friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;

 private:
  std::size_t k_;
  std::map<std::uint64_t, BigCount> counts_;
  BigCount total_;
};

/// Weights each pattern with m blocks by k!/(k-m)!.
FrequencyTable frequency_table(const PatternCensus& census);
FrequencyTable frequency_table(std::size_t k, std::size_t jobs = 0);

struct CensusCheck {
  std::string label;
  std::uint64_t complexity;
  BigCount expected;
  BigCount actual;

  bool holds() const { return expected == actual; }
};

/// f_k(C) = 0 outside [k, k(k+1)/2], f_k(k) = k, f_k(2k-1) = 3k(k-1) for k >= 3,
/// f_k(k(k+1)/2 - 1) = k(k-1)k!/2, f_k(k(k+1)/2) = k!. Requires k >= 2.
std::vector<CensusCheck> proposition4_report(const FrequencyTable& table);
bool proposition4_check(const FrequencyTable& table);
bool proposition4_check(std::size_t k);

/// f_k(C) = 0 for C in k+1..2k-2 and in 2k..3k-5. Requires k >= 2.
std::vector<CensusCheck> proposition5_report(const FrequencyTable& table);
bool proposition5_check(const FrequencyTable& table);
bool proposition5_check(std::size_t k);

/// (l, i) with k = l(l+1)/2 + 2 + i, l >= 2, 0 <= i <= l; absent for k < 5.
struct ConjectureIndex {
  std::size_t ell;
  std::size_t i;
};
std::optional<ConjectureIndex> conjecture_decomposition(std::size_t k);
/// l(l^2-1)/2 + 3l + 2 + i(l+1) when the decomposition exists.
std::optional<std::uint64_t> conjecture_threshold(std::size_t k);

struct ThresholdReport {
  std::size_t k = 0;
  /// Least C with f_k non-zero on all of [C, k(k+1)/2].
  std::uint64_t b_k = 0;
  std::optional<ConjectureIndex> index;
  std::optional<std::uint64_t> conjecture_value;
  /// conjecture_value is present and equals b_k.
  bool matches = false;
  /// K(a b^{k-l} a b^{l-2}) when the decomposition exists.
  std::optional<std::uint64_t> witness_complexity;

  bool witness_matches() const { return witness_complexity && *witness_complexity == b_k; }
};

ThresholdReport threshold_bk(const FrequencyTable& table);
ThresholdReport threshold_bk(std::size_t k, std::size_t jobs = 0);

/// On-disk store for frequency tables of k in [kFirstCachedLength, kCensusMaxLength].
///
/// One JSON file per k holding the format tag, version, k, the
/// complexity -> count records as decimal strings and an FNV-1a checksum
/// over the records.
class CensusCache {
 public:
  static constexpr int kVersion = 1;
  static constexpr std::size_t kFirstCachedLength = 7;

  explicit CensusCache(std::filesystem::path directory) : dir_(std::move(directory)) {}

  /// $SC_CACHE_DIR, else $XDG_CACHE_HOME/sc, else $HOME/.cache/sc, else ./.sc-cache.
  static CensusCache from_environment();

  const std::filesystem::path& directory() const noexcept { return dir_; }
  std::filesystem::path path_for(std::size_t k) const;

  /// nullopt when the file is missing or fails validation.
  std::optional<FrequencyTable> load(std::size_t k) const;
  void store(const FrequencyTable& table) const;

 private:
  std::filesystem::path dir_;
};

std::string serialize_census(const FrequencyTable& table);
/// Throws DomainError on a wrong tag, version, checksum or total.
FrequencyTable parse_census(std::string_view text);

/// frequency_table, reading and filling `cache` for cacheable k.
FrequencyTable frequency_table_cached(std::size_t k, const CensusCache& cache, std::size_t jobs = 0);

}  // namespace sc

#endif  // SC_CENSUS_HPP
