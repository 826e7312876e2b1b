#ifndef SC_DSUBSTRING_HPP
#define SC_DSUBSTRING_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sc/bigcount.hpp"
#include "sc/core.hpp"

namespace sc {

/// A d-substring of w = x_1..x_k is x_{i_1}..x_{i_s} with s >= 1 and
/// 1 <= i_{j+1} - i_j <= d. K_d(w) counts the distinct ones.

/// Brute-force enumeration of the distinct d-substrings, sorted lexicographically.
///
/// Walks every index chain and dedups through a trie. Exponential in |w| for
/// large d; meant as an oracle. Throws CapacityExceeded once more than
/// `max_count` distinct d-substrings have been found.
std::vector<std::vector<Symbol>> enumerate_d_substrings(const Word& w, GapParam d,
                                                        std::optional<std::size_t> max_count = std::nullopt);

/// Same traversal as enumerate_d_substrings but only counts trie nodes.
BigCount count_d_substrings_by_enumeration(const Word& w, GapParam d,
                                           std::optional<std::size_t> max_count = std::nullopt);

/// Determinized state of the position automaton: the set of 1-based positions
/// the current d-substring may end at. All positions carry the same symbol.
struct PositionAutomatonState {
  std::vector<std::uint32_t> positions;

  std::uint32_t min_position() const { return positions.front(); }
  friend auto operator<=>(const PositionAutomatonState&, const PositionAutomatonState&) = default;
};

/// Subset construction over word positions. From the virtual start every
/// position is enterable; from position i the positions i+1 .. i+d are.
class PositionAutomaton {
 public:
  using Transition = std::pair<Symbol, PositionAutomatonState>;

  PositionAutomaton(const Word& w, GapParam d) : word_(w), d_(d.value()) {}

  /// Outgoing transitions of the start state, ordered by symbol.
  std::vector<Transition> start_transitions() const;
  /// Outgoing transitions of `s`, ordered by symbol.
  std::vector<Transition> transitions(const PositionAutomatonState& s) const;

  /// Number of non-empty paths from the start, which is K_d(w).
  BigCount count_paths() const;

 private:
  std::vector<Transition> group_by_symbol(const std::vector<bool>& reachable) const;

  Word word_;
  std::size_t d_;
};

/// Exact K_d(w) via the determinized position automaton.
BigCount complexity_automaton(const Word& w, GapParam d);

/// K_1(w): distinct non-empty contiguous substrings, via a suffix automaton.
BigCount complexity_substrings(std::span<const Symbol> symbols);
inline BigCount complexity_substrings(const Word& w) { return complexity_substrings(w.symbols()); }

/// a_{i,d} for i = 1..k on a word of pairwise distinct symbols: the number of
/// d-substrings ending at position i. Throws NotAllDistinct otherwise.
std::vector<BigCount> a_profile(const Word& w, GapParam d);

enum class Method { Auto, Automaton, Oracle, Suffix };

/// K_d(w) by the requested route. Auto picks Suffix for d = 1 and Automaton
/// otherwise. Oracle refuses words longer than kOracleMaxLength; Suffix
/// requires d = 1.
BigCount complexity(const Word& w, GapParam d, Method method = Method::Auto);

inline constexpr std::size_t kOracleMaxLength = 20;

/// K_1 maintained under push/pop of a final symbol.
///
/// For each earlier end position e the row keeps the length of the longest
/// common suffix of w[0..e] and the whole word; appending x adds
/// |w|+1 - max_e row[e] new substrings. Each push is O(|w|).
class AppendComplexity {
 public:
  AppendComplexity() = default;
  explicit AppendComplexity(std::size_t reserve_length);

  /// Appends `s` and returns the new complexity.
  std::uint64_t push(Symbol s);
  void pop();

  std::uint64_t complexity() const noexcept { return levels_.empty() ? 0 : levels_.back(); }
  std::size_t size() const noexcept { return symbols_.size(); }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

 private:
  // The row of a word of length L has L-1 entries and starts at (L-1)(L-2)/2.
  static std::size_t row_start(std::size_t length) { return length < 2 ? 0 : (length - 1) * (length - 2) / 2; }

  std::vector<Symbol> symbols_;
  std::vector<std::uint64_t> levels_;
  std::vector<std::uint32_t> rows_;
};

}  // namespace sc

#endif  // SC_DSUBSTRING_HPP
