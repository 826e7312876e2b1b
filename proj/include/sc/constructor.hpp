#ifndef SC_CONSTRUCTOR_HPP
#define SC_CONSTRUCTOR_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sc/bigcount.hpp"
#include "sc/core.hpp"

namespace sc {

// Everything here is about K = K_1, the number of distinct non-empty
// contiguous substrings.

/// sum_{i=1}^{k} min(n^i, k-i+1): the largest complexity of a length-k word
/// over n letters.
BigCount max_complexity(std::size_t alphabet_size, std::size_t length);

/// Template words with a known complexity.
enum class RecipeFamily {
  PowerThenLetter,    // a^{k-1} b          2k - 1     k >= 1
  PowerBracketed,     // a b^{k-3} a a      4k - 8     k >= 4
  ThreeThenPower,     // a b c d^{k-3}      4k - 6     k >= 3
  BinaryTailEven,     // a b^{k-7} abbabb   8k - 46    k >= 10
  BinaryTailOdd,      // a b^{k-7} ababba   8k - 42    k >= 10
  Fourteen,           // a b^4 a            14         k = 6
  TwentySix,          // a b^4 a a b        26         k = 8
  Thirty,             // a b^5 aba          30         k = 9
  Trivial,            // a^k                k
};

std::string_view template_name(RecipeFamily family);

/// A template rendered at length k, measured on creation.
class ConstructionRecipe {
 public:
  /// Throws DomainError when k is outside the family's range and
  /// InternalInvariantBroken if the measured complexity differs from the
  /// family's formula.
  ConstructionRecipe(RecipeFamily family, std::size_t k);

  RecipeFamily family() const noexcept { return family_; }
  std::size_t length() const noexcept { return symbols_.size(); }
  const BigCount& claimed_complexity() const noexcept { return claimed_; }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  std::string text() const { return render(symbols_); }

 private:
  RecipeFamily family_;
  std::vector<Symbol> symbols_;
  BigCount claimed_;
};

/// Longest word a recipe will materialize.
inline constexpr std::size_t kMaxRecipeLength = std::size_t{1} << 20;

/// A word with at least two distinct letters and complexity exactly C, or
/// nullopt when none exists: C in {1, 2, 4}, and additionally
/// {6, 10, 18, 22} when restricted to two letters.
/// Throws CapacityExceeded when the witness would exceed kMaxRecipeLength.
std::optional<ConstructionRecipe> construct_with_complexity(const BigCount& target, bool binary_only);

/// Membership in the exceptional sets above.
bool is_exceptional_complexity(const BigCount& target, bool binary_only);

enum class Identity { A, B, C, D, E, F, G, H, I };

/// Throws DomainError for anything other than 'a'..'i'.
Identity parse_identity(char id);

enum class Relation { Equal, AtLeast, AtMost };

struct IdentityCheck {
  std::string label;
  std::vector<Symbol> word;
  BigCount expected;
  BigCount measured;
  Relation relation = Relation::Equal;
  /// Reported but not part of holds() for the overall result.
  bool informational = false;

  bool holds() const;
};

/// Unused fields are ignored. `p`/`q` replace the default witness words
/// where an identity accepts a caller-supplied word.
struct IdentityParams {
  std::size_t k = 0;
  std::size_t i = 0;
  std::size_t ell = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  std::optional<std::vector<Symbol>> p;
  std::optional<std::vector<Symbol>> q;
};

struct IdentityResult {
  Identity id;
  std::vector<IdentityCheck> checks;

  /// All non-informational checks hold.
  bool holds() const;
};

/// Builds the witness words of one of the identities a)..i) and measures them.
///
///  a  k <= K <= k(k+1)/2                     (any word; extremes a^k, distinct)
///  b  K(a^k) = k
///  c  K(x_1..x_k) = k + K(x_1..x_{k-1})     when x_k is new
///  d  2k-1 <= K <= k(k+1)/2                  (nontrivial words)
///  e  K(a^{i-1} b a^{k-i}) = (i+1)k - i^2    1 <= i <= k/2
///  f  K >= k l - l(l-1)/2                    (at least l letters)
///  g  K(pq) = K(p) + K(q) + km               (disjoint alphabets, |p|=k, |q|=m)
///  h  K(p) = k(k+1)/2, K(p p^R) = 2k^2, K(p^n) = k(k+1)/2 + (n-1)k^2   (distinct p)
///  i  K(x_1..x_k x_1..x_n) = k(k+1)/2 + nk   1 <= n <= k, distinct x
///
/// Throws DomainError when a parameter is outside the identity's range.
IdentityResult identity_check(Identity id, const IdentityParams& params);

enum class SearchMode { First, AllCanonical };

struct SearchRequest {
  BigCount target;
  /// Fixed length (find a k-length word); unset means minimal length.
  std::optional<std::size_t> length;
  std::size_t alphabet_size = 26;
  SearchMode mode = SearchMode::First;
  /// Only report words with at least two distinct letters.
  bool nontrivial = false;
};

/// Depth-first branch and bound over canonical words.
///
/// A prefix is extended only while its complexity is below the target and,
/// with a fixed length, it is shorter than that length; extensions use the
/// letters seen so far plus one fresh letter. With a fixed length, prefixes
/// that cannot reach the target even when every later append adds the
/// maximum (or minimum) number of substrings are also cut, which changes no
/// output. Without a length, lengths are tried in increasing order starting
/// at the smallest k with k(k+1)/2 >= target, and the first length with a
/// solution is returned.
///
/// Results are in lexicographic order.
std::vector<PatternWord> search(const SearchRequest& request);

/// Number of words over an alphabet of the given size sharing this pattern.
BigCount count_labelings(const PatternWord& pattern, std::size_t alphabet_size);
/// Those words, in lexicographic order of their symbol sequences.
std::vector<Word> list_labelings(const PatternWord& pattern, std::size_t alphabet_size);

}  // namespace sc

#endif  // SC_CONSTRUCTOR_HPP
