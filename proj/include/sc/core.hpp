#ifndef SC_CORE_HPP
#define SC_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sc/bigcount.hpp"
#include "sc/errors.hpp"

namespace sc {

using Symbol = std::uint32_t;

/// A finite non-empty word over the alphabet {0, ..., alphabet_size - 1}.
class Word {
 public:
  /// Throws InvalidWord if empty, if alphabet_size is 0 or if a symbol is out of range.
  Word(std::vector<Symbol> symbols, std::size_t alphabet_size);

  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  /// True when no symbol occurs twice.
  bool all_distinct() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
  std::size_t alphabet_size_;
};

/// A word in restricted-growth form: symbols are numbered by first occurrence.
class PatternWord {
 public:
  /// Throws InvalidWord unless `symbols` is non-empty and restricted-growth.
  explicit PatternWord(std::vector<Symbol> symbols);

  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  std::size_t num_blocks() const noexcept { return num_blocks_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  /// The pattern as a word over exactly num_blocks() letters.
  Word word() const { return Word(symbols_, num_blocks_); }

  friend bool operator==(const PatternWord&, const PatternWord&) = default;
  friend auto operator<=>(const PatternWord& a, const PatternWord& b) { return a.symbols_ <=> b.symbols_; }

 private:
  std::vector<Symbol> symbols_;
  std::size_t num_blocks_;
};

/// Maximal index gap d between consecutive chosen positions of a d-substring.
class GapParam {
 public:
  /// Throws DomainError for d < 1.
  explicit GapParam(long long d);
  std::size_t value() const noexcept { return d_; }
  friend bool operator==(GapParam, GapParam) = default;

 private:
  std::size_t d_;
};

/// Letters are numbered by first occurrence ("ISIS" -> 0 1 0 1 over 2 letters).
Word word_from_text(std::string_view text);

PatternWord canonicalize(std::span<const Symbol> symbols);
inline PatternWord canonicalize(const Word& w) { return canonicalize(w.symbols()); }

/// Renders symbol ids as 'a'..'z' then 'A'..'Z'. Throws InvalidWord past 52 symbols.
std::string render(std::span<const Symbol> symbols);
inline std::string render(const Word& w) { return render(w.symbols()); }
inline std::string render(const PatternWord& p) { return render(p.symbols()); }

}  // namespace sc

#endif  // SC_CORE_HPP
