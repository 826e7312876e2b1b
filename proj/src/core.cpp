#include "sc/core.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace sc {

namespace {

constexpr std::string_view kLetters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

bool is_ascii_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

}  // namespace

Word::Word(std::vector<Symbol> symbols, std::size_t alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  if (symbols_.empty()) throw InvalidWord("empty word");
  if (alphabet_size_ == 0) throw InvalidWord("alphabet size must be positive");
  for (Symbol s : symbols_) {
    if (s >= alphabet_size_) {
      throw InvalidWord("symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(alphabet_size_));
    }
  }
}

bool Word::all_distinct() const {
  std::vector<Symbol> sorted = symbols_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

PatternWord::PatternWord(std::vector<Symbol> symbols) : symbols_(std::move(symbols)), num_blocks_(0) {
  if (symbols_.empty()) throw InvalidWord("empty pattern");
  for (Symbol s : symbols_) {
    if (s > num_blocks_) throw InvalidWord("pattern is not in restricted-growth form");
    if (s == num_blocks_) ++num_blocks_;
  }
}

GapParam::GapParam(long long d) : d_(0) {
  if (d < 1) throw DomainError("gap parameter d must be >= 1, got " + std::to_string(d));
  d_ = static_cast<std::size_t>(d);
}

Word word_from_text(std::string_view text) {
  if (text.empty()) throw InvalidWord("empty word");
  std::array<int, 128> ids;
  ids.fill(-1);
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  Symbol next = 0;
  for (char c : text) {
    if (!is_ascii_letter(c)) throw InvalidWord(std::string("non-letter character '") + c + "' in word");
    int& id = ids[static_cast<unsigned char>(c)];
    if (id < 0) id = static_cast<int>(next++);
    symbols.push_back(static_cast<Symbol>(id));
  }
  return Word(std::move(symbols), next);
}

PatternWord canonicalize(std::span<const Symbol> symbols) {
  std::unordered_map<Symbol, Symbol> relabel;
  std::vector<Symbol> out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) {
    auto [it, inserted] = relabel.try_emplace(s, static_cast<Symbol>(relabel.size()));
    out.push_back(it->second);
  }
  return PatternWord(std::move(out));
}

std::string render(std::span<const Symbol> symbols) {
  std::string out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) {
    if (s >= kLetters.size()) throw InvalidWord("symbol " + std::to_string(s) + " has no letter rendering");
    out.push_back(kLetters[s]);
  }
  return out;
}

}  // namespace sc
