#include "sc/constructor.hpp"

#include <algorithm>
#include <functional>

#include "sc/dsubstring.hpp"

namespace sc {

namespace {

std::vector<Symbol> repeat(Symbol s, std::size_t count) { return std::vector<Symbol>(count, s); }

std::vector<Symbol> concat(std::initializer_list<std::vector<Symbol>> parts) {
  std::vector<Symbol> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<Symbol> from_letters(std::string_view text) {
  std::vector<Symbol> out;
  for (char c : text) out.push_back(static_cast<Symbol>(c - 'a'));
  return out;
}

std::vector<Symbol> distinct_word(std::size_t k) {
  std::vector<Symbol> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = static_cast<Symbol>(i);
  return out;
}

BigCount measure(std::span<const Symbol> w) { return complexity_substrings(w); }

BigCount triangular(std::size_t k) { return BigCount{k * (k + 1) / 2}; }

BigCount from_signed(long long v) { return BigCount(BigInt(static_cast<long>(v))); }

struct FamilyInfo {
  std::size_t min_k;
  std::size_t max_k;
};

FamilyInfo family_range(RecipeFamily f) {
  constexpr std::size_t any = kMaxRecipeLength;
  switch (f) {
    case RecipeFamily::PowerThenLetter: return {1, any};
    case RecipeFamily::PowerBracketed: return {4, any};
    case RecipeFamily::ThreeThenPower: return {3, any};
    case RecipeFamily::BinaryTailEven:
    case RecipeFamily::BinaryTailOdd: return {10, any};
    case RecipeFamily::Fourteen: return {6, 6};
    case RecipeFamily::TwentySix: return {8, 8};
    case RecipeFamily::Thirty: return {9, 9};
    case RecipeFamily::Trivial: return {1, any};
  }
  return {0, 0};
}

}  // namespace

BigCount max_complexity(std::size_t alphabet_size, std::size_t length) {
  if (alphabet_size == 0 || length == 0) throw DomainError("max_complexity needs n >= 1 and k >= 1");
  BigCount total{0u};
  BigInt power(1);
  for (std::size_t i = 1; i <= length; ++i) {
    const std::size_t room = length - i + 1;
    if (cmp(power, room) < 0) power *= static_cast<unsigned long>(alphabet_size);
    total += cmp(power, room) < 0 ? BigCount(power) : BigCount{room};
  }
  return total;
}

std::string_view template_name(RecipeFamily family) {
  switch (family) {
    case RecipeFamily::PowerThenLetter: return "a^{k-1}b";
    case RecipeFamily::PowerBracketed: return "ab^{k-3}aa";
    case RecipeFamily::ThreeThenPower: return "abcd^{k-3}";
    case RecipeFamily::BinaryTailEven: return "ab^{k-7}abbabb";
    case RecipeFamily::BinaryTailOdd: return "ab^{k-7}ababba";
    case RecipeFamily::Fourteen: return "ab^4a";
    case RecipeFamily::TwentySix: return "ab^4aab";
    case RecipeFamily::Thirty: return "ab^5aba";
    case RecipeFamily::Trivial: return "a^k";
  }
  return "?";
}

ConstructionRecipe::ConstructionRecipe(RecipeFamily family, std::size_t k) : family_(family) {
  const auto range = family_range(family);
  if (k < range.min_k || k > range.max_k) {
    throw DomainError(std::string(template_name(family)) + " is not defined for k = " + std::to_string(k));
  }
  const auto kk = static_cast<long long>(k);
  long long claimed = 0;
  switch (family) {
    case RecipeFamily::PowerThenLetter:
      symbols_ = concat({repeat(0, k - 1), {1}});
      claimed = 2 * kk - 1;
      break;
    case RecipeFamily::PowerBracketed:
      symbols_ = concat({{0}, repeat(1, k - 3), {0, 0}});
      claimed = 4 * kk - 8;
      break;
    case RecipeFamily::ThreeThenPower:
      symbols_ = concat({{0, 1, 2}, repeat(3, k - 3)});
      claimed = 4 * kk - 6;
      break;
    case RecipeFamily::BinaryTailEven:
      symbols_ = concat({{0}, repeat(1, k - 7), from_letters("abbabb")});
      claimed = 8 * kk - 46;
      break;
    case RecipeFamily::BinaryTailOdd:
      symbols_ = concat({{0}, repeat(1, k - 7), from_letters("ababba")});
      claimed = 8 * kk - 42;
      break;
    case RecipeFamily::Fourteen:
      symbols_ = from_letters("abbbba");
      claimed = 14;
      break;
    case RecipeFamily::TwentySix:
      symbols_ = from_letters("abbbbaab");
      claimed = 26;
      break;
    case RecipeFamily::Thirty:
      symbols_ = from_letters("abbbbbaba");
      claimed = 30;
      break;
    case RecipeFamily::Trivial:
      symbols_ = repeat(0, k);
      claimed = kk;
      break;
  }
  claimed_ = from_signed(claimed);
  const BigCount measured = measure(symbols_);
  if (measured != claimed_) {
    throw InternalInvariantBroken(std::string(template_name(family)) + " at k = " + std::to_string(k) +
                                  " measured " + measured.to_string() + ", expected " + claimed_.to_string());
  }
}

bool is_exceptional_complexity(const BigCount& target, bool binary_only) {
  if (!target.fits_u64()) return false;
  const auto c = target.to_u64();
  if (c == 1 || c == 2 || c == 4) return true;
  return binary_only && (c == 6 || c == 10 || c == 18 || c == 22);
}

std::optional<ConstructionRecipe> construct_with_complexity(const BigCount& target, bool binary_only) {
  if (target.is_zero() || is_exceptional_complexity(target, binary_only)) return std::nullopt;
  if (!target.fits_u64() || target.to_u64() / 2 + 2 > kMaxRecipeLength) {
    throw CapacityExceeded("witness for complexity " + target.to_string() + " is too long to materialize");
  }
  const std::uint64_t c = target.to_u64();
  if (c % 2 == 1) return ConstructionRecipe(RecipeFamily::PowerThenLetter, (c + 1) / 2);
  if (c % 4 == 0) return ConstructionRecipe(RecipeFamily::PowerBracketed, c / 4 + 2);
  // c = 4h + 2
  const std::uint64_t h = (c - 2) / 4;
  if (!binary_only) return ConstructionRecipe(RecipeFamily::ThreeThenPower, h + 2);
  switch (c) {
    case 14: return ConstructionRecipe(RecipeFamily::Fourteen, 6);
    case 26: return ConstructionRecipe(RecipeFamily::TwentySix, 8);
    case 30: return ConstructionRecipe(RecipeFamily::Thirty, 9);
    default: break;
  }
  if (c < 34) throw InternalInvariantBroken("no binary case for complexity " + std::to_string(c));
  if (h % 2 == 0) return ConstructionRecipe(RecipeFamily::BinaryTailEven, h / 2 + 6);
  return ConstructionRecipe(RecipeFamily::BinaryTailOdd, (h - 1) / 2 + 6);
}

Identity parse_identity(char id) {
  if (id < 'a' || id > 'i') throw DomainError(std::string("unknown identity '") + id + "'");
  return static_cast<Identity>(id - 'a');
}

bool IdentityCheck::holds() const {
  switch (relation) {
    case Relation::Equal: return measured == expected;
    case Relation::AtLeast: return measured >= expected;
    case Relation::AtMost: return measured <= expected;
  }
  return false;
}

bool IdentityResult::holds() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.informational || c.holds(); });
}

IdentityResult identity_check(Identity id, const IdentityParams& params) {
  IdentityResult result{id, {}};
  auto add = [&](std::string label, std::vector<Symbol> word, BigCount expected, Relation rel, bool info = false) {
    BigCount measured = measure(word);
    result.checks.push_back({std::move(label), std::move(word), std::move(expected), std::move(measured), rel, info});
  };
  auto require = [](bool ok, const char* what) {
    if (!ok) throw DomainError(what);
  };
  const std::size_t k = params.k;

  switch (id) {
    case Identity::A: {
      if (params.p) {
        const std::size_t len = params.p->size();
        require(len >= 1, "a) needs a non-empty word");
        add("K(p) >= k", *params.p, BigCount{len}, Relation::AtLeast);
        add("K(p) <= k(k+1)/2", *params.p, triangular(len), Relation::AtMost);
      } else {
        require(k >= 1, "a) needs k >= 1");
        add("K(a^k) = k", repeat(0, k), BigCount{k}, Relation::Equal);
        add("K(distinct) = k(k+1)/2", distinct_word(k), triangular(k), Relation::Equal);
      }
      break;
    }
    case Identity::B:
      require(k >= 1, "b) needs k >= 1");
      add("K(a^k) = k", repeat(0, k), BigCount{k}, Relation::Equal);
      break;
    case Identity::C: {
      std::vector<Symbol> prefix;
      if (params.p) {
        prefix = *params.p;
      } else {
        require(k >= 2, "c) needs k >= 2");
        for (std::size_t j = 0; j + 1 < k; ++j) prefix.push_back(static_cast<Symbol>(j % 2));
      }
      require(!prefix.empty(), "c) needs a non-empty prefix");
      const Symbol fresh = *std::max_element(prefix.begin(), prefix.end()) + 1;
      auto word = prefix;
      word.push_back(fresh);
      const std::size_t len = word.size();
      add("K(p x) = k + K(p)", std::move(word), BigCount{len} + measure(prefix), Relation::Equal);
      break;
    }
    case Identity::D: {
      if (params.p) {
        const auto& p = *params.p;
        require(!p.empty() && canonicalize(p).num_blocks() >= 2, "d) needs a nontrivial word");
        add("K(p) >= 2k-1", p, BigCount{2 * p.size() - 1}, Relation::AtLeast);
        add("K(p) <= k(k+1)/2", p, triangular(p.size()), Relation::AtMost);
      } else {
        require(k >= 2, "d) needs k >= 2");
        add("K(a^{k-1}b) = 2k-1", concat({repeat(0, k - 1), {1}}), BigCount{2 * k - 1}, Relation::Equal);
        add("K(distinct) = k(k+1)/2", distinct_word(k), triangular(k), Relation::Equal);
      }
      break;
    }
    case Identity::E: {
      const std::size_t i = params.i;
      require(k >= 2 && i >= 1 && i <= k / 2, "e) needs 1 <= i <= floor(k/2)");
      const auto ki = static_cast<long long>(k), ii = static_cast<long long>(i);
      add("K(a^{i-1}ba^{k-i}) = (i+1)k - i^2", concat({repeat(0, i - 1), {1}, repeat(0, k - i)}),
          from_signed((ii + 1) * ki - ii * ii), Relation::Equal);
      break;
    }
    case Identity::F: {
      if (params.p) {
        const auto& p = *params.p;
        require(!p.empty(), "f) needs a non-empty word");
        const std::size_t letters = canonicalize(p).num_blocks();
        const std::size_t ell = params.ell == 0 ? letters : params.ell;
        require(ell <= letters, "f) word has fewer than l letters");
        const std::size_t len = p.size();
        add("K(p) >= kl - l(l-1)/2", p, BigCount{len * ell - ell * (ell - 1) / 2}, Relation::AtLeast);
      } else {
        const std::size_t ell = params.ell;
        require(ell >= 1 && ell <= k, "f) needs 1 <= l <= k");
        // l-1 distinct letters followed by b^{k-l+1}: length k, l letters in total
        auto word = concat({distinct_word(ell - 1), repeat(static_cast<Symbol>(ell - 1), k - ell + 1)});
        const BigCount bound{k * ell - ell * (ell - 1) / 2};
        add("K(w) >= kl - l(l-1)/2", word, bound, Relation::AtLeast);
        add("K(a_1..a_{l-1}b^{k-l+1}) = kl - l(l-1)/2", std::move(word), bound, Relation::Equal, true);
      }
      break;
    }
    case Identity::G: {
      std::vector<Symbol> p, q;
      if (params.p) {
        p = *params.p;
      } else {
        require(k >= 1, "g) needs k >= 1");
        for (std::size_t j = 0; j < k; ++j) p.push_back(static_cast<Symbol>(j % 2));
      }
      if (params.q) {
        q = *params.q;
      } else {
        require(params.m >= 1, "g) needs m >= 1");
        q = distinct_word(params.m);
      }
      require(!p.empty() && !q.empty(), "g) needs non-empty words");
      const Symbol shift = *std::max_element(p.begin(), p.end()) + 1;
      for (auto& s : q) s += shift;
      BigCount expected = measure(p) + measure(q) + BigCount{p.size() * q.size()};
      add("K(pq) = K(p) + K(q) + km", concat({p, q}), std::move(expected), Relation::Equal);
      break;
    }
    case Identity::H: {
      require(k >= 1 && params.n >= 1, "h) needs k >= 1 and n >= 1");
      const auto p = distinct_word(k);
      auto reversed = p;
      std::reverse(reversed.begin(), reversed.end());
      std::vector<Symbol> power;
      for (std::size_t j = 0; j < params.n; ++j) power.insert(power.end(), p.begin(), p.end());
      add("K(p) = k(k+1)/2", p, triangular(k), Relation::Equal);
      add("K(pp^R) = 2k^2", concat({p, reversed}), BigCount{2 * k * k}, Relation::Equal);
      add("K(p^n) = k(k+1)/2 + (n-1)k^2", std::move(power), triangular(k) + BigCount{(params.n - 1) * k * k},
          Relation::Equal);
      break;
    }
    case Identity::I: {
      const std::size_t n = params.n;
      require(k >= 1 && n >= 1 && n <= k, "i) needs 1 <= n <= k");
      const auto p = distinct_word(k);
      add("K(x_1..x_k x_1..x_n) = k(k+1)/2 + nk", concat({p, distinct_word(n)}), triangular(k) + BigCount{n * k},
          Relation::Equal);
      break;
    }
  }
  return result;
}

namespace {

struct FixedLengthSearch {
  std::uint64_t target;
  std::size_t length;
  std::size_t alphabet;
  bool first_only;
  bool nontrivial;
  std::vector<PatternWord>& out;

  AppendComplexity word{};
  std::size_t blocks = 0;

  bool done() const { return first_only && !out.empty(); }

  // Maximum complexity gain from appending until `length`: the j-th word
  // length contributes at most j new substrings.
  std::uint64_t max_gain(std::size_t from) const {
    return (length * (length + 1) - from * (from + 1)) / 2;
  }

  void visit() {
    const std::uint64_t k_now = word.complexity();
    const std::size_t len = word.size();
    if (len == length || k_now >= target) {
      if (k_now == target && len == length && (!nontrivial || blocks >= 2)) {
        out.emplace_back(std::vector<Symbol>(word.symbols().begin(), word.symbols().end()));
      }
      return;
    }
    if (k_now + (length - len) > target || k_now + max_gain(len) < target) return;
    const std::size_t limit = std::min(blocks + 1, alphabet);
    for (std::size_t s = 0; s < limit && !done(); ++s) {
      const bool fresh = s == blocks;
      word.push(static_cast<Symbol>(s));
      if (fresh) ++blocks;
      visit();
      if (fresh) --blocks;
      word.pop();
    }
  }

  void run() {
    word = AppendComplexity(length);
    blocks = 0;
    word.push(0);
    blocks = 1;
    visit();
  }
};

}  // namespace

std::vector<PatternWord> search(const SearchRequest& request) {
  if (request.target.is_zero()) throw DomainError("target complexity must be >= 1");
  if (request.alphabet_size == 0) throw DomainError("alphabet size must be >= 1");
  const std::uint64_t c = request.target.to_u64();
  const bool first_only = request.mode == SearchMode::First;
  std::vector<PatternWord> out;

  auto run_length = [&](std::size_t k) {
    if (k == 0 || c < k || c > static_cast<std::uint64_t>(k) * (k + 1) / 2) return;
    FixedLengthSearch s{c, k, request.alphabet_size, first_only, request.nontrivial, out};
    s.run();
  };

  if (request.length) {
    run_length(*request.length);
    return out;
  }
  std::size_t k = 1;
  while (static_cast<std::uint64_t>(k) * (k + 1) / 2 < c) ++k;
  // trivial words have K = k; nontrivial ones have K >= 2k - 1
  const std::uint64_t longest = request.nontrivial ? (c + 1) / 2 : c;
  for (; k <= longest && out.empty(); ++k) run_length(k);
  return out;
}

BigCount count_labelings(const PatternWord& pattern, std::size_t alphabet_size) {
  return falling_factorial(static_cast<unsigned>(alphabet_size), static_cast<unsigned>(pattern.num_blocks()));
}

std::vector<Word> list_labelings(const PatternWord& pattern, std::size_t alphabet_size) {
  const std::size_t m = pattern.num_blocks();
  std::vector<Word> out;
  if (m > alphabet_size) return out;
  std::vector<Symbol> assignment;
  std::vector<bool> used(alphabet_size, false);
  std::function<void()> rec = [&] {
    if (assignment.size() == m) {
      std::vector<Symbol> w;
      w.reserve(pattern.size());
      for (Symbol s : pattern.symbols()) w.push_back(assignment[s]);
      out.emplace_back(std::move(w), alphabet_size);
      return;
    }
    for (std::size_t a = 0; a < alphabet_size; ++a) {
      if (used[a]) continue;
      used[a] = true;
      assignment.push_back(static_cast<Symbol>(a));
      rec();
      assignment.pop_back();
      used[a] = false;
    }
  };
  rec();
  std::sort(out.begin(), out.end(),
            [](const Word& x, const Word& y) { return std::ranges::lexicographical_compare(x.symbols(), y.symbols()); });
  return out;
}

}  // namespace sc
