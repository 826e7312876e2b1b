#include "sc/dsubstring.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>

namespace sc {

namespace {

class Trie {
 public:
  Trie() : nodes_(1) {}

  /// Child of `node` labelled `s`, created on demand.
  std::uint32_t child(std::uint32_t node, Symbol s) {
    for (auto [label, target] : nodes_[node].children) {
      if (label == s) return target;
    }
    const auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_[node].children.emplace_back(s, id);
    nodes_.emplace_back();
    return id;
  }

  std::size_t size() const { return nodes_.size(); }

  void collect(std::vector<std::vector<Symbol>>& out) const {
    std::vector<Symbol> path;
    collect(0, path, out);
  }

 private:
  struct Node {
    std::vector<std::pair<Symbol, std::uint32_t>> children;
  };

  void collect(std::uint32_t node, std::vector<Symbol>& path, std::vector<std::vector<Symbol>>& out) const {
    auto children = nodes_[node].children;
    std::sort(children.begin(), children.end());
    for (auto [label, target] : children) {
      path.push_back(label);
      out.push_back(path);
      collect(target, path, out);
      path.pop_back();
    }
  }

  std::vector<Node> nodes_;
};

// Fills `trie` with every d-substring of w. A (trie node, position) pair is
// expanded once: its continuations depend on nothing else.
void build_d_substring_trie(const Word& w, std::size_t d, std::optional<std::size_t> max_count, Trie& trie) {
  const std::size_t k = w.size();
  std::unordered_set<std::uint64_t> expanded;
  std::vector<std::pair<std::uint32_t, std::size_t>> stack;

  auto check_capacity = [&] {
    if (max_count && trie.size() - 1 > *max_count) {
      throw CapacityExceeded("more than " + std::to_string(*max_count) + " distinct d-substrings");
    }
  };

  for (std::size_t i = 0; i < k; ++i) stack.emplace_back(trie.child(0, w[i]), i);
  check_capacity();
  while (!stack.empty()) {
    auto [node, pos] = stack.back();
    stack.pop_back();
    if (!expanded.insert(static_cast<std::uint64_t>(node) * (k + 1) + pos).second) continue;
    for (std::size_t j = pos + 1; j <= std::min(k - 1, pos + d); ++j) {
      stack.emplace_back(trie.child(node, w[j]), j);
    }
    check_capacity();
  }
}

}  // namespace

std::vector<std::vector<Symbol>> enumerate_d_substrings(const Word& w, GapParam d,
                                                        std::optional<std::size_t> max_count) {
  Trie trie;
  build_d_substring_trie(w, d.value(), max_count, trie);
  std::vector<std::vector<Symbol>> out;
  out.reserve(trie.size() - 1);
  trie.collect(out);
  std::sort(out.begin(), out.end());
  return out;
}

BigCount count_d_substrings_by_enumeration(const Word& w, GapParam d, std::optional<std::size_t> max_count) {
  Trie trie;
  build_d_substring_trie(w, d.value(), max_count, trie);
  return BigCount{trie.size() - 1};
}

std::vector<PositionAutomaton::Transition> PositionAutomaton::group_by_symbol(
    const std::vector<bool>& reachable) const {
  std::map<Symbol, PositionAutomatonState> by_symbol;
  for (std::size_t j = 1; j < reachable.size(); ++j) {
    if (reachable[j]) by_symbol[word_[j - 1]].positions.push_back(static_cast<std::uint32_t>(j));
  }
  std::vector<Transition> out;
  out.reserve(by_symbol.size());
  for (auto& [s, state] : by_symbol) out.emplace_back(s, std::move(state));
  return out;
}

std::vector<PositionAutomaton::Transition> PositionAutomaton::start_transitions() const {
  return group_by_symbol(std::vector<bool>(word_.size() + 1, true));
}

std::vector<PositionAutomaton::Transition> PositionAutomaton::transitions(const PositionAutomatonState& s) const {
  const std::size_t k = word_.size();
  std::vector<bool> reachable(k + 1, false);
  // positions are sorted, so the reachable windows are visited left to right
  std::size_t covered = 0;
  for (std::uint32_t i : s.positions) {
    const std::size_t hi = std::min(k, i + d_);
    for (std::size_t j = std::max<std::size_t>(i + 1, covered + 1); j <= hi; ++j) reachable[j] = true;
    covered = std::max(covered, hi);
  }
  return group_by_symbol(reachable);
}

BigCount PositionAutomaton::count_paths() const {
  // count(S) = sum over successors T of (1 + count(T)). The graph is acyclic
  // because min_position strictly increases along every transition.
  std::map<std::vector<std::uint32_t>, BigCount> memo;
  auto count = [&](auto&& self, const PositionAutomatonState& s) -> BigCount {
    if (auto it = memo.find(s.positions); it != memo.end()) return it->second;
    BigCount total{0u};
    for (const auto& [symbol, next] : transitions(s)) total += BigCount{1u} + self(self, next);
    memo.emplace(s.positions, total);
    return total;
  };
  BigCount total{0u};
  for (const auto& [symbol, next] : start_transitions()) total += BigCount{1u} + count(count, next);
  return total;
}

BigCount complexity_automaton(const Word& w, GapParam d) { return PositionAutomaton(w, d).count_paths(); }

BigCount complexity_substrings(std::span<const Symbol> symbols) {
  if (symbols.empty()) throw InvalidWord("empty word");
  // Suffix automaton; distinct substrings = sum of len(v) - len(link(v)).
  struct State {
    std::size_t len = 0;
    long link = -1;
    std::map<Symbol, std::size_t> next;
  };
  std::vector<State> st;
  st.reserve(2 * symbols.size());
  st.emplace_back();
  std::size_t last = 0;
  for (Symbol c : symbols) {
    const std::size_t cur = st.size();
    st.push_back({st[last].len + 1, -1, {}});
    long p = static_cast<long>(last);
    while (p != -1 && !st[p].next.contains(c)) {
      st[p].next[c] = cur;
      p = st[p].link;
    }
    if (p == -1) {
      st[cur].link = 0;
    } else {
      const std::size_t q = st[p].next[c];
      if (st[p].len + 1 == st[q].len) {
        st[cur].link = static_cast<long>(q);
      } else {
        const std::size_t clone = st.size();
        st.push_back({st[p].len + 1, st[q].link, st[q].next});
        while (p != -1 && st[p].next[c] == q) {
          st[p].next[c] = clone;
          p = st[p].link;
        }
        st[q].link = static_cast<long>(clone);
        st[cur].link = static_cast<long>(clone);
      }
    }
    last = cur;
  }
  std::uint64_t total = 0;
  for (std::size_t v = 1; v < st.size(); ++v) total += st[v].len - st[st[v].link].len;
  return BigCount{total};
}

std::vector<BigCount> a_profile(const Word& w, GapParam d) {
  if (!w.all_distinct()) throw NotAllDistinct("a_profile requires pairwise distinct symbols");
  const std::size_t k = w.size();
  std::vector<BigCount> a(k);
  for (std::size_t i = 0; i < k; ++i) {
    BigCount v{1u};
    for (std::size_t back = 1; back <= d.value() && back <= i; ++back) v += a[i - back];
    a[i] = std::move(v);
  }
  return a;
}

BigCount complexity(const Word& w, GapParam d, Method method) {
  switch (method) {
    case Method::Auto:
      return d.value() == 1 ? complexity_substrings(w) : complexity_automaton(w, d);
    case Method::Automaton:
      return complexity_automaton(w, d);
    case Method::Oracle:
      if (w.size() > kOracleMaxLength) {
        throw CapacityExceeded("oracle limited to words of length <= " + std::to_string(kOracleMaxLength));
      }
      return count_d_substrings_by_enumeration(w, d);
    case Method::Suffix:
      if (d.value() != 1) throw DomainError("suffix method computes K_1 only");
      return complexity_substrings(w);
  }
  throw DomainError("unknown method");
}

AppendComplexity::AppendComplexity(std::size_t reserve_length) {
  symbols_.reserve(reserve_length);
  levels_.reserve(reserve_length);
  rows_.reserve(row_start(reserve_length + 1));
}

std::uint64_t AppendComplexity::push(Symbol s) {
  const std::size_t n = symbols_.size();
  const std::size_t prev = row_start(n);
  const std::size_t cur = row_start(n + 1);
  rows_.resize(cur + n);
  std::uint32_t longest = 0;
  for (std::size_t e = 0; e < n; ++e) {
    std::uint32_t v = 0;
    if (symbols_[e] == s) v = 1 + (e > 0 ? rows_[prev + e - 1] : 0);
    rows_[cur + e] = v;
    longest = std::max(longest, v);
  }
  symbols_.push_back(s);
  levels_.push_back(complexity() + (n + 1) - longest);
  return levels_.back();
}

void AppendComplexity::pop() {
  if (symbols_.empty()) throw DomainError("pop on empty word");
  symbols_.pop_back();
  levels_.pop_back();
  rows_.resize(row_start(symbols_.size() + 1));
}

}  // namespace sc
