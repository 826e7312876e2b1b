#include "sc/census.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "sc/core.hpp"
#include "sc/dsubstring.hpp"

namespace sc {

namespace {

using Counts = std::vector<std::vector<std::uint64_t>>;

Counts empty_counts(std::size_t k) {
  return Counts(k * (k + 1) / 2 + 1, std::vector<std::uint64_t>(k + 1, 0));
}

// Every restricted-growth word of length `prefix_len`.
void collect_prefixes(std::size_t prefix_len, std::vector<Symbol>& cur, std::size_t blocks,
                      std::vector<std::vector<Symbol>>& out) {
  if (cur.size() == prefix_len) {
    out.push_back(cur);
    return;
  }
  for (std::size_t s = 0; s <= blocks; ++s) {
    cur.push_back(static_cast<Symbol>(s));
    collect_prefixes(prefix_len, cur, std::max(blocks, s + 1), out);
    cur.pop_back();
  }
}

class PatternWalker {
 public:
  PatternWalker(std::size_t k, Counts& counts) : k_(k), counts_(counts), word_(k) {}

  void run_from(const std::vector<Symbol>& prefix) {
    std::size_t blocks = 0;
    for (Symbol s : prefix) {
      word_.push(s);
      blocks = std::max<std::size_t>(blocks, s + 1);
    }
    walk(blocks);
    while (word_.size() > 0) word_.pop();
  }

 private:
  void walk(std::size_t blocks) {
    if (word_.size() == k_) {
      ++counts_[word_.complexity()][blocks];
      return;
    }
    for (std::size_t s = 0; s <= blocks; ++s) {
      word_.push(static_cast<Symbol>(s));
      walk(std::max(blocks, s + 1));
      word_.pop();
    }
  }

  std::size_t k_;
  Counts& counts_;
  AppendComplexity word_;
};

}  // namespace

std::uint64_t PatternCensus::at(std::uint64_t complexity, std::size_t blocks) const {
  if (complexity >= counts.size() || blocks >= counts[complexity].size()) return 0;
  return counts[complexity][blocks];
}

PatternCensus pattern_census(std::size_t k, std::size_t jobs) {
  if (k < 1 || k > kCensusMaxLength) {
    throw CapacityExceeded("census supports 1 <= k <= " + std::to_string(kCensusMaxLength) + ", got " +
                           std::to_string(k));
  }
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());

  std::vector<std::vector<Symbol>> prefixes;
  std::vector<Symbol> cur;
  collect_prefixes(std::min<std::size_t>(k, 5), cur, 0, prefixes);
  jobs = std::min(jobs, prefixes.size());

  std::vector<Counts> local(jobs, empty_counts(k));
  std::atomic<std::size_t> next{0};
  auto worker = [&](std::size_t id) {
    PatternWalker walker(k, local[id]);
    for (std::size_t t = next++; t < prefixes.size(); t = next++) walker.run_from(prefixes[t]);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (std::size_t id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
  }

  PatternCensus census{k, empty_counts(k)};
  for (const auto& part : local) {
    for (std::size_t c = 0; c < part.size(); ++c) {
      for (std::size_t m = 0; m < part[c].size(); ++m) census.counts[c][m] += part[c][m];
    }
  }
  return census;
}

FrequencyTable::FrequencyTable(std::size_t k, const std::map<std::uint64_t, BigCount>& counts) : k_(k) {
  if (k == 0) throw DomainError("frequency table needs k >= 1");
  for (std::uint64_t c = min_complexity(); c <= max_complexity(); ++c) counts_[c] = BigCount{0u};
  for (const auto& [c, n] : counts) {
    if (c < min_complexity() || c > max_complexity()) {
      if (!n.is_zero()) {
        throw InternalInvariantBroken("f_" + std::to_string(k) + "(" + std::to_string(c) + ") outside range is non-zero");
      }
      continue;
    }
    counts_[c] = n;
  }
  for (const auto& [c, n] : counts_) total_ += n;
}

BigCount FrequencyTable::at(std::uint64_t complexity) const {
  auto it = counts_.find(complexity);
  return it == counts_.end() ? BigCount{0u} : it->second;
}

bool FrequencyTable::mass_conserved() const {
  BigInt expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), k_, k_);
  return total_.value() == expected;
}

FrequencyTable frequency_table(const PatternCensus& census) {
  const auto k = static_cast<unsigned>(census.k);
  std::map<std::uint64_t, BigCount> counts;
  for (std::size_t c = 0; c < census.counts.size(); ++c) {
    BigCount f{0u};
    for (std::size_t m = 1; m < census.counts[c].size(); ++m) {
      if (census.counts[c][m] != 0) f += BigCount{census.counts[c][m]} * falling_factorial(k, static_cast<unsigned>(m));
    }
    if (!f.is_zero()) counts[c] = std::move(f);
  }
  return FrequencyTable(census.k, counts);
}

FrequencyTable frequency_table(std::size_t k, std::size_t jobs) { return frequency_table(pattern_census(k, jobs)); }

std::vector<CensusCheck> proposition4_report(const FrequencyTable& t) {
  const std::size_t k = t.k();
  if (k < 2) throw DomainError("proposition 4 checks need k >= 2");
  const std::uint64_t top = t.max_complexity();
  std::vector<CensusCheck> out;
  out.push_back({"f_k(k-1) = 0", k - 1, BigCount{0u}, t.at(k - 1)});
  out.push_back({"f_k(k(k+1)/2+1) = 0", top + 1, BigCount{0u}, t.at(top + 1)});
  out.push_back({"f_k(k) = k", k, BigCount{k}, t.at(k)});
  // for k = 2, 2k-1 is the maximum and a^{k-1}b, ba^{k-1}, (ab)^{k/2} are not three distinct shapes
  if (2 * k - 1 < top) {
    out.push_back({"f_k(2k-1) = 3k(k-1)", 2 * k - 1, BigCount{3 * k * (k - 1)}, t.at(2 * k - 1)});
  }
  out.push_back({"f_k(k(k+1)/2-1) = k(k-1)k!/2", top - 1,
                 (BigCount{k * (k - 1)} * factorial(static_cast<unsigned>(k))).exact_div(BigCount{2u}), t.at(top - 1)});
  out.push_back({"f_k(k(k+1)/2) = k!", top, factorial(static_cast<unsigned>(k)), t.at(top)});
  return out;
}

bool proposition4_check(const FrequencyTable& table) {
  const auto r = proposition4_report(table);
  return std::all_of(r.begin(), r.end(), [](const CensusCheck& c) { return c.holds(); });
}

bool proposition4_check(std::size_t k) { return proposition4_check(frequency_table(k)); }

std::vector<CensusCheck> proposition5_report(const FrequencyTable& t) {
  const std::size_t k = t.k();
  if (k < 2) throw DomainError("proposition 5 checks need k >= 2");
  std::vector<CensusCheck> out;
  for (std::uint64_t c = k + 1; c + 2 <= 2 * k; ++c) out.push_back({"f_k(C) = 0, k < C < 2k-1", c, BigCount{0u}, t.at(c)});
  for (std::uint64_t c = 2 * k; c + 5 <= 3 * k; ++c) out.push_back({"f_k(C) = 0, 2k <= C <= 3k-5", c, BigCount{0u}, t.at(c)});
  return out;
}

bool proposition5_check(const FrequencyTable& table) {
  const auto r = proposition5_report(table);
  return std::all_of(r.begin(), r.end(), [](const CensusCheck& c) { return c.holds(); });
}

bool proposition5_check(std::size_t k) { return proposition5_check(frequency_table(k)); }

std::optional<ConjectureIndex> conjecture_decomposition(std::size_t k) {
  for (std::size_t ell = 2; ell * (ell + 1) / 2 + 2 <= k; ++ell) {
    const std::size_t base = ell * (ell + 1) / 2 + 2;
    if (k - base <= ell) return ConjectureIndex{ell, k - base};
  }
  return std::nullopt;
}

std::optional<std::uint64_t> conjecture_threshold(std::size_t k) {
  const auto idx = conjecture_decomposition(k);
  if (!idx) return std::nullopt;
  const std::uint64_t l = idx->ell, i = idx->i;
  return l * (l * l - 1) / 2 + 3 * l + 2 + i * (l + 1);
}

ThresholdReport threshold_bk(const FrequencyTable& t) {
  ThresholdReport r;
  r.k = t.k();
  std::uint64_t b = t.max_complexity();
  while (b > t.min_complexity() && !t.at(b - 1).is_zero()) --b;
  r.b_k = b;
  r.index = conjecture_decomposition(r.k);
  r.conjecture_value = conjecture_threshold(r.k);
  r.matches = r.conjecture_value && *r.conjecture_value == r.b_k;
  if (r.index) {
    const std::size_t l = r.index->ell;
    std::vector<Symbol> w{0};
    w.insert(w.end(), r.k - l, 1);
    w.push_back(0);
    w.insert(w.end(), l - 2, 1);
    r.witness_complexity = complexity_substrings(w).to_u64();
  }
  return r;
}

ThresholdReport threshold_bk(std::size_t k, std::size_t jobs) { return threshold_bk(frequency_table(k, jobs)); }

}  // namespace sc
