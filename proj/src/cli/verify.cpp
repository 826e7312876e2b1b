#include "sc/cli/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "sc/cli/reference_values.hpp"
#include "sc/constructor.hpp"
#include "sc/dsubstring.hpp"
#include "sc/sequences.hpp"

namespace sc::cli {

namespace {

template <class Range>
std::string join(const Range& values) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    os << (first ? "" : " ") << v;
    first = false;
  }
  return os.str();
}

class Suite {
 public:
  Suite(VerifyReport& report, std::string name) : report_(report), name_(std::move(name)) {}

  void check(std::string what, bool pass, std::string expected, std::string actual, bool fatal = true) {
    report_.lines.push_back({name_, std::move(what), pass, std::move(expected), std::move(actual), fatal});
  }

 private:
  VerifyReport& report_;
  std::string name_;
};

FrequencyTable census_for(std::size_t k, const VerifyOptions& opt) {
  return opt.cache ? frequency_table_cached(k, *opt.cache, opt.jobs) : frequency_table(k, opt.jobs);
}

void run_tables(VerifyReport& report, const VerifyOptions& opt) {
  Suite s(report, "tables");
  const auto grid = table1(10, 10);
  for (std::size_t k = 1; k <= 10; ++k) {
    std::vector<std::string> got;
    for (const auto& v : grid[k - 1]) got.push_back(v.to_string());
    const auto want = join(kReferenceNkd[k - 1]);
    const auto have = join(got);
    s.check("N(k,d) k=" + std::to_string(k) + " d=1..10", want == have, want, have);
  }
  for (const auto& [k, row] : reference_frequencies()) {
    const auto table = census_for(k, opt);
    std::vector<std::string> got;
    for (const auto& [c, n] : table.counts()) got.push_back(n.to_string());
    const auto want = join(row);
    const auto have = join(got);
    s.check("f_k(C) k=" + std::to_string(k), want == have, want, have);
  }
}

void run_routes(VerifyReport& report, const VerifyOptions& opt) {
  Suite s(report, "routes");
  const long kmax = static_cast<long>(std::max<std::size_t>(opt.kmax, 1));
  constexpr long dmax = 12;
  std::map<long, IntSeries> gf;
  for (long d = 1; d <= dmax; ++d) gf.emplace(d, series_N(GapParam(d), kmax));

  for (long k = 1; k <= kmax; ++k) {
    std::vector<std::string> values;
    std::vector<std::string> problems;
    for (long d = 1; d <= dmax; ++d) {
      const GapParam gd(d);
      const BigCount base = n_kd(k, gd);
      values.push_back(base.to_string());
      auto differs = [&](const std::string& route, const BigCount& v) {
        if (v != base) problems.push_back(route + "(d=" + std::to_string(d) + ")=" + v.to_string());
      };
      differs("b-route", n_kd_via_b(k, gd));
      differs("series", BigCount(gf.at(d)[k]));
      if (d == 2) differs("fibonacci", n_k2_closed(k));
      const long m = k - d;
      if (m >= 1 && k >= 2 * m - 2) differs("high-d", n_kd_high_d(k, m));
      if (d >= k - 1) differs("saturation", pow2(static_cast<unsigned>(k)) - BigCount{1u});
      if (k <= 16) {
        std::vector<Symbol> distinct(static_cast<std::size_t>(k));
        for (long i = 0; i < k; ++i) distinct[static_cast<std::size_t>(i)] = static_cast<Symbol>(i);
        const auto a = a_profile(Word(distinct, static_cast<std::size_t>(k)), gd);
        BigCount sum{0u};
        for (const auto& v : a) sum += v;
        differs("a-profile", sum);
        if (d >= 2) {
          const auto c = c_sequence(gd, k);
          for (long i = 1; i <= k; ++i) {
            const BigCount linked = BigCount{static_cast<std::uint64_t>(d - 1)} * a[static_cast<std::size_t>(i - 1)] +
                                    BigCount{1u};
            if (linked != c.at(i)) problems.push_back("c/a link broken at i=" + std::to_string(i));
          }
        }
      }
    }
    const auto want = join(values);
    s.check("N(k,1..12) k=" + std::to_string(k), problems.empty(), want,
            problems.empty() ? want : join(problems));
  }
}

void run_props(VerifyReport& report, const VerifyOptions& opt) {
  Suite s(report, "props");
  const std::size_t kmax = std::clamp<std::size_t>(opt.kmax, 2, 12);

  for (char id = 'a'; id <= 'i'; ++id) {
    std::size_t total = 0, ok = 0;
    std::string first_failure;
    auto tally = [&](const IdentityResult& r) {
      ++total;
      if (r.holds()) {
        ++ok;
      } else if (first_failure.empty()) {
        for (const auto& c : r.checks) {
          if (!c.holds() && !c.informational) {
            first_failure = c.label + " on " + render(c.word) + ": measured " + c.measured.to_string();
            break;
          }
        }
      }
    };
    const Identity which = parse_identity(id);
    for (std::size_t k = 2; k <= kmax; ++k) {
      IdentityParams p;
      p.k = k;
      switch (which) {
        case Identity::E:
          for (std::size_t i = 1; i <= k / 2; ++i) {
            p.i = i;
            tally(identity_check(which, p));
          }
          break;
        case Identity::F:
          for (std::size_t l = 1; l <= k; ++l) {
            p.ell = l;
            tally(identity_check(which, p));
          }
          break;
        case Identity::G:
          for (std::size_t m = 1; m + k <= kmax; ++m) {
            p.m = m;
            tally(identity_check(which, p));
          }
          break;
        case Identity::H:
          for (std::size_t n = 1; n <= 3; ++n) {
            p.n = n;
            tally(identity_check(which, p));
          }
          break;
        case Identity::I:
          for (std::size_t n = 1; n <= k; ++n) {
            p.n = n;
            tally(identity_check(which, p));
          }
          break;
        default:
          tally(identity_check(which, p));
      }
    }
    s.check(std::string("identity ") + id + ") k<=" + std::to_string(kmax), ok == total,
            std::to_string(total) + " witnesses hold",
            first_failure.empty() ? std::to_string(ok) + " witnesses hold" : first_failure);
  }

  for (bool binary : {false, true}) {
    std::vector<std::string> impossible, broken;
    for (unsigned c = 1; c <= 200; ++c) {
      const auto r = construct_with_complexity(BigCount{c}, binary);
      if (!r) {
        impossible.push_back(std::to_string(c));
      } else if (r->claimed_complexity() != BigCount{c} || canonicalize(r->symbols()).num_blocks() < 2 ||
                 (binary && canonicalize(r->symbols()).num_blocks() > 2)) {
        broken.push_back(std::to_string(c));
      }
    }
    const std::string want = binary ? "1 2 4 6 10 18 22" : "1 2 4";
    const std::string have = join(impossible);
    s.check(std::string(binary ? "binary" : "general") + " witnesses C<=200", have == want && broken.empty(),
            "impossible: " + want, broken.empty() ? "impossible: " + have : "bad witness for " + join(broken));
  }

  for (bool binary : {false, true}) {
    const std::vector<unsigned> exceptional =
        binary ? std::vector<unsigned>{6, 10, 18, 22} : std::vector<unsigned>{1, 2, 4};
    std::vector<std::string> found;
    for (unsigned c : exceptional) {
      SearchRequest req;
      req.target = BigCount{c};
      req.alphabet_size = binary ? 2 : c;
      req.nontrivial = true;
      if (const auto r = search(req); !r.empty()) found.push_back(std::to_string(c) + ":" + render(r.front()));
    }
    s.check(std::string("exhaustive nontrivial search, ") + (binary ? "binary" : "general"), found.empty(),
            "no word for " + join(exceptional), found.empty() ? "no word found" : join(found));
  }

  const std::size_t bound_k = std::min<std::size_t>(kmax, 8);
  std::size_t checked = 0;
  std::string violation;
  for (std::size_t k = 1; k <= bound_k; ++k) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const BigCount limit = max_complexity(n, k);
      // every pattern of length k with at most n blocks
      std::vector<Symbol> w(k, 0);
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t blocks) {
        if (pos == k) {
          ++checked;
          const auto v = complexity_substrings(w);
          if (v > limit && violation.empty()) violation = render(w) + " has " + v.to_string();
          return;
        }
        for (std::size_t sym = 0; sym <= std::min(blocks, n - 1); ++sym) {
          w[pos] = static_cast<Symbol>(sym);
          rec(pos + 1, std::max(blocks, sym + 1));
        }
      };
      rec(1, 1);
    }
  }
  s.check("K <= max complexity, k<=" + std::to_string(bound_k) + " n<=3", violation.empty(), "no violation",
          violation.empty() ? std::to_string(checked) + " patterns within bound" : violation);
}

void run_census(VerifyReport& report, const VerifyOptions& opt) {
  Suite s(report, "census");
  const std::size_t kmax = std::clamp<std::size_t>(opt.kmax, 2, 8);
  for (std::size_t k = 2; k <= kmax; ++k) {
    const auto table = census_for(k, opt);
    s.check("sum f_k = k^k, k=" + std::to_string(k), table.mass_conserved(), "k^k", table.total().to_string());
    for (const auto& c : proposition4_report(table)) {
      s.check(c.label + " k=" + std::to_string(k), c.holds(), c.expected.to_string(), c.actual.to_string());
    }
    const auto zeros = proposition5_report(table);
    std::vector<std::string> nonzero;
    for (const auto& c : zeros) {
      if (!c.holds()) nonzero.push_back(std::to_string(c.complexity));
    }
    s.check("zero ranges k=" + std::to_string(k), nonzero.empty(), std::to_string(zeros.size()) + " zeros",
            nonzero.empty() ? std::to_string(zeros.size()) + " zeros" : "non-zero at C=" + join(nonzero));
  }
}

void run_conjecture(VerifyReport& report, const VerifyOptions& opt) {
  Suite s(report, "conjecture");
  const std::size_t kmax = std::clamp<std::size_t>(opt.kmax, 3, kCensusMaxLength);
  for (std::size_t k = 3; k <= kmax; ++k) {
    const auto r = threshold_bk(census_for(k, opt));
    const bool certified = k <= 6;
    for (const auto& [rk, rb] : kReferenceThresholds) {
      if (rk == k) s.check("b_k k=" + std::to_string(k), r.b_k == rb, std::to_string(rb), std::to_string(r.b_k));
    }
    if (r.conjecture_value) {
      s.check("conjectured b_k k=" + std::to_string(k) + " (l=" + std::to_string(r.index->ell) +
                  ", i=" + std::to_string(r.index->i) + ")",
              r.matches, std::to_string(*r.conjecture_value), std::to_string(r.b_k), certified);
      s.check("K(ab^{k-l}ab^{l-2}) = b_k k=" + std::to_string(k), r.witness_matches(), std::to_string(r.b_k),
              std::to_string(*r.witness_complexity), certified);
    } else {
      s.check("b_k k=" + std::to_string(k) + " (no conjecture)", true, "-", std::to_string(r.b_k), false);
    }
  }
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(lines.begin(), lines.end(), [](const VerifyLine& l) { return l.pass || !l.fatal; });
}

std::string VerifyReport::render() const {
  std::ostringstream os;
  for (const auto& l : lines) {
    os << (l.pass ? "PASS" : l.fatal ? "FAIL" : "NOTE") << ' ' << l.suite << ": " << l.name << " | expected "
       << l.expected << " | actual " << l.actual << '\n';
  }
  return os.str();
}

VerifyReport run_verify(std::string_view suite, const VerifyOptions& options) {
  VerifyReport report;
  const bool all = suite == "all";
  bool known = all;
  auto maybe = [&](std::string_view name, auto&& fn) {
    if (all || suite == name) {
      known = true;
      fn(report, options);
    }
  };
  maybe("tables", run_tables);
  maybe("routes", run_routes);
  maybe("props", run_props);
  maybe("census", run_census);
  maybe("conjecture", run_conjecture);
  if (!known) throw DomainError("unknown verify suite '" + std::string(suite) + "'");
  return report;
}

}  // namespace sc::cli
