#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sc/census.hpp"
#include "sc/cli/render.hpp"
#include "sc/cli/verify.hpp"
#include "sc/constructor.hpp"
#include "sc/dsubstring.hpp"
#include "sc/sequences.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoResult = 1;
constexpr int kExitUsage = 2;

struct UsageError : sc::Error {
  using sc::Error::Error;
};

sc::Method parse_method(const std::string& name) {
  if (name == "auto") return sc::Method::Auto;
  if (name == "automaton") return sc::Method::Automaton;
  if (name == "oracle") return sc::Method::Oracle;
  if (name == "suffix") return sc::Method::Suffix;
  throw UsageError("unknown method '" + name + "'");
}

sc::BigCount parse_complexity(const std::string& text) {
  sc::BigCount c;
  try {
    c = sc::BigCount::from_string(text);
  } catch (const sc::DomainError&) {
    throw UsageError("--complexity must be a positive integer, got '" + text + "'");
  }
  if (c.is_zero()) throw UsageError("--complexity must be positive");
  return c;
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distinct gap-bounded subsequence counting for strings"};
  app.require_subcommand(1);
  app.fallthrough();
  std::size_t jobs = 0;
  bool no_header = false;
  app.add_option("--jobs", jobs, "Worker threads for census (0 = all cores)");
  app.add_flag("--no-header", no_header, "Omit the timestamp banner above human-readable tables");

  std::string format = "table";

  auto* complexity_cmd = app.add_subcommand("complexity", "K_d of a word");
  std::string word_text;
  long long d = 1;
  std::string method = "auto";
  complexity_cmd->add_option("--word", word_text, "Word of ASCII letters")->required();
  complexity_cmd->add_option("--d", d, "Maximal gap between chosen positions");
  complexity_cmd->add_option("--method", method, "auto, automaton, oracle or suffix")
      ->check(CLI::IsMember({"auto", "automaton", "oracle", "suffix"}));
  add_format(complexity_cmd, format);

  auto* table_cmd = app.add_subcommand("table", "N(k,d) for words of distinct letters");
  long kmax = 10, dmax = 10;
  table_cmd->add_option("--kmax", kmax, "Largest k")->check(CLI::PositiveNumber);
  table_cmd->add_option("--dmax", dmax, "Largest d")->check(CLI::PositiveNumber);
  add_format(table_cmd, format);

  auto* construct_cmd = app.add_subcommand("construct", "A nontrivial word of a given complexity");
  std::string construct_target;
  bool binary = false;
  construct_cmd->add_option("--complexity", construct_target, "Target complexity C")->required();
  construct_cmd->add_flag("--binary", binary, "Use two letters only");
  add_format(construct_cmd, format);

  auto* search_cmd = app.add_subcommand("search", "Branch-and-bound search for words of a given complexity");
  std::string search_target;
  std::optional<std::size_t> length;
  std::size_t alphabet = 26;
  bool all = false, first = false, count_labelings = false, nontrivial = false;
  search_cmd->add_option("--complexity", search_target, "Target complexity C")->required();
  search_cmd->add_option("--length", length, "Fixed word length; omit for the minimal length");
  search_cmd->add_option("--alphabet", alphabet, "Alphabet size")->check(CLI::Range(1, 52));
  auto* all_flag = search_cmd->add_flag("--all", all, "Every canonical word");
  auto* first_flag = search_cmd->add_flag("--first", first, "Only the first canonical word (default)");
  all_flag->excludes(first_flag);
  search_cmd->add_flag("--count-labelings", count_labelings, "Also print labelings over the alphabet");
  search_cmd->add_flag("--nontrivial", nontrivial, "Require at least two distinct letters");
  add_format(search_cmd, format);

  auto* freq_cmd = app.add_subcommand("freq", "f_k(C) over words of length k on k letters");
  std::size_t freq_k = 0;
  bool no_cache = false;
  freq_cmd->add_option("--k", freq_k, "Word length")->required();
  freq_cmd->add_flag("--no-cache", no_cache, "Neither read nor write the census cache");
  add_format(freq_cmd, format);

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  std::size_t verify_kmax = 10;
  verify_cmd->add_option("--suite", suite, "tables, routes, props, census, conjecture or all")
      ->check(CLI::IsMember({"tables", "routes", "props", "census", "conjecture", "all"}));
  verify_cmd->add_option("--kmax", verify_kmax, "Largest k exercised");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const auto fmt = sc::cli::parse_format(format);
    const bool show_banner = fmt == sc::cli::OutputFormat::Table && !no_header;

    if (*complexity_cmd) {
      const auto w = sc::word_from_text(word_text);
      const sc::GapParam gap(d);
      const auto m = parse_method(method);
      if (m == sc::Method::Suffix && d != 1) throw UsageError("--method suffix requires --d 1");
      const auto value = sc::complexity(w, gap, m);
      const std::string used = m != sc::Method::Auto ? method : d == 1 ? "suffix" : "automaton";
      std::cout << sc::cli::render_complexity(word_text, gap.value(), used, value, fmt);
      return kExitOk;
    }
    if (*table_cmd) {
      if (show_banner) std::cout << sc::cli::banner("table");
      std::cout << sc::cli::render_table1(sc::table1(kmax, dmax), fmt);
      return kExitOk;
    }
    if (*construct_cmd) {
      const auto c = parse_complexity(construct_target);
      std::cout << sc::cli::render_construct(c, binary, sc::construct_with_complexity(c, binary), fmt);
      return kExitOk;
    }
    if (*search_cmd) {
      sc::SearchRequest req;
      req.target = parse_complexity(search_target);
      req.length = length;
      req.alphabet_size = alphabet;
      req.mode = all ? sc::SearchMode::AllCanonical : sc::SearchMode::First;
      req.nontrivial = nontrivial;
      if (length && *length == 0) throw UsageError("--length must be positive");
      const auto words = sc::search(req);
      std::cout << sc::cli::render_search({req.target, length, alphabet, all, count_labelings}, words, fmt);
      return words.empty() ? kExitNoResult : kExitOk;
    }
    if (*freq_cmd) {
      const auto table = no_cache ? sc::frequency_table(freq_k, jobs)
                                  : sc::frequency_table_cached(freq_k, sc::CensusCache::from_environment(), jobs);
      if (show_banner) std::cout << sc::cli::banner("freq");
      std::cout << sc::cli::render_frequency(table, fmt);
      return kExitOk;
    }
    if (*verify_cmd) {
      const auto cache = sc::CensusCache::from_environment();
      const auto report = sc::cli::run_verify(suite, {verify_kmax, jobs, &cache});
      std::cout << report.render();
      std::cout << (report.passed() ? "verify: all checks passed\n" : "verify: FAILED\n");
      return report.passed() ? kExitOk : kExitNoResult;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sc::CapacityExceeded& e) {
    std::cerr << "capacity exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sc::InvalidWord& e) {
    std::cerr << "invalid word: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sc::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sc::Error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitNoResult;
  }
  return kExitUsage;
}
