#ifndef SC_CLI_RENDER_HPP
#define SC_CLI_RENDER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sc/census.hpp"
#include "sc/constructor.hpp"
#include "sc/sequences.hpp"

namespace sc::cli {

enum class OutputFormat { Table, Csv, Json };

/// "table", "csv" or "json"; anything else throws DomainError.
OutputFormat parse_format(std::string_view name);

/// "# sc <command> generated <UTC timestamp>" line printed above human tables.
std::string banner(std::string_view command);

std::string render_complexity(std::string_view word, std::size_t d, std::string_view method, const BigCount& value,
                              OutputFormat format);

std::string render_table1(const CountGrid& grid, OutputFormat format);

std::string render_construct(const BigCount& target, bool binary, const std::optional<ConstructionRecipe>& recipe,
                             OutputFormat format);

struct SearchEcho {
  BigCount target;
  std::optional<std::size_t> length;
  std::size_t alphabet;
  bool all;
  bool count_labelings;
};

std::string render_search(const SearchEcho& params, const std::vector<PatternWord>& words, OutputFormat format);

std::string render_frequency(const FrequencyTable& table, OutputFormat format);

}  // namespace sc::cli

#endif  // SC_CLI_RENDER_HPP
