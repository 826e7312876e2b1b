#include "sc/cli/render.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace sc::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json document(std::string_view command, Json params, Json results) {
  Json j;
  j["command"] = command;
  j["params"] = std::move(params);
  j["results"] = std::move(results);
  return j;
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw DomainError("unknown output format '" + std::string(name) + "'");
}

std::string banner(std::string_view command) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream os;
  os << "# sc " << command << " generated " << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ") << '\n';
  return os.str();
}

std::string render_complexity(std::string_view word, std::size_t d, std::string_view method, const BigCount& value,
                              OutputFormat format) {
  switch (format) {
    case OutputFormat::Table:
      return value.to_string() + "\n";
    case OutputFormat::Csv:
      return "word,d,method,complexity\n" + std::string(word) + "," + std::to_string(d) + "," + std::string(method) +
             "," + value.to_string() + "\n";
    case OutputFormat::Json:
      return dump(document("complexity", {{"word", word}, {"d", d}, {"method", method}},
                           {{"complexity", value.to_string()}}));
  }
  return {};
}

std::string render_table1(const CountGrid& grid, OutputFormat format) {
  const std::size_t k_max = grid.size();
  const std::size_t d_max = k_max == 0 ? 0 : grid.front().size();
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Table: {
      std::size_t w = std::to_string(d_max).size();
      for (const auto& row : grid) {
        for (const auto& v : row) w = std::max(w, v.to_string().size());
      }
      const std::size_t w0 = std::max<std::size_t>(3, std::to_string(k_max).size());
      os << std::left << std::setw(static_cast<int>(w0)) << "k\\d" << std::right;
      for (std::size_t d = 1; d <= d_max; ++d) os << ' ' << std::setw(static_cast<int>(w)) << d;
      os << '\n';
      for (std::size_t k = 1; k <= k_max; ++k) {
        os << std::setw(static_cast<int>(w0)) << k;
        for (const auto& v : grid[k - 1]) os << ' ' << std::setw(static_cast<int>(w)) << v.to_string();
        os << '\n';
      }
      return os.str();
    }
    case OutputFormat::Csv: {
      os << 'k';
      for (std::size_t d = 1; d <= d_max; ++d) os << ",d=" << d;
      os << '\n';
      for (std::size_t k = 1; k <= k_max; ++k) {
        os << k;
        for (const auto& v : grid[k - 1]) os << ',' << v.to_string();
        os << '\n';
      }
      return os.str();
    }
    case OutputFormat::Json: {
      Json rows = Json::array();
      for (std::size_t k = 1; k <= k_max; ++k) {
        Json values = Json::array();
        for (const auto& v : grid[k - 1]) values.push_back(v.to_string());
        rows.push_back({{"k", k}, {"values", std::move(values)}});
      }
      return dump(document("table", {{"kmax", k_max}, {"dmax", d_max}}, std::move(rows)));
    }
  }
  return {};
}

std::string render_construct(const BigCount& target, bool binary, const std::optional<ConstructionRecipe>& recipe,
                             OutputFormat format) {
  switch (format) {
    case OutputFormat::Table:
      return (recipe ? recipe->text() : std::string("IMPOSSIBLE")) + "\n";
    case OutputFormat::Csv:
      if (!recipe) return "complexity,word,family,length\n" + target.to_string() + ",IMPOSSIBLE,,\n";
      return "complexity,word,family,length\n" + target.to_string() + "," + recipe->text() + "," +
             std::string(template_name(recipe->family())) + "," + std::to_string(recipe->length()) + "\n";
    case OutputFormat::Json: {
      Json results;
      if (recipe) {
        results = {{"word", recipe->text()},
                   {"family", template_name(recipe->family())},
                   {"length", recipe->length()},
                   {"complexity", recipe->claimed_complexity().to_string()}};
      } else {
        results = {{"word", nullptr}, {"impossible", true}};
      }
      return dump(document("construct", {{"complexity", target.to_string()}, {"binary", binary}}, std::move(results)));
    }
  }
  return {};
}

std::string render_search(const SearchEcho& p, const std::vector<PatternWord>& words, OutputFormat format) {
  std::ostringstream os;
  BigCount total{0u};
  std::vector<BigCount> labelings;
  for (const auto& w : words) {
    labelings.push_back(count_labelings(w, p.alphabet));
    total += labelings.back();
  }
  switch (format) {
    case OutputFormat::Table:
      for (std::size_t i = 0; i < words.size(); ++i) {
        os << render(words[i]);
        if (p.count_labelings) os << ' ' << labelings[i];
        os << '\n';
      }
      if (p.count_labelings && !words.empty()) os << "total " << total << '\n';
      return os.str();
    case OutputFormat::Csv:
      os << (p.count_labelings ? "word,length,labelings\n" : "word,length\n");
      for (std::size_t i = 0; i < words.size(); ++i) {
        os << render(words[i]) << ',' << words[i].size();
        if (p.count_labelings) os << ',' << labelings[i];
        os << '\n';
      }
      return os.str();
    case OutputFormat::Json: {
      Json params = {{"complexity", p.target.to_string()},
                     {"length", p.length ? Json(*p.length) : Json(nullptr)},
                     {"alphabet", p.alphabet},
                     {"mode", p.all ? "all" : "first"}};
      Json list = Json::array();
      for (std::size_t i = 0; i < words.size(); ++i) {
        Json item = {{"word", render(words[i])}, {"length", words[i].size()}};
        if (p.count_labelings) item["labelings"] = labelings[i].to_string();
        list.push_back(std::move(item));
      }
      Json results = {{"words", std::move(list)}};
      if (p.count_labelings) results["total_labelings"] = total.to_string();
      return dump(document("search", std::move(params), std::move(results)));
    }
  }
  return {};
}

std::string render_frequency(const FrequencyTable& table, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Table: {
      std::size_t w = 9;
      for (const auto& [c, n] : table.counts()) w = std::max(w, n.to_string().size());
      w = std::max(w, table.total().to_string().size());
      os << "length " << table.k() << '\n';
      os << "complexity  " << std::setw(static_cast<int>(w)) << "frequency" << '\n';
      for (const auto& [c, n] : table.counts()) {
        os << std::setw(10) << c << "  " << std::setw(static_cast<int>(w)) << n.to_string() << '\n';
      }
      os << std::setw(10) << "total" << "  " << std::setw(static_cast<int>(w)) << table.total().to_string() << '\n';
      return os.str();
    }
    case OutputFormat::Csv:
      os << "k,complexity,frequency\n";
      for (const auto& [c, n] : table.counts()) os << table.k() << ',' << c << ',' << n.to_string() << '\n';
      return os.str();
    case OutputFormat::Json: {
      Json list = Json::array();
      for (const auto& [c, n] : table.counts()) list.push_back({{"complexity", c}, {"frequency", n.to_string()}});
      Json results = {{"k", table.k()}, {"frequencies", std::move(list)}, {"total", table.total().to_string()}};
      return dump(document("freq", {{"k", table.k()}}, std::move(results)));
    }
  }
  return {};
}

}  // namespace sc::cli
