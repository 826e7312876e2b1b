#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sc/census.hpp"

namespace sc {

namespace {

constexpr std::string_view kFormatTag = "sc-census";

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string records_digest(std::size_t k, const std::map<std::uint64_t, std::string>& records) {
  std::ostringstream os;
  os << "k=" << k << ';';
  for (const auto& [c, n] : records) os << c << ':' << n << ';';
  std::ostringstream hex;
  hex << std::hex << fnv1a(os.str());
  return hex.str();
}

std::optional<std::filesystem::path> env_path(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::filesystem::path(v);
}

}  // namespace

std::string serialize_census(const FrequencyTable& table) {
  std::map<std::uint64_t, std::string> records;
  for (const auto& [c, n] : table.counts()) records[c] = n.to_string();
  nlohmann::ordered_json j;
  j["format"] = kFormatTag;
  j["version"] = CensusCache::kVersion;
  j["k"] = table.k();
  auto& arr = j["records"] = nlohmann::ordered_json::array();
  for (const auto& [c, n] : records) arr.push_back({{"complexity", c}, {"count", n}});
  j["total"] = table.total().to_string();
  j["checksum"] = records_digest(table.k(), records);
  return j.dump(2) + "\n";
}

FrequencyTable parse_census(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("census file is not JSON: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != kFormatTag) throw DomainError("census file has the wrong format tag");
    if (j.at("version").get<int>() != CensusCache::kVersion) throw DomainError("census file has an unknown version");
    const auto k = j.at("k").get<std::size_t>();
    std::map<std::uint64_t, std::string> records;
    std::map<std::uint64_t, BigCount> counts;
    for (const auto& r : j.at("records")) {
      const auto c = r.at("complexity").get<std::uint64_t>();
      const auto n = r.at("count").get<std::string>();
      records[c] = n;
      counts[c] = BigCount::from_string(n);
    }
    if (records_digest(k, records) != j.at("checksum").get<std::string>()) {
      throw DomainError("census file checksum mismatch");
    }
    FrequencyTable table(k, counts);
    if (table.total().to_string() != j.at("total").get<std::string>() || !table.mass_conserved()) {
      throw DomainError("census file total is inconsistent");
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed census file: ") + e.what());
  } catch (const InternalInvariantBroken& e) {
    throw DomainError(std::string("malformed census file: ") + e.what());
  }
}

CensusCache CensusCache::from_environment() {
  if (auto dir = env_path("SC_CACHE_DIR")) return CensusCache(*dir);
  if (auto dir = env_path("XDG_CACHE_HOME")) return CensusCache(*dir / "sc");
  if (auto dir = env_path("HOME")) return CensusCache(*dir / ".cache" / "sc");
  return CensusCache(".sc-cache");
}

std::filesystem::path CensusCache::path_for(std::size_t k) const {
  return dir_ / ("census-v" + std::to_string(kVersion) + "-k" + std::to_string(k) + ".json");
}

std::optional<FrequencyTable> CensusCache::load(std::size_t k) const {
  std::ifstream in(path_for(k));
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    auto table = parse_census(buf.str());
    if (table.k() != k) return std::nullopt;
    return table;
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

void CensusCache::store(const FrequencyTable& table) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto target = path_for(table.k());
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << serialize_census(table);
    if (!out) return;
  }
  std::filesystem::rename(tmp, target, ec);
}

FrequencyTable frequency_table_cached(std::size_t k, const CensusCache& cache, std::size_t jobs) {
  const bool cacheable = k >= CensusCache::kFirstCachedLength && k <= kCensusMaxLength;
  if (cacheable) {
    if (auto hit = cache.load(k)) return *std::move(hit);
  }
  auto table = frequency_table(k, jobs);
  if (cacheable) cache.store(table);
  return table;
}

}  // namespace sc
