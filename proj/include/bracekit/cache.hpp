#pragma once

// On-disk catalog cache keyed by (order, method, library version).
// Directory: $BRACEKIT_CACHE, else $HOME/.cache/bracekit.

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <random>

#include "bracekit/io.hpp"

namespace bracekit {

inline constexpr const char* kLibraryVersion = "0.3.0";

inline std::filesystem::path cache_directory() {
  if (const char* env = std::getenv("BRACEKIT_CACHE"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "bracekit";
  return std::filesystem::temp_directory_path() / "bracekit-cache";
}

inline std::filesystem::path catalog_cache_file(const std::filesystem::path& dir, std::size_t n, EnumerationMethod m) {
  return dir / ("catalog-" + std::string(to_string(m)) + "-" + std::to_string(n) + ".json");
}

inline Json catalog_to_json(const BraceCatalog& c) {
  Json entries = Json::array();
  for (const auto& e : c.entries) entries.push_back({{"additive_index", e.additive_index}, {"circle", e.brace.multiplicative().rows()}});
  return {{"version", kLibraryVersion}, {"order", c.order}, {"method", to_string(c.method)}, {"entries", entries}};
}

/// Rebuilds a catalog from its cached form; every brace is re-verified.
/// Returns nullopt for a version or key mismatch or any damage.
inline std::optional<BraceCatalog> catalog_from_json(const Json& j, std::size_t n, EnumerationMethod m) {
  try {
    if (j.at("version") != kLibraryVersion || j.at("order") != n || j.at("method") != to_string(m)) return std::nullopt;
    const auto& groups = small_groups(n);
    BraceCatalog c;
    c.order = n;
    c.method = m;
    std::vector<std::size_t> counts(groups.size(), 0);
    for (const auto& e : j.at("entries")) {
      const auto idx = e.at("additive_index").get<std::size_t>();
      if (idx >= groups.size()) return std::nullopt;
      auto b = verify_brace(groups[idx].group.rows(), e.at("circle").get<Table2D>());
      if (!b) return std::nullopt;
      c.entries.push_back({std::move(b).value(), idx});
      ++counts[idx];
    }
    for (std::size_t i = 0; i < groups.size(); ++i) c.counts_by_additive.emplace_back(groups[i].name, counts[i]);
    return c;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

struct CacheOptions {
  bool enabled = true;
  std::optional<std::filesystem::path> directory;  // default: cache_directory()
  std::size_t jobs = 1;
};

/// enumerate_braces through the cache. Cache I/O failures fall back to
/// computing; they never change the result.
inline BraceCatalog cached_enumerate(std::size_t n, EnumerationMethod m, const CacheOptions& opt = {}) {
  if (!opt.enabled) return enumerate_braces(n, m, opt.jobs);
  const auto dir = opt.directory.value_or(cache_directory());
  const auto file = catalog_cache_file(dir, n, m);
  std::error_code ec;
  if (std::filesystem::exists(file, ec)) {
    try {
      if (auto c = catalog_from_json(read_json_file(file), n, m)) return *std::move(c);
    } catch (const InvalidInput&) {
    }
  }
  auto cat = enumerate_braces(n, m, opt.jobs);
  std::filesystem::create_directories(dir, ec);
  if (!ec) {
    // Write-then-rename so concurrent readers never see a partial file.
    std::mt19937_64 rng(std::random_device{}());
    const auto tmp = file.string() + ".tmp" + std::to_string(rng());
    try {
      write_text_file(tmp, catalog_to_json(cat).dump());
      std::filesystem::rename(tmp, file, ec);
      if (ec) std::filesystem::remove(tmp, ec);
    } catch (const InvalidInput&) {
    }
  }
  return cat;
}

}  // namespace bracekit
