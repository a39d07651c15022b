#include "cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>
#include <system_error>

namespace normgraph::cli {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Cache::Cache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

std::optional<std::filesystem::path> Cache::resolve(const std::optional<std::string>& flag, bool disabled) {
  if (disabled) return std::nullopt;
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv("NORMGRAPH_CACHE"); env && *env) return std::filesystem::path(env);
  return std::filesystem::path(".normgraph-cache");
}

std::filesystem::path Cache::path_for(std::string_view subcommand, std::string_view flags, std::string_view ext) const {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(flags)));
  return *dir_ / (std::string(subcommand) + "-" + hex + "." + std::string(ext));
}

std::optional<std::string> Cache::read(std::string_view subcommand, std::string_view flags, std::string_view ext) const {
  if (!dir_) return std::nullopt;
  std::ifstream in(path_for(subcommand, flags, ext), std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), {});
}

bool Cache::write(std::string_view subcommand, std::string_view flags, std::string_view ext,
                  const std::string& data) const {
  if (!dir_) return false;
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  if (ec) return false;
  const auto target = path_for(subcommand, flags, ext);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << data;
    if (!out) return false;
  }
  std::filesystem::rename(tmp, target, ec);
  return !ec;
}

}  // namespace normgraph::cli
