#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace normgraph::cli {

/// 64-bit FNV-1a, stable across platforms and runs.
std::uint64_t fnv1a(std::string_view s);

/// Directory of cached artifacts. Entries are named "<subcommand>-<hash>.<ext>"
/// where the hash covers the canonical flag string. Callers re-verify anything read.
class Cache {
 public:
  /// Disabled when dir is empty.
  explicit Cache(std::optional<std::filesystem::path> dir);

  /// flag > NORMGRAPH_CACHE > ".normgraph-cache"; empty when disabled.
  static std::optional<std::filesystem::path> resolve(const std::optional<std::string>& flag, bool disabled);

  bool enabled() const { return dir_.has_value(); }
  std::filesystem::path path_for(std::string_view subcommand, std::string_view flags, std::string_view ext) const;

  std::optional<std::string> read(std::string_view subcommand, std::string_view flags, std::string_view ext) const;
  /// Best effort; returns false when the entry could not be written.
  bool write(std::string_view subcommand, std::string_view flags, std::string_view ext, const std::string& data) const;

 private:
  std::optional<std::filesystem::path> dir_;
};

}  // namespace normgraph::cli
