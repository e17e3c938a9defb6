#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "liepow/root_system.hpp"

namespace liepow {

// Key-value store on disk. Each entry is a file named by a hash of its key,
// holding the key, a CRC-32 of the payload and the payload; entries whose
// key or checksum do not match are treated as misses. Writes go through a
// temporary file and a rename.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir);

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& payload) const;
  std::filesystem::path path_for(const std::string& key) const;
  const std::filesystem::path& dir() const { return dir_; }

  // Hooks for freudenthal(); the returned object refers to this cache.
  FreudenthalCache freudenthal_hooks() const;

  mutable std::uint64_t hits = 0;
  mutable std::uint64_t misses = 0;
  mutable std::uint64_t corrupt = 0;

 private:
  std::filesystem::path dir_;
};

std::string serialize_multiplicities(const DominantMultiplicities& m);
DominantMultiplicities parse_multiplicities(const std::string& text, std::size_t rank);
std::uint32_t crc32_of(const std::string& s);

}  // namespace liepow
