#include "liepow/cache.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <boost/crc.hpp>

namespace liepow {

namespace {

constexpr const char* kMagic = "liepow-cache 1";

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex(std::uint64_t v, int digits) {
  std::ostringstream out;
  out << std::hex;
  out.width(digits);
  out.fill('0');
  out << v;
  return out.str();
}

std::string freudenthal_key(const RootSystem& rs, const Weight& lambda) {
  return "freudenthal " + rs.label() + " " + to_string(lambda);
}

}  // namespace

std::uint32_t crc32_of(const std::string& s) {
  boost::crc_32_type crc;
  crc.process_bytes(s.data(), s.size());
  return crc.checksum();
}

DiskCache::DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path DiskCache::path_for(const std::string& key) const {
  return dir_ / (hex(fnv1a(key), 16) + ".entry");
}

std::optional<std::string> DiskCache::get(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) {
    ++misses;
    return std::nullopt;
  }
  std::string magic, key_line, crc_line;
  std::getline(in, magic);
  std::getline(in, key_line);
  std::getline(in, crc_line);
  std::ostringstream rest;
  rest << in.rdbuf();
  std::string payload = rest.str();
  if (magic != kMagic || key_line != "key " + key) {
    ++corrupt;
    ++misses;
    return std::nullopt;
  }
  if (crc_line != "crc32 " + hex(crc32_of(payload), 8)) {
    ++corrupt;
    ++misses;
    return std::nullopt;
  }
  ++hits;
  return payload;
}

void DiskCache::put(const std::string& key, const std::string& payload) const {
  const auto target = path_for(key);
  std::random_device rd;
  auto tmp = target;
  tmp += ".tmp" + hex(rd(), 8);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    out << kMagic << '\n' << "key " << key << '\n' << "crc32 " << hex(crc32_of(payload), 8) << '\n' << payload;
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

std::string serialize_multiplicities(const DominantMultiplicities& m) {
  std::string out;
  for (const auto& [w, mult] : m) out += to_string(w) + ":" + std::to_string(mult) + "\n";
  return out;
}

DominantMultiplicities parse_multiplicities(const std::string& text, std::size_t rank) {
  DominantMultiplicities m;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw std::runtime_error("malformed cache line '" + line + "'");
    Weight w;
    std::istringstream coords(line.substr(0, colon));
    std::string part;
    while (std::getline(coords, part, ',')) w.coords.push_back(std::stoi(part));
    if (w.coords.size() != rank) throw std::runtime_error("cache entry has wrong rank");
    m[w] = std::stoull(line.substr(colon + 1));
  }
  return m;
}

FreudenthalCache DiskCache::freudenthal_hooks() const {
  FreudenthalCache hooks;
  hooks.lookup = [this](const RootSystem& rs, const Weight& lambda, DominantMultiplicities& out) {
    auto payload = get(freudenthal_key(rs, lambda));
    if (!payload) return false;
    try {
      out = parse_multiplicities(*payload, rs.rank());
    } catch (const std::exception&) {
      ++corrupt;
      return false;
    }
    return !out.empty();
  };
  hooks.store = [this](const RootSystem& rs, const Weight& lambda, const DominantMultiplicities& m) {
    put(freudenthal_key(rs, lambda), serialize_multiplicities(m));
  };
  return hooks;
}

}  // namespace liepow
