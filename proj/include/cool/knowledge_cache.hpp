#pragma once
// Persistent cache for linker / knowledge-base responses. On disk: one
// append-only record file per kind plus an append-only index, so replay
// runs are a pure function of the cache contents. Snapshots pack the
// whole cache into a single zlib-compressed archive with a checksum
// footer for distribution.

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace cool {

enum class CacheKind { link, neighbors, description };

const char* cache_kind_name(CacheKind k);

struct CacheEntry {
  CacheKind kind;
  std::string key;
  std::string value;
};

class KnowledgeCache {
 public:
  // In-memory cache (tests, ephemeral runs).
  KnowledgeCache() = default;
  // Opens or creates a disk-backed cache directory.
  explicit KnowledgeCache(const std::filesystem::path& dir);

  std::optional<std::string> get(CacheKind kind, const std::string& key) const;
  bool contains(CacheKind kind, const std::string& key) const;

  // Stores an entry; re-putting an identical value is a no-op, a
  // conflicting value for an existing key is an error.
  void put(CacheKind kind, const std::string& key, const std::string& value);

  std::size_t size() const;
  // Entries in deterministic (kind, key) order.
  std::vector<CacheEntry> entries() const;

  const std::filesystem::path& dir() const { return dir_; }
  bool persistent() const { return !dir_.empty(); }

 private:
  void append_to_disk(CacheKind kind, const std::string& key, const std::string& value);
  void load_from_disk();

  std::filesystem::path dir_;
  std::map<std::pair<int, std::string>, std::string> map_;
  mutable std::mutex mu_;  // single-writer contract; readers share the lock
};

// Single-file archive: magic, zlib-compressed entry stream, SHA-256
// checksum footer. Export is deterministic for a given entry set.
void snapshot_export(const KnowledgeCache& cache, const std::filesystem::path& archive);

// Imports entries; conflicting keys (same key, different value) abort
// with an error listing the conflicts. Returns number of entries added.
std::size_t snapshot_import(const std::filesystem::path& archive, KnowledgeCache& cache);

}  // namespace cool
