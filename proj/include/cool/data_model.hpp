#pragma once
// Dataset representation, line-delimited ingestion, and the source/target
// K-shot split protocol.

#include <filesystem>
#include <string>
#include <vector>

namespace cool {

enum class DomainRole { source, target };

const char* domain_role_name(DomainRole r);

struct NewsRecord {
  std::string id;
  std::string text;
  int label = 0;  // 0 true, 1 fake
  std::string domain;
};

struct Dataset {
  std::string name;
  DomainRole role = DomainRole::source;
  std::vector<NewsRecord> records;

  std::size_t size() const { return records.size(); }
  // (count of label 0, count of label 1)
  std::pair<std::size_t, std::size_t> class_counts() const;
};

struct IngestIssue {
  std::size_t line = 0;  // 1-based
  std::string message;
};

struct DatasetLoadResult {
  Dataset dataset;
  std::vector<IngestIssue> issues;  // malformed lines, reported not fatal
};

// Each input line is a flat JSON object with required keys id (string),
// text (string), label (0/1 integer) and optional domain (string).
// Malformed lines are collected in `issues`; a file that yields zero
// well-formed records is an error, as is a missing file.
DatasetLoadResult load_dataset(const std::filesystem::path& path, DomainRole role);

// Parse already-loaded lines; `name` labels the dataset.
DatasetLoadResult parse_dataset_lines(const std::vector<std::string>& lines,
                                      const std::string& name, DomainRole role);

struct ExperimentSplit {
  Dataset source_train;
  Dataset target_kshot;
  Dataset target_test;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;  // class imbalance, K == |target|, ...
};

// Deterministic class-balanced K-shot subset of the target: K/2 per label
// when both classes have enough records, otherwise filled from the other
// class with a warning. The complement becomes the target test set.
ExperimentSplit sample_k_shot(const Dataset& source, const Dataset& target, std::size_t k,
                              std::uint64_t seed);

struct PoolEntry {
  NewsRecord record;
  DomainRole role;
};

// Training pool: every source record tagged source plus every K-shot
// target record tagged target. Test records never enter the pool.
std::vector<PoolEntry> make_training_pool(const ExperimentSplit& split);

}  // namespace cool
