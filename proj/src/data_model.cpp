#include "cool/data_model.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "cool/rng.hpp"

namespace cool {

using nlohmann::json;

const char* domain_role_name(DomainRole r) {
  return r == DomainRole::source ? "source" : "target";
}

std::pair<std::size_t, std::size_t> Dataset::class_counts() const {
  std::size_t c0 = 0, c1 = 0;
  for (const auto& r : records) (r.label == 0 ? c0 : c1)++;
  return {c0, c1};
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

DatasetLoadResult parse_dataset_lines(const std::vector<std::string>& lines,
                                      const std::string& name, DomainRole role) {
  DatasetLoadResult result;
  result.dataset.name = name;
  result.dataset.role = role;
  std::unordered_set<std::string> seen_ids;

  std::size_t line_no = 0;
  for (const auto& raw : lines) {
    ++line_no;
    if (trim(raw).empty()) continue;
    json j = json::parse(raw, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      result.issues.push_back({line_no, "not a JSON object"});
      continue;
    }
    NewsRecord rec;
    bool ok = true;
    for (const char* key : {"id", "text", "label"}) {
      if (!j.contains(key)) {
        result.issues.push_back({line_no, std::string("missing key '") + key + "'"});
        ok = false;
      }
    }
    if (!ok) continue;
    if (!j["id"].is_string() || !j["text"].is_string()) {
      result.issues.push_back({line_no, "id and text must be strings"});
      continue;
    }
    rec.id = j["id"].get<std::string>();
    rec.text = j["text"].get<std::string>();
    if (!j["label"].is_number_integer()) {
      result.issues.push_back({line_no, "label must be an integer"});
      continue;
    }
    rec.label = j["label"].get<int>();
    if (rec.label != 0 && rec.label != 1) {
      result.issues.push_back({line_no, "label outside {0,1}"});
      continue;
    }
    if (trim(rec.text).empty()) {
      result.issues.push_back({line_no, "text empty after trimming"});
      continue;
    }
    if (!seen_ids.insert(rec.id).second) {
      result.issues.push_back({line_no, "duplicate id '" + rec.id + "'"});
      continue;
    }
    rec.domain = j.value("domain", name);
    result.dataset.records.push_back(std::move(rec));
  }

  if (result.dataset.records.empty()) {
    throw std::runtime_error("no records in dataset '" + name + "'");
  }
  return result;
}

DatasetLoadResult load_dataset(const std::filesystem::path& path, DomainRole role) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open dataset file: " + path.string());
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return parse_dataset_lines(lines, path.stem().string(), role);
}

ExperimentSplit sample_k_shot(const Dataset& source, const Dataset& target, std::size_t k,
                              std::uint64_t seed) {
  if (k > target.size()) {
    throw std::invalid_argument("K exceeds target dataset size");
  }

  ExperimentSplit split;
  split.k = k;
  split.seed = seed;
  split.source_train = source;

  // Indices per class, shuffled deterministically.
  std::vector<std::size_t> by_class[2];
  for (std::size_t i = 0; i < target.records.size(); ++i) {
    by_class[target.records[i].label].push_back(i);
  }
  Rng rng(seed);
  rng.shuffle(by_class[0]);
  rng.shuffle(by_class[1]);

  if (k > 0 && by_class[0].empty()) throw std::runtime_error("target has no label-0 records");
  if (k > 0 && by_class[1].empty()) throw std::runtime_error("target has no label-1 records");

  // Balanced quota: label 0 takes the extra slot when K is odd.
  std::size_t want0 = (k + 1) / 2;
  std::size_t want1 = k / 2;
  std::size_t take0 = std::min(want0, by_class[0].size());
  std::size_t take1 = std::min(want1, by_class[1].size());
  // Fill the shortfall from the other class.
  std::size_t deficit = k - take0 - take1;
  if (deficit > 0) {
    std::size_t extra0 = std::min(deficit, by_class[0].size() - take0);
    take0 += extra0;
    deficit -= extra0;
    std::size_t extra1 = std::min(deficit, by_class[1].size() - take1);
    take1 += extra1;
    deficit -= extra1;
  }
  if (deficit > 0) throw std::runtime_error("cannot assemble K-shot subset");
  if (take0 != want0 || take1 != want1) {
    split.warnings.push_back("k-shot subset imbalanced: " + std::to_string(take0) +
                             " label-0 vs " + std::to_string(take1) + " label-1");
  }

  std::vector<bool> in_kshot(target.records.size(), false);
  for (std::size_t i = 0; i < take0; ++i) in_kshot[by_class[0][i]] = true;
  for (std::size_t i = 0; i < take1; ++i) in_kshot[by_class[1][i]] = true;

  split.target_kshot.name = target.name + "-kshot";
  split.target_kshot.role = DomainRole::target;
  split.target_test.name = target.name + "-test";
  split.target_test.role = DomainRole::target;
  for (std::size_t i = 0; i < target.records.size(); ++i) {
    (in_kshot[i] ? split.target_kshot : split.target_test).records.push_back(target.records[i]);
  }

  if (split.target_test.records.empty()) {
    split.warnings.push_back("K equals target size: test set is empty");
  }
  return split;
}

std::vector<PoolEntry> make_training_pool(const ExperimentSplit& split) {
  std::vector<PoolEntry> pool;
  pool.reserve(split.source_train.size() + split.target_kshot.size());
  for (const auto& r : split.source_train.records) pool.push_back({r, DomainRole::source});
  for (const auto& r : split.target_kshot.records) pool.push_back({r, DomainRole::target});
  return pool;
}

}  // namespace cool
