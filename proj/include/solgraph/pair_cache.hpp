#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "solgraph/group.hpp"

namespace solgraph {

/// Memo table for subgroup solubility, keyed by subgroup fingerprint rather
/// than by generating pair: many pairs generate the same subgroup and
/// solubility is a property of the subgroup. Safe for concurrent use.
class PairCache {
 public:
  std::optional<bool> lookup(const Fingerprint& fp) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(fp);
    if (it == map_.end()) {
      ++misses_;
      return std::nullopt;
    }
    ++hits_;
    return it->second;
  }

  void insert(const Fingerprint& fp, bool soluble) {
    std::lock_guard<std::mutex> lock(mu_);
    map_.emplace(fp, soluble);
  }

  std::uint64_t hits() const {
    std::lock_guard<std::mutex> lock(mu_);
    return hits_;
  }
  std::uint64_t misses() const {
    std::lock_guard<std::mutex> lock(mu_);
    return misses_;
  }
  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
  }

  std::vector<std::pair<Fingerprint, bool>> snapshot() const {
    std::lock_guard<std::mutex> lock(mu_);
    return {map_.begin(), map_.end()};
  }

 private:
  mutable std::mutex mu_;
  mutable std::uint64_t hits_ = 0;
  mutable std::uint64_t misses_ = 0;
  std::unordered_map<Fingerprint, bool, FingerprintHash> map_;
};

}  // namespace solgraph
