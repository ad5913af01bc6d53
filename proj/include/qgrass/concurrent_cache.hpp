#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace qgrass {

/// Memo table shared between threads. Readers take a shared lock; a miss is
/// computed outside the lock and inserted under an exclusive one. Two threads
/// racing on the same key compute identical values, so whichever insert wins
/// is kept.
template <class Key, class Value, class Compare = std::less<Key>>
class ConcurrentCache {
public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  /// Returns the stored value, computing it with `make()` on a miss.
  template <class Make>
  Value get_or_compute(const Key& key, Make&& make) {
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    Value value = make();
    std::unique_lock lock(mutex_);
    return map_.try_emplace(key, std::move(value)).first->second;
  }

  void insert(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    map_.try_emplace(key, std::move(value));
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value, Compare> map_;
};

} // namespace qgrass
