#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace spf::detail {

// String-keyed memo table. Fills are idempotent: two threads racing on the
// same key compute the same value, so the second insert is a no-op.
template <typename Value>
class MemoCache {
public:
    std::optional<Value> find(const std::string& key) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }

    void insert(const std::string& key, Value value) {
        std::unique_lock lock(mutex_);
        table_.emplace(key, std::move(value));
    }

    std::map<std::string, Value> snapshot() const {
        std::shared_lock lock(mutex_);
        return {table_.begin(), table_.end()};
    }

    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, Value> table_;
};

}  // namespace spf::detail
