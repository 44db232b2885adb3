#pragma once

#include <map>
#include <mutex>
#include <optional>

namespace lzb::detail {

/// Insert-if-absent cache; stored values are never mutated after insertion.
template <class K, class V>
class Memo {
public:
    std::optional<V> find(const K& k) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(k);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    V insert(const K& k, V v) {
        std::lock_guard<std::mutex> lock(mu_);
        return map_.emplace(k, std::move(v)).first->second;
    }

private:
    mutable std::mutex mu_;
    std::map<K, V> map_;
};

}  // namespace lzb::detail
