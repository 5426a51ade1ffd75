#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace wilf {

// Append-only memo of a named sequence. Readers see either nothing or the
// final value for a key; storing a different value under an existing key
// is a logic error (it would mean two routes disagree silently).
template <class Key, class Value>
class SequenceTable {
public:
    explicit SequenceTable(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }

    std::optional<Value> find(const Key& key) const
    {
        std::shared_lock lock(mu_);
        auto it = values_.find(key);
        if (it == values_.end()) return std::nullopt;
        return it->second;
    }

    const Value& store(const Key& key, Value value)
    {
        std::unique_lock lock(mu_);
        auto [it, inserted] = values_.try_emplace(key, std::move(value));
        if (!inserted && !(it->second == value))
            throw std::logic_error("sequence table '" + name_ + "': conflicting value for an existing key");
        return it->second;
    }

    // Compute outside the lock; concurrent first computations of the same key
    // race harmlessly because the values must coincide.
    Value get(const Key& key, const std::function<Value()>& compute)
    {
        if (auto hit = find(key)) return *hit;
        return store(key, compute());
    }

    std::size_t size() const
    {
        std::shared_lock lock(mu_);
        return values_.size();
    }

    // Smallest and largest stored key, if any.
    std::optional<std::pair<Key, Key>> range() const
    {
        std::shared_lock lock(mu_);
        if (values_.empty()) return std::nullopt;
        return std::make_pair(values_.begin()->first, values_.rbegin()->first);
    }

private:
    std::string name_;
    mutable std::shared_mutex mu_;
    std::map<Key, Value> values_;
};

} // namespace wilf
