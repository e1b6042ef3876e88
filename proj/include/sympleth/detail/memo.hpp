#pragma once

#include <exception>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <optional>

namespace sympleth::detail {

// Thread-safe cache: each entry is built at most once, concurrent readers of
// an entry under construction wait for it. Entries are never evicted, so the
// returned references stay valid for the lifetime of the memo.
template <class Key, class Value, class Compare = std::less<Key>>
class Memo {
public:
    template <class Build>
    const Value& get(const Key& key, Build&& build)
    {
        std::shared_future<Value> fut;
        std::optional<std::promise<Value>> owner;
        {
            std::lock_guard lock(mutex_);
            auto it = entries_.find(key);
            if (it == entries_.end()) {
                owner.emplace();
                fut = owner->get_future().share();
                entries_.emplace(key, fut);
            } else {
                fut = it->second;
            }
        }
        if (owner) {
            try {
                owner->set_value(build());
            } catch (...) {
                owner->set_exception(std::current_exception());
            }
        }
        return fut.get();
    }

private:
    std::mutex mutex_;
    std::map<Key, std::shared_future<Value>, Compare> entries_;
};

}  // namespace sympleth::detail
