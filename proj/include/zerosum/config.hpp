#pragma once

#include <atomic>
#include <cstdint>

#include "zerosum/errors.hpp"

namespace zerosum {

/// Budgets for the exhaustive searches. `length_cap == 0` means
/// "derive from the group": twice the group order, which is past the
/// horizon of every invariant computed here.
struct SearchLimits {
    std::int64_t node_cap = 100'000'000;
    int length_cap = 0;
    int workers = 1;

    int effective_length_cap(std::int64_t group_order) const {
        if (length_cap > 0) return length_cap;
        auto cap = 2 * group_order;
        return cap > 1'000'000 ? 1'000'000 : static_cast<int>(cap);
    }
};

namespace detail {

/// Shared node counter for one search; throws once the budget is spent.
class NodeBudget {
public:
    explicit NodeBudget(std::int64_t cap) : cap_(cap) {}

    void tick(std::int64_t amount = 1) {
        if (used_.fetch_add(amount, std::memory_order_relaxed) + amount > cap_)
            throw CapExceeded("search node budget exceeded");
    }

    std::int64_t used() const { return used_.load(std::memory_order_relaxed); }

private:
    std::int64_t cap_;
    std::atomic<std::int64_t> used_{0};
};

} // namespace detail
} // namespace zerosum
