#ifndef FEWPROD_TUPLES_HPP
#define FEWPROD_TUPLES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fewprod/errors.hpp"

namespace fewprod {

// base^length, throwing BudgetExceeded once the value passes `cap`.
inline std::uint64_t checked_tuple_count(std::uint64_t base, std::uint64_t length,
                                         std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < length; i++) {
        if (base != 0 && total > cap / base)
            throw BudgetExceeded("tuple space " + std::to_string(base) + "^" +
                                 std::to_string(length) + " exceeds budget " +
                                 std::to_string(cap));
        total *= base;
    }
    if (total > cap)
        throw BudgetExceeded("tuple space exceeds budget " + std::to_string(cap));
    return total;
}

// Visits every index tuple in {0,…,base−1}^length in odometer order (last
// position fastest). length 0 visits the single empty tuple.
template <class Fn>
void for_each_tuple(std::size_t base, std::size_t length, Fn&& fn) {
    if (base == 0) return;
    std::vector<std::size_t> idx(length, 0);
    while (true) {
        fn(static_cast<const std::vector<std::size_t>&>(idx));
        std::size_t i = length;
        while (i > 0) {
            if (++idx[i - 1] < base) break;
            idx[i - 1] = 0;
            i--;
        }
        if (i == 0) return;
    }
}

}  // namespace fewprod

#endif
