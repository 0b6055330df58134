#ifndef ORDAUT_BITS_HPP
#define ORDAUT_BITS_HPP

#include <bit>
#include <cstdint>

namespace ordaut {

// States are small indices; state sets are 64-bit masks.
using State = std::uint32_t;
using StateSet = std::uint64_t;

constexpr StateSet bit(State q) noexcept { return StateSet{1} << q; }
constexpr bool has(StateSet s, State q) noexcept { return (s >> q) & 1; }
constexpr int popcount(StateSet s) noexcept { return std::popcount(s); }

// Visits each state of `s` in increasing order.
template <typename F>
void for_each_state(StateSet s, F&& f) {
    while (s) {
        State q = static_cast<State>(std::countr_zero(s));
        f(q);
        s &= s - 1;
    }
}

// Least state of a nonempty set.
constexpr State first_state(StateSet s) noexcept {
    return static_cast<State>(std::countr_zero(s));
}

} // namespace ordaut

#endif
