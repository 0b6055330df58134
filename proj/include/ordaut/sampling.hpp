#ifndef ORDAUT_SAMPLING_HPP
#define ORDAUT_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "ordaut/automaton.hpp"
#include "ordaut/ordinal.hpp"
#include "ordaut/word.hpp"

namespace ordaut::sampling {

// Deterministic generator (splitmix64) so seeded suites reproduce across
// platforms; std::uniform_int_distribution is implementation-defined.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

// Random automaton over `alphabet` with succ density ~1/3 and a handful of
// right limit transitions; initial/final sets nonempty.
inline OrdinalAutomaton random_automaton(Rng& rng, int nstates, const Alphabet& alphabet) {
    OrdinalAutomaton a;
    a.alphabet = alphabet;
    for (int q = 0; q < nstates; ++q) a.add_state("s" + std::to_string(q));
    const Symbol nsym = alphabet.symbol_count();
    for (State q = 0; q < a.size(); ++q)
        for (Symbol s = 0; s < nsym; ++s)
            for (State r = 0; r < a.size(); ++r)
                if (rng.below(3) == 0) a.add_succ(q, s, r);
    const StateSet all = a.all_states();
    const int nlimits = 3 + static_cast<int>(rng.below(4));
    for (int i = 0; i < nlimits; ++i) {
        StateSet s = 1 + rng.below(all);
        a.right_limits.emplace_back(s, static_cast<State>(rng.below(a.size())));
    }
    a.initial = bit(static_cast<State>(rng.below(a.size())));
    a.final_states = 1 + rng.below(all);
    return a;
}

// The fixed 6-position subset of w^2 used by the engine-vs-oracle checks.
inline std::vector<Ordinal> six_positions() {
    return {Ordinal::parse("0"),   Ordinal::parse("1"),     Ordinal::parse("w"),
            Ordinal::parse("w+2"), Ordinal::parse("w*3"),   Ordinal::parse("w*3+1")};
}

// Word with letter `a` at the universe positions selected by `mask`.
inline OrdinalWord word_from_mask(const std::vector<Ordinal>& universe, std::uint64_t mask,
                                  const Alphabet& alphabet) {
    OrdinalWord w(2, alphabet);
    for (std::size_t i = 0; i < universe.size(); ++i)
        if ((mask >> i) & 1) w.set(universe[i], 1);
    return w;
}

} // namespace ordaut::sampling

#endif
