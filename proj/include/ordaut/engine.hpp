#ifndef ORDAUT_ENGINE_HPP
#define ORDAUT_ENGINE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ordaut/automaton.hpp"
#include "ordaut/ordinal.hpp"
#include "ordaut/word.hpp"

namespace ordaut {

// One witnessed crossing of a (sub)word or empty stretch: a run exists from
// `from` at the left cut to `to` at the right cut, and `visited` is the exact
// set of states assigned to cuts of the closed interval.
struct RelTriple {
    State from;
    StateSet visited;
    State to;

    auto operator<=>(const RelTriple&) const = default;
};

// A set of annotated crossings.  Composition joins on the middle state and
// unites the visited sets; the identity is {(q, {q}, q)}.
class Relation {
public:
    Relation() = default;
    static Relation identity(std::size_t nstates);
    static Relation from_triples(std::vector<RelTriple> ts);

    const std::vector<RelTriple>& triples() const noexcept { return triples_; }
    bool empty() const noexcept { return triples_.empty(); }

    Relation compose(const Relation& rhs) const;
    // Endpoint pairs without annotations, sorted and unique.
    std::vector<std::pair<State, State>> pairs() const;
    bool same_pairs(const Relation& other) const;
    StateSet image(StateSet from) const;
    bool connects(StateSet from, StateSet to) const;

    bool operator==(const Relation&) const = default;

private:
    std::vector<RelTriple> triples_; // sorted, unique
};

// How a level-j crossing was assembled: a walk with label union
// `prefix_states`, then a closed walk with label union `cycle_states` whose
// right limit transition yields `to`.
struct LassoWitness {
    State from;
    StateSet prefix_states;
    StateSet cycle_states;
    State to;
};

struct AcceptResult {
    bool accepted = false;
    // States of one accepting run at cut 0, around every support position,
    // and at the final cut.
    std::vector<std::pair<Ordinal, State>> witness;
};

// Run engine for one automaton over shape w^k.  Gap behaviors are memoized
// per level; the cache is private to the engine, so share automata across
// threads but give each thread its own Engine.
class Engine {
public:
    Engine(const OrdinalAutomaton& aut, int shape_exponent);

    const OrdinalAutomaton& automaton() const noexcept { return aut_; }
    int shape_exponent() const noexcept { return k_; }

    // Crossings of the empty input of length w^j (level 0: one blank step).
    const Relation& level(int j);
    // Lasso decompositions behind level j >= 1.
    const std::vector<LassoWitness>& level_detail(int j);

    // Crossings of the empty input of length delta, delta <= w^k.
    Relation gap_relation(const Ordinal& delta);
    // Single successor step reading `letter`.
    Relation step(Symbol letter) const;

    // Crossings of the cut interval [lo, hi]; only entries of w inside
    // [lo, hi) are consulted.
    Relation behavior(const OrdinalWord& w, const Ordinal& lo, const Ordinal& hi);

    // Membership; with an oracle the input is convolve(w, oracle).
    AcceptResult accepts(const OrdinalWord& w, const OrdinalWord* oracle = nullptr);

    // States of one accepting run at the given cuts (sorted, deduplicated;
    // the bounding cuts 0 and w^k are added).  nullopt if w is rejected.
    std::optional<std::vector<std::pair<Ordinal, State>>> run_states_at(
        const OrdinalWord& w, std::vector<Ordinal> cuts);

    // Smallest (p >= 1, q >= 1) with r^(p+q) = r^p.
    static std::pair<int, int> power_periodicity(const Relation& r, std::size_t nstates);

private:
    Relation power(int level_index, std::uint64_t c);
    const OrdinalWord& check_input(const OrdinalWord& w) const;

    const OrdinalAutomaton& aut_;
    int k_;
    std::vector<Relation> levels_;
    std::vector<std::vector<LassoWitness>> details_;
    std::vector<std::vector<Relation>> powers_;        // per level: powers[c-1] = level^c
    std::vector<std::pair<int, int>> power_period_;    // per level, (-1,-1) until known
};

} // namespace ordaut

#endif
