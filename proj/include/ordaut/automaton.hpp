#ifndef ORDAUT_AUTOMATON_HPP
#define ORDAUT_AUTOMATON_HPP

#include <functional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "ordaut/bits.hpp"
#include "ordaut/word.hpp"

namespace ordaut {

// A nondeterministic automaton on ordinal-shaped words.  Successor
// transitions read a letter (possibly blank); right limit transitions fire at
// cuts without direct predecessor, keyed by the set of states occurring
// cofinally below the cut; left limit transitions are the dual and never fire
// on ordinal shapes (kept for the data model, flagged by validate()).
struct OrdinalAutomaton {
    std::vector<std::string> state_names;
    Alphabet alphabet;
    StateSet initial = 0;
    StateSet final_states = 0;
    std::vector<std::tuple<State, Symbol, State>> succ;
    std::vector<std::pair<StateSet, State>> right_limits;
    std::vector<std::pair<State, StateSet>> left_limits;
    // Optional rule-form right limits for generated automata whose explicit
    // transition list would be impractically large (products, trackers).
    // Called with a realized cofinal set; appends the permitted states.
    std::function<void(StateSet, std::vector<State>&)> right_limit_rule;

    std::size_t size() const noexcept { return state_names.size(); }
    StateSet all_states() const noexcept {
        return size() >= 64 ? ~StateSet{0} : (StateSet{1} << size()) - 1;
    }

    State add_state(std::string name);
    void add_succ(State from, Symbol letter, State to) { succ.emplace_back(from, letter, to); }
    // All states reachable from cofinal set S via a right limit transition.
    std::vector<State> limit_targets(StateSet s) const;

    std::string state_set_str(StateSet s) const;

    // Text format, whitespace-insensitive:
    //   automaton { states: q0 q1; alphabet: a b; initial: q0; final: q1;
    //               succ: q0 a q1; q1 _ q1; rlimit: {q1} q0; llimit: q0 {q1} }
    // `_` is the blank letter.  Product alphabets separate coordinates with
    // `|` (e.g. `alphabet: a b | a b`) and write letters as tuples `a,_`.
    std::string str() const;
    static OrdinalAutomaton parse(std::string_view text);
};

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool ok() const noexcept { return errors.empty(); }
    std::string str() const;
};

// Structural checks: nonempty initial/final sets, transitions referencing
// declared states and letters.  Warns on left limit transitions, which are
// unreachable on ordinal shapes.
ValidationReport validate(const OrdinalAutomaton& a);

} // namespace ordaut

#endif
