#ifndef ORDAUT_ABSTRACTION_HPP
#define ORDAUT_ABSTRACTION_HPP

#include <memory>
#include <optional>
#include <vector>

#include "ordaut/automaton.hpp"
#include "ordaut/engine.hpp"
#include "ordaut/ordinal.hpp"
#include "ordaut/word.hpp"

namespace ordaut {

// Canonicalization of gap lengths below w^k into finitely many classes that
// all participating automata cannot distinguish: per level j the coefficient
// is reduced in the cyclic monoid with preperiod P_j and period Q_j taken
// from the power periodicity of the level-j relations.  Two ordinals with
// equal profiles induce equal gap relations for every automaton used to
// derive the domain, and the reduction commutes with ordinal addition.
class GapClassDomain {
public:
    using Class = std::uint32_t;

    static GapClassDomain derive(int k, const std::vector<const OrdinalAutomaton*>& automata);

    int shape_exponent() const noexcept { return k_; }
    std::uint32_t cap(int level) const { return pp_[level].first + pp_[level].second - 1; }
    // Number of classes of gaps strictly below w^k.
    Class gap_class_count() const noexcept;
    // The designated class of the trailing stretch w^k.
    Class terminal() const noexcept { return gap_class_count(); }

    Class class_of(const Ordinal& delta) const; // delta <= w^k
    // Least ordinal in a non-terminal class (the canonical profile itself).
    Ordinal representative(Class c) const;
    // class(rep(g1) + rep(g2)) or class(rep(g1) + 1 + rep(g2)).
    Class combine(Class g1, bool plus_one, Class g2) const;
    Class zero() const { return class_of(Ordinal{}); }

    bool operator==(const GapClassDomain&) const = default;

private:
    int k_ = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pp_; // per level (preperiod, period)

    std::uint64_t canon_coeff(int level, std::uint64_t c) const;
};

using GapDomainPtr = std::shared_ptr<const GapClassDomain>;

// Classical NFA over symbols (gap class, letter): a word abstracts to the
// sequence of its letters, each prefixed by the class of the empty stretch
// before it; the trailing stretch is always class(w^k) and is folded into
// the per-state acceptance flag.
struct AbsTrans {
    std::uint32_t gap_cls;
    Symbol letter; // non-blank
    std::uint32_t to;
    auto operator<=>(const AbsTrans&) const = default;
};

struct AbstractNfa {
    GapDomainPtr dom;
    Alphabet alphabet; // letter part (possibly a tuple alphabet)
    std::vector<std::vector<AbsTrans>> trans;
    std::vector<std::uint32_t> initial; // sorted
    std::vector<char> accepting;        // accept after the trailing stretch

    std::uint32_t nstates() const noexcept { return static_cast<std::uint32_t>(trans.size()); }
};

using Abstraction = std::vector<std::pair<std::uint32_t, Symbol>>;

// The abstraction of a finite-support word.
Abstraction abstraction_of(const OrdinalWord& w, const GapClassDomain& dom);

// Abstraction of the ordinal automaton: transitions realize
// gap_relation(class) then a letter step; acceptance is reaching a state
// that meets a final state across the trailing w^k stretch.
AbstractNfa abstract_automaton(const OrdinalAutomaton& a, GapDomainPtr dom);

bool nfa_accepts(const AbstractNfa& n, const Abstraction& word);
bool nfa_is_empty(const AbstractNfa& n);
// Least-representative concrete word accepted by n, if any.
std::optional<OrdinalWord> nfa_witness(const AbstractNfa& n);

AbstractNfa nfa_union(const AbstractNfa& a, const AbstractNfa& b);
AbstractNfa nfa_intersect(const AbstractNfa& a, const AbstractNfa& b);
// Complement relative to all well-formed abstractions over the same
// alphabet and class domain (subset construction).
AbstractNfa nfa_complement(const AbstractNfa& a);
// Inserts a fresh coordinate over `base` at tuple position `at`; positions
// carried only by the new coordinate split gaps, which the construction
// re-accumulates with class addition.
AbstractNfa nfa_cylindrify(const AbstractNfa& a, std::size_t at, const Alphabet& base);
// Erases coordinate `coord`; positions whose remaining letters are blank
// are merged into the neighbouring gaps by saturated class addition.
AbstractNfa nfa_project(const AbstractNfa& a, std::size_t coord);

} // namespace ordaut

#endif
