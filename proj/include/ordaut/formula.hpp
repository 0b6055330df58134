#ifndef ORDAUT_FORMULA_HPP
#define ORDAUT_FORMULA_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ordaut/abstraction.hpp"
#include "ordaut/presentation.hpp"

namespace ordaut {

// First-order formulas over a presentation's relation symbols and `=`.
// Connectives & | ! ->, quantifiers `exists v` and `forall v`; atoms are
// written rel(x,y,...) or, for binary relations, infix `x rel y`.
struct Formula {
    enum class Kind { Atom, Eq, Not, And, Or, Imp, Exists, Forall };
    Kind kind = Kind::Atom;
    std::string rel;                // Atom
    std::vector<std::string> vars;  // Atom arguments / Eq operands
    std::string qvar;               // Exists, Forall
    std::shared_ptr<Formula> lhs, rhs;

    std::set<std::string> free_vars() const;
    std::string str() const;
};

using FormulaPtr = std::shared_ptr<Formula>;

FormulaPtr parse_formula(std::string_view text);

// Result of evaluating a formula over a presentation: a truth value for
// sentences, or the defining abstract automaton over the sorted free
// variables for open formulas.
struct FoOutcome {
    bool closed = false;
    bool truth = false;
    std::vector<std::string> vars;
    AbstractNfa nfa;
};

FoOutcome fo_eval(const Presentation& p, const Formula& f);

} // namespace ordaut

#endif
