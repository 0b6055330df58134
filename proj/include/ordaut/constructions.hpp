#ifndef ORDAUT_CONSTRUCTIONS_HPP
#define ORDAUT_CONSTRUCTIONS_HPP

#include "ordaut/automaton.hpp"
#include "ordaut/ordinal.hpp"
#include "ordaut/word.hpp"

namespace ordaut {

// Recognizer of the finite-support words over `alphabet`: states e_l, e_r,
// n, p with p marking cuts whose left neighbour is in the support.
OrdinalAutomaton finite_word_recognizer(const Alphabet& alphabet);

// Rank probe C_n: accepts the empty w^m-word iff m <= n.  States are rank
// pairs q<i>_<j>; the right limit fired at a cut maps a cofinal set whose
// maximal rank coordinate is i-1 to states with left coordinate i.
OrdinalAutomaton rank_probe(int n, const Alphabet& alphabet);

enum class Cmp { LT, EQ, GT };
inline const char* cmp_name(Cmp c) { return c == Cmp::LT ? "LT" : c == Cmp::EQ ? "EQ" : "GT"; }

// Well-order of finite words: smaller maximal support position first (empty
// word least), ties broken at the largest differing position by the letter
// order with blank least.
Cmp word_order_cmp(const OrdinalWord& w, const OrdinalWord& v);

// Automaton over the squared alphabet accepting {w (x) v : w < v}.
OrdinalAutomaton word_order_automaton(const Alphabet& alphabet);

// Automaton accepting the arity-fold convolutions with all components equal.
OrdinalAutomaton equality_automaton(const Alphabet& alphabet, std::size_t arity = 2);

inline Alphabet enc_alphabet() { return Alphabet::simple({"a"}); }

// Block/backwards-lexicographic encoding of ordinals below w^(w^(k-1)) as
// words over {a} with shape w^k: for k = 1 a unary prefix, for k >= 2 the
// base-w^(w^(k-2)) digits encoded recursively in consecutive w^(k-1) blocks.
OrdinalWord enc_ordinal(const Ordinal& beta, int k);
Ordinal dec_word(const OrdinalWord& w, int k);

} // namespace ordaut

#endif
