#ifndef ORDAUT_PRESENTATION_HPP
#define ORDAUT_PRESENTATION_HPP

#include <map>
#include <optional>
#include <string>

#include "ordaut/automaton.hpp"
#include "ordaut/word.hpp"

namespace ordaut {

// An automatic presentation: shape, domain automaton, named relation
// automata and an optional oracle word convolved onto every input.  With an
// oracle, the stored automata read one extra trailing coordinate (the oracle
// tape).
struct Presentation {
    int k = 1;
    Alphabet sigma; // base alphabet shared by all coordinates
    OrdinalAutomaton domain;
    struct Rel {
        OrdinalAutomaton automaton;
        std::size_t arity = 2;
    };
    std::map<std::string, Rel> relations;
    std::optional<OrdinalWord> oracle;

    bool member(const OrdinalWord& w) const;
    bool related(const std::string& rel, const std::vector<OrdinalWord>& args) const;

    // File format:
    //   presentation { shape: w^2; domain: file:dom.aut;
    //                  relation lt/2: file:lt.aut; oracle: "a@0" }
    static Presentation parse(std::string_view text, const std::string& base_dir);
    static Presentation load(const std::string& path);
    // Built-in presentations: enc1 enc2 enc3 (ordinal encodings with the
    // word well-order), natlt (alias of enc1), wordorder2 (all finite words
    // over {a} with the well-order).
    static Presentation builtin(const std::string& name);
    static std::vector<std::string> builtin_names();
};

// Specializes an automaton whose last coordinate reads a fixed oracle word:
// the result reads the remaining coordinates and accepts v iff the original
// accepts v (x) oracle.  Built as a product with a deterministic position
// tracker whose limit transitions follow the rank structure of the shape.
OrdinalAutomaton embed_oracle(const OrdinalAutomaton& a, const OrdinalWord& oracle, int k);

} // namespace ordaut

#endif
