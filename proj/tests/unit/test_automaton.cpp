#include <doctest.h>

#include "ordaut/automaton.hpp"
#include "ordaut/constructions.hpp"

using namespace ordaut;

TEST_CASE("automaton text format round trip") {
    const char* text =
        "automaton { states: q0 q1; alphabet: a b; initial: q0; final: q1;"
        "  succ: q0 a q1; q1 _ q1; rlimit: {q1} q0; llimit: q0 {q1} }";
    auto a = OrdinalAutomaton::parse(text);
    CHECK(a.size() == 2);
    CHECK(a.alphabet.components()[0] == std::vector<std::string>{"a", "b"});
    CHECK(a.initial == bit(0));
    CHECK(a.final_states == bit(1));
    REQUIRE(a.succ.size() == 2);
    CHECK(std::get<1>(a.succ[1]) == kBlank);
    REQUIRE(a.right_limits.size() == 1);
    CHECK(a.right_limits[0] == std::pair<StateSet, State>{bit(1), 0});
    REQUIRE(a.left_limits.size() == 1);

    auto b = OrdinalAutomaton::parse(a.str());
    CHECK(b.str() == a.str());
}

TEST_CASE("automaton format with product alphabet") {
    const char* text =
        "automaton { states: s; alphabet: a | a b; initial: s; final: s;"
        "  succ: s a,b s; s _,a s; s _ s }";
    auto a = OrdinalAutomaton::parse(text);
    CHECK(a.alphabet.arity() == 2);
    REQUIRE(a.succ.size() == 3);
    CHECK(std::get<1>(a.succ[2]) == kBlank);
    CHECK(OrdinalAutomaton::parse(a.str()).str() == a.str());
}

TEST_CASE("automaton parse errors carry positions") {
    CHECK_THROWS_AS(OrdinalAutomaton::parse("automaton { alphabet: a; succ: q a q }"),
                    ParseError);
    CHECK_THROWS_AS(OrdinalAutomaton::parse("automaton { states: q; alphabet: a; initial: q;"
                                            " final: q; rlimit: q0 q }"),
                    ParseError);
    CHECK_THROWS_AS(OrdinalAutomaton::parse("automata { }"), ParseError);
    CHECK_THROWS_AS(OrdinalAutomaton::parse("automaton { states: q q; alphabet: a }"),
                    ParseError);
}

TEST_CASE("validate flags structural problems") {
    auto a = OrdinalAutomaton::parse(
        "automaton { states: q0 q1; alphabet: a; initial: q0; final: q1; succ: q0 a q1 }");
    CHECK(validate(a).ok());

    a.final_states = 0;
    auto rep = validate(a);
    CHECK(!rep.ok());

    a = OrdinalAutomaton::parse(
        "automaton { states: q0; alphabet: a; initial: q0; final: q0 }");
    a.succ.emplace_back(0, 7, 0); // undeclared letter
    rep = validate(a);
    CHECK(!rep.ok());
}

TEST_CASE("validate warns about left limits on the finite-word recognizer") {
    auto a = finite_word_recognizer(Alphabet::simple({"a"}));
    auto rep = validate(a);
    CHECK(rep.ok());
    REQUIRE(rep.warnings.size() == 1);
    CHECK(rep.warnings[0].find("left limit") != std::string::npos);
}
