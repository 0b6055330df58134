#include <doctest.h>

#include "ordaut/word.hpp"

using namespace ordaut;

namespace {
Ordinal O(const char* s) { return Ordinal::parse(s); }
}

TEST_CASE("word literal parse and format") {
    auto ab = Alphabet::simple({"a", "b"});
    auto w = OrdinalWord::parse("a@0, b@w", ab, 2);
    REQUIRE(w.entries().size() == 2);
    CHECK(w.entries()[0].first == O("0"));
    CHECK(w.entries()[1].first == O("w"));
    CHECK(w.str() == "a@0, b@w");
    CHECK(OrdinalWord::parse(w.str(), ab, 2) == w);

    CHECK(OrdinalWord::parse("", ab, 2).empty());
    CHECK(OrdinalWord::parse("  ", ab, 2).empty());
    CHECK(OrdinalWord::parse("b@w, a@0", ab, 2) == w); // sorted canonically

    CHECK_THROWS_AS(OrdinalWord::parse("a@w^2", ab, 2), ParseError); // position out of shape
    CHECK_THROWS_AS(OrdinalWord::parse("a@1, b@1", ab, 2), ParseError); // duplicate
    CHECK_THROWS_AS(OrdinalWord::parse("c@0", ab, 2), ParseError);      // unknown letter
    CHECK_THROWS_AS(OrdinalWord::parse("a@", ab, 2), ParseError);
}

TEST_CASE("alphabet symbol order puts blank least") {
    auto ab = Alphabet::simple({"a", "b"});
    CHECK(ab.find("_") == kBlank);
    CHECK(*ab.find("a") < *ab.find("b"));
    CHECK(ab.name(*ab.find("a")) == "a");
}

TEST_CASE("convolution support law and letters") {
    auto A = Alphabet::simple({"a"});
    auto B = Alphabet::simple({"b"});
    auto w = OrdinalWord::parse("a@0", A, 2);
    auto v = OrdinalWord::parse("b@w", B, 2);
    auto c = convolve({w, v});
    REQUIRE(c.entries().size() == 2);
    CHECK(c.alphabet().name(c.at(O("0"))) == "a,_");
    CHECK(c.alphabet().name(c.at(O("w"))) == "_,b");

    auto e = convolve({OrdinalWord(2, A), OrdinalWord(2, B)});
    CHECK(e.empty());

    auto w1 = OrdinalWord::parse("a@1", A, 2);
    auto v1 = OrdinalWord::parse("b@1", B, 2);
    auto c1 = convolve({w1, v1});
    REQUIRE(c1.entries().size() == 1);
    CHECK(c1.alphabet().name(c1.at(O("1"))) == "a,b");

    OrdinalWord bad(1, A);
    CHECK_THROWS_AS(convolve({w, bad}), DomainError);
}

TEST_CASE("convolution/projection adjunction on sampled words") {
    auto A = Alphabet::simple({"a", "b"});
    const char* lits[] = {"", "a@0", "b@w", "a@0, b@1, a@w*2+1", "b@3, a@w"};
    for (auto* s1 : lits)
        for (auto* s2 : lits) {
            auto w = OrdinalWord::parse(s1, A, 2);
            auto v = OrdinalWord::parse(s2, A, 2);
            auto c = convolve({w, v});
            // support = union of supports
            for (const auto& [p, sym] : c.entries())
                CHECK((w.at(p) != kBlank || v.at(p) != kBlank));
            for (const auto& [p, sym] : w.entries()) CHECK(c.at(p) != kBlank);
            for (const auto& [p, sym] : v.entries()) CHECK(c.at(p) != kBlank);
            CHECK(project_coordinate(c, 1) == w);
            CHECK(project_coordinate(c, 0) == v);
        }
}

TEST_CASE("gap profile") {
    auto A = Alphabet::simple({"a", "b"});
    SUBCASE("two letters over w^3") {
        auto w = OrdinalWord::parse("a@0, b@w^2+w", A, 3);
        auto g = gap_profile(w);
        CHECK(g.leading_gap == O("0"));
        REQUIRE(g.items.size() == 2);
        CHECK(g.items[0].second == O("w^2+w"));
        CHECK(g.items[1].second == O("w^3"));
    }
    SUBCASE("empty word over w") {
        auto g = gap_profile(OrdinalWord(1, A));
        CHECK(g.leading_gap == O("w"));
        CHECK(g.items.empty());
    }
    SUBCASE("a@3 over w") {
        auto g = gap_profile(OrdinalWord::parse("a@3", A, 1));
        CHECK(g.leading_gap == O("3"));
        REQUIRE(g.items.size() == 1);
        CHECK(g.items[0].second == O("w"));
    }
}

TEST_CASE("gap profile reassembly reconstructs entry positions") {
    auto A = Alphabet::simple({"a"});
    const char* lits[] = {"", "a@0", "a@5", "a@w", "a@0, a@1, a@w*2", "a@2, a@w+3, a@w^2+w"};
    for (auto* s : lits) {
        auto w = OrdinalWord::parse(s, A, 3);
        auto g = gap_profile(w);
        Ordinal cur = g.leading_gap;
        for (std::size_t i = 0; i < g.items.size(); ++i) {
            CHECK(cur == w.entries()[i].first);
            cur = add(add(cur, Ordinal::nat(1)), g.items[i].second);
        }
        CHECK(cur == w.shape());
        if (!g.items.empty()) CHECK(g.items.back().second == w.shape());
    }
}
