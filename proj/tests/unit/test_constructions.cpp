#include <doctest.h>

#include <algorithm>

#include "ordaut/constructions.hpp"
#include "ordaut/engine.hpp"
#include "ordaut/sampling.hpp"
#include "oracle.hpp"

using namespace ordaut;

namespace {
Ordinal O(const char* s) { return Ordinal::parse(s); }
OrdinalWord W(const char* s, const Alphabet& a, int k) { return OrdinalWord::parse(s, a, k); }
}

TEST_CASE("finite-word recognizer matches the printed transition table") {
    auto A = Alphabet::simple({"a", "b"});
    auto a = finite_word_recognizer(A);
    REQUIRE(a.size() == 4);
    State n = 2, p = 3;
    CHECK(a.state_names[n] == "n");
    CHECK(a.state_names[p] == "p");
    CHECK(a.initial == bit(n));
    CHECK(a.final_states == (bit(n) | bit(p)));
    // (n,<>,n), (p,<>,n) and letter transitions into p
    CHECK(std::count(a.succ.begin(), a.succ.end(), std::tuple<State, Symbol, State>{n, 0, n}) == 1);
    CHECK(std::count(a.succ.begin(), a.succ.end(), std::tuple<State, Symbol, State>{p, 0, n}) == 1);
    CHECK(a.succ.size() == 2 + 2 * 2);
    CHECK(std::count(a.right_limits.begin(), a.right_limits.end(),
                     std::pair<StateSet, State>{bit(n), n}) == 1);
    CHECK(std::count(a.left_limits.begin(), a.left_limits.end(),
                     std::pair<State, StateSet>{n, bit(n)}) == 1);
    CHECK(a.right_limits.size() == 3);
    CHECK(a.left_limits.size() == 4);
}

TEST_CASE("finite-word recognizer accepts every bounded-support word") {
    auto A = Alphabet::simple({"a"});
    auto a = finite_word_recognizer(A);
    Engine eng(a, 2);
    const auto universe = sampling::six_positions();
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        auto w = sampling::word_from_mask(universe, mask, A);
        auto res = eng.accepts(w);
        CHECK(res.accepted);
        CHECK(res.accepted == testoracle::oracle_accepts(a, w));
        // p marks cuts whose left neighbour is in the support
        for (const auto& [cut, s] : res.witness) {
            bool left_in_supp = false;
            for (const auto& [pos, sym] : w.entries())
                if (add(pos, Ordinal::nat(1)) == cut) left_in_supp = true;
            CHECK(a.state_names[s] == (left_in_supp ? "p" : "n"));
        }
    }
}

TEST_CASE("rank probe C_n accepts the empty w^m word iff m <= n") {
    auto A = Alphabet::simple({"a"});
    for (int n = 0; n <= 4; ++n) {
        auto cn = rank_probe(n, A);
        for (int m = 1; m <= 4; ++m) {
            Engine eng(cn, m);
            CAPTURE(n);
            CAPTURE(m);
            CHECK(eng.accepts(OrdinalWord(m, A)).accepted == (m <= n));
        }
    }
}

TEST_CASE("rank probe witness states carry the analytic ranks") {
    auto A = Alphabet::simple({"a"});
    SUBCASE("C_1 on the empty w-word ends in q1_0") {
        auto cn = rank_probe(1, A);
        Engine eng(cn, 1);
        auto res = eng.accepts(OrdinalWord(1, A));
        REQUIRE(res.accepted);
        CHECK(cn.state_names[res.witness.back().second] == "q1_0");
    }
    SUBCASE("C_2 on the empty w^2-word ends in q2_0, cut w*j has left rank 1") {
        auto cn = rank_probe(2, A);
        Engine eng(cn, 2);
        auto res = eng.accepts(OrdinalWord(2, A));
        REQUIRE(res.accepted);
        CHECK(cn.state_names[res.witness.back().second] == "q2_0");
        auto states = eng.run_states_at(OrdinalWord(2, A), {O("w"), O("w*2"), O("w+1")});
        REQUIRE(states.has_value());
        for (const auto& [cut, s] : *states) {
            if (cut == O("w") || cut == O("w*2")) CHECK(cn.state_names[s] == "q1_0");
            if (cut == O("w+1") || cut == O("1")) CHECK(cn.state_names[s] == "q0_0");
        }
    }
    SUBCASE("C_2 also accepts nonempty words over w^2") {
        auto cn = rank_probe(2, A);
        Engine eng(cn, 2);
        CHECK(eng.accepts(W("a@0, a@w+3", A, 2)).accepted);
    }
}

TEST_CASE("word order comparator") {
    auto A = Alphabet::simple({"a", "b"});
    CHECK(word_order_cmp(W("a@4", A, 2), W("a@w", A, 2)) == Cmp::LT);
    CHECK(word_order_cmp(W("a@0, a@2", A, 2), W("a@1, a@2", A, 2)) == Cmp::LT);
    CHECK(word_order_cmp(W("", A, 2), W("a@0", A, 2)) == Cmp::LT);
    CHECK(word_order_cmp(W("", A, 2), W("", A, 2)) == Cmp::EQ);
    CHECK(word_order_cmp(W("a@3", A, 2), W("a@3", A, 2)) == Cmp::EQ);
    CHECK(word_order_cmp(W("b@3", A, 2), W("a@3", A, 2)) == Cmp::GT);
    CHECK(word_order_cmp(W("a@0, b@5", A, 2), W("b@0, a@5", A, 2)) == Cmp::GT);
    CHECK_THROWS_AS(word_order_cmp(W("a@0", A, 1), W("a@0", A, 2)), DomainError);
}

TEST_CASE("word order automaton agrees with the comparator pairwise") {
    auto A = Alphabet::simple({"a"});
    auto lt = word_order_automaton(A);
    Engine eng(lt, 2);
    const std::vector<Ordinal> supp{O("0"), O("1"), O("w"), O("w+1")};
    std::vector<OrdinalWord> words;
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
        OrdinalWord w(2, A);
        for (std::size_t i = 0; i < supp.size(); ++i)
            if ((mask >> i) & 1) w.set(supp[i], 1);
        words.push_back(w);
    }
    for (const auto& w : words)
        for (const auto& v : words) {
            bool lt_aut = eng.accepts(convolve({w, v})).accepted;
            CHECK(lt_aut == (word_order_cmp(w, v) == Cmp::LT));
        }
    // sorting matches the comparator order
    auto sorted = words;
    std::sort(sorted.begin(), sorted.end(), [](const OrdinalWord& x, const OrdinalWord& y) {
        return word_order_cmp(x, y) == Cmp::LT;
    });
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        CHECK(word_order_cmp(sorted[i], sorted[i + 1]) == Cmp::LT);
}

TEST_CASE("ordinal encoding") {
    auto A = enc_alphabet();
    CHECK(enc_ordinal(O("w*2+3"), 2) == W("a@0, a@1, a@2, a@w, a@w+1", A, 2));
    CHECK(enc_ordinal(O("0"), 1).empty());
    CHECK(enc_ordinal(O("0"), 3).empty());
    CHECK_THROWS_AS(enc_ordinal(O("w"), 1), DomainError);
    CHECK_THROWS_AS(enc_ordinal(O("w^(w)"), 2), DomainError);

    SUBCASE("round trips") {
        const char* lits[] = {"0", "1", "7", "w", "w*3+2", "w^2*2+w+1", "w^3+w"};
        for (auto* s : lits) {
            for (int k = 2; k <= 3; ++k) CHECK(dec_word(enc_ordinal(O(s), k), k) == O(s));
        }
        CHECK(dec_word(enc_ordinal(O("5"), 1), 1) == O("5"));
        CHECK(dec_word(enc_ordinal(O("w^(w)+w^4*3"), 3), 3) == O("w^(w)+w^4*3"));
    }
    SUBCASE("order isomorphism on a sample") {
        CHECK(word_order_cmp(enc_ordinal(O("w+1"), 2), enc_ordinal(O("w+3"), 2)) == Cmp::LT);
        std::vector<Ordinal> betas;
        for (std::uint64_t c1 = 0; c1 <= 3; ++c1)
            for (std::uint64_t c0 = 0; c0 <= 3; ++c0)
                betas.push_back(add(mul(O("w"), Ordinal::nat(c1)), Ordinal::nat(c0)));
        for (const auto& b1 : betas)
            for (const auto& b2 : betas) {
                auto want = b1 < b2 ? Cmp::LT : b1 == b2 ? Cmp::EQ : Cmp::GT;
                CHECK(word_order_cmp(enc_ordinal(b1, 2), enc_ordinal(b2, 2)) == want);
            }
    }
    SUBCASE("decode rejects words outside the image") {
        CHECK_THROWS_AS(dec_word(W("a@1", A, 1), 1), DomainError);
        CHECK_THROWS_AS(dec_word(W("a@w+1", A, 2), 2), DomainError);
    }
}
