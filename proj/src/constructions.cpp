#include "ordaut/constructions.hpp"

#include <algorithm>
#include <map>

namespace ordaut {

OrdinalAutomaton finite_word_recognizer(const Alphabet& alphabet) {
    if (alphabet.arity() != 1) throw DomainError("finite_word_recognizer expects a plain alphabet");
    OrdinalAutomaton a;
    a.alphabet = alphabet;
    const State el = a.add_state("e_l");
    const State er = a.add_state("e_r");
    const State n = a.add_state("n");
    const State p = a.add_state("p");
    a.initial = bit(n);
    a.final_states = bit(n) | bit(p);
    a.add_succ(n, kBlank, n);
    a.add_succ(p, kBlank, n);
    for (Symbol s = 1; s < alphabet.symbol_count(); ++s) {
        a.add_succ(n, s, p);
        a.add_succ(p, s, p);
    }
    a.right_limits = {{bit(n), n}, {bit(p), el}, {bit(n) | bit(p), el}};
    a.left_limits = {{n, bit(n)}, {p, bit(n)}, {er, bit(p)}, {er, bit(n) | bit(p)}};
    return a;
}

OrdinalAutomaton rank_probe(int n, const Alphabet& alphabet) {
    if (n < 0) throw DomainError("rank probe needs n >= 0");
    // Explicit limit transitions enumerate subsets of an (n x n)-grid.
    if (n > 4) throw DomainError("rank probe limited to n <= 4");
    OrdinalAutomaton a;
    a.alphabet = alphabet;
    const int side = n + 1;
    auto id = [side](int i, int j) { return static_cast<State>(i * side + j); };
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j)
            a.add_state("q" + std::to_string(i) + "_" + std::to_string(j));
    for (int j = 0; j < side; ++j) a.initial |= bit(id(0, j));
    for (int i = 0; i < side; ++i) a.final_states |= bit(id(i, 0));
    for (Symbol s = 0; s < alphabet.symbol_count(); ++s)
        for (int i = 0; i < side; ++i)
            for (int j = 0; j < side; ++j) a.add_succ(id(i, 0), s, id(0, j));

    // Rank-r sets: subsets of the r x r grid whose maximal coordinate is
    // exactly r-1; such a set fires limits into rank r.
    for (int r = 1; r <= n; ++r) {
        const int grid = r; // coordinates 0..r-1
        std::vector<State> cells;
        for (int i = 0; i < grid; ++i)
            for (int j = 0; j < grid; ++j) cells.push_back(id(i, j));
        const std::uint64_t count = std::uint64_t{1} << cells.size();
        for (std::uint64_t mask = 1; mask < count; ++mask) {
            StateSet set = 0;
            bool hits_top = false;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if ((mask >> c) & 1) {
                    set |= bit(cells[c]);
                    int i = static_cast<int>(c) / grid, j = static_cast<int>(c) % grid;
                    if (i == r - 1 || j == r - 1) hits_top = true;
                }
            }
            if (!hits_top) continue;
            for (int j = 0; j < side; ++j) a.right_limits.emplace_back(set, id(r, j));
            for (int i = 0; i < side; ++i) a.left_limits.emplace_back(id(i, r), set);
        }
    }
    return a;
}

Cmp word_order_cmp(const OrdinalWord& w, const OrdinalWord& v) {
    if (w.shape_exponent() != v.shape_exponent() || !(w.alphabet() == v.alphabet()))
        throw DomainError("word_order_cmp requires equal shapes and alphabets");
    const auto& ew = w.entries();
    const auto& ev = v.entries();
    if (ew.empty() && ev.empty()) return Cmp::EQ;
    if (ew.empty()) return Cmp::LT;
    if (ev.empty()) return Cmp::GT;
    if (ew.back().first != ev.back().first)
        return ew.back().first < ev.back().first ? Cmp::LT : Cmp::GT;
    // Walk both supports from the top; the largest differing position decides.
    std::size_t i = ew.size(), j = ev.size();
    while (i > 0 || j > 0) {
        if (i == 0) return Cmp::LT; // v has a letter where w is blank
        if (j == 0) return Cmp::GT;
        const auto& [pw, sw] = ew[i - 1];
        const auto& [pv, sv] = ev[j - 1];
        if (pw == pv) {
            if (sw != sv) return sw < sv ? Cmp::LT : Cmp::GT;
            --i;
            --j;
        } else if (pw < pv) {
            return Cmp::LT; // at pv: w blank, v letter
        } else {
            return Cmp::GT;
        }
    }
    return Cmp::EQ;
}

OrdinalAutomaton word_order_automaton(const Alphabet& alphabet) {
    if (alphabet.arity() != 1) throw DomainError("word_order_automaton expects a plain alphabet");
    OrdinalAutomaton a;
    a.alphabet = Alphabet::product({alphabet, alphabet});
    const State d = a.add_state("D");
    const State e = a.add_state("E");
    a.initial = bit(d);
    a.final_states = bit(e);
    const Symbol base = static_cast<Symbol>(alphabet.symbol_count());
    for (Symbol x = 0; x < base; ++x)
        for (Symbol y = 0; y < base; ++y) {
            const Symbol pair = x * base + y;
            a.add_succ(d, pair, d);
            if (x < y) a.add_succ(d, pair, e);
            if (x == y) a.add_succ(e, pair, e);
        }
    a.right_limits = {{bit(d), d}, {bit(e), e}};
    return a;
}

OrdinalAutomaton equality_automaton(const Alphabet& alphabet, std::size_t arity) {
    if (alphabet.arity() != 1) throw DomainError("equality_automaton expects a plain alphabet");
    if (arity < 2) throw DomainError("equality needs arity >= 2");
    OrdinalAutomaton a;
    std::vector<Alphabet> parts(arity, alphabet);
    a.alphabet = Alphabet::product(parts);
    const State q = a.add_state("q");
    a.initial = a.final_states = bit(q);
    for (Symbol s = 0; s < alphabet.symbol_count(); ++s) {
        std::vector<Symbol> digits(arity, s);
        a.add_succ(q, a.alphabet.pack(digits), q);
    }
    a.right_limits = {{bit(q), q}};
    return a;
}

OrdinalWord enc_ordinal(const Ordinal& beta, int k) {
    if (k < 1) throw DomainError("enc_ordinal needs k >= 1");
    const Ordinal bound =
        Ordinal::omega_pow(Ordinal::omega_pow(Ordinal::nat(static_cast<std::uint64_t>(k - 1))));
    if (beta >= bound)
        throw DomainError("ordinal out of range for k=" + std::to_string(k) + ": " + beta.str());
    OrdinalWord w(k, enc_alphabet());
    const Symbol a = 1;
    if (k == 1) {
        const std::uint64_t c = beta.as_nat();
        for (std::uint64_t i = 0; i < c; ++i) w.set(Ordinal::nat(i), a);
        return w;
    }
    // Base-w^(w^(k-2)) digits of beta, indexed by the w^(k-2) quotient of
    // each CNF exponent.
    const Ordinal tau_exp = Ordinal::nat(static_cast<std::uint64_t>(k - 2));
    std::map<std::uint64_t, std::vector<Ordinal::Term>> digit_terms;
    for (const auto& t : beta.terms()) {
        const Ordinal& e = t.exponent;
        std::uint64_t j = e.coeff_of(tau_exp);
        std::vector<Ordinal::Term> low;
        for (const auto& et : e.terms())
            if (et.exponent < tau_exp) low.push_back(et);
        digit_terms[j].push_back(Ordinal::Term{Ordinal::from_terms(low), t.coeff});
    }
    const Ordinal block = Ordinal::omega_pow(Ordinal::nat(static_cast<std::uint64_t>(k - 1)));
    for (auto& [j, terms] : digit_terms) {
        Ordinal digit = Ordinal::from_terms(terms);
        OrdinalWord sub = enc_ordinal(digit, k - 1);
        const Ordinal base = mul(block, Ordinal::nat(j));
        for (const auto& [p, s] : sub.entries()) w.set(add(base, p), s);
    }
    return w;
}

Ordinal dec_word(const OrdinalWord& w, int k) {
    if (k < 1) throw DomainError("dec_word needs k >= 1");
    if (w.shape_exponent() != k) throw DomainError("word shape does not match k");
    if (k == 1) {
        std::uint64_t c = 0;
        for (const auto& [p, s] : w.entries()) {
            if (p != Ordinal::nat(c)) throw DomainError("not an encoding: gap in unary prefix");
            ++c;
        }
        return Ordinal::nat(c);
    }
    const Ordinal block_exp = Ordinal::nat(static_cast<std::uint64_t>(k - 1));
    const Ordinal block = Ordinal::omega_pow(block_exp);
    const Ordinal tau_exp = Ordinal::nat(static_cast<std::uint64_t>(k - 2));
    std::map<std::uint64_t, OrdinalWord> blocks;
    for (const auto& [p, s] : w.entries()) {
        const std::uint64_t j = p.coeff_of(block_exp);
        auto [it, inserted] = blocks.try_emplace(j, k - 1, w.alphabet());
        it->second.set(left_sub(mul(block, Ordinal::nat(j)), p), s);
    }
    Ordinal beta;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        const Ordinal digit = dec_word(it->second, k - 1);
        // tau^j = w^(w^(k-2) * j)
        const Ordinal shift = mul(Ordinal::omega_pow(tau_exp), Ordinal::nat(it->first));
        beta = add(beta, mul(Ordinal::omega_pow(shift), digit));
    }
    return beta;
}

} // namespace ordaut
