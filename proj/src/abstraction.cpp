#include "ordaut/abstraction.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace ordaut {

GapClassDomain GapClassDomain::derive(int k,
                                      const std::vector<const OrdinalAutomaton*>& automata) {
    GapClassDomain d;
    d.k_ = k;
    d.pp_.assign(static_cast<std::size_t>(k), {1, 1});
    for (const OrdinalAutomaton* a : automata) {
        Engine eng(*a, k);
        for (int j = 0; j < k; ++j) {
            auto [p, q] = Engine::power_periodicity(eng.level(j), a->size());
            auto& [P, Q] = d.pp_[static_cast<std::size_t>(j)];
            P = std::max(P, static_cast<std::uint32_t>(p));
            Q = std::lcm(Q, static_cast<std::uint32_t>(q));
        }
    }
    return d;
}

std::uint64_t GapClassDomain::canon_coeff(int level, std::uint64_t c) const {
    const auto& [P, Q] = pp_[static_cast<std::size_t>(level)];
    if (c < P) return c;
    return P + (c - P) % Q;
}

GapClassDomain::Class GapClassDomain::gap_class_count() const noexcept {
    Class n = 1;
    for (int j = 0; j < k_; ++j) n *= cap(j) + 1;
    return n;
}

GapClassDomain::Class GapClassDomain::class_of(const Ordinal& delta) const {
    const Ordinal shape = Ordinal::omega_pow(Ordinal::nat(static_cast<std::uint64_t>(k_)));
    if (delta == shape) return terminal();
    if (delta > shape) throw DomainError("gap exceeds the shape: " + delta.str());
    Class idx = 0;
    for (int j = k_ - 1; j >= 0; --j) {
        std::uint64_t c = delta.coeff_of(Ordinal::nat(static_cast<std::uint64_t>(j)));
        idx = idx * (cap(j) + 1) + static_cast<Class>(canon_coeff(j, c));
    }
    return idx;
}

Ordinal GapClassDomain::representative(Class c) const {
    if (c >= gap_class_count())
        return Ordinal::omega_pow(Ordinal::nat(static_cast<std::uint64_t>(k_)));
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(k_));
    for (int j = 0; j < k_; ++j) {
        // class_of packs level k-1 first, so level 0 is the innermost radix.
        Class radix = cap(j) + 1;
        digits[static_cast<std::size_t>(j)] = c % radix;
        c /= radix;
    }
    std::vector<Ordinal::Term> terms;
    for (int j = k_ - 1; j >= 0; --j)
        if (std::uint64_t d = digits[static_cast<std::size_t>(j)])
            terms.push_back(Ordinal::Term{Ordinal::nat(static_cast<std::uint64_t>(j)), d});
    return Ordinal::from_terms(std::move(terms));
}

GapClassDomain::Class GapClassDomain::combine(Class g1, bool plus_one, Class g2) const {
    Ordinal sum = add(representative(g1), plus_one ? Ordinal::nat(1) : Ordinal{});
    return class_of(add(sum, representative(g2)));
}

Abstraction abstraction_of(const OrdinalWord& w, const GapClassDomain& dom) {
    if (w.shape_exponent() != dom.shape_exponent())
        throw DomainError("word shape does not match the class domain");
    Abstraction out;
    auto prof = gap_profile(w);
    Ordinal gap = prof.leading_gap;
    for (std::size_t i = 0; i < prof.items.size(); ++i) {
        out.emplace_back(dom.class_of(gap), prof.items[i].first);
        gap = prof.items[i].second;
    }
    return out;
}

AbstractNfa abstract_automaton(const OrdinalAutomaton& a, GapDomainPtr dom) {
    AbstractNfa n;
    n.dom = dom;
    n.alphabet = a.alphabet;
    const int k = dom->shape_exponent();
    Engine eng(a, k);
    n.trans.resize(a.size());
    for_each_state(a.initial, [&](State q) { n.initial.push_back(q); });
    n.accepting.assign(a.size(), 0);
    const Relation tail =
        eng.gap_relation(Ordinal::omega_pow(Ordinal::nat(static_cast<std::uint64_t>(k))));
    for (State q = 0; q < a.size(); ++q)
        if (tail.connects(bit(q), a.final_states)) n.accepting[static_cast<std::size_t>(q)] = 1;
    for (GapClassDomain::Class g = 0; g < dom->gap_class_count(); ++g) {
        const Relation rel = eng.gap_relation(dom->representative(g));
        for (const auto& [q, mid] : rel.pairs())
            for (const auto& [from, sym, to] : a.succ)
                if (from == mid && sym != kBlank)
                    n.trans[static_cast<std::size_t>(q)].push_back({g, sym, to});
    }
    for (auto& v : n.trans) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return n;
}

bool nfa_accepts(const AbstractNfa& n, const Abstraction& word) {
    std::set<std::uint32_t> cur(n.initial.begin(), n.initial.end());
    for (const auto& [g, sym] : word) {
        std::set<std::uint32_t> next;
        for (std::uint32_t q : cur)
            for (const auto& t : n.trans[q])
                if (t.gap_cls == g && t.letter == sym) next.insert(t.to);
        cur = std::move(next);
        if (cur.empty()) return false;
    }
    for (std::uint32_t q : cur)
        if (n.accepting[q]) return true;
    return false;
}

bool nfa_is_empty(const AbstractNfa& n) {
    std::vector<char> seen(n.nstates(), 0);
    std::deque<std::uint32_t> todo;
    for (auto q : n.initial) {
        if (seen[q]) continue;
        seen[q] = 1;
        todo.push_back(q);
    }
    while (!todo.empty()) {
        auto q = todo.front();
        todo.pop_front();
        if (n.accepting[q]) return false;
        for (const auto& t : n.trans[q])
            if (!seen[t.to]) {
                seen[t.to] = 1;
                todo.push_back(t.to);
            }
    }
    return true;
}

std::optional<OrdinalWord> nfa_witness(const AbstractNfa& n) {
    std::vector<int> back_state(n.nstates(), -1);
    std::vector<AbsTrans> back_edge(n.nstates());
    std::vector<char> seen(n.nstates(), 0);
    std::deque<std::uint32_t> todo;
    std::optional<std::uint32_t> hit;
    for (auto q : n.initial) {
        if (seen[q]) continue;
        seen[q] = 1;
        todo.push_back(q);
    }
    while (!todo.empty() && !hit) {
        auto q = todo.front();
        todo.pop_front();
        if (n.accepting[q]) {
            hit = q;
            break;
        }
        for (const auto& t : n.trans[q])
            if (!seen[t.to]) {
                seen[t.to] = 1;
                back_state[t.to] = static_cast<int>(q);
                back_edge[t.to] = t;
                todo.push_back(t.to);
            }
    }
    if (!hit) return std::nullopt;
    std::vector<AbsTrans> path;
    std::uint32_t q = *hit;
    while (back_state[q] >= 0) {
        path.push_back(back_edge[q]);
        q = static_cast<std::uint32_t>(back_state[q]);
    }
    std::reverse(path.begin(), path.end());
    OrdinalWord w(n.dom->shape_exponent(), n.alphabet);
    Ordinal pos;
    bool first = true;
    for (const auto& t : path) {
        Ordinal gap = n.dom->representative(t.gap_cls);
        pos = first ? gap : add(pos, add(Ordinal::nat(1), gap));
        first = false;
        w.set(pos, t.letter);
    }
    return w;
}

namespace {

void check_compatible(const AbstractNfa& a, const AbstractNfa& b) {
    if (!a.dom || !b.dom || !(*a.dom == *b.dom))
        throw DomainError("abstract automata use different gap class domains");
    if (!(a.alphabet == b.alphabet))
        throw DomainError("abstract automata use different alphabets");
}

} // namespace

AbstractNfa nfa_union(const AbstractNfa& a, const AbstractNfa& b) {
    check_compatible(a, b);
    AbstractNfa n;
    n.dom = a.dom;
    n.alphabet = a.alphabet;
    n.trans = a.trans;
    const std::uint32_t off = a.nstates();
    for (const auto& v : b.trans) {
        auto shifted = v;
        for (auto& t : shifted) t.to += off;
        n.trans.push_back(std::move(shifted));
    }
    n.initial = a.initial;
    for (auto q : b.initial) n.initial.push_back(q + off);
    n.accepting = a.accepting;
    n.accepting.insert(n.accepting.end(), b.accepting.begin(), b.accepting.end());
    return n;
}

AbstractNfa nfa_intersect(const AbstractNfa& a, const AbstractNfa& b) {
    check_compatible(a, b);
    AbstractNfa n;
    n.dom = a.dom;
    n.alphabet = a.alphabet;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> ids;
    std::deque<std::pair<std::uint32_t, std::uint32_t>> todo;
    auto intern = [&](std::uint32_t x, std::uint32_t y) {
        auto [it, fresh] = ids.try_emplace({x, y}, static_cast<std::uint32_t>(ids.size()));
        if (fresh) {
            todo.push_back({x, y});
            n.trans.emplace_back();
            n.accepting.push_back(a.accepting[x] && b.accepting[y]);
        }
        return it->second;
    };
    for (auto x : a.initial)
        for (auto y : b.initial) n.initial.push_back(intern(x, y));
    std::sort(n.initial.begin(), n.initial.end());
    n.initial.erase(std::unique(n.initial.begin(), n.initial.end()), n.initial.end());
    while (!todo.empty()) {
        auto [x, y] = todo.front();
        todo.pop_front();
        const std::uint32_t id = ids.at({x, y});
        std::vector<AbsTrans> edges;
        for (const auto& ta : a.trans[x])
            for (const auto& tb : b.trans[y])
                if (ta.gap_cls == tb.gap_cls && ta.letter == tb.letter)
                    edges.push_back({ta.gap_cls, ta.letter, intern(ta.to, tb.to)});
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        n.trans[id] = std::move(edges);
    }
    return n;
}

AbstractNfa nfa_complement(const AbstractNfa& a) {
    AbstractNfa n;
    n.dom = a.dom;
    n.alphabet = a.alphabet;
    const auto classes = a.dom->gap_class_count();
    const Symbol nsym = a.alphabet.symbol_count();
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::deque<std::vector<std::uint32_t>> todo;
    auto intern = [&](std::vector<std::uint32_t> subset) {
        auto [it, fresh] = ids.try_emplace(subset, static_cast<std::uint32_t>(ids.size()));
        if (fresh) {
            bool acc = false;
            for (auto q : subset) acc = acc || a.accepting[q];
            n.trans.emplace_back();
            n.accepting.push_back(!acc);
            todo.push_back(std::move(subset));
        }
        return it->second;
    };
    auto init = a.initial;
    std::sort(init.begin(), init.end());
    init.erase(std::unique(init.begin(), init.end()), init.end());
    n.initial.push_back(intern(std::move(init)));
    while (!todo.empty()) {
        auto subset = todo.front();
        todo.pop_front();
        const std::uint32_t id = ids.at(subset);
        std::vector<AbsTrans> edges;
        for (std::uint32_t g = 0; g < classes; ++g) {
            for (Symbol s = 1; s < nsym; ++s) {
                std::set<std::uint32_t> next;
                for (auto q : subset)
                    for (const auto& t : a.trans[q])
                        if (t.gap_cls == g && t.letter == s) next.insert(t.to);
                std::vector<std::uint32_t> nv(next.begin(), next.end());
                edges.push_back({g, s, intern(std::move(nv))});
            }
        }
        n.trans[id] = std::move(edges);
    }
    return n;
}

AbstractNfa nfa_cylindrify(const AbstractNfa& a, std::size_t at, const Alphabet& base) {
    const auto& comps = a.alphabet.components();
    if (at > comps.size()) throw DomainError("cylindrification position out of range");
    std::vector<Alphabet> parts;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (i == at) parts.push_back(base);
        parts.push_back(Alphabet::simple(comps[i]));
    }
    if (at == comps.size()) parts.push_back(base);
    AbstractNfa n;
    n.dom = a.dom;
    n.alphabet = Alphabet::product(parts);

    const auto classes = a.dom->gap_class_count();
    const Symbol nsym = n.alphabet.symbol_count();
    const auto zero = a.dom->zero();
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> ids;
    std::deque<std::pair<std::uint32_t, std::uint32_t>> todo;
    auto intern = [&](std::uint32_t q, std::uint32_t acc) {
        auto [it, fresh] = ids.try_emplace({q, acc}, static_cast<std::uint32_t>(ids.size()));
        if (fresh) {
            todo.push_back({q, acc});
            n.trans.emplace_back();
            n.accepting.push_back(a.accepting[q]);
        }
        return it->second;
    };
    for (auto q : a.initial) n.initial.push_back(intern(q, zero));
    while (!todo.empty()) {
        auto [q, acc] = todo.front();
        todo.pop_front();
        const std::uint32_t id = ids.at({q, acc});
        std::vector<AbsTrans> edges;
        for (Symbol s = 1; s < nsym; ++s) {
            auto digits = n.alphabet.digits(s);
            const Symbol tau = digits[at];
            digits.erase(digits.begin() + static_cast<std::ptrdiff_t>(at));
            const Symbol old_sym = a.alphabet.pack(digits);
            if (old_sym == kBlank) {
                // Position carried only by the new coordinate: splits a gap
                // of the underlying word.
                if (tau == kBlank) continue;
                for (std::uint32_t g = 0; g < classes; ++g) {
                    // underlying gap grows by g then the position itself
                    const auto grown = a.dom->combine(a.dom->combine(acc, false, g), true,
                                                      a.dom->zero());
                    edges.push_back({g, s, intern(q, grown)});
                }
            } else {
                for (std::uint32_t g = 0; g < classes; ++g) {
                    const std::uint32_t eff = a.dom->combine(acc, false, g);
                    for (const auto& t : a.trans[q])
                        if (t.gap_cls == eff && t.letter == old_sym)
                            edges.push_back({g, s, intern(t.to, zero)});
                }
            }
        }
        n.trans[id] = std::move(edges);
    }
    return n;
}

AbstractNfa nfa_project(const AbstractNfa& a, std::size_t coord) {
    const auto& comps = a.alphabet.components();
    if (coord >= comps.size()) throw DomainError("projection coordinate out of range");
    if (comps.size() == 1)
        throw DomainError("cannot project the only coordinate of an abstraction");
    std::vector<Alphabet> parts;
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (i != coord) parts.push_back(Alphabet::simple(comps[i]));
    AbstractNfa n;
    n.dom = a.dom;
    n.alphabet = Alphabet::product(parts);
    n.initial = a.initial;
    n.trans.resize(a.nstates());

    auto split = [&](Symbol s) {
        auto digits = a.alphabet.digits(s);
        digits.erase(digits.begin() + static_cast<std::ptrdiff_t>(coord));
        return n.alphabet.pack(digits);
    };

    // Chains of positions carried only by the erased coordinate:
    // closure entries (q, h, p) with h = class(gap_0 + 1 + ... + gap_j + 1).
    std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> closure;
    std::deque<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> todo;
    auto push = [&](std::uint32_t q, std::uint32_t h, std::uint32_t p) {
        if (closure.insert({q, h, p}).second) todo.push_back({q, h, p});
    };
    for (std::uint32_t q = 0; q < a.nstates(); ++q)
        for (const auto& t : a.trans[q])
            if (split(t.letter) == kBlank)
                push(q, a.dom->combine(t.gap_cls, true, a.dom->zero()), t.to);
    while (!todo.empty()) {
        auto [q, h, p] = todo.front();
        todo.pop_front();
        for (const auto& t : a.trans[p])
            if (split(t.letter) == kBlank)
                push(q, a.dom->combine(a.dom->combine(h, false, t.gap_cls), true,
                                       a.dom->zero()),
                     t.to);
    }

    for (std::uint32_t q = 0; q < a.nstates(); ++q)
        for (const auto& t : a.trans[q])
            if (Symbol rest = split(t.letter); rest != kBlank)
                n.trans[q].push_back({t.gap_cls, rest, t.to});
    for (const auto& [q, h, p] : closure)
        for (const auto& t : a.trans[p])
            if (Symbol rest = split(t.letter); rest != kBlank)
                n.trans[q].push_back({a.dom->combine(h, false, t.gap_cls), rest, t.to});

    // Trailing erased-only positions sit inside the final w^k stretch, so
    // acceptance propagates backwards along erased-only chains.
    n.accepting = a.accepting;
    for (const auto& [q, h, p] : closure)
        if (a.accepting[p]) n.accepting[q] = 1;

    for (auto& v : n.trans) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return n;
}

} // namespace ordaut
