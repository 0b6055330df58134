#include "ordaut/engine.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ordaut {

Relation Relation::identity(std::size_t nstates) {
    std::vector<RelTriple> ts;
    ts.reserve(nstates);
    for (State q = 0; q < nstates; ++q) ts.push_back({q, bit(q), q});
    return from_triples(std::move(ts));
}

Relation Relation::from_triples(std::vector<RelTriple> ts) {
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    Relation r;
    r.triples_ = std::move(ts);
    return r;
}

Relation Relation::compose(const Relation& rhs) const {
    std::map<State, std::vector<const RelTriple*>> by_from;
    for (const auto& t : rhs.triples_) by_from[t.from].push_back(&t);
    std::vector<RelTriple> out;
    for (const auto& l : triples_) {
        auto it = by_from.find(l.to);
        if (it == by_from.end()) continue;
        for (const RelTriple* r : it->second)
            out.push_back({l.from, l.visited | r->visited, r->to});
    }
    return from_triples(std::move(out));
}

std::vector<std::pair<State, State>> Relation::pairs() const {
    std::vector<std::pair<State, State>> out;
    for (const auto& t : triples_) out.emplace_back(t.from, t.to);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Relation::same_pairs(const Relation& other) const { return pairs() == other.pairs(); }

StateSet Relation::image(StateSet from) const {
    StateSet out = 0;
    for (const auto& t : triples_)
        if (has(from, t.from)) out |= bit(t.to);
    return out;
}

bool Relation::connects(StateSet from, StateSet to) const { return (image(from) & to) != 0; }

Engine::Engine(const OrdinalAutomaton& aut, int shape_exponent) : aut_(aut), k_(shape_exponent) {
    if (shape_exponent < 0) throw DomainError("shape exponent must be >= 0");
}

Relation Engine::step(Symbol letter) const {
    if (!aut_.alphabet.valid(letter)) throw DomainError("letter outside automaton alphabet");
    std::vector<RelTriple> ts;
    for (const auto& [from, sym, to] : aut_.succ)
        if (sym == letter) ts.push_back({from, bit(from) | bit(to), to});
    return Relation::from_triples(std::move(ts));
}

const Relation& Engine::level(int j) {
    if (j < 0) throw DomainError("gap level must be >= 0");
    while (static_cast<int>(levels_.size()) <= j) {
        int next = static_cast<int>(levels_.size());
        if (next == 0) {
            levels_.push_back(step(kBlank));
            details_.emplace_back();
            continue;
        }
        const Relation& prev = levels_[static_cast<std::size_t>(next - 1)];

        // Walks over the edge graph labelled by previous-level visited sets.
        // walk = (start, end, label union) for nonempty walks.
        std::set<std::tuple<State, State, StateSet>> walk;
        std::vector<std::tuple<State, State, StateSet>> todo;
        for (const auto& e : prev.triples()) {
            auto t = std::make_tuple(e.from, e.to, e.visited);
            if (walk.insert(t).second) todo.push_back(t);
        }
        while (!todo.empty()) {
            auto [s, m, acc] = todo.back();
            todo.pop_back();
            for (const auto& e : prev.triples()) {
                if (e.from != m) continue;
                auto t = std::make_tuple(s, e.to, acc | e.visited);
                if (walk.insert(t).second) todo.push_back(t);
            }
        }

        // Closed-walk label unions per anchor state.
        std::map<State, std::set<StateSet>> closed;
        for (const auto& [s, e, acc] : walk)
            if (s == e) closed[s].insert(acc);

        std::vector<RelTriple> ts;
        std::vector<LassoWitness> lassos;
        auto emit = [&](State q, StateSet prefix, StateSet cycle) {
            for (State q2 : aut_.limit_targets(cycle)) {
                ts.push_back({q, prefix | cycle | bit(q2), q2});
                lassos.push_back({q, prefix, cycle, q2});
            }
        };
        for (State q = 0; q < aut_.size(); ++q) {
            // Empty prefix walk.
            if (auto it = closed.find(q); it != closed.end())
                for (StateSet s : it->second) emit(q, bit(q), s);
        }
        for (const auto& [s, e, acc] : walk) {
            if (auto it = closed.find(e); it != closed.end())
                for (StateSet cyc : it->second) emit(s, acc, cyc);
        }
        levels_.push_back(Relation::from_triples(std::move(ts)));
        details_.push_back(std::move(lassos));
    }
    return levels_[static_cast<std::size_t>(j)];
}

const std::vector<LassoWitness>& Engine::level_detail(int j) {
    level(j);
    return details_[static_cast<std::size_t>(j)];
}

std::pair<int, int> Engine::power_periodicity(const Relation& r, std::size_t nstates) {
    std::vector<Relation> seq;
    seq.push_back(Relation::identity(nstates).compose(r));
    while (true) {
        const Relation next = seq.back().compose(r);
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (seq[i] == next)
                return {static_cast<int>(i) + 1, static_cast<int>(seq.size() - i)};
        }
        seq.push_back(next);
    }
}

Relation Engine::power(int level_index, std::uint64_t c) {
    if (c == 0) return Relation::identity(aut_.size());
    const Relation& base = level(level_index);
    auto idx = static_cast<std::size_t>(level_index);
    if (powers_.size() <= idx) {
        powers_.resize(idx + 1);
        power_period_.resize(idx + 1, {-1, -1});
    }
    auto& cache = powers_[idx];
    if (cache.empty()) cache.push_back(base);
    auto& pp = power_period_[idx];
    // Extend the cached power sequence until it covers c or repeats.
    while (cache.size() < c && pp.first < 0) {
        Relation next = cache.back().compose(base);
        for (std::size_t i = 0; i < cache.size(); ++i) {
            if (cache[i] == next) {
                pp = {static_cast<int>(i) + 1, static_cast<int>(cache.size() - i)};
                break;
            }
        }
        if (pp.first < 0) cache.push_back(next);
    }
    if (c <= cache.size()) return cache[static_cast<std::size_t>(c - 1)];
    const auto pre = static_cast<std::uint64_t>(pp.first);
    const auto per = static_cast<std::uint64_t>(pp.second);
    std::uint64_t reduced = pre + (c - pre) % per;
    return cache[static_cast<std::size_t>(reduced - 1)];
}

Relation Engine::gap_relation(const Ordinal& delta) {
    const Ordinal shape = Ordinal::omega_pow(Ordinal::nat(static_cast<std::uint64_t>(k_)));
    if (delta > shape)
        throw DomainError("empty stretch exceeds the shape: " + delta.str());
    Relation r = Relation::identity(aut_.size());
    for (const auto& t : delta.terms()) {
        if (!t.exponent.is_finite())
            throw DomainError("gap length has transfinite degree: " + delta.str());
        r = r.compose(power(static_cast<int>(t.exponent.as_nat()), t.coeff));
    }
    return r;
}

const OrdinalWord& Engine::check_input(const OrdinalWord& w) const {
    if (w.shape_exponent() != k_) throw DomainError("word shape does not match the engine shape");
    if (!(w.alphabet() == aut_.alphabet))
        throw DomainError("alphabet mismatch between automaton and word");
    return w;
}

Relation Engine::behavior(const OrdinalWord& w, const Ordinal& lo, const Ordinal& hi) {
    check_input(w);
    const Ordinal shape = w.shape();
    if (lo > hi || hi > shape) throw DomainError("malformed interval");
    Relation r = Relation::identity(aut_.size());
    Ordinal cur = lo;
    for (const auto& [p, sym] : w.entries()) {
        if (p < lo || p >= hi) continue;
        r = r.compose(gap_relation(left_sub(cur, p)));
        r = r.compose(step(sym));
        cur = add(p, Ordinal::nat(1));
    }
    return r.compose(gap_relation(left_sub(cur, hi)));
}

AcceptResult Engine::accepts(const OrdinalWord& w, const OrdinalWord* oracle) {
    OrdinalWord input = oracle ? convolve({w, *oracle}) : w;
    std::vector<Ordinal> cuts;
    for (const auto& [p, sym] : input.entries()) {
        cuts.push_back(p);
        cuts.push_back(add(p, Ordinal::nat(1)));
    }
    AcceptResult res;
    auto states = run_states_at(input, std::move(cuts));
    if (!states) return res;
    res.accepted = true;
    res.witness = std::move(*states);
    return res;
}

std::optional<std::vector<std::pair<Ordinal, State>>> Engine::run_states_at(
    const OrdinalWord& w, std::vector<Ordinal> cuts) {
    check_input(w);
    const Ordinal shape = w.shape();
    cuts.push_back(Ordinal{});
    cuts.push_back(shape);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    if (cuts.back() > shape) throw DomainError("witness cut beyond the shape");

    std::vector<Relation> segs;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        segs.push_back(behavior(w, cuts[i], cuts[i + 1]));

    std::vector<StateSet> forward(cuts.size());
    forward[0] = aut_.initial;
    for (std::size_t i = 0; i < segs.size(); ++i) forward[i + 1] = segs[i].image(forward[i]);
    if ((forward.back() & aut_.final_states) == 0) return std::nullopt;

    std::vector<State> picked(cuts.size());
    picked.back() = first_state(forward.back() & aut_.final_states);
    for (std::size_t i = segs.size(); i-- > 0;) {
        for (const auto& t : segs[i].triples()) {
            if (t.to == picked[i + 1] && has(forward[i], t.from)) {
                picked[i] = t.from;
                break;
            }
        }
    }
    std::vector<std::pair<Ordinal, State>> out;
    for (std::size_t i = 0; i < cuts.size(); ++i) out.emplace_back(cuts[i], picked[i]);
    return out;
}

} // namespace ordaut
