#include "ordaut/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "ordaut/constructions.hpp"
#include "ordaut/engine.hpp"

namespace ordaut {

bool Presentation::member(const OrdinalWord& w) const {
    Engine eng(domain, k);
    return eng.accepts(w, oracle ? &*oracle : nullptr).accepted;
}

bool Presentation::related(const std::string& rel, const std::vector<OrdinalWord>& args) const {
    auto it = relations.find(rel);
    if (it == relations.end()) throw DomainError("unknown relation: " + rel);
    if (args.size() != it->second.arity)
        throw DomainError("arity mismatch for relation " + rel);
    OrdinalWord input = convolve(args);
    Engine eng(it->second.automaton, k);
    return eng.accepts(input, oracle ? &*oracle : nullptr).accepted;
}

// ---------------------------------------------------------------------------
// Oracle embedding

namespace {

// Remaining-distance values toward one oracle position: the closure of the
// distance under single steps and crossings of limit cuts.
std::vector<Ordinal> distance_values(const Ordinal& target) {
    std::set<Ordinal> seen{target};
    std::vector<Ordinal> todo{target};
    while (!todo.empty()) {
        Ordinal x = todo.back();
        todo.pop_back();
        std::vector<Ordinal> nexts;
        if (x.is_finite()) {
            if (x.as_nat() > 0) nexts.push_back(Ordinal::nat(x.as_nat() - 1));
        }
        if (!x.is_zero() && !x.degree().is_zero()) {
            // one w^deg block crossed: decrement the leading coefficient
            auto terms = x.terms();
            if (terms[0].coeff > 1)
                terms[0].coeff -= 1;
            else
                terms.erase(terms.begin());
            nexts.push_back(Ordinal::from_terms(std::move(terms)));
        }
        for (auto& n : nexts)
            if (seen.insert(n).second) todo.push_back(n);
    }
    return {seen.begin(), seen.end()};
}

struct TrackerState {
    std::size_t consumed = 0;
    bool has_rem = false;
    Ordinal rem; // distance to the next oracle position, when has_rem
    int lev = 0; // left rank of the current cut (0 at successor cuts)

    auto operator<=>(const TrackerState&) const = default;
};

// Crossing a rank-l limit cut: the distance is unchanged above the rank,
// loses one leading block at the rank, and is dead below it (the target
// position was missed).
std::optional<Ordinal> cross_limit(const Ordinal& rem, int l) {
    const Ordinal lev = Ordinal::nat(static_cast<std::uint64_t>(l));
    if (rem.degree() > lev) return rem;
    if (rem.degree() == lev && !rem.is_finite()) {
        auto terms = rem.terms();
        if (terms[0].coeff > 1)
            terms[0].coeff -= 1;
        else
            terms.erase(terms.begin());
        return Ordinal::from_terms(std::move(terms));
    }
    return std::nullopt;
}

} // namespace

OrdinalAutomaton embed_oracle(const OrdinalAutomaton& a, const OrdinalWord& oracle, int k) {
    const auto& comps = a.alphabet.components();
    if (comps.size() < 2)
        throw DomainError("oracle embedding needs an automaton with an oracle coordinate");
    if (oracle.shape_exponent() != k) throw DomainError("oracle shape mismatch");

    std::vector<Alphabet> parts;
    for (std::size_t i = 0; i + 1 < comps.size(); ++i) parts.push_back(Alphabet::simple(comps[i]));
    Alphabet out_alpha = Alphabet::product(parts);

    auto reduce = [&](Symbol s) {
        auto d = a.alphabet.digits(s);
        Symbol tau = d.back();
        d.pop_back();
        return std::make_pair(out_alpha.pack(d), tau);
    };

    if (oracle.empty()) {
        OrdinalAutomaton out;
        out.state_names = a.state_names;
        out.alphabet = out_alpha;
        out.initial = a.initial;
        out.final_states = a.final_states;
        out.right_limits = a.right_limits;
        out.left_limits = a.left_limits;
        out.right_limit_rule = a.right_limit_rule;
        for (const auto& [from, sym, to] : a.succ) {
            auto [rest, tau] = reduce(sym);
            if (tau == kBlank) out.add_succ(from, rest, to);
        }
        return out;
    }
    if (a.right_limit_rule)
        throw DomainError("oracle embedding of rule-based automata is not supported");

    // Tracker state space, enumerated up front (closed under steps and
    // limit crossings).
    const auto& entries = oracle.entries();
    const std::size_t s = entries.size();
    std::vector<TrackerState> tracker;
    std::map<TrackerState, std::size_t> tracker_ids;
    auto intern_tracker = [&](const TrackerState& t) {
        auto [it, fresh] = tracker_ids.try_emplace(t, tracker.size());
        if (fresh) tracker.push_back(t);
        return it->second;
    };
    auto distance_from = [&](std::size_t consumed, const Ordinal& cut) -> TrackerState {
        TrackerState t;
        t.consumed = consumed;
        if (consumed < s) {
            t.has_rem = true;
            t.rem = left_sub(cut, entries[consumed].first);
        }
        return t;
    };
    for (std::size_t i = 0; i <= s; ++i) {
        std::vector<Ordinal> rems;
        if (i < s) rems = distance_values(entries[i].first);
        for (int lev = 0; lev <= k; ++lev) {
            TrackerState t;
            t.consumed = i;
            t.lev = lev;
            if (i == s) {
                intern_tracker(t);
            } else {
                t.has_rem = true;
                for (const auto& r : rems) {
                    t.rem = r;
                    intern_tracker(t);
                }
            }
        }
    }

    auto tracker_step = [&](const TrackerState& t, Symbol& tau) -> TrackerState {
        TrackerState n;
        if (t.has_rem && t.rem.is_zero()) {
            tau = entries[t.consumed].second;
            n = distance_from(t.consumed + 1, add(entries[t.consumed].first, Ordinal::nat(1)));
            return n;
        }
        tau = kBlank;
        n.consumed = t.consumed;
        n.has_rem = t.has_rem;
        if (t.has_rem)
            n.rem = t.rem.is_finite() ? Ordinal::nat(t.rem.as_nat() - 1) : t.rem;
        return n;
    };

    OrdinalAutomaton out;
    out.alphabet = out_alpha;
    std::map<std::pair<State, std::size_t>, State> ids;
    std::vector<std::pair<State, std::size_t>> prod;
    auto intern = [&](State q, std::size_t t) {
        auto [it, fresh] = ids.try_emplace({q, t}, static_cast<State>(prod.size()));
        if (fresh) {
            prod.push_back({q, t});
            out.add_state(a.state_names[q] + "|t" + std::to_string(t));
        }
        return it->second;
    };
    const std::size_t t0 = intern_tracker(distance_from(0, Ordinal{}));
    for (State q = 0; q < a.size(); ++q) {
        State pq = intern(q, t0);
        if (has(a.initial, q)) out.initial |= bit(pq);
    }
    for (std::size_t tid = 0; tid < tracker.size(); ++tid) {
        Symbol tau = kBlank;
        const std::size_t ntid = intern_tracker(tracker_step(tracker[tid], tau));
        for (const auto& [from, sym, to] : a.succ) {
            auto [rest, tmark] = reduce(sym);
            if (tmark != tau) continue;
            out.add_succ(intern(from, tid), rest, intern(to, ntid));
        }
    }
    for (std::size_t tid = 0; tid < tracker.size(); ++tid) {
        if (tracker[tid].consumed != s) continue;
        for_each_state(a.final_states, [&](State q) {
            auto it = ids.find({q, tid});
            if (it != ids.end()) out.final_states |= bit(it->second);
        });
    }
    if (out.final_states == 0) out.final_states = out.initial; // degenerate, rejects anyway

    auto a_limits = a.right_limits;
    auto tracker_copy = tracker;
    auto tracker_ids_copy = tracker_ids;
    auto ids_copy = ids;
    auto prod_copy = prod;
    const int shape_k = k;
    out.right_limit_rule = [a_limits, tracker_copy, tracker_ids_copy, ids_copy, prod_copy,
                            shape_k](StateSet set, std::vector<State>& targets) {
        StateSet sa = 0;
        int max_lev = -1;
        std::size_t max_consumed = 0;
        bool any = false;
        for_each_state(set, [&](State pq) {
            const auto& [q, tid] = prod_copy[pq];
            sa |= bit(q);
            const auto& t = tracker_copy[tid];
            max_lev = std::max(max_lev, t.lev);
            max_consumed = std::max(max_consumed, t.consumed);
            any = true;
        });
        if (!any) return;
        const int l = max_lev + 1;
        if (l > shape_k) return;
        bool have = false, none_rem = false;
        Ordinal least;
        for_each_state(set, [&](State pq) {
            const auto& [q, tid] = prod_copy[pq];
            const auto& t = tracker_copy[tid];
            if (t.consumed != max_consumed) return;
            if (!t.has_rem) {
                none_rem = true;
                return;
            }
            if (!have || t.rem < least) {
                least = t.rem;
                have = true;
            }
        });
        TrackerState nt;
        nt.consumed = max_consumed;
        nt.lev = l;
        if (none_rem) {
            nt.has_rem = false;
        } else if (have) {
            auto crossed = cross_limit(least, l);
            if (!crossed) return; // the next oracle position was missed
            nt.has_rem = true;
            nt.rem = *crossed;
        } else {
            return;
        }
        auto tit = tracker_ids_copy.find(nt);
        if (tit == tracker_ids_copy.end()) return;
        for (const auto& [sset, q2] : a_limits) {
            if (sset != sa) continue;
            auto pit = ids_copy.find({q2, tit->second});
            if (pit != ids_copy.end()) targets.push_back(pit->second);
        }
    };
    return out;
}

// ---------------------------------------------------------------------------
// Files and builtins

namespace {

std::string trim(std::string str) {
    auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!str.empty() && issp(str.front())) str.erase(str.begin());
    while (!str.empty() && issp(str.back())) str.pop_back();
    return str;
}

OrdinalAutomaton load_value_automaton(const std::string& value, const std::string& base_dir) {
    if (value.rfind("file:", 0) != 0)
        throw DomainError("expected file:<path> automaton reference, got '" + value + "'");
    std::string path = value.substr(5);
    if (!path.empty() && path[0] != '/' && !base_dir.empty()) path = base_dir + "/" + path;
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open automaton file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return OrdinalAutomaton::parse(ss.str());
}

// Accepts words whose support inside every w-block is a prefix of the
// block: the image of the ordinal encodings.
OrdinalAutomaton block_prefix_automaton(const Alphabet& alphabet) {
    OrdinalAutomaton a;
    a.alphabet = alphabet;
    State s0 = a.add_state("in_prefix");
    State s1 = a.add_state("after");
    a.initial = bit(s0);
    a.final_states = bit(s0) | bit(s1);
    for (Symbol s = 1; s < alphabet.symbol_count(); ++s) a.add_succ(s0, s, s0);
    a.add_succ(s0, kBlank, s1);
    a.add_succ(s1, kBlank, s1);
    a.right_limits = {{bit(s1), s0}, {bit(s0) | bit(s1), s0}, {bit(s0), s0}};
    return a;
}

} // namespace

Presentation Presentation::parse(std::string_view text, const std::string& base_dir) {
    std::string body(text);
    auto open = body.find('{');
    auto close = body.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close < open ||
        trim(body.substr(0, open)) != "presentation")
        throw ParseError("expected presentation { ... }", 0);
    body = body.substr(open + 1, close - open - 1);

    Presentation p;
    bool saw_shape = false, saw_domain = false;
    std::string oracle_literal;
    bool saw_oracle = false;
    std::size_t pos = 0;
    while (pos < body.size()) {
        auto semi = body.find(';', pos);
        std::string stmt = trim(body.substr(pos, semi == std::string::npos ? std::string::npos
                                                                           : semi - pos));
        pos = semi == std::string::npos ? body.size() : semi + 1;
        if (stmt.empty()) continue;
        auto colon = stmt.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'key: value' in " + stmt, 0);
        std::string key = trim(stmt.substr(0, colon));
        std::string value = trim(stmt.substr(colon + 1));
        if (key == "shape") {
            Ordinal shape = Ordinal::parse(value);
            const Ordinal deg = shape.degree();
            if (shape != Ordinal::omega_pow(deg) || !deg.is_finite())
                throw ParseError("shape must be w^k: " + value, 0);
            p.k = static_cast<int>(deg.as_nat());
            saw_shape = true;
        } else if (key == "domain") {
            p.domain = load_value_automaton(value, base_dir);
            saw_domain = true;
        } else if (key.rfind("relation ", 0) == 0) {
            std::string head = trim(key.substr(9));
            auto slash = head.find('/');
            if (slash == std::string::npos)
                throw ParseError("relation needs name/arity: " + head, 0);
            Rel r;
            r.arity = static_cast<std::size_t>(std::stoul(head.substr(slash + 1)));
            r.automaton = load_value_automaton(value, base_dir);
            p.relations[trim(head.substr(0, slash))] = std::move(r);
        } else if (key == "oracle") {
            if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
                value = value.substr(1, value.size() - 2);
            oracle_literal = value;
            saw_oracle = true;
        } else {
            throw ParseError("unknown presentation key: " + key, 0);
        }
    }
    if (!saw_shape || !saw_domain) throw ParseError("presentation needs shape and domain", 0);
    const auto& comps = p.domain.alphabet.components();
    p.sigma = Alphabet::simple(comps[0]);
    if (saw_oracle) {
        if (comps.size() < 2)
            throw ParseError("oracle given but the domain automaton has no oracle coordinate", 0);
        Alphabet oracle_alpha = Alphabet::simple(comps.back());
        p.oracle = OrdinalWord::parse(oracle_literal, oracle_alpha, p.k);
    }
    return p;
}

Presentation Presentation::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open presentation file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string base = ".";
    if (auto slash = path.rfind('/'); slash != std::string::npos) base = path.substr(0, slash);
    return parse(ss.str(), base);
}

std::vector<std::string> Presentation::builtin_names() {
    return {"natlt", "enc1", "enc2", "enc3", "wordorder2"};
}

Presentation Presentation::builtin(const std::string& name) {
    Presentation p;
    p.sigma = enc_alphabet();
    if (name == "natlt" || name == "enc1" || name == "enc2" || name == "enc3") {
        p.k = name == "enc2" ? 2 : name == "enc3" ? 3 : 1;
        p.domain = block_prefix_automaton(p.sigma);
        p.relations["<"] = Rel{word_order_automaton(p.sigma), 2};
        return p;
    }
    if (name == "wordorder2") {
        p.k = 2;
        p.domain = finite_word_recognizer(p.sigma);
        p.relations["<"] = Rel{word_order_automaton(p.sigma), 2};
        return p;
    }
    throw DomainError("unknown builtin presentation: " + name);
}

} // namespace ordaut
