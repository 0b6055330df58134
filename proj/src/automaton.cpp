#include "ordaut/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace ordaut {

State OrdinalAutomaton::add_state(std::string name) {
    if (size() >= 64) throw DomainError("state count limited to 64");
    state_names.push_back(std::move(name));
    return static_cast<State>(size() - 1);
}

std::vector<State> OrdinalAutomaton::limit_targets(StateSet s) const {
    std::vector<State> out;
    for (const auto& [set, q] : right_limits)
        if (set == s) out.push_back(q);
    if (right_limit_rule) right_limit_rule(s, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string OrdinalAutomaton::state_set_str(StateSet s) const {
    std::string out = "{";
    bool first = true;
    for_each_state(s, [&](State q) {
        if (!first) out += ' ';
        first = false;
        out += state_names[q];
    });
    return out + "}";
}

std::string OrdinalAutomaton::str() const {
    std::string out = "automaton {\n  states:";
    for (const auto& n : state_names) out += ' ' + n;
    out += ";\n  alphabet:";
    const auto& comps = alphabet.components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (i) out += " |";
        for (const auto& l : comps[i]) out += ' ' + l;
    }
    out += ";\n  initial:";
    for_each_state(initial, [&](State q) { out += ' ' + state_names[q]; });
    out += ";\n  final:";
    for_each_state(final_states, [&](State q) { out += ' ' + state_names[q]; });
    out += ";\n";
    if (!succ.empty()) {
        out += "  succ:";
        bool first = true;
        for (const auto& [from, sym, to] : succ) {
            out += first ? " " : "; ";
            first = false;
            out += state_names[from] + ' ' + alphabet.name(sym) + ' ' + state_names[to];
        }
        out += ";\n";
    }
    if (!right_limits.empty()) {
        out += "  rlimit:";
        bool first = true;
        for (const auto& [set, q] : right_limits) {
            out += first ? " " : "; ";
            first = false;
            out += state_set_str(set) + ' ' + state_names[q];
        }
        out += ";\n";
    }
    if (!left_limits.empty()) {
        out += "  llimit:";
        bool first = true;
        for (const auto& [q, set] : left_limits) {
            out += first ? " " : "; ";
            first = false;
            out += state_names[q] + ' ' + state_set_str(set);
        }
        out += ";\n";
    }
    out += "}\n";
    return out;
}

namespace {

struct Token {
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '{' || c == '}' || c == ';' || c == ':' || c == '|') {
            out.push_back({std::string(1, c), i});
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) &&
               s[i] != '{' && s[i] != '}' && s[i] != ';' && s[i] != ':' && s[i] != '|')
            ++i;
        out.push_back({std::string(s.substr(start, i - start)), start});
    }
    return out;
}

bool is_keyword(const std::string& t) {
    return t == "states" || t == "alphabet" || t == "initial" || t == "final" ||
           t == "succ" || t == "rlimit" || t == "llimit" || t == "oracle" ||
           t == "shape" || t == "domain" || t == "relation";
}

} // namespace

OrdinalAutomaton OrdinalAutomaton::parse(std::string_view text) {
    auto toks = tokenize(text);
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) -> ParseError {
        std::size_t pos = i < toks.size() ? toks[i].pos : text.size();
        return ParseError(msg, pos);
    };
    auto expect = [&](const std::string& t) {
        if (i >= toks.size() || toks[i].text != t) throw fail("expected '" + t + "'");
        ++i;
    };
    expect("automaton");
    expect("{");

    // Collect statements per section keyword; a statement without a keyword
    // continues the previous section.
    std::vector<std::pair<std::string, std::vector<Token>>> stmts;
    std::string section;
    while (i < toks.size() && toks[i].text != "}") {
        std::vector<Token> body;
        if (i + 1 < toks.size() && toks[i + 1].text == ":" && is_keyword(toks[i].text)) {
            section = toks[i].text;
            i += 2;
        }
        if (section.empty()) throw fail("expected a section keyword");
        int depth = 0;
        while (i < toks.size() && toks[i].text != ";" &&
               (depth > 0 || toks[i].text != "}")) {
            if (toks[i].text == "{") ++depth;
            if (toks[i].text == "}") --depth;
            body.push_back(toks[i]);
            ++i;
        }
        if (i < toks.size() && toks[i].text == ";") ++i;
        stmts.push_back({section, std::move(body)});
    }
    expect("}");
    if (i != toks.size()) throw fail("trailing input after automaton");

    OrdinalAutomaton a;
    std::map<std::string, State> state_ids;
    // First pass: states and alphabet.
    std::vector<std::vector<std::string>> comps{{}};
    bool saw_alphabet = false;
    for (const auto& [sec, body] : stmts) {
        if (sec == "states") {
            for (const auto& t : body) {
                if (state_ids.count(t.text)) throw ParseError("duplicate state: " + t.text, t.pos);
                state_ids[t.text] = a.add_state(t.text);
            }
        } else if (sec == "alphabet") {
            saw_alphabet = true;
            for (const auto& t : body) {
                if (t.text == "|")
                    comps.push_back({});
                else
                    comps.back().push_back(t.text);
            }
        }
    }
    if (!saw_alphabet) throw ParseError("missing alphabet section", 0);
    {
        std::vector<Alphabet> parts;
        for (auto& c : comps) parts.push_back(Alphabet::simple(c));
        a.alphabet = Alphabet::product(parts);
    }

    auto state_of = [&](const Token& t) -> State {
        auto it = state_ids.find(t.text);
        if (it == state_ids.end()) throw ParseError("unknown state: " + t.text, t.pos);
        return it->second;
    };
    auto letter_of = [&](const Token& t) -> Symbol {
        auto s = a.alphabet.find(t.text);
        if (!s) throw ParseError("unknown letter: " + t.text, t.pos);
        return *s;
    };
    auto parse_set = [&](const std::vector<Token>& body, std::size_t& j) -> StateSet {
        if (j >= body.size() || body[j].text != "{")
            throw ParseError("expected '{'", j < body.size() ? body[j].pos : text.size());
        ++j;
        StateSet s = 0;
        while (j < body.size() && body[j].text != "}") s |= bit(state_of(body[j++]));
        if (j >= body.size()) throw ParseError("unterminated state set", text.size());
        ++j;
        return s;
    };

    for (const auto& [sec, body] : stmts) {
        if (sec == "initial") {
            for (const auto& t : body) a.initial |= bit(state_of(t));
        } else if (sec == "final") {
            for (const auto& t : body) a.final_states |= bit(state_of(t));
        } else if (sec == "succ") {
            if (body.empty()) continue;
            if (body.size() != 3) throw ParseError("succ entries are 'state letter state'",
                                                   body.front().pos);
            a.add_succ(state_of(body[0]), letter_of(body[1]), state_of(body[2]));
        } else if (sec == "rlimit") {
            if (body.empty()) continue;
            std::size_t j = 0;
            StateSet s = parse_set(body, j);
            if (j + 1 != body.size()) throw ParseError("rlimit entries are '{set} state'",
                                                       body.front().pos);
            a.right_limits.emplace_back(s, state_of(body[j]));
        } else if (sec == "llimit") {
            if (body.empty()) continue;
            if (body.size() < 3) throw ParseError("llimit entries are 'state {set}'",
                                                  body.front().pos);
            State q = state_of(body[0]);
            std::size_t j = 1;
            StateSet s = parse_set(body, j);
            if (j != body.size()) throw ParseError("llimit entries are 'state {set}'",
                                                   body.front().pos);
            a.left_limits.emplace_back(q, s);
        }
    }
    return a;
}

std::string ValidationReport::str() const {
    std::string out;
    for (const auto& e : errors) out += "error: " + e + '\n';
    for (const auto& w : warnings) out += "warning: " + w + '\n';
    if (out.empty()) out = "ok\n";
    return out;
}

ValidationReport validate(const OrdinalAutomaton& a) {
    ValidationReport rep;
    const StateSet all = a.all_states();
    if (a.size() == 0) rep.errors.push_back("automaton has no states");
    if (a.initial == 0) rep.errors.push_back("initial state set is empty");
    if (a.final_states == 0) rep.errors.push_back("final state set is empty");
    if ((a.initial & ~all) != 0) rep.errors.push_back("initial set references unknown states");
    if ((a.final_states & ~all) != 0) rep.errors.push_back("final set references unknown states");
    const Symbol nsym = a.alphabet.symbol_count();
    for (const auto& [from, sym, to] : a.succ) {
        if (from >= a.size() || to >= a.size())
            rep.errors.push_back("succ transition references unknown state");
        if (sym >= nsym) rep.errors.push_back("succ transition references undeclared letter");
    }
    for (const auto& [set, q] : a.right_limits) {
        if (q >= a.size() || (set & ~all) != 0)
            rep.errors.push_back("right limit transition references unknown state");
        if (set == 0) rep.errors.push_back("right limit transition with empty set");
    }
    std::size_t n_left = a.left_limits.size();
    for (const auto& [q, set] : a.left_limits) {
        if (q >= a.size() || (set & ~all) != 0)
            rep.errors.push_back("left limit transition references unknown state");
    }
    if (n_left > 0)
        rep.warnings.push_back(std::to_string(n_left) +
                               " left limit transition(s) unreachable on ordinal shapes");
    return rep;
}

} // namespace ordaut
