#include "ordaut/word.hpp"

#include <algorithm>

namespace ordaut {

Alphabet Alphabet::simple(std::vector<std::string> letters) {
    for (const auto& l : letters)
        if (l.empty() || l == "_" || l.find(',') != std::string::npos)
            throw DomainError("invalid letter name: '" + l + "'");
    for (std::size_t i = 0; i < letters.size(); ++i)
        for (std::size_t j = i + 1; j < letters.size(); ++j)
            if (letters[i] == letters[j]) throw DomainError("duplicate letter: " + letters[i]);
    Alphabet a;
    a.components_.push_back(std::move(letters));
    return a;
}

Alphabet Alphabet::product(const std::vector<Alphabet>& parts) {
    Alphabet a;
    for (const auto& p : parts)
        a.components_.insert(a.components_.end(), p.components_.begin(), p.components_.end());
    if (a.components_.empty()) throw DomainError("empty product alphabet");
    return a;
}

Symbol Alphabet::symbol_count() const noexcept {
    Symbol n = 1;
    for (const auto& c : components_) n *= static_cast<Symbol>(c.size() + 1);
    return n;
}

std::vector<Symbol> Alphabet::digits(Symbol s) const {
    std::vector<Symbol> d(components_.size());
    for (std::size_t i = components_.size(); i-- > 0;) {
        Symbol radix = static_cast<Symbol>(components_[i].size() + 1);
        d[i] = s % radix;
        s /= radix;
    }
    return d;
}

Symbol Alphabet::pack(const std::vector<Symbol>& digits) const {
    Symbol s = 0;
    for (std::size_t i = 0; i < components_.size(); ++i)
        s = s * static_cast<Symbol>(components_[i].size() + 1) + digits[i];
    return s;
}

std::string Alphabet::name(Symbol s) const {
    auto d = digits(s);
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += ',';
        out += d[i] == 0 ? "_" : components_[i][d[i] - 1];
    }
    return out;
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
    if (name == "_") return kBlank; // shorthand for the all-blank tuple
    std::vector<Symbol> d;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= name.size(); ++i) {
        if (i == name.size() || name[i] == ',') {
            std::string_view part = name.substr(start, i - start);
            std::size_t coord = d.size();
            if (coord >= components_.size()) return std::nullopt;
            if (part == "_") {
                d.push_back(0);
            } else {
                const auto& comp = components_[coord];
                auto it = std::find(comp.begin(), comp.end(), std::string(part));
                if (it == comp.end()) return std::nullopt;
                d.push_back(static_cast<Symbol>(it - comp.begin() + 1));
            }
            start = i + 1;
        }
    }
    if (d.size() != components_.size()) return std::nullopt;
    return pack(d);
}

Symbol OrdinalWord::at(const Ordinal& pos) const {
    for (const auto& [p, s] : entries_)
        if (p == pos) return s;
    return kBlank;
}

void OrdinalWord::set(const Ordinal& pos, Symbol letter) {
    if (letter == kBlank || !alphabet_.valid(letter))
        throw DomainError("invalid letter for word entry");
    if (pos >= shape())
        throw DomainError("position out of shape: " + pos.str() + " >= " + shape().str());
    auto it = std::lower_bound(entries_.begin(), entries_.end(), pos,
                               [](const auto& e, const Ordinal& p) { return e.first < p; });
    if (it != entries_.end() && it->first == pos)
        throw DomainError("duplicate position: " + pos.str());
    entries_.insert(it, {pos, letter});
}

std::string OrdinalWord::str() const {
    std::string out;
    for (const auto& [p, s] : entries_) {
        if (!out.empty()) out += ", ";
        out += alphabet_.name(s) + "@" + p.str();
    }
    return out;
}

OrdinalWord OrdinalWord::parse(std::string_view text, const Alphabet& alphabet, int k) {
    OrdinalWord w(k, alphabet);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        std::size_t at = text.find('@', pos);
        if (at == std::string_view::npos) throw ParseError("expected letter@ordinal", pos);
        std::string_view name = text.substr(pos, at - pos);
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
            name.remove_suffix(1);
        auto sym = alphabet.find(name);
        if (!sym || *sym == kBlank)
            throw ParseError("unknown letter: '" + std::string(name) + "'", pos);
        std::size_t end = text.find(',', at + 1);
        if (end == std::string_view::npos) end = text.size();
        Ordinal p;
        try {
            p = Ordinal::parse(text.substr(at + 1, end - at - 1));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), at + 1 + e.pos());
        }
        try {
            w.set(p, *sym);
        } catch (const DomainError& e) {
            throw ParseError(e.what(), pos);
        }
        pos = end == text.size() ? end : end + 1;
        skip_ws();
    }
    return w;
}

OrdinalWord convolve(const std::vector<OrdinalWord>& ws) {
    if (ws.empty()) throw DomainError("convolution of an empty list");
    const int k = ws[0].shape_exponent();
    std::vector<Alphabet> parts;
    for (const auto& w : ws) {
        if (w.shape_exponent() != k) throw DomainError("shape mismatch in convolution");
        parts.push_back(w.alphabet());
    }
    Alphabet prod = Alphabet::product(parts);
    std::vector<Ordinal> positions;
    for (const auto& w : ws)
        for (const auto& [p, s] : w.entries()) positions.push_back(p);
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());

    OrdinalWord out(k, prod);
    for (const auto& p : positions) {
        std::vector<Symbol> d;
        for (const auto& w : ws) {
            auto local = w.alphabet().digits(w.at(p));
            d.insert(d.end(), local.begin(), local.end());
        }
        out.set(p, prod.pack(d));
    }
    return out;
}

OrdinalWord project_coordinate(const OrdinalWord& w, std::size_t coord) {
    const auto& comps = w.alphabet().components();
    if (coord >= comps.size()) throw DomainError("projection coordinate out of range");
    if (comps.size() == 1) throw DomainError("cannot project the only coordinate");
    std::vector<Alphabet> parts;
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (i != coord) parts.push_back(Alphabet::simple(comps[i]));
    Alphabet out_alpha = Alphabet::product(parts);
    OrdinalWord out(w.shape_exponent(), out_alpha);
    for (const auto& [p, s] : w.entries()) {
        auto d = w.alphabet().digits(s);
        d.erase(d.begin() + static_cast<std::ptrdiff_t>(coord));
        Symbol packed = out_alpha.pack(d);
        if (packed != kBlank) out.set(p, packed);
    }
    return out;
}

OrdinalWord restrict(const OrdinalWord& w, const Ordinal& lo, const Ordinal& hi) {
    OrdinalWord out(w.shape_exponent(), w.alphabet());
    for (const auto& [p, s] : w.entries())
        if (lo <= p && p < hi) out.set(p, s);
    return out;
}

GapProfile gap_profile(const OrdinalWord& w) {
    GapProfile g;
    const Ordinal shape = w.shape();
    if (w.empty()) {
        g.leading_gap = shape;
        return g;
    }
    g.leading_gap = w.entries().front().first;
    for (std::size_t i = 0; i < w.entries().size(); ++i) {
        const auto& [p, s] = w.entries()[i];
        const Ordinal next = i + 1 < w.entries().size() ? w.entries()[i + 1].first : shape;
        g.items.emplace_back(s, left_sub(add(p, Ordinal::nat(1)), next));
    }
    return g;
}

} // namespace ordaut
