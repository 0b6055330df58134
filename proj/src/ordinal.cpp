#include "ordaut/ordinal.hpp"

#include <algorithm>
#include <cctype>

namespace ordaut {

namespace {

const Ordinal kZero{};

} // namespace

Ordinal Ordinal::nat(std::uint64_t n) {
    Ordinal o;
    if (n > 0) o.terms_.push_back(Term{Ordinal{}, n});
    return o;
}

Ordinal Ordinal::omega() {
    Ordinal o;
    o.terms_.push_back(Term{nat(1), 1});
    return o;
}

Ordinal Ordinal::omega_pow(const Ordinal& e) {
    Ordinal o;
    o.terms_.push_back(Term{e, 1});
    return o;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coeff == 0) throw DomainError("CNF coefficient must be >= 1");
        if (i + 1 < terms.size() && !(terms[i + 1].exponent < terms[i].exponent))
            throw DomainError("CNF exponents must be strictly decreasing");
    }
    Ordinal o;
    o.terms_ = std::move(terms);
    return o;
}

bool Ordinal::is_finite() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::uint64_t Ordinal::as_nat() const {
    if (!is_finite()) throw DomainError("ordinal is not finite: " + str());
    return terms_.empty() ? 0 : terms_[0].coeff;
}

const Ordinal& Ordinal::degree() const noexcept {
    return terms_.empty() ? kZero : terms_[0].exponent;
}

bool Ordinal::is_limit_or_zero() const noexcept {
    return terms_.empty() || !terms_.back().exponent.is_zero();
}

std::uint64_t Ordinal::coeff_of(const Ordinal& e) const noexcept {
    for (const Term& t : terms_)
        if (t.exponent == e) return t.coeff;
    return 0;
}

std::strong_ordering Ordinal::operator<=>(const Ordinal& other) const {
    const std::size_t n = std::min(terms_.size(), other.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = terms_[i].exponent <=> other.terms_[i].exponent;
        if (c != 0) return c;
        auto d = terms_[i].coeff <=> other.terms_[i].coeff;
        if (d != 0) return d;
    }
    return terms_.size() <=> other.terms_.size();
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    const Ordinal& e = b.terms()[0].exponent;
    std::vector<Ordinal::Term> out;
    for (const auto& t : a.terms()) {
        if (t.exponent > e)
            out.push_back(t);
        else
            break;
    }
    std::uint64_t lead = b.terms()[0].coeff;
    if (out.size() < a.terms().size() && a.terms()[out.size()].exponent == e)
        lead += a.terms()[out.size()].coeff;
    out.push_back(Ordinal::Term{e, lead});
    out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
    return Ordinal::from_terms(std::move(out));
}

Ordinal left_sub(const Ordinal& a, const Ordinal& b) {
    if (a > b) throw DomainError("left_sub requires a <= b: " + a.str() + " > " + b.str());
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::size_t i = 0;
    while (i < ta.size() && i < tb.size() && ta[i] == tb[i]) ++i;
    if (i == ta.size()) {
        // a is a term-list prefix of b; the remainder appends directly.
        std::vector<Ordinal::Term> out(tb.begin() + static_cast<std::ptrdiff_t>(i), tb.end());
        return Ordinal::from_terms(std::move(out));
    }
    // First divergence: either exponents differ (b's dominates and absorbs
    // the rest of a) or b's coefficient is larger at the same exponent.
    std::vector<Ordinal::Term> out;
    if (ta[i].exponent == tb[i].exponent)
        out.push_back(Ordinal::Term{tb[i].exponent, tb[i].coeff - ta[i].coeff});
    else
        out.push_back(tb[i]);
    out.insert(out.end(), tb.begin() + static_cast<std::ptrdiff_t>(i) + 1, tb.end());
    return Ordinal::from_terms(std::move(out));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
    if (a.is_zero() || b.is_zero()) return Ordinal{};
    Ordinal acc;
    for (const auto& t : b.terms()) {
        Ordinal piece;
        if (t.exponent.is_zero()) {
            // a * c for finite c >= 1: multiplies the leading coefficient.
            std::vector<Ordinal::Term> terms = a.terms();
            terms[0].coeff *= t.coeff;
            piece = Ordinal::from_terms(std::move(terms));
        } else {
            piece = Ordinal::omega_pow(add(a.degree(), t.exponent));
            std::vector<Ordinal::Term> terms = piece.terms();
            terms[0].coeff = t.coeff;
            piece = Ordinal::from_terms(std::move(terms));
        }
        acc = add(acc, piece);
    }
    return acc;
}

Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
    std::vector<Ordinal::Term> out;
    std::size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() || j < tb.size()) {
        if (j == tb.size() || (i < ta.size() && ta[i].exponent > tb[j].exponent)) {
            out.push_back(ta[i++]);
        } else if (i == ta.size() || tb[j].exponent > ta[i].exponent) {
            out.push_back(tb[j++]);
        } else {
            out.push_back(Ordinal::Term{ta[i].exponent, ta[i].coeff + tb[j].coeff});
            ++i;
            ++j;
        }
    }
    return Ordinal::from_terms(std::move(out));
}

Ordinal condense_once(const Ordinal& a) {
    // a = w*q + m with m < w.
    std::vector<Ordinal::Term> q;
    std::uint64_t m = 0;
    for (const auto& t : a.terms()) {
        if (t.exponent.is_zero())
            m = t.coeff;
        else
            q.push_back(Ordinal::Term{left_sub(Ordinal::nat(1), t.exponent), t.coeff});
    }
    Ordinal quot = Ordinal::from_terms(std::move(q));
    return m > 0 ? add(quot, Ordinal::nat(1)) : quot;
}

FcReport fc_ranks(const Ordinal& a) {
    FcReport rep;
    rep.degree = a.degree();
    if (rep.degree.is_finite()) {
        rep.trace.push_back(a);
        Ordinal cur = a;
        bool have_star = false, have_fc = false;
        std::uint64_t steps = 0;
        while (!(have_star && have_fc)) {
            if (!have_star && cur.is_finite()) {
                rep.fc_star = Ordinal::nat(steps);
                have_star = true;
            }
            if (!have_fc && cur <= Ordinal::nat(1)) {
                rep.fc = Ordinal::nat(steps);
                have_fc = true;
            }
            if (have_star && have_fc) break;
            cur = condense_once(cur);
            rep.trace.push_back(cur);
            ++steps;
        }
        return rep;
    }
    // Transfinite degree d: the d-fold condensation has one class per
    // leading w^d block, plus one for a nonzero tail.
    rep.fc_star = rep.degree;
    const bool single_block =
        a.terms().size() == 1 && a.terms()[0].coeff == 1;
    rep.fc = single_block ? rep.degree : add(rep.degree, Ordinal::nat(1));
    return rep;
}

// ---------------------------------------------------------------------------
// Literal parsing / printing

namespace {

class OrdinalParser {
public:
    explicit OrdinalParser(std::string_view s) : s_(s) {}

    Ordinal parse() {
        Ordinal v = ordinal();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input in ordinal literal", pos_);
        return v;
    }

private:
    Ordinal ordinal() {
        Ordinal acc = term();
        while (true) {
            skip_ws();
            if (!eat('+')) break;
            acc = add(acc, term());
        }
        return acc;
    }

    Ordinal term() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("expected ordinal term", pos_);
        if (s_[pos_] == 'w') {
            ++pos_;
            Ordinal exp = Ordinal::nat(1);
            if (eat('^')) exp = factor();
            std::uint64_t c = 1;
            skip_ws();
            if (eat('*')) c = nat();
            Ordinal t = Ordinal::omega_pow(exp);
            std::vector<Ordinal::Term> ts = t.terms();
            if (c == 0) throw ParseError("coefficient must be >= 1", pos_);
            ts[0].coeff = c;
            return Ordinal::from_terms(std::move(ts));
        }
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) return Ordinal::nat(nat());
        throw ParseError("expected 'w' or a number", pos_);
    }

    Ordinal factor() {
        skip_ws();
        if (eat('(')) {
            Ordinal v = ordinal();
            skip_ws();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            return Ordinal::nat(nat());
        throw ParseError("expected exponent", pos_);
    }

    std::uint64_t nat() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected a number", pos_);
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

std::string Ordinal::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
        if (!first) out += '+';
        first = false;
        if (t.exponent.is_zero()) {
            out += std::to_string(t.coeff);
            continue;
        }
        out += 'w';
        if (t.exponent != nat(1)) {
            out += '^';
            if (t.exponent.is_finite())
                out += std::to_string(t.exponent.as_nat());
            else
                out += '(' + t.exponent.str() + ')';
        }
        if (t.coeff != 1) out += '*' + std::to_string(t.coeff);
    }
    return out;
}

Ordinal Ordinal::parse(std::string_view text) { return OrdinalParser(text).parse(); }

} // namespace ordaut
