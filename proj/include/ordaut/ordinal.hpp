#ifndef ORDAUT_ORDINAL_HPP
#define ORDAUT_ORDINAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ordaut/errors.hpp"

namespace ordaut {

struct OrdinalTerm;

// An ordinal below epsilon_0 in hereditary Cantor normal form:
//   a = w^e1 * c1 + w^e2 * c2 + ... + w^er * cr
// with e1 > e2 > ... > er (each itself an Ordinal) and all ci >= 1.
// The empty term list denotes 0.  Values are immutable after construction.
class Ordinal {
public:
    using Term = OrdinalTerm;

    Ordinal() = default; // zero

    static Ordinal nat(std::uint64_t n);
    static Ordinal omega();
    // w^e (coefficient 1)
    static Ordinal omega_pow(const Ordinal& e);
    // Builds from a term list; checks the CNF invariants.
    static Ordinal from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_finite() const noexcept;
    // Value of a finite ordinal; DomainError otherwise.
    std::uint64_t as_nat() const;
    // Largest CNF exponent; 0 for finite values (including 0).
    const Ordinal& degree() const noexcept;
    // True iff the value is a limit ordinal or 0 (no w^0 term).
    bool is_limit_or_zero() const noexcept;
    // Coefficient of w^e in the CNF (0 if absent).
    std::uint64_t coeff_of(const Ordinal& e) const noexcept;

    bool operator==(const Ordinal&) const = default;
    std::strong_ordering operator<=>(const Ordinal& other) const;

    // Canonical literal, grammar:
    //   ordinal := term ('+' term)*
    //   term    := 'w^' factor ['*' nat] | 'w' ['*' nat] | nat
    //   factor  := nat | '(' ordinal ')'
    std::string str() const;
    // Accepts non-canonical input (e.g. "3+w") and normalizes via ordinal
    // addition.  Throws ParseError on syntax errors.
    static Ordinal parse(std::string_view text);

private:
    std::vector<Term> terms_;
};

struct OrdinalTerm {
    Ordinal exponent;
    std::uint64_t coeff = 1;

    bool operator==(const OrdinalTerm&) const = default;
};

// Standard (non-commutative) ordinal sum.
Ordinal add(const Ordinal& a, const Ordinal& b);
// The unique d with a + d = b; requires a <= b (DomainError otherwise).
Ordinal left_sub(const Ordinal& a, const Ordinal& b);
// Standard ordinal product.
Ordinal mul(const Ordinal& a, const Ordinal& b);
// Natural (Hessenberg) sum: coefficient-wise CNF addition.
Ordinal natural_sum(const Ordinal& a, const Ordinal& b);

// One application of the finite-interval condensation to the order type a:
// with a = w*q + m (m < w), returns q + (m > 0 ? 1 : 0).
Ordinal condense_once(const Ordinal& a);

// Finite condensation ranks of the order type a.
//   fc_star: least g such that g-fold condensation is a finite order
//   fc:      least g such that g-fold condensation is a single point
// For finite-degree a both are found by iterating condense_once and `trace`
// records the iteration; for transfinite degree the closed forms are used.
struct FcReport {
    Ordinal fc_star;
    Ordinal fc;
    Ordinal degree;
    std::vector<Ordinal> trace; // a, condense(a), ... (finite-degree inputs only)
};

FcReport fc_ranks(const Ordinal& a);

} // namespace ordaut

#endif
