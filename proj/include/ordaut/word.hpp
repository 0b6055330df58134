#ifndef ORDAUT_WORD_HPP
#define ORDAUT_WORD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordaut/ordinal.hpp"

namespace ordaut {

// Letter of an alphabet. 0 is the blank symbol (written `_`), which is least
// in the letter order and never stored in a word.
using Symbol = std::uint32_t;
constexpr Symbol kBlank = 0;

// An alphabet of tuple letters: `components[i]` lists the non-blank letter
// names of coordinate i.  A symbol encodes one component index per coordinate
// in mixed radix, coordinate 0 most significant and blank digits 0, so symbol
// order is the lexicographic letter order with blank least.  Arity-1
// alphabets are the plain case.
class Alphabet {
public:
    Alphabet() = default;
    static Alphabet simple(std::vector<std::string> letters);
    static Alphabet product(const std::vector<Alphabet>& parts);

    std::size_t arity() const noexcept { return components_.size(); }
    const std::vector<std::vector<std::string>>& components() const noexcept {
        return components_;
    }

    // Number of valid symbols including blank.
    Symbol symbol_count() const noexcept;
    bool valid(Symbol s) const noexcept { return s < symbol_count(); }

    std::vector<Symbol> digits(Symbol s) const; // per-coordinate component (0 = blank)
    Symbol pack(const std::vector<Symbol>& digits) const;

    std::string name(Symbol s) const; // components joined with ','; `_` for blank
    std::optional<Symbol> find(std::string_view name) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::vector<std::string>> components_;
};

// A finite-support word over shape w^k: a strictly increasing list of
// positions below w^k, each carrying a non-blank letter.
class OrdinalWord {
public:
    OrdinalWord() = default;
    OrdinalWord(int k, Alphabet alphabet) : k_(k), alphabet_(std::move(alphabet)) {}

    int shape_exponent() const noexcept { return k_; }
    Ordinal shape() const { return Ordinal::omega_pow(Ordinal::nat(static_cast<std::uint64_t>(k_))); }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<std::pair<Ordinal, Symbol>>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    // Letter at a position (blank if unsupported).
    Symbol at(const Ordinal& pos) const;
    // Inserts an entry; DomainError on duplicates, blanks or positions >= w^k.
    void set(const Ordinal& pos, Symbol letter);

    // Literal format: comma list of `letter@ordinal`; "" is the empty word.
    std::string str() const;
    static OrdinalWord parse(std::string_view text, const Alphabet& alphabet, int k);

    bool operator==(const OrdinalWord&) const = default;

private:
    int k_ = 1;
    Alphabet alphabet_;
    std::vector<std::pair<Ordinal, Symbol>> entries_;
};

// Position-wise pairing; shapes must agree.  The result ranges over the
// product alphabet and stores exactly the union of the supports.
OrdinalWord convolve(const std::vector<OrdinalWord>& ws);

// Drops coordinate `coord` of a word over a product alphabet, erasing
// entries that become all-blank.
OrdinalWord project_coordinate(const OrdinalWord& w, std::size_t coord);

// Restriction of w to positions in [lo, hi).
OrdinalWord restrict(const OrdinalWord& w, const Ordinal& lo, const Ordinal& hi);

// Canonical factorization of a word into letters and empty stretches:
// leading_gap, then for each entry its letter and the gap that follows it.
// The final gap is w^k by construction.
struct GapProfile {
    Ordinal leading_gap;
    std::vector<std::pair<Symbol, Ordinal>> items;
};

GapProfile gap_profile(const OrdinalWord& w);

} // namespace ordaut

#endif
