#ifndef ORDAUT_ERRORS_HPP
#define ORDAUT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordaut {

// Raised by the text-format parsers (ordinals, words, automata, formulas).
// `pos` is a 0-based offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t pos)
        : std::runtime_error(std::move(msg) + " (at offset " + std::to_string(pos) + ")"),
          pos_(pos) {}

    std::size_t pos() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

// Raised when an operation's precondition on values is violated
// (e.g. left_sub(a,b) with a > b, or a position outside the shape).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace ordaut

#endif
