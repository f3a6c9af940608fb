#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rcvc {

// A caller broke an operation's precondition (dead vertex, wrong degree, ...).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Input text does not follow the expected grammar.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A guard (instance size, node budget, cycle count) was exceeded.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool condition, const char* message) {
    if (!condition) throw ContractViolation(message);
}

}  // namespace rcvc
