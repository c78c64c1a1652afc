#ifndef ASAI_ERRORS_HPP
#define ASAI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace asai {

// Arithmetic failures at runtime: division by zero, evaluation at a pole,
// integrals outside their convergence range.
class ArithError : public std::runtime_error {
public:
    explicit ArithError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input: scalars, config files, CLI values.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace asai

#endif
