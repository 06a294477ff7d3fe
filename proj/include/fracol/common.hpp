#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace fracol {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

enum class ErrorKind {
    invalid_input,   // malformed graph, precondition violation
    out_of_scope,    // input outside what the constructive path handles
    resource_cap,    // enumeration or search budget exceeded
    internal,        // an invariant that should be guaranteed did not hold
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Outcome of a checking operation: either ok, or the first violation found.
struct Check {
    bool ok = true;
    std::string reason;

    explicit operator bool() const noexcept { return ok; }

    static Check pass() { return {}; }
    static Check fail(std::string why) { return {false, std::move(why)}; }
};

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "p/q" or "p"; throws Error(invalid_input) otherwise.
Rational parse_rational(std::string_view text);

}  // namespace fracol
