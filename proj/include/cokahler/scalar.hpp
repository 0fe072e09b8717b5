#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cokahler {

/// Exact rational coefficient. gmpxx keeps values canonical after every
/// arithmetic operation; values built from strings go through parseScalar.
using Scalar = mpq_class;

/// Raised for malformed user input (documents, presentations, actions).
/// `where` names the offending field, generator or basis element.
class InputError : public std::runtime_error {
public:
    InputError(std::string where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

/// Parses "p" or "p/q" with optional leading sign on p. Rejects q == 0 and
/// anything that is not a decimal integer fraction.
Scalar parseScalar(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string toString(const Scalar& s);

}  // namespace cokahler
