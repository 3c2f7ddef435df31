#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace muqm {

/// Arbitrary-precision rational scalar. Kept in lowest terms with positive
/// denominator by the backing type; equality is exact.
using Rational = boost::multiprecision::cpp_rational;

/// Deformation parameter as an exact rational, constrained to value > -1/2.
class RationalMu {
public:
    explicit RationalMu(Rational value);
    const Rational& value() const { return value_; }

private:
    Rational value_;
};

/// Parses "p/q" or a bare integer "p" (decimal, optional leading sign on p;
/// q must be a positive integer). Throws std::invalid_argument on anything
/// else.
Rational parse_rational(std::string_view text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace muqm
