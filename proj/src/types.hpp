#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace rotlat {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

enum class ErrorCode {
    InvalidArgument,
    ConductorMismatch,
    ZeroElement,
    PrecisionTooLow,
    SearchBoundExceeded,
    WorkCapExceeded,
    InternalCheckFailed,
};

// Single exception type for the whole library; the code survives the trip
// through the C API as a status value.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
    return Rational(num, den);  // mpq canonicalizes sign and lowest terms
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

}  // namespace rotlat
