#include "numeric.hpp"

namespace rotlat {

PrecisionScope::PrecisionScope(unsigned digits) : saved_(Real::default_precision()) {
    Real::default_precision(validated_precision(digits) + kGuardDigits);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

unsigned validated_precision(unsigned digits) {
    if (digits < kMinPrecision)
        throw Error(ErrorCode::PrecisionTooLow,
                    "working precision below " + std::to_string(kMinPrecision) + " digits");
    return digits;
}

Real const_pi() {
    Real pi(0);
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    return pi;
}

Real make_real(const Rational& q) {
    return Real(numerator(q)) / Real(denominator(q));
}

Real make_real(const Int& z) { return Real(z); }

Real pow10_neg(unsigned e) {
    return pow(Real(10), -static_cast<long>(e));
}

Real magnitude(const Complex& c) { return sqrt(c.re * c.re + c.im * c.im); }

Complex root_of_unity(std::uint64_t n, std::uint64_t t) {
    Real angle = const_pi() * 2 * static_cast<unsigned long>(t % n) / static_cast<unsigned long>(n);
    return Complex(cos(angle), sin(angle));
}

std::string decimal_string(const Real& v, unsigned digits) { return v.str(digits); }

std::string round4_string(const Real& v) {
    Real scaled = v * 10000;
    mpfr_rint(scaled.backend().data(), scaled.backend().data(), MPFR_RNDN);  // ties to even
    Int k;
    mpfr_get_z(k.backend().data(), scaled.backend().data(), MPFR_RNDN);
    bool neg = k < 0;
    std::string digits = abs(k).str();
    while (digits.size() < 5) digits.insert(digits.begin(), '0');
    std::string out = digits.substr(0, digits.size() - 4) + "." + digits.substr(digits.size() - 4);
    return neg ? "-" + out : out;
}

}  // namespace rotlat
