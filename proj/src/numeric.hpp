#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "types.hpp"

namespace rotlat {

using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecision = 50;  // decimal digits
inline constexpr unsigned kMinPrecision = 16;
inline constexpr unsigned kGuardDigits = 20;

// Sets the thread-default mpfr precision to digits + guard for the lifetime
// of the scope. All numeric kernels open one of these at their entry point so
// every temporary inside carries the same working precision.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

unsigned validated_precision(unsigned digits);

Real const_pi();
Real make_real(const Rational& q);
Real make_real(const Int& z);

// 10^{-e} at the current working precision.
Real pow10_neg(unsigned e);

struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
};

Real magnitude(const Complex& c);

// e^{2*pi*i*t/n} at the current working precision.
Complex root_of_unity(std::uint64_t n, std::uint64_t t);

std::string decimal_string(const Real& v, unsigned digits);

// Fixed 4-decimal string, round-half-to-even (the tables' display format).
std::string round4_string(const Real& v);

}  // namespace rotlat
