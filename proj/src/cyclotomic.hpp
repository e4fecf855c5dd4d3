#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "numeric.hpp"
#include "types.hpp"

namespace rotlat {

// Shared per-conductor data: the cyclotomic polynomial Phi_N (monic, integer
// coefficients) and the exponents coprime to N. Instances are immutable and
// cached behind a process-wide lock, so elements of the same conductor share
// one field object.
struct CyclotomicField {
    std::uint64_t conductor;
    std::uint64_t degree;               // phi(N)
    std::vector<Int> modulus;           // Phi_N, length degree + 1
    std::vector<Rational> modulus_q;    // same coefficients as Rational
    std::vector<std::uint64_t> units;   // t in [1, N-1] with gcd(t, N) = 1, ascending

    static std::shared_ptr<const CyclotomicField> get(std::uint64_t conductor);
};

// zeta_N -> zeta_N^t with gcd(t, N) = 1; exponent kept in [1, N-1].
class GaloisMap {
public:
    GaloisMap(std::uint64_t conductor, std::int64_t exponent);

    std::uint64_t conductor() const { return conductor_; }
    std::uint64_t exponent() const { return exponent_; }

    GaloisMap pow(std::uint64_t k) const;
    GaloisMap compose(const GaloisMap& inner) const;
    std::uint64_t order() const;

private:
    std::uint64_t conductor_;
    std::uint64_t exponent_;
};

// Element of Q(zeta_N) as a rational coefficient vector of length phi(N) in
// the power basis {zeta_N^i : 0 <= i < phi(N)}; always canonically reduced
// mod Phi_N, so equality is coefficient-vector equality.
class CycloElement {
public:
    static CycloElement zero(std::uint64_t conductor);
    static CycloElement one(std::uint64_t conductor);
    static CycloElement constant(std::uint64_t conductor, const Rational& value);
    static CycloElement root_power(std::uint64_t conductor, std::int64_t exponent);
    // Canonical representative of sum_{e} raw[e] * zeta_N^e (exponents may be
    // negative or >= N; they are wrapped mod N before reduction mod Phi_N).
    static CycloElement reduce(std::uint64_t conductor,
                               const std::map<std::int64_t, Rational>& raw);

    std::uint64_t conductor() const { return field_->conductor; }
    std::uint64_t degree() const { return field_->degree; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const CyclotomicField& field() const { return *field_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // throws unless is_rational()

    CycloElement operator+(const CycloElement& o) const;
    CycloElement operator-(const CycloElement& o) const;
    CycloElement operator*(const CycloElement& o) const;
    CycloElement operator-() const;
    CycloElement& operator+=(const CycloElement& o);
    bool operator==(const CycloElement& o) const;

    CycloElement scaled(const Rational& c) const;
    CycloElement inverse() const;  // extended gcd with Phi_N; throws on zero

private:
    CycloElement(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs)
        : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rational> coeffs_;
};

CycloElement galois_apply(const GaloisMap& g, const CycloElement& a);

// Sum / product over all phi(N) conjugates; results are asserted rational.
Rational absolute_trace(const CycloElement& a);
Rational absolute_norm(const CycloElement& a);
// Independent route: Res(Phi_N, f) over Q. Used as a cross-check.
Rational absolute_norm_resultant(const CycloElement& a);

// sum_{j=0}^{d-1} (g^s)^j(a); requires g to generate the Galois group and
// <g^s> to have order d. The result is fixed by g^s.
CycloElement relative_trace_to_fixed_field(const CycloElement& a, const GaloisMap& g,
                                           std::uint64_t s, std::uint64_t d);

// Power-basis integrality; valid because Z[zeta_N] has the power integral basis.
bool is_algebraic_integer(const CycloElement& a);

// Algebraic integer with |absolute norm| = 1; cross-checked against
// integrality of the inverse (the two routes must agree).
bool is_unit(const CycloElement& a);

// Evaluate at zeta_N = e^{2*pi*i*t/N} with gcd(t, N) = 1.
Complex embed_numeric(const CycloElement& a, std::uint64_t t, unsigned digits);
// Same, asserting the imaginary part vanishes below 10^{-(digits-4)}.
Real embed_real(const CycloElement& a, std::uint64_t t, unsigned digits);

// Re-embed into Q(zeta_M) for conductor N | M via zeta_N = zeta_M^{M/N}.
CycloElement lift_to_conductor(const CycloElement& a, std::uint64_t target_conductor);

}  // namespace rotlat
