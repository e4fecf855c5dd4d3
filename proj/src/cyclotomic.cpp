#include "cyclotomic.hpp"

#include <algorithm>
#include <mutex>

#include "numtheory.hpp"

namespace rotlat {

namespace {

// --- dense polynomial helpers (index = exponent) ---------------------------

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree_of(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

// Remainder of p modulo a monic divisor.
void rem_monic_inplace(QPoly& p, const QPoly& divisor) {
    const int dd = degree_of(divisor);
    for (int d = degree_of(p); d >= dd; d = degree_of(p)) {
        Rational lead = p[d];
        p.pop_back();
        if (lead == 0) continue;
        for (int i = 0; i < dd; ++i) {
            if (divisor[i] != 0) p[d - dd + i] -= lead * divisor[i];
        }
    }
    trim(p);
}

// General division with remainder over Q.
std::pair<QPoly, QPoly> divrem(QPoly num, const QPoly& den) {
    const int dd = degree_of(den);
    if (dd < 0) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
    QPoly q(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, Rational(0));
    const Rational inv_lead = Rational(1) / den[dd];
    for (int d = degree_of(num); d >= dd; d = degree_of(num)) {
        Rational c = num[d] * inv_lead;
        q[d - dd] = c;
        num.pop_back();
        for (int i = 0; i < dd; ++i) {
            if (den[i] != 0) num[d - dd + i] -= c * den[i];
        }
        trim(num);
    }
    trim(q);
    return {std::move(q), std::move(num)};
}

// Exact division of integer polynomials by a monic divisor.
std::vector<Int> exact_div_monic(std::vector<Int> num, const std::vector<Int>& den) {
    const int dd = static_cast<int>(den.size()) - 1;
    const int dq = static_cast<int>(num.size()) - 1 - dd;
    std::vector<Int> q(dq + 1, Int(0));
    for (int d = static_cast<int>(num.size()) - 1; d >= dd; --d) {
        Int c = num[d];
        if (c == 0) continue;
        q[d - dd] = c;
        for (int i = 0; i <= dd; ++i) num[d - dd + i] -= c * den[i];
    }
    for (const Int& c : num) {
        if (c != 0) throw Error(ErrorCode::InternalCheckFailed, "inexact cyclotomic division");
    }
    return q;
}

// --- cyclotomic polynomial cache --------------------------------------------

std::mutex g_cache_mutex;
std::map<std::uint64_t, std::vector<Int>> g_phi_polys;
std::map<std::uint64_t, std::shared_ptr<const CyclotomicField>> g_fields;

// Requires g_cache_mutex to be held. Computes Phi_d for every divisor d of n
// in ascending order, dividing x^d - 1 by the previously computed factors.
const std::vector<Int>& phi_poly_locked(std::uint64_t n) {
    auto it = g_phi_polys.find(n);
    if (it != g_phi_polys.end()) return it->second;
    for (std::uint64_t d : nt::divisors(n)) {
        if (g_phi_polys.count(d)) continue;
        std::vector<Int> num(d + 1, Int(0));
        num[0] = -1;
        num[d] = 1;
        for (std::uint64_t e : nt::divisors(d)) {
            if (e != d) num = exact_div_monic(std::move(num), g_phi_polys.at(e));
        }
        g_phi_polys.emplace(d, std::move(num));
    }
    return g_phi_polys.at(n);
}

}  // namespace

std::shared_ptr<const CyclotomicField> CyclotomicField::get(std::uint64_t conductor) {
    if (conductor == 0) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_fields.find(conductor);
    if (it != g_fields.end()) return it->second;

    auto field = std::make_shared<CyclotomicField>();
    field->conductor = conductor;
    field->modulus = phi_poly_locked(conductor);
    field->degree = field->modulus.size() - 1;
    field->modulus_q.reserve(field->modulus.size());
    for (const Int& c : field->modulus) field->modulus_q.emplace_back(c);
    for (std::uint64_t t = 1; t < conductor; ++t) {
        if (nt::gcd_u64(t, conductor) == 1) field->units.push_back(t);
    }
    if (conductor == 1) field->units.push_back(0);  // the trivial field, zeta_1 = 1
    g_fields.emplace(conductor, field);
    return g_fields.at(conductor);
}

GaloisMap::GaloisMap(std::uint64_t conductor, std::int64_t exponent) : conductor_(conductor) {
    if (conductor == 0) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
    std::int64_t n = static_cast<std::int64_t>(conductor);
    std::int64_t t = exponent % n;
    if (t < 0) t += n;
    if (conductor == 1) t = 0;
    exponent_ = static_cast<std::uint64_t>(t);
    if (conductor > 1 && (exponent_ == 0 || nt::gcd_u64(exponent_, conductor) != 1))
        throw Error(ErrorCode::InvalidArgument, "Galois exponent not coprime to conductor");
}

GaloisMap GaloisMap::pow(std::uint64_t k) const {
    return GaloisMap(conductor_,
                     static_cast<std::int64_t>(nt::mod_pow(exponent_, k, conductor_)));
}

GaloisMap GaloisMap::compose(const GaloisMap& inner) const {
    if (conductor_ != inner.conductor_)
        throw Error(ErrorCode::ConductorMismatch, "composing Galois maps of different conductors");
    unsigned __int128 t = static_cast<unsigned __int128>(exponent_) * inner.exponent_;
    return GaloisMap(conductor_, static_cast<std::int64_t>(t % conductor_));
}

std::uint64_t GaloisMap::order() const {
    if (conductor_ == 1) return 1;
    return nt::multiplicative_order(exponent_, conductor_);
}

// --- CycloElement ------------------------------------------------------------

CycloElement CycloElement::zero(std::uint64_t conductor) {
    auto field = CyclotomicField::get(conductor);
    return CycloElement(field, std::vector<Rational>(field->degree, Rational(0)));
}

CycloElement CycloElement::one(std::uint64_t conductor) {
    return constant(conductor, Rational(1));
}

CycloElement CycloElement::constant(std::uint64_t conductor, const Rational& value) {
    CycloElement e = zero(conductor);
    e.coeffs_[0] = value;
    return e;
}

CycloElement CycloElement::root_power(std::uint64_t conductor, std::int64_t exponent) {
    return reduce(conductor, {{exponent, Rational(1)}});
}

CycloElement CycloElement::reduce(std::uint64_t conductor,
                                  const std::map<std::int64_t, Rational>& raw) {
    auto field = CyclotomicField::get(conductor);
    const std::int64_t n = static_cast<std::int64_t>(conductor);
    QPoly p(conductor, Rational(0));
    for (const auto& [e, c] : raw) {
        std::int64_t w = e % n;
        if (w < 0) w += n;
        p[w] += c;
    }
    rem_monic_inplace(p, field->modulus_q);
    p.resize(field->degree, Rational(0));
    return CycloElement(field, std::move(p));
}

bool CycloElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycloElement::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return false;
    }
    return true;
}

Rational CycloElement::rational_value() const {
    if (!is_rational())
        throw Error(ErrorCode::InternalCheckFailed, "element is not rational");
    return coeffs_[0];
}

namespace {
void require_same_field(const CycloElement& a, const CycloElement& b) {
    if (a.conductor() != b.conductor())
        throw Error(ErrorCode::ConductorMismatch, "operands have different conductors");
}
}  // namespace

CycloElement CycloElement::operator+(const CycloElement& o) const {
    require_same_field(*this, o);
    std::vector<Rational> out(coeffs_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.coeffs_[i];
    return CycloElement(field_, std::move(out));
}

CycloElement CycloElement::operator-(const CycloElement& o) const {
    require_same_field(*this, o);
    std::vector<Rational> out(coeffs_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= o.coeffs_[i];
    return CycloElement(field_, std::move(out));
}

CycloElement& CycloElement::operator+=(const CycloElement& o) {
    require_same_field(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycloElement CycloElement::operator*(const CycloElement& o) const {
    require_same_field(*this, o);
    QPoly prod = mul(coeffs_, o.coeffs_);
    rem_monic_inplace(prod, field_->modulus_q);
    prod.resize(field_->degree, Rational(0));
    return CycloElement(field_, std::move(prod));
}

CycloElement CycloElement::operator-() const {
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c = -c;
    return CycloElement(field_, std::move(out));
}

bool CycloElement::operator==(const CycloElement& o) const {
    return conductor() == o.conductor() && coeffs_ == o.coeffs_;
}

CycloElement CycloElement::scaled(const Rational& c) const {
    std::vector<Rational> out(coeffs_);
    for (auto& v : out) v *= c;
    return CycloElement(field_, std::move(out));
}

CycloElement CycloElement::inverse() const {
    if (is_zero()) throw Error(ErrorCode::ZeroElement, "inverse of zero");
    // Extended Euclid on (f, Phi_N) over Q: s*f + t*Phi = gcd, gcd constant
    // since Phi_N is irreducible over Q and f != 0 has smaller degree.
    QPoly r0(coeffs_), r1(field_->modulus_q);
    trim(r0);
    QPoly s0 = {Rational(1)}, s1 = {};
    while (!r1.empty()) {
        auto [q, r2] = divrem(r0, r1);
        QPoly qs = mul(q, s1);
        QPoly s2(std::max(s0.size(), qs.size()), Rational(0));
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (degree_of(r0) != 0)
        throw Error(ErrorCode::InternalCheckFailed, "gcd with Phi_N is not constant");
    const Rational inv_g = Rational(1) / r0[0];
    for (auto& c : s0) c *= inv_g;
    rem_monic_inplace(s0, field_->modulus_q);
    s0.resize(field_->degree, Rational(0));
    return CycloElement(field_, std::move(s0));
}

CycloElement galois_apply(const GaloisMap& g, const CycloElement& a) {
    if (g.conductor() != a.conductor())
        throw Error(ErrorCode::ConductorMismatch, "Galois map conductor mismatch");
    const std::uint64_t n = a.conductor();
    std::map<std::int64_t, Rational> raw;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        // i -> i*t mod N is injective on the exponents, so plain assignment
        std::uint64_t e = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(i) * g.exponent() % n);
        raw[static_cast<std::int64_t>(e)] = a.coeffs()[i];
    }
    return CycloElement::reduce(n, raw);
}

Rational absolute_trace(const CycloElement& a) {
    CycloElement acc = CycloElement::zero(a.conductor());
    for (std::uint64_t t : a.field().units) acc += galois_apply(GaloisMap(a.conductor(), t), a);
    return acc.rational_value();
}

Rational absolute_norm(const CycloElement& a) {
    CycloElement acc = CycloElement::one(a.conductor());
    for (std::uint64_t t : a.field().units) acc = acc * galois_apply(GaloisMap(a.conductor(), t), a);
    return acc.rational_value();
}

Rational absolute_norm_resultant(const CycloElement& a) {
    // Res(Phi_N, f) via the Euclidean remainder recurrence:
    // Res(A, B) = lc(B)^{deg A - deg R} * (-1)^{deg A * deg B} * Res(B, R).
    QPoly A(a.field().modulus_q);
    QPoly B(a.coeffs());
    trim(B);
    Rational res(1);
    while (true) {
        if (B.empty()) {
            if (degree_of(A) > 0) return Rational(0);
            throw Error(ErrorCode::ZeroElement, "resultant norm of zero element");
        }
        if (degree_of(B) == 0) {
            res *= pow(B[0], degree_of(A));
            return res;
        }
        auto [q, R] = divrem(A, B);
        (void)q;
        int dA = degree_of(A), dB = degree_of(B), dR = degree_of(R);
        res *= pow(B[dB], dA - (dR < 0 ? 0 : dR));
        if ((dA % 2) && (dB % 2)) res = -res;
        A = std::move(B);
        B = std::move(R);
    }
}

CycloElement relative_trace_to_fixed_field(const CycloElement& a, const GaloisMap& g,
                                           std::uint64_t s, std::uint64_t d) {
    if (g.conductor() != a.conductor())
        throw Error(ErrorCode::ConductorMismatch, "Galois map conductor mismatch");
    if (g.order() != a.degree())
        throw Error(ErrorCode::InvalidArgument, "map does not generate the Galois group");
    GaloisMap gs = g.pow(s);
    if (gs.order() != d)
        throw Error(ErrorCode::InvalidArgument, "subgroup order does not match d");
    CycloElement acc = a;
    CycloElement img = a;
    for (std::uint64_t j = 1; j < d; ++j) {
        img = galois_apply(gs, img);
        acc += img;
    }
    return acc;
}

bool is_algebraic_integer(const CycloElement& a) {
    return std::all_of(a.coeffs().begin(), a.coeffs().end(),
                       [](const Rational& c) { return is_integer(c); });
}

bool is_unit(const CycloElement& a) {
    if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "unit test on zero");
    if (!is_algebraic_integer(a)) return false;
    const bool by_norm = abs(absolute_norm(a)) == 1;
    const bool by_inverse = is_algebraic_integer(a.inverse());
    if (by_norm != by_inverse)
        throw Error(ErrorCode::InternalCheckFailed, "unit criteria disagree");
    return by_norm;
}

Complex embed_numeric(const CycloElement& a, std::uint64_t t, unsigned digits) {
    if (a.conductor() > 1 && nt::gcd_u64(t % a.conductor(), a.conductor()) != 1)
        throw Error(ErrorCode::InvalidArgument, "embedding exponent not coprime to conductor");
    PrecisionScope scope(digits);
    const Complex zeta = root_of_unity(a.conductor(), t);
    Complex acc;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        acc = acc * zeta;
        if (a.coeffs()[i] != 0) acc.re += make_real(a.coeffs()[i]);
    }
    return acc;
}

Real embed_real(const CycloElement& a, std::uint64_t t, unsigned digits) {
    Complex v = embed_numeric(a, t, digits);
    PrecisionScope scope(digits);
    if (abs(v.im) > pow10_neg(digits - 4))
        throw Error(ErrorCode::InternalCheckFailed,
                    "embedding of a supposedly real element has nonzero imaginary part");
    return v.re;
}

CycloElement lift_to_conductor(const CycloElement& a, std::uint64_t target_conductor) {
    if (target_conductor % a.conductor() != 0)
        throw Error(ErrorCode::InvalidArgument, "target conductor must be a multiple");
    const std::uint64_t ratio = target_conductor / a.conductor();
    std::map<std::int64_t, Rational> raw;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] != 0) raw[static_cast<std::int64_t>(i * ratio)] = a.coeffs()[i];
    }
    return CycloElement::reduce(target_conductor, raw);
}

}  // namespace rotlat
