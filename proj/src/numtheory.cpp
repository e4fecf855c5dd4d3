#include "numtheory.hpp"

#include <algorithm>

namespace rotlat::nt {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 0) throw Error(ErrorCode::InvalidArgument, "mod_pow with zero modulus");
    unsigned __int128 acc = 1;
    unsigned __int128 b = base % mod;
    while (exp > 0) {
        if (exp & 1) acc = acc * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t mod) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(mod), new_r = static_cast<std::int64_t>(a % mod);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw Error(ErrorCode::InvalidArgument, "element not invertible in Z/mZ");
    if (t < 0) t += static_cast<std::int64_t>(mod);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t mod) {
    if (gcd_u64(a % mod, mod) != 1)
        throw Error(ErrorCode::InvalidArgument, "order of a non-unit in Z/mZ");
    std::uint64_t phi = euler_phi(mod);
    std::uint64_t order = phi;
    for (std::uint64_t q : prime_factors(phi)) {
        while (order % q == 0 && mod_pow(a, order / q, mod) == 1) order /= q;
    }
    return order;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t q : prime_factors(n)) result -= result / q;
    return result;
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "primitive root of a non-prime");
    if (p == 2) return 1;
    std::vector<std::uint64_t> qs = prime_factors(p - 1);
    for (std::uint64_t r = 2; r < p; ++r) {
        bool primitive = true;
        for (std::uint64_t q : qs) {
            if (mod_pow(r, (p - 1) / q, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return r;
    }
    throw Error(ErrorCode::InternalCheckFailed, "no primitive root found for prime input");
}

std::uint64_t find_prime_1_mod_n(std::uint64_t n, std::uint64_t bound) {
    if (n < 2 || n % 2 == 0)
        throw Error(ErrorCode::InvalidArgument, "find_prime expects an odd n > 1");
    for (std::uint64_t p = n + 1; p <= bound; p += n) {
        if (is_prime(p)) return p;
    }
    throw Error(ErrorCode::SearchBoundExceeded, "no prime = 1 (mod n) below search bound");
}

std::uint64_t crt_pair(std::uint64_t r1, std::uint64_t m1, std::uint64_t r2, std::uint64_t m2) {
    if (gcd_u64(m1, m2) != 1) throw Error(ErrorCode::InvalidArgument, "crt moduli not coprime");
    // x = r1 + m1 * ((r2 - r1) * m1^{-1} mod m2)
    std::uint64_t inv = mod_inverse(m1 % m2, m2);
    std::uint64_t diff = (r2 + m2 - r1 % m2) % m2;
    unsigned __int128 x = static_cast<unsigned __int128>(diff) * inv % m2;
    x = static_cast<unsigned __int128>(m1) * static_cast<std::uint64_t>(x) + r1;
    return static_cast<std::uint64_t>(x % (static_cast<unsigned __int128>(m1) * m2));
}

}  // namespace rotlat::nt
