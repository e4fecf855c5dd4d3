#pragma once

#include <cstdint>
#include <vector>

#include "types.hpp"

namespace rotlat::nt {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t mod);
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t mod);

// Deterministic trial division; all conductors here are desk scale.
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

std::uint64_t smallest_primitive_root(std::uint64_t p);

// Smallest prime p = 1 (mod n); throws SearchBoundExceeded past the cap.
std::uint64_t find_prime_1_mod_n(std::uint64_t n, std::uint64_t bound = 1'000'000);

// x = residues[i] (mod moduli[i]) for pairwise coprime moduli.
std::uint64_t crt_pair(std::uint64_t r1, std::uint64_t m1, std::uint64_t r2, std::uint64_t m2);

}  // namespace rotlat::nt
