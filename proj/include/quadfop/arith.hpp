#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace quadfop {

using Int = mpz_class;

namespace arith {

// m = M * r^2, M square-free and carrying the sign of m, r >= 1.
struct SquareFreeCore {
    Int M;
    Int r;
};

struct PrimePower {
    Int prime;
    unsigned exponent = 0;
};

// Sorted by prime.
using Factorization = std::vector<PrimePower>;

SquareFreeCore squarefree_core(const Int& m);
Factorization factor(const Int& m);
bool is_prime(const Int& n);

// Exponent of p in n; n != 0, p >= 2.
unsigned valuation(const Int& n, const Int& p);
int kronecker(const Int& a, const Int& n);

// Both roots of t^2 = a (mod p^2) in ascending order, empty for a non-residue.
std::vector<Int> sqrt_mod_p2(const Int& a, const Int& p);
// Smallest root of x^2 = a (mod p), p an odd prime.
std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p);

bool is_pth_power_mod_q(const Int& c, const Int& p, const Int& q);

bool is_square(const Int& n, Int* root = nullptr);
Int isqrt(const Int& n);

// 64-bit kernels used by the sweep engine.
std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod64(std::uint64_t a, std::uint64_t m);  // gcd(a, m) == 1
std::uint64_t isqrt64(std::uint64_t n);
std::uint64_t icbrt64(std::uint64_t n);
bool is_prime64(std::uint64_t n);
std::vector<std::pair<std::uint64_t, unsigned>> factor64(std::uint64_t n);

struct Core64 {
    std::uint64_t core;
    std::uint64_t r;
};
// n >= 1.
Core64 squarefree_core64(std::uint64_t n);

// p odd prime below 2^32; a reduced mod p.
std::optional<std::uint64_t> sqrt_mod_prime64(std::uint64_t a, std::uint64_t p);

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);
// The first `count` primes.
std::vector<std::uint64_t> first_primes(std::size_t count);

}  // namespace arith
}  // namespace quadfop
