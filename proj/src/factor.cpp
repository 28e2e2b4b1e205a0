#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "quadfop/arith.hpp"

namespace quadfop::arith {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace {

constexpr std::uint32_t kTrialLimit = 10000;

const std::vector<std::uint32_t>& trial_primes() {
    static const std::vector<std::uint32_t> ps = primes_up_to(kTrialLimit);
    return ps;
}

constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool mr_round64(u64 n, u64 a, u64 d, unsigned s) {
    u64 x = powmod64(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = mulmod64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

u64 rho_brent64(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 m = 128;
        u64 r = 1;
        auto f = [&](u64 v) { return (mulmod64(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod64(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor64_into(u64 n, std::map<u64, unsigned>& out) {
    if (n == 1) return;
    if (is_prime64(n)) {
        ++out[n];
        return;
    }
    u64 s = isqrt64(n);
    if (s * s == n) {
        std::map<u64, unsigned> half;
        factor64_into(s, half);
        for (auto& [p, e] : half) out[p] += 2 * e;
        return;
    }
    u64 c = icbrt64(n);
    if (static_cast<u128>(c) * c * c == n) {
        std::map<u64, unsigned> third;
        factor64_into(c, third);
        for (auto& [p, e] : third) out[p] += 3 * e;
        return;
    }
    u64 d = rho_brent64(n);
    factor64_into(d, out);
    factor64_into(n / d, out);
}

// Removes primes below kTrialLimit; stops early once p^3 exceeds the cofactor.
u64 trial_divide64(u64 n, std::map<u64, unsigned>& out) {
    for (std::uint32_t p : trial_primes()) {
        if (static_cast<u128>(p) * p > n) break;
        if (n % p) continue;
        unsigned e = 0;
        do {
            n /= p;
            ++e;
        } while (n % p == 0);
        out[p] += e;
    }
    return n;
}

// mpz path.

bool mr_round(const Int& n, const Int& a, const Int& d, unsigned s) {
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    Int nm1 = n - 1;
    if (x == 1 || x == nm1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == nm1) return true;
    }
    return false;
}

Int rho_brent(const Int& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    Int x, y, ys, q, g, diff;
    for (unsigned long c = 1;; ++c) {
        y = 2;
        q = 1;
        g = 1;
        const unsigned long m = 128;
        unsigned long r = 1;
        auto step = [&](Int& v) {
            mpz_mul(v.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
            mpz_add_ui(v.get_mpz_t(), v.get_mpz_t(), c);
            mpz_tdiv_r(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) step(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    step(y);
                    mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
                    mpz_mul(q.get_mpz_t(), q.get_mpz_t(), diff.get_mpz_t());
                    mpz_tdiv_r(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                step(ys);
                mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), ys.get_mpz_t());
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (mpz_fits_ulong_p(n.get_mpz_t())) {
        std::map<u64, unsigned> small;
        factor64_into(n.get_ui(), small);
        for (auto& [p, e] : small) out[Int(static_cast<unsigned long>(p))] += e;
        return;
    }
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    // rho cannot split prime powers, so peel perfect powers first.
    for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
        Int root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
            std::map<Int, unsigned> inner;
            factor_into(root, inner);
            for (auto& [p, e] : inner) out[p] += static_cast<unsigned>(k) * e;
            return;
        }
    }
    Int d = rho_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

bool is_prime64(u64 n) {
    if (n < 2) return false;
    for (u64 p : kWitnesses) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while (!(d & 1)) {
        d >>= 1;
        ++s;
    }
    for (u64 a : kWitnesses) {
        if (!mr_round64(n, a, d, s)) return false;
    }
    return true;
}

std::vector<std::pair<u64, unsigned>> factor64(u64 n) {
    if (n < 1) throw std::invalid_argument("factor64: n must be positive");
    std::map<u64, unsigned> out;
    u64 rest = trial_divide64(n, out);
    factor64_into(rest, out);
    return {out.begin(), out.end()};
}

Core64 squarefree_core64(u64 n) {
    if (n == 0) throw std::invalid_argument("squarefree_core64: zero");
    Core64 res{1, 1};
    for (std::uint32_t p : trial_primes()) {
        if (static_cast<u128>(p) * p * p > n) break;
        if (n % p) continue;
        unsigned e = 0;
        do {
            n /= p;
            ++e;
        } while (n % p == 0);
        for (unsigned i = 0; i < e / 2; ++i) res.r *= p;
        if (e & 1) res.core *= p;
    }
    if (n > 1) {
        u64 s = isqrt64(n);
        if (s * s == n) {
            res.r *= s;
            n = 1;
        }
    }
    if (n > 1 && static_cast<u128>(kTrialLimit) * kTrialLimit * kTrialLimit <= n) {
        // The cofactor may still hide a square of a prime above the trial bound.
        for (auto& [p, e] : factor64(n)) {
            for (unsigned i = 0; i < e / 2; ++i) res.r *= p;
            if (e & 1) res.core *= p;
        }
        return res;
    }
    // Either the loop ran to completion (cofactor below p^3 for the last p) or
    // all primes below the cube root were removed: cofactor is 1, q or q1*q2.
    res.core *= n;
    return res;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime64(n.get_ui());
    for (u64 p : kWitnesses) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    // The 13 witnesses above are deterministic below 3.3e24.
    static const Int kDeterministicBound("3317044064679887385961981");
    if (n < kDeterministicBound) {
        Int d = n - 1;
        unsigned s = 0;
        while (mpz_even_p(d.get_mpz_t())) {
            d /= 2;
            ++s;
        }
        for (u64 a : kWitnesses) {
            if (!mr_round(n, Int(static_cast<unsigned long>(a)), d, s)) return false;
        }
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Factorization factor(const Int& m) {
    if (m < 2) throw std::invalid_argument("factor: m must be at least 2");
    std::map<Int, unsigned> out;
    Int n = m;
    for (std::uint32_t p : trial_primes()) {
        if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
        unsigned e = 0;
        do {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
        out[Int(p)] += e;
        if (n == 1) break;
    }
    factor_into(n, out);
    Factorization f;
    f.reserve(out.size());
    for (auto& [p, e] : out) f.push_back({p, e});
    return f;
}

SquareFreeCore squarefree_core(const Int& m) {
    if (m == 0) throw std::invalid_argument("squarefree_core: m = 0 is degenerate");
    Int a = abs(m);
    SquareFreeCore res{Int(1), Int(1)};
    if (mpz_fits_ulong_p(a.get_mpz_t())) {
        auto c = squarefree_core64(a.get_ui());
        res.M = static_cast<unsigned long>(c.core);
        res.r = static_cast<unsigned long>(c.r);
    } else if (a > 1) {
        for (auto& [p, e] : factor(a)) {
            if (e & 1) res.M *= p;
            if (e >= 2) {
                Int pw;
                mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), e / 2);
                res.r *= pw;
            }
        }
    }
    if (m < 0) res.M = -res.M;
    return res;
}

}  // namespace quadfop::arith
