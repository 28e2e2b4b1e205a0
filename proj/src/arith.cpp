#include "quadfop/arith.hpp"

#include <cmath>
#include <stdexcept>

namespace quadfop::arith {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invmod64(u64 a, u64 m) {
    __int128 t = 0, nt = 1;
    __int128 r = m, nr = a % m;
    while (nr) {
        __int128 q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw std::invalid_argument("invmod64: not invertible");
    if (t < 0) t += m;
    return static_cast<u64>(t);
}

u64 isqrt64(u64 n) {
    u64 x = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (x > 0 && static_cast<u128>(x) * x > n) --x;
    while (static_cast<u128>(x + 1) * (x + 1) <= n) ++x;
    return x;
}

u64 icbrt64(u64 n) {
    u64 x = static_cast<u64>(std::cbrt(static_cast<long double>(n)));
    auto cube = [](u64 y) { return static_cast<u128>(y) * y * y; };
    while (x > 0 && cube(x) > n) --x;
    while (cube(x + 1) <= n) ++x;
    return x;
}

std::optional<u64> sqrt_mod_prime64(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (powmod64(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) {
        u64 x = powmod64(a, (p + 1) / 4, p);
        return std::min(x, p - x);
    }
    u64 q = p - 1;
    unsigned s = 0;
    while (!(q & 1)) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (powmod64(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 c = powmod64(z, q, p);
    u64 x = powmod64(a, (q + 1) / 2, p);
    u64 t = powmod64(a, q, p);
    unsigned m = s;
    while (t != 1) {
        unsigned i = 0;
        u64 tt = t;
        while (tt != 1) {
            tt = mulmod64(tt, tt, p);
            ++i;
        }
        u64 b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = mulmod64(b, b, p);
        x = mulmod64(x, b, p);
        c = mulmod64(b, b, p);
        t = mulmod64(t, c, p);
        m = i;
    }
    return std::min(x, p - x);
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return out;
}

std::vector<u64> first_primes(std::size_t count) {
    if (count == 0) return {};
    double n = static_cast<double>(std::max<std::size_t>(count, 6));
    auto limit = static_cast<std::uint32_t>(n * (std::log(n) + std::log(std::log(n)))) + 10;
    auto ps = primes_up_to(limit);
    ps.resize(count);
    return {ps.begin(), ps.end()};
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Int& n, Int* root) {
    if (n < 0) return false;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
    if (root) *root = isqrt(n);
    return true;
}

unsigned valuation(const Int& n, const Int& p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    if (p < 2) throw std::invalid_argument("valuation: base below 2");
    Int q = n;
    unsigned v = 0;
    while (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

int kronecker(const Int& a, const Int& n) { return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t()); }

static Int mod_pos(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

static Int powm(const Int& a, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::optional<Int> sqrt_mod_prime(const Int& a_in, const Int& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t())) throw std::invalid_argument("sqrt_mod_prime: p must be an odd prime");
    Int a = mod_pos(a_in, p);
    if (a == 0) return Int(0);
    if (mpz_fits_ulong_p(p.get_mpz_t()) && p < (Int(1) << 32)) {
        auto r = sqrt_mod_prime64(a.get_ui(), p.get_ui());
        if (!r) return std::nullopt;
        return Int(static_cast<unsigned long>(*r));
    }
    if (kronecker(a, p) != 1) return std::nullopt;
    Int q = p - 1;
    unsigned s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (kronecker(z, p) != -1) ++z;
    Int c = powm(z, q, p);
    Int x = powm(a, (q + 1) / 2, p);
    Int t = powm(a, q, p);
    unsigned m = s;
    while (t != 1) {
        unsigned i = 0;
        Int tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Int b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b % p;
        x = x * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    Int y = p - x;
    return x < y ? x : y;
}

std::vector<Int> sqrt_mod_p2(const Int& a, const Int& p) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("sqrt_mod_p2: p must be an odd prime");
    if (mod_pos(a, p) == 0) throw std::invalid_argument("sqrt_mod_p2: p divides a");
    auto x = sqrt_mod_prime(a, p);
    if (!x) return {};
    Int p2 = p * p;
    // Newton step x - (x^2 - a)/(2x) lifts the root from p to p^2.
    Int inv;
    Int twice = 2 * *x;
    mpz_invert(inv.get_mpz_t(), twice.get_mpz_t(), p2.get_mpz_t());
    Int lifted = mod_pos(*x - (*x * *x - a) * inv, p2);
    Int other = p2 - lifted;
    if (other < lifted) std::swap(other, lifted);
    return {lifted, other};
}

bool is_pth_power_mod_q(const Int& c, const Int& p, const Int& q) {
    if (!is_prime(q) || !is_prime(p)) throw std::invalid_argument("is_pth_power_mod_q: p and q must be prime");
    if (mod_pos(q, p) != 1) throw std::invalid_argument("is_pth_power_mod_q: q must be 1 mod p");
    if (mod_pos(c, q) == 0) throw std::invalid_argument("is_pth_power_mod_q: c must be prime to q");
    return powm(mod_pos(c, q), (q - 1) / p, q) == 1;
}

}  // namespace quadfop::arith
