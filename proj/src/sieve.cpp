#include "sieve.hpp"

#include <stdexcept>

#include "quadfop/arith.hpp"

namespace quadfop::fop::detail {

using u64 = std::uint64_t;
using i128 = __int128;

namespace {

u64 mod_signed(std::int64_t a, u64 p) {
    std::int64_t r = a % static_cast<std::int64_t>(p);
    return static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

}  // namespace

LinearSieve::LinearSieve(std::int64_t c, std::int64_t c0, std::int64_t K, u64 max_abs) : c_(c), c0_(c0), K_(K) {
    if (c < 1) throw std::invalid_argument("LinearSieve: c must be positive");
    if (max_abs >= (u64(1) << 62)) throw std::invalid_argument("LinearSieve: values exceed 2^62");
    auto limit = static_cast<std::uint32_t>(arith::icbrt64(max_abs) + 1);
    for (std::uint32_t p : arith::primes_up_to(limit)) {
        if (p == 2) continue;
        u64 cp = mod_signed(c, p), c0p = mod_signed(c0, p), Kp = mod_signed(K, p);
        if (cp == 0) {
            if ((c0p * c0p + p - Kp) % p == 0) entries_.push_back({p, 0, 0, 3});
            continue;
        }
        auto x = arith::sqrt_mod_prime64(Kp, p);
        if (!x) continue;
        u64 cinv = arith::invmod64(cp, p);
        auto to_t = [&](u64 T) { return static_cast<std::uint32_t>((T + p - c0p) % p * cinv % p); };
        if (*x == 0) {
            entries_.push_back({p, to_t(0), 0, 1});
        } else {
            entries_.push_back({p, to_t(*x), to_t(p - *x), 2});
        }
    }
}

void LinearSieve::run(u64 lo, u64 hi, std::vector<std::int64_t>& M_out, std::vector<u64>& r_out) const {
    const std::size_t n = hi - lo + 1;
    std::vector<u64> rem(n), core(n, 1), rr(n, 1);
    std::vector<std::int8_t> sign(n);
    for (std::size_t i = 0; i < n; ++i) {
        i128 T = static_cast<i128>(c_) * static_cast<i128>(lo + i) + c0_;
        i128 m = T * T - K_;
        sign[i] = m < 0 ? -1 : (m > 0 ? 1 : 0);
        rem[i] = static_cast<u64>(m < 0 ? -m : m);
        if (rem[i] == 0) continue;
        unsigned e = static_cast<unsigned>(__builtin_ctzll(rem[i]));
        rem[i] >>= e;
        rr[i] <<= e / 2;
        if (e & 1) core[i] = 2;
    }
    auto divide_out = [&](std::size_t j, u64 p) {
        u64 x = rem[j];
        if (x == 0) return;
        unsigned e = 0;
        while (x % p == 0) {
            x /= p;
            ++e;
        }
        if (!e) return;
        rem[j] = x;
        for (unsigned k = 0; k < e / 2; ++k) rr[j] *= p;
        if (e & 1) core[j] *= p;
    };
    for (const Entry& en : entries_) {
        const u64 p = en.p;
        if (en.kind == 3) {
            for (std::size_t j = 0; j < n; ++j) divide_out(j, p);
            continue;
        }
        const u64 lo_mod = lo % p;
        u64 first = (en.r1 + p - lo_mod) % p;
        for (std::size_t j = first; j < n; j += p) divide_out(j, p);
        if (en.kind == 2) {
            first = (en.r2 + p - lo_mod) % p;
            for (std::size_t j = first; j < n; j += p) divide_out(j, p);
        }
    }
    M_out.resize(n);
    r_out.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sign[i] == 0) {
            M_out[i] = 0;
            r_out[i] = 1;
            continue;
        }
        u64 x = rem[i];
        if (x > 1) {
            u64 s = arith::isqrt64(x);
            if (s * s == x) {
                rr[i] *= s;
            } else {
                core[i] *= x;
            }
        }
        M_out[i] = sign[i] * static_cast<std::int64_t>(core[i]);
        r_out[i] = rr[i];
    }
}

}  // namespace quadfop::fop::detail
