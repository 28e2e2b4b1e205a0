#include "quadfop/imagclass.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "quadfop/prationality.hpp"

namespace quadfop::imagclass {

using u64 = std::uint64_t;
using i64 = std::int64_t;

namespace {

// Smallest prime factor table, shared and only ever replaced by a larger one.
std::shared_ptr<const std::vector<std::uint32_t>> spf_table(std::uint32_t n) {
    static std::mutex mu;
    static std::shared_ptr<const std::vector<std::uint32_t>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache && cache->size() > n) return cache;
    auto spf = std::make_shared<std::vector<std::uint32_t>>(std::max<std::uint32_t>(n, 1024) + 1, 0);
    auto& s = *spf;
    for (std::uint32_t i = 2; i < s.size(); ++i) {
        if (s[i]) continue;
        for (u64 j = i; j < s.size(); j += i)
            if (!s[j]) s[j] = i;
    }
    cache = spf;
    return cache;
}

u64 mod_of(i64 D, u64 m) {
    i64 r = D % static_cast<i64>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

bool is_fundamental(i64 D) {
    if (D >= 0) return false;
    const u64 a = static_cast<u64>(-D);
    if (a % 4 == 3) return arith::squarefree_core64(a).r == 1;  // D = 1 mod 4
    if (a % 4 != 0) return false;
    const u64 m = a / 4;  // D/4 = -m must be 2 or 3 mod 4, i.e. m = 2 or 1 mod 4
    if (m % 4 != 1 && m % 4 != 2) return false;
    return arith::squarefree_core64(m).r == 1;
}

class FormCounter {
public:
    explicit FormCounter(i64 D) : D_(D), absD_(static_cast<u64>(-D)) {
        A_ = arith::isqrt64(absD_ / 3);
        while ((A_ + 1) * (A_ + 1) * 3 <= absD_) ++A_;
        spf_ = spf_table(static_cast<std::uint32_t>(A_ + 1));
        root_.assign(A_ + 1, -1);
    }

    u64 count() {
        u64 h = 0;
        std::vector<std::pair<u64, unsigned>> fac;
        for (u64 a = 1; a <= A_; ++a) {
            factor(a, fac);
            if (4 * a * a < absD_) {
                h += root_count(fac) / 2;
            } else {
                h += boundary_count(a, fac);
            }
        }
        return h;
    }

private:
    void factor(u64 a, std::vector<std::pair<u64, unsigned>>& fac) const {
        fac.clear();
        const auto& spf = *spf_;
        while (a > 1) {
            u64 p = spf[a];
            unsigned k = 0;
            while (a % p == 0) {
                a /= p;
                ++k;
            }
            fac.emplace_back(p, k);
        }
    }

    // sqrt(D) mod odd p with p not dividing D; -2 when D is a non-residue.
    i64 root_mod(u64 p) {
        i64& r = root_[p];
        if (r == -1) {
            auto x = arith::sqrt_mod_prime64(mod_of(D_, p), p);
            r = x ? static_cast<i64>(*x) : -2;
        }
        return r;
    }

    unsigned two_part_count(unsigned e) const {
        const unsigned j = e + 2;
        if (absD_ % 2 == 1) {
            if (j == 2) return 2;
            return mod_of(D_, 8) == 1 ? 4 : 0;
        }
        return j <= 3 ? 2 : 0;
    }

    // Number of x mod 4a with x^2 = D mod 4a.
    u64 root_count(const std::vector<std::pair<u64, unsigned>>& fac) {
        unsigned e = 0;
        u64 cnt = 1;
        for (auto [p, k] : fac) {
            if (p == 2) {
                e = k;
                continue;
            }
            if (absD_ % p == 0) {
                if (k > 1) return 0;
                continue;
            }
            if (root_mod(p) == -2) return 0;
            cnt *= 2;
        }
        return cnt * two_part_count(e);
    }

    // Reduced forms with leading coefficient a once c >= a can fail.
    u64 boundary_count(u64 a, const std::vector<std::pair<u64, unsigned>>& fac) {
        // Roots modulo each prime power of 4a, then CRT.
        std::vector<u64> roots{0};
        u64 mod = 1;
        auto combine = [&](const std::vector<u64>& r2, u64 m2) {
            std::vector<u64> out;
            const u64 inv = m2 == 1 ? 0 : arith::invmod64(mod % m2, m2);
            for (u64 x1 : roots)
                for (u64 x2 : r2) {
                    u64 d = (x2 + m2 - x1 % m2) % m2;
                    out.push_back(x1 + mod * (d * inv % m2));
                }
            roots.swap(out);
            mod *= m2;
        };
        unsigned e = 0;
        for (auto [p, k] : fac)
            if (p == 2) e = k;
        {
            const u64 m2 = u64(1) << (e + 2);
            std::vector<u64> r2;
            const u64 start = std::min<u64>(m2, 8);
            for (u64 x = 0; x < start; ++x)
                if ((x * x) % start == mod_of(D_, start)) r2.push_back(x);
            for (u64 m = start; m < m2; m *= 2) {
                std::vector<u64> next;
                for (u64 x : r2)
                    for (u64 y : {x, x + m})
                        if ((y * y) % (2 * m) == mod_of(D_, 2 * m)) next.push_back(y);
                r2.swap(next);
            }
            if (r2.empty()) return 0;
            combine(r2, m2);
        }
        for (auto [p, k] : fac) {
            if (p == 2) continue;
            u64 pk = 1;
            for (unsigned i = 0; i < k; ++i) pk *= p;
            if (absD_ % p == 0) {
                if (k > 1) return 0;
                combine({0}, p);
                continue;
            }
            i64 r = root_mod(p);
            if (r == -2) return 0;
            // Hensel lift of r to p^k.
            u64 x = static_cast<u64>(r), m = p;
            while (m < pk) {
                m = std::min(pk, m * m);
                const u64 Dm = mod_of(D_, m);
                const u64 fx = (arith::mulmod64(x, x, m) + m - Dm) % m;
                x = (x + m - arith::mulmod64(fx, arith::invmod64(2 * x % m, m), m)) % m;
            }
            combine({x, (pk - x) % pk}, pk);
        }
        // b ranges over (-a, a], one representative per class mod 2a.
        std::vector<i64> bs;
        for (u64 x : roots) {
            const u64 y = x % (2 * a);
            bs.push_back(y <= a ? static_cast<i64>(y) : static_cast<i64>(y) - static_cast<i64>(2 * a));
        }
        std::sort(bs.begin(), bs.end());
        bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
        u64 h = 0;
        for (i64 b : bs) {
            const unsigned __int128 num = static_cast<unsigned __int128>(b * b) + absD_;
            const u64 c = static_cast<u64>(num / (4 * a));
            if (c < a) continue;
            if (c == a && b < 0) continue;
            ++h;
        }
        return h;
    }

    i64 D_;
    u64 absD_;
    u64 A_ = 0;
    std::shared_ptr<const std::vector<std::uint32_t>> spf_;
    std::vector<i64> root_;
};

}  // namespace

std::uint64_t class_number_imag(std::int64_t D) {
    if (D >= 0) throw std::invalid_argument("class_number_imag: D must be negative");
    if (D < -(i64(1) << 52)) throw std::invalid_argument("class_number_imag: |D| too large");
    if (!is_fundamental(D)) throw std::invalid_argument("class_number_imag: D is not a fundamental discriminant");
    return FormCounter(D).count();
}

std::int64_t mirror_discriminant(const Int& M) {
    if (M < 1) throw std::invalid_argument("mirror_discriminant: M must be positive");
    Int D = discriminant(arith::squarefree_core(-3 * M).M);
    if (!mpz_fits_slong_p(D.get_mpz_t())) throw std::invalid_argument("mirror_discriminant: too large");
    return D.get_si();
}

CubicResult cubic_pipeline(std::uint64_t B, const std::vector<unsigned>& t0_set, bool filtered,
                           const CubicOptions& options) {
    std::vector<prational::PRationalFamily> fams;
    if (filtered) {
        fams = prational::nonrational_families(3, 7);
    } else {
        if (t0_set.empty()) throw std::invalid_argument("cubic_pipeline: empty t0 set");
        for (unsigned t0 : t0_set) {
            if (t0 != 0 && t0 != 4 && t0 != 5) throw std::invalid_argument("cubic_pipeline: t0 must be 0, 4 or 5");
            fams.push_back({3, prational::VariantB{-1, Int(t0)}, std::nullopt});
        }
    }
    CubicResult res{prational::run_families(fams, B, options.fop), {}};
    std::vector<fop::FopRecord> recs = res.run.positive();
    res.reports.resize(recs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex mu;
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= recs.size()) return;
            try {
                const auto& rec = recs[i];
                ImagClassReport rep;
                rep.M = rec.M;
                rep.r = rec.r;
                rep.t = rec.t;
                rep.family = rec.family;
                const auto ex = prational::global_pth_power_exception(fams[rec.family].unit_of(rec), 3);
                rep.n = ex.n;
                rep.exception = ex.exception;
                // D_neg stays 0 when -3M does not fit in 64 bits.
                if (rec.M >= 1 && rec.M < (Int(1) << 60)) rep.D_neg = mirror_discriminant(rec.M);
                if (rec.M <= options.h_limit) {
                    rep.h = class_number_imag(rep.D_neg);
                    rep.v3 = 0;
                    for (u64 h = *rep.h; h % 3 == 0; h /= 3) ++rep.v3;
                }
                res.reports[i] = std::move(rep);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
                next = recs.size();
                return;
            }
        }
    };
    unsigned nw = options.fop.workers ? options.fop.workers : fop::default_workers();
    nw = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(nw, recs.size())));
    if (nw == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nw; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    return res;
}

IntPoly cos_minimal_polynomial(unsigned p) {
    if (p < 3 || !arith::is_prime64(p)) throw std::invalid_argument("cos_minimal_polynomial: p must be an odd prime");
    // C_0 = 2, C_1 = y, C_{k+1} = y C_k - C_{k-1}, with C_k(2 cos u) = 2 cos(k u);
    // 1 + C_1 + ... + C_d vanishes at every 2 cos(2 pi i / p).
    const unsigned d = (p - 1) / 2;
    IntPoly prev = IntPoly::constant(Int(2)), cur = IntPoly::x();
    IntPoly psi = IntPoly::constant(Int(1)) + cur;
    for (unsigned k = 1; k < d; ++k) {
        IntPoly next = IntPoly::x() * cur - prev;
        prev = cur;
        cur = next;
        psi += cur;
    }
    return psi;
}

std::vector<IntPoly> mirror_polynomial_symbolic(unsigned p) {
    // P = M^d Psi(x^2/M + 2): the coefficient of x^(2i) is [y^i]Psi(y + 2) * M^(d - i).
    const IntPoly shifted = cos_minimal_polynomial(p).compose(IntPoly({Int(2), Int(1)}));
    const unsigned d = (p - 1) / 2;
    std::vector<IntPoly> out(p);
    for (unsigned i = 0; i <= d; ++i) out[2 * i] = IntPoly::monomial(shifted.coeff(i), d - i);
    return out;
}

IntPoly mirror_defining_polynomial(unsigned p, const Int& M) {
    if (M < 2) throw std::invalid_argument("mirror_defining_polynomial: M must be at least 2");
    auto sym = mirror_polynomial_symbolic(p);
    std::vector<Int> c;
    for (const auto& k : sym) c.push_back(k(M));
    return IntPoly(std::move(c));
}

}  // namespace quadfop::imagclass
