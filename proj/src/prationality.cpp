#include "quadfop/prationality.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace quadfop::prational {

namespace {

void require_odd_prime(unsigned p, const char* who) {
    if (p == 2) throw std::invalid_argument(std::string(who) + ": p = 2 is not supported");
    if (!arith::is_prime64(p)) throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
}

Int pow_ui(unsigned long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

// a + b sqrt(M) modulo p^k.
struct ModQuad {
    Int a, b;
};

ModQuad mul(const ModQuad& x, const ModQuad& y, const Int& M, const Int& mod) {
    ModQuad z;
    z.a = (x.a * y.a + M * x.b * y.b) % mod;
    z.b = (x.a * y.b + x.b * y.a) % mod;
    return z;
}

ModQuad power_mod(const QuadInt& eps, unsigned long e, const Int& mod) {
    Int inv2 = (mod + 1) / 2;
    ModQuad base{eps.u() * inv2 % mod, eps.v() * inv2 % mod};
    if (base.a < 0) base.a += mod;
    if (base.b < 0) base.b += mod;
    ModQuad acc{1, 0};
    for (int bit = 63 - __builtin_clzl(e); bit >= 0; --bit) {
        acc = mul(acc, acc, eps.M(), mod);
        if ((e >> bit) & 1) acc = mul(acc, base, eps.M(), mod);
    }
    return acc;
}

// v_p(x) for x mod p^k, or k when x = 0 mod p^k.
unsigned val_mod(Int x, const Int& mod, unsigned p, unsigned k) {
    x %= mod;
    if (x < 0) x += mod;
    if (x == 0) return k;
    return arith::valuation(x, Int(p));
}

}  // namespace

VariantA VariantA::from_a_delta(const Int& a, int delta, int s) {
    if (a < 1 || (delta != 1 && delta != 2) || (s != 1 && s != -1))
        throw std::invalid_argument("VariantA: need a >= 1, delta in {1, 2}, s = +-1");
    return VariantA{a, -2 * delta * a * s};
}

fop::PolyFamily PRationalFamily::engine_family() const {
    fop::QuadraticFamily q;
    const Int p2 = pow_ui(p, 2);
    if (const auto* A = std::get_if<VariantA>(&variant)) {
        if (A->k < 1 || A->b == 0 || (4 * A->k) % A->b != 0)
            throw std::invalid_argument("variant A: need k >= 1 and b dividing 4k");
        q.primed = true;
        q.s = A->b < 0 ? 1 : -1;
        q.nu = abs(A->b);
        q.trace = fop::PowerTrace{A->k * p2, 1, 0};
    } else if (filter) {
        const auto& Bv = std::get<VariantB>(variant);
        q.primed = true;
        q.s = Bv.s;
        q.nu = 1;
        q.trace = fop::PowerTrace{p2 * Int(static_cast<unsigned long>(filter->q)), 1,
                                  p2 * Int(static_cast<unsigned long>(filter->t_q))};
    } else {
        const auto& Bv = std::get<VariantB>(variant);
        q.s = Bv.s;
        q.nu = 1;
        q.trace = fop::PowerTrace{p2, 1, Bv.t0};
    }
    return fop::PolyFamily(q);
}

Int PRationalFamily::radical(std::uint64_t t) const { return engine_family().value(t); }

QuadInt PRationalFamily::unit_of(const fop::FopRecord& rec) const {
    if (rec.degenerate()) throw std::invalid_argument("unit_of: degenerate record");
    const fop::PolyFamily fam = engine_family();
    const Int T = fam.trace(rec.t);
    if (const auto* A = std::get_if<VariantA>(&variant)) {
        const Int ab = abs(A->b);
        return QuadInt(rec.M, (4 * T * T + 2 * A->b) / ab, 4 * T * rec.r / ab);
    }
    if (filter) return QuadInt(rec.M, 2 * T, 2 * rec.r);
    return QuadInt(rec.M, T, rec.r);
}

std::optional<QuadInt> PRationalFamily::unit(std::uint64_t t) const {
    const Int m = radical(t);
    if (m <= 0) return std::nullopt;
    auto core = arith::squarefree_core(m);
    if (core.M < 2) return std::nullopt;
    return unit_of(fop::FopRecord{core.M, core.r, t, 0});
}

std::vector<PRationalFamily> build_families(unsigned p, Variant variant) {
    require_odd_prime(p, "build_families");
    std::vector<PRationalFamily> out;
    if (variant == Variant::A) {
        static const int forms[16][2] = {{1, -4}, {1, -2}, {1, -1}, {1, 1}, {1, 2},   {1, 4},
                                         {4, -2}, {4, 2},  {9, -6}, {9, 6}, {9, -12}, {9, 12},
                                         {25, -10}, {25, 10}, {25, -20}, {25, 20}};
        for (const auto& f : forms) {
            Int k;
            mpz_sqrt(k.get_mpz_t(), Int(f[0]).get_mpz_t());
            out.push_back({p, VariantA{k, f[1]}, std::nullopt});
        }
        return out;
    }
    const Int p2 = pow_ui(p, 2);
    for (int s : {-1, 1}) {
        out.push_back({p, VariantB{s, 0}, std::nullopt});
        Int a = (2 * s) % p2;
        if (a < 0) a += p2;
        for (const Int& t0 : arith::sqrt_mod_p2(a, Int(p))) out.push_back({p, VariantB{s, t0}, std::nullopt});
    }
    return out;
}

std::vector<PRationalFamily> build_families_t0_zero(unsigned p) {
    require_odd_prime(p, "build_families_t0_zero");
    return {{p, VariantB{-1, 0}, std::nullopt}, {p, VariantB{1, 0}, std::nullopt}};
}

unsigned regulator_valuation(const QuadInt& eps, unsigned p) {
    require_odd_prime(p, "regulator_valuation");
    const Int N = eps.norm();
    if (N != 1 && N != -1) throw std::invalid_argument("regulator_valuation: not a unit");
    if (eps.v() == 0) throw std::invalid_argument("regulator_valuation: torsion unit");
    const Int& M = eps.M();
    const bool ramified = mpz_divisible_ui_p(M.get_mpz_t(), p) != 0;
    unsigned long e;
    if (ramified) {
        e = p == 3 ? 6 : p - 1;
    } else {
        const unsigned f = arith::kronecker(M, Int(p)) == 1 ? 1 : 2;
        e = f == 1 ? p - 1 : static_cast<unsigned long>(p) * p - 1;
    }
    for (unsigned k = 3;; k *= 2) {
        const Int mod = pow_ui(p, k);
        ModQuad x = power_mod(eps, e, mod);
        const unsigned va = val_mod(x.a - 1, mod, p, k);
        const unsigned vb = val_mod(x.b, mod, p, k);
        if (!ramified) {
            const unsigned v = std::min(va, vb);
            if (v < k) return v - 1;
            continue;
        }
        // x has norm 1 and x = 1 mod the prime above p, so v(a - 1) = 1 + 2 v(b) and the
        // valuation at that prime is 1 + 2 v(b); b alone decides it.
        if (vb >= k) continue;
        long res;
        if (p > 3) {
            res = vb;
        } else {
            const bool minus3 = mpz_fdiv_ui(M.get_mpz_t(), 9) == 6;
            res = static_cast<long>(vb) - (minus3 ? 2 : 1);
        }
        (void)va;
        if (res < 0) throw std::logic_error("regulator_valuation: negative valuation");
        return static_cast<unsigned>(res);
    }
}

bool local_pth_power_test(const QuadInt& E, unsigned p) {
    if (E == QuadInt::one(E.M())) return true;
    return regulator_valuation(E, p) >= 1;
}

PowerException global_pth_power_exception(const QuadInt& E, unsigned p) {
    require_odd_prime(p, "global_pth_power_exception");
    UnitPower pp = primitive_power(E);
    return PowerException{pp.n, pp.n % p == 0, pp.base};
}

std::vector<ResidueChoice> residue_filter(unsigned p, std::uint64_t q, int s) {
    require_odd_prime(p, "residue_filter");
    if (!arith::is_prime64(q) || q % p != 1) throw std::invalid_argument("residue_filter: q must be a prime = 1 mod p");
    if (s != 1 && s != -1) throw std::invalid_argument("residue_filter: s must be -1 or 1");
    std::map<std::uint64_t, std::uint64_t> by_tq;
    const std::uint64_t p2q = static_cast<std::uint64_t>(p) * p % q;
    for (std::uint64_t c = 1; c < q; ++c) {
        if (arith::is_pth_power_mod_q(Int(static_cast<unsigned long>(c)), Int(p), Int(static_cast<unsigned long>(q))))
            continue;
        const std::uint64_t num = (arith::mulmod64(c, c, q) + q + s) % q;
        const std::uint64_t den = arith::mulmod64(2 * c % q, p2q, q);
        const std::uint64_t tq = arith::mulmod64(num, arith::invmod64(den, q), q);
        by_tq.emplace(tq, c);
    }
    std::vector<ResidueChoice> out;
    for (auto [tq, c] : by_tq) out.push_back({c, tq});
    return out;
}

std::vector<PRationalFamily> nonrational_families(unsigned p, std::uint64_t q) {
    std::vector<PRationalFamily> out;
    for (int s : {-1, 1}) {
        for (const auto& rc : residue_filter(p, q, s)) out.push_back({p, VariantB{s, 0}, Filter{q, rc.t_q, rc.c}});
    }
    return out;
}

RegulatorReport report(const std::vector<PRationalFamily>& families, const fop::FopRecord& rec) {
    const PRationalFamily& fam = families.at(rec.family);
    const QuadInt E = fam.unit_of(rec);
    const PowerException ex = global_pth_power_exception(E, fam.p);
    RegulatorReport rep{rec.M, rec.r, rec.t, rec.family, fam.p, 0, ex.n, ex.exception, false, false};
    rep.regulator_valuation = regulator_valuation(ex.eps, fam.p);
    rep.local_power = local_pth_power_test(E, fam.p);
    rep.w_flag = fam.p == 3 && mpz_fdiv_ui(rec.M.get_mpz_t(), 9) == 6;
    return rep;
}

fop::FopResult run_families(const std::vector<PRationalFamily>& families, std::uint64_t B,
                            const fop::FopOptions& options) {
    std::vector<fop::PolyFamily> engine;
    engine.reserve(families.size());
    for (const auto& f : families) engine.push_back(f.engine_family());
    return fop::run_fop_multi(engine, B, fop::DedupKey::radical, options);
}

NonrationalResult nonrational_list(unsigned p, std::uint64_t q, std::uint64_t B, bool certify,
                                   const fop::FopOptions& options) {
    const auto families = nonrational_families(p, q);
    NonrationalResult res{run_families(families, B, options), {}, {}, false};
    if (!certify) return res;
    for (std::size_t i = 0; i < res.run.size(); ++i) {
        const fop::FopRecord rec = res.run[i];
        if (rec.degenerate()) continue;
        RegulatorReport rep = report(families, rec);
        if (!rep.local_power || rep.exception) res.failures.push_back(rep);
        res.reports.push_back(std::move(rep));
    }
    res.certified = res.failures.empty();
    return res;
}

double mbpow_bound(double c, unsigned h, unsigned p, double B) {
    if (p == 0) throw std::invalid_argument("mbpow_bound: p must be positive");
    return std::exp((2.0 * std::log(c) + 2.0 * h * std::log(B)) / p);
}

double radical_root(const Int& M, unsigned p) {
    if (M < 1 || p == 0) throw std::invalid_argument("radical_root: need M >= 1 and p >= 1");
    long e2 = 0;
    const double mant = mpz_get_d_2exp(&e2, M.get_mpz_t());
    return std::exp((std::log(mant) + e2 * std::log(2.0)) / p);
}

}  // namespace quadfop::prational
