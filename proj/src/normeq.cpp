#include "quadfop/normeq.hpp"

#include <algorithm>

namespace quadfop::normeq {

fop::FopResult fop_norm_solutions(int s, const Int& nu, std::uint64_t B, const fop::FopOptions& options) {
    return fop::run_fop(fop::norm_family(s, nu), B, fop::DedupKey::radical, options);
}

NormEqSolution solution_of(const fop::FopResult& run, const fop::FopRecord& rec) {
    auto a = fop::record_element(run, rec);
    if (!a) throw std::invalid_argument("solution_of: degenerate record");
    const auto* q = run.families().at(rec.family).quadratic();
    return NormEqSolution{*a, q->s, q->nu};
}

Int default_trace_bound(const Int& M, const Int& nu) {
    Int root = arith::isqrt(M);
    if (root * root != M) root += 1;
    return 4 * nu * root + fundamental_unit(M).unit.trace();
}

std::optional<NormEqSolution> min_trace_oracle(const Int& M, int s, const Int& nu, std::optional<Int> trace_bound) {
    if (M < 2 || !mpz_fits_ulong_p(M.get_mpz_t())) throw std::invalid_argument("min_trace_oracle: M out of range");
    if (s != 1 && s != -1) throw std::invalid_argument("min_trace_oracle: s must be -1 or 1");
    if (nu < 1) throw std::invalid_argument("min_trace_oracle: nu must be positive");
    const Int bound = trace_bound ? *trace_bound : default_trace_bound(M, nu);
    const unsigned long m = M.get_ui();
    const Int target = 4 * s * nu;
    Int target_mod;
    mpz_fdiv_r_ui(target_mod.get_mpz_t(), target.get_mpz_t(), m);
    std::vector<unsigned long> residues;
    for (unsigned long x = 0; x < m; ++x) {
        if ((static_cast<unsigned __int128>(x) * x) % m == target_mod.get_ui()) residues.push_back(x);
    }
    if (residues.empty()) return std::nullopt;
    // Machine-word scan when u^2 + 4 nu fits comfortably.
    if (bound < (Int(1) << 40) && abs(target) < (Int(1) << 40)) {
        using u128 = unsigned __int128;
        const std::int64_t tgt = target.get_si();
        const std::uint64_t ub = bound.get_ui();
        for (std::uint64_t base = 0; base <= ub; base += m) {
            for (unsigned long rho : residues) {
                const std::uint64_t u = base + rho;
                if (u < 1) continue;
                if (u > ub) return std::nullopt;
                const __int128 w = static_cast<__int128>(static_cast<u128>(u) * u) - tgt;
                if (w <= 0) continue;
                const auto q = static_cast<std::uint64_t>(static_cast<u128>(w) / m);
                const std::uint64_t v = arith::isqrt64(q);
                if (v * v != q) continue;
                return NormEqSolution{QuadInt(M, Int(static_cast<unsigned long>(u)), Int(static_cast<unsigned long>(v))),
                                      s, nu};
            }
        }
        return std::nullopt;
    }
    Int u, w, v;
    for (Int base = 0; base <= bound; base += m) {
        for (unsigned long rho : residues) {
            u = base + rho;
            if (u < 1) continue;
            if (u > bound) return std::nullopt;
            w = u * u - target;
            if (w <= 0) continue;
            mpz_divexact_ui(w.get_mpz_t(), w.get_mpz_t(), m);
            if (!arith::is_square(w, &v)) continue;
            return NormEqSolution{QuadInt(M, u, v), s, nu};
        }
    }
    return std::nullopt;
}

}  // namespace quadfop::normeq
