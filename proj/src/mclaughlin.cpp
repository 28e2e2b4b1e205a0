#include "quadfop/mclaughlin.hpp"

#include <stdexcept>

namespace quadfop::mclaughlin {

namespace {

IntPoly C(const Int& c) { return IntPoly::constant(c); }
IntPoly M1(const Int& c, unsigned d) { return IntPoly::monomial(c, d); }

Int exact_div(const Int& a, const Int& b, unsigned k) {
    if (b == 0 || a % b != 0)
        throw std::invalid_argument("make_mcl: coefficient not integral for k = " + std::to_string(k));
    return a / b;
}

}  // namespace

MclFamily make_mcl(unsigned k, const Int& m, const Int& u, const Int& v) {
    if (k < 1 || k > 10) throw std::invalid_argument("make_mcl: k must be in 1..10");
    if (m < 2 || arith::squarefree_core(m).r != 1) throw std::invalid_argument("make_mcl: m must be square-free >= 2");
    if (u < 1 || v < 1) throw std::invalid_argument("make_mcl: u, v must be positive");
    MclFamily f{k, m, u, v, {}, {}, {}, 0};
    const Int n = u * u - m * v * v;
    const bool half = k >= 6;
    if (half) {
        if (mpz_fdiv_ui(m.get_mpz_t(), 4) != 1 || mpz_even_p(u.get_mpz_t()) || mpz_even_p(v.get_mpz_t()))
            throw std::invalid_argument("make_mcl: k >= 6 needs m = 1 mod 4 and u, v odd");
        if (n != 4 && n != -4) throw std::invalid_argument("make_mcl: (u + v sqrt m)/2 is not a unit");
        f.norm = n == 4 ? 1 : -1;
    } else {
        if (n != 1 && n != -1) throw std::invalid_argument("make_mcl: u + v sqrt m is not a unit");
        f.norm = n.get_si();
    }
    if (f.norm == -1 && k != 1 && k != 6) throw std::invalid_argument("make_mcl: norm -1 base only for k = 1, 6");

    const Int v2 = v * v, v3 = v2 * v, v4 = v2 * v2, v6 = v3 * v3;
    IntPoly mcl, U, V;  // U, V as displayed; doubled below for k <= 5
    switch (k) {
        case 1:
        case 6:
            mcl = M1(v2, 2) + M1(2 * u, 1) + C(m);
            U = M1(v2, 1) + C(u);
            V = C(v);
            break;
        case 2:
        case 3:
        case 7:
        case 8: {
            const Int w = u + (k == 2 ? -1 : k == 3 ? 1 : k == 7 ? -2 : 2);
            mcl = (w * w) * (M1(v2, 2) + M1(Int(2), 1)) + C(m);
            U = w * (M1(v4, 2) + M1(2 * v2, 1)) + C(u);
            V = M1(v3, 1) + C(v);
            break;
        }
        case 4:
        case 9: {
            const long o = k == 4 ? 1 : 2;
            const Int w = u + o, d = u - o;
            mcl = M1(w * w * v2, 2) + M1(2 * w * d, 1) + C(m);
            U = M1(exact_div(w * w * v4, d, k), 2) + M1(2 * w * v2, 1) + C(u);
            V = M1(exact_div(w * v3, d, k), 1) + C(v);
            break;
        }
        case 5:
        case 10: {
            const Int w = u - (k == 5 ? 1 : 2);
            const Int lin = k == 5 ? Int(2 * (u - 1) * (2 * u - 1)) : Int(4 * (u - 2) * (u - 1));
            mcl = (w * w) * (M1(v6, 4) + M1(4 * v4, 3) + M1(6 * v2, 2)) + M1(lin, 1) + C(m);
            U = w * (M1(v6, 3) + M1(3 * v4, 2) + M1(3 * v2, 1)) + C(u);
            V = M1(v3, 1) + C(v);
            break;
        }
    }
    f.mcl = mcl;
    f.U2 = half ? U : U * Int(2);
    f.V2 = half ? V : V * Int(2);
    if (!identity_defect(f).is_zero()) throw std::invalid_argument("make_mcl: identity U^2 - mcl V^2 = N fails");
    return f;
}

IntPoly identity_defect(const MclFamily& f) {
    return f.U2 * f.U2 - f.mcl * f.V2 * f.V2 - C(Int(4 * f.norm));
}

std::optional<QuadInt> unit_at(const MclFamily& family, std::uint64_t t) {
    const Int T(static_cast<unsigned long>(t));
    const Int mt = family.mcl(T);
    if (mt <= 0) return std::nullopt;
    auto core = arith::squarefree_core(mt);
    if (core.M < 2) return std::nullopt;
    const Int u = family.U2(T), v = family.V2(T) * core.r;
    if (mpz_even_p(u.get_mpz_t()) != mpz_even_p(v.get_mpz_t())) return std::nullopt;
    if (mpz_odd_p(u.get_mpz_t()) && mpz_fdiv_ui(core.M.get_mpz_t(), 4) != 1) return std::nullopt;
    return QuadInt(core.M, u, v);
}

MclResult fop_mcl(const MclFamily& family, std::uint64_t B, const MclOptions& options) {
    fop::PolyFamily fam(fop::GeneralFamily{family.mcl, 1}, "mcl" + std::to_string(family.k));
    MclResult res{fop::run_fop(fam, B, fop::DedupKey::radical, options.fop), {}, 0};
    for (const auto& rec : res.run.positive()) {
        MclRecord out{rec.M, rec.r, rec.t, false, std::nullopt};
        const Int T(static_cast<unsigned long>(rec.t));
        const Int u = family.U2(T), v = family.V2(T) * rec.r;
        out.valid = mpz_even_p(u.get_mpz_t()) == mpz_even_p(v.get_mpz_t()) &&
                    (mpz_even_p(u.get_mpz_t()) || mpz_fdiv_ui(rec.M.get_mpz_t(), 4) == 1);
        if (!out.valid) {
            ++res.invalid;
        } else if (options.certify || res.records.size() < options.n_cap) {
            QuadInt E(rec.M, u, v);
            if (E.norm() != family.norm) throw std::logic_error("fop_mcl: unit norm mismatch");
            out.n = primitive_power(E).n;
        }
        res.records.push_back(std::move(out));
    }
    return res;
}

}  // namespace quadfop::mclaughlin
