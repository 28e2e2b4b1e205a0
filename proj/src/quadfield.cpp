#include "quadfop/quadfield.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace quadfop {

namespace {

bool odd(const Int& x) { return mpz_odd_p(x.get_mpz_t()); }

double log_abs_int(const Int& x) {
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace

QuadInt::QuadInt(Int M, Int u, Int v) : M_(std::move(M)), u_(std::move(u)), v_(std::move(v)) {
    if (M_ < 2) throw std::invalid_argument("QuadInt: radical must be at least 2");
    if (odd(u_) != odd(v_)) throw std::invalid_argument("QuadInt: u and v must have the same parity");
    if (odd(u_)) {
        Int r = M_ % 4;
        if (r != 1) throw std::invalid_argument("QuadInt: odd coordinates need M = 1 mod 4");
    }
}

Int QuadInt::norm() const {
    Int n = u_ * u_ - M_ * v_ * v_;
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), 4);
    return n;
}

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    if (x.M_ != y.M_) throw std::invalid_argument("QuadInt: mixed radicals");
    Int u = x.u_ * y.u_ + x.M_ * x.v_ * y.v_;
    Int v = x.u_ * y.v_ + x.v_ * y.u_;
    mpz_divexact_ui(u.get_mpz_t(), u.get_mpz_t(), 2);
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 2);
    return QuadInt(x.M_, std::move(u), std::move(v), QuadInt::Unchecked{});
}

int QuadInt::compare(const Int& c) const {
    // sign of (u - 2c) + v*sqrt(M)
    Int a = u_ - 2 * c;
    int sa = sgn(a), sv = sgn(v_);
    if (sv == 0) return sa;
    if (sa == 0) return sv;
    if (sa == sv) return sa;
    Int lhs = a * a, rhs = M_ * v_ * v_;
    int cmp = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
    return cmp * sa;
}

double QuadInt::log_abs() const {
    if (v_ == 0) return log_abs_int(u_) - std::log(2.0);
    if (u_ == 0) return log_abs_int(v_) + 0.5 * log_abs_int(M_) - std::log(2.0);
    double lu = log_abs_int(u_);
    double lv = log_abs_int(v_) + 0.5 * log_abs_int(M_);
    double hi = std::max(lu, lv), lo = std::min(lu, lv);
    double ratio = std::exp(lo - hi);
    if (sgn(u_) == sgn(v_)) return hi + std::log1p(ratio) - std::log(2.0);
    // Cancellation: |u + v sqrt M| = |u^2 - M v^2| / |u - v sqrt M|.
    Int n = u_ * u_ - M_ * v_ * v_;
    if (n == 0) throw std::domain_error("QuadInt::log_abs: zero element");
    return log_abs_int(n) - (hi + std::log1p(ratio)) - std::log(2.0);
}

QuadInt pow(const QuadInt& x, unsigned long n) {
    QuadInt acc = QuadInt::one(x.M());
    QuadInt base = x;
    while (n) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

Int discriminant_unchecked(const Int& M) {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), M.get_mpz_t(), 4);
    return r == 1 ? M : Int(4 * M);
}

Int discriminant(const Int& M) {
    if (M == 0 || M == 1) throw std::invalid_argument("discriminant: degenerate radical");
    if (arith::squarefree_core(M).M != M) throw std::invalid_argument("discriminant: radical is not square-free");
    return discriminant_unchecked(M);
}

FundUnit fundamental_unit(const Int& M, std::uint64_t budget) {
    if (M < 2) throw std::invalid_argument("fundamental_unit: M must be at least 2");
    Int root = arith::isqrt(M);
    if (root * root == M) throw std::invalid_argument("fundamental_unit: M is a square");
    const bool half = Int(M % 4) == 1;
    const Int P0 = half ? 1 : 0;
    const Int Q0 = half ? 2 : 1;
    Int P = P0, Q = Q0;
    Int A_prev = 0, A = 1, B_prev = 1, B = 0;  // A_{-2}, A_{-1}, B_{-2}, B_{-1}
    Int a, t;
    for (std::uint64_t i = 0; i < budget; ++i) {
        a = (P + root) / Q;
        t = a * A + A_prev;
        A_prev = A;
        A = t;
        t = a * B + B_prev;
        B_prev = B;
        B = t;
        P = a * Q - P;
        Q = (M - P * P) / Q;
        if (Q == Q0) {
            // G^2 - M B^2 = (-1)^(i+1) Q0^2 with G = Q0 A - P0 B.
            Int G = Q0 * A - P0 * B;
            int S = (i % 2 == 0) ? -1 : 1;
            if (half) return FundUnit{QuadInt(M, G, B), S};
            return FundUnit{QuadInt(M, 2 * G, 2 * B), S};
        }
    }
    throw BudgetError("fundamental_unit: continued fraction budget exceeded for M = " + M.get_str());
}

unsigned long unit_power_decompose(const QuadInt& E, const FundUnit& eps) {
    if (E.M() != eps.unit.M()) throw std::invalid_argument("unit_power_decompose: different fields");
    if (E.compare(Int(1)) <= 0) throw std::invalid_argument("unit_power_decompose: E must exceed 1");
    Int n = E.norm();
    if (n != 1 && n != -1) throw std::invalid_argument("unit_power_decompose: E is not a unit");
    double ratio = E.log_abs() / eps.unit.log_abs();
    auto guess = static_cast<unsigned long>(std::max(1.0, std::llround(ratio) * 1.0));
    QuadInt p = pow(eps.unit, guess);
    if (p == E) return guess;
    // The estimate is exact well beyond double range; still, probe the neighbours.
    QuadInt below = guess > 1 ? pow(eps.unit, guess - 1) : QuadInt::one(E.M());
    if (guess > 1 && below == E) return guess - 1;
    if (p * eps.unit == E) return guess + 1;
    throw std::logic_error("unit_power_decompose: E is not a power of the fundamental unit");
}

}  // namespace quadfop

namespace quadfop {

namespace {

void require_unit_above_one(const QuadInt& E, const char* who) {
    if (E.compare(Int(1)) <= 0) throw std::invalid_argument(std::string(who) + ": E must exceed 1");
    Int n = E.norm();
    if (n != 1 && n != -1) throw std::invalid_argument(std::string(who) + ": E is not a unit");
}

}  // namespace

std::optional<QuadInt> unit_root(const QuadInt& E, unsigned long d) {
    require_unit_above_one(E, "unit_root");
    if (d == 0) throw std::invalid_argument("unit_root: d must be positive");
    if (d == 1) return E;
    const Int N = E.norm();
    if (d % 2 == 0 && N != 1) return std::nullopt;
    const Int& M = E.M();
    constexpr unsigned long s = 64;
    // E * 2^s, then eta * 2^s = (E * 2^(s d))^(1/d).
    Int scaled, tmp = E.v() * E.v() * M;
    mpz_mul_2exp(tmp.get_mpz_t(), tmp.get_mpz_t(), 2 * s);
    mpz_sqrt(tmp.get_mpz_t(), tmp.get_mpz_t());
    scaled = E.u();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), s);
    scaled += tmp;
    mpz_fdiv_q_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 1);
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), s * (d - 1));
    Int X;
    mpz_root(X.get_mpz_t(), scaled.get_mpz_t(), d);
    if (X <= 0) return std::nullopt;
    Int one_scaled = 1;
    mpz_mul_2exp(one_scaled.get_mpz_t(), one_scaled.get_mpz_t(), 2 * s);
    const int signs[2] = {1, -1};
    for (int eta_norm : signs) {
        if (d % 2 == 1 && eta_norm != N) continue;
        // trace(eta) = eta + norm(eta)/eta
        Int tr = X + eta_norm * (one_scaled / X);
        mpz_fdiv_q_2exp(tr.get_mpz_t(), tr.get_mpz_t(), s - 1);
        tr += 1;
        mpz_fdiv_q_2exp(tr.get_mpz_t(), tr.get_mpz_t(), 1);
        for (int delta = -1; delta <= 1; ++delta) {
            Int u = tr + delta;
            if (u < 1) continue;
            Int w2 = u * u - 4 * eta_norm;
            if (w2 <= 0 || !mpz_divisible_p(w2.get_mpz_t(), M.get_mpz_t())) continue;
            w2 /= M;
            Int w;
            if (!arith::is_square(w2, &w)) continue;
            if (mpz_even_p(u.get_mpz_t()) != mpz_even_p(w.get_mpz_t())) continue;
            if (mpz_odd_p(u.get_mpz_t()) && mpz_fdiv_ui(M.get_mpz_t(), 4) != 1) continue;
            QuadInt eta(M, u, w);
            if (pow(eta, d) == E) return eta;
        }
    }
    return std::nullopt;
}

UnitPower primitive_power(const QuadInt& E) {
    require_unit_above_one(E, "primitive_power");
    // The smallest unit above 1 of any real quadratic field is (1 + sqrt 5)/2.
    const double log_phi = std::log((1.0 + std::sqrt(5.0)) / 2.0);
    UnitPower res{E, 1};
    for (;;) {
        auto dmax = static_cast<unsigned long>(res.base.log_abs() / log_phi + 1.0);
        bool reduced = false;
        for (std::uint32_t l : arith::primes_up_to(static_cast<std::uint32_t>(std::max(2ul, dmax)))) {
            if (auto root = unit_root(res.base, l)) {
                res.base = *root;
                res.n *= l;
                reduced = true;
                break;
            }
        }
        if (!reduced) return res;
    }
}

}  // namespace quadfop
