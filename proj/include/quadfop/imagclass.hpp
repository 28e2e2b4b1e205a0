#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quadfop/fop.hpp"
#include "quadfop/int_poly.hpp"

namespace quadfop::imagclass {

// Number of reduced forms (a, b, c), b^2 - 4ac = D, |b| <= a <= c, b >= 0 when |b| = a or a = c.
// D must be a negative fundamental discriminant with |D| < 2^62. Runs in O(sqrt|D|).
std::uint64_t class_number_imag(std::int64_t D);

// Discriminant of Q(sqrt(-3M)).
std::int64_t mirror_discriminant(const Int& M);

struct ImagClassReport {
    Int M;
    Int r;
    std::uint64_t t;
    std::size_t family;
    std::int64_t D_neg = 0;  // 0 when -3M exceeds 64 bits
    std::optional<std::uint64_t> h;  // empty above the class-number limit
    unsigned v3 = 0;
    unsigned long n = 0;     // E = eps_M^n
    bool exception = false;  // 3 | n
};

struct CubicOptions {
    // Class numbers are computed for M <= h_limit only.
    Int h_limit = Int(1) << 40;
    // Family-major first occurrence by default: it is the selection that matches the
    // reference outputs (M = 2 is kept from t0 = 4 with n = 15, not from t0 = 5 with n = 3).
    fop::FopOptions fop = family_major();

    static fop::FopOptions family_major() {
        fop::FopOptions o;
        o.order = fop::FirstOrder::family_major;
        return o;
    }
};

struct CubicResult {
    fop::FopResult run;
    std::vector<ImagClassReport> reports;  // non-degenerate records, in run order
};

// Unfiltered: (t0 + 9t)^2 + 4 for t0 in t0_set (subset of {0, 4, 5}), units of norm -1.
// Filtered: the four progressions 81(t_q + 7x)^2 - s.
CubicResult cubic_pipeline(std::uint64_t B, const std::vector<unsigned>& t0_set, bool filtered,
                           const CubicOptions& options = {});

// Coefficients of the degree p - 1 polynomial in x, each a polynomial in M:
// result[k] is the coefficient of x^k.
std::vector<IntPoly> mirror_polynomial_symbolic(unsigned p);
// The same polynomial with M substituted.
IntPoly mirror_defining_polynomial(unsigned p, const Int& M);
// Minimal polynomial of 2 cos(2 pi / p).
IntPoly cos_minimal_polynomial(unsigned p);

}  // namespace quadfop::imagclass
