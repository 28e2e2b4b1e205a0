#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "quadfop/arith.hpp"

namespace quadfop {

// The element (u + v*sqrt(M))/2 of the ring of integers of Q(sqrt(M)).
// Invariants: u = v (mod 2); u, v both odd only when M = 1 (mod 4).
// M >= 2 is assumed square-free; that is the caller's contract (checking it would
// mean factoring every radical).
class QuadInt {
public:
    QuadInt(Int M, Int u, Int v);

    const Int& M() const { return M_; }
    const Int& u() const { return u_; }
    const Int& v() const { return v_; }
    const Int& trace() const { return u_; }
    Int norm() const;
    QuadInt conj() const { return QuadInt(M_, u_, -v_, Unchecked{}); }
    QuadInt operator-() const { return QuadInt(M_, -u_, -v_, Unchecked{}); }

    friend QuadInt operator*(const QuadInt& x, const QuadInt& y);
    friend bool operator==(const QuadInt& x, const QuadInt& y) {
        return x.M_ == y.M_ && x.u_ == y.u_ && x.v_ == y.v_;
    }

    // Sign of the real number x - c.
    int compare(const Int& c) const;
    // Natural logarithm of |x|, x != 0; accurate to double precision for huge coordinates.
    double log_abs() const;

    static QuadInt one(const Int& M) { return QuadInt(M, Int(2), Int(0), Unchecked{}); }

private:
    struct Unchecked {};
    QuadInt(Int M, Int u, Int v, Unchecked) : M_(std::move(M)), u_(std::move(u)), v_(std::move(v)) {}
    Int M_, u_, v_;
};

QuadInt pow(const QuadInt& x, unsigned long n);

struct FundUnit {
    QuadInt unit;  // u, v >= 1
    int S;         // norm of unit
};

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// M if M = 1 (mod 4), else 4M. Rejects M in {0, 1} and non-square-free M.
Int discriminant(const Int& M);
// Same mapping without the square-free check; also maps 0 -> 0 and 1 -> 1.
Int discriminant_unchecked(const Int& M);

inline constexpr std::uint64_t kDefaultCfBudget = 1000000;

// Continued fraction of sqrt(M) or (1 + sqrt(M))/2 up to the first return of Q to Q0.
FundUnit fundamental_unit(const Int& M, std::uint64_t budget = kDefaultCfBudget);

// Smallest n >= 1 with E = eps^n; E > 1 must be a unit of the same field.
unsigned long unit_power_decompose(const QuadInt& E, const FundUnit& eps);

// The unit eta > 1 with eta^d = E, if it lies in the field; E > 1 must be a unit.
std::optional<QuadInt> unit_root(const QuadInt& E, unsigned long d);

// E = base^n with n maximal; base is then the fundamental unit of the field.
// No continued fraction is needed, so this works for radicals with very long periods.
struct UnitPower {
    QuadInt base;
    unsigned long n;
};
UnitPower primitive_power(const QuadInt& E);

}  // namespace quadfop
