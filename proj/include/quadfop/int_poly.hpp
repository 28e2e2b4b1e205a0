#pragma once

#include <string>
#include <vector>

#include "quadfop/arith.hpp"

namespace quadfop {

// Dense univariate polynomial over Z; coeffs[i] multiplies x^i, no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::vector<Int> coeffs);
    static IntPoly constant(const Int& c);
    static IntPoly monomial(const Int& c, unsigned degree);
    static IntPoly x() { return monomial(Int(1), 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
    Int leading() const { return coeffs_.empty() ? Int(0) : coeffs_.back(); }

    Int operator()(const Int& x) const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const Int& c);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const Int& c) { return a *= c; }
    friend IntPoly operator*(const Int& c, IntPoly a) { return a *= c; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    // Exact division of every coefficient; throws when some coefficient is not divisible.
    IntPoly divexact(const Int& d) const;
    bool divisible_by(const Int& d) const;

    // Substitutes a polynomial for x.
    IntPoly compose(const IntPoly& inner) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Int> coeffs_;
};

IntPoly pow(const IntPoly& base, unsigned e);

}  // namespace quadfop
