#include "quadfop/int_poly.hpp"

#include <stdexcept>

namespace quadfop {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

IntPoly IntPoly::monomial(const Int& c, unsigned degree) {
    std::vector<Int> v(degree + 1, Int(0));
    v[degree] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPoly::operator()(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const Int& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(out));
}

bool IntPoly::divisible_by(const Int& d) const {
    for (const auto& a : coeffs_)
        if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) return false;
    return true;
}

IntPoly IntPoly::divexact(const Int& d) const {
    if (d == 0 || !divisible_by(d)) throw std::domain_error("IntPoly::divexact: coefficient not divisible");
    std::vector<Int> out = coeffs_;
    for (auto& a : out) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return IntPoly(std::move(out));
}

IntPoly IntPoly::compose(const IntPoly& inner) const {
    IntPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        Int a = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        bool unit = a == 1 && i > 0;
        if (!unit) out += a.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

IntPoly pow(const IntPoly& base, unsigned e) {
    IntPoly r = IntPoly::constant(Int(1));
    for (unsigned i = 0; i < e; ++i) r = r * base;
    return r;
}

}  // namespace quadfop
