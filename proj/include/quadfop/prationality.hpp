#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "quadfop/fop.hpp"

namespace quadfop::prational {

// m(t) = A p^4 t^2 + b with A = k^2 and |b| dividing 4 k^2.
// The unit ((4X^2 + 2b)/|b| + (4X/|b|) sqrt m)/2, X = k p^2 t, has norm 1.
struct VariantA {
    Int k;
    Int b;
    // k = a and b = -2 delta a s.
    static VariantA from_a_delta(const Int& a, int delta, int s);
};

// T = t0 + p^2 t, m = T^2 - 4 s, unit (T + sqrt m)/2 of norm s.
struct VariantB {
    int s;
    Int t0;
};

struct Filter {
    std::uint64_t q;
    std::uint64_t t_q;
    std::uint64_t c;  // a witness non-p-th power mod q
};

struct PRationalFamily {
    unsigned p;
    std::variant<VariantA, VariantB> variant;
    std::optional<Filter> filter;

    fop::PolyFamily engine_family() const;
    // Radical polynomial value m(t).
    Int radical(std::uint64_t t) const;
    // Unit attached to t, in the field of the core of m(t); nullopt when m(t) is a square or not positive.
    std::optional<QuadInt> unit(std::uint64_t t) const;
    // Unit for an engine record of engine_family().
    QuadInt unit_of(const fop::FopRecord& rec) const;
};

enum class Variant { A, B };

// Variant A: the 16 forms of the reference program, in its order.
// Variant B: for s = -1 then s = 1, t0 = 0 followed by the roots of t0^2 = 2s (mod p^2).
std::vector<PRationalFamily> build_families(unsigned p, Variant variant);
// Variant B with t0 = 0 only, s = -1 then s = 1.
std::vector<PRationalFamily> build_families_t0_zero(unsigned p);

// v_p of the normalized regulator computed from the unit eps of Q(sqrt M); see the
// residue-degree formulas. Throws std::invalid_argument for p = 2 or a unit of another field.
unsigned regulator_valuation(const QuadInt& eps, unsigned p);

// E = 1, or regulator_valuation(E, p) >= 1.
bool local_pth_power_test(const QuadInt& E, unsigned p);

struct PowerException {
    unsigned long n;  // E = eps_M^n
    bool exception;   // p | n
    QuadInt eps;      // fundamental unit
};
PowerException global_pth_power_exception(const QuadInt& E, unsigned p);

struct ResidueChoice {
    std::uint64_t c;
    std::uint64_t t_q;
};
// One entry per distinct t_q (smallest witness c kept), sorted by t_q.
std::vector<ResidueChoice> residue_filter(unsigned p, std::uint64_t q, int s);

// Families p^4 (t_q + q x)^2 - s, x >= 1, for s = -1 then s = 1 and t_q ascending.
std::vector<PRationalFamily> nonrational_families(unsigned p, std::uint64_t q);

struct RegulatorReport {
    Int M;
    Int r;
    std::uint64_t t;
    std::size_t family;
    unsigned p;
    unsigned regulator_valuation;
    unsigned long unit_exponent_n;
    bool exception;
    bool local_power;  // local_pth_power_test on the record's unit
    // p = 3 and M = -3 (mod 9): the torsion group gets an extra factor not tracked here.
    bool w_flag;
};

// Report for one non-degenerate record of a run over families[rec.family].engine_family().
RegulatorReport report(const std::vector<PRationalFamily>& families, const fop::FopRecord& rec);

fop::FopResult run_families(const std::vector<PRationalFamily>& families, std::uint64_t B,
                            const fop::FopOptions& options = {});

struct NonrationalResult {
    fop::FopResult run;
    // Every non-degenerate record, in run order; filled only when certifying.
    std::vector<RegulatorReport> reports;
    // Records failing local_pth_power_test or flagged as exceptions; empty when certified.
    std::vector<RegulatorReport> failures;
    bool certified = false;
};
NonrationalResult nonrational_list(unsigned p, std::uint64_t q, std::uint64_t B, bool certify,
                                   const fop::FopOptions& options = {});

// (c^2 B^(2h))^(1/p).
double mbpow_bound(double c, unsigned h, unsigned p, double B);
// M^(1/p) for an observed maximal radical.
double radical_root(const Int& M, unsigned p);

}  // namespace quadfop::prational
