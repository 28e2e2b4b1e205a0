#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quadfop/fop.hpp"
#include "quadfop/int_poly.hpp"

namespace quadfop::mclaughlin {

// mcl_k(t) with polynomial solutions of U2^2 - mcl_k V2^2 = 4 N, N the norm of the base unit.
// The unit attached to t is E = (U2(t) + V2(t) sqrt(mcl_k(t)))/2.
// k = 1..5: base u + v sqrt m; k = 6..10: base (u + v sqrt m)/2 with u, v odd, m = 1 mod 4.
// Norm -1 bases are accepted for k = 1 and k = 6 only.
struct MclFamily {
    unsigned k;
    Int m, u, v;
    IntPoly mcl, U2, V2;
    int norm;  // N
};

// Throws std::invalid_argument for a bad base, a non-integral coefficient (k = 4, 9), or a
// failed identity check.
MclFamily make_mcl(unsigned k, const Int& m, const Int& u, const Int& v);

// U2^2 - mcl V2^2 - 4N, expanded; zero for a valid family.
IntPoly identity_defect(const MclFamily& f);

struct MclRecord {
    Int M;
    Int r;
    std::uint64_t t;
    bool valid;                      // E lies in the ring of integers of Q(sqrt M)
    std::optional<unsigned long> n;  // E = eps_M^n, empty when not computed
    bool exception() const { return n && *n > 1; }
};

struct MclOptions {
    // n is computed for the first n_cap records (in sorted order); certify lifts the cap.
    std::size_t n_cap = 1000;
    bool certify = false;
    fop::FopOptions fop;
};

struct MclResult {
    fop::FopResult run;
    std::vector<MclRecord> records;  // non-degenerate, in run order
    std::uint64_t invalid = 0;       // records whose E is not integral
};

MclResult fop_mcl(const MclFamily& family, std::uint64_t B, const MclOptions& options = {});

// E for one t; nullopt when mcl(t) is a square or not integral there.
std::optional<QuadInt> unit_at(const MclFamily& family, std::uint64_t t);

}  // namespace quadfop::mclaughlin
