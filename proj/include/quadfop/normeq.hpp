#pragma once

#include <optional>

#include "quadfop/fop.hpp"

namespace quadfop::normeq {

// alpha = (u + v sqrt M)/2 with u, v >= 1 and norm s*nu.
struct NormEqSolution {
    QuadInt alpha;
    int s;
    Int nu;
};

fop::FopResult fop_norm_solutions(int s, const Int& nu, std::uint64_t B, const fop::FopOptions& options = {});

// Solution carried by a non-degenerate record of fop_norm_solutions.
NormEqSolution solution_of(const fop::FopResult& run, const fop::FopRecord& rec);

// 4 nu ceil(sqrt M) + trace(eps_M).
Int default_trace_bound(const Int& M, const Int& nu);

// Ascending scan of u in [1, trace_bound] for (u^2 - 4 s nu)/M a nonzero square.
// Only u with u^2 = 4 s nu (mod M) are visited; the residues are found by direct search,
// so M must fit a machine word.
std::optional<NormEqSolution> min_trace_oracle(const Int& M, int s, const Int& nu,
                                               std::optional<Int> trace_bound = std::nullopt);

}  // namespace quadfop::normeq
