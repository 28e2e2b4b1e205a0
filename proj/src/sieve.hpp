#pragma once

#include <cstdint>
#include <vector>

namespace quadfop::fop::detail {

// Square-free cores of m(t) = (c t + c0)^2 - K over a window of t, for |m| < 2^62.
// Every prime up to the cube root of max |m| is sieved out by its roots mod p; the
// cofactor then has at most two prime factors and a square test settles it.
class LinearSieve {
public:
    LinearSieve(std::int64_t c, std::int64_t c0, std::int64_t K, std::uint64_t max_abs);

    // M[i], r[i] for t = lo + i; m = 0 gives (0, 1).
    void run(std::uint64_t lo, std::uint64_t hi, std::vector<std::int64_t>& M, std::vector<std::uint64_t>& r) const;

private:
    struct Entry {
        std::uint32_t p;
        std::uint32_t r1;
        std::uint32_t r2;
        std::uint8_t kind;  // 1: one residue, 2: two residues, 3: every t
    };
    std::int64_t c_, c0_, K_;
    std::vector<Entry> entries_;
};

}  // namespace quadfop::fop::detail
