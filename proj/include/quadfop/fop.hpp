#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quadfop/arith.hpp"
#include "quadfop/int_poly.hpp"
#include "quadfop/quadfield.hpp"

namespace quadfop::fop {

enum class DedupKey { radical, discriminant };

// T(t) = c * t^h + c0, c >= 1, h >= 1.
struct PowerTrace {
    Int c = 1;
    unsigned h = 1;
    Int c0 = 0;
};

// T(t) = the t-th prime.
struct PrimeTrace {};

struct ResidueFilter {
    std::uint64_t modulus = 0;
    std::vector<std::uint64_t> residues;
};

// m(t) = T(t)^2 - 4 s nu, or T(t)^2 - s nu when primed.
struct QuadraticFamily {
    int s = 1;
    Int nu = 1;
    bool primed = false;
    std::variant<PowerTrace, PrimeTrace> trace = PowerTrace{};
    std::optional<ResidueFilter> filter;
    std::uint64_t t_start = 1;
};

// m(t) given by an arbitrary integer polynomial; used by the McLaughlin families.
struct GeneralFamily {
    IntPoly m;
    std::uint64_t t_start = 1;
};

struct PolyFamily {
    std::variant<QuadraticFamily, GeneralFamily> kind;
    std::string label;

    PolyFamily(QuadraticFamily q, std::string label = {}) : kind(std::move(q)), label(std::move(label)) {}
    PolyFamily(GeneralFamily g, std::string label = {}) : kind(std::move(g)), label(std::move(label)) {}

    const QuadraticFamily* quadratic() const { return std::get_if<QuadraticFamily>(&kind); }
    std::uint64_t t_start() const;
    bool admits(std::uint64_t t) const;
    // Trace T(t); quadratic families only.
    Int trace(std::uint64_t t) const;
    Int value(std::uint64_t t) const;
    // Throws std::invalid_argument when the family breaks its invariants.
    void validate() const;
    std::string describe() const;
};

// m_s(t) = t^2 - 4 s, swept from t_start.
PolyFamily unit_family(int s, std::uint64_t t_start = 1);
// m(t) = t^2 - 4 s nu.
PolyFamily norm_family(int s, const Int& nu);
// m'(t) = t^2 - s nu.
PolyFamily primed_family(int s, const Int& nu = 1);

struct FopRecord {
    Int M;
    Int r;
    std::uint64_t t = 0;
    std::size_t family = 0;
    bool degenerate() const { return M < 2; }
};

struct FopStats {
    // Nominal sweep: admitted t in [1, B] summed over families, ignoring t_start.
    std::uint64_t sweep = 0;
    std::uint64_t evaluated = 0;
    std::uint64_t count = 0;
    std::uint64_t gap = 0;
    Int max_M = 0;
};

// Which record survives among equal keys: smallest (t, family), or smallest (family, t).
enum class FirstOrder { t_major, family_major };

struct FopOptions {
    unsigned workers = 0;  // 0: QUADFOP_WORKERS or hardware concurrency
    std::uint64_t chunk = 1 << 16;
    bool allow_sieve = true;
    FirstOrder order = FirstOrder::t_major;
    std::function<void(std::uint64_t done, std::uint64_t total)> progress;
};

unsigned default_workers();

class FopResult {
public:
    std::size_t size() const { return small_mode_ ? small_.size() : big_.size(); }
    bool empty() const { return size() == 0; }
    FopRecord operator[](std::size_t i) const;
    Int key(std::size_t i) const;
    const FopStats& stats() const { return stats_; }
    DedupKey dedup() const { return dedup_; }
    FirstOrder order() const { return order_; }
    std::uint64_t bound() const { return bound_; }
    const std::vector<PolyFamily>& families() const { return families_; }
    // Records with M >= 2 only.
    std::vector<FopRecord> positive() const;

    // Internal compact form, public for the sweep implementation.
    struct Small {
        std::int64_t M;
        std::uint64_t r;
        std::uint64_t t;
        std::uint32_t family;
    };

private:
    friend FopResult run_fop_range(const std::vector<PolyFamily>&, std::uint64_t, std::uint64_t, DedupKey,
                                   const FopOptions&);
    friend FopResult merge_results(std::vector<FopResult>);
    void finish(std::uint64_t B);

    bool small_mode_ = true;
    std::vector<Small> small_;
    std::vector<FopRecord> big_;
    FopStats stats_;
    DedupKey dedup_ = DedupKey::radical;
    FirstOrder order_ = FirstOrder::t_major;
    std::uint64_t bound_ = 0;
    std::vector<PolyFamily> families_;
};

FopResult run_fop(const PolyFamily& family, std::uint64_t B, DedupKey key = DedupKey::radical,
                  const FopOptions& options = {});
// Families are iterated inside the t loop: ties in t go to the lower family index.
FopResult run_fop_multi(const std::vector<PolyFamily>& families, std::uint64_t B,
                        DedupKey key = DedupKey::radical, const FopOptions& options = {});
// Sweep of t in [t_lo, t_hi] only; merge_results combines disjoint ranges.
FopResult run_fop_range(const std::vector<PolyFamily>& families, std::uint64_t t_lo, std::uint64_t t_hi,
                        DedupKey key, const FopOptions& options = {});
FopResult merge_results(std::vector<FopResult> parts);

struct GapStats {
    std::uint64_t count;
    std::uint64_t gap;
    double exponent;  // log(gap) / log(B), 0 when gap or B is at most 1
};
GapStats gap_stats(const FopResult& run);

// The element (T + r sqrt M)/2 (doubled for primed families) of norm s*nu.
// Empty for degenerate records.
std::optional<QuadInt> record_element(const FopResult& run, const FopRecord& rec);

}  // namespace quadfop::fop
