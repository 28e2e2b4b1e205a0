#include <map>
#include <tuple>

#include "doctest.h"
#include "oracles.hpp"
#include "quadfop/fop.hpp"

using namespace quadfop;
using namespace quadfop::fop;

namespace {

using Tm = std::function<__int128(std::uint64_t)>;

struct OracleRec {
    std::int64_t M;
    std::uint64_t r, t;
    std::size_t family;
};

// First occurrence by direct trial division; families are given by their m(t) formulas.
std::vector<OracleRec> oracle_fop(const std::vector<Tm>& ms, const std::vector<std::function<bool(std::uint64_t)>>& admit,
                                  std::uint64_t B, bool disc_key) {
    std::map<std::int64_t, OracleRec> first;
    for (std::uint64_t t = 1; t <= B; ++t) {
        for (std::size_t f = 0; f < ms.size(); ++f) {
            if (!admit[f](t)) continue;
            __int128 m = ms[f](t);
            std::int64_t M = 0;
            std::uint64_t r = 1;
            if (m != 0) {
                auto [c, rr] = oracle::trial_core(static_cast<std::uint64_t>(m < 0 ? -m : m));
                M = (m < 0 ? -1 : 1) * static_cast<std::int64_t>(c);
                r = rr;
            }
            std::int64_t key = M;
            if (disc_key) {
                std::int64_t mod4 = ((M % 4) + 4) % 4;
                key = mod4 == 1 ? M : 4 * M;
            }
            first.emplace(key, OracleRec{M, r, t, f});
        }
    }
    std::vector<OracleRec> out;
    for (auto& [k, rec] : first) out.push_back(rec);
    return out;
}

void check_same(const FopResult& run, const std::vector<OracleRec>& expect) {
    REQUIRE(run.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) {
        FopRecord rec = run[i];
        INFO("i = " << i << " M = " << expect[i].M);
        CHECK(rec.M == static_cast<long>(expect[i].M));
        CHECK(rec.r == static_cast<unsigned long>(expect[i].r));
        CHECK(rec.t == expect[i].t);
        CHECK(rec.family == expect[i].family);
    }
}

auto always = [](std::uint64_t) { return true; };

}  // namespace

TEST_CASE("t^2 - 1 at B = 10") {
    auto run = run_fop(primed_family(1), 10);
    std::vector<long> Ms, ts;
    for (std::size_t i = 0; i < run.size(); ++i) {
        Ms.push_back(run[i].M.get_si());
        ts.push_back(static_cast<long>(run[i].t));
    }
    CHECK(Ms == std::vector<long>{0, 2, 3, 5, 6, 7, 11, 15, 35});
    CHECK(ts == std::vector<long>{1, 3, 2, 9, 5, 8, 10, 4, 6});
    CHECK(run.stats().sweep == 10);
    CHECK(run.stats().gap == 1);
    CHECK(run[0].degenerate());
}

TEST_CASE("first occurrence matches the trial-division oracle") {
    const std::uint64_t B = 3000;
    SUBCASE("unit families, both signs") {
        for (int s : {-1, 1}) {
            auto run = run_fop(unit_family(s), B);
            check_same(run, oracle_fop({[s](std::uint64_t t) { return __int128(t) * t - 4 * s; }}, {always}, B, false));
        }
    }
    SUBCASE("norm family s = -1, nu = 15") {
        auto run = run_fop(norm_family(-1, 15), B);
        check_same(run, oracle_fop({[](std::uint64_t t) { return __int128(t) * t + 60; }}, {always}, B, false));
    }
    SUBCASE("norm family s = 1, nu = 210 has negative radicals") {
        auto run = run_fop(norm_family(1, 210), B);
        check_same(run, oracle_fop({[](std::uint64_t t) { return __int128(t) * t - 840; }}, {always}, B, false));
        CHECK(run[0].M < 0);
    }
    SUBCASE("linear trace with offset, sieve and plain paths agree") {
        QuadraticFamily q;
        q.s = -1;
        q.trace = PowerTrace{9, 1, 4};
        for (bool sieve : {true, false}) {
            FopOptions opt;
            opt.allow_sieve = sieve;
            auto run = run_fop(PolyFamily(q), B, DedupKey::radical, opt);
            check_same(run, oracle_fop({[](std::uint64_t t) { return __int128(9 * t + 4) * (9 * t + 4) + 4; }}, {always}, B,
                                       false));
        }
    }
    SUBCASE("square trace") {
        QuadraticFamily q;
        q.trace = PowerTrace{1, 2, 0};
        q.t_start = 3;
        auto run = run_fop(PolyFamily(q), 300);
        check_same(run, oracle_fop({[](std::uint64_t t) { return __int128(t) * t * t * t - 4; }},
                                   {[](std::uint64_t t) { return t >= 3; }}, 300, false));
    }
    SUBCASE("residue filter") {
        QuadraticFamily q;
        q.primed = true;
        q.s = -1;
        q.trace = PowerTrace{9, 1, 0};
        q.filter = ResidueFilter{7, {3, 4}};
        auto run = run_fop(PolyFamily(q), B);
        check_same(run, oracle_fop({[](std::uint64_t t) { return __int128(81) * t * t + 1; }},
                                   {[](std::uint64_t t) { return t % 7 == 3 || t % 7 == 4; }}, B, false));
        CHECK(run.stats().sweep == 2 * (B / 7) + (B % 7 >= 3) + (B % 7 >= 4));
    }
    SUBCASE("two families, discriminant key; ties go to the lower family") {
        std::vector<PolyFamily> fams{primed_family(1), primed_family(-1)};
        auto run = run_fop_multi(fams, B, DedupKey::discriminant);
        check_same(run, oracle_fop({[](std::uint64_t t) { return __int128(t) * t - 1; },
                                    [](std::uint64_t t) { return __int128(t) * t + 1; }},
                                   {always, always}, B, true));
    }
    SUBCASE("prime trace") {
        QuadraticFamily q;
        q.s = -1;
        q.trace = PrimeTrace{};
        auto primes = arith::first_primes(B);
        auto run = run_fop(PolyFamily(q), B);
        check_same(run, oracle_fop({[&](std::uint64_t t) { return __int128(primes[t - 1]) * primes[t - 1] + 4; }},
                                   {always}, B, false));
    }
}

TEST_CASE("general polynomial family uses the mpz path") {
    GeneralFamily g{IntPoly({Int(-3), Int(0), Int(0), Int(2)}), 1};  // 2t^3 - 3
    auto run = run_fop(PolyFamily(g), 500);
    auto expect = oracle_fop({[](std::uint64_t t) { return __int128(2) * t * t * t - 3; }}, {always}, 500, false);
    check_same(run, expect);
    CHECK(!record_element(run, run[run.size() - 1]));
}

TEST_CASE("worker count, chunking and range merges do not change the output") {
    std::vector<PolyFamily> fams{unit_family(-1), unit_family(1)};
    FopOptions one;
    one.workers = 1;
    auto ref = run_fop_multi(fams, 20000, DedupKey::radical, one);
    for (unsigned w : {2u, 3u}) {
        for (std::uint64_t chunk : {1000ull, 4097ull}) {
            FopOptions o;
            o.workers = w;
            o.chunk = chunk;
            auto run = run_fop_multi(fams, 20000, DedupKey::radical, o);
            REQUIRE(run.size() == ref.size());
            for (std::size_t i = 0; i < ref.size(); ++i) {
                CHECK(run[i].M == ref[i].M);
                CHECK(run[i].t == ref[i].t);
                CHECK(run[i].family == ref[i].family);
            }
        }
    }
    std::vector<FopResult> parts;
    parts.push_back(run_fop_range(fams, 1, 7000, DedupKey::radical));
    parts.push_back(run_fop_range(fams, 7001, 15000, DedupKey::radical));
    parts.push_back(run_fop_range(fams, 15001, 20000, DedupKey::radical));
    auto merged = merge_results(std::move(parts));
    REQUIRE(merged.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
        CHECK(merged[i].M == ref[i].M);
        CHECK(merged[i].t == ref[i].t);
    }
    CHECK(merged.stats().sweep == ref.stats().sweep);
    CHECK(merged.stats().gap == ref.stats().gap);
}

TEST_CASE("record elements have the family norm") {
    for (auto fam : {unit_family(-1), unit_family(1), norm_family(-1, 3), norm_family(1, 2), primed_family(-1)}) {
        auto run = run_fop(fam, 2000);
        const auto* q = fam.quadratic();
        for (const auto& rec : run.positive()) {
            auto a = record_element(run, rec);
            REQUIRE(a);
            CHECK(a->norm() == q->s * q->nu);
        }
    }
}

TEST_CASE("radicals never exceed the largest sweep value") {
    for (int s : {-1, 1}) {
        auto run = run_fop(unit_family(s), 50000);
        Int top = Int(50000) * 50000 - 4 * s;
        CHECK(run.stats().max_M <= top);
        CHECK(run.stats().count + run.stats().gap == 50000);
    }
}

TEST_CASE("count plus gap equals the nominal sweep; t_start is ignored by the sweep") {
    auto run = run_fop(unit_family(1, 3), 1000);
    CHECK(run.stats().sweep == 1000);
    CHECK(run.stats().evaluated == 998);
    CHECK(run.stats().count + run.stats().gap == run.stats().sweep);
    auto g = gap_stats(run);
    CHECK(g.count == run.size());
}

TEST_CASE("family validation") {
    QuadraticFamily q;
    q.s = 2;
    CHECK_THROWS_AS(run_fop(PolyFamily(q), 10), std::invalid_argument);
    QuadraticFamily f;
    f.filter = ResidueFilter{7, {8}};
    CHECK_THROWS_AS(run_fop(PolyFamily(f), 10), std::invalid_argument);
    CHECK_THROWS_AS(run_fop(unit_family(1), 0), std::invalid_argument);
}
