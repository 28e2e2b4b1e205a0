#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "quadfop/mclaughlin.hpp"

using namespace quadfop;
using namespace quadfop::mclaughlin;

namespace {

Int ipow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Int evaluate(const Int& c, unsigned e, const Int& t) { return c * ipow(t, e); }

// Smallest n with eps^n = E, by repeated multiplication.
unsigned long naive_power(const QuadInt& E, const QuadInt& eps) {
    QuadInt x = eps;
    for (unsigned long n = 1; n < 200; ++n) {
        if (x == E) return n;
        x = x * eps;
    }
    return 0;
}

}  // namespace

TEST_CASE("k = 1 family from 3 + 2 sqrt 2") {
    auto f = make_mcl(1, Int(2), Int(3), Int(2));
    CHECK(f.mcl == IntPoly({Int(2), Int(6), Int(4)}));
    CHECK(f.norm == 1);
    CHECK(identity_defect(f).is_zero());
    // mcl(1) = 12 = 3 * 2^2, E = 7 + 2 sqrt 12 = 7 + 4 sqrt 3 = (2 + sqrt 3)^2.
    auto E = unit_at(f, 1);
    REQUIRE(E);
    CHECK(*E == QuadInt(Int(3), Int(14), Int(8)));
    CHECK(primitive_power(*E).n == 2);
}

TEST_CASE("base validation") {
    CHECK_THROWS_AS(make_mcl(0, Int(2), Int(3), Int(2)), std::invalid_argument);
    CHECK_THROWS_AS(make_mcl(11, Int(2), Int(3), Int(2)), std::invalid_argument);
    CHECK_THROWS_AS(make_mcl(1, Int(8), Int(3), Int(1)), std::invalid_argument);
    CHECK_THROWS_AS(make_mcl(1, Int(2), Int(3), Int(1)), std::invalid_argument);
    // 1 + sqrt 2 has norm -1: fine for k = 1, rejected elsewhere.
    CHECK_NOTHROW(make_mcl(1, Int(2), Int(1), Int(1)));
    for (unsigned k : {2u, 3u, 4u, 5u}) CHECK_THROWS_AS(make_mcl(k, Int(2), Int(1), Int(1)), std::invalid_argument);
    // (1 + sqrt 5)/2: norm -1, half coordinates.
    CHECK_NOTHROW(make_mcl(6, Int(5), Int(1), Int(1)));
    CHECK_THROWS_AS(make_mcl(7, Int(5), Int(1), Int(1)), std::invalid_argument);
    CHECK_THROWS_AS(make_mcl(6, Int(2), Int(3), Int(2)), std::invalid_argument);
    CHECK_THROWS_AS(make_mcl(1, Int(5), Int(1), Int(1)), std::invalid_argument);
    // k = 4 with 2 + sqrt 3: u - 1 = 1 divides everything; with 8 + 3 sqrt 7: 7 does not divide 81 * 81.
    CHECK_NOTHROW(make_mcl(4, Int(3), Int(2), Int(1)));
    CHECK_THROWS_AS(make_mcl(4, Int(7), Int(8), Int(3)), std::invalid_argument);
}

TEST_CASE("displayed polynomials for the k = 10 example") {
    auto f = make_mcl(10, Int(301), Int(22745), Int(1311));
    const Int w = 22743, v = 1311;
    CHECK(f.mcl.coeff(4) == w * w * ipow(v, 6));
    CHECK(f.mcl.coeff(3) == 4 * w * w * ipow(v, 4));
    CHECK(f.mcl.coeff(2) == 6 * w * w * v * v);
    CHECK(f.mcl.coeff(1) == 4 * w * Int(22744));
    CHECK(f.mcl.coeff(0) == 301);
    CHECK(f.norm == 1);
    auto E = unit_at(f, 1);
    REQUIRE(E);
    CHECK(E->M() == Int("656527122296918386395032242"));
    CHECK(primitive_power(*E).n == 1);
}

TEST_CASE("identity holds at random t for random bases of all ten families") {
    oracle::Rng rng(20261016);
    for (unsigned k = 1; k <= 10; ++k) {
        auto bases = gen::random_mcl_bases(k, 6, rng);
        CAPTURE(k);
        REQUIRE(bases.size() == 6);
        for (const auto& b : bases) {
            auto f = make_mcl(k, b.m, b.u, b.v);
            CHECK(identity_defect(f).is_zero());
            for (int i = 0; i < 100; ++i) {
                const Int t(static_cast<unsigned long>(rng.uniform(1, 1000000)));
                Int mt = 0, U = 0, V = 0;
                for (int e = 0; e <= f.mcl.degree(); ++e) mt += evaluate(f.mcl.coeff(e), e, t);
                for (int e = 0; e <= f.U2.degree(); ++e) U += evaluate(f.U2.coeff(e), e, t);
                for (int e = 0; e <= f.V2.degree(); ++e) V += evaluate(f.V2.coeff(e), e, t);
                CHECK(U * U - mt * V * V == 4 * f.norm);
            }
        }
    }
}

TEST_CASE("n agrees with a brute-force fundamental unit") {
    auto f = make_mcl(1, Int(2), Int(3), Int(2));
    MclOptions opt;
    opt.certify = true;
    auto res = fop_mcl(f, 60, opt);
    REQUIRE(!res.records.empty());
    CHECK(res.invalid == 0);
    for (const auto& rec : res.records) {
        CAPTURE(rec.M);
        REQUIRE(rec.n);
        auto e = oracle::brute_unit(rec.M.get_ui(), 1u << 22);
        REQUIRE(e);
        QuadInt eps(rec.M, e->u, e->v);
        const Int T(static_cast<unsigned long>(rec.t));
        QuadInt E(rec.M, f.U2(T), f.V2(T) * rec.r);
        CHECK(naive_power(E, eps) == *rec.n);
    }
}

TEST_CASE("half-unit family keeps integrality per record") {
    auto f = make_mcl(6, Int(5), Int(1), Int(1));
    MclOptions opt;
    opt.certify = true;
    auto res = fop_mcl(f, 200, opt);
    for (const auto& rec : res.records) {
        if (!rec.valid) continue;
        const Int T(static_cast<unsigned long>(rec.t));
        QuadInt E(rec.M, f.U2(T), f.V2(T) * rec.r);
        CHECK(E.norm() == -1);
        CHECK(rec.n);
    }
}

TEST_CASE("k = 10 example at a small bound") {
    auto f = make_mcl(10, Int(301), Int(22745), Int(1311));
    auto res = fop_mcl(f, 30);
    REQUIRE(!res.records.empty());
    CHECK(res.records.front().M == Int("656527122296918386395032242"));
    CHECK(res.records.front().r == 2);
    CHECK(*res.records.front().n == 1);
    CHECK(res.invalid == 0);
    for (const auto& rec : res.records) CHECK(!rec.exception());
}
