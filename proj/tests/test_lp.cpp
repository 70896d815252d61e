#include <doctest.h>

#include "hausconv/lp.hpp"
#include "support/lp_oracle.hpp"
#include "support/random_gen.hpp"

using namespace hausconv;
using hausconv::testing::Rng;

namespace {

LinearProgram make_lp(std::vector<RatVec> rows, RatVec b, RatVec c, Sense s = Sense::Maximize) {
    return LinearProgram{RatMat::from_rows(std::move(rows)), std::move(b), std::move(c), s};
}

}  // namespace

TEST_CASE("bounded optimum with exact certificates") {
    // max x1 + x2 s.t. x1 <= 1, x2 <= 1
    auto lp = make_lp({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, {Rat(1), Rat(1)}, {Rat(1), Rat(1)});
    LPOutcome out = lp_solve(lp);
    REQUIRE(out.status == LPStatus::Optimal);
    CHECK(out.value == 2);
    CHECK(out.point == RatVec{Rat(1), Rat(1)});
    CHECK(check_lp_certificates(lp, out));
}

TEST_CASE("unbounded with improving ray") {
    // max x1 s.t. -x1 <= 0
    auto lp = make_lp({{Rat(-1), Rat(0)}}, {Rat(0)}, {Rat(1), Rat(0)});
    LPOutcome out = lp_solve(lp);
    REQUIRE(out.status == LPStatus::Unbounded);
    CHECK(dot(lp.c, out.ray) > 0);
    CHECK(check_lp_certificates(lp, out));
}

TEST_CASE("infeasible with Farkas certificate") {
    // x1 <= -1 and -x1 <= -2 cannot hold together
    auto lp = make_lp({{Rat(1)}, {Rat(-1)}}, {Rat(-1), Rat(-2)}, {Rat(1)});
    LPOutcome out = lp_solve(lp);
    REQUIRE(out.status == LPStatus::Infeasible);
    CHECK(check_lp_certificates(lp, out));
}

TEST_CASE("feasibility search") {
    auto p1 = lp_feasible(RatMat::from_rows({{Rat(1)}}), {Rat(1)});
    REQUIRE(p1.has_value());
    CHECK((*p1)[0] <= 1);

    auto p2 = lp_feasible(RatMat(0, 3), {});
    REQUIRE(p2.has_value());
    CHECK(vec_is_zero(*p2));

    auto p3 = lp_feasible(RatMat::from_rows({{Rat(1)}, {Rat(-1)}}), {Rat(0), Rat(-1)});
    CHECK(!p3.has_value());
}

TEST_CASE("empty constraint system") {
    LinearProgram lp{RatMat(0, 2), {}, {Rat(1), Rat(-1)}, Sense::Maximize};
    LPOutcome out = lp_solve(lp);
    REQUIRE(out.status == LPStatus::Unbounded);
    CHECK(check_lp_certificates(lp, out));

    LinearProgram zero{RatMat(0, 2), {}, {Rat(0), Rat(0)}, Sense::Maximize};
    LPOutcome out2 = lp_solve(zero);
    REQUIRE(out2.status == LPStatus::Optimal);
    CHECK(out2.value == 0);
}

TEST_CASE("minimize sense") {
    // min x1 s.t. -x1 <= 2  ->  optimum -2
    auto lp = make_lp({{Rat(-1)}}, {Rat(2)}, {Rat(1)}, Sense::Minimize);
    LPOutcome out = lp_solve(lp);
    REQUIRE(out.status == LPStatus::Optimal);
    CHECK(out.value == -2);
    CHECK(check_lp_certificates(lp, out));
}

TEST_CASE("determinism: identical runs produce identical outcomes") {
    Rng rng(101);
    for (int it = 0; it < 30; ++it) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.below(4));
        std::size_t m = 1 + static_cast<std::size_t>(rng.below(5));
        RatMat A(m, n);
        for (std::size_t i = 0; i < m; ++i) A.rows[i] = rng.vec(n, -9, 9, 3);
        LinearProgram lp{A, rng.vec(m, -9, 9, 3), rng.vec(n, -9, 9, 3), Sense::Maximize};
        LPOutcome a = lp_solve(lp), b = lp_solve(lp);
        CHECK(a.status == b.status);
        CHECK(a.value == b.value);
        CHECK(a.point == b.point);
        CHECK(a.ray == b.ray);
        CHECK(a.dual == b.dual);
    }
}

TEST_CASE("random LPs match the basic-solution enumeration oracle") {
    Rng rng(103);
    int optimal = 0, unbounded = 0, infeasible = 0;
    for (int it = 0; it < 60; ++it) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.below(5));
        std::size_t m = 1 + static_cast<std::size_t>(rng.below(5));
        RatMat A(m, n);
        for (std::size_t i = 0; i < m; ++i) A.rows[i] = rng.vec(n, -9, 9, 1);
        LinearProgram lp{A, rng.vec(m, -9, 9, 1), rng.vec(n, -9, 9, 1),
                         rng.below(2) ? Sense::Maximize : Sense::Minimize};

        LPOutcome got = lp_solve(lp);
        CHECK(check_lp_certificates(lp, got));
        auto expect = hausconv::testing::oracle_solve(lp);
        REQUIRE(got.status == expect.status);
        if (got.status == LPStatus::Optimal) {
            CHECK(got.value == expect.value);
            ++optimal;
        } else if (got.status == LPStatus::Unbounded) {
            ++unbounded;
        } else {
            ++infeasible;
        }
    }
    // the generator must exercise all three outcomes
    CHECK(optimal > 0);
    CHECK(unbounded > 0);
    CHECK(infeasible > 0);
}
