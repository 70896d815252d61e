#include <doctest.h>

#include "hausconv/rational.hpp"
#include "support/random_gen.hpp"

using namespace hausconv;
using hausconv::testing::Rng;

TEST_CASE("rational parsing and printing") {
    CHECK(rat_to_string(rat_from_string("3/4")) == "3/4");
    CHECK(rat_to_string(rat_from_string("-6/8")) == "-3/4");
    CHECK(rat_to_string(rat_from_string("5")) == "5");
    CHECK(rat_to_string(rat_from_string("0/7")) == "0");
    CHECK(rat_from_string("10/5") == Rat(2));
    CHECK_THROWS_AS(rat_from_string("1/0"), Error);
    CHECK_THROWS_AS(rat_from_string("a"), Error);
    CHECK_THROWS_AS(rat_from_string("1/-2"), Error);
    CHECK_THROWS_AS(rat_from_string(""), Error);
    CHECK_THROWS_AS(rat_from_string("1.5"), Error);
}

TEST_CASE("sup norm") {
    CHECK(sup_norm({Rat(0), Rat(0), Rat(0)}) == 0);
    CHECK(sup_norm({Rat(3), Rat(-4)}) == 4);
    CHECK(sup_norm({Rat(1, 2), Rat(-2, 3)}) == Rat(2, 3));
}

TEST_CASE("dual norm") {
    CHECK(dual_norm({Rat(1), Rat(-1)}) == 2);
    CHECK(dual_norm({Rat(0), Rat(0)}) == 0);
    CHECK(dual_norm({Rat(1, 3), Rat(1, 3), Rat(1, 3)}) == 1);
}

TEST_CASE("norm axioms and Hoelder pairing on random vectors") {
    Rng rng(7);
    for (int it = 0; it < 200; ++it) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.below(4));
        RatVec v = rng.vec(n, -9, 9), w = rng.vec(n, -9, 9);
        Rat r = rng.rat(-5, 5);

        CHECK((sup_norm(v) == 0) == vec_is_zero(v));
        CHECK(sup_norm(vec_scale(r, v)) == rat_abs(r) * sup_norm(v));
        CHECK(sup_norm(vec_add(v, w)) <= sup_norm(v) + sup_norm(w));

        // |f*v| <= ||f||_1 ||v||_inf, with equality attained by a sign vector
        CHECK(rat_abs(dot(v, w)) <= dual_norm(v) * sup_norm(w));
        RatVec sign(n);
        for (std::size_t i = 0; i < n; ++i) sign[i] = v[i] >= 0 ? Rat(1) : Rat(-1);
        CHECK(dot(v, sign) == dual_norm(v));
    }
}

TEST_CASE("exact field arithmetic") {
    Rng rng(11);
    for (int it = 0; it < 200; ++it) {
        Rat a = rng.rat(-50, 50, 20), b = rng.rat(-50, 50, 20), c = rng.rat(-50, 50, 20);
        CHECK((a + b) - b == a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("extended rationals: hypermetric and conventions") {
    ExtRat inf = ExtRat::pos_inf();
    ExtRat ninf = ExtRat::neg_inf();
    ExtRat two(Rat(2));

    CHECK(ext_dist(inf, inf) == ExtRat(Rat(0)));
    CHECK(ext_dist(ninf, ninf) == ExtRat(Rat(0)));
    CHECK(ext_dist(inf, ninf) == inf);
    CHECK(ext_dist(two, inf) == inf);
    CHECK(ext_dist(two, ExtRat(Rat(-3))) == ExtRat(Rat(5)));

    CHECK(inf + inf == inf);
    CHECK(ninf + ninf == ninf);
    CHECK(inf + ninf == ExtRat(Rat(0)));
    CHECK(two + inf == inf);
    CHECK(two + ninf == ninf);

    CHECK(Rat(0) * inf == ExtRat(Rat(0)));
    CHECK(Rat(-2) * inf == ninf);
    CHECK(Rat(1, 2) * two == ExtRat(Rat(1)));

    CHECK(two < inf);
    CHECK(ninf < two);
    CHECK(ext_max(two, inf) == inf);
}

TEST_CASE("primitive scaling") {
    RatVec v{Rat(1, 2), Rat(-2, 3)};
    RatVec p = vec_primitive(v);
    CHECK(p == RatVec{Rat(3), Rat(-4)});
    CHECK(vec_primitive(RatVec{Rat(0), Rat(0)}) == RatVec{Rat(0), Rat(0)});
    CHECK(vec_primitive(RatVec{Rat(4), Rat(-6)}) == RatVec{Rat(2), Rat(-3)});
}
