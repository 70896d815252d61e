#include <doctest.h>

#include <algorithm>

#include "hausconv/polyhedron.hpp"
#include "support/random_gen.hpp"

using namespace hausconv;
using hausconv::testing::Rng;

namespace {

HRep make_hrep(std::vector<RatVec> rows, RatVec b, std::size_t dim) {
    HRep h;
    h.dim = dim;
    h.A = RatMat::from_rows(std::move(rows));
    h.A.ncols = dim;
    h.b = std::move(b);
    return h;
}

Polyhedron unit_square() {
    return Polyhedron::from_hrep(make_hrep(
        {{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(-1)}},
        {Rat(1), Rat(0), Rat(1), Rat(0)}, 2));
}

Polyhedron quadrant() {
    return Polyhedron::from_hrep(
        make_hrep({{Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}}, {Rat(0), Rat(0)}, 2));
}

}  // namespace

TEST_CASE("emptiness at the representation level") {
    CHECK(!is_empty(make_hrep({{Rat(1)}}, {Rat(1)}, 1)));
    CHECK(is_empty(make_hrep({{Rat(1)}, {Rat(-1)}}, {Rat(0), Rat(-1)}, 1)));
    HRep whole;
    whole.dim = 2;
    whole.A = RatMat(0, 2);
    CHECK(!is_empty(whole));
    CHECK_THROWS_AS(Polyhedron::from_hrep(make_hrep({{Rat(1)}, {Rat(-1)}}, {Rat(0), Rat(-1)}, 1)),
                    Error);
}

TEST_CASE("dd_convert: unit square") {
    Polyhedron sq = unit_square();
    const VRep& v = sq.vrep();
    CHECK(v.vertices.size() == 4);
    CHECK(v.rays.empty());
    CHECK(v.lineality.empty());
    CHECK(std::find(v.vertices.begin(), v.vertices.end(), RatVec{Rat(1), Rat(1)}) !=
          v.vertices.end());
}

TEST_CASE("dd_convert: quadrant") {
    Polyhedron q = quadrant();
    const VRep& v = q.vrep();
    REQUIRE(v.vertices.size() == 1);
    CHECK(v.vertices[0] == RatVec{Rat(0), Rat(0)});
    REQUIRE(v.rays.size() == 2);
    CHECK(v.rays[0] == RatVec{Rat(0), Rat(1)});
    CHECK(v.rays[1] == RatVec{Rat(1), Rat(0)});
    CHECK(v.lineality.empty());
}

TEST_CASE("dd_convert: strip keeps lineality and complement vertices") {
    Polyhedron strip = Polyhedron::from_hrep(
        make_hrep({{Rat(0), Rat(1)}, {Rat(0), Rat(-1)}}, {Rat(1), Rat(0)}, 2));
    const VRep& v = strip.vrep();
    REQUIRE(v.lineality.size() == 1);
    CHECK(v.lineality[0] == RatVec{Rat(1), Rat(0)});
    REQUIRE(v.vertices.size() == 2);
    CHECK(v.vertices[0] == RatVec{Rat(0), Rat(0)});
    CHECK(v.vertices[1] == RatVec{Rat(0), Rat(1)});
    CHECK(v.rays.empty());
    // mutual containment against the defining inequalities
    Polyhedron back = Polyhedron::from_vrep(v);
    CHECK(set_equal(strip, back));
}

TEST_CASE("whole space round trip") {
    Polyhedron X = Polyhedron::whole_space(3);
    const VRep& v = X.vrep();
    CHECK(v.lineality.size() == 3);
    CHECK(v.vertices.size() == 1);
    CHECK(vec_is_zero(v.vertices[0]));
    HRep h = vrep_to_hrep(v);
    CHECK(h.A.nrows == 0);
}

TEST_CASE("vrep_to_hrep: fixed conversions") {
    VRep tri;
    tri.dim = 2;
    tri.vertices = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    HRep h = vrep_to_hrep(tri);
    CHECK(h.A.nrows == 3);

    VRep ray1;
    ray1.dim = 1;
    ray1.vertices = {{Rat(0)}};
    ray1.rays = {{Rat(1)}};
    HRep h2 = vrep_to_hrep(ray1);
    REQUIRE(h2.A.nrows == 1);
    CHECK(h2.A.rows[0][0] < 0);
    CHECK(h2.b[0] == 0);

    VRep line;
    line.dim = 2;
    line.vertices = {{Rat(0), Rat(0)}};
    line.lineality = {{Rat(1), Rat(0)}};
    HRep h3 = vrep_to_hrep(line);
    REQUIRE(h3.A.nrows == 2);  // one equality pair
    CHECK(vec_add(h3.A.rows[0], h3.A.rows[1]) == RatVec{Rat(0), Rat(0)});
}

TEST_CASE("roundtrip property on random inequality systems") {
    Rng rng(41);
    int nontrivial = 0;
    for (int it = 0; it < 60; ++it) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.below(4));
        std::size_t m = 1 + static_cast<std::size_t>(rng.below(8));
        Polyhedron P = hausconv::testing::random_polyhedron(rng, n, m);
        Polyhedron back = Polyhedron::from_vrep(P.vrep());
        CHECK(set_equal(P, back));
        Polyhedron again = Polyhedron::from_hrep(back.hrep());
        CHECK(set_equal(back, again));
        if (!P.vrep().rays.empty() || !P.vrep().lineality.empty()) ++nontrivial;
    }
    CHECK(nontrivial > 0);  // the generator reaches unbounded regions
}

TEST_CASE("support: fixed examples") {
    Polyhedron ball = Polyhedron::from_hrep(make_hrep(
        {{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(-1)}},
        {Rat(1), Rat(1), Rat(1), Rat(1)}, 2));
    CHECK(support(ball, {Rat(1, 3), Rat(-2, 3)}) == ExtRat(Rat(1)));
    CHECK(support(quadrant(), {Rat(-1), Rat(-2)}) == ExtRat(Rat(0)));
    CHECK(support(quadrant(), {Rat(1), Rat(0)}) == ExtRat::pos_inf());
}

TEST_CASE("support agrees with the LP route") {
    Rng rng(43);
    for (int it = 0; it < 40; ++it) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.below(3));
        Polyhedron P = hausconv::testing::random_polyhedron(rng, n, 2 + static_cast<std::size_t>(rng.below(5)));
        RatVec f = rng.vec(n, -4, 4, 2);
        const HRep& h = P.hrep();
        LPOutcome lp = lp_solve(LinearProgram{h.A, h.b, f, Sense::Maximize});
        ExtRat s = support(P, f);
        if (lp.status == LPStatus::Optimal) {
            CHECK(s == ExtRat(lp.value));
        } else {
            REQUIRE(lp.status == LPStatus::Unbounded);
            CHECK(s == ExtRat::pos_inf());
        }
    }
}

TEST_CASE("dist_point: fixed examples and certificates") {
    CHECK(dist_point(quadrant(), {Rat(1), Rat(2)}) == 0);
    CHECK(dist_point(quadrant(), {Rat(-2), Rat(-3)}) == 3);

    VRep seg;
    seg.dim = 2;
    seg.vertices = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}};
    Polyhedron S = Polyhedron::from_vrep(seg);
    CHECK(dist_point(S, {Rat(2), Rat(1)}) == 1);

    DistCertificate cert = dist_point_certified(quadrant(), {Rat(-2), Rat(-3)});
    CHECK(cert.value == 3);
    CHECK(dual_norm(cert.separator) == 1);
    ExtRat sup = support(quadrant(), cert.separator);
    REQUIRE(sup.is_finite());
    CHECK(dot(cert.separator, RatVec{Rat(-2), Rat(-3)}) - sup.finite() == 3);
    CHECK(dist_point(quadrant(), cert.nearest) == 0);
    CHECK(sup_norm(vec_sub(RatVec{Rat(-2), Rat(-3)}, cert.nearest)) == 3);
}

TEST_CASE("dist_point is zero exactly on membership") {
    Rng rng(47);
    for (int it = 0; it < 40; ++it) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.below(3));
        Polyhedron P = hausconv::testing::random_polyhedron(rng, n, 2 + static_cast<std::size_t>(rng.below(4)));
        RatVec x = rng.vec(n, -4, 4, 2);
        const HRep& h = P.hrep();
        bool member = true;
        RatVec Ax = h.A.apply(x);
        for (std::size_t i = 0; i < Ax.size(); ++i) member = member && Ax[i] <= h.b[i];
        CHECK((dist_point(P, x) == 0) == member);
    }
}

TEST_CASE("contains: fixed examples") {
    VRep diag;
    diag.dim = 2;
    diag.vertices = {{Rat(0), Rat(0)}, {Rat(1), Rat(1)}};
    CHECK(contains(unit_square(), Polyhedron::from_vrep(diag)));
    CHECK(!contains(quadrant(), Polyhedron::whole_space(2)));
    CHECK(contains(quadrant(), quadrant()));
    CHECK(contains(Polyhedron::whole_space(2), quadrant()));
}

TEST_CASE("minkowski sum: fixed examples") {
    Polyhedron moved = minkowski_sum(unit_square(), Polyhedron::singleton({Rat(3), Rat(4)}));
    Polyhedron expect = Polyhedron::from_hrep(make_hrep(
        {{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(-1)}},
        {Rat(4), Rat(-3), Rat(5), Rat(-4)}, 2));
    CHECK(set_equal(moved, expect));

    VRep sx, sy;
    sx.dim = sy.dim = 2;
    sx.vertices = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}};
    sy.vertices = {{Rat(0), Rat(0)}, {Rat(0), Rat(1)}};
    CHECK(set_equal(minkowski_sum(Polyhedron::from_vrep(sx), Polyhedron::from_vrep(sy)),
                    unit_square()));

    CHECK(set_equal(minkowski_sum(quadrant(), quadrant()), quadrant()));
}

TEST_CASE("hull of union: fixed examples") {
    Polyhedron a = Polyhedron::singleton({Rat(0), Rat(0)});
    Polyhedron b = Polyhedron::singleton({Rat(1), Rat(1)});
    Polyhedron seg = hull_union(a, b);
    CHECK(seg.vrep().vertices.size() == 2);
    CHECK(seg.vrep().rays.empty());

    CHECK(set_equal(hull_union(unit_square(), unit_square()), unit_square()));

    // cconv(quadrant + one point below): independently derived inequalities
    Polyhedron mix = hull_union(quadrant(), Polyhedron::singleton({Rat(3), Rat(-1)}));
    Polyhedron expect = Polyhedron::from_hrep(make_hrep(
        {{Rat(-1), Rat(0)}, {Rat(-1), Rat(-3)}, {Rat(0), Rat(-1)}}, {Rat(0), Rat(0), Rat(1)}, 2));
    CHECK(set_equal(mix, expect));
    const VRep& v = mix.vrep();
    CHECK(v.vertices.size() == 2);
    CHECK(v.rays.size() == 2);
}

TEST_CASE("scaling") {
    Polyhedron sq2 = scale(unit_square(), Rat(2));
    Polyhedron expect = Polyhedron::from_hrep(make_hrep(
        {{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(-1)}},
        {Rat(2), Rat(0), Rat(2), Rat(0)}, 2));
    CHECK(set_equal(sq2, expect));

    CHECK(set_equal(scale(quadrant(), Rat(1)), quadrant()));

    Polyhedron third = scale(quadrant(), Rat(-1));
    const VRep& v = third.vrep();
    REQUIRE(v.rays.size() == 2);
    CHECK(v.rays[0] == RatVec{Rat(-1), Rat(0)});
    CHECK(v.rays[1] == RatVec{Rat(0), Rat(-1)});

    CHECK(set_equal(scale(unit_square(), Rat(0)), Polyhedron::singleton({Rat(0), Rat(0)})));
}

TEST_CASE("convex combination") {
    Polyhedron p = Polyhedron::singleton({Rat(0), Rat(0)});
    Polyhedron q = Polyhedron::singleton({Rat(4), Rat(0)});
    CHECK(set_equal(convex_combination(p, q, Rat(0)), p));
    CHECK(set_equal(convex_combination(p, q, Rat(1)), q));
    CHECK(set_equal(convex_combination(p, q, Rat(1, 4)), Polyhedron::singleton({Rat(1), Rat(0)})));
    CHECK(set_equal(convex_combination(unit_square(), unit_square(), Rat(1, 3)), unit_square()));
    CHECK_THROWS_AS(convex_combination(p, q, Rat(2)), Error);
}

TEST_CASE("translation") {
    CHECK(set_equal(translate(unit_square(), {Rat(0), Rat(0)}), unit_square()));
    CHECK(set_equal(translate(Polyhedron::singleton({Rat(1), Rat(2)}), {Rat(3), Rat(4)}),
                    Polyhedron::singleton({Rat(4), Rat(6)})));
    // HRep route matches the generator route
    Polyhedron viah = translate(quadrant(), {Rat(1), Rat(-2)});
    VRep raw = quadrant().vrep();
    for (RatVec& x : raw.vertices) x = vec_add(x, {Rat(1), Rat(-2)});
    CHECK(set_equal(viah, Polyhedron::from_vrep(raw)));
}

TEST_CASE("support-function calculus across operations") {
    Rng rng(53);
    for (int it = 0; it < 25; ++it) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.below(3));
        Polyhedron P = hausconv::testing::random_polyhedron(rng, n, 2 + static_cast<std::size_t>(rng.below(4)));
        Polyhedron Q = hausconv::testing::random_polyhedron(rng, n, 2 + static_cast<std::size_t>(rng.below(4)));
        for (int k = 0; k < 6; ++k) {
            RatVec f = rng.vec(n, -3, 3, 2);
            CHECK(support(minkowski_sum(P, Q), f) == support(P, f) + support(Q, f));
            CHECK(support(hull_union(P, Q), f) == ext_max(support(P, f), support(Q, f)));
            Rat r = rng.rat(0, 4, 2);
            CHECK(support(scale(P, r), f) == r * support(P, f));
        }
    }
}

TEST_CASE("positive homogeneity fails for negative scalars") {
    VRep seg;
    seg.dim = 2;
    seg.vertices = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}};
    Polyhedron S = Polyhedron::from_vrep(seg);
    RatVec f{Rat(1), Rat(0)};
    ExtRat lhs = support(scale(S, Rat(-1)), f);
    REQUIRE(lhs.is_finite());
    CHECK(lhs.finite() == 0);
    ExtRat rhs = support(S, f);
    REQUIRE(rhs.is_finite());
    CHECK(Rat(-1) * rhs.finite() == Rat(-1));
    CHECK(lhs.finite() != Rat(-1) * rhs.finite());
}

TEST_CASE("sum and hull are commutative and associative up to set equality") {
    Rng rng(59);
    for (int it = 0; it < 10; ++it) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.below(3));
        Polyhedron A = hausconv::testing::random_polyhedron(rng, n, 2 + static_cast<std::size_t>(rng.below(4)));
        Polyhedron B = hausconv::testing::random_polyhedron(rng, n, 2 + static_cast<std::size_t>(rng.below(4)));
        Polyhedron C = hausconv::testing::random_polytope(rng, n, 3);
        CHECK(set_equal(minkowski_sum(A, B), minkowski_sum(B, A)));
        CHECK(set_equal(minkowski_sum(minkowski_sum(A, B), C), minkowski_sum(A, minkowski_sum(B, C))));
        CHECK(set_equal(hull_union(A, B), hull_union(B, A)));
        CHECK(set_equal(hull_union(hull_union(A, B), C), hull_union(A, hull_union(B, C))));
    }
}

TEST_CASE("vrep_to_hrep emits no redundant row") {
    Rng rng(61);
    for (int it = 0; it < 20; ++it) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.below(3));
        Polyhedron P = hausconv::testing::random_polyhedron(rng, n, 2 + static_cast<std::size_t>(rng.below(5)));
        HRep h = vrep_to_hrep(P.vrep());
        for (std::size_t drop = 0; drop < h.A.nrows; ++drop) {
            RatMat rest(0, n);
            RatVec rb;
            for (std::size_t i = 0; i < h.A.nrows; ++i) {
                if (i == drop) continue;
                rest.append_row(h.A.rows[i]);
                rb.push_back(h.b[i]);
            }
            // maximizing the dropped row over the others must exceed its
            // bound (or be unbounded), otherwise the row was redundant
            LPOutcome out = lp_solve(LinearProgram{rest, rb, h.A.rows[drop], Sense::Maximize});
            bool irredundant = out.status == LPStatus::Unbounded ||
                               (out.status == LPStatus::Optimal && out.value > h.b[drop]);
            CHECK(irredundant);
        }
    }
}

TEST_CASE("canonical form is a fixed point of canonicalization") {
    Rng rng(67);
    for (int it = 0; it < 20; ++it) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.below(3));
        Polyhedron P = hausconv::testing::random_polyhedron(rng, n, 2 + static_cast<std::size_t>(rng.below(6)));
        const VRep& v = P.vrep();
        Polyhedron Q = Polyhedron::from_vrep(v);  // re-canonicalizes with pruning
        const VRep& w = Q.vrep();
        CHECK(v.vertices == w.vertices);
        CHECK(v.rays == w.rays);
        CHECK(v.lineality == w.lineality);
    }
}

TEST_CASE("canonical representations are deterministic") {
    Polyhedron P = unit_square();
    Polyhedron Q = Polyhedron::from_hrep(P.hrep());
    const VRep& a = P.vrep();
    const VRep& b = Q.vrep();
    CHECK(a.vertices == b.vertices);
    CHECK(a.rays == b.rays);
    CHECK(a.lineality == b.lineality);

    // same set from shuffled, redundant generators
    VRep raw;
    raw.dim = 2;
    raw.vertices = {{Rat(1), Rat(1)}, {Rat(0), Rat(0)}, {Rat(1), Rat(0)},
                    {Rat(0), Rat(1)}, {Rat(1, 2), Rat(1, 2)}};
    Polyhedron R = Polyhedron::from_vrep(raw);
    CHECK(R.vrep().vertices == a.vertices);
}
