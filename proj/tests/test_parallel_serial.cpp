// The OpenMP kernels must reproduce the serial reference bit for bit: every
// quantity is an exact rational and the combining step (max / min over
// independent subproblems) is order-insensitive.

#include <doctest.h>

#include "hausconv/witness.hpp"
#include "support/random_gen.hpp"

using namespace hausconv;
using hausconv::testing::Rng;

TEST_CASE("directed and symmetric distances: serial == parallel") {
    Rng rng(131);
    for (int it = 0; it < 15; ++it) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.below(3));
        Polyhedron A = hausconv::testing::random_polytope(rng, n, 3 + static_cast<std::size_t>(rng.below(8)));
        Polyhedron B =
            rng.below(2) ? hausconv::testing::random_same_component_partner(rng, A)
                         : hausconv::testing::random_polyhedron(rng, n, 2 + static_cast<std::size_t>(rng.below(4)));
        CHECK(directed_hausdorff(A, B, ExecMode::Serial) ==
              directed_hausdorff(A, B, ExecMode::Parallel));
        HausdorffResult s = hausdorff(A, B, ExecMode::Serial);
        HausdorffResult p = hausdorff(A, B, ExecMode::Parallel);
        CHECK(s.value == p.value);
        CHECK(s.witness_point == p.witness_point);
        CHECK(s.separator == p.separator);
        CHECK(s.failing_direction == p.failing_direction);
    }
}

TEST_CASE("witness verification: serial == parallel") {
    PolyCone V = cone_from_generators(
        {{Rat(1), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(0)}, {Rat(1), Rat(0), Rat(1)}}, {}, 3);
    WitnessFamily w = witness_family(V, Rat(1, 3), 5);
    WitnessReport s = verify_witness(w, ExecMode::Serial);
    WitnessReport p = verify_witness(w, ExecMode::Parallel);
    REQUIRE(s.pairs.size() == p.pairs.size());
    for (std::size_t i = 0; i < s.pairs.size(); ++i) {
        CHECK(s.pairs[i].dist == p.pairs[i].dist);
        CHECK(s.pairs[i].separated == p.pairs[i].separated);
    }
    for (std::size_t i = 0; i < s.members.size(); ++i)
        CHECK(s.members[i].dist_to_cone == p.members[i].dist_to_cone);
}

TEST_CASE("pairwise family separation: serial == parallel") {
    std::vector<std::vector<std::size_t>> subsets = {{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 2, 3}};
    BiorthFamily fam = biorthogonal_family(3, subsets);
    CHECK(pairwise_min_hausdorff(fam.members, ExecMode::Serial) ==
          pairwise_min_hausdorff(fam.members, ExecMode::Parallel));
}

TEST_CASE("quotient-norm distances: serial == parallel") {
    Rng rng(137);
    for (int it = 0; it < 5; ++it) {
        auto pair = hausconv::testing::make_lineality_pair(rng, 3, 1);
        QuotientMap q = make_quotient_map(pair.subspace, 3);
        Polyhedron Aq = quotient(pair.A, q);
        Polyhedron Bq = quotient(pair.B, q);
        CHECK(hausdorff_quotient_norm(Aq, Bq, q, ExecMode::Serial) ==
              hausdorff_quotient_norm(Aq, Bq, q, ExecMode::Parallel));
    }
}
