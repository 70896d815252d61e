#include <doctest.h>

#include <fstream>

#include "hausconv/json_io.hpp"
#include "support/random_gen.hpp"

using namespace hausconv;
using hausconv::testing::Rng;

namespace {

Json parse(const char* text) { return Json::parse(text); }

}  // namespace

TEST_CASE("polyhedron json: hrep only, vrep only, both") {
    Polyhedron h = polyhedron_from_json(
        parse(R"({"dim": 2, "hrep": {"A": [["-1","0"],["0","-1"]], "b": ["0","0"]}})"), "t");
    CHECK(h.has_hrep());
    CHECK(!h.has_vrep());
    CHECK(h.vrep().rays.size() == 2);

    Polyhedron v = polyhedron_from_json(
        parse(R"({"dim": 2, "vrep": {"vertices": [["0","0"],["1","0"]]}})"), "t");
    CHECK(v.has_vrep());
    CHECK(v.vrep().vertices.size() == 2);

    Polyhedron both = polyhedron_from_json(
        parse(R"({"dim": 1, "hrep": {"A": [["1"],["-1"]], "b": ["1","0"]},
                  "vrep": {"vertices": [["0"],["1"]]}})"),
        "t");
    CHECK(both.has_hrep());
    CHECK(both.has_vrep());
}

TEST_CASE("polyhedron json: integer literals are accepted") {
    Polyhedron p = polyhedron_from_json(
        parse(R"({"dim": 1, "hrep": {"A": [[1],[-1]], "b": [1, 0]}})"), "t");
    CHECK(p.vrep().vertices.size() == 2);
}

TEST_CASE("polyhedron json: error taxonomy") {
    auto code_of = [](const char* text) {
        try {
            polyhedron_from_json(parse(text), "t");
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::ParseError;  // unreachable marker
    };
    CHECK(code_of(R"({"dim": 2})") == ErrorCode::ParseError);
    CHECK(code_of(R"({"dim": 0, "hrep": {"A": [], "b": []}})") == ErrorCode::ParseError);
    CHECK(code_of(R"({"dim": 2, "hrep": {"A": [["1","x"]], "b": ["0"]}})") == ErrorCode::ParseError);
    CHECK(code_of(R"({"dim": 2, "hrep": {"A": [["1"]], "b": ["0"]}})") ==
          ErrorCode::DimensionMismatch);
    CHECK(code_of(R"({"dim": 1, "hrep": {"A": [["1"],["-1"]], "b": ["0","-1"]}})") ==
          ErrorCode::EmptySet);
    CHECK(code_of(R"({"dim": 1, "vrep": {"rays": [["1"]]}})") == ErrorCode::EmptySet);
    CHECK(code_of(R"({"dim": 1, "hrep": {"A": [["1"]], "b": ["1"]},
                      "vrep": {"vertices": [["5"]]}})") == ErrorCode::ParseError);

    try {
        polyhedron_from_json(parse(R"({"dim": 1, "hrep": {"A": [["1"],["bad"]], "b": ["0","0"]}})"),
                             "somefile");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.file() == "somefile");
        CHECK(e.index() == 1);  // the offending constraint row
        CHECK(e.summary().find("ParseError") != std::string::npos);
        CHECK(e.summary().find("somefile") != std::string::npos);
    }
}

TEST_CASE("serialization round trip preserves the set") {
    Rng rng(113);
    for (int it = 0; it < 15; ++it) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.below(3));
        Polyhedron P =
            hausconv::testing::random_polyhedron(rng, n, 2 + static_cast<std::size_t>(rng.below(5)));
        Json j = polyhedron_to_json(P, true, true);
        Polyhedron back = polyhedron_from_json(j, "roundtrip");
        CHECK(set_equal(P, back));
    }
}

TEST_CASE("canonical output is byte identical across runs") {
    Rng rng(127);
    Polyhedron P = hausconv::testing::random_polyhedron(rng, 3, 6);
    Polyhedron Q = Polyhedron::from_hrep(P.hrep());
    std::string a = polyhedron_to_json(P, true, true).dump();
    std::string b = polyhedron_to_json(Q, true, true).dump();
    CHECK(a == b);

    HausdorffResult r = hausdorff(P, translate(P, {Rat(1), Rat(0), Rat(2)}));
    HausdorffResult r2 = hausdorff(Q, translate(Q, {Rat(1), Rat(0), Rat(2)}));
    CHECK(hausdorff_to_json(r).dump() == hausdorff_to_json(r2).dump());
}

TEST_CASE("component and report serializers") {
    Polyhedron q = polyhedron_from_json(
        parse(R"({"dim": 2, "hrep": {"A": [["-1","0"],["0","-1"]], "b": ["0","0"]}})"), "t");
    Json j = component_to_json(classify(q));
    CHECK(j["tag"] == "SeparableHilbert");
    CHECK(j["clause"] == "Theorem 1(5)");
    CHECK(j["space"] == "l2");

    HausdorffResult inf = hausdorff(q, Polyhedron::whole_space(2));
    Json ji = hausdorff_to_json(inf);
    CHECK(ji["value"] == "inf");
    CHECK(ji["attained"] == false);
    CHECK(ji.contains("failing_direction"));

    WitnessFamily w = witness_family(recession_cone(q), Rat(1, 2), 2);
    Json jw = witness_family_to_json(w);
    CHECK(jw["delta"] == "1/4");
    CHECK(jw["members"].size() == 3);
}

TEST_CASE("subspace file loading") {
    const char* path = "subspace_test_tmp.json";
    {
        std::ofstream out(path);
        out << R"({"basis": [["1", "0"]]})";
    }
    auto basis = load_subspace_basis(path, 2);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == RatVec{Rat(1), Rat(0)});
    std::remove(path);
    CHECK_THROWS_AS(load_subspace_basis("no_such_file.json", 2), Error);
}
