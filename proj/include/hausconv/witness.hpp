#pragma once

#include <utility>
#include <vector>

#include "hausconv/metric.hpp"

namespace hausconv {

// The separated family C_n = cconv(V cup {3^n x + y}) built from a pointed
// polyhedral cone V: all members stay within epsilon of V while keeping
// pairwise distance at least delta = f(y)/2, which exhibits the component
// of V as non-locally-compact at V.
struct WitnessFamily {
    explicit WitnessFamily(Polyhedron cp) : cone_poly(std::move(cp)) {}

    PolyCone cone;
    Polyhedron cone_poly;  // V as a polyhedron (apex at the origin)
    RatVec h;              // strictly positive on V \ {0}
    RatVec f;              // ||f||_1 = 1, sup f(V) = 0, vanishing on x
    RatVec x;              // nonzero direction in V with h*x = 1
    RatVec y;              // h*y = 0, f*y > 0, ||y||_inf = epsilon
    Rat epsilon;
    Rat delta;             // f*y / 2
    std::vector<Polyhedron> members;  // C_0 .. C_N

    RatVec spike(std::size_t n) const;  // c_n = 3^n x + y
};

// Sum of per-generator functionals h_e >= 0 on V with h_e(e) >= 1, found by
// exact LP feasibility. Throws Error(NotPointed) when V has lineality.
RatVec build_h(const PolyCone& V);

// A polar generator f vanishing on some nonzero generator x of V, with f
// rescaled to the dual unit sphere and x rescaled so that h*x = 1. Throws
// Error(NoFacet) when no such pair exists (V = {0}).
std::pair<RatVec, RatVec> build_f_x(const PolyCone& V, const RatVec& h);

// Deterministic y in ker h with f*y > 0 and ||y||_inf = epsilon: the
// +/- kernel-basis candidate with the largest f-value, rescaled. Throws
// Error(DependentFunctionals) when f vanishes on ker h.
RatVec build_y(const RatVec& h, const RatVec& f, const Rat& epsilon);

WitnessFamily witness_family(const PolyCone& V, const Rat& epsilon, std::size_t N);

struct WitnessReport {
    struct MemberRow {
        std::size_t n = 0;
        Rat dist_to_cone;
        bool within_epsilon = false;
    };
    struct PairRow {
        std::size_t n = 0, m = 0;
        Rat dist;
        bool separated = false;
    };
    std::vector<MemberRow> members;
    std::vector<PairRow> pairs;
    bool identities_ok = false;  // h*c_n = 3^n and f*c_n = 2 delta, exactly
    Rat epsilon;
    Rat delta;
    bool all_pass() const;
};

// Computes every bound of the construction with exact distances; the
// pairwise block runs one Hausdorff computation per (n, m) pair, fanned
// over threads in parallel mode.
WitnessReport verify_witness(const WitnessFamily& w, ExecMode mode = ExecMode::Parallel);

// Finite biorthogonal family: members conv{e_i : i in A} for index sets A,
// pairwise at Hausdorff distance >= 1/L with L = 1 for the standard
// coordinate system under l_inf / l_1.
struct BiorthFamily {
    std::vector<Polyhedron> members;
    std::vector<std::vector<std::size_t>> subsets;  // 1-based indices
    Rat bound;
};

BiorthFamily biorthogonal_family(std::size_t n,
                                 const std::vector<std::vector<std::size_t>>& subsets);

// Minimum pairwise Hausdorff distance over a family of same-component
// members; used to check separation bounds.
Rat pairwise_min_hausdorff(const std::vector<Polyhedron>& members,
                           ExecMode mode = ExecMode::Parallel);

}  // namespace hausconv
