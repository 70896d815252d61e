#pragma once

#include <string>

#include "hausconv/polyhedron.hpp"

namespace hausconv {

// Polyhedral cone with both descriptions canonical: a minimal homogeneous
// inequality system {x : rows x <= 0}, the extreme rays of the pointed
// part, and the RREF basis of the lineality space.
struct PolyCone {
    RatMat hrep_rows;
    std::vector<RatVec> generators;
    std::vector<RatVec> lineality;
    std::size_t dim = 0;
};

PolyCone cone_from_inequalities(RatMat rows, std::size_t dim);
PolyCone cone_from_generators(const std::vector<RatVec>& rays,
                              const std::vector<RatVec>& lineality, std::size_t dim);

// Directions along which the polyhedron recedes: {v : P + R+ v subset P},
// which for an inequality description {Ax <= b} is the cone {Av <= 0}.
PolyCone recession_cone(const Polyhedron& P);

// The largest linear subspace inside the cone, -V cap V.
std::vector<RatVec> lineality_space(const PolyCone& V);

bool cone_contains_vector(const PolyCone& V, const RatVec& x);
bool cone_subset(const PolyCone& V, const PolyCone& W);
bool cone_equal(const PolyCone& V, const PolyCone& W);

// Generator-level subspace test: the cone is a subspace iff every
// generator's negation stays inside.
bool cone_is_subspace(const PolyCone& V);

// Whether sup f(P) is finite, i.e. f lies in the dual characteristic cone.
bool dual_cone_contains(const Polyhedron& P, const RatVec& f);

// Generating family of the polar cone {f : f*v <= 0 for all v in V}:
// extreme rays plus +/- the polar's lineality basis.
std::vector<RatVec> dual_cone_generators(const PolyCone& V);

// Rebuilds the recession cone as the intersection of the half-spaces
// f^{-1}((-inf, 0]) over the polar generating family and compares both
// ways, also confirming each family member has finite support on P.
// Exposed on the CLI as `lemma31`.
bool check_polar_identity(const Polyhedron& P);

// Two polyhedra lie in the same component of the hyperspace iff their
// recession cones agree.
bool same_component(const Polyhedron& P, const Polyhedron& Q);

enum class ComponentTag {
    WholeSpace,
    Line,
    HalfPlaneStrip,
    HilbertCubeRay,
    SeparableHilbert,
    NonseparableHilbert,  // never produced for polyhedral inputs
};

struct ComponentClass {
    ComponentTag tag;
    std::size_t codim_lineality;
    int clause;  // 1..6
    std::string detail;
};

// Decides the homeomorphism type of the component containing P from the
// recession cone alone.
ComponentClass classify(const Polyhedron& P);

const char* component_tag_name(ComponentTag t);
// The model space the component is homeomorphic to: "{0}", "R", "RxR+",
// "QxR+", "l2", "l2(kappa)".
const char* component_space_label(ComponentTag t);

}  // namespace hausconv
