#include "hausconv/cones.hpp"

#include <algorithm>

namespace hausconv {

namespace {

void sort_vecs(std::vector<RatVec>& vs) {
    std::sort(vs.begin(), vs.end(), vec_lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

// Polar generators of cone(rays) + span(lineality), as a plain list with
// the polar's lineality emitted as +/- pairs.
std::vector<RatVec> polar_generators(const std::vector<RatVec>& rays,
                                     const std::vector<RatVec>& lineality, std::size_t dim) {
    RatMat ineq(0, dim);
    for (const RatVec& r : rays) ineq.append_row(r);
    ConeGens polar = cone_dd(ineq, lineality, dim);
    std::vector<RatVec> out = polar.rays;
    for (const RatVec& l : polar.lineality) {
        out.push_back(vec_primitive(l));
        out.push_back(vec_primitive(vec_scale(Rat(-1), l)));
    }
    sort_vecs(out);
    return out;
}

}  // namespace

PolyCone cone_from_inequalities(RatMat rows, std::size_t dim) {
    if (rows.ncols == 0) rows.ncols = dim;
    PolyCone c;
    c.dim = dim;
    ConeGens g = cone_dd(rows, {}, dim);
    c.generators = std::move(g.rays);
    c.lineality = std::move(g.lineality);
    // Minimal inequality system by polarity; the given rows may carry
    // redundancy.
    std::vector<RatVec> facets = polar_generators(c.generators, c.lineality, dim);
    c.hrep_rows = RatMat(0, dim);
    for (RatVec& f : facets) c.hrep_rows.append_row(std::move(f));
    return c;
}

PolyCone cone_from_generators(const std::vector<RatVec>& rays,
                              const std::vector<RatVec>& lineality, std::size_t dim) {
    // Round-trip through the polar so that hidden lineality (opposite ray
    // pairs, dependent generators) lands in canonical form.
    std::vector<RatVec> facets = polar_generators(rays, lineality, dim);
    RatMat rows(0, dim);
    for (RatVec& f : facets) rows.append_row(std::move(f));
    return cone_from_inequalities(std::move(rows), dim);
}

PolyCone recession_cone(const Polyhedron& P) {
    return cone_from_inequalities(P.hrep().A, P.dim());
}

std::vector<RatVec> lineality_space(const PolyCone& V) { return V.lineality; }

bool cone_contains_vector(const PolyCone& V, const RatVec& x) {
    for (const RatVec& row : V.hrep_rows.rows)
        if (dot(row, x) > 0) return false;
    return true;
}

bool cone_subset(const PolyCone& V, const PolyCone& W) {
    if (V.dim != W.dim) throw Error(ErrorCode::DimensionMismatch, "cone_subset: ambient dims");
    for (const RatVec& g : V.generators)
        if (!cone_contains_vector(W, g)) return false;
    for (const RatVec& l : V.lineality) {
        for (const RatVec& row : W.hrep_rows.rows)
            if (dot(row, l) != 0) return false;
    }
    return true;
}

bool cone_equal(const PolyCone& V, const PolyCone& W) {
    return cone_subset(V, W) && cone_subset(W, V);
}

bool cone_is_subspace(const PolyCone& V) {
    for (const RatVec& g : V.generators)
        if (!cone_contains_vector(V, vec_scale(Rat(-1), g))) return false;
    return true;
}

bool dual_cone_contains(const Polyhedron& P, const RatVec& f) {
    return support(P, f).is_finite();
}

std::vector<RatVec> dual_cone_generators(const PolyCone& V) {
    return polar_generators(V.generators, V.lineality, V.dim);
}

bool check_polar_identity(const Polyhedron& P) {
    PolyCone V = recession_cone(P);
    std::vector<RatVec> family = dual_cone_generators(V);

    // Every family member supports P finitely.
    for (const RatVec& f : family)
        if (!dual_cone_contains(P, f)) return false;

    // V is inside every half-space f^{-1}((-inf, 0]).
    for (const RatVec& f : family) {
        for (const RatVec& g : V.generators)
            if (dot(f, g) > 0) return false;
        for (const RatVec& l : V.lineality)
            if (dot(f, l) != 0) return false;
    }

    // The intersection of those half-spaces is inside V.
    RatMat rows(0, V.dim);
    for (const RatVec& f : family) rows.append_row(f);
    PolyCone W = cone_from_inequalities(std::move(rows), V.dim);
    return cone_subset(W, V);
}

bool same_component(const Polyhedron& P, const Polyhedron& Q) {
    if (P.dim() != Q.dim()) throw Error(ErrorCode::DimensionMismatch, "same_component: dims");
    return cone_equal(recession_cone(P), recession_cone(Q));
}

ComponentClass classify(const Polyhedron& P) {
    PolyCone V = recession_cone(P);
    const std::size_t n = P.dim();
    const std::size_t k = V.lineality.size();
    const std::size_t c = n - k;
    const bool subspace = cone_is_subspace(V);

    ComponentClass out;
    out.codim_lineality = c;
    if (subspace && c == 0) {
        out.tag = ComponentTag::WholeSpace;
        out.clause = 1;
        out.detail = "recession cone is the whole ambient space, so the component is the singleton {X}";
    } else if (!subspace && c == 1) {
        out.tag = ComponentTag::Line;
        out.clause = 2;
        out.detail = "recession cone is a closed half-space cone (lineality codimension 1, not a subspace): the component contains a half-space";
    } else if (subspace && c == 1) {
        out.tag = ComponentTag::HalfPlaneStrip;
        out.clause = 3;
        out.detail = "recession cone is a linear subspace of codimension 1";
    } else if (subspace) {
        out.tag = ComponentTag::HilbertCubeRay;
        out.clause = 4;
        out.detail = "recession cone is a linear subspace of finite codimension >= 2";
    } else {
        out.tag = ComponentTag::SeparableHilbert;
        out.clause = 5;
        out.detail = "recession cone is polyhedral, pointed modulo lineality of codimension >= 2: no half-space and no subspace in the component";
    }
    return out;
}

const char* component_tag_name(ComponentTag t) {
    switch (t) {
        case ComponentTag::WholeSpace: return "WholeSpace";
        case ComponentTag::Line: return "Line";
        case ComponentTag::HalfPlaneStrip: return "HalfPlaneStrip";
        case ComponentTag::HilbertCubeRay: return "HilbertCubeRay";
        case ComponentTag::SeparableHilbert: return "SeparableHilbert";
        case ComponentTag::NonseparableHilbert: return "NonseparableHilbert";
    }
    return "?";
}

const char* component_space_label(ComponentTag t) {
    switch (t) {
        case ComponentTag::WholeSpace: return "{0}";
        case ComponentTag::Line: return "R";
        case ComponentTag::HalfPlaneStrip: return "RxR+";
        case ComponentTag::HilbertCubeRay: return "QxR+";
        case ComponentTag::SeparableHilbert: return "l2";
        case ComponentTag::NonseparableHilbert: return "l2(kappa)";
    }
    return "?";
}

}  // namespace hausconv
