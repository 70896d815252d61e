#include "hausconv/metric.hpp"

#include <algorithm>
#include <cstddef>

namespace hausconv {

const char* side_name(Side s) { return s == Side::AtoB ? "AtoB" : "BtoA"; }

namespace {

struct DirectedDetail {
    bool infinite = false;
    RatVec bad_direction;  // recession direction of A outside the cone of B
    Rat value;
    std::size_t witness = 0;  // index into A's vertex list
};

// A direction of V not contained in W, when one exists.
std::optional<RatVec> escape_direction(const PolyCone& V, const PolyCone& W) {
    for (const RatVec& g : V.generators)
        if (!cone_contains_vector(W, g)) return g;
    for (const RatVec& l : V.lineality) {
        if (!cone_contains_vector(W, l)) return l;
        RatVec neg = vec_scale(Rat(-1), l);
        if (!cone_contains_vector(W, neg)) return neg;
    }
    return std::nullopt;
}

DirectedDetail directed_detail(const Polyhedron& A, const Polyhedron& B, ExecMode mode) {
    DirectedDetail out;
    if (auto dir = escape_direction(recession_cone(A), recession_cone(B))) {
        out.infinite = true;
        out.bad_direction = *dir;
        return out;
    }
    // dist(., B) is convex on A and non-increasing along every recession
    // direction of B; those include all rays and lineality of A here, so
    // the supremum is attained at a canonical vertex.
    const std::vector<RatVec>& verts = A.vrep().vertices;
    std::vector<Rat> dists(verts.size());
    if (mode == ExecMode::Parallel) {
        B.hrep();  // materialize shared caches before the parallel region
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(verts.size()); ++i)
            dists[static_cast<std::size_t>(i)] =
                dist_point(B, verts[static_cast<std::size_t>(i)]);
    } else {
        for (std::size_t i = 0; i < verts.size(); ++i) dists[i] = dist_point(B, verts[i]);
    }
    out.value = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (dists[i] > out.value) {
            out.value = dists[i];
            out.witness = i;
        }
    }
    return out;
}

}  // namespace

ExtRat directed_hausdorff(const Polyhedron& A, const Polyhedron& B, ExecMode mode) {
    if (A.dim() != B.dim()) throw Error(ErrorCode::DimensionMismatch, "directed_hausdorff: dims");
    DirectedDetail d = directed_detail(A, B, mode);
    return d.infinite ? ExtRat::pos_inf() : ExtRat(d.value);
}

HausdorffResult hausdorff(const Polyhedron& A, const Polyhedron& B, ExecMode mode) {
    if (A.dim() != B.dim()) throw Error(ErrorCode::DimensionMismatch, "hausdorff: dims");
    HausdorffResult res;
    DirectedDetail ab = directed_detail(A, B, mode);
    if (ab.infinite) {
        res.value = ExtRat::pos_inf();
        res.failing_direction = ab.bad_direction;
        res.failing_side = Side::AtoB;
        return res;
    }
    DirectedDetail ba = directed_detail(B, A, mode);
    if (ba.infinite) {
        res.value = ExtRat::pos_inf();
        res.failing_direction = ba.bad_direction;
        res.failing_side = Side::BtoA;
        return res;
    }

    const bool a_side = ab.value >= ba.value;
    res.value = ExtRat(a_side ? ab.value : ba.value);
    res.attained = true;
    if (res.value == ExtRat(Rat(0))) return res;

    const Polyhedron& from = a_side ? A : B;
    const Polyhedron& to = a_side ? B : A;
    const RatVec& w = from.vrep().vertices[a_side ? ab.witness : ba.witness];
    res.witness_side = a_side ? Side::AtoB : Side::BtoA;
    res.witness_point = w;

    // The dual of the nearest-point program at the witness vertex is the
    // separating functional; the sandwich with the embedding bound forces
    // ||f||_1 = 1 and exact attainment of the gap.
    DistCertificate cert = dist_point_certified(to, w);
    RatVec f = cert.separator;
    Rat norm = dual_norm(f);
    if (norm != 1) f = vec_scale(Rat(1) / norm, f);
    res.separator = std::move(f);
    return res;
}

ExtRat delta_gap(const Polyhedron& A, const Polyhedron& B, const RatVec& f) {
    return ext_dist(support(A, f), support(B, f));
}

QuotientMap make_quotient_map(const std::vector<RatVec>& subspace, std::size_t n) {
    for (const RatVec& z : subspace)
        if (z.size() != n) throw Error(ErrorCode::DimensionMismatch, "quotient map: basis dim");
    RowBasis rb = row_space_basis(subspace, n);
    QuotientMap q;
    q.ambient_dim = n;
    q.subspace_basis = rb.basis;
    std::vector<std::size_t> comp = complement_coordinates(rb, n);
    for (std::size_t j : comp) q.complement_basis.push_back(unit_vec(n, j));

    // Solve [Z | e_J] alpha = x and keep the complement block: build the
    // inverse column by column.
    const std::size_t k = rb.basis.size();
    RatMat S(n, n);
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t i = 0; i < n; ++i) S.rows[i][c] = rb.basis[c][i];
    for (std::size_t c = 0; c < comp.size(); ++c) S.rows[comp[c]][k + c] = 1;
    q.projection = RatMat(comp.size(), n);
    for (std::size_t col = 0; col < n; ++col) {
        auto sol = solve_linear(S, unit_vec(n, col));
        if (!sol) throw std::logic_error("quotient map: complement is not a complement");
        for (std::size_t r = 0; r < comp.size(); ++r) q.projection.rows[r][col] = (*sol)[k + r];
    }
    return q;
}

namespace {

void require_inside_lineality(const Polyhedron& P, const QuotientMap& q) {
    const HRep& h = P.hrep();
    for (const RatVec& z : q.subspace_basis)
        for (const Rat& v : h.A.apply(z))
            if (v != 0)
                throw Error(ErrorCode::HypothesisViolated,
                            "subspace is not inside the recession cone's lineality space");
}

}  // namespace

Polyhedron quotient(const Polyhedron& P, const QuotientMap& q) {
    if (P.dim() != q.ambient_dim) throw Error(ErrorCode::DimensionMismatch, "quotient: ambient dim");
    require_inside_lineality(P, q);
    const VRep& v = P.vrep();
    VRep raw;
    raw.dim = q.quotient_dim();
    for (const RatVec& x : v.vertices) raw.vertices.push_back(q.projection.apply(x));
    for (const RatVec& x : v.rays) {
        RatVec px = q.projection.apply(x);
        if (!vec_is_zero(px)) raw.rays.push_back(std::move(px));
    }
    for (const RatVec& x : v.lineality) {
        RatVec px = q.projection.apply(x);
        if (!vec_is_zero(px)) raw.lineality.push_back(std::move(px));
    }
    return Polyhedron::from_vrep(std::move(raw));
}

namespace {

// Nearest point in the quotient norm: minimize t over y in Bq and coset
// shift z with |W(x - y) - Z z|_inf <= t, where W embeds quotient
// coordinates back into the ambient space.
Rat dist_point_quotient(const Polyhedron& Bq, const RatVec& x, const QuotientMap& q) {
    const std::size_t p = q.quotient_dim();
    const std::size_t k = q.subspace_basis.size();
    const std::size_t n = q.ambient_dim;
    const HRep& h = Bq.hrep();
    const std::size_t m = h.A.nrows;
    // variables (y in R^p, z in R^k, t)
    RatMat A(m + 2 * n, p + k + 1);
    RatVec b(m + 2 * n, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < p; ++j) A.rows[i][j] = h.A.rows[i][j];
        b[i] = h.b[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
        // row value W(x - y) - Z z at ambient coordinate i
        Rat xi(0);
        RatVec wrow(p, Rat(0));
        for (std::size_t j = 0; j < p; ++j) {
            wrow[j] = q.complement_basis[j][i];
            xi += wrow[j] * x[j];
        }
        RatVec zrow(k, Rat(0));
        for (std::size_t l = 0; l < k; ++l) zrow[l] = q.subspace_basis[l][i];
        //  W(x-y) - Zz <= t   ->  -W y - Z z - t <= -W x
        for (std::size_t j = 0; j < p; ++j) A.rows[m + i][j] = -wrow[j];
        for (std::size_t l = 0; l < k; ++l) A.rows[m + i][p + l] = -zrow[l];
        A.rows[m + i][p + k] = -1;
        b[m + i] = -xi;
        // -(W(x-y) - Zz) <= t ->  W y + Z z - t <= W x
        for (std::size_t j = 0; j < p; ++j) A.rows[m + n + i][j] = wrow[j];
        for (std::size_t l = 0; l < k; ++l) A.rows[m + n + i][p + l] = zrow[l];
        A.rows[m + n + i][p + k] = -1;
        b[m + n + i] = xi;
    }
    RatVec c = zero_vec(p + k + 1);
    c[p + k] = -1;
    LPOutcome out = lp_solve(LinearProgram{std::move(A), std::move(b), std::move(c), Sense::Maximize});
    if (out.status != LPStatus::Optimal)
        throw std::logic_error("quotient-norm distance must have an optimum");
    return -out.value;
}

ExtRat directed_quotient(const Polyhedron& Aq, const Polyhedron& Bq, const QuotientMap& q,
                         ExecMode mode) {
    if (escape_direction(recession_cone(Aq), recession_cone(Bq))) return ExtRat::pos_inf();
    const std::vector<RatVec>& verts = Aq.vrep().vertices;
    std::vector<Rat> dists(verts.size());
    if (mode == ExecMode::Parallel) {
        Bq.hrep();
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(verts.size()); ++i)
            dists[static_cast<std::size_t>(i)] =
                dist_point_quotient(Bq, verts[static_cast<std::size_t>(i)], q);
    } else {
        for (std::size_t i = 0; i < verts.size(); ++i)
            dists[i] = dist_point_quotient(Bq, verts[i], q);
    }
    Rat best(0);
    for (const Rat& d : dists)
        if (d > best) best = d;
    return ExtRat(best);
}

}  // namespace

ExtRat hausdorff_quotient_norm(const Polyhedron& Aq, const Polyhedron& Bq, const QuotientMap& q,
                               ExecMode mode) {
    return ext_max(directed_quotient(Aq, Bq, q, mode), directed_quotient(Bq, Aq, q, mode));
}

bool verify_quotient_isometry(const Polyhedron& A, const Polyhedron& B, const QuotientMap& q,
                              ExecMode mode) {
    ExtRat ambient = hausdorff(A, B, mode).value;
    ExtRat quotiented = hausdorff_quotient_norm(quotient(A, q), quotient(B, q), q, mode);
    return ambient == quotiented;
}

bool OpMetricReport::all_pass() const {
    return std::all_of(clauses.begin(), clauses.end(),
                       [](const ClauseCheck& c) { return !c.applicable || c.pass; });
}

OpMetricReport check_operation_metrics(const Polyhedron& A, const Polyhedron& B,
                                       const Polyhedron& C, const Polyhedron& A2,
                                       const Polyhedron& B2, const Rat& r, const Rat& t,
                                       const Rat& t2, ExecMode mode) {
    OpMetricReport rep;
    auto dist = [&](const Polyhedron& X, const Polyhedron& Y) { return hausdorff(X, Y, mode).value; };

    {
        ClauseCheck c;
        c.id = 1;
        ExtRat lhs = dist(minkowski_sum(A, B), minkowski_sum(A2, B2));
        ExtRat rhs = dist(A, A2) + dist(B, B2);
        c.lhs = lhs.str();
        c.rhs = rhs.str();
        c.pass = lhs <= rhs;
        rep.clauses.push_back(std::move(c));
    }
    {
        ClauseCheck c;
        c.id = 2;
        // V*_A contains V*_B cup V*_C iff V_A is inside V_B cap V_C.
        PolyCone VA = recession_cone(A), VB = recession_cone(B), VC = recession_cone(C);
        if (cone_subset(VA, VB) && cone_subset(VA, VC)) {
            ExtRat lhs = dist(minkowski_sum(A, B), minkowski_sum(A, C));
            ExtRat rhs = dist(B, C);
            c.lhs = lhs.str();
            c.rhs = rhs.str();
            c.pass = lhs == rhs;
        } else {
            c.applicable = false;
            c.note = "hypothesis not met";
        }
        rep.clauses.push_back(std::move(c));
    }
    {
        ClauseCheck c;
        c.id = 3;
        ExtRat lhs = dist(hull_union(A, B), hull_union(A2, B2));
        ExtRat rhs = ext_max(dist(A, A2), dist(B, B2));
        c.lhs = lhs.str();
        c.rhs = rhs.str();
        c.pass = lhs <= rhs;
        rep.clauses.push_back(std::move(c));
    }
    {
        ClauseCheck c;
        c.id = 4;
        ExtRat lhs = dist(scale(A, r), scale(B, r));
        ExtRat rhs = rat_abs(r) * dist(A, B);
        c.lhs = lhs.str();
        c.rhs = rhs.str();
        c.pass = lhs == rhs;
        rep.clauses.push_back(std::move(c));
    }
    {
        ClauseCheck c;
        c.id = 5;
        // The combination-path identity needs A and B in one component:
        // for bounded A against a cone B the interior combinations all
        // share the cone's component, so the left side is finite while
        // |t - t'| d(A,B) is infinite.
        if (same_component(A, B)) {
            ExtRat lhs = dist(convex_combination(A, B, t), convex_combination(A, B, t2));
            ExtRat rhs = rat_abs(t - t2) * dist(A, B);
            c.lhs = lhs.str();
            c.rhs = rhs.str();
            c.pass = lhs == rhs;
        } else {
            c.applicable = false;
            c.note = "hypothesis not met";
        }
        rep.clauses.push_back(std::move(c));
    }
    return rep;
}

}  // namespace hausconv
