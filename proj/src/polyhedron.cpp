#include "hausconv/polyhedron.hpp"

#include <algorithm>
#include <stdexcept>

#include "hausconv/error.hpp"

namespace hausconv {

namespace {

void sort_unique(std::vector<RatVec>& vs) {
    std::sort(vs.begin(), vs.end(), vec_lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

RatMat stack_with_equalities(const RatMat& ineq, const std::vector<RatVec>& eq) {
    RatMat all = ineq;
    if (all.ncols == 0) all.ncols = eq.empty() ? 0 : eq.front().size();
    for (const RatVec& e : eq) {
        all.append_row(e);
        all.append_row(vec_scale(Rat(-1), e));
    }
    return all;
}

// Incremental double description for a pointed cone {w : M w <= 0} in R^d
// (rank M = d). Constraints are inserted one at a time; surviving and newly
// combined rays are kept extreme by the algebraic adjacency test: two rays
// are adjacent iff the rows already inserted that vanish on both have rank
// d - 2.
std::vector<RatVec> dd_pointed(const RatMat& M, std::size_t d) {
    if (d == 0) return {};

    // Initial simplicial cone from d linearly independent rows.
    std::vector<std::size_t> base;
    {
        std::vector<RatVec> picked;
        for (std::size_t i = 0; i < M.nrows && base.size() < d; ++i) {
            picked.push_back(M.rows[i]);
            if (row_space_basis(picked, d).basis.size() == base.size() + 1)
                base.push_back(i);
            else
                picked.pop_back();
        }
    }
    if (base.size() != d)
        throw std::logic_error("dd_pointed: constraint matrix does not pin a pointed cone");

    RatMat B(d, d);
    for (std::size_t k = 0; k < d; ++k) B.rows[k] = M.rows[base[k]];
    std::vector<RatVec> rays;
    for (std::size_t j = 0; j < d; ++j) {
        RatVec e = zero_vec(d);
        e[j] = -1;
        auto g = solve_linear(B, e);
        if (!g) throw std::logic_error("dd_pointed: singular initial basis");
        rays.push_back(vec_primitive(*g));
    }

    std::vector<std::size_t> processed(base.begin(), base.end());
    auto is_processed = [&](std::size_t i) {
        return std::find(processed.begin(), processed.end(), i) != processed.end();
    };

    for (std::size_t i = 0; i < M.nrows; ++i) {
        if (is_processed(i)) continue;
        const RatVec& row = M.rows[i];
        std::vector<RatVec> keep, plus, minus;
        std::vector<Rat> splus, sminus;
        for (const RatVec& g : rays) {
            Rat s = dot(row, g);
            if (s == 0)
                keep.push_back(g);
            else if (s > 0) {
                plus.push_back(g);
                splus.push_back(s);
            } else {
                minus.push_back(g);
                sminus.push_back(s);
            }
        }
        auto adjacent = [&](const RatVec& p, const RatVec& q) {
            std::vector<RatVec> zero_rows;
            for (std::size_t r : processed)
                if (dot(M.rows[r], p) == 0 && dot(M.rows[r], q) == 0)
                    zero_rows.push_back(M.rows[r]);
            return rank(RatMat::from_rows(std::move(zero_rows))) == d - 2;
        };
        std::vector<RatVec> next = minus;
        next.insert(next.end(), keep.begin(), keep.end());
        for (std::size_t a = 0; a < plus.size(); ++a) {
            for (std::size_t b = 0; b < minus.size(); ++b) {
                if (d >= 2 && !adjacent(plus[a], minus[b])) continue;
                // positive combination lying on the new hyperplane
                RatVec g = vec_sub(vec_scale(splus[a], minus[b]), vec_scale(sminus[b], plus[a]));
                next.push_back(vec_primitive(g));
            }
        }
        sort_unique(next);
        rays = std::move(next);
        processed.push_back(i);
    }
    return rays;
}

// Membership of f in the cone of finitely many generators, as an LP
// feasibility problem: mu >= 0 with gens^T mu = f.
bool in_cone_of(const std::vector<RatVec>& gens, const RatVec& f) {
    const std::size_t k = gens.size();
    const std::size_t n = f.size();
    if (k == 0) return vec_is_zero(f);
    RatMat A(2 * n + k, k);
    RatVec b(2 * n + k, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            A.rows[i][j] = gens[j][i];
            A.rows[n + i][j] = -gens[j][i];
        }
        b[i] = f[i];
        b[n + i] = -f[i];
    }
    for (std::size_t j = 0; j < k; ++j) A.rows[2 * n + j][j] = -1;
    return lp_feasible(A, b).has_value();
}

}  // namespace

bool is_empty(const HRep& h) {
    if (h.A.nrows == 0) return false;
    return !lp_feasible(h.A, h.b).has_value();
}

bool is_empty(const VRep& v) { return v.vertices.empty(); }

ConeGens cone_dd(const RatMat& ineq, const std::vector<RatVec>& eq, std::size_t dim) {
    // Lineality space: where every constraint is tight.
    RatMat all(0, dim);
    for (const RatVec& r : ineq.rows) all.append_row(r);
    for (const RatVec& r : eq) all.append_row(r);
    RowBasis lin = row_space_basis(kernel_basis(all), dim);

    // Split the inequality rows into implicit equalities and strict rows.
    // A row is an implicit equality iff its minimum over the cone is 0
    // rather than unbounded below.
    RatMat sys = stack_with_equalities(ineq, eq);
    RatVec zero_rhs(sys.nrows, Rat(0));
    std::vector<RatVec> eq_all = eq;
    std::vector<RatVec> strict;
    for (std::size_t i = 0; i < ineq.nrows; ++i) {
        LinearProgram lp{sys, zero_rhs, ineq.rows[i], Sense::Minimize};
        if (lp_solve(lp).status == LPStatus::Optimal)
            eq_all.push_back(ineq.rows[i]);
        else
            strict.push_back(ineq.rows[i]);
    }

    // Linear hull {z : eq_all z = 0}, then a complement of the lineality
    // space inside it; the pointed part of the cone lives there.
    RatMat eq_mat(0, dim);
    for (const RatVec& r : eq_all) eq_mat.append_row(r);
    std::vector<RatVec> hull = kernel_basis(eq_mat);

    std::vector<RatVec> span = lin.basis;
    std::vector<RatVec> comp;
    for (const RatVec& h : hull) {
        span.push_back(h);
        if (row_space_basis(span, dim).basis.size() == lin.basis.size() + comp.size() + 1)
            comp.push_back(h);
        else
            span.pop_back();
    }

    ConeGens out;
    out.lineality = lin.basis;
    const std::size_t p = comp.size();
    if (p > 0) {
        RatMat reduced(strict.size(), p);
        for (std::size_t i = 0; i < strict.size(); ++i)
            for (std::size_t j = 0; j < p; ++j) reduced.rows[i][j] = dot(strict[i], comp[j]);
        std::vector<RatVec> rays_w = dd_pointed(reduced, p);
        for (const RatVec& w : rays_w) {
            RatVec z = zero_vec(dim);
            for (std::size_t j = 0; j < p; ++j)
                if (w[j] != 0) z = vec_add(z, vec_scale(w[j], comp[j]));
            out.rays.push_back(vec_primitive(z));
        }
        sort_unique(out.rays);
    }
    return out;
}

namespace {

// Rewrites a raw generator description into the canonical VRep: lineality
// in RREF, vertices and rays pushed into the coordinate complement of the
// lineality space, rays primitive, everything deduplicated and sorted.
// When `prune` is set, non-extreme vertices and redundant rays are removed
// by exact LP tests.
VRep canonicalize_vrep(VRep raw, bool prune) {
    const std::size_t n = raw.dim;
    for (const RatVec& r : raw.rays)
        if (vec_is_zero(r)) throw Error(ErrorCode::ParseError, "zero vector listed as a ray");

    RowBasis lin = row_space_basis(raw.lineality, n);

    VRep out;
    out.dim = n;
    out.lineality = lin.basis;
    for (const RatVec& v : raw.vertices) out.vertices.push_back(project_along(lin, v));
    for (const RatVec& r : raw.rays) {
        RatVec pr = project_along(lin, r);
        if (vec_is_zero(pr)) continue;  // ray inside the lineality space
        out.rays.push_back(vec_primitive(pr));
    }
    sort_unique(out.vertices);
    sort_unique(out.rays);

    if (prune) {
        // Generator unions can hide lineality (opposite combinations of
        // rays from different operands). The lineality of cone(R) is
        // spanned exactly by the generators whose negation stays inside,
        // so one membership pass finds all of it; afterwards the ray cone
        // is pointed and the pruning tests below are sound.
        if (!out.rays.empty()) {
            std::vector<RatVec> flips;
            for (const RatVec& r : out.rays)
                if (in_cone_of(out.rays, vec_scale(Rat(-1), r))) flips.push_back(r);
            if (!flips.empty()) {
                std::vector<RatVec> all_lin = out.lineality;
                all_lin.insert(all_lin.end(), flips.begin(), flips.end());
                lin = row_space_basis(all_lin, n);
                out.lineality = lin.basis;
                std::vector<RatVec> verts = std::move(out.vertices);
                std::vector<RatVec> rays = std::move(out.rays);
                out.vertices.clear();
                out.rays.clear();
                for (const RatVec& v : verts) out.vertices.push_back(project_along(lin, v));
                for (const RatVec& r : rays) {
                    RatVec pr = project_along(lin, r);
                    if (vec_is_zero(pr)) continue;
                    out.rays.push_back(vec_primitive(pr));
                }
                sort_unique(out.vertices);
                sort_unique(out.rays);
            }
        }
        // A ray is redundant iff it is a nonnegative combination of the
        // other rays (all generators live in the pointed complement here).
        if (out.rays.size() > 1) {
            std::vector<RatVec> extreme;
            for (std::size_t i = 0; i < out.rays.size(); ++i) {
                std::vector<RatVec> others;
                for (std::size_t j = 0; j < out.rays.size(); ++j)
                    if (j != i) others.push_back(out.rays[j]);
                if (!in_cone_of(others, out.rays[i])) extreme.push_back(out.rays[i]);
            }
            out.rays = std::move(extreme);
        }
        // A vertex survives iff some functional exposes it strictly against
        // the other vertices while staying recession-bounded.
        if (out.vertices.size() > 1 || !out.rays.empty()) {
            std::vector<RatVec> keep;
            for (std::size_t i = 0; i < out.vertices.size(); ++i) {
                RatMat A(0, n);
                RatVec b;
                for (std::size_t j = 0; j < out.vertices.size(); ++j) {
                    if (j == i) continue;
                    A.append_row(vec_sub(out.vertices[j], out.vertices[i]));
                    b.push_back(Rat(-1));
                }
                for (const RatVec& r : out.rays) {
                    A.append_row(r);
                    b.push_back(Rat(0));
                }
                for (const RatVec& l : out.lineality) {
                    A.append_row(l);
                    b.push_back(Rat(0));
                    A.append_row(vec_scale(Rat(-1), l));
                    b.push_back(Rat(0));
                }
                if (lp_feasible(A, b).has_value()) keep.push_back(out.vertices[i]);
            }
            out.vertices = std::move(keep);
        }
    }
    return out;
}

}  // namespace

VRep dd_convert(const HRep& h) {
    const std::size_t n = h.dim;
    if (h.A.nrows == 0) {
        VRep v;
        v.dim = n;
        v.vertices.push_back(zero_vec(n));
        for (std::size_t i = 0; i < n; ++i) v.lineality.push_back(unit_vec(n, i));
        return canonicalize_vrep(std::move(v), false);
    }
    if (is_empty(h)) throw Error(ErrorCode::EmptySet, "polyhedron is empty");

    // Homogenize: {(x, t) : A x - t b <= 0, -t <= 0} and read vertices off
    // the t > 0 generators.
    RatMat M(h.A.nrows + 1, n + 1);
    for (std::size_t i = 0; i < h.A.nrows; ++i) {
        for (std::size_t j = 0; j < n; ++j) M.rows[i][j] = h.A.rows[i][j];
        M.rows[i][n] = -h.b[i];
    }
    M.rows[h.A.nrows][n] = -1;

    ConeGens g = cone_dd(M, {}, n + 1);
    VRep raw;
    raw.dim = n;
    for (const RatVec& l : g.lineality) {
        if (l[n] != 0) throw std::logic_error("dd_convert: lineality escaped the slice t = 0");
        raw.lineality.emplace_back(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(n));
    }
    for (const RatVec& r : g.rays) {
        RatVec x(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
        if (r[n] == 0) {
            raw.rays.push_back(std::move(x));
        } else {
            Rat inv = Rat(1) / r[n];
            raw.vertices.push_back(vec_scale(inv, x));
        }
    }
    return canonicalize_vrep(std::move(raw), false);
}

HRep vrep_to_hrep(const VRep& v) {
    const std::size_t n = v.dim;
    if (v.vertices.empty()) throw Error(ErrorCode::EmptySet, "VRep without vertices");

    // Polar of the homogenization: functionals (f, g) with f*x + g <= 0 on
    // all generators. Its extreme rays are the irredundant inequalities,
    // its lineality the implicit equalities.
    RatMat ineq(0, n + 1);
    for (const RatVec& vert : v.vertices) {
        RatVec row = vert;
        row.push_back(Rat(1));
        ineq.append_row(std::move(row));
    }
    for (const RatVec& ray : v.rays) {
        RatVec row = ray;
        row.push_back(Rat(0));
        ineq.append_row(std::move(row));
    }
    std::vector<RatVec> eq;
    for (const RatVec& l : v.lineality) {
        RatVec row = l;
        row.push_back(Rat(0));
        eq.push_back(std::move(row));
    }

    ConeGens polar = cone_dd(ineq, eq, n + 1);

    // Push each facet class into the canonical complement of the polar's
    // lineality (the affine functions vanishing on the set); without this,
    // lifted representatives can be redundant against the equality pairs,
    // or even disguise the vacuous 0*x <= const class, whose canonical
    // representative is the projected homogenization direction.
    RowBasis lin0 = row_space_basis(polar.lineality, n + 1);
    RatVec t_neg = zero_vec(n + 1);
    t_neg[n] = -1;
    RatVec vacuous = vec_primitive(project_along(lin0, t_neg));

    HRep h;
    h.dim = n;
    h.A = RatMat(0, n);
    std::vector<std::pair<RatVec, Rat>> rows;
    for (const RatVec& r : polar.rays) {
        RatVec rr = vec_primitive(project_along(lin0, r));
        if (rr == vacuous) continue;
        RatVec f(rr.begin(), rr.begin() + static_cast<std::ptrdiff_t>(n));
        if (vec_is_zero(f)) continue;
        rows.emplace_back(std::move(f), Rat(-rr[n]));
    }
    for (const RatVec& l : polar.lineality) {
        RatVec f(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(n));
        if (vec_is_zero(f)) continue;
        Rat beta(-l[n]);
        rows.emplace_back(f, beta);
        rows.emplace_back(vec_scale(Rat(-1), f), -beta);
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return vec_lex_less(a.first, b.first);
        return a.second < b.second;
    });
    for (auto& [f, beta] : rows) {
        h.A.append_row(std::move(f));
        h.b.push_back(std::move(beta));
    }
    return h;
}

// --- Polyhedron ---------------------------------------------------------------

Polyhedron Polyhedron::from_hrep(HRep h) {
    if (h.A.nrows != h.b.size() || (h.A.nrows > 0 && h.A.ncols != h.dim))
        throw Error(ErrorCode::DimensionMismatch, "HRep dimensions inconsistent");
    if (h.A.nrows == 0) h.A.ncols = h.dim;
    if (hausconv::is_empty(h)) throw Error(ErrorCode::EmptySet, "polyhedron is empty");
    Polyhedron p(h.dim);
    p.cache_->h = std::make_shared<const HRep>(std::move(h));
    return p;
}

Polyhedron Polyhedron::from_vrep(VRep v) {
    for (const RatVec& x : v.vertices)
        if (x.size() != v.dim) throw Error(ErrorCode::DimensionMismatch, "vertex dimension");
    for (const RatVec& x : v.rays)
        if (x.size() != v.dim) throw Error(ErrorCode::DimensionMismatch, "ray dimension");
    for (const RatVec& x : v.lineality)
        if (x.size() != v.dim) throw Error(ErrorCode::DimensionMismatch, "lineality dimension");
    if (v.vertices.empty())
        throw Error(ErrorCode::EmptySet, "VRep without vertices describes no base point");
    VRep canon = canonicalize_vrep(std::move(v), true);
    Polyhedron p(canon.dim);
    p.cache_->v = std::make_shared<const VRep>(std::move(canon));
    return p;
}

Polyhedron Polyhedron::from_trusted(std::optional<HRep> h, std::optional<VRep> v) {
    if (!h && !v) throw std::logic_error("from_trusted: no representation given");
    Polyhedron p(h ? h->dim : v->dim);
    if (h) p.cache_->h = std::make_shared<const HRep>(std::move(*h));
    if (v) p.cache_->v = std::make_shared<const VRep>(std::move(*v));
    return p;
}

Polyhedron Polyhedron::whole_space(std::size_t n) {
    HRep h;
    h.dim = n;
    h.A = RatMat(0, n);
    return from_hrep(std::move(h));
}

Polyhedron Polyhedron::singleton(RatVec p) {
    VRep v;
    v.dim = p.size();
    v.vertices.push_back(std::move(p));
    return from_vrep(std::move(v));
}

const HRep& Polyhedron::hrep() const {
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        if (cache_->h) return *cache_->h;
    }
    auto h = std::make_shared<const HRep>(vrep_to_hrep(vrep()));
    std::lock_guard<std::mutex> lk(cache_->mu);
    if (!cache_->h) cache_->h = std::move(h);
    return *cache_->h;
}

const VRep& Polyhedron::vrep() const {
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        if (cache_->v) return *cache_->v;
    }
    std::shared_ptr<const HRep> h;
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        h = cache_->h;
    }
    auto v = std::make_shared<const VRep>(dd_convert(*h));
    std::lock_guard<std::mutex> lk(cache_->mu);
    if (!cache_->v) cache_->v = std::move(v);
    return *cache_->v;
}

bool Polyhedron::has_hrep() const {
    std::lock_guard<std::mutex> lk(cache_->mu);
    return cache_->h != nullptr;
}

bool Polyhedron::has_vrep() const {
    std::lock_guard<std::mutex> lk(cache_->mu);
    return cache_->v != nullptr;
}

// --- operations ----------------------------------------------------------------

ExtRat support(const Polyhedron& P, const RatVec& f) {
    if (f.size() != P.dim()) throw Error(ErrorCode::DimensionMismatch, "support: direction dim");
    const VRep& v = P.vrep();
    for (const RatVec& l : v.lineality)
        if (dot(f, l) != 0) return ExtRat::pos_inf();
    for (const RatVec& r : v.rays)
        if (dot(f, r) > 0) return ExtRat::pos_inf();
    Rat best = dot(f, v.vertices.front());
    for (const RatVec& vert : v.vertices) {
        Rat val = dot(f, vert);
        if (val > best) best = val;
    }
    return ExtRat(best);
}

DistCertificate dist_point_certified(const Polyhedron& P, const RatVec& x) {
    if (x.size() != P.dim()) throw Error(ErrorCode::DimensionMismatch, "dist_point: point dim");
    const HRep& h = P.hrep();
    const std::size_t n = P.dim();
    const std::size_t m = h.A.nrows;
    // Variables (y, t): minimize t subject to y in P and |x - y| <= t
    // componentwise. Solved as max -t so the dual multipliers are >= 0.
    RatMat A(m + 2 * n, n + 1);
    RatVec b(m + 2 * n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) A.rows[i][j] = h.A.rows[i][j];
        b[i] = h.b[i];
    }
    for (std::size_t j = 0; j < n; ++j) {
        A.rows[m + j][j] = 1;
        A.rows[m + j][n] = -1;
        b[m + j] = x[j];
        A.rows[m + n + j][j] = -1;
        A.rows[m + n + j][n] = -1;
        b[m + n + j] = -x[j];
    }
    RatVec c = zero_vec(n + 1);
    c[n] = -1;
    LPOutcome out = lp_solve(LinearProgram{std::move(A), std::move(b), std::move(c), Sense::Maximize});
    if (out.status != LPStatus::Optimal)
        throw std::logic_error("dist_point: nearest-point program must have an optimum");

    DistCertificate res;
    res.value = -out.value;
    res.nearest.assign(out.point.begin(), out.point.begin() + static_cast<std::ptrdiff_t>(n));
    res.separator = zero_vec(n);
    for (std::size_t j = 0; j < n; ++j)
        res.separator[j] = out.dual[m + n + j] - out.dual[m + j];
    return res;
}

Rat dist_point(const Polyhedron& P, const RatVec& x) { return dist_point_certified(P, x).value; }

bool contains(const Polyhedron& P, const Polyhedron& Q) {
    if (P.dim() != Q.dim()) throw Error(ErrorCode::DimensionMismatch, "contains: ambient dims differ");
    const HRep& h = P.hrep();
    const VRep& v = Q.vrep();
    for (const RatVec& vert : v.vertices) {
        RatVec Av = h.A.apply(vert);
        for (std::size_t i = 0; i < Av.size(); ++i)
            if (Av[i] > h.b[i]) return false;
    }
    for (const RatVec& ray : v.rays)
        for (const Rat& val : h.A.apply(ray))
            if (val > 0) return false;
    for (const RatVec& l : v.lineality)
        for (const Rat& val : h.A.apply(l))
            if (val != 0) return false;
    return true;
}

bool set_equal(const Polyhedron& P, const Polyhedron& Q) {
    return contains(P, Q) && contains(Q, P);
}

namespace {

Polyhedron from_raw_generators(VRep raw, bool prune = true) {
    VRep canon = canonicalize_vrep(std::move(raw), prune);
    if (canon.vertices.empty()) throw Error(ErrorCode::EmptySet, "operation produced no vertices");
    return Polyhedron::from_trusted(std::nullopt, std::move(canon));
}

}  // namespace

Polyhedron minkowski_sum(const Polyhedron& P, const Polyhedron& Q) {
    if (P.dim() != Q.dim()) throw Error(ErrorCode::DimensionMismatch, "sum: ambient dims differ");
    const VRep& a = P.vrep();
    const VRep& b = Q.vrep();
    VRep raw;
    raw.dim = P.dim();
    for (const RatVec& p : a.vertices)
        for (const RatVec& q : b.vertices) raw.vertices.push_back(vec_add(p, q));
    raw.rays = a.rays;
    raw.rays.insert(raw.rays.end(), b.rays.begin(), b.rays.end());
    raw.lineality = a.lineality;
    raw.lineality.insert(raw.lineality.end(), b.lineality.begin(), b.lineality.end());
    return from_raw_generators(std::move(raw));
}

Polyhedron hull_union(const Polyhedron& P, const Polyhedron& Q) {
    if (P.dim() != Q.dim()) throw Error(ErrorCode::DimensionMismatch, "hull: ambient dims differ");
    const VRep& a = P.vrep();
    const VRep& b = Q.vrep();
    VRep raw;
    raw.dim = P.dim();
    raw.vertices = a.vertices;
    raw.vertices.insert(raw.vertices.end(), b.vertices.begin(), b.vertices.end());
    raw.rays = a.rays;
    raw.rays.insert(raw.rays.end(), b.rays.begin(), b.rays.end());
    raw.lineality = a.lineality;
    raw.lineality.insert(raw.lineality.end(), b.lineality.begin(), b.lineality.end());
    return from_raw_generators(std::move(raw));
}

Polyhedron scale(const Polyhedron& P, const Rat& r) {
    if (r == 0) return Polyhedron::singleton(zero_vec(P.dim()));
    const VRep& v = P.vrep();
    VRep raw;
    raw.dim = P.dim();
    for (const RatVec& x : v.vertices) raw.vertices.push_back(vec_scale(r, x));
    for (const RatVec& x : v.rays) raw.rays.push_back(vec_scale(r, x));
    raw.lineality = v.lineality;
    // scaling preserves extremeness, so no pruning pass is needed
    return from_raw_generators(std::move(raw), false);
}

Polyhedron convex_combination(const Polyhedron& P, const Polyhedron& Q, const Rat& t) {
    if (t < 0 || t > 1)
        throw Error(ErrorCode::HypothesisViolated, "convex combination weight outside [0,1]");
    return minkowski_sum(scale(P, Rat(1) - t), scale(Q, t));
}

Polyhedron translate(const Polyhedron& P, const RatVec& v) {
    if (v.size() != P.dim()) throw Error(ErrorCode::DimensionMismatch, "translate: vector dim");
    std::optional<HRep> nh;
    std::optional<VRep> nv;
    if (P.has_hrep()) {
        HRep moved = P.hrep();
        RatVec shift = moved.A.apply(v);
        for (std::size_t i = 0; i < moved.b.size(); ++i) moved.b[i] += shift[i];
        nh = std::move(moved);
    }
    if (P.has_vrep()) {
        VRep raw = P.vrep();
        for (RatVec& x : raw.vertices) x = vec_add(x, v);
        nv = canonicalize_vrep(std::move(raw), false);
    }
    return Polyhedron::from_trusted(std::move(nh), std::move(nv));
}

}  // namespace hausconv
