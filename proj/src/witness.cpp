#include "hausconv/witness.hpp"

#include <algorithm>
#include <set>

namespace hausconv {

RatVec WitnessFamily::spike(std::size_t n) const {
    Rat p(1);
    for (std::size_t i = 0; i < n; ++i) p *= 3;
    return vec_add(vec_scale(p, x), y);
}

RatVec build_h(const PolyCone& V) {
    if (!V.lineality.empty())
        throw Error(ErrorCode::NotPointed, "cone has a nontrivial lineality space");
    RatVec h = zero_vec(V.dim);
    for (const RatVec& e : V.generators) {
        // h_e >= 0 on every generator, h_e(e) >= 1
        RatMat A(0, V.dim);
        RatVec b;
        for (const RatVec& g : V.generators) {
            A.append_row(vec_scale(Rat(-1), g));
            b.push_back(Rat(0));
        }
        A.append_row(vec_scale(Rat(-1), e));
        b.push_back(Rat(-1));
        auto he = lp_feasible(A, b);
        if (!he) throw std::logic_error("build_h: separating functional must exist for a pointed cone");
        h = vec_add(h, *he);
    }
    return h;
}

std::pair<RatVec, RatVec> build_f_x(const PolyCone& V, const RatVec& h) {
    std::vector<RatVec> polar = dual_cone_generators(V);
    for (const RatVec& f0 : polar) {
        for (const RatVec& g : V.generators) {
            if (dot(f0, g) != 0) continue;
            RatVec f = vec_scale(Rat(1) / dual_norm(f0), f0);
            Rat hx = dot(h, g);
            if (hx <= 0) throw std::logic_error("build_f_x: h must be positive on generators");
            RatVec x = vec_scale(Rat(1) / hx, g);
            return {std::move(f), std::move(x)};
        }
    }
    throw Error(ErrorCode::NoFacet, "no facet of the cone contains a nonzero generator");
}

RatVec build_y(const RatVec& h, const RatVec& f, const Rat& epsilon) {
    if (epsilon <= 0 || epsilon >= 1)
        throw Error(ErrorCode::HypothesisViolated, "epsilon must lie in (0,1)");
    RatMat H(0, h.size());
    H.append_row(h);
    std::vector<RatVec> kernel = kernel_basis(H);
    RatVec best;
    Rat best_val(0);
    for (const RatVec& k : kernel) {
        Rat v = dot(f, k);
        if (v > best_val) {
            best_val = v;
            best = k;
        } else if (-v > best_val) {
            best_val = -v;
            best = vec_scale(Rat(-1), k);
        }
    }
    if (best_val == 0)
        throw Error(ErrorCode::DependentFunctionals, "f vanishes on ker h: functionals proportional");
    return vec_scale(epsilon / sup_norm(best), best);
}

WitnessFamily witness_family(const PolyCone& V, const Rat& epsilon, std::size_t N) {
    if (V.dim < 2)
        throw Error(ErrorCode::HypothesisViolated, "witness family needs ambient dimension >= 2");
    if (V.generators.empty())
        throw Error(ErrorCode::HypothesisViolated, "witness family needs a nontrivial cone");

    VRep cone_rep;
    cone_rep.dim = V.dim;
    cone_rep.vertices.push_back(zero_vec(V.dim));
    cone_rep.rays = V.generators;

    WitnessFamily w(Polyhedron::from_vrep(std::move(cone_rep)));
    w.cone = V;
    w.h = build_h(V);  // throws NotPointed on lineality
    auto fx = build_f_x(V, w.h);
    w.f = std::move(fx.first);
    w.x = std::move(fx.second);
    w.y = build_y(w.h, w.f, epsilon);
    w.epsilon = epsilon;
    w.delta = dot(w.f, w.y) / 2;

    // Construction sanity, all exact: these identities carry the bounds.
    if (dot(w.h, w.x) != 1 || dot(w.f, w.x) != 0 || dot(w.h, w.y) != 0 || dot(w.f, w.y) != 2 * w.delta ||
        sup_norm(w.y) != epsilon || !support(w.cone_poly, w.f).is_finite() ||
        support(w.cone_poly, w.f).finite() != 0)
        throw std::logic_error("witness_family: construction identities failed");

    for (std::size_t n = 0; n <= N; ++n)
        w.members.push_back(hull_union(w.cone_poly, Polyhedron::singleton(w.spike(n))));
    return w;
}

bool WitnessReport::all_pass() const {
    if (!identities_ok) return false;
    for (const MemberRow& r : members)
        if (!r.within_epsilon) return false;
    for (const PairRow& r : pairs)
        if (!r.separated) return false;
    return true;
}

WitnessReport verify_witness(const WitnessFamily& w, ExecMode mode) {
    WitnessReport rep;
    rep.epsilon = w.epsilon;
    rep.delta = w.delta;

    rep.identities_ok = true;
    Rat power(1);
    for (std::size_t n = 0; n < w.members.size(); ++n) {
        RatVec cn = w.spike(n);
        if (dot(w.h, cn) != power || dot(w.f, cn) != 2 * w.delta) rep.identities_ok = false;
        power *= 3;
    }

    rep.members.resize(w.members.size());
    for (std::size_t n = 0; n < w.members.size(); ++n) {
        ExtRat d = hausdorff(w.members[n], w.cone_poly, mode).value;
        rep.members[n] = {n, d.finite(), d <= ExtRat(w.epsilon)};
    }

    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (std::size_t n = 0; n < w.members.size(); ++n)
        for (std::size_t m = n + 1; m < w.members.size(); ++m) idx.emplace_back(n, m);
    rep.pairs.resize(idx.size());
    if (mode == ExecMode::Parallel) {
        for (const Polyhedron& p : w.members) {
            p.hrep();
            p.vrep();
        }
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(idx.size()); ++k) {
            auto [n, m] = idx[static_cast<std::size_t>(k)];
            ExtRat d = hausdorff(w.members[n], w.members[m], ExecMode::Serial).value;
            rep.pairs[static_cast<std::size_t>(k)] = {n, m, d.finite(), d >= ExtRat(w.delta)};
        }
    } else {
        for (std::size_t k = 0; k < idx.size(); ++k) {
            auto [n, m] = idx[k];
            ExtRat d = hausdorff(w.members[n], w.members[m], ExecMode::Serial).value;
            rep.pairs[k] = {n, m, d.finite(), d >= ExtRat(w.delta)};
        }
    }
    return rep;
}

BiorthFamily biorthogonal_family(std::size_t n,
                                 const std::vector<std::vector<std::size_t>>& subsets) {
    if (n < 1) throw Error(ErrorCode::HypothesisViolated, "biorthogonal family needs n >= 1");
    if (subsets.empty())
        throw Error(ErrorCode::HypothesisViolated, "biorthogonal family needs at least one subset");
    BiorthFamily fam;
    fam.bound = 1;  // L = max over ||e_i||_inf and ||e_i*||_1
    std::set<std::vector<std::size_t>> seen;
    for (const auto& subset : subsets) {
        if (subset.empty())
            throw Error(ErrorCode::HypothesisViolated, "empty index set in biorthogonal family");
        std::vector<std::size_t> s = subset;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.size() != subset.size())
            throw Error(ErrorCode::HypothesisViolated, "repeated index inside a subset");
        if (s.front() < 1 || s.back() > n)
            throw Error(ErrorCode::HypothesisViolated, "subset index outside 1..n");
        if (!seen.insert(s).second)
            throw Error(ErrorCode::HypothesisViolated, "subsets must be distinct");
        VRep v;
        v.dim = n;
        for (std::size_t i : s) v.vertices.push_back(unit_vec(n, i - 1));
        fam.members.push_back(Polyhedron::from_vrep(std::move(v)));
        fam.subsets.push_back(std::move(s));
    }
    return fam;
}

Rat pairwise_min_hausdorff(const std::vector<Polyhedron>& members, ExecMode mode) {
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) idx.emplace_back(i, j);
    if (idx.empty()) throw Error(ErrorCode::HypothesisViolated, "need at least two members");
    std::vector<ExtRat> dists(idx.size());
    if (mode == ExecMode::Parallel) {
        for (const Polyhedron& p : members) {
            p.hrep();
            p.vrep();
        }
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(idx.size()); ++k) {
            auto [i, j] = idx[static_cast<std::size_t>(k)];
            dists[static_cast<std::size_t>(k)] =
                hausdorff(members[i], members[j], ExecMode::Serial).value;
        }
    } else {
        for (std::size_t k = 0; k < idx.size(); ++k) {
            auto [i, j] = idx[k];
            dists[k] = hausdorff(members[i], members[j], ExecMode::Serial).value;
        }
    }
    for (const ExtRat& d : dists)
        if (!d.is_finite())
            throw Error(ErrorCode::HypothesisViolated, "family members lie in different components");
    Rat best = dists.front().finite();
    for (const ExtRat& d : dists)
        if (d.finite() < best) best = d.finite();
    return best;
}

}  // namespace hausconv
