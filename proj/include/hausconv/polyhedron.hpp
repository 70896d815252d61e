#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hausconv/linalg.hpp"
#include "hausconv/lp.hpp"
#include "hausconv/rational.hpp"

namespace hausconv {

// Half-space representation {x : A x <= b}. Zero rows (m = 0) describe the
// whole ambient space.
struct HRep {
    RatMat A;
    RatVec b;
    std::size_t dim = 0;
};

// Generator representation conv(vertices) + cone(rays) + span(lineality).
// Canonical form (as produced by this library):
//   - lineality is the reduced row echelon basis of the lineality space;
//   - vertices and rays have zero coordinates at the lineality pivot
//     columns (they live in the fixed coordinate complement);
//   - rays are scaled to coprime integer entries;
//   - every list is lexicographically sorted and free of redundancy;
//   - vertices is nonempty for every nonempty set.
struct VRep {
    std::vector<RatVec> vertices;
    std::vector<RatVec> rays;
    std::vector<RatVec> lineality;
    std::size_t dim = 0;
};

bool is_empty(const HRep& h);  // LP feasibility
bool is_empty(const VRep& v);  // no vertices

// Generators of the polyhedral cone {z : ineq z <= 0, eq z = 0}: a lineality
// basis plus the extreme rays of the pointed quotient, lifted through a
// deterministic complement. This is the double description engine backing
// every representation conversion in the library.
struct ConeGens {
    std::vector<RatVec> lineality;
    std::vector<RatVec> rays;
};
ConeGens cone_dd(const RatMat& ineq, const std::vector<RatVec>& eq, std::size_t dim);

// H -> V conversion. Throws Error(EmptySet) on an infeasible system.
VRep dd_convert(const HRep& h);

// V -> H conversion via polarity of the homogenization; the result has no
// redundant row, with implicit equalities emitted as +/- row pairs.
HRep vrep_to_hrep(const VRep& v);

// A non-empty closed convex polyhedron. Immutable; representation
// conversions are computed on demand and cached (write-once cells guarded
// by a mutex, so concurrent readers are safe). Copies share the caches.
class Polyhedron {
public:
    static Polyhedron from_hrep(HRep h);
    static Polyhedron from_vrep(VRep v);
    // Installs already-validated representations without re-checking them;
    // internal fast path for operations that preserve canonical form.
    static Polyhedron from_trusted(std::optional<HRep> h, std::optional<VRep> v);
    static Polyhedron whole_space(std::size_t n);
    static Polyhedron singleton(RatVec p);

    std::size_t dim() const { return dim_; }
    const HRep& hrep() const;
    const VRep& vrep() const;
    bool has_hrep() const;
    bool has_vrep() const;

    // Always false: empty inputs are rejected when a Polyhedron is built.
    bool is_empty() const { return false; }

private:
    explicit Polyhedron(std::size_t d) : dim_(d), cache_(std::make_shared<Cache>()) {}
    struct Cache {
        mutable std::mutex mu;
        std::shared_ptr<const HRep> h;
        std::shared_ptr<const VRep> v;
    };
    std::size_t dim_;
    std::shared_ptr<Cache> cache_;
};

// sup{f*x : x in P}; +inf exactly when f has no finite supremum on P.
ExtRat support(const Polyhedron& P, const RatVec& f);

// min{||x - y||_inf : y in P} as one exact LP.
Rat dist_point(const Polyhedron& P, const RatVec& x);

// dist_point together with the nearest point and the separating functional
// recovered from LP duality: ||separator||_1 <= 1, and
// separator*x - support(P, separator) = value, with ||separator||_1 = 1
// whenever value > 0.
struct DistCertificate {
    Rat value;
    RatVec nearest;
    RatVec separator;
};
DistCertificate dist_point_certified(const Polyhedron& P, const RatVec& x);

bool contains(const Polyhedron& P, const Polyhedron& Q);
bool set_equal(const Polyhedron& P, const Polyhedron& Q);

Polyhedron minkowski_sum(const Polyhedron& P, const Polyhedron& Q);
Polyhedron hull_union(const Polyhedron& P, const Polyhedron& Q);
Polyhedron scale(const Polyhedron& P, const Rat& r);
Polyhedron convex_combination(const Polyhedron& P, const Polyhedron& Q, const Rat& t);
Polyhedron translate(const Polyhedron& P, const RatVec& v);

}  // namespace hausconv
