#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hausconv/cones.hpp"
#include "hausconv/polyhedron.hpp"

namespace hausconv {

// The distance kernels fan independent nearest-point programs out over
// OpenMP threads by default. Serial is the reference implementation the
// test suite compares against; both produce identical exact rationals.
enum class ExecMode { Serial, Parallel };

enum class Side { AtoB, BtoA };
const char* side_name(Side s);

// sup_{a in A} dist(a, B): +inf when some recession direction of A leaves
// the recession cone of B, otherwise the maximum of finitely many exact
// nearest-point values over the canonical vertices of A.
ExtRat directed_hausdorff(const Polyhedron& A, const Polyhedron& B,
                          ExecMode mode = ExecMode::Parallel);

struct HausdorffResult {
    ExtRat value;
    // Present when the distance is finite and positive:
    std::optional<RatVec> witness_point;  // vertex realizing the max
    Side witness_side = Side::AtoB;
    std::optional<RatVec> separator;      // ||.||_1 = 1, gap attained exactly
    bool attained = false;
    // Present when the distance is infinite: a recession direction of one
    // set that the other lacks.
    std::optional<RatVec> failing_direction;
    Side failing_side = Side::AtoB;
};

HausdorffResult hausdorff(const Polyhedron& A, const Polyhedron& B,
                          ExecMode mode = ExecMode::Parallel);

// |sup f(A) - sup f(B)| in the extended-real hypermetric: equal infinite
// suprema contribute 0, a single infinite one gives +inf.
ExtRat delta_gap(const Polyhedron& A, const Polyhedron& B, const RatVec& f);

// Projection X -> X/Z in coordinates of a fixed complement of Z spanned by
// standard basis vectors.
struct QuotientMap {
    std::vector<RatVec> subspace_basis;    // Z, RREF
    std::vector<RatVec> complement_basis;  // e_j for the non-pivot columns
    RatMat projection;                     // (n-k) x n, kernel = span Z
    std::size_t ambient_dim = 0;
    std::size_t quotient_dim() const { return complement_basis.size(); }
};

QuotientMap make_quotient_map(const std::vector<RatVec>& subspace, std::size_t ambient_dim);

// Image of P under the quotient map. Requires span Z inside the lineality
// space of the recession cone of P (then the image is closed); otherwise
// throws Error(HypothesisViolated).
Polyhedron quotient(const Polyhedron& P, const QuotientMap& q);

// Checks d_H(A, B) = d_H(A/Z, B/Z) exactly. The quotient-space distance is
// measured in the quotient norm ||x + Z|| = min_z ||x - z||_inf, realized
// inside each nearest-point program by free coset variables.
bool verify_quotient_isometry(const Polyhedron& A, const Polyhedron& B, const QuotientMap& q,
                              ExecMode mode = ExecMode::Parallel);

// Hausdorff distance between polyhedra given in quotient coordinates,
// measured in the quotient norm induced by l_inf. Exposed for tests.
ExtRat hausdorff_quotient_norm(const Polyhedron& Aq, const Polyhedron& Bq, const QuotientMap& q,
                               ExecMode mode = ExecMode::Parallel);

// One pass/fail row per metric identity of the algebra operations:
//   1  d(A+B, A'+B') <= d(A,A') + d(B,B')
//   2  d(A+B, A+C) = d(B,C)            [needs V_A inside V_B cap V_C]
//   3  d(max{A,B}, max{A',B'}) <= max(d(A,A'), d(B,B'))
//   4  d(rA, rB) = |r| d(A,B)
//   5  d(mu(A,B,t), mu(A,B,t')) = |t-t'| d(A,B)
struct ClauseCheck {
    int id = 0;
    bool applicable = true;
    bool pass = false;
    std::string lhs;
    std::string rhs;
    std::string note;
};

struct OpMetricReport {
    std::vector<ClauseCheck> clauses;
    bool all_pass() const;
};

OpMetricReport check_operation_metrics(const Polyhedron& A, const Polyhedron& B,
                                       const Polyhedron& C, const Polyhedron& A2,
                                       const Polyhedron& B2, const Rat& r, const Rat& t,
                                       const Rat& t2, ExecMode mode = ExecMode::Parallel);

}  // namespace hausconv
