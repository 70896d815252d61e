#pragma once

#include <optional>

#include "hausconv/rational.hpp"

namespace hausconv {

enum class Sense { Maximize, Minimize };

// optimize c*x subject to A x <= b, x free. Equality constraints are
// encoded as pairs of opposite inequalities by callers.
struct LinearProgram {
    RatMat A;
    RatVec b;
    RatVec c;
    Sense sense = Sense::Maximize;
};

enum class LPStatus { Optimal, Unbounded, Infeasible };

// Every outcome carries an exactly checkable certificate:
//   Optimal:    point feasible, dual with dual*A = c, dual*b = value and
//               dual >= 0 (maximize) / dual <= 0 (minimize);
//   Unbounded:  feasible point plus ray with A*ray <= 0 and c*ray > 0
//               (maximize) / c*ray < 0 (minimize);
//   Infeasible: Farkas vector in `dual` (the phase-one dual): dual >= 0,
//               dual^T A = 0, dual*b < 0.
struct LPOutcome {
    LPStatus status = LPStatus::Infeasible;
    Rat value;
    RatVec point;
    RatVec ray;
    RatVec dual;
};

LPOutcome lp_solve(const LinearProgram& lp);

// Phase one only: a point with A x <= b, or nullopt. An empty system
// (m = 0) yields the origin.
std::optional<RatVec> lp_feasible(const RatMat& A, const RatVec& b);

// Re-derives every invariant the outcome claims, using nothing but matrix
// arithmetic. Callers (and the test suite) treat a false return as a solver
// bug.
bool check_lp_certificates(const LinearProgram& lp, const LPOutcome& out);

}  // namespace hausconv
