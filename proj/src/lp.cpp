#include "hausconv/lp.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace hausconv {

namespace {

// Two-phase tableau simplex over exact rationals with Bland's pivoting rule
// throughout: the smallest eligible column index enters, the smallest basic
// index leaves on ratio ties. That rule never cycles, so termination is
// unconditional, and the whole computation is deterministic.
//
// Free variables are split x = u - v with u, v >= 0. The v block stays the
// exact negation of the u block under every pivot, so only the u, slack and
// artificial columns are stored and v columns are synthesized on demand.
//
// Column index space (fixed for the lifetime of the solve):
//   u_j : j                  j in [0, n)
//   v_j : n + j
//   s_i : 2n + i             slack of original row i
//   a_i : 2n + m0 + i        artificial of original row i
class Simplex {
public:
    Simplex(const RatMat& A, const RatVec& b) : n_(A.ncols), m0_(A.nrows) {
        T_.assign(m0_, RatVec(stored_width() + 1, Rat(0)));
        basis_.resize(m0_);
        orig_row_.resize(m0_);
        dsign_.resize(m0_);
        bool need_phase1 = false;
        for (std::size_t i = 0; i < m0_; ++i) {
            const int d = (b[i] >= 0) ? 1 : -1;
            dsign_[i] = d;
            orig_row_[i] = i;
            for (std::size_t j = 0; j < n_; ++j) T_[i][su(j)] = Rat(d) * A.rows[i][j];
            T_[i][ss(i)] = Rat(d);
            T_[i][sa(i)] = 1;  // artificial column is d*e_i, scaled by B^{-1} = diag(d)
            T_[i][rhs()] = Rat(d) * b[i];
            if (d > 0) {
                basis_[i] = id_s(i);
            } else {
                basis_[i] = id_a(i);
                need_phase1 = true;
            }
        }
        phase1_needed_ = need_phase1;
    }

    // Returns true when the system A x <= b is feasible. On the infeasible
    // path farkas() yields the certificate.
    bool phase1() {
        if (!phase1_needed_) return true;
        run(CostKind::Phase1, nullptr);
        for (std::size_t i = 0; i < rows(); ++i)
            if (is_artificial(basis_[i]) && T_[i][rhs()] != 0) return false;
        drive_out_artificials();
        return true;
    }

    RatVec farkas() const {
        RatVec y(m0_, Rat(0));
        for (std::size_t i = 0; i < m0_; ++i) {
            Rat acc(0);
            for (std::size_t k = 0; k < rows(); ++k) {
                if (!is_artificial(basis_[k])) continue;
                acc -= T_[k][sa(i)];  // phase-one cost of an artificial is -1
            }
            y[i] = Rat(dsign_[i]) * acc;
        }
        return y;
    }

    struct Phase2Result {
        bool unbounded = false;
        RatVec ray;  // x-space improving direction when unbounded
    };

    // Maximizes cmax over the feasible region reached by phase one.
    Phase2Result phase2(const RatVec& cmax) {
        Phase2Result res;
        std::size_t enter_id = 0;
        if (run(CostKind::Phase2, &cmax, &enter_id)) return res;
        // No ratio row limits the entering column: assemble the recession
        // direction (entering coordinate 1, basics move by minus the column).
        res.unbounded = true;
        RatVec col = column(enter_id);
        RatVec dz(2 * n_, Rat(0));
        auto bump = [&](std::size_t id, const Rat& v) {
            if (id < 2 * n_) dz[id] += v;
        };
        bump(enter_id, Rat(1));
        for (std::size_t i = 0; i < rows(); ++i) bump(basis_[i], -col[i]);
        res.ray.resize(n_);
        for (std::size_t j = 0; j < n_; ++j) res.ray[j] = dz[j] - dz[n_ + j];
        return res;
    }

    RatVec point() const {
        RatVec x(n_, Rat(0));
        for (std::size_t i = 0; i < rows(); ++i) {
            if (basis_[i] < n_)
                x[basis_[i]] += T_[i][rhs()];
            else if (basis_[i] < 2 * n_)
                x[basis_[i] - n_] -= T_[i][rhs()];
        }
        return x;
    }

    // Dual multipliers of the original rows for the maximization objective
    // cmax, read off the artificial columns (they hold B^{-1} up to the
    // initial row signs). Deleted (redundant) rows get multiplier zero.
    RatVec dual(const RatVec& cmax) const {
        RatVec y(m0_, Rat(0));
        for (std::size_t i = 0; i < rows(); ++i) {
            const std::size_t R = orig_row_[i];
            Rat acc(0);
            for (std::size_t k = 0; k < rows(); ++k) {
                Rat ck = cost(CostKind::Phase2, &cmax, basis_[k]);
                if (ck != 0) acc += ck * T_[k][sa(R)];
            }
            y[R] = Rat(dsign_[i]) * acc;
        }
        return y;
    }

private:
    enum class CostKind { Phase1, Phase2 };

    std::size_t rows() const { return T_.size(); }
    std::size_t stored_width() const { return n_ + 2 * m0_; }
    std::size_t rhs() const { return stored_width(); }

    // stored column offsets
    std::size_t su(std::size_t j) const { return j; }
    std::size_t ss(std::size_t i) const { return n_ + i; }
    std::size_t sa(std::size_t i) const { return n_ + m0_ + i; }

    // ids in the full column index space
    std::size_t id_s(std::size_t i) const { return 2 * n_ + i; }
    std::size_t id_a(std::size_t i) const { return 2 * n_ + m0_ + i; }
    bool is_artificial(std::size_t id) const { return id >= 2 * n_ + m0_; }

    Rat cost(CostKind k, const RatVec* cmax, std::size_t id) const {
        if (k == CostKind::Phase1) return is_artificial(id) ? Rat(-1) : Rat(0);
        if (id < n_) return (*cmax)[id];
        if (id < 2 * n_) return -(*cmax)[id - n_];
        return Rat(0);
    }

    // Current tableau column of an id (v columns are negated u columns).
    RatVec column(std::size_t id) const {
        RatVec col(rows());
        if (id >= n_ && id < 2 * n_) {
            for (std::size_t i = 0; i < rows(); ++i) col[i] = -T_[i][su(id - n_)];
        } else {
            const std::size_t sc = (id < n_) ? su(id) : (id < 2 * n_ + m0_ ? ss(id - 2 * n_) : sa(id - 2 * n_ - m0_));
            for (std::size_t i = 0; i < rows(); ++i) col[i] = T_[i][sc];
        }
        return col;
    }

    Rat reduced_cost(CostKind k, const RatVec* cmax, std::size_t id) const {
        Rat z(0);
        for (std::size_t i = 0; i < rows(); ++i) {
            Rat ci = cost(k, cmax, basis_[i]);
            if (ci == 0) continue;
            if (id >= n_ && id < 2 * n_)
                z -= ci * T_[i][su(id - n_)];
            else if (id < n_)
                z += ci * T_[i][su(id)];
            else if (id < 2 * n_ + m0_)
                z += ci * T_[i][ss(id - 2 * n_)];
            else
                z += ci * T_[i][sa(id - 2 * n_ - m0_)];
        }
        return z - cost(k, cmax, id);
    }

    void pivot(std::size_t r, std::size_t enter_id, const RatVec& col) {
        const Rat piv = col[r];
        RatVec& pr = T_[r];
        if (piv != 1) {
            Rat inv = Rat(1) / piv;
            for (Rat& x : pr) x *= inv;
        }
        for (std::size_t i = 0; i < rows(); ++i) {
            if (i == r || col[i] == 0) continue;
            const Rat f = col[i];
            RatVec& row = T_[i];
            for (std::size_t j = 0; j <= rhs(); ++j)
                if (pr[j] != 0) row[j] -= f * pr[j];
        }
        basis_[r] = enter_id;
    }

    // Bland iteration. Returns true on optimality; false when the entering
    // column found in *enter_out has no blocking row (phase two only).
    bool run(CostKind k, const RatVec* cmax, std::size_t* enter_out = nullptr) {
        for (;;) {
            std::size_t enter = 0;
            bool found = false;
            for (std::size_t id = 0; id < 2 * n_ + m0_; ++id) {  // artificials never re-enter
                if (reduced_cost(k, cmax, id) < 0) {
                    enter = id;
                    found = true;
                    break;
                }
            }
            if (!found) return true;
            RatVec col = column(enter);
            bool has_row = false;
            std::size_t leave = 0;
            Rat best;
            for (std::size_t i = 0; i < rows(); ++i) {
                if (col[i] <= 0) continue;
                Rat ratio = T_[i][rhs()] / col[i];
                if (!has_row || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    has_row = true;
                    leave = i;
                    best = ratio;
                }
            }
            if (!has_row) {
                if (enter_out) *enter_out = enter;
                return false;
            }
            pivot(leave, enter, col);
        }
    }

    // After a feasible phase one, swap every basic artificial for a real
    // column, deleting rows where none is available (those constraint rows
    // are linear combinations of the others).
    void drive_out_artificials() {
        for (std::size_t r = 0; r < rows();) {
            if (!is_artificial(basis_[r])) {
                ++r;
                continue;
            }
            bool pivoted = false;
            for (std::size_t id = 0; id < 2 * n_ + m0_ && !pivoted; ++id) {
                RatVec col = column(id);
                if (col[r] == 0) continue;
                bool basic = false;
                for (std::size_t i = 0; i < rows(); ++i) basic = basic || basis_[i] == id;
                if (basic) continue;
                pivot(r, id, col);
                pivoted = true;
            }
            if (!pivoted) {
                T_.erase(T_.begin() + static_cast<std::ptrdiff_t>(r));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
                orig_row_.erase(orig_row_.begin() + static_cast<std::ptrdiff_t>(r));
                dsign_.erase(dsign_.begin() + static_cast<std::ptrdiff_t>(r));
            } else {
                ++r;
            }
        }
    }

    std::size_t n_;
    std::size_t m0_;
    bool phase1_needed_ = false;
    std::vector<RatVec> T_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> orig_row_;
    std::vector<int> dsign_;
};

}  // namespace

LPOutcome lp_solve(const LinearProgram& lp) {
    if (lp.A.nrows != lp.b.size() || lp.A.ncols != lp.c.size())
        throw Error(ErrorCode::DimensionMismatch, "lp_solve: inconsistent dimensions");
    const bool maximize = lp.sense == Sense::Maximize;
    RatVec cmax = maximize ? lp.c : vec_scale(Rat(-1), lp.c);

    Simplex s(lp.A, lp.b);
    LPOutcome out;
    if (!s.phase1()) {
        out.status = LPStatus::Infeasible;
        out.dual = s.farkas();
        return out;
    }
    auto p2 = s.phase2(cmax);
    if (p2.unbounded) {
        out.status = LPStatus::Unbounded;
        out.point = s.point();
        out.ray = std::move(p2.ray);
        return out;
    }
    out.status = LPStatus::Optimal;
    out.point = s.point();
    out.value = dot(lp.c, out.point);
    out.dual = s.dual(cmax);
    if (!maximize)
        for (Rat& y : out.dual) y = -y;
    return out;
}

std::optional<RatVec> lp_feasible(const RatMat& A, const RatVec& b) {
    if (A.nrows != b.size()) throw Error(ErrorCode::DimensionMismatch, "lp_feasible: rhs size");
    Simplex s(A, b);
    if (!s.phase1()) return std::nullopt;
    return s.point();
}

bool check_lp_certificates(const LinearProgram& lp, const LPOutcome& out) {
    const bool maximize = lp.sense == Sense::Maximize;
    auto feasible = [&](const RatVec& x) {
        RatVec Ax = lp.A.apply(x);
        for (std::size_t i = 0; i < Ax.size(); ++i)
            if (Ax[i] > lp.b[i]) return false;
        return true;
    };
    switch (out.status) {
        case LPStatus::Optimal: {
            if (out.point.size() != lp.A.ncols || out.dual.size() != lp.A.nrows) return false;
            if (!feasible(out.point)) return false;
            if (dot(lp.c, out.point) != out.value) return false;
            for (const Rat& y : out.dual)
                if (maximize ? (y < 0) : (y > 0)) return false;
            RatVec yA = lp.A.transposed().apply(out.dual);
            for (std::size_t j = 0; j < lp.A.ncols; ++j)
                if (yA[j] != lp.c[j]) return false;
            return dot(out.dual, lp.b) == out.value;  // strong duality, exact
        }
        case LPStatus::Unbounded: {
            if (out.ray.size() != lp.A.ncols) return false;
            if (!out.point.empty() && !feasible(out.point)) return false;
            RatVec Ar = lp.A.apply(out.ray);
            for (const Rat& v : Ar)
                if (v > 0) return false;
            Rat gain = dot(lp.c, out.ray);
            return maximize ? (gain > 0) : (gain < 0);
        }
        case LPStatus::Infeasible: {
            if (out.dual.size() != lp.A.nrows) return false;
            for (const Rat& y : out.dual)
                if (y < 0) return false;
            RatVec yA = lp.A.transposed().apply(out.dual);
            for (const Rat& v : yA)
                if (v != 0) return false;
            return dot(out.dual, lp.b) < 0;
        }
    }
    return false;
}

}  // namespace hausconv
