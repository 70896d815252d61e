#include "hausconv/linalg.hpp"

#include <algorithm>

namespace hausconv {

namespace {

// Fraction-free (Bareiss) echelon form of an integer matrix. Pivots are
// chosen in column order, first nonzero row wins, so the result is
// deterministic. Exact divisions by the previous pivot are guaranteed by
// the Bareiss identity.
struct IntEchelon {
    std::vector<std::vector<mpz_class>> m;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
};

IntEchelon bareiss(const RatMat& M, const RatVec* rhs) {
    const std::size_t nr = M.nrows;
    const std::size_t nc = M.ncols + (rhs ? 1 : 0);
    IntEchelon e;
    e.m.assign(nr, std::vector<mpz_class>(nc, 0));
    for (std::size_t i = 0; i < nr; ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < M.ncols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), M.rows[i][j].get_den().get_mpz_t());
        if (rhs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*rhs)[i].get_den().get_mpz_t());
        for (std::size_t j = 0; j < M.ncols; ++j)
            e.m[i][j] = M.rows[i][j].get_num() * (l / M.rows[i][j].get_den());
        if (rhs) e.m[i][M.ncols] = (*rhs)[i].get_num() * (l / (*rhs)[i].get_den());
    }

    mpz_class prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t p = row;
        while (p < nr && e.m[p][col] == 0) ++p;
        if (p == nr) continue;
        if (p != row) std::swap(e.m[p], e.m[row]);
        const mpz_class piv = e.m[row][col];
        for (std::size_t i = row + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j) {
                mpz_class t = e.m[i][j] * piv - e.m[i][col] * e.m[row][j];
                mpz_divexact(e.m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            e.m[i][col] = 0;
        }
        e.pivots.emplace_back(row, col);
        prev = piv;
        ++row;
    }
    return e;
}

// Back substitution over the rationals on a Bareiss echelon form.
// `assign` fixes the values of the non-pivot (free) coordinates.
RatVec back_substitute(const IntEchelon& e, std::size_t ncols, const RatVec& assign) {
    RatVec x = assign;
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
        auto [r, c] = e.pivots[k];
        Rat s(0);
        for (std::size_t j = c + 1; j < ncols; ++j)
            if (e.m[r][j] != 0) s += Rat(e.m[r][j]) * x[j];
        x[c] = -s / Rat(e.m[r][c]);
    }
    return x;
}

}  // namespace

std::size_t rank(const RatMat& M) { return bareiss(M, nullptr).pivots.size(); }

std::vector<RatVec> kernel_basis(const RatMat& M) {
    IntEchelon e = bareiss(M, nullptr);
    std::vector<bool> is_pivot(M.ncols, false);
    for (auto [r, c] : e.pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t jf = 0; jf < M.ncols; ++jf) {
        if (is_pivot[jf]) continue;
        RatVec assign = zero_vec(M.ncols);
        assign[jf] = 1;
        basis.push_back(back_substitute(e, M.ncols, assign));
    }
    return basis;
}

std::optional<RatVec> solve_linear(const RatMat& M, const RatVec& b) {
    if (b.size() != M.nrows) throw Error(ErrorCode::DimensionMismatch, "solve_linear: rhs size");
    IntEchelon e = bareiss(M, &b);
    for (auto [r, c] : e.pivots)
        if (c == M.ncols) return std::nullopt;  // pivot in the rhs column
    // Solve [M | b] * (x ; -1) = 0, which is M x = b.
    RatVec assign = zero_vec(M.ncols + 1);
    assign[M.ncols] = -1;
    RatVec x = back_substitute(e, M.ncols + 1, assign);
    x.resize(M.ncols);
    return x;
}

RowBasis row_space_basis(const std::vector<RatVec>& rows, std::size_t ncols) {
    std::vector<RatVec> m;
    for (const RatVec& r : rows) {
        if (r.size() != ncols) throw Error(ErrorCode::DimensionMismatch, "row_space_basis: width");
        m.push_back(r);
    }
    // Plain rational Gauss-Jordan; these matrices are tiny and we want the
    // fully reduced canonical form.
    std::size_t row = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Rat inv = Rat(1) / m[row][col];
        for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return RowBasis{std::move(m), std::move(pivots)};
}

std::vector<std::size_t> complement_coordinates(const RowBasis& rb, std::size_t ncols) {
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : rb.pivots) is_pivot[c] = true;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < ncols; ++j)
        if (!is_pivot[j]) out.push_back(j);
    return out;
}

RatVec project_along(const RowBasis& rb, const RatVec& x) {
    RatVec out = x;
    for (std::size_t i = 0; i < rb.basis.size(); ++i) {
        Rat a = out[rb.pivots[i]];
        if (a == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j) out[j] -= a * rb.basis[i][j];
    }
    return out;
}

}  // namespace hausconv
