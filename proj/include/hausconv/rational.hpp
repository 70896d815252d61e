#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "hausconv/error.hpp"

namespace hausconv {

// Every scalar in this library is an arbitrary-precision rational. GMP's
// mpq keeps values canonical (denominator > 0, gcd(|num|, den) = 1) after
// every arithmetic operation, so equality is structural and all identities
// asserted by the test suites hold exactly, never approximately.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

// Parses "p/q" or "p" with decimal big integers. Throws Error(ParseError)
// on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Inverse of rat_from_string: "p/q", or "p" when the denominator is 1.
std::string rat_to_string(const Rat& x);

Rat rat_abs(const Rat& x);

// --- vectors ---------------------------------------------------------------

Rat dot(const RatVec& a, const RatVec& b);
RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& r, const RatVec& a);
bool vec_is_zero(const RatVec& a);
RatVec zero_vec(std::size_t n);
RatVec unit_vec(std::size_t n, std::size_t i);

// l_infty norm of a point in the ambient space.
Rat sup_norm(const RatVec& v);

// l_1 norm, the dual of l_infty; functionals live on this side.
Rat dual_norm(const RatVec& f);

// Scales v by a positive rational so that entries become coprime integers.
// Direction (sign) is preserved; the zero vector is returned unchanged.
RatVec vec_primitive(const RatVec& v);

// Total lexicographic order used for canonical sorting of generator lists.
bool vec_lex_less(const RatVec& a, const RatVec& b);

std::string vec_to_string(const RatVec& v);

// --- matrices ----------------------------------------------------------------

struct RatMat {
    std::size_t nrows = 0;
    std::size_t ncols = 0;
    std::vector<RatVec> rows;

    RatMat() = default;
    RatMat(std::size_t m, std::size_t n) : nrows(m), ncols(n), rows(m, RatVec(n, Rat(0))) {}

    static RatMat from_rows(std::vector<RatVec> r);
    static RatMat identity(std::size_t n);

    Rat& at(std::size_t i, std::size_t j) { return rows[i][j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return rows[i][j]; }

    void append_row(RatVec r);
    RatMat transposed() const;
    RatVec apply(const RatVec& x) const;  // M x
};

// --- extended rationals ------------------------------------------------------

// [-inf, +inf] with the extended arithmetic used by the hypermetric on the
// extended reals: inf + inf = inf, inf + (-inf) = 0, x + inf = inf, and the
// convention 0 * inf = 0 for scaling. The distance ext_dist is
//   |x - y|            both finite,
//   0                  x = y infinite of the same sign,
//   +inf               otherwise.
class ExtRat {
public:
    ExtRat() : sign_(0), value_(0) {}
    ExtRat(Rat v) : sign_(0), value_(std::move(v)) {}
    ExtRat(int v) : sign_(0), value_(v) {}

    static ExtRat pos_inf() { return ExtRat(1, Rat(0)); }
    static ExtRat neg_inf() { return ExtRat(-1, Rat(0)); }

    bool is_finite() const { return sign_ == 0; }
    bool is_pos_inf() const { return sign_ > 0; }
    bool is_neg_inf() const { return sign_ < 0; }

    // Finite value; only meaningful when is_finite().
    const Rat& finite() const { return value_; }

    ExtRat operator+(const ExtRat& o) const;
    ExtRat operator-() const;
    ExtRat operator-(const ExtRat& o) const { return *this + (-o); }

    // 0 * inf = 0.
    friend ExtRat operator*(const Rat& r, const ExtRat& x);

    bool operator==(const ExtRat& o) const {
        return sign_ == o.sign_ && (sign_ != 0 || value_ == o.value_);
    }
    bool operator!=(const ExtRat& o) const { return !(*this == o); }
    bool operator<(const ExtRat& o) const;
    bool operator<=(const ExtRat& o) const { return *this < o || *this == o; }
    bool operator>(const ExtRat& o) const { return o < *this; }
    bool operator>=(const ExtRat& o) const { return o <= *this; }

    std::string str() const;

private:
    ExtRat(int sign, Rat v) : sign_(sign), value_(std::move(v)) {}
    int sign_;   // -1: -inf, 0: finite, +1: +inf
    Rat value_;  // valid when sign_ == 0
};

ExtRat ext_dist(const ExtRat& x, const ExtRat& y);
ExtRat ext_max(const ExtRat& x, const ExtRat& y);

}  // namespace hausconv
