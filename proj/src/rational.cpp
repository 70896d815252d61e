#include "hausconv/rational.hpp"

#include <algorithm>
#include <cctype>

namespace hausconv {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
    // mpq_class accepts more than we want ("0x10", whitespace); restrict to
    // an optional sign, decimal digits, optionally '/<digits>'.
    std::size_t i = 0;
    auto digits = [&](std::size_t& p) {
        std::size_t start = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        return p > start;
    };
    if (s[i] == '+' || s[i] == '-') ++i;
    if (!digits(i)) throw Error(ErrorCode::ParseError, "bad rational literal '" + s + "'");
    if (i < s.size()) {
        if (s[i] != '/') throw Error(ErrorCode::ParseError, "bad rational literal '" + s + "'");
        ++i;
        if (s[i] == '+' || s[i] == '-')
            throw Error(ErrorCode::ParseError, "signed denominator in '" + s + "'");
        if (!digits(i) || i != s.size())
            throw Error(ErrorCode::ParseError, "bad rational literal '" + s + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& x) { return x.get_str(); }

Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec vec_scale(const Rat& r, const RatVec& a) {
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = r * a[i];
    return out;
}

bool vec_is_zero(const RatVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

RatVec zero_vec(std::size_t n) { return RatVec(n, Rat(0)); }

RatVec unit_vec(std::size_t n, std::size_t i) {
    RatVec v(n, Rat(0));
    v[i] = 1;
    return v;
}

Rat sup_norm(const RatVec& v) {
    Rat m(0);
    for (const Rat& x : v) {
        Rat a = rat_abs(x);
        if (a > m) m = a;
    }
    return m;
}

Rat dual_norm(const RatVec& f) {
    Rat s(0);
    for (const Rat& x : f) s += rat_abs(x);
    return s;
}

RatVec vec_primitive(const RatVec& v) {
    if (vec_is_zero(v)) return v;
    mpz_class l(1);  // lcm of denominators
    for (const Rat& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_class g(0);  // gcd of scaled numerators
    for (const Rat& x : v) {
        mpz_class n = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rat scale(l, g);
    scale.canonicalize();
    return vec_scale(scale, v);
}

bool vec_lex_less(const RatVec& a, const RatVec& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

std::string vec_to_string(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_to_string(v[i]);
    }
    return s + ")";
}

RatMat RatMat::from_rows(std::vector<RatVec> r) {
    RatMat m;
    m.nrows = r.size();
    m.ncols = r.empty() ? 0 : r.front().size();
    for (const RatVec& row : r) {
        if (row.size() != m.ncols)
            throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    }
    m.rows = std::move(r);
    return m;
}

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows[i][i] = 1;
    return m;
}

void RatMat::append_row(RatVec r) {
    if (nrows == 0 && ncols == 0) ncols = r.size();
    if (r.size() != ncols) throw Error(ErrorCode::DimensionMismatch, "row width mismatch");
    rows.push_back(std::move(r));
    ++nrows;
}

RatMat RatMat::transposed() const {
    RatMat t(ncols, nrows);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) t.rows[j][i] = rows[i][j];
    return t;
}

RatVec RatMat::apply(const RatVec& x) const {
    if (x.size() != ncols) throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
    RatVec y(nrows, Rat(0));
    for (std::size_t i = 0; i < nrows; ++i) y[i] = dot(rows[i], x);
    return y;
}

ExtRat ExtRat::operator+(const ExtRat& o) const {
    if (sign_ == 0 && o.sign_ == 0) return ExtRat(value_ + o.value_);
    if (sign_ != 0 && o.sign_ != 0) {
        if (sign_ == o.sign_) return *this;
        return ExtRat(Rat(0));  // inf + (-inf) = 0
    }
    return sign_ != 0 ? *this : o;
}

ExtRat ExtRat::operator-() const {
    if (sign_ == 0) return ExtRat(Rat(-value_));
    return sign_ > 0 ? neg_inf() : pos_inf();
}

ExtRat operator*(const Rat& r, const ExtRat& x) {
    if (x.sign_ == 0) return ExtRat(Rat(r * x.value_));
    if (r == 0) return ExtRat(Rat(0));  // 0 * inf = 0
    int s = (r > 0) ? x.sign_ : -x.sign_;
    return s > 0 ? ExtRat::pos_inf() : ExtRat::neg_inf();
}

bool ExtRat::operator<(const ExtRat& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_;
    return sign_ == 0 && value_ < o.value_;
}

std::string ExtRat::str() const {
    if (sign_ > 0) return "inf";
    if (sign_ < 0) return "-inf";
    return rat_to_string(value_);
}

ExtRat ext_dist(const ExtRat& x, const ExtRat& y) {
    if (x.is_finite() && y.is_finite()) {
        Rat d = x.finite() - y.finite();
        return ExtRat(rat_abs(d));
    }
    if (x == y) return ExtRat(Rat(0));  // equal infinities
    return ExtRat::pos_inf();
}

ExtRat ext_max(const ExtRat& x, const ExtRat& y) { return x < y ? y : x; }

}  // namespace hausconv
