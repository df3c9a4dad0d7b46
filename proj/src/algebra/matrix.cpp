#include "trmc/algebra/matrix.hpp"

#include <algorithm>

namespace trmc {

IntegerMatrix to_integer_matrix(const std::vector<std::vector<int>>& rows) {
    size_t c = rows.empty() ? 0 : rows[0].size();
    IntegerMatrix m(rows.size(), c);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw InputError("ragged matrix rows");
        for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

namespace {

// Each row scaled by the lcm of its denominators; row scaling keeps the row space.
IntegerMatrix clear_denominators(const RationalMatrix& m) {
    IntegerMatrix out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i) {
        Integer l = lcm_of_denominators(m.row(i));
        for (size_t j = 0; j < m.cols(); ++j) {
            Rational x = m(i, j) * l;
            out(i, j) = x.get_num();
        }
    }
    return out;
}

std::vector<Rational> back_substitute(const EchelonForm& ef, size_t ncols, size_t free_col,
                                      const std::vector<Rational>* rhs) {
    std::vector<Rational> x(ncols, Rational(0));
    if (free_col < ncols) x[free_col] = 1;
    const auto& R = ef.reduced;
    for (size_t k = ef.pivot_cols.size(); k-- > 0;) {
        size_t p = ef.pivot_cols[k];
        Rational s = rhs ? (*rhs)[k] : Rational(0);
        for (size_t j = p + 1; j < ncols; ++j)
            if (R(k, j) != 0 && x[j] != 0) s -= Rational(R(k, j)) * x[j];
        x[p] = s / Rational(R(k, p));
    }
    return x;
}

}  // namespace

EchelonForm bareiss_echelon(IntegerMatrix M) {
    EchelonForm ef;
    const size_t m = M.rows(), n = M.cols();
    Integer prev = 1, t;
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; ++c) {
        size_t p = r;
        while (p < m && M(p, c) == 0) ++p;
        if (p == m) continue;
        M.swap_rows(p, r);
        const Integer& piv = M(r, c);
        for (size_t i = r + 1; i < m; ++i) {
            const Integer lead = M(i, c);
            for (size_t j = c + 1; j < n; ++j) {
                t = piv * M(i, j);
                if (lead != 0) t -= lead * M(r, j);
                mpz_divexact(M(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M(i, c) = 0;
        }
        prev = M(r, c);
        ef.pivot_cols.push_back(c);
        ++r;
    }
    ef.reduced = std::move(M);
    return ef;
}

size_t rank(const IntegerMatrix& m) { return bareiss_echelon(m).pivot_cols.size(); }
size_t rank(const RationalMatrix& m) { return rank(clear_denominators(m)); }

Integer determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
    const size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix M = m;
    Integer prev = 1, t;
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && M(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            M.swap_rows(p, k);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                t = M(k, k) * M(i, j) - M(i, k) * M(k, j);
                mpz_divexact(M(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M(i, k) = 0;
        }
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
    Rational scale = 1;
    IntegerMatrix M(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i) {
        Integer l = lcm_of_denominators(m.row(i));
        scale *= l;
        for (size_t j = 0; j < m.cols(); ++j) M(i, j) = Rational(m(i, j) * l).get_num();
    }
    return Rational(determinant(M)) / scale;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    EchelonForm ef = bareiss_echelon(clear_denominators(m));
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : ef.pivot_cols) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t f = 0; f < m.cols(); ++f)
        if (!is_pivot[f]) basis.push_back(back_substitute(ef, m.cols(), f, nullptr));
    return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b) {
    if (b.size() != m.rows()) throw InputError("right-hand side has wrong length");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    EchelonForm ef = bareiss_echelon(clear_denominators(aug));
    if (!ef.pivot_cols.empty() && ef.pivot_cols.back() == m.cols()) return std::nullopt;
    std::vector<Rational> rhs;
    for (size_t k = 0; k < ef.pivot_cols.size(); ++k) rhs.push_back(Rational(ef.reduced(k, m.cols())));
    return back_substitute(ef, m.cols(), m.cols(), &rhs);
}

// ---- RowSpace ----------------------------------------------------------------

namespace {

void make_primitive(RowSpace::Sparse& v) {
    Integer g = 0;
    for (auto& [c, x] : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& [c, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// v <- a*v - b*w  (both sorted by column)
RowSpace::Sparse combine(const RowSpace::Sparse& v, const Integer& a, const RowSpace::Sparse& w,
                         const Integer& b) {
    RowSpace::Sparse out;
    out.reserve(v.size() + w.size());
    size_t i = 0, j = 0;
    Integer t;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            out.emplace_back(v[i].first, a * v[i].second);
            ++i;
        } else if (i == v.size() || w[j].first < v[i].first) {
            out.emplace_back(w[j].first, -b * w[j].second);
            ++j;
        } else {
            t = a * v[i].second - b * w[j].second;
            if (t != 0) out.emplace_back(v[i].first, t);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

bool RowSpace::insert(const std::vector<Rational>& v) {
    if (v.size() != dim_) throw InputError("RowSpace vector has wrong length");
    Integer l = lcm_of_denominators(v);
    Sparse s;
    for (size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) s.emplace_back(j, Rational(v[j] * l).get_num());
    return insert_sparse(std::move(s));
}

bool RowSpace::insert_sparse(Sparse v) {
    make_primitive(v);
    while (!v.empty()) {
        size_t lead = v.front().first;
        auto it = rows_.find(lead);
        if (it == rows_.end()) {
            if (v.front().second < 0)
                for (auto& [c, x] : v) x = -x;
            rows_.emplace(lead, std::move(v));
            return true;
        }
        const Sparse& w = it->second;
        Integer a = w.front().second, b = v.front().second;
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        a /= g;
        b /= g;
        v = combine(v, a, w, b);
        make_primitive(v);
    }
    return false;
}

std::vector<Rational> RowSpace::reduce(const std::vector<Rational>& v) const {
    if (v.size() != dim_) throw InputError("RowSpace vector has wrong length");
    std::vector<Rational> r = v;
    for (const auto& [p, w] : rows_) {
        if (r[p] == 0) continue;
        Rational f = r[p] / Rational(w.front().second);
        for (const auto& [c, x] : w) r[c] -= f * x;
    }
    return r;
}

bool RowSpace::contains(const std::vector<Rational>& v) const {
    for (const auto& x : reduce(v))
        if (x != 0) return false;
    return true;
}

std::vector<size_t> RowSpace::non_pivot_columns() const {
    std::vector<size_t> out;
    for (size_t j = 0; j < dim_; ++j)
        if (!rows_.count(j)) out.push_back(j);
    return out;
}

// ---- Smith normal form -------------------------------------------------------

namespace {

void row_axpy(IntegerMatrix& M, size_t dst, const Integer& q, size_t src) {  // row dst -= q*row src
    for (size_t j = 0; j < M.cols(); ++j)
        if (M(src, j) != 0) M(dst, j) -= q * M(src, j);
}
void col_axpy(IntegerMatrix& M, size_t dst, const Integer& q, size_t src) {
    for (size_t i = 0; i < M.rows(); ++i)
        if (M(i, src) != 0) M(i, dst) -= q * M(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
    IntegerMatrix A = m;
    IntegerMatrix U = IntegerMatrix::identity(m.rows());
    IntegerMatrix V = IntegerMatrix::identity(m.cols());
    const size_t R = m.rows(), C = m.cols();
    size_t t = 0;
    Integer q;
    for (; t < std::min(R, C); ++t) {
        // smallest nonzero entry of the trailing block becomes the pivot
        bool found = false;
        size_t bi = t, bj = t;
        for (size_t i = t; i < R; ++i)
            for (size_t j = t; j < C; ++j)
                if (A(i, j) != 0 && (!found || abs(A(i, j)) < abs(A(bi, bj)))) {
                    found = true;
                    bi = i;
                    bj = j;
                }
        if (!found) break;
        A.swap_rows(t, bi);
        U.swap_rows(t, bi);
        A.swap_cols(t, bj);
        V.swap_cols(t, bj);
        for (;;) {
            bool clean = true;
            for (size_t i = t + 1; i < R; ++i) {
                if (A(i, t) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), A(i, t).get_mpz_t(), A(t, t).get_mpz_t());
                row_axpy(A, i, q, t);
                row_axpy(U, i, q, t);
                if (A(i, t) != 0) {
                    A.swap_rows(t, i);
                    U.swap_rows(t, i);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < C; ++j) {
                if (A(t, j) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), A(t, j).get_mpz_t(), A(t, t).get_mpz_t());
                col_axpy(A, j, q, t);
                col_axpy(V, j, q, t);
                if (A(t, j) != 0) {
                    A.swap_cols(t, j);
                    V.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility of the trailing block
            bool divisible = true;
            for (size_t i = t + 1; i < R && divisible; ++i)
                for (size_t j = t + 1; j < C; ++j)
                    if (A(i, j) % A(t, t) != 0) {
                        // row t += row i
                        Integer minus_one = -1;
                        row_axpy(A, t, minus_one, i);
                        row_axpy(U, t, minus_one, i);
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (A(t, t) < 0) {
            for (size_t j = 0; j < C; ++j) A(t, j) = -A(t, j);
            for (size_t j = 0; j < R; ++j) U(t, j) = -U(t, j);
        }
    }
    SmithForm sf{U, A, V, {}};
    for (size_t k = 0; k < std::min(R, C); ++k)
        if (A(k, k) != 0) sf.divisors.push_back(A(k, k));
    return sf;
}

IntegerMatrix hermite_normal_form(IntegerMatrix m) {
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        // Euclid on column c among rows r..: leaves a single nonzero entry in row r
        for (;;) {
            size_t best = m.rows();
            for (size_t i = r; i < m.rows(); ++i)
                if (m(i, c) != 0 && (best == m.rows() || abs(m(i, c)) < abs(m(best, c)))) best = i;
            if (best == m.rows()) break;
            m.swap_rows(r, best);
            bool done = true;
            for (size_t i = r + 1; i < m.rows(); ++i) {
                if (m(i, c) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
                row_axpy(m, i, q, r);
                if (m(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (m(r, c) == 0) continue;
        if (m(r, c) < 0)
            for (size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
        for (size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
            if (q != 0) row_axpy(m, i, q, r);
        }
        ++r;
    }
    IntegerMatrix out(r, m.cols());
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

IntegerMatrix integer_kernel(const IntegerMatrix& m) {
    SmithForm sf = smith_normal_form(m);
    size_t r = sf.rank();
    IntegerMatrix K(m.cols() - r, m.cols());
    for (size_t k = r; k < m.cols(); ++k)
        for (size_t i = 0; i < m.cols(); ++i) K(k - r, i) = sf.V(i, k);
    return K;
}

std::vector<Integer> primitive_integer(const std::vector<Rational>& v) {
    Integer l = lcm_of_denominators(v);
    std::vector<Integer> out;
    for (const auto& x : v) out.push_back(Rational(x * l).get_num());
    Integer g = gcd_of(out);
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

}  // namespace trmc
