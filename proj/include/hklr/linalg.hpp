/*
 * linalg.hpp
 * ----------
 * Exact linear algebra over the Scalar fields: small dense matrices (used for
 * left-regular representations of finite quotient algebras) and sparse row
 * echelon elimination (used for ideal subspaces of truncated spanning sets).
 * Everything is exact; there is no pivoting heuristic beyond "first nonzero".
 */
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ratfun.hpp"

namespace hklr {

// ---- Dense matrices -------------------------------------------------------

struct Mat {
    FieldRef f;
    int n = 0;
    std::vector<Scalar> a;  // row-major n x n

    Mat() = default;
    Mat(FieldRef fld, int dim) : f(std::move(fld)), n(dim), a(dim * dim, Scalar::zero(f)) {}

    static Mat id(const FieldRef& fld, int dim) {
        Mat m(fld, dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = Scalar::one(fld);
        return m;
    }

    Scalar& at(int i, int j) { return a[i * n + j]; }
    const Scalar& at(int i, int j) const { return a[i * n + j]; }

    bool is_zero() const {
        for (const auto& c : a)
            if (!c.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Mat& x, const Mat& y) { return x.n == y.n && x.a == y.a; }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    friend Mat operator+(const Mat& x, const Mat& y) {
        Mat r(x.f, x.n);
        for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
        return r;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        Mat r(x.f, x.n);
        for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
        return r;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        Mat r(x.f, x.n);
        for (int i = 0; i < x.n; ++i)
            for (int k = 0; k < x.n; ++k) {
                const Scalar& xik = x.at(i, k);
                if (xik.is_zero()) continue;
                for (int j = 0; j < x.n; ++j) {
                    const Scalar& ykj = y.at(k, j);
                    if (!ykj.is_zero()) r.at(i, j) = r.at(i, j) + xik * ykj;
                }
            }
        return r;
    }
    friend Mat operator*(const Scalar& c, const Mat& x) {
        Mat r(x.f, x.n);
        for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = c * x.a[i];
        return r;
    }

    Mat pow(long k) const {
        if (k < 0) throw std::domain_error("mat: negative power");
        Mat acc = id(f, n), base = *this;
        while (k) {
            if (k & 1) acc = acc * base;
            if (k >>= 1) base = base * base;
        }
        return acc;
    }
};

inline std::vector<Scalar> mat_vec(const Mat& m, const std::vector<Scalar>& v) {
    std::vector<Scalar> r(m.n, Scalar::zero(m.f));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (!m.at(i, j).is_zero() && !v[j].is_zero()) r[i] = r[i] + m.at(i, j) * v[j];
    return r;
}

inline bool vec_is_zero(const std::vector<Scalar>& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

inline int mat_rank(Mat m) {
    int rank = 0;
    for (int col = 0; col < m.n && rank < m.n; ++col) {
        int piv = -1;
        for (int r = rank; r < m.n; ++r)
            if (!m.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        for (int j = 0; j < m.n; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        Scalar inv = m.at(rank, col).inverse();
        for (int j = col; j < m.n; ++j) m.at(rank, j) = inv * m.at(rank, j);
        for (int r = 0; r < m.n; ++r) {
            if (r == rank || m.at(r, col).is_zero()) continue;
            Scalar c = m.at(r, col);
            for (int j = col; j < m.n; ++j) m.at(r, j) = m.at(r, j) - c * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

// Rank of a family of coordinate vectors (rows).
inline int rank_of(const std::vector<std::vector<Scalar>>& rows, const FieldRef& f) {
    std::vector<std::vector<Scalar>> basis;
    for (auto v : rows) {
        for (const auto& b : basis) {
            // eliminate against the pivot of b
            size_t p = 0;
            while (p < b.size() && b[p].is_zero()) ++p;
            if (p == b.size()) continue;
            if (!v[p].is_zero()) {
                Scalar c = v[p] / b[p];
                for (size_t j = p; j < v.size(); ++j) v[j] = v[j] - c * b[j];
            }
        }
        if (!vec_is_zero(v)) basis.push_back(std::move(v));
    }
    (void)f;
    return static_cast<int>(basis.size());
}

inline Mat mat_inverse(Mat m) {
    Mat inv = Mat::id(m.f, m.n);
    for (int col = 0; col < m.n; ++col) {
        int piv = -1;
        for (int r = col; r < m.n; ++r)
            if (!m.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) throw std::domain_error("mat: singular matrix");
        for (int j = 0; j < m.n; ++j) {
            std::swap(m.at(piv, j), m.at(col, j));
            std::swap(inv.at(piv, j), inv.at(col, j));
        }
        Scalar s = m.at(col, col).inverse();
        for (int j = 0; j < m.n; ++j) {
            m.at(col, j) = s * m.at(col, j);
            inv.at(col, j) = s * inv.at(col, j);
        }
        for (int r = 0; r < m.n; ++r) {
            if (r == col || m.at(r, col).is_zero()) continue;
            Scalar c = m.at(r, col);
            for (int j = 0; j < m.n; ++j) {
                m.at(r, j) = m.at(r, j) - c * m.at(col, j);
                inv.at(r, j) = inv.at(r, j) - c * inv.at(col, j);
            }
        }
    }
    return inv;
}

// Evaluate a multivariate polynomial at pairwise commuting matrices.
inline Mat eval_poly_mat(const Poly& p, const std::vector<Mat>& xs, const FieldRef& f,
                         int dim) {
    Mat acc(f, dim);
    for (const auto& [e, c] : p.terms()) {
        Mat t = Mat::id(f, dim);
        for (size_t v = 0; v < xs.size(); ++v)
            if (e[v]) t = t * xs[v].pow(e[v]);
        acc = acc + c * t;
    }
    return acc;
}

// ---- Sparse row echelon ---------------------------------------------------

using SparseVec = std::map<int, Scalar>;

inline void sparse_axpy(SparseVec& v, const Scalar& c, const SparseVec& w) {
    for (const auto& [i, a] : w) {
        auto it = v.find(i);
        if (it == v.end()) {
            Scalar s = c * a;
            if (!s.is_zero()) v.emplace(i, s);
        } else {
            it->second = it->second + c * a;
            if (it->second.is_zero()) v.erase(it);
        }
    }
}

// Rows normalized to pivot coefficient 1, keyed by pivot coordinate (the
// smallest coordinate index carrying a nonzero entry).
class Echelon {
public:
    explicit Echelon(FieldRef f) : f_(std::move(f)) {}

    const FieldRef& field() const { return f_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<int, SparseVec>& rows() const { return rows_; }

    // Rows are kept mutually reduced, so a single ascending pass suffices:
    // eliminating a pivot only introduces coordinates above it.
    SparseVec reduce(SparseVec v) const {
        SparseVec out;
        while (!v.empty()) {
            auto [piv, c] = *v.begin();
            v.erase(v.begin());
            auto it = rows_.find(piv);
            if (it == rows_.end()) {
                out.emplace_hint(out.end(), piv, c);
                continue;
            }
            const SparseVec& row = it->second;
            for (auto jt = std::next(row.begin()); jt != row.end(); ++jt) {
                auto vt = v.find(jt->first);
                if (vt == v.end()) {
                    Scalar s = -(c * jt->second);
                    if (!s.is_zero()) v.emplace(jt->first, s);
                } else {
                    vt->second = vt->second - c * jt->second;
                    if (vt->second.is_zero()) v.erase(vt);
                }
            }
        }
        return out;
    }

    // Insert after reduction; returns true when the rank grew.
    bool insert(SparseVec v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        Scalar inv = v.begin()->second.inverse();
        for (auto& [i, c] : v) c = inv * c;
        int piv = v.begin()->first;
        // back-substitute into existing rows
        for (auto& [p, row] : rows_) {
            auto it = row.find(piv);
            if (it != row.end()) sparse_axpy(row, -it->second, v);
        }
        rows_.emplace(piv, std::move(v));
        return true;
    }

    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    bool is_pivot(int coord) const { return rows_.count(coord) != 0; }

private:
    FieldRef f_;
    std::map<int, SparseVec> rows_;
};

}  // namespace hklr
