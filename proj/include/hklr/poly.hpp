/*
 * poly.hpp
 * --------
 * Sparse multivariate polynomials over a Scalar field.
 *
 * A Poly in rank n maps exponent vectors (length n, entries >= 0) to nonzero
 * Scalar coefficients.  Terms are kept in descending lexicographic order, so
 * begin() is the leading term.  Exact division and a primitive-PRS
 * multivariate gcd are provided; both are used by the rational-function layer
 * to keep fractions reduced.
 */
#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace hklr {

using Expv = std::vector<int>;

struct LexGreater {
    bool operator()(const Expv& a, const Expv& b) const {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

class Poly {
public:
    using TermMap = std::map<Expv, Scalar, LexGreater>;

    Poly() = default;
    Poly(FieldRef f, int rank) : f_(std::move(f)), rank_(rank) {}

    static Poly zero(const FieldRef& f, int rank) { return Poly(f, rank); }

    static Poly constant(const FieldRef& f, int rank, const Scalar& c) {
        Poly p(f, rank);
        if (!c.is_zero()) p.t_.emplace(Expv(rank, 0), c);
        return p;
    }

    static Poly constant(const FieldRef& f, int rank, long c) {
        return constant(f, rank, Scalar::from_long(f, c));
    }

    static Poly variable(const FieldRef& f, int rank, int v, int pow = 1) {
        if (v < 0 || v >= rank || pow < 0) throw std::domain_error("poly: bad variable");
        Poly p(f, rank);
        Expv e(rank, 0);
        e[v] = pow;
        p.t_.emplace(std::move(e), Scalar::one(f));
        return p;
    }

    static Poly monomial(const FieldRef& f, const Expv& e, const Scalar& c) {
        Poly p(f, static_cast<int>(e.size()));
        if (!c.is_zero()) p.t_.emplace(e, c);
        return p;
    }

    const FieldRef& field() const { return f_; }
    int rank() const { return rank_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    bool is_constant() const {
        if (t_.empty()) return true;
        return t_.size() == 1 && t_.begin()->first == Expv(rank_, 0);
    }

    Scalar constant_value() const {
        if (t_.empty()) return Scalar::zero(f_);
        if (!is_constant()) throw std::logic_error("poly: not constant");
        return t_.begin()->second;
    }

    const Expv& leading_exp() const {
        if (t_.empty()) throw std::logic_error("poly: leading term of zero");
        return t_.begin()->first;
    }
    const Scalar& leading_coeff() const {
        if (t_.empty()) throw std::logic_error("poly: leading term of zero");
        return t_.begin()->second;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : t_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    int degree_in(int v) const {
        int d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, e[v]);
        return d;
    }

    void add_term(const Expv& e, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.rank_ == b.rank_ && a.t_ == b.t_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Deterministic total order on polynomials (term-by-term lexicographic).
    friend bool operator<(const Poly& a, const Poly& b) {
        auto ia = a.t_.begin(), ib = b.t_.begin();
        LexGreater lg;
        for (; ia != a.t_.end() && ib != b.t_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return lg(ib->first, ia->first);
            if (ia->second != ib->second) return ia->second < ib->second;
        }
        return ia == a.t_.end() && ib != b.t_.end();
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r(a);
        for (const auto& [e, c] : b.t_) r.add_term(e, c);
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r(a.f_, a.rank_);
        Expv e(a.rank_);
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                for (int i = 0; i < a.rank_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend Poly operator*(const Scalar& c, const Poly& a) {
        Poly r(a.f_, a.rank_);
        for (const auto& [e, t] : a.t_) r.add_term(e, c * t);
        return r;
    }

    Poly pow(int k) const {
        if (k < 0) throw std::domain_error("poly: negative power");
        Poly acc = constant(f_, rank_, 1), base = *this;
        while (k) {
            if (k & 1) acc = acc * base;
            if (k >>= 1) base = base * base;
        }
        return acc;
    }

    // Exact division; throws if the division leaves a remainder.
    friend Poly divexact(const Poly& a, const Poly& b) {
        a.check(b);
        if (b.is_zero()) throw std::domain_error("poly: division by zero");
        Poly rem(a), q(a.f_, a.rank_);
        const Expv& lb = b.leading_exp();
        const Scalar& cb = b.leading_coeff();
        Expv e(a.rank_);
        while (!rem.is_zero()) {
            const Expv& la = rem.leading_exp();
            for (int i = 0; i < a.rank_; ++i) {
                e[i] = la[i] - lb[i];
                if (e[i] < 0) throw std::logic_error("poly: inexact division");
            }
            Scalar c = rem.leading_coeff() / cb;
            q.add_term(e, c);
            rem = rem - Poly::monomial(a.f_, e, c) * b;
        }
        return q;
    }

    // Normalize leading (lex) coefficient to 1.
    Poly monic() const {
        if (is_zero()) return *this;
        return leading_coeff().inverse() * *this;
    }

    std::string to_string(const std::vector<std::string>& names) const;

private:
    FieldRef f_;
    int rank_ = 0;
    TermMap t_;

    void check(const Poly& o) const {
        if (rank_ != o.rank_ || f_.get() != o.f_.get())
            throw std::logic_error("poly: mixed contexts");
    }
};

namespace detail {

// View of p as a univariate polynomial in variable v with Poly coefficients.
inline std::vector<Poly> univariate_coeffs(const Poly& p, int v) {
    int d = std::max(p.degree_in(v), 0);
    std::vector<Poly> cs(d + 1, Poly::zero(p.field(), p.rank()));
    for (const auto& [e, c] : p.terms()) {
        Expv e2 = e;
        int k = e2[v];
        e2[v] = 0;
        cs[k].add_term(e2, c);
    }
    return cs;
}

inline Poly from_univariate(const std::vector<Poly>& cs, int v, const FieldRef& f, int rank) {
    Poly r(f, rank);
    for (size_t k = 0; k < cs.size(); ++k)
        for (const auto& [e, c] : cs[k].terms()) {
            Expv e2 = e;
            e2[v] += static_cast<int>(k);
            r.add_term(e2, c);
        }
    return r;
}

}  // namespace detail

Poly poly_gcd(const Poly& a, const Poly& b);

namespace detail {

// Content of p with respect to variable v: gcd of its univariate coefficients.
inline Poly content_in(const Poly& p, int v) {
    auto cs = univariate_coeffs(p, v);
    Poly g = Poly::zero(p.field(), p.rank());
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g.is_zero() ? Poly::constant(p.field(), p.rank(), 1) : g.monic();
}

// Pseudo-remainder step sequence in variable v; inputs primitive in v.
inline Poly prem_in(const Poly& a, const Poly& b, int v) {
    auto A = univariate_coeffs(a, v);
    auto B = univariate_coeffs(b, v);
    const Poly& lb = B.back();
    while (A.size() >= B.size()) {
        Poly la = A.back();
        size_t shift = A.size() - B.size();
        // A <- lb*A - la * x^shift * B ; kills the leading term.
        for (auto& c : A) c = lb * c;
        for (size_t i = 0; i < B.size(); ++i) A[shift + i] = A[shift + i] - la * B[i];
        while (!A.empty() && A.back().is_zero()) A.pop_back();
        if (A.empty()) break;
    }
    return from_univariate(A, v, a.field(), a.rank());
}

}  // namespace detail

// Multivariate gcd via primitive pseudo-remainder sequences; result is monic
// with respect to the lexicographic leading coefficient.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant())
        return Poly::constant(a.field(), a.rank(), 1);
    int v = -1;
    for (int i = 0; i < a.rank(); ++i)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) { v = i; break; }
    if (v < 0) return Poly::constant(a.field(), a.rank(), 1);

    Poly ca = detail::content_in(a, v), cb = detail::content_in(b, v);
    // Keep PRS elements monic as well as primitive; over Q this stops the
    // scalar part of the coefficients from growing exponentially.
    Poly pa = divexact(a, ca).monic(), pb = divexact(b, cb).monic();
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Poly r = detail::prem_in(pa, pb, v);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = r;
        } else {
            pb = divexact(r, detail::content_in(r, v)).monic();
        }
    }
    if (pa.degree_in(v) == 0) pa = Poly::constant(a.field(), a.rank(), 1);
    return (poly_gcd(ca, cb) * pa).monic();
}

inline std::string Poly::to_string(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : t_) {
        std::string mono;
        for (int i = 0; i < rank_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string cs = c.to_string();
        bool neg = false;
        if (!cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos) {
            neg = true;
            cs = cs.substr(1);
        }
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        bool unit = (cs == "1");
        if (cs.find_first_of("+-/ ", 1) != std::string::npos) cs = "(" + cs + ")";
        if (mono.empty()) s += cs;
        else if (unit) s += mono;
        else s += cs + "*" + mono;
    }
    return s;
}

}  // namespace hklr
