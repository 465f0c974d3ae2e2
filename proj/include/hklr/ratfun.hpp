/*
 * ratfun.hpp
 * ----------
 * Rational functions num/den over the multivariate Poly layer.
 *
 * Invariants: den != 0, gcd(num, den) constant, and den has lexicographic
 * leading coefficient 1.  Under these, equality of values is structural
 * equality, which every zero-residual check in the library relies on.
 */
#pragma once

#include "poly.hpp"

namespace hklr {

class RatFun {
public:
    RatFun() = default;

    RatFun(Poly num, Poly den) : n_(std::move(num)), d_(std::move(den)) { canonicalize(); }

    explicit RatFun(Poly num)
        : n_(std::move(num)), d_(Poly::constant(n_.field(), n_.rank(), 1)) {}

    static RatFun zero(const FieldRef& f, int rank) { return RatFun(Poly::zero(f, rank)); }
    static RatFun one(const FieldRef& f, int rank) { return RatFun(Poly::constant(f, rank, 1)); }
    static RatFun constant(const FieldRef& f, int rank, const Scalar& c) {
        return RatFun(Poly::constant(f, rank, c));
    }
    static RatFun constant(const FieldRef& f, int rank, long c) {
        return RatFun(Poly::constant(f, rank, c));
    }
    static RatFun variable(const FieldRef& f, int rank, int v, int pow = 1) {
        if (pow >= 0) return RatFun(Poly::variable(f, rank, v, pow));
        return RatFun(Poly::constant(f, rank, 1), Poly::variable(f, rank, v, -pow));
    }

    const Poly& num() const { return n_; }
    const Poly& den() const { return d_; }
    const FieldRef& field() const { return n_.field(); }
    int rank() const { return n_.rank(); }

    bool is_zero() const { return n_.is_zero(); }
    bool is_one() const { return n_ == d_; }

    bool is_polynomial() const { return d_.is_constant(); }
    Poly as_polynomial() const {
        if (!is_polynomial()) throw std::logic_error("ratfun: not a polynomial");
        return d_.constant_value().inverse() * n_;
    }

    bool is_constant() const { return n_.is_constant() && d_.is_constant(); }
    Scalar constant_value() const { return n_.constant_value() / d_.constant_value(); }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.n_ == b.n_ && a.d_ == b.d_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    friend bool operator<(const RatFun& a, const RatFun& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.d_ < b.d_;
    }

    RatFun operator-() const {
        RatFun r(*this);
        r.n_ = -r.n_;
        return r;
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.d_ == b.d_) return RatFun(a.n_ + b.n_, a.d_);
        Poly g = poly_gcd(a.d_, b.d_);
        if (g.is_constant())
            return RatFun(a.n_ * b.d_ + b.n_ * a.d_, a.d_ * b.d_);
        Poly da = divexact(a.d_, g), db = divexact(b.d_, g);
        return RatFun(a.n_ * db + b.n_ * da, a.d_ * db);
    }

    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        if (a.is_zero() || b.is_zero()) return zero(a.field(), a.rank());
        // Cross-reduce before multiplying to keep intermediates small.
        Poly g1 = poly_gcd(a.n_, b.d_), g2 = poly_gcd(b.n_, a.d_);
        Poly n1 = g1.is_constant() ? a.n_ : divexact(a.n_, g1);
        Poly d2 = g1.is_constant() ? b.d_ : divexact(b.d_, g1);
        Poly n2 = g2.is_constant() ? b.n_ : divexact(b.n_, g2);
        Poly d1 = g2.is_constant() ? a.d_ : divexact(a.d_, g2);
        return RatFun(n1 * n2, d1 * d2);
    }

    friend RatFun operator*(const Scalar& c, const RatFun& a) {
        if (c.is_zero()) return zero(a.field(), a.rank());
        RatFun r(a);
        r.n_ = c * r.n_;
        return r;
    }

    RatFun inverse() const {
        if (is_zero()) throw std::domain_error("ratfun: inverse of zero");
        return RatFun(d_, n_);
    }

    friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

    RatFun pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        RatFun acc = one(field(), rank()), base = *this;
        while (k) {
            if (k & 1) acc = acc * base;
            if (k >>= 1) base = base * base;
        }
        return acc;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        std::string ns = n_.to_string(names);
        if (d_.is_constant() && d_.constant_value().is_one()) return ns;
        bool wrap = n_.terms().size() > 1;
        return (wrap ? "(" + ns + ")" : ns) + " / (" + d_.to_string(names) + ")";
    }

private:
    Poly n_, d_;

    void canonicalize() {
        if (d_.is_zero()) throw std::domain_error("ratfun: zero denominator");
        if (n_.is_zero()) {
            d_ = Poly::constant(field(), rank(), 1);
            return;
        }
        if (!d_.is_constant() && !n_.is_constant()) {
            Poly g = poly_gcd(n_, d_);
            if (!g.is_constant()) {
                n_ = divexact(n_, g);
                d_ = divexact(d_, g);
            }
        }
        Scalar lead = d_.leading_coeff();
        if (!lead.is_one()) {
            Scalar inv = lead.inverse();
            n_ = inv * n_;
            d_ = inv * d_;
        }
    }
};

// Evaluate p at the given variable images (one RatFun per variable).
inline RatFun poly_eval(const Poly& p, const std::vector<RatFun>& images) {
    if (static_cast<int>(images.size()) != p.rank())
        throw std::logic_error("poly_eval: wrong image count");
    const FieldRef& f = images.empty() ? p.field() : images[0].field();
    int orank = images.empty() ? p.rank() : images[0].rank();
    // Cache powers of each image.
    std::vector<std::vector<RatFun>> pw(images.size());
    for (size_t v = 0; v < images.size(); ++v) pw[v].push_back(RatFun::one(f, orank));
    RatFun acc = RatFun::zero(f, orank);
    for (const auto& [e, c] : p.terms()) {
        RatFun term = RatFun::constant(f, orank, Scalar::from_long(f, 1));
        for (size_t v = 0; v < images.size(); ++v) {
            int k = e[v];
            if (k == 0) continue;
            while (static_cast<int>(pw[v].size()) <= k)
                pw[v].push_back(pw[v].back() * images[v]);
            term = term * pw[v][k];
        }
        acc = acc + c * term;
    }
    return acc;
}

inline RatFun ratfun_eval(const RatFun& r, const std::vector<RatFun>& images) {
    return poly_eval(r.num(), images) / poly_eval(r.den(), images);
}

}  // namespace hklr
