/*
 * scalar.hpp
 * ----------
 * Exact ground-field scalars for the symbolic kernel.
 *
 * A Scalar is an element of one of four coefficient fields, selected by a
 * shared FieldContext:
 *
 *   - Rational          : Q, via GMP rationals.
 *   - RationalQ         : Q(q), fractions of univariate polynomials in q
 *                         with rational coefficients (transcendental q).
 *   - CyclotomicQ(e)    : Q[q]/Phi_e(q), q a primitive e-th root of unity.
 *   - PrimeField(p, q0) : F_p with a distinguished element q0 (used as the
 *                         Hecke parameter when working modulo p).
 *
 * All arithmetic is exact; every value is kept in a canonical form so that
 * equality is structural (fractions reduced with monic denominator, residues
 * reduced mod Phi_e resp. mod p).
 */
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hklr {

// Dense univariate polynomial over Q, coefficient of q^k at index k.
using QPoly = std::vector<mpq_class>;

namespace qpoly {

inline void trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline bool is_zero(const QPoly& a) { return a.empty(); }

inline int degree(const QPoly& a) { return static_cast<int>(a.size()) - 1; }

inline QPoly constant(const mpq_class& c) {
    QPoly r;
    if (c != 0) r.push_back(c);
    return r;
}

inline QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

inline QPoly neg(const QPoly& a) {
    QPoly r(a);
    for (auto& c : r) c = -c;
    return r;
}

inline QPoly sub(const QPoly& a, const QPoly& b) { return add(a, neg(b)); }

inline QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Division with remainder; b must be nonzero.
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.empty()) throw std::domain_error("qpoly: division by zero");
    QPoly rem(a), quot;
    trim(rem);
    if (rem.size() >= b.size()) quot.assign(rem.size() - b.size() + 1, mpq_class(0));
    const mpq_class& lead = b.back();
    while (rem.size() >= b.size()) {
        mpq_class c = rem.back() / lead;
        size_t shift = rem.size() - b.size();
        quot[shift] = c;
        for (size_t i = 0; i + 1 < b.size(); ++i) rem[shift + i] -= c * b[i];
        rem.pop_back();  // leading term cancels exactly
        trim(rem);
    }
    trim(quot);
    return {quot, rem};
}

inline QPoly gcd(QPoly a, QPoly b) {
    while (!b.empty()) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        mpq_class lead = a.back();
        for (auto& c : a) c /= lead;  // monic normalization
    }
    return a;
}

// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
inline void ext_gcd(const QPoly& a, const QPoly& b, QPoly& g, QPoly& u, QPoly& v) {
    QPoly r0 = a, r1 = b;
    QPoly u0 = constant(1), u1;
    QPoly v0, v1 = constant(1);
    while (!r1.empty()) {
        auto [q, r2] = divmod(r0, r1);
        QPoly u2 = sub(u0, mul(q, u1));
        QPoly v2 = sub(v0, mul(q, v1));
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (!r0.empty()) {
        mpq_class lead = r0.back();
        for (auto& c : r0) c /= lead;
        for (auto& c : u0) c /= lead;
        for (auto& c : v0) c /= lead;
    }
    g = std::move(r0); u = std::move(u0); v = std::move(v0);
}

// The e-th cyclotomic polynomial, computed as (q^e - 1) / prod_{d|e, d<e} Phi_d.
inline QPoly cyclotomic(unsigned e) {
    if (e == 0) throw std::domain_error("cyclotomic: e must be positive");
    QPoly num(e + 1, mpq_class(0));
    num[0] = -1;
    num[e] = 1;
    for (unsigned d = 1; d < e; ++d) {
        if (e % d != 0) continue;
        auto [q, r] = divmod(num, cyclotomic(d));
        if (!r.empty()) throw std::logic_error("cyclotomic: inexact division");
        num = std::move(q);
    }
    return num;
}

}  // namespace qpoly

enum class ScalarMode { Rational, RationalQ, CyclotomicQ, PrimeField };

// Immutable description of the coefficient field; shared by all Scalars
// participating in one computation.
struct FieldContext {
    ScalarMode mode;
    unsigned e = 0;           // CyclotomicQ: order of the root of unity
    QPoly phi;                // CyclotomicQ: Phi_e, monic
    std::uint64_t p = 0;      // PrimeField: the characteristic
    std::uint64_t q0 = 0;     // PrimeField: value of the Hecke parameter

    static std::shared_ptr<const FieldContext> rational() {
        auto c = std::make_shared<FieldContext>();
        c->mode = ScalarMode::Rational;
        return c;
    }
    static std::shared_ptr<const FieldContext> rational_q() {
        auto c = std::make_shared<FieldContext>();
        c->mode = ScalarMode::RationalQ;
        return c;
    }
    static std::shared_ptr<const FieldContext> cyclotomic_q(unsigned e) {
        if (e < 2) throw std::domain_error("cyclotomic_q: need e >= 2");
        auto c = std::make_shared<FieldContext>();
        c->mode = ScalarMode::CyclotomicQ;
        c->e = e;
        c->phi = qpoly::cyclotomic(e);
        return c;
    }
    static std::shared_ptr<const FieldContext> prime_field(std::uint64_t p, std::uint64_t q0 = 1) {
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::domain_error("prime_field: p is not prime");
        if (p < 2) throw std::domain_error("prime_field: p is not prime");
        auto c = std::make_shared<FieldContext>();
        c->mode = ScalarMode::PrimeField;
        c->p = p;
        c->q0 = q0 % p;
        return c;
    }
};

using FieldRef = std::shared_ptr<const FieldContext>;

class Scalar {
public:
    Scalar() = default;  // uninitialized; only assignable

    static Scalar zero(const FieldRef& f) { return from_long(f, 0); }
    static Scalar one(const FieldRef& f) { return from_long(f, 1); }

    static Scalar from_long(const FieldRef& f, long v) {
        return from_mpq(f, mpq_class(v));
    }

    static Scalar from_mpq(const FieldRef& f, const mpq_class& v) {
        Scalar s;
        s.ctx_ = f;
        switch (f->mode) {
            case ScalarMode::Rational:
                s.rat_ = v;
                break;
            case ScalarMode::RationalQ:
                s.num_ = qpoly::constant(v);
                s.den_ = qpoly::constant(1);
                break;
            case ScalarMode::CyclotomicQ:
                s.num_ = qpoly::constant(v);
                break;
            case ScalarMode::PrimeField: {
                if (v.get_den() == 1 && v.get_num().fits_slong_p()) {
                    long n = v.get_num().get_si();
                    long m = static_cast<long>(f->p);
                    s.fp_ = static_cast<std::uint64_t>(((n % m) + m) % m);
                } else {
                    mpz_class num = v.get_num(), den = v.get_den(), p(static_cast<unsigned long>(f->p));
                    mpz_class ni = num % p, di, g;
                    if (ni < 0) ni += p;
                    mpz_class dmod = den % p;
                    if (dmod < 0) dmod += p;
                    if (dmod == 0) throw std::domain_error("scalar: denominator divisible by p");
                    mpz_invert(di.get_mpz_t(), dmod.get_mpz_t(), p.get_mpz_t());
                    mpz_class r = (ni * di) % p;
                    s.fp_ = r.get_ui();
                }
                break;
            }
        }
        return s;
    }

    // The Hecke parameter q (resp. q^k) in modes that model it.
    static Scalar q_power(const FieldRef& f, long k) {
        Scalar s;
        s.ctx_ = f;
        switch (f->mode) {
            case ScalarMode::Rational:
                throw std::domain_error("scalar: q undefined in rational mode");
            case ScalarMode::RationalQ:
                if (k >= 0) {
                    s.num_.assign(k + 1, mpq_class(0));
                    s.num_[k] = 1;
                    s.den_ = qpoly::constant(1);
                } else {
                    s.num_ = qpoly::constant(1);
                    s.den_.assign(-k + 1, mpq_class(0));
                    s.den_[-k] = 1;
                }
                break;
            case ScalarMode::CyclotomicQ: {
                long e = static_cast<long>(f->e);
                long kk = ((k % e) + e) % e;
                QPoly q(kk + 1, mpq_class(0));
                q[kk] = 1;
                s.num_ = qpoly::divmod(q, f->phi).second;
                break;
            }
            case ScalarMode::PrimeField: {
                Scalar base;
                base.ctx_ = f;
                base.fp_ = f->q0;
                if (k >= 0) return base.pow_u(static_cast<unsigned long>(k));
                return base.pow_u(static_cast<unsigned long>(-k)).inverse();
            }
        }
        return s;
    }

    const FieldRef& field() const { return ctx_; }

    bool is_zero() const {
        switch (ctx_->mode) {
            case ScalarMode::Rational: return rat_ == 0;
            case ScalarMode::RationalQ:
            case ScalarMode::CyclotomicQ: return num_.empty();
            case ScalarMode::PrimeField: return fp_ == 0;
        }
        return false;
    }

    bool is_one() const { return *this == one(ctx_); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        a.check(b);
        switch (a.ctx_->mode) {
            case ScalarMode::Rational: return a.rat_ == b.rat_;
            case ScalarMode::RationalQ: return a.num_ == b.num_ && a.den_ == b.den_;
            case ScalarMode::CyclotomicQ: return a.num_ == b.num_;
            case ScalarMode::PrimeField: return a.fp_ == b.fp_;
        }
        return false;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Total order; used only to keep containers and normal forms deterministic.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        a.check(b);
        switch (a.ctx_->mode) {
            case ScalarMode::Rational: return a.rat_ < b.rat_;
            case ScalarMode::PrimeField: return a.fp_ < b.fp_;
            default:
                if (a.num_ != b.num_) return lex_less(a.num_, b.num_);
                return lex_less(a.den_, b.den_);
        }
    }

    Scalar operator-() const {
        Scalar r(*this);
        switch (ctx_->mode) {
            case ScalarMode::Rational: r.rat_ = -r.rat_; break;
            case ScalarMode::RationalQ:
            case ScalarMode::CyclotomicQ: r.num_ = qpoly::neg(r.num_); break;
            case ScalarMode::PrimeField: r.fp_ = r.fp_ ? ctx_->p - r.fp_ : 0; break;
        }
        return r;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        a.check(b);
        Scalar r;
        r.ctx_ = a.ctx_;
        switch (a.ctx_->mode) {
            case ScalarMode::Rational: r.rat_ = a.rat_ + b.rat_; break;
            case ScalarMode::RationalQ:
                r.num_ = qpoly::add(qpoly::mul(a.num_, b.den_), qpoly::mul(b.num_, a.den_));
                r.den_ = qpoly::mul(a.den_, b.den_);
                r.reduce_fraction();
                break;
            case ScalarMode::CyclotomicQ: r.num_ = qpoly::add(a.num_, b.num_); break;
            case ScalarMode::PrimeField: {
                std::uint64_t s = a.fp_ + b.fp_;
                r.fp_ = s >= a.ctx_->p ? s - a.ctx_->p : s;
                break;
            }
        }
        return r;
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        a.check(b);
        Scalar r;
        r.ctx_ = a.ctx_;
        switch (a.ctx_->mode) {
            case ScalarMode::Rational: r.rat_ = a.rat_ * b.rat_; break;
            case ScalarMode::RationalQ:
                r.num_ = qpoly::mul(a.num_, b.num_);
                r.den_ = qpoly::mul(a.den_, b.den_);
                r.reduce_fraction();
                break;
            case ScalarMode::CyclotomicQ:
                r.num_ = qpoly::divmod(qpoly::mul(a.num_, b.num_), a.ctx_->phi).second;
                break;
            case ScalarMode::PrimeField:
                r.fp_ = mulmod(a.fp_, b.fp_, a.ctx_->p);
                break;
        }
        return r;
    }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("scalar: inverse of zero");
        Scalar r;
        r.ctx_ = ctx_;
        switch (ctx_->mode) {
            case ScalarMode::Rational: r.rat_ = 1 / rat_; break;
            case ScalarMode::RationalQ:
                r.num_ = den_;
                r.den_ = num_;
                r.reduce_fraction();
                break;
            case ScalarMode::CyclotomicQ: {
                QPoly g, u, v;
                qpoly::ext_gcd(num_, ctx_->phi, g, u, v);
                if (qpoly::degree(g) != 0)
                    throw std::logic_error("scalar: non-invertible cyclotomic residue");
                r.num_ = qpoly::divmod(u, ctx_->phi).second;
                break;
            }
            case ScalarMode::PrimeField: {
                // Fermat inverse; p is prime.
                Scalar b;
                b.ctx_ = ctx_;
                b.fp_ = fp_;
                r = b.pow_u(ctx_->p - 2);
                break;
            }
        }
        return r;
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    std::string to_string() const {
        switch (ctx_->mode) {
            case ScalarMode::Rational: return rat_.get_str();
            case ScalarMode::PrimeField: return std::to_string(fp_);
            case ScalarMode::CyclotomicQ: return poly_str(num_);
            case ScalarMode::RationalQ: {
                std::string n = poly_str(num_);
                if (qpoly::degree(den_) == 0 && den_[0] == 1) return n;
                return "(" + n + ")/(" + poly_str(den_) + ")";
            }
        }
        return "";
    }

private:
    FieldRef ctx_;
    mpq_class rat_;   // Rational
    QPoly num_, den_; // RationalQ (reduced, den monic) / CyclotomicQ (num only)
    std::uint64_t fp_ = 0;  // PrimeField

    void check(const Scalar& o) const {
        if (ctx_.get() != o.ctx_.get())
            throw std::logic_error("scalar: mixed field contexts");
    }

    static bool lex_less(const QPoly& a, const QPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }

    static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
    }

    Scalar pow_u(std::uint64_t k) const {
        Scalar acc = one(ctx_), base = *this;
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    void reduce_fraction() {
        if (num_.empty()) {
            den_ = qpoly::constant(1);
            return;
        }
        QPoly g = qpoly::gcd(num_, den_);
        if (qpoly::degree(g) > 0) {
            num_ = qpoly::divmod(num_, g).first;
            den_ = qpoly::divmod(den_, g).first;
        }
        mpq_class lead = den_.back();
        if (lead != 1) {
            for (auto& c : den_) c /= lead;
            for (auto& c : num_) c /= lead;
        }
    }

    static std::string poly_str(const QPoly& a) {
        if (a.empty()) return "0";
        std::string s;
        for (size_t i = a.size(); i-- > 0;) {
            if (a[i] == 0) continue;
            mpq_class c = a[i];
            bool neg = c < 0;
            if (!s.empty()) s += neg ? " - " : " + ";
            else if (neg) s += "-";
            mpq_class ac = abs(c);
            std::string cs = ac.get_str();
            if (i == 0) s += cs;
            else {
                if (ac != 1) s += cs + "*";
                s += i == 1 ? "q" : "q^" + std::to_string(i);
            }
        }
        return s;
    }
};

}  // namespace hklr
