/*
 * hecke.hpp
 * ---------
 * Affine Hecke algebras of both flavors over a field of fractions of the
 * coordinate ring, in the basis { f(coords) * t_w }.
 *
 * Degenerate flavor (coordinates x_r, additive action):
 *   t_r^2 = 1,   t_r f = sigma_r(f) t_r + dd_r(f),   braid relations,
 * with dd_r the divided difference.  Non-degenerate flavor (coordinates
 * X_r^{±1}, Laurent action, Hecke parameter q):
 *   T_r^2 = (q-1) T_r + q,   T_r f = sigma_r(f) T_r + (1-q) D_r(f),
 * with D_r the Demazure operator.  Coefficients always stand to the left of
 * the t_w, and every element is kept in this normal form.
 */
#pragma once

#include <map>

#include "action.hpp"

namespace hklr {

enum class Flavor { Degenerate, NonDegenerate };

class HeckeAlgebra {
public:
    // Non-degenerate flavor over the plain rationals models a transcendental
    // Hecke parameter by an extra polynomial variable after the coordinates;
    // over CyclotomicQ / PrimeField / RationalQ fields, q lives in the scalars.
    HeckeAlgebra(const WeylGroup& g, FieldRef f, Flavor flavor)
        : g_(&g),
          flavor_(flavor),
          act_(g, f,
               flavor == Flavor::Degenerate ? CoordKind::Additive : CoordKind::Laurent,
               flavor == Flavor::NonDegenerate && f->mode == ScalarMode::Rational ? 1 : 0) {}

    const WeylGroup& group() const { return *g_; }
    const WAction& action() const { return act_; }
    const FieldRef& field() const { return act_.field(); }
    Flavor flavor() const { return flavor_; }
    int rank() const { return g_->rank(); }
    int nvars() const { return act_.nvars(); }

    // The Hecke parameter as a coefficient.
    RatFun q() const {
        if (flavor_ != Flavor::NonDegenerate)
            throw std::logic_error("hecke: q only exists in the non-degenerate flavor");
        if (field()->mode == ScalarMode::Rational) return act_.var(rank());
        return act_.constant(Scalar::q_power(field(), 1));
    }

private:
    const WeylGroup* g_;
    Flavor flavor_;
    WAction act_;
};

class HeckeElement {
public:
    HeckeElement() = default;
    explicit HeckeElement(const HeckeAlgebra& a) : alg_(&a) {}

    static HeckeElement zero(const HeckeAlgebra& a) { return HeckeElement(a); }

    static HeckeElement from_coeff(const HeckeAlgebra& a, const RatFun& f) {
        HeckeElement e(a);
        e.add(a.group().identity(), f);
        return e;
    }

    static HeckeElement one(const HeckeAlgebra& a) {
        return from_coeff(a, a.action().one());
    }

    // The coordinate generator x_r (resp. X_r^{pow}).
    static HeckeElement coord(const HeckeAlgebra& a, int r, int pow = 1) {
        return from_coeff(a, RatFun::variable(a.field(), a.nvars(), r, pow));
    }

    static HeckeElement gen_t(const HeckeAlgebra& a, int r) {
        HeckeElement e(a);
        e.add(a.group().generator(r), a.action().one());
        return e;
    }

    // Intertwiner: phi_r = t_r + x_r^{-1}, resp. Phi_r = T_r + (1-q)/(1-X_r).
    static HeckeElement intertwiner(const HeckeAlgebra& a, int r) {
        HeckeElement e = gen_t(a, r);
        if (a.flavor() == Flavor::Degenerate) {
            e.add(a.group().identity(), RatFun::variable(a.field(), a.nvars(), r, -1));
        } else {
            RatFun one = a.action().one();
            RatFun c = (one - a.q()) / (one - a.action().var(r));
            e.add(a.group().identity(), c);
        }
        return e;
    }

    const HeckeAlgebra& algebra() const { return *alg_; }
    const std::map<int, RatFun>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

    HeckeElement operator-() const {
        HeckeElement r(*this);
        for (auto& [w, f] : r.c_) f = -f;
        return r;
    }

    friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
        HeckeElement r(a);
        for (const auto& [w, f] : b.c_) r.add(w, f);
        return r;
    }
    friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) {
        return a + (-b);
    }

    // Left multiplication by a coefficient.
    HeckeElement scaled(const RatFun& f) const {
        HeckeElement r(*alg_);
        for (const auto& [w, g] : c_) r.add(w, f * g);
        return r;
    }

    // Left multiplication by t_r, fully normalized.
    HeckeElement t_left(int r) const {
        const WeylGroup& g = alg_->group();
        const WAction& act = alg_->action();
        HeckeElement res(*alg_);
        for (const auto& [w, f] : c_) {
            RatFun sf = act.apply_gen(r, f);
            RatFun df = act.divided_difference(r, f);
            if (alg_->flavor() == Flavor::NonDegenerate)
                df = (act.one() - alg_->q()) * df;
            // t_r f t_w = sigma_r(f) (t_r t_w) + dd-part * t_w
            res.add(w, df);
            auto [rw, up] = g.left_mult_gen(r, w);
            if (up) {
                res.add(rw, sf);
            } else if (alg_->flavor() == Flavor::Degenerate) {
                res.add(rw, sf);  // t_r t_w = t_{rw}, t_r^2 = 1 already folded in
            } else {
                // T_r T_w = (q-1) T_w + q T_{rw} when the length goes down.
                RatFun q = alg_->q();
                res.add(w, (q - act.one()) * sf);
                res.add(rw, q * sf);
            }
        }
        return res;
    }

    friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
        HeckeElement res(*a.alg_);
        const WeylGroup& g = a.alg_->group();
        for (const auto& [u, f] : a.c_) {
            HeckeElement t = b;
            const auto& word = g.word(u);
            for (auto it = word.rbegin(); it != word.rend(); ++it) t = t.t_left(*it);
            t = t.scaled(f);
            res = res + t;
        }
        return res;
    }

private:
    const HeckeAlgebra* alg_ = nullptr;
    std::map<int, RatFun> c_;

    void add(int w, const RatFun& f) {
        if (f.is_zero()) return;
        auto it = c_.find(w);
        if (it == c_.end()) {
            c_.emplace(w, f);
        } else {
            it->second = it->second + f;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
};

}  // namespace hklr
