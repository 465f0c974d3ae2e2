/*
 * action.hpp
 * ----------
 * Weyl group actions on coordinate rings, plus the associated divided
 * difference / Demazure operators.
 *
 * Three coordinate systems are supported, all driven by the same reflection
 * matrices:
 *
 *   Additive : w(x_s) = sum_t M[t][s] x_t            (degenerate x and y)
 *   Laurent  : w(X_s) = prod_t X_t^{M[t][s]}         (non-degenerate X)
 *   AffineY  : w(Y_s) = 1 - prod_t (1-Y_t)^{M[t][s]} (non-degenerate Y)
 *
 * The AffineY action is the Laurent action transported through
 * Y_s = 1 - X_s, i.e. conjugated by the substitution u_s = 1 - Y_s.
 */
#pragma once

#include "ratfun.hpp"
#include "weyl.hpp"

namespace hklr {

enum class CoordKind { Additive, Laurent, AffineY };

class WAction {
public:
    // extra_vars appends action-invariant variables after the coordinates
    // (used to carry a transcendental Hecke parameter in the same ring).
    WAction(const WeylGroup& g, FieldRef f, CoordKind kind, int extra_vars = 0)
        : g_(&g), f_(std::move(f)), kind_(kind), extra_(extra_vars), cache_(g.size()) {}

    const WeylGroup& group() const { return *g_; }
    const FieldRef& field() const { return f_; }
    CoordKind kind() const { return kind_; }
    int rank() const { return g_->rank(); }
    int nvars() const { return rank() + extra_; }

    // Images of the ring variables under w (extras map to themselves).
    const std::vector<RatFun>& images(int w) const {
        auto& slot = cache_[w];
        if (!slot.empty()) return slot;
        int n = nvars();
        slot.reserve(n);
        for (int s = 0; s < rank(); ++s) {
            switch (kind_) {
                case CoordKind::Additive: {
                    Poly p = Poly::zero(f_, n);
                    for (int t = 0; t < rank(); ++t) {
                        int c = g_->coeff(w, t, s);
                        if (c) p.add_term(unit_exp(n, t), Scalar::from_long(f_, c));
                    }
                    slot.push_back(RatFun(std::move(p)));
                    break;
                }
                case CoordKind::Laurent: {
                    RatFun r = RatFun::one(f_, n);
                    for (int t = 0; t < rank(); ++t) {
                        int c = g_->coeff(w, t, s);
                        if (c) r = r * RatFun::variable(f_, n, t, c);
                    }
                    slot.push_back(std::move(r));
                    break;
                }
                case CoordKind::AffineY: {
                    RatFun r = RatFun::one(f_, n);
                    for (int t = 0; t < rank(); ++t) {
                        int c = g_->coeff(w, t, s);
                        if (!c) continue;
                        RatFun u(Poly::constant(f_, n, 1) - Poly::variable(f_, n, t));
                        r = r * u.pow(c);
                    }
                    slot.push_back(RatFun::one(f_, n) - r);
                    break;
                }
            }
        }
        for (int t = rank(); t < n; ++t) slot.push_back(RatFun::variable(f_, n, t));
        return slot;
    }

    RatFun apply(int w, const RatFun& v) const {
        if (w == g_->identity()) return v;
        return ratfun_eval(v, images(w));
    }
    RatFun apply_gen(int r, const RatFun& v) const { return apply(g_->generator(r), v); }

    // Divided difference for generator r:
    //   Additive:  (sigma_r(f) - f) / x_r
    //   Laurent :  (sigma_r(f) - f) / (1 - X_r)     (Demazure-type)
    //   AffineY :  (sigma_r(f) - f) / Y_r
    RatFun divided_difference(int r, const RatFun& v) const {
        int n = nvars();
        RatFun num = apply_gen(r, v) - v;
        switch (kind_) {
            case CoordKind::Additive:
                return num / RatFun::variable(f_, n, r);
            case CoordKind::Laurent:
                return num / RatFun(Poly::constant(f_, n, 1) - Poly::variable(f_, n, r));
            case CoordKind::AffineY:
                return num / RatFun::variable(f_, n, r);
        }
        throw std::logic_error("unreachable");
    }

    RatFun var(int r) const { return RatFun::variable(f_, nvars(), r); }
    RatFun one() const { return RatFun::one(f_, nvars()); }
    RatFun constant(long c) const { return RatFun::constant(f_, nvars(), c); }
    RatFun constant(const Scalar& c) const { return RatFun::constant(f_, nvars(), c); }

private:
    const WeylGroup* g_;
    FieldRef f_;
    CoordKind kind_;
    int extra_ = 0;
    mutable std::vector<std::vector<RatFun>> cache_;

    static Expv unit_exp(int n, int t) {
        Expv e(n, 0);
        e[t] = 1;
        return e;
    }
};

}  // namespace hklr
