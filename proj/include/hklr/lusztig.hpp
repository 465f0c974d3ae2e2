/*
 * lusztig.hpp
 * -----------
 * The Lusztig extension of an affine Hecke algebra by the semisimple algebra
 * spanned by idempotents eps(i) indexed by one residue orbit.
 *
 * Elements are kept in the normal form  sum f_{w,i} * b_w * eps(i)  with the
 * rational coefficient on the left, where b_w is either the intertwiner basis
 * (phi_w over the x/X coordinates) or the theta basis (theta_w over the
 * Brundan-Kleshchev y/Y coordinates).  Products are computed generically:
 * one generator at a time, using only
 *
 *   b_r f = sigma_r(f) b_r,      b_r eps(i) = eps(sigma_r i) b_r,
 *   b_r b_w = b_{rw}                       if the length goes up,
 *   b_r b_w = c_r(...) b_{rw}              if the length goes down,
 *
 * where c_r is phi_r^2 (independent of the idempotent) in the intertwiner
 * basis and the case table for theta_r^2 eps(i) in the theta basis.
 */
#pragma once

#include <map>
#include <optional>

#include "hecke.hpp"
#include "residue.hpp"

namespace hklr {

enum class LEngine { Intertwiner, Theta };

class LusztigAlgebra {
public:
    LusztigAlgebra(const WeylGroup& g, Flavor flavor, LEngine engine, FieldRef f,
                   long e, const ResVec& seed)
        : g_(&g),
          flavor_(flavor),
          engine_(engine),
          rs_(g, e),
          orbit_(rs_.orbit(seed)),
          act_(g, f, coord_kind(flavor, engine),
               flavor == Flavor::NonDegenerate && f->mode == ScalarMode::Rational ? 1 : 0) {
        for (int k = 0; k < static_cast<int>(orbit_.size()); ++k) idx_[orbit_[k]] = k;
        resact_.assign(g.size(), std::vector<int>(orbit_.size()));
        for (int w = 0; w < g.size(); ++w)
            for (size_t k = 0; k < orbit_.size(); ++k)
                resact_[w][k] = idx_.at(rs_.act(w, orbit_[k]));
    }

    static CoordKind coord_kind(Flavor flavor, LEngine engine) {
        if (flavor == Flavor::Degenerate) return CoordKind::Additive;
        return engine == LEngine::Intertwiner ? CoordKind::Laurent : CoordKind::AffineY;
    }

    const WeylGroup& group() const { return *g_; }
    const ResidueSystem& residues() const { return rs_; }
    const WAction& action() const { return act_; }
    const FieldRef& field() const { return act_.field(); }
    Flavor flavor() const { return flavor_; }
    LEngine engine() const { return engine_; }
    long e() const { return rs_.e(); }
    int rank() const { return g_->rank(); }
    int nvars() const { return act_.nvars(); }

    int orbit_size() const { return static_cast<int>(orbit_.size()); }
    const std::vector<ResVec>& orbit() const { return orbit_; }
    const ResVec& residue(int k) const { return orbit_[k]; }
    int orbit_index(const ResVec& i) const { return idx_.at(rs_.reduce(i)); }
    int act_residue(int w, int k) const { return resact_[w][k]; }

    bool q_is_var() const {
        return flavor_ == Flavor::NonDegenerate && field()->mode == ScalarMode::Rational;
    }

    // q^k as a coefficient; for residue exponents this is only sound when q
    // genuinely has multiplicative order e (or e = 0 with k a plain integer).
    RatFun q_pow(long k) const {
        if (flavor_ != Flavor::NonDegenerate)
            throw std::logic_error("lusztig: q undefined in the degenerate flavor");
        if (q_is_var()) {
            if (e() != 0)
                throw std::logic_error(
                    "lusztig: residue powers of a transcendental q need e = 0");
            return act_.var(rank()).pow(static_cast<int>(k));
        }
        if (field()->mode == ScalarMode::CyclotomicQ &&
            static_cast<long>(field()->e) != e())
            throw std::logic_error("lusztig: cyclotomic order does not match e");
        return act_.constant(Scalar::q_power(field(), k));
    }

    // The residue i_r as a field element (degenerate flavor only).
    Scalar embed_residue(long v) const {
        const FieldRef& F = field();
        if (F->mode == ScalarMode::Rational) {
            if (e() != 0)
                throw std::logic_error("lusztig: residues mod e need a prime field");
            return Scalar::from_long(F, v);
        }
        if (F->mode == ScalarMode::PrimeField) {
            if (e() != 0 && static_cast<long>(F->p) != e())
                throw std::logic_error("lusztig: characteristic does not match e");
            return Scalar::from_long(F, v);
        }
        throw std::logic_error("lusztig: unsupported residue embedding");
    }

    // phi_r^2 as a coefficient (intertwiner-basis reduction; idempotent-free).
    RatFun phi_sq(int r) const {
        RatFun one = act_.one();
        if (flavor_ == Flavor::Degenerate)
            return one - RatFun::variable(field(), nvars(), r, -2);
        RatFun X = act_.var(r), q = q_pow(1);
        return (one - q * X) * (q - X) / ((one - X) * (one - X));
    }

    // theta_r^2 eps(i) as a coefficient (theta-basis reduction).
    RatFun theta_sq(int r, int k) const {
        long ir = residue(k)[r];
        RatFun y = act_.var(r), one = act_.one();
        const ResidueSystem& rs = rs_;
        if (flavor_ == Flavor::Degenerate) {
            if (rs.eq(ir, 0)) return -RatFun::variable(field(), nvars(), r, -2);
            if (e() != 2 && rs.eq(ir, 1)) return -y;
            if (e() != 2 && rs.eq(ir, -1)) return y;
            if (e() == 2 && rs.eq(ir, 1)) return -(y * y);
            return one;
        }
        if (rs.eq(ir, 0)) return (y - one) * RatFun::variable(field(), nvars(), r, -2);
        if (e() != 2 && rs.eq(ir, 1)) return y / (y - one);
        if (e() != 2 && rs.eq(ir, -1)) return y;
        if (e() == 2 && rs.eq(ir, 1)) return y * y / (y - one);
        return one;
    }

    // Brundan-Kleshchev normalizer q_r(i) (resp. Q_r(i)) in the y/Y coordinates.
    RatFun bk_q(int r, int k) const {
        long ir = residue(k)[r];
        RatFun y = act_.var(r), one = act_.one();
        const ResidueSystem& rs = rs_;
        if (flavor_ == Flavor::Degenerate) {
            if (rs.eq(ir, 0)) return one - y;
            if (e() != 2 && rs.eq(ir, 1)) return one;
            if (e() != 2 && rs.eq(ir, -1)) return (y - act_.constant(2)) / ((one - y) * (one - y));
            if (e() == 2 && rs.eq(ir, 1)) return (one - y).inverse();
            RatFun xr = y + act_.constant(embed_residue(ir));
            return one - xr.inverse();
        }
        RatFun q = q_pow(1);
        if (rs.eq(ir, 0)) return one - q - y;
        if (e() != 2 && rs.eq(ir, 1)) return one;
        if (e() != 2 && rs.eq(ir, -1)) {
            RatFun u = q_pow(-1) * (one - y);
            return (q - u) / ((one - u) * (one - u));
        }
        if (e() == 2 && rs.eq(ir, 1)) return (q * (one - y) - one).inverse();
        RatFun v = q_pow(ir) * (one - y);
        return (v - q) / (v - one);
    }

    // The product q_r(i) sigma_r(q_r(sigma_r i)); appears in the closed form
    // of theta_r^2.
    RatFun bk_q_product(int r, int k) const {
        int sk = act_residue(g_->generator(r), k);
        return bk_q(r, k) * act_.apply_gen(r, bk_q(r, sk));
    }

private:
    const WeylGroup* g_;
    Flavor flavor_;
    LEngine engine_;
    ResidueSystem rs_;
    std::vector<ResVec> orbit_;
    std::map<ResVec, int> idx_;
    WAction act_;
    std::vector<std::vector<int>> resact_;
};

class LElement {
public:
    LElement() = default;
    explicit LElement(const LusztigAlgebra& a) : alg_(&a) {}

    static LElement zero(const LusztigAlgebra& a) { return LElement(a); }

    static LElement eps(const LusztigAlgebra& a, int k) {
        LElement e(a);
        e.add(a.group().identity(), k, a.action().one());
        return e;
    }

    static LElement one(const LusztigAlgebra& a) {
        LElement e(a);
        for (int k = 0; k < a.orbit_size(); ++k)
            e.add(a.group().identity(), k, a.action().one());
        return e;
    }

    // A central coordinate function (same coefficient on every idempotent).
    static LElement coeff(const LusztigAlgebra& a, const RatFun& f) {
        LElement e(a);
        for (int k = 0; k < a.orbit_size(); ++k) e.add(a.group().identity(), k, f);
        return e;
    }

    static LElement var(const LusztigAlgebra& a, int r, int pow = 1) {
        return coeff(a, RatFun::variable(a.field(), a.nvars(), r, pow));
    }

    // A diagonal element sum_i f_i eps(i).
    static LElement diagonal(const LusztigAlgebra& a, const std::vector<RatFun>& fs) {
        LElement e(a);
        for (int k = 0; k < a.orbit_size(); ++k) e.add(a.group().identity(), k, fs[k]);
        return e;
    }

    // The basis generator of the engine: phi_r resp. theta_r.
    static LElement gen(const LusztigAlgebra& a, int r) {
        LElement e(a);
        int gw = a.group().generator(r);
        for (int k = 0; k < a.orbit_size(); ++k) e.add(gw, k, a.action().one());
        return e;
    }

    const LusztigAlgebra& algebra() const { return *alg_; }
    const std::map<std::pair<int, int>, RatFun>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    friend bool operator==(const LElement& a, const LElement& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LElement& a, const LElement& b) { return !(a == b); }

    LElement operator-() const {
        LElement r(*this);
        for (auto& [key, f] : r.c_) f = -f;
        return r;
    }

    friend LElement operator+(const LElement& a, const LElement& b) {
        LElement r(a);
        for (const auto& [key, f] : b.c_) r.add(key.first, key.second, f);
        return r;
    }
    friend LElement operator-(const LElement& a, const LElement& b) { return a + (-b); }

    // Left multiplication by a coefficient function.
    LElement scaled(const RatFun& f) const {
        LElement r(*alg_);
        for (const auto& [key, g] : c_) r.add(key.first, key.second, f * g);
        return r;
    }

    // Left multiplication by the engine generator b_r.
    LElement gen_left(int r) const {
        const WeylGroup& g = alg_->group();
        const WAction& act = alg_->action();
        LElement res(*alg_);
        for (const auto& [key, f] : c_) {
            auto [w, k] = key;
            RatFun sf = act.apply_gen(r, f);
            auto [rw, up] = g.left_mult_gen(r, w);
            if (up) {
                res.add(rw, k, sf);
            } else {
                // b_r b_w = b_r^2 b_{rw}; the square acts through eps(rw(i)).
                RatFun c = alg_->engine() == LEngine::Intertwiner
                               ? alg_->phi_sq(r)
                               : alg_->theta_sq(r, alg_->act_residue(rw, k));
                res.add(rw, k, sf * c);
            }
        }
        return res;
    }

    // Left multiplication by eps(j).
    LElement eps_left(int j) const {
        LElement res(*alg_);
        for (const auto& [key, f] : c_)
            if (alg_->act_residue(key.first, key.second) == j)
                res.add(key.first, key.second, f);
        return res;
    }

    friend LElement operator*(const LElement& a, const LElement& b) {
        LElement res(*a.alg_);
        const WeylGroup& g = a.alg_->group();
        for (const auto& [key, f] : a.c_) {
            auto [u, k] = key;
            // (f b_u eps(i)) * b = f * b_u * (eps(i) b)
            LElement t = b.eps_left(k);
            if (t.is_zero()) continue;
            const auto& word = g.word(u);
            for (auto it = word.rbegin(); it != word.rend(); ++it) t = t.gen_left(*it);
            t = t.scaled(f);
            res = res + t;
        }
        return res;
    }

private:
    const LusztigAlgebra* alg_ = nullptr;
    std::map<std::pair<int, int>, RatFun> c_;

    void add(int w, int k, const RatFun& f) {
        if (f.is_zero()) return;
        auto key = std::make_pair(w, k);
        auto it = c_.find(key);
        if (it == c_.end()) {
            c_.emplace(key, f);
        } else {
            it->second = it->second + f;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
};

// ---- Named generators -----------------------------------------------------

// Forward declarations of engine-dependent generators.
RatFun to_engine_coords(const LusztigAlgebra& a, const RatFun& f, int k);
inline LElement gen_theta_in_intertwiner(const LusztigAlgebra& a, int r);

// theta_r expressed in whichever engine `a` uses.
inline LElement gen_theta(const LusztigAlgebra& a, int r) {
    if (a.engine() == LEngine::Theta) return LElement::gen(a, r);
    return gen_theta_in_intertwiner(a, r);
}

// psi_r = theta_r - sum_{i_r = 0} y_r^{-1} eps(i), in either engine.
inline LElement gen_psi(const LusztigAlgebra& a, int r) {
    LElement e = gen_theta(a, r);
    RatFun yinv;
    if (a.engine() == LEngine::Theta) {
        yinv = RatFun::variable(a.field(), a.nvars(), r, -1);
    } else if (a.flavor() == Flavor::Degenerate) {
        // y_r = x_r on components with i_r = 0
        yinv = RatFun::variable(a.field(), a.nvars(), r, -1);
    } else {
        // Y_r = 1 - X_r on components with i_r = 0
        yinv = (a.action().one() - a.action().var(r)).inverse();
    }
    for (int k = 0; k < a.orbit_size(); ++k)
        if (a.residues().eq(a.residue(k)[r], 0))
            e = e - LElement::eps(a, k).scaled(yinv);
    return e;
}

// Transport an element of a theta-engine algebra into the matching
// intertwiner-engine algebra (same group, flavor, e, orbit).
inline LElement theta_to_intertwiner(const LusztigAlgebra& phi_alg,
                                     const LusztigAlgebra& theta_alg,
                                     const LElement& v) {
    LElement res = LElement::zero(phi_alg);
    for (const auto& [key, f] : v.terms()) {
        auto [w, k] = key;
        LElement t = LElement::eps(phi_alg, k);
        const auto& word = theta_alg.group().word(w);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            t = gen_theta_in_intertwiner(phi_alg, *it) * t;
        // the left coefficient is rewritten on the component it lands in:
        // f theta_w eps(i) = f eps(w i) theta_w eps(i)
        int wi = theta_alg.act_residue(w, k);
        t = t.scaled(to_engine_coords(phi_alg, f, wi));
        res = res + t;
    }
    return res;
}

// theta_r in the intertwiner engine: phi_r * sum_i q_r(i)^{-1} eps(i), with
// the normalizer rewritten into the x/X coordinates of that engine.
RatFun to_engine_coords(const LusztigAlgebra& a, const RatFun& f, int k);

inline LElement gen_theta_in_intertwiner(const LusztigAlgebra& a, int r) {
    if (a.engine() != LEngine::Intertwiner)
        throw std::logic_error("gen_theta_in_intertwiner: intertwiner engine only");
    std::vector<RatFun> fs;
    for (int k = 0; k < a.orbit_size(); ++k)
        fs.push_back(to_engine_coords(a, a.bk_q(r, k).inverse(), k));
    return LElement::gen(a, r) * LElement::diagonal(a, fs);
}

// phi_r in the theta engine: theta_r * sum_i q_r(i) eps(i).
inline LElement gen_phi_in_theta(const LusztigAlgebra& a, int r) {
    if (a.engine() != LEngine::Theta)
        throw std::logic_error("gen_phi_in_theta: theta engine only");
    std::vector<RatFun> fs;
    for (int k = 0; k < a.orbit_size(); ++k) fs.push_back(a.bk_q(r, k));
    return LElement::gen(a, r) * LElement::diagonal(a, fs);
}

// x_r resp. X_r in the theta engine.
inline LElement gen_x_in_theta(const LusztigAlgebra& a, int r) {
    if (a.engine() != LEngine::Theta)
        throw std::logic_error("gen_x_in_theta: theta engine only");
    std::vector<RatFun> fs;
    RatFun y = RatFun::variable(a.field(), a.nvars(), r);
    for (int k = 0; k < a.orbit_size(); ++k) {
        long ir = a.residue(k)[r];
        if (a.flavor() == Flavor::Degenerate)
            fs.push_back(y + a.action().constant(a.embed_residue(ir)));
        else
            fs.push_back(a.q_pow(ir) * (a.action().one() - y));
    }
    return LElement::diagonal(a, fs);
}

// t_r resp. T_r in the theta engine.
inline LElement gen_t_in_theta(const LusztigAlgebra& a, int r) {
    LElement phi = gen_phi_in_theta(a, r);
    std::vector<RatFun> fs;
    RatFun y = RatFun::variable(a.field(), a.nvars(), r);
    for (int k = 0; k < a.orbit_size(); ++k) {
        long ir = a.residue(k)[r];
        if (a.flavor() == Flavor::Degenerate) {
            // t_r = phi_r - x_r^{-1}
            fs.push_back((y + a.action().constant(a.embed_residue(ir))).inverse());
        } else {
            // T_r = Phi_r - (1-q)(1-X_r)^{-1}
            RatFun X = a.q_pow(ir) * (a.action().one() - y);
            fs.push_back((a.action().one() - a.q_pow(1)) / (a.action().one() - X));
        }
    }
    return phi - LElement::diagonal(a, fs);
}

// Rewrite a y/Y-coordinate function into the x/X coordinates on eps(i):
//   y_t -> x_t - i_t          (degenerate)
//   Y_t -> 1 - q^{-i_t} X_t   (non-degenerate)
inline RatFun to_engine_coords(const LusztigAlgebra& a, const RatFun& f, int k) {
    const FieldRef& F = a.field();
    int n = a.nvars();
    std::vector<RatFun> images;
    for (int t = 0; t < a.rank(); ++t) {
        RatFun x = RatFun::variable(F, n, t);
        long it = a.residue(k)[t];
        if (a.flavor() == Flavor::Degenerate)
            images.push_back(x - RatFun::constant(F, n, a.embed_residue(it)));
        else
            images.push_back(RatFun::one(F, n) - a.q_pow(-it) * x);
    }
    for (int t = a.rank(); t < n; ++t) images.push_back(RatFun::variable(F, n, t));
    return ratfun_eval(f, images);
}

}  // namespace hklr
