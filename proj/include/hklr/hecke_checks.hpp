/*
 * hecke_checks.hpp
 * ----------------
 * Verification routines for the Hecke layer: defining relations, intertwiner
 * identities, normal-form round trips and centrality of symmetric functions.
 * Each routine returns ok/detail so that callers can aggregate reports.
 */
#pragma once

#include <random>
#include <sstream>

#include "hecke.hpp"

namespace hklr {

struct CheckResult {
    bool ok = true;
    std::string detail;

    void fail(const std::string& msg) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += msg;
    }
};

inline Poly random_poly(std::mt19937& rng, const FieldRef& f, int rank, int nterms,
                        int maxdeg, long coeff_range = 5) {
    Poly p = Poly::zero(f, rank);
    for (int t = 0; t < nterms; ++t) {
        Expv e(rank);
        for (int i = 0; i < rank; ++i) e[i] = static_cast<int>(rng() % (maxdeg + 1));
        long c = static_cast<long>(rng() % (2 * coeff_range + 1)) - coeff_range;
        p.add_term(e, Scalar::from_long(f, c));
    }
    return p;
}

inline RatFun random_ratfun(std::mt19937& rng, const FieldRef& f, int rank) {
    Poly num = random_poly(rng, f, rank, 2, 2);
    Poly den = random_poly(rng, f, rank, 2, 1);
    if (den.is_zero()) den = Poly::constant(f, rank, 1);
    return RatFun(num, den);
}

// t_r^2 = 1, resp. (T_r + 1)(T_r - q) = 0.
inline CheckResult check_quadratic(const HeckeAlgebra& a) {
    CheckResult res;
    for (int r = 0; r < a.rank(); ++r) {
        HeckeElement t = HeckeElement::gen_t(a, r);
        HeckeElement lhs = t * t;
        HeckeElement rhs = HeckeElement::one(a);
        if (a.flavor() == Flavor::NonDegenerate) {
            RatFun q = a.q();
            rhs = t.scaled(q - a.action().one()) + HeckeElement::one(a).scaled(q);
        }
        if (lhs != rhs) res.fail("quadratic relation fails at r=" + std::to_string(r));
    }
    return res;
}

// Alternating products of generators of the braid order agree.
inline CheckResult check_braid(const HeckeAlgebra& a) {
    CheckResult res;
    for (int r = 0; r < a.rank(); ++r)
        for (int s = r + 1; s < a.rank(); ++s) {
            int m = a.group().cartan().braid_order(r, s);
            HeckeElement lhs = HeckeElement::one(a), rhs = HeckeElement::one(a);
            for (int k = 0; k < m; ++k) {
                lhs = lhs * HeckeElement::gen_t(a, k % 2 == 0 ? r : s);
                rhs = rhs * HeckeElement::gen_t(a, k % 2 == 0 ? s : r);
            }
            if (lhs != rhs)
                res.fail("braid relation fails at (" + std::to_string(r) + "," +
                         std::to_string(s) + ")");
        }
    return res;
}

// t_r f = sigma_r(f) t_r + dd_r(f) as an identity of products of elements.
inline CheckResult check_commutation(const HeckeAlgebra& a, std::mt19937& rng, int samples) {
    CheckResult res;
    const WAction& act = a.action();
    for (int t = 0; t < samples; ++t) {
        int r = static_cast<int>(rng() % a.rank());
        RatFun f(random_poly(rng, a.field(), a.nvars(), 2, 2));
        HeckeElement lhs =
            HeckeElement::gen_t(a, r) * HeckeElement::from_coeff(a, f);
        RatFun dd = act.divided_difference(r, f);
        if (a.flavor() == Flavor::NonDegenerate)
            dd = (act.one() - a.q()) * dd;
        HeckeElement rhs = HeckeElement::gen_t(a, r).scaled(act.apply_gen(r, f)) +
                           HeckeElement::from_coeff(a, dd);
        if (lhs != rhs) res.fail("commutation rule fails at sample " + std::to_string(t));
    }
    return res;
}

// Squares, coordinate exchange and braid relations of the intertwiners.
inline CheckResult check_intertwiners(const HeckeAlgebra& a, std::mt19937& rng, int samples) {
    CheckResult res;
    const WAction& act = a.action();
    const FieldRef& F = a.field();
    int n = a.nvars();
    for (int r = 0; r < a.rank(); ++r) {
        HeckeElement phi = HeckeElement::intertwiner(a, r);
        RatFun sq;
        if (a.flavor() == Flavor::Degenerate) {
            sq = act.one() - RatFun::variable(F, n, r, -2);
        } else {
            RatFun X = act.var(r), one = act.one();
            RatFun qc = a.q();
            sq = (one - qc * X) * (qc - X) / ((one - X) * (one - X));
        }
        if (phi * phi != HeckeElement::from_coeff(a, sq))
            res.fail("intertwiner square fails at r=" + std::to_string(r));
        for (int t = 0; t < samples; ++t) {
            RatFun f(random_poly(rng, F, a.nvars(), 2, 2));
            if (phi * HeckeElement::from_coeff(a, f) !=
                phi.scaled(act.apply_gen(r, f)))
                res.fail("intertwiner exchange fails at r=" + std::to_string(r));
        }
    }
    for (int r = 0; r < a.rank(); ++r)
        for (int s = r + 1; s < a.rank(); ++s) {
            int m = a.group().cartan().braid_order(r, s);
            HeckeElement lhs = HeckeElement::one(a), rhs = HeckeElement::one(a);
            for (int k = 0; k < m; ++k) {
                lhs = lhs * HeckeElement::intertwiner(a, k % 2 == 0 ? r : s);
                rhs = rhs * HeckeElement::intertwiner(a, k % 2 == 0 ? s : r);
            }
            if (lhs != rhs)
                res.fail("intertwiner braid fails at (" + std::to_string(r) + "," +
                         std::to_string(s) + ")");
        }
    return res;
}

// Rebuild a random normal-form element from generator words and compare.
inline CheckResult check_normal_form_roundtrip(const HeckeAlgebra& a, std::mt19937& rng,
                                               int samples) {
    CheckResult res;
    const WeylGroup& g = a.group();
    for (int t = 0; t < samples; ++t) {
        HeckeElement e(a);
        HeckeElement rebuilt(a);
        for (int w = 0; w < g.size(); ++w) {
            if (rng() % 2) continue;
            RatFun f = random_ratfun(rng, a.field(), a.nvars());
            HeckeElement tw = HeckeElement::one(a);
            for (int r : g.word(w)) tw = tw * HeckeElement::gen_t(a, r);
            HeckeElement term(a);
            term = HeckeElement::from_coeff(a, f) * tw;
            rebuilt = rebuilt + term;
            // Direct normal form: f t_w.
            e = e + tw.scaled(f);
        }
        if (e != rebuilt) res.fail("normal-form roundtrip fails at sample " + std::to_string(t));
    }
    return res;
}

// Symmetrized coordinate functions are central.
inline CheckResult check_center(const HeckeAlgebra& a, std::mt19937& rng, int samples) {
    CheckResult res;
    const WeylGroup& g = a.group();
    const WAction& act = a.action();
    for (int t = 0; t < samples; ++t) {
        Expv e(a.nvars(), 0);
        for (int i = 0; i < a.rank(); ++i) e[i] = static_cast<int>(rng() % 3);
        RatFun mono(Poly::monomial(a.field(), e, Scalar::one(a.field())));
        RatFun sym = RatFun::zero(a.field(), a.nvars());
        for (int w = 0; w < g.size(); ++w) sym = sym + act.apply(w, mono);
        HeckeElement z = HeckeElement::from_coeff(a, sym);
        for (int r = 0; r < a.rank(); ++r) {
            HeckeElement tr = HeckeElement::gen_t(a, r);
            if (tr * z != z * tr)
                res.fail("symmetric function not central at sample " + std::to_string(t));
        }
    }
    return res;
}

}  // namespace hklr
