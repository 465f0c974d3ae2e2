/*
 * tables.hpp
 * ----------
 * Frozen case tables: the right-hand sides of the KLR-type presentation
 * relations (squares and braid corrections for psi / Psi) and the closed form
 * of the normalizer products.  Dispatch is first-matching-row, with residue
 * comparisons taken mod e.
 *
 * All tables are stated in the theta-engine coordinates (y resp. Y); the
 * derived quantities y_{t,k} / Y_{t,k} / i_{t,k} for an ordered generator
 * pair (r, s) are obtained by k alternating reflections, innermost the one
 * whose index differs from the target.
 */
#pragma once

#include "lusztig.hpp"

namespace hklr {

// y_{target,k} resp. Y_{target,k} for the ordered pair (r, s).
inline RatFun derived_var(const LusztigAlgebra& a, int r, int s, int target, int k) {
    RatFun f = a.action().var(target);
    int other = target == s ? r : s;
    for (int step = 0; step < k; ++step)
        f = a.action().apply_gen(step % 2 == 0 ? other : target, f);
    return f;
}

namespace reltab {

// Small helper bundle so the tables below read close to their source form.
struct Ctx {
    const LusztigAlgebra& a;
    int r, s, k;

    long ir() const { return a.residue(k)[r]; }
    long is() const { return a.residue(k)[s]; }
    bool eq(long x, long v) const { return a.residues().eq(x, v); }
    long e() const { return a.e(); }

    RatFun one() const { return a.action().one(); }
    RatFun c(long v) const { return a.action().constant(v); }
    RatFun y(int t, int kk = 0) const {
        return kk == 0 ? a.action().var(t) : derived_var(a, r, s, t, kk);
    }

    LElement eps() const { return LElement::eps(a, k); }
    LElement zero() const { return LElement::zero(a); }
    // c * psi_{t1} psi_{t2} ... eps(i)
    LElement word(const RatFun& coef, std::initializer_list<int> ts) const {
        LElement v = eps();
        for (auto it = std::rbegin(ts); it != std::rend(ts); ++it)
            v = gen_psi(a, *it) * v;
        return v.scaled(coef);
    }
    // c * (y_t psi_t + 1) eps(i)
    LElement affine(const RatFun& coef, int t) const {
        return word(coef * y(t), {t}) + eps().scaled(coef);
    }
};

}  // namespace reltab

// Relation (6): psi_r^2 eps(i) resp. Psi_r^2 eps(i).
inline LElement rel6_rhs(const LusztigAlgebra& a, int r, int k) {
    reltab::Ctx c{a, r, r, k};
    long ir = c.ir();
    RatFun y = c.y(r);
    if (a.flavor() == Flavor::Degenerate) {
        if (c.eq(ir, 0)) return c.zero();
        if (c.e() != 2 && c.eq(ir, 1)) return c.eps().scaled(-y);
        if (c.e() != 2 && c.eq(ir, -1)) return c.eps().scaled(y);
        if (c.e() == 2 && c.eq(ir, 1)) return c.eps().scaled(-(y * y));
        return c.eps();
    }
    if (c.eq(ir, 0)) return -c.word(c.one(), {r});
    if (c.e() != 2 && c.eq(ir, 1)) return c.eps().scaled(y / (y - c.one()));
    if (c.e() != 2 && c.eq(ir, -1)) return c.eps().scaled(y);
    if (c.e() == 2 && c.eq(ir, 1)) return c.eps().scaled(y * y / (y - c.one()));
    return c.eps();
}

// Relation (8), single edge r -- s:
//   [psi_r psi_s psi_r - psi_s psi_r psi_s] eps(i).
inline LElement rel8_rhs(const LusztigAlgebra& a, int r, int s, int k) {
    reltab::Ctx c{a, r, s, k};
    long ir = c.ir(), is = c.is();
    if (a.flavor() == Flavor::Degenerate) {
        if (c.e() != 2 && c.eq(ir, 1) && c.eq(is, -1)) return c.eps();
        if (c.e() != 2 && c.eq(ir, -1) && c.eq(is, 1)) return -c.eps();
        if (c.e() == 2 && c.eq(ir, 1) && c.eq(is, 1))
            return c.eps().scaled(c.y(r) - c.y(s));
        return c.zero();
    }
    RatFun one = c.one(), Yr = c.y(r), Ys = c.y(s);
    if (c.e() != 2 && c.eq(ir, 1) && c.eq(is, -1))
        return c.eps().scaled((one - Yr).inverse());
    if (c.e() != 2 && c.eq(ir, -1) && c.eq(is, 1))
        return c.eps().scaled((Ys - one).inverse());
    if (c.e() == 2 && c.eq(ir, 1) && c.eq(is, 1))
        return c.eps().scaled((Yr - Ys) / ((one - Yr) * (one - Ys)));
    return c.zero();
}

// Relation (9), double edge with arrow source r:
//   [(psi_r psi_s)^2 - (psi_s psi_r)^2] eps(i).
inline LElement rel9_rhs(const LusztigAlgebra& a, int r, int s, int k) {
    reltab::Ctx c{a, r, s, k};
    long ir = c.ir(), is = c.is();
    long e = c.e();
    if (a.flavor() == Flavor::Degenerate) {
        if (e != 2 && c.eq(is, 1) && c.eq(ir, -2)) return c.word(c.one(), {r});
        if (e != 2 && c.eq(is, -1) && c.eq(ir, 2)) return -c.word(c.one(), {r});
        if (e == 2 && c.eq(ir, 0) && c.eq(is, 1)) return c.affine(c.one(), r);
        if (e != 2 && c.eq(ir, 1) && c.eq(is, -1)) return c.word(c.c(-2), {s});
        if (e != 2 && c.eq(ir, -1) && c.eq(is, 1)) return c.word(c.c(2), {s});
        if (e == 2 && c.eq(ir, 1) && c.eq(is, 1)) return c.word(c.c(-4) * c.y(s), {s});
        return c.zero();
    }
    RatFun one = c.one();
    if (e != 2 && c.eq(is, 1) && c.eq(ir, -2))
        return c.word((one - c.y(s, 1)).inverse(), {r});
    if (e != 2 && c.eq(is, -1) && c.eq(ir, 2))
        return c.word((c.y(s) - one).inverse(), {r});
    if (e == 2 && c.eq(ir, 0) && c.eq(is, 1))
        return c.affine((one - c.y(s, 1)).inverse(), r);
    if (e != 2 && c.eq(ir, 1) && c.eq(is, -1))
        return c.word((c.c(2) - c.y(s, 1)) / (c.y(r, 1) - one), {s});
    if (e != 2 && c.eq(ir, -1) && c.eq(is, 1))
        return c.word((c.c(2) - c.y(s, 1)) / (one - c.y(r)), {s});
    if (e == 2 && c.eq(ir, 1) && c.eq(is, 1))
        return c.word(c.y(s) * (c.c(2) - c.y(s)) * (c.y(s, 1) - c.c(2)) /
                          (one - c.y(r, 1)),
                      {s});
    return c.zero();
}

// Relation (10), triple edge with arrow source r:
//   [(psi_r psi_s)^3 - (psi_s psi_r)^3] eps(i).
inline LElement rel10_rhs(const LusztigAlgebra& a, int r, int s, int k) {
    reltab::Ctx c{a, r, s, k};
    long ir = c.ir(), is = c.is();
    long e = c.e();
    bool e23 = (e == 2 || e == 3);
    if (a.flavor() == Flavor::Degenerate) {
        if (!e23 && c.eq(is, 1) && c.eq(ir, -3)) return c.word(c.one(), {r, s, r});
        if (!e23 && c.eq(is, -1) && c.eq(ir, 3)) return -c.word(c.one(), {r, s, r});
        if (e != 2 && c.eq(ir, 1) && c.eq(is, -1)) return c.word(c.c(-3), {s, r, s});
        if (e != 2 && c.eq(ir, -1) && c.eq(is, 1)) return c.word(c.c(3), {s, r, s});
        if (e != 2 && ((c.eq(is, 1) && c.eq(ir, -2)) || (c.eq(is, -1) && c.eq(ir, 2))))
            return c.word(c.c(-2) * c.y(r), {r});
        if (e == 2 && c.eq(ir, 0) && c.eq(is, 1)) {
            RatFun u = c.y(r) * c.y(r) + c.c(3) * c.y(s) * c.y(s, 1);
            return c.affine(c.c(-4) * u, r);
        }
        if (e == 4 && (c.eq(ir, 1) || c.eq(ir, -1)) && c.eq(is, 2))
            return c.word(c.c(-2) * c.y(s), {s});
        if (!e23 && c.eq(ir, 3) && c.eq(is, -2)) return -c.word(c.one(), {s});
        if (!e23 && c.eq(ir, -3) && c.eq(is, 2)) return c.word(c.one(), {s});
        if (e != 2 && e != 4 && c.eq(ir, 1) && c.eq(3 * is, -2))
            return -c.word(c.one(), {s});
        if (e != 2 && e != 4 && c.eq(ir, -1) && c.eq(3 * is, 2))
            return c.word(c.one(), {s});
        if (e == 2 && c.eq(ir, 1) && c.eq(is, 0)) {
            RatFun u = c.y(r) * c.y(r) + c.c(3) * c.y(s) * c.y(s, 1);
            return c.affine(c.c(4) * u, s);
        }
        if (e == 2 && c.eq(ir, 1) && c.eq(is, 1))
            return c.word(c.y(s, 1), {r, s, r}) + c.word(c.c(-3) * c.y(r, 1), {s, r, s}) +
                   c.eps().scaled(c.c(3) * c.y(s) * c.y(s) - c.y(r) * c.y(r));
        if (e == 3 && c.eq(ir, 0) && c.eq(is, 1)) return c.word(c.one(), {r, s, r});
        if (e == 3 && c.eq(ir, 0) && c.eq(is, -1)) return -c.word(c.one(), {r, s, r});
        return c.zero();
    }
    RatFun one = c.one();
    RatFun Yr = c.y(r), Ys = c.y(s);
    RatFun Yr1 = c.y(r, 1), Yr2 = c.y(r, 2), Ys1 = c.y(s, 1), Ys2 = c.y(s, 2);
    RatFun cube1 = c.c(3) - c.c(3) * Ys1 + Ys1 * Ys1;  // 3 - 3 Y_{s1} + Y_{s1}^2
    if (!e23 && c.eq(ir, -3) && c.eq(is, 1))
        return c.word((one - Ys2).inverse(), {r, s, r});
    if (!e23 && c.eq(ir, 3) && c.eq(is, -1))
        return c.word((Ys - one).inverse(), {r, s, r});
    if (e != 2 && c.eq(ir, 1) && c.eq(is, -1))
        return c.word(cube1 / (Yr2 - one), {s, r, s});
    if (e != 2 && c.eq(ir, -1) && c.eq(is, 1))
        return c.word(cube1 / (one - Yr), {s, r, s});
    if (e != 2 && c.eq(is, 1) && c.eq(ir, -2))
        return c.word((Ys2 - c.c(2)) * (Ys1 - Ys + Yr2 * Ys) / ((one - Yr2) * (one - Ys1)),
                      {r});
    if (e != 2 && c.eq(is, -1) && c.eq(ir, 2))
        return c.word((c.c(2) - Ys2) * (Ys - Ys1 + Yr1 * Ys1) / ((one - Yr1) * (one - Ys)),
                      {r});
    if (e == 4 && c.eq(ir, 1) && c.eq(is, 2))
        return c.word(Ys * (Ys - c.c(2)) / (one - Yr1), {s});
    if (e == 4 && c.eq(ir, -1) && c.eq(is, 2))
        return c.word(Ys * (Ys - c.c(2)) / (one - Ys2), {s});
    if (!e23 && c.eq(ir, 3) && c.eq(is, -2))
        return c.word((Ys2 - one).inverse(), {s});
    if (!e23 && c.eq(ir, -3) && c.eq(is, 2))
        return c.word((one - Ys1).inverse(), {s});
    if (e != 2 && e != 4 && c.eq(ir, 1) && c.eq(3 * is, -2))
        return c.word((Yr1 - one).inverse(), {s});
    if (e != 2 && e != 4 && c.eq(ir, -1) && c.eq(3 * is, 2))
        return c.word((one - Yr).inverse(), {s});
    if (e == 2 && c.eq(ir, 0) && c.eq(is, 1)) {
        RatFun coef = (Ys2 - c.c(2)) * (Yr2 * Ys1 + Yr1 * Ys * (one - Yr)) /
                      ((one - Ys1) * (one - Yr2));
        return c.affine(coef, r);
    }
    if (e == 2 && c.eq(ir, 1) && c.eq(is, 0)) {
        RatFun coef = (c.c(2) - Ys) * (Yr1 * Ys2 + Yr * Ys1 * (one - Ys) * (one - Ys)) /
                      ((one - Yr1) * (one - Ys2));
        return c.affine(coef, s);
    }
    if (e == 2 && c.eq(ir, 1) && c.eq(is, 1))
        return c.word(Ys1 / (one - Ys2), {r, s, r}) +
               c.word(-(Yr1 * cube1) / (one - Yr2), {s, r, s}) +
               c.eps().scaled(-(Yr * Yr) / ((one - Ys1) * (one - Ys1)) +
                              Ys * Ys * cube1 / ((one - Ys2) * (one - Ys2)));
    if (e == 3 && c.eq(ir, 0) && c.eq(is, 1))
        return c.word((one - Ys2).inverse(), {r, s, r}) + c.word((one - Ys2).inverse(), {r, s});
    if (e == 3 && c.eq(ir, 0) && c.eq(is, -1))
        return c.word((Ys - one).inverse(), {r, s, r});
    return c.zero();
}

// Closed form of q_r(i) sigma_r(q_r(sigma_r i)) resp. the q-version.
inline RatFun bk_q_product_table(const LusztigAlgebra& a, int r, int k) {
    const ResidueSystem& rs = a.residues();
    long ir = a.residue(k)[r];
    long e = a.e();
    RatFun y = a.action().var(r), one = a.action().one();
    auto c = [&](long v) { return a.action().constant(v); };
    if (a.flavor() == Flavor::Degenerate) {
        if (rs.eq(ir, 0)) return one - y * y;
        if (e != 2 && rs.eq(ir, 1)) return -(y + c(2)) / ((one + y) * (one + y));
        if (e != 2 && rs.eq(ir, -1)) return (y - c(2)) / ((one - y) * (one - y));
        if (e == 2 && rs.eq(ir, 1)) return ((one - y) * (one - y)).inverse();
        RatFun xr = y + a.action().constant(a.embed_residue(ir));
        return one - (xr * xr).inverse();
    }
    RatFun q = a.q_pow(1);
    if (rs.eq(ir, 0)) return ((one - y) - q) * (one - q * (one - y)) / (one - y);
    if (e != 2 && rs.eq(ir, 1)) {
        RatFun d = one - q * (one - y);
        return q * (y - one) * (one - q * q * (one - y)) / (d * d);
    }
    if (e != 2 && rs.eq(ir, -1)) {
        RatFun u = a.q_pow(-1) * (one - y);
        return (q - u) / ((one - u) * (one - u));
    }
    if (e == 2 && rs.eq(ir, 1)) {
        RatFun d = one - q * (one - y);
        return -q * (one - y) / (d * d);
    }
    RatFun v = a.q_pow(ir) * (one - y);
    return (q - v) * (one - q * v) / ((one - v) * (one - v));
}

}  // namespace hklr
