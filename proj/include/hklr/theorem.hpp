/*
 * theorem.hpp
 * -----------
 * Verifier for the KLR-type presentation of the Lusztig extension: the ten
 * relations of the presentation theorem (degenerate and q-version) are
 * checked as exact identities in the theta engine, one residual per relation
 * instance and orbit member.  Also: exact verification of the closed
 * normalizer-product and square tables against the engine.
 *
 * Note on numbering: the source text numbers the relations (1)-(10) but its
 * q-version proof refers to "statements (1)-(9)"; reports carry a note
 * flagging this off-by-one so downstream consumers are not misled.
 */
#pragma once

#include <random>
#include <sstream>

#include "tables.hpp"

namespace hklr {

struct RelationRow {
    int relation = 0;
    int r = -1, s = -1;
    ResVec residue;
    bool ok = true;
    std::string detail;
};

struct TheoremReport {
    std::string type;
    Flavor flavor = Flavor::Degenerate;
    long e = 0;
    ResVec seed;
    std::vector<ResVec> orbit;
    std::vector<RelationRow> rows;
    bool ok = true;
    std::string note =
        "relation numbering: the presentation lists ten relations although "
        "part of the source narrative says (1)-(9)";

    void push(RelationRow row) {
        if (!row.ok) ok = false;
        rows.push_back(std::move(row));
    }
};

namespace detail_thm {

inline std::string res_str(const ResVec& i) {
    std::string s = "(";
    for (size_t t = 0; t < i.size(); ++t)
        s += (t ? "," : "") + std::to_string(i[t]);
    return s + ")";
}

inline RelationRow row_of(int rel, int r, int s, const ResVec& i, bool ok,
                          const std::string& what) {
    RelationRow row;
    row.relation = rel;
    row.r = r;
    row.s = s;
    row.residue = i;
    row.ok = ok;
    if (!ok) row.detail = what + " fails at i=" + res_str(i);
    return row;
}

}  // namespace detail_thm

// Relations (1)-(10) of the presentation theorem, verified in the theta
// engine of `a` (which must use LEngine::Theta).  `relations` selects which
// of 1..10 to run; relations inapplicable to the type are skipped silently.
inline TheoremReport verify_theorem(const LusztigAlgebra& a,
                                    std::vector<int> relations = {},
                                    unsigned rng_seed = 1) {
    using detail_thm::row_of;
    if (a.engine() != LEngine::Theta)
        throw std::logic_error("verify_theorem: theta engine required");
    if (relations.empty()) relations = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    auto want = [&](int rel) {
        return std::find(relations.begin(), relations.end(), rel) != relations.end();
    };

    TheoremReport rep;
    rep.type = a.group().cartan().name;
    rep.flavor = a.flavor();
    rep.e = a.e();
    rep.orbit = a.orbit();

    std::mt19937 rng(rng_seed);
    const auto& cart = a.group().cartan().a;
    int n = a.rank();
    LElement one = LElement::one(a);

    // (1) idempotents: eps(i) eps(j) = delta eps(i), sum eps = 1.
    if (want(1)) {
        bool ok = true;
        LElement sum = LElement::zero(a);
        for (int k = 0; k < a.orbit_size(); ++k) {
            sum = sum + LElement::eps(a, k);
            for (int j = 0; j < a.orbit_size(); ++j) {
                LElement prod = LElement::eps(a, k) * LElement::eps(a, j);
                LElement expect = k == j ? LElement::eps(a, k) : LElement::zero(a);
                if (prod != expect) ok = false;
            }
        }
        if (sum != one) ok = false;
        rep.push(row_of(1, -1, -1, {}, ok, "idempotent relations"));
    }

    // (2) coordinates commute with idempotents and with each other.
    if (want(2)) {
        bool ok = true;
        for (int r = 0; r < n; ++r) {
            LElement yr = LElement::var(a, r);
            for (int k = 0; k < a.orbit_size(); ++k)
                if (yr * LElement::eps(a, k) != LElement::eps(a, k) * yr) ok = false;
            for (int s = 0; s < n; ++s) {
                LElement ys = LElement::var(a, s);
                if (yr * ys != ys * yr) ok = false;
            }
        }
        rep.push(row_of(2, -1, -1, {}, ok, "coordinate commutation"));
    }

    // (3) invertible coordinate functions: f f^{-1} = 1 for random nonzero f.
    if (want(3)) {
        bool ok = true;
        for (int t = 0; t < 5; ++t) {
            Poly p = Poly::zero(a.field(), a.nvars());
            for (int m = 0; m < 3; ++m) {
                Expv ex(a.nvars(), 0);
                for (int v = 0; v < n; ++v) ex[v] = static_cast<int>(rng() % 3);
                long cc = static_cast<long>(rng() % 9) - 4;
                p.add_term(ex, Scalar::from_long(a.field(), cc));
            }
            if (p.is_zero()) p = Poly::constant(a.field(), a.nvars(), 1);
            RatFun f(p);
            LElement F = LElement::coeff(a, f);
            LElement Finv = LElement::coeff(a, f.inverse());
            if (F * Finv != one || Finv * F != one) ok = false;
        }
        rep.push(row_of(3, -1, -1, {}, ok, "inverse coordinate functions"));
    }

    // (4) psi_r eps(i) = eps(sigma_r i) psi_r.
    if (want(4)) {
        for (int r = 0; r < n; ++r) {
            LElement psi = gen_psi(a, r);
            for (int k = 0; k < a.orbit_size(); ++k) {
                int sk = a.act_residue(a.group().generator(r), k);
                bool ok = psi * LElement::eps(a, k) == LElement::eps(a, sk) * psi;
                rep.push(row_of(4, r, -1, a.residue(k), ok, "psi/eps exchange"));
            }
        }
    }

    // (5) psi_r y_s eps(i) = (sigma_r(y_s) psi_r + delta_{i_r,0} dd_r(y_s)) eps(i).
    if (want(5)) {
        for (int r = 0; r < n; ++r) {
            LElement psi = gen_psi(a, r);
            for (int s = 0; s < n; ++s) {
                RatFun ys = a.action().var(s);
                for (int k = 0; k < a.orbit_size(); ++k) {
                    LElement eps = LElement::eps(a, k);
                    LElement lhs = psi * (eps.scaled(ys));
                    LElement rhs = (psi * eps).scaled(a.action().apply_gen(r, ys));
                    if (a.residues().eq(a.residue(k)[r], 0))
                        rhs = rhs + eps.scaled(a.action().divided_difference(r, ys));
                    rep.push(row_of(5, r, s, a.residue(k), lhs == rhs,
                                    "psi/coordinate commutation"));
                }
            }
        }
    }

    // (6) squares.
    if (want(6)) {
        for (int r = 0; r < n; ++r) {
            LElement psi = gen_psi(a, r);
            for (int k = 0; k < a.orbit_size(); ++k) {
                LElement lhs = psi * (psi * LElement::eps(a, k));
                rep.push(row_of(6, r, -1, a.residue(k), lhs == rel6_rhs(a, r, k),
                                "square relation"));
            }
        }
    }

    // Braid-type relations (7)-(10) per ordered generator pair.
    auto alternating = [&](int first, int second, int letters, int k) {
        LElement v = LElement::eps(a, k);
        // product psi_a psi_b psi_a ... (letters many), applied to eps(i)
        for (int t = letters - 1; t >= 0; --t)
            v = gen_psi(a, t % 2 == 0 ? first : second) * v;
        return v;
    };
    for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
            if (r == s) continue;
            int ars = cart[r][s], asr = cart[s][r];
            if (ars == 0 && asr == 0) {
                if (want(7) && r < s) {
                    LElement lhs = gen_psi(a, r) * gen_psi(a, s);
                    LElement rhs = gen_psi(a, s) * gen_psi(a, r);
                    rep.push(row_of(7, r, s, {}, lhs == rhs, "commuting pair"));
                }
            } else if (ars == -1 && asr == -1) {
                if (!want(8)) continue;
                for (int k = 0; k < a.orbit_size(); ++k) {
                    LElement lhs = alternating(r, s, 3, k) - alternating(s, r, 3, k);
                    rep.push(row_of(8, r, s, a.residue(k), lhs == rel8_rhs(a, r, s, k),
                                    "single-edge braid correction"));
                }
            } else if (ars == -2 && asr == -1) {
                if (!want(9)) continue;
                for (int k = 0; k < a.orbit_size(); ++k) {
                    LElement lhs = alternating(r, s, 4, k) - alternating(s, r, 4, k);
                    rep.push(row_of(9, r, s, a.residue(k), lhs == rel9_rhs(a, r, s, k),
                                    "double-edge braid correction"));
                }
            } else if (ars == -3 && asr == -1) {
                if (!want(10)) continue;
                for (int k = 0; k < a.orbit_size(); ++k) {
                    LElement lhs = alternating(r, s, 6, k) - alternating(s, r, 6, k);
                    rep.push(row_of(10, r, s, a.residue(k), lhs == rel10_rhs(a, r, s, k),
                                    "triple-edge braid correction"));
                }
            }
        }
    }
    return rep;
}

struct CheckResultL {
    bool ok = true;
    std::string detail;
    void fail(const std::string& m) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += m;
    }
};

// q_r(i) sigma_r(q_r(sigma_r i)) equals its frozen closed form.
inline CheckResultL check_bk_q_product(const LusztigAlgebra& a) {
    CheckResultL res;
    for (int r = 0; r < a.rank(); ++r)
        for (int k = 0; k < a.orbit_size(); ++k)
            if (a.bk_q_product(r, k) != bk_q_product_table(a, r, k))
                res.fail("normalizer product table fails at r=" + std::to_string(r) +
                         " k=" + std::to_string(k));
    return res;
}

// theta_r^2 eps(i): the theta-engine table equals the square computed
// independently in the intertwiner engine (theta_r = phi_r q_r(i)^{-1}).
inline CheckResultL check_theta_square_cross(const LusztigAlgebra& theta_eng,
                                             const LusztigAlgebra& phi_eng) {
    CheckResultL res;
    const LusztigAlgebra& a = phi_eng;
    for (int r = 0; r < a.rank(); ++r) {
        LElement th = gen_theta_in_intertwiner(a, r);
        LElement sq = th * th;
        std::vector<RatFun> fs;
        for (int k = 0; k < a.orbit_size(); ++k)
            fs.push_back(to_engine_coords(a, theta_eng.theta_sq(r, k), k));
        if (sq != LElement::diagonal(a, fs))
            res.fail("theta square cross-check fails at r=" + std::to_string(r));
    }
    return res;
}

// Braid relations of the basis generators verified by generic multiplication
// within the engine (consistency of the reduction rules).
inline CheckResultL check_basis_braid(const LusztigAlgebra& a) {
    CheckResultL res;
    for (int r = 0; r < a.rank(); ++r)
        for (int s = r + 1; s < a.rank(); ++s) {
            int m = a.group().cartan().braid_order(r, s);
            for (int k = 0; k < a.orbit_size(); ++k) {
                LElement lhs = LElement::eps(a, k), rhs = LElement::eps(a, k);
                for (int t = m - 1; t >= 0; --t) {
                    lhs = lhs.gen_left(t % 2 == 0 ? r : s);
                    rhs = rhs.gen_left(t % 2 == 0 ? s : r);
                }
                if (lhs != rhs)
                    res.fail("basis braid fails at (" + std::to_string(r) + "," +
                             std::to_string(s) + ") k=" + std::to_string(k));
            }
        }
    return res;
}

}  // namespace hklr
