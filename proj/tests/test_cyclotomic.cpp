#include <catch2/catch_amalgamated.hpp>

#include <hklr/cyclotomic.hpp>

using namespace hklr;

namespace {

FieldRef field_for(Flavor fl, long e) {
    if (e == 0) return FieldContext::rational();
    if (fl == Flavor::Degenerate) return FieldContext::prime_field(e);
    return FieldContext::cyclotomic_q(static_cast<unsigned>(e));
}

void require_pass(const CycReport& rep) {
    for (const auto& row : rep.rows) {
        INFO(row.name << " " << row.detail);
        CHECK(row.ok);
    }
    REQUIRE(rep.status == VerifyStatus::Pass);
}

// Independent oracle for the rank-one degenerate Hecke algebra: elements are
// written as sum_a c_{a,0} x^a + c_{a,1} x^a t, multiplication is implemented
// from scratch with the rules t^2 = 1 and t x^a = (-1)^a x^a t - (1-(-1)^a) x^{a-1},
// and the cyclotomic quotient dimension is read off a truncated regular
// module.  This shares no code with the Hecke engine.
struct RankOneOracle {
    FieldRef F;
    int D;  // x-degrees 0..D-1 kept; overflowing products are discarded

    // index = a * 2 + eps for the basis element x^a t^eps
    using Vec = std::vector<Scalar>;

    Vec zero() const { return Vec(2 * D, Scalar::zero(F)); }

    std::optional<Vec> mono(int a, int eps, const Scalar& c) const {
        if (a >= D) return std::nullopt;
        Vec v = zero();
        v[2 * a + eps] = c;
        return v;
    }

    // left multiply by x
    std::optional<Vec> lx(const Vec& v) const {
        Vec r = zero();
        for (int a = 0; a < D; ++a)
            for (int eps = 0; eps < 2; ++eps) {
                if (v[2 * a + eps].is_zero()) continue;
                if (a + 1 >= D) return std::nullopt;
                r[2 * (a + 1) + eps] = v[2 * a + eps];
            }
        return r;
    }

    // left multiply by t:  t x^a = (-1)^a x^a t - (1 - (-1)^a) x^{a-1}
    std::optional<Vec> lt(const Vec& v) const {
        Vec r = zero();
        for (int a = 0; a < D; ++a)
            for (int eps = 0; eps < 2; ++eps) {
                const Scalar& c = v[2 * a + eps];
                if (c.is_zero()) continue;
                long sign = (a % 2 == 0) ? 1 : -1;
                // t * x^a t^eps
                r[2 * a + (1 - eps)] =
                    r[2 * a + (1 - eps)] + Scalar::from_long(F, sign) * c;
                if (sign < 0)
                    r[2 * (a - 1) + eps] =
                        r[2 * (a - 1) + eps] - Scalar::from_long(F, 2) * c;
            }
        return r;
    }

    // right multiply by t: x^a t^eps * t flips eps
    std::optional<Vec> rt(const Vec& v) const {
        Vec r = zero();
        for (int a = 0; a < D; ++a)
            for (int eps = 0; eps < 2; ++eps) r[2 * a + (1 - eps)] = v[2 * a + eps];
        return r;
    }

    // right multiply by x: x^a * x and x^a t * x = x^a (t x)
    std::optional<Vec> rx(const Vec& v) const {
        Vec r = zero();
        for (int a = 0; a < D; ++a) {
            if (!v[2 * a + 0].is_zero()) {
                if (a + 1 >= D) return std::nullopt;
                r[2 * (a + 1) + 0] = r[2 * (a + 1) + 0] + v[2 * a + 0];
            }
            const Scalar& c = v[2 * a + 1];
            if (!c.is_zero()) {
                // t x = -x t - 2
                if (a + 1 >= D) return std::nullopt;
                r[2 * (a + 1) + 1] = r[2 * (a + 1) + 1] - c;
                r[2 * a + 0] = r[2 * a + 0] - Scalar::from_long(F, 2) * c;
            }
        }
        return r;
    }

    // dimension of the quotient by the two-sided ideal of prod (x - i)^{Lambda_i}
    int quotient_dim(const CyclotomicWeight& lam) const {
        // cyclotomic polynomial coefficients
        std::vector<Scalar> g = {Scalar::one(F)};
        for (const auto& [i, mult] : lam)
            for (int t = 0; t < mult; ++t) {
                std::vector<Scalar> h(g.size() + 1, Scalar::zero(F));
                Scalar root = Scalar::from_long(F, i);
                for (size_t a = 0; a < g.size(); ++a) {
                    h[a + 1] = h[a + 1] + g[a];
                    h[a] = h[a] - root * g[a];
                }
                g = std::move(h);
            }
        Vec seedv = zero();
        for (size_t a = 0; a < g.size(); ++a) {
            if (static_cast<int>(a) >= D) return -1;
            seedv[2 * a + 0] = g[a];
        }
        // close under the four generator moves with dense elimination
        std::vector<Vec> basis;
        auto reduce = [&](Vec v) {
            for (const auto& b : basis) {
                size_t p = 0;
                while (p < b.size() && b[p].is_zero()) ++p;
                if (p < v.size() && !v[p].is_zero()) {
                    Scalar c = v[p] / b[p];
                    for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - c * b[j];
                }
            }
            return v;
        };
        std::vector<Vec> todo = {seedv};
        while (!todo.empty()) {
            Vec v = reduce(todo.back());
            todo.pop_back();
            bool nz = false;
            for (const auto& c : v)
                if (!c.is_zero()) nz = true;
            if (!nz) continue;
            basis.push_back(v);
            for (auto f : {&RankOneOracle::lx, &RankOneOracle::lt, &RankOneOracle::rx,
                           &RankOneOracle::rt}) {
                auto w = (this->*f)(v);
                if (w) todo.push_back(std::move(*w));
            }
        }
        return 2 * D - static_cast<int>(basis.size());
    }
};

}  // namespace

TEST_CASE("rank-one degenerate quotients match an independent oracle") {
    auto Q = FieldContext::rational();
    Cartan a1 = Cartan::a1();
    struct Case { CyclotomicWeight lam; int window; };
    std::vector<Case> cases = {
        {{{0, 1}}, 6}, {{{1, 1}}, 6}, {{{2, 1}}, 6}, {{{0, 1}, {1, 1}}, 8},
        {{{1, 1}, {3, 1}}, 8}, {{{1, 2}}, 8},
    };
    for (const auto& cs : cases) {
        RankOneOracle oracle{Q, cs.window};
        int expected = oracle.quotient_dim(cs.lam);
        REQUIRE(expected >= 0);
        FiniteAlgebra fa =
            build_quotient(QSource::H, a1, Flavor::Degenerate, Q, 0, {1}, cs.lam);
        INFO("level-" << cs.lam.size() << " weight, first key "
                      << cs.lam.begin()->first);
        REQUIRE(fa.trunc.stable);
        CHECK(fa.dim == expected);
    }
}

TEST_CASE("rank-one weight at the origin gives the zero algebra") {
    // With Lambda = {Lambda_0 = 1} the ideal contains t x + x t = -2, a unit.
    auto Q = FieldContext::rational();
    FiniteAlgebra fa = build_quotient(QSource::H, Cartan::a1(), Flavor::Degenerate, Q,
                                      0, {1}, {{0, 1}});
    REQUIRE(fa.trunc.stable);
    CHECK(fa.dim == 0);
    FiniteAlgebra fr = build_quotient(QSource::R, Cartan::a1(), Flavor::Degenerate, Q,
                                      0, {1}, {{0, 1}});
    REQUIRE(fr.trunc.stable);
    CHECK(fr.dim == 0);
    require_pass(verify_iso(Cartan::a1(), Flavor::Degenerate, Q, 0, {1}, {{0, 1}}));
}

TEST_CASE("rank-one weight at 1 gives the sign character") {
    auto Q = FieldContext::rational();
    FiniteAlgebra fa = build_quotient(QSource::H, Cartan::a1(), Flavor::Degenerate, Q,
                                      0, {1}, {{1, 1}});
    REQUIRE(fa.trunc.stable);
    REQUIRE(fa.dim == 1);
    CHECK(fa.gen.at("t0").at(0, 0) == -Scalar::one(Q));
    CHECK(fa.gen.at("x0").at(0, 0) == Scalar::one(Q));
    require_pass(check_finite_algebra(fa));
    require_pass(verify_iso(Cartan::a1(), Flavor::Degenerate, Q, 0, {1}, {{1, 1}}));
    require_pass(
        verify_ideal_equality(Cartan::a1(), Flavor::Degenerate, Q, 0, {1}, {{1, 1}}));
}

TEST_CASE("finite quotient structure constants are associative and unital") {
    struct Case { const char* t; Flavor fl; long e; ResVec seed; CyclotomicWeight lam; };
    std::vector<Case> cases = {
        {"A1", Flavor::Degenerate, 2, {1}, {{0, 1}, {1, 1}}},
        {"A1", Flavor::NonDegenerate, 2, {1}, {{1, 2}}},
        {"A2", Flavor::Degenerate, 2, {0, 1}, {{0, 1}}},
    };
    for (const auto& cs : cases) {
        FieldRef F = field_for(cs.fl, cs.e);
        for (QSource src : {cs.fl == Flavor::Degenerate ? QSource::H : QSource::Hq,
                            QSource::R, QSource::LTilde}) {
            FiniteAlgebra fa = build_quotient(src, Cartan::by_name(cs.t), cs.fl, F,
                                              cs.e, cs.seed, cs.lam);
            INFO(cs.t << " e=" << cs.e << " source " << fa.source);
            REQUIRE(fa.trunc.stable);
            require_pass(check_finite_algebra(fa));
        }
    }
}

TEST_CASE("block idempotents and covariance") {
    struct Case { const char* t; Flavor fl; long e; ResVec seed; CyclotomicWeight lam; };
    std::vector<Case> cases = {
        {"A1", Flavor::Degenerate, 0, {1}, {{1, 1}, {3, 1}}},
        {"A1", Flavor::Degenerate, 2, {1}, {{0, 1}, {1, 1}}},
        {"A1", Flavor::NonDegenerate, 2, {1}, {{1, 2}}},
        {"A2", Flavor::Degenerate, 2, {0, 1}, {{0, 1}}},
    };
    for (const auto& cs : cases) {
        FieldRef F = field_for(cs.fl, cs.e);
        QSource src = cs.fl == Flavor::Degenerate ? QSource::H : QSource::Hq;
        FiniteAlgebra fa =
            build_quotient(src, Cartan::by_name(cs.t), cs.fl, F, cs.e, cs.seed, cs.lam);
        INFO(cs.t << " e=" << cs.e);
        REQUIRE(fa.trunc.stable);
        BlockIdempotents bi = block_idempotents(fa);
        require_pass(bi.report);
        require_pass(verify_e_covariance(fa, bi));
    }
}

TEST_CASE("cyclotomic isomorphisms at level <= 2, rank one") {
    struct Case { Flavor fl; long e; ResVec seed; CyclotomicWeight lam; };
    std::vector<Case> cases = {
        {Flavor::Degenerate, 2, {1}, {{1, 1}}},
        {Flavor::Degenerate, 2, {1}, {{0, 1}, {1, 1}}},
        {Flavor::Degenerate, 3, {1}, {{1, 1}, {2, 1}}},
        {Flavor::Degenerate, 3, {2}, {{2, 2}}},
        {Flavor::NonDegenerate, 2, {1}, {{1, 1}}},
        {Flavor::NonDegenerate, 2, {1}, {{1, 2}}},
        {Flavor::NonDegenerate, 3, {1}, {{1, 1}, {2, 1}}},
    };
    for (const auto& cs : cases) {
        FieldRef F = field_for(cs.fl, cs.e);
        INFO("A1 e=" << cs.e << " level"
                     << (cs.fl == Flavor::Degenerate ? " degenerate" : " q-version"));
        require_pass(verify_iso(Cartan::a1(), cs.fl, F, cs.e, cs.seed, cs.lam));
        require_pass(
            verify_ideal_equality(Cartan::a1(), cs.fl, F, cs.e, cs.seed, cs.lam));
    }
}

TEST_CASE("cyclotomic isomorphisms at level <= 2, rank two") {
    struct Case { Flavor fl; long e; ResVec seed; CyclotomicWeight lam; };
    std::vector<Case> cases = {
        {Flavor::Degenerate, 2, {0, 1}, {{0, 1}}},
        {Flavor::Degenerate, 3, {0, 1}, {{0, 1}}},
        {Flavor::Degenerate, 3, {0, 1}, {{0, 1}, {1, 1}}},
        {Flavor::NonDegenerate, 2, {0, 1}, {{0, 1}}},
        {Flavor::NonDegenerate, 3, {0, 1}, {{0, 1}}},
    };
    for (const auto& cs : cases) {
        FieldRef F = field_for(cs.fl, cs.e);
        INFO("A2 e=" << cs.e
                     << (cs.fl == Flavor::Degenerate ? " degenerate" : " q-version"));
        require_pass(verify_iso(Cartan::a2(), cs.fl, F, cs.e, cs.seed, cs.lam));
        require_pass(
            verify_ideal_equality(Cartan::a2(), cs.fl, F, cs.e, cs.seed, cs.lam));
    }
}

TEST_CASE("invalid weights are rejected") {
    auto Q = FieldContext::rational();
    CHECK_THROWS_AS(build_quotient(QSource::H, Cartan::a1(), Flavor::Degenerate, Q, 0,
                                   {1}, CyclotomicWeight{}),
                    std::domain_error);
    CHECK_THROWS_AS(build_quotient(QSource::H, Cartan::a1(), Flavor::Degenerate, Q, 0,
                                   {1}, {{0, -1}}),
                    std::domain_error);
    // non-degenerate quotients need q in the scalar field
    CHECK_THROWS_AS(build_quotient(QSource::Hq, Cartan::a1(), Flavor::NonDegenerate, Q,
                                   0, {1}, {{1, 1}}),
                    std::domain_error);
}
