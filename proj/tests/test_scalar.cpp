#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <hklr/scalar.hpp>

using namespace hklr;

TEST_CASE("rational mode basics") {
    auto F = FieldContext::rational();
    Scalar a = Scalar::from_mpq(F, mpq_class(2, 3));
    Scalar b = Scalar::from_long(F, -4);
    REQUIRE((a * b).to_string() == "-8/3");
    REQUIRE((a + b) == Scalar::from_mpq(F, mpq_class(-10, 3)));
    REQUIRE(a * a.inverse() == Scalar::one(F));
    REQUIRE((a - a).is_zero());
}

TEST_CASE("rational-in-q mode reduces fractions with monic denominator") {
    auto F = FieldContext::rational_q();
    Scalar q = Scalar::q_power(F, 1);
    Scalar one = Scalar::one(F);
    // (q^2 - 1)/(q - 1) should canonicalize to q + 1.
    Scalar r = (q * q - one) / (q - one);
    REQUIRE(r == q + one);
    REQUIRE(r.to_string() == "q + 1");
    Scalar s = (q + one).inverse() * (q + one);
    REQUIRE(s == one);
    REQUIRE(Scalar::q_power(F, -2) * Scalar::q_power(F, 3) == q);
}

TEST_CASE("cyclotomic polynomials") {
    REQUIRE(qpoly::cyclotomic(1) == QPoly({-1, 1}));
    REQUIRE(qpoly::cyclotomic(2) == QPoly({1, 1}));
    REQUIRE(qpoly::cyclotomic(3) == QPoly({1, 1, 1}));
    REQUIRE(qpoly::cyclotomic(4) == QPoly({1, 0, 1}));
    REQUIRE(qpoly::cyclotomic(6) == QPoly({1, -1, 1}));
    REQUIRE(qpoly::cyclotomic(12) == QPoly({1, 0, -1, 0, 1}));
}

TEST_CASE("cyclotomic-q mode: 1 + q + ... + q^{e-1} vanishes, q^e = 1") {
    for (unsigned e : {2u, 3u, 4u, 5u, 7u}) {
        auto F = FieldContext::cyclotomic_q(e);
        Scalar s = Scalar::zero(F);
        for (unsigned k = 0; k < e; ++k) s = s + Scalar::q_power(F, k);
        REQUIRE(s.is_zero());
        REQUIRE(Scalar::q_power(F, static_cast<long>(e)) == Scalar::one(F));
        REQUIRE(Scalar::q_power(F, -1) * Scalar::q_power(F, 1) == Scalar::one(F));
        // Inversion of a generic nonzero residue.
        Scalar a = Scalar::q_power(F, 1) + Scalar::from_long(F, 3);
        REQUIRE(a * a.inverse() == Scalar::one(F));
    }
}

TEST_CASE("prime field mode") {
    auto F = FieldContext::prime_field(7, 3);
    Scalar a = Scalar::from_long(F, 10);  // = 3
    REQUIRE(a == Scalar::from_long(F, 3));
    REQUIRE((a * a.inverse()).is_one());
    REQUIRE(Scalar::from_mpq(F, mpq_class(1, 2)) * Scalar::from_long(F, 2) == Scalar::one(F));
    // q0 = 3 has order 6 mod 7.
    REQUIRE(Scalar::q_power(F, 6).is_one());
    REQUIRE(!Scalar::q_power(F, 3).is_one());
    REQUIRE(Scalar::q_power(F, -1) * Scalar::q_power(F, 1) == Scalar::one(F));
    REQUIRE_THROWS(FieldContext::prime_field(6));
}

TEST_CASE("random field arithmetic laws", "[property]") {
    std::vector<FieldRef> fields = {
        FieldContext::rational(), FieldContext::rational_q(),
        FieldContext::cyclotomic_q(5), FieldContext::prime_field(11, 4)};
    std::mt19937 rng(12345);
    auto rnd = [&](const FieldRef& F) {
        // Small random element: integer combination of 1 and q (if present).
        long c0 = static_cast<long>(rng() % 19) - 9;
        long c1 = static_cast<long>(rng() % 19) - 9;
        Scalar s = Scalar::from_long(F, c0);
        if (F->mode != ScalarMode::Rational)
            s = s + Scalar::from_long(F, c1) * Scalar::q_power(F, 1);
        return s;
    };
    for (const auto& F : fields) {
        for (int t = 0; t < 200; ++t) {
            Scalar a = rnd(F), b = rnd(F), c = rnd(F);
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE(a * b == b * a);
            REQUIRE((a - a).is_zero());
            if (!b.is_zero()) REQUIRE(a / b * b == a);
        }
    }
}
