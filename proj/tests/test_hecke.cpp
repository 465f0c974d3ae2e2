#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <hklr/hecke_checks.hpp>

using namespace hklr;

namespace {

// Both flavors default to plain rational scalars; the non-degenerate flavor
// then carries its transcendental q as an extra ring variable.
FieldRef field_for(Flavor) { return FieldContext::rational(); }

}  // namespace

TEST_CASE("defining relations, both flavors, rank-2 types") {
    std::mt19937 rng(101);
    for (Flavor fl : {Flavor::Degenerate, Flavor::NonDegenerate}) {
        for (const Cartan& c : {Cartan::a1(), Cartan::a1xa1(), Cartan::a2(), Cartan::b2()}) {
            WeylGroup g(c);
            HeckeAlgebra a(g, field_for(fl), fl);
            INFO(c.name << (fl == Flavor::Degenerate ? " degenerate" : " non-degenerate"));
            CHECK(check_quadratic(a).ok);
            CHECK(check_braid(a).ok);
            CHECK(check_commutation(a, rng, 10).ok);
        }
    }
}

TEST_CASE("defining relations, G2") {
    std::mt19937 rng(102);
    for (Flavor fl : {Flavor::Degenerate, Flavor::NonDegenerate}) {
        WeylGroup g(Cartan::g2());
        HeckeAlgebra a(g, field_for(fl), fl);
        CHECK(check_quadratic(a).ok);
        CHECK(check_braid(a).ok);
        CHECK(check_commutation(a, rng, 5).ok);
    }
}

TEST_CASE("intertwiners: squares, exchange rule, braid relations") {
    std::mt19937 rng(103);
    for (Flavor fl : {Flavor::Degenerate, Flavor::NonDegenerate}) {
        for (const Cartan& c : {Cartan::a2(), Cartan::b2()}) {
            WeylGroup g(c);
            HeckeAlgebra a(g, field_for(fl), fl);
            INFO(c.name);
            CHECK(check_intertwiners(a, rng, 3).ok);
        }
    }
}

TEST_CASE("intertwiner braid relations, G2, degenerate") {
    std::mt19937 rng(104);
    WeylGroup g(Cartan::g2());
    HeckeAlgebra a(g, FieldContext::rational(), Flavor::Degenerate);
    CHECK(check_intertwiners(a, rng, 2).ok);
}

TEST_CASE("normal-form round trip and center") {
    std::mt19937 rng(105);
    for (Flavor fl : {Flavor::Degenerate, Flavor::NonDegenerate}) {
        for (const Cartan& c : {Cartan::a2(), Cartan::b2()}) {
            WeylGroup g(c);
            HeckeAlgebra a(g, field_for(fl), fl);
            INFO(c.name);
            CHECK(check_normal_form_roundtrip(a, rng, 5).ok);
            CHECK(check_center(a, rng, 3).ok);
        }
    }
}

TEST_CASE("hecke over cyclotomic and prime fields") {
    std::mt19937 rng(106);
    {
        WeylGroup g(Cartan::a2());
        HeckeAlgebra a(g, FieldContext::cyclotomic_q(3), Flavor::NonDegenerate);
        CHECK(check_quadratic(a).ok);
        CHECK(check_braid(a).ok);
        CHECK(check_commutation(a, rng, 5).ok);
    }
    {
        WeylGroup g(Cartan::b2());
        HeckeAlgebra a(g, FieldContext::prime_field(3), Flavor::Degenerate);
        CHECK(check_quadratic(a).ok);
        CHECK(check_braid(a).ok);
        CHECK(check_commutation(a, rng, 5).ok);
    }
    {
        // Nested rational-in-q scalars are supported too (kept small: they are
        // far more expensive than the extra-variable representation).
        WeylGroup g(Cartan::a1());
        HeckeAlgebra a(g, FieldContext::rational_q(), Flavor::NonDegenerate);
        CHECK(check_quadratic(a).ok);
        CHECK(check_commutation(a, rng, 3).ok);
        CHECK(check_intertwiners(a, rng, 2).ok);
    }
}

TEST_CASE("random normal-form round trips", "[property]") {
    std::mt19937 rng(107);
    for (Flavor fl : {Flavor::Degenerate, Flavor::NonDegenerate}) {
        {
            WeylGroup g(Cartan::a2());
            HeckeAlgebra a(g, field_for(fl), fl);
            CHECK(check_normal_form_roundtrip(a, rng, 100).ok);
        }
        {
            WeylGroup g(Cartan::b2());
            HeckeAlgebra a(g, field_for(fl), fl);
            CHECK(check_normal_form_roundtrip(a, rng, 50).ok);
        }
    }
}
