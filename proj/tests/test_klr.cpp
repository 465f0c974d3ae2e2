#include <catch2/catch_amalgamated.hpp>

#include <hklr/klr.hpp>

using namespace hklr;

namespace {

void check_report(const KlrReport& rep) {
    for (auto& row : rep.rows) {
        INFO(row.name << (row.detail.empty() ? "" : ": " + row.detail));
        CHECK(row.ok);
    }
    CHECK(rep.ok);
}

void run_instance(const KlrInstance& inst) {
    RelationSet set = synthesize_relations(inst.quiver, inst.wmap, inst.index, true);
    CHECK(set.wmap_consistent);
    CHECK(set.all_in_R);
    CHECK(set.decomposition_exact);
    if (inst.algebra) check_report(check_against_engine(set, *inst.algebra, inst.index));
    check_report(check_in_poly_model(set, inst.quiver, inst.wmap, inst.index));
}

}  // namespace

TEST_CASE("index group arithmetic") {
    IndexGroup G{{2, 2}};  // Z/2 + Z/2
    CHECK(G.finite());
    CHECK(G.elements().size() == 4);
    CHECK(G.reduce({3, -1}) == IndexGroup::Elt{1, 1});
    CHECK(G.add({1, 1}, {1, 0}) == IndexGroup::Elt{0, 1});
    CHECK(G.is_zero(G.sub({1, 1}, {1, 1})));
    IndexGroup Z{{0}};
    CHECK(!Z.finite());
    CHECK(Z.reduce({-5}) == IndexGroup::Elt{-5});
}

TEST_CASE("uniformity of arrow tables") {
    using Elt = IndexGroup::Elt;

    // Cyclic quiver arrow tables are uniform.
    for (long e : {2L, 3L, 5L}) {
        IndexGroup G{{e}};
        std::map<std::pair<Elt, Elt>, int> arrows;
        for (long i = 0; i < e; ++i) arrows[{{i}, {(i + 1) % e}}] = 1;
        CHECK(check_uniform(G, arrows));
    }

    // A double-arrow quiver on Z/2 + Z/2: two arrows along each difference
    // (1,0), matching pairs everywhere.
    {
        IndexGroup G{{2, 2}};
        std::map<std::pair<Elt, Elt>, int> arrows;
        for (const Elt& j : G.elements()) arrows[{G.add(j, {1, 0}), j}] = 2;
        CHECK(check_uniform(G, arrows));
        // Dropping one of the four pairs breaks uniformity.
        arrows.erase({{1, 0}, {0, 0}});
        CHECK(!check_uniform(G, arrows));
    }

    // Two pairs with the same difference but different multiplicities.
    {
        IndexGroup G{{4}};
        std::map<std::pair<Elt, Elt>, int> arrows;
        arrows[{{1}, {0}}] = 1;  // difference 1
        arrows[{{2}, {1}}] = 2;  // same difference, different count
        CHECK(!check_uniform(G, arrows));
    }

    // d_{01} = 1, d_{10} = 0 on Z/2 is non-uniform: the differences coincide.
    {
        IndexGroup G{{2}};
        std::map<std::pair<Elt, Elt>, int> arrows;
        arrows[{{0}, {1}}] = 1;
        CHECK(!check_uniform(G, arrows));
    }
}

TEST_CASE("cyclic quiver orientation and degenerate bounds") {
    CHECK_THROWS_AS(cyclic_quiver(1), std::domain_error);
    CHECK_THROWS_AS(cyclic_quiver(-2), std::domain_error);
    UniformQuiver q0 = cyclic_quiver(0);
    CHECK(q0.d_diff(-1) == 1);
    CHECK(q0.d_diff(1) == 0);
    UniformQuiver q2 = cyclic_quiver(2);
    CHECK(q2.d_diff(1) == 1);  // 1 = -1 mod 2
    UniformQuiver q3 = cyclic_quiver(3);
    CHECK(q3.d_diff(2) == 1);
    CHECK(q3.d_diff(1) == 0);
}

TEST_CASE("L-values of the concrete coefficient maps") {
    auto names = coordinate_names(2);
    Root ar = {1, 0};

    // Additive polynomial coefficients: L_0 = 0, L_1 = -y_r, L_{-1} = y_r.
    KlrInstance b = instance_additive(Cartan::a2(), 0, {1, -1});
    RootTable rb(b.wmap);
    CHECK(L_value(b.quiver, rb, ar, 0).is_zero());
    CHECK(L_value(b.quiver, rb, ar, 1).to_string(names) == "-y1");
    CHECK(L_value(b.quiver, rb, ar, -1).to_string(names) == "y1");
    CHECK(L_value(b.quiver, rb, ar, 2).to_string(names) == "1");

    // Rational coefficients regular at 0: L_0 = 1, L_1 = y_r/(y_r - 1).
    KlrInstance c = instance_affine(Cartan::a2(), 0, {1, -1});
    RootTable rc(c.wmap);
    CHECK(L_value(c.quiver, rc, ar, 0).to_string(names) == "1");
    CHECK(L_value(c.quiver, rc, ar, 1).to_string(names) == "y1 / (y1 - 1)");
    CHECK(L_value(c.quiver, rc, ar, -1).to_string(names) == "y1");
}

TEST_CASE("root tables are consistent W-maps on all roots, rank 2") {
    for (const char* t : {"A2", "B2", "G2"}) {
        Cartan cart = Cartan::by_name(t);
        INFO(t);
        RootTable rb(instance_additive(cart, 0, {1, -1}).wmap);
        CHECK(rb.consistent());
        RootTable rc(instance_affine(cart, 0, {1, -1}).wmap);
        CHECK(rc.consistent());
        // B2 has 8 roots, G2 has 12, A2 has 6.
        int expect = cart.name == "A2" ? 6 : (cart.name == "B2" ? 8 : 12);
        CHECK(rb.root_count() == expect);
        CHECK(rc.root_count() == expect);
    }
    RootTable rd(instance_symmetric(3, 0, {0, 1, 2, 3}).wmap);
    CHECK(rd.consistent());
    CHECK(rd.root_count() == 12);  // type A_3
}

TEST_CASE("additive instance reproduces the degenerate tables") {
    run_instance(instance_additive(Cartan::a2(), 0, {1, -1}));
    run_instance(instance_additive(Cartan::a2(), 3, {0, 1}));
    run_instance(instance_additive(Cartan::b2(), 0, {1, -1}));
    run_instance(instance_additive(Cartan::b2(), 2, {0, 1}));
    run_instance(instance_additive(Cartan::g2(), 0, {1, -1}));
    run_instance(instance_additive(Cartan::g2(), 3, {0, 1}));
}

TEST_CASE("affine instance reproduces the q-version tables") {
    run_instance(instance_affine(Cartan::a2(), 3, {0, 1}));
    run_instance(instance_affine(Cartan::b2(), 0, {1, -1}));
    run_instance(instance_affine(Cartan::g2(), 3, {0, 1}));
}

TEST_CASE("symmetric-group instance reproduces the type A relations") {
    for (long e : {0L, 2L, 3L}) {
        KlrInstance inst = instance_symmetric(2, e, {0, 1, 2});
        RelationSet set = synthesize_relations(inst.quiver, inst.wmap, inst.index, true);
        check_report(check_symmetric_instance(set, inst));
    }
    KlrInstance inst = instance_symmetric(3, 2, {0, 1, 0, 1});
    RelationSet set = synthesize_relations(inst.quiver, inst.wmap, inst.index, true);
    check_report(check_symmetric_instance(set, inst));
}

TEST_CASE("symmetry correction terms vanish on the concrete instances") {
    for (auto inst : {instance_additive(Cartan::b2(), 0, {1, -1}),
                      instance_additive(Cartan::g2(), 0, {1, -1}),
                      instance_affine(Cartan::b2(), 0, {1, -1}),
                      instance_affine(Cartan::g2(), 2, {0, 1})})
        check_report(verify_symmetric_terms_vanish(inst.quiver, inst.wmap, inst.index));
}

TEST_CASE("presentation export is deterministic and carries the schema") {
    KlrInstance inst = instance_additive(Cartan::b2(), 0, {1, -1});
    RelationSet s1 = synthesize_relations(inst.quiver, inst.wmap, inst.index);
    RelationSet s2 = synthesize_relations(inst.quiver, inst.wmap, inst.index);
    auto names = coordinate_names(inst.wmap.nvars);
    std::string j1 = relations_json(s1, names), j2 = relations_json(s2, names);
    CHECK(j1 == j2);
    CHECK(j1.find("\"schema\":\"klr-presentation/1\"") != std::string::npos);
    CHECK(j1.find("\"decomposition_exact\":true") != std::string::npos);
    CHECK(j1.find("\"coefficients_in_ring\":true") != std::string::npos);
}

TEST_CASE("orbit systems: numbers game and place permutation") {
    IndexSystem a1 = orbit_numbers_game(Cartan::by_name("A1"), 3, {1});
    CHECK(a1.tuples == std::vector<std::vector<long>>{{1}, {2}});
    IndexSystem fix = orbit_numbers_game(Cartan::a2(), 0, {0, 0});
    CHECK(fix.size() == 1);
    IndexSystem sym = orbit_place_permutation(2, 0, {0, 1, 2});
    CHECK(sym.size() == 6);
    CHECK(sym.eta(0, 0) == sym.tuples[0][0] - sym.tuples[0][1]);
}
