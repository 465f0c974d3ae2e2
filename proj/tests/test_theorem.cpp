#include <catch2/catch_amalgamated.hpp>

#include <hklr/theorem.hpp>

using namespace hklr;

namespace {

struct Case {
    const char* t;
    long e;
    ResVec seed;
};

void run_all(const std::vector<Case>& cases, Flavor fl) {
    FieldRef F = FieldContext::rational();
    for (auto& c : cases) {
        WeylGroup g(Cartan::by_name(c.t));
        LusztigAlgebra a(g, fl, LEngine::Theta, F, c.e, c.seed);
        TheoremReport rep = verify_theorem(a);
        INFO(c.t << " e=" << c.e << " seed=(" << c.seed[0]
                 << (c.seed.size() > 1 ? "," + std::to_string(c.seed[1]) : "") << ")");
        for (auto& row : rep.rows) {
            INFO("relation " << row.relation << ": " << row.detail);
            CHECK(row.ok);
        }
        CHECK(rep.ok);
    }
}

}  // namespace

TEST_CASE("presentation relations, rank 1") {
    std::vector<Case> cases = {
        {"A1", 0, {1}}, {"A1", 0, {0}}, {"A1", 2, {1}}, {"A1", 3, {2}},
        {"A1xA1", 0, {1, -1}}, {"A1xA1", 2, {1, 0}},
    };
    run_all(cases, Flavor::Degenerate);
    run_all(cases, Flavor::NonDegenerate);
}

TEST_CASE("presentation relations, single edge") {
    std::vector<Case> cases = {
        {"A2", 0, {1, -1}}, {"A2", 0, {1, 1}}, {"A2", 0, {0, 0}},
        {"A2", 2, {1, 1}},  {"A2", 3, {1, 2}}, {"A2", 5, {2, 3}},
    };
    run_all(cases, Flavor::Degenerate);
    run_all(cases, Flavor::NonDegenerate);
}

TEST_CASE("presentation relations, double edge") {
    std::vector<Case> cases = {
        {"B2", 0, {1, -2}}, {"B2", 0, {2, -1}}, {"B2", 0, {1, -1}}, {"B2", 0, {0, 0}},
        {"B2", 2, {0, 1}},  {"B2", 2, {1, 1}},  {"B2", 3, {1, 1}},  {"B2", 4, {2, 1}},
        {"B2", 5, {3, 1}},  {"B2", 5, {1, 4}},  {"B2", 7, {5, 1}},
    };
    run_all(cases, Flavor::Degenerate);
    run_all(cases, Flavor::NonDegenerate);
}

TEST_CASE("presentation relations, triple edge") {
    std::vector<Case> cases = {
        {"G2", 0, {1, -1}}, {"G2", 0, {-3, 1}}, {"G2", 0, {3, -2}}, {"G2", 0, {1, 1}},
        {"G2", 0, {0, 0}},  {"G2", 2, {1, 0}},  {"G2", 2, {1, 1}},  {"G2", 3, {0, 1}},
        {"G2", 3, {1, 0}},  {"G2", 4, {1, 2}},  {"G2", 4, {1, 1}},  {"G2", 4, {0, 1}},
        {"G2", 5, {2, 1}},  {"G2", 5, {1, 1}},  {"G2", 7, {4, 1}},  {"G2", 7, {1, 4}},
    };
    run_all(cases, Flavor::Degenerate);
    run_all(cases, Flavor::NonDegenerate);
}

TEST_CASE("report carries the numbering note and selected relations only") {
    WeylGroup g(Cartan::a2());
    LusztigAlgebra a(g, Flavor::Degenerate, LEngine::Theta,
                     FieldContext::rational(), 0, {1, -1});
    TheoremReport rep = verify_theorem(a, {1, 7, 8});
    CHECK(rep.ok);
    CHECK(rep.note.find("numbering") != std::string::npos);
    for (auto& row : rep.rows)
        CHECK((row.relation == 1 || row.relation == 7 || row.relation == 8));
}

TEST_CASE("relation checks over cyclotomic scalars, q-version") {
    std::vector<Case> cases = {{"B2", 3, {1, 1}}, {"G2", 5, {2, 1}}};
    for (auto& c : cases) {
        WeylGroup g(Cartan::by_name(c.t));
        FieldRef F = FieldContext::cyclotomic_q(static_cast<unsigned>(c.e));
        LusztigAlgebra a(g, Flavor::NonDegenerate, LEngine::Theta, F, c.e, c.seed);
        TheoremReport rep = verify_theorem(a);
        INFO(c.t << " e=" << c.e);
        CHECK(rep.ok);
    }
}

TEST_CASE("relation checks over prime fields, degenerate") {
    std::vector<Case> cases = {{"B2", 3, {1, 1}}, {"G2", 5, {2, 1}}};
    for (auto& c : cases) {
        WeylGroup g(Cartan::by_name(c.t));
        FieldRef F = FieldContext::prime_field(c.e);
        LusztigAlgebra a(g, Flavor::Degenerate, LEngine::Theta, F, c.e, c.seed);
        TheoremReport rep = verify_theorem(a);
        INFO(c.t << " e=" << c.e);
        CHECK(rep.ok);
    }
}
