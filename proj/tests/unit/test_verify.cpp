#include "doctest.h"

#include <fstream>

#include "fixtures.hpp"
#include "trmc/verify/verify.hpp"

using namespace trmc;
using nlohmann::json;

namespace {

std::string fixture(const std::string& name) { return std::string(TRMC_FIXTURE_DIR) + "/" + name + ".json"; }

json raw(const std::string& name) {
    std::ifstream in(fixture(name));
    return json::parse(in);
}

std::string error_path(const json& j) {
    try {
        parse_scenario(j);
    } catch (const ScenarioError& e) {
        return e.path();
    }
    return "";
}

std::string failing_stage(const Scenario& s) {
    try {
        verify(s);
    } catch (const StageError& e) {
        return e.stage();
    }
    return "";
}

json without_timing(const Report& r) { return report_to_json(r, false); }

}  // namespace

TEST_CASE("fixture scenarios load") {
    auto f1 = load_scenario(fixture("f1"));
    CHECK(f1.n() == 4);
    CHECK(f1.triangulation.size() == 4);
    CHECK(f1.lattice_dim == 2);
    auto flop = load_scenario(fixture("flop1"));
    CHECK(flop.n() == 5);
    CHECK(flop.expected_residue->variables == "a");
    auto q = load_scenario(fixture("quintic"));
    CHECK(q.mode == "yukawa");
    CHECK(q.integrand().is_homogeneous(4));
}

TEST_CASE("schema violations name the field") {
    auto j = raw("f1");
    j["points"][2] = {1, 0, 0};
    CHECK(error_path(j) == "points[2]");

    j = raw("f1");
    j["triangulation"][1][0] = 9;
    CHECK(error_path(j) == "triangulation[1][0]");

    j = raw("f1");
    j["polynomial"]["terms"][0]["exponents"] = {1, 0, 0, 0};
    CHECK(error_path(j) == "polynomial.terms");

    j = raw("f1");
    j["polynomial"]["terms"][0]["coeff"] = "1/0";
    CHECK(error_path(j) == "polynomial.terms[0].coeff");

    j = raw("f1");
    j["colour"] = "blue";
    CHECK(error_path(j) == "colour");

    j = raw("f1");
    j.erase("order");
    CHECK(error_path(j) == "order");

    j = raw("flop1");
    j["expected_residue"]["denominator"][1]["exponents"] = {1, 2};
    CHECK(error_path(j) == "expected_residue.denominator[1].exponents");

    j = raw("p1p1");
    j["product_dims"] = {1, 2};
    CHECK(error_path(j) == "product_dims");
}

TEST_CASE("rationals are parsed exactly and reduced") {
    auto j = raw("f1");
    j["polynomial"]["terms"][0]["coeff"] = "6/4";
    auto s = parse_scenario(j);
    CHECK(s.polynomial.coeff({0, 2, 0, 0}) == make_rational(3, 2));
    CHECK(scenario_to_json(s)["polynomial"]["terms"][0]["coeff"] == "3/2");
}

TEST_CASE("end-to-end verification of the Hirzebruch and flop fixtures") {
    auto r = verify(load_scenario(fixture("f1")));
    CHECK(r.pass);
    CHECK(r.rows.size() == 15);
    CHECK(r.table.series->coeff({1, 1}) == 27);
    CHECK(r.residues.size() == 1);
    CHECK(r.checks.integral == 1);  // D2^2 on F1, the constant term of the residue

    auto f1 = verify(load_scenario(fixture("flop1")));
    auto f2 = verify(load_scenario(fixture("flop2")));
    CHECK(f1.pass);
    CHECK(f2.pass);
    CHECK(f1.table.series->constant_term() == 1);
    CHECK(f2.table.series->constant_term() == 0);
    CHECK(f1.vertex_exponent == std::vector<int>{4, 4, 4, 3, 3});
    CHECK(f2.vertex_exponent == std::vector<int>{3, 3, 4, 4, 4});
}

TEST_CASE("rank one scenarios cross-check fixture, closed form and reconstruction") {
    auto r = verify(load_scenario(fixture("quintic")));
    CHECK(r.pass);
    std::vector<std::string> kinds;
    for (const auto& s : r.residues) kinds.push_back(s.kind);
    CHECK(kinds == std::vector<std::string>{"fixture", "weighted", "curve"});
    CHECK(r.table.series->coeff({2}) == 48828125);
}

TEST_CASE("a wrong residue is reported with its beta") {
    auto s = load_scenario(fixture("f1"));
    s.expected_residue->numerator.add_term({0, 3}, 1);  // perturbs the y2^3 coefficient
    auto r = verify(s);
    CHECK_FALSE(r.pass);
    auto bad = r.mismatches();
    REQUIRE(bad.size() >= 1);
    CHECK(bad.front()->lambda == Exponent{0, 3});
    CHECK(bad.front()->beta.b == std::vector<Integer>{0, 3, 0, 3});
    CHECK(report_to_json(r)["verdict"] == "fail");
}

TEST_CASE("stage-tagged failures") {
    auto s = load_scenario(fixture("f1"));
    s.triangulation.pop_back();
    CHECK(failing_stage(s) == "triangulation");

    s = load_scenario(fixture("f1"));
    (*s.mori_generators)[0] = {1, 1, 1, 1};
    CHECK(failing_stage(s) == "mori");

    s = load_scenario(fixture("f1"));
    s.expected_residue.reset();
    CHECK(failing_stage(s) == "residue");

    // the two flop triangulations glued together do not form a fan
    s = load_scenario(fixture("flop1"));
    s.triangulation[0] = {1, 4, 5};
    CHECK(failing_stage(s) == "triangulation");
}

TEST_CASE("mori override reorders the series variables") {
    auto s = load_scenario(fixture("f1"));
    std::swap((*s.mori_generators)[0], (*s.mori_generators)[1]);
    // the fixture residue is written in the original order
    s.expected_residue->numerator = s.expected_residue->numerator.substitute(
        {MultiPoly::variable(indexed_vars("y", 2), 1), MultiPoly::variable(indexed_vars("y", 2), 0)},
        indexed_vars("y", 2));
    s.expected_residue->denominator = s.expected_residue->denominator.substitute(
        {MultiPoly::variable(indexed_vars("y", 2), 1), MultiPoly::variable(indexed_vars("y", 2), 0)},
        indexed_vars("y", 2));
    auto r = verify(s);
    CHECK(r.pass);
    CHECK(r.table.series->coeff({1, 1}) == 27);
    CHECK(r.table.series->coeff({1, 0}) == 12);
}

TEST_CASE("verdicts are identical across job counts") {
    for (const char* name : {"f1", "flop2", "P11222_blowup_k1"}) {
        auto s = load_scenario(fixture(name));
        VerifyOptions one, four;
        four.jobs = 4;
        CHECK(without_timing(verify(s, one)) == without_timing(verify(s, four)));
    }
}

TEST_CASE("reports round-trip through their echoed scenario") {
    for (const char* name : {"f1_x1x2", "flop1", "quintic", "p1p2_k11"}) {
        auto first = report_to_json(verify(load_scenario(fixture(name))));
        auto again = verify(parse_scenario(json::parse(first.dump())["scenario"]));
        auto second = report_to_json(again);
        first.erase("timing_ms");
        second.erase("timing_ms");
        CHECK(first == second);
    }
}

TEST_CASE("coefficient cap") {
    auto s = load_scenario(fixture("f1"));
    VerifyOptions o;
    o.max_monomials = 10;
    CHECK_THROWS_AS(verify(s, o), StageError);
}
