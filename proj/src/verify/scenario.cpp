#include "trmc/verify/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace trmc {

namespace {

using nlohmann::json;

std::string at(const std::string& path, size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string field(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

const std::set<std::string> kScenarioKeys{"name",           "lattice_dim",      "points",  "triangulation",
                                          "polynomial",     "order",            "weights", "product_dims",
                                          "mori_generators", "expected_residue"};

void only_keys(const json& j, const std::set<std::string>& keys, const std::string& path) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!keys.count(it.key())) throw ScenarioError(field(path, it.key()), "unknown key");
}

const json& require(const json& j, const std::string& key, const std::string& path) {
    if (!j.contains(key)) throw ScenarioError(field(path, key), "missing");
    return j.at(key);
}

long as_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ScenarioError(path, "expected an integer");
    return j.get<long>();
}

std::vector<long> int_list(const json& j, const std::string& path) {
    if (!j.is_array()) throw ScenarioError(path, "expected an array of integers");
    std::vector<long> out;
    for (size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], at(path, i)));
    return out;
}

std::vector<std::vector<long>> int_matrix(const json& j, const std::string& path) {
    if (!j.is_array()) throw ScenarioError(path, "expected an array of arrays");
    std::vector<std::vector<long>> out;
    for (size_t i = 0; i < j.size(); ++i) out.push_back(int_list(j[i], at(path, i)));
    return out;
}

Rational as_rational(const json& j, const std::string& path) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<long>());
    } catch (const InputError& e) {
        throw ScenarioError(path, e.what());
    }
    throw ScenarioError(path, "expected a rational \"p/q\"");
}

// Terms with `width` exponents each; width 0 accepts any common width.
MultiPoly parse_terms(const json& j, const std::string& path, const std::string& stem, size_t width) {
    if (!j.is_array()) throw ScenarioError(path, "expected an array of terms");
    std::vector<std::pair<Rational, Exponent>> terms;
    for (size_t i = 0; i < j.size(); ++i) {
        const std::string tp = at(path, i);
        if (!j[i].is_object()) throw ScenarioError(tp, "expected a term object");
        only_keys(j[i], {"coeff", "exponents"}, tp);
        Rational c = as_rational(require(j[i], "coeff", tp), field(tp, "coeff"));
        auto e = int_list(require(j[i], "exponents", tp), field(tp, "exponents"));
        if (width == 0) width = e.size();
        if (e.size() != width)
            throw ScenarioError(field(tp, "exponents"), "expected " + std::to_string(width) + " exponents");
        Exponent x;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] < 0) throw ScenarioError(at(field(tp, "exponents"), k), "negative exponent");
            x.push_back(static_cast<int>(e[k]));
        }
        terms.emplace_back(c, x);
    }
    if (width == 0) throw ScenarioError(path, "no terms");
    MultiPoly p(indexed_vars(stem, width));
    for (const auto& [c, e] : terms) p.add_term(e, c);
    return p;
}

}  // namespace

MultiPoly Scenario::integrand() const {
    if (mode != "yukawa") return polynomial;
    MultiPoly sum(polynomial.vars());
    for (size_t i = 0; i < polynomial.nvars(); ++i) sum += MultiPoly::variable(polynomial.vars(), i);
    return sum * polynomial;
}

Scenario parse_scenario(const json& j) {
    if (!j.is_object()) throw ScenarioError("$", "expected a JSON object");
    only_keys(j, kScenarioKeys, "");
    Scenario s;
    const auto& name = require(j, "name", "");
    if (!name.is_string()) throw ScenarioError("name", "expected a string");
    s.name = name.get<std::string>();

    long d = as_int(require(j, "lattice_dim", ""), "lattice_dim");
    if (d < 1) throw ScenarioError("lattice_dim", "must be positive");
    s.lattice_dim = static_cast<size_t>(d);

    auto pts = int_matrix(require(j, "points", ""), "points");
    std::set<LatticePoint> seen;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].size() != s.lattice_dim)
            throw ScenarioError(at("points", i), "expected " + std::to_string(d) + " coordinates");
        LatticePoint p(pts[i].begin(), pts[i].end());
        if (std::all_of(p.begin(), p.end(), [](int x) { return x == 0; }))
            throw ScenarioError(at("points", i), "the origin is implicit");
        if (!seen.insert(p).second) throw ScenarioError(at("points", i), "duplicate point");
        s.points.push_back(p);
    }
    if (s.points.empty()) throw ScenarioError("points", "no points");

    auto tri = int_matrix(require(j, "triangulation", ""), "triangulation");
    if (tri.empty()) throw ScenarioError("triangulation", "no simplices");
    for (size_t i = 0; i < tri.size(); ++i) {
        if (tri[i].size() != s.lattice_dim)
            throw ScenarioError(at("triangulation", i), "expected " + std::to_string(d) + " point indices");
        std::vector<size_t> simplex;
        for (size_t k = 0; k < tri[i].size(); ++k) {
            if (tri[i][k] < 1 || tri[i][k] > static_cast<long>(s.n()))
                throw ScenarioError(at(at("triangulation", i), k), "index out of range 1.." + std::to_string(s.n()));
            simplex.push_back(static_cast<size_t>(tri[i][k]));
        }
        s.triangulation.push_back(simplex);
    }

    const auto& poly = require(j, "polynomial", "");
    if (!poly.is_object()) throw ScenarioError("polynomial", "expected an object");
    only_keys(poly, {"mode", "terms"}, "polynomial");
    const auto& mode = require(poly, "mode", "polynomial");
    if (!mode.is_string() || (mode != "P" && mode != "yukawa"))
        throw ScenarioError("polynomial.mode", "expected \"P\" or \"yukawa\"");
    s.mode = mode.get<std::string>();
    s.polynomial = parse_terms(require(poly, "terms", "polynomial"), "polynomial.terms", "x", s.n());
    long degree = static_cast<long>(s.lattice_dim) - (s.mode == "yukawa" ? 1 : 0);
    if (!s.polynomial.is_homogeneous(degree))
        throw ScenarioError("polynomial.terms", "must be homogeneous of degree " + std::to_string(degree));

    s.order = as_int(require(j, "order", ""), "order");
    if (s.order < 0) throw ScenarioError("order", "must be nonnegative");

    if (j.contains("mori_generators")) {
        auto g = int_matrix(j.at("mori_generators"), "mori_generators");
        for (size_t i = 0; i < g.size(); ++i)
            if (g[i].size() != s.n())
                throw ScenarioError(at("mori_generators", i), "expected " + std::to_string(s.n()) + " entries");
        if (g.empty()) throw ScenarioError("mori_generators", "empty");
        s.mori_generators = g;
    }

    if (j.contains("expected_residue")) {
        const auto& e = j.at("expected_residue");
        const std::string path = "expected_residue";
        if (!e.is_object()) throw ScenarioError(path, "expected an object");
        only_keys(e, {"variables", "numerator", "denominator"}, path);
        const auto& vars = require(e, "variables", path);
        if (!vars.is_string() || (vars != "a" && vars != "mori"))
            throw ScenarioError(field(path, "variables"), "expected \"a\" or \"mori\"");
        ExpectedResidue r;
        r.variables = vars.get<std::string>();
        size_t width = r.variables == "a" ? s.n() : (s.mori_generators ? s.mori_generators->size() : 0);
        const std::string stem = r.variables == "a" ? "a" : "y";
        r.numerator = parse_terms(require(e, "numerator", path), field(path, "numerator"), stem, width);
        r.denominator = parse_terms(require(e, "denominator", path), field(path, "denominator"), stem,
                                    r.numerator.nvars());
        if (r.denominator.is_zero()) throw ScenarioError(field(path, "denominator"), "is zero");
        s.expected_residue = std::move(r);
    }

    if (j.contains("weights")) {
        auto w = int_list(j.at("weights"), "weights");
        if (w.size() != s.n()) throw ScenarioError("weights", "expected one weight per point");
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] < 1) throw ScenarioError(at("weights", i), "must be positive");
        s.weights = w;
    }

    if (j.contains("product_dims")) {
        auto dims = int_list(j.at("product_dims"), "product_dims");
        long total = 0, count = 0;
        for (size_t i = 0; i < dims.size(); ++i) {
            if (dims[i] < 1) throw ScenarioError(at("product_dims", i), "must be positive");
            total += dims[i];
            count += dims[i] + 1;
        }
        if (total != d) throw ScenarioError("product_dims", "must sum to lattice_dim");
        if (count != static_cast<long>(s.n())) throw ScenarioError("product_dims", "factor sizes do not match the points");
        s.product_dims = dims;
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    json j;
    try {
        j = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw ScenarioError("$", std::string("invalid JSON: ") + e.what());
    }
    return parse_scenario(j);
}

json terms_to_json(const MultiPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({{"coeff", to_string(c)}, {"exponents", e}});
    return out;
}

json scenario_to_json(const Scenario& s) {
    json j;
    j["name"] = s.name;
    j["lattice_dim"] = s.lattice_dim;
    j["points"] = s.points;
    j["triangulation"] = s.triangulation;
    j["polynomial"] = {{"mode", s.mode}, {"terms", terms_to_json(s.polynomial)}};
    j["order"] = s.order;
    if (s.mori_generators) j["mori_generators"] = *s.mori_generators;
    if (s.expected_residue)
        j["expected_residue"] = {{"variables", s.expected_residue->variables},
                                 {"numerator", terms_to_json(s.expected_residue->numerator)},
                                 {"denominator", terms_to_json(s.expected_residue->denominator)}};
    if (s.weights) j["weights"] = *s.weights;
    if (s.product_dims) j["product_dims"] = *s.product_dims;
    return j;
}

}  // namespace trmc
