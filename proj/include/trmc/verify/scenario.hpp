#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "trmc/errors.hpp"
#include "trmc/polytope/polytope.hpp"

namespace trmc {

// Schema violation; `path` names the offending field, e.g. "points[2]".
class ScenarioError : public InputError {
public:
    ScenarioError(std::string path, const std::string& what)
        : InputError(path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

struct ExpectedResidue {
    std::string variables;  // "a" or "mori"
    MultiPoly numerator, denominator;
};

struct Scenario {
    std::string name;
    size_t lattice_dim = 0;
    std::vector<LatticePoint> points;                 // A without the origin
    std::vector<std::vector<size_t>> triangulation;   // 1-based into points, origin implied
    std::string mode = "P";                            // "P" or "yukawa"
    MultiPoly polynomial;                              // in x1..xn
    long order = 0;
    std::optional<std::vector<std::vector<long>>> mori_generators;
    std::optional<ExpectedResidue> expected_residue;
    std::optional<std::vector<long>> weights;
    std::optional<std::vector<long>> product_dims;

    size_t n() const { return points.size(); }
    // P itself, or (x_1 + ... + x_n) Q in Yukawa mode.
    MultiPoly integrand() const;
};

Scenario parse_scenario(const nlohmann::json& j);
Scenario load_scenario(const std::string& path);
nlohmann::json scenario_to_json(const Scenario& s);

nlohmann::json terms_to_json(const MultiPoly& p);

}  // namespace trmc
