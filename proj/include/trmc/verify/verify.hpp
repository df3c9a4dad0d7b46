#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trmc/moduli/generating.hpp"
#include "trmc/residues/residue.hpp"
#include "trmc/verify/scenario.hpp"

namespace trmc {

// Failure of one pipeline stage; keeps the kind of the underlying error.
class StageError : public Error {
public:
    StageError(std::string stage, ErrorKind kind, const std::string& what)
        : Error(kind, stage + ": " + what), stage_(std::move(stage)) {}
    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

// Geometry shared by the verifier and the CLI subcommands.
struct Model {
    Scenario scenario;
    Triangulation triangulation;  // A = {0} + scenario points
    CoherenceCertificate certificate;
    SecondaryVertex secondary;
    std::shared_ptr<const ToricVariety> variety;
    MoriCone mori;  // generators in override order when one is given
    DivisorClass grading;

    IntegerMatrix generator_matrix() const;  // rows: Mori generators as vectors in Z^n
    std::vector<int> vertex_exponent() const;  // chi on the nonzero points
    ResidueEvaluator evaluator() const;
};

// Runs the triangulation, coherence, fan and mori stages.
Model build_model(const Scenario& s, size_t monomial_cap = kDefaultMonomialCap);

struct ResidueSource {
    std::string kind;      // "fixture", "weighted", "product" or "curve"
    std::string function;  // closed form in the Mori variables, when one exists
    TruncatedSeries series;
};

// Every residue side available for the scenario, expanded at the vertex of the
// triangulation in y_1..y_r to total degree `order`.
std::vector<ResidueSource> residue_sources(const Model& m, long order);

struct CoefficientRow {
    Exponent lambda;  // Mori coordinates
    CurveClass beta;
    Rational intersection;
    std::vector<Rational> residue;  // one per source
    bool match = true;
};

struct TheoremChecks {
    Rational integral;         // integral of P over the toric variety
    bool constant_terms_match = true;
    Rational stringy_integral;
    Integer volume;            // normalized volume of conv(A)
    bool stringy_match = true;
};

struct Report {
    Scenario scenario;
    long order = 0;
    bool pass = false;
    std::vector<Rational> coherence_lift;
    std::vector<int> vertex_exponent;
    std::vector<CurveClass> mori_generators;
    std::vector<std::string> warnings;
    DivisorClass grading;
    CoefficientTable table;
    std::vector<ResidueSource> residues;
    std::vector<CoefficientRow> rows;
    TheoremChecks checks;
    std::map<std::string, double> timing_ms;

    std::vector<const CoefficientRow*> mismatches() const;
};

struct VerifyOptions {
    std::optional<long> order;  // overrides the scenario order
    unsigned jobs = 1;
    size_t max_monomials = 20000;  // cap on compared coefficients
};

Report verify(const Scenario& s, const VerifyOptions& opts = {});

nlohmann::json report_to_json(const Report& r, bool include_timing = true);
std::string report_to_text(const Report& r);

nlohmann::json curve_to_json(const CurveClass& c);
nlohmann::json series_to_json(const TruncatedSeries& s);

}  // namespace trmc
