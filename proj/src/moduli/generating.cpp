#include "trmc/moduli/generating.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "trmc/errors.hpp"

namespace trmc {

Rational CoefficientTable::at(const CurveClass& beta) const {
    for (const auto& [b, c] : entries)
        if (b == beta) return c;
    return 0;
}

namespace {

std::optional<TruncatedSeries> mori_series(const ToricVariety& v, const MoriCone& k, const CoefficientTable& t) {
    if (!k.simplicial()) return std::nullopt;
    for (const auto& g : k.generators)
        if (v.pairing(t.grading, g) != 1) return std::nullopt;
    const size_t r = k.generators.size();
    RationalMatrix m(r, r);
    for (size_t i = 0; i < r; ++i) {
        auto mu = v.curve_coords(k.generators[i]);
        for (size_t j = 0; j < r; ++j) m(j, i) = mu[j];
    }
    TruncatedSeries s(indexed_vars("y", r), t.bound);
    for (const auto& [beta, c] : t.entries) {
        auto lambda = solve(m, v.curve_coords(beta));
        if (!lambda) return std::nullopt;
        Exponent e;
        for (const auto& x : *lambda) {
            if (x.get_den() != 1 || x < 0) return std::nullopt;
            e.push_back(x.get_num().get_si());
        }
        s.add_term(e, c);
    }
    return s;
}

}  // namespace

CoefficientTable generating_function(const ToricVariety& v, const MoriCone& k, const MultiPoly& p, long bound,
                                     const GeneratingOptions& opts) {
    CoefficientTable t;
    t.grading = opts.grading ? *opts.grading : default_polarization(v, k);
    t.bound = bound;
    const DivisorClass H = opts.polarization ? *opts.polarization : ample_class(k);
    if (!is_ample(v, H)) throw InputError("polarization is not ample");
    auto betas = enumerate_mori_points(v, k, t.grading, bound);

    std::vector<Rational> values(betas.size());
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (size_t i; (i = next++) < betas.size();) {
            try {
                values[i] = intersection_coefficient(mp_space(v, H, betas[i]), p);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = betas.size();
            }
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(betas.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    for (size_t i = 0; i < betas.size(); ++i) t.entries.emplace_back(betas[i], values[i]);
    t.series = mori_series(v, k, t);
    return t;
}

}  // namespace trmc
