#include "trmc/algebra/fourier_motzkin.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "trmc/errors.hpp"

namespace trmc {

namespace {

void normalize(LinearInequality& c) {
    for (const auto& x : c.a)
        if (x != 0) {
            Rational s = abs(x);
            for (auto& y : c.a) y /= s;
            c.b /= s;
            return;
        }
}

}  // namespace

bool fm_prune(InequalitySystem& s) {
    std::map<std::vector<std::string>, size_t> seen;
    InequalitySystem out;
    for (auto& c : s) {
        if (std::all_of(c.a.begin(), c.a.end(), [](const Rational& x) { return x == 0; })) {
            if (c.b > 0) return false;
            continue;
        }
        normalize(c);
        std::vector<std::string> key;
        for (const auto& x : c.a) key.push_back(x.get_str());
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(std::move(key), out.size());
            out.push_back(std::move(c));
        } else if (c.b > out[it->second].b) {
            out[it->second].b = c.b;
        }
    }
    s = std::move(out);
    return true;
}

InequalitySystem fm_eliminate(const InequalitySystem& s, size_t v, size_t max_rows) {
    InequalitySystem rest, pos, neg;
    for (const auto& c : s) {
        if (c.a[v] > 0) pos.push_back(c);
        else if (c.a[v] < 0) neg.push_back(c);
        else rest.push_back(c);
    }
    if (pos.size() * neg.size() + rest.size() > max_rows)
        throw CapacityError("Fourier-Motzkin elimination exceeds " + std::to_string(max_rows) + " rows");
    const size_t n = s.empty() ? 0 : s[0].a.size();
    for (const auto& p : pos)
        for (const auto& q : neg) {
            LinearInequality c{std::vector<Rational>(n), 0};
            Rational sp = 1 / p.a[v], sq = -1 / q.a[v];
            for (size_t k = 0; k < n; ++k) c.a[k] = p.a[k] * sp + q.a[k] * sq;
            c.a[v] = 0;
            c.b = p.b * sp + q.b * sq;
            rest.push_back(std::move(c));
        }
    return rest;
}

std::pair<std::optional<Rational>, std::optional<Rational>> fm_bounds(const InequalitySystem& s, size_t v,
                                                                     const std::vector<Rational>& x) {
    std::optional<Rational> lo, hi;
    for (const auto& c : s) {
        if (c.a[v] == 0) continue;
        Rational r = c.b;
        for (size_t k = 0; k < c.a.size(); ++k)
            if (k != v) r -= c.a[k] * x[k];
        Rational bound = r / c.a[v];
        if (c.a[v] > 0) {
            if (!lo || bound > *lo) lo = bound;
        } else if (!hi || bound < *hi) {
            hi = bound;
        }
    }
    return {lo, hi};
}

Integer floor_of(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

Integer ceil_of(const Rational& q) {
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return c;
}

}  // namespace trmc
