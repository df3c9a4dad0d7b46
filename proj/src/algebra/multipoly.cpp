#include "trmc/algebra/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "trmc/errors.hpp"

namespace trmc {

long total_degree(const Exponent& e) {
    long s = 0;
    for (int x : e) s += x;
    return s;
}

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
}

Vars make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

Vars indexed_vars(const std::string& stem, size_t count) {
    std::vector<std::string> names;
    for (size_t i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i));
    return make_vars(std::move(names));
}

bool same_vars(const Vars& a, const Vars& b) { return a == b || *a == *b; }

MultiPoly::MultiPoly() : vars_(make_vars({})) {}
MultiPoly::MultiPoly(Vars vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(Vars vars, const Rational& c) {
    MultiPoly p(vars);
    p.add_term(Exponent(p.nvars(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(Vars vars, size_t index) {
    MultiPoly p(vars);
    if (index >= p.nvars()) throw InputError("variable index out of range");
    Exponent e(p.nvars(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::monomial(Vars vars, Exponent e, const Rational& c) {
    MultiPoly p(vars);
    p.add_term(e, c);
    return p;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != nvars())
        throw InputError("exponent length " + std::to_string(e.size()) + " does not match " +
                         std::to_string(nvars()) + " variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational MultiPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coeff(Exponent(nvars(), 0)); }

long MultiPoly::max_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

bool MultiPoly::is_homogeneous(long degree) const {
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != degree) return false;
    return true;
}

bool MultiPoly::has_negative_exponents() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return true;
    return false;
}

void MultiPoly::require_compatible(const MultiPoly& o, const char* op) const {
    if (!same_vars(vars_, o.vars_))
        throw InputError(std::string("incompatible variable lists in polynomial ") + op);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_compatible(o, "addition");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_compatible(o, "subtraction");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::shifted(const Exponent& by, const Rational& c) const {
    MultiPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) {
        Exponent f = e;
        for (size_t i = 0; i < f.size(); ++i) f[i] += by[i];
        r.terms_.emplace(std::move(f), v * c);
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly result = constant(vars_, 1);
    MultiPoly base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != nvars()) throw InputError("evaluation point has wrong length");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0 && point[i] == 0)
                throw ArithmeticError("Laurent evaluation at zero for variable " + (*vars_)[i]);
            term *= trmc::pow(point[i], e[i]);
        }
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images, const Vars& target) const {
    if (images.size() != nvars()) throw InputError("substitution needs one image per variable");
    for (const auto& im : images)
        if (!same_vars(im.vars(), target)) throw InputError("substitution images use other variables");
    // cache powers per variable
    std::vector<std::map<int, MultiPoly>> cache(nvars());
    auto power = [&](size_t i, int k) -> const MultiPoly& {
        auto it = cache[i].find(k);
        if (it != cache[i].end()) return it->second;
        MultiPoly p(target);
        if (k >= 0) {
            p = images[i].pow(static_cast<unsigned>(k));
        } else {
            if (images[i].size() != 1)
                throw ArithmeticError("negative power of a non-monomial substitution image");
            const auto& [e, c] = *images[i].terms().begin();
            Exponent f = e;
            for (auto& x : f) x *= k;
            p = monomial(target, f, trmc::pow(c, k));
        }
        return cache[i].emplace(k, std::move(p)).first->second;
    };
    MultiPoly out(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = constant(target, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term = term * power(i, e[i]);
        out += term;
    }
    return out;
}

MultiPoly MultiPoly::renamed(const Vars& target) const {
    if (target->size() != nvars()) throw InputError("renaming to a variable list of different length");
    MultiPoly r(target);
    r.terms_ = terms_;
    return r;
}

std::string monomial_string(const std::vector<std::string>& names, const Exponent& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono = monomial_string(*vars_, e);
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mono.empty()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << mono;
        }
    }
    return os.str();
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return same_vars(vars_, o.vars_) && terms_ == o.terms_;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (!same_vars(a.vars(), b.vars())) throw InputError("incompatible variable lists in polynomial product");
    MultiPoly r(a.vars());
    Exponent f(a.nvars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            for (size_t i = 0; i < f.size(); ++i) f[i] = ea[i] + eb[i];
            r.add_term(f, ca * cb);
        }
    return r;
}

MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

MultiPoly poly_arith(const MultiPoly& lhs, const MultiPoly& rhs, PolyOp op) {
    return op == PolyOp::Add ? lhs + rhs : lhs * rhs;
}

}  // namespace trmc
