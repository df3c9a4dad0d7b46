#include "trmc/algebra/rational.hpp"

#include <cctype>

#include "trmc/errors.hpp"

namespace trmc {

const char* error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Input: return "input";
        case ErrorKind::Arithmetic: return "arithmetic";
        case ErrorKind::Degenerate: return "degenerate";
        case ErrorKind::Reconstruction: return "reconstruction";
        case ErrorKind::Geometry: return "geometry";
        case ErrorKind::Capacity: return "capacity";
        case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool parse_integer(const std::string& s, Integer& out) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    std::string digits = s[0] == '+' ? s.substr(1) : s;
    return out.set_str(digits, 10) == 0;
}

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = trim(text);
    auto slash = s.find('/');
    Integer num, den(1);
    bool ok = slash == std::string::npos
                  ? parse_integer(s, num)
                  : parse_integer(trim(s.substr(0, slash)), num) &&
                        parse_integer(trim(s.substr(slash + 1)), den);
    if (!ok) throw InputError("not a rational number: \"" + text + "\"");
    if (den == 0) throw InputError("zero denominator in \"" + text + "\"");
    return make_rational(num, den);
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

Integer binomial(const Integer& n, long k) {
    if (k < 0) return 0;
    Integer num = 1;
    for (long i = 0; i < k; ++i) num *= (n - i);
    Integer den = factorial(k);
    return num / den;  // exact
}

Integer factorial(long n) {
    if (n < 0) throw ArithmeticError("factorial of a negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer ipow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw ArithmeticError("zero raised to a negative power");
        Rational inv = 1 / base;
        return pow(inv, -exponent);
    }
    unsigned long e = static_cast<unsigned long>(exponent);
    return make_rational(ipow(base.get_num(), e), ipow(base.get_den(), e));
}

Integer lcm_of_denominators(const std::vector<Rational>& v) {
    Integer l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

Integer gcd_of(const std::vector<Integer>& v) {
    Integer g = 0;
    for (const auto& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    return g;
}

}  // namespace trmc
