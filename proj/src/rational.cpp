#include "cato/rational.hpp"

#include <stdexcept>

namespace cato {

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    mpz_class d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(mpz_class(n), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Rational& q) {
    if (!is_integer(q)) throw std::domain_error("not an integer: " + to_string(q));
    if (!q.get_num().fits_slong_p()) throw std::domain_error("integer overflow: " + to_string(q));
    return q.get_num().get_si();
}

int valuation(const mpz_class& n, unsigned long p) {
    if (n == 0) return kInfiniteValuation;
    mpz_class m = abs(n);
    int v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++v;
    }
    return v;
}

int valuation(const Rational& q, unsigned long p) {
    if (q == 0) return kInfiniteValuation;
    return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

bool is_p_integral(const Rational& q, unsigned long p) { return valuation(q.get_den(), p) == 0; }

Rational prime_power(unsigned long p, int e) {
    mpz_class base;
    mpz_ui_pow_ui(base.get_mpz_t(), p, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rational(base);
    return Rational(mpz_class(1), base);
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace cato
