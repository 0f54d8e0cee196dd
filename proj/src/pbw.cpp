#include "cato/pbw.hpp"

#include <functional>
#include <stdexcept>

namespace cato {

PBWMonomial PBWMonomial::from_parts(const ChevalleyTable& ct, const IntVec& neg, const IntVec& cartan, const IntVec& pos) {
    const auto t = ct.num_positive();
    const auto ell = static_cast<std::size_t>(ct.rank());
    if (neg.size() != t || cartan.size() != ell || pos.size() != t) throw std::invalid_argument("PBW monomial: wrong part lengths");
    IntVec e;
    e.reserve(ct.dim());
    e.insert(e.end(), neg.begin(), neg.end());
    e.insert(e.end(), cartan.begin(), cartan.end());
    e.insert(e.end(), pos.begin(), pos.end());
    for (int v : e)
        if (v < 0) throw std::invalid_argument("PBW monomial: negative exponent");
    return PBWMonomial(std::move(e));
}

IntVec PBWMonomial::neg_exps(const ChevalleyTable& ct) const {
    return IntVec(exps.begin(), exps.begin() + static_cast<std::ptrdiff_t>(ct.num_positive()));
}

IntVec PBWMonomial::cartan_exps(const ChevalleyTable& ct) const {
    auto b = exps.begin() + static_cast<std::ptrdiff_t>(ct.num_positive());
    return IntVec(b, b + ct.rank());
}

IntVec PBWMonomial::pos_exps(const ChevalleyTable& ct) const {
    return IntVec(exps.begin() + static_cast<std::ptrdiff_t>(ct.num_positive()) + ct.rank(), exps.end());
}

int PBWMonomial::degree() const {
    int d = 0;
    for (int v : exps) d += v;
    return d;
}

std::string to_string(const ChevalleyTable& ct, const PBWMonomial& m) {
    std::string s;
    for (std::size_t g = 0; g < m.exps.size(); ++g) {
        if (!m.exps[g]) continue;
        if (!s.empty()) s += ' ';
        s += ct.symbol_name(g) + "^" + std::to_string(m.exps[g]);
    }
    return s.empty() ? "1" : s;
}

Root monomial_weight(const ChevalleyTable& ct, const PBWMonomial& m) {
    if (m.exps.size() != ct.dim()) throw std::invalid_argument("monomial does not belong to this algebra");
    Root w(IntVec(static_cast<std::size_t>(ct.rank()), 0));
    for (std::size_t g = 0; g < m.exps.size(); ++g)
        if (m.exps[g]) w = w + m.exps[g] * ct.weight_of(g);
    return w;
}

// ---- PBWElement -----------------------------------------------------------

void PBWElement::add_term(const PBWMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
    if (algebra != o.algebra) throw std::invalid_argument("PBW elements of different algebras");
    for (const auto& [m, c] : o.terms) add_term(m, c);
    return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
    if (algebra != o.algebra) throw std::invalid_argument("PBW elements of different algebras");
    for (const auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
}

PBWElement operator*(const Rational& s, PBWElement a) {
    if (s == 0) {
        a.terms.clear();
        return a;
    }
    for (auto& [m, c] : a.terms) c *= s;
    return a;
}

std::string to_string(const ChevalleyTable& ct, const PBWElement& e) {
    if (e.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : e.terms) {
        if (!s.empty()) s += " + ";
        s += "(" + to_string(c) + ") " + to_string(ct, m);
    }
    return s;
}

// ---- PBWAlgebra -----------------------------------------------------------

PBWElement PBWAlgebra::one() const {
    PBWElement e = zero();
    e.add_term(PBWMonomial::unit(ct_), 1);
    return e;
}

PBWElement PBWAlgebra::generator(std::size_t g) const {
    if (g >= ct_.dim()) throw std::out_of_range("generator index out of range");
    PBWMonomial m = PBWMonomial::unit(ct_);
    m.exps[g] = 1;
    PBWElement e = zero();
    e.add_term(m, 1);
    return e;
}

PBWElement PBWAlgebra::from_lie(const LieElement& z) const {
    if (z.algebra != ct_.label()) throw std::invalid_argument("Lie element of another algebra");
    PBWElement e = zero();
    for (std::size_t g : z.support()) {
        PBWMonomial m = PBWMonomial::unit(ct_);
        m.exps[g] = 1;
        e.add_term(m, z.coeffs[g]);
    }
    return e;
}

const std::map<PBWMonomial, Rational>& PBWAlgebra::left_cached(std::size_t g, const PBWMonomial& m) const {
    std::pair<std::size_t, IntVec> key{g, m.exps};
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    std::size_t f = 0;
    while (f < m.exps.size() && m.exps[f] == 0) ++f;
    PBWElement result = zero();
    if (f == m.exps.size() || g <= f) {
        PBWMonomial out = m;
        ++out.exps[g];
        result.add_term(out, 1);
    } else {
        // e_g e_f m' = e_f (e_g m') + [e_g, e_f] m'
        PBWMonomial rest = m;
        --rest.exps[f];
        result = left_multiply(f, left_multiply(g, rest));
        for (const auto& [k, c] : ct_.bracket_basis(g, f)) result += Rational(c) * left_multiply(k, rest);
    }
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = cache_.emplace(std::move(key), std::move(result.terms));
    return it->second;
}

PBWElement PBWAlgebra::left_multiply(std::size_t g, const PBWMonomial& m) const {
    if (g >= ct_.dim() || m.exps.size() != ct_.dim()) throw std::invalid_argument("left_multiply: foreign generator or monomial");
    PBWElement e = zero();
    e.terms = left_cached(g, m);
    return e;
}

PBWElement PBWAlgebra::left_multiply(std::size_t g, const PBWElement& a) const {
    if (a.algebra != ct_.label()) throw std::invalid_argument("PBW element of another algebra");
    PBWElement out = zero();
    for (const auto& [m, c] : a.terms)
        for (const auto& [m2, c2] : left_cached(g, m)) out.add_term(m2, c * c2);
    return out;
}

PBWElement PBWAlgebra::left_multiply(const LieElement& z, const PBWElement& a) const {
    PBWElement out = zero();
    for (std::size_t g : z.support()) out += z.coeffs[g] * left_multiply(g, a);
    return out;
}

PBWElement PBWAlgebra::multiply(const PBWElement& a, const PBWElement& b) const {
    if (a.algebra != ct_.label() || b.algebra != ct_.label()) throw std::invalid_argument("PBW elements of another algebra");
    PBWElement out = zero();
    for (const auto& [m, c] : a.terms) {
        PBWElement acc = b;
        for (std::size_t g = m.exps.size(); g-- > 0;)
            for (int k = 0; k < m.exps[g]; ++k) acc = left_multiply(g, acc);
        out += c * acc;
    }
    return out;
}

PBWElement PBWAlgebra::power(const PBWElement& a, int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    PBWElement out = one();
    for (int i = 0; i < k; ++i) out = multiply(a, out);
    return out;
}

PBWElement PBWAlgebra::normal_order(std::span<const std::size_t> word) const {
    PBWElement acc = one();
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = left_multiply(*it, acc);
    return acc;
}

std::size_t PBWAlgebra::cache_size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.size();
}

// ---- generalized Leibniz expansions ----------------------------------------

PBWElement ad_power(const PBWAlgebra& alg, std::size_t x, int k, const PBWElement& a) {
    PBWElement gx = alg.generator(x);
    PBWElement out = a;
    for (int i = 0; i < k; ++i) out = alg.multiply(gx, out) - alg.multiply(out, gx);
    return out;
}

namespace {

// Calls fn on every composition (i_1..i_parts) of k with its multinomial coefficient.
void for_each_composition(int k, std::size_t parts, const std::function<void(const IntVec&, const Rational&)>& fn) {
    IntVec cur(parts, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
        if (pos + 1 == parts) {
            cur[pos] = left;
            Rational coef = factorial(static_cast<unsigned>(k));
            for (int v : cur) coef /= factorial(static_cast<unsigned>(v));
            fn(cur, coef);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, k);
}

}  // namespace

bool ad_power_identity_check(const PBWAlgebra& alg, std::size_t x, std::span<const std::size_t> z_word, int k) {
    if (k < 0) throw std::invalid_argument("negative exponent");
    const ChevalleyTable& ct = alg.table();
    const std::size_t n = z_word.size();
    LieElement xl = LieElement::basis(ct, x);
    // [x^{[i]}, z_j] for all needed i, computed in the Lie algebra
    std::vector<std::vector<PBWElement>> adz(n);
    for (std::size_t j = 0; j < n; ++j) {
        LieElement w = LieElement::basis(ct, z_word[j]);
        for (int i = 0; i <= k; ++i) {
            adz[j].push_back(alg.from_lie(w));
            w = bracket(ct, xl, w);
        }
    }

    // x^k z_1 ... z_n
    std::vector<std::size_t> word(static_cast<std::size_t>(k), x);
    word.insert(word.end(), z_word.begin(), z_word.end());
    PBWElement lhs1 = alg.normal_order(word);
    PBWElement rhs1 = alg.zero();
    for_each_composition(k, n + 1, [&](const IntVec& idx, const Rational& coef) {
        PBWElement term = alg.power(alg.generator(x), idx[n]);
        for (std::size_t j = n; j-- > 0;) term = alg.multiply(adz[j][static_cast<std::size_t>(idx[j])], term);
        rhs1 += coef * term;
    });

    // [x^{[k]}, z_1 ... z_n]
    PBWElement lhs2 = ad_power(alg, x, k, alg.normal_order(z_word));
    PBWElement rhs2 = alg.zero();
    if (n == 0) {
        rhs2 = k == 0 ? alg.one() : alg.zero();
    } else {
        for_each_composition(k, n, [&](const IntVec& idx, const Rational& coef) {
            PBWElement term = alg.one();
            for (std::size_t j = n; j-- > 0;) term = alg.multiply(adz[j][static_cast<std::size_t>(idx[j])], term);
            rhs2 += coef * term;
        });
    }
    return lhs1 == rhs1 && lhs2 == rhs2;
}

}  // namespace cato
