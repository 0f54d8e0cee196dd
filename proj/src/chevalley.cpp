#include "cato/chevalley.hpp"

#include <stdexcept>

namespace cato {

namespace {

bool same_sign(const Root& a, const Root& b) {
    return (a.is_positive() && b.is_positive()) || (a.is_negative() && b.is_negative());
}

}  // namespace

ChevalleyTable::ChevalleyTable(RootSystem rs) : rs_(std::move(rs)) {
    t_ = rs_.num_positive();
    const auto ell = static_cast<std::size_t>(rs_.rank());
    dim_ = 2 * t_ + ell;
    npos_.assign(t_ * t_, 0);

    // Positive-pair constants, xi in height order so every smaller sum is known.
    for (std::size_t xi = 0; xi < t_; ++xi) {
        const Root& target = rs_.positive_root(xi);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < t_; ++a) {
            auto b = rs_.positive_index(target - rs_.positive_root(a));
            if (b && *b > a) pairs.emplace_back(a, *b);
        }
        if (pairs.empty()) continue;
        const auto [g, d] = pairs.front();
        const Root& gamma = rs_.positive_root(g);
        const Root& delta = rs_.positive_root(d);
        const long ngd = root_string(rs_, gamma, delta).down + 1;
        npos_[g * t_ + d] = ngd;
        npos_[d * t_ + g] = -ngd;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const auto [a, b] = pairs[k];
            const Root& alpha = rs_.positive_root(a);
            const Root& beta = rs_.positive_root(b);
            Rational sum = 0;
            Root bg = beta - gamma;
            if (rs_.is_root(bg))
                sum += Rational(structure_constant(beta, -gamma) * structure_constant(alpha, -delta)) / rs_.inner(bg, bg);
            Root ag = alpha - gamma;
            if (rs_.is_root(ag))
                sum += Rational(structure_constant(-gamma, alpha) * structure_constant(beta, -delta)) / rs_.inner(ag, ag);
            Rational n = Rational(rs_.inner(target, target)) / ngd * sum;
            long value = static_cast<long>(to_int64(n));
            npos_[a * t_ + b] = value;
            npos_[b * t_ + a] = -value;
        }
    }

    table_.assign(dim_ * dim_, {});
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = 0; b < dim_; ++b) {
            BasisSymbol sa = symbol(a), sb = symbol(b);
            IntCombination& out = table_[a * dim_ + b];
            if (sa.kind == SymbolKind::cartan && sb.kind == SymbolKind::cartan) continue;
            if (sa.kind == SymbolKind::cartan) {
                long v = rs_.pairing(weight_of(b), static_cast<int>(sa.index));
                if (v) out.emplace_back(b, v);
                continue;
            }
            if (sb.kind == SymbolKind::cartan) {
                long v = -rs_.pairing(weight_of(a), static_cast<int>(sb.index));
                if (v) out.emplace_back(a, v);
                continue;
            }
            Root ra = weight_of(a), rb = weight_of(b);
            Root s = ra + rb;
            if (s.is_zero()) {
                // [x_beta, y_beta] = h_beta, [y_beta, x_beta] = -h_beta
                IntVec c = rs_.coroot_expansion(ra.is_positive() ? ra : -ra);
                long sign = ra.is_positive() ? 1 : -1;
                for (int i = 0; i < rs_.rank(); ++i)
                    if (c[static_cast<std::size_t>(i)]) out.emplace_back(h_index(i), sign * c[static_cast<std::size_t>(i)]);
            } else if (rs_.is_root(s)) {
                out.emplace_back(root_vector(s), structure_constant(ra, rb));
            }
        }
}

long ChevalleyTable::positive_constant(std::size_t a, std::size_t b) const { return npos_[a * t_ + b]; }

long ChevalleyTable::structure_constant(const Root& a, const Root& b) const {
    Root s = a + b;
    if (s.is_zero() || !rs_.is_root(s) || !rs_.is_root(a) || !rs_.is_root(b)) return 0;
    if (a.is_positive() && b.is_positive()) return positive_constant(*rs_.positive_index(a), *rs_.positive_index(b));
    if (a.is_negative() && b.is_negative()) return -structure_constant(-a, -b);
    // N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b) with a + b + c = 0
    Root c = -s;
    const int cc = rs_.inner(c, c);
    if (same_sign(b, c)) return cc * structure_constant(b, c) / rs_.inner(a, a);
    return cc * structure_constant(c, a) / rs_.inner(b, b);
}

BasisSymbol ChevalleyTable::symbol(std::size_t b) const {
    const auto ell = static_cast<std::size_t>(rs_.rank());
    if (b >= dim_) throw std::out_of_range("basis index out of range");
    if (b < t_) return {SymbolKind::lowering, b};
    if (b < t_ + ell) return {SymbolKind::cartan, b - t_};
    return {SymbolKind::raising, b - t_ - ell};
}

std::string ChevalleyTable::symbol_name(std::size_t b) const {
    BasisSymbol s = symbol(b);
    switch (s.kind) {
        case SymbolKind::lowering: return "y" + to_string(rs_.positive_root(s.index));
        case SymbolKind::raising: return "x" + to_string(rs_.positive_root(s.index));
        case SymbolKind::cartan: break;
    }
    return "h[" + std::to_string(s.index + 1) + "]";
}

std::size_t ChevalleyTable::root_vector(const Root& r) const {
    if (auto k = rs_.positive_index(r)) return x_index(*k);
    if (auto k = rs_.positive_index(-r)) return y_index(*k);
    throw std::invalid_argument("not a root: " + to_string(r));
}

Root ChevalleyTable::weight_of(std::size_t b) const {
    BasisSymbol s = symbol(b);
    switch (s.kind) {
        case SymbolKind::lowering: return -rs_.positive_root(s.index);
        case SymbolKind::raising: return rs_.positive_root(s.index);
        case SymbolKind::cartan: break;
    }
    return Root(IntVec(static_cast<std::size_t>(rs_.rank()), 0));
}

// ---- LieElement -----------------------------------------------------------

LieElement LieElement::zero(const ChevalleyTable& ct) { return LieElement{ct.label(), RationalVector(ct.dim())}; }

LieElement LieElement::basis(const ChevalleyTable& ct, std::size_t b, const Rational& c) {
    LieElement e = zero(ct);
    e.coeffs.at(b) = c;
    return e;
}

bool LieElement::is_zero() const { return cato::is_zero(coeffs); }

bool LieElement::is_integral() const {
    for (const auto& c : coeffs)
        if (!is_integer(c)) return false;
    return true;
}

std::vector<std::size_t> LieElement::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) s.push_back(i);
    return s;
}

LieElement& LieElement::operator+=(const LieElement& o) {
    if (algebra != o.algebra || coeffs.size() != o.coeffs.size()) throw std::invalid_argument("Lie elements of different algebras");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    if (algebra != o.algebra || coeffs.size() != o.coeffs.size()) throw std::invalid_argument("Lie elements of different algebras");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
}

LieElement operator*(const Rational& s, LieElement a) {
    for (auto& c : a.coeffs) c *= s;
    return a;
}

LieElement LieElement::operator-() const { return Rational(-1) * *this; }

ChevalleyTable build_table(const RootSystem& rs) { return ChevalleyTable(rs); }

LieElement bracket(const ChevalleyTable& ct, const LieElement& a, const LieElement& b) {
    if (a.algebra != ct.label() || b.algebra != ct.label() || a.coeffs.size() != ct.dim() || b.coeffs.size() != ct.dim())
        throw std::invalid_argument("bracket: operands do not belong to this table");
    LieElement out = LieElement::zero(ct);
    for (std::size_t i = 0; i < ct.dim(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < ct.dim(); ++j) {
            if (b.coeffs[j] == 0) continue;
            Rational s = a.coeffs[i] * b.coeffs[j];
            for (const auto& [k, c] : ct.bracket_basis(i, j)) out.coeffs[k] += s * c;
        }
    }
    return out;
}

LieElement divided_ad_power(const ChevalleyTable& ct, const Root& beta, int i, const LieElement& z) {
    if (i < 0) throw std::invalid_argument("divided_ad_power: negative exponent");
    LieElement e = LieElement::basis(ct, ct.root_vector(beta));
    LieElement w = z;
    for (int k = 1; k <= i && !w.is_zero(); ++k) w = bracket(ct, e, w);
    w = (1 / factorial(static_cast<unsigned>(i))) * w;
    if (z.is_integral() && !w.is_integral()) throw std::logic_error("divided ad-power left the integral form");
    return w;
}

Matrix ad_matrix(const ChevalleyTable& ct, const LieElement& z) {
    Matrix m(ct.dim(), ct.dim());
    for (std::size_t j = 0; j < ct.dim(); ++j) {
        LieElement col = bracket(ct, z, LieElement::basis(ct, j));
        for (std::size_t i = 0; i < ct.dim(); ++i) m(i, j) = col.coeffs[i];
    }
    return m;
}

StringUnitConstant k0_and_unit(const ChevalleyTable& ct, int alpha, const Root& gamma, unsigned long p) {
    const RootSystem& rs = ct.roots();
    PrimeHypothesis hyp = prime_hypothesis(rs.label(), p);
    if (!hyp.ok) throw std::invalid_argument("prime hypothesis violated: " + hyp.violated);
    if (alpha < 0 || alpha >= rs.rank()) throw std::invalid_argument("simple index out of range");
    const Root a = rs.simple_root(alpha);
    if (!gamma.is_positive() || !rs.is_root(gamma) || !rs.positive_index(gamma - a))
        throw std::invalid_argument("k0_and_unit: requires gamma and gamma - alpha in Phi^+");
    StringUnitConstant out;
    while (rs.positive_index(gamma - (out.k0 + 1) * a)) ++out.k0;
    LieElement w = LieElement::basis(ct, ct.root_vector(-gamma));
    LieElement x = LieElement::basis(ct, ct.root_vector(a));
    for (int k = 0; k < out.k0; ++k) w = bracket(ct, x, w);
    const Rational& coef = w.coeffs[ct.root_vector(-(gamma - out.k0 * a))];
    Rational c = coef / factorial(static_cast<unsigned>(out.k0));
    out.c = static_cast<long>(to_int64(c));
    if (out.c == 0 || valuation(c, p) != 0) throw std::logic_error("sublemma constant is not a p-adic unit");
    return out;
}

std::size_t jacobi_failures(const ChevalleyTable& ct) {
    const std::size_t n = ct.dim();
    std::size_t failures = 0;
    auto br = [&](std::size_t a, const std::vector<long>& v) {
        std::vector<long> out(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (!v[j]) continue;
            for (const auto& [k, c] : ct.bracket_basis(a, j)) out[k] += c * v[j];
        }
        return out;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                // [a,[b,c]] + [b,[c,a]] + [c,[a,b]]
                std::vector<long> total(n, 0);
                auto unit = [&](std::size_t i) {
                    std::vector<long> v(n, 0);
                    v[i] = 1;
                    return v;
                };
                auto add = [&](const std::vector<long>& v) {
                    for (std::size_t i = 0; i < n; ++i) total[i] += v[i];
                };
                add(br(a, br(b, unit(c))));
                add(br(b, br(c, unit(a))));
                add(br(c, br(a, unit(b))));
                for (long v : total)
                    if (v) {
                        ++failures;
                        break;
                    }
            }
    return failures;
}

}  // namespace cato
