#include "cato/nilexp.hpp"

#include <algorithm>
#include <stdexcept>

#include "cato/integrality.hpp"

namespace cato {

namespace {

// Bernoulli numbers B_0..B_m (B_1 = -1/2).
std::vector<Rational> bernoulli(int m) {
    std::vector<Rational> b(static_cast<std::size_t>(m + 1));
    b[0] = 1;
    for (int n = 1; n <= m; ++n) {
        Rational s = 0;
        Rational binom = 1;  // C(n+1, k)
        for (int k = 0; k < n; ++k) {
            s += binom * b[static_cast<std::size_t>(k)];
            binom = binom * (n + 1 - k) / (k + 1);
        }
        b[static_cast<std::size_t>(n)] = -s / (n + 1);
    }
    return b;
}

void require_nilradical(const ChevalleyTable& ct, const LieElement& z, const ParabolicSubset& I) {
    if (!in_nilradical(ct, z, I)) throw std::invalid_argument("support outside u_P^-");
}

}  // namespace

bool in_nilradical(const ChevalleyTable& ct, const LieElement& z, const ParabolicSubset& I) {
    if (z.algebra != ct.label()) throw std::invalid_argument("Lie element of another algebra");
    for (std::size_t b : z.support()) {
        BasisSymbol s = ct.symbol(b);
        if (s.kind != SymbolKind::lowering) return false;
        if (ct.roots().in_levi(ct.roots().positive_roots()[s.index], I)) return false;
    }
    return true;
}

UnipotentElement make_unipotent(const ChevalleyTable& ct, const LieElement& z, const ParabolicSubset& I) {
    require_nilradical(ct, z, I);
    return UnipotentElement{z, I};
}

LieElement bch(const ChevalleyTable& ct, const LieElement& x, const LieElement& y, const ParabolicSubset& I) {
    require_nilradical(ct, x, I);
    require_nilradical(ct, y, I);
    const int cls = ct.roots().highest_root().height();
    const std::vector<Rational> B = bernoulli(cls);
    const LieElement s = x + y;
    const LieElement d = x - y;
    std::vector<LieElement> Z(static_cast<std::size_t>(cls + 1), LieElement::zero(ct));
    Z[1] = s;
    for (int n = 1; n < cls; ++n) {
        // S[m][k]: sum over compositions k = k_1 + ... + k_m of [Z_k1, [..., [Z_km, x + y]]]
        std::vector<std::vector<LieElement>> S(static_cast<std::size_t>(n + 1),
                                               std::vector<LieElement>(static_cast<std::size_t>(n + 1), LieElement::zero(ct)));
        S[0][0] = s;
        for (int m = 1; m <= n; ++m)
            for (int k = m; k <= n; ++k)
                for (int j = 1; j <= k - m + 1; ++j)
                    S[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] +=
                        bracket(ct, Z[static_cast<std::size_t>(j)], S[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k - j)]);
        LieElement next = Rational(1, 2) * bracket(ct, d, Z[static_cast<std::size_t>(n)]);
        for (int q = 1; 2 * q <= n; ++q)
            next += (B[static_cast<std::size_t>(2 * q)] / factorial(static_cast<unsigned>(2 * q))) *
                    S[static_cast<std::size_t>(2 * q)][static_cast<std::size_t>(n)];
        Z[static_cast<std::size_t>(n + 1)] = Rational(1, n + 1) * next;
    }
    LieElement out = LieElement::zero(ct);
    for (int n = 1; n <= cls; ++n) out += Z[static_cast<std::size_t>(n)];
    return out;
}

UnipotentElement multiply(const ChevalleyTable& ct, const UnipotentElement& a, const UnipotentElement& b) {
    if (!(a.I == b.I)) throw std::invalid_argument("unipotent elements for different parabolics");
    return UnipotentElement{bch(ct, a.log, b.log, a.I), a.I};
}

UnipotentElement inverse(const UnipotentElement& u) { return UnipotentElement{-u.log, u.I}; }

LieElement ad_conjugate(const ChevalleyTable& ct, const UnipotentElement& u, const LieElement& x) {
    const LieElement z = -u.log;
    LieElement term = x;
    LieElement out = x;
    for (int k = 1; !term.is_zero(); ++k) {
        term = Rational(1, k) * bracket(ct, z, term);
        out += term;
    }
    return out;
}

FormalVector delta_action(const TruncatedModule& M, const UnipotentElement& u, const FormalVector& v) {
    FormalVector out = v;
    FormalVector term = v;
    for (int n = 1; !term.is_zero(); ++n) {
        term = Rational(1, n) * M.act(u.log, term, Overflow::drop);
        out += term;
    }
    return out;
}

FormalVector sigma_series(const UnipotentElement& u, const TruncatedModule& M) {
    return delta_action(M, inverse(u), M.highest_weight_vector());
}

Rational log_coefficient(const ChevalleyTable& ct, const UnipotentElement& u, const Root& beta) {
    auto k = ct.roots().positive_index(beta);
    if (!k) throw std::invalid_argument("not a positive root: " + to_string(beta));
    return u.log.coeffs[ct.y_index(*k)];
}

BSets b_sets(const ChevalleyTable& ct, const UnipotentElement& u, int scale_exp, unsigned long p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not a prime");
    BSets out;
    for (std::size_t k = 0; k < ct.num_positive(); ++k) {
        const Rational& c = u.log.coeffs[ct.y_index(k)];
        if (c == 0) continue;
        const Root& beta = ct.roots().positive_roots()[k];
        out.B.push_back(beta);
        (valuation(c, p) < scale_exp ? out.B_plus : out.B_prime).push_back(beta);
    }
    return out;
}

std::optional<int> ht_prime(const ChevalleyTable& ct, const UnipotentElement& u, int scale_exp, unsigned long p) {
    BSets s = b_sets(ct, u, scale_exp, p);
    std::optional<int> h;
    for (const Root& b : s.B_prime) h = h ? std::min(*h, b.height()) : b.height();
    return h;
}

ReductionOutcome reduction_step(const ChevalleyTable& ct, const UnipotentElement& u, int scale_exp, unsigned long p) {
    BSets s = b_sets(ct, u, scale_exp, p);
    if (s.B_plus.empty()) throw std::invalid_argument("B+(u) is empty: u is integral at this scale");
    LieElement zp = LieElement::zero(ct);
    for (const Root& b : s.B_prime) {
        std::size_t g = ct.y_index(*ct.roots().positive_index(b));
        zp += LieElement::basis(ct, g, u.log.coeffs[g]);
    }
    ReductionOutcome out;
    out.next = UnipotentElement{bch(ct, u.log, -zp, u.I), u.I};
    out.branch = out.next.log == u.log - zp ? ReductionBranch::brackets_vanish : ReductionBranch::height_raised;
    return out;
}

std::optional<Root> extremal_beta_plus(const ChevalleyTable& ct, const UnipotentElement& u) {
    std::vector<Root> B;
    for (std::size_t k = 0; k < ct.num_positive(); ++k)
        if (u.log.coeffs[ct.y_index(k)] != 0) B.push_back(ct.roots().positive_roots()[k]);
    std::vector<Root> ext = extremal_elements(B);
    if (ext.empty()) return std::nullopt;
    return *std::min_element(ext.begin(), ext.end(), [](const Root& a, const Root& b) { return lex_compare(a.coords, b.coords) < 0; });
}

std::vector<LedgerEntry> coefficient_valuations(const UnipotentElement& u, const Root& beta_plus, const TruncatedModule& M,
                                                unsigned long p) {
    const ChevalleyTable& ct = M.table();
    std::vector<Root> B;
    for (std::size_t k = 0; k < ct.num_positive(); ++k)
        if (u.log.coeffs[ct.y_index(k)] != 0) B.push_back(ct.roots().positive_roots()[k]);
    std::vector<Root> ext = extremal_elements(B);
    if (std::find(ext.begin(), ext.end(), beta_plus) == ext.end())
        throw std::invalid_argument("beta_plus is not extremal in B(u)");
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not a prime");
    const std::size_t k = *ct.roots().positive_index(beta_plus);
    const FormalVector sigma = sigma_series(u, M);
    std::vector<LedgerEntry> ledger;
    IntVec nu(ct.num_positive(), 0);
    for (int n = 0; n * beta_plus.height() <= M.depth(); ++n) {
        nu[k] = n;
        const Root off = n * beta_plus;
        FormalVector w = M.act_monomial(nu, M.highest_weight_vector());
        const RationalVector* wc = w.component(off);
        const RationalVector* sc = sigma.component(off);
        if (!wc || is_zero(*wc)) throw std::logic_error("y_beta^n v+ vanishes at offset " + to_string(off));
        const RationalVector sv = sc ? *sc : RationalVector(wc->size(), Rational(0));
        std::size_t j = 0;
        while ((*wc)[j] == 0) ++j;
        const Rational s = sv[j] / (*wc)[j];
        if (!is_zero(add(sv, scale(-s, *wc)))) throw std::logic_error("sigma component is not a multiple of y_beta^n v+");
        if (s == 0) throw std::logic_error("vanishing sigma coefficient");
        ledger.push_back(LedgerEntry{n, valuation(s, p)});
    }
    return ledger;
}

}  // namespace cato
