#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "cato/chevalley.hpp"

namespace cato {

/// Ordered PBW monomial: exponents over the Chevalley basis in its canonical
/// order (y-block, h-block, x-block).
struct PBWMonomial {
    IntVec exps;

    PBWMonomial() = default;
    explicit PBWMonomial(IntVec e) : exps(std::move(e)) {}
    static PBWMonomial unit(const ChevalleyTable& ct) { return PBWMonomial(IntVec(ct.dim(), 0)); }
    static PBWMonomial from_parts(const ChevalleyTable& ct, const IntVec& neg, const IntVec& cartan, const IntVec& pos);

    IntVec neg_exps(const ChevalleyTable& ct) const;
    IntVec cartan_exps(const ChevalleyTable& ct) const;
    IntVec pos_exps(const ChevalleyTable& ct) const;
    int degree() const;
    bool is_unit() const { return degree() == 0; }

    auto operator<=>(const PBWMonomial&) const = default;
};

/// "y[0,1]^2 h[1]^1 x[1,1]^3"; the empty monomial prints as "1".
std::string to_string(const ChevalleyTable& ct, const PBWMonomial& m);

/// Sum of pos_exps * beta minus sum of neg_exps * beta.
Root monomial_weight(const ChevalleyTable& ct, const PBWMonomial& m);

/// Finite linear combination of ordered monomials with exact coefficients.
struct PBWElement {
    TypeLabel algebra;
    std::map<PBWMonomial, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const PBWMonomial& m, const Rational& c);
    PBWElement& operator+=(const PBWElement& o);
    PBWElement& operator-=(const PBWElement& o);
    friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
    friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
    friend PBWElement operator*(const Rational& s, PBWElement a);
    bool operator==(const PBWElement&) const = default;
};

std::string to_string(const ChevalleyTable& ct, const PBWElement& e);

/// U(g) over the rationals with canonical-form multiplication. Left
/// multiplication by a generator is memoized; the cache is guarded so one
/// algebra may be shared between threads.
class PBWAlgebra {
public:
    explicit PBWAlgebra(ChevalleyTable ct) : ct_(std::move(ct)) {}

    const ChevalleyTable& table() const { return ct_; }

    PBWElement zero() const { return PBWElement{ct_.label(), {}}; }
    PBWElement one() const;
    PBWElement generator(std::size_t g) const;
    PBWElement from_lie(const LieElement& z) const;

    /// e_g * m in canonical form.
    PBWElement left_multiply(std::size_t g, const PBWMonomial& m) const;
    PBWElement left_multiply(std::size_t g, const PBWElement& e) const;
    PBWElement left_multiply(const LieElement& z, const PBWElement& e) const;
    PBWElement multiply(const PBWElement& a, const PBWElement& b) const;
    PBWElement power(const PBWElement& a, int k) const;

    /// The canonical form of the product of the word's generators.
    PBWElement normal_order(std::span<const std::size_t> word) const;

    std::size_t cache_size() const;

private:
    const std::map<PBWMonomial, Rational>& left_cached(std::size_t g, const PBWMonomial& m) const;

    ChevalleyTable ct_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<std::size_t, IntVec>, std::map<PBWMonomial, Rational>> cache_;
};

/// ad(x)^k as an operator on U(g): [x^{[k]}, a].
PBWElement ad_power(const PBWAlgebra& alg, std::size_t x, int k, const PBWElement& a);

/// Checks both expansions of x^k z_1...z_n and [x^{[k]}, z_1...z_n] by
/// comparing canonical forms of each side.
bool ad_power_identity_check(const PBWAlgebra& alg, std::size_t x, std::span<const std::size_t> z_word, int k);

}  // namespace cato
