#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cato/linalg.hpp"
#include "cato/rational.hpp"
#include "cato/rootsys.hpp"

namespace cato {

enum class SymbolKind { lowering, cartan, raising };

/// A basis symbol: y_beta (lowering), h_i (cartan) or x_beta (raising).
/// For root symbols `index` is a position in positive_roots(); for h it is a simple index.
struct BasisSymbol {
    SymbolKind kind = SymbolKind::cartan;
    std::size_t index = 0;
};

/// Sparse integer combination of basis indices.
using IntCombination = std::vector<std::pair<std::size_t, long>>;

/// Chevalley basis of the derived algebra with integral structure constants.
///
/// Basis order: y_{beta_1..beta_t}, h_1..h_l, x_{beta_1..beta_t}. The same order
/// is the canonical factor order of PBW monomials.
///
/// Signs follow the extraspecial-pair convention: for each non-simple positive
/// root xi, the pair (gamma, delta) with gamma of smallest index and gamma + delta = xi
/// gets N = +(r+1); everything else is forced by the Jacobi identity.
class ChevalleyTable {
public:
    explicit ChevalleyTable(RootSystem rs);

    const RootSystem& roots() const { return rs_; }
    const TypeLabel& label() const { return rs_.label(); }
    std::size_t dim() const { return dim_; }
    std::size_t num_positive() const { return t_; }
    int rank() const { return rs_.rank(); }

    std::size_t y_index(std::size_t k) const { return k; }
    std::size_t h_index(int i) const { return t_ + static_cast<std::size_t>(i); }
    std::size_t x_index(std::size_t k) const { return t_ + static_cast<std::size_t>(rs_.rank()) + k; }

    BasisSymbol symbol(std::size_t b) const;
    /// "x[1,1]", "y[0,1]", "h[1]" (h is 1-based).
    std::string symbol_name(std::size_t b) const;

    /// x_beta for a positive root, y_{-beta} for a negative one; throws on non-roots.
    std::size_t root_vector(const Root& signed_root) const;
    /// Weight of a basis element in the root lattice (0 for h).
    Root weight_of(std::size_t b) const;

    /// N_{a,b} with [e_a, e_b] = N_{a,b} e_{a+b}; zero when a+b is not a root.
    long structure_constant(const Root& a, const Root& b) const;

    /// [e_a, e_b] for basis indices.
    const IntCombination& bracket_basis(std::size_t a, std::size_t b) const { return table_[a * dim_ + b]; }

private:
    long positive_constant(std::size_t a, std::size_t b) const;

    RootSystem rs_;
    std::size_t t_ = 0;
    std::size_t dim_ = 0;
    std::vector<long> npos_;  ///< t x t, N for pairs of positive roots
    std::vector<IntCombination> table_;
};

ChevalleyTable build_table(const RootSystem& rs);

/// Finitely supported element of the Lie algebra with rational coefficients.
struct LieElement {
    TypeLabel algebra;
    RationalVector coeffs;

    static LieElement zero(const ChevalleyTable& ct);
    static LieElement basis(const ChevalleyTable& ct, std::size_t b, const Rational& c = 1);

    bool is_zero() const;
    bool is_integral() const;
    std::vector<std::size_t> support() const;

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const Rational& s, LieElement a);
    LieElement operator-() const;
    bool operator==(const LieElement&) const = default;
};

/// Bilinear extension of the table; throws if either operand belongs to another algebra.
LieElement bracket(const ChevalleyTable& ct, const LieElement& a, const LieElement& b);

/// (1/i!) ad(e_beta)^i (z), e_beta = x_beta for beta > 0 and y_{-beta} for beta < 0.
/// Throws std::logic_error if z is integral and the result is not.
LieElement divided_ad_power(const ChevalleyTable& ct, const Root& beta, int i, const LieElement& z);

/// Matrix of ad(z) on the basis (column j is [z, e_j]).
Matrix ad_matrix(const ChevalleyTable& ct, const LieElement& z);

struct StringUnitConstant {
    int k0 = 0;
    long c = 0;  ///< ad(x_alpha)^{k0}(y_gamma) = k0! c y_{gamma - k0 alpha}
};

/// k0 = max{k : gamma - k alpha in Phi^+} and the constant c, asserted to be a p-unit.
/// Requires gamma - alpha in Phi^+; throws std::invalid_argument when the prime
/// restriction for the type is violated (naming it).
StringUnitConstant k0_and_unit(const ChevalleyTable& ct, int alpha, const Root& gamma, unsigned long p);

/// Exhaustive Jacobi check over all basis triples; returns the number of failing triples.
std::size_t jacobi_failures(const ChevalleyTable& ct);

}  // namespace cato
