#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cato/rational.hpp"

namespace cato {

/// Largest rank accepted for any type; Weyl groups are materialized up to here.
inline constexpr int kMaxRank = 4;

using IntVec = std::vector<int>;

/// Irreducible Cartan type, e.g. {'G', 2}. Simple roots follow Bourbaki numbering.
struct TypeLabel {
    char family = 'A';
    int rank = 1;

    /// Accepts A1..A4, B2..B4, C3, C4, D4, F4, G2; throws std::invalid_argument otherwise.
    static TypeLabel parse(std::string_view text);
    std::string str() const;

    auto operator<=>(const TypeLabel&) const = default;
};

/// A root-lattice element in simple-root coordinates.
struct Root {
    IntVec coords;

    Root() = default;
    explicit Root(IntVec c) : coords(std::move(c)) {}

    std::size_t size() const { return coords.size(); }
    int operator[](std::size_t i) const { return coords[i]; }
    int height() const;
    bool is_zero() const;
    bool is_positive() const;  ///< non-zero with all coordinates >= 0
    bool is_negative() const;

    Root operator-() const;
    friend Root operator+(const Root& a, const Root& b);
    friend Root operator-(const Root& a, const Root& b);
    friend Root operator*(int k, const Root& a);

    auto operator<=>(const Root&) const = default;
};

/// A weight given by its pairings <lambda, alpha_i^vee> with the simple coroots.
struct Weight {
    RationalVector coroot_coords;

    Weight() = default;
    explicit Weight(RationalVector c) : coroot_coords(std::move(c)) {}
    std::size_t size() const { return coroot_coords.size(); }
    bool operator==(const Weight&) const = default;
};

/// Subset I of simple-root indices (0-based, sorted).
struct ParabolicSubset {
    std::vector<int> simple;

    bool contains(int i) const;
    bool operator==(const ParabolicSubset&) const = default;
};

struct RootString {
    int down = 0;  ///< r: gamma - r*beta is the bottom of the string
    int up = 0;    ///< q: gamma + q*beta is the top of the string
};

class RootSystem {
public:
    const TypeLabel& label() const { return label_; }
    int rank() const { return rank_; }
    /// a_ij = <alpha_j, alpha_i^vee>
    int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const std::vector<IntVec>& cartan_matrix() const { return cartan_; }

    /// Positive roots ordered by height, then lexicographically descending; simple roots first.
    const std::vector<Root>& positive_roots() const { return positive_; }
    std::size_t num_positive() const { return positive_.size(); }
    const Root& positive_root(std::size_t k) const { return positive_[k]; }

    Root simple_root(int i) const;
    const Root& highest_root() const { return positive_.back(); }
    Weight rho() const;

    std::optional<std::size_t> positive_index(const Root& r) const;
    bool is_root(const Root& r) const;

    /// <v, alpha_i^vee> for a root-lattice vector.
    int pairing(const Root& v, int i) const;
    /// <lambda, alpha_i^vee> read off the coroot coordinates.
    const Rational& pairing(const Weight& w, int i) const;
    /// <v, beta^vee> = 2 (v, beta) / (beta, beta) for a root beta.
    int pairing(const Root& v, const Root& beta) const;

    /// Symmetric form normalized so that short roots have (a, a) = 2.
    int inner(const Root& a, const Root& b) const;

    /// Simple-reflection action s_i(v) = v - <v, alpha_i^vee> alpha_i.
    Root reflect(int i, const Root& v) const;

    /// Coroot coordinates of a root-lattice vector.
    Weight to_weight(const Root& v) const;

    /// Coefficients c_i with beta^vee = sum_i c_i alpha_i^vee.
    IntVec coroot_expansion(const Root& beta) const;

    /// Indices of Phi_I^+ in positive_roots().
    std::vector<std::size_t> levi_positive(const ParabolicSubset& I) const;
    bool in_levi(const Root& beta, const ParabolicSubset& I) const;

    friend RootSystem build_root_system(const TypeLabel& label);

private:
    TypeLabel label_;
    int rank_ = 0;
    std::vector<IntVec> cartan_;
    std::vector<Root> positive_;
    std::map<IntVec, std::size_t> index_;
    IntVec sym_;  ///< (alpha_i, alpha_i) / 2
};

/// Standard Cartan matrix for the label, a_ij = <alpha_j, alpha_i^vee>.
std::vector<IntVec> cartan_matrix(const TypeLabel& label);

RootSystem build_root_system(const TypeLabel& label);
RootSystem build_root_system(std::string_view label);

/// The beta-string through gamma. Throws std::invalid_argument when the two
/// are proportional or either is not a root.
RootString root_string(const RootSystem& rs, const Root& beta, const Root& gamma);

/// I = { i : <lambda, alpha_i^vee> is a non-negative integer }.
ParabolicSubset max_parabolic_subset(const RootSystem& rs, const Weight& lambda);

/// Lexicographic order on coefficient vectors; throws on length mismatch.
std::strong_ordering lex_compare(std::span<const int> a, std::span<const int> b);

/// Elements of S not lying in the closed cone spanned by the other elements.
std::vector<Root> extremal_elements(const std::vector<Root>& S);

/// All nu in Z_{>=0}^t with sum_i nu_i beta_i = target, in a fixed order
/// (exponent of the first root descending, recursively).
std::vector<IntVec> compositions_of(const RootSystem& rs, const Root& target);

/// The index set of relations n*gamma = sum nu_i beta_i.
std::vector<IntVec> enumerate_compositions(const RootSystem& rs, const Root& gamma, int n);

/// Smallest sum(nu) over nu in compositions_of(rs, target), with one minimizer.
struct MinimalComposition {
    int parts = 0;
    IntVec nu;
};
std::optional<MinimalComposition> minimal_composition(const RootSystem& rs, const Root& target);

/// A violation of the root conditions used when lowering gamma = alpha + beta:
/// (i-1)beta - (j+1)alpha or i beta - (j+1)alpha is a negative root or zero.
struct StringDifferenceViolation {
    Root gamma, alpha, beta;
    int i = 0, j = 0;
    Root offender;
};
std::vector<StringDifferenceViolation> string_difference_violations(const RootSystem& rs);

// ---- Weyl group -----------------------------------------------------------

/// A Weyl group element stored as a reduced word w = s_{i1} ... s_{ik} and
/// its matrix on simple-root coordinates (row-major, rank x rank).
struct WeylElement {
    std::vector<int> word;
    IntVec matrix;
};

/// All elements of W, in breadth-first (length) order. Throws if rank > kMaxRank.
std::vector<WeylElement> weyl_group(const RootSystem& rs);

/// Elements of W_I generated by s_i, i in I.
std::vector<WeylElement> parabolic_subgroup(const RootSystem& rs, const ParabolicSubset& I);

Root apply_word(const RootSystem& rs, std::span<const int> word, const Root& v);
Root apply_inverse_word(const RootSystem& rs, std::span<const int> word, const Root& v);

/// For w not in W_I, a root beta in Phi^+ \ Phi_I^+ with w^{-1} beta < 0 (the
/// first such in root order); nothing if none exists.
std::optional<Root> weyl_coset_witness(const RootSystem& rs, std::span<const int> word, const ParabolicSubset& I);

std::string to_string(const Root& r);

/// Residue-characteristic restriction: p > 2 for types B, C, F4 and p > 3 for G2.
struct PrimeHypothesis {
    bool ok = true;
    std::string violated;  ///< empty when ok
};
PrimeHypothesis prime_hypothesis(const TypeLabel& label, unsigned long p);

/// The non-zero values <beta, alpha^vee> over roots alpha != +-beta, sorted.
std::vector<int> nonzero_root_pairings(const RootSystem& rs);

}  // namespace cato
