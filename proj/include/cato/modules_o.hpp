#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cato/chevalley.hpp"
#include "cato/linalg.hpp"
#include "cato/pbw.hpp"
#include "cato/rootsys.hpp"

namespace cato {

inline constexpr int kDefaultDepth = 8;
inline constexpr int kDefaultDepthCap = 10;

/// The depth cap: kDefaultDepthCap unless CATO_DEPTH_CAP is set.
int depth_cap();

enum class ModuleKind { verma, simple };

std::string to_string(ModuleKind k);

/// What to do when an action leaves the retained depth.
enum class Overflow { reject, drop };

/// Element of the truncated formal completion: offset (simple-root coordinates
/// of lambda - weight) -> coordinates in that weight space.
struct FormalVector {
    std::map<IntVec, RationalVector> components;

    bool is_zero() const;
    const RationalVector* component(const Root& offset) const;
    void add(const Root& offset, const RationalVector& v);
    FormalVector& operator+=(const FormalVector& o);
    friend FormalVector operator+(FormalVector a, const FormalVector& b) { return a += b; }
    friend FormalVector operator*(const Rational& s, FormalVector a);
    /// Equality after discarding zero components.
    bool equals(const FormalVector& o) const;
};

/// Verma module M(lambda) or its simple quotient L(lambda), truncated to
/// offsets of height <= depth. Basis vectors of each weight space are labelled
/// by y-exponent vectors nu (the vector y_1^{nu_1} ... y_t^{nu_t} v+); for
/// L(lambda) the labels are the monomials whose images form the chosen basis.
class TruncatedModule {
public:
    ModuleKind kind() const { return kind_; }
    const Weight& lambda() const { return lambda_; }
    int depth() const { return depth_; }
    const ChevalleyTable& table() const { return *ct_; }
    const RootSystem& roots() const { return ct_->roots(); }

    /// Non-negative coordinates and height <= depth.
    bool retained(const Root& offset) const;
    /// 0 for offsets with a negative coordinate; throws std::out_of_range beyond depth.
    std::size_t dim(const Root& offset) const;
    /// All retained offsets, by height then lexicographically descending.
    std::vector<Root> offsets() const;
    const std::vector<IntVec>& basis(const Root& offset) const;
    /// Matrix of basis element g from `offset` to `offset - weight(g)`.
    /// Throws std::out_of_range when the target lies beyond depth.
    const Matrix& action(std::size_t g, const Root& offset) const;
    bool action_defined(std::size_t g, const Root& offset) const;

    Weight weight_at(const Root& offset) const;

    FormalVector highest_weight_vector() const;
    FormalVector act(std::size_t g, const FormalVector& v, Overflow policy = Overflow::reject) const;
    FormalVector act(const LieElement& z, const FormalVector& v, Overflow policy = Overflow::reject) const;
    /// (y_1^{nu_1} ... y_t^{nu_t}) . v
    FormalVector act_monomial(const IntVec& nu, const FormalVector& v, Overflow policy = Overflow::reject) const;

    friend TruncatedModule build_verma(const Weight& lambda, int depth, const ChevalleyTable& ct);
    friend TruncatedModule simple_quotient(const Weight& lambda, int depth, const ChevalleyTable& ct);
    friend TruncatedModule simple_quotient(const TruncatedModule& verma);

private:
    struct Space {
        std::vector<IntVec> basis;
        std::vector<std::optional<Matrix>> act;  ///< per generator; empty when the target is beyond depth
    };
    const Space& space(const Root& offset) const;

    ModuleKind kind_ = ModuleKind::verma;
    Weight lambda_;
    int depth_ = 0;
    std::shared_ptr<const ChevalleyTable> ct_;
    std::map<IntVec, Space> spaces_;
};

TruncatedModule build_verma(const Weight& lambda, int depth, const ChevalleyTable& ct);
TruncatedModule simple_quotient(const Weight& lambda, int depth, const ChevalleyTable& ct);
TruncatedModule simple_quotient(const TruncatedModule& verma);

/// The offset kappa with lambda - mu = kappa in the root lattice, if any.
std::optional<Root> weight_offset(const RootSystem& rs, const Weight& mu, const Weight& lambda);
/// The weight lambda - kappa.
Weight shift_weight(const RootSystem& rs, const Weight& lambda, const Root& kappa);

/// Vectors of weight mu killed by every raising operator, as a basis of that weight space.
/// Throws if lambda - mu is not a non-negative root-lattice combination or lies beyond depth.
std::vector<RationalVector> singular_vectors(const TruncatedModule& M, const Weight& mu);

/// s_i . lambda = s_i(lambda + rho) - rho.
Weight dot_action(const RootSystem& rs, int i, const Weight& lambda);
/// s_beta . lambda for a positive root beta.
Weight dot_reflect(const RootSystem& rs, const Root& beta, const Weight& lambda);

/// mu is obtained from lambda by a chain of reflection dot-actions, each step
/// lowering the weight by a positive multiple of the reflecting root (strong linkage).
bool up_ordering(const RootSystem& rs, const Weight& mu, const Weight& lambda);
/// The same closure restricted to simple reflections.
bool up_ordering_simple(const RootSystem& rs, const Weight& mu, const Weight& lambda);

/// dim Hom(M(mu), M(lambda)) read off the singular vectors of M(lambda) at weight mu.
int hom_dim_verma(const Weight& mu, const Weight& lambda, int depth, const ChevalleyTable& ct);
int hom_dim_verma(const TruncatedModule& verma, const Weight& mu);

struct LocAnCharacter {
    Weight weight;
    std::string smooth_tag;
};

bool up_ordering_la(const RootSystem& rs, const LocAnCharacter& mu, const LocAnCharacter& lambda);

/// y_{alpha_i} is nilpotent on v+ within depth.
bool local_finiteness_check(const TruncatedModule& L, int i);

/// y_gamma is injective on every weight space of height <= depth_used - ht(gamma).
bool injectivity_check(const TruncatedModule& L, const Root& gamma, int depth_used);

}  // namespace cato
