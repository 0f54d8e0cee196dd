#pragma once

#include <optional>
#include <vector>

#include "cato/chevalley.hpp"
#include "cato/modules_o.hpp"
#include "cato/rootsys.hpp"

namespace cato {

/// u in U_P^- stored through log u, which lies in the span of y_beta, beta in Phi^+ \ Phi_I^+.
struct UnipotentElement {
    LieElement log;
    ParabolicSubset I;
};

/// Throws std::invalid_argument when z has support outside u_P^-.
UnipotentElement make_unipotent(const ChevalleyTable& ct, const LieElement& z, const ParabolicSubset& I = {});

/// z lies in the span of y_beta with beta outside Phi_I.
bool in_nilradical(const ChevalleyTable& ct, const LieElement& z, const ParabolicSubset& I = {});

/// log(exp x exp y) by the Varadarajan recursion, exact up to the nilpotency class.
/// Both arguments must lie in u_P^- (the default I is empty, i.e. n^-).
LieElement bch(const ChevalleyTable& ct, const LieElement& x, const LieElement& y, const ParabolicSubset& I = {});

UnipotentElement multiply(const ChevalleyTable& ct, const UnipotentElement& a, const UnipotentElement& b);
UnipotentElement inverse(const UnipotentElement& u);

/// Ad(u^{-1})(x) = sum_k (1/k!) ad(-log u)^k (x).
LieElement ad_conjugate(const ChevalleyTable& ct, const UnipotentElement& u, const LieElement& x);

/// delta_u . v = sum_n (1/n!) (log u)^n . v, components beyond depth dropped.
FormalVector delta_action(const TruncatedModule& M, const UnipotentElement& u, const FormalVector& v);

/// sum_n (1/n!) (-log u)^n . v+ in the truncated completion.
FormalVector sigma_series(const UnipotentElement& u, const TruncatedModule& M);

/// Coefficient of y_beta in log u.
Rational log_coefficient(const ChevalleyTable& ct, const UnipotentElement& u, const Root& beta);

struct BSets {
    std::vector<Root> B;
    std::vector<Root> B_plus;   ///< v_p(coefficient) < scale_exp
    std::vector<Root> B_prime;
};

BSets b_sets(const ChevalleyTable& ct, const UnipotentElement& u, int scale_exp, unsigned long p);

/// Minimal height over B'(u); nullopt when B' is empty.
std::optional<int> ht_prime(const ChevalleyTable& ct, const UnipotentElement& u, int scale_exp, unsigned long p);

enum class ReductionBranch {
    brackets_vanish,  ///< log u_1 = log u - z', so B'(u_1) is empty
    height_raised     ///< some bracket survives; ht' strictly increases
};

struct ReductionOutcome {
    UnipotentElement next;
    ReductionBranch branch = ReductionBranch::brackets_vanish;
};

/// u_1 = u exp(-z') with z' the B'-part of log u. Throws when B+(u) is empty.
ReductionOutcome reduction_step(const ChevalleyTable& ct, const UnipotentElement& u, int scale_exp, unsigned long p);

/// Smallest element in lexicographic order among the extremal elements of B(u).
std::optional<Root> extremal_beta_plus(const ChevalleyTable& ct, const UnipotentElement& u);

struct LedgerEntry {
    int n = 0;
    int vp = 0;
};

/// For n*ht(beta_plus) <= depth, the valuation of the scalar s_n with
/// (offset n*beta_plus component of sigma) = s_n y_{beta_plus}^n v+.
/// Throws std::invalid_argument unless beta_plus is extremal in B(u).
std::vector<LedgerEntry> coefficient_valuations(const UnipotentElement& u, const Root& beta_plus, const TruncatedModule& M,
                                                unsigned long p);

}  // namespace cato
