#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cato/modules_o.hpp"
#include "cato/rational.hpp"
#include "cato/rootsys.hpp"

namespace cato {

struct PadicContext {
    unsigned long p = 2;
    bool hyp_ok = true;
    std::string violated;  ///< the failing restriction when !hyp_ok
};

/// Verdict of the prime restriction for the root system; never throws for a prime p.
PadicContext hyp_gate(const RootSystem& rs, unsigned long p);

/// Legendre: v_p(n!).
int vp_factorial(int n, unsigned long p);

/// Smallest m0 >= 0 with v_p(<lambda, alpha_i^vee>) + m0 >= 0 for all i.
int m0_min(const Weight& lambda, unsigned long p);

/// p does not divide any non-zero <beta, alpha^vee> with alpha != +-beta.
bool residue_characteristic_ok(const RootSystem& rs, unsigned long p);

struct AbcdCounterexample {
    int n = 0;
    IntVec nu;
    int parts = 0;
};

struct AbcdResult {
    bool holds = true;
    std::optional<AbcdCounterexample> counterexample;  ///< first n with min sum(nu) < n
};

/// For n = 1..nmax, min over compositions of n*gamma of sum(nu) is at least n.
AbcdResult abcd_check(const RootSystem& rs, const Root& gamma, int nmax);

struct RelationInstance {
    Weight lambda;
    Root gamma;
    int n = 0;
    int m0 = 0;
    PadicContext ctx;
};

/// Validates and assembles an instance: gamma in Phi^+ \ Phi_I^+, n >= 0, m0 >= m0_min
/// (m0 defaults to m0_min).
RelationInstance make_instance(const RootSystem& rs, const Weight& lambda, const Root& gamma, int n, unsigned long p,
                               std::optional<int> m0 = std::nullopt);

enum class Verdict { holds, fails, vacuous, undecided };

std::string to_string(Verdict v);

struct IntegralityReport {
    RelationInstance instance;
    std::vector<IntVec> index_set;           ///< I_n in enumeration order
    RationalVector particular_solution;      ///< coefficients c over I_n
    std::vector<RationalVector> kernel_basis;
    bool residue_ok = true;                  ///< hypothesis of the coefficient estimate
    Verdict verdict = Verdict::undecided;
    std::optional<IntVec> witness;
};

/// All coefficient vectors c with (p^{m0} y_gamma)^n v+ = sum_nu c_nu prod_i (p^{m0} y_i)^{nu_i} v+
/// in the simple module L, as particular solution plus kernel basis.
IntegralityReport relation_space(const TruncatedModule& L, const RelationInstance& inst);

/// Reproduces sum_nu c_nu prod (p^{m0} y_i)^{nu_i} v+ in L (for checks).
FormalVector relation_value(const TruncatedModule& L, const IntegralityReport& r, const RationalVector& c);

/// Decides whether every solution has a coefficient c_nu with sum(nu) >= n and v_p(c_nu) <= 0.
/// Fills verdict and witness in the report and returns the verdict.
Verdict both_conditions_verify(IntegralityReport& report);

/// Index of the particular solution with v_p(c_nu) <= 0.
std::optional<IntVec> estimate_witness(const IntegralityReport& report);

/// Every solution has some coefficient with v_p <= 0 (the sum condition dropped).
bool estimate_holds(const IntegralityReport& report);

/// Is there v in the rational column span of `columns` with v + b in p Z_(p)^L?
/// Decided by elimination over Z_(p) with minimal-valuation pivots.
bool plocal_coset_meets(const std::vector<RationalVector>& columns, const RationalVector& b, unsigned long p);

}  // namespace cato
