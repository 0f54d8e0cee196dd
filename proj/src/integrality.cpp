#include "cato/integrality.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cato/linalg.hpp"

namespace cato {

PadicContext hyp_gate(const RootSystem& rs, unsigned long p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not a prime");
    PrimeHypothesis h = prime_hypothesis(rs.label(), p);
    return PadicContext{p, h.ok, h.violated};
}

int vp_factorial(int n, unsigned long p) {
    if (n < 0) throw std::invalid_argument("negative factorial");
    if (p < 2) throw std::invalid_argument("bad prime");
    long total = 0;
    for (unsigned long q = p; q <= static_cast<unsigned long>(n); q *= p) {
        total += static_cast<long>(static_cast<unsigned long>(n) / q);
        if (q > static_cast<unsigned long>(n) / p) break;
    }
    return static_cast<int>(total);
}

int m0_min(const Weight& lambda, unsigned long p) {
    int m = 0;
    for (const Rational& c : lambda.coroot_coords) {
        if (c == 0) continue;
        m = std::max(m, -valuation(c, p));
    }
    return m;
}

bool residue_characteristic_ok(const RootSystem& rs, unsigned long p) {
    for (int v : nonzero_root_pairings(rs))
        if (static_cast<unsigned long>(std::abs(v)) % p == 0) return false;
    return true;
}

AbcdResult abcd_check(const RootSystem& rs, const Root& gamma, int nmax) {
    if (!rs.positive_index(gamma)) throw std::invalid_argument("gamma must be a positive root");
    if (nmax < 0) throw std::invalid_argument("nmax must be non-negative");
    AbcdResult out;
    for (int n = 1; n <= nmax; ++n) {
        auto mc = minimal_composition(rs, n * gamma);
        if (mc && mc->parts < n) {
            out.holds = false;
            out.counterexample = AbcdCounterexample{n, mc->nu, mc->parts};
            return out;
        }
    }
    return out;
}

RelationInstance make_instance(const RootSystem& rs, const Weight& lambda, const Root& gamma, int n, unsigned long p,
                               std::optional<int> m0) {
    if (static_cast<int>(lambda.size()) != rs.rank()) throw std::invalid_argument("weight has wrong rank");
    if (!rs.positive_index(gamma)) throw std::invalid_argument("gamma must be a positive root");
    if (rs.in_levi(gamma, max_parabolic_subset(rs, lambda))) throw std::invalid_argument("gamma lies in Phi_I^+");
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    RelationInstance inst;
    inst.ctx = hyp_gate(rs, p);
    const int lo = m0_min(lambda, p);
    inst.m0 = m0.value_or(lo);
    if (inst.m0 < lo) throw std::invalid_argument("m0 below the minimum " + std::to_string(lo));
    inst.lambda = lambda;
    inst.gamma = gamma;
    inst.n = n;
    return inst;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::vacuous: return "vacuous";
        case Verdict::undecided: return "undecided";
    }
    return "undecided";
}

namespace {

int parts(const IntVec& nu) { return std::accumulate(nu.begin(), nu.end(), 0); }

RationalVector image(const TruncatedModule& L, const Root& offset, const IntVec& nu) {
    FormalVector w = L.act_monomial(nu, L.highest_weight_vector());
    const RationalVector* c = w.component(offset);
    return c ? *c : RationalVector(L.dim(offset), Rational(0));
}

bool negation_feasible(const IntegralityReport& r, bool long_only) {
    std::vector<std::size_t> rows;
    for (std::size_t j = 0; j < r.index_set.size(); ++j)
        if (!long_only || parts(r.index_set[j]) >= r.instance.n) rows.push_back(j);
    RationalVector b;
    for (std::size_t j : rows) b.push_back(r.particular_solution[j]);
    std::vector<RationalVector> cols;
    for (const auto& k : r.kernel_basis) {
        RationalVector c;
        for (std::size_t j : rows) c.push_back(k[j]);
        cols.push_back(std::move(c));
    }
    return plocal_coset_meets(cols, b, r.instance.ctx.p);
}

}  // namespace

IntegralityReport relation_space(const TruncatedModule& L, const RelationInstance& inst) {
    const RootSystem& rs = L.roots();
    if (!(L.lambda() == inst.lambda)) throw std::invalid_argument("module and instance have different highest weights");
    if (!rs.positive_index(inst.gamma)) throw std::invalid_argument("gamma must be a positive root");
    if (!inst.ctx.hyp_ok) throw std::invalid_argument("prime hypothesis violated: " + inst.ctx.violated);
    const Root target = inst.n * inst.gamma;
    if (target.height() > L.depth())
        throw std::out_of_range("n*gamma has height " + std::to_string(target.height()) + " beyond depth " +
                                std::to_string(L.depth()));
    IntegralityReport r;
    r.instance = inst;
    r.residue_ok = residue_characteristic_ok(rs, inst.ctx.p);
    r.index_set = enumerate_compositions(rs, inst.gamma, inst.n);
    const std::size_t m = r.index_set.size();
    const std::size_t dim = L.dim(target);

    IntVec ngamma(rs.num_positive(), 0);
    ngamma[*rs.positive_index(inst.gamma)] = inst.n;

    // Unscaled system: y_gamma^n v+ = sum d_nu y^nu v+, with c_nu = d_nu p^{m0 (n - |nu|)}.
    std::vector<RationalVector> cols;
    cols.reserve(m);
    for (const IntVec& nu : r.index_set) cols.push_back(image(L, target, nu));
    Matrix A = m == 0 ? Matrix(dim, 0) : from_columns(cols, dim);

    r.particular_solution.assign(m, Rational(0));
    auto it = std::find(r.index_set.begin(), r.index_set.end(), ngamma);
    if (it == r.index_set.end()) throw std::logic_error("n*e_gamma missing from the index set");
    r.particular_solution[static_cast<std::size_t>(it - r.index_set.begin())] = 1;

    for (RationalVector d : nullspace(A)) {
        for (std::size_t j = 0; j < m; ++j) d[j] *= prime_power(inst.ctx.p, inst.m0 * (inst.n - parts(r.index_set[j])));
        r.kernel_basis.push_back(std::move(d));
    }
    return r;
}

FormalVector relation_value(const TruncatedModule& L, const IntegralityReport& r, const RationalVector& c) {
    if (c.size() != r.index_set.size()) throw std::invalid_argument("coefficient vector has wrong length");
    FormalVector out;
    const FormalVector top = L.highest_weight_vector();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        const Rational s = c[j] * prime_power(r.instance.ctx.p, r.instance.m0 * parts(r.index_set[j]));
        out += s * L.act_monomial(r.index_set[j], top);
    }
    return out;
}

Verdict both_conditions_verify(IntegralityReport& report) {
    if (!report.instance.ctx.hyp_ok)
        throw std::invalid_argument("prime hypothesis violated: " + report.instance.ctx.violated);
    report.witness.reset();
    if (report.instance.n == 0) return report.verdict = Verdict::vacuous;
    if (negation_feasible(report, true)) return report.verdict = Verdict::fails;
    for (std::size_t j = 0; j < report.index_set.size(); ++j) {
        const Rational& c = report.particular_solution[j];
        if (parts(report.index_set[j]) >= report.instance.n && c != 0 && valuation(c, report.instance.ctx.p) <= 0) {
            report.witness = report.index_set[j];
            break;
        }
    }
    return report.verdict = Verdict::holds;
}

std::optional<IntVec> estimate_witness(const IntegralityReport& report) {
    for (std::size_t j = 0; j < report.index_set.size(); ++j) {
        const Rational& c = report.particular_solution[j];
        if (c != 0 && valuation(c, report.instance.ctx.p) <= 0) return report.index_set[j];
    }
    return std::nullopt;
}

bool estimate_holds(const IntegralityReport& report) {
    if (!report.instance.ctx.hyp_ok)
        throw std::invalid_argument("prime hypothesis violated: " + report.instance.ctx.violated);
    if (report.instance.n == 0) return true;
    return !negation_feasible(report, false);
}

}  // namespace cato
