#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "cato/integrality.hpp"
#include "cato/pbw.hpp"

using namespace cato;

namespace {

Root R(std::initializer_list<int> c) { return Root(IntVec(c)); }
Weight W(std::initializer_list<Rational> c) { return Weight(RationalVector(c)); }
Rational Q(long n, long d = 1) { return make_rational(n, d); }

int parts(const IntVec& nu) {
    int s = 0;
    for (int v : nu) s += v;
    return s;
}

// Independent feasibility oracle: v + b in p Z_(p)^L for some v in span(columns) iff
// w.b in p Z_(p) for a basis w of the saturated lattice of integral vectors orthogonal to the span.
// Saturation is done by repeatedly dividing out F_p-dependencies.
bool oracle_meets(const std::vector<RationalVector>& columns, const RationalVector& b, unsigned long p) {
    const std::size_t L = b.size();
    Matrix kt(columns.size(), L);
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < L; ++i) kt(j, i) = columns[j][i];
    std::vector<std::vector<mpz_class>> ws;
    for (const RationalVector& v : columns.empty() ? [&] {
             std::vector<RationalVector> e;
             for (std::size_t i = 0; i < L; ++i) {
                 RationalVector u(L);
                 u[i] = 1;
                 e.push_back(u);
             }
             return e;
         }()
                                                   : nullspace(kt)) {
        mpz_class den = 1;
        for (const Rational& x : v) den = lcm(den, mpz_class(x.get_den()));
        std::vector<mpz_class> w;
        mpz_class g = 0;
        for (const Rational& x : v) {
            mpz_class z = mpz_class(x.get_num()) * (den / x.get_den());
            w.push_back(z);
            g = gcd(g, z);
        }
        for (auto& z : w) z /= g;
        ws.push_back(w);
    }
    const mpz_class P = p;
    while (true) {
        // find an F_p dependency among the rows of ws
        const std::size_t m = ws.size();
        std::vector<std::vector<mpz_class>> red(m), track(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (auto& z : ws[i]) red[i].push_back(((z % P) + P) % P);
            track[i].assign(m, 0);
            track[i][i] = 1;
        }
        std::optional<std::vector<mpz_class>> dep;
        std::size_t row = 0;
        for (std::size_t c = 0; c < L && row < m; ++c) {
            std::size_t piv = row;
            while (piv < m && red[piv][c] == 0) ++piv;
            if (piv == m) continue;
            std::swap(red[piv], red[row]);
            std::swap(track[piv], track[row]);
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), red[row][c].get_mpz_t(), P.get_mpz_t());
            for (std::size_t i = row + 1; i < m; ++i) {
                if (red[i][c] == 0) continue;
                mpz_class f = red[i][c] * inv % P;
                for (std::size_t k = 0; k < L; ++k) red[i][k] = (((red[i][k] - f * red[row][k]) % P) + P) % P;
                for (std::size_t k = 0; k < m; ++k) track[i][k] = (((track[i][k] - f * track[row][k]) % P) + P) % P;
            }
            ++row;
        }
        if (row < m) dep = track[row];
        if (!dep) break;
        std::size_t j = 0;
        while ((*dep)[j] == 0) ++j;
        std::vector<mpz_class> nw(L, 0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < L; ++k) nw[k] += (*dep)[i] * ws[i][k];
        for (auto& z : nw) z /= P;
        ws[j] = nw;
    }
    for (const auto& w : ws) {
        Rational s = 0;
        for (std::size_t k = 0; k < L; ++k) s += Rational(w[k]) * b[k];
        if (s != 0 && valuation(s, p) <= 0) return false;
    }
    return true;
}

// Independent minimal number of positive roots summing to target, by memoized recursion.
int oracle_min_parts(const RootSystem& rs, const Root& target, std::map<IntVec, int>& memo) {
    if (target.is_zero()) return 0;
    if (auto it = memo.find(target.coords); it != memo.end()) return it->second;
    int best = 1 << 20;
    for (const Root& b : rs.positive_roots()) {
        Root rest = target - b;
        bool ok = true;
        for (std::size_t i = 0; i < rest.size(); ++i) ok = ok && rest[i] >= 0;
        if (ok) best = std::min(best, 1 + oracle_min_parts(rs, rest, memo));
    }
    return memo[target.coords] = best;
}

struct GridCase {
    std::string type;
    Weight lambda;
};

std::vector<GridCase> grid_cases() { return {{"A2", W({0, Q(1, 2)})}, {"B2", W({Q(1, 3), 2})}}; }

std::vector<Root> non_levi(const RootSystem& rs, const Weight& lambda) {
    std::vector<Root> out;
    auto I = max_parabolic_subset(rs, lambda);
    for (const Root& g : rs.positive_roots())
        if (!rs.in_levi(g, I)) out.push_back(g);
    return out;
}

// Shapovalov pairing on a Verma weight space, evaluated by PBW normal ordering.
Matrix shapovalov(const ChevalleyTable& ct, const PBWAlgebra& alg, const Weight& lambda, const std::vector<IntVec>& basis) {
    Matrix g(basis.size(), basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b) {
            std::vector<std::size_t> word;
            for (std::size_t k = basis[a].size(); k-- > 0;)
                for (int e = 0; e < basis[a][k]; ++e) word.push_back(ct.x_index(k));
            for (std::size_t k = 0; k < basis[b].size(); ++k)
                for (int e = 0; e < basis[b][k]; ++e) word.push_back(ct.y_index(k));
            Rational v = 0;
            for (const auto& [m, c] : alg.normal_order(word).terms) {
                if (m.degree() != parts(m.cartan_exps(ct))) continue;
                Rational s = c;
                IntVec h = m.cartan_exps(ct);
                for (int i = 0; i < ct.rank(); ++i)
                    for (int k = 0; k < h[static_cast<std::size_t>(i)]; ++k) s *= lambda.coroot_coords[static_cast<std::size_t>(i)];
                v += s;
            }
            g(a, b) = v;
        }
    return g;
}

}  // namespace

TEST(Padic, HypGate) {
    EXPECT_TRUE(hyp_gate(build_root_system("A2"), 2).hyp_ok);
    EXPECT_FALSE(hyp_gate(build_root_system("B2"), 2).hyp_ok);
    EXPECT_FALSE(hyp_gate(build_root_system("F4"), 2).hyp_ok);
    EXPECT_FALSE(hyp_gate(build_root_system("G2"), 3).hyp_ok);
    EXPECT_TRUE(hyp_gate(build_root_system("G2"), 5).hyp_ok);
    EXPECT_FALSE(hyp_gate(build_root_system("G2"), 3).violated.empty());
    EXPECT_THROW(hyp_gate(build_root_system("A2"), 6), std::invalid_argument);
}

TEST(Padic, LegendreMatchesDigitSum) {
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL})
        for (int n = 0; n <= 300; ++n) {
            int s = 0;
            for (int m = n; m > 0; m /= static_cast<int>(p)) s += m % static_cast<int>(p);
            EXPECT_EQ(vp_factorial(n, p), (n - s) / static_cast<int>(p - 1)) << n << " " << p;
            EXPECT_EQ(vp_factorial(n, p), valuation(factorial(static_cast<unsigned>(n)), p));
        }
}

TEST(Padic, M0Min) {
    EXPECT_EQ(m0_min(W({0, Q(1, 2)}), 2), 1);
    EXPECT_EQ(m0_min(W({0, Q(1, 2)}), 5), 0);
    EXPECT_EQ(m0_min(W({Q(1, 3), 2}), 3), 1);
    EXPECT_EQ(m0_min(W({Q(1, 9), Q(5, 3)}), 3), 2);
    EXPECT_EQ(m0_min(W({Q(25, 1), 0}), 5), 0);
    EXPECT_EQ(m0_min(W({Q(1, 5), 0}), 5), 1);
    EXPECT_EQ(m0_min(W({Q(3, 4)}), 2), 2);
    EXPECT_EQ(m0_min(W({Q(-7), Q(4)}), 3), 0);
    EXPECT_EQ(vp_factorial(4, 2), 3);
    EXPECT_EQ(vp_factorial(0, 7), 0);
    EXPECT_EQ(vp_factorial(25, 5), 6);
}

TEST(Padic, ResidueCharacteristic) {
    EXPECT_TRUE(residue_characteristic_ok(build_root_system("A3"), 2));
    EXPECT_FALSE(residue_characteristic_ok(build_root_system("B2"), 2));
    EXPECT_TRUE(residue_characteristic_ok(build_root_system("B2"), 3));
    EXPECT_FALSE(residue_characteristic_ok(build_root_system("G2"), 3));
    EXPECT_TRUE(residue_characteristic_ok(build_root_system("G2"), 5));
}

TEST(Abcd, HoldsOutsideG2) {
    for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "D4"}) {
        RootSystem rs = build_root_system(name);
        for (const Root& g : rs.positive_roots()) {
            AbcdResult r = abcd_check(rs, g, 4);
            EXPECT_TRUE(r.holds) << name << " " << to_string(g);
            std::map<IntVec, int> memo;
            for (int n = 1; n <= 4; ++n) EXPECT_GE(oracle_min_parts(rs, n * g, memo), n);
        }
    }
}

TEST(Abcd, G2Counterexample) {
    RootSystem rs = build_root_system("G2");
    AbcdResult r = abcd_check(rs, R({2, 1}), 6);
    ASSERT_FALSE(r.holds);
    ASSERT_TRUE(r.counterexample);
    EXPECT_EQ(r.counterexample->n, 3);
    EXPECT_EQ(r.counterexample->parts, 2);
    IntVec nu(rs.num_positive(), 0);
    nu[*rs.positive_index(R({3, 1}))] = 1;
    nu[*rs.positive_index(R({3, 2}))] = 1;
    EXPECT_EQ(r.counterexample->nu, nu);
    // the verdict agrees with an exhaustive search for every root of G2
    for (const Root& g : rs.positive_roots()) {
        std::map<IntVec, int> memo;
        bool holds = true;
        for (int n = 1; n <= 5; ++n) holds = holds && oracle_min_parts(rs, n * g, memo) >= n;
        EXPECT_EQ(abcd_check(rs, g, 5).holds, holds) << to_string(g);
    }
}

TEST(Relation, InstanceValidation) {
    RootSystem rs = build_root_system("A2");
    Weight lam = W({0, Q(1, 2)});
    EXPECT_THROW(make_instance(rs, lam, R({1, 0}), 1, 5), std::invalid_argument);  // in Phi_I
    EXPECT_THROW(make_instance(rs, lam, R({1, 1}), -1, 5), std::invalid_argument);
    EXPECT_THROW(make_instance(rs, lam, R({2, 1}), 1, 5), std::invalid_argument);
    EXPECT_THROW(make_instance(rs, lam, R({1, 1}), 1, 2, 0), std::invalid_argument);  // m0 below minimum
    EXPECT_EQ(make_instance(rs, lam, R({1, 1}), 1, 2).m0, 1);
}

TEST(Relation, A2WorkedExample) {
    ChevalleyTable ct(build_root_system("A2"));
    Weight lam = W({0, Q(1, 2)});
    TruncatedModule L = simple_quotient(lam, 4, ct);
    IntegralityReport r = relation_space(L, make_instance(ct.roots(), lam, R({1, 1}), 1, 5, 1));
    ASSERT_EQ(r.index_set.size(), 2u);
    auto at = [&](const IntVec& nu) {
        return static_cast<std::size_t>(std::find(r.index_set.begin(), r.index_set.end(), nu) - r.index_set.begin());
    };
    const std::size_t i001 = at({0, 0, 1}), i110 = at({1, 1, 0});
    ASSERT_LT(i001, 2u);
    ASSERT_LT(i110, 2u);
    ASSERT_EQ(r.kernel_basis.size(), 1u);
    // every solution satisfies c_001 +- 5 c_110 = 1
    const RationalVector& k = r.kernel_basis[0];
    Rational ratio = k[i001] / k[i110];
    EXPECT_EQ(abs(ratio), Q(5));
    EXPECT_EQ(r.particular_solution[i001] - ratio * r.particular_solution[i110], 1);
    EXPECT_EQ(k[i001] - ratio * k[i110], 0);
    EXPECT_EQ(both_conditions_verify(r), Verdict::holds);
    EXPECT_EQ(r.witness, (IntVec{0, 0, 1}));
    EXPECT_TRUE(estimate_holds(r));
}

TEST(Relation, SolutionsReproduceTheRelation) {
    for (const auto& gc : grid_cases()) {
        ChevalleyTable ct(build_root_system(gc.type));
        PBWAlgebra alg(ct);
        TruncatedModule M = build_verma(gc.lambda, 6, ct);
        TruncatedModule L = simple_quotient(M);
        for (const Root& g : non_levi(ct.roots(), gc.lambda))
            for (unsigned long p : {5UL, 7UL})
                for (int n = 0; n * g.height() <= 6; ++n) {
                    RelationInstance inst = make_instance(ct.roots(), gc.lambda, g, n, p);
                    IntegralityReport r = relation_space(L, inst);
                    IntVec ng(ct.num_positive(), 0);
                    ng[*ct.roots().positive_index(g)] = n;
                    FormalVector lhs = prime_power(p, inst.m0 * n) * L.act_monomial(ng, L.highest_weight_vector());
                    EXPECT_TRUE(relation_value(L, r, r.particular_solution).equals(lhs));
                    for (const auto& k : r.kernel_basis) EXPECT_TRUE(relation_value(L, r, k).is_zero());
                    // unscaled kernel equals the Shapovalov radical on the Verma weight space n*gamma
                    EXPECT_EQ(r.index_set, M.basis(n * g));
                    Matrix G = shapovalov(ct, alg, gc.lambda, r.index_set);
                    EXPECT_EQ(r.kernel_basis.size(), r.index_set.size() - rank(G));
                    for (RationalVector d : r.kernel_basis) {
                        for (std::size_t j = 0; j < d.size(); ++j)
                            d[j] *= prime_power(p, inst.m0 * (parts(r.index_set[j]) - n));
                        EXPECT_TRUE(is_zero(G * d));
                    }
                }
    }
}

TEST(Relation, DepthAndHypothesisErrors) {
    ChevalleyTable ct(build_root_system("B2"));
    Weight lam = W({Q(1, 3), 2});
    TruncatedModule L = simple_quotient(lam, 4, ct);
    EXPECT_THROW(relation_space(L, make_instance(ct.roots(), lam, R({1, 2}), 2, 5)), std::out_of_range);
    EXPECT_THROW(relation_space(L, make_instance(ct.roots(), lam, R({1, 0}), 1, 2)), std::invalid_argument);
    IntegralityReport bad = relation_space(L, make_instance(ct.roots(), lam, R({1, 0}), 1, 5));
    bad.instance.ctx = hyp_gate(ct.roots(), 2);
    EXPECT_THROW(both_conditions_verify(bad), std::invalid_argument);
    IntegralityReport zero = relation_space(L, make_instance(ct.roots(), lam, R({1, 0}), 0, 5));
    EXPECT_EQ(both_conditions_verify(zero), Verdict::vacuous);
}

TEST(BothConditions, GridHoldsAndIsScalingInvariant) {
    int instances = 0;
    for (const auto& gc : grid_cases()) {
        ChevalleyTable ct(build_root_system(gc.type));
        TruncatedModule L = simple_quotient(gc.lambda, 6, ct);
        for (const Root& g : non_levi(ct.roots(), gc.lambda))
            for (unsigned long p : {5UL, 7UL})
                for (int n = 1; n <= 3 && n * g.height() <= 6; ++n) {
                    const int lo = m0_min(gc.lambda, p);
                    for (int m0 : {lo, lo + 1}) {
                        IntegralityReport r = relation_space(L, make_instance(ct.roots(), gc.lambda, g, n, p, m0));
                        EXPECT_EQ(both_conditions_verify(r), Verdict::holds) << gc.type << to_string(g) << n << p << m0;
                        ASSERT_TRUE(r.witness);
                        EXPECT_GE(parts(*r.witness), n);
                        EXPECT_TRUE(estimate_holds(r));
                        EXPECT_TRUE(estimate_witness(r));
                        ++instances;
                    }
                }
    }
    EXPECT_GE(instances, 5);
}

TEST(BothConditions, MatchesSaturationOracle) {
    for (const auto& gc : grid_cases()) {
        ChevalleyTable ct(build_root_system(gc.type));
        TruncatedModule L = simple_quotient(gc.lambda, 6, ct);
        for (const Root& g : non_levi(ct.roots(), gc.lambda))
            for (unsigned long p : {5UL, 7UL})
                for (int n = 1; n * g.height() <= 6; ++n) {
                    IntegralityReport r = relation_space(L, make_instance(ct.roots(), gc.lambda, g, n, p));
                    std::vector<std::size_t> rows;
                    for (std::size_t j = 0; j < r.index_set.size(); ++j)
                        if (parts(r.index_set[j]) >= n) rows.push_back(j);
                    RationalVector b;
                    for (auto j : rows) b.push_back(r.particular_solution[j]);
                    std::vector<RationalVector> cols;
                    for (const auto& k : r.kernel_basis) {
                        RationalVector c;
                        for (auto j : rows) c.push_back(k[j]);
                        cols.push_back(c);
                    }
                    Verdict v = both_conditions_verify(r);
                    EXPECT_EQ(v == Verdict::fails, oracle_meets(cols, b, p));
                }
    }
}

TEST(PLocal, RandomAgainstSaturationOracle) {
    std::mt19937 rng(20261015);
    std::uniform_int_distribution<int> small(-3, 3), shape(1, 4), vexp(-1, 2);
    int agree_true = 0, agree_false = 0;
    for (unsigned long p : {2UL, 3UL, 5UL})
        for (int trial = 0; trial < 300; ++trial) {
            const int L = shape(rng), k = shape(rng) - 1;
            std::vector<RationalVector> cols(static_cast<std::size_t>(k), RationalVector(static_cast<std::size_t>(L)));
            for (auto& c : cols)
                for (auto& x : c) x = Rational(small(rng)) * prime_power(p, vexp(rng));
            RationalVector b(static_cast<std::size_t>(L));
            for (auto& x : b) x = Rational(small(rng)) * prime_power(p, vexp(rng));
            bool got = plocal_coset_meets(cols, b, p);
            EXPECT_EQ(got, oracle_meets(cols, b, p));
            (got ? agree_true : agree_false)++;
        }
    EXPECT_GT(agree_true, 50);
    EXPECT_GT(agree_false, 50);
}

TEST(Relation, A2WorkedExampleUnscaled) {
    ChevalleyTable ct(build_root_system("A2"));
    Weight lam = W({0, Q(1, 2)});
    TruncatedModule L = simple_quotient(lam, 4, ct);
    RelationInstance inst = make_instance(ct.roots(), lam, R({1, 1}), 1, 5);
    EXPECT_EQ(inst.m0, 0);
    IntegralityReport r = relation_space(L, inst);
    ASSERT_EQ(r.kernel_basis.size(), 1u);
    auto at = [&](const IntVec& nu) {
        return static_cast<std::size_t>(std::find(r.index_set.begin(), r.index_set.end(), nu) - r.index_set.begin());
    };
    const RationalVector& k = r.kernel_basis[0];
    EXPECT_EQ(abs(k[at({0, 0, 1})] / k[at({1, 1, 0})]), 1);
    EXPECT_EQ(both_conditions_verify(r), Verdict::holds);
    EXPECT_EQ(estimate_witness(r), (IntVec{0, 0, 1}));
}

TEST(Relation, VermaIrreducibleCase) {
    ChevalleyTable ct(build_root_system("G2"));
    Weight lam = W({Q(1, 7), Q(2, 11)});
    TruncatedModule L = simple_quotient(lam, 5, ct);
    IntegralityReport r = relation_space(L, make_instance(ct.roots(), lam, R({3, 2}), 1, 5));
    EXPECT_TRUE(r.kernel_basis.empty());
    IntVec e(ct.num_positive(), 0);
    e.back() = 1;
    EXPECT_EQ(estimate_witness(r), e);
    EXPECT_EQ(both_conditions_verify(r), Verdict::holds);
    EXPECT_EQ(r.witness, e);
}

TEST(Relation, HeightOneBaseCase) {
    ChevalleyTable ct(build_root_system("B2"));
    Weight lam = W({Q(1, 3), 2});
    TruncatedModule L = simple_quotient(lam, 6, ct);
    for (int n = 1; n <= 3; ++n) {
        IntegralityReport r = relation_space(L, make_instance(ct.roots(), lam, R({1, 0}), n, 7));
        IntVec e(ct.num_positive(), 0);
        e[0] = n;
        EXPECT_EQ(estimate_witness(r), e);
    }
}

TEST(Relation, KernelPerturbedSamplesHaveWitnesses) {
    for (const auto& gc : grid_cases()) {
        ChevalleyTable ct(build_root_system(gc.type));
        TruncatedModule L = simple_quotient(gc.lambda, 6, ct);
        for (const Root& g : non_levi(ct.roots(), gc.lambda))
            for (int n = 1; n * g.height() <= 6 && n <= 3; ++n) {
                const unsigned long p = 5;
                IntegralityReport r = relation_space(L, make_instance(ct.roots(), gc.lambda, g, n, p));
                const std::size_t k = r.kernel_basis.size();
                if (k == 0 || k > 3) continue;
                std::vector<int> a(k, -2);
                while (true) {
                    RationalVector c = r.particular_solution;
                    for (std::size_t i = 0; i < k; ++i) c = add(c, scale(Rational(a[i]) * Q(1, 5), r.kernel_basis[i]));
                    bool found = false;
                    for (std::size_t j = 0; j < c.size(); ++j)
                        found = found || (parts(r.index_set[j]) >= n && c[j] != 0 && valuation(c[j], p) <= 0);
                    EXPECT_TRUE(found);
                    std::size_t i = 0;
                    while (i < k && a[i] == 2) a[i++] = -2;
                    if (i == k) break;
                    ++a[i];
                }
            }
    }
}
