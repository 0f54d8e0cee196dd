#include "cato/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "cato/linalg.hpp"

namespace cato {

// ---- TypeLabel ------------------------------------------------------------

TypeLabel TypeLabel::parse(std::string_view text) {
    auto reject = [&](const std::string& why) {
        return std::invalid_argument("unknown root system type '" + std::string(text) + "': " + why);
    };
    if (text.size() < 2) throw reject("expected a family letter and a rank");
    char family = text[0];
    int rank = 0;
    for (char c : text.substr(1)) {
        if (c < '0' || c > '9') throw reject("rank is not a number");
        rank = rank * 10 + (c - '0');
        if (rank > 100) throw reject("rank too large");
    }
    if (rank > kMaxRank) throw reject("rank exceeds the supported cap of " + std::to_string(kMaxRank));
    bool ok = false;
    switch (family) {
        case 'A': ok = rank >= 1; break;
        case 'B': ok = rank >= 2; break;
        case 'C': ok = rank >= 3; break;
        case 'D': ok = rank == 4; break;
        case 'F': ok = rank == 4; break;
        case 'G': ok = rank == 2; break;
        default: throw reject("family must be one of A, B, C, D, F, G");
    }
    if (!ok) throw reject("unsupported rank for family");
    return TypeLabel{family, rank};
}

std::string TypeLabel::str() const { return std::string(1, family) + std::to_string(rank); }

// ---- Root -----------------------------------------------------------------

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool Root::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

bool Root::is_positive() const {
    return !is_zero() && std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool Root::is_negative() const {
    return !is_zero() && std::all_of(coords.begin(), coords.end(), [](int c) { return c <= 0; });
}

Root Root::operator-() const {
    Root r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
}

Root operator+(const Root& a, const Root& b) {
    if (a.size() != b.size()) throw std::invalid_argument("root sum: rank mismatch");
    Root r = a;
    for (std::size_t i = 0; i < a.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

Root operator-(const Root& a, const Root& b) { return a + (-b); }

Root operator*(int k, const Root& a) {
    Root r = a;
    for (auto& c : r.coords) c *= k;
    return r;
}

std::string to_string(const Root& r) {
    std::string s = "[";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(r[i]);
    }
    return s + "]";
}

bool ParabolicSubset::contains(int i) const { return std::find(simple.begin(), simple.end(), i) != simple.end(); }

// ---- Cartan data ----------------------------------------------------------

std::vector<IntVec> cartan_matrix(const TypeLabel& label) {
    const int n = label.rank;
    std::vector<IntVec> a(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n), 0));
    auto set = [&](int i, int j, int v) { a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v; };
    for (int i = 0; i < n; ++i) set(i, i, 2);
    switch (label.family) {
        case 'A':
        case 'B':
        case 'C':
            for (int i = 0; i + 1 < n; ++i) {
                set(i, i + 1, -1);
                set(i + 1, i, -1);
            }
            // B_n: alpha_n short; C_n: alpha_n long.
            if (label.family == 'B') set(n - 1, n - 2, -2);
            if (label.family == 'C') set(n - 2, n - 1, -2);
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) {
                set(i, i + 1, -1);
                set(i + 1, i, -1);
            }
            set(n - 3, n - 1, -1);
            set(n - 1, n - 3, -1);
            break;
        case 'F':
            set(0, 1, -1);
            set(1, 0, -1);
            set(1, 2, -1);
            set(2, 1, -2);
            set(2, 3, -1);
            set(3, 2, -1);
            break;
        case 'G':
            set(0, 1, -3);
            set(1, 0, -1);
            break;
        default: throw std::invalid_argument("unknown family");
    }
    return a;
}

RootSystem build_root_system(std::string_view label) { return build_root_system(TypeLabel::parse(label)); }

RootSystem build_root_system(const TypeLabel& label) {
    TypeLabel checked = TypeLabel::parse(label.str());
    RootSystem rs;
    rs.label_ = checked;
    rs.rank_ = checked.rank;
    rs.cartan_ = cartan_matrix(checked);
    const auto n = static_cast<std::size_t>(rs.rank_);

    // Symmetrizer d_i with d_i a_ij = d_j a_ji, found along the (connected) Dynkin diagram.
    std::vector<Rational> d(n, Rational(0));
    d[0] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i] != 0 && d[j] == 0 && rs.cartan_[i][j] != 0) {
                    d[j] = d[i] * rs.cartan_[i][j] / rs.cartan_[j][i];
                    changed = true;
                }
    }
    Rational dmin = *std::min_element(d.begin(), d.end());
    rs.sym_.resize(n);
    for (std::size_t i = 0; i < n; ++i) rs.sym_[i] = static_cast<int>(to_int64(d[i] / dmin));

    // Positive roots by height: beta + alpha_i is a root iff q = r - <beta, alpha_i^vee> > 0.
    std::vector<Root> roots;
    std::map<IntVec, std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec c(n, 0);
        c[i] = 1;
        seen[c] = roots.size();
        roots.emplace_back(c);
    }
    for (std::size_t k = 0; k < roots.size(); ++k) {
        const Root beta = roots[k];
        for (int i = 0; i < rs.rank_; ++i) {
            int r = 0;
            for (Root down = beta - rs.simple_root(i); seen.count(down.coords); down = down - rs.simple_root(i)) ++r;
            int q = r - rs.pairing(beta, i);
            if (q > 0) {
                Root up = beta + rs.simple_root(i);
                if (!seen.count(up.coords)) {
                    seen[up.coords] = roots.size();
                    roots.push_back(up);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return lex_compare(a.coords, b.coords) == std::strong_ordering::greater;
    });
    rs.positive_ = std::move(roots);
    for (std::size_t k = 0; k < rs.positive_.size(); ++k) rs.index_[rs.positive_[k].coords] = k;
    return rs;
}

Root RootSystem::simple_root(int i) const {
    IntVec c(static_cast<std::size_t>(rank_), 0);
    c.at(static_cast<std::size_t>(i)) = 1;
    return Root(c);
}

Weight RootSystem::rho() const { return Weight(RationalVector(static_cast<std::size_t>(rank_), Rational(1))); }

std::optional<std::size_t> RootSystem::positive_index(const Root& r) const {
    auto it = index_.find(r.coords);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool RootSystem::is_root(const Root& r) const {
    return positive_index(r).has_value() || positive_index(-r).has_value();
}

int RootSystem::pairing(const Root& v, int i) const {
    if (i < 0 || i >= rank_) throw std::out_of_range("simple root index out of range");
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += v[static_cast<std::size_t>(j)] * cartan(i, j);
    return s;
}

const Rational& RootSystem::pairing(const Weight& w, int i) const {
    if (i < 0 || i >= rank_) throw std::out_of_range("simple root index out of range");
    return w.coroot_coords.at(static_cast<std::size_t>(i));
}

int RootSystem::inner(const Root& a, const Root& b) const {
    // (alpha_i, alpha_j) = d_i a_ij
    int s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            s += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] * sym_[static_cast<std::size_t>(i)] *
                 cartan(i, j);
    return s;
}

int RootSystem::pairing(const Root& v, const Root& beta) const {
    int num = 2 * inner(v, beta);
    int den = inner(beta, beta);
    if (den == 0 || num % den != 0) throw std::logic_error("non-integral root pairing");
    return num / den;
}

Root RootSystem::reflect(int i, const Root& v) const {
    Root r = v;
    r.coords[static_cast<std::size_t>(i)] -= pairing(v, i);
    return r;
}

Weight RootSystem::to_weight(const Root& v) const {
    RationalVector c(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i) c[static_cast<std::size_t>(i)] = pairing(v, i);
    return Weight(std::move(c));
}

IntVec RootSystem::coroot_expansion(const Root& beta) const {
    // beta^vee = 2 beta / (beta, beta); alpha_i^vee = 2 alpha_i / (alpha_i, alpha_i)
    int bb = inner(beta, beta);
    IntVec c(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i) {
        int num = beta[static_cast<std::size_t>(i)] * 2 * sym_[static_cast<std::size_t>(i)];
        if (num % bb != 0) throw std::logic_error("non-integral coroot expansion");
        c[static_cast<std::size_t>(i)] = num / bb;
    }
    return c;
}

bool RootSystem::in_levi(const Root& beta, const ParabolicSubset& I) const {
    for (int i = 0; i < rank_; ++i)
        if (beta[static_cast<std::size_t>(i)] != 0 && !I.contains(i)) return false;
    return true;
}

std::vector<std::size_t> RootSystem::levi_positive(const ParabolicSubset& I) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < positive_.size(); ++k)
        if (in_levi(positive_[k], I)) out.push_back(k);
    return out;
}

// ---- operations -----------------------------------------------------------

RootString root_string(const RootSystem& rs, const Root& beta, const Root& gamma) {
    if (!rs.is_root(beta) || !rs.is_root(gamma)) throw std::invalid_argument("root_string: arguments must be roots");
    if (beta == gamma || beta == -gamma) throw std::invalid_argument("root_string: proportional roots");
    RootString s;
    for (Root v = gamma - beta; rs.is_root(v); v = v - beta) ++s.down;
    for (Root v = gamma + beta; rs.is_root(v); v = v + beta) ++s.up;
    return s;
}

ParabolicSubset max_parabolic_subset(const RootSystem& rs, const Weight& lambda) {
    if (static_cast<int>(lambda.size()) != rs.rank()) throw std::invalid_argument("weight has wrong rank");
    ParabolicSubset I;
    for (int i = 0; i < rs.rank(); ++i) {
        const Rational& v = rs.pairing(lambda, i);
        if (is_integer(v) && v >= 0) I.simple.push_back(i);
    }
    return I;
}

std::strong_ordering lex_compare(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) throw std::invalid_argument("lex_compare: length mismatch");
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return a[k] <=> b[k];
    return std::strong_ordering::equal;
}

namespace {

bool in_closed_cone(const Root& v, const std::vector<Root>& gens) {
    if (v.is_zero()) return true;
    const std::size_t dim = v.size();
    const std::size_t m = gens.size();
    const std::size_t kmax = std::min(dim, m);
    RationalVector target(dim);
    for (std::size_t i = 0; i < dim; ++i) target[i] = v[i];
    // Caratheodory: a cone point is a non-negative combination of at most dim generators.
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t k) -> bool {
        if (pick.size() == k) {
            Matrix a(dim, k);
            for (std::size_t c = 0; c < k; ++c)
                for (std::size_t r = 0; r < dim; ++r) a(r, c) = gens[pick[c]][r];
            auto x = solve(a, target);
            return x && std::all_of(x->begin(), x->end(), [](const Rational& q) { return q >= 0; });
        }
        for (std::size_t s = start; s < m; ++s) {
            pick.push_back(s);
            bool hit = rec(s + 1, k);
            pick.pop_back();
            if (hit) return true;
        }
        return false;
    };
    for (std::size_t k = 1; k <= kmax; ++k)
        if (rec(0, k)) return true;
    return false;
}

}  // namespace

std::vector<Root> extremal_elements(const std::vector<Root>& S) {
    std::vector<Root> out;
    for (std::size_t i = 0; i < S.size(); ++i) {
        std::vector<Root> others;
        for (std::size_t j = 0; j < S.size(); ++j)
            if (j != i && S[j] != S[i]) others.push_back(S[j]);
        if (!in_closed_cone(S[i], others)) out.push_back(S[i]);
    }
    return out;
}

std::vector<IntVec> compositions_of(const RootSystem& rs, const Root& target) {
    const auto& roots = rs.positive_roots();
    const std::size_t t = roots.size();
    std::vector<IntVec> out;
    if (static_cast<int>(target.size()) != rs.rank()) throw std::invalid_argument("compositions_of: rank mismatch");
    if (std::any_of(target.coords.begin(), target.coords.end(), [](int c) { return c < 0; })) return out;
    IntVec nu(t, 0);
    std::function<void(std::size_t, Root)> rec = [&](std::size_t k, Root rest) {
        if (rest.is_zero()) {
            out.push_back(nu);
            return;
        }
        if (k == t) return;
        int emax = std::numeric_limits<int>::max();
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (roots[k][i] > 0) emax = std::min(emax, rest[i] / roots[k][i]);
        for (int e = emax; e >= 0; --e) {
            nu[k] = e;
            rec(k + 1, rest - e * roots[k]);
        }
        nu[k] = 0;
    };
    rec(0, target);
    return out;
}

std::vector<IntVec> enumerate_compositions(const RootSystem& rs, const Root& gamma, int n) {
    if (!rs.positive_index(gamma)) throw std::invalid_argument("enumerate_compositions: gamma must be a positive root");
    if (n < 0) throw std::invalid_argument("enumerate_compositions: n must be non-negative");
    return compositions_of(rs, n * gamma);
}

std::optional<MinimalComposition> minimal_composition(const RootSystem& rs, const Root& target) {
    const std::size_t dim = target.size();
    if (std::any_of(target.coords.begin(), target.coords.end(), [](int c) { return c < 0; })) return std::nullopt;
    // Dynamic programme over the box 0 <= v <= target, linearized with target[0] slowest.
    std::vector<std::size_t> stride(dim, 1);
    for (std::size_t i = dim; i-- > 1;) stride[i - 1] = stride[i] * static_cast<std::size_t>(target[i] + 1);
    const std::size_t cells = stride[0] * static_cast<std::size_t>(target[0] + 1);
    constexpr int kUnreached = std::numeric_limits<int>::max();
    std::vector<int> best(cells, kUnreached);
    std::vector<int> via(cells, -1);
    best[0] = 0;
    const auto& roots = rs.positive_roots();
    IntVec v(dim, 0);
    for (std::size_t cell = 0; cell < cells; ++cell) {
        std::size_t rem = cell;
        for (std::size_t i = 0; i < dim; ++i) {
            v[i] = static_cast<int>(rem / stride[i]);
            rem %= stride[i];
        }
        if (cell == 0) continue;
        for (std::size_t k = 0; k < roots.size(); ++k) {
            bool fits = true;
            std::size_t prev = cell;
            for (std::size_t i = 0; i < dim && fits; ++i) {
                if (roots[k][i] > v[i]) fits = false;
                else prev -= static_cast<std::size_t>(roots[k][i]) * stride[i];
            }
            if (!fits || best[prev] == kUnreached) continue;
            if (best[prev] + 1 < best[cell]) {
                best[cell] = best[prev] + 1;
                via[cell] = static_cast<int>(k);
            }
        }
    }
    std::size_t last = cells - 1;
    if (best[last] == kUnreached) return std::nullopt;
    MinimalComposition mc;
    mc.parts = best[last];
    mc.nu.assign(roots.size(), 0);
    for (std::size_t cell = last; cell != 0;) {
        auto k = static_cast<std::size_t>(via[cell]);
        ++mc.nu[k];
        for (std::size_t i = 0; i < dim; ++i) cell -= static_cast<std::size_t>(roots[k][i]) * stride[i];
    }
    return mc;
}

std::vector<StringDifferenceViolation> string_difference_violations(const RootSystem& rs) {
    std::vector<StringDifferenceViolation> out;
    auto bad = [&](const Root& v) { return v.is_zero() || (v.is_negative() && rs.is_root(v)); };
    for (const Root& gamma : rs.positive_roots()) {
        if (gamma.height() == 1) continue;
        for (int a = 0; a < rs.rank(); ++a) {
            Root alpha = rs.simple_root(a);
            Root beta = gamma - alpha;
            if (!rs.positive_index(beta)) continue;
            for (int i = 1; i <= 4; ++i)
                for (int j = 1; j <= i * beta[static_cast<std::size_t>(a)] + 4; ++j) {
                    Root base = i * beta - j * alpha;
                    if (!rs.positive_index(base)) continue;
                    for (Root cand : {(i - 1) * beta - (j + 1) * alpha, i * beta - (j + 1) * alpha})
                        if (bad(cand)) out.push_back({gamma, alpha, beta, i, j, cand});
                }
        }
    }
    return out;
}

PrimeHypothesis prime_hypothesis(const TypeLabel& label, unsigned long p) {
    PrimeHypothesis h;
    if ((label.family == 'B' || label.family == 'C' || label.family == 'F') && p <= 2) {
        h.ok = false;
        h.violated = "type " + label.str() + " requires p > 2";
    } else if (label.family == 'G' && p <= 3) {
        h.ok = false;
        h.violated = "type " + label.str() + " requires p > 3";
    }
    return h;
}

std::vector<int> nonzero_root_pairings(const RootSystem& rs) {
    std::vector<Root> all;
    for (const Root& r : rs.positive_roots()) {
        all.push_back(r);
        all.push_back(-r);
    }
    std::vector<int> values;
    for (const Root& a : all)
        for (const Root& b : all) {
            if (a == b || a == -b) continue;
            int v = rs.pairing(b, a);
            if (v != 0) values.push_back(v);
        }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

}  // namespace cato
