#include <deque>
#include <set>
#include <stdexcept>

#include "cato/modules_o.hpp"

namespace cato {

namespace {

Matrix cartan_as_matrix(const RootSystem& rs) {
    const auto n = static_cast<std::size_t>(rs.rank());
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = rs.cartan(static_cast<int>(i), static_cast<int>(j));
    return a;
}

void check_rank(const RootSystem& rs, const Weight& w) {
    if (static_cast<int>(w.size()) != rs.rank()) throw std::invalid_argument("weight has wrong rank");
}

// <lambda + rho, beta^vee>
Rational shifted_pairing(const RootSystem& rs, const Weight& lambda, const Root& beta) {
    IntVec c = rs.coroot_expansion(beta);
    Rational s = 0;
    for (int i = 0; i < rs.rank(); ++i) s += c[static_cast<std::size_t>(i)] * (rs.pairing(lambda, i) + 1);
    return s;
}

Weight subtract_root(const RootSystem& rs, const Weight& lambda, const Rational& n, const Root& beta) {
    Weight out = lambda;
    for (int j = 0; j < rs.rank(); ++j) out.coroot_coords[static_cast<std::size_t>(j)] -= n * rs.pairing(beta, j);
    return out;
}

bool below_or_equal(const RootSystem& rs, const Weight& mu, const Weight& nu) {
    auto k = weight_offset(rs, mu, nu);
    if (!k) return false;
    for (int c : k->coords)
        if (c < 0) return false;
    return true;
}

bool linkage_search(const RootSystem& rs, const Weight& mu, const Weight& lambda, const std::vector<Root>& reflections) {
    check_rank(rs, mu);
    check_rank(rs, lambda);
    if (mu == lambda) return true;
    if (!below_or_equal(rs, mu, lambda)) return false;
    std::set<RationalVector> seen{lambda.coroot_coords};
    std::deque<Weight> queue{lambda};
    while (!queue.empty()) {
        Weight nu = queue.front();
        queue.pop_front();
        for (const Root& beta : reflections) {
            Rational n = shifted_pairing(rs, nu, beta);
            if (n <= 0 || !is_integer(n)) continue;
            Weight next = subtract_root(rs, nu, n, beta);
            if (next == mu) return true;
            if (!below_or_equal(rs, mu, next)) continue;
            if (seen.insert(next.coroot_coords).second) queue.push_back(next);
        }
    }
    return false;
}

}  // namespace

std::optional<Root> weight_offset(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
    check_rank(rs, mu);
    check_rank(rs, lambda);
    const auto n = static_cast<std::size_t>(rs.rank());
    RationalVector d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = lambda.coroot_coords[i] - mu.coroot_coords[i];
    RationalVector k = inverse(cartan_as_matrix(rs)) * d;
    IntVec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_integer(k[i])) return std::nullopt;
        out[i] = static_cast<int>(to_int64(k[i]));
    }
    return Root(out);
}

Weight shift_weight(const RootSystem& rs, const Weight& lambda, const Root& kappa) {
    check_rank(rs, lambda);
    return subtract_root(rs, lambda, 1, kappa);
}

Weight dot_action(const RootSystem& rs, int i, const Weight& lambda) {
    check_rank(rs, lambda);
    if (i < 0 || i >= rs.rank()) throw std::invalid_argument("simple index out of range");
    return subtract_root(rs, lambda, rs.pairing(lambda, i) + 1, rs.simple_root(i));
}

Weight dot_reflect(const RootSystem& rs, const Root& beta, const Weight& lambda) {
    check_rank(rs, lambda);
    if (!rs.positive_index(beta)) throw std::invalid_argument("dot_reflect expects a positive root");
    return subtract_root(rs, lambda, shifted_pairing(rs, lambda, beta), beta);
}

bool up_ordering(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
    return linkage_search(rs, mu, lambda, rs.positive_roots());
}

bool up_ordering_simple(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
    std::vector<Root> simple;
    for (int i = 0; i < rs.rank(); ++i) simple.push_back(rs.simple_root(i));
    return linkage_search(rs, mu, lambda, simple);
}

bool up_ordering_la(const RootSystem& rs, const LocAnCharacter& mu, const LocAnCharacter& lambda) {
    if (mu.smooth_tag != lambda.smooth_tag) return false;
    for (std::size_t i = 0; i < mu.weight.size(); ++i)
        if (!is_integer(lambda.weight.coroot_coords.at(i) - mu.weight.coroot_coords[i])) return false;
    return up_ordering(rs, mu.weight, lambda.weight);
}

}  // namespace cato
