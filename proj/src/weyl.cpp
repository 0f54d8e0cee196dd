#include <deque>
#include <map>
#include <stdexcept>

#include "cato/rootsys.hpp"

namespace cato {

namespace {

IntVec reflection_matrix(const RootSystem& rs, int i) {
    const int n = rs.rank();
    IntVec m(static_cast<std::size_t>(n * n), 0);
    for (int r = 0; r < n; ++r) m[static_cast<std::size_t>(r * n + r)] = 1;
    // column j is s_i(alpha_j) = alpha_j - a_ij alpha_i
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i * n + j)] -= rs.cartan(i, j);
    return m;
}

IntVec multiply(const IntVec& a, const IntVec& b, int n) {
    IntVec c(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int aik = a[static_cast<std::size_t>(i * n + k)];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i * n + j)] += aik * b[static_cast<std::size_t>(k * n + j)];
        }
    return c;
}

std::vector<WeylElement> generate(const RootSystem& rs, const std::vector<int>& generators) {
    const int n = rs.rank();
    if (n > kMaxRank) throw std::invalid_argument("Weyl group materialization is capped at rank " + std::to_string(kMaxRank));
    std::vector<IntVec> gens;
    for (int i : generators) gens.push_back(reflection_matrix(rs, i));
    IntVec id(static_cast<std::size_t>(n * n), 0);
    for (int r = 0; r < n; ++r) id[static_cast<std::size_t>(r * n + r)] = 1;
    std::vector<WeylElement> out{{{}, id}};
    std::map<IntVec, std::size_t> seen{{id, 0}};
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            // s_i * w, word (i, w...)
            IntVec m = multiply(gens[g], out[k].matrix, n);
            if (seen.count(m)) continue;
            std::vector<int> word{generators[g]};
            word.insert(word.end(), out[k].word.begin(), out[k].word.end());
            seen[m] = out.size();
            out.push_back({std::move(word), std::move(m)});
        }
    }
    return out;
}

}  // namespace

std::vector<WeylElement> weyl_group(const RootSystem& rs) {
    std::vector<int> all;
    for (int i = 0; i < rs.rank(); ++i) all.push_back(i);
    return generate(rs, all);
}

std::vector<WeylElement> parabolic_subgroup(const RootSystem& rs, const ParabolicSubset& I) {
    return generate(rs, I.simple);
}

Root apply_word(const RootSystem& rs, std::span<const int> word, const Root& v) {
    Root r = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 0 || *it >= rs.rank()) throw std::invalid_argument("Weyl word letter out of range");
        r = rs.reflect(*it, r);
    }
    return r;
}

Root apply_inverse_word(const RootSystem& rs, std::span<const int> word, const Root& v) {
    Root r = v;
    for (int i : word) {
        if (i < 0 || i >= rs.rank()) throw std::invalid_argument("Weyl word letter out of range");
        r = rs.reflect(i, r);
    }
    return r;
}

std::optional<Root> weyl_coset_witness(const RootSystem& rs, std::span<const int> word, const ParabolicSubset& I) {
    for (const Root& beta : rs.positive_roots()) {
        if (rs.in_levi(beta, I)) continue;
        if (apply_inverse_word(rs, word, beta).is_negative()) return beta;
    }
    return std::nullopt;
}

}  // namespace cato
