#include <stdexcept>

#include "cato/integrality.hpp"
#include "cato/linalg.hpp"

namespace cato {

bool plocal_coset_meets(const std::vector<RationalVector>& columns, const RationalVector& b, unsigned long p) {
    const std::size_t L = b.size();
    Matrix m = columns.empty() ? Matrix(L, 0) : from_columns(columns, L);
    RationalVector rhs = b;
    const std::size_t k = m.cols();
    std::size_t r = 0;
    // Row operations stay in GL_L(Z_(p)); column operations are arbitrary over Q.
    for (; r < std::min(L, k); ++r) {
        int best = kInfiniteValuation;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = r; i < L; ++i)
            for (std::size_t j = r; j < k; ++j) {
                if (m(i, j) == 0) continue;
                int v = valuation(m(i, j), p);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (best == kInfiniteValuation) break;
        if (bi != r) {
            for (std::size_t j = 0; j < k; ++j) std::swap(m(bi, j), m(r, j));
            std::swap(rhs[bi], rhs[r]);
        }
        if (bj != r)
            for (std::size_t i = 0; i < L; ++i) std::swap(m(i, bj), m(i, r));
        Rational inv = 1 / m(r, r);
        for (std::size_t i = 0; i < L; ++i) m(i, r) *= inv;
        for (std::size_t i = r + 1; i < L; ++i) {
            if (m(i, r) == 0) continue;
            Rational f = m(i, r);  // p-integral by the choice of pivot
            for (std::size_t j = r; j < k; ++j) m(i, j) -= f * m(r, j);
            rhs[i] -= f * rhs[r];
        }
    }
    for (std::size_t i = r; i < L; ++i)
        if (rhs[i] != 0 && valuation(rhs[i], p) <= 0) return false;
    return true;
}

}  // namespace cato
