#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "cato/modules_o.hpp"

namespace cato {

int depth_cap() {
    const char* env = std::getenv("CATO_DEPTH_CAP");
    if (!env || !*env) return kDefaultDepthCap;
    try {
        std::size_t used = 0;
        int v = std::stoi(env, &used);
        if (used != std::string(env).size() || v < 0) throw std::invalid_argument("bad");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("CATO_DEPTH_CAP is not a non-negative integer: ") + env);
    }
}

std::string to_string(ModuleKind k) { return k == ModuleKind::verma ? "verma" : "simple"; }

// ---- FormalVector ----------------------------------------------------------

bool FormalVector::is_zero() const {
    for (const auto& [k, v] : components)
        if (!cato::is_zero(v)) return false;
    return true;
}

const RationalVector* FormalVector::component(const Root& offset) const {
    auto it = components.find(offset.coords);
    return it == components.end() ? nullptr : &it->second;
}

void FormalVector::add(const Root& offset, const RationalVector& v) {
    auto [it, inserted] = components.emplace(offset.coords, v);
    if (!inserted) it->second = cato::add(it->second, v);
}

FormalVector& FormalVector::operator+=(const FormalVector& o) {
    for (const auto& [k, v] : o.components) add(Root(k), v);
    return *this;
}

FormalVector operator*(const Rational& s, FormalVector a) {
    for (auto& [k, v] : a.components) v = scale(s, v);
    return a;
}

bool FormalVector::equals(const FormalVector& o) const {
    auto nonzero = [](const FormalVector& f) {
        std::map<IntVec, RationalVector> m;
        for (const auto& [k, v] : f.components)
            if (!cato::is_zero(v)) m.emplace(k, v);
        return m;
    };
    return nonzero(*this) == nonzero(o);
}

// ---- helpers ---------------------------------------------------------------

namespace {

bool has_negative(const Root& r) {
    return std::any_of(r.coords.begin(), r.coords.end(), [](int c) { return c < 0; });
}

std::vector<Root> offsets_up_to(int rank, int depth) {
    std::vector<Root> out;
    IntVec cur(static_cast<std::size_t>(rank), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
        if (pos == cur.size()) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, depth);
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return lex_compare(a.coords, b.coords) == std::strong_ordering::greater;
    });
    return out;
}

void check_depth(int depth) {
    if (depth < 0) throw std::invalid_argument("depth must be non-negative");
    int cap = depth_cap();
    if (depth > cap) throw std::invalid_argument("depth " + std::to_string(depth) + " exceeds the cap " + std::to_string(cap));
}

}  // namespace

// ---- TruncatedModule -------------------------------------------------------

bool TruncatedModule::retained(const Root& offset) const {
    return offset.size() == static_cast<std::size_t>(roots().rank()) && !has_negative(offset) && offset.height() <= depth_;
}

const TruncatedModule::Space& TruncatedModule::space(const Root& offset) const {
    auto it = spaces_.find(offset.coords);
    if (it == spaces_.end())
        throw std::out_of_range("offset " + to_string(offset) + " is not retained at depth " + std::to_string(depth_));
    return it->second;
}

std::size_t TruncatedModule::dim(const Root& offset) const {
    if (offset.size() != static_cast<std::size_t>(roots().rank())) throw std::invalid_argument("offset has wrong rank");
    if (has_negative(offset)) return 0;
    return space(offset).basis.size();
}

std::vector<Root> TruncatedModule::offsets() const { return offsets_up_to(roots().rank(), depth_); }

const std::vector<IntVec>& TruncatedModule::basis(const Root& offset) const { return space(offset).basis; }

bool TruncatedModule::action_defined(std::size_t g, const Root& offset) const {
    return space(offset).act.at(g).has_value();
}

const Matrix& TruncatedModule::action(std::size_t g, const Root& offset) const {
    const auto& a = space(offset).act.at(g);
    if (!a) throw std::out_of_range("action of " + table().symbol_name(g) + " from " + to_string(offset) + " leaves depth " + std::to_string(depth_));
    return *a;
}

Weight TruncatedModule::weight_at(const Root& offset) const { return shift_weight(roots(), lambda_, offset); }

FormalVector TruncatedModule::highest_weight_vector() const {
    FormalVector v;
    v.add(Root(IntVec(static_cast<std::size_t>(roots().rank()), 0)), RationalVector{Rational(1)});
    return v;
}

FormalVector TruncatedModule::act(std::size_t g, const FormalVector& v, Overflow policy) const {
    FormalVector out;
    const Root w = table().weight_of(g);
    for (const auto& [k, vec] : v.components) {
        if (cato::is_zero(vec)) continue;
        Root src(k);
        Root dst = src - w;
        if (has_negative(dst)) continue;
        const auto& a = space(src).act.at(g);
        if (!a) {
            if (policy == Overflow::drop) continue;
            throw std::out_of_range("action of " + table().symbol_name(g) + " leaves depth " + std::to_string(depth_));
        }
        out.add(dst, *a * vec);
    }
    return out;
}

FormalVector TruncatedModule::act(const LieElement& z, const FormalVector& v, Overflow policy) const {
    if (z.algebra != table().label()) throw std::invalid_argument("Lie element of another algebra");
    FormalVector out;
    for (std::size_t g : z.support()) out += z.coeffs[g] * act(g, v, policy);
    return out;
}

FormalVector TruncatedModule::act_monomial(const IntVec& nu, const FormalVector& v, Overflow policy) const {
    if (nu.size() != table().num_positive()) throw std::invalid_argument("monomial has wrong length");
    FormalVector cur = v;
    for (std::size_t k = nu.size(); k-- > 0;)
        for (int e = 0; e < nu[k]; ++e) cur = act(table().y_index(k), cur, policy);
    return cur;
}

// ---- construction ----------------------------------------------------------

TruncatedModule build_verma(const Weight& lambda, int depth, const ChevalleyTable& ct) {
    check_depth(depth);
    const RootSystem& rs = ct.roots();
    if (static_cast<int>(lambda.size()) != rs.rank()) throw std::invalid_argument("weight has wrong rank");
    TruncatedModule M;
    M.kind_ = ModuleKind::verma;
    M.lambda_ = lambda;
    M.depth_ = depth;
    M.ct_ = std::make_shared<const ChevalleyTable>(ct);
    const std::size_t t = ct.num_positive();
    const std::size_t dim = ct.dim();
    const std::vector<Root> offsets = offsets_up_to(rs.rank(), depth);

    std::map<IntVec, std::map<IntVec, std::size_t>> index;
    for (const Root& k : offsets) {
        auto& sp = M.spaces_[k.coords];
        sp.basis = compositions_of(rs, k);
        sp.act.assign(dim, std::nullopt);
        auto& idx = index[k.coords];
        for (std::size_t j = 0; j < sp.basis.size(); ++j) idx[sp.basis[j]] = j;
    }

    // Lowering operators through PBW left multiplication, Cartan diagonally.
    PBWAlgebra alg(ct);
    const IntVec zero_l(static_cast<std::size_t>(rs.rank()), 0), zero_t(t, 0);
    for (const Root& k : offsets) {
        auto& sp = M.spaces_[k.coords];
        const std::size_t n = sp.basis.size();
        for (std::size_t b = 0; b < t; ++b) {
            Root dst = k + rs.positive_root(b);
            if (dst.height() > depth) continue;
            const auto& tgt = index.at(dst.coords);
            Matrix m(tgt.size(), n);
            for (std::size_t j = 0; j < n; ++j) {
                PBWElement e = alg.left_multiply(ct.y_index(b), PBWMonomial::from_parts(ct, sp.basis[j], zero_l, zero_t));
                for (const auto& [mono, c] : e.terms) m(tgt.at(mono.neg_exps(ct)), j) = c;
            }
            sp.act[ct.y_index(b)] = std::move(m);
        }
        for (int i = 0; i < rs.rank(); ++i) {
            Matrix m(n, n);
            Rational v = rs.pairing(lambda, i) - rs.pairing(k, i);
            for (std::size_t j = 0; j < n; ++j) m(j, j) = v;
            sp.act[ct.h_index(i)] = std::move(m);
        }
    }

    // Raising operators by height: x (y_f w) = y_f (x w) + [x, y_f] w.
    for (const Root& k : offsets) {
        auto& sp = M.spaces_[k.coords];
        const std::size_t n = sp.basis.size();
        for (std::size_t b = 0; b < t; ++b) {
            Root dst = k - rs.positive_root(b);
            const std::size_t g = ct.x_index(b);
            if (has_negative(dst)) {
                sp.act[g] = Matrix(0, n);
                continue;
            }
            Matrix m(index.at(dst.coords).size(), n);
            for (std::size_t j = 0; j < n; ++j) {
                const IntVec& nu = sp.basis[j];
                std::size_t f = 0;
                while (nu[f] == 0) ++f;
                IntVec rest = nu;
                --rest[f];
                Root mid = k - rs.positive_root(f);
                const std::size_t jr = index.at(mid.coords).at(rest);
                const auto& msp = M.spaces_.at(mid.coords);
                RationalVector col(m.rows());
                Root low = mid - rs.positive_root(b);
                if (!has_negative(low)) {
                    RationalVector xw = msp.act[g]->column(jr);
                    col = add(col, *M.spaces_.at(low.coords).act[ct.y_index(f)] * xw);
                }
                for (const auto& [gen, c] : ct.bracket_basis(g, ct.y_index(f))) {
                    RationalVector part = msp.act[gen]->column(jr);
                    col = add(col, scale(Rational(c), part));
                }
                for (std::size_t r = 0; r < m.rows(); ++r) m(r, j) = col[r];
            }
            sp.act[g] = std::move(m);
        }
    }
    return M;
}

TruncatedModule simple_quotient(const Weight& lambda, int depth, const ChevalleyTable& ct) {
    return simple_quotient(build_verma(lambda, depth, ct));
}

TruncatedModule simple_quotient(const TruncatedModule& verma) {
    if (verma.kind() != ModuleKind::verma) throw std::invalid_argument("simple_quotient expects a Verma module");
    const ChevalleyTable& ct = verma.table();
    const RootSystem& rs = ct.roots();
    const std::vector<Root> offsets = verma.offsets();

    // Q[k]: M_k -> L_k with kernel {v : x_i v lies in the kernel one step up, all i}.
    std::map<IntVec, Matrix> Q;
    std::map<IntVec, std::vector<std::size_t>> pivots;
    for (const Root& k : offsets) {
        const std::size_t n = verma.dim(k);
        if (k.height() == 0) {
            Q[k.coords] = Matrix::identity(n);
            pivots[k.coords] = {0};
            continue;
        }
        std::vector<Matrix> blocks;
        for (int i = 0; i < rs.rank(); ++i) {
            Root dst = k - rs.simple_root(i);
            if (has_negative(dst)) continue;
            blocks.push_back(Q.at(dst.coords) * verma.action(ct.x_index(static_cast<std::size_t>(i)), k));
        }
        RowEchelon e = row_reduce(vstack(blocks, n));
        Matrix q(e.pivots.size(), n);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            for (std::size_t c = 0; c < n; ++c) q(r, c) = e.reduced(r, c);
        Q[k.coords] = std::move(q);
        pivots[k.coords] = e.pivots;
    }

    TruncatedModule L;
    L.kind_ = ModuleKind::simple;
    L.lambda_ = verma.lambda_;
    L.depth_ = verma.depth_;
    L.ct_ = verma.ct_;
    for (const Root& k : offsets) {
        const auto& piv = pivots.at(k.coords);
        auto& sp = L.spaces_[k.coords];
        for (std::size_t p : piv) sp.basis.push_back(verma.basis(k)[p]);
        sp.act.assign(ct.dim(), std::nullopt);
        for (std::size_t g = 0; g < ct.dim(); ++g) {
            if (!verma.action_defined(g, k)) continue;
            Root dst = k - ct.weight_of(g);
            if (has_negative(dst)) {
                sp.act[g] = Matrix(0, piv.size());
                continue;
            }
            Matrix full = Q.at(dst.coords) * verma.action(g, k);
            Matrix m(full.rows(), piv.size());
            for (std::size_t r = 0; r < full.rows(); ++r)
                for (std::size_t j = 0; j < piv.size(); ++j) m(r, j) = full(r, piv[j]);
            sp.act[g] = std::move(m);
        }
    }
    return L;
}

// ---- queries ---------------------------------------------------------------

std::vector<RationalVector> singular_vectors(const TruncatedModule& M, const Weight& mu) {
    const RootSystem& rs = M.roots();
    auto k = weight_offset(rs, mu, M.lambda());
    if (!k || has_negative(*k)) throw std::invalid_argument("lambda - mu is not a non-negative root-lattice combination");
    if (!M.retained(*k)) throw std::out_of_range("weight offset " + to_string(*k) + " lies beyond depth " + std::to_string(M.depth()));
    const std::size_t n = M.dim(*k);
    std::vector<Matrix> blocks;
    for (int i = 0; i < rs.rank(); ++i) blocks.push_back(M.action(M.table().x_index(static_cast<std::size_t>(i)), *k));
    return nullspace(vstack(blocks, n));
}

int hom_dim_verma(const Weight& mu, const Weight& lambda, int depth, const ChevalleyTable& ct) {
    return hom_dim_verma(build_verma(lambda, depth, ct), mu);
}

int hom_dim_verma(const TruncatedModule& verma, const Weight& mu) {
    if (verma.kind() != ModuleKind::verma) throw std::invalid_argument("hom_dim_verma expects a Verma module");
    auto k = weight_offset(verma.roots(), mu, verma.lambda());
    if (!k || has_negative(*k)) return 0;
    if (!verma.retained(*k)) throw std::out_of_range("weight offset " + to_string(*k) + " lies beyond depth " + std::to_string(verma.depth()));
    auto s = singular_vectors(verma, mu);
    if (s.size() > 1) throw std::logic_error("more than one singular vector in a Verma weight space");
    return static_cast<int>(s.size());
}

bool local_finiteness_check(const TruncatedModule& L, int i) {
    if (L.kind() != ModuleKind::simple) throw std::invalid_argument("local_finiteness_check expects a simple module");
    if (i < 0 || i >= L.roots().rank()) throw std::invalid_argument("simple index out of range");
    FormalVector v = L.highest_weight_vector();
    const std::size_t g = L.table().y_index(static_cast<std::size_t>(i));
    for (int k = 1; k <= L.depth(); ++k) {
        v = L.act(g, v);
        if (v.is_zero()) return true;
    }
    return false;
}

bool injectivity_check(const TruncatedModule& L, const Root& gamma, int depth_used) {
    if (L.kind() != ModuleKind::simple) throw std::invalid_argument("injectivity_check expects a simple module");
    const RootSystem& rs = L.roots();
    auto idx = rs.positive_index(gamma);
    if (!idx) throw std::invalid_argument("gamma must be a positive root");
    if (rs.in_levi(gamma, max_parabolic_subset(rs, L.lambda()))) throw std::invalid_argument("gamma lies in Phi_I^+");
    if (depth_used > L.depth()) throw std::out_of_range("depth_used exceeds the module depth");
    const std::size_t g = L.table().y_index(*idx);
    for (const Root& k : L.offsets()) {
        if (k.height() > depth_used - gamma.height()) continue;
        const Matrix& m = L.action(g, k);
        if (rank(m) < m.cols()) return false;
    }
    return true;
}

}  // namespace cato
