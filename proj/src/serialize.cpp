#include "cato/serialize.hpp"

#include <stdexcept>

namespace cato {

json to_json(const Root& r) { return json(r.coords); }

json to_json(const RationalVector& v) {
    json out = json::array();
    for (const Rational& c : v) out.push_back(to_string(c));
    return out;
}

json to_json(const Weight& w) { return to_json(w.coroot_coords); }

std::string offset_key(const Root& r) { return to_json(r).dump(); }

json to_json(const RootSystem& rs) {
    json roots = json::array();
    for (const Root& r : rs.positive_roots()) roots.push_back(to_json(r));
    return json{{"type", rs.label().str()},
                {"rank", rs.rank()},
                {"cartan", rs.cartan_matrix()},
                {"t", rs.num_positive()},
                {"positive_roots", roots},
                {"highest_root", to_json(rs.highest_root())},
                {"rho", to_json(rs.rho())}};
}

json to_json(const ChevalleyTable& ct, const LieElement& z) {
    json out = json::object();
    for (std::size_t b : z.support()) out[ct.symbol_name(b)] = to_string(z.coeffs[b]);
    return out;
}

json chevalley_table_json(const ChevalleyTable& ct) {
    json out = json::array();
    for (std::size_t a = 0; a < ct.dim(); ++a)
        for (std::size_t b = 0; b < ct.dim(); ++b) {
            LieElement z = bracket(ct, LieElement::basis(ct, a), LieElement::basis(ct, b));
            if (z.is_zero()) continue;
            out.push_back(json{{"bra", ct.symbol_name(a)}, {"ket", ct.symbol_name(b)}, {"out", to_json(ct, z)}});
        }
    return out;
}

json module_dims_json(const TruncatedModule& M) {
    json dims = json::object();
    for (const Root& k : M.offsets()) dims[offset_key(k)] = M.dim(k);
    return json{{"lambda", to_json(M.lambda())}, {"kind", to_string(M.kind())}, {"depth", M.depth()}, {"dims", dims}};
}

json to_json(const FormalVector& v) {
    json out = json::object();
    for (const auto& [k, c] : v.components)
        if (!is_zero(c)) out[offset_key(Root(k))] = to_json(c);
    return out;
}

json to_json(const RelationInstance& inst) {
    return json{{"lambda", to_json(inst.lambda)},
                {"gamma", to_json(inst.gamma)},
                {"n", inst.n},
                {"m0", inst.m0},
                {"p", inst.ctx.p},
                {"hyp_ok", inst.ctx.hyp_ok}};
}

json to_json(const IntegralityReport& r) {
    json index = json::array();
    for (const IntVec& nu : r.index_set) index.push_back(nu);
    json kernel = json::array();
    for (const auto& k : r.kernel_basis) kernel.push_back(to_json(k));
    json out{{"instance", to_json(r.instance)},
             {"verdict", to_string(r.verdict)},
             {"witness", r.witness ? json(*r.witness) : json(nullptr)},
             {"kernel_rank", r.kernel_basis.size()},
             {"residue_ok", r.residue_ok},
             {"index_set", index},
             {"particular_solution", to_json(r.particular_solution)},
             {"kernel_basis", kernel}};
    return out;
}

json to_json(const std::vector<LedgerEntry>& ledger) {
    json out = json::array();
    for (const auto& e : ledger) out.push_back(json{{"n", e.n}, {"vp", e.vp}});
    return out;
}

Weight weight_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("weight must be a JSON array");
    RationalVector v;
    for (const auto& e : j) v.push_back(e.is_string() ? parse_rational(e.get<std::string>()) : Rational(e.get<long>()));
    return Weight(std::move(v));
}

Root root_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("root must be a JSON array");
    return Root(j.get<IntVec>());
}

}  // namespace cato
