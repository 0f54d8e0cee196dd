#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cato/chevalley.hpp"
#include "cato/integrality.hpp"
#include "cato/modules_o.hpp"
#include "cato/nilexp.hpp"
#include "cato/rootsys.hpp"
#include "cato/serialize.hpp"

namespace cato::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string command;
    std::string type = "A1";
    std::string lambda;
    std::string mu;
    std::string gamma;
    std::string beta;
    std::string x, y, log;
    int n = 1;
    unsigned long p = 5;
    int depth = -1;
    int nmax = 6;
    int m0 = -1;
    int scale = 1;
    int trials = 20;
    unsigned seed = 1;
    bool simple = false;
    std::string format = "json";
    std::string out_path;
};

struct Report {
    json body = json::object();
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    bool pass = true;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

RootSystem parse_type(const std::string& t) {
    try {
        return build_root_system(t);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad type tag: ") + e.what());
    }
}

Weight parse_weight(const RootSystem& rs, const std::string& text, const char* what) {
    if (text.empty()) throw UsageError(std::string("missing --") + what);
    RationalVector v;
    try {
        for (const auto& part : split(text, ',')) v.push_back(parse_rational(part));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad --") + what + ": " + e.what());
    }
    if (static_cast<int>(v.size()) != rs.rank()) throw UsageError(std::string("--") + what + " has wrong rank");
    return Weight(std::move(v));
}

Root parse_root(const RootSystem& rs, const std::string& text, const char* what) {
    if (text.empty()) throw UsageError(std::string("missing --") + what);
    IntVec c;
    try {
        for (const auto& part : split(text, ',')) c.push_back(std::stoi(part));
    } catch (const std::exception&) {
        throw UsageError(std::string("bad --") + what + ": " + text);
    }
    if (static_cast<int>(c.size()) != rs.rank()) throw UsageError(std::string("--") + what + " has wrong rank");
    return Root(std::move(c));
}

// "1,0:1/2;0,1:3" -> (1/2) y[1,0] + 3 y[0,1]
LieElement parse_nil(const ChevalleyTable& ct, const std::string& text, const char* what) {
    LieElement z = LieElement::zero(ct);
    if (text.empty()) return z;
    for (const auto& term : split(text, ';')) {
        auto colon = term.find(':');
        if (colon == std::string::npos) throw UsageError(std::string("bad --") + what + " term: " + term);
        Root beta = parse_root(ct.roots(), term.substr(0, colon), what);
        auto k = ct.roots().positive_index(beta);
        if (!k) throw UsageError(std::string("--") + what + ": not a positive root " + to_string(beta));
        Rational c;
        try {
            c = parse_rational(term.substr(colon + 1));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("bad --") + what + " coefficient: " + e.what());
        }
        z += LieElement::basis(ct, ct.y_index(*k), c);
    }
    return z;
}

int checked_depth(const RunConfig& cfg, int fallback) {
    int d = cfg.depth < 0 ? fallback : cfg.depth;
    int cap = 0;
    try {
        cap = depth_cap();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (d < 0 || d > cap) throw UsageError("depth " + std::to_string(d) + " outside [0, " + std::to_string(cap) + "]");
    return d;
}

unsigned long checked_prime(const RunConfig& cfg) {
    if (!is_prime(cfg.p)) throw UsageError(std::to_string(cfg.p) + " is not a prime");
    return cfg.p;
}

// ---- roots -----------------------------------------------------------------

bool string_law_ok(const RootSystem& rs) {
    std::vector<Root> all;
    for (const Root& r : rs.positive_roots()) {
        all.push_back(r);
        all.push_back(-r);
    }
    for (const Root& b : all)
        for (const Root& g : all) {
            if (g == b || g == -b) continue;
            RootString s = root_string(rs, b, g);
            if (s.down - s.up != rs.pairing(g, b)) return false;
        }
    return true;
}

bool magnitudes_ok(const ChevalleyTable& ct) {
    const RootSystem& rs = ct.roots();
    std::vector<Root> all;
    for (const Root& r : rs.positive_roots()) {
        all.push_back(r);
        all.push_back(-r);
    }
    for (const Root& a : all)
        for (const Root& b : all) {
            if (!rs.is_root(a + b)) continue;
            long n = ct.structure_constant(a, b);
            if (std::labs(n) != root_string(rs, a, b).down + 1) return false;
        }
    return true;
}

Report cmd_roots(const RunConfig& cfg) {
    RootSystem rs = parse_type(cfg.type);
    ChevalleyTable ct(rs);
    Report r;
    r.body = to_json(rs);
    r.body["chevalley_dim"] = ct.dim();
    r.body["string_law"] = string_law_ok(rs) ? "ok" : "fail";
    r.pass = r.body["string_law"] == "ok";
    r.header = {"index", "root", "height"};
    for (std::size_t k = 0; k < rs.num_positive(); ++k)
        r.rows.push_back({std::to_string(k), to_string(rs.positive_root(k)), std::to_string(rs.positive_root(k).height())});
    return r;
}

// ---- check -----------------------------------------------------------------

Report check_abcd(const RunConfig& cfg) {
    RootSystem rs = parse_type(cfg.type);
    if (cfg.nmax < 0) throw UsageError("--nmax must be non-negative");
    const bool expect_counterexample = rs.label().family == 'G' && cfg.nmax >= 3;
    Report r;
    r.header = {"gamma", "holds", "n", "nu", "parts"};
    json items = json::array();
    bool all_hold = true;
    for (const Root& g : rs.positive_roots()) {
        AbcdResult a = abcd_check(rs, g, cfg.nmax);
        json item{{"gamma", to_json(g)}, {"holds", a.holds}};
        std::vector<std::string> row{to_string(g), a.holds ? "true" : "false", "", "", ""};
        if (a.counterexample) {
            item["counterexample"] = json{{"n", a.counterexample->n}, {"nu", a.counterexample->nu}, {"parts", a.counterexample->parts}};
            row[2] = std::to_string(a.counterexample->n);
            row[3] = json(a.counterexample->nu).dump();
            row[4] = std::to_string(a.counterexample->parts);
        }
        all_hold = all_hold && a.holds;
        items.push_back(item);
        r.rows.push_back(row);
    }
    r.body = json{{"type", rs.label().str()}, {"nmax", cfg.nmax}, {"expected_counterexample", expect_counterexample}, {"results", items}};
    r.pass = expect_counterexample ? !all_hold : all_hold;
    r.body["all_hold"] = all_hold;
    return r;
}

Report check_chevalley(const RunConfig& cfg) {
    RootSystem rs = parse_type(cfg.type);
    ChevalleyTable ct(rs);
    Report r;
    const bool law = string_law_ok(rs);
    const bool mag = magnitudes_ok(ct);
    const std::size_t jac = jacobi_failures(ct);
    r.body = json{{"type", rs.label().str()}, {"string_law", law}, {"magnitudes", mag}, {"jacobi_failures", jac}};
    r.pass = law && mag && jac == 0;
    r.header = {"check", "ok"};
    r.rows = {{"string_law", law ? "true" : "false"}, {"magnitudes", mag ? "true" : "false"}, {"jacobi", jac == 0 ? "true" : "false"}};
    return r;
}

Report check_weyl(const RunConfig& cfg) {
    RootSystem rs = parse_type(cfg.type);
    const auto W = weyl_group(rs);
    Report r;
    r.header = {"I", "elements", "mismatches"};
    json items = json::array();
    for (unsigned mask = 0; mask < (1u << rs.rank()); ++mask) {
        ParabolicSubset I;
        for (int i = 0; i < rs.rank(); ++i)
            if (mask & (1u << i)) I.simple.push_back(i);
        std::set<IntVec> WI;
        for (const auto& w : parabolic_subgroup(rs, I)) WI.insert(w.matrix);
        std::size_t mismatches = 0;
        for (const auto& w : W) {
            auto wit = weyl_coset_witness(rs, w.word, I);
            if (wit.has_value() == (WI.count(w.matrix) > 0)) ++mismatches;
        }
        items.push_back(json{{"I", I.simple}, {"elements", W.size()}, {"mismatches", mismatches}});
        r.rows.push_back({json(I.simple).dump(), std::to_string(W.size()), std::to_string(mismatches)});
        r.pass = r.pass && mismatches == 0;
    }
    r.body = json{{"type", rs.label().str()}, {"order", W.size()}, {"results", items}};
    return r;
}

Report check_integrality(const RunConfig& cfg) {
    RootSystem rs = parse_type(cfg.type);
    ChevalleyTable ct(rs);
    Weight lam = parse_weight(rs, cfg.lambda, "lambda");
    const unsigned long p = checked_prime(cfg);
    if (cfg.n < 0) throw UsageError("--n must be non-negative");
    std::vector<std::pair<Root, int>> todo;
    if (!cfg.gamma.empty()) {
        todo.emplace_back(parse_root(rs, cfg.gamma, "gamma"), cfg.n);
    } else {
        ParabolicSubset I = max_parabolic_subset(rs, lam);
        for (const Root& g : rs.positive_roots())
            if (!rs.in_levi(g, I))
                for (int n = 1; n <= cfg.n; ++n) todo.emplace_back(g, n);
    }
    int need = 0;
    for (const auto& [g, n] : todo) need = std::max(need, n * g.height());
    int cap = checked_depth(cfg, std::min(need, depth_cap()));
    std::optional<TruncatedModule> L;
    Report r;
    r.header = {"gamma", "n", "m0", "p", "verdict", "witness", "kernel_rank"};
    json items = json::array();
    for (const auto& [g, n] : todo) {
        try {
            RelationInstance inst =
                make_instance(rs, lam, g, n, p, cfg.m0 < 0 ? std::nullopt : std::optional<int>(cfg.m0));
            if (!L) L = simple_quotient(lam, cap, ct);
            IntegralityReport rep = relation_space(*L, inst);
            both_conditions_verify(rep);
            json j = to_json(rep);
            items.push_back(j);
            r.rows.push_back({to_string(g), std::to_string(n), std::to_string(inst.m0), std::to_string(p), to_string(rep.verdict),
                              rep.witness ? json(*rep.witness).dump() : "", std::to_string(rep.kernel_basis.size())});
            r.pass = r.pass && rep.verdict != Verdict::fails;
        } catch (const std::exception& e) {
            items.push_back(json{{"gamma", to_json(g)}, {"n", n}, {"error", e.what()}});
            r.rows.push_back({to_string(g), std::to_string(n), "", std::to_string(p), "error", "", ""});
            r.pass = false;
        }
    }
    r.body = json{{"type", rs.label().str()}, {"lambda", to_json(lam)}, {"results", items}};
    if (items.size() == 1 && !items[0].contains("error")) {
        r.body["verdict"] = items[0]["verdict"];
        r.body["witness"] = items[0]["witness"];
    }
    return r;
}

Matrix mat_exp(const Matrix& n) {
    Matrix out = Matrix::identity(n.rows());
    Matrix term = Matrix::identity(n.rows());
    for (int k = 1; !term.is_zero(); ++k) {
        term = Rational(1, k) * (term * n);
        out = out + term;
    }
    return out;
}

Matrix mat_log_unipotent(const Matrix& u) {
    const Matrix n = u - Matrix::identity(u.rows());
    Matrix out(u.rows(), u.cols());
    Matrix power = n;
    for (int k = 1; !power.is_zero(); ++k) {
        out = out + Rational(k % 2 ? 1 : -1, k) * power;
        power = power * n;
    }
    return out;
}

LieElement random_nil(const ChevalleyTable& ct, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    LieElement z = LieElement::zero(ct);
    for (std::size_t k = 0; k < ct.num_positive(); ++k) z += LieElement::basis(ct, ct.y_index(k), make_rational(num(rng), den(rng)));
    return z;
}

Report check_bch(const RunConfig& cfg) {
    RootSystem rs = parse_type(cfg.type);
    ChevalleyTable ct(rs);
    if (cfg.trials < 0) throw UsageError("--trials must be non-negative");
    std::mt19937 rng(cfg.seed);
    int failures = 0;
    for (int t = 0; t < cfg.trials; ++t) {
        LieElement a = random_nil(ct, rng), b = random_nil(ct, rng);
        Matrix lhs = ad_matrix(ct, bch(ct, a, b));
        if (!(lhs == mat_log_unipotent(mat_exp(ad_matrix(ct, a)) * mat_exp(ad_matrix(ct, b))))) ++failures;
    }
    Report r;
    r.body = json{{"type", rs.label().str()}, {"trials", cfg.trials}, {"seed", cfg.seed}, {"failures", failures}};
    r.header = {"trials", "failures"};
    r.rows = {{std::to_string(cfg.trials), std::to_string(failures)}};
    r.pass = failures == 0;
    return r;
}

// ---- verma -----------------------------------------------------------------

Report verma_dims(const RunConfig& cfg) {
    RootSystem rs = parse_type(cfg.type);
    ChevalleyTable ct(rs);
    Weight lam = parse_weight(rs, cfg.lambda, "lambda");
    const int depth = checked_depth(cfg, kDefaultDepth);
    TruncatedModule M = cfg.simple ? simple_quotient(lam, depth, ct) : build_verma(lam, depth, ct);
    Report r;
    r.body = module_dims_json(M);
    r.header = {"offset", "dim"};
    for (const Root& k : M.offsets()) r.rows.push_back({offset_key(k), std::to_string(M.dim(k))});
    return r;
}

Report verma_singvec(const RunConfig& cfg) {
    RootSystem rs = parse_type(cfg.type);
    ChevalleyTable ct(rs);
    Weight lam = parse_weight(rs, cfg.lambda, "lambda");
    Weight mu = parse_weight(rs, cfg.mu, "mu");
    const int depth = checked_depth(cfg, kDefaultDepth);
    TruncatedModule M = cfg.simple ? simple_quotient(lam, depth, ct) : build_verma(lam, depth, ct);
    Report r;
    r.header = {"vector", "monomial", "coefficient"};
    try {
        auto sv = singular_vectors(M, mu);
        auto k = *weight_offset(rs, mu, lam);
        json vecs = json::array();
        for (std::size_t v = 0; v < sv.size(); ++v) {
            json terms = json::object();
            for (std::size_t j = 0; j < sv[v].size(); ++j) {
                if (sv[v][j] == 0) continue;
                terms[json(M.basis(k)[j]).dump()] = to_string(sv[v][j]);
                r.rows.push_back({std::to_string(v), json(M.basis(k)[j]).dump(), to_string(sv[v][j])});
            }
            vecs.push_back(terms);
        }
        r.body = json{{"lambda", to_json(lam)}, {"mu", to_json(mu)}, {"offset", to_json(k)}, {"singular_vectors", vecs}};
    } catch (const std::out_of_range& e) {
        r.body = json{{"lambda", to_json(lam)}, {"mu", to_json(mu)}, {"error", e.what()}};
        r.pass = false;
    } catch (const std::invalid_argument& e) {
        r.body = json{{"lambda", to_json(lam)}, {"mu", to_json(mu)}, {"error", e.what()}};
        r.pass = false;
    }
    return r;
}

Report verma_hom(const RunConfig& cfg) {
    RootSystem rs = parse_type(cfg.type);
    ChevalleyTable ct(rs);
    Weight lam = parse_weight(rs, cfg.lambda, "lambda");
    Weight mu = parse_weight(rs, cfg.mu, "mu");
    const int depth = checked_depth(cfg, kDefaultDepth);
    Report r;
    r.header = {"mu", "lambda", "hom"};
    r.body = json{{"lambda", to_json(lam)}, {"mu", to_json(mu)}, {"depth", depth}};
    try {
        int h = hom_dim_verma(mu, lam, depth, ct);
        r.body["hom"] = h;
        r.rows.push_back({to_json(mu).dump(), to_json(lam).dump(), std::to_string(h)});
    } catch (const std::out_of_range& e) {
        r.body["error"] = e.what();
        r.pass = false;
    }
    return r;
}

Report verma_up(const RunConfig& cfg) {
    RootSystem rs = parse_type(cfg.type);
    Weight lam = parse_weight(rs, cfg.lambda, "lambda");
    Weight mu = parse_weight(rs, cfg.mu, "mu");
    const bool up = up_ordering(rs, mu, lam);
    const bool up_s = up_ordering_simple(rs, mu, lam);
    Report r;
    r.body = json{{"lambda", to_json(lam)}, {"mu", to_json(mu)}, {"up", up}, {"up_simple", up_s}};
    r.header = {"mu", "lambda", "up", "up_simple"};
    r.rows = {{to_json(mu).dump(), to_json(lam).dump(), up ? "true" : "false", up_s ? "true" : "false"}};
    return r;
}

// ---- nil -------------------------------------------------------------------

Report nil_bch(const RunConfig& cfg) {
    RootSystem rs = parse_type(cfg.type);
    ChevalleyTable ct(rs);
    LieElement x = parse_nil(ct, cfg.x, "x"), y = parse_nil(ct, cfg.y, "y");
    LieElement h = bch(ct, x, y);
    Report r;
    r.body = json{{"x", to_json(ct, x)}, {"y", to_json(ct, y)}, {"bch", to_json(ct, h)}};
    r.header = {"symbol", "coefficient"};
    for (std::size_t b : h.support()) r.rows.push_back({ct.symbol_name(b), to_string(h.coeffs[b])});
    return r;
}

Report nil_sigma(const RunConfig& cfg) {
    RootSystem rs = parse_type(cfg.type);
    ChevalleyTable ct(rs);
    Weight lam = parse_weight(rs, cfg.lambda, "lambda");
    const int depth = checked_depth(cfg, kDefaultDepth);
    TruncatedModule M = cfg.simple ? simple_quotient(lam, depth, ct) : build_verma(lam, depth, ct);
    UnipotentElement u = make_unipotent(ct, parse_nil(ct, cfg.log, "log"));
    FormalVector s = sigma_series(u, M);
    Report r;
    r.body = json{{"lambda", to_json(lam)}, {"kind", to_string(M.kind())}, {"depth", depth}, {"log", to_json(ct, u.log)}, {"sigma", to_json(s)}};
    r.header = {"offset", "coordinates"};
    for (const auto& [k, c] : s.components)
        if (!is_zero(c)) r.rows.push_back({offset_key(Root(k)), to_json(c).dump()});
    return r;
}

json roots_json(const std::vector<Root>& v) {
    json out = json::array();
    for (const Root& r : v) out.push_back(to_json(r));
    return out;
}

Report nil_reduce(const RunConfig& cfg) {
    RootSystem rs = parse_type(cfg.type);
    ChevalleyTable ct(rs);
    const unsigned long p = checked_prime(cfg);
    UnipotentElement u = make_unipotent(ct, parse_nil(ct, cfg.log, "log"));
    Report r;
    r.header = {"step", "B_plus", "B_prime", "ht_prime", "branch"};
    json steps = json::array();
    const int hmax = rs.highest_root().height();
    int step = 0;
    for (;; ++step) {
        BSets b = b_sets(ct, u, cfg.scale, p);
        auto h = ht_prime(ct, u, cfg.scale, p);
        json s{{"step", step}, {"log", to_json(ct, u.log)}, {"B_plus", roots_json(b.B_plus)}, {"B_prime", roots_json(b.B_prime)},
               {"ht_prime", h ? json(*h) : json(nullptr)}};
        std::string branch;
        if (h && !b.B_plus.empty() && step <= hmax) {
            ReductionOutcome o = reduction_step(ct, u, cfg.scale, p);
            branch = o.branch == ReductionBranch::brackets_vanish ? "brackets_vanish" : "height_raised";
            s["branch"] = branch;
            u = o.next;
        }
        r.rows.push_back({std::to_string(step), roots_json(b.B_plus).dump(), roots_json(b.B_prime).dump(), h ? std::to_string(*h) : "",
                          branch});
        steps.push_back(s);
        if (branch.empty()) {
            r.pass = !h;
            break;
        }
    }
    r.body = json{{"type", rs.label().str()}, {"p", p}, {"scale_exp", cfg.scale}, {"steps", steps}, {"terminated", r.pass}};
    return r;
}

Report nil_ledger(const RunConfig& cfg) {
    RootSystem rs = parse_type(cfg.type);
    ChevalleyTable ct(rs);
    Weight lam = parse_weight(rs, cfg.lambda, "lambda");
    const unsigned long p = checked_prime(cfg);
    const int depth = checked_depth(cfg, kDefaultDepth);
    UnipotentElement u = make_unipotent(ct, parse_nil(ct, cfg.log, "log"));
    std::optional<Root> bp = cfg.beta.empty() ? extremal_beta_plus(ct, u) : std::optional<Root>(parse_root(rs, cfg.beta, "beta"));
    if (!bp) throw UsageError("log u is zero: no extremal root");
    TruncatedModule M = cfg.simple ? simple_quotient(lam, depth, ct) : build_verma(lam, depth, ct);
    auto ledger = coefficient_valuations(u, *bp, M, p);
    Report r;
    r.body = json{{"beta_plus", to_json(*bp)}, {"p", p}, {"ledger", to_json(ledger)}};
    r.header = {"n", "vp"};
    for (const auto& e : ledger) r.rows.push_back({std::to_string(e.n), std::to_string(e.vp)});
    return r;
}

void write_csv(std::ostream& os, const Report& r) {
    auto cell = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    };
    for (std::size_t i = 0; i < r.header.size(); ++i) os << (i ? "," : "") << cell(r.header[i]);
    os << "\n";
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell(row[i]);
        os << "\n";
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Verification front end for highest-weight integrality computations", "cato"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::function<Report(const RunConfig&)> handler;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cfg.out_path, "write the report to this file");
    };
    auto typed = [&](CLI::App* sub) {
        sub->add_option("--type", cfg.type, "type tag, e.g. A2, B2, G2")->required();
        common(sub);
    };
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, Report (*fn)(const RunConfig&)) {
        CLI::App* sub = parent->add_subcommand(name, desc);
        sub->callback([&, fn, name, parent] {
            cfg.command = parent->get_name() + " " + name;
            handler = fn;
        });
        return sub;
    };

    CLI::App* roots = app.add_subcommand("roots", "root system, Chevalley table statistics and string law");
    roots->add_option("type", cfg.type, "type tag")->required();
    common(roots);
    roots->callback([&] {
        cfg.command = "roots";
        handler = cmd_roots;
    });

    CLI::App* check = app.add_subcommand("check", "run a verification suite");
    check->require_subcommand(1);
    CLI::App* c_abcd = leaf(check, "abcd", "minimal compositions of n*gamma", check_abcd);
    typed(c_abcd);
    c_abcd->add_option("--nmax", cfg.nmax);
    typed(leaf(check, "chevalley", "string law, structure constants, Jacobi", check_chevalley));
    typed(leaf(check, "weyl", "coset witnesses for every I", check_weyl));
    CLI::App* c_int = leaf(check, "integrality", "both-conditions verdicts", check_integrality);
    typed(c_int);
    c_int->add_option("--lambda", cfg.lambda)->required();
    c_int->add_option("--gamma", cfg.gamma, "omit to run every gamma outside Phi_I with n' <= n");
    c_int->add_option("--n", cfg.n);
    c_int->add_option("--p", cfg.p);
    c_int->add_option("--m0", cfg.m0);
    c_int->add_option("--depth", cfg.depth);
    CLI::App* c_bch = leaf(check, "bch", "BCH against adjoint matrix logarithms", check_bch);
    typed(c_bch);
    c_bch->add_option("--trials", cfg.trials);
    c_bch->add_option("--seed", cfg.seed);

    CLI::App* verma = app.add_subcommand("verma", "Verma and simple module queries");
    verma->require_subcommand(1);
    for (auto [name, fn] : std::vector<std::pair<std::string, Report (*)(const RunConfig&)>>{
             {"dims", verma_dims}, {"singvec", verma_singvec}, {"hom", verma_hom}, {"up", verma_up}}) {
        CLI::App* sub = leaf(verma, name, name, fn);
        typed(sub);
        sub->add_option("--lambda", cfg.lambda)->required();
        if (name != "dims") sub->add_option("--mu", cfg.mu)->required();
        if (name != "up") sub->add_option("--depth", cfg.depth);
        if (name == "dims" || name == "singvec") sub->add_flag("--simple", cfg.simple);
    }

    CLI::App* nil = app.add_subcommand("nil", "unipotent radical computations");
    nil->require_subcommand(1);
    CLI::App* n_bch = leaf(nil, "bch", "log(exp x exp y)", nil_bch);
    typed(n_bch);
    n_bch->add_option("--x", cfg.x, "terms root:coefficient separated by ';'")->required();
    n_bch->add_option("--y", cfg.y)->required();
    for (auto [name, fn] : std::vector<std::pair<std::string, Report (*)(const RunConfig&)>>{
             {"sigma", nil_sigma}, {"reduce", nil_reduce}, {"ledger", nil_ledger}}) {
        CLI::App* sub = leaf(nil, name, name, fn);
        typed(sub);
        sub->add_option("--log", cfg.log, "terms root:coefficient separated by ';'")->required();
        if (name != "reduce") {
            sub->add_option("--lambda", cfg.lambda)->required();
            sub->add_option("--depth", cfg.depth);
            sub->add_flag("--simple", cfg.simple);
        }
        if (name != "sigma") sub->add_option("--p", cfg.p);
        if (name == "reduce") sub->add_option("--scale", cfg.scale, "scale exponent s");
        if (name == "ledger") sub->add_option("--beta", cfg.beta);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        std::ostringstream help;
        app.exit(e, help, err);
        return kExitUsage;
    }

    Report report;
    try {
        report = handler(cfg);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFail;
    }

    json doc{{"schema", kSchemaVersion}, {"command", cfg.command}};
    for (auto it = report.body.begin(); it != report.body.end(); ++it) doc[it.key()] = it.value();
    doc["pass"] = report.pass;

    std::ofstream file;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file) {
            err << "error: cannot open " << cfg.out_path << "\n";
            return kExitUsage;
        }
    }
    std::ostream& os = cfg.out_path.empty() ? out : file;
    if (cfg.format == "csv")
        write_csv(os, report);
    else
        os << doc.dump(2) << "\n";
    return report.pass ? kExitPass : kExitFail;
}

}  // namespace cato::cli
