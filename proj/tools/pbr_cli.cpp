#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pbr/atl.hpp"
#include "pbr/expr.hpp"
#include "pbr/functors.hpp"
#include "pbr/suites.hpp"

using json = nlohmann::ordered_json;
using namespace pbr;

namespace {

constexpr int kUsage = 2;

// Human summary; stderr when the JSON report goes to stdout.
FILE* g_out = stdout;

struct Options {
    std::optional<int> m, n, depth, t, r;
    std::optional<std::string> lambda, delta;
    unsigned seed = SuiteConfig{}.seed;
    std::string json_path;
    int max_n = 6;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SuiteConfig config(const Options& o) {
    SuiteConfig c;
    if (o.m.has_value() != o.n.has_value()) throw UsageError("--m and --n must be given together");
    if (o.m) {
        if (*o.m < 0 || *o.n < 0 || *o.m + *o.n == 0) throw UsageError("need m, n >= 0 and m + n > 0");
        c.space = {*o.m, *o.n};
    }
    if (o.lambda) {
        try {
            c.lambda = parse_rational(*o.lambda);
        } catch (const std::exception&) {
            throw UsageError("bad --lambda '" + *o.lambda + "'");
        }
    }
    if (o.depth) {
        if (*o.depth < 0) throw UsageError("--depth must be >= 0");
        c.depth = o.depth;
    }
    c.seed = o.seed;
    return c;
}

json matrix_json(const SMat& a) {
    json j{{"rows", a.rows()}, {"cols", a.cols()}};
    if ((long)a.rows() * a.cols() > 64) {
        j["nnz"] = a.nnz();
        j["hash"] = a.hash();
        return j;
    }
    json rows = json::array();
    for (int i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < a.cols(); ++k) row.push_back(to_string(a.at(i, k)));
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

json polar_json(const PolarElement& e) {
    json terms = json::array();
    for (auto& [w, c] : e.terms()) {
        json layers = json::array();
        for (auto& l : w.layers()) {
            if (auto d = std::get_if<BrauerDiagram>(&l))
                layers.push_back({{"brauer", d->pairing()}, {"r", d->r()}, {"s", d->s()}});
            else {
                auto& cl = std::get<ConnectorLayer>(l);
                layers.push_back({{"connector", cl.attach}, {"strands", cl.n}});
            }
        }
        terms.push_back({{"coeff", c.str()}, {"layers", layers}});
    }
    return {{"r", e.r()}, {"s", e.s()}, {"terms", terms}};
}

json brauer_json(const BrauerElement& e) {
    json terms = json::array();
    for (auto& [d, c] : e.terms()) terms.push_back({{"coeff", c.str()}, {"pairing", d.pairing()}});
    return {{"r", e.r()}, {"s", e.s()}, {"terms", terms}};
}

json reports_json(const std::vector<Report>& reps) {
    json out = json::array();
    for (auto& r : reps) {
        json cs = json::array();
        for (auto& c : r.checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        out.push_back({{"title", r.title}, {"pass", r.pass()}, {"checks", cs}});
    }
    return out;
}

void emit(const Options& o, const json& j) {
    if (o.json_path.empty()) return;
    if (o.json_path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(o.json_path);
    if (!f) throw std::runtime_error("cannot write " + o.json_path);
    f << j.dump(2) << "\n";
}

int finish_reports(const Options& o, const std::string& what, const std::vector<Report>& reps, double secs) {
    std::size_t checks = 0, bad = 0;
    for (auto& r : reps) {
        checks += r.checks.size();
        bad += r.failures();
        std::fprintf(g_out, "%s %s (%zu checks)\n", r.pass() ? "ok  " : "FAIL", r.title.c_str(), r.checks.size());
        for (auto& c : r.checks)
            if (!c.pass) std::fprintf(g_out, "     %s %s\n", c.name.c_str(), c.detail.c_str());
    }
    bool pass = bad == 0 && checks > 0;
    std::fprintf(g_out, "%s: %s, %zu checks, %zu failed, %.2f s\n", what.c_str(), pass ? "PASS" : "FAIL", checks, bad, secs);
    emit(o, {{"command", what},
             {"pass", pass},
             {"checks", checks},
             {"failures", bad},
             {"seconds", secs},
             {"reports", reports_json(reps)}});
    return pass ? 0 : 1;
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_suite(const Options& o, const std::string& name) {
    if (!suites::known(name)) throw UsageError("unknown suite '" + name + "'");
    SuiteResult res = suites::run(name, config(o));
    return finish_reports(o, "suite " + name, res.reports, res.seconds);
}

int rank_atl(const Options& o) {
    if (o.max_n < 0 || o.max_n > 8) throw UsageError("--max-n must be in 0..8");
    json rows = json::array();
    bool pass = true;
    std::fprintf(g_out, "%3s %3s %8s %8s  %s\n", "N", "r", "count", "C(2N,N)", "match");
    for (int N = 0; N <= o.max_n; ++N)
        for (int r = 0; r <= 2 * N; ++r) {
            long long count = atl::standard_basis(r, 2 * N - r).size();
            long long want = atl::binomial(2 * N, N);
            pass &= count == want;
            std::fprintf(g_out, "%3d %3d %8lld %8lld  %s\n", N, r, count, want, count == want ? "yes" : "no");
            rows.push_back({{"N", N}, {"r", r}, {"count", count}, {"expected", want}, {"match", count == want}});
        }
    emit(o, {{"command", "rank-atl"}, {"pass", pass}, {"table", rows}});
    return pass ? 0 : 1;
}

int verify(const Options& o, const std::string& what) {
    SuiteConfig cfg = config(o);
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Report> reps;
    if (what == "quartet") {
        if (!cfg.space) return run_suite(o, "quartet");
        std::vector<int> rs = o.r ? std::vector<int>{*o.r} : std::vector<int>{2, 3, 4};
        for (int r : rs) {
            if (r < 2 || r > 5) throw UsageError("--r must be in 2..5");
            reps.push_back(quartet_check(r, cfg.space->first, cfg.space->second));
        }
    } else if (what == "char-id") {
        std::vector<Module> ms;
        if (cfg.space) ms.push_back(modules::natural(cfg.space->first, cfg.space->second));
        if (cfg.lambda) {
            if (cfg.lambda->get_den() != 1 || *cfg.lambda < 0) throw UsageError("char-id needs an integer --lambda >= 0");
            ms.push_back(modules::sp2_simple((int)cfg.lambda->get_num().get_si()));
        }
        if (ms.empty()) return run_suite(o, "char-numeric");
        for (auto& M : ms) {
            CharIdentity ci = char_identity_numeric(M);
            Report rep{"characteristic identity on " + M.name + " (x) V", {}};
            std::string roots;
            for (auto& [q, mult] : ci.roots) roots += (roots.empty() ? "" : ", ") + to_string(q) + "^" + std::to_string(mult);
            rep.add("product of (E - e_i) vanishes", ci.product_vanishes,
                    "roots {" + roots + "}, degree " + std::to_string(ci.degree));
            std::fprintf(g_out, "%s: roots {%s}\n", M.name.c_str(), roots.c_str());
            reps.push_back(rep);
        }
    } else if (what == "tlb-witness") {
        if (!cfg.lambda && !o.t) return run_suite(o, "tlb-witness");
        Q lambda = cfg.lambda ? *cfg.lambda : Q(1, 2);
        std::vector<int> ts = o.t ? std::vector<int>{*o.t} : std::vector<int>{1, 2, 3, 4};
        for (int t : ts) {
            if (t < 1 || t > 6) throw UsageError("--t must be in 1..6");
            int depth = cfg.depth ? *cfg.depth : t + 2;
            try {
                reps.push_back(tlb_witness(t, lambda, depth));
            } catch (const Error& e) {
                throw UsageError(e.what());
            }
        }
    } else {
        throw UsageError("verify: expected quartet, char-id or tlb-witness");
    }
    return finish_reports(o, "verify " + what, reps, since(t0));
}

expr::Value parse_or_report(const std::string& text, expr::Ast* ast = nullptr) {
    try {
        expr::Ast a = expr::parse(text);
        if (ast) *ast = a;
        return expr::elaborate(a);
    } catch (const expr::ParseError& e) {
        throw UsageError(std::string(e.what()) + "\n" + expr::pointer(text, e.span()));
    }
}

int normalize_cmd(const Options& o, const std::string& text) {
    expr::Ast ast;
    expr::Value v = parse_or_report(text, &ast);
    PolarElement nf = normalize(v.polar);
    std::fprintf(g_out, "input     %s\n", expr::render(ast).c_str());
    std::fprintf(g_out, "arity     %d -> %d\n", nf.r(), nf.s());
    std::fprintf(g_out, "normal    %s\n", nf.str().c_str());
    json j{{"command", "normalize"}, {"input", expr::render(ast)}, {"normal", polar_json(nf)}};
    if (v.brauer) {
        std::fprintf(g_out, "brauer    %s\n", v.brauer->str().c_str());
        j["brauer"] = brauer_json(*v.brauer);
    }
    j["pass"] = true;
    emit(o, j);
    return 0;
}

int eval_cmd(const Options& o, const std::string& text) {
    SuiteConfig cfg = config(o);
    expr::Ast ast;
    expr::Value v = parse_or_report(text, &ast);
    BrauerElement img = polar::varpi(v.polar);
    json j{{"command", "eval"}, {"input", expr::render(ast)}, {"arity", {v.polar.r(), v.polar.s()}}};
    std::fprintf(g_out, "input     %s\n", expr::render(ast).c_str());
    std::fprintf(g_out, "varpi     %s\n", img.str().c_str());
    j["varpi"] = brauer_json(img);
    if (o.delta) {
        Q d;
        try {
            d = parse_rational(*o.delta);
        } catch (const std::exception&) {
            throw UsageError("bad --delta '" + *o.delta + "'");
        }
        BrauerElement at = img.substitute({{var::delta, Poly(d)}});
        std::fprintf(g_out, "at delta=%s  %s\n", to_string(d).c_str(), at.str().c_str());
        j["delta"] = to_string(d);
        j["varpi_at_delta"] = brauer_json(at);
    }
    if (cfg.space) {
        auto [m, n] = *cfg.space;
        Module M = modules::natural(m, n);
        RepOperator op = evaluate_polar(v.polar, M);
        std::fprintf(g_out, "F_V       %dx%d matrix, %zu nonzeros, hash %s\n", op.mat.rows(), op.mat.cols(), op.mat.nnz(),
                    op.mat.hash().c_str());
        j["module"] = M.name;
        j["F_module"] = matrix_json(op.mat);
        if (v.brauer) j["F"] = matrix_json(evaluate_brauer(*v.brauer, build_space(m, n)));
    }
    j["pass"] = true;
    emit(o, j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polar Brauer toolkit"};
    app.require_subcommand(0, 1);
    Options o;
    std::string suite, verify_what, text;
    auto add_common = [&](CLI::App* a) {
        a->add_option("--m", o.m, "even dimension m of V = C^{m|2n}");
        a->add_option("--n", o.n, "half the odd dimension of V");
        a->add_option("--lambda", o.lambda, "highest weight, rational");
        a->add_option("--depth", o.depth, "truncation depth of Verma modules");
        a->add_option("--seed", o.seed, "seed for sampled properties");
        a->add_option("--json", o.json_path, "write the JSON report here ('-' for stdout)");
    };
    add_common(&app);
    app.add_option("--suite", suite, "run a named suite");
    auto* list = app.add_subcommand("list", "list suite names");
    auto* rank = app.add_subcommand("rank-atl", "ATL rank table");
    rank->add_option("--max-n", o.max_n, "largest N")->capture_default_str();
    rank->add_option("--json", o.json_path, "write the JSON report here");
    auto* ver = app.add_subcommand("verify", "targeted verification");
    ver->add_option("what", verify_what, "quartet | char-id | tlb-witness")->required();
    add_common(ver);
    ver->add_option("--r", o.r, "tensor power (quartet)");
    ver->add_option("--t", o.t, "witness size (tlb-witness)");
    auto* norm = app.add_subcommand("normalize", "parse and normalize a diagram expression");
    norm->add_option("expr", text, "expression")->required();
    norm->add_option("--json", o.json_path, "write the JSON report here");
    auto* ev = app.add_subcommand("eval", "evaluate a diagram expression");
    ev->add_option("expr", text, "expression")->required();
    add_common(ev);
    ev->add_option("--delta", o.delta, "substitute delta in the Brauer image");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }
    if (o.json_path == "-") g_out = stderr;

    try {
        if (list->parsed()) {
            for (auto& s : suites::names()) std::fprintf(g_out, "%s\n", s.c_str());
            return 0;
        }
        if (rank->parsed()) return rank_atl(o);
        if (ver->parsed()) return verify(o, verify_what);
        if (norm->parsed()) return normalize_cmd(o, text);
        if (ev->parsed()) return eval_cmd(o, text);
        if (!suite.empty()) return run_suite(o, suite);
        std::fprintf(stderr, "%s", app.help().c_str());
        return kUsage;
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
