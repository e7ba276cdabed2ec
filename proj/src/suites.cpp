#include "pbr/suites.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "pbr/atl.hpp"
#include "pbr/brauer.hpp"
#include "pbr/functors.hpp"
#include "pbr/polar.hpp"
#include "pbr/superspace.hpp"
#include "pbr/uea.hpp"

namespace pbr {

bool SuiteResult::pass() const {
    for (auto& r : reports)
        if (!r.pass()) return false;
    return !reports.empty();
}

std::size_t SuiteResult::checks() const {
    std::size_t n = 0;
    for (auto& r : reports) n += r.checks.size();
    return n;
}

std::size_t SuiteResult::failures() const {
    std::size_t n = 0;
    for (auto& r : reports) n += r.failures();
    return n;
}

namespace suites {

namespace {

std::string space_label(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(2 * n) + ")"; }

Report from_checks(std::string title, std::vector<Check> cs) {
    Report r{std::move(title), {}};
    r.append(cs);
    return r;
}

std::vector<std::pair<int, int>> spaces_for(const SuiteConfig& cfg, std::vector<std::pair<int, int>> dflt) {
    if (cfg.space) return {*cfg.space};
    return dflt;
}

Q at_point(const RatFunc& f, const std::map<int, Poly>& b) {
    RatFunc v = f.substitute(b);
    if (!v.is_poly() || !v.as_poly().is_constant()) throw Error("coefficient not constant after substitution: " + v.str());
    return v.as_poly().constant_term();
}

bool is_jm(const std::string& family) { return family.rfind("JM", 0) == 0; }

std::vector<Module> oracle_modules() {
    auto s = modules::default_suite();
    s.push_back(modules::natural(2, 0));
    s.push_back(modules::natural(0, 2));
    s.push_back(modules::sp2_simple(1));
    s.push_back(modules::adjoint(3, 0));
    return s;
}

// Relators of the selected kind, checked under varpi and on every oracle module, r <= max_r.
std::vector<Report> relator_reports(bool jm, int max_r) {
    std::vector<Report> out;
    std::vector<FunctorContext> ctx;
    for (auto& M : modules::default_suite()) ctx.emplace_back(M);
    for (int r = 1; r <= max_r; ++r) {
        Report rep{std::string(jm ? "JM relations" : "AB relations") + " in Hom(" + std::to_string(r) + "," + std::to_string(r) + ")", {}};
        std::map<std::string, std::pair<int, int>> tally;
        for (auto& rel : polar::relation_suites(r)) {
            if (is_jm(rel.family) != jm) continue;
            auto& [count, bad] = tally[rel.family];
            ++count;
            BrauerElement v = polar::varpi(rel.value);
            if (!v.is_zero()) {
                ++bad;
                rep.add(rel.family + " " + rel.name + " under varpi", false, "nonzero");
            }
            for (auto& c : ctx) {
                if (!c.evaluate(rel.value).mat.is_zero()) {
                    ++bad;
                    rep.add(rel.family + " " + rel.name + " on " + c.module().name, false, "nonzero");
                }
            }
        }
        for (auto& [fam, cb] : tally)
            rep.add(fam, cb.second == 0,
                    std::to_string(cb.first) + " instances, varpi and " + std::to_string(ctx.size()) + " modules");
        if (!tally.empty()) out.push_back(std::move(rep));
    }
    return out;
}

std::vector<Report> brauer_skew(const SuiteConfig&) {
    std::vector<Report> out;
    for (int r = 1; r <= 4; ++r) out.push_back(from_checks("H^T = -H in B_" + std::to_string(r + 1), brauer::verify_h_skew(r)));
    out.push_back(quadratic_transpose_images());
    return out;
}

std::vector<Report> chord_brauer(const SuiteConfig&) {
    std::vector<Report> out;
    for (int r = 2; r <= 5; ++r)
        out.push_back(from_checks("chord relations for H_ij(" + std::to_string(r) + ")", brauer::verify_chord_in_brauer(r)));
    return out;
}

std::vector<Report> key_lemma(const SuiteConfig& cfg) {
    std::vector<Report> out;
    for (auto [m, n] : spaces_for(cfg, standard_spaces())) out.push_back(super::key_lemma_check(build_space(m, n)));
    return out;
}

std::vector<Report> casimir_eigen(const SuiteConfig& cfg) {
    std::vector<Report> out;
    for (auto [m, n] : spaces_for(cfg, standard_spaces())) out.push_back(super::casimir_eigen_check(build_space(m, n)));
    Report sp2{"sp2 Casimir on C^{0|2}", {}};
    DMat c = super::casimir(build_space(0, 1));
    DMat want = dense::identity(2);
    for (auto& row : want)
        for (auto& x : row) x *= Q(-3);
    sp2.add("C = -3 id", c == want);
    out.push_back(sp2);
    return out;
}

std::vector<Report> quartet(const SuiteConfig& cfg) {
    std::vector<Report> out;
    for (auto [m, n] : spaces_for(cfg, standard_spaces()))
        for (int r = 2; r <= 4; ++r) out.push_back(quartet_check(r, m, n));
    return out;
}

std::vector<Report> centrality(const SuiteConfig& cfg) {
    std::vector<Report> out;
    for (auto [m, n] : spaces_for(cfg, {{3, 0}, {0, 1}, {1, 1}})) {
        Report r = uea::centrality_suite(m, n, 4);
        r.title += " " + space_label(m, n);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Report> sp2_char(const SuiteConfig&) {
    std::vector<Report> out{uea::sp2_characteristic_identity()};
    UEA U(0, 1);
    UMatrix r = uea::sp2_char_residual(U, Q(2));
    Report shadow{"E^2 - 2E + C on simple sp2 modules", {}};
    for (int l = 0; l <= 8; ++l) {
        Module L = modules::sp2_simple(l);
        bool ok = true;
        for (auto& row : r)
            for (auto& x : row) ok &= dense::is_zero(U.represent(x, L.act));
        shadow.add("L(" + std::to_string(l) + ")", ok);
    }
    out.push_back(shadow);
    return out;
}

std::vector<Report> char_numeric(const SuiteConfig&) {
    std::vector<Report> out;
    out.push_back(char_identity_report(modules::natural(3, 0), {Q(1), Q(-1), Q(-2)}));
    out.push_back(char_identity_report(modules::natural(5, 0), {Q(1), Q(-1), Q(-4)}));
    out.push_back(char_identity_report(modules::natural(0, 2), {Q(1), Q(-1), Q(5)}));
    for (int l = 1; l <= 8; ++l) out.push_back(char_identity_report(modules::sp2_simple(l), {Q(-l), Q(l + 2)}));
    Report zero{"characteristic identity on L(0) (x) V", {}};
    CharIdentity ci = char_identity_numeric(modules::sp2_simple(0));
    zero.add("product of (E - e_i) vanishes", ci.product_vanishes, "degree " + std::to_string(ci.degree));
    out.push_back(zero);
    return out;
}

std::vector<Report> tlb_witness_suite(const SuiteConfig& cfg) {
    std::vector<Report> out;
    std::vector<Q> lambdas = cfg.lambda ? std::vector<Q>{*cfg.lambda} : std::vector<Q>{Q(1, 2), Q(7, 3), Q(5)};
    for (const Q& l : lambdas)
        for (int t = 1; t <= 4; ++t) out.push_back(tlb_witness(t, l, cfg.depth ? *cfg.depth : t + 2));
    return out;
}

std::vector<Report> z_reduction(const SuiteConfig&) {
    Report rep{"Z-structure", {}};
    rep.add("normalize(Z_1) = 0", normalize(polar::Z(1)).is_zero());
    Poly z2 = zvar(2);
    for (int l = 2; l <= 3; ++l) {
        Poly c = polar::eliminate_odd_z(polar::close_h(polar::ht_transpose_poly(l)) - zvar(l));
        rep.add("closing (H^" + std::to_string(l) + ")^T is consistent", c.is_zero(), c.str());
    }
    Poly z3 = polar::odd_z_polynomial(3);
    rep.add("2 Z_3 = (2 - delta) Z_2", Poly(2) * z3 == (Poly(2) - delta()) * z2, z3.str());
    Report oracle{"odd z's against oracle modules", {}};
    for (auto& M : modules::default_suite()) {
        FunctorContext ctx(M);
        for (int l : {3, 5, 7}) {
            Q direct = ctx.z_value(l), reduced = ctx.scalar(polar::odd_z_polynomial(l));
            oracle.add("z" + std::to_string(l) + " on " + M.name, direct == reduced,
                       to_string(direct) + " vs " + to_string(reduced));
        }
    }
    return {rep, oracle};
}

std::vector<Report> atl_rank(const SuiteConfig&) { return {atl::rank_report(6)}; }

std::vector<Report> atl_oracle(const SuiteConfig& cfg) {
    return {atl_closure(6), atl_associativity(500, cfg.seed), atl_sp2_tables({1, 2, 3}, 8), tlb_quadratic(),
            atl_factorization_check({1, 2, 3})};
}

using Runner = std::function<std::vector<Report>(const SuiteConfig&)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
    static const std::vector<std::pair<std::string, Runner>> r = {
        {"brauer-skew", brauer_skew},
        {"chord-brauer", chord_brauer},
        {"ab-relations", [](const SuiteConfig&) { return relator_reports(false, 4); }},
        {"jm", [](const SuiteConfig&) { return relator_reports(true, 4); }},
        {"atl-rank", atl_rank},
        {"atl-oracle", atl_oracle},
        {"key-lemma", key_lemma},
        {"casimir-eigen", casimir_eigen},
        {"quartet", quartet},
        {"centrality", centrality},
        {"sp2-char", sp2_char},
        {"char-numeric", char_numeric},
        {"tlb-witness", tlb_witness_suite},
        {"z-reduction", z_reduction},
    };
    return r;
}

}  // namespace

std::vector<std::pair<int, int>> standard_spaces() {
    return {{2, 0}, {3, 0}, {4, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 1}, {3, 1}};
}

const std::vector<std::string>& names() {
    static const std::vector<std::string> n = [] {
        std::vector<std::string> v;
        for (auto& [k, f] : registry()) v.push_back(k);
        return v;
    }();
    return n;
}

bool known(const std::string& name) {
    for (auto& n : names())
        if (n == name) return true;
    return false;
}

SuiteResult run(const std::string& name, const SuiteConfig& cfg) {
    for (auto& [k, f] : registry()) {
        if (k != name) continue;
        auto t0 = std::chrono::steady_clock::now();
        SuiteResult res{name, f(cfg), 0};
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return res;
    }
    throw Error("unknown suite: " + name);
}

Report quadratic_transpose_images() {
    Report rep{"(H^2)^T - H^2 - (delta-2)H on oracle modules", {}};
    PolarElement q = polar::transpose_power(2) - polar::power(polar::H(), 2) - (delta() - Poly(2)) * polar::H();
    auto mods = oracle_modules();
    mods.push_back(modules::sp2_truncated_verma(Q(1, 2), 6));
    for (auto& M : mods) {
        RepOperator op = evaluate_polar(q, M);
        rep.add(M.name, is_zero_in_window(op), M.truncated ? "window [0," + std::to_string(op.margin) + "]" : "");
    }
    return rep;
}

Report tlb_quadratic() {
    Report rep{"TLB quadratic relation", {}};
    Poly l = lambda();
    ATLElement h = atl::from_polar(polar::H()), id(ATLDiagram::identity(1));
    ATLElement a = h + RatFunc(l) * id;
    ATLElement b = h + (atl::c_coeff() - RatFunc(l)) * id;
    ATLElement q = atl::tlb_specialize(atl::compose(a, b), l);
    rep.add("(H + lambda)(H + (delta-2)/2 - lambda) = 0", q.is_zero(), q.str());
    ATLElement p = atl::compose(a, b);
    rep.add("relation needs the specialization of z2", !p.is_zero(), p.str());
    return rep;
}

Report atl_closure(int max_total) {
    Report rep{"ATL closure, r+m, m+s <= " + std::to_string(max_total), {}};
    long pairs = 0, bad = 0;
    for (int m = 0; m <= max_total; ++m)
        for (int r = m % 2; r + m <= max_total; r += 2)
            for (int s = m % 2; s + m <= max_total; s += 2) {
                auto lower = atl::standard_basis(r, m), upper = atl::standard_basis(m, s);
                auto target = atl::standard_basis(r, s);
                std::set<ATLDiagram> basis(target.begin(), target.end());
                for (auto& lo : lower)
                    for (auto& up : upper) {
                        ++pairs;
                        ATLElement c = atl::compose(up, lo);
                        for (auto& [d, x] : c.terms())
                            if (!basis.count(d)) {
                                ++bad;
                                rep.add(up.str() + " o " + lo.str(), false, "outside basis: " + d.str());
                            }
                    }
            }
    rep.add("compositions land in the standard basis span", bad == 0, std::to_string(pairs) + " pairs");
    return rep;
}

Report atl_associativity(int triples, unsigned seed) {
    Report rep{"ATL associativity", {}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> size(0, 4);
    std::map<std::pair<int, int>, std::vector<ATLDiagram>> cache;
    auto pick = [&](int r, int s) -> const ATLDiagram& {
        auto& b = cache[{r, s}];
        if (b.empty()) b = atl::standard_basis(r, s);
        return b[std::uniform_int_distribution<int>(0, (int)b.size() - 1)(rng)];
    };
    int bad = 0;
    for (int t = 0; t < triples; ++t) {
        int a = size(rng), b = size(rng), c = size(rng), d = size(rng);
        if ((a + b) % 2) ++b;
        if ((b + c) % 2) ++c;
        if ((c + d) % 2) ++d;
        ATLElement x(pick(a, b)), y(pick(b, c)), z(pick(c, d));
        if (atl::compose(z, atl::compose(y, x)) != atl::compose(atl::compose(z, y), x)) {
            ++bad;
            rep.add("triple " + std::to_string(t), false);
        }
    }
    rep.add("(zy)x = z(yx)", bad == 0, std::to_string(triples) + " random triples, seed " + std::to_string(seed));
    return rep;
}

Report atl_sp2_tables(const std::vector<int>& lambdas, int max_total) {
    Report rep{"ATL(-2) composition tables against sp2 modules, r+m, m+s, r+s <= " + std::to_string(max_total), {}};
    for (int l : lambdas) {
        FunctorContext ctx(modules::sp2_simple(l));
        std::map<int, Poly> pt{{var::delta, Poly(-2)}, {var::z(2), Poly(ctx.z_value(2))}};
        std::map<ATLDiagram, SMat> img;
        auto F = [&](const ATLDiagram& d) -> const SMat& {
            auto it = img.find(d);
            if (it == img.end()) it = img.emplace(d, ctx.evaluate(atl::lift(d)).mat).first;
            return it->second;
        };
        long pairs = 0, bad = 0;
        for (int m = 0; m <= max_total; ++m)
            for (int r = m % 2; r + m <= max_total; r += 2)
                for (int s = m % 2; s + m <= max_total && r + s <= max_total; s += 2) {
                    auto lower = atl::standard_basis(r, m), upper = atl::standard_basis(m, s);
                    for (auto& lo : lower)
                        for (auto& up : upper) {
                            ++pairs;
                            SMat lhs = F(up) * F(lo);
                            ATLElement c = atl::compose(up, lo);
                            SMat rhs(lhs.rows(), lhs.cols());
                            for (auto& [d, x] : c.terms()) rhs += F(d) * at_point(x, pt);
                            if (!(lhs == rhs)) {
                                ++bad;
                                if (bad <= 5) rep.add(up.str() + " o " + lo.str(), false, "lambda " + std::to_string(l));
                            }
                        }
                }
        rep.add("L(" + std::to_string(l) + "): F(A)F(B) = F(A o B)", bad == 0,
                std::to_string(pairs) + " pairs, z2 = " + to_string(ctx.z_value(2)));
    }
    return rep;
}

}  // namespace suites

}  // namespace pbr
