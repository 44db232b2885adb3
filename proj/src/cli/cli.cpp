#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lzb/cli.hpp"
#include "lzb/demchar.hpp"
#include "lzb/qrep.hpp"
#include "lzb/symfun.hpp"

namespace lzb::cli {

namespace {

using Json = nlohmann::ordered_json;
using Fields = std::vector<std::pair<std::string, std::string>>;

std::vector<int> parse_ints(const std::string& s, bool allow_empty = true) {
    std::vector<int> out;
    if (s.empty() || s == "()" || s == "0") {
        if (!allow_empty) throw std::invalid_argument("empty integer list");
        if (s == "0") out.push_back(0);
        return out;
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer list: " + s);
        }
        if (used != item.size()) throw std::invalid_argument("not an integer list: " + s);
        out.push_back(v);
    }
    return out;
}

Partition parse_partition(const std::string& s) {
    std::vector<int> parts = parse_ints(s);
    return Partition(parts);
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string monomial(const Exponent& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

std::string coef_text(const BigInt& c) { return c.get_str(); }
std::string coef_text(const LaurentQ& c) { return c.to_string(); }
std::string coef_text(const RatFuncQT& c) { return c.to_string(); }
bool is_one(const BigInt& c) { return c == 1; }
bool is_one(const LaurentQ& c) { return c == LaurentQ(1); }
bool is_one(const RatFuncQT& c) { return c == RatFuncQT(1); }
bool is_minus_one(const BigInt& c) { return c == -1; }
template <class C>
bool is_minus_one(const C&) {
    return false;
}
bool is_atomic(const BigInt&) { return true; }
bool is_atomic(const LaurentQ& c) { return c.terms().size() == 1 && c.terms().front().first == 0; }
bool is_atomic(const RatFuncQT&) { return false; }

/// Terms in decreasing lexicographic order of exponents, e.g. "x1^2*x2 + x1*x2^2".
template <class C>
std::string poly_text(const ExpPoly<C>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const std::string mono = monomial(it->first);
        std::string term;
        if (mono.empty()) {
            term = is_atomic(it->second) ? coef_text(it->second) : "(" + coef_text(it->second) + ")";
        } else if (is_one(it->second)) {
            term = mono;
        } else if (is_minus_one(it->second)) {
            term = "-" + mono;
        } else {
            term = (is_atomic(it->second) ? coef_text(it->second) : "(" + coef_text(it->second) + ")") + "*" + mono;
        }
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

Json laurent_json(const LaurentQ& c) {
    Json a = Json::array();
    for (const auto& [e, v] : c.terms()) a.push_back({{"qexp", e}, {"texp", 0}, {"coef", rat_to_string(v)}});
    return a;
}

Json polyqt_json(const PolyQT& p) {
    Json a = Json::array();
    for (const auto& [e, v] : p.terms()) a.push_back({{"qexp", e.first}, {"texp", e.second}, {"coef", v.get_str()}});
    return a;
}

Json coef_json(const BigInt& c) { return c.get_str(); }
Json coef_json(const LaurentQ& c) { return laurent_json(c); }
Json coef_json(const RatFuncQT& c) { return Json{{"num", polyqt_json(c.num())}, {"den", polyqt_json(c.den())}}; }

template <class C>
Json poly_json(const ExpPoly<C>& p) {
    Json a = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        a.push_back({{"exp", it->first}, {"coef", coef_json(it->second)}});
    return a;
}

struct Out {
    std::ostream& os;
    Format format;
};

template <class C>
void print_poly(const Out& o, const ExpPoly<C>& p, const Json& header) {
    switch (o.format) {
        case Format::Text: o.os << poly_text(p) << "\n"; break;
        case Format::Json: {
            Json j = header;
            j["terms"] = poly_json(p);
            o.os << j.dump() << "\n";
            break;
        }
        case Format::Csv:
            o.os << "monomial,coefficient\n";
            for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
                o.os << "\"" << (monomial(it->first).empty() ? "1" : monomial(it->first)) << "\",\""
                     << coef_text(it->second) << "\"\n";
            break;
    }
}

void print_character(const Out& o, const GradedCharacter& c, const Json& header) {
    switch (o.format) {
        case Format::Text: o.os << c.to_string() << "\n"; break;
        case Format::Json: {
            Json j = header;
            Json a = Json::array();
            for (const auto& [key, v] : c.coefficients())
                a.push_back({{"class", key.first}, {"qexp", key.second}, {"coef", rat_to_string(v)}});
            j["coefficients"] = a;
            o.os << j.dump() << "\n";
            break;
        }
        case Format::Csv:
            o.os << "class,qexp,coef\n";
            for (const auto& [key, v] : c.coefficients())
                o.os << "\"" << join(key.first) << "\"," << key.second << "," << rat_to_string(v) << "\n";
            break;
    }
}

CaseReport from_demchar(const VerifyReport& v) {
    CaseReport r{v.kind, v.fields, v.checks, v.pass(), "", ""};
    if (const auto& m = v.first_mismatch) {
        r.detail_json = Json{{"identity", m->identity},
                             {"class", m->cls},
                             {"qexp", m->qexp},
                             {"lhs", rat_to_string(m->lhs)},
                             {"rhs", rat_to_string(m->rhs)}}
                            .dump();
        r.detail_text = m->identity + " at x^(" + join(m->cls) + ") q^" + std::to_string(m->qexp) + ": " +
                        rat_to_string(m->lhs) + " vs " + rat_to_string(m->rhs);
    }
    return r;
}

CaseReport from_qrep(const QrepReport& v) {
    CaseReport r{v.kind, v.fields, v.checks, v.pass(), "", ""};
    if (!v.pass()) {
        const QFailure& f = v.failures.front();
        r.detail_json = Json{{"relation", f.relation},
                             {"state", f.state},
                             {"lhs", f.lhs},
                             {"rhs", f.rhs},
                             {"failures", v.failure_count}}
                            .dump();
        r.detail_text = f.relation + " at " + f.state + ": " + f.lhs + " vs " + f.rhs + " (" +
                        std::to_string(v.failure_count) + " failures)";
    }
    return r;
}

CaseReport macdonald_schur_case(const Partition& shape, int vars, bool perturb) {
    CaseReport r{"macdonald-schur", {{"shape", shape.to_string()}, {"vars", std::to_string(vars)}}, 0, true, "", ""};
    const GLPolyT<LaurentQ> lhs = specialize_t(macdonald_gl(shape, vars), TValue::Q);
    GLPolyT<LaurentQ> rhs(vars);
    const GLPolyT<BigInt> s = schur(shape, vars);
    for (const auto& [e, c] : s.terms()) rhs.add_term(e, LaurentQ(BigRat(c)));
    if (perturb && !s.terms().empty()) rhs.add_term(s.terms().begin()->first, LaurentQ(1));
    std::set<Exponent> keys;
    for (const auto& [e, c] : lhs.terms()) keys.insert(e);
    for (const auto& [e, c] : rhs.terms()) keys.insert(e);
    r.checks = static_cast<long>(keys.size());
    for (const Exponent& e : keys) {
        const LaurentQ a = lhs.coeff(e), b = rhs.coeff(e);
        if (a == b) continue;
        const LaurentQ diff = a - b;
        const int qe = diff.terms().front().first;
        r.pass = false;
        r.detail_json = Json{{"identity", "P(x;q,q) = s"},
                             {"class", e},
                             {"qexp", qe},
                             {"lhs", rat_to_string(a.coeff(qe))},
                             {"rhs", rat_to_string(b.coeff(qe))}}
                            .dump();
        r.detail_text = "P(x;q,q) = s at " + monomial(e) + " q^" + std::to_string(qe) + ": " +
                        rat_to_string(a.coeff(qe)) + " vs " + rat_to_string(b.coeff(qe));
        break;
    }
    return r;
}

std::vector<LevelZeroDominant> weights_up_to(int rank, int max_total) {
    std::vector<LevelZeroDominant> out;
    std::vector<int> m(static_cast<std::size_t>(rank), 0);
    while (true) {
        int total = 0;
        for (int v : m) total += v;
        if (total <= max_total) out.emplace_back(rank, m);
        std::size_t pos = 0;
        while (pos < m.size() && m[pos] == max_total) m[pos++] = 0;
        if (pos == m.size()) break;
        ++m[pos];
    }
    return out;
}

std::vector<std::vector<int>> signatures_up_to(int n1, int max_len) {
    std::vector<std::vector<int>> out, frontier{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& sig : frontier)
            for (int i = sig.empty() ? 1 : sig.back(); i <= n1 - 1; ++i) {
                auto s = sig;
                s.push_back(i);
                next.push_back(s);
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = next;
    }
    return out;
}

LevelZeroDominant weight_arg(int n, const std::string& lam) {
    std::vector<int> m = parse_ints(lam, false);
    if (n < 1) throw std::invalid_argument("--n must be positive");
    if (static_cast<int>(m.size()) > n) throw std::invalid_argument("--lam has more than n entries");
    m.resize(static_cast<std::size_t>(n), 0);
    return LevelZeroDominant(n, m);
}

int emit_reports(const std::vector<Case>& cases, const RunConfig& cfg, std::ostream& out) {
    const Format f = cfg.format.value_or(Format::Json);
    bool all_pass = true;
    bool header_done = false;
    run_cases(cases, cfg.jobs, [&](const CaseReport& r) {
        all_pass = all_pass && r.pass;
        switch (f) {
            case Format::Json: out << report_json(r) << "\n"; break;
            case Format::Text: out << report_text(r) << "\n"; break;
            case Format::Csv:
                if (!header_done) out << report_csv_header(r) << "\n";
                header_done = true;
                out << report_csv_row(r) << "\n";
                break;
        }
        out.flush();
    });
    return all_pass ? 0 : 1;
}

struct Options {
    // global
    int trunc = 0, K = 0, jobs = 0, max_rank = 0;
    std::string format, output;
    // shared by subcommands
    std::string shape, outer, inner, lam, mu, nu, xi, sig;
    int vars = 0, n = 0, i = 0, m = 0, p = 0, eps = 1, n1 = 0;
    int max_total = -1, max_m = 3, max_size = 5, max_factors = 3;
    bool t0 = false, tq = false, generic = false, inject = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Level-zero Demazure characters, Macdonald branching and quantum affine checks", "lzb"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    auto* o_trunc = app.add_option("--trunc", o.trunc, "series truncation order N");
    auto* o_K = app.add_option("--K", o.K, "z-degree truncation bound");
    auto* o_jobs = app.add_option("--jobs", o.jobs, "worker threads");
    auto* o_rank = app.add_option("--max-rank", o.max_rank, "upper rank for sweeps");
    auto* o_format = app.add_option("--format", o.format, "json, csv or text");
    auto* o_output = app.add_option("--output", o.output, "write to this file");

    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
        CLI::App* s = parent->add_subcommand(name, help);
        s->fallthrough();
        return s;
    };

    CLI::App* sym = leaf(&app, "sym", "symmetric functions");
    sym->require_subcommand(1);
    CLI::App* sym_schur = leaf(sym, "schur", "Schur polynomial");
    sym_schur->add_option("--shape", o.shape)->required();
    sym_schur->add_option("--vars", o.vars)->required();
    CLI::App* sym_mac = leaf(sym, "macdonald", "Macdonald polynomial");
    sym_mac->add_option("--shape", o.shape)->required();
    sym_mac->add_option("--vars", o.vars)->required();
    auto* f_t0 = sym_mac->add_flag("--t0", o.t0, "specialize t = 0");
    auto* f_tq = sym_mac->add_flag("--tq", o.tq, "specialize t = q");
    auto* f_gen = sym_mac->add_flag("--generic", o.generic, "generic (q,t) coefficients");
    f_t0->excludes(f_tq)->excludes(f_gen);
    f_tq->excludes(f_gen);
    CLI::App* sym_psi = leaf(sym, "psi", "branching coefficient psi_{outer/inner}");
    sym_psi->add_option("--outer", o.outer)->required();
    sym_psi->add_option("--inner", o.inner)->required();
    CLI::App* sym_lr = leaf(sym, "lr", "Littlewood-Richardson coefficient");
    sym_lr->add_option("--lam", o.lam)->required();
    sym_lr->add_option("--mu", o.mu)->required();
    sym_lr->add_option("--nu", o.nu)->required();

    CLI::App* chr = leaf(&app, "char", "graded characters");
    chr->require_subcommand(1);
    CLI::App* chr_dem = leaf(chr, "demazure", "gch V_e(lam), or V_{t_xi}(lam) with --xi");
    chr_dem->add_option("--n", o.n)->required();
    chr_dem->add_option("--lam", o.lam)->required();
    chr_dem->add_option("--xi", o.xi);
    CLI::App* chr_mp = leaf(chr, "mp", "gch M_p(lam)");
    chr_mp->add_option("--n", o.n)->required();
    chr_mp->add_option("--lam", o.lam)->required();
    chr_mp->add_option("--p", o.p)->required();

    CLI::App* ver = leaf(&app, "verify", "character identities");
    ver->require_subcommand(1);
    CLI::App* ver_sum = leaf(ver, "sum", "sum_p M_p = theta(V_e)");
    auto* vs_n = ver_sum->add_option("--n", o.n);
    auto* vs_lam = ver_sum->add_option("--lam", o.lam);
    vs_lam->needs(vs_n);
    ver_sum->add_option("--max-total", o.max_total, "sweep bound on sum m_i (default 3)");
    ver_sum->add_flag("--inject-failure", o.inject, "perturb one coefficient");
    CLI::App* ver_br = leaf(ver, "branching", "branching of m varpi_i, and extremal pieces in sweeps");
    auto* vb_n = ver_br->add_option("--n", o.n);
    auto* vb_i = ver_br->add_option("--i", o.i);
    auto* vb_m = ver_br->add_option("--m", o.m);
    ver_br->add_option("--max-m", o.max_m, "sweep bound on m (default 3)");
    ver_br->add_option("--max-total", o.max_total, "sweep bound on sum m_i for extremal pieces (default 3)");
    ver_br->add_flag("--inject-failure", o.inject, "perturb one coefficient");
    CLI::App* ver_ms = leaf(ver, "macdonald-schur", "P_lam(x;q,q) = s_lam");
    auto* vm_shape = ver_ms->add_option("--shape", o.shape);
    auto* vm_vars = ver_ms->add_option("--vars", o.vars);
    ver_ms->add_option("--max-size", o.max_size, "sweep bound on |lam| (default 5)");
    ver_ms->add_flag("--inject-failure", o.inject, "perturb one coefficient");

    CLI::App* qr = leaf(&app, "qrep", "quantum affine wedge model");
    qr->require_subcommand(1);
    CLI::App* qr_rel = leaf(qr, "relations", "defining relations");
    auto* qrel_n1 = qr_rel->add_option("--n1", o.n1);
    auto* qrel_sig = qr_rel->add_option("--sig", o.sig);
    qr_rel->add_option("--max-factors", o.max_factors, "sweep bound on tensor length (default 3)");
    CLI::App* qr_str = leaf(qr, "structure", "embedding structure checks");
    auto* qs_n = qr_str->add_option("--n", o.n);
    auto* qs_lam = qr_str->add_option("--lam", o.lam);
    auto* qs_eps = qr_str->add_option("--eps", o.eps);
    qr_str->add_option("--max-total", o.max_total, "sweep bound on sum m_i (default 2)");
    CLI::App* qr_lt = leaf(qr, "lemma-t", "closed forms of divided powers");
    auto* ql_n = qr_lt->add_option("--n", o.n);
    auto* ql_i = qr_lt->add_option("--i", o.i);
    auto* ql_m = qr_lt->add_option("--m", o.m);
    qr_lt->add_option("--max-m", o.max_m, "sweep bound on m (default 3)");
    CLI::App* qr_con = leaf(qr, "constants", "measure a_{i,eps} and b_{i,eps}");
    qr_con->add_option("--n", o.n)->required();
    qr_con->add_option("--eps", o.eps)->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    RunConfig cfg;
    try {
        const char* env = std::getenv("LZB_CONFIG");
        cfg = load_config(env ? std::optional<std::string>(env) : std::nullopt);
        if (o_trunc->count()) cfg.trunc = o.trunc;
        if (o_K->count()) cfg.K = o.K;
        if (o_jobs->count()) cfg.jobs = o.jobs;
        if (o_rank->count()) cfg.max_rank = o.max_rank;
        if (o_format->count()) cfg.format = parse_format(o.format);
        if (o_output->count()) cfg.output = o.output;
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            err << "usage error: cannot write " << cfg.output << "\n";
            return 2;
        }
    }
    std::ostream& os = cfg.output.empty() ? out : file;
    const Out text_out{os, cfg.format.value_or(Format::Text)};

    try {
        if (sym_schur->parsed()) {
            const Partition shape = parse_partition(o.shape);
            print_poly(text_out, schur(shape, o.vars), Json{{"shape", shape.to_string()}, {"vars", o.vars}});
            return 0;
        }
        if (sym_mac->parsed()) {
            const Partition shape = parse_partition(o.shape);
            const GLPoly p = macdonald_gl(shape, o.vars);
            const Json head{{"shape", shape.to_string()}, {"vars", o.vars}};
            if (o.t0) {
                print_poly(text_out, macdonald_t0(shape, o.vars), head);
            } else if (o.tq) {
                print_poly(text_out, specialize_t(p, TValue::Q), head);
            } else {
                print_poly(text_out, p, head);
            }
            return 0;
        }
        if (sym_psi->parsed()) {
            const Partition outer = parse_partition(o.outer), inner = parse_partition(o.inner);
            if (!is_horizontal_strip(outer, inner)) throw std::invalid_argument("outer/inner is not a horizontal strip");
            const RatFuncQT f = psi_coefficient(outer, inner);
            if (text_out.format == Format::Json) {
                os << Json{{"outer", outer.to_string()}, {"inner", inner.to_string()}, {"psi", coef_json(f)},
                           {"text", f.to_string()}}
                          .dump()
                   << "\n";
            } else {
                os << f.to_string() << "\n";
            }
            return 0;
        }
        if (sym_lr->parsed()) {
            const BigInt c = lr_coefficient(parse_partition(o.lam), parse_partition(o.mu), parse_partition(o.nu));
            if (text_out.format == Format::Json)
                os << Json{{"lam", o.lam}, {"mu", o.mu}, {"nu", o.nu}, {"coef", c.get_str()}}.dump() << "\n";
            else
                os << c.get_str() << "\n";
            return 0;
        }
        if (chr_dem->parsed()) {
            const LevelZeroDominant lam = weight_arg(o.n, o.lam);
            const Json head{{"n", o.n}, {"lam", o.lam}, {"trunc", cfg.trunc}};
            if (o.xi.empty())
                print_character(text_out, gch_demazure_e(lam, cfg.trunc), head);
            else
                print_character(text_out, gch_demazure_txi(lam, parse_ints(o.xi, false), cfg.trunc), head);
            return 0;
        }
        if (chr_mp->parsed()) {
            const LevelZeroDominant lam = weight_arg(o.n, o.lam);
            const MpCharacter mp = gch_Mp(lam, o.p, cfg.trunc);
            print_character(text_out, mp.character,
                            Json{{"n", o.n}, {"lam", o.lam}, {"p", o.p}, {"trunc", cfg.trunc},
                                 {"out_of_range", mp.out_of_range}});
            return 0;
        }

        std::vector<Case> cases;
        const int N = cfg.trunc;
        const int K = cfg.K;
        const bool inject = o.inject;
        if (ver_sum->parsed()) {
            if (vs_lam->count()) {
                const LevelZeroDominant lam = weight_arg(o.n, o.lam);
                cases.push_back({{}, [=] { return from_demchar(verify_sum_decomposition(lam, N, inject)); }});
            } else {
                const int lo = vs_n->count() ? o.n : 1, hi = vs_n->count() ? o.n : cfg.max_rank;
                for (int r = lo; r <= hi; ++r)
                    for (const auto& lam : weights_up_to(r, o.max_total < 0 ? 3 : o.max_total))
                        cases.push_back({{}, [=] { return from_demchar(verify_sum_decomposition(lam, N, inject)); }});
            }
        } else if (ver_br->parsed()) {
            if (vb_n->count() && vb_i->count() && vb_m->count()) {
                const int n = o.n, i = o.i, m = o.m;
                cases.push_back({{}, [=] { return from_demchar(verify_branching(n, i, m, N, inject)); }});
            } else {
                if (vb_i->count() || vb_m->count()) throw std::invalid_argument("--i and --m need --n, --i and --m together");
                const int lo = vb_n->count() ? o.n : 2, hi = vb_n->count() ? o.n : cfg.max_rank;
                for (int n = lo; n <= hi; ++n) {
                    for (int i = 1; i <= n; ++i)
                        for (int m = 0; m <= o.max_m; ++m)
                            cases.push_back({{}, [=] { return from_demchar(verify_branching(n, i, m, N, inject)); }});
                    for (const auto& lam : weights_up_to(n, o.max_total < 0 ? 3 : o.max_total))
                        cases.push_back({{}, [=] { return from_demchar(verify_extremal_pieces(lam, N)); }});
                }
            }
        } else if (ver_ms->parsed()) {
            if (vm_shape->count() != vm_vars->count()) throw std::invalid_argument("--shape and --vars go together");
            if (vm_shape->count()) {
                const Partition shape = parse_partition(o.shape);
                const int vars = o.vars;
                cases.push_back({{}, [=] { return macdonald_schur_case(shape, vars, inject); }});
            } else {
                for (int vars = 1; vars <= cfg.max_rank; ++vars)
                    for (int size = 0; size <= o.max_size; ++size)
                        for (const Partition& shape : partitions_of(size, vars))
                            cases.push_back({{}, [=] { return macdonald_schur_case(shape, vars, inject); }});
            }
        } else if (qr_rel->parsed()) {
            if (qrel_sig->count() && !qrel_n1->count()) throw std::invalid_argument("--sig needs --n1");
            if (qrel_sig->count()) {
                const int n1 = o.n1;
                const std::vector<int> sig = parse_ints(o.sig, false);
                cases.push_back({{}, [=] { return from_qrep(verify_relations(n1, sig, K)); }});
            } else {
                const int lo = qrel_n1->count() ? o.n1 : 2, hi = qrel_n1->count() ? o.n1 : cfg.max_rank;
                for (int n1 = lo; n1 <= hi; ++n1)
                    for (const auto& sig : signatures_up_to(n1, o.max_factors))
                        cases.push_back({{}, [=] { return from_qrep(verify_relations(n1, sig, K)); }});
            }
        } else if (qr_str->parsed()) {
            std::vector<int> epss = qs_eps->count() ? std::vector<int>{o.eps} : std::vector<int>{1, -1};
            if (qs_lam->count()) {
                if (!qs_n->count()) throw std::invalid_argument("--lam needs --n");
                const LevelZeroDominant lam = weight_arg(o.n, o.lam);
                for (int eps : epss) cases.push_back({{}, [=] { return from_qrep(verify_structure(lam, eps, K)); }});
            } else {
                const int lo = qs_n->count() ? o.n : 2, hi = qs_n->count() ? o.n : cfg.max_rank;
                for (int n = lo; n <= hi; ++n)
                    for (const auto& lam : weights_up_to(n, o.max_total < 0 ? 2 : o.max_total))
                        for (int eps : epss)
                            cases.push_back({{}, [=] { return from_qrep(verify_structure(lam, eps, K)); }});
            }
        } else if (qr_lt->parsed()) {
            if (ql_n->count() && ql_i->count() && ql_m->count()) {
                const int n = o.n, i = o.i, m = o.m;
                cases.push_back({{}, [=] { return from_qrep(verify_lemma_t(n, i, m, K)); }});
            } else {
                if (ql_i->count() || ql_m->count()) throw std::invalid_argument("--i and --m need --n, --i and --m together");
                const int lo = ql_n->count() ? o.n : 1, hi = ql_n->count() ? o.n : cfg.max_rank;
                for (int n = lo; n <= hi; ++n)
                    for (int i = 1; i <= n; ++i)
                        for (int m = 0; m <= o.max_m; ++m)
                            cases.push_back({{}, [=] { return from_qrep(verify_lemma_t(n, i, m, K)); }});
            }
        } else if (qr_con->parsed()) {
            if (o.n < 2) throw std::invalid_argument("--n must be at least 2");
            if (o.eps != 1 && o.eps != -1) throw std::invalid_argument("--eps must be 1 or -1");
            const Constants c = measure_constants(o.n, o.eps, K);
            Json a = Json::object(), b = Json::object();
            for (const auto& [i, v] : c.b) b[std::to_string(i)] = v;
            for (const auto& [i, v] : c.a) a[std::to_string(i)] = v;
            const Format f = cfg.format.value_or(Format::Json);
            if (f == Format::Json) {
                os << Json{{"b", b}, {"a", a}, {"n", c.n}, {"eps", c.eps}, {"K", c.K}}.dump() << "\n";
            } else if (f == Format::Csv) {
                os << "constant,i,value\n";
                for (const auto& [i, v] : c.b) os << "b," << i << "," << v << "\n";
                for (const auto& [i, v] : c.a) os << "a," << i << "," << v << "\n";
            } else {
                os << "n=" << c.n << " eps=" << c.eps << " K=" << c.K;
                for (const auto& [i, v] : c.b) os << " b_" << i << "=" << v;
                for (const auto& [i, v] : c.a) os << " a_" << i << "=" << v;
                os << "\n";
            }
            return 0;
        }
        return emit_reports(cases, cfg, os);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace lzb::cli
