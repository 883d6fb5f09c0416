#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "qsym/bialg.hpp"
#include "qsym/classify.hpp"
#include "qsym/errors.hpp"
#include "qsym/poisson.hpp"
#include "qsym/qsl2.hpp"

using namespace qsym;
using json = nlohmann::ordered_json;

namespace {

// Exit code for a table that disagrees with the published classification.
constexpr int kDiffExit = 2;

struct Common {
    std::string type;
    int rank = 0;
    std::string alias;
    std::string weight;
    bool text = false;
    std::string out;
};

SimpleType resolve_type(const Common& c) {
    std::string spelling = !c.alias.empty() ? c.alias : c.type;
    if (spelling.empty()) throw UsageError("--type or --alias is required");
    bool has_digit = spelling.find_first_of("0123456789") != std::string::npos;
    if (!has_digit) {
        if (c.rank <= 0) throw UsageError("--rank is required with a bare series letter");
        spelling += std::to_string(c.rank);
    } else if (c.rank > 0 && parse_type(spelling).rank != c.rank) {
        throw UsageError("--rank " + std::to_string(c.rank) + " conflicts with type '" + spelling + "'");
    }
    return parse_type(spelling);
}

IntVec parse_weight(const std::string& s, int rank) {
    if (s.empty()) throw UsageError("--weight is required");
    IntVec w;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            size_t used = 0;
            w.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("bad weight coordinate '" + tok + "'");
        }
    }
    if (static_cast<int>(w.size()) != rank)
        throw UsageError("weight has " + std::to_string(w.size()) + " coordinates, rank is " + std::to_string(rank));
    return w;
}

json int_list(const IntVec& v) {
    json a = json::array();
    for (int x : v) a.push_back(x);
    return a;
}

std::string ints_str(const IntVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

json tensor_json(const TwoTensor& t, const StructureConstants& sc) {
    json a = json::array();
    for (const auto& [k, c] : t.terms()) a.push_back({{"left", sc.label(k.first)}, {"right", sc.label(k.second)}, {"coef", c.str()}});
    return a;
}

std::string tensor_text(const TwoTensor& t, const StructureConstants& sc) {
    if (t.is_zero()) return "0";
    std::string s;
    for (const auto& [k, c] : t.terms()) {
        bool neg = c.sign() < 0;
        Rational a = neg ? -c : c;
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (!a.is_one()) s += a.str() + " ";
        s += sc.label(k.first) + "(x)" + sc.label(k.second);
    }
    return s;
}

json row_json(const ClassificationRow& r) {
    json j;
    j["type"] = r.g_type.str();
    j["lambda"] = int_list(r.lambda);
    if (!r.alias.empty()) j["alias"] = r.alias;
    j["dim_V"] = std::to_string(r.dim_V);
    j["weight_filter"] = r.weight_filter;
    j["schouten"] = r.schouten;
    j["schouten_projected"] = r.schouten_projected;
    j["jacobi"] = r.jacobi;
    if (r.bd_triples_checked > 0) {
        j["schouten_all_bd"] = r.schouten_all_bd;
        j["bd_triples_checked"] = r.bd_triples_checked;
    }
    j["geometrically_decomposable"] = r.geometrically_decomposable;
    if (!r.ambient.empty()) j["ambient"] = r.ambient;
    j["semidirect_constructed"] = r.semidirect_constructed;
    j["oracle_ok"] = r.oracle_ok;
    j["in_paper_list"] = r.in_paper_list;
    j["passing"] = r.passing();
    return j;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string row_text_header() {
    return "pair                dim  filter schouten jacobi geom   sdp    listed passing ambient";
}

std::string row_text(const ClassificationRow& r) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-18s %5lld  %-6s %-8s %-6s %-6s %-6s %-6s %-7s %s",
                  row_key(r.g_type, r.lambda).c_str(), r.dim_V, yn(r.weight_filter).c_str(), yn(r.schouten).c_str(),
                  yn(r.jacobi).c_str(), yn(r.geometrically_decomposable).c_str(),
                  yn(r.semidirect_constructed).c_str(), yn(r.in_paper_list).c_str(), yn(r.passing()).c_str(),
                  r.ambient.c_str());
    return buf;
}

void emit(const Common& c, const json& j, const std::string& text) {
    std::string body = c.text ? text : j.dump(2) + "\n";
    if (c.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw UsageError("cannot write '" + c.out + "'");
    f << body;
}

// ---------------------------------------------------------------------------

void cmd_roots(const Common& c) {
    auto t = resolve_type(c);
    auto rs = build_root_system({t});
    json j;
    j["type"] = t.str();
    json cm = json::array();
    for (const auto& row : rs.cartan()) cm.push_back(int_list(row));
    j["cartan_matrix"] = cm;
    json pr = json::array();
    for (const auto& r : rs.positive_roots()) pr.push_back(int_list(r));
    j["positive_roots"] = pr;
    j["highest_root"] = int_list(rs.highest_root());
    IntVec cn;
    for (int n : rs.cominuscule_nodes()) cn.push_back(n + 1);
    j["cominuscule_nodes"] = int_list(cn);

    std::ostringstream s;
    s << t.str() << ": " << rs.num_positive() << " positive roots\ncartan:\n";
    for (const auto& row : rs.cartan()) s << "  " << ints_str(row) << "\n";
    s << "highest root: " << ints_str(rs.highest_root()) << "\ncominuscule nodes: " << ints_str(cn) << "\n";
    emit(c, j, s.str());
}

void cmd_module(const Common& c) {
    auto t = resolve_type(c);
    auto rs = build_root_system({t});
    IntVec w = parse_weight(c.weight, t.rank);
    if (!rs.is_dominant(w)) throw NotDominant("weight " + ints_str(w) + " is not dominant");
    auto data = weyl_dimension_and_weights(rs, w);
    json j;
    j["type"] = t.str();
    j["lambda"] = int_list(w);
    j["dim"] = std::to_string(data.dim);
    json ws = json::array();
    std::ostringstream s;
    s << t.str() << " (" << ints_str(w) << "): dim " << data.dim << "\n";
    for (const auto& [mu, m] : data.multiplicities) {
        ws.push_back({{"weight", int_list(mu)}, {"multiplicity", std::to_string(m)}});
        s << "  (" << ints_str(mu) << ") x" << m << "\n";
    }
    j["weights"] = ws;
    emit(c, j, s.str());
}

json rmatrix_report(const LieAlgebra& L, const TwoTensor& r, const TwoTensor& casimir_c, std::string& text) {
    json j;
    bool cybe = cybe_in_tensor_cube(L.sc(), r);
    bool sym = r + r.op() == casimir_c;
    j["r"] = tensor_json(r, L.sc());
    j["cybe"] = cybe;
    j["symmetric_part_is_casimir"] = sym;
    text += "r = " + tensor_text(r, L.sc()) + "\ncybe: " + yn(cybe) + ", r + r^op = casimir: " + yn(sym) + "\n";
    return j;
}

BDTriple parse_triple(const std::string& s, const RootSystem& rs) {
    // "1->2,3->4" with 1-based nodes; "" or "{}" is the empty triple.
    BDTriple t;
    std::string body;
    for (char ch : s)
        if (ch != '{' && ch != '}' && ch != ' ') body += ch;
    std::stringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        auto p = tok.find("->");
        if (p == std::string::npos) throw UsageError("bad triple arrow '" + tok + "'");
        try {
            t.delta1.push_back(std::stoi(tok.substr(0, p)) - 1);
            t.delta2.push_back(std::stoi(tok.substr(p + 2)) - 1);
        } catch (const std::exception&) {
            throw UsageError("bad triple arrow '" + tok + "'");
        }
    }
    if (!is_valid_triple(rs, t)) throw InvalidTriple("'" + s + "' is not a BD triple");
    return t;
}

void cmd_rmatrix(const Common& c, const std::string& triple, bool all_bd) {
    auto t = resolve_type(c);
    auto L = chevalley_basis(build_root_system({t}), 0);
    auto cas = casimir(L).c;
    json j;
    j["type"] = t.str();
    std::string text;
    if (!all_bd && triple.empty()) {
        text += "standard r-matrix of " + t.str() + "\n";
        j["standard"] = rmatrix_report(L, standard_r(L), cas, text);
    } else {
        std::vector<BDTriple> triples;
        if (all_bd)
            triples = enumerate_bd_triples(L.roots());
        else
            triples.push_back(parse_triple(triple, L.roots()));
        json arr = json::array();
        for (const auto& bt : triples) {
            auto res = bd_r_matrix(L, bt);
            text += "triple " + bt.str() + "\n";
            json e{{"triple", bt.str()}};
            e.update(rmatrix_report(L, res.r, cas, text));
            json fr = json::array();
            for (size_t k = 0; k < res.freedom.size(); ++k) {
                bool ok = cybe_in_tensor_cube(L.sc(), res.with_freedom(k));
                fr.push_back({{"direction", tensor_json(res.freedom[k], L.sc())}, {"cybe", ok}});
                text += "  freedom " + std::to_string(k + 1) + ": cybe " + yn(ok) + "\n";
            }
            e["freedom"] = fr;
            arr.push_back(e);
        }
        j["bd"] = arr;
    }
    emit(c, j, text);
}

void cmd_bd(const Common& c) {
    auto t = resolve_type(c);
    auto rs = build_root_system({t});
    json arr = json::array();
    std::string text;
    for (const auto& bt : enumerate_bd_triples(rs)) {
        arr.push_back(bt.str());
        text += bt.str() + "\n";
    }
    json j{{"type", t.str()}, {"count", std::to_string(arr.size())}, {"triples", arr}};
    emit(c, j, text + std::to_string(arr.size()) + " triples\n");
}

void cmd_double(const Common& c, const std::string& triple) {
    auto t = resolve_type(c);
    auto L = chevalley_basis(build_root_system({t}), 0);
    TwoTensor r = triple.empty() ? standard_r(L) : bd_r_matrix(L, parse_triple(triple, L.roots())).r;
    auto D = drinfeld_double(L.sc(), cobracket_from_r(L, r));
    json j{{"type", t.str()},
           {"dim", std::to_string(D.D.dim())},
           {"jacobi", D.jacobi_holds},
           {"killing_nondegenerate", D.killing_nondegenerate},
           {"center_dim", std::to_string(D.center_dim)},
           {"canonical_r_cybe", D.canonical_r_cybe},
           {"canonical_r_symmetric_invariant", D.canonical_r_symmetric_invariant},
           {"manin_triple", D.manin_triple}};
    std::ostringstream s;
    s << "double of " << t.str() << ": dim " << D.D.dim() << "\njacobi: " << yn(D.jacobi_holds)
      << "\nkilling nondegenerate: " << yn(D.killing_nondegenerate) << "\ncenter dim: " << D.center_dim
      << "\ncanonical r cybe: " << yn(D.canonical_r_cybe) << "\nmanin triple: " << yn(D.manin_triple) << "\n";
    emit(c, j, s.str());
}

void cmd_classify(const Common& c, const ClassifyOptions& opt) {
    auto t = resolve_type(c);
    auto row = classify_pair(t, parse_weight(c.weight, t.rank), opt);
    emit(c, row_json(row), row_text_header() + "\n" + row_text(row) + "\n");
}

int cmd_table(const Common& c, int max_rank, long long budget, bool diff, bool extended, const ClassifyOptions& opt_in) {
    ClassifyOptions opt = opt_in;
    if (extended) opt.max_ambient_rank = std::max(opt.max_ambient_rank, 7);
    if (max_rank < 1) throw UsageError("--max-rank must be positive");
    if (max_rank >= 6 && !extended) max_rank = 5;  // E6 needs the E7 ambient
    auto rows = classification_table(max_rank, budget, opt);
    json arr = json::array();
    std::string text = row_text_header() + "\n";
    int passing = 0;
    for (const auto& r : rows) {
        arr.push_back(row_json(r));
        text += row_text(r) + "\n";
        passing += r.passing();
    }
    json j{{"max_rank", std::to_string(max_rank)},
           {"dim_budget", std::to_string(budget)},
           {"rows", arr},
           {"passing", std::to_string(passing)}};
    int code = 0;
    if (diff) {
        auto d = diff_against_paper(rows);
        j["diff"] = {{"ok", d.ok()}, {"missing", d.missing}, {"unexpected", d.unexpected}};
        text += "diff: " + std::string(d.ok() ? "ok" : "MISMATCH") + "\n";
        for (const auto& m : d.missing) text += "  missing " + m + "\n";
        for (const auto& u : d.unexpected) text += "  unexpected " + u + "\n";
        if (!d.ok()) code = kDiffExit;
    }
    emit(c, j, text);
    return code;
}

// ---------------------------------------------------------------------------

void cmd_sigma(const Common& c, const std::string& left, const std::string& right) {
    XGen x = parse_xgen(left), y = parse_xgen(right);
    auto s = sigma(x, y);
    const auto& lf = locally_finite_generators();
    json j{{"left", xgen_name(x)},
           {"right", xgen_name(y)},
           {"value", s.value.str()},
           {"identity_holds", sigma_identity_holds(x, y)},
           {"central_element", lf.selected},
           {"normalization", sigma_normalization().str()}};
    std::string text = "sigma(" + xgen_name(x) + "(x)" + xgen_name(y) + ") = " + s.value.str() + "\n";
    for (const auto& g : sigma_golden())
        if (g.x == x && g.y == y) {
            j["printed"] = g.printed.str();
            text += "printed form: " + g.printed.str() + " (correction scaled by " + sigma_normalization().str() + ")\n";
        }
    emit(c, j, text);
}

void cmd_normal(const Common& c, const std::string& word) {
    PBW x = normal_form(word);
    emit(c, json{{"word", word}, {"normal_form", x.str()}}, x.str() + "\n");
}

void cmd_copoisson(const Common& c) {
    const auto& lf = locally_finite_generators();
    json j{{"h_scaling", std::to_string(kHScaling)}, {"central_element", lf.selected}};
    std::string text = "h -> H/" + std::to_string(kHScaling) + "\n";
    for (XGen g : {XGen::Plus, XGen::Minus, XGen::Zero}) {
        const PBW& x = lf.get(g);
        auto lim = classical_limit(x);
        auto d = copoisson_limit(x);
        j[xgen_name(g)] = {{"classical", lim.str()}, {"delta", d.str()}};
        text += xgen_name(g) + " -> " + lim.str() + "; delta = " + d.str() + "\n";
    }
    emit(c, j, text);
}

void cmd_donin(const Common& c) {
    auto d = donin_graded_relations();
    json rel = d.relations;
    json br;
    std::string text;
    for (const auto& r : d.relations) text += r + "\n";
    for (int i = 0; i < 3; ++i)
        for (int k = i + 1; k < 3; ++k) {
            std::string key = "{" + d.names[i] + "," + d.names[k] + "}";
            std::string val = d.poisson.get(i, k).str(d.names);
            br[key] = val;
            text += key + " = " + val + "\n";
        }
    bool jac = jacobi_oracle(d.poisson);
    json j{{"relations", rel}, {"poisson", br}, {"jacobi", jac}, {"normalization", sigma_normalization().str()}};
    text += "jacobi: " + yn(jac) + "\n";
    emit(c, j, text);
}

void cmd_braided(const Common& c, int ell, int degree) {
    auto r = braided_flatness(ell, degree);
    json j{{"ell", std::to_string(r.ell)},
           {"dim", std::to_string(r.dim)},
           {"dim_S2", std::to_string(r.dim_S2)},
           {"dim_L2", std::to_string(r.dim_L2)},
           {"dim_S3", std::to_string(r.dim_S3)},
           {"classical", {{"S2", std::to_string(r.classical_S2)}, {"L2", std::to_string(r.classical_L2)}, {"S3", std::to_string(r.classical_S3)}}},
           {"flat_through_degree", std::to_string(r.flat_through_degree)},
           {"involution", r.involution},
           {"commutes_with_action", r.commutes_with_action}};
    std::ostringstream s;
    s << "V_" << r.ell << " (dim " << r.dim << "): S2 " << r.dim_S2 << "/" << r.classical_S2 << ", L2 " << r.dim_L2
      << "/" << r.classical_L2;
    if (r.dim_S3 >= 0) s << ", S3 " << r.dim_S3 << "/" << r.classical_S3;
    s << "; flat through degree " << r.flat_through_degree << "\n";
    emit(c, j, s.str());
}

int env_threads() {
    const char* v = std::getenv("QSYM_THREADS");
    if (!v) return 1;
    try {
        return std::max(1, std::stoi(v));
    } catch (const std::exception&) {
        throw UsageError("QSYM_THREADS must be an integer");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qsym: Lie bialgebras, semidirect Poisson structures and quantum sl2"};
    app.require_subcommand(1);
    Common c;
    ClassifyOptions opt;
    int threads = 0;
    auto add_common = [&](CLI::App* s, bool weight) {
        s->add_option("--type", c.type, "series letter or spelling such as A2, so10, sp4");
        s->add_option("--rank", c.rank, "rank when --type is a bare series letter");
        s->add_option("--alias", c.alias, "alternative spelling such as so10");
        if (weight) s->add_option("--weight", c.weight, "fundamental-weight coordinates, e.g. 0,0,1");
        s->add_flag("--text", c.text, "human-readable output instead of JSON");
        s->add_option("--out", c.out, "write to a file instead of stdout");
    };
    auto* roots = app.add_subcommand("roots", "root-system report");
    add_common(roots, false);
    auto* module = app.add_subcommand("module", "dimension and weights of a highest-weight module");
    add_common(module, true);
    auto* rmat = app.add_subcommand("rmatrix", "standard or BD r-matrix with CYBE certification");
    add_common(rmat, false);
    std::string triple;
    bool all_bd = false;
    rmat->add_option("--triple", triple, "BD triple with 1-based arrows, e.g. 1->2");
    rmat->add_flag("--all-bd", all_bd, "every BD triple of the type");
    auto* bd = app.add_subcommand("bd", "enumerate BD triples");
    add_common(bd, false);
    auto* dbl = app.add_subcommand("double", "Drinfeld double report");
    add_common(dbl, false);
    dbl->add_option("--triple", triple, "use a BD r-matrix instead of the standard one");
    auto* cls = app.add_subcommand("classify", "classification row for one pair");
    add_common(cls, true);
    cls->add_flag("--all-bd", opt.all_bd, "rerun the Schouten criterion for every BD triple");
    bool cls_extended = false;
    cls->add_flag("--extended", cls_extended, "search ambients up to rank 7 (E6 via E7)");
    auto* tbl = app.add_subcommand("table", "classification sweep");
    add_common(tbl, false);
    int max_rank = 5;
    long long budget = 60;
    bool diff = false, extended = false;
    tbl->add_option("--max-rank", max_rank, "largest rank swept");
    tbl->add_option("--dim-budget", budget, "largest module dimension");
    tbl->add_flag("--diff-paper", diff, "compare with the published list; exit 2 on mismatch");
    tbl->add_flag("--extended", extended, "allow E6 rows with an E7 ambient");
    tbl->add_flag("--all-bd", opt.all_bd, "rerun the Schouten criterion for every BD triple");
    tbl->add_option("--threads", threads, "worker threads (default QSYM_THREADS or 1)");

    auto* q = app.add_subcommand("qsl2", "quantum sl2 computations");
    q->require_subcommand(1);
    auto* qs = q->add_subcommand("sigma", "sigma on a pair of locally finite generators");
    std::string left, right;
    qs->add_option("--left", left, "X+, X- or X0")->required();
    qs->add_option("--right", right, "X+, X- or X0")->required();
    auto* qn = q->add_subcommand("normal", "PBW normal form F^a K^b E^c of a word");
    std::string word;
    qn->add_option("--word", word, "generators E, F, K, K^n separated by spaces")->required();
    auto* qc = q->add_subcommand("copoisson", "classical limits and co-Poisson cobrackets");
    auto* qd = q->add_subcommand("donin", "associated graded relations and Poisson brackets");
    auto* qb = q->add_subcommand("braided", "braided symmetric powers of V_ell");
    int ell = 1, degree = 3;
    qb->add_option("--ell", ell, "highest weight")->required();
    qb->add_option("--max-degree", degree, "2 or 3");
    for (auto* s : {qs, qn, qc, qd, qb}) {
        s->add_flag("--text", c.text, "human-readable output instead of JSON");
        s->add_option("--out", c.out, "write to a file instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: UsageError: " << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        opt.threads = threads > 0 ? threads : env_threads();
        if (*roots) cmd_roots(c);
        if (*module) cmd_module(c);
        if (*rmat) cmd_rmatrix(c, triple, all_bd);
        if (*bd) cmd_bd(c);
        if (*dbl) cmd_double(c, triple);
        if (*cls) {
            if (cls_extended) opt.max_ambient_rank = 7;
            cmd_classify(c, opt);
        }
        if (*tbl) return cmd_table(c, max_rank, budget, diff, extended, opt);
        if (*qs) cmd_sigma(c, left, right);
        if (*qn) cmd_normal(c, word);
        if (*qc) cmd_copoisson(c);
        if (*qd) cmd_donin(c);
        if (*qb) {
            if (degree < 2 || degree > 3) throw UsageError("--max-degree must be 2 or 3");
            cmd_braided(c, ell, degree);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
