// Command-line front end: symbol tables, character tables, Hall-Littlewood
// functions, Kostka matrices, Green function tables; JSON/CSV output with an
// on-disk result cache.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rsym/cache.hpp"
#include "rsym/serialize.hpp"

using namespace rsym;

namespace {

struct CommonOpts {
    int n = 0;
    int r = 1;
    int e = 0;
    std::string s = "0";
    int alpha = 0;
    std::string defects;  // "1,0;3,0"
    std::string preset;   // sp | sp-char2 | gl
    std::string format = "json";
    std::string output;
    std::string cache_dir;
    std::string tie_break = "default";
    bool multi = false;
    bool modified = true;
    bool override_guards = false;
    bool parallel = false;
};

std::vector<int> parse_ints(const std::string& s, char sep) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

struct ResolvedConfig {
    SymbolConfig cfg;
    std::vector<Defect> defects;
};

ResolvedConfig resolve_config(const CommonOpts& o) {
    ResolvedConfig rc;
    if (o.preset == "sp" || o.preset == "sp-char2") {
        auto [cfg, defs] = symplectic_defects(o.n, o.preset == "sp-char2");
        rc.cfg = cfg;
        rc.defects = defs;
        return rc;
    }
    if (o.preset == "gl") {
        rc.cfg.r = 1;
        rc.cfg.e = 0;
        rc.cfg.s = {0};
        rc.cfg.alpha = 0;
        rc.defects = {Defect{0}};
        return rc;
    }
    if (!o.preset.empty()) throw usage_error("unknown preset: " + o.preset);
    rc.cfg.r = o.r;
    rc.cfg.e = o.e;
    rc.cfg.s = parse_ints(o.s, ',');
    rc.cfg.alpha = o.alpha;
    rc.cfg.validate();
    if (!o.defects.empty()) {
        std::stringstream ss(o.defects);
        std::string item;
        while (std::getline(ss, item, ';'))
            if (!item.empty()) rc.defects.push_back(parse_ints(item, ','));
    } else {
        Defect base(o.r, 0);
        for (int k = 0; k < o.alpha; ++k) base[k] = 1;
        rc.defects = {base};
    }
    return rc;
}

TieBreak tie_break_of(const CommonOpts& o) {
    if (o.tie_break == "default") return TieBreak::Default;
    if (o.tie_break == "alt") return TieBreak::Alt;
    throw usage_error("unknown tie-break: " + o.tie_break);
}

Guards guards_of(const CommonOpts& o) {
    Guards g;
    g.override_guards = o.override_guards;
    return g;
}

std::string canonical_config(const std::string& sub, const CommonOpts& o,
                             const std::string& extra = "") {
    std::ostringstream os;
    os << "schema=1;cmd=" << sub << ";n=" << o.n << ";r=" << o.r << ";e=" << o.e << ";s=" << o.s
       << ";alpha=" << o.alpha << ";defects=" << o.defects << ";preset=" << o.preset
       << ";format=" << o.format << ";tie=" << o.tie_break << ";multi=" << o.multi
       << ";modified=" << o.modified << ";override=" << o.override_guards << ";" << extra;
    return os.str();
}

// cache consult / compute / write / emit
int emit(const CommonOpts& o, const std::string& config_string,
         const std::function<std::string()>& compute) {
    std::string dir = o.cache_dir;
    if (dir.empty())
        if (const char* env = std::getenv("RSYM_CACHE_DIR")) dir = env;
    std::string bytes;
    if (!dir.empty()) {
        std::string key = cache_key(config_string);
        if (auto hit = cache_get(dir, key)) {
            bytes = *hit;
        } else {
            bytes = compute();
            cache_put(dir, key, bytes);
        }
    } else {
        bytes = compute();
    }
    if (o.output.empty()) {
        std::cout << bytes;
    } else {
        std::ofstream out(o.output, std::ios::binary);
        if (!out) throw usage_error("cannot open output file: " + o.output);
        out << bytes;
    }
    return 0;
}

std::string cmd_symbols(const CommonOpts& o) {
    ResolvedConfig rc = resolve_config(o);
    SymbolTable t = build_table(o.n, rc.cfg, rc.defects, tie_break_of(o));
    if (o.format == "csv") {
        std::ostringstream os;
        os << "index,defect,source,a_value,class,rows\n";
        for (int i = 0; i < t.size(); ++i) {
            os << i << ",";
            for (size_t k = 0; k < t.symbols[i].defect.size(); ++k)
                os << (k ? " " : "") << t.symbols[i].defect[k];
            os << "," << multipartition_str(t.symbols[i].source) << "," << t.a_values[i] << ","
               << t.class_of[i] << "," << t.symbols[i].str() << "\n";
        }
        return os.str();
    }
    return dump_json(table_json(t));
}

std::string cmd_chartable(const CommonOpts& o) {
    Mat<Cyclo> chi = character_table(o.n, o.r, o.parallel);
    auto mps = enumerate_multipartitions(o.n, o.r);
    std::vector<std::string> labels;
    for (const auto& mp : mps) labels.push_back(multipartition_str(mp));
    if (o.format == "csv") return matrix_csv(chi, labels, labels);
    Json j;
    j["schema_version"] = 1;
    j["n"] = o.n;
    j["r"] = o.r;
    Json classes = Json::array();
    for (const ClassDatum& d : class_data(o.n, o.r)) {
        Json c;
        c["type"] = multipartition_json(d.type);
        c["centralizer_order"] = rat_json(Rat(d.centralizer_order));
        c["class_size"] = rat_json(Rat(d.class_size));
        classes.push_back(c);
    }
    j["classes"] = classes;
    j["table"] = matrix_json(chi, labels, labels);
    return dump_json(j);
}

template <class F>
Json hl_payload(HallLittlewood<F>& hl, const SymbolTable& t) {
    auto labels = table_labels(t);
    int N = t.size();
    Mat<F> Pp(N, N), Pm(N, N), Qp(N, N), Qm(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (t.defect_of[i] != t.defect_of[j]) continue;
            Pp(i, j) = hl.u_coefficient(true, i, j);
            Pm(i, j) = hl.u_coefficient(false, i, j);
        }
    for (int i = 0; i < N; ++i) {
        int b = t.defect_of[i];
        for (int j = 0; j < N; ++j) {
            if (t.defect_of[j] != b) continue;
            SymFuncEngine<F>& eng = hl.engine(b);
            int lj = eng.label_index(t.symbols[j].source);
            Qp(i, j) = hl.q_plus(i)[lj];
            Qm(i, j) = hl.q_minus(i)[lj];
        }
    }
    Json j;
    j["schema_version"] = 1;
    j["table"] = table_json(t);
    j["P_plus"] = matrix_json(Pp, labels, labels);
    j["P_minus"] = matrix_json(Pm, labels, labels);
    j["Q_plus"] = matrix_json(Qp, labels, labels);
    j["Q_minus"] = matrix_json(Qm, labels, labels);
    j["K_plus"] = matrix_json(hl.kostka(true), labels, labels);
    j["K_minus"] = matrix_json(hl.kostka(false), labels, labels);
    return j;
}

std::string cmd_hl(const CommonOpts& o) {
    ResolvedConfig rc = resolve_config(o);
    SymbolTable t = build_table(o.n, rc.cfg, rc.defects, tie_break_of(o));
    if (o.multi) {
        guards_of(o).check_multi(o.n, rc.cfg.r);
        HallLittlewood<MultiRatFun> hl(t, CoeffCtx<MultiRatFun>{rc.cfg.r, rc.cfg.r});
        return dump_json(hl_payload(hl, t));
    }
    guards_of(o).check_single(o.n, rc.cfg.r);
    HallLittlewood<RatFun> hl(t, CoeffCtx<RatFun>{rc.cfg.r});
    return dump_json(hl_payload(hl, t));
}

std::string cmd_kostka(const CommonOpts& o) {
    ResolvedConfig rc = resolve_config(o);
    if (o.multi) {
        auto res = kostka_multi_param(o.n, rc.cfg, rc.defects, tie_break_of(o), guards_of(o),
                                      o.parallel);
        auto labels = table_labels(res.table);
        Json j;
        j["schema_version"] = 1;
        j["mode"] = "multi";
        j["table"] = table_json(res.table);
        j["K_minus"] = matrix_json(res.p_minus, labels, labels);
        j["K_plus"] = matrix_json(res.p_plus, labels, labels);
        j["Lambda"] = matrix_json(res.lambda, labels, labels);
        if (o.format == "csv") return matrix_csv(res.p_minus, labels, labels);
        return dump_json(j);
    }
    auto res =
        kostka_one_param(o.n, rc.cfg, rc.defects, tie_break_of(o), guards_of(o), o.parallel);
    auto labels = table_labels(res.table);
    const Mat<RatFun>& km = o.modified ? res.p_minus : *res.kostka_minus;
    const Mat<RatFun>& kp = o.modified ? res.p_plus : *res.kostka_plus;
    if (o.format == "csv") return matrix_csv(km, labels, labels);
    Json j;
    j["schema_version"] = 1;
    j["mode"] = o.modified ? "one-parameter-modified" : "one-parameter";
    j["table"] = table_json(res.table);
    j["K_minus"] = matrix_json(km, labels, labels);
    j["K_plus"] = matrix_json(kp, labels, labels);
    j["Lambda"] = matrix_json(res.lambda, labels, labels);
    return dump_json(j);
}

std::string cmd_green(const CommonOpts& o, bool gl, bool sp, bool char2, const std::string& qstr,
                      long congruence_prime, int fault_entry) {
    if (gl == sp) throw usage_error("green: pass exactly one of --gl / --sp");
    if (gl) {
        GlGreen g = green_gl(o.n, guards_of(o));
        auto labels = table_labels(g.table);
        if (o.format == "csv") return matrix_csv(g.q, labels, labels);
        Json j;
        j["schema_version"] = 1;
        j["group"] = "gl";
        j["table"] = table_json(g.table);
        j["Q"] = matrix_json(g.q, labels, labels);
        return dump_json(j);
    }
    if (congruence_prime > 0) {
        if (qstr.empty()) throw usage_error("congruence check needs --q");
        std::optional<int> fault;
        if (fault_entry >= 0) fault = fault_entry;
        CongruenceReport rep =
            congruence_check(o.n, Rat(qstr), congruence_prime, fault, guards_of(o));
        Json j;
        j["schema_version"] = 1;
        j["group"] = "sp";
        j["q"] = rat_json(rep.q);
        j["rprime"] = rep.rprime;
        j["all_ok"] = rep.all_ok();
        Json entries = Json::array();
        for (const auto& e : rep.entries) {
            Json je;
            je["row"] = e.row;
            je["column"] = e.column;
            je["value_q"] = rat_json(Rat(e.value_q));
            je["value_q_power"] = rat_json(Rat(e.value_qr));
            je["residue"] = rat_json(Rat(e.residue));
            je["ok"] = e.ok;
            entries.push_back(je);
        }
        j["entries"] = entries;
        return dump_json(j);
    }
    std::optional<Rat> q;
    if (!qstr.empty()) q = Rat(qstr);
    SpGreen g = green_sp(o.n, char2, q, guards_of(o), o.parallel);
    auto labels = table_labels(g.table);
    Json j;
    j["schema_version"] = 1;
    j["group"] = char2 ? "sp-char2" : "sp";
    j["table"] = table_json(g.table);
    j["cusp_a"] = g.cusp_a;
    Json rows = Json::array();
    for (const SpGreenRow& row : g.rows) {
        Json jr;
        jr["defect"] = g.table.defects[row.defect_index];
        jr["w_type"] = multipartition_json(row.w_type);
        Json coeffs = Json::array();
        for (const RatFun& f : row.y_coeffs) coeffs.push_back(ratfun_json(f));
        jr["y_coeffs"] = coeffs;
        if (!row.at_q.empty()) {
            Json vals = Json::array();
            for (const auto& v : row.at_q) vals.push_back(v ? rat_json(*v) : Json());
            jr["at_q"] = vals;
        }
        rows.push_back(jr);
    }
    j["rows"] = rows;
    if (o.format == "csv") {
        std::ostringstream os;
        os << "defect,w_type,column,y_coeff\n";
        for (const SpGreenRow& row : g.rows)
            for (size_t c = 0; c < row.y_coeffs.size(); ++c) {
                os << "(";
                for (size_t k = 0; k < g.table.defects[row.defect_index].size(); ++k)
                    os << (k ? " " : "") << g.table.defects[row.defect_index][k];
                os << ")," << multipartition_str(row.w_type) << "," << labels[c] << ","
                   << row.y_coeffs[c].str() << "\n";
            }
        return os.str();
    }
    return dump_json(j);
}

std::string cmd_verify(const CommonOpts& o) {
    ResolvedConfig rc = resolve_config(o);
    guards_of(o).check_single(o.n, rc.cfg.r);
    Json j;
    j["schema_version"] = 1;
    // characterization (Thm 3.9 support conditions)
    SymbolTable t = build_table(o.n, rc.cfg, rc.defects, tie_break_of(o));
    HallLittlewood<RatFun> hl(t, CoeffCtx<RatFun>{rc.cfg.r});
    auto rep = hl.verify_characterization();
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json je;
        je["symbol"] = e.symbol;
        je["q_support_ok"] = e.q_support_ok;
        je["q_diagonal_ok"] = e.q_diagonal_ok;
        je["s_support_ok"] = e.s_support_ok;
        je["s_diagonal_ok"] = e.s_diagonal_ok;
        entries.push_back(je);
    }
    j["characterization"] = entries;
    j["characterization_all_pass"] = rep.all_pass();
    // order-dependence probe: rebuild with the alternative legal tie-break
    auto res_def = kostka_one_param(o.n, rc.cfg, rc.defects, TieBreak::Default, guards_of(o));
    auto res_alt = kostka_one_param(o.n, rc.cfg, rc.defects, TieBreak::Alt, guards_of(o));
    // compare as maps keyed by (defect, source) pairs
    auto key_of = [](const SymbolTable& tt, int i) {
        return std::make_pair(tt.symbols[i].defect, tt.symbols[i].source);
    };
    bool same = true;
    for (int i = 0; i < res_def.table.size() && same; ++i)
        for (int jj = 0; jj < res_def.table.size() && same; ++jj) {
            int i2 = -1, j2 = -1;
            for (int a = 0; a < res_alt.table.size(); ++a) {
                if (key_of(res_alt.table, a) == key_of(res_def.table, i)) i2 = a;
                if (key_of(res_alt.table, a) == key_of(res_def.table, jj)) j2 = a;
            }
            if (!(res_def.p_minus(i, jj) == res_alt.p_minus(i2, j2))) same = false;
        }
    j["order_probe_tie_breaks_agree"] = same;
    // observed degree vs a(L') - a(L) (Remark 5.10(iii); report only)
    Json degs = Json::array();
    const Mat<RatFun>& K = *res_def.kostka_minus;
    for (int i = 0; i < res_def.table.size(); ++i)
        for (int jj = 0; jj < res_def.table.size(); ++jj) {
            if (K(i, jj).is_zero() || !K(i, jj).is_polynomial()) continue;
            Json jd;
            jd["row"] = i;
            jd["col"] = jj;
            jd["deg"] = K(i, jj).num().degree();
            jd["a_diff"] = res_def.table.a_values[jj] - res_def.table.a_values[i];
            degs.push_back(jd);
        }
    j["kostka_degrees"] = degs;
    j["kostka_polynomiality"] = [&] {
        for (int i = 0; i < res_def.table.size(); ++i)
            for (int jj = 0; jj < res_def.table.size(); ++jj)
                if (!K(i, jj).is_polynomial()) return false;
        return true;
    }();
    // exploratory class-count comparison (symplectic presets only)
    if (o.preset == "sp" || o.preset == "sp-char2") {
        j["similarity_class_count"] = static_cast<int>(t.classes.size());
        j["sp_unipotent_class_count"] = sp_unipotent_class_count(o.n);
    }
    return dump_json(j);
}

std::string cmd_symfunc(const CommonOpts& o, const std::string& from, const std::string& to) {
    auto basis_of = [](const std::string& s) {
        if (s == "m") return Basis::M;
        if (s == "s") return Basis::S;
        if (s == "p") return Basis::P;
        if (s == "q+") return Basis::QPlus;
        if (s == "q-") return Basis::QMinus;
        throw usage_error("unknown basis tag: " + s);
    };
    Basis bf = basis_of(from), bt = basis_of(to);
    CoeffCtx<RatFun> ctx{o.r};
    SymFuncEngine<RatFun> eng(o.n, o.r, ctx);
    std::vector<std::string> labels;
    for (const auto& mp : eng.labels()) labels.push_back(multipartition_str(mp));
    Mat<RatFun> m(eng.count(), eng.count());
    for (int i = 0; i < eng.count(); ++i) {
        auto coords = eng.expand_in(eng.basis_poly(bf, i), bt);
        for (int jj = 0; jj < eng.count(); ++jj) m(i, jj) = coords[jj];
    }
    if (o.format == "csv") return matrix_csv(m, labels, labels);
    Json j;
    j["schema_version"] = 1;
    j["from"] = from;
    j["to"] = to;
    j["transition"] = matrix_json(m, labels, labels);
    return dump_json(j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Kostka / Hall-Littlewood / Green function engine for r-symbols"};
    app.require_subcommand(1);
    CommonOpts o;

    auto add_common = [&](CLI::App* sub, bool needs_n = true) {
        if (needs_n) sub->add_option("--n", o.n, "rank n")->required();
        sub->add_option("--r", o.r, "number of colors r");
        sub->add_option("--e", o.e, "gap parameter e");
        sub->add_option("--s", o.s, "comma-separated s_1..s_r");
        sub->add_option("--alpha", o.alpha, "alpha (0 <= alpha < r)");
        sub->add_option("--defects", o.defects, "semicolon-separated defect tuples, e.g. '1,0;3,0'");
        sub->add_option("--preset", o.preset, "sp | sp-char2 | gl");
        sub->add_option("--out", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output", o.output, "write to file instead of stdout");
        sub->add_option("--cache-dir", o.cache_dir, "result cache directory (or RSYM_CACHE_DIR)");
        sub->add_option("--tie-break", o.tie_break, "default | alt");
        sub->add_flag("--override-guards", o.override_guards, "lift instance size guards");
        sub->add_flag("--parallel", o.parallel, "parallelize entry computations (OpenMP)");
    };

    auto* sc_symbols = app.add_subcommand("symbols", "ordered symbol table Z_{n,D}");
    add_common(sc_symbols);
    auto* sc_chartable = app.add_subcommand("chartable", "character table of W_{n,r}");
    add_common(sc_chartable);
    auto* sc_hl = app.add_subcommand("hl", "Hall-Littlewood functions P/Q and K");
    add_common(sc_hl);
    sc_hl->add_flag("--multi", o.multi, "multi-parameter t_1..t_r");
    auto* sc_kostka = app.add_subcommand("kostka", "Kostka matrices via the block algorithm");
    add_common(sc_kostka);
    sc_kostka->add_flag("--multi", o.multi, "multi-parameter (Thm 4.4 route)");
    sc_kostka->add_flag("--modified,!--unmodified", o.modified,
                        "emit modified K~ (default) or unmodified K");
    auto* sc_green = app.add_subcommand("green", "Green function tables");
    add_common(sc_green);
    bool gl = false, sp = false, char2 = false;
    std::string qstr;
    long congruence_prime = 0;
    int fault_entry = -1;
    sc_green->add_flag("--gl", gl, "GL_n Green polynomials");
    sc_green->add_flag("--sp", sp, "symplectic Green functions (Y-basis)");
    sc_green->add_flag("--char2", char2, "characteristic-2 configuration");
    sc_green->add_option("--q", qstr, "evaluation point q (rational)");
    sc_green->add_option("--congruence", congruence_prime, "run the mod-r congruence check");
    sc_green->add_option("--fault-entry", fault_entry,
                         "inject +1 into the k-th congruence value (mutation testing)");
    auto* sc_verify = app.add_subcommand("verify", "characterization + order-dependence reports");
    add_common(sc_verify);
    auto* sc_symfunc = app.add_subcommand("symfunc", "debug: basis transition matrices");
    add_common(sc_symfunc);
    std::string from = "s", to = "m";
    sc_symfunc->add_option("--from", from, "m | s | p | q+ | q-");
    sc_symfunc->add_option("--to", to, "m | s | p | q+ | q-");

    try {
        app.parse(argc, argv);
        std::string extra;
        if (sc_green->parsed()) {
            std::ostringstream os;
            os << "gl=" << gl << ";sp=" << sp << ";char2=" << char2 << ";q=" << qstr
               << ";congruence=" << congruence_prime << ";fault=" << fault_entry;
            extra = os.str();
        }
        if (sc_symfunc->parsed()) extra = "from=" + from + ";to=" + to;
        std::string sub = app.get_subcommands()[0]->get_name();
        std::string config_string = canonical_config(sub, o, extra);
        return emit(o, config_string, [&]() -> std::string {
            if (sc_symbols->parsed()) return cmd_symbols(o);
            if (sc_chartable->parsed()) return cmd_chartable(o);
            if (sc_hl->parsed()) return cmd_hl(o);
            if (sc_kostka->parsed()) return cmd_kostka(o);
            if (sc_green->parsed())
                return cmd_green(o, gl, sp, char2, qstr, congruence_prime, fault_entry);
            if (sc_verify->parsed()) return cmd_verify(o);
            if (sc_symfunc->parsed()) return cmd_symfunc(o, from, to);
            throw usage_error("no subcommand");
        });
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const guard_error& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 3;
    } catch (const breakdown_error& e) {
        std::cerr << "algorithm breakdown: " << e.what() << "\n";
        return 4;
    } catch (const invariant_error& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
