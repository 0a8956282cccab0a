#include "rsym/serialize.hpp"

#include <sstream>

namespace rsym {

Json rat_json(const Rat& q) {
    if (is_integer(q)) {
        Int n = q.get_num();
        if (n >= -((Int(1) << 53) - 1) && n <= (Int(1) << 53) - 1)
            return Json(n.get_si());
    }
    return Json(q.get_str());
}

Json cyclo_json(const Cyclo& c) {
    Json j;
    j["order"] = c.order();
    Json coeffs = Json::array();
    for (const Rat& q : c.coeffs()) coeffs.push_back(rat_json(q));
    j["coeffs"] = coeffs;
    return j;
}

Json unipoly_json(const UniPoly& p) {
    Json arr = Json::array();
    for (const Cyclo& c : p.coeffs()) {
        if (c.is_rational())
            arr.push_back(rat_json(c.rational_value()));
        else
            arr.push_back(cyclo_json(c));
    }
    return arr;
}

Json ratfun_json(const RatFun& f) {
    Json j;
    j["num"] = unipoly_json(f.num());
    j["den"] = unipoly_json(f.den());
    return j;
}

Json multipoly_json(const MultiPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = e;
        if (c.is_rational())
            t["coeff"] = rat_json(c.rational_value());
        else
            t["coeff"] = cyclo_json(c);
        arr.push_back(t);
    }
    return arr;
}

Json multiratfun_json(const MultiRatFun& f) {
    Json j;
    j["num"] = multipoly_json(f.num());
    j["den"] = multipoly_json(f.den());
    return j;
}

Json partition_json(const Partition& p) { return Json(p); }

Json multipartition_json(const MultiPartition& mp) {
    Json arr = Json::array();
    for (const Partition& p : mp) arr.push_back(partition_json(p));
    return arr;
}

Json symbol_json(const Symbol& s) {
    Json j;
    j["rows"] = s.rows;
    j["defect"] = s.defect;
    j["rank"] = s.rank;
    j["source"] = multipartition_json(s.source);
    return j;
}

Json table_json(const SymbolTable& t) {
    Json j;
    j["schema_version"] = 1;
    Json cfg;
    cfg["r"] = t.config.r;
    cfg["e"] = t.config.e;
    cfg["s"] = t.config.s;
    cfg["alpha"] = t.config.alpha;
    j["config"] = cfg;
    j["n"] = t.n;
    j["defects"] = t.defects;
    Json syms = Json::array();
    for (const Symbol& s : t.symbols) syms.push_back(symbol_json(s));
    j["symbols"] = syms;
    j["a_values"] = t.a_values;
    Json classes = Json::array();
    for (const auto& [b, e] : t.classes) classes.push_back(Json::array({b, e}));
    j["classes"] = classes;
    return j;
}

std::vector<std::string> table_labels(const SymbolTable& t) {
    std::vector<std::string> labels;
    for (const Symbol& s : t.symbols) {
        std::ostringstream os;
        os << "d=";
        for (size_t i = 0; i < s.defect.size(); ++i) os << (i ? "," : "") << s.defect[i];
        os << " " << multipartition_str(s.source);
        labels.push_back(os.str());
    }
    return labels;
}

namespace {

template <class F, class EntryFn>
Json matrix_json_impl(const Mat<F>& m, const std::vector<std::string>& row_labels,
                      const std::vector<std::string>& col_labels, EntryFn entry) {
    Json j;
    j["row_labels"] = row_labels;
    j["col_labels"] = col_labels;
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(entry(m(i, k)));
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

template <class F, class StrFn>
std::string matrix_csv_impl(const Mat<F>& m, const std::vector<std::string>& row_labels,
                            const std::vector<std::string>& col_labels, StrFn str) {
    std::ostringstream os;
    os << "row";
    for (const std::string& c : col_labels) os << "," << csv_escape(c);
    os << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        os << csv_escape(row_labels[i]);
        for (int k = 0; k < m.cols(); ++k) os << "," << csv_escape(str(m(i, k)));
        os << "\n";
    }
    return os.str();
}

}  // namespace

Json matrix_json(const Mat<RatFun>& m, const std::vector<std::string>& rl,
                 const std::vector<std::string>& cl) {
    return matrix_json_impl(m, rl, cl, [](const RatFun& f) { return ratfun_json(f); });
}
Json matrix_json(const Mat<MultiRatFun>& m, const std::vector<std::string>& rl,
                 const std::vector<std::string>& cl) {
    return matrix_json_impl(m, rl, cl, [](const MultiRatFun& f) { return multiratfun_json(f); });
}
Json matrix_json(const Mat<Cyclo>& m, const std::vector<std::string>& rl,
                 const std::vector<std::string>& cl) {
    return matrix_json_impl(m, rl, cl, [](const Cyclo& c) { return cyclo_json(c); });
}

std::string matrix_csv(const Mat<RatFun>& m, const std::vector<std::string>& rl,
                       const std::vector<std::string>& cl) {
    return matrix_csv_impl(m, rl, cl, [](const RatFun& f) { return f.str(); });
}
std::string matrix_csv(const Mat<MultiRatFun>& m, const std::vector<std::string>& rl,
                       const std::vector<std::string>& cl) {
    return matrix_csv_impl(m, rl, cl, [](const MultiRatFun& f) { return f.str(); });
}
std::string matrix_csv(const Mat<Cyclo>& m, const std::vector<std::string>& rl,
                       const std::vector<std::string>& cl) {
    return matrix_csv_impl(m, rl, cl, [](const Cyclo& c) { return c.str(); });
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace rsym
