#include "rsym/lusztig_shoji.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rsym {

Mat<MultiRatFun> delta_matrix(int m_power, int r) {
    Mat<MultiRatFun> d(r, r);
    Rat inv_r(1, r);
    for (int a = 0; a < r; ++a)
        for (int ap = 0; ap < r; ++ap) {
            MultiPoly p(r);
            for (int k = 0; k < r; ++k) {
                Cyclo coef = Cyclo::zeta(r, static_cast<long>(k) * (a - ap));
                Expo e(r, 0);
                e[k] = m_power;
                p.add_term(e, coef * Cyclo(inv_r, r));
            }
            d(a, ap) = MultiRatFun(std::move(p));
        }
    return d;
}

MultiRatFun z_xi(const DoublePartitionArray& xi, int r) {
    // Delta(t^m) per part size occurring
    int maxpart = 0;
    for (const auto& row : xi.cells)
        for (const Partition& p : row)
            for (int x : p) maxpart = std::max(maxpart, x);
    std::vector<Mat<MultiRatFun>> delta(maxpart + 1);
    for (int mpow = 1; mpow <= maxpart; ++mpow) delta[mpow] = delta_matrix(mpow, r);

    MultiRatFun acc(r, Rat(1));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            for (int part : xi.cells[i][j]) {
                MultiRatFun factor = -MultiRatFun(MultiPoly(r, Cyclo::zeta(r, j))) * delta[part](j, i);
                if (i == j) factor += MultiRatFun(r, Rat(1));
                acc *= factor;
            }
        }
    acc *= MultiRatFun(r, Rat(Rat(1) / Rat(xi.z_order())));
    return acc;
}

MultiRatFun z_pair(const MultiPartition& lambda, const MultiPartition& mu, int r) {
    if (mp_size(lambda) != mp_size(mu)) throw usage_error("z_pair needs equal sizes");
    // enumerate all Xi with row merge lambda by assigning each part of each
    // row a column, dedupe, then filter on the column merge
    std::set<std::vector<std::vector<Partition>>> seen;
    MultiRatFun acc(r);
    DoublePartitionArray xi;
    xi.r = r;
    xi.cells.assign(r, std::vector<Partition>(r));
    std::vector<std::pair<int, int>> parts;  // (row color, part value)
    for (int k = 0; k < r; ++k)
        for (int v : lambda[k]) parts.emplace_back(k, v);
    std::vector<int> col(parts.size(), 0);
    while (true) {
        for (auto& row : xi.cells)
            for (Partition& p : row) p.clear();
        for (size_t i = 0; i < parts.size(); ++i)
            xi.cells[parts[i].first][col[i]].push_back(parts[i].second);
        for (auto& row : xi.cells)
            for (Partition& p : row) std::sort(p.rbegin(), p.rend());
        if (xi.column_merge() == mu && seen.insert(xi.cells).second) acc += z_xi(xi, r);
        // next assignment
        size_t pos = 0;
        while (pos < col.size() && col[pos] == r - 1) col[pos++] = 0;
        if (pos == col.size()) break;
        ++col[pos];
    }
    return acc;
}

void Guards::check_single(int n, int r) const {
    if (override_guards) return;
    if (n > max_n_single || r > max_r_single) {
        std::ostringstream os;
        os << "instance guard: one-parameter Kostka limited to n <= " << max_n_single
           << ", r <= " << max_r_single << " (requested n=" << n << ", r=" << r
           << "); override to proceed";
        throw guard_error(os.str());
    }
}

void Guards::check_multi(int n, int r) const {
    if (override_guards) return;
    if (n > max_n_multi || r > max_r_multi) {
        std::ostringstream os;
        os << "instance guard: multi-parameter Kostka limited to n <= " << max_n_multi
           << ", r <= " << max_r_multi << " (requested n=" << n << ", r=" << r
           << "); override to proceed";
        throw guard_error(os.str());
    }
}

OmegaMatrix<MultiRatFun> omega_multi(const SymbolTable& table, bool parallel) {
    int r = table.config.r;
    int N = table.size();
    OmegaMatrix<MultiRatFun> om{&table, OmegaMode::Multi, Mat<MultiRatFun>(N, N, MultiRatFun(r))};
    MultiRatFun one(r, Rat(1));
    for (size_t b = 0; b < table.defects.size(); ++b) {
        const std::vector<int>& blk = table.block_indices[b];
        if (blk.empty()) continue;
        int np = table.block_rank(static_cast<int>(b));
        int sz = static_cast<int>(blk.size());
        // Z(t) in block order
        Mat<MultiRatFun> Z(sz, sz);
        std::vector<std::pair<int, int>> cells;
        for (int i = 0; i < sz; ++i)
            for (int j = 0; j < sz; ++j) cells.emplace_back(i, j);
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (size_t c = 0; c < cells.size(); ++c) {
            auto [i, j] = cells[c];
            Z(i, j) = z_pair(table.symbols[blk[i]].source, table.symbols[blk[j]].source, r);
        }
        Mat<MultiRatFun> Zinv;
        try {
            Zinv = Z.inverse(one);
        } catch (const math_error&) {
            throw invariant_error("Z(t) singular: contradicts non-singularity of Z(t_0)");
        }
        // X(0): rows = classes, cols = characters; entries chi^mu(w_lambda)
        Mat<Cyclo> chi = character_table(np, r, parallel);
        Mat<MultiRatFun> X0(sz, sz), X0c(sz, sz);
        SymFuncEngine<Cyclo> labeler(np, r, CoeffCtx<Cyclo>{r});
        for (int i = 0; i < sz; ++i)
            for (int j = 0; j < sz; ++j) {
                int li = labeler.label_index(table.symbols[blk[i]].source);
                int lj = labeler.label_index(table.symbols[blk[j]].source);
                X0(i, j) = MultiRatFun(MultiPoly(r, chi(lj, li)));
                X0c(i, j) = MultiRatFun(MultiPoly(r, chi(lj, li).conj()));
            }
        Mat<MultiRatFun> H(sz, sz);
        for (int i = 0; i < sz; ++i)
            H(i, i) = MultiRatFun(r, Rat(1) / Rat(z_multipartition(table.symbols[blk[i]].source, r)));
        Mat<MultiRatFun> block = X0.transpose() * H * Zinv * H * X0c;
        for (int i = 0; i < sz; ++i)
            for (int j = 0; j < sz; ++j) om.entries(blk[i], blk[j]) = block(i, j);
    }
    return om;
}

OmegaMatrix<RatFun> omega_tilde(const SymbolTable& table, bool parallel) {
    int r = table.config.r;
    int n = table.n;
    int N = table.size();
    OmegaMatrix<RatFun> om{&table, OmegaMode::OneParameterModified, Mat<RatFun>(N, N)};
    RatFun gw(gw_polynomial(n, r));
    for (size_t b = 0; b < table.defects.size(); ++b) {
        const std::vector<int>& blk = table.block_indices[b];
        if (blk.empty()) continue;
        int np = table.block_rank(static_cast<int>(b));
        int sz = static_cast<int>(blk.size());
        Mat<Cyclo> chi = character_table(np, r, parallel);
        SymFuncEngine<Cyclo> labeler(np, r, CoeffCtx<Cyclo>{r});
        auto classes = class_data(np, r);
        std::vector<RatFun> detref(classes.size());
        std::vector<RatFun> weight(classes.size());
        for (size_t c = 0; c < classes.size(); ++c) {
            detref[c] = RatFun(det_reflection(classes[c].type, r));
            weight[c] = RatFun(UniPoly(Cyclo(Rat(1) / Rat(classes[c].centralizer_order), r)));
        }
        std::vector<int> lbl(sz);
        for (int i = 0; i < sz; ++i) lbl[i] = labeler.label_index(table.symbols[blk[i]].source);
        RatFun tn = RatFun::t_power(np, r);
        std::vector<std::pair<int, int>> cells;
        for (int i = 0; i < sz; ++i)
            for (int j = 0; j < sz; ++j) cells.emplace_back(i, j);
        std::vector<RatFun> vals(cells.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (size_t c = 0; c < cells.size(); ++c) {
            auto [i, j] = cells[c];
            RatFun acc;
            for (size_t cl = 0; cl < classes.size(); ++cl) {
                Cyclo x = chi(lbl[i], cl) * chi(lbl[j], cl).conj();
                if (x.is_zero()) continue;
                acc += RatFun(UniPoly(x)) * weight[cl] / detref[cl];
            }
            vals[c] = gw * tn * acc;
        }
        for (size_t c = 0; c < cells.size(); ++c) {
            auto [i, j] = cells[c];
            if (!vals[c].is_polynomial() || !vals[c].num().is_integer_poly())
                throw invariant_error("omega integrality violated");
            om.entries(blk[i], blk[j]) = vals[c];
        }
    }
    return om;
}

template <class F>
void block_solve(const SymbolTable& table, const Mat<F>& omega, const std::vector<F>& diag_scalars,
                 const F& one, Mat<F>& p_minus, Mat<F>& p_plus_t, Mat<F>& lambda) {
    int N = table.size();
    int nc = static_cast<int>(table.classes.size());
    Mat<F> Pm(N, N), PpT(N, N), L(N, N);
    auto cls = [&](int c) { return table.classes[c]; };
    auto width = [&](int c) { return cls(c).second - cls(c).first; };
    std::vector<Mat<F>> Linv(nc);
    for (int c = 0; c < nc; ++c) {
        auto [b0, e0] = cls(c);
        int w = width(c);
        const F& d = diag_scalars[c];
        for (int i = 0; i < w; ++i) {
            Pm(b0 + i, b0 + i) = d;
            PpT(b0 + i, b0 + i) = d;
        }
        // Lambda_C = d^{-1} (Omega_CC - sum_{C'' < C} Pm[C,C''] L_{C''} PpT[C'',C]) d^{-1}
        Mat<F> acc = omega.block(b0, b0, w, w);
        for (int c2 = 0; c2 < c; ++c2) {
            auto [b2, e2] = cls(c2);
            int w2 = width(c2);
            acc = acc - Pm.block(b0, b2, w, w2) * L.block(b2, b2, w2, w2) * PpT.block(b2, b0, w2, w);
        }
        F dinv = one / d;
        Mat<F> Lc = acc.map([&](const F& x) { return x * dinv * dinv; });
        L.set_block(b0, b0, Lc);
        try {
            Linv[c] = Lc.inverse(one);
        } catch (const math_error&) {
            std::ostringstream os;
            os << "algorithm breakdown at class " << c << " (singular diagonal block)";
            throw breakdown_error(os.str());
        }
        // off-diagonal blocks of the current column/row of blocks
        for (int c2 = c + 1; c2 < nc; ++c2) {
            auto [b2, e2] = cls(c2);
            int w2 = width(c2);
            Mat<F> accm = omega.block(b2, b0, w2, w);
            Mat<F> accp = omega.block(b0, b2, w, w2);
            for (int c3 = 0; c3 < c; ++c3) {
                auto [b3, e3] = cls(c3);
                int w3 = width(c3);
                Mat<F> Lc3 = L.block(b3, b3, w3, w3);
                accm = accm - Pm.block(b2, b3, w2, w3) * Lc3 * PpT.block(b3, b0, w3, w);
                accp = accp - Pm.block(b0, b3, w, w3) * Lc3 * PpT.block(b3, b2, w3, w2);
            }
            // Pm[C',C] = accm d^{-1} L_C^{-1};  PpT[C,C'] = L_C^{-1} d^{-1} accp
            Mat<F> pm = (accm * Linv[c]).map([&](const F& x) { return x * dinv; });
            Mat<F> pp = (Linv[c] * accp).map([&](const F& x) { return x * dinv; });
            Pm.set_block(b2, b0, pm);
            PpT.set_block(b0, b2, pp);
        }
    }
    p_minus = std::move(Pm);
    p_plus_t = std::move(PpT);
    lambda = std::move(L);
}

template void block_solve<RatFun>(const SymbolTable&, const Mat<RatFun>&,
                                  const std::vector<RatFun>&, const RatFun&, Mat<RatFun>&,
                                  Mat<RatFun>&, Mat<RatFun>&);
template void block_solve<MultiRatFun>(const SymbolTable&, const Mat<MultiRatFun>&,
                                       const std::vector<MultiRatFun>&, const MultiRatFun&,
                                       Mat<MultiRatFun>&, Mat<MultiRatFun>&, Mat<MultiRatFun>&);

KostkaResult<RatFun> kostka_one_param(int n, const SymbolConfig& cfg, std::vector<Defect> defects,
                                      TieBreak tie_break, const Guards& guards, bool parallel) {
    guards.check_single(n, cfg.r);
    SymbolTable table = build_table(n, cfg, std::move(defects), tie_break);
    OmegaMatrix<RatFun> om = omega_tilde(table, parallel);
    std::vector<RatFun> diag;
    for (const auto& [b, e] : table.classes) diag.push_back(RatFun::t_power(table.a_values[b], cfg.r));
    RatFun one(UniPoly(Cyclo(Rat(1), cfg.r)));
    KostkaResult<RatFun> out;
    out.table = table;
    out.omega = om.entries;
    Mat<RatFun> PpT;
    block_solve(table, om.entries, diag, one, out.p_minus, PpT, out.lambda);
    out.p_plus = PpT.transpose();
    // K(t) = t^{a(L')} K~(1/t)
    auto unmodify = [&](const Mat<RatFun>& kt) {
        Mat<RatFun> k(kt.rows(), kt.cols());
        for (int i = 0; i < kt.rows(); ++i)
            for (int j = 0; j < kt.cols(); ++j) {
                if (kt(i, j).is_zero()) continue;
                k(i, j) = RatFun::t_power(table.a_values[j], cfg.r) * kt(i, j).invert_variable();
            }
        return k;
    };
    out.kostka_minus = unmodify(out.p_minus);
    out.kostka_plus = unmodify(out.p_plus);
    return out;
}

KostkaResult<MultiRatFun> kostka_multi_param(int n, const SymbolConfig& cfg,
                                             std::vector<Defect> defects, TieBreak tie_break,
                                             const Guards& guards, bool parallel) {
    guards.check_multi(n, cfg.r);
    SymbolTable table = build_table(n, cfg, std::move(defects), tie_break);
    OmegaMatrix<MultiRatFun> om = omega_multi(table, parallel);
    MultiRatFun one(cfg.r, Rat(1));
    std::vector<MultiRatFun> diag(table.classes.size(), one);
    KostkaResult<MultiRatFun> out;
    out.table = table;
    out.omega = om.entries;
    Mat<MultiRatFun> PpT;
    block_solve(table, om.entries, diag, one, out.p_minus, PpT, out.lambda);
    out.p_plus = PpT.transpose();
    return out;
}

}  // namespace rsym
