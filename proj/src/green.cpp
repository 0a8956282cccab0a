#include "rsym/green.hpp"

namespace rsym {

Mat<RatFun> x_zero_matrix(const SymbolTable& table) {
    int N = table.size();
    int r = table.config.r;
    Mat<RatFun> x0(N, N);
    for (size_t b = 0; b < table.defects.size(); ++b) {
        const std::vector<int>& blk = table.block_indices[b];
        if (blk.empty()) continue;
        int np = table.block_rank(static_cast<int>(b));
        Mat<Cyclo> chi = character_table(np, r);
        SymFuncEngine<Cyclo> labeler(np, r, CoeffCtx<Cyclo>{r});
        for (int i : blk)
            for (int j : blk) {
                int li = labeler.label_index(table.symbols[i].source);
                int lj = labeler.label_index(table.symbols[j].source);
                x0(i, j) = RatFun(UniPoly(chi(lj, li)));  // chi^{mu_j}(w_{lambda_i})
            }
    }
    return x0;
}

Mat<RatFun> x_matrix(const KostkaResult<RatFun>& k, bool plus) {
    const Mat<RatFun>& kk = plus ? *k.kostka_plus : *k.kostka_minus;
    return x_zero_matrix(k.table) * kk;
}

GlGreen green_gl(int n, const Guards& guards) {
    SymbolConfig cfg;
    cfg.r = 1;
    cfg.e = 0;
    cfg.s = {0};
    cfg.alpha = 0;
    KostkaResult<RatFun> k = kostka_one_param(n, cfg, {Defect{0}}, TieBreak::Default, guards);
    const SymbolTable& T = k.table;
    int N = T.size();
    Mat<Cyclo> chi = character_table(n, 1);
    SymFuncEngine<Cyclo> labeler(n, 1, CoeffCtx<Cyclo>{1});
    GlGreen out;
    out.table = T;
    out.q = Mat<RatFun>(N, N);
    for (int mu = 0; mu < N; ++mu)
        for (int nu = 0; nu < N; ++nu) {
            RatFun acc;
            int lmu = labeler.label_index(T.symbols[mu].source);
            for (int lam = 0; lam < N; ++lam) {
                int llam = labeler.label_index(T.symbols[lam].source);
                Cyclo c = chi(llam, lmu);
                if (c.is_zero() || k.p_minus(lam, nu).is_zero()) continue;
                acc += RatFun(UniPoly(c)) * k.p_minus(lam, nu);
            }
            out.q(mu, nu) = acc;
        }
    return out;
}

SpGreen green_sp(int n, bool bad_characteristic, std::optional<Rat> q, const Guards& guards,
                 bool parallel) {
    auto [cfg, defects] = symplectic_defects(n, bad_characteristic);
    KostkaResult<RatFun> k = kostka_one_param(n, cfg, defects, TieBreak::Default, guards, parallel);
    const SymbolTable& T = k.table;
    const Mat<RatFun>& ktilde = k.p_minus;  // K~+ = K~- for r = 2
    SpGreen out;
    out.table = T;
    out.cusp_a.resize(T.defects.size());
    for (size_t b = 0; b < T.defects.size(); ++b) {
        int f = f_of_defect(T.defects[b], cfg);
        SymbolTable cusp = build_table(f, cfg, {T.defects[b]});
        if (cusp.size() != 1)
            throw invariant_error("cuspidal block of a defect is not a single symbol");
        out.cusp_a[b] = cusp.a_values[0];
    }
    for (size_t b = 0; b < T.defects.size(); ++b) {
        const std::vector<int>& blk = T.block_indices[b];
        if (blk.empty()) continue;
        int np = T.block_rank(static_cast<int>(b));
        Mat<Cyclo> chi = character_table(np, cfg.r);
        SymFuncEngine<Cyclo> labeler(np, cfg.r, CoeffCtx<Cyclo>{cfg.r});
        // E(L, d) = a(L) - a(L_cusp(d)) must be a non-negative integer
        for (int i : blk)
            if (T.a_values[i] < out.cusp_a[b])
                throw invariant_error("negative Green exponent a(L) - a(L_cusp)");
        RatFun tshift = RatFun::t_power(-out.cusp_a[b], cfg.r);
        for (const MultiPartition& w : enumerate_multipartitions(np, cfg.r)) {
            SpGreenRow row;
            row.defect_index = static_cast<int>(b);
            row.w_type = w;
            row.y_coeffs.assign(T.size(), RatFun());
            int lw = labeler.label_index(w);
            for (int col = 0; col < T.size(); ++col) {
                RatFun acc;
                for (int i : blk) {
                    Cyclo c = chi(labeler.label_index(T.symbols[i].source), lw);
                    if (c.is_zero() || ktilde(i, col).is_zero()) continue;
                    acc += RatFun(UniPoly(c)) * ktilde(i, col);
                }
                row.y_coeffs[col] = tshift * acc;
            }
            if (q) {
                row.at_q.resize(T.size());
                for (int col = 0; col < T.size(); ++col) {
                    Cyclo v = row.y_coeffs[col].eval(Cyclo(*q, cfg.r));
                    row.at_q[col] = v.rational_value();
                }
            }
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

CongruenceReport congruence_check(int n, const Rat& q, long rprime, std::optional<int> fault_entry,
                                  const Guards& guards) {
    if (rprime < 2) throw usage_error("invalid prime");
    // rprime must not divide |G^{F^r}| = G_W(q^rprime)
    Rat qr = rat_pow(q, rprime);
    UniPoly gw = gw_polynomial(n, 2);
    Cyclo gw_at = gw.eval(Cyclo(qr, 2));
    Rat gw_val = gw_at.rational_value();
    if (!is_integer(gw_val)) throw usage_error("invalid prime");
    if (gw_val.get_num() % rprime == 0) throw usage_error("invalid prime");

    SpGreen green = green_sp(n, false, std::nullopt, guards);
    CongruenceReport rep;
    rep.q = q;
    rep.rprime = rprime;
    int counter = 0;
    for (size_t ri = 0; ri < green.rows.size(); ++ri) {
        const SpGreenRow& row = green.rows[ri];
        for (int col = 0; col < green.table.size(); ++col) {
            const RatFun& f = row.y_coeffs[col];
            if (f.is_zero()) continue;
            Rat v1 = f.eval(Cyclo(q, 2)).rational_value();
            Rat v2 = f.eval(Cyclo(qr, 2)).rational_value();
            if (fault_entry && *fault_entry == counter) v2 += 1;
            CongruenceReport::Entry e;
            e.row = static_cast<int>(ri);
            e.column = col;
            e.ok = is_integer(v1) && is_integer(v2);
            if (e.ok) {
                e.value_q = v1.get_num();
                e.value_qr = v2.get_num();
                Int diff = e.value_q - e.value_qr;
                e.residue = ((diff % rprime) + rprime) % rprime;
                e.ok = e.residue == 0;
            }
            rep.entries.push_back(e);
            ++counter;
        }
    }
    return rep;
}

}  // namespace rsym
