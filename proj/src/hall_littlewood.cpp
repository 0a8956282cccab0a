#include "rsym/hall_littlewood.hpp"

#include <algorithm>

namespace rsym {

template <class F>
void HallLittlewood<F>::build() {
    const SymbolTable& T = table_;
    int N = T.size();
    int nblocks = static_cast<int>(T.defects.size());
    engines_.resize(nblocks);
    for (int b = 0; b < nblocks; ++b) {
        if (T.block_indices[b].empty()) continue;
        engines_[b] = std::make_unique<SymFuncEngine<F>>(T.block_rank(b), T.config.r, ctx_);
        engines_[b]->warm_up(true);
    }
    label_of_.assign(N, -1);
    for (int i = 0; i < N; ++i)
        label_of_[i] = engines_[T.defect_of[i]]->label_index(T.symbols[i].source);

    pplus_.assign(N, {});
    pminus_.assign(N, {});

    // inverse of the class Gram restricted to one defect block, memoized;
    // key = class * nblocks + block
    std::map<int, Mat<F>> block_inv;
    std::map<int, std::vector<int>> block_members;  // same key -> member symbol ids

    auto gram = [&](int b, const std::vector<F>& f, const std::vector<F>& g) {
        return scalar_product_s(b, f, g);
    };

    for (int ci = 0; ci < static_cast<int>(T.classes.size()); ++ci) {
        auto [begin, end] = T.classes[ci];
        for (int i = begin; i < end; ++i) {
            int b = T.defect_of[i];
            SymFuncEngine<F>& eng = *engines_[b];
            int dim = eng.count();
            // start from s_Lambda
            std::vector<F> up(dim, F()), um(dim, F());
            up[label_of_[i]] = ctx_.one();
            um[label_of_[i]] = ctx_.one();
            // corrections over every earlier class, same defect block only
            for (int cj = 0; cj < ci; ++cj) {
                int key = cj * nblocks + b;
                auto mit = block_members.find(key);
                if (mit == block_members.end()) {
                    std::vector<int> mem;
                    for (int k = T.classes[cj].first; k < T.classes[cj].second; ++k)
                        if (T.defect_of[k] == b) mem.push_back(k);
                    mit = block_members.emplace(key, std::move(mem)).first;
                }
                const std::vector<int>& mem = mit->second;
                if (mem.empty()) continue;
                int sz = static_cast<int>(mem.size());
                auto bit = block_inv.find(key);
                if (bit == block_inv.end()) {
                    Mat<F> B(sz, sz);
                    for (int a = 0; a < sz; ++a)
                        for (int c = 0; c < sz; ++c)
                            B(a, c) = gram(b, pplus_[mem[a]], pminus_[mem[c]]);
                    Mat<F> Binv;
                    try {
                        Binv = B.inverse(ctx_.one());
                    } catch (const math_error&) {
                        throw breakdown_error("degenerate Gram block");
                    }
                    bit = block_inv.emplace(key, std::move(Binv)).first;
                }
                const Mat<F>& Binv = bit->second;
                // d+ solves sum_a d_a <P+_a, P-_c> = -<s_i, P-_c>  (3.6.4)
                std::vector<F> rhs_p(sz), rhs_m(sz);
                std::vector<F> s_i(dim, F());
                s_i[label_of_[i]] = ctx_.one();
                for (int c = 0; c < sz; ++c) rhs_p[c] = gram(b, s_i, pminus_[mem[c]]);
                for (int a = 0; a < sz; ++a) rhs_m[a] = gram(b, pplus_[mem[a]], s_i);
                // d+ = -rhs_p * B^{-1}; d- = -B^{-1} * rhs_m
                for (int a = 0; a < sz; ++a) {
                    F dp = F(), dm = F();
                    for (int c = 0; c < sz; ++c) {
                        if (!rhs_p[c].is_zero() && !Binv(c, a).is_zero()) dp += rhs_p[c] * Binv(c, a);
                        if (!rhs_m[c].is_zero() && !Binv(a, c).is_zero()) dm += Binv(a, c) * rhs_m[c];
                    }
                    if (!dp.is_zero())
                        for (int l = 0; l < dim; ++l) up[l] -= dp * pplus_[mem[a]][l];
                    if (!dm.is_zero())
                        for (int l = 0; l < dim; ++l) um[l] -= dm * pminus_[mem[a]][l];
                }
            }
            pplus_[i] = std::move(up);
            pminus_[i] = std::move(um);
        }
    }

    // class Gram blocks and inverses (full class size; cross-defect zero)
    class_B_.clear();
    class_Binv_.clear();
    for (int ci = 0; ci < static_cast<int>(T.classes.size()); ++ci) {
        auto [begin, end] = T.classes[ci];
        int sz = end - begin;
        Mat<F> B(sz, sz);
        for (int a = 0; a < sz; ++a)
            for (int c = 0; c < sz; ++c) {
                if (T.defect_of[begin + a] != T.defect_of[begin + c]) continue;
                B(a, c) = gram(T.defect_of[begin + a], pplus_[begin + a], pminus_[begin + c]);
            }
        Mat<F> Binv;
        try {
            Binv = B.inverse(ctx_.one());
        } catch (const math_error&) {
            throw breakdown_error("degenerate Gram block");
        }
        class_B_.push_back(std::move(B));
        class_Binv_.push_back(std::move(Binv));
    }

    // Q+_L = sum_{L' ~ L} b_{L,L'} P+_{L'};  Q-_L = sum b_{L',L} P-_{L'}  (3.7.1)
    qplus_.assign(N, {});
    qminus_.assign(N, {});
    for (int i = 0; i < N; ++i) {
        int ci = T.class_of[i];
        auto [begin, end] = T.classes[ci];
        int pos = i - begin;
        int b = T.defect_of[i];
        int dim = engines_[b]->count();
        std::vector<F> qp(dim, F()), qm(dim, F());
        const Mat<F>& Binv = class_Binv_[ci];
        for (int a = 0; a < end - begin; ++a) {
            if (T.defect_of[begin + a] != b) continue;
            const F& bp = Binv(pos, a);
            const F& bm = Binv(a, pos);
            if (!bp.is_zero())
                for (int l = 0; l < dim; ++l) qp[l] += bp * pplus_[begin + a][l];
            if (!bm.is_zero())
                for (int l = 0; l < dim; ++l) qm[l] += bm * pminus_[begin + a][l];
        }
        qplus_[i] = std::move(qp);
        qminus_[i] = std::move(qm);
    }

    // K+- = M(P,s)^{-1}, assembled per defect block
    kplus_ = Mat<F>(N, N);
    kminus_ = Mat<F>(N, N);
    for (int b = 0; b < nblocks; ++b) {
        const std::vector<int>& blk = T.block_indices[b];
        if (blk.empty()) continue;
        int sz = static_cast<int>(blk.size());
        Mat<F> Up(sz, sz), Um(sz, sz);
        for (int a = 0; a < sz; ++a)
            for (int c = 0; c < sz; ++c) {
                Up(a, c) = pplus_[blk[a]][label_of_[blk[c]]];
                Um(a, c) = pminus_[blk[a]][label_of_[blk[c]]];
            }
        Mat<F> Kp = Up.inverse(ctx_.one());
        Mat<F> Km = Um.inverse(ctx_.one());
        for (int a = 0; a < sz; ++a)
            for (int c = 0; c < sz; ++c) {
                kplus_(blk[a], blk[c]) = Kp(a, c);
                kminus_(blk[a], blk[c]) = Km(a, c);
            }
    }
}

template <class F>
typename HallLittlewood<F>::CharacterizationReport HallLittlewood<F>::verify_characterization() {
    const SymbolTable& T = table_;
    CharacterizationReport rep;
    for (int i = 0; i < T.size(); ++i) {
        typename CharacterizationReport::Entry e;
        e.symbol = i;
        e.q_support_ok = e.s_support_ok = true;
        int b = T.defect_of[i];
        SymFuncEngine<F>& eng = *engines_[b];
        // q-coordinates of P+_i within its block: c = u * S * Q^{-1}
        auto q_coords = [&](const std::vector<F>& u, Basis qb) {
            const Mat<F>& S = eng.transition_to_m(Basis::S);
            const Mat<F>& Qinv = eng.transition_from_m(qb);
            int dim = eng.count();
            std::vector<F> mcoords(dim, F()), c(dim, F());
            for (int j = 0; j < dim; ++j)
                for (int l = 0; l < dim; ++l) {
                    if (u[l].is_zero() || S(l, j).is_zero()) continue;
                    mcoords[j] += u[l] * S(l, j);
                }
            for (int j = 0; j < dim; ++j)
                for (int l = 0; l < dim; ++l) {
                    if (mcoords[l].is_zero() || Qinv(l, j).is_zero()) continue;
                    c[j] += mcoords[l] * Qinv(l, j);
                }
            return c;
        };
        std::vector<F> cp = q_coords(pplus_[i], Basis::QPlus);
        std::vector<F> cm = q_coords(pminus_[i], Basis::QMinus);
        // support: nonzero q-coefficients only on L' ~ L or L' >= L
        for (int j = 0; j < T.size(); ++j) {
            if (T.defect_of[j] != b) continue;
            bool allowed = T.class_of[j] == T.class_of[i] || j >= i;
            if (!allowed && (!cp[label_of_[j]].is_zero() || !cm[label_of_[j]].is_zero()))
                e.q_support_ok = false;
        }
        // class-diagonal block of q-coefficients nonsingular
        auto [begin, end] = T.classes[T.class_of[i]];
        std::vector<int> mem;
        for (int k = begin; k < end; ++k)
            if (T.defect_of[k] == b) mem.push_back(k);
        int sz = static_cast<int>(mem.size());
        Mat<F> Cp(sz, sz), Cm(sz, sz);
        for (int a = 0; a < sz; ++a) {
            std::vector<F> ca = q_coords(pplus_[mem[a]], Basis::QPlus);
            std::vector<F> cb = q_coords(pminus_[mem[a]], Basis::QMinus);
            for (int c = 0; c < sz; ++c) {
                Cp(a, c) = ca[label_of_[mem[c]]];
                Cm(a, c) = cb[label_of_[mem[c]]];
            }
        }
        e.q_diagonal_ok = true;
        try {
            Cp.inverse(ctx_.one());
            Cm.inverse(ctx_.one());
        } catch (const math_error&) {
            e.q_diagonal_ok = false;
        }
        // s-expansion: support on L' ~ L or L' <= L, class-diagonal identity
        for (int j = 0; j < T.size(); ++j) {
            if (T.defect_of[j] != b) continue;
            bool allowed = T.class_of[j] == T.class_of[i] || j <= i;
            if (!allowed &&
                (!pplus_[i][label_of_[j]].is_zero() || !pminus_[i][label_of_[j]].is_zero()))
                e.s_support_ok = false;
        }
        e.s_diagonal_ok = true;
        for (int k = begin; k < end; ++k) {
            if (T.defect_of[k] != b) continue;
            F want = k == i ? ctx_.one() : F();
            if (!(pplus_[i][label_of_[k]] == want) || !(pminus_[i][label_of_[k]] == want))
                e.s_diagonal_ok = false;
        }
        rep.entries.push_back(e);
    }
    return rep;
}

Mat<RatFun> modified_kostka(const Mat<RatFun>& kostka, const std::vector<int>& a_values) {
    int n = kostka.rows();
    Mat<RatFun> out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (kostka(i, j).is_zero()) continue;
            out(i, j) = RatFun::t_power(a_values[j]) * kostka(i, j).invert_variable();
        }
    return out;
}

template class HallLittlewood<RatFun>;
template class HallLittlewood<MultiRatFun>;

}  // namespace rsym
