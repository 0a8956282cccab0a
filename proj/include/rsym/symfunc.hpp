#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "rsym/field.hpp"
#include "rsym/matrix.hpp"
#include "rsym/partitions.hpp"

namespace rsym {

// Sparse polynomial in nx "x" variables with coefficients in F.  Term maps
// are ordered so iteration (and serialization) is canonical.
template <class F>
struct XPoly {
    int nx = 0;
    std::map<std::vector<int>, F> terms;

    XPoly() = default;
    explicit XPoly(int nvars) : nx(nvars) {}

    bool is_zero() const { return terms.empty(); }

    void add_term(const std::vector<int>& e, const F& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    XPoly& operator+=(const XPoly& o) {
        for (const auto& [e, c] : o.terms) add_term(e, c);
        return *this;
    }
    XPoly& operator-=(const XPoly& o) {
        for (const auto& [e, c] : o.terms) {
            F neg = F() - c;
            add_term(e, neg);
        }
        return *this;
    }
    friend bool operator==(const XPoly& a, const XPoly& b) { return a.terms == b.terms; }

    XPoly scaled(const F& s) const {
        XPoly r(nx);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : terms) r.terms[e] = c * s;
        return r;
    }

    // product, optionally truncated to total degree <= maxdeg (maxdeg < 0
    // means no truncation)
    static XPoly mul(const XPoly& a, const XPoly& b, int maxdeg = -1) {
        XPoly r(a.nx);
        std::vector<int> e(a.nx);
        for (const auto& [ea, ca] : a.terms) {
            for (const auto& [eb, cb] : b.terms) {
                int d = 0;
                for (int i = 0; i < a.nx; ++i) {
                    e[i] = ea[i] + eb[i];
                    d += e[i];
                }
                if (maxdeg >= 0 && d > maxdeg) continue;
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    friend XPoly operator*(const XPoly& a, const XPoly& b) { return mul(a, b); }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms) {
            int t = 0;
            for (int x : e) t += x;
            d = std::max(d, t);
        }
        return d;
    }

    // exact long division (throws invariant_error when not divisible)
    static XPoly exact_div(const XPoly& a, const XPoly& b) {
        XPoly rem = a, quot(a.nx);
        const auto lead = *b.terms.rbegin();
        while (!rem.is_zero()) {
            const auto& [er, cr] = *rem.terms.rbegin();
            std::vector<int> eq(a.nx);
            for (int i = 0; i < a.nx; ++i) {
                eq[i] = er[i] - lead.first[i];
                if (eq[i] < 0) throw invariant_error("inexact division in x-polynomial ring");
            }
            F cq = cr / lead.second;
            XPoly mono(a.nx);
            mono.terms[eq] = cq;
            quot += mono;
            rem -= mul(mono, b);
        }
        return quot;
    }

    template <class G>
    XPoly<G> map_coeffs(const std::function<G(const F&)>& f) const {
        XPoly<G> r(nx);
        for (const auto& [e, c] : terms) {
            G g = f(c);
            if (!g.is_zero()) r.terms[e] = g;
        }
        return r;
    }
};

enum class Basis { M, S, P, QPlus, QMinus };

// Finite-variable engine for symmetric functions in r colored alphabets of m
// variables each, homogeneous degree n.  m >= n makes the degree-n
// truncation faithful, so every identity holds exactly.  Caches are built
// lazily; instances are not safe for concurrent first use (build eagerly
// before any parallel region via warm_up()).
template <class F>
class SymFuncEngine {
  public:
    SymFuncEngine(int n, int r, CoeffCtx<F> ctx, int m = -1)
        : n_(n), r_(r), m_(m < 0 ? std::max(n, 1) : m), ctx_(ctx),
          labels_(enumerate_multipartitions(n, r)) {
        if (m_ < n_) throw usage_error("need at least n variables per color");
    }

    int n() const { return n_; }
    int r() const { return r_; }
    int m() const { return m_; }
    int nx() const { return r_ * m_; }
    const CoeffCtx<F>& ctx() const { return ctx_; }
    const std::vector<MultiPartition>& labels() const { return labels_; }
    int count() const { return static_cast<int>(labels_.size()); }

    int label_index(const MultiPartition& mp) const {
        auto it = std::find(labels_.begin(), labels_.end(), mp);
        if (it == labels_.end()) throw usage_error("label outside P_{n,r}");
        return static_cast<int>(it - labels_.begin());
    }

    // x variable index of color k (0-based), slot j (0-based)
    int var(int k, int j) const { return k * m_ + j; }

    const XPoly<F>& basis_poly(Basis b, int idx) {
        build_basis(b);
        return basis_[key(b)][idx];
    }

    // classical power sum of one color block
    XPoly<F> power_sum_block(int color, int s) const {
        XPoly<F> p(nx());
        if (s == 0) {
            p.add_term(std::vector<int>(nx(), 0), ctx_.one());
            return p;
        }
        for (int j = 0; j < m_; ++j) {
            std::vector<int> e(nx(), 0);
            e[var(color, j)] = s;
            p.add_term(e, ctx_.one());
        }
        return p;
    }

    // p^{(k)}_s = sum_j zeta^{(k-1)(j-1)} p_s(x^{(j)}), colors 0-based here
    XPoly<F> power_sum_colored(int k, int s) const {
        XPoly<F> p(nx());
        if (s == 0) {
            p.add_term(std::vector<int>(nx(), 0), ctx_.one());
            return p;
        }
        for (int j = 0; j < r_; ++j) {
            Cyclo z = Cyclo::zeta(ctx_.order, static_cast<long>(k) * j);
            XPoly<F> blk = power_sum_block(j, s);
            p += blk.scaled(ctx_.from_cyclo(z));
        }
        return p;
    }

    // Coefficients of u^0..u^maxdeg of prod_i (1 - t u x_i^{(num_color)}) /
    // (1 - u x_i^{(k)}) — the generating series (2.3.2); sign decides the
    // numerator color k -/+ 1.
    std::vector<XPoly<F>> q_series(int k, bool plus, int maxdeg, const F& t_param) const {
        int num_color = ((plus ? k - 1 : k + 1) % r_ + r_) % r_;
        std::vector<XPoly<F>> series(maxdeg + 1, XPoly<F>(nx()));
        series[0].add_term(std::vector<int>(nx(), 0), ctx_.one());
        for (int i = 0; i < m_; ++i) {
            // multiply by 1/(1 - u x_i^{(k)}): series[d] += series[d-1] * x
            std::vector<int> ex(nx(), 0);
            ex[var(k, i)] = 1;
            XPoly<F> xk(nx());
            xk.add_term(ex, ctx_.one());
            for (int d = 1; d <= maxdeg; ++d) series[d] += XPoly<F>::mul(series[d - 1], xk);
            // multiply by (1 - t u x_i^{(num_color)})
            std::vector<int> ey(nx(), 0);
            ey[var(num_color, i)] = 1;
            XPoly<F> ty(nx());
            F mt = F() - t_param;
            ty.add_term(ey, mt);
            for (int d = maxdeg; d >= 1; --d) series[d] += XPoly<F>::mul(series[d - 1], ty);
        }
        return series;
    }

    // q^{pm}_{lambda}(x;t) = prod_k prod_i q^{(k)}_{lambda^(k)_i, pm}(x; t_{k-c}),
    // c = 1 for "+", c = 0 for "-" (2.3.3)
    XPoly<F> q_pm(const MultiPartition& mp, bool plus) {
        ensure_q_cache(plus);
        auto& cache = plus ? qplus_cache_ : qminus_cache_;
        XPoly<F> acc(nx());
        acc.add_term(std::vector<int>(nx(), 0), ctx_.one());
        for (int k = 0; k < r_; ++k)
            for (int part : mp[k]) acc = XPoly<F>::mul(acc, cache[k][part]);
        return acc;
    }

    // monomial coordinates: coefficient of the orbit-representative monomial
    std::vector<F> m_coords(const XPoly<F>& f) const {
        std::vector<F> out(count(), F());
        for (int i = 0; i < count(); ++i) {
            std::vector<int> e = representative_exponent(labels_[i]);
            auto it = f.terms.find(e);
            if (it != f.terms.end()) out[i] = it->second;
        }
        return out;
    }

    // M(basis, m): row lbl = m-coordinates of basis element lbl
    const Mat<F>& transition_to_m(Basis b) {
        auto k = key(b);
        auto it = to_m_.find(k);
        if (it != to_m_.end()) return it->second;
        build_basis(b);
        Mat<F> t(count(), count());
        for (int i = 0; i < count(); ++i) {
            std::vector<F> row = m_coords(basis_[k][i]);
            for (int j = 0; j < count(); ++j) t(i, j) = row[j];
        }
        return to_m_.emplace(k, std::move(t)).first->second;
    }

    const Mat<F>& transition_from_m(Basis b) {
        auto k = key(b);
        auto it = from_m_.find(k);
        if (it != from_m_.end()) return it->second;
        Mat<F> inv = transition_to_m(b).inverse(ctx_.one());
        return from_m_.emplace(k, std::move(inv)).first->second;
    }

    // coordinates of f in the named basis
    std::vector<F> expand_in(const XPoly<F>& f, Basis b) {
        std::vector<F> mc = m_coords(f);
        if (b == Basis::M) return mc;
        // f = sum c_i basis_i  =>  [f]_m = T^t c with T = transition_to_m(b)
        const Mat<F>& Tinv = transition_from_m(b);  // T^{-1}
        std::vector<F> c(count(), F());
        for (int i = 0; i < count(); ++i)
            for (int j = 0; j < count(); ++j) {
                if (mc[j].is_zero() || Tinv(j, i).is_zero()) continue;
                c[i] += Tinv(j, i) * mc[j];
            }
        return c;
    }

    // Gram matrix of the bilinear form <q+_a, m_b> = delta in monomial
    // coordinates: <f, g> = [f]_m^t * gram_m * [g]_m
    const Mat<F>& gram_m() {
        if (!gram_m_) gram_m_ = std::make_unique<Mat<F>>(transition_from_m(Basis::QPlus));
        return *gram_m_;
    }

    // Gram in Schur coordinates: S gram_m S^t
    const Mat<F>& gram_s() {
        if (!gram_s_) {
            const Mat<F>& S = transition_to_m(Basis::S);
            gram_s_ = std::make_unique<Mat<F>>(S * gram_m() * S.transpose());
        }
        return *gram_s_;
    }

    F scalar_product_m(const std::vector<F>& fm, const std::vector<F>& gm) {
        const Mat<F>& G = gram_m();
        F acc = F();
        for (int i = 0; i < count(); ++i) {
            if (fm[i].is_zero()) continue;
            for (int j = 0; j < count(); ++j) {
                if (gm[j].is_zero() || G(i, j).is_zero()) continue;
                acc += fm[i] * G(i, j) * gm[j];
            }
        }
        return acc;
    }

    std::vector<int> representative_exponent(const MultiPartition& mp) const {
        std::vector<int> e(nx(), 0);
        for (int k = 0; k < r_; ++k)
            for (int j = 0; j < part_length(mp[k]); ++j) e[var(k, j)] = mp[k][j];
        return e;
    }

    void warm_up(bool with_q) {
        build_basis(Basis::M);
        build_basis(Basis::S);
        build_basis(Basis::P);
        transition_from_m(Basis::S);
        if (with_q) {
            build_basis(Basis::QPlus);
            build_basis(Basis::QMinus);
            gram_s();
        }
    }

  private:
    int key(Basis b) const { return static_cast<int>(b); }

    void ensure_q_cache(bool plus) {
        auto& cache = plus ? qplus_cache_ : qminus_cache_;
        if (!cache.empty()) return;
        cache.resize(r_);
        int c = plus ? 1 : 0;
        for (int k = 0; k < r_; ++k) {
            F t = ctx_.param(((k - c) % r_ + r_) % r_);
            cache[k] = q_series(k, plus, n_, t);
        }
    }

    XPoly<F> monomial_poly(const MultiPartition& mp) const {
        XPoly<F> acc(nx());
        acc.add_term(std::vector<int>(nx(), 0), ctx_.one());
        for (int k = 0; k < r_; ++k) {
            if (part_length(mp[k]) > m_) throw usage_error("too few variables for label");
            // distinct permutations of the padded exponent multiset
            std::vector<int> ex(m_, 0);
            for (int j = 0; j < part_length(mp[k]); ++j) ex[j] = mp[k][j];
            std::sort(ex.begin(), ex.end());
            XPoly<F> blk(nx());
            do {
                std::vector<int> e(nx(), 0);
                for (int j = 0; j < m_; ++j) e[var(k, j)] = ex[j];
                blk.add_term(e, ctx_.one());
            } while (std::next_permutation(ex.begin(), ex.end()));
            acc = XPoly<F>::mul(acc, blk);
        }
        return acc;
    }

    // bialternant: s_lambda = det(x_j^{lambda_i + m - i}) / Vandermonde
    XPoly<F> schur_block(int color, const Partition& lam) const {
        std::vector<int> shifted(m_);
        for (int i = 0; i < m_; ++i)
            shifted[i] = (i < part_length(lam) ? lam[i] : 0) + m_ - 1 - i;
        XPoly<F> numer(nx());
        std::vector<int> perm(m_);
        for (int i = 0; i < m_; ++i) perm[i] = i;
        do {
            int inv = 0;
            for (int i = 0; i < m_; ++i)
                for (int j = i + 1; j < m_; ++j)
                    if (perm[i] > perm[j]) ++inv;
            std::vector<int> e(nx(), 0);
            for (int i = 0; i < m_; ++i) e[var(color, perm[i])] = shifted[i];
            F coef = inv % 2 ? F() - ctx_.one() : ctx_.one();
            numer.add_term(e, coef);
        } while (std::next_permutation(perm.begin(), perm.end()));
        // Vandermonde prod_{i<j} (x_i - x_j)
        XPoly<F> vdm(nx());
        vdm.add_term(std::vector<int>(nx(), 0), ctx_.one());
        for (int i = 0; i < m_; ++i)
            for (int j = i + 1; j < m_; ++j) {
                XPoly<F> f(nx());
                std::vector<int> ei(nx(), 0), ej(nx(), 0);
                ei[var(color, i)] = 1;
                ej[var(color, j)] = 1;
                f.add_term(ei, ctx_.one());
                f.add_term(ej, F() - ctx_.one());
                vdm = XPoly<F>::mul(vdm, f);
            }
        return XPoly<F>::exact_div(numer, vdm);
    }

    void build_basis(Basis b) {
        auto k = key(b);
        if (basis_.count(k)) return;
        std::vector<XPoly<F>> polys;
        polys.reserve(count());
        for (const MultiPartition& mp : labels_) {
            switch (b) {
                case Basis::M:
                    polys.push_back(monomial_poly(mp));
                    break;
                case Basis::S: {
                    XPoly<F> acc(nx());
                    acc.add_term(std::vector<int>(nx(), 0), ctx_.one());
                    for (int kk = 0; kk < r_; ++kk) {
                        if (part_length(mp[kk]) > m_) throw usage_error("too few variables for label");
                        if (!mp[kk].empty()) acc = XPoly<F>::mul(acc, schur_block(kk, mp[kk]));
                    }
                    polys.push_back(std::move(acc));
                    break;
                }
                case Basis::P: {
                    XPoly<F> acc(nx());
                    acc.add_term(std::vector<int>(nx(), 0), ctx_.one());
                    for (int kk = 0; kk < r_; ++kk)
                        for (int part : mp[kk]) acc = XPoly<F>::mul(acc, power_sum_colored(kk, part));
                    polys.push_back(std::move(acc));
                    break;
                }
                case Basis::QPlus:
                    polys.push_back(q_pm(mp, true));
                    break;
                case Basis::QMinus:
                    polys.push_back(q_pm(mp, false));
                    break;
            }
        }
        basis_.emplace(k, std::move(polys));
    }

    int n_, r_, m_;
    CoeffCtx<F> ctx_;
    std::vector<MultiPartition> labels_;
    std::map<int, std::vector<XPoly<F>>> basis_;
    std::map<int, Mat<F>> to_m_, from_m_;
    std::vector<std::vector<XPoly<F>>> qplus_cache_, qminus_cache_;
    std::unique_ptr<Mat<F>> gram_m_, gram_s_;
};

}  // namespace rsym
