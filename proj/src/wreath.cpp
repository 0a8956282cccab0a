#include "rsym/wreath.hpp"

#include "rsym/symfunc.hpp"

namespace rsym {

Int wreath_order(int n, int r) {
    Int w = 1;
    for (int i = 1; i <= n; ++i) w *= Int(i) * r;
    return w;
}

std::vector<ClassDatum> class_data(int n, int r) {
    std::vector<ClassDatum> out;
    Int order = wreath_order(n, r);
    for (const MultiPartition& mp : enumerate_multipartitions(n, r)) {
        ClassDatum d;
        d.type = mp;
        d.centralizer_order = z_multipartition(mp, r);
        d.class_size = order / d.centralizer_order;
        out.push_back(std::move(d));
    }
    return out;
}

Mat<Cyclo> character_table(int n, int r, bool parallel) {
    CoeffCtx<Cyclo> ctx{r};
    SymFuncEngine<Cyclo> eng(n, r, ctx);
    eng.warm_up(false);
    int count = eng.count();
    Mat<Cyclo> table(count, count);
    // column lam: coefficients of s_mu in p_lam
    std::vector<std::vector<Cyclo>> cols(count);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int lam = 0; lam < count; ++lam)
        cols[lam] = eng.expand_in(eng.basis_poly(Basis::P, lam), Basis::S);
    for (int lam = 0; lam < count; ++lam)
        for (int mu = 0; mu < count; ++mu) table(mu, lam) = cols[lam][mu];
    return table;
}

UniPoly det_reflection(const MultiPartition& type, int r) {
    UniPoly det(Cyclo(Rat(1), r));
    for (int k = 0; k < r; ++k) {
        Cyclo zk = Cyclo::zeta(r, k);
        for (int part : type[k]) {
            UniPoly factor = UniPoly::monomial(part, Cyclo(Rat(1), r)) - UniPoly(zk);
            det *= factor;
        }
    }
    return det;
}

Cyclo det_reflection_at_zero(const MultiPartition& type, int r) {
    int n = mp_size(type);
    Cyclo d = det_reflection(type, r).coeff(0);
    return n % 2 ? -d : d;
}

UniPoly poincare(int n, int r) {
    UniPoly p(Cyclo(Rat(1), r));
    for (int i = 1; i <= n; ++i) {
        // (t^{ir} - 1)/(t - 1) = 1 + t + ... + t^{ir-1}
        std::vector<Cyclo> c(i * r, Cyclo(Rat(1), r));
        p *= UniPoly(std::move(c));
    }
    return p;
}

int nstar(int n, int r) { return r * n * (n + 1) / 2 - n; }

UniPoly gw_polynomial(int n, int r) {
    UniPoly g = poincare(n, r);
    UniPoly tm1 = UniPoly::t(r) - UniPoly(Cyclo(Rat(1), r));
    for (int i = 0; i < n; ++i) g *= tm1;
    g *= UniPoly::monomial(nstar(n, r), Cyclo(Rat(1), r));
    return g;
}

UniPoly graded_multiplicity(const std::vector<Cyclo>& f, int n, int r) {
    auto classes = class_data(n, r);
    if (f.size() != classes.size()) throw usage_error("need one value per class");
    RatFun acc;
    for (size_t i = 0; i < classes.size(); ++i) {
        if (f[i].is_zero()) continue;
        RatFun term(UniPoly(det_reflection_at_zero(classes[i].type, r) * f[i]));
        term /= RatFun(UniPoly(Cyclo(Rat(classes[i].centralizer_order), r)));
        term /= RatFun(det_reflection(classes[i].type, r));
        acc += term;
    }
    UniPoly tm1 = UniPoly::t(r) - UniPoly(Cyclo(Rat(1), r));
    RatFun pre(poincare(n, r));
    for (int i = 0; i < n; ++i) pre *= RatFun(tm1);
    acc *= pre;
    if (!acc.is_polynomial() || !acc.num().is_integer_poly()) throw math_error("not a character");
    return acc.num();
}

}  // namespace rsym
