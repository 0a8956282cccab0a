#include <doctest.h>

#include "oracles.hpp"
#include "rsym/hall_littlewood.hpp"
#include "rsym/lusztig_shoji.hpp"

using namespace rsym;

namespace {

SymbolTable gl_table(int n) {
    SymbolConfig cfg;
    cfg.r = 1;
    cfg.e = 0;
    cfg.s = {0};
    cfg.alpha = 0;
    return build_table(n, cfg, {Defect{0}});
}

SymbolTable sp_table(int n) {
    auto [cfg, defects] = symplectic_defects(n, false);
    return build_table(n, cfg, defects);
}

}  // namespace

TEST_CASE("classical reduction: K matches the charge statistic, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        SymbolTable t = gl_table(n);
        HallLittlewood<RatFun> hl(t, CoeffCtx<RatFun>{1});
        const Mat<RatFun>& K = hl.kostka(true);
        CHECK(hl.kostka(false) == K);
        for (int i = 0; i < t.size(); ++i)
            for (int j = 0; j < t.size(); ++j) {
                UniPoly want = oracle::kostka_charge(t.symbols[i].source[0], t.symbols[j].source[0]);
                CHECK(K(i, j) == RatFun(want));
            }
    }
}

TEST_CASE("r=1 n=2: s_(2) = P_(2) + t P_(11)") {
    SymbolTable t = gl_table(2);
    HallLittlewood<RatFun> hl(t, CoeffCtx<RatFun>{1});
    int i2 = -1, i11 = -1;
    for (int i = 0; i < t.size(); ++i) {
        if (t.symbols[i].source[0] == Partition{2}) i2 = i;
        if (t.symbols[i].source[0] == Partition{1, 1}) i11 = i;
    }
    CHECK(hl.kostka(true)(i2, i11) == RatFun::t(1));
    CHECK(hl.kostka(true)(i2, i2) == RatFun(Rat(1)));
}

TEST_CASE("minimal class: P = s; P(0) = s everywhere; coefficients pole-free at 0") {
    for (SymbolTable t : {sp_table(1), sp_table(2), gl_table(3)}) {
        HallLittlewood<RatFun> hl(t, CoeffCtx<RatFun>{t.config.r});
        auto [b0, e0] = t.classes[0];
        for (int i = b0; i < e0; ++i)
            for (int j = 0; j < t.size(); ++j) {
                if (t.defect_of[i] != t.defect_of[j]) continue;
                RatFun want = (i == j) ? RatFun(Rat(1)) : RatFun();
                CHECK(hl.u_coefficient(true, i, j) == want);
                CHECK(hl.u_coefficient(false, i, j) == want);
            }
        Cyclo zero(Rat(0), t.config.r), one(Rat(1), t.config.r);
        for (int i = 0; i < t.size(); ++i)
            for (int j = 0; j < t.size(); ++j) {
                if (t.defect_of[i] != t.defect_of[j]) continue;
                CHECK(hl.u_coefficient(true, i, j).eval(zero) == (i == j ? one : zero));
                CHECK(hl.u_coefficient(false, i, j).eval(zero) == (i == j ? one : zero));
            }
    }
}

TEST_CASE("unitriangular support (Prop 3.6(i))") {
    for (SymbolTable t : {sp_table(2), gl_table(4)}) {
        HallLittlewood<RatFun> hl(t, CoeffCtx<RatFun>{t.config.r});
        for (int i = 0; i < t.size(); ++i)
            for (int j = 0; j < t.size(); ++j) {
                if (t.defect_of[i] != t.defect_of[j]) continue;
                bool same_class = t.class_of[i] == t.class_of[j];
                if ((same_class && i != j) || j > i) {
                    CHECK(hl.u_coefficient(true, i, j).is_zero());
                    CHECK(hl.u_coefficient(false, i, j).is_zero());
                }
            }
    }
}

TEST_CASE("orthogonality (Prop 3.6(ii)) and duality (3.7.2)") {
    for (SymbolTable t : {sp_table(1), sp_table(2)}) {
        HallLittlewood<RatFun> hl(t, CoeffCtx<RatFun>{t.config.r});
        RatFun one(Rat(1));
        for (int i = 0; i < t.size(); ++i)
            for (int j = 0; j < t.size(); ++j) {
                bool same_block = t.defect_of[i] == t.defect_of[j];
                if (t.class_of[i] != t.class_of[j]) {
                    RatFun ip = same_block ? hl.scalar_product_s(t.defect_of[i], hl.p_plus(i),
                                                                 hl.p_minus(j))
                                           : RatFun();
                    CHECK(ip.is_zero());
                }
                RatFun a = same_block
                               ? hl.scalar_product_s(t.defect_of[i], hl.p_plus(i), hl.q_minus(j))
                               : RatFun();
                RatFun b = same_block
                               ? hl.scalar_product_s(t.defect_of[i], hl.q_plus(i), hl.p_minus(j))
                               : RatFun();
                CHECK(a == (i == j ? one : RatFun()));
                CHECK(b == (i == j ? one : RatFun()));
            }
        // det B has nonzero value at t = 0
        for (size_t c = 0; c < t.classes.size(); ++c) {
            Mat<RatFun> B0 = hl.gram_block(static_cast<int>(c)).map([](const RatFun& f) {
                return RatFun(UniPoly(f.eval(Cyclo(Rat(0), 1))));
            });
            CHECK_NOTHROW(B0.inverse(RatFun(Rat(1))));
        }
    }
}

TEST_CASE("Q functions: classical b_lambda(t) on the singleton class") {
    SymbolTable t = gl_table(2);
    HallLittlewood<RatFun> hl(t, CoeffCtx<RatFun>{1});
    int i11 = t.symbols[0].source[0] == Partition{1, 1} ? 0 : 1;
    UniPoly one(Cyclo(Rat(1), 1)), tt = UniPoly::t(1);
    UniPoly want = (one - tt) * (one - tt * tt);  // b_(11)(t) = (1-t)(1-t^2)
    const Mat<RatFun>& Binv = hl.gram_block_inverse(t.class_of[i11]);
    CHECK(Binv(0, 0) == RatFun(want));
    SymFuncEngine<RatFun>& eng = hl.engine(0);
    CHECK(hl.q_plus(i11)[eng.label_index(t.symbols[i11].source)] == RatFun(want));
}

TEST_CASE("K+ = K- for r = 2 (one-parameter)") {
    for (int n = 1; n <= 2; ++n) {
        SymbolTable t = sp_table(n);
        HallLittlewood<RatFun> hl(t, CoeffCtx<RatFun>{2});
        CHECK(hl.kostka(true) == hl.kostka(false));
    }
}

TEST_CASE("Kostka normalization (3.10.2) and K(0) = I") {
    SymbolTable t = sp_table(2);
    HallLittlewood<RatFun> hl(t, CoeffCtx<RatFun>{2});
    const Mat<RatFun>& K = hl.kostka(true);
    Cyclo zero(Rat(0), 2), one(Rat(1), 2);
    for (int i = 0; i < t.size(); ++i)
        for (int j = 0; j < t.size(); ++j) {
            CHECK(K(i, j).eval(zero) == (i == j ? one : zero));
            if (i == j) CHECK(K(i, i) == RatFun(UniPoly(Cyclo(Rat(1), 2))));
            if (t.class_of[i] == t.class_of[j] && i != j) CHECK(K(i, j).is_zero());
            if (j > i) CHECK(K(i, j).is_zero());
        }
}

TEST_CASE("modified Kostka examples") {
    SymbolTable t = gl_table(2);
    HallLittlewood<RatFun> hl(t, CoeffCtx<RatFun>{1});
    Mat<RatFun> kt = modified_kostka(hl.kostka(true), t.a_values);
    int i2 = t.symbols[0].source[0] == Partition{2} ? 0 : 1;
    int i11 = 1 - i2;
    CHECK(kt(i2, i11) == RatFun(Rat(1)));  // t^{n((11))} * (1/t) = 1
    CHECK(kt(i11, i11) == RatFun::t(1));   // diagonal t^{a}
    CHECK(kt(i2, i2) == RatFun(Rat(1)));
    Mat<RatFun> id = Mat<RatFun>::identity(t.size(), RatFun(Rat(1)));
    Mat<RatFun> diag = modified_kostka(id, t.a_values);
    for (int i = 0; i < t.size(); ++i) CHECK(diag(i, i) == RatFun::t_power(t.a_values[i]));
}

TEST_CASE("P coincides with classical Hall-Littlewood polynomials, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        SymbolTable t = gl_table(n);
        HallLittlewood<RatFun> hl(t, CoeffCtx<RatFun>{1});
        SymFuncEngine<RatFun>& eng = hl.engine(0);
        for (int i = 0; i < t.size(); ++i) {
            XPoly<RatFun> p_oracle = oracle::classical_hl_p(t.symbols[i].source[0], eng.m());
            auto s_coords = eng.expand_in(p_oracle, Basis::S);
            for (int j = 0; j < t.size(); ++j) {
                int lj = eng.label_index(t.symbols[j].source);
                CHECK(hl.p_plus(i)[lj] == s_coords[lj]);
            }
        }
    }
}

TEST_CASE("kernel identity (3.8.2) against the z-kernel, multi-parameter, n <= 2, r = 2") {
    for (int n = 1; n <= 2; ++n) {
        SymbolTable t = sp_table(n);
        CoeffCtx<MultiRatFun> ctx{2, 2};
        HallLittlewood<MultiRatFun> hl(t, ctx);
        int N = t.size();
        // both sides as matrices over the formal s (x) s coordinates
        Mat<MultiRatFun> lhs(N, N), rhs(N, N);
        for (int i = 0; i < N; ++i) {
            int b = t.defect_of[i];
            SymFuncEngine<MultiRatFun>& eng = hl.engine(b);
            for (int j1 = 0; j1 < N; ++j1) {
                if (t.defect_of[j1] != b) continue;
                const MultiRatFun& pj1 = hl.p_plus(i)[eng.label_index(t.symbols[j1].source)];
                if (pj1.is_zero()) continue;
                for (int j2 = 0; j2 < N; ++j2) {
                    if (t.defect_of[j2] != b) continue;
                    const MultiRatFun& qj2 = hl.q_minus(i)[eng.label_index(t.symbols[j2].source)];
                    if (qj2.is_zero()) continue;
                    lhs(j1, j2) += pj1 * qj2;
                }
            }
        }
        for (size_t b = 0; b < t.defects.size(); ++b) {
            const std::vector<int>& blk = t.block_indices[b];
            if (blk.empty()) continue;
            int np = t.block_rank(static_cast<int>(b));
            Mat<Cyclo> chi = character_table(np, 2);
            SymFuncEngine<Cyclo> labeler(np, 2, CoeffCtx<Cyclo>{2});
            int sz = static_cast<int>(blk.size());
            Mat<MultiRatFun> X0(sz, sz), X0c(sz, sz), Z(sz, sz);
            for (int a = 0; a < sz; ++a)
                for (int c = 0; c < sz; ++c) {
                    Cyclo chival = chi(labeler.label_index(t.symbols[blk[c]].source),
                                       labeler.label_index(t.symbols[blk[a]].source));
                    X0(a, c) = MultiRatFun(MultiPoly(2, chival));
                    X0c(a, c) = MultiRatFun(MultiPoly(2, chival.conj()));
                    Z(a, c) = z_pair(t.symbols[blk[a]].source, t.symbols[blk[c]].source, 2);
                }
            Mat<MultiRatFun> block = X0.transpose() * Z * X0c;
            for (int a = 0; a < sz; ++a)
                for (int c = 0; c < sz; ++c) rhs(blk[a], blk[c]) = block(a, c);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("verify_characterization passes on small tables") {
    for (SymbolTable t : {sp_table(1), gl_table(2), gl_table(3), gl_table(4)}) {
        HallLittlewood<RatFun> hl(t, CoeffCtx<RatFun>{t.config.r});
        auto rep = hl.verify_characterization();
        CHECK(rep.all_pass());
    }
}

TEST_CASE("order-dependence probe runs under both legal tie-breaks") {
    auto [cfg, defects] = symplectic_defects(2, false);
    SymbolTable t1 = build_table(2, cfg, defects, TieBreak::Default);
    SymbolTable t2 = build_table(2, cfg, defects, TieBreak::Alt);
    HallLittlewood<RatFun> h1(t1, CoeffCtx<RatFun>{2});
    HallLittlewood<RatFun> h2(t2, CoeffCtx<RatFun>{2});
    // reported, not asserted: equality across legal orders is an open question
    bool agree = true;
    for (int i = 0; i < t1.size() && agree; ++i)
        for (int j = 0; j < t1.size() && agree; ++j) {
            int i2 = -1, j2 = -1;
            for (int a = 0; a < t2.size(); ++a) {
                if (t2.symbols[a] == t1.symbols[i]) i2 = a;
                if (t2.symbols[a] == t1.symbols[j]) j2 = a;
            }
            REQUIRE(i2 >= 0);
            REQUIRE(j2 >= 0);
            if (!(h1.kostka(true)(i, j) == h2.kostka(true)(i2, j2))) agree = false;
        }
    MESSAGE("tie-break probe: K matrices ", agree ? "agree" : "differ");
}
