#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace rsym;

namespace {

XPoly<RatFun> x_var(const SymFuncEngine<RatFun>& eng, int color, int slot) {
    XPoly<RatFun> p(eng.nx());
    std::vector<int> e(eng.nx(), 0);
    e[eng.var(color, slot)] = 1;
    p.add_term(e, eng.ctx().one());
    return p;
}

}  // namespace

TEST_CASE("monomial and Schur basis examples") {
    CoeffCtx<RatFun> ctx{2};
    SymFuncEngine<RatFun> eng(2, 2, ctx);
    // s for ((1),{}) at degree 1
    SymFuncEngine<RatFun> eng1(1, 2, ctx, 2);
    int idx = eng1.label_index({{1}, {}});
    XPoly<RatFun> s1 = eng1.basis_poly(Basis::S, idx);
    XPoly<RatFun> want = x_var(eng1, 0, 0);
    want += x_var(eng1, 0, 1);
    CHECK(s1 == want);
    // s_((2),{}) = m_((2),{}) + m_((11),{})
    auto coords = eng.expand_in(eng.basis_poly(Basis::S, eng.label_index({{2}, {}})), Basis::M);
    for (int j = 0; j < eng.count(); ++j) {
        const MultiPartition& mp = eng.labels()[j];
        bool expect = (mp == MultiPartition{{2}, {}}) || (mp == MultiPartition{{1, 1}, {}});
        CHECK(coords[j] == (expect ? ctx.one() : RatFun()));
    }
    // m for ({},{}) is the constant 1
    SymFuncEngine<RatFun> eng0(0, 2, ctx);
    XPoly<RatFun> m0 = eng0.basis_poly(Basis::M, 0);
    CHECK(m0.terms.size() == 1);
    CHECK(m0.terms.begin()->second == ctx.one());
}

TEST_CASE("colored power sums (2.2.1)") {
    CoeffCtx<RatFun> ctx{2};
    SymFuncEngine<RatFun> eng(1, 2, ctx, 2);
    XPoly<RatFun> p1 = eng.power_sum_colored(0, 1);
    XPoly<RatFun> blocks = eng.power_sum_block(0, 1);
    blocks += eng.power_sum_block(1, 1);
    CHECK(p1 == blocks);
    XPoly<RatFun> p2 = eng.power_sum_colored(1, 1);
    XPoly<RatFun> diff = eng.power_sum_block(0, 1);
    diff -= eng.power_sum_block(1, 1);
    CHECK(p2 == diff);
    // r = 1: the classical power sum
    CoeffCtx<RatFun> ctx1{1};
    SymFuncEngine<RatFun> e1(2, 1, ctx1);
    CHECK(e1.power_sum_colored(0, 2) == e1.power_sum_block(0, 2));
}

TEST_CASE("q-series (2.3.2) expansions") {
    CoeffCtx<RatFun> ctx{2};
    RatFun t = RatFun::t(2);
    SymFuncEngine<RatFun> eng(1, 2, ctx, 2);
    // r=2, +, k=1 (0-based 0), degree 1: p_1(color 1) - t p_1(color 2)
    auto series = eng.q_series(0, true, 1, t);
    CHECK(series[0].terms.size() == 1);  // constant 1
    XPoly<RatFun> want = eng.power_sum_block(0, 1);
    XPoly<RatFun> sub = eng.power_sum_block(1, 1).scaled(t);
    want -= sub;
    CHECK(series[1] == want);
    // q_0 = 1 for any color and sign
    auto s2 = eng.q_series(1, false, 1, t);
    CHECK(s2[0].terms.begin()->second == ctx.one());
    // r = 1: q_1 = (1-t) p_1
    CoeffCtx<RatFun> ctx1{1};
    SymFuncEngine<RatFun> e1(1, 1, ctx1, 2);
    auto s1 = e1.q_series(0, true, 1, RatFun::t(1));
    XPoly<RatFun> cls = e1.power_sum_block(0, 1).scaled(RatFun(Rat(1)) - RatFun::t(1));
    CHECK(s1[1] == cls);
}

TEST_CASE("q-series matches the Lagrange interpolation formula (2.3.1)") {
    // evaluate both sides at generic rational points; t stays symbolic
    CoeffCtx<RatFun> ctx{2};
    RatFun t = RatFun::t(2);
    RatFun one(UniPoly(Cyclo(Rat(1), 2)));
    for (int m : {2, 3}) {
        SymFuncEngine<RatFun> eng(m, 2, ctx, m);
        for (int k = 0; k < 2; ++k)
            for (bool plus : {true, false}) {
                auto series = eng.q_series(k, plus, 3, t);
                int numc = ((plus ? k - 1 : k + 1) % 2 + 2) % 2;
                for (int pointset = 0; pointset < 2; ++pointset) {
                    // distinct rational points per variable
                    std::vector<RatFun> xs(eng.nx());
                    for (int i = 0; i < eng.nx(); ++i)
                        xs[i] = RatFun(rat(2 * i + 3 + pointset, pointset + 2));
                    auto eval_xpoly = [&](const XPoly<RatFun>& f) {
                        RatFun acc;
                        for (const auto& [e, c] : f.terms) {
                            RatFun term = c;
                            for (int i = 0; i < eng.nx(); ++i)
                                for (int d = 0; d < e[i]; ++d) term *= xs[i];
                            acc += term;
                        }
                        return acc;
                    };
                    for (int s = 1; s <= 3; ++s) {
                        // (2.3.1): sum_i x_i^{s-1} prod_j (x_i - t y_j) / prod_{j != i} (x_i - x_j)
                        RatFun lagrange;
                        for (int i = 0; i < m; ++i) {
                            RatFun xi = xs[eng.var(k, i)];
                            RatFun numer = xi.pow(s - 1);
                            for (int j = 0; j < m; ++j)
                                numer *= xi - t * xs[eng.var(numc, j)];
                            RatFun denom(Rat(1));
                            for (int j = 0; j < m; ++j)
                                if (j != i) denom *= xi - xs[eng.var(k, j)];
                            lagrange += numer / denom;
                        }
                        CHECK(lagrange == eval_xpoly(series[s]));
                    }
                }
            }
    }
}

TEST_CASE("q_pm via (2.3.3): sign conventions, specialization, r = 1") {
    // empty label: q = 1
    CoeffCtx<MultiRatFun> ctx2{2, 2};
    SymFuncEngine<MultiRatFun> eng(1, 2, ctx2, 2);
    SymFuncEngine<MultiRatFun> eng0(0, 2, ctx2, 1);
    XPoly<MultiRatFun> q0 = eng0.q_pm({{}, {}}, true);
    CHECK(q0.terms.size() == 1);
    // specialization t_k -> t recovers the one-parameter q
    CoeffCtx<RatFun> ctx1{2};
    SymFuncEngine<RatFun> engt(1, 2, ctx1, 2);
    std::vector<RatFun> diag{RatFun::t(2), RatFun::t(2)};
    for (bool plus : {true, false})
        for (const auto& mp : eng.labels()) {
            XPoly<MultiRatFun> qm = eng.q_pm(mp, plus);
            XPoly<RatFun> spec = qm.map_coeffs<RatFun>(
                [&](const MultiRatFun& f) { return f.specialize(diag); });
            CHECK(spec == engt.q_pm(mp, plus));
        }
    // one-parameter r=2: q+ = q-
    for (const auto& mp : engt.labels()) CHECK(engt.q_pm(mp, true) == engt.q_pm(mp, false));
    // r=1, lambda=(1): q+ = q- = (1-t) p_1
    CoeffCtx<RatFun> c1{1};
    SymFuncEngine<RatFun> e1(1, 1, c1, 2);
    XPoly<RatFun> cls = e1.power_sum_block(0, 1).scaled(RatFun(Rat(1)) - RatFun::t(1));
    CHECK(e1.q_pm({{1}}, true) == cls);
    CHECK(e1.q_pm({{1}}, false) == cls);
}

TEST_CASE("expand_in: identity on m, Frobenius column on p") {
    CoeffCtx<RatFun> ctx{2};
    SymFuncEngine<RatFun> eng(2, 2, ctx);
    for (int i = 0; i < eng.count(); ++i) {
        auto coords = eng.expand_in(eng.basis_poly(Basis::M, i), Basis::M);
        for (int j = 0; j < eng.count(); ++j)
            CHECK(coords[j] == (i == j ? ctx.one() : RatFun()));
    }
}

TEST_CASE("scalar products: <q+_a, m_b> = delta, <m_a, q-_b> = delta") {
    for (int r = 1; r <= 3; ++r)
        for (int n = 1; n <= 2; ++n) {
            CoeffCtx<RatFun> ctx{r};
            SymFuncEngine<RatFun> eng(n, r, ctx);
            for (int i = 0; i < eng.count(); ++i)
                for (int j = 0; j < eng.count(); ++j) {
                    RatFun qp_m = eng.scalar_product_m(eng.m_coords(eng.basis_poly(Basis::QPlus, i)),
                                                       eng.m_coords(eng.basis_poly(Basis::M, j)));
                    CHECK(qp_m == (i == j ? ctx.one() : RatFun()));
                    RatFun m_qm = eng.scalar_product_m(eng.m_coords(eng.basis_poly(Basis::M, i)),
                                                       eng.m_coords(eng.basis_poly(Basis::QMinus, j)));
                    CHECK(m_qm == (i == j ? ctx.one() : RatFun()));
                }
        }
}

TEST_CASE("triangularity: s in m supported below in dominance with unit diagonal") {
    CoeffCtx<RatFun> ctx{2};
    SymFuncEngine<RatFun> eng(3, 2, ctx);
    for (int i = 0; i < eng.count(); ++i) {
        auto coords = eng.expand_in(eng.basis_poly(Basis::S, i), Basis::M);
        const MultiPartition& lam = eng.labels()[i];
        CHECK(coords[i] == ctx.one());
        for (int j = 0; j < eng.count(); ++j) {
            if (coords[j].is_zero()) continue;
            const MultiPartition& mu = eng.labels()[j];
            for (int k = 0; k < 2; ++k) {
                REQUIRE(part_size(mu[k]) == part_size(lam[k]));
                CHECK(dominance_leq(mu[k], lam[k]));
            }
        }
    }
}

TEST_CASE("Cauchy identity (2.5.1), truncated, small multi-parameter cases") {
    // join x and y alphabets into one exponent vector: x first, then y
    for (int r = 1; r <= 2; ++r)
        for (int n = 1; n <= 2; ++n) {
            CoeffCtx<MultiRatFun> ctx{r, r};
            int m = n;
            SymFuncEngine<MultiRatFun> eng(n, r, ctx, m);
            int half = eng.nx();
            int total = 2 * half;
            auto lift = [&](const XPoly<MultiRatFun>& f, int offset) {
                XPoly<MultiRatFun> out(total);
                for (const auto& [e, c] : f.terms) {
                    std::vector<int> e2(total, 0);
                    for (int i = 0; i < half; ++i) e2[offset + i] = e[i];
                    out.add_term(e2, c);
                }
                return out;
            };
            // direct truncation of the product (2.4.1)
            XPoly<MultiRatFun> omega(total);
            omega.add_term(std::vector<int>(total, 0), ctx.one());
            for (int k = 0; k < r; ++k)
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) {
                        // 1/(1 - x_i^{(k)} y_j^{(k)}) truncated to degree n in x
                        XPoly<MultiRatFun> geo(total);
                        for (int d = 0; d <= n; ++d) {
                            std::vector<int> e(total, 0);
                            e[eng.var(k, i)] = d;
                            e[half + eng.var(k, j)] = d;
                            geo.add_term(e, ctx.one());
                        }
                        omega = XPoly<MultiRatFun>::mul(omega, geo, 2 * n);
                        // (1 - t_k x_i^{(k)} y_j^{(k+1)})
                        XPoly<MultiRatFun> numer(total);
                        numer.add_term(std::vector<int>(total, 0), ctx.one());
                        std::vector<int> e(total, 0);
                        e[eng.var(k, i)] = 1;
                        e[half + eng.var((k + 1) % r, j)] = 1;
                        numer.add_term(e, MultiRatFun() - ctx.param(k));
                        omega = XPoly<MultiRatFun>::mul(omega, numer, 2 * n);
                    }
            // keep only x-degree = n (== y-degree) terms
            XPoly<MultiRatFun> omega_n(total);
            for (const auto& [e, c] : omega.terms) {
                int dx = 0;
                for (int i = 0; i < half; ++i) dx += e[i];
                if (dx == n) omega_n.add_term(e, c);
            }
            XPoly<MultiRatFun> lhs1(total), lhs2(total);
            for (int i = 0; i < eng.count(); ++i) {
                lhs1 += XPoly<MultiRatFun>::mul(lift(eng.basis_poly(Basis::QPlus, i), 0),
                                                lift(eng.basis_poly(Basis::M, i), half));
                lhs2 += XPoly<MultiRatFun>::mul(lift(eng.basis_poly(Basis::M, i), 0),
                                                lift(eng.basis_poly(Basis::QMinus, i), half));
            }
            CHECK(lhs1 == omega_n);
            CHECK(lhs2 == omega_n);
        }
}

TEST_CASE("Schur kernel at t = 0 (3.4.2), small cases") {
    for (int r = 1; r <= 2; ++r)
        for (int n = 1; n <= 2; ++n) {
            CoeffCtx<RatFun> ctx{r};
            int m = n;
            SymFuncEngine<RatFun> eng(n, r, ctx, m);
            int half = eng.nx();
            int total = 2 * half;
            auto lift = [&](const XPoly<RatFun>& f, int offset) {
                XPoly<RatFun> out(total);
                for (const auto& [e, c] : f.terms) {
                    std::vector<int> e2(total, 0);
                    for (int i = 0; i < half; ++i) e2[offset + i] = e[i];
                    out.add_term(e2, c);
                }
                return out;
            };
            XPoly<RatFun> omega(total);
            omega.add_term(std::vector<int>(total, 0), ctx.one());
            for (int k = 0; k < r; ++k)
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) {
                        XPoly<RatFun> geo(total);
                        for (int d = 0; d <= n; ++d) {
                            std::vector<int> e(total, 0);
                            e[eng.var(k, i)] = d;
                            e[half + eng.var(k, j)] = d;
                            geo.add_term(e, ctx.one());
                        }
                        omega = XPoly<RatFun>::mul(omega, geo, 2 * n);
                    }
            XPoly<RatFun> omega_n(total);
            for (const auto& [e, c] : omega.terms) {
                int dx = 0;
                for (int i = 0; i < half; ++i) dx += e[i];
                if (dx == n) omega_n.add_term(e, c);
            }
            XPoly<RatFun> rhs(total);
            for (int i = 0; i < eng.count(); ++i)
                rhs += XPoly<RatFun>::mul(lift(eng.basis_poly(Basis::S, i), 0),
                                          lift(eng.basis_poly(Basis::S, i), half));
            CHECK(rhs == omega_n);
        }
}

TEST_CASE("symmetry spot-check by random transposition") {
    CoeffCtx<RatFun> ctx{2};
    SymFuncEngine<RatFun> eng(3, 2, ctx);
    std::mt19937 rng(5);
    for (Basis b : {Basis::M, Basis::S, Basis::P, Basis::QPlus, Basis::QMinus}) {
        for (int i = 0; i < eng.count(); ++i) {
            const XPoly<RatFun>& f = eng.basis_poly(b, i);
            int color = rng() % 2;
            int a = rng() % eng.m(), c = rng() % eng.m();
            XPoly<RatFun> swapped(eng.nx());
            for (const auto& [e, coef] : f.terms) {
                std::vector<int> e2 = e;
                std::swap(e2[eng.var(color, a)], e2[eng.var(color, c)]);
                swapped.add_term(e2, coef);
            }
            CHECK(swapped == f);
        }
    }
}
