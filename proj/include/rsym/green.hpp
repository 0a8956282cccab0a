#pragma once

#include <optional>

#include "rsym/lusztig_shoji.hpp"

namespace rsym {

// X+- = X(0) K+-(t): the generalized Green matrix (4.2.1); X(0) is the
// defect-blocked character table matrix (rows = classes, columns =
// characters, zero across defects).
Mat<RatFun> x_matrix(const KostkaResult<RatFun>& k, bool plus);
Mat<RatFun> x_zero_matrix(const SymbolTable& table);

// Q_{mu,nu}(t) = sum_lambda chi^lambda(w_mu) K~_{lambda,nu}(t) for GL_n
// (5.1.1); rows/columns in table order of the r=1, e=0 configuration.
struct GlGreen {
    SymbolTable table;
    Mat<RatFun> q;  // rows mu (class), cols nu
};
GlGreen green_gl(int n, const Guards& guards = Guards{});

// Symplectic Green functions in the Y-basis (5.3.3) + Thm 5.9: for defect d
// and w of type nu in P_{n',2}, the coefficient of Y_{L'} is
// t^{-a(L_cusp(d))} sum_{L in Z_{n,d}} chi^L(w) K~_{L,L'}(t).
struct SpGreenRow {
    int defect_index;
    MultiPartition w_type;
    std::vector<RatFun> y_coeffs;          // per table symbol
    std::vector<std::optional<Rat>> at_q;  // exact values when q given
};
struct SpGreen {
    SymbolTable table;
    std::vector<int> cusp_a;  // a(L_cusp(d)) per defect
    std::vector<SpGreenRow> rows;
};
SpGreen green_sp(int n, bool bad_characteristic, std::optional<Rat> q = std::nullopt,
                 const Guards& guards = Guards{}, bool parallel = false);

// Thm 5.14 check: Y-coefficient values at q and q^rprime are congruent mod
// rprime for every row/entry.  rprime must not divide G_W(q^rprime)
// ("invalid prime").  fault_entry injects +1 into one evaluated value so
// tests can confirm the check actually detects arithmetic faults.
struct CongruenceReport {
    struct Entry {
        int row;
        int column;
        Int value_q;
        Int value_qr;
        Int residue;  // (value_q - value_qr) mod rprime
        bool ok;
    };
    Rat q;
    long rprime;
    std::vector<Entry> entries;
    bool all_ok() const {
        for (const auto& e : entries)
            if (!e.ok) return false;
        return true;
    }
};
CongruenceReport congruence_check(int n, const Rat& q, long rprime,
                                  std::optional<int> fault_entry = std::nullopt,
                                  const Guards& guards = Guards{});

}  // namespace rsym
