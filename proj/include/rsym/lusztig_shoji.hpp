#pragma once

#include <optional>

#include "rsym/hall_littlewood.hpp"
#include "rsym/symbols.hpp"
#include "rsym/wreath.hpp"

namespace rsym {

// Delta(t^m) = Delta S(t^m) Delta^{-1}; entry (a,a') = (1/r) sum_k
// zeta^{k(a-a')} t_k^m (0-based indices).  Entries are polynomial.
Mat<MultiRatFun> delta_matrix(int m_power, int r);

// z_Xi(t) of (2.6.3): z_Xi^{-1} prod over cells of prod_l (delta_{ij} -
// zeta^j Delta_{j,i}(t^{xi_l})).  The cell (i,j) carries the x-side color i
// (row merge) and y-side color j (column merge); the factor's indices follow
// the pairing in the proof of Prop 2.8.
MultiRatFun z_xi(const DoublePartitionArray& xi, int r);

// z_{lambda,mu}(t) = sum over Xi with row merge lambda and column merge mu
MultiRatFun z_pair(const MultiPartition& lambda, const MultiPartition& mu, int r);

// instance guards (config-overridable via the CLI)
struct Guards {
    int max_n_multi = 3;
    int max_r_multi = 3;
    int max_n_single = 8;
    int max_r_single = 3;
    bool override_guards = false;

    void check_single(int n, int r) const;
    void check_multi(int n, int r) const;
};

enum class OmegaMode { Multi, OneParameterModified };

template <class F>
struct OmegaMatrix {
    const SymbolTable* table;
    OmegaMode mode;
    Mat<F> entries;  // table-sized; zero across defects
};

// (4.3.1)/(4.3.2): per defect block, t^X(0) H Z(t)^{-1} H conj(X(0)).
OmegaMatrix<MultiRatFun> omega_multi(const SymbolTable& table, bool parallel = false);

// (4.5.4)/(4.5.5): entry = G_{W_{n,r}}(t) * t^{n'} sum_np z^{-1} chi
// conj(chi) / det_V(t - w); verified to be an integer polynomial
// ("omega integrality violated" otherwise).
OmegaMatrix<RatFun> omega_tilde(const SymbolTable& table, bool parallel = false);

template <class F>
struct KostkaResult {
    SymbolTable table;
    Mat<F> p_minus;     // lower block triangular
    Mat<F> p_plus;      // lower block triangular
    Mat<F> lambda;      // block diagonal
    Mat<F> omega;       // the factored matrix
    // one-parameter route: p_minus/p_plus are the modified Kostka matrices
    // K~-/K~+; kostka_minus/plus are the unmodified K+-(t)
    std::optional<Mat<RatFun>> kostka_minus, kostka_plus;
};

// Thm 4.4(i)/4.6(a): iterate similarity classes in table order; diagonal
// blocks of P+- prescribed as diag_scalars[class] * I; breakdown_error when
// a diagonal block is singular over the function field.
template <class F>
void block_solve(const SymbolTable& table, const Mat<F>& omega, const std::vector<F>& diag_scalars,
                 const F& one, Mat<F>& p_minus, Mat<F>& p_plus, Mat<F>& lambda);

// omega_tilde + block_solve with diagonal t^{a(L)} I (Thm 4.6); also derives
// the unmodified K+-(t) by inverting (3.10.3).
KostkaResult<RatFun> kostka_one_param(int n, const SymbolConfig& cfg, std::vector<Defect> defects,
                                      TieBreak tie_break = TieBreak::Default,
                                      const Guards& guards = Guards{}, bool parallel = false);

// omega_multi + block_solve with identity diagonal (Thm 4.4).
KostkaResult<MultiRatFun> kostka_multi_param(int n, const SymbolConfig& cfg,
                                             std::vector<Defect> defects,
                                             TieBreak tie_break = TieBreak::Default,
                                             const Guards& guards = Guards{},
                                             bool parallel = false);

extern template void block_solve<RatFun>(const SymbolTable&, const Mat<RatFun>&,
                                         const std::vector<RatFun>&, const RatFun&, Mat<RatFun>&,
                                         Mat<RatFun>&, Mat<RatFun>&);
extern template void block_solve<MultiRatFun>(const SymbolTable&, const Mat<MultiRatFun>&,
                                              const std::vector<MultiRatFun>&, const MultiRatFun&,
                                              Mat<MultiRatFun>&, Mat<MultiRatFun>&,
                                              Mat<MultiRatFun>&);

}  // namespace rsym
