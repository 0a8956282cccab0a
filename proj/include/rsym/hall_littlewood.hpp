#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "rsym/symbols.hpp"
#include "rsym/symfunc.hpp"

namespace rsym {

// Hall-Littlewood functions P+-/Q+- over a symbol table, built by the
// two-sided Gram-Schmidt of Prop 3.6, and the Kostka matrices K+- as
// transition coefficients.  F is RatFun (single t) or MultiRatFun (t_1..t_r).
//
// Each function lives inside its defect block; coefficients are stored as
// s-coordinate vectors indexed by the block's engine labels (P_{n',r} in
// enumeration order).  Cross-defect coefficients vanish identically, so this
// loses nothing and keeps every scalar product a defect-0 computation of
// degree n' = n - f(d).
template <class F>
class HallLittlewood {
  public:
    HallLittlewood(const SymbolTable& table, CoeffCtx<F> ctx) : table_(table), ctx_(ctx) {
        build();
    }

    const SymbolTable& table() const { return table_; }
    const CoeffCtx<F>& ctx() const { return ctx_; }
    SymFuncEngine<F>& engine(int defect_index) { return *engines_[defect_index]; }

    // s-coordinates (engine label order of the symbol's block)
    const std::vector<F>& p_plus(int sym) const { return pplus_[sym]; }
    const std::vector<F>& p_minus(int sym) const { return pminus_[sym]; }
    const std::vector<F>& q_plus(int sym) const { return qplus_[sym]; }
    const std::vector<F>& q_minus(int sym) const { return qminus_[sym]; }

    // Gram block of a similarity class and its inverse (class-sized, indexed
    // by position within the class interval)
    const Mat<F>& gram_block(int class_index) const { return class_B_[class_index]; }
    const Mat<F>& gram_block_inverse(int class_index) const { return class_Binv_[class_index]; }

    // K+-: s_Lambda = sum K_{Lambda,Lambda'} P_{Lambda'}; table-sized with
    // zero cross-defect entries, K(0) = I
    const Mat<F>& kostka(bool plus) const { return plus ? kplus_ : kminus_; }

    // coefficient of s_{Lambda_j} in P+-_{Lambda_i} (table indices)
    F u_coefficient(bool plus, int i, int j) const {
        if (table_.defect_of[i] != table_.defect_of[j]) return F();
        const auto& u = plus ? pplus_[i] : pminus_[i];
        return u[label_of_[j]];
    }

    // <f, g> with both given in s-coordinates of the same defect block
    F scalar_product_s(int defect_index, const std::vector<F>& f, const std::vector<F>& g) {
        const Mat<F>& G = engines_[defect_index]->gram_s();
        F acc = F();
        for (int i = 0; i < G.rows(); ++i) {
            if (f[i].is_zero()) continue;
            for (int j = 0; j < G.cols(); ++j) {
                if (g[j].is_zero() || G(i, j).is_zero()) continue;
                acc += f[i] * G(i, j) * g[j];
            }
        }
        return acc;
    }

    struct CharacterizationReport {
        struct Entry {
            int symbol;
            bool q_support_ok;      // (3.9.1) support
            bool q_diagonal_ok;     // class-diagonal block nonsingular
            bool s_support_ok;      // (3.9.2) support
            bool s_diagonal_ok;     // class-diagonal block is the identity
        };
        std::vector<Entry> entries;
        bool all_pass() const {
            for (const auto& e : entries)
                if (!(e.q_support_ok && e.q_diagonal_ok && e.s_support_ok && e.s_diagonal_ok))
                    return false;
            return true;
        }
    };

    // Thm 3.9 support/diagonal conditions, checked for both signatures.
    CharacterizationReport verify_characterization();

  private:
    void build();

    const SymbolTable table_;
    CoeffCtx<F> ctx_;
    std::vector<std::unique_ptr<SymFuncEngine<F>>> engines_;  // per defect
    std::vector<int> label_of_;  // symbol -> engine label index of its source
    std::vector<std::vector<F>> pplus_, pminus_, qplus_, qminus_;
    std::vector<Mat<F>> class_B_, class_Binv_;
    Mat<F> kplus_, kminus_;
};

// K~_{L,L'}(t) = t^{a(L')} K_{L,L'}(1/t); one-parameter only.
Mat<RatFun> modified_kostka(const Mat<RatFun>& kostka, const std::vector<int>& a_values);

extern template class HallLittlewood<RatFun>;
extern template class HallLittlewood<MultiRatFun>;

}  // namespace rsym
