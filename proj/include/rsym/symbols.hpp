#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rsym/partitions.hpp"

namespace rsym {

// Fixed data (e, s, alpha) of a symbol family.  The standing assumption
// s_k <= e is validated on construction.  ordered_pairs switches the
// a-function to the ordered-pair convention (experimental; default is the
// unordered multiset convention).
struct SymbolConfig {
    int r = 1;
    int e = 0;
    std::vector<int> s;  // length r, s_k <= e
    int alpha = 0;       // 0 <= alpha < r
    bool ordered_pairs = false;

    void validate() const;
    friend bool operator==(const SymbolConfig& a, const SymbolConfig& b) {
        return a.r == b.r && a.e == b.e && a.s == b.s && a.alpha == b.alpha &&
               a.ordered_pairs == b.ordered_pairs;
    }
};

// Canonical defect representative: min_k d_k = 0.  Valid defects satisfy
// sum d_k = alpha (mod r).
using Defect = std::vector<int>;

// d' alignment of a defect against m-bullet: d'_k = d_k - [k <= alpha] + c
// with min d' = 0.
std::vector<int> defect_alignment(const Defect& d, const SymbolConfig& cfg);

// f(d) = sum_{k<=alpha} d'(d'-1)/2 + sum_{k>alpha} d'(d'+1)/2
int f_of_defect(const Defect& d, const SymbolConfig& cfg);

struct Symbol {
    SymbolConfig config;
    std::vector<std::vector<int>> rows;  // decreasing, gaps >= e, tails >= s_k
    Defect defect;
    int rank = 0;
    MultiPartition source;  // the multipartition it encodes

    int total_entries() const;
    std::vector<int> entry_multiset() const;  // sorted decreasing
    // entry multiset after shifting up to total entry count `target`
    std::vector<int> aligned_multiset(int target) const;

    friend bool operator==(const Symbol& a, const Symbol& b) {
        return a.config == b.config && a.defect == b.defect && a.source == b.source;
    }
    std::string str() const;
};

// Base symbol Lambda^0(m): k-th row (s_k+(m_k-1)e, ..., s_k+e, s_k).
Symbol lambda_zero(const std::vector<int>& row_lengths, const SymbolConfig& cfg);

// entries + e, then s_k appended to each row; all derived data unchanged
Symbol shift(const Symbol& sym);

// The bijection P_{n',r} x defect -> symbols of rank n'+f(d) (paper's
// phi(Lambda^0(m-bullet) + lambda)).  Stored representative: minimal m with
// m >= l(lambda^(k)) for every k.
Symbol symbol_of(const MultiPartition& mp, const Defect& d, const SymbolConfig& cfg);

// inverse of symbol_of; validates row conditions
MultiPartition rpartition_of(const Symbol& sym);

// theta: P_{n',r} -> P_{n,r}, j-th part of color k gains
// max(d'_k + delta_k - j, 0) with delta_k = 0 for k <= alpha, 1 otherwise
MultiPartition theta_map(const MultiPartition& mp, const Defect& d, const SymbolConfig& cfg);

// a(Lambda): pairwise-min statistic relative to Lambda^0(m-bullet) at the
// matching total entry count; shift-invariant
int a_value(const Symbol& sym);

// entry multisets agree after shift alignment
bool similar(const Symbol& a, const Symbol& b);

enum class TieBreak { Default, Alt };

struct SymbolTable {
    SymbolConfig config;
    int n = 0;
    std::vector<Defect> defects;  // sorted lexicographically
    TieBreak tie_break = TieBreak::Default;

    std::vector<Symbol> symbols;                    // total order, position = index
    std::vector<int> a_values;                      // per symbol
    std::vector<std::pair<int, int>> classes;       // [begin, end) intervals
    std::vector<int> class_of;                      // symbol index -> class index
    std::vector<int> defect_of;                     // symbol index -> index into defects
    std::vector<std::vector<int>> block_indices;    // per defect: symbol indices in order
    std::vector<int> index_in_block;                // symbol index -> position in its block

    int size() const { return static_cast<int>(symbols.size()); }
    int block_rank(int defect_index) const;  // n' = n - f(d)
};

SymbolTable build_table(int n, const SymbolConfig& cfg, std::vector<Defect> defects,
                        TieBreak tie_break = TieBreak::Default);

// Symplectic configuration (5.2): e=2, s=(0,1) in good characteristic,
// e=4, s=(0,2) in characteristic 2; alpha=1; defects (d,0),(0,d), d odd,
// with f(d) <= n.
std::pair<SymbolConfig, std::vector<Defect>> symplectic_defects(int n, bool bad_characteristic);

// unipotent class count of Sp_2n: partitions of 2n with odd parts of even
// multiplicity (used only for the exploratory class-count report)
long sp_unipotent_class_count(int n);

}  // namespace rsym
