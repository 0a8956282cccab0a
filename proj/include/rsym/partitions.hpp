#pragma once

#include <string>
#include <vector>

#include "rsym/multipoly.hpp"
#include "rsym/unipoly.hpp"

namespace rsym {

// Weakly decreasing sequence of positive integers.
using Partition = std::vector<int>;
// r components (lambda^(1), ..., lambda^(r)).
using MultiPartition = std::vector<Partition>;

int part_size(const Partition& p);
int part_length(const Partition& p);
int mp_size(const MultiPartition& mp);

// n(lambda) = sum (i-1) lambda_i
int n_statistic(const Partition& p);

// All partitions of n, reverse lexicographic ((3) before (2,1) before
// (1,1,1)).  The order is part of the interface: tables and matrices must be
// byte-reproducible across runs.
std::vector<Partition> enumerate_partitions(int n);

// All of P_{n,r}: size compositions in lexicographically decreasing order,
// then per-component partitions in enumerate_partitions order, leftmost
// component slowest.
std::vector<MultiPartition> enumerate_multipartitions(int n, int r);

// multiset union, sorted decreasingly
Partition union_partitions(const Partition& a, const Partition& b);

// true iff partial sums of a are <= those of b (a below b in dominance);
// throws usage_error on size mismatch
bool dominance_leq(const Partition& a, const Partition& b);

// centralizer order of a permutation of cycle type p: prod i^{m_i} m_i!
Int z_partition(const Partition& p);

// r^{l(mp)} * prod_k z_{lambda^(k)}; centralizer order in W_{n,r}
Int z_multipartition(const MultiPartition& mp, int r);

// z_mp(t) = z_mp * prod_k prod_j (1 - zeta^{k-1} t^{lambda_j^(k)})^{-1}
RatFun z_multipartition_t(const MultiPartition& mp, int r);

std::string partition_str(const Partition& p);
std::string multipartition_str(const MultiPartition& mp);

// r x r array of partitions (xi^{(i,j)}) with row merges Xi' and column
// merges Xi''.
struct DoublePartitionArray {
    int r = 0;
    std::vector<std::vector<Partition>> cells;  // [i][j]

    MultiPartition row_merge() const;     // Xi'
    MultiPartition column_merge() const;  // Xi''
    int size() const;
    Int z_order() const;  // z_Xi = r^{l(Xi)} prod z_{xi^{(i,j)}}
};

// All Xi in P^2_{n,r}.
std::vector<DoublePartitionArray> enumerate_double_arrays(int n, int r);

}  // namespace rsym
