#pragma once

#include <vector>

#include "rsym/matrix.hpp"
#include "rsym/partitions.hpp"

namespace rsym {

struct ClassDatum {
    MultiPartition type;
    Int centralizer_order;  // z_lambda
    Int class_size;         // |W| / z_lambda
};

// |W_{n,r}| = r^n n!
Int wreath_order(int n, int r);

// one datum per element of P_{n,r}, in enumeration order
std::vector<ClassDatum> class_data(int n, int r);

// Exact character table of W_{n,r}: rows = characters chi^mu, columns =
// classes w_lambda, both in P_{n,r} enumeration order.  Computed through the
// Frobenius formula: column lambda is the Schur expansion of p_lambda.
Mat<Cyclo> character_table(int n, int r, bool parallel = false);

// det_V(t id - w_lambda) = prod_k prod_j (t^{lambda^(k)_j} - zeta^{k-1})
UniPoly det_reflection(const MultiPartition& type, int r);

// det_V(w_lambda)
Cyclo det_reflection_at_zero(const MultiPartition& type, int r);

// P_W(t) = prod_{i=1..n} (t^{ir} - 1)/(t - 1), expanded
UniPoly poincare(int n, int r);

// N* = rn(n+1)/2 - n, the number of reflections
int nstar(int n, int r);

// G_W(t) = (t-1)^n t^{N*} P_W(t)
UniPoly gw_polynomial(int n, int r);

// R(f) = (t-1)^n P_W(t) |W|^{-1} sum_w det_V(w) f(w) / det_V(t id - w),
// the graded multiplicity of f in the coinvariant algebra.  f is given by
// one value per class in class_data order.  Throws math_error("not a
// character") when the result is not an integer polynomial.
UniPoly graded_multiplicity(const std::vector<Cyclo>& f, int n, int r);

}  // namespace rsym
