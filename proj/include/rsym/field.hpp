#pragma once

#include "rsym/cyclotomic.hpp"
#include "rsym/multipoly.hpp"
#include "rsym/unipoly.hpp"

namespace rsym {

// Coefficient-field context.  The engine is generic over F in {Cyclo (no
// deformation, used for character tables), RatFun (one parameter t),
// MultiRatFun (parameters t_1..t_r)}; the context supplies constants and the
// per-color parameter values.
template <class F>
struct CoeffCtx;

template <>
struct CoeffCtx<Cyclo> {
    int order = 1;  // cyclotomic order (the r of zeta_r)
    Cyclo zero() const { return Cyclo(Rat(0), order); }
    Cyclo one() const { return Cyclo(Rat(1), order); }
    Cyclo from_cyclo(const Cyclo& c) const { return c; }
    Cyclo param(int) const { throw usage_error("undeformed coefficients carry no parameter"); }
    static Cyclo conj(const Cyclo& c) { return c.conj(); }
};

template <>
struct CoeffCtx<RatFun> {
    int order = 1;
    RatFun zero() const { return RatFun(); }
    RatFun one() const { return RatFun(UniPoly(Cyclo(Rat(1), order))); }
    RatFun from_cyclo(const Cyclo& c) const { return RatFun(c); }
    // all colors share the single parameter t
    RatFun param(int) const { return RatFun::t(order); }
    static RatFun conj(const RatFun& f) { return f.conj(); }
};

template <>
struct CoeffCtx<MultiRatFun> {
    int order = 1;
    int nvars = 1;  // = r
    MultiRatFun zero() const { return MultiRatFun(MultiPoly(nvars)); }
    MultiRatFun one() const { return MultiRatFun(MultiPoly(nvars, Cyclo(Rat(1), order))); }
    MultiRatFun from_cyclo(const Cyclo& c) const { return MultiRatFun(MultiPoly(nvars, c)); }
    // t_k, k in 0..nvars-1
    MultiRatFun param(int k) const {
        int kk = ((k % nvars) + nvars) % nvars;
        return MultiRatFun::variable(nvars, kk);
    }
    static MultiRatFun conj(const MultiRatFun& f) { return f.conj(); }
};

}  // namespace rsym
