#pragma once

#include <map>
#include <string>
#include <vector>

#include "rsym/unipoly.hpp"

namespace rsym {

using Expo = std::vector<int>;  // exponents of t_1..t_r

// Graded lexicographic: higher total degree first, then lexicographic.
struct GradedLexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse multivariate polynomial in t_1..t_r over Q(zeta).  No
// zero-coefficient terms are stored; the term map is ordered graded-lex so
// iteration order (and hence every downstream serialization) is canonical.
class MultiPoly {
  public:
    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {}
    MultiPoly(int nvars, const Cyclo& c) : nvars_(nvars) {
        if (!c.is_zero()) terms_[Expo(nvars, 0)] = c;
    }

    static MultiPoly variable(int nvars, int index, int power = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Cyclo constant_value() const;
    int total_degree() const;

    const std::map<Expo, Cyclo, GradedLexLess>& terms() const { return terms_; }
    Cyclo coeff(const Expo& e) const;
    void add_term(const Expo& e, const Cyclo& c);

    // graded-lex largest term
    const std::pair<const Expo, Cyclo>& leading_term() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.nvars_ == b.nvars_) return a.terms_ == b.terms_;
        // zero and constants compare by value across variable widths
        if (a.is_constant() && b.is_constant()) {
            if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
            return a.terms_.begin()->second == b.terms_.begin()->second;
        }
        return false;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly scaled(const Cyclo& c) const;
    MultiPoly conj() const;

    // exact division; throws invariant_error if not divisible
    static MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);
    // gcd normalized to leading (graded-lex) coefficient 1
    static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

    // substitute t_k -> values[k] (univariate rational functions in t)
    RatFun substitute(const std::vector<RatFun>& values) const;
    Cyclo eval(const std::vector<Cyclo>& values) const;

    std::string str(const std::string& stem = "t") const;

  private:
    int nvars_;
    std::map<Expo, Cyclo, GradedLexLess> terms_;
};

// Canonical fraction over the multivariate ring: gcd-reduced, denominator's
// graded-lex leading coefficient = 1, zero is 0/1.  Equality of values is
// equality of representations.
class MultiRatFun {
  public:
    MultiRatFun() : num_(0), den_(0, Cyclo(Rat(1))) {}
    explicit MultiRatFun(int nvars) : num_(nvars), den_(nvars, Cyclo(Rat(1))) {}
    MultiRatFun(int nvars, const Rat& q) : MultiRatFun(MultiPoly(nvars, Cyclo(q))) {}
    MultiRatFun(MultiPoly num);                 // polynomial
    MultiRatFun(MultiPoly num, MultiPoly den);  // normalizes; throws on den = 0

    static MultiRatFun variable(int nvars, int index, int power = 1) {
        return MultiRatFun(MultiPoly::variable(nvars, index, power));
    }

    int nvars() const { return num_.nvars(); }
    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Cyclo constant_value() const;

    MultiRatFun operator-() const;
    MultiRatFun& operator+=(const MultiRatFun& o);
    MultiRatFun& operator-=(const MultiRatFun& o);
    MultiRatFun& operator*=(const MultiRatFun& o);
    MultiRatFun& operator/=(const MultiRatFun& o);
    friend MultiRatFun operator+(MultiRatFun a, const MultiRatFun& b) { return a += b; }
    friend MultiRatFun operator-(MultiRatFun a, const MultiRatFun& b) { return a -= b; }
    friend MultiRatFun operator*(MultiRatFun a, const MultiRatFun& b) { return a *= b; }
    friend MultiRatFun operator/(MultiRatFun a, const MultiRatFun& b) { return a /= b; }
    friend bool operator==(const MultiRatFun& a, const MultiRatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const MultiRatFun& a, const MultiRatFun& b) { return !(a == b); }

    MultiRatFun inverse() const;
    MultiRatFun conj() const;

    // Spec op `specialize`: t_k -> values[k]; throws math_error("pole at
    // specialization point") if the denominator vanishes.
    RatFun specialize(const std::vector<RatFun>& values) const;
    Cyclo specialize_values(const std::vector<Cyclo>& values) const;

    std::string str(const std::string& stem = "t") const;

  private:
    MultiPoly num_, den_;
};

}  // namespace rsym
