#pragma once

#include <string>
#include <vector>

#include "rsym/cyclotomic.hpp"

namespace rsym {

// Dense univariate polynomial in t over Q(zeta_r).  coeffs[d] = coefficient
// of t^d; the leading coefficient is nonzero unless the polynomial is zero
// (empty coefficient vector).
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(Cyclo c);
    explicit UniPoly(const Rat& q);
    explicit UniPoly(std::vector<Cyclo> coeffs);

    static UniPoly t(int order = 1);                     // the variable
    static UniPoly monomial(int deg, const Cyclo& c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for 0
    const std::vector<Cyclo>& coeffs() const { return coeffs_; }
    Cyclo coeff(int d) const;
    const Cyclo& leading() const;

    bool is_constant() const { return coeffs_.size() <= 1; }
    Cyclo constant_value() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly scaled(const Cyclo& c) const;
    // quotient/remainder; divisor must be nonzero
    static void divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    // monic gcd
    static UniPoly gcd(UniPoly a, UniPoly b);

    Cyclo eval(const Cyclo& x) const;
    // p(t) -> (rev(p), deg): p(1/t) = rev(p)/t^deg
    UniPoly reversed() const;

    bool is_integer_poly() const;  // all coefficients rational integers

    std::string str(const std::string& var = "t") const;

  private:
    void normalize();
    std::vector<Cyclo> coeffs_;
};

// Canonical fraction num/den in Q(zeta_r)(t): den monic, gcd(num, den) = 1,
// zero is 0/1.  Equal values always have identical representations.
class RatFun {
  public:
    RatFun() : num_(), den_(UniPoly(Rat(1))) {}
    RatFun(const Rat& q) : RatFun(UniPoly(q)) {}
    explicit RatFun(const Cyclo& c) : RatFun(UniPoly(c)) {}
    RatFun(UniPoly num);                       // polynomial
    RatFun(UniPoly num, UniPoly den);          // normalizes; throws on den = 0

    static RatFun t(int order = 1) { return RatFun(UniPoly::t(order)); }
    // t^k for k possibly negative
    static RatFun t_power(int k, int order = 1);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Cyclo constant_value() const;

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun inverse() const;
    RatFun conj() const;  // zeta -> zeta^{-1} on coefficients
    // f(t) -> f(1/t), normalized
    RatFun invert_variable() const;
    // exact evaluation; throws math_error on pole
    Cyclo eval(const Cyclo& x) const;
    RatFun pow(int e) const;

    std::string str(const std::string& var = "t") const;

  private:
    UniPoly num_, den_;
};

// Spec op (module algebra): gcd-reduced monic-denominator canonical form.
RatFun ratfun_normalize(UniPoly num, UniPoly den);

}  // namespace rsym
