#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "rsym/error.hpp"
#include "rsym/rat.hpp"

namespace rsym {

// Elements of Q(zeta_r) as residues modulo the r-th cyclotomic polynomial
// Phi_r.  Working mod Phi_r (rather than x^r - 1) keeps the ring a field, so
// every nonzero element is invertible.  Coefficient vectors always have
// length phi(r); equality is coefficient comparison.
class CycloField {
  public:
    explicit CycloField(int order);

    int order() const { return order_; }
    int degree() const { return static_cast<int>(phi_.size()) - 1; }  // phi(r)

    // Coefficients of Phi_r, ascending, integer.
    const std::vector<Int>& cyclotomic_polynomial() const { return phi_; }

    // x^k mod Phi_r for 0 <= k < order (precomputed).
    const std::vector<Rat>& power_of_zeta(int k) const;

    static const CycloField& get(int order);  // interned, process-lifetime

  private:
    int order_;
    std::vector<Int> phi_;
    std::vector<std::vector<Rat>> zeta_pow_;  // order entries, each length deg
};

class Cyclo {
  public:
    Cyclo() : order_(1), coeffs_(1, Rat(0)) {}
    explicit Cyclo(const Rat& q, int order = 1);
    // Reduces an arbitrary-length coefficient sequence (in powers of zeta)
    // modulo Phi_r.
    Cyclo(std::vector<Rat> raw, int order);

    static Cyclo zeta(int order, long power = 1);

    int order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // throws if not rational

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }
    Cyclo inverse() const;  // throws math_error("division by zero") on 0
    Cyclo conj() const;     // zeta -> zeta^{-1}

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a *= b.inverse(); }
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }
    friend bool operator<(const Cyclo& a, const Cyclo& b);  // lexicographic; for map keys

    std::string str() const;  // human-readable, e.g. "1 - 1/2*z^2"

  private:
    // Promotes a/b to a common order (only 1 -> r is allowed).
    static void align(Cyclo& a, Cyclo& b);

    int order_;
    std::vector<Rat> coeffs_;  // length phi(order_)
};

// Spec ops of module `algebra`.
Cyclo cyclo_reduce(const std::vector<Rat>& raw, int order);
inline Cyclo conjugate(const Cyclo& z) { return z.conj(); }

}  // namespace rsym
