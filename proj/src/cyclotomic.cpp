#include "rsym/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace rsym {

namespace {

// Integer polynomial long division, exact (used for x^r - 1 by products of
// lower cyclotomic polynomials).
std::vector<Int> exact_div(std::vector<Int> num, const std::vector<Int>& den) {
    std::vector<Int> q(num.size() - den.size() + 1, Int(0));
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        Int c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        if (c != 0)
            for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    return q;
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

std::vector<Int> cyclotomic_poly(int r) {
    // Phi_r = (x^r - 1) / prod_{d | r, d < r} Phi_d
    if (r == 1) return {Int(-1), Int(1)};
    std::vector<Int> num(r + 1, Int(0));
    num[0] = -1;
    num[r] = 1;
    std::vector<Int> den{Int(1)};
    for (int d = 1; d < r; ++d)
        if (r % d == 0) den = poly_mul(den, cyclotomic_poly(d));
    return exact_div(std::move(num), den);
}

}  // namespace

CycloField::CycloField(int order) : order_(order) {
    if (order < 1) throw usage_error("cyclotomic order must be >= 1");
    phi_ = cyclotomic_poly(order);
    int deg = static_cast<int>(phi_.size()) - 1;
    // x^k mod Phi_r for k = 0..order-1, by repeated multiplication by x.
    zeta_pow_.assign(order, {});
    std::vector<Rat> cur(deg, Rat(0));
    cur[0] = 1;
    for (int k = 0; k < order; ++k) {
        zeta_pow_[k] = cur;
        // multiply by x, reduce
        std::vector<Rat> nxt(deg, Rat(0));
        Rat top = cur[deg - 1];
        for (int i = deg - 1; i > 0; --i) nxt[i] = cur[i - 1];
        nxt[0] = 0;
        if (top != 0)
            for (int i = 0; i < deg; ++i) nxt[i] -= top * Rat(phi_[i]);
        cur = std::move(nxt);
    }
}

const std::vector<Rat>& CycloField::power_of_zeta(int k) const {
    k %= order_;
    if (k < 0) k += order_;
    return zeta_pow_[k];
}

const CycloField& CycloField::get(int order) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end())
        it = cache.emplace(order, std::make_unique<CycloField>(order)).first;
    return *it->second;
}

Cyclo::Cyclo(const Rat& q, int order) : order_(order) {
    coeffs_.assign(CycloField::get(order).degree(), Rat(0));
    coeffs_[0] = q;
}

Cyclo::Cyclo(std::vector<Rat> raw, int order) : order_(order) {
    const CycloField& F = CycloField::get(order);
    int deg = F.degree();
    coeffs_.assign(deg, Rat(0));
    for (size_t k = 0; k < raw.size(); ++k) {
        if (raw[k] == 0) continue;
        const std::vector<Rat>& zp = F.power_of_zeta(static_cast<int>(k % order));
        for (int i = 0; i < deg; ++i) coeffs_[i] += raw[k] * zp[i];
    }
}

Cyclo Cyclo::zeta(int order, long power) {
    long p = power % order;
    if (p < 0) p += order;
    std::vector<Rat> raw(static_cast<size_t>(p) + 1, Rat(0));
    raw[p] = 1;
    return Cyclo(std::move(raw), order);
}

bool Cyclo::is_zero() const {
    for (const Rat& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rat Cyclo::rational_value() const {
    if (!is_rational()) throw math_error("cyclotomic value is not rational");
    return coeffs_[0];
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (Rat& c : r.coeffs_) c = -c;
    return r;
}

void Cyclo::align(Cyclo& a, Cyclo& b) {
    if (a.order_ == b.order_) return;
    if (a.order_ == 1)
        a = Cyclo(a.coeffs_[0], b.order_);
    else if (b.order_ == 1)
        b = Cyclo(b.coeffs_[0], a.order_);
    else
        throw math_error("cyclotomic order mismatch");
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    Cyclo rhs = o;
    align(*this, rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    Cyclo rhs = o;
    align(*this, rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    Cyclo rhs = o;
    align(*this, rhs);
    const CycloField& F = CycloField::get(order_);
    int deg = F.degree();
    std::vector<Rat> prod(2 * deg - 1, Rat(0));
    for (int i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; j < deg; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    // reduce degrees >= deg using Phi_r
    const std::vector<Int>& phi = F.cyclotomic_polynomial();
    for (int d = static_cast<int>(prod.size()) - 1; d >= deg; --d) {
        Rat c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int j = 0; j < deg; ++j) prod[d - deg + j] -= c * Rat(phi[j]);
    }
    coeffs_.assign(prod.begin(), prod.begin() + deg);
    return *this;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw math_error("division by zero");
    if (is_rational()) {
        Cyclo r = *this;
        Rat inv = 1 / coeffs_[0];
        r.coeffs_.assign(r.coeffs_.size(), Rat(0));
        r.coeffs_[0] = inv;
        return r;
    }
    // Extended Euclid in Q[x] for gcd(this, Phi_r) = 1.
    const CycloField& F = CycloField::get(order_);
    std::vector<Rat> a(F.cyclotomic_polynomial().size());
    for (size_t i = 0; i < a.size(); ++i) a[i] = Rat(F.cyclotomic_polynomial()[i]);
    std::vector<Rat> b = coeffs_;
    while (!b.empty() && b.back() == 0) b.pop_back();
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients of `this`
    while (true) {
        // r = a mod b, q = a div b
        std::vector<Rat> r = a;
        std::vector<Rat> q(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rat(0));
        for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
            Rat c = r[i + b.size() - 1] / b.back();
            q[i] = c;
            if (c != 0)
                for (size_t j = 0; j < b.size(); ++j) r[i + j] -= c * b[j];
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        // s = s0 - q*s1
        std::vector<Rat> s = s0;
        if (!q.empty()) {
            s.resize(std::max(s.size(), q.size() + s1.size() - 1), Rat(0));
            for (size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (size_t j = 0; j < s1.size(); ++j) s[i + j] -= q[i] * s1[j];
            }
            while (!s.empty() && s.back() == 0) s.pop_back();
        }
        if (r.empty()) {
            // b is the gcd, a unit (degree 0) since Phi_r is irreducible
            Rat lead = b[0];
            std::vector<Rat> out(F.degree(), Rat(0));
            for (size_t i = 0; i < s1.size() && i < out.size(); ++i) out[i] = s1[i] / lead;
            Cyclo res;
            res.order_ = order_;
            res.coeffs_ = std::move(out);
            return res;
        }
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
}

Cyclo Cyclo::conj() const {
    if (order_ <= 2) return *this;
    const CycloField& F = CycloField::get(order_);
    int deg = F.degree();
    std::vector<Rat> out(deg, Rat(0));
    for (int i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0) continue;
        // zeta^i -> zeta^{-i}
        const std::vector<Rat>& zp = F.power_of_zeta(order_ - i);
        for (int j = 0; j < deg; ++j) out[j] += coeffs_[i] * zp[j];
    }
    Cyclo r;
    r.order_ = order_;
    r.coeffs_ = std::move(out);
    return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
    return false;
}

bool operator<(const Cyclo& a, const Cyclo& b) {
    if (a.order_ != b.order_) {
        if (a.is_rational() && b.is_rational()) return a.coeffs_[0] < b.coeffs_[0];
        return a.order_ < b.order_;
    }
    return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(),
                                        b.coeffs_.begin(), b.coeffs_.end());
}

std::string Cyclo::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        Rat abs = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (abs == 1);
        if (i == 0 || !unit) os << abs.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Cyclo cyclo_reduce(const std::vector<Rat>& raw, int order) { return Cyclo(raw, order); }

}  // namespace rsym
