#include "rsym/unipoly.hpp"

#include <sstream>

namespace rsym {

UniPoly::UniPoly(Cyclo c) {
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

UniPoly::UniPoly(const Rat& q) {
    if (q != 0) coeffs_.push_back(Cyclo(q));
}

UniPoly::UniPoly(std::vector<Cyclo> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::t(int order) {
    return UniPoly(std::vector<Cyclo>{Cyclo(Rat(0), order), Cyclo(Rat(1), order)});
}

UniPoly UniPoly::monomial(int deg, const Cyclo& c) {
    if (c.is_zero()) return UniPoly();
    std::vector<Cyclo> v(deg + 1, Cyclo(Rat(0), c.order()));
    v[deg] = c;
    return UniPoly(std::move(v));
}

void UniPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Cyclo UniPoly::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return Cyclo();
    return coeffs_[d];
}

const Cyclo& UniPoly::leading() const {
    if (coeffs_.empty()) throw math_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Cyclo UniPoly::constant_value() const {
    if (coeffs_.empty()) return Cyclo();
    if (coeffs_.size() > 1) throw math_error("polynomial is not constant");
    return coeffs_[0];
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (Cyclo& c : r.coeffs_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Cyclo> prod(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = std::move(prod);
    normalize();
    return *this;
}

UniPoly UniPoly::scaled(const Cyclo& c) const {
    if (c.is_zero()) return UniPoly();
    UniPoly r = *this;
    for (Cyclo& x : r.coeffs_) x *= c;
    return r;
}

void UniPoly::divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw math_error("polynomial division by zero");
    r = a;
    q = UniPoly();
    if (a.degree() < b.degree()) return;
    Cyclo lead_inv = b.leading().inverse();
    std::vector<Cyclo> qc(a.degree() - b.degree() + 1);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Cyclo c = r.leading() * lead_inv;
        qc[shift] = c;
        r -= UniPoly::monomial(shift, c) * b;
    }
    q = UniPoly(std::move(qc));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly q, r;
        divrem(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.leading().inverse());  // monic
}

Cyclo UniPoly::eval(const Cyclo& x) const {
    Cyclo acc;
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
    return acc;
}

UniPoly UniPoly::reversed() const {
    std::vector<Cyclo> rev(coeffs_.rbegin(), coeffs_.rend());
    return UniPoly(std::move(rev));
}

bool UniPoly::is_integer_poly() const {
    for (const Cyclo& c : coeffs_) {
        if (!c.is_rational()) return false;
        if (!is_integer(c.rational_value())) return false;
    }
    return true;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t d = 0; d < coeffs_.size(); ++d) {
        const Cyclo& c = coeffs_[d];
        if (c.is_zero()) continue;
        std::string cs;
        bool neg = false;
        if (c.is_rational()) {
            Rat q = c.rational_value();
            neg = q < 0;
            Rat abs = neg ? Rat(-q) : q;
            cs = (abs == 1 && d > 0) ? "" : abs.get_str();
        } else {
            cs = "(" + c.str() + ")";
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        os << cs;
        if (d > 0) {
            if (!cs.empty()) os << "*";
            os << var;
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

RatFun::RatFun(UniPoly num) : num_(std::move(num)), den_(UniPoly(Rat(1))) {}

RatFun::RatFun(UniPoly num, UniPoly den) {
    if (den.is_zero()) throw math_error("zero denominator");
    if (num.is_zero()) {
        num_ = UniPoly();
        den_ = UniPoly(Rat(1));
        return;
    }
    UniPoly g = UniPoly::gcd(num, den);
    if (g.degree() > 0) {
        UniPoly q, r;
        UniPoly::divrem(num, g, q, r);
        num = std::move(q);
        UniPoly::divrem(den, g, q, r);
        den = std::move(q);
    }
    Cyclo inv = den.leading().inverse();
    num_ = num.scaled(inv);
    den_ = den.scaled(inv);
}

RatFun RatFun::t_power(int k, int order) {
    if (k >= 0) return RatFun(UniPoly::monomial(k, Cyclo(Rat(1), order)));
    return RatFun(UniPoly(Cyclo(Rat(1), order)), UniPoly::monomial(-k, Cyclo(Rat(1), order)));
}

Cyclo RatFun::constant_value() const {
    return num_.constant_value() * den_.constant_value().inverse();
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        *this = RatFun(num_ + o.num_, den_);
        return *this;
    }
    *this = RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    if (is_zero() || o.is_zero()) return *this = RatFun();
    if (is_polynomial() && o.is_polynomial()) {
        num_ *= o.num_;
        den_ = den_ * o.den_;  // product of constants
        if (den_.degree() == 0 && !(den_.leading() == Cyclo(Rat(1)))) {
            num_ = num_.scaled(den_.leading().inverse());
            den_ = UniPoly(Rat(1));
        }
        return *this;
    }
    *this = RatFun(num_ * o.num_, den_ * o.den_);
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun RatFun::inverse() const {
    if (is_zero()) throw math_error("division by zero");
    return RatFun(den_, num_);
}

RatFun RatFun::conj() const {
    auto conj_poly = [](const UniPoly& p) {
        std::vector<Cyclo> c = p.coeffs();
        for (Cyclo& x : c) x = x.conj();
        return UniPoly(std::move(c));
    };
    return RatFun(conj_poly(num_), conj_poly(den_));
}

RatFun RatFun::invert_variable() const {
    if (is_zero()) return RatFun();
    // f(1/t) = t^{dd - dn} * rev(num)/rev(den)
    int dn = num_.degree(), dd = den_.degree();
    RatFun base(num_.reversed(), den_.reversed());
    return base * t_power(dd - dn);
}

Cyclo RatFun::eval(const Cyclo& x) const {
    Cyclo d = den_.eval(x);
    if (d.is_zero()) throw math_error("pole at specialization point");
    return num_.eval(x) * d.inverse();
}

RatFun RatFun::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFun r(Rat(1));
    RatFun b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string RatFun::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

RatFun ratfun_normalize(UniPoly num, UniPoly den) { return RatFun(std::move(num), std::move(den)); }

}  // namespace rsym
