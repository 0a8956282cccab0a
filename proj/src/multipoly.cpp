#include "rsym/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace rsym {

MultiPoly MultiPoly::variable(int nvars, int index, int power) {
    MultiPoly p(nvars);
    Expo e(nvars, 0);
    e[index] = power;
    p.terms_[e] = Cyclo(Rat(1));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Expo& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Cyclo MultiPoly::constant_value() const {
    if (terms_.empty()) return Cyclo();
    if (!is_constant()) throw math_error("multivariate polynomial is not constant");
    return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

Cyclo MultiPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Cyclo() : it->second;
}

void MultiPoly::add_term(const Expo& e, const Cyclo& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const std::pair<const Expo, Cyclo>& MultiPoly::leading_term() const {
    if (terms_.empty()) throw math_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.nvars_);
    Expo e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Cyclo& c) const {
    if (c.is_zero()) return MultiPoly(nvars_);
    MultiPoly r = *this;
    for (auto& [e, x] : r.terms_) x *= c;
    return r;
}

MultiPoly MultiPoly::conj() const {
    MultiPoly r = *this;
    for (auto& [e, x] : r.terms_) x = x.conj();
    return r;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw math_error("polynomial division by zero");
    MultiPoly rem = a, quot(a.nvars_);
    Cyclo lead_inv = b.leading_term().second.inverse();
    while (!rem.is_zero()) {
        const auto& [er, cr] = rem.leading_term();
        const Expo& eb = b.leading_term().first;
        Expo eq(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) {
            eq[i] = er[i] - eb[i];
            if (eq[i] < 0) throw invariant_error("inexact multivariate division");
        }
        Cyclo cq = cr * lead_inv;
        MultiPoly mono(a.nvars_);
        mono.terms_[eq] = cq;
        quot += mono;
        rem -= mono * b;
    }
    return quot;
}

namespace {

int deg_in(const MultiPoly& p, int v) {
    int d = 0;
    for (const auto& [e, c] : p.terms()) d = std::max(d, e[v]);
    return d;
}

// coefficient of t_v^k as a polynomial in the remaining variables (kept at
// full width with exponent 0 in v)
MultiPoly coeff_in(const MultiPoly& p, int v, int k) {
    MultiPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[v] != k) continue;
        Expo e2 = e;
        e2[v] = 0;
        r.add_term(e2, c);
    }
    return r;
}

MultiPoly shift_var(const MultiPoly& p, int v, int k) {
    MultiPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Expo e2 = e;
        e2[v] += k;
        r.add_term(e2, c);
    }
    return r;
}

MultiPoly normalize_lead(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading_term().second.inverse());
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

// gcd of the coefficients of p viewed as univariate in v
MultiPoly content_in(const MultiPoly& p, int v) {
    MultiPoly g(p.nvars());
    for (int k = deg_in(p, v); k >= 0; --k) {
        MultiPoly c = coeff_in(p, v, k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? std::move(c) : gcd_rec(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return normalize_lead(b);
    if (b.is_zero()) return normalize_lead(a);
    if (a.is_constant() || b.is_constant()) return MultiPoly(a.nvars(), Cyclo(Rat(1)));
    // main variable: highest index occurring in either
    int v = -1;
    for (int i = a.nvars() - 1; i >= 0 && v < 0; --i)
        if (deg_in(a, i) > 0 || deg_in(b, i) > 0) v = i;
    if (deg_in(a, v) == 0 || deg_in(b, v) == 0) {
        // v occurs in only one of them: gcd divides the other's content
        const MultiPoly& with = deg_in(a, v) > 0 ? a : b;
        const MultiPoly& without = deg_in(a, v) > 0 ? b : a;
        return gcd_rec(content_in(with, v), without);
    }
    MultiPoly ca = content_in(a, v), cb = content_in(b, v);
    MultiPoly pa = MultiPoly::exact_div(a, ca), pb = MultiPoly::exact_div(b, cb);
    MultiPoly cg = gcd_rec(ca, cb);
    // primitive PRS in v
    MultiPoly A = std::move(pa), B = std::move(pb);
    if (deg_in(A, v) < deg_in(B, v)) std::swap(A, B);
    while (true) {
        // pseudo-remainder of A by B in variable v
        MultiPoly R = A;
        int db = deg_in(B, v);
        MultiPoly lb = coeff_in(B, v, db);
        while (!R.is_zero() && deg_in(R, v) >= db) {
            int dr = deg_in(R, v);
            MultiPoly lr = coeff_in(R, v, dr);
            R = R * lb - shift_var(lr, v, dr - db) * B;
        }
        if (R.is_zero()) break;
        MultiPoly cr = content_in(R, v);
        A = std::move(B);
        B = MultiPoly::exact_div(R, cr);
        if (deg_in(B, v) == 0) return cg;  // coprime primitive parts
    }
    return normalize_lead(cg * B);
}

}  // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) { return gcd_rec(a, b); }

RatFun MultiPoly::substitute(const std::vector<RatFun>& values) const {
    RatFun acc;
    for (const auto& [e, c] : terms_) {
        RatFun term(c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) term *= values[i].pow(e[i]);
        acc += term;
    }
    return acc;
}

Cyclo MultiPoly::eval(const std::vector<Cyclo>& values) const {
    Cyclo acc;
    for (const auto& [e, c] : terms_) {
        Cyclo term = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) term *= values[i];
        acc += term;
    }
    return acc;
}

std::string MultiPoly::str(const std::string& stem) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // print leading (highest) terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs;
        bool neg = false;
        bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
        if (c.is_rational()) {
            Rat q = c.rational_value();
            neg = q < 0;
            Rat abs = neg ? Rat(-q) : q;
            cs = (abs == 1 && has_var) ? "" : abs.get_str();
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
        bool printed = !cs.empty();
        for (int i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (printed) os << "*";
            os << stem << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

MultiRatFun::MultiRatFun(MultiPoly num)
    : num_(std::move(num)), den_(num_.nvars(), Cyclo(Rat(1))) {}

MultiRatFun::MultiRatFun(MultiPoly num, MultiPoly den) {
    if (den.is_zero()) throw math_error("zero denominator");
    if (num.is_zero()) {
        num_ = MultiPoly(num.nvars());
        den_ = MultiPoly(num.nvars(), Cyclo(Rat(1)));
        return;
    }
    MultiPoly g = MultiPoly::gcd(num, den);
    if (!g.is_constant()) {
        num = MultiPoly::exact_div(num, g);
        den = MultiPoly::exact_div(den, g);
    }
    Cyclo inv = den.leading_term().second.inverse();
    num_ = num.scaled(inv);
    den_ = den.scaled(inv);
}

Cyclo MultiRatFun::constant_value() const {
    return num_.constant_value() * den_.constant_value().inverse();
}

MultiRatFun MultiRatFun::operator-() const {
    MultiRatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

MultiRatFun& MultiRatFun::operator+=(const MultiRatFun& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (is_polynomial() && o.is_polynomial()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) return *this = MultiRatFun(num_ + o.num_, den_);
    return *this = MultiRatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

MultiRatFun& MultiRatFun::operator-=(const MultiRatFun& o) { return *this += -o; }

MultiRatFun& MultiRatFun::operator*=(const MultiRatFun& o) {
    if (is_zero() || o.is_zero()) return *this = MultiRatFun(nvars());
    if (is_polynomial() && o.is_polynomial()) {
        num_ = num_ * o.num_;
        return *this;
    }
    return *this = MultiRatFun(num_ * o.num_, den_ * o.den_);
}

MultiRatFun& MultiRatFun::operator/=(const MultiRatFun& o) { return *this *= o.inverse(); }

MultiRatFun MultiRatFun::inverse() const {
    if (is_zero()) throw math_error("division by zero");
    return MultiRatFun(den_, num_);
}

MultiRatFun MultiRatFun::conj() const { return MultiRatFun(num_.conj(), den_.conj()); }

RatFun MultiRatFun::specialize(const std::vector<RatFun>& values) const {
    RatFun d = den_.substitute(values);
    if (d.is_zero()) throw math_error("pole at specialization point");
    return num_.substitute(values) / d;
}

Cyclo MultiRatFun::specialize_values(const std::vector<Cyclo>& values) const {
    Cyclo d = den_.eval(values);
    if (d.is_zero()) throw math_error("pole at specialization point");
    return num_.eval(values) * d.inverse();
}

std::string MultiRatFun::str(const std::string& stem) const {
    if (is_polynomial()) {
        if (den_.constant_value() == Cyclo(Rat(1))) return num_.str(stem);
        return "(" + num_.str(stem) + ") / (" + den_.str(stem) + ")";
    }
    return "(" + num_.str(stem) + ") / (" + den_.str(stem) + ")";
}

}  // namespace rsym
