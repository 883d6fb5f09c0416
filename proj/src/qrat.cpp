#include "qsym/qrat.hpp"

#include <algorithm>
#include <sstream>

#include "qsym/errors.hpp"

namespace qsym {

namespace {
const Rational kZero;
}

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim_(); }

Poly Poly::monomial(int degree, const Rational& c) {
    Poly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(degree) + 1, Rational());
    p.c_.back() = c;
    return p;
}

void Poly::trim_() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[k];
}

int Poly::low_order() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return static_cast<int>(k);
    return 0;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

Poly Poly::shift_one() const {
    // Horner in the ring Q[t]: p(1+t) = (...(c_n (1+t) + c_{n-1})(1+t) + ...).
    Poly acc;
    Poly one_t(std::vector<Rational>{Rational(1), Rational(1)});
    for (size_t k = c_.size(); k-- > 0;) acc = acc * one_t + Poly(c_[k]);
    return acc;
}

Poly Poly::monic() const {
    if (is_zero() || lead().is_one()) return *this;
    return scaled(lead().inverse());
}

Poly Poly::scaled(const Rational& s) const {
    if (s.is_zero()) return Poly();
    Poly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    r.trim_();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim_();
    return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    rem = a;
    quot = Poly();
    int db = b.degree();
    if (rem.degree() < db) return;
    quot.c_.assign(static_cast<size_t>(rem.degree() - db) + 1, Rational());
    Rational inv = b.lead().inverse();
    while (!rem.is_zero() && rem.degree() >= db) {
        int shift = rem.degree() - db;
        Rational f = rem.lead() * inv;
        quot.c_[shift] = f;
        for (int k = 0; k <= db; ++k) rem.c_[shift + k] -= f * b.c_[k];
        rem.trim_();
    }
    quot.trim_();
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.str();
            continue;
        }
        if (!mag.is_one()) os << mag.str() << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

QRat::QRat(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize_();
}

void QRat::normalize_() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    if (den_.degree() > 0) {
        // Pull out common powers of q first (cheap, and the common case here).
        int k = std::min(num_.low_order(), den_.low_order());
        if (k > 0) {
            num_ = Poly(std::vector<Rational>(num_.coeffs().begin() + k, num_.coeffs().end()));
            den_ = Poly(std::vector<Rational>(den_.coeffs().begin() + k, den_.coeffs().end()));
        }
        if (den_.degree() > 0) {
            Poly g = Poly::gcd(num_, den_);
            if (g.degree() > 0) {
                Poly q, r;
                Poly::divmod(num_, g, q, r);
                num_ = q;
                Poly::divmod(den_, g, q, r);
                den_ = q;
            }
        }
    }
    if (!den_.lead().is_one()) {
        Rational s = den_.lead().inverse();
        num_ = num_.scaled(s);
        den_ = den_.scaled(s);
    }
}

QRat QRat::q_pow(int k) {
    if (k >= 0) return QRat(Poly::monomial(k), Poly(Rational(1)));
    return QRat(Poly(Rational(1)), Poly::monomial(-k));
}

Rational QRat::constant_value() const {
    if (!is_constant()) throw Error("NotConstant", str() + " depends on q");
    return num_.coeff(0);
}

QRat QRat::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return QRat(den_, num_);
}

QRat QRat::operator-() const {
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat operator+(const QRat& a, const QRat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return QRat(a.num_ + b.num_, a.den_);
    return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

QRat operator*(const QRat& a, const QRat& b) {
    if (a.is_zero() || b.is_zero()) return QRat();
    if (a.den_.degree() == 0 && b.den_.degree() == 0) {
        QRat r;
        r.num_ = a.num_ * b.num_;
        return r;
    }
    return QRat(a.num_ * b.num_, a.den_ * b.den_);
}

QRat operator/(const QRat& a, const QRat& b) { return a * b.inverse(); }

Rational QRat::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw DivisionByZero("pole at q = " + x.str());
    return num_.eval(x) / d;
}

std::vector<Rational> QRat::laurent_at_one(int stop, int& order0) const {
    Poly n = num_.shift_one();
    Poly d = den_.shift_one();
    int m = d.low_order();
    // d = t^m * u(t), u(0) != 0; series of n / u, then shift by -m.
    std::vector<Rational> u(d.coeffs().begin() + m, d.coeffs().end());
    order0 = -m;
    int count = stop - order0;
    std::vector<Rational> out(count > 0 ? count : 0);
    if (count <= 0) return out;
    Rational inv = u[0].inverse();
    for (int k = 0; k < count; ++k) {
        Rational acc = n.coeff(k);
        for (int j = 1; j <= k && j < static_cast<int>(u.size()); ++j) acc -= u[j] * out[k - j];
        out[k] = acc * inv;
    }
    return out;
}

std::string QRat::str(const std::string& var) const {
    if (den_.degree() == 0) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const QRat& r) { return os << r.str(); }

Rational specialize_q1(const QRat& f) {
    Rational d = f.den().eval(Rational(1));
    if (d.is_zero()) throw PoleAtOne(f.str() + " has a pole at q = 1");
    return f.num().eval(Rational(1)) / d;
}

QRat divided_bracket(int n, int d) {
    if (n < 0 || d < 1) throw Error("InvalidArgument", "divided_bracket needs n >= 0, d >= 1");
    if (n == 0) return QRat();
    // q^{-(n-1)d} (q^{2nd} - 1) / (q^{2d} - 1)
    Poly num = Poly::monomial(2 * n * d) - Poly(Rational(1));
    Poly den = Poly::monomial(2 * d) - Poly(Rational(1));
    return QRat(num, den * Poly::monomial((n - 1) * d));
}

}  // namespace qsym
