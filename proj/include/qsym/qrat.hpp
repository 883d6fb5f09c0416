#pragma once

#include <string>
#include <vector>

#include "qsym/rational.hpp"

namespace qsym {

// Dense univariate polynomial over Q in the indeterminate q.
// coeffs[k] is the coefficient of q^k; no trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT: constants convert implicitly
    Poly(int c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs);

    static Poly monomial(int degree, const Rational& c = Rational(1));

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rational& coeff(int k) const;
    const Rational& lead() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    // Largest k with q^k dividing the polynomial (0 for the zero polynomial).
    int low_order() const;

    Rational eval(const Rational& x) const;
    Poly shift_one() const;  // p(1 + t) as a polynomial in t
    Poly monic() const;
    Poly scaled(const Rational& s) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
    static Poly gcd(const Poly& a, const Poly& b);  // monic, gcd(0,0) = 0

    std::string str(const std::string& var = "q") const;

private:
    void trim_();
    std::vector<Rational> c_;
};

// Element of Q(q): reduced fraction with monic denominator.
class QRat {
public:
    QRat() : den_(Rational(1)) {}
    QRat(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
    QRat(int c) : QRat(Rational(c)) {}
    QRat(const Poly& num, const Poly& den);

    static QRat q_pow(int k);
    static QRat q() { return q_pow(1); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Rational constant_value() const;  // requires is_constant()

    QRat inverse() const;
    QRat operator-() const;
    friend QRat operator+(const QRat& a, const QRat& b);
    friend QRat operator-(const QRat& a, const QRat& b);
    friend QRat operator*(const QRat& a, const QRat& b);
    friend QRat operator/(const QRat& a, const QRat& b);
    QRat& operator+=(const QRat& b) { return *this = *this + b; }
    QRat& operator-=(const QRat& b) { return *this = *this - b; }
    QRat& operator*=(const QRat& b) { return *this = *this * b; }
    QRat& operator/=(const QRat& b) { return *this = *this / b; }
    friend bool operator==(const QRat& a, const QRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

    // Substitute q -> x (x must not be a pole).
    Rational eval(const Rational& x) const;

    // Laurent expansion around q = 1 in t = q - 1: returns the coefficients of
    // t^order0, t^(order0+1), ... up to (excluding) t^stop.
    std::vector<Rational> laurent_at_one(int stop, int& order0) const;

    std::string str(const std::string& var = "q") const;

private:
    void normalize_();
    Poly num_;
    Poly den_;
};

std::ostream& operator<<(std::ostream& os, const QRat& r);

// Value at q = 1 of an element of the local ring at q = 1; PoleAtOne otherwise.
Rational specialize_q1(const QRat& f);

// Balanced quantum integer (q^{nd} - q^{-nd}) / (q^d - q^{-d}).
QRat divided_bracket(int n, int d);

}  // namespace qsym
