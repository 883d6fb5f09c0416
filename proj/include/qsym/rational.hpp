#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace qsym {

// Exact rational number. Values that fit in int64 are kept inline; anything
// larger falls back to a shared, immutable GMP rational.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {  // NOLINT: implicit by design
        if (n == INT64_MIN) promote_from_(mpq_class(mpz_class(std::to_string(n))));
    }
    Rational(int n) : Rational(static_cast<long long>(n)) {}
    Rational(long n) : Rational(static_cast<long long>(n)) {}
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q) { assign_big_(q); }

    static Rational parse(const std::string& s);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;
    bool is_small() const { return !big_; }

    // Valid only when is_small().
    long long small_num() const { return num_; }
    long long small_den() const { return den_; }

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    // Integer value; throws unless is_integer() and fits in long long.
    long long to_int() const;

    std::string str() const;

    Rational operator-() const;
    Rational inverse() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    using i128 = __int128;
    using u128 = unsigned __int128;

    static Rational from_reduced_(i128 n, i128 d);
    static Rational slow_add_(const Rational& a, const Rational& b);
    static Rational slow_mul_(const Rational& a, const Rational& b);
    void assign_big_(const mpq_class& q);
    void promote_from_(const mpq_class& q);

    long long num_ = 0;
    long long den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

namespace detail {
Rational rational_from_i128(__int128 n, __int128 d);
}

inline Rational Rational::from_reduced_(i128 n, i128 d) {
    constexpr i128 lim = INT64_MAX;
    if (n <= lim && n >= -lim && d <= lim) {
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }
    return detail::rational_from_i128(n, d);
}

inline Rational operator+(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational::slow_add_(a, b);
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    using i128 = Rational::i128;
    if (a.den_ == 1 && b.den_ == 1) return Rational::from_reduced_(i128(a.num_) + b.num_, 1);
    long long g = std::gcd(a.den_, b.den_);
    if (g == 1) {
        return Rational::from_reduced_(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                                       i128(a.den_) * b.den_);
    }
    i128 t = i128(a.num_) * (b.den_ / g) + i128(b.num_) * (a.den_ / g);
    if (t == 0) return Rational();
    long long tm = static_cast<long long>((t < 0 ? -t : t) % g);
    long long g2 = std::gcd(tm, g);
    return Rational::from_reduced_(t / g2, i128(a.den_ / g) * (b.den_ / g2));
}

inline Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

inline Rational operator*(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational::slow_mul_(a, b);
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    using i128 = Rational::i128;
    long long g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
    long long g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
    return Rational::from_reduced_(i128(a.num_ / g1) * (b.num_ / g2),
                                   i128(a.den_ / g2) * (b.den_ / g1));
}

inline bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (!a.big_ || !b.big_) return false;  // canonical: big values never fit small
    return *a.big_ == *b.big_;
}

}  // namespace qsym
