#include "qsym/rational.hpp"

#include <climits>

#include "qsym/errors.hpp"

namespace qsym {

namespace {

mpz_class mpz_from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

bool fits_small(const mpz_class& z) {
    return mpz_fits_slong_p(z.get_mpz_t()) && z != mpz_class(LONG_MIN);
}

}  // namespace

namespace detail {
Rational rational_from_i128(__int128 n, __int128 d) {
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    q.canonicalize();
    return Rational(q);
}
}  // namespace detail

Rational::Rational(long long n, long long d) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    if (n != LLONG_MIN && d != LLONG_MIN) {
        long long g = std::gcd(n < 0 ? -n : n, d < 0 ? -d : d);
        num_ = (d < 0 ? -n : n) / g;
        den_ = (d < 0 ? -d : d) / g;
        return;
    }
    mpq_class q(mpz_class(std::to_string(n)), mpz_class(std::to_string(d)));
    q.canonicalize();
    assign_big_(q);
}

void Rational::assign_big_(const mpq_class& q) {
    if (fits_small(q.get_num()) && fits_small(q.get_den())) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_shared<const mpq_class>(q);
    }
}

void Rational::promote_from_(const mpq_class& q) { assign_big_(q); }

Rational Rational::parse(const std::string& s) {
    try {
        mpq_class q(s, 10);
        if (q.get_den() == 0) throw DivisionByZero(s);
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational number: '" + s + "'");
    }
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const { return to_mpq().get_num(); }
mpz_class Rational::denominator() const { return to_mpq().get_den(); }

long long Rational::to_int() const {
    if (!big_ && den_ == 1) return num_;
    throw Error("NotInteger", str() + " is not a machine integer");
}

std::string Rational::str() const {
    if (big_) return big_->get_str(10);
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (big_) return Rational(mpq_class(1 / *big_));
    Rational r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    return a.to_mpq() < b.to_mpq();
}

Rational Rational::slow_add_(const Rational& a, const Rational& b) {
    mpq_class r = a.to_mpq() + b.to_mpq();
    return Rational(r);
}

Rational Rational::slow_mul_(const Rational& a, const Rational& b) {
    mpq_class r = a.to_mpq() * b.to_mpq();
    return Rational(r);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace qsym
