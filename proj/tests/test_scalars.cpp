#include <random>

#include "doctest.h"
#include "qsym/errors.hpp"
#include "qsym/qrat.hpp"

using namespace qsym;

namespace {

Poly P(std::vector<int> c) {
    std::vector<Rational> v;
    for (int x : c) v.emplace_back(x);
    return Poly(v);
}

QRat random_qrat(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-4, 4), deg(0, 3);
    auto rp = [&](bool nonzero) {
        for (;;) {
            std::vector<Rational> v;
            int d = deg(rng);
            for (int k = 0; k <= d; ++k) v.emplace_back(coef(rng), 1 + (coef(rng) + 4) % 3);
            Poly p(v);
            if (!nonzero || !p.is_zero()) return p;
        }
    };
    return QRat(rp(false), rp(true));
}

}  // namespace

TEST_CASE("rational basics and canonical form") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational::parse("3/4") + Rational::parse("1/4") == Rational(1));
    CHECK(Rational::parse("-2").str() == "-2");
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational overflow falls back to GMP and demotes back") {
    Rational big(INT64_MAX);
    Rational sq = big * big;
    CHECK_FALSE(sq.is_small());
    CHECK(sq.str() == "85070591730234615847396907784232501249");
    Rational back = sq / big;
    CHECK(back.is_small());
    CHECK(back == big);
    Rational s = big + big;
    CHECK_FALSE(s.is_small());
    CHECK((s - big).is_small());
    Rational tiny(1, INT64_MAX);
    CHECK((tiny * tiny).str() == "1/85070591730234615847396907784232501249");
    // Mixed-path equality through mpq.
    CHECK(Rational(mpq_class(7, 3)) == Rational(7, 3));
}

TEST_CASE("rational arithmetic matches GMP on random inputs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(-(1LL << 62), 1LL << 62);
    for (int i = 0; i < 2000; ++i) {
        long long a = dist(rng), b = dist(rng) | 1, c = dist(rng), d = dist(rng) | 1;
        Rational x(a, b), y(c, d);
        mpq_class X(mpz_class(std::to_string(a)), mpz_class(std::to_string(b)));
        mpq_class Y(mpz_class(std::to_string(c)), mpz_class(std::to_string(d)));
        X.canonicalize();
        Y.canonicalize();
        CHECK((x + y).to_mpq() == X + Y);
        CHECK((x * y).to_mpq() == X * Y);
        CHECK((x - y).to_mpq() == X - Y);
        if (c != 0) CHECK((x / y).to_mpq() == X / Y);
    }
}

TEST_CASE("polynomial arithmetic") {
    Poly a = P({-1, 0, 1});  // q^2 - 1
    Poly b = P({-1, 1});     // q - 1
    Poly q, r;
    Poly::divmod(a, b, q, r);
    CHECK(q == P({1, 1}));
    CHECK(r.is_zero());
    CHECK(Poly::gcd(a, P({1, 2, 1})) == P({1, 1}));
    CHECK(a.str() == "q^2 - 1");
    CHECK(P({1, -3, 0, 2}).str() == "2*q^3 - 3*q + 1");
    CHECK(P({0, 1, 2}).shift_one() == P({3, 5, 2}));
}

TEST_CASE("QRat canonical form and serialization") {
    QRat x(P({-1, 0, 1}), P({-1, 1}));
    CHECK(x == QRat(P({1, 1}), P({1})));
    CHECK(QRat(P({-1, 0, 1}), P({0, 1})).str() == "(q^2 - 1)/(q)");
    // Different representatives of the same fraction compare equal.
    QRat y(P({2, 2}), P({0, 4, 4}));
    QRat z(P({1}), P({0, 2}));
    CHECK(y == z);
    CHECK(z.den().lead().is_one());
    CHECK(QRat(P({3}), P({4})).str() == "3/4");
}

TEST_CASE("specialize_q1") {
    CHECK(specialize_q1(QRat(P({-1, 0, 1}), P({-1, 1}))) == Rational(2));
    CHECK(specialize_q1(QRat(1)) == Rational(1));
    // (q - q^-1)/(q - 1)
    QRat qq = QRat::q() - QRat::q_pow(-1);
    CHECK(specialize_q1(qq / (QRat::q() - QRat(1))) == Rational(2));
    CHECK_THROWS_AS(specialize_q1(QRat(1) / (QRat::q() - QRat(1))), PoleAtOne);
}

TEST_CASE("divided_bracket") {
    CHECK(divided_bracket(0, 1).is_zero());
    CHECK(divided_bracket(1, 1) == QRat(1));
    CHECK(divided_bracket(2, 1) == QRat(P({1, 0, 1}), P({0, 1})));
    CHECK(divided_bracket(3, 1) == QRat::q_pow(2) + QRat(1) + QRat::q_pow(-2));
    CHECK(divided_bracket(2, 2) == QRat::q_pow(2) + QRat::q_pow(-2));
    for (int n = 0; n < 6; ++n) CHECK(specialize_q1(divided_bracket(n, 2)) == Rational(n));
}

TEST_CASE("QRat field axioms on random samples") {
    std::mt19937 rng(11);
    for (int i = 0; i < 150; ++i) {
        QRat a = random_qrat(rng), b = random_qrat(rng), c = random_qrat(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!a.is_zero()) CHECK(a * a.inverse() == QRat(1));
        CHECK(a - a == QRat());
    }
}

TEST_CASE("specialize_q1 is a ring homomorphism on its domain") {
    std::mt19937 rng(5);
    int tested = 0;
    for (int i = 0; i < 300; ++i) {
        QRat a = random_qrat(rng), b = random_qrat(rng);
        try {
            Rational sa = specialize_q1(a), sb = specialize_q1(b);
            CHECK(specialize_q1(a * b) == sa * sb);
            CHECK(specialize_q1(a + b) == sa + sb);
            ++tested;
        } catch (const PoleAtOne&) {
        }
    }
    CHECK(tested > 50);
}

TEST_CASE("Laurent expansion at q = 1") {
    // 1/(q - q^-1) = q/((q-1)(q+1)) = 1/(2t) + 1/4 + ...
    QRat f = (QRat::q() - QRat::q_pow(-1)).inverse();
    int o = 0;
    auto s = f.laurent_at_one(2, o);
    CHECK(o == -1);
    CHECK(s[0] == Rational(1, 2));
    CHECK(s[1] == Rational(1, 4));
    // q^-1 = 1 - t + t^2 - ...
    auto g = QRat::q_pow(-1).laurent_at_one(3, o);
    CHECK(o == 0);
    CHECK(g == std::vector<Rational>{1, -1, 1});
}
