#include <algorithm>
#include <set>

#include "doctest.h"
#include "qsym/errors.hpp"
#include "qsym/rootsys.hpp"

using namespace qsym;

namespace {

RootSystem rs1(char s, int n) { return build_root_system({{s, n}}); }

const std::vector<SimpleType> kAllTypes = {
    {'A', 1}, {'A', 2}, {'A', 3}, {'A', 5}, {'B', 2}, {'B', 3}, {'B', 5}, {'C', 2}, {'C', 3},
    {'C', 5}, {'D', 3}, {'D', 4}, {'D', 5}, {'D', 6}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};

int expected_count(const SimpleType& t) {
    int n = t.rank;
    switch (t.series) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
        case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
        case 'F': return 24;
        default: return 6;
    }
}

}  // namespace

TEST_CASE("positive root counts match the classical formulas") {
    for (const auto& t : kAllTypes) {
        CAPTURE(t.str());
        CHECK(rs1(t.series, t.rank).num_positive() == expected_count(t));
    }
}

TEST_CASE("build_root_system examples") {
    auto a1 = rs1('A', 1);
    REQUIRE(a1.num_positive() == 1);
    CHECK(a1.positive_roots()[0] == IntVec{1});
    CHECK(rs1('A', 2).num_positive() == 3);
    auto g2 = rs1('G', 2);
    CHECK(g2.num_positive() == 6);
    IntVec h = g2.highest_root();
    std::multiset<int> hm(h.begin(), h.end());
    CHECK(hm == std::multiset<int>{3, 2});
    CHECK_THROWS_AS(rs1('D', 2), InvalidType);
    CHECK_THROWS_AS(rs1('E', 5), InvalidType);
    CHECK_THROWS_AS(rs1('B', 1), InvalidType);
}

TEST_CASE("Cartan matrix convention a_ij = 2(ai,aj)/(aj,aj)") {
    auto b2 = rs1('B', 2);
    CHECK(b2.cartan() == std::vector<IntVec>{{2, -2}, {-1, 2}});
    auto g2 = rs1('G', 2);
    CHECK(g2.cartan() == std::vector<IntVec>{{2, -1}, {-3, 2}});
    auto c3 = rs1('C', 3);
    CHECK(c3.cartan()[1][2] == -1);
    CHECK(c3.cartan()[2][1] == -2);
    for (const auto& t : kAllTypes) {
        auto rs = rs1(t.series, t.rank);
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j)
                CHECK(Rational(rs.cartan()[i][j]) ==
                      Rational(2) * rs.root_form()[i][j] / rs.root_form()[j][j]);
    }
}

TEST_CASE("is_root") {
    auto a1 = rs1('A', 1);
    CHECK(a1.is_root(WeightVec::from_ints({2})));
    CHECK(a1.is_root(WeightVec::from_ints({-2})));
    auto a2 = rs1('A', 2);
    CHECK_FALSE(a2.is_root(WeightVec::from_ints({1, 0})));
    auto r = a2.fund_to_root(IntVec{1, 0});
    CHECK(r == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});
    CHECK_FALSE(a2.is_root(WeightVec::from_ints({0, 0})));
    CHECK_FALSE(rs1('E', 6).is_root(WeightVec::from_ints({0, 0, 0, 0, 0, 0})));
    CHECK(a2.is_root(WeightVec::from_ints({1, 1})));  // highest root
}

TEST_CASE("cominuscule nodes") {
    CHECK(rs1('A', 4).cominuscule_nodes() == std::vector<int>{0, 1, 2, 3});
    CHECK(rs1('C', 2).cominuscule_nodes() == std::vector<int>{1});
    CHECK(rs1('G', 2).cominuscule_nodes().empty());
    CHECK(rs1('B', 4).cominuscule_nodes() == std::vector<int>{0});
    CHECK(rs1('C', 4).cominuscule_nodes() == std::vector<int>{3});
    CHECK(rs1('D', 5).cominuscule_nodes() == std::vector<int>{0, 3, 4});
    CHECK(rs1('E', 6).cominuscule_nodes() == std::vector<int>{0, 5});
    CHECK(rs1('E', 7).cominuscule_nodes() == std::vector<int>{6});
    CHECK(rs1('E', 8).cominuscule_nodes().empty());
    CHECK_THROWS_AS(build_root_system({{'A', 1}, {'A', 1}}).cominuscule_nodes(), NotSimple);
}

TEST_CASE("reflections preserve the form and the root set") {
    for (const auto& t : kAllTypes) {
        auto rs = rs1(t.series, t.rank);
        CAPTURE(t.str());
        for (const auto& b : rs.positive_roots()) {
            IntVec fb = rs.root_to_fund(b);
            for (int i = 0; i < rs.rank(); ++i) {
                IntVec s = b;
                s[i] -= fb[i];
                CHECK(rs.is_root_coords(s));
                CHECK(rs.form_roots(s, s) == rs.form_roots(b, b));
            }
        }
    }
}

TEST_CASE("long roots have squared length 2, fundamental weights are dual to coroots") {
    for (const auto& t : kAllTypes) {
        auto rs = rs1(t.series, t.rank);
        CAPTURE(t.str());
        Rational maxlen;
        for (const auto& b : rs.positive_roots()) maxlen = std::max(maxlen, rs.form_roots(b, b));
        CHECK(maxlen == Rational(2));
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j) {
                IntVec wi(rs.rank(), 0);
                wi[i] = 1;
                IntVec aj(rs.rank(), 0);
                aj[j] = 1;
                IntVec faj = rs.root_to_fund(aj);
                Rational v = Rational(2) * rs.form(wi, faj) / rs.root_len2(j);
                CHECK(v == Rational(i == j ? 1 : 0));
            }
    }
}

TEST_CASE("positive roots closed under sums") {
    for (const auto& t : kAllTypes) {
        auto rs = rs1(t.series, t.rank);
        std::set<IntVec> all(rs.positive_roots().begin(), rs.positive_roots().end());
        for (const auto& a : rs.positive_roots())
            for (const auto& b : rs.positive_roots()) {
                IntVec s = a;
                for (size_t k = 0; k < s.size(); ++k) s[k] += b[k];
                if (rs.is_root_coords(s)) CHECK(all.count(s) == 1);
            }
    }
}

TEST_CASE("type parsing and aliases") {
    CHECK(parse_type("so10") == SimpleType{'D', 5});
    CHECK(parse_type("so(7)") == SimpleType{'B', 3});
    CHECK(parse_type("sp4") == SimpleType{'C', 2});
    CHECK(parse_type("sl3") == SimpleType{'A', 2});
    CHECK(parse_type("e6") == SimpleType{'E', 6});
    CHECK_THROWS_AS(parse_type("sp5"), InvalidType);
    CHECK_THROWS_AS(parse_type("D2"), InvalidType);
    CHECK(canonical_type({'B', 2}) == SimpleType{'C', 2});
    CHECK(canonical_type({'D', 3}) == SimpleType{'A', 3});
}

TEST_CASE("product root systems are orthogonal sums") {
    auto rs = build_root_system({{'A', 1}, {'A', 2}});
    CHECK(rs.rank() == 3);
    CHECK(rs.num_positive() == 4);
    CHECK(rs.root_form()[0][1] == Rational(0));
    CHECK(rs.type_string() == "A1xA2");
}
