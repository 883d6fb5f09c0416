#include <algorithm>

#include "doctest.h"
#include "qsym/errors.hpp"
#include "qsym/liealg.hpp"

using namespace qsym;

namespace {

LieAlgebra lie(char s, int n, int z = 0) { return chevalley_basis(build_root_system({{s, n}}), z); }

SVec unit(int i, const Rational& c = Rational(1)) { return SVec{{i, c}}; }

// Casimir operator sum c_ab rho(a) rho(b) on a module.
SMat casimir_operator(const CasimirResult& c, const Module& m) {
    SMat out(m.dim(), m.dim());
    for (const auto& [k, v] : c.c.terms()) out = out + (m.action(k.first) * m.action(k.second)).scaled(v);
    return out;
}

std::map<IntVec, int> weight_multiset(const Module& m) {
    std::map<IntVec, int> out;
    for (const auto& w : m.weights()) out[w] += 1;
    return out;
}

}  // namespace

TEST_CASE("sl2 Chevalley relations") {
    auto L = lie('A', 1);
    REQUIRE(L.dim() == 3);
    int E = L.E(0), F = L.F(0), H = L.H(0);
    CHECK(L.bracket(E, F) == unit(H));
    CHECK(L.bracket(H, E) == unit(E, 2));
    CHECK(L.bracket(H, F) == unit(F, -2));
    CHECK(L.sc().label(E) == "E(1)");
}

TEST_CASE("sl3 structure constants are +-1 on simple root pairs") {
    auto L = lie('A', 2);
    CHECK(L.dim() == 8);
    auto v = L.bracket(L.E_simple(0), L.E_simple(1));
    REQUIRE(v.size() == 1);
    CHECK(L.roots().positive_roots()[L.root_of(v[0].first)] == IntVec{1, 1});
    CHECK((v[0].second == Rational(1) || v[0].second == Rational(-1)));
}

TEST_CASE("Jacobi, antisymmetry, integrality and invariance for several types") {
    for (auto t : std::vector<SimpleType>{{'A', 1}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}}) {
        CAPTURE(t.str());
        auto L = lie(t.series, t.rank);
        CHECK(L.sc().is_antisymmetric());
        CHECK(L.sc().jacobi_holds());
        for (int a = 0; a < L.dim(); ++a)
            for (int b = 0; b < L.dim(); ++b)
                for (const auto& [k, c] : L.bracket(a, b)) CHECK(c.is_integer());
        for (int k = 0; k < L.npos(); ++k) CHECK(L.bracket(L.E(k), L.F(k)) == L.coroot(k));
        // <[x,y],z> = <x,[y,z]>
        for (int x = 0; x < L.dim(); ++x)
            for (int y = 0; y < L.dim(); ++y)
                for (int z = 0; z < L.dim(); ++z) {
                    Rational lhs, rhs;
                    for (const auto& [k, c] : L.bracket(x, y)) lhs += c * L.form(k, z);
                    for (const auto& [k, c] : L.bracket(y, z)) rhs += c * L.form(x, k);
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("G2 Jacobi on all 364 basis triples") {
    auto L = lie('G', 2);
    CHECK(L.dim() == 14);
    int triples = 0;
    for (int i = 0; i < 14; ++i)
        for (int j = i + 1; j < 14; ++j)
            for (int k = j + 1; k < 14; ++k) ++triples;
    CHECK(triples == 364);
    CHECK(L.sc().jacobi_holds());
}

TEST_CASE("central extension") {
    auto L = lie('A', 1, 1);
    CHECK(L.dim() == 4);
    for (int b = 0; b < 4; ++b) CHECK(L.bracket(L.Z(0), b).empty());
    CHECK(L.sc().jacobi_holds());
}

TEST_CASE("Casimir of sl2") {
    auto L = lie('A', 1);
    auto c = casimir(L);
    TwoTensor expect;
    expect.add(L.E(0), L.F(0), 1);
    expect.add(L.F(0), L.E(0), 1);
    expect.add(L.H(0), L.H(0), Rational(1, 2));
    CHECK(c.c == expect);
    TwoTensor c0;
    c0.add(L.H(0), L.H(0), Rational(1, 2));
    CHECK(c.c0 == c0);
    CHECK(c.c.is_symmetric());
    for (int x = 0; x < 3; ++x) CHECK(L.sc().ad_tensor(x, c.c).is_zero());
}

TEST_CASE("Casimir invariance and eigenvalue (lambda, lambda + 2 rho)") {
    for (auto t : std::vector<SimpleType>{{'A', 2}, {'B', 3}, {'C', 2}, {'G', 2}}) {
        auto L = lie(t.series, t.rank);
        auto c = casimir(L);
        for (int x = 0; x < L.dim(); ++x) CHECK(L.sc().ad_tensor(x, c.c).is_zero());
        IntVec w(L.rank(), 0);
        w[0] = 1;
        auto m = highest_weight_module(L, w);
        IntVec l2r = w;
        for (auto& x : l2r) x += 0;
        IntVec two_rho(L.rank(), 2);
        IntVec s = w;
        for (int i = 0; i < L.rank(); ++i) s[i] += two_rho[i];
        Rational ev = L.roots().form(w, s);
        CHECK(casimir_operator(c, m) == SMat::identity(m.dim(), ev));
    }
    auto L = lie('A', 2);
    auto m = highest_weight_module(L, IntVec{1, 0});
    CHECK(casimir_operator(casimir(L), m) == SMat::identity(3, Rational(8, 3)));
}

TEST_CASE("highest weight modules: examples") {
    auto L = lie('A', 1);
    auto m = highest_weight_module(L, IntVec{1});
    CHECK(m.dim() == 2);
    CHECK(m.action(L.E(0)).nnz() == 1);
    CHECK(m.action(L.E(0)).at(0, 1) != Rational(0));
    CHECK(highest_weight_module(lie('A', 2), IntVec{1, 1}).dim() == 8);
    CHECK(highest_weight_module(lie('D', 5), IntVec{0, 0, 0, 0, 1}).dim() == 16);
    CHECK_THROWS_AS(highest_weight_module(L, IntVec{-1}), NotDominant);
}

TEST_CASE("Weyl dimension examples") {
    auto a1 = build_root_system({{'A', 1}});
    for (int m = 0; m < 8; ++m) CHECK(weyl_dimension(a1, IntVec{m}) == m + 1);
    CHECK(weyl_dimension(build_root_system({{'E', 6}}), IntVec{1, 0, 0, 0, 0, 0}) == 27);
    CHECK(weyl_dimension(build_root_system({{'G', 2}}), IntVec{1, 0}) == 7);
    CHECK(weyl_dimension(build_root_system({{'E', 7}}), IntVec{0, 0, 0, 0, 0, 0, 1}) == 56);
    CHECK(weyl_dimension(build_root_system({{'F', 4}}), IntVec{0, 0, 0, 1}) == 26);
    auto d = weyl_dimension_and_weights(build_root_system({{'G', 2}}), IntVec{1, 0});
    CHECK(d.multiplicities.at(IntVec{0, 0}) == 1);
    auto adj = weyl_dimension_and_weights(build_root_system({{'B', 3}}), IntVec{0, 1, 0});
    CHECK(adj.dim == 21);
    CHECK(adj.multiplicities.at(IntVec{0, 0, 0}) == 3);
}

TEST_CASE("constructed modules agree with Weyl and Freudenthal and satisfy the relations") {
    struct Case {
        SimpleType t;
        IntVec w;
    };
    std::vector<Case> cases = {{{'A', 1}, {4}},          {{'A', 2}, {2, 1}},       {{'A', 3}, {0, 1, 0}},
                               {{'B', 2}, {1, 1}},       {{'C', 3}, {0, 1, 0}},    {{'B', 3}, {0, 0, 1}},
                               {{'G', 2}, {1, 0}},       {{'G', 2}, {0, 1}},       {{'D', 4}, {0, 1, 0, 0}},
                               {{'F', 4}, {0, 0, 0, 1}}, {{'A', 1}, {0}}};
    for (const auto& c : cases) {
        CAPTURE(c.t.str());
        auto L = lie(c.t.series, c.t.rank);
        auto m = highest_weight_module(L, c.w);
        auto oracle = weyl_dimension_and_weights(L.roots(), c.w);
        CHECK(m.dim() == oracle.dim);
        CHECK(weight_multiset(m) == oracle.multiplicities);
        for (int i = 0; i < L.rank(); ++i)
            for (int j = 0; j < L.rank(); ++j) {
                SMat lhs = commutator(m.action(L.E_simple(i)), m.action(L.F_simple(j)));
                SMat rhs = i == j ? m.action(L.H(i)) : SMat(m.dim(), m.dim());
                CHECK(lhs == rhs);
            }
        if (m.dim() <= 27) CHECK(m.is_representation(L));
    }
}

TEST_CASE("adjoint module is a representation") {
    auto L = lie('B', 2);
    auto ad = adjoint_module(L);
    CHECK(ad.is_representation(L));
}

TEST_CASE("abelian radical modules") {
    auto a3 = abelian_radical_module(build_root_system({{'A', 3}}), 1);
    CHECK(a3.abelian);
    CHECK(a3.radical_dim == 4);
    REQUIRE(a3.levi_type.size() == 2);
    CHECK(a3.levi_type[0] == SimpleType{'A', 1});
    CHECK(a3.levi_type[1] == SimpleType{'A', 1});
    CHECK(a3.lambda_levi == IntVec{1, 1});

    auto c2n1 = abelian_radical_module(build_root_system({{'C', 2}}), 0);
    CHECK_FALSE(c2n1.abelian);
    CHECK(c2n1.radical_dim == 3);

    auto c2n2 = abelian_radical_module(build_root_system({{'C', 2}}), 1);
    CHECK(c2n2.abelian);
    CHECK(c2n2.radical_dim == 3);
    CHECK(c2n2.levi_type == std::vector<SimpleType>{{'A', 1}});
    CHECK(c2n2.lambda_levi == IntVec{2});

    auto e6 = abelian_radical_module(build_root_system({{'E', 6}}), 0);
    CHECK(e6.levi_type == std::vector<SimpleType>{{'D', 5}});
    CHECK(e6.radical_dim == 16);

    for (auto t : std::vector<SimpleType>{{'A', 4}, {'B', 3}, {'C', 4}, {'D', 5}, {'E', 6}, {'E', 7}, {'F', 4}, {'G', 2}}) {
        auto rs = build_root_system({t});
        auto cm = rs.cominuscule_nodes();
        for (int i = 0; i < rs.rank(); ++i)
            CHECK(abelian_radical_module(rs, i).abelian == (std::find(cm.begin(), cm.end(), i) != cm.end()));
    }
}

TEST_CASE("diagram automorphisms") {
    CHECK(diagram_automorphisms({'A', 3}).size() == 2);
    CHECK(diagram_automorphisms({'D', 4}).size() == 6);
    CHECK(diagram_automorphisms({'D', 5}).size() == 2);
    CHECK(diagram_automorphisms({'E', 6}).size() == 2);
    CHECK(diagram_automorphisms({'B', 3}).size() == 1);
    CHECK(diagram_automorphisms({'G', 2}).size() == 1);
}
