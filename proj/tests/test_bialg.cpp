#include "doctest.h"
#include "qsym/bialg.hpp"
#include "qsym/errors.hpp"

using namespace qsym;

namespace {

LieAlgebra lie(char s, int n, int z = 0) { return chevalley_basis(build_root_system({{s, n}}), z); }

// The F (x) E / <E, F> part shared by every BD r-matrix.
TwoTensor bd_main_part(const LieAlgebra& L) {
    TwoTensor t;
    for (int k = 0; k < L.npos(); ++k) t.add(L.F(k), L.E(k), L.form(L.E(k), L.F(k)).inverse());
    return t;
}

}  // namespace

TEST_CASE("standard r-matrix of sl2") {
    auto L = lie('A', 1);
    int E = L.E(0), F = L.F(0), H = L.H(0);
    TwoTensor expect;
    expect.add(E, F, 1);
    expect.add(H, H, Rational(1, 4));
    auto r = standard_r(L);
    CHECK(r == expect);
    auto rep = check_cybe(L, r);
    CHECK(rep.cybe_holds);
    CHECK(rep.symmetric_part_invariant);
    CHECK(cybe_in_tensor_cube(L.sc(), r));
    CHECK(r + r.op() == casimir(L).c);

    auto d = cobracket_from_r(L, r);
    TwoTensor dE;
    dE.add(H, E, Rational(1, 2));
    dE.add(E, H, Rational(-1, 2));
    CHECK(d(E) == dE);
    CHECK(d(H).is_zero());
}

TEST_CASE("standard r-matrix satisfies CYBE for several types") {
    for (auto t : std::vector<SimpleType>{{'A', 2}, {'B', 2}, {'A', 3}, {'G', 2}}) {
        CAPTURE(t.str());
        auto L = lie(t.series, t.rank);
        auto r = standard_r(L);
        CHECK(check_cybe(L, r).cybe_holds);
        CHECK(r + r.op() == casimir(L).c);
        CHECK(check_lie_bialgebra(L.sc(), cobracket_from_r(L, r)).all());
    }
    auto L = lie('B', 3);
    auto spin = highest_weight_module(L, IntVec{0, 0, 1});
    CHECK(check_cybe(L, standard_r(L), spin).cybe_holds);
}

TEST_CASE("operator and tensor-cube CYBE routes agree") {
    auto L = lie('A', 2);
    auto r = standard_r(L);
    TwoTensor bad = r;
    bad.add(L.H(0), L.H(0), Rational(1, 5));
    CHECK(cybe_in_tensor_cube(L.sc(), r));
    CHECK_FALSE(cybe_in_tensor_cube(L.sc(), bad));
    CHECK_FALSE(check_cybe(L, bad).cybe_holds);
}

TEST_CASE("CYBE needs a faithful module") {
    auto L = lie('A', 1, 1);
    auto triv = highest_weight_module(L, WeightVec::from_ints({0}), {Rational(0)});
    CHECK_THROWS_AS(check_cybe(L, standard_r(L), triv), NotFaithful);
}

TEST_CASE("BD triple enumeration") {
    auto count = [](char s, int n) { return enumerate_bd_triples(build_root_system({{s, n}})).size(); };
    CHECK(count('A', 1) == 1);
    CHECK(count('A', 2) == 3);
    CHECK(count('G', 2) == 1);
    CHECK(count('B', 2) == 1);
    auto a3 = enumerate_bd_triples(build_root_system({{'A', 3}}));
    CHECK(a3.front().empty());
    for (const auto& t : a3) CHECK(is_valid_triple(build_root_system({{'A', 3}}), t));
    // 1->2->3 is a chain, 1->2, 2->1 is a cycle.
    auto rs = build_root_system({{'A', 3}});
    CHECK(is_valid_triple(rs, BDTriple{{0, 1}, {1, 2}}));
    CHECK_FALSE(is_valid_triple(rs, BDTriple{{0, 1}, {1, 0}}));
    CHECK_FALSE(is_valid_triple(rs, BDTriple{{0, 2}, {1, 0}}));  // breaks orthogonality
    CHECK(a3.size() == 9);  // 1 empty, 6 single arrows, 1->2->3, 3->2->1
}

TEST_CASE("BD r-matrix for the empty triple") {
    auto L = lie('A', 1);
    auto res = bd_r_matrix(L, BDTriple{});
    TwoTensor expect;
    expect.add(L.F(0), L.E(0), 1);
    expect.add(L.H(0), L.H(0), Rational(1, 4));
    CHECK(res.r == expect);
    CHECK(res.freedom.empty());
    CHECK(lie('A', 2).dim() == 8);
    CHECK(bd_r_matrix(lie('A', 2), BDTriple{}).freedom.size() == 1);
}

TEST_CASE("all BD r-matrices satisfy CYBE with the Casimir as symmetric part") {
    for (auto t : std::vector<SimpleType>{{'A', 2}, {'A', 3}, {'A', 4}, {'D', 4}, {'B', 2}, {'G', 2}}) {
        auto L = lie(t.series, t.rank);
        auto c = casimir(L).c;
        IntVec w(t.rank, 0);
        w[0] = 1;
        auto V = highest_weight_module(L, w);  // faithful
        for (const auto& bt : enumerate_bd_triples(L.roots())) {
            CAPTURE(t.str());
            CAPTURE(bt.str());
            auto res = bd_r_matrix(L, bt);
            CHECK(res.r + res.r.op() == c);
            CHECK(check_cybe(L, res.r, V).cybe_holds);
            CHECK(cybe_in_tensor_cube(L.sc(), res.r));
            for (size_t k = 0; k < res.freedom.size(); ++k) CHECK(cybe_in_tensor_cube(L.sc(), res.with_freedom(k)));
        }
    }
}

TEST_CASE("BD cross terms: sl3 with 1->2") {
    auto L = lie('A', 2);
    BDTriple t{{0}, {1}};
    auto res = bd_r_matrix(L, t);
    REQUIRE(res.cross_pairs.size() == 1);
    CHECK(res.cross_pairs[0] == std::make_pair(0, 1));
    CHECK(res.freedom.empty());
    CHECK(check_cybe(L, res.r).cybe_holds);
    // Reversing the orientation of the cross term breaks CYBE.
    TwoTensor cross = res.r - res.r0 - bd_main_part(L);
    CHECK_FALSE(cross.is_zero());
    CHECK(cross.is_antisymmetric());
    // The other orientation, F_b ^ E_a with b = tau(a), breaks CYBE.
    Rational c = L.form(L.E(0), L.F(0)).inverse();
    TwoTensor other;
    other.add(L.F(1), L.E(0), c);
    other.add(L.E(0), L.F(1), -c);
    CHECK_FALSE(check_cybe(L, res.r0 + bd_main_part(L) + other).cybe_holds);
}

TEST_CASE("invalid BD triples are rejected") {
    auto L = lie('A', 2);
    CHECK_THROWS_AS(bd_r_matrix(L, BDTriple{{0, 1}, {1, 0}}), InvalidTriple);
    CHECK_THROWS_AS(enumerate_bd_triples(build_root_system({{'A', 1}, {'A', 1}})), NotSimple);
}

TEST_CASE("perturbed r breaks CYBE and co-Jacobi") {
    auto L = lie('A', 1);
    TwoTensor r;
    r.add(L.E(0), L.F(0), 1);
    r.add(L.H(0), L.H(0), Rational(1, 3));
    CHECK_FALSE(check_cybe(L, r).cybe_holds);
    CHECK_FALSE(check_cybe(L, r).symmetric_part_invariant);
    CHECK_THROWS_AS(cobracket_from_r(L, r), NotAntisymmetric);
    // Skew part alone is fine for the cobracket but fails CYBE once the Casimir part is wrong.
    TwoTensor skew = r.minus_part();
    auto d = cobracket_from_r(L, skew);
    CHECK(check_lie_bialgebra(L.sc(), d).antisym);
    auto d3 = scaled(cobracket_from_r(L, standard_r(L)), Rational(3));
    CHECK(check_lie_bialgebra(L.sc(), d3).all());
}

TEST_CASE("corrupted cobrackets are detected") {
    auto L = lie('A', 2);
    auto d = cobracket_from_r(L, standard_r(L));
    auto bad = d;
    bad.delta[L.E(0)].add(L.E(1), L.F(1), 1);
    bad.delta[L.E(0)].add(L.F(1), L.E(1), -1);
    auto rep = check_lie_bialgebra(L.sc(), bad);
    CHECK(rep.antisym);
    CHECK_FALSE(rep.cocycle);
    auto asym = d;
    asym.delta[L.H(0)].add(L.E(0), L.E(1), 1);
    CHECK_FALSE(check_lie_bialgebra(L.sc(), asym).antisym);
}

TEST_CASE("Drinfeld double of sl2 and sl3") {
    for (auto t : std::vector<SimpleType>{{'A', 1}, {'A', 2}}) {
        auto L = lie(t.series, t.rank);
        auto d = cobracket_from_r(L, standard_r(L));
        auto D = drinfeld_double(L.sc(), d);
        CHECK(D.D.dim() == 2 * L.dim());
        CHECK(D.jacobi_holds);
        CHECK(D.canonical_r_cybe);
        CHECK(D.canonical_r_symmetric_invariant);
        CHECK(D.manin_triple);
        // The double of the standard structure is isomorphic to g + g.
        CHECK(D.center_dim == 0);
        CHECK(D.killing_nondegenerate);
    }
    // Scaling delta keeps everything but the canonical element.
    auto L = lie('A', 1);
    auto D2 = drinfeld_double(L.sc(), scaled(cobracket_from_r(L, standard_r(L)), Rational(2)));
    CHECK(D2.jacobi_holds);
    CHECK(D2.manin_triple);
    // A cobracket failing the cocycle condition gives a bracket failing Jacobi.
    auto bad = cobracket_from_r(L, standard_r(L));
    bad.delta[L.H(0)].add(L.E(0), L.F(0), 1);
    bad.delta[L.H(0)].add(L.F(0), L.E(0), -1);
    CHECK_FALSE(drinfeld_double(L.sc(), bad).jacobi_holds);
}

TEST_CASE("semidirect sl2 x C^2") {
    auto L = lie('A', 1);
    auto V = highest_weight_module(L, IntVec{1});
    auto S = make_semidirect(L, V);
    CHECK(S.dim() == 5);
    CHECK(S.sc.jacobi_holds());

    // Skew part of the standard r: right shape, but not a CYBE solution, so co-Jacobi fails on V.
    auto d = cobracket_from_r(S, standard_r(L).minus_part());
    auto rep = check_lie_bialgebra(S, d);
    CHECK(rep.antisym);
    CHECK(rep.cocycle);
    CHECK(rep.g_subbialgebra);
    CHECK(rep.v_shape);
    CHECK_FALSE(rep.co_jacobi);
    CHECK_FALSE(d(3).is_zero());

    // A skew CYBE solution (Jordanian r = H ^ E) gives a semidirect bialgebra.
    TwoTensor j;
    j.add(L.H(0), L.E(0), 1);
    j.add(L.E(0), L.H(0), -1);
    CHECK(check_cybe(L, j).cybe_holds);
    auto dj = cobracket_from_r(S, j);
    CHECK(check_lie_bialgebra(S, dj).all());
    CHECK_FALSE(dj(3).is_zero());
}

TEST_CASE("parabolic constructions") {
    auto a2 = parabolic_semidirect(build_root_system({{'A', 2}}), 0);
    CHECK(a2.ok());
    CHECK(a2.S.g_dim == 4);
    CHECK(a2.S.dim() == 6);
    auto c2 = parabolic_semidirect(build_root_system({{'C', 2}}), 1);
    CHECK(c2.ok());
    CHECK(c2.lambda_levi == IntVec{2});
    auto a3 = parabolic_semidirect(build_root_system({{'A', 3}}), 1);
    CHECK(a3.ok());
    auto a4 = parabolic_semidirect(build_root_system({{'A', 4}}), 0, BDTriple{{1}, {3}});
    CHECK(a4.ok());
    CHECK_THROWS_AS(parabolic_semidirect(build_root_system({{'C', 3}}), 0), NotCominuscule);
    CHECK_THROWS_AS(parabolic_semidirect(build_root_system({{'A', 3}}), 0, BDTriple{{0}, {2}}), TripleTouchesNode);
}
