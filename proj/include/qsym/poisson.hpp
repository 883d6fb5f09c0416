#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsym/liealg.hpp"

namespace qsym {

// Linear operator on V (x) V. Basis e_a (x) e_b has index a * dim + b.
struct PairOperator {
    int dim = 0;
    std::vector<SVec> img;  // img[a * dim + b] = image of e_a (x) e_b

    const SVec& apply(int a, int b) const { return img[a * dim + b]; }
    Rational entry(int i, int j, int a, int b) const { return sparse_get(apply(a, b), i * dim + j); }
    bool is_zero() const;
    // P o flip = -flip o P
    bool is_skew() const;
    SMat matrix() const;
};

// sum over terms a (x) b of t of rho(a) (x) rho(b).
PairOperator pair_operator(const TwoTensor& t, const std::vector<SMat>& rho, int dim);
PairOperator r_minus_operator(const LieAlgebra& L, const TwoTensor& r, const Module& V);
PairOperator r_plus_operator(const LieAlgebra& L, const TwoTensor& r, const Module& V);

// Operator of P acting on two legs of V^{(x)3}; index (a * dim + b) * dim + c.
SMat embed_legs(const PairOperator& P, int leg1, int leg2);
// [[P, P]] = [P12, P13] + [P12, P23] + [P13, P23] as a dim^3 square matrix.
SMat schouten_square(const PairOperator& P);

struct SchoutenOptions {
    // Only test the Lambda^3 V basis vectors whose total weight is dominant.
    // Valid when [[P, P]] is equivariant (P from r^- with invariant r^+).
    const std::vector<IntVec>* weights = nullptr;
    int threads = 1;
};
struct SchoutenReport {
    bool vanishes_raw = true;
    bool vanishes_sym_projected = true;
    long long checked = 0;  // Lambda^3 V basis vectors tested
};
SchoutenReport schouten_criterion(const PairOperator& P, const SchoutenOptions& opt = {});

// Element of S^d V: sorted index tuples -> coefficient.
struct PolyElem {
    std::map<std::vector<int>, Rational> terms;

    void add(std::vector<int> mono, const Rational& c);
    bool is_zero() const { return terms.empty(); }
    std::string str(const std::vector<std::string>& names = {}) const;
    friend bool operator==(const PolyElem& a, const PolyElem& b) { return a.terms == b.terms; }
};

struct BracketTable {
    int dim = 0;
    std::map<std::pair<int, int>, PolyElem> br;  // i < j, nonzero entries only
    PolyElem get(int i, int j) const;            // any i, j, antisymmetric
};
BracketTable generator_brackets(const PairOperator& P);
BracketTable generator_brackets(const LieAlgebra& L, const TwoTensor& r, const Module& V);

struct JacobiOptions {
    const std::vector<IntVec>* weights = nullptr;  // as in SchoutenOptions
    int threads = 1;
};
bool jacobi_oracle(const BracketTable& B, const JacobiOptions& opt = {});

// [c12, c23], [c23, c13], [c13, c12] with c = r^+, and [[r^-, r^-]], on V^{(x)3}.
struct CasimirCommutators {
    SMat c12_c23, c23_c13, c13_c12, schouten;
    bool all_equal() const;
    bool skew_under_flips() const;
};
CasimirCommutators casimir_commutators(const LieAlgebra& L, const TwoTensor& r, const Module& V);

// [[r^-, r^-]] commutes with the diagonal action of every basis element.
bool schouten_equivariant(const LieAlgebra& L, const TwoTensor& r, const Module& V);

}  // namespace qsym
