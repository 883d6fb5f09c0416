#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsym/liealg.hpp"

namespace qsym {

// r = sum_b (b,b)/2 E_b (x) F_b + c0/2
TwoTensor standard_r(const LieAlgebra& L);

struct BDTriple {
    std::vector<int> delta1;  // sorted simple nodes
    std::vector<int> delta2;  // tau(delta1[k]) = delta2[k]
    int tau(int node) const;  // -1 if node not in delta1
    bool empty() const { return delta1.empty(); }
    std::string str() const;  // 1-based, e.g. "{1->2}"
};

bool is_valid_triple(const RootSystem& rs, const BDTriple& t);
std::vector<BDTriple> enumerate_bd_triples(const RootSystem& rs);

struct BDResult {
    TwoTensor r;                        // with the particular r0
    TwoTensor r0;                       // c0/2 + skew correction
    std::vector<TwoTensor> freedom;     // skew h(x)h directions keeping all constraints
    std::vector<std::pair<int, int>> cross_pairs;  // (alpha, beta) root indices with alpha < beta
    TwoTensor with_freedom(size_t k) const { return r + freedom[k]; }
};
BDResult bd_r_matrix(const LieAlgebra& L, const BDTriple& t);

// tau extended to root vectors of the subsystem spanned by delta1 (E and F).
SVec bd_tau_image(const LieAlgebra& L, const BDTriple& t, int basis_element);

struct CYBEReport {
    bool cybe_holds = false;
    bool symmetric_part_invariant = false;
};
// Operators on V^{(x)3} from the module matrices rho(basis).
CYBEReport check_cybe(const StructureConstants& sc, const TwoTensor& r, const std::vector<SMat>& rho);
CYBEReport check_cybe(const LieAlgebra& L, const TwoTensor& r, const Module& V);
CYBEReport check_cybe(const LieAlgebra& L, const TwoTensor& r);  // adjoint module
// CYB(r) in A^{(x)3} from structure constants alone.
bool cybe_in_tensor_cube(const StructureConstants& sc, const TwoTensor& r);

// Lie algebra g + V with V an abelian ideal; g occupies the first g_dim basis slots.
struct SemidirectAlgebra {
    StructureConstants sc;
    int g_dim = 0;
    int dim() const { return sc.dim(); }
    bool in_g(int b) const { return b < g_dim; }
};
SemidirectAlgebra make_semidirect(const LieAlgebra& L, const Module& V);

struct Cobracket {
    std::vector<TwoTensor> delta;  // per carrier basis element
    const TwoTensor& operator()(int x) const { return delta[x]; }
};

Cobracket cobracket_from_r(const StructureConstants& carrier, const TwoTensor& r);
Cobracket cobracket_from_r(const LieAlgebra& L, const TwoTensor& r);
Cobracket cobracket_from_r(const SemidirectAlgebra& S, const TwoTensor& r);
Cobracket scaled(const Cobracket& d, const Rational& s);

struct BialgebraReport {
    bool antisym = false;
    bool co_jacobi = false;
    bool cocycle = false;
    bool g_subbialgebra = true;  // semidirect carriers only
    bool v_shape = true;         // semidirect carriers only
    bool all() const { return antisym && co_jacobi && cocycle && g_subbialgebra && v_shape; }
};
BialgebraReport check_lie_bialgebra(const StructureConstants& sc, const Cobracket& d);
BialgebraReport check_lie_bialgebra(const SemidirectAlgebra& S, const Cobracket& d);

struct DoubleResult {
    StructureConstants D;  // basis: e_1..e_n, e^1..e^n
    TwoTensor r_canonical;  // sum e_i (x) e^i
    bool jacobi_holds = false;
    bool killing_nondegenerate = false;
    int center_dim = -1;
    bool canonical_r_cybe = false;
    bool canonical_r_symmetric_invariant = false;
    bool manin_triple = false;
};
DoubleResult drinfeld_double(const StructureConstants& L, const Cobracket& d);

struct ParabolicResult {
    SemidirectAlgebra S;            // g = Levi (all Cartan + Levi root vectors), V = radical
    Cobracket delta;
    std::vector<int> ambient_index;  // S basis -> ambient basis
    bool closure = false;            // delta(p) in p ^ p
    BialgebraReport report;
    std::vector<SimpleType> levi_type;
    IntVec lambda_levi;
    bool ok() const { return closure && report.all(); }
};
ParabolicResult parabolic_semidirect(const RootSystem& ambient, int node, const BDTriple& t = {});

}  // namespace qsym
