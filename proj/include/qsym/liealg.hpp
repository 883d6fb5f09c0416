#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qsym/rootsys.hpp"
#include "qsym/smat.hpp"
#include "qsym/tensor.hpp"

namespace qsym {

// Finite-dimensional algebra given by a bracket table on a labelled basis.
class StructureConstants {
public:
    StructureConstants() = default;
    StructureConstants(int dim, std::vector<std::string> labels);

    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }
    const SVec& bracket(int i, int j) const { return table_[i * dim_ + j]; }
    void set_bracket(int i, int j, SVec v) { table_[i * dim_ + j] = std::move(v); }
    SVec bracket(const SVec& a, const SVec& b) const;

    bool is_antisymmetric() const;
    bool jacobi_holds() const;
    // Adjoint matrix ad(x_i).
    SMat ad(int i) const;

    // [x (x) 1 + 1 (x) x, t] and products of tensors with brackets.
    TwoTensor ad_tensor(int x, const TwoTensor& t) const;

private:
    int dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<SVec> table_;
};

// How a non-simple root vector is produced from lower ones:
// E_b = [E_i, E_g] / (p + 1), F_b = [F_g, F_i] / (p + 1).
struct RootPath {
    int simple = -1;  // i, or -1 for simple roots
    int lower = -1;   // index of g = b - alpha_i
    int p = 0;        // largest p with g - p alpha_i a root
};

class LieAlgebra {
public:
    LieAlgebra(RootSystem rs, int central_dims);

    const RootSystem& roots() const { return rs_; }
    const StructureConstants& sc() const { return sc_; }
    int dim() const { return sc_.dim(); }
    int npos() const { return npos_; }
    int rank() const { return rs_.rank(); }
    int central_dims() const { return nz_; }
    int semisimple_dim() const { return 2 * npos_ + rs_.rank(); }

    int E(int root) const { return root; }
    int F(int root) const { return npos_ + root; }
    int H(int i) const { return 2 * npos_ + i; }
    int Z(int k) const { return 2 * npos_ + rs_.rank() + k; }
    bool is_E(int b) const { return b < npos_; }
    bool is_F(int b) const { return b >= npos_ && b < 2 * npos_; }
    bool is_cartan(int b) const { return b >= 2 * npos_; }
    int root_of(int b) const { return is_E(b) ? b : b - npos_; }
    int E_simple(int i) const;  // basis index of E_{alpha_i}
    int F_simple(int i) const { return npos_ + E_simple(i) ; }

    // Weight (fundamental coordinates) of a basis element under ad(h).
    const IntVec& weight(int b) const { return weights_[b]; }
    const std::vector<RootPath>& paths() const { return paths_; }

    // Normalized invariant form.
    const std::vector<std::vector<Rational>>& gram() const { return gram_; }
    Rational form(int a, int b) const { return gram_[a][b]; }

    const SVec& bracket(int a, int b) const { return sc_.bracket(a, b); }
    // Coroot H_b of a positive root as a vector in the H_i.
    SVec coroot(int root) const;

private:
    RootSystem rs_;
    int npos_ = 0;
    int nz_ = 0;
    StructureConstants sc_;
    std::vector<IntVec> weights_;
    std::vector<RootPath> paths_;
    std::vector<std::vector<Rational>> gram_;
    std::vector<int> simple_index_;
};

LieAlgebra chevalley_basis(const RootSystem& rs, int central_dims = 0);

// Casimir element c = sum x_i (x) x^i and its Cartan part c0.
struct CasimirResult {
    TwoTensor c;
    TwoTensor c0;
};
CasimirResult casimir(const LieAlgebra& L);

// Simple-generator action of an irreducible highest-weight module, built from
// Cartan data only.
struct RawModule {
    int dim = 0;
    std::vector<IntVec> weights;  // per basis vector, fundamental coordinates
    std::vector<SMat> e, f;       // simple raising / lowering operators
};
RawModule build_raw_module(const RootSystem& rs, const IntVec& lambda);

// Representation of a LieAlgebra: one matrix per basis element.
class Module {
public:
    Module() = default;
    Module(const LieAlgebra& L, RawModule raw, IntVec highest, std::vector<Rational> central_scalars = {});

    int dim() const { return dim_; }
    const IntVec& highest_weight() const { return highest_; }
    const std::vector<IntVec>& weights() const { return weights_; }
    const SMat& action(int b) const { return act_[b]; }
    const std::vector<SMat>& actions() const { return act_; }
    // Checks [rho(x), rho(y)] = rho([x, y]) for every basis pair.
    bool is_representation(const LieAlgebra& L) const;

private:
    int dim_ = 0;
    IntVec highest_;
    std::vector<IntVec> weights_;
    std::vector<SMat> act_;
};

Module highest_weight_module(const LieAlgebra& L, const WeightVec& lambda,
                             std::vector<Rational> central_scalars = {});
Module highest_weight_module(const LieAlgebra& L, const IntVec& lambda);
Module adjoint_module(const LieAlgebra& L);

// Independent oracle: Weyl dimension formula and Freudenthal multiplicities.
struct WeylData {
    long long dim = 0;
    std::map<IntVec, int> multiplicities;  // all weights, fundamental coordinates
};
long long weyl_dimension(const RootSystem& rs, const IntVec& lambda);
WeylData weyl_dimension_and_weights(const RootSystem& rs, const WeightVec& lambda);
WeylData weyl_dimension_and_weights(const RootSystem& rs, const IntVec& lambda);

// Parabolic at one node of a simple root system.
struct RadicalInfo {
    std::vector<SimpleType> levi_type;
    std::vector<std::vector<int>> levi_nodes;  // per component: Bourbaki index -> ambient node
    IntVec lambda_levi;                         // concatenated over components
    bool abelian = false;
    int radical_dim = 0;
};
RadicalInfo abelian_radical_module(const RootSystem& ambient, int node);

// Dynkin subdiagram identification: connected components of the given nodes,
// each with its canonical simple type and a Bourbaki-ordered node list.
std::vector<std::pair<SimpleType, std::vector<int>>> identify_subdiagram(const RootSystem& rs,
                                                                         const std::vector<int>& nodes);
// All Dynkin diagram automorphisms of a simple type, as node permutations.
std::vector<std::vector<int>> diagram_automorphisms(const SimpleType& t);

}  // namespace qsym
