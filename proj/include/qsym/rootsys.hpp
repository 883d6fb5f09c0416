#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsym/rational.hpp"

namespace qsym {

struct SimpleType {
    char series = 'A';
    int rank = 1;
    std::string str() const { return std::string(1, series) + std::to_string(rank); }
    friend bool operator==(const SimpleType& a, const SimpleType& b) {
        return a.series == b.series && a.rank == b.rank;
    }
    friend bool operator<(const SimpleType& a, const SimpleType& b) {
        return a.series != b.series ? a.series < b.series : a.rank < b.rank;
    }
};

// Parse "A2", "so10", "sp4", "sl3", "G2", ... into a simple type.
SimpleType parse_type(const std::string& s);
// Canonical representative under the coincidences B2 = C2, D3 = A3.
SimpleType canonical_type(const SimpleType& t);

using IntVec = std::vector<int>;

// Weight in fundamental-weight coordinates.
class WeightVec {
public:
    WeightVec() = default;
    explicit WeightVec(std::vector<Rational> c) : coords(std::move(c)) {}
    static WeightVec from_ints(const IntVec& v);
    static WeightVec parse(const std::string& s);  // "0,0,1"

    std::vector<Rational> coords;

    size_t size() const { return coords.size(); }
    bool is_integral() const;
    IntVec to_ints() const;  // requires is_integral()
    std::string str() const;
    friend bool operator==(const WeightVec& a, const WeightVec& b) { return a.coords == b.coords; }
};

class RootSystem {
public:
    explicit RootSystem(std::vector<SimpleType> components);

    const std::vector<SimpleType>& components() const { return comps_; }
    int rank() const { return rank_; }
    bool is_simple() const { return comps_.size() == 1; }
    // Component index and offset of each node.
    int component_of(int node) const { return comp_of_[node]; }
    int component_offset(int c) const { return offsets_[c]; }

    // a_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
    const std::vector<IntVec>& cartan() const { return cartan_; }
    // (alpha_i, alpha_j), normalized per component so long roots have length^2 = 2.
    const std::vector<std::vector<Rational>>& root_form() const { return bform_; }

    // Positive roots in simple-root coordinates, sorted by height then lexicographically.
    const std::vector<IntVec>& positive_roots() const { return pos_; }
    int num_positive() const { return static_cast<int>(pos_.size()); }
    // Index of a positive root (root coordinates) or -1.
    int root_index(const IntVec& root_coords) const;
    // Highest root of a simple component (root coordinates over the full rank).
    IntVec highest_root(int component = 0) const;

    // Conversions. Root coords -> fundamental coords is integral.
    IntVec root_to_fund(const IntVec& root_coords) const;
    std::vector<Rational> fund_to_root(const std::vector<Rational>& fund) const;
    std::vector<Rational> fund_to_root(const IntVec& fund) const;

    // Invariant form on weights given in fundamental coordinates.
    Rational form(const IntVec& a, const IntVec& b) const;
    Rational form(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
    Rational form_roots(const IntVec& a, const IntVec& b) const;  // root coordinates

    // (alpha_i, alpha_i)
    const Rational& root_len2(int i) const { return bform_[i][i]; }
    // <alpha^vee> of a positive root expressed in simple coroots (coefficients).
    std::vector<Rational> coroot_coeffs(const IntVec& root_coords) const;

    bool is_root(const WeightVec& v) const;
    bool is_root_coords(const IntVec& root_coords) const;  // +- positive root
    std::vector<int> cominuscule_nodes() const;

    IntVec rho() const { return IntVec(rank_, 1); }
    bool is_dominant(const IntVec& fund) const;
    // Dominant Weyl conjugate of an integral weight (fundamental coordinates).
    IntVec dominant_conjugate(IntVec fund) const;
    // Simple reflection s_i on fundamental coordinates.
    IntVec reflect(const IntVec& fund, int i) const;

    std::string type_string() const;

private:
    std::vector<SimpleType> comps_;
    int rank_ = 0;
    std::vector<int> comp_of_, offsets_;
    std::vector<IntVec> cartan_;
    std::vector<std::vector<Rational>> bform_;
    std::vector<std::vector<Rational>> cartan_inv_;  // rows: omega_i in root coords
    std::vector<IntVec> pos_;
    std::map<IntVec, int> index_;
};

RootSystem build_root_system(const std::vector<SimpleType>& spec);

}  // namespace qsym
