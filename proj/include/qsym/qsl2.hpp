#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsym/poisson.hpp"
#include "qsym/qrat.hpp"

namespace qsym {

// U_q(sl2) with K the weight-lattice generator:
//   K E K^-1 = q E,  K F K^-1 = q^-1 F,  [E, F] = (K^2 - K^-2) / (q - q^-1),
//   Delta(E) = E (x) K^-1 + K (x) E,  Delta(F) = F (x) K^-1 + K (x) F,  Delta(K) = K (x) K.
// K_alpha = K^2 is the root-lattice element.

using PBWKey = std::array<int, 3>;  // F^a K^b E^c

class PBW {
public:
    PBW() = default;
    static PBW one() { return monomial(0, 0, 0); }
    static PBW E() { return monomial(0, 0, 1); }
    static PBW F() { return monomial(1, 0, 0); }
    static PBW K(int power = 1) { return monomial(0, power, 0); }
    static PBW monomial(int a, int b, int c, const QRat& coef = QRat(1));
    static PBW scalar(const QRat& s) { return monomial(0, 0, 0, s); }

    const std::map<PBWKey, QRat>& terms() const { return t_; }
    void add(const PBWKey& k, const QRat& v);
    QRat coeff(const PBWKey& k) const;
    bool is_zero() const { return t_.empty(); }
    PBW scaled(const QRat& s) const;

    friend PBW operator+(const PBW& x, const PBW& y);
    friend PBW operator-(const PBW& x, const PBW& y);
    friend PBW operator*(const PBW& x, const PBW& y);
    friend bool operator==(const PBW& x, const PBW& y) { return x.t_ == y.t_; }
    friend bool operator!=(const PBW& x, const PBW& y) { return !(x == y); }

    std::string str() const;  // e.g. "F^2 K^-1 E + (q^2 + 1)/(q) K"

private:
    std::map<PBWKey, QRat> t_;
};

// Normal form of a word such as "E F K^-1 E" (generators E, F, K, K^n, separated by spaces or '*').
PBW normal_form(const std::string& word);
PBW commutator(const PBW& x, const PBW& y);

class UqTensor {
public:
    using Key = std::pair<PBWKey, PBWKey>;
    static UqTensor pure(const PBW& x, const PBW& y);

    const std::map<Key, QRat>& terms() const { return t_; }
    void add(const Key& k, const QRat& v);
    bool is_zero() const { return t_.empty(); }
    UqTensor op() const;
    UqTensor scaled(const QRat& s) const;

    friend UqTensor operator+(const UqTensor& x, const UqTensor& y);
    friend UqTensor operator-(const UqTensor& x, const UqTensor& y);
    friend UqTensor operator*(const UqTensor& x, const UqTensor& y);
    friend bool operator==(const UqTensor& x, const UqTensor& y) { return x.t_ == y.t_; }

    std::string str() const;

private:
    std::map<Key, QRat> t_;
};

UqTensor coproduct(const PBW& x);
PBW antipode(const PBW& x);
QRat counit(const PBW& x);
PBW multiply(const UqTensor& t);  // mu
// (Delta (x) 1) and (1 (x) Delta) on a tensor, and the triple tensors they produce.
using UqTriple = std::map<std::array<PBWKey, 3>, QRat>;
UqTriple coproduct_left(const UqTensor& t);
UqTriple coproduct_right(const UqTensor& t);

// ad(x)(y) = x_(1) y S(x_(2))
PBW ad(const PBW& x, const PBW& y);

// Locally finite generators X+ = K^-1 E, X- = K^-1 F, X0 = (q E F - q^-1 F E) / (q + q^-1).
enum class XGen { Plus = 0, Minus = 1, Zero = 2 };
XGen parse_xgen(const std::string& s);  // "X+", "X-", "X0"
std::string xgen_name(XGen g);

struct LocallyFinite {
    PBW Xp, Xm, X0;
    PBW C;        // selected central element
    PBW C_first;  // K^-1 + (q - q^-1)/(q + q^-1) (q E F - q^-1 F E)
    PBW C_second; // K^-2 + (q - q^-1) X0
    bool C_first_central = false;
    bool C_second_central = false;
    bool ad_stable = false;  // span{X+, X-, X0} closed under ad(E), ad(F), ad(K^+-1)
    std::string selected;    // "second" or "first"
    const PBW& get(XGen g) const { return g == XGen::Plus ? Xp : g == XGen::Minus ? Xm : X0; }
};
const LocallyFinite& locally_finite_generators();

// Tensor in the basis {X+, X-, X0, 1} (x) {X+, X-, X0, 1}; index 3 is the unit.
struct XTensor {
    std::map<std::pair<int, int>, QRat> c;
    void add(int a, int b, const QRat& v);
    std::string str() const;
    friend bool operator==(const XTensor& x, const XTensor& y) { return x.c == y.c; }
};
XTensor to_x_basis(const UqTensor& t);  // NotInSpan
UqTensor from_x_basis(const XTensor& t);

// sigma(x (x) y) = x_(1) y S(x_(2)) (x) x_(3) - ad(x)(y) (x) C
struct SigmaResult {
    UqTensor raw;
    XTensor value;       // in the X basis
    XTensor correction;  // value minus the flip y (x) x
};
SigmaResult sigma(XGen x, XGen y);
// xy - mu(sigma(x (x) y)) == ad(x)(y) C
bool sigma_identity_holds(XGen x, XGen y);

// The three printed sigma formulas, with sigma = flip + nu * printed correction.
struct SigmaGolden {
    XGen x, y;
    XTensor computed;
    XTensor printed;
    XTensor printed_correction;
};
std::vector<SigmaGolden> sigma_golden();
// nu such that computed correction = nu * printed correction for all three; 0 if none exists.
Rational sigma_normalization();

// Classical U(sl2) with basis F^a H^b E^c, [E, F] = H, [H, E] = 2E, [H, F] = -2F.
using ClassKey = std::array<int, 3>;
struct ClassicalU {
    std::map<ClassKey, Rational> t;
    static ClassicalU gen(char g);  // 'E', 'F', 'H', '1'
    void add(const ClassKey& k, const Rational& v);
    friend ClassicalU operator*(const ClassicalU& x, const ClassicalU& y);
    friend ClassicalU operator+(const ClassicalU& x, const ClassicalU& y);
    friend bool operator==(const ClassicalU& x, const ClassicalU& y) { return x.t == y.t; }
    std::string str() const;
};

struct CoPoissonElem {
    std::map<std::pair<ClassKey, ClassKey>, Rational> t;
    void add(const ClassKey& a, const ClassKey& b, const Rational& v);
    bool is_zero() const { return t.empty(); }
    bool is_antisymmetric() const;
    CoPoissonElem scaled(const Rational& s) const;
    friend CoPoissonElem operator+(const CoPoissonElem& x, const CoPoissonElem& y);
    friend CoPoissonElem operator-(const CoPoissonElem& x, const CoPoissonElem& y);
    friend CoPoissonElem operator*(const CoPoissonElem& x, const CoPoissonElem& y);
    friend bool operator==(const CoPoissonElem& x, const CoPoissonElem& y) { return x.t == y.t; }
    std::string str() const;
};
CoPoissonElem wedge(const ClassicalU& a, const ClassicalU& b);
CoPoissonElem classical_coproduct(const ClassicalU& x);  // primitive on E, F, H

// Lattice generated by h = (K - 1)/(q - 1), E, F; at q = 1, h -> H / h_scaling.
constexpr int kHScaling = 2;
ClassicalU classical_limit(const PBW& x);  // NotInLattice
CoPoissonElem copoisson_limit(const PBW& x);  // (Delta - Delta^op)(x) / (q - 1) at q = 1

// Associated graded of the C^-1 filtration: quadratic relations xy = mu sigma(x (x) y)
// and the Poisson brackets {x, y} = lim (mu sigma(x (x) y) - yx) / (q - q^-1).
struct DoninResult {
    std::vector<std::string> relations;
    BracketTable poisson;  // indices 0: X+, 1: X-, 2: X0
    std::vector<std::string> names{"X+", "X-", "X0"};
};
DoninResult donin_graded_relations();

// Quantum Casimir FE + (q K^2 + q^-1 K^-2) / (q - q^-1)^2.
PBW quantum_casimir();

struct BraidedReport {
    int ell = 0;
    int dim = 0;
    int dim_S2 = 0, dim_L2 = 0, dim_S3 = -1;
    int classical_S2 = 0, classical_L2 = 0, classical_S3 = 0;
    int flat_through_degree = 0;
    bool involution = false;
    bool commutes_with_action = false;
};
// Commutor sigma = sum_k (-1)^k P_k on V_ell (x) V_ell (P_k onto V_{2 ell - 2k}), scalars in Q(v), v^2 = q.
BraidedReport braided_flatness(int ell, int max_degree = 3);

}  // namespace qsym
