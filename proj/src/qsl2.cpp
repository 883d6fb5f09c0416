#include "qsym/qsl2.hpp"

#include <algorithm>
#include <sstream>

#include "qsym/errors.hpp"
#include "qsym/linalg.hpp"

namespace qsym {

namespace {

const QRat& qq() {
    static const QRat v = QRat::q();
    return v;
}
const QRat& qinv() {
    static const QRat v = QRat::q_pow(-1);
    return v;
}
// q - q^-1
const QRat& qdiff() {
    static const QRat v = qq() - qinv();
    return v;
}
// q + q^-1
const QRat& qsum() {
    static const QRat v = qq() + qinv();
    return v;
}

std::string coef_prefix(const QRat& c, bool first, bool has_mono) {
    // Leading sign handled here; non-constant coefficients are parenthesized.
    std::string s;
    if (c.is_constant()) {
        Rational v = c.constant_value();
        bool neg = v.sign() < 0;
        if (neg) v = -v;
        s = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (!v.is_one() || !has_mono) s += v.str() + (has_mono ? " " : "");
        return s;
    }
    return (first ? "" : " + ") + std::string("(") + c.str() + ")" + (has_mono ? " " : "");
}

std::string pbw_mono(const PBWKey& k) {
    std::string s;
    auto part = [&](const char* g, int e) {
        if (e == 0) return;
        if (!s.empty()) s += " ";
        s += g;
        if (e != 1) s += "^" + std::to_string(e);
    };
    part("F", k[0]);
    part("K", k[1]);
    part("E", k[2]);
    return s;
}

// Right multiplication of one monomial by a generator.
void mul_E(const PBWKey& k, const QRat& c, PBW& out) { out.add({k[0], k[1], k[2] + 1}, c); }

void mul_K(const PBWKey& k, const QRat& c, int s, PBW& out) {
    // E^c K^s = q^{-s c} K^s E^c
    out.add({k[0], k[1] + s, k[2]}, c * QRat::q_pow(-s * k[2]));
}

void mul_F(const PBWKey& k, const QRat& c, PBW& out) {
    const int a = k[0], b = k[1], e = k[2];
    // K^b F = q^-b F K^b
    out.add({a + 1, b, e}, c * QRat::q_pow(-b));
    if (e == 0) return;
    // [E^e, F] = [e] (q^{1-e} K^2 - q^{e-1} K^-2) / (q - q^-1) E^{e-1}
    QRat f = c * divided_bracket(e, 1) / qdiff();
    out.add({a, b + 2, e - 1}, f * QRat::q_pow(1 - e));
    out.add({a, b - 2, e - 1}, -(f * QRat::q_pow(e - 1)));
}

PBW mul_gen(const PBW& x, char g, int s = 1) {
    PBW out;
    for (const auto& [k, c] : x.terms()) {
        if (g == 'E') mul_E(k, c, out);
        if (g == 'F') mul_F(k, c, out);
        if (g == 'K') mul_K(k, c, s, out);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// PBW elements

PBW PBW::monomial(int a, int b, int c, const QRat& coef) {
    PBW x;
    x.add({a, b, c}, coef);
    return x;
}

void PBW::add(const PBWKey& k, const QRat& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(k, v);
    if (fresh) return;
    it->second += v;
    if (it->second.is_zero()) t_.erase(it);
}

QRat PBW::coeff(const PBWKey& k) const {
    auto it = t_.find(k);
    return it == t_.end() ? QRat() : it->second;
}

PBW PBW::scaled(const QRat& s) const {
    PBW out;
    for (const auto& [k, c] : t_) out.add(k, c * s);
    return out;
}

PBW operator+(const PBW& x, const PBW& y) {
    PBW out = x;
    for (const auto& [k, c] : y.t_) out.add(k, c);
    return out;
}

PBW operator-(const PBW& x, const PBW& y) {
    PBW out = x;
    for (const auto& [k, c] : y.t_) out.add(k, -c);
    return out;
}

PBW operator*(const PBW& x, const PBW& y) {
    PBW out;
    for (const auto& [k, c] : y.t_) {
        PBW cur = x.scaled(c);
        for (int i = 0; i < k[0]; ++i) cur = mul_gen(cur, 'F');
        if (k[1] != 0) cur = mul_gen(cur, 'K', k[1]);
        for (int i = 0; i < k[2]; ++i) cur = mul_gen(cur, 'E');
        out = out + cur;
    }
    return out;
}

std::string PBW::str() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : t_) {
        std::string m = pbw_mono(k);
        s += coef_prefix(c, first, !m.empty()) + m;
        first = false;
    }
    return s;
}

PBW normal_form(const std::string& word) {
    std::string w = word;
    std::replace(w.begin(), w.end(), '*', ' ');
    std::istringstream in(w);
    std::string tok;
    PBW x = PBW::one();
    while (in >> tok) {
        char g = tok[0];
        int e = 1;
        if (tok.size() > 1) {
            if (tok[1] != '^') throw ParseError("bad generator '" + tok + "'");
            try {
                e = std::stoi(tok.substr(2));
            } catch (const std::exception&) {
                throw ParseError("bad exponent in '" + tok + "'");
            }
        }
        if (g == 'K') {
            x = mul_gen(x, 'K', e);
        } else if (g == 'E' || g == 'F') {
            if (e < 0) throw ParseError("negative power of " + std::string(1, g));
            for (int i = 0; i < e; ++i) x = mul_gen(x, g);
        } else {
            throw ParseError("unknown generator '" + tok + "'");
        }
    }
    return x;
}

PBW commutator(const PBW& x, const PBW& y) { return x * y - y * x; }

// ---------------------------------------------------------------------------
// Tensors and Hopf structure

UqTensor UqTensor::pure(const PBW& x, const PBW& y) {
    UqTensor t;
    for (const auto& [a, c] : x.terms())
        for (const auto& [b, d] : y.terms()) t.add({a, b}, c * d);
    return t;
}

void UqTensor::add(const Key& k, const QRat& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(k, v);
    if (fresh) return;
    it->second += v;
    if (it->second.is_zero()) t_.erase(it);
}

UqTensor UqTensor::op() const {
    UqTensor out;
    for (const auto& [k, c] : t_) out.add({k.second, k.first}, c);
    return out;
}

UqTensor UqTensor::scaled(const QRat& s) const {
    UqTensor out;
    for (const auto& [k, c] : t_) out.add(k, c * s);
    return out;
}

UqTensor operator+(const UqTensor& x, const UqTensor& y) {
    UqTensor out = x;
    for (const auto& [k, c] : y.t_) out.add(k, c);
    return out;
}

UqTensor operator-(const UqTensor& x, const UqTensor& y) {
    UqTensor out = x;
    for (const auto& [k, c] : y.t_) out.add(k, -c);
    return out;
}

UqTensor operator*(const UqTensor& x, const UqTensor& y) {
    UqTensor out;
    for (const auto& [k1, c1] : x.t_)
        for (const auto& [k2, c2] : y.t_) {
            PBW a = PBW::monomial(k1.first[0], k1.first[1], k1.first[2]) *
                    PBW::monomial(k2.first[0], k2.first[1], k2.first[2]);
            PBW b = PBW::monomial(k1.second[0], k1.second[1], k1.second[2]) *
                    PBW::monomial(k2.second[0], k2.second[1], k2.second[2]);
            out = out + UqTensor::pure(a, b).scaled(c1 * c2);
        }
    return out;
}

std::string UqTensor::str() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : t_) {
        std::string a = pbw_mono(k.first), b = pbw_mono(k.second);
        s += coef_prefix(c, first, true) + (a.empty() ? "1" : a) + " (x) " + (b.empty() ? "1" : b);
        first = false;
    }
    return s;
}

namespace {

UqTensor delta_gen(char g, int s = 1) {
    switch (g) {
        case 'E':
            return UqTensor::pure(PBW::E(), PBW::K(-1)) + UqTensor::pure(PBW::K(), PBW::E());
        case 'F':
            return UqTensor::pure(PBW::F(), PBW::K(-1)) + UqTensor::pure(PBW::K(), PBW::F());
        default:
            return UqTensor::pure(PBW::K(s), PBW::K(s));
    }
}

UqTensor unit_tensor() { return UqTensor::pure(PBW::one(), PBW::one()); }

}  // namespace

UqTensor coproduct(const PBW& x) {
    UqTensor out;
    for (const auto& [k, c] : x.terms()) {
        UqTensor cur = unit_tensor().scaled(c);
        for (int i = 0; i < k[0]; ++i) cur = cur * delta_gen('F');
        if (k[1] != 0) cur = cur * delta_gen('K', k[1]);
        for (int i = 0; i < k[2]; ++i) cur = cur * delta_gen('E');
        out = out + cur;
    }
    return out;
}

PBW antipode(const PBW& x) {
    // S is an anti-homomorphism: S(F^a K^b E^c) = S(E)^c K^-b S(F)^a.
    PBW SE = PBW::E().scaled(-qinv()), SF = PBW::F().scaled(-qq());
    PBW out;
    for (const auto& [k, c] : x.terms()) {
        PBW cur = PBW::scalar(c);
        for (int i = 0; i < k[2]; ++i) cur = cur * SE;
        cur = cur * PBW::K(-k[1]);
        for (int i = 0; i < k[0]; ++i) cur = cur * SF;
        out = out + cur;
    }
    return out;
}

QRat counit(const PBW& x) {
    QRat out;
    for (const auto& [k, c] : x.terms())
        if (k[0] == 0 && k[2] == 0) out += c;
    return out;
}

PBW multiply(const UqTensor& t) {
    PBW out;
    for (const auto& [k, c] : t.terms())
        out = out + (PBW::monomial(k.first[0], k.first[1], k.first[2], c) * PBW::monomial(k.second[0], k.second[1], k.second[2]));
    return out;
}

UqTriple coproduct_left(const UqTensor& t) {
    UqTriple out;
    for (const auto& [k, c] : t.terms()) {
        UqTensor d = coproduct(PBW::monomial(k.first[0], k.first[1], k.first[2]));
        for (const auto& [k2, c2] : d.terms()) {
            auto& slot = out[{k2.first, k2.second, k.second}];
            slot += c * c2;
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

UqTriple coproduct_right(const UqTensor& t) {
    UqTriple out;
    for (const auto& [k, c] : t.terms()) {
        UqTensor d = coproduct(PBW::monomial(k.second[0], k.second[1], k.second[2]));
        for (const auto& [k2, c2] : d.terms()) {
            auto& slot = out[{k.first, k2.first, k2.second}];
            slot += c * c2;
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

PBW ad(const PBW& x, const PBW& y) {
    PBW out;
    UqTensor d = coproduct(x);
    for (const auto& [k, c] : d.terms()) {
        PBW left = PBW::monomial(k.first[0], k.first[1], k.first[2], c);
        PBW right = antipode(PBW::monomial(k.second[0], k.second[1], k.second[2]));
        out = out + left * y * right;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Locally finite generators

XGen parse_xgen(const std::string& s) {
    if (s == "X+" || s == "Xp" || s == "X_+") return XGen::Plus;
    if (s == "X-" || s == "Xm" || s == "X_-") return XGen::Minus;
    if (s == "X0" || s == "X_0") return XGen::Zero;
    throw ParseError("unknown generator '" + s + "' (expected X+, X-, X0)");
}

std::string xgen_name(XGen g) { return g == XGen::Plus ? "X+" : g == XGen::Minus ? "X-" : "X0"; }

namespace {

bool is_central(const PBW& c) {
    return commutator(c, PBW::E()).is_zero() && commutator(c, PBW::F()).is_zero() &&
           commutator(c, PBW::K()).is_zero();
}

// Coefficients of y in the given basis, using keys owned by one basis element only.
std::optional<std::vector<QRat>> decompose(const PBW& y, const std::vector<PBW>& basis) {
    std::vector<QRat> coef(basis.size());
    PBW rest = y;
    for (size_t i = 0; i < basis.size(); ++i) {
        const PBWKey* pivot = nullptr;
        for (const auto& [k, c] : basis[i].terms()) {
            bool own = true;
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i && !basis[j].coeff(k).is_zero()) own = false;
            if (own) {
                pivot = &k;
                break;
            }
        }
        if (!pivot) throw Error("InternalError", "basis without a private PBW key");
        coef[i] = y.coeff(*pivot) / basis[i].coeff(*pivot);
        rest = rest - basis[i].scaled(coef[i]);
    }
    if (!rest.is_zero()) return std::nullopt;
    return coef;
}

LocallyFinite build_locally_finite() {
    LocallyFinite lf;
    lf.Xp = PBW::K(-1) * PBW::E();
    lf.Xm = PBW::K(-1) * PBW::F();
    PBW qefq = (PBW::E() * PBW::F()).scaled(qq()) - (PBW::F() * PBW::E()).scaled(qinv());
    lf.X0 = qefq.scaled(qsum().inverse());
    lf.C_first = PBW::K(-1) + qefq.scaled(qdiff() / qsum());
    lf.C_second = PBW::K(-2) + lf.X0.scaled(qdiff());
    lf.C_first_central = is_central(lf.C_first);
    lf.C_second_central = is_central(lf.C_second);
    if (lf.C_second_central) {
        lf.C = lf.C_second;
        lf.selected = "second";
    } else if (lf.C_first_central) {
        lf.C = lf.C_first;
        lf.selected = "first";
    }
    std::vector<PBW> basis{lf.Xp, lf.Xm, lf.X0};
    lf.ad_stable = true;
    for (const PBW& g : {PBW::E(), PBW::F(), PBW::K(), PBW::K(-1)})
        for (const PBW& x : basis)
            if (!decompose(ad(g, x), basis)) lf.ad_stable = false;
    return lf;
}

}  // namespace

const LocallyFinite& locally_finite_generators() {
    static const LocallyFinite lf = build_locally_finite();
    return lf;
}

void XTensor::add(int a, int b, const QRat& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = c.try_emplace({a, b}, v);
    if (fresh) return;
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
}

std::string XTensor::str() const {
    if (c.empty()) return "0";
    static const char* names[] = {"X+", "X-", "X0", "1"};
    std::string s;
    bool first = true;
    for (const auto& [k, v] : c) {
        s += coef_prefix(v, first, true) + names[k.first] + "(x)" + names[k.second];
        first = false;
    }
    return s;
}

namespace {

std::vector<PBW> x_basis() {
    const auto& lf = locally_finite_generators();
    return {lf.Xp, lf.Xm, lf.X0, PBW::one()};
}

}  // namespace

XTensor to_x_basis(const UqTensor& t) {
    auto basis = x_basis();
    // Group by the right leg, decompose right-leg coefficient families.
    // t = sum_{a,b} s_ab X_a (x) X_b; write t = sum_k L_k (x) m_k over right monomials m_k,
    // decompose the right side first then the left side.
    std::map<PBWKey, PBW> by_right;
    for (const auto& [k, c] : t.terms()) by_right[k.second].add(k.first, c);
    // For each left basis element X_a, collect its coefficient as a right-leg PBW element.
    std::vector<PBW> right_of(basis.size());
    for (const auto& [rk, left] : by_right) {
        auto lc = decompose(left, basis);
        if (!lc) throw NotInSpan("left leg is not in span{X+, X-, X0, 1}");
        for (size_t a = 0; a < basis.size(); ++a) right_of[a].add(rk, (*lc)[a]);
    }
    XTensor out;
    for (size_t a = 0; a < basis.size(); ++a) {
        if (right_of[a].is_zero()) continue;
        auto rc = decompose(right_of[a], basis);
        if (!rc) throw NotInSpan("right leg is not in span{X+, X-, X0, 1}");
        for (size_t b = 0; b < basis.size(); ++b) out.add(static_cast<int>(a), static_cast<int>(b), (*rc)[b]);
    }
    return out;
}

UqTensor from_x_basis(const XTensor& t) {
    auto basis = x_basis();
    UqTensor out;
    for (const auto& [k, v] : t.c) out = out + UqTensor::pure(basis[k.first], basis[k.second]).scaled(v);
    return out;
}

SigmaResult sigma(XGen xg, XGen yg) {
    const auto& lf = locally_finite_generators();
    const PBW& x = lf.get(xg);
    const PBW& y = lf.get(yg);
    // Delta(x) = x (x) C + sum u' (x) x'; sigma(x (x) y) = sum ad(u')(y) (x) x'.
    UqTensor rest = coproduct(x) - UqTensor::pure(x, lf.C);
    SigmaResult res;
    for (const auto& [k, c] : rest.terms()) {
        PBW u = PBW::monomial(k.first[0], k.first[1], k.first[2], c);
        PBW xp = PBW::monomial(k.second[0], k.second[1], k.second[2]);
        res.raw = res.raw + UqTensor::pure(ad(u, y), xp);
    }
    res.value = to_x_basis(res.raw);
    res.correction = res.value;
    res.correction.add(static_cast<int>(yg), static_cast<int>(xg), QRat(-1));
    return res;
}

bool sigma_identity_holds(XGen xg, XGen yg) {
    const auto& lf = locally_finite_generators();
    const PBW& x = lf.get(xg);
    const PBW& y = lf.get(yg);
    PBW lhs = x * y - multiply(sigma(xg, yg).raw);
    return lhs == ad(x, y) * lf.C;
}

std::vector<SigmaGolden> sigma_golden() {
    std::vector<SigmaGolden> out;
    const int P = 0, M = 1, Z = 2;
    auto make = [&](XGen x, XGen y, int a, int b, const QRat& c) {
        SigmaGolden g;
        g.x = x;
        g.y = y;
        g.computed = sigma(x, y).value;
        g.printed_correction.add(a, b, c);
        g.printed = g.printed_correction;
        g.printed.add(static_cast<int>(y), static_cast<int>(x), QRat(1));
        out.push_back(g);
    };
    make(XGen::Plus, XGen::Minus, Z, Z, qdiff() * qsum());
    make(XGen::Plus, XGen::Zero, P, Z, -(qdiff() * qinv()));
    make(XGen::Minus, XGen::Zero, M, Z, qq() * qdiff());
    return out;
}

Rational sigma_normalization() {
    std::optional<QRat> nu;
    for (const auto& g : sigma_golden()) {
        XTensor corr = g.computed;
        corr.add(static_cast<int>(g.y), static_cast<int>(g.x), QRat(-1));
        if (corr.c.size() != g.printed_correction.c.size()) return Rational(0);
        for (const auto& [k, v] : g.printed_correction.c) {
            auto it = corr.c.find(k);
            if (it == corr.c.end()) return Rational(0);
            QRat ratio = it->second / v;
            if (!nu) nu = ratio;
            if (*nu != ratio) return Rational(0);
        }
    }
    if (!nu || !nu->is_constant()) return Rational(0);
    return nu->constant_value();
}

// ---------------------------------------------------------------------------
// Classical U(sl2)

ClassicalU ClassicalU::gen(char g) {
    ClassicalU x;
    if (g == 'E') x.add({0, 0, 1}, 1);
    if (g == 'F') x.add({1, 0, 0}, 1);
    if (g == 'H') x.add({0, 1, 0}, 1);
    if (g == '1') x.add({0, 0, 0}, 1);
    return x;
}

void ClassicalU::add(const ClassKey& k, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = t.try_emplace(k, v);
    if (fresh) return;
    it->second += v;
    if (it->second.is_zero()) t.erase(it);
}

namespace {

// F^a H^b E^c times a generator on the right.
ClassicalU cmul_gen(const ClassicalU& x, char g) {
    ClassicalU out;
    for (const auto& [k, c] : x.t) {
        const int a = k[0], b = k[1], e = k[2];
        if (g == 'E') {
            out.add({a, b, e + 1}, c);
        } else if (g == 'H') {
            // E^e H = (H - 2e) E^e
            out.add({a, b + 1, e}, c);
            out.add({a, b, e}, c * Rational(-2 * e));
        } else {
            // H^b F = F (H - 2)^b, then [E^e, F] = (e H - e(e-1)) E^{e-1}
            Rational binom(1);
            for (int j = 0; j <= b; ++j) {
                // (H - 2)^b = sum_j C(b, j) H^j (-2)^{b-j}
                Rational pw(1);
                for (int s = 0; s < b - j; ++s) pw *= Rational(-2);
                out.add({a + 1, j, e}, c * binom * pw);
                binom = binom * Rational(b - j) / Rational(j + 1);
            }
            if (e > 0) {
                out.add({a, b + 1, e - 1}, c * Rational(e));
                out.add({a, b, e - 1}, c * Rational(-e * (e - 1)));
            }
        }
    }
    return out;
}

}  // namespace

ClassicalU operator*(const ClassicalU& x, const ClassicalU& y) {
    ClassicalU out;
    for (const auto& [k, c] : y.t) {
        ClassicalU cur;
        for (const auto& [kx, cx] : x.t) cur.add(kx, cx * c);
        for (int i = 0; i < k[0]; ++i) cur = cmul_gen(cur, 'F');
        for (int i = 0; i < k[1]; ++i) cur = cmul_gen(cur, 'H');
        for (int i = 0; i < k[2]; ++i) cur = cmul_gen(cur, 'E');
        out = out + cur;
    }
    return out;
}

ClassicalU operator+(const ClassicalU& x, const ClassicalU& y) {
    ClassicalU out = x;
    for (const auto& [k, c] : y.t) out.add(k, c);
    return out;
}

namespace {

std::string class_mono(const ClassKey& k) {
    std::string s;
    auto part = [&](const char* g, int e) {
        if (e == 0) return;
        if (!s.empty()) s += " ";
        s += g;
        if (e != 1) s += "^" + std::to_string(e);
    };
    part("F", k[0]);
    part("H", k[1]);
    part("E", k[2]);
    return s.empty() ? "1" : s;
}

std::string rat_prefix(const Rational& c, bool first) {
    bool neg = c.sign() < 0;
    Rational v = neg ? -c : c;
    std::string s = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (!v.is_one()) s += v.str() + " ";
    return s;
}

}  // namespace

std::string ClassicalU::str() const {
    if (t.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : t) {
        s += rat_prefix(c, first) + class_mono(k);
        first = false;
    }
    return s;
}

void CoPoissonElem::add(const ClassKey& a, const ClassKey& b, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = t.try_emplace({a, b}, v);
    if (fresh) return;
    it->second += v;
    if (it->second.is_zero()) t.erase(it);
}

bool CoPoissonElem::is_antisymmetric() const {
    CoPoissonElem sum = *this;
    for (const auto& [k, c] : t) sum.add(k.second, k.first, c);
    return sum.is_zero();
}

CoPoissonElem CoPoissonElem::scaled(const Rational& s) const {
    CoPoissonElem out;
    for (const auto& [k, c] : t) out.add(k.first, k.second, c * s);
    return out;
}

CoPoissonElem operator+(const CoPoissonElem& x, const CoPoissonElem& y) {
    CoPoissonElem out = x;
    for (const auto& [k, c] : y.t) out.add(k.first, k.second, c);
    return out;
}

CoPoissonElem operator-(const CoPoissonElem& x, const CoPoissonElem& y) { return x + y.scaled(Rational(-1)); }

CoPoissonElem operator*(const CoPoissonElem& x, const CoPoissonElem& y) {
    CoPoissonElem out;
    for (const auto& [k1, c1] : x.t)
        for (const auto& [k2, c2] : y.t) {
            ClassicalU a, b, a2, b2;
            a.add(k1.first, 1);
            a2.add(k2.first, 1);
            b.add(k1.second, 1);
            b2.add(k2.second, 1);
            ClassicalU l = a * a2, r = b * b2;
            for (const auto& [kl, cl] : l.t)
                for (const auto& [kr, cr] : r.t) out.add(kl, kr, c1 * c2 * cl * cr);
        }
    return out;
}

std::string CoPoissonElem::str() const {
    if (t.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : t) {
        s += rat_prefix(c, first) + class_mono(k.first) + " (x) " + class_mono(k.second);
        first = false;
    }
    return s;
}

CoPoissonElem wedge(const ClassicalU& a, const ClassicalU& b) {
    CoPoissonElem out;
    for (const auto& [ka, ca] : a.t)
        for (const auto& [kb, cb] : b.t) {
            out.add(ka, kb, ca * cb);
            out.add(kb, ka, -(ca * cb));
        }
    return out;
}

CoPoissonElem classical_coproduct(const ClassicalU& x) {
    auto prim = [](char g) {
        CoPoissonElem d;
        ClassKey one{0, 0, 0};
        ClassKey k = ClassicalU::gen(g).t.begin()->first;
        d.add(k, one, 1);
        d.add(one, k, 1);
        return d;
    };
    CoPoissonElem out;
    for (const auto& [k, c] : x.t) {
        CoPoissonElem cur;
        cur.add({0, 0, 0}, {0, 0, 0}, c);
        for (int i = 0; i < k[0]; ++i) cur = cur * prim('F');
        for (int i = 0; i < k[1]; ++i) cur = cur * prim('H');
        for (int i = 0; i < k[2]; ++i) cur = cur * prim('E');
        out = out + cur;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Classical limits

namespace {

// Generalized binomial coefficient C(b, m) for integer b, m >= 0.
Rational gbinom(int b, int m) {
    Rational r(1);
    for (int i = 0; i < m; ++i) r = r * Rational(b - i) / Rational(i + 1);
    return r;
}

Rational pow_half(int m) {
    Rational r(1);
    for (int i = 0; i < m; ++i) r = r / Rational(kHScaling);
    return r;
}

}  // namespace

ClassicalU classical_limit(const PBW& x) {
    // K^b = (1 + t h)^b with t = q - 1; collect the t^0 part, negative orders must cancel.
    std::map<int, ClassicalU> by_order;
    for (const auto& [k, c] : x.terms()) {
        int order0 = 0;
        auto lc = c.laurent_at_one(1, order0);
        for (size_t j = 0; j < lc.size(); ++j) {
            int oj = order0 + static_cast<int>(j);
            if (lc[j].is_zero()) continue;
            for (int m = 0; oj + m <= 0; ++m) {
                Rational v = lc[j] * gbinom(k[1], m) * pow_half(m);
                by_order[oj + m].add({k[0], m, k[2]}, v);
            }
        }
    }
    for (const auto& [o, v] : by_order)
        if (o < 0 && !v.t.empty()) throw NotInLattice("pole at q = 1 survives in " + x.str());
    return by_order[0];
}

CoPoissonElem copoisson_limit(const PBW& x) {
    UqTensor d = coproduct(x) - coproduct(x).op();
    std::map<int, CoPoissonElem> by_order;
    for (const auto& [k, c] : d.terms()) {
        int order0 = 0;
        // total order = j + m1 + m2 - 1; we need j <= 1
        auto lc = c.laurent_at_one(2, order0);
        for (size_t j = 0; j < lc.size(); ++j) {
            int oj = order0 + static_cast<int>(j) - 1;
            if (lc[j].is_zero()) continue;
            for (int m1 = 0; oj + m1 <= 0; ++m1)
                for (int m2 = 0; oj + m1 + m2 <= 0; ++m2) {
                    Rational v = lc[j] * gbinom(k.first[1], m1) * gbinom(k.second[1], m2) * pow_half(m1 + m2);
                    by_order[oj + m1 + m2].add({k.first[0], m1, k.first[2]}, {k.second[0], m2, k.second[2]}, v);
                }
        }
    }
    for (const auto& [o, v] : by_order)
        if (o < 0 && !v.is_zero()) throw NotInLattice("(Delta - Delta^op)/(q - 1) has a pole at q = 1");
    return by_order[0];
}

// ---------------------------------------------------------------------------
// Associated graded algebra and its Poisson brackets

DoninResult donin_graded_relations() {
    DoninResult res;
    res.poisson.dim = 3;
    const XGen gens[3] = {XGen::Plus, XGen::Minus, XGen::Zero};
    for (XGen x : gens)
        for (XGen y : gens) {
            if (x == y) continue;
            SigmaResult s = sigma(x, y);
            std::string rel = xgen_name(x) + " " + xgen_name(y) + " = ";
            std::string rhs;
            bool first = true;
            for (const auto& [k, v] : s.value.c) {
                static const char* names[] = {"X+", "X-", "X0", "1"};
                rhs += coef_prefix(v, first, true) + names[k.first] + " " + names[k.second];
                first = false;
            }
            res.relations.push_back(rel + (rhs.empty() ? "0" : rhs));
            int i = static_cast<int>(x), j = static_cast<int>(y);
            if (i > j) continue;
            PolyElem p;
            for (const auto& [k, v] : s.correction.c) {
                if (k.first == 3 || k.second == 3) throw Error("InternalError", "sigma left the X span");
                p.add({k.first, k.second}, specialize_q1(v / qdiff()));
            }
            if (!p.is_zero()) res.poisson.br.emplace(std::make_pair(i, j), p);
        }
    return res;
}

PBW quantum_casimir() {
    PBW k = PBW::K(2).scaled(qq()) + PBW::K(-2).scaled(qinv());
    return PBW::F() * PBW::E() + k.scaled((qdiff() * qdiff()).inverse());
}

// ---------------------------------------------------------------------------
// Braided symmetric powers

namespace {

// Scalars in Q(v); QRat's indeterminate plays v here.
using Mat = std::vector<std::vector<QRat>>;

Mat zeros(int n) { return Mat(n, std::vector<QRat>(n)); }
Mat eye(int n) {
    Mat m = zeros(n);
    for (int i = 0; i < n; ++i) m[i][i] = QRat(1);
    return m;
}
Mat mmul(const Mat& a, const Mat& b) {
    int n = static_cast<int>(a.size());
    Mat c = zeros(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < n; ++j)
                if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}
Mat madd(const Mat& a, const Mat& b, const QRat& s = QRat(1)) {
    Mat c = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            if (!b[i][j].is_zero()) c[i][j] += s * b[i][j];
    return c;
}
Mat kron(const Mat& a, const Mat& b) {
    int n = static_cast<int>(a.size()), m = static_cast<int>(b.size());
    Mat c = zeros(n * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (a[i][j].is_zero()) continue;
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l)
                    if (!b[k][l].is_zero()) c[i * m + k][j * m + l] = a[i][j] * b[k][l];
        }
    return c;
}

QRat vpow(int k) { return QRat::q_pow(k); }
// [n] in q = v^2
QRat qint(int n) { return divided_bracket(n, 2); }

struct ModuleMats {
    Mat E, F, K, Kinv;
};

// V_ell: basis w_0..w_ell, K w_j = v^{ell - 2j} w_j, F w_j = [j+1] w_{j+1}, E w_j = [ell-j+1] w_{j-1}.
ModuleMats irrep(int ell) {
    int n = ell + 1;
    ModuleMats m{zeros(n), zeros(n), zeros(n), zeros(n)};
    for (int j = 0; j < n; ++j) {
        m.K[j][j] = vpow(ell - 2 * j);
        m.Kinv[j][j] = vpow(2 * j - ell);
        if (j + 1 < n) m.F[j + 1][j] = qint(j + 1);
        if (j > 0) m.E[j - 1][j] = qint(ell - j + 1);
    }
    return m;
}

int rank_by_blocks(const std::vector<Mat>& ops, const std::vector<int>& weight_of) {
    // Each operator preserves weight; stack the rows of every operator restricted to a block.
    std::map<int, std::vector<int>> blocks;
    for (size_t i = 0; i < weight_of.size(); ++i) blocks[weight_of[i]].push_back(static_cast<int>(i));
    int total = 0;
    for (const auto& [w, idx] : blocks) {
        std::vector<std::vector<QRat>> rows;
        for (const auto& op : ops)
            for (int i : idx) {
                std::vector<QRat> row;
                for (int j : idx) row.push_back(op[i][j]);
                rows.push_back(row);
            }
        total += rank_of(rows, static_cast<int>(idx.size()));
    }
    return total;
}

long long binom(long long n, long long k) {
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

BraidedReport braided_flatness(int ell, int max_degree) {
    if (ell < 1) throw UsageError("ell must be at least 1");
    BraidedReport rep;
    rep.ell = ell;
    const int d = ell + 1;
    rep.dim = d;
    ModuleMats V = irrep(ell);
    const QRat q = vpow(2), qi = vpow(-2);
    const QRat qd = q - qi;
    // Delta(E) = E (x) K^-1 + K (x) E, Delta(F) likewise, Delta(K) = K (x) K.
    Mat dE = madd(kron(V.E, V.Kinv), kron(V.K, V.E));
    Mat dF = madd(kron(V.F, V.Kinv), kron(V.K, V.F));
    Mat dK = kron(V.K, V.K), dKi = kron(V.Kinv, V.Kinv);
    Mat dK2 = mmul(dK, dK), dKi2 = mmul(dKi, dKi);
    // omega = FE + (q K^2 + q^-1 K^-2)/(q - q^-1)^2
    Mat omega = madd(mmul(dF, dE), madd(dK2, dKi2, qi * q.inverse()), q / (qd * qd));
    // Eigenvalue on V_n: (q^{n+1} + q^{-n-1}) / (q - q^-1)^2.
    std::vector<QRat> ev;
    for (int k = 0; k <= ell; ++k) {
        int n = 2 * ell - 2 * k;
        ev.push_back((vpow(2 * (n + 1)) + vpow(-2 * (n + 1))) / (qd * qd));
    }
    const int N = d * d;
    Mat sig = zeros(N);
    for (int k = 0; k <= ell; ++k) {
        Mat P = eye(N);
        for (int j = 0; j <= ell; ++j) {
            if (j == k) continue;
            Mat shifted = madd(omega, eye(N), -ev[j]);
            P = mmul(P, shifted);
            QRat s = (ev[k] - ev[j]).inverse();
            for (auto& row : P)
                for (auto& x : row)
                    if (!x.is_zero()) x *= s;
        }
        sig = madd(sig, P, QRat(k % 2 == 0 ? 1 : -1));
    }
    rep.involution = mmul(sig, sig) == eye(N);
    rep.commutes_with_action = mmul(sig, dE) == mmul(dE, sig) && mmul(sig, dF) == mmul(dF, sig) &&
                               mmul(sig, dK) == mmul(dK, sig);

    std::vector<int> w2(N);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) w2[i * d + j] = i + j;
    Mat I2 = eye(N);
    rep.dim_S2 = N - rank_by_blocks({madd(sig, I2, QRat(-1))}, w2);
    rep.dim_L2 = N - rank_by_blocks({madd(sig, I2, QRat(1))}, w2);
    rep.classical_S2 = static_cast<int>(binom(d + 1, 2));
    rep.classical_L2 = static_cast<int>(binom(d, 2));
    rep.classical_S3 = static_cast<int>(binom(d + 2, 3));
    bool flat2 = rep.dim_S2 == rep.classical_S2 && rep.dim_L2 == rep.classical_L2;
    rep.flat_through_degree = flat2 ? 2 : 1;
    if (max_degree >= 3) {
        Mat Id = eye(d);
        Mat s12 = kron(sig, Id), s23 = kron(Id, sig);
        const int N3 = N * d;
        Mat I3 = eye(N3);
        std::vector<int> w3(N3);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) w3[(i * d + j) * d + k] = i + j + k;
        rep.dim_S3 = N3 - rank_by_blocks({madd(s12, I3, QRat(-1)), madd(s23, I3, QRat(-1))}, w3);
        if (flat2 && rep.dim_S3 == rep.classical_S3) rep.flat_through_degree = 3;
    }
    return rep;
}

}  // namespace qsym
