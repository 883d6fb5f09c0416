#include "qsym/bialg.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <unordered_map>

#include "qsym/errors.hpp"

namespace qsym {

// ---------------------------------------------------------------------------
// Standard r-matrix

TwoTensor standard_r(const LieAlgebra& L) {
    auto cas = casimir(L);
    TwoTensor r = cas.c0.scaled(Rational(1, 2));
    for (int k = 0; k < L.npos(); ++k) r.add(L.E(k), L.F(k), L.form(L.E(k), L.F(k)).inverse());
    return r;
}

// ---------------------------------------------------------------------------
// Belavin-Drinfeld triples

int BDTriple::tau(int node) const {
    for (size_t k = 0; k < delta1.size(); ++k)
        if (delta1[k] == node) return delta2[k];
    return -1;
}

std::string BDTriple::str() const {
    std::string s = "{";
    for (size_t k = 0; k < delta1.size(); ++k)
        s += (k ? "," : "") + std::to_string(delta1[k] + 1) + "->" + std::to_string(delta2[k] + 1);
    return s + "}";
}

bool is_valid_triple(const RootSystem& rs, const BDTriple& t) {
    if (t.delta1.size() != t.delta2.size()) return false;
    std::set<int> img(t.delta2.begin(), t.delta2.end());
    if (img.size() != t.delta2.size()) return false;
    for (size_t a = 0; a < t.delta1.size(); ++a) {
        if (t.delta1[a] < 0 || t.delta1[a] >= rs.rank() || t.delta2[a] < 0 || t.delta2[a] >= rs.rank()) return false;
        for (size_t b = 0; b < t.delta1.size(); ++b)
            if (rs.root_form()[t.delta1[a]][t.delta1[b]] != rs.root_form()[t.delta2[a]][t.delta2[b]]) return false;
    }
    for (int d : t.delta1) {
        int cur = d;
        for (size_t step = 0; step <= t.delta1.size(); ++step) {
            cur = t.tau(cur);
            if (cur < 0) break;
        }
        if (cur >= 0) return false;  // tau^n(d) stays in delta1: a cycle
    }
    return true;
}

std::vector<BDTriple> enumerate_bd_triples(const RootSystem& rs) {
    if (!rs.is_simple()) throw NotSimple("BD triples are enumerated for simple root systems");
    const int r = rs.rank();
    std::vector<BDTriple> out;
    for (int size = 0; size <= r; ++size) {
        std::vector<BDTriple> level;
        for (int mask = 0; mask < (1 << r); ++mask) {
            if (__builtin_popcount(mask) != size) continue;
            std::vector<int> d1;
            for (int i = 0; i < r; ++i)
                if (mask >> i & 1) d1.push_back(i);
            std::vector<int> d2(size);
            std::vector<bool> used(r, false);
            std::function<void(int)> rec = [&](int k) {
                if (k == size) {
                    BDTriple t{d1, d2};
                    if (is_valid_triple(rs, t)) level.push_back(t);
                    return;
                }
                for (int j = 0; j < r; ++j) {
                    if (used[j]) continue;
                    used[j] = true;
                    d2[k] = j;
                    rec(k + 1);
                    used[j] = false;
                }
            };
            rec(0);
        }
        std::sort(level.begin(), level.end(), [](const BDTriple& a, const BDTriple& b) {
            return a.delta1 != b.delta1 ? a.delta1 < b.delta1 : a.delta2 < b.delta2;
        });
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

namespace {

bool in_subsystem(const IntVec& root, const BDTriple& t) {
    for (size_t i = 0; i < root.size(); ++i)
        if (root[i] != 0 && t.tau(static_cast<int>(i)) < 0) return false;
    return true;
}

}  // namespace

SVec bd_tau_image(const LieAlgebra& L, const BDTriple& t, int b) {
    const auto& pos = L.roots().positive_roots();
    if (L.is_cartan(b)) throw InvalidTriple("tau is applied to root vectors only");
    int k = L.root_of(b);
    if (!in_subsystem(pos[k], t)) throw InvalidTriple("root outside the span of delta1");
    const RootPath& p = L.paths()[k];
    if (p.simple < 0) {
        int i = 0;
        while (pos[k][i] == 0) ++i;
        int j = t.tau(i);
        return {{L.is_E(b) ? L.E_simple(j) : L.F_simple(j), Rational(1)}};
    }
    Rational s(1, p.p + 1);
    int j = t.tau(p.simple);
    if (L.is_E(b)) {
        SVec lower = bd_tau_image(L, t, L.E(p.lower));
        return scaled(L.sc().bracket(SVec{{L.E_simple(j), Rational(1)}}, lower), s);
    }
    SVec lower = bd_tau_image(L, t, L.F(p.lower));
    return scaled(L.sc().bracket(lower, SVec{{L.F_simple(j), Rational(1)}}), s);
}

BDResult bd_r_matrix(const LieAlgebra& L, const BDTriple& t) {
    const RootSystem& rs = L.roots();
    if (!is_valid_triple(rs, t)) throw InvalidTriple("invalid Belavin-Drinfeld triple " + t.str());
    const int r = rs.rank();
    const auto& pos = rs.positive_roots();
    auto cas = casimir(L);
    BDResult out;

    // Main part: sum F_a (x) E_a / <E_a, F_a>.
    TwoTensor tail;
    for (int k = 0; k < L.npos(); ++k) tail.add(L.F(k), L.E(k), L.form(L.E(k), L.F(k)).inverse());
    // Cross terms: F_a ^ tau^n(E_a) for roots a of the delta1-subsystem.
    for (int k = 0; k < L.npos(); ++k) {
        if (!in_subsystem(pos[k], t)) continue;
        Rational coef = L.form(L.E(k), L.F(k)).inverse();
        SVec e{{L.E(k), Rational(1)}};
        for (;;) {
            int cur = L.root_of(e.front().first);
            if (!in_subsystem(pos[cur], t)) break;
            SVec img = bd_tau_image(L, t, L.E(cur));
            e = scaled(img, e.front().second);
            out.cross_pairs.emplace_back(k, L.root_of(e.front().first));
            for (const auto& [b, c] : e) {
                tail.add(L.F(k), b, coef * c);
                tail.add(b, L.F(k), -coef * c);
            }
        }
    }

    // r0 = c0/2 + S with S skew; unknowns S_ab for a < b.
    std::vector<std::pair<int, int>> unk;
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) unk.emplace_back(a, b);
    const auto& A = rs.cartan();
    std::vector<std::vector<Rational>> M;
    std::vector<Rational> rhs;
    auto c0 = [&](int a, int b) { return cas.c0.get(L.H(a), L.H(b)) / Rational(2); };
    for (size_t di = 0; di < t.delta1.size(); ++di) {
        int i = t.delta1[di], ti = t.delta2[di];
        // (tau(alpha_i) (x) 1 + 1 (x) alpha_i)(r0) = 0, component along H_c.
        for (int c = 0; c < r; ++c) {
            std::vector<Rational> row(unk.size());
            Rational constant;
            for (int a = 0; a < r; ++a) {
                Rational w = A[ti][a];  // tau(alpha_i)(H_a)
                if (w.is_zero()) continue;
                constant += w * c0(a, c);
                for (size_t u = 0; u < unk.size(); ++u) {
                    if (unk[u] == std::make_pair(a, c)) row[u] += w;
                    if (unk[u] == std::make_pair(c, a)) row[u] -= w;
                }
            }
            for (int b = 0; b < r; ++b) {
                Rational w = A[i][b];  // alpha_i(H_b)
                if (w.is_zero()) continue;
                constant += w * c0(c, b);
                for (size_t u = 0; u < unk.size(); ++u) {
                    if (unk[u] == std::make_pair(c, b)) row[u] += w;
                    if (unk[u] == std::make_pair(b, c)) row[u] -= w;
                }
            }
            M.push_back(row);
            rhs.push_back(-constant);
        }
    }
    std::vector<Rational> s(unk.size());
    if (!M.empty() && !unk.empty()) {
        auto sol = solve(M, rhs, static_cast<int>(unk.size()));
        if (!sol) throw InconsistentConstraints("r0 constraints have no solution for " + t.str());
        s = *sol;
    } else if (!M.empty()) {
        for (const auto& x : rhs)
            if (!x.is_zero()) throw InconsistentConstraints("r0 constraints have no solution for " + t.str());
    }
    out.r0 = cas.c0.scaled(Rational(1, 2));
    for (size_t u = 0; u < unk.size(); ++u) {
        out.r0.add(L.H(unk[u].first), L.H(unk[u].second), s[u]);
        out.r0.add(L.H(unk[u].second), L.H(unk[u].first), -s[u]);
    }
    std::vector<std::vector<Rational>> ns;
    if (M.empty()) {
        for (size_t u = 0; u < unk.size(); ++u) {
            std::vector<Rational> v(unk.size());
            v[u] = 1;
            ns.push_back(v);
        }
    } else if (!unk.empty()) {
        ns = nullspace(M, static_cast<int>(unk.size()));
    }
    for (const auto& v : ns) {
        TwoTensor f;
        for (size_t u = 0; u < unk.size(); ++u) {
            f.add(L.H(unk[u].first), L.H(unk[u].second), v[u]);
            f.add(L.H(unk[u].second), L.H(unk[u].first), -v[u]);
        }
        out.freedom.push_back(f);
    }
    out.r = out.r0 + tail;
    return out;
}

// ---------------------------------------------------------------------------
// CYBE

namespace {

using Key3 = std::array<int, 3>;

struct Key3Hash {
    size_t operator()(const Key3& k) const {
        return (static_cast<size_t>(k[0]) * 1000003u + static_cast<size_t>(k[1])) * 1000003u + static_cast<size_t>(k[2]);
    }
};

using Vec3 = std::unordered_map<Key3, Rational, Key3Hash>;

void add3(Vec3& v, const Key3& k, const Rational& x) {
    if (x.is_zero()) return;
    auto [it, fresh] = v.try_emplace(k, x);
    if (fresh) return;
    it->second += x;
    if (it->second.is_zero()) v.erase(it);
}

// Pair operator on V (x) V: image of e_a (x) e_b.
struct PairOp {
    int d = 0;
    std::vector<std::vector<std::pair<std::pair<int, int>, Rational>>> img;
    const auto& at(int a, int b) const { return img[a * d + b]; }
};

PairOp pair_operator(const TwoTensor& r, const std::vector<SMat>& rho, int d) {
    PairOp op;
    op.d = d;
    op.img.resize(static_cast<size_t>(d) * d);
    std::vector<std::map<std::pair<int, int>, Rational>> acc(static_cast<size_t>(d) * d);
    for (const auto& [k, c] : r.terms()) {
        const SMat& X = rho[k.first];
        const SMat& Y = rho[k.second];
        for (int a = 0; a < d; ++a) {
            if (X.col(a).empty()) continue;
            for (int b = 0; b < d; ++b)
                for (const auto& [i, x] : X.col(a))
                    for (const auto& [j, y] : Y.col(b)) acc[a * d + b][{i, j}] += c * x * y;
        }
    }
    for (size_t k = 0; k < acc.size(); ++k)
        for (auto& [ij, v] : acc[k])
            if (!v.is_zero()) op.img[k].emplace_back(ij, v);
    return op;
}

// Apply the pair operator on legs (p, q) of a vector in V^{(x)3}.
Vec3 apply_legs(const PairOp& op, int p, int q, const Vec3& v) {
    Vec3 out;
    for (const auto& [k, x] : v)
        for (const auto& [ij, c] : op.at(k[p], k[q])) {
            Key3 n = k;
            n[p] = ij.first;
            n[q] = ij.second;
            add3(out, n, x * c);
        }
    return out;
}

bool cyb_vanishes(const PairOp& op) {
    const int d = op.d;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                Vec3 e;
                e[{a, b, c}] = Rational(1);
                Vec3 r12 = apply_legs(op, 0, 1, e), r13 = apply_legs(op, 0, 2, e), r23 = apply_legs(op, 1, 2, e);
                Vec3 total;
                auto acc = [&](const Vec3& v, int s) {
                    for (const auto& [k, x] : v) add3(total, k, s == 1 ? x : -x);
                };
                acc(apply_legs(op, 0, 1, r13), 1);   // R12 R13
                acc(apply_legs(op, 0, 2, r12), -1);  // R13 R12
                acc(apply_legs(op, 0, 1, r23), 1);   // R12 R23
                acc(apply_legs(op, 1, 2, r12), -1);  // R23 R12
                acc(apply_legs(op, 0, 2, r23), 1);   // R13 R23
                acc(apply_legs(op, 1, 2, r13), -1);  // R23 R13
                if (!total.empty()) return false;
            }
    return true;
}

}  // namespace

CYBEReport check_cybe(const StructureConstants& sc, const TwoTensor& r, const std::vector<SMat>& rho) {
    CYBEReport rep;
    int d = rho.empty() ? 0 : rho.front().rows();
    rep.cybe_holds = cyb_vanishes(pair_operator(r, rho, d));
    TwoTensor s = r + r.op();
    rep.symmetric_part_invariant = true;
    for (int x = 0; x < sc.dim() && rep.symmetric_part_invariant; ++x)
        rep.symmetric_part_invariant = sc.ad_tensor(x, s).is_zero();
    return rep;
}

CYBEReport check_cybe(const LieAlgebra& L, const TwoTensor& r, const Module& V) {
    for (int b = 0; b < L.semisimple_dim(); ++b)
        if (V.action(b).is_zero()) throw NotFaithful("basis element " + L.sc().label(b) + " acts by zero");
    return check_cybe(L.sc(), r, V.actions());
}

CYBEReport check_cybe(const LieAlgebra& L, const TwoTensor& r) { return check_cybe(L, r, adjoint_module(L)); }

bool cybe_in_tensor_cube(const StructureConstants& sc, const TwoTensor& r) {
    Vec3 total;
    for (const auto& [k1, c1] : r.terms())
        for (const auto& [k2, c2] : r.terms()) {
            Rational c = c1 * c2;
            int a = k1.first, b = k1.second, x = k2.first, y = k2.second;
            for (const auto& [m, v] : sc.bracket(a, x)) add3(total, {m, b, y}, c * v);  // [r12, r13]
            for (const auto& [m, v] : sc.bracket(b, x)) add3(total, {a, m, y}, c * v);  // [r12, r23]
            for (const auto& [m, v] : sc.bracket(b, y)) add3(total, {a, x, m}, c * v);  // [r13, r23]
        }
    return total.empty();
}

// ---------------------------------------------------------------------------
// Semidirect algebras and cobrackets

SemidirectAlgebra make_semidirect(const LieAlgebra& L, const Module& V) {
    int n = L.dim(), d = V.dim();
    std::vector<std::string> labels = L.sc().labels();
    for (int j = 0; j < d; ++j) labels.push_back("v" + std::to_string(j + 1));
    SemidirectAlgebra S{StructureConstants(n + d, labels), n};
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) S.sc.set_bracket(a, b, L.bracket(a, b));
        for (int j = 0; j < d; ++j) {
            SVec v;
            for (const auto& [i, c] : V.action(a).col(j)) v.emplace_back(n + i, c);
            S.sc.set_bracket(n + j, a, scaled(v, Rational(-1)));
            S.sc.set_bracket(a, n + j, std::move(v));
        }
    }
    return S;
}

Cobracket cobracket_from_r(const StructureConstants& carrier, const TwoTensor& r) {
    Cobracket d;
    d.delta.resize(carrier.dim());
    for (int x = 0; x < carrier.dim(); ++x) {
        d.delta[x] = carrier.ad_tensor(x, r).scaled(Rational(-1));
        if (!d.delta[x].is_antisymmetric())
            throw NotAntisymmetric("delta(" + carrier.label(x) + ") is not antisymmetric");
    }
    return d;
}

Cobracket cobracket_from_r(const LieAlgebra& L, const TwoTensor& r) { return cobracket_from_r(L.sc(), r); }
Cobracket cobracket_from_r(const SemidirectAlgebra& S, const TwoTensor& r) { return cobracket_from_r(S.sc, r); }

Cobracket scaled(const Cobracket& d, const Rational& s) {
    Cobracket out;
    for (const auto& t : d.delta) out.delta.push_back(t.scaled(s));
    return out;
}

BialgebraReport check_lie_bialgebra(const StructureConstants& sc, const Cobracket& d) {
    BialgebraReport rep;
    const int n = sc.dim();
    rep.antisym = std::all_of(d.delta.begin(), d.delta.end(), [](const TwoTensor& t) { return t.is_antisymmetric(); });
    rep.co_jacobi = true;
    for (int x = 0; x < n && rep.co_jacobi; ++x) {
        Vec3 total;
        for (const auto& [k, c] : d.delta[x].terms())
            for (const auto& [k2, c2] : d.delta[k.second].terms()) {
                Rational v = c * c2;
                int a = k.first, b = k2.first, e = k2.second;
                add3(total, {a, b, e}, v);
                add3(total, {b, e, a}, v);
                add3(total, {e, a, b}, v);
            }
        rep.co_jacobi = total.empty();
    }
    rep.cocycle = true;
    for (int a = 0; a < n && rep.cocycle; ++a)
        for (int b = a + 1; b < n && rep.cocycle; ++b) {
            TwoTensor lhs;
            for (const auto& [k, c] : sc.bracket(a, b)) lhs = lhs + d.delta[k].scaled(c);
            // [delta(a), Delta b] + [Delta a, delta(b)]
            TwoTensor rhs = sc.ad_tensor(a, d.delta[b]) - sc.ad_tensor(b, d.delta[a]);
            rep.cocycle = lhs == rhs;
        }
    return rep;
}

BialgebraReport check_lie_bialgebra(const SemidirectAlgebra& S, const Cobracket& d) {
    BialgebraReport rep = check_lie_bialgebra(S.sc, d);
    for (int x = 0; x < S.dim(); ++x)
        for (const auto& [k, c] : d.delta[x].terms()) {
            bool g1 = S.in_g(k.first), g2 = S.in_g(k.second);
            if (S.in_g(x) && !(g1 && g2)) rep.g_subbialgebra = false;
            if (!S.in_g(x) && g1 == g2) rep.v_shape = false;
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Drinfeld double

DoubleResult drinfeld_double(const StructureConstants& L, const Cobracket& d) {
    const int n = L.dim();
    for (const auto& t : d.delta)
        if (!t.is_antisymmetric()) throw NotAntisymmetric("double needs an antisymmetric cobracket");
    std::vector<std::string> labels = L.labels();
    for (int i = 0; i < n; ++i) labels.push_back(L.label(i) + "*");
    DoubleResult out;
    out.D = StructureConstants(2 * n, labels);
    // coefficient of e_a (x) e_b in delta(e_k)
    auto dc = [&](int k, int a, int b) { return d.delta[k].get(a, b); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            out.D.set_bracket(i, j, L.bracket(i, j));
            SVec dual;  // [e^i, e^j] = sum_k delta(e_k)^{ij} e^k
            for (int k = 0; k < n; ++k) {
                Rational v = dc(k, i, j);
                if (!v.is_zero()) dual.emplace_back(n + k, v);
            }
            out.D.set_bracket(n + i, n + j, dual);
            // [e_i, e^j] = -sum_k c_{ik}^j e^k + sum_k delta(e_i)^{jk} e_k
            SVec mixed;
            for (int k = 0; k < n; ++k) {
                Rational v = dc(i, j, k);
                if (!v.is_zero()) mixed.emplace_back(k, v);
            }
            for (int k = 0; k < n; ++k) {
                Rational v = sparse_get(L.bracket(i, k), j);
                if (!v.is_zero()) mixed.emplace_back(n + k, -v);
            }
            out.D.set_bracket(i, n + j, mixed);
            out.D.set_bracket(n + j, i, scaled(mixed, Rational(-1)));
        }
    out.jacobi_holds = out.D.jacobi_holds();

    const int N = 2 * n;
    std::vector<SMat> ad(N);
    for (int i = 0; i < N; ++i) ad[i] = out.D.ad(i);
    std::vector<std::vector<Rational>> K(N, std::vector<Rational>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            SMat p = ad[i] * ad[j];
            Rational tr;
            for (int c = 0; c < N; ++c) tr += p.at(c, c);
            K[i][j] = tr;
        }
    out.killing_nondegenerate = rank_of(K, N) == N;
    std::vector<std::vector<Rational>> cm;
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) {
            std::vector<Rational> row(N);
            bool any = false;
            for (int i = 0; i < N; ++i) {
                row[i] = sparse_get(out.D.bracket(i, j), k);
                any = any || !row[i].is_zero();
            }
            if (any) cm.push_back(row);
        }
    out.center_dim = N - (cm.empty() ? 0 : rank_of(cm, N));

    for (int i = 0; i < n; ++i) out.r_canonical.add(i, n + i, 1);
    CYBEReport cy = check_cybe(out.D, out.r_canonical, ad);
    out.canonical_r_cybe = cy.cybe_holds;
    out.canonical_r_symmetric_invariant = cy.symmetric_part_invariant;

    // Manin triple: canonical pairing invariant, both halves isotropic subalgebras.
    auto pairing = [&](int a, int b) -> Rational {
        if (a < n && b >= n) return a == b - n ? 1 : 0;
        if (a >= n && b < n) return b == a - n ? 1 : 0;
        return 0;
    };
    bool ok = true;
    for (int a = 0; a < N && ok; ++a)
        for (int b = 0; b < N && ok; ++b) {
            bool same = (a < n) == (b < n);
            if (same) {
                ok = pairing(a, b).is_zero();
                for (const auto& [k, c] : out.D.bracket(a, b))
                    if ((k < n) != (a < n)) ok = false;
            }
            for (int e = 0; e < N && ok; ++e) {
                Rational lhs, rhs;
                for (const auto& [k, c] : out.D.bracket(a, b)) lhs += c * pairing(k, e);
                for (const auto& [k, c] : out.D.bracket(b, e)) rhs += c * pairing(a, k);
                ok = lhs == rhs;
            }
        }
    out.manin_triple = ok;
    return out;
}

// ---------------------------------------------------------------------------
// Parabolic construction

ParabolicResult parabolic_semidirect(const RootSystem& ambient, int node, const BDTriple& t) {
    if (!ambient.is_simple()) throw NotSimple("parabolic construction needs a simple ambient");
    auto cm = ambient.cominuscule_nodes();
    if (std::find(cm.begin(), cm.end(), node) == cm.end())
        throw NotCominuscule("node " + std::to_string(node + 1) + " of " + ambient.type_string() +
                             " has a non-abelian radical");
    for (size_t k = 0; k < t.delta1.size(); ++k)
        if (t.delta1[k] == node || t.delta2[k] == node)
            throw TripleTouchesNode("triple " + t.str() + " uses node " + std::to_string(node + 1));
    LieAlgebra Lh = chevalley_basis(ambient, 0);
    TwoTensor r = bd_r_matrix(Lh, t).r;
    Cobracket full = cobracket_from_r(Lh.sc(), r);

    ParabolicResult out;
    RadicalInfo info = abelian_radical_module(ambient, node);
    out.levi_type = info.levi_type;
    out.lambda_levi = info.lambda_levi;
    const auto& pos = ambient.positive_roots();
    std::vector<int> levi, rad;
    for (int k = 0; k < Lh.npos(); ++k)
        if (pos[k][node] == 0) levi.push_back(k);
    for (int k : levi) out.ambient_index.push_back(Lh.E(k));
    for (int k : levi) out.ambient_index.push_back(Lh.F(k));
    for (int i = 0; i < Lh.rank(); ++i) out.ambient_index.push_back(Lh.H(i));
    int g_dim = static_cast<int>(out.ambient_index.size());
    for (int k = 0; k < Lh.npos(); ++k)
        if (pos[k][node] > 0) out.ambient_index.push_back(Lh.E(k));
    std::vector<int> to_p(Lh.dim(), -1);
    for (size_t i = 0; i < out.ambient_index.size(); ++i) to_p[out.ambient_index[i]] = static_cast<int>(i);

    int pd = static_cast<int>(out.ambient_index.size());
    std::vector<std::string> labels;
    for (int a : out.ambient_index) labels.push_back(Lh.sc().label(a));
    out.S = SemidirectAlgebra{StructureConstants(pd, labels), g_dim};
    bool closed = true;
    for (int i = 0; i < pd; ++i)
        for (int j = 0; j < pd; ++j) {
            SVec v;
            for (const auto& [k, c] : Lh.bracket(out.ambient_index[i], out.ambient_index[j])) {
                if (to_p[k] < 0) {
                    closed = false;
                    continue;
                }
                v.emplace_back(to_p[k], c);
            }
            std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            out.S.sc.set_bracket(i, j, v);
        }
    if (!closed) throw Error("InternalError", "parabolic subalgebra is not closed");
    out.closure = true;
    out.delta.delta.resize(pd);
    for (int i = 0; i < pd; ++i)
        for (const auto& [k, c] : full.delta[out.ambient_index[i]].terms()) {
            int a = to_p[k.first], b = to_p[k.second];
            if (a < 0 || b < 0) {
                out.closure = false;
                continue;
            }
            out.delta.delta[i].add(a, b, c);
        }
    out.report = check_lie_bialgebra(out.S, out.delta);
    return out;
}

}  // namespace qsym
