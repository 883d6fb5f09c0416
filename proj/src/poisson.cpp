#include "qsym/poisson.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>
#include <unordered_map>

namespace qsym {

bool PairOperator::is_zero() const {
    return std::all_of(img.begin(), img.end(), [](const SVec& v) { return v.empty(); });
}

bool PairOperator::is_skew() const {
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            // P(e_b (x) e_a) must equal -flip(P(e_a (x) e_b)).
            SparseAccum<Rational> acc;
            for (const auto& [k, v] : apply(a, b)) acc.add((k % dim) * dim + k / dim, -v);
            if (acc.take() != apply(b, a)) return false;
        }
    return true;
}

SMat PairOperator::matrix() const {
    SMat m(dim * dim, dim * dim);
    for (int k = 0; k < dim * dim; ++k) m.col(k) = img[k];
    return m;
}

PairOperator pair_operator(const TwoTensor& t, const std::vector<SMat>& rho, int dim) {
    PairOperator P;
    P.dim = dim;
    P.img.resize(static_cast<size_t>(dim) * dim);
    std::vector<SparseAccum<Rational>> acc(P.img.size());
    for (const auto& [k, c] : t.terms()) {
        const SMat& X = rho[k.first];
        const SMat& Y = rho[k.second];
        for (int a = 0; a < dim; ++a) {
            if (X.col(a).empty()) continue;
            for (int b = 0; b < dim; ++b)
                for (const auto& [i, x] : X.col(a))
                    for (const auto& [j, y] : Y.col(b)) acc[a * dim + b].add(i * dim + j, c * x * y);
        }
    }
    for (size_t k = 0; k < acc.size(); ++k) P.img[k] = acc[k].take();
    return P;
}

PairOperator r_minus_operator(const LieAlgebra&, const TwoTensor& r, const Module& V) {
    return pair_operator(r.minus_part(), V.actions(), V.dim());
}

PairOperator r_plus_operator(const LieAlgebra&, const TwoTensor& r, const Module& V) {
    return pair_operator(r.plus_part(), V.actions(), V.dim());
}

SMat embed_legs(const PairOperator& P, int leg1, int leg2) {
    const int d = P.dim;
    SMat m(d * d * d, d * d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                int idx[3] = {a, b, c};
                SparseAccum<Rational> acc;
                for (const auto& [k, v] : P.apply(idx[leg1], idx[leg2])) {
                    int out[3] = {a, b, c};
                    out[leg1] = k / d;
                    out[leg2] = k % d;
                    acc.add((out[0] * d + out[1]) * d + out[2], v);
                }
                m.col((a * d + b) * d + c) = acc.take();
            }
    return m;
}

SMat schouten_square(const PairOperator& P) {
    SMat p12 = embed_legs(P, 0, 1), p13 = embed_legs(P, 0, 2), p23 = embed_legs(P, 1, 2);
    return commutator(p12, p13) + commutator(p12, p23) + commutator(p13, p23);
}

namespace {

// Dense-index sparse vector on V^{(x)3} used in the criterion loops.
using Vec3 = std::unordered_map<long long, Rational>;

void add_to(Vec3& v, long long k, const Rational& x) {
    if (x.is_zero()) return;
    auto [it, fresh] = v.try_emplace(k, x);
    if (fresh) return;
    it->second += x;
    if (it->second.is_zero()) v.erase(it);
}

struct Legs {
    int p, q;
};

Vec3 apply_legs(const PairOperator& P, Legs l, const Vec3& v) {
    const long long d = P.dim;
    Vec3 out;
    for (const auto& [key, x] : v) {
        int idx[3] = {static_cast<int>(key / (d * d)), static_cast<int>(key / d % d), static_cast<int>(key % d)};
        for (const auto& [k, c] : P.apply(idx[l.p], idx[l.q])) {
            int o[3] = {idx[0], idx[1], idx[2]};
            o[l.p] = static_cast<int>(k / d);
            o[l.q] = static_cast<int>(k % d);
            add_to(out, (o[0] * d + o[1]) * d + o[2], x * c);
        }
    }
    return out;
}

// [[P, P]] applied to a vector.
Vec3 schouten_apply(const PairOperator& P, const Vec3& u) {
    const Legs l12{0, 1}, l13{0, 2}, l23{1, 2};
    Vec3 a12 = apply_legs(P, l12, u), a13 = apply_legs(P, l13, u), a23 = apply_legs(P, l23, u);
    Vec3 total;
    auto acc = [&](const Vec3& v, bool plus) {
        for (const auto& [k, x] : v) add_to(total, k, plus ? x : -x);
    };
    acc(apply_legs(P, l12, a13), true);
    acc(apply_legs(P, l13, a12), false);
    acc(apply_legs(P, l12, a23), true);
    acc(apply_legs(P, l23, a12), false);
    acc(apply_legs(P, l13, a23), true);
    acc(apply_legs(P, l23, a13), false);
    return total;
}

bool dominant(const IntVec& w) {
    return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
}

IntVec sum3(const std::vector<IntVec>& w, int i, int j, int k) {
    IntVec s = w[i];
    for (size_t t = 0; t < s.size(); ++t) s[t] += w[j][t] + w[k][t];
    return s;
}

std::vector<std::array<int, 3>> triples_to_test(int d, const std::vector<IntVec>* weights) {
    std::vector<std::array<int, 3>> out;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k)
                if (!weights || dominant(sum3(*weights, i, j, k))) out.push_back({i, j, k});
    return out;
}

// Runs check(t) over all triples, stopping early once any returns false.
template <class F>
void parallel_over(const std::vector<std::array<int, 3>>& ts, int threads, F check) {
    std::atomic<size_t> next{0};
    std::atomic<bool> stop{false};
    auto worker = [&] {
        for (;;) {
            if (stop.load()) return;
            size_t t = next.fetch_add(1);
            if (t >= ts.size()) return;
            if (!check(ts[t])) stop.store(true);
        }
    };
    threads = std::max(1, threads);
    if (threads == 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace

SchoutenReport schouten_criterion(const PairOperator& P, const SchoutenOptions& opt) {
    const long long d = P.dim;
    auto ts = triples_to_test(P.dim, opt.weights);
    SchoutenReport rep;
    rep.checked = static_cast<long long>(ts.size());
    std::atomic<bool> raw{true}, proj{true};
    parallel_over(ts, opt.threads, [&](const std::array<int, 3>& t) {
        Vec3 u;
        const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
        for (int s = 0; s < 6; ++s) {
            long long key = (t[perm[s][0]] * d + t[perm[s][1]]) * d + t[perm[s][2]];
            u[key] = Rational(s < 3 ? 1 : -1);
        }
        Vec3 img = schouten_apply(P, u);
        if (!img.empty()) raw.store(false);
        std::map<std::array<long long, 3>, Rational> sym;
        for (const auto& [k, x] : img) {
            std::array<long long, 3> m{k / (d * d), k / d % d, k % d};
            std::sort(m.begin(), m.end());
            sym[m] += x;
        }
        bool zero = std::all_of(sym.begin(), sym.end(), [](const auto& e) { return e.second.is_zero(); });
        if (!zero) proj.store(false);
        return raw.load() || proj.load();
    });
    rep.vanishes_raw = raw.load();
    rep.vanishes_sym_projected = proj.load();
    return rep;
}

// ---------------------------------------------------------------------------
// Brackets on S(V)

void PolyElem::add(std::vector<int> mono, const Rational& c) {
    if (c.is_zero()) return;
    std::sort(mono.begin(), mono.end());
    auto [it, fresh] = terms.try_emplace(std::move(mono), c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

std::string PolyElem::str(const std::vector<std::string>& names) const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms) {
        bool neg = c.sign() < 0;
        Rational a = neg ? -c : c;
        if (s.empty())
            s = neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        std::string mono;
        for (size_t k = 0; k < m.size(); ++k) {
            if (k) mono += "*";
            mono += names.empty() ? "v" + std::to_string(m[k] + 1) : names[m[k]];
        }
        if (!a.is_one()) s += a.str() + (mono.empty() ? "" : "*");
        s += mono.empty() && a.is_one() ? "1" : mono;
    }
    return s;
}

PolyElem BracketTable::get(int i, int j) const {
    if (i == j) return {};
    bool flip = i > j;
    auto it = br.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == br.end()) return {};
    if (!flip) return it->second;
    PolyElem out;
    for (const auto& [m, c] : it->second.terms) out.terms.emplace(m, -c);
    return out;
}

BracketTable generator_brackets(const PairOperator& P) {
    BracketTable B;
    B.dim = P.dim;
    for (int i = 0; i < P.dim; ++i)
        for (int j = i + 1; j < P.dim; ++j) {
            PolyElem p;
            for (const auto& [k, c] : P.apply(i, j)) p.add({k / P.dim, k % P.dim}, c);
            if (!p.is_zero()) B.br.emplace(std::make_pair(i, j), std::move(p));
        }
    return B;
}

BracketTable generator_brackets(const LieAlgebra& L, const TwoTensor& r, const Module& V) {
    return generator_brackets(r_minus_operator(L, r, V));
}

bool jacobi_oracle(const BracketTable& B, const JacobiOptions& opt) {
    // {v_i, p} for p of degree 2 by the Leibniz rule.
    auto bracket_with = [&](int i, const PolyElem& p, PolyElem& out, const Rational& s) {
        for (const auto& [m, c] : p.terms) {
            for (int slot = 0; slot < 2; ++slot) {
                int other = m[1 - slot];
                for (const auto& [m2, c2] : B.get(i, m[slot]).terms) {
                    std::vector<int> mono = m2;
                    mono.push_back(other);
                    out.add(std::move(mono), s * c * c2);
                }
            }
        }
    };
    auto ts = triples_to_test(B.dim, opt.weights);
    std::atomic<bool> ok{true};
    parallel_over(ts, opt.threads, [&](const std::array<int, 3>& t) {
        PolyElem J;
        bracket_with(t[0], B.get(t[1], t[2]), J, Rational(1));
        bracket_with(t[1], B.get(t[2], t[0]), J, Rational(1));
        bracket_with(t[2], B.get(t[0], t[1]), J, Rational(1));
        if (!J.is_zero()) ok.store(false);
        return J.is_zero();
    });
    return ok.load();
}

// ---------------------------------------------------------------------------
// Casimir commutators

bool CasimirCommutators::all_equal() const {
    return c12_c23 == c23_c13 && c23_c13 == c13_c12 && c13_c12 == schouten;
}

bool CasimirCommutators::skew_under_flips() const {
    const int n = schouten.rows();
    int d = 0;
    while (d * d * d < n) ++d;
    // Permutation matrices of the three transpositions.
    auto flip = [&](int p, int q) {
        SMat m(n, n);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c) {
                    int idx[3] = {a, b, c};
                    std::swap(idx[p], idx[q]);
                    m.col((a * d + b) * d + c) = {{(idx[0] * d + idx[1]) * d + idx[2], Rational(1)}};
                }
        return m;
    };
    for (auto [p, q] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        SMat s = flip(p, q);
        if (!(s * schouten * s == schouten.scaled(Rational(-1)))) return false;
    }
    return true;
}

CasimirCommutators casimir_commutators(const LieAlgebra& L, const TwoTensor& r, const Module& V) {
    PairOperator c = r_plus_operator(L, r, V);
    SMat c12 = embed_legs(c, 0, 1), c13 = embed_legs(c, 0, 2), c23 = embed_legs(c, 1, 2);
    CasimirCommutators out;
    out.c12_c23 = commutator(c12, c23);
    out.c23_c13 = commutator(c23, c13);
    out.c13_c12 = commutator(c13, c12);
    out.schouten = schouten_square(r_minus_operator(L, r, V));
    return out;
}

bool schouten_equivariant(const LieAlgebra& L, const TwoTensor& r, const Module& V) {
    SMat S = schouten_square(r_minus_operator(L, r, V));
    const int d = V.dim();
    for (int x = 0; x < L.dim(); ++x) {
        const auto& rho = V.actions();
        // Delta^2(x) = x(x)1(x)1 + 1(x)x(x)1 + 1(x)1(x)x as a dim^3 matrix.
        SMat D(d * d * d, d * d * d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c) {
                    SparseAccum<Rational> acc;
                    for (const auto& [i, v] : rho[x].col(a)) acc.add((i * d + b) * d + c, v);
                    for (const auto& [i, v] : rho[x].col(b)) acc.add((a * d + i) * d + c, v);
                    for (const auto& [i, v] : rho[x].col(c)) acc.add((a * d + b) * d + i, v);
                    D.col((a * d + b) * d + c) = acc.take();
                }
        if (!commutator(D, S).is_zero()) return false;
    }
    return true;
}

}  // namespace qsym
