#include "qsym/liealg.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "qsym/errors.hpp"

namespace qsym {

// ---------------------------------------------------------------------------
// StructureConstants

StructureConstants::StructureConstants(int dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)), table_(static_cast<size_t>(dim) * dim) {}

SVec StructureConstants::bracket(const SVec& a, const SVec& b) const {
    SparseAccum<Rational> acc;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) {
            Rational s = x * y;
            for (const auto& [k, c] : bracket(i, j)) acc.add(k, s * c);
        }
    return acc.take();
}

bool StructureConstants::is_antisymmetric() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            if (axpy(bracket(i, j), Rational(1), bracket(j, i)).size() != 0) return false;
    return true;
}

bool StructureConstants::jacobi_holds() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = j + 1; k < dim_; ++k) {
                SVec t = bracket(SVec{{i, Rational(1)}}, bracket(j, k));
                t = axpy(t, Rational(1), bracket(SVec{{j, Rational(1)}}, bracket(k, i)));
                t = axpy(t, Rational(1), bracket(SVec{{k, Rational(1)}}, bracket(i, j)));
                if (!t.empty()) return false;
            }
    return true;
}

SMat StructureConstants::ad(int i) const {
    SMat m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) m.col(j) = bracket(i, j);
    return m;
}

TwoTensor StructureConstants::ad_tensor(int x, const TwoTensor& t) const {
    TwoTensor out;
    for (const auto& [k, v] : t.terms()) {
        for (const auto& [a, c] : bracket(x, k.first)) out.add(a, k.second, v * c);
        for (const auto& [b, c] : bracket(x, k.second)) out.add(k.first, b, v * c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Highest-weight modules from Cartan data.

RawModule build_raw_module(const RootSystem& rs, const IntVec& lambda) {
    const int r = rs.rank();
    if (static_cast<int>(lambda.size()) != r) throw NotDominant("weight length does not match rank");
    if (!rs.is_dominant(lambda)) throw NotDominant("weight is not dominant");
    const auto& A = rs.cartan();
    auto shift = [&](const IntVec& mu, int i, int sign) {
        IntVec out = mu;
        for (int j = 0; j < r; ++j) out[j] += sign * A[i][j];
        return out;
    };

    RawModule m;
    std::map<IntVec, std::vector<int>> space;  // weight -> global basis indices
    // Columns are filled as we go; matrices are sized at the end.
    std::vector<std::vector<SVec>> ecol(r), fcol(r);
    auto new_vector = [&](const IntVec& w) {
        int idx = m.dim++;
        m.weights.push_back(w);
        for (int i = 0; i < r; ++i) {
            ecol[i].emplace_back();
            fcol[i].emplace_back();
        }
        return idx;
    };
    space[lambda].push_back(new_vector(lambda));

    std::vector<IntVec> level{lambda};
    while (!level.empty()) {
        std::set<IntVec> next;
        for (const auto& nu : level)
            for (int i = 0; i < r; ++i) next.insert(shift(nu, i, -1));
        std::vector<IntVec> built;
        for (const auto& mu : next) {
            IncrementalBasis<Rational> basis;
            std::vector<int> members;
            for (int i = 0; i < r; ++i) {
                IntVec nu = shift(mu, i, +1);
                auto it = space.find(nu);
                if (it == space.end()) continue;
                const std::vector<int> src = it->second;
                for (int b : src) {
                    // E_j F_i b = F_i E_j b + delta_ij <nu, alpha_i^vee> b
                    std::vector<SVec> parts(r);
                    SVec image;
                    for (int j = 0; j < r; ++j) {
                        SVec v;
                        for (const auto& [c, x] : ecol[j][b])
                            for (const auto& [d, y] : fcol[i][c]) v = axpy(v, x * y, SVec{{d, Rational(1)}});
                        if (j == i && nu[i] != 0) v = axpy(v, Rational(nu[i]), SVec{{b, Rational(1)}});
                        parts[j] = v;
                        image = axpy(image, Rational(1), v);
                    }
                    auto dep = basis.offer(image);
                    if (!dep) {
                        int idx = new_vector(mu);
                        members.push_back(idx);
                        fcol[i][b] = {{idx, Rational(1)}};
                        for (int j = 0; j < r; ++j) ecol[j][idx] = parts[j];
                    } else {
                        SVec col;
                        for (const auto& [k, c] : *dep) col.emplace_back(members[k], c);
                        fcol[i][b] = col;
                    }
                }
            }
            if (!members.empty()) {
                space[mu] = members;
                built.push_back(mu);
            }
        }
        level = std::move(built);
    }
    for (int i = 0; i < r; ++i) {
        SMat e(m.dim, m.dim), f(m.dim, m.dim);
        for (int j = 0; j < m.dim; ++j) {
            e.col(j) = ecol[i][j];
            f.col(j) = fcol[i][j];
        }
        m.e.push_back(std::move(e));
        m.f.push_back(std::move(f));
    }
    return m;
}

// ---------------------------------------------------------------------------
// Chevalley basis

namespace {

std::string root_label(const IntVec& c) {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

SMat diag_weights(const std::vector<IntVec>& weights, int i) {
    int n = static_cast<int>(weights.size());
    SMat h(n, n);
    for (int j = 0; j < n; ++j)
        if (weights[j][i] != 0) h.col(j) = {{j, Rational(weights[j][i])}};
    return h;
}

// Root vectors E_b, F_b as matrices in a representation given by simple generators.
void extend_root_vectors(const std::vector<RootPath>& paths, const std::vector<int>& simple_index,
                         const std::vector<SMat>& e, const std::vector<SMat>& f, std::vector<SMat>& XE,
                         std::vector<SMat>& XF) {
    size_t n = paths.size();
    XE.assign(n, SMat());
    XF.assign(n, SMat());
    for (size_t i = 0; i < simple_index.size(); ++i) {
        XE[simple_index[i]] = e[i];
        XF[simple_index[i]] = f[i];
    }
    for (size_t k = 0; k < n; ++k) {
        const RootPath& p = paths[k];
        if (p.simple < 0) continue;
        Rational s(1, p.p + 1);
        XE[k] = commutator(e[p.simple], XE[p.lower]).scaled(s);
        XF[k] = commutator(XF[p.lower], f[p.simple]).scaled(s);
    }
}

}  // namespace

LieAlgebra::LieAlgebra(RootSystem rs, int central_dims) : rs_(std::move(rs)), nz_(central_dims) {
    const int r = rs_.rank();
    npos_ = rs_.num_positive();
    const auto& pos = rs_.positive_roots();
    int dim = 2 * npos_ + r + nz_;

    simple_index_.resize(r);
    for (int i = 0; i < r; ++i) {
        IntVec u(r, 0);
        u[i] = 1;
        simple_index_[i] = rs_.root_index(u);
    }
    paths_.assign(npos_, RootPath());
    for (int k = 0; k < npos_; ++k) {
        int h = 0;
        for (int x : pos[k]) h += x;
        if (h == 1) continue;
        for (int i = 0; i < r; ++i) {
            if (pos[k][i] == 0) continue;
            IntVec g = pos[k];
            g[i] -= 1;
            int gi = rs_.root_index(g);
            if (gi < 0) continue;
            int p = 0;
            for (;;) {
                IntVec t = g;
                t[i] -= p + 1;
                if (t[i] < 0 || rs_.root_index(t) < 0) break;
                ++p;
            }
            paths_[k] = RootPath{i, gi, p};
            break;
        }
    }

    std::vector<std::string> labels;
    weights_.assign(dim, IntVec(r, 0));
    for (int k = 0; k < npos_; ++k) {
        labels.push_back("E" + root_label(pos[k]));
        weights_[k] = rs_.root_to_fund(pos[k]);
    }
    for (int k = 0; k < npos_; ++k) {
        labels.push_back("F" + root_label(pos[k]));
        IntVec w = weights_[k];
        for (auto& x : w) x = -x;
        weights_[npos_ + k] = w;
    }
    for (int i = 0; i < r; ++i) labels.push_back("H" + std::to_string(i + 1));
    for (int k = 0; k < nz_; ++k) labels.push_back("z" + std::to_string(k + 1));
    sc_ = StructureConstants(dim, labels);

    // Faithful representation: direct sum of the adjoint modules of the components.
    std::vector<SMat> e(r), f(r);
    std::vector<IntVec> fw;
    {
        std::vector<RawModule> parts;
        int total = 0;
        for (size_t c = 0; c < rs_.components().size(); ++c) {
            parts.push_back(build_raw_module(rs_, rs_.root_to_fund(rs_.highest_root(static_cast<int>(c)))));
            total += parts.back().dim;
        }
        for (int i = 0; i < r; ++i) {
            e[i] = SMat(total, total);
            f[i] = SMat(total, total);
        }
        int off = 0;
        for (const auto& p : parts) {
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < p.dim; ++j) {
                    for (const auto& [row, v] : p.e[i].col(j)) e[i].col(off + j).emplace_back(off + row, v);
                    for (const auto& [row, v] : p.f[i].col(j)) f[i].col(off + j).emplace_back(off + row, v);
                }
            fw.insert(fw.end(), p.weights.begin(), p.weights.end());
            off += p.dim;
        }
    }
    std::vector<SMat> XE, XF;
    extend_root_vectors(paths_, simple_index_, e, f, XE, XF);
    std::vector<SMat> Hm(r);
    for (int i = 0; i < r; ++i) Hm[i] = diag_weights(fw, i);

    // Root-vector matrix for a signed root (root coordinates), or nullptr.
    auto signed_index = [&](const IntVec& s) -> int {
        int k = rs_.root_index(s);
        if (k >= 0) return E(k);
        IntVec n = s;
        for (auto& x : n) x = -x;
        k = rs_.root_index(n);
        return k >= 0 ? F(k) : -1;
    };
    auto signed_coords = [&](int b) {
        IntVec c = pos[root_of(b)];
        if (is_F(b))
            for (auto& x : c) x = -x;
        return c;
    };
    auto matrix_of = [&](int b) -> const SMat& { return is_E(b) ? XE[root_of(b)] : XF[root_of(b)]; };

    for (int k = 0; k < npos_; ++k) {
        // [E_b, F_b] = H_b must hold in the faithful representation.
        SMat hb(static_cast<int>(fw.size()), static_cast<int>(fw.size()));
        for (const auto& [i, c] : coroot(k)) hb = hb + Hm[i - 2 * npos_].scaled(c);
        if (commutator(XE[k], XF[k]) != hb)
            throw Error("InternalError", "Chevalley normalization failed for " + labels[k]);
    }

    for (int a = 0; a < dim; ++a) {
        for (int b = a + 1; b < dim; ++b) {
            SVec v;
            bool ca = is_cartan(a), cb = is_cartan(b);
            if (a >= Z(0) || b >= Z(0)) {
                // central
            } else if (ca && cb) {
                // abelian Cartan
            } else if (ca || cb) {
                int h = ca ? a : b, x = ca ? b : a;
                int i = h - 2 * npos_;
                int w = weights_[x][i];
                if (w != 0) v = {{x, Rational(ca ? w : -w)}};
            } else {
                IntVec s = signed_coords(a), t = signed_coords(b);
                for (int i = 0; i < r; ++i) s[i] += t[i];
                bool zero = std::all_of(s.begin(), s.end(), [](int x) { return x == 0; });
                if (zero) {
                    // a = E_b, b = F_b by ordering
                    v = coroot(root_of(a));
                } else {
                    int target = signed_index(s);
                    if (target >= 0) {
                        SMat c = commutator(matrix_of(a), matrix_of(b));
                        const SMat& tm = matrix_of(target);
                        int col = 0;
                        while (tm.col(col).empty()) ++col;
                        auto [row, val] = tm.col(col).front();
                        Rational coef = c.at(row, col) / val;
                        if (c != tm.scaled(coef))
                            throw Error("InternalError", "bracket not proportional to a root vector");
                        if (!coef.is_zero()) v = {{target, coef}};
                    }
                }
            }
            sc_.set_bracket(b, a, scaled(v, Rational(-1)));
            sc_.set_bracket(a, b, std::move(v));
        }
    }

    gram_.assign(dim, std::vector<Rational>(dim));
    for (int k = 0; k < npos_; ++k) {
        Rational v = Rational(2) / rs_.form_roots(pos[k], pos[k]);
        gram_[E(k)][F(k)] = gram_[F(k)][E(k)] = v;
    }
    const auto& B = rs_.root_form();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) gram_[H(i)][H(j)] = Rational(4) * B[i][j] / (B[i][i] * B[j][j]);
    for (int k = 0; k < nz_; ++k) gram_[Z(k)][Z(k)] = 1;
}

int LieAlgebra::E_simple(int i) const { return simple_index_[i]; }

SVec LieAlgebra::coroot(int root) const {
    auto cc = rs_.coroot_coeffs(rs_.positive_roots()[root]);
    SVec v;
    for (int i = 0; i < rank(); ++i)
        if (!cc[i].is_zero()) v.emplace_back(H(i), cc[i]);
    return v;
}

LieAlgebra chevalley_basis(const RootSystem& rs, int central_dims) { return LieAlgebra(rs, central_dims); }

CasimirResult casimir(const LieAlgebra& L) {
    CasimirResult out;
    const int r = L.rank();
    // Cartan block: inverse of the Gram matrix of the H_i.
    std::vector<std::vector<Rational>> aug(r, std::vector<Rational>(2 * r));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) aug[i][j] = L.form(L.H(i), L.H(j));
        aug[i][r + i] = 1;
    }
    auto e = rref(aug, 2 * r);
    if (static_cast<int>(e.pivots.size()) != r || e.pivots.back() >= r)
        throw DegenerateForm("Cartan block of the invariant form is singular");
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const Rational& v = e.rows[i][r + j];
            out.c0.add(L.H(i), L.H(j), v);
            out.c.add(L.H(i), L.H(j), v);
        }
    for (int k = 0; k < L.npos(); ++k) {
        Rational g = L.form(L.E(k), L.F(k));
        if (g.is_zero()) throw DegenerateForm("root pairing vanishes");
        Rational v = g.inverse();
        out.c.add(L.E(k), L.F(k), v);
        out.c.add(L.F(k), L.E(k), v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Modules

Module::Module(const LieAlgebra& L, RawModule raw, IntVec highest, std::vector<Rational> central_scalars)
    : dim_(raw.dim), highest_(std::move(highest)), weights_(std::move(raw.weights)) {
    const int r = L.rank();
    std::vector<int> simple(r);
    for (int i = 0; i < r; ++i) simple[i] = L.E_simple(i);
    std::vector<SMat> XE, XF;
    extend_root_vectors(L.paths(), simple, raw.e, raw.f, XE, XF);
    act_.assign(L.dim(), SMat());
    for (int k = 0; k < L.npos(); ++k) {
        act_[L.E(k)] = std::move(XE[k]);
        act_[L.F(k)] = std::move(XF[k]);
    }
    for (int i = 0; i < r; ++i) act_[L.H(i)] = diag_weights(weights_, i);
    for (int k = 0; k < L.central_dims(); ++k) {
        Rational s = k < static_cast<int>(central_scalars.size()) ? central_scalars[k] : Rational();
        act_[L.Z(k)] = SMat::identity(dim_, s);
    }
}

bool Module::is_representation(const LieAlgebra& L) const {
    for (int a = 0; a < L.dim(); ++a)
        for (int b = a + 1; b < L.dim(); ++b) {
            SMat lhs = commutator(act_[a], act_[b]);
            SMat rhs(dim_, dim_);
            for (const auto& [k, c] : L.bracket(a, b)) rhs = rhs + act_[k].scaled(c);
            if (lhs != rhs) return false;
        }
    return true;
}

Module highest_weight_module(const LieAlgebra& L, const IntVec& lambda) {
    return Module(L, build_raw_module(L.roots(), lambda), lambda);
}

Module highest_weight_module(const LieAlgebra& L, const WeightVec& lambda, std::vector<Rational> central_scalars) {
    if (static_cast<int>(lambda.size()) != L.rank()) throw NotDominant("weight length does not match rank");
    if (!lambda.is_integral()) throw NotDominant("weight is not integral: " + lambda.str());
    IntVec l = lambda.to_ints();
    return Module(L, build_raw_module(L.roots(), l), l, std::move(central_scalars));
}

Module adjoint_module(const LieAlgebra& L) {
    // Direct construction from the structure constants (works for reductive L).
    RawModule raw;
    raw.dim = L.dim();
    raw.weights.resize(L.dim());
    for (int b = 0; b < L.dim(); ++b) raw.weights[b] = L.weight(b);
    for (int i = 0; i < L.rank(); ++i) {
        raw.e.push_back(L.sc().ad(L.E_simple(i)));
        raw.f.push_back(L.sc().ad(L.F_simple(i)));
    }
    Module m(L, std::move(raw), L.roots().root_to_fund(L.roots().highest_root(0)));
    return m;
}

// ---------------------------------------------------------------------------
// Weyl dimension and Freudenthal multiplicities

namespace {

// (lambda, beta) for lambda in fundamental coordinates and beta in root coordinates.
Rational pair_fund_root(const RootSystem& rs, const IntVec& l, const IntVec& beta) {
    Rational acc;
    for (int i = 0; i < rs.rank(); ++i)
        if (beta[i] != 0 && l[i] != 0) acc += Rational(l[i] * beta[i]) * rs.root_len2(i) / Rational(2);
    return acc;
}

IntVec add(const IntVec& a, const IntVec& b, int s = 1) {
    IntVec out = a;
    for (size_t i = 0; i < a.size(); ++i) out[i] += s * b[i];
    return out;
}

}  // namespace

long long weyl_dimension(const RootSystem& rs, const IntVec& lambda) {
    if (!rs.is_dominant(lambda)) throw NotDominant("weight is not dominant");
    IntVec lr = add(lambda, rs.rho());
    Rational d(1);
    for (const auto& b : rs.positive_roots()) d *= pair_fund_root(rs, lr, b) / pair_fund_root(rs, rs.rho(), b);
    return d.to_int();
}

WeylData weyl_dimension_and_weights(const RootSystem& rs, const IntVec& lambda) {
    if (static_cast<int>(lambda.size()) != rs.rank()) throw NotDominant("weight length does not match rank");
    WeylData out;
    out.dim = weyl_dimension(rs, lambda);
    const int r = rs.rank();
    std::vector<IntVec> proots;
    for (const auto& b : rs.positive_roots()) proots.push_back(rs.root_to_fund(b));

    // Dominant weights below lambda, ordered by depth.
    std::map<IntVec, int> depth{{lambda, 0}};
    std::vector<IntVec> order{lambda};
    for (size_t k = 0; k < order.size(); ++k) {
        IntVec mu = order[k];
        for (size_t b = 0; b < proots.size(); ++b) {
            IntVec nu = add(mu, proots[b], -1);
            if (!rs.is_dominant(nu) || depth.count(nu)) continue;
            depth[nu] = 0;
            order.push_back(nu);
        }
    }
    auto depth_of = [&](const IntVec& mu) {
        auto c = rs.fund_to_root(add(lambda, mu, -1));
        Rational s;
        for (auto& x : c) s += x;
        return s;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](const IntVec& a, const IntVec& b) { return depth_of(a) < depth_of(b); });

    std::map<IntVec, Rational> mult;
    IntVec lr = add(lambda, rs.rho());
    Rational top = rs.form(lr, lr);
    auto mult_of = [&](const IntVec& w) -> Rational {
        auto it = mult.find(rs.dominant_conjugate(w));
        return it == mult.end() ? Rational() : it->second;
    };
    for (const auto& mu : order) {
        if (mu == lambda) {
            mult[mu] = 1;
            continue;
        }
        Rational acc;
        for (size_t b = 0; b < proots.size(); ++b) {
            for (int k = 1;; ++k) {
                IntVec w = add(mu, proots[b], k);
                if (!depth.count(rs.dominant_conjugate(w))) break;
                Rational m = mult_of(w);
                if (m.is_zero()) break;
                acc += m * pair_fund_root(rs, w, rs.positive_roots()[b]);
            }
        }
        IntVec mr = add(mu, rs.rho());
        Rational denom = top - rs.form(mr, mr);
        mult[mu] = Rational(2) * acc / denom;
    }
    // Expand Weyl orbits.
    long long total = 0;
    for (const auto& [mu, m] : mult) {
        int mi = static_cast<int>(m.to_int());
        std::set<IntVec> orbit{mu};
        std::vector<IntVec> stack{mu};
        while (!stack.empty()) {
            IntVec w = stack.back();
            stack.pop_back();
            for (int i = 0; i < r; ++i) {
                IntVec s = rs.reflect(w, i);
                if (orbit.insert(s).second) stack.push_back(s);
            }
        }
        for (const auto& w : orbit) out.multiplicities[w] = mi;
        total += static_cast<long long>(orbit.size()) * mi;
    }
    if (total != out.dim) throw Error("InternalError", "Freudenthal total disagrees with Weyl dimension");
    return out;
}

WeylData weyl_dimension_and_weights(const RootSystem& rs, const WeightVec& lambda) {
    if (static_cast<int>(lambda.size()) != rs.rank() || !lambda.is_integral())
        throw NotDominant("weight must be integral of length " + std::to_string(rs.rank()));
    return weyl_dimension_and_weights(rs, lambda.to_ints());
}

// ---------------------------------------------------------------------------
// Dynkin subdiagrams and parabolics

namespace {

// Bijection pi (canonical index -> node) with canonical Cartan = sub-Cartan.
void match_cartan(const std::vector<IntVec>& can, const RootSystem& rs, const std::vector<int>& nodes,
                  bool all, std::vector<std::vector<int>>& found) {
    int n = static_cast<int>(nodes.size());
    std::vector<int> pi(n, -1);
    std::vector<bool> used(n, false);
    std::function<void(int)> rec = [&](int t) {
        if (!all && !found.empty()) return;
        if (t == n) {
            found.push_back(pi);
            return;
        }
        for (int c = 0; c < n; ++c) {
            if (used[c]) continue;
            int node = nodes[c];
            bool ok = can[t][t] == rs.cartan()[node][node];
            for (int u = 0; u < t && ok; ++u)
                ok = can[t][u] == rs.cartan()[node][pi[u]] && can[u][t] == rs.cartan()[pi[u]][node];
            if (!ok) continue;
            used[c] = true;
            pi[t] = node;
            rec(t + 1);
            used[c] = false;
        }
    };
    rec(0);
}

std::vector<SimpleType> candidate_types(int n) {
    std::vector<SimpleType> out;
    for (char s : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
        SimpleType t{s, n};
        bool valid = (s == 'A') || (s == 'B' && n >= 2) || (s == 'C' && n >= 2) || (s == 'D' && n >= 3) ||
                     (s == 'E' && n >= 6 && n <= 8) || (s == 'F' && n == 4) || (s == 'G' && n == 2);
        if (valid && canonical_type(t) == t) out.push_back(t);
    }
    return out;
}

}  // namespace

std::vector<std::pair<SimpleType, std::vector<int>>> identify_subdiagram(const RootSystem& rs,
                                                                         const std::vector<int>& nodes) {
    std::vector<std::pair<SimpleType, std::vector<int>>> out;
    std::set<int> left(nodes.begin(), nodes.end());
    while (!left.empty()) {
        std::vector<int> comp{*left.begin()};
        left.erase(left.begin());
        for (size_t k = 0; k < comp.size(); ++k)
            for (auto it = left.begin(); it != left.end();) {
                if (rs.cartan()[comp[k]][*it] != 0) {
                    comp.push_back(*it);
                    it = left.erase(it);
                } else {
                    ++it;
                }
            }
        std::sort(comp.begin(), comp.end());
        bool ok = false;
        for (const auto& t : candidate_types(static_cast<int>(comp.size()))) {
            RootSystem can({t});
            std::vector<std::vector<int>> found;
            match_cartan(can.cartan(), rs, comp, false, found);
            if (!found.empty()) {
                out.emplace_back(t, found.front());
                ok = true;
                break;
            }
        }
        if (!ok) throw InvalidType("unrecognized Dynkin subdiagram");
    }
    return out;
}

std::vector<std::vector<int>> diagram_automorphisms(const SimpleType& t) {
    RootSystem rs({t});
    std::vector<int> nodes(t.rank);
    for (int i = 0; i < t.rank; ++i) nodes[i] = i;
    std::vector<std::vector<int>> found;
    match_cartan(rs.cartan(), rs, nodes, true, found);
    return found;
}

RadicalInfo abelian_radical_module(const RootSystem& ambient, int node) {
    if (!ambient.is_simple()) throw NotSimple("parabolic needs a simple ambient root system");
    if (node < 0 || node >= ambient.rank()) throw Error("InvalidArgument", "node out of range");
    RadicalInfo info;
    std::vector<int> rest;
    for (int i = 0; i < ambient.rank(); ++i)
        if (i != node) rest.push_back(i);
    IntVec top;
    int top_h = -1;
    info.abelian = true;
    for (const auto& b : ambient.positive_roots()) {
        if (b[node] == 0) continue;
        ++info.radical_dim;
        if (b[node] >= 2) info.abelian = false;
        int h = 0;
        for (int x : b) h += x;
        if (b[node] == 1 && h > top_h) {
            top_h = h;
            top = b;
        }
    }
    IntVec tf = ambient.root_to_fund(top);
    if (!rest.empty()) {
        for (auto& [t, map] : identify_subdiagram(ambient, rest)) {
            info.levi_type.push_back(t);
            for (int n : map) info.lambda_levi.push_back(tf[n]);
            info.levi_nodes.push_back(map);
        }
    }
    return info;
}

}  // namespace qsym
