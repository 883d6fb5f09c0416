#include "qsym/classify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "qsym/errors.hpp"

namespace qsym {

namespace {

IntVec omega(int rank, int i, int mult = 1) {
    IntVec w(rank, 0);
    w[i - 1] = mult;  // 1-based fundamental weight index
    return w;
}

std::string lambda_str(const IntVec& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

}  // namespace

std::string row_key(const SimpleType& t, const IntVec& lambda) { return t.str() + " " + lambda_str(lambda); }

bool weight_filter(const RootSystem& rs, const IntVec& lambda) {
    if (!rs.is_dominant(lambda)) throw NotDominant("weight " + lambda_str(lambda) + " is not dominant");
    const int r = rs.rank();
    std::set<IntVec> pos;
    for (const auto& b : rs.positive_roots()) pos.insert(rs.root_to_fund(b));
    pos.insert(IntVec(r, 0));
    auto data = weyl_dimension_and_weights(rs, lambda);
    for (const auto& [mu, mult] : data.multiplicities)
        for (int i = 0; i < r; ++i) {
            // (lambda, alpha_i) > 0 and (mu, alpha_i) < 0 in fundamental coordinates
            if (lambda[i] <= 0 || mu[i] >= 0) continue;
            IntVec d(r);
            for (int j = 0; j < r; ++j) d[j] = lambda[j] - mu[j] - rs.cartan()[i][j];
            if (!pos.count(d)) return false;
        }
    return true;
}

bool weight_filter(const RootSystem& rs, const WeightVec& lambda) {
    if (!lambda.is_integral()) throw NotDominant("weight " + lambda.str() + " is not integral");
    return weight_filter(rs, lambda.to_ints());
}

std::vector<IntVec> paper_list(const SimpleType& t) {
    const int r = t.rank;
    std::set<IntVec> out;
    switch (t.series) {
        case 'A':
            out.insert(omega(r, 1));
            out.insert(omega(r, 1, 2));
            if (r >= 2) out.insert(omega(r, 2));
            if (r >= 2) out.insert(omega(r, r - 1));
            out.insert(omega(r, r));
            out.insert(omega(r, r, 2));
            break;
        case 'B':
            if (r >= 3) out.insert(omega(r, 1));
            break;
        case 'C':
            // so(5) vector = sp(4) second fundamental; no other symplectic pair is listed.
            if (r == 2) out.insert(omega(r, 2));
            break;
        case 'D':
            if (r >= 4) out.insert(omega(r, 1));
            if (r == 4) {
                out.insert(omega(r, 3));
                out.insert(omega(r, 4));
            }
            if (r == 5) {
                out.insert(omega(r, 4));
                out.insert(omega(r, 5));
            }
            break;
        case 'E':
            if (r == 6) {
                out.insert(omega(r, 1));
                out.insert(omega(r, 6));
            }
            break;
        default:
            break;
    }
    return {out.begin(), out.end()};
}

bool in_paper_list(const SimpleType& t, const IntVec& lambda) {
    auto [ct, cl] = canonical_pair(t, lambda);
    auto l = paper_list(ct);
    return std::find(l.begin(), l.end(), cl) != l.end();
}

std::pair<SimpleType, IntVec> canonical_pair(const SimpleType& t, const IntVec& lambda) {
    if (static_cast<int>(lambda.size()) != t.rank)
        throw UsageError("weight has " + std::to_string(lambda.size()) + " coordinates, " + t.str() + " needs " +
                         std::to_string(t.rank));
    if (t.series == 'B' && t.rank == 2) return {{'C', 2}, {lambda[1], lambda[0]}};
    // D3 node 1 (vector) is A3 node 2; the two spin nodes are A3 nodes 1 and 3.
    if (t.series == 'D' && t.rank == 3) return {{'A', 3}, {lambda[1], lambda[0], lambda[2]}};
    return {t, lambda};
}

std::vector<SimpleType> sweep_types(int max_rank) {
    std::vector<SimpleType> out;
    for (char s : std::string("ABCDEFG"))
        for (int r = 1; r <= max_rank; ++r) {
            SimpleType t{s, r};
            bool exists = (s == 'A') || (s == 'B' && r >= 3) || (s == 'C' && r >= 2) || (s == 'D' && r >= 4) ||
                          (s == 'E' && r >= 6 && r <= 8) || (s == 'F' && r == 4) || (s == 'G' && r == 2);
            if (exists) out.push_back(t);
        }
    return out;
}

std::vector<IntVec> weights_within_budget(const RootSystem& rs, long long budget) {
    const int r = rs.rank();
    std::vector<IntVec> out;
    IntVec w(r, 0);
    // Weyl dimension is increasing in every coordinate, so each coordinate can stop at the first overflow.
    auto rec = [&](auto&& self, int i) -> void {
        if (i == r) {
            bool nonzero = std::any_of(w.begin(), w.end(), [](int x) { return x != 0; });
            if (nonzero) out.push_back(w);
            return;
        }
        for (int m = 0;; ++m) {
            w[i] = m;
            IntVec probe = w;
            for (int j = i + 1; j < r; ++j) probe[j] = 0;
            if (weyl_dimension(rs, probe) > budget) break;
            self(self, i + 1);
        }
        w[i] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct AmbientHit {
    SimpleType ambient;
    int node = -1;
};

// Ambient simple types of the given rank, canonical spellings only.
std::vector<SimpleType> types_of_rank(int r) {
    std::vector<SimpleType> out;
    for (const auto& t : sweep_types(r))
        if (t.rank == r) out.push_back(t);
    return out;
}

std::vector<AmbientHit> find_ambients(const SimpleType& g, const IntVec& lambda, int max_ambient_rank) {
    std::vector<AmbientHit> hits;
    if (g.rank + 1 > max_ambient_rank) return hits;
    auto autos = diagram_automorphisms(g);
    for (const auto& amb : types_of_rank(g.rank + 1)) {
        auto rs = build_root_system({amb});
        for (int node : rs.cominuscule_nodes()) {
            auto info = abelian_radical_module(rs, node);
            if (info.levi_type.size() != 1 || !(info.levi_type[0] == g)) continue;
            for (const auto& perm : autos) {
                IntVec moved(g.rank);
                for (int i = 0; i < g.rank; ++i) moved[perm[i]] = info.lambda_levi[i];
                if (moved == lambda) {
                    hits.push_back({amb, node});
                    break;
                }
            }
        }
    }
    return hits;
}

// parabolic_semidirect depends only on the ambient and node; cache across rows.
bool parabolic_ok(const SimpleType& amb, int node) {
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, bool> cache;
    auto key = std::make_pair(amb.str(), node);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    bool ok = parabolic_semidirect(build_root_system({amb}), node).ok();
    std::lock_guard<std::mutex> lock(mu);
    cache[key] = ok;
    return ok;
}

}  // namespace

ClassificationRow classify_pair(const SimpleType& t_in, const IntVec& lambda_in, const ClassifyOptions& opt) {
    auto [t, lambda] = canonical_pair(t_in, lambda_in);
    ClassificationRow row;
    row.g_type = t;
    row.lambda = lambda;
    if (!(t == t_in)) row.alias = row_key(t_in, lambda_in);
    auto rs = build_root_system({t});
    if (!rs.is_dominant(lambda)) throw NotDominant("weight " + lambda_str(lambda) + " is not dominant");
    if (std::all_of(lambda.begin(), lambda.end(), [](int x) { return x == 0; }))
        throw NotDominant("the trivial module is excluded");
    row.dim_V = weyl_dimension(rs, lambda);
    if (row.dim_V > opt.dim_budget)
        throw BudgetExceeded(row_key(t, lambda) + " has dimension " + std::to_string(row.dim_V));

    row.weight_filter = weight_filter(rs, lambda);

    auto L = chevalley_basis(rs, 0);
    auto V = highest_weight_module(L, lambda);
    auto oracle = weyl_dimension_and_weights(rs, lambda);
    std::map<IntVec, int> built;
    for (const auto& w : V.weights()) built[w] += 1;
    row.oracle_ok = V.dim() == oracle.dim && built == oracle.multiplicities;

    auto P = r_minus_operator(L, standard_r(L), V);
    auto rep = schouten_criterion(P, {nullptr, 1});
    row.schouten = rep.vanishes_raw;
    row.schouten_projected = rep.vanishes_sym_projected;
    row.jacobi = jacobi_oracle(generator_brackets(P));

    if (opt.all_bd) {
        for (const auto& bt : enumerate_bd_triples(rs)) {
            auto Pb = r_minus_operator(L, bd_r_matrix(L, bt).r, V);
            if (schouten_criterion(Pb).vanishes_raw != row.schouten) row.schouten_all_bd = false;
            ++row.bd_triples_checked;
        }
    }

    auto hits = find_ambients(t, lambda, opt.max_ambient_rank);
    row.geometrically_decomposable = !hits.empty();
    if (!hits.empty()) {
        row.ambient = hits[0].ambient.str() + " node " + std::to_string(hits[0].node + 1);
        auto info = abelian_radical_module(build_root_system({hits[0].ambient}), hits[0].node);
        row.semidirect_constructed = info.radical_dim == row.dim_V && parabolic_ok(hits[0].ambient, hits[0].node);
    }
    row.in_paper_list = in_paper_list(t, lambda);
    return row;
}

std::vector<ClassificationRow> classification_table(int max_rank, long long dim_budget, const ClassifyOptions& opt_in) {
    ClassifyOptions opt = opt_in;
    opt.dim_budget = dim_budget;
    std::vector<std::pair<SimpleType, IntVec>> jobs;
    for (const auto& t : sweep_types(max_rank)) {
        if (t.series == 'E' && t.rank > 6) continue;
        for (const auto& w : weights_within_budget(build_root_system({t}), dim_budget)) jobs.emplace_back(t, w);
    }
    std::vector<ClassificationRow> rows(jobs.size());
    std::atomic<size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr err;
    auto worker = [&] {
        for (;;) {
            size_t k = next.fetch_add(1);
            if (k >= jobs.size()) return;
            try {
                rows[k] = classify_pair(jobs[k].first, jobs[k].second, opt);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    int threads = std::max(1, opt.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (err) std::rethrow_exception(err);
    return rows;
}

PaperDiff diff_against_paper(const std::vector<ClassificationRow>& rows) {
    PaperDiff d;
    for (const auto& r : rows) {
        if (r.in_paper_list && !r.passing()) d.missing.push_back(row_key(r.g_type, r.lambda));
        if (!r.in_paper_list && r.passing()) d.unexpected.push_back(row_key(r.g_type, r.lambda));
    }
    return d;
}

}  // namespace qsym
