#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qsym/rational.hpp"

namespace qsym {

// Sparse vector: (index, value) pairs sorted by index, no explicit zeros.
template <class T>
using SparseVec = std::vector<std::pair<int, T>>;

using SVec = SparseVec<Rational>;

// y += s * x for sorted sparse vectors.
template <class T>
SparseVec<T> axpy(const SparseVec<T>& y, const T& s, const SparseVec<T>& x) {
    if (s.is_zero() || x.empty()) return y;
    SparseVec<T> out;
    out.reserve(y.size() + x.size());
    size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(y[i++]);
        } else if (i == y.size() || x[j].first < y[i].first) {
            out.emplace_back(x[j].first, s * x[j].second);
            ++j;
        } else {
            T v = y[i].second + s * x[j].second;
            if (!v.is_zero()) out.emplace_back(y[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

template <class T>
SparseVec<T> scaled(const SparseVec<T>& x, const T& s) {
    if (s.is_zero()) return {};
    SparseVec<T> out = x;
    for (auto& e : out) e.second = e.second * s;
    return out;
}

// Accumulator for building sparse vectors from unsorted contributions.
template <class T>
class SparseAccum {
public:
    void add(int idx, const T& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = m_.try_emplace(idx, v);
        if (!fresh) it->second += v;
    }
    SparseVec<T> take() {
        SparseVec<T> out;
        out.reserve(m_.size());
        for (auto& [k, v] : m_)
            if (!v.is_zero()) out.emplace_back(k, v);
        m_.clear();
        return out;
    }

private:
    std::map<int, T> m_;
};

template <class T>
T sparse_get(const SparseVec<T>& x, int idx) {
    auto it = std::lower_bound(x.begin(), x.end(), idx,
                               [](const std::pair<int, T>& e, int k) { return e.first < k; });
    if (it != x.end() && it->first == idx) return it->second;
    return T();
}

// Greedy echelon basis over a field: vectors are offered one at a time; an
// offered vector is either accepted as a new basis element or expressed as a
// combination of previously accepted ones.
template <class T>
class IncrementalBasis {
public:
    // Returns nullopt and accepts x when independent; otherwise returns the
    // coefficients of x in terms of accepted vectors (indexed by acceptance order).
    std::optional<SparseVec<T>> offer(const SparseVec<T>& x) {
        SparseVec<T> r = x;
        SparseVec<T> combo;  // x = r + sum combo_k * accepted_k
        for (size_t k = 0; k < rows_.size() && !r.empty(); ++k) {
            const Row& row = rows_[k];
            T c = sparse_get(r, row.pivot);
            if (c.is_zero()) continue;
            // row.vec = sum row.expr_j * accepted_j, and row.vec[pivot] = 1
            r = axpy(r, -c, row.vec);
            combo = axpy(combo, c, row.expr);
        }
        if (r.empty()) return combo;
        // New basis vector: r = x - sum combo_k accepted_k.
        int idx = static_cast<int>(count_++);
        T inv = r.front().second.inverse();
        Row row;
        row.pivot = r.front().first;
        row.vec = scaled(r, inv);
        SparseVec<T> expr = scaled(combo, -inv);
        expr = axpy(expr, inv, SparseVec<T>{{idx, T(1)}});
        row.expr = std::move(expr);
        rows_.push_back(std::move(row));
        return std::nullopt;
    }
    size_t size() const { return count_; }

private:
    struct Row {
        int pivot = 0;
        SparseVec<T> vec;
        SparseVec<T> expr;
    };
    std::vector<Row> rows_;
    size_t count_ = 0;
};

// Dense Gauss-Jordan elimination over a field.
template <class T>
struct Echelon {
    std::vector<std::vector<T>> rows;  // reduced rows, pivot entry 1
    std::vector<int> pivots;
    int ncols = 0;
};

template <class T>
Echelon<T> rref(std::vector<std::vector<T>> m, int ncols) {
    Echelon<T> e;
    e.ncols = ncols;
    size_t r = 0;
    for (int c = 0; c < ncols && r < m.size(); ++c) {
        size_t p = r;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        T inv = m[r][c].inverse();
        for (int k = c; k < ncols; ++k) m[r][k] = m[r][k] * inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            T f = m[i][c];
            for (int k = c; k < ncols; ++k)
                if (!m[r][k].is_zero()) m[i][k] = m[i][k] - f * m[r][k];
        }
        e.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    e.rows = std::move(m);
    return e;
}

template <class T>
int rank_of(const std::vector<std::vector<T>>& m, int ncols) {
    return static_cast<int>(rref(m, ncols).pivots.size());
}

// Basis of {x : M x = 0}.
template <class T>
std::vector<std::vector<T>> nullspace(const std::vector<std::vector<T>>& m, int ncols) {
    Echelon<T> e = rref(m, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> out;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(ncols);
        v[f] = T(1);
        for (size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

// One solution of M x = b with free variables set to zero; nullopt if inconsistent.
template <class T>
std::optional<std::vector<T>> solve(std::vector<std::vector<T>> m, const std::vector<T>& b, int ncols) {
    for (size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
    Echelon<T> e = rref(std::move(m), ncols + 1);
    std::vector<T> x(ncols);
    for (size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == ncols) return std::nullopt;
        x[e.pivots[i]] = e.rows[i][ncols];
    }
    return x;
}

}  // namespace qsym
