#pragma once

#include <string>
#include <vector>

#include "qsym/linalg.hpp"

namespace qsym {

// Column-sparse exact matrix: col[j] is the image of the j-th basis vector.
class SMat {
public:
    SMat() = default;
    SMat(int rows, int cols) : rows_(rows), col_(cols) {}
    static SMat identity(int n, const Rational& s = Rational(1));

    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(col_.size()); }
    const SVec& col(int j) const { return col_[j]; }
    SVec& col(int j) { return col_[j]; }
    Rational at(int i, int j) const { return sparse_get(col_[j], i); }
    bool is_zero() const;
    size_t nnz() const;

    SVec apply(const SVec& v) const;
    SMat operator*(const SMat& b) const;
    SMat operator+(const SMat& b) const;
    SMat operator-(const SMat& b) const;
    SMat scaled(const Rational& s) const;
    friend bool operator==(const SMat& a, const SMat& b) { return a.rows_ == b.rows_ && a.col_ == b.col_; }
    friend bool operator!=(const SMat& a, const SMat& b) { return !(a == b); }

private:
    int rows_ = 0;
    std::vector<SVec> col_;
};

inline SMat commutator(const SMat& a, const SMat& b) { return a * b - b * a; }

}  // namespace qsym
