#include "qsym/smat.hpp"

namespace qsym {

SMat SMat::identity(int n, const Rational& s) {
    SMat m(n, n);
    if (s.is_zero()) return m;
    for (int j = 0; j < n; ++j) m.col_[j] = {{j, s}};
    return m;
}

bool SMat::is_zero() const {
    for (const auto& c : col_)
        if (!c.empty()) return false;
    return true;
}

size_t SMat::nnz() const {
    size_t n = 0;
    for (const auto& c : col_) n += c.size();
    return n;
}

SVec SMat::apply(const SVec& v) const {
    SparseAccum<Rational> acc;
    for (const auto& [j, x] : v)
        for (const auto& [i, a] : col_[j]) acc.add(i, a * x);
    return acc.take();
}

SMat SMat::operator*(const SMat& b) const {
    SMat out(rows_, b.cols());
    for (int j = 0; j < b.cols(); ++j) out.col_[j] = apply(b.col_[j]);
    return out;
}

SMat SMat::operator+(const SMat& b) const {
    SMat out(rows_, cols());
    for (int j = 0; j < cols(); ++j) out.col_[j] = axpy(col_[j], Rational(1), b.col_[j]);
    return out;
}

SMat SMat::operator-(const SMat& b) const {
    SMat out(rows_, cols());
    for (int j = 0; j < cols(); ++j) out.col_[j] = axpy(col_[j], Rational(-1), b.col_[j]);
    return out;
}

SMat SMat::scaled(const Rational& s) const {
    SMat out(rows_, cols());
    for (int j = 0; j < cols(); ++j) out.col_[j] = qsym::scaled(col_[j], s);
    return out;
}

}  // namespace qsym
