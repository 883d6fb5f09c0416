#pragma once

#include <map>
#include <utility>

#include "qsym/rational.hpp"

namespace qsym {

// Element of A (x) A over a fixed basis of A, as sparse coefficients.
class TwoTensor {
public:
    using Key = std::pair<int, int>;
    TwoTensor() = default;

    void add(int i, int j, const Rational& v);
    Rational get(int i, int j) const;
    const std::map<Key, Rational>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    size_t size() const { return c_.size(); }

    TwoTensor op() const;  // flip the legs
    TwoTensor plus_part() const { return (*this + op()).scaled(Rational(1, 2)); }
    TwoTensor minus_part() const { return (*this - op()).scaled(Rational(1, 2)); }
    TwoTensor scaled(const Rational& s) const;
    bool is_antisymmetric() const { return (*this + op()).is_zero(); }
    bool is_symmetric() const { return (*this - op()).is_zero(); }

    friend TwoTensor operator+(const TwoTensor& a, const TwoTensor& b);
    friend TwoTensor operator-(const TwoTensor& a, const TwoTensor& b);
    friend bool operator==(const TwoTensor& a, const TwoTensor& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TwoTensor& a, const TwoTensor& b) { return !(a == b); }

private:
    std::map<Key, Rational> c_;
};

}  // namespace qsym
