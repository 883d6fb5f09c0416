#include "qsym/tensor.hpp"

namespace qsym {

void TwoTensor::add(int i, int j, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = c_.try_emplace({i, j}, v);
    if (fresh) return;
    it->second += v;
    if (it->second.is_zero()) c_.erase(it);
}

Rational TwoTensor::get(int i, int j) const {
    auto it = c_.find({i, j});
    return it == c_.end() ? Rational() : it->second;
}

TwoTensor TwoTensor::op() const {
    TwoTensor t;
    for (const auto& [k, v] : c_) t.c_.emplace(Key{k.second, k.first}, v);
    return t;
}

TwoTensor TwoTensor::scaled(const Rational& s) const {
    TwoTensor t;
    if (s.is_zero()) return t;
    for (const auto& [k, v] : c_) t.c_.emplace(k, v * s);
    return t;
}

TwoTensor operator+(const TwoTensor& a, const TwoTensor& b) {
    TwoTensor t = a;
    for (const auto& [k, v] : b.c_) t.add(k.first, k.second, v);
    return t;
}

TwoTensor operator-(const TwoTensor& a, const TwoTensor& b) {
    TwoTensor t = a;
    for (const auto& [k, v] : b.c_) t.add(k.first, k.second, -v);
    return t;
}

}  // namespace qsym
