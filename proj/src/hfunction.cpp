#include "hgroup/hfunction.hpp"

#include <algorithm>
#include <cmath>

#include "hgroup/errors.hpp"

namespace hgroup {

HFunction HFunction::real(const std::vector<double>& values) {
    HFunction f(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) f[i] = values[i];
    return f;
}

HFunction HFunction::delta(std::size_t n, Index x, Complex value) {
    if (x >= n) throw Error(ErrorCode::IndexOutOfRange, "delta index outside table");
    HFunction f(n);
    f[x] = value;
    return f;
}

HFunction HFunction::constant(std::size_t n, Complex value) {
    return HFunction(std::vector<Complex>(n, value));
}

std::vector<Index> HFunction::support(double tol) const {
    std::vector<Index> s;
    for (Index i = 0; i < values_.size(); ++i)
        if (std::abs(values_[i]) > tol) s.push_back(i);
    return s;
}

double HFunction::max_abs() const {
    double m = 0.0;
    for (const auto& v : values_) m = std::max(m, std::abs(v));
    return m;
}

bool HFunction::is_real(double tol) const {
    return std::all_of(values_.begin(), values_.end(), [&](Complex v) { return std::abs(v.imag()) <= tol; });
}

static void same_size(const HFunction& a, const HFunction& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::InvalidParameter, "functions live on different tables");
}

HFunction& HFunction::operator+=(const HFunction& o) {
    same_size(*this, o);
    for (Index i = 0; i < size(); ++i) values_[i] += o[i];
    return *this;
}

HFunction& HFunction::operator-=(const HFunction& o) {
    same_size(*this, o);
    for (Index i = 0; i < size(); ++i) values_[i] -= o[i];
    return *this;
}

HFunction& HFunction::operator*=(Complex s) {
    for (auto& v : values_) v *= s;
    return *this;
}

HFunction operator+(HFunction a, const HFunction& b) { return a += b; }
HFunction operator-(HFunction a, const HFunction& b) { return a -= b; }
HFunction operator*(Complex s, HFunction a) { return a *= s; }

HFunction pointwise(const HFunction& a, const HFunction& b) {
    same_size(a, b);
    HFunction r(a.size());
    for (Index i = 0; i < a.size(); ++i) r[i] = a[i] * b[i];
    return r;
}

HFunction conj(const HFunction& a) {
    HFunction r(a.size());
    for (Index i = 0; i < a.size(); ++i) r[i] = std::conj(a[i]);
    return r;
}

double max_abs_diff(const HFunction& a, const HFunction& b) {
    same_size(a, b);
    double m = 0.0;
    for (Index i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace hgroup
