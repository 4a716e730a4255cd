#pragma once

#include <vector>

#include "hgroup/table.hpp"

namespace hgroup {

/// Finitely supported complex function, stored densely over the table's elements.
class HFunction {
public:
    HFunction() = default;
    explicit HFunction(std::size_t n) : values_(n, Complex(0.0)) {}
    explicit HFunction(std::vector<Complex> values) : values_(std::move(values)) {}
    static HFunction real(const std::vector<double>& values);
    static HFunction delta(std::size_t n, Index x, Complex value = 1.0);
    static HFunction constant(std::size_t n, Complex value);

    std::size_t size() const { return values_.size(); }
    Complex& operator[](Index x) { return values_[x]; }
    const Complex& operator[](Index x) const { return values_[x]; }
    const std::vector<Complex>& values() const { return values_; }

    std::vector<Index> support(double tol = 0.0) const;
    double max_abs() const;
    bool is_real(double tol = 0.0) const;

    HFunction& operator+=(const HFunction& o);
    HFunction& operator-=(const HFunction& o);
    HFunction& operator*=(Complex s);

private:
    std::vector<Complex> values_;
};

HFunction operator+(HFunction a, const HFunction& b);
HFunction operator-(HFunction a, const HFunction& b);
HFunction operator*(Complex s, HFunction a);
/// Pointwise product.
HFunction pointwise(const HFunction& a, const HFunction& b);
HFunction conj(const HFunction& a);
double max_abs_diff(const HFunction& a, const HFunction& b);

}  // namespace hgroup
