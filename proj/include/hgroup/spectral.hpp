#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "hgroup/hfunction.hpp"
#include "hgroup/table.hpp"

namespace hgroup {

struct SpectralOptions {
    std::uint64_t seed = 20240611;
    int retries = 5;
    double gap = 1e-8;
    double tol = 1e-9;
};

/// Rows are characters, columns are elements.
struct CharacterTable {
    Eigen::MatrixXcd values;
    std::vector<double> plancherel;
    std::vector<bool> in_support;
    std::vector<bool> positive;
    /// conjugate[i] is the row equal to conj of row i.
    std::vector<Index> conjugate;
    Index generator = 0;
    int attempts = 0;

    std::size_t count() const { return static_cast<std::size_t>(values.rows()); }
    Complex operator()(Index chi, Index x) const { return values(chi, x); }
    HFunction row(Index chi) const;
};

/// (A_x)_{y,z} = c^z_{x,y}.
Eigen::MatrixXd structure_matrix(const HypergroupTable& h, Index x);

/// Joint eigenvectors of the A_x through one random combination per attempt.
/// Throws NotCommutative, DegenerateSpectrum.
CharacterTable characters(const HypergroupTable& h, const SpectralOptions& opt = {});

/// varpi(chi) = 1 / sum_x lambda(x)|chi(x)|^2.
std::vector<double> plancherel(const HypergroupTable& h, const CharacterTable& t);

/// u^(chi) = sum_x lambda(x) f(x) conj chi(x).
Eigen::VectorXcd fourier(const HypergroupTable& h, const CharacterTable& t, const HFunction& f);
/// f(x) = sum_chi varpi(chi) c(chi) chi(x).
HFunction inverse_fourier(const HypergroupTable& h, const CharacterTable& t, const Eigen::VectorXcd& coeffs);

struct CharacterCheck {
    double multiplicativity = 0.0;
    double hermitian = 0.0;
    double orthogonality = 0.0;
    double normalization = 0.0;
    double max() const;
};
CharacterCheck check_characters(const HypergroupTable& h, const CharacterTable& t);

}  // namespace hgroup
