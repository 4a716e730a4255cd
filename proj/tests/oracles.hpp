#pragma once

// Reference computations that share no code path with the library.

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hgroup/group.hpp"

namespace oracle {

using Rational = mpq_class;
using Cube = std::vector<std::vector<std::vector<Rational>>>;

/// c[i][j][k] = #{(a,b) in C_i x C_j : ab in C_k} / (|C_i||C_j|), by enumerating all pairs.
Cube class_convolution(const hgroup::FiniteGroup& g);

/// Closed form for radial functions on the (q+1)-regular tree:
/// coefficient of delta_k in delta_m . delta_n.
Rational tree_constant(int q, int m, int n, int k);

/// Largest eigenvalue of the symmetric tridiagonal matrix by Sturm bisection.
double sturm_top_eigenvalue(const std::vector<double>& diag, const std::vector<double>& off);

/// N^c_{a,b} for SU(2) dimensions by multiplying weight polynomials and peeling highest weights.
std::map<int, int> su2_multiplicities(int a, int b);

/// [n]_q as the symmetric sum q^{1-n} + q^{3-n} + ... + q^{n-1}.
double q_integer_sum(int n, double q);

/// Hard-coded character tables, rows = irreducibles (trivial first), columns follow
/// the group's classes() order. Known for s3, d4, q8 and cyclic groups.
struct KnownTable {
    std::vector<std::vector<std::complex<double>>> chars;
    std::vector<int> dims;
};
KnownTable known_characters(const hgroup::FiniteGroup& g, const std::string& which);

/// N[a][b][c] = <chi_a chi_b, chi_c> from a known table.
std::vector<std::vector<std::vector<int>>> multiplicities(const hgroup::FiniteGroup& g, const KnownTable& t);

}  // namespace oracle
