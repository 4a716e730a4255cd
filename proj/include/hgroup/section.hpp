#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hgroup/table.hpp"

namespace hgroup {

/// Three-term data of the generator: g.n = down_n (n-1) + diag_n (n) + up_n (n+1),
/// read from the rows (g, n), n < size().
struct JacobiSection {
    std::vector<double> down, diag, up;

    int size() const { return static_cast<int>(diag.size()); }
    /// Symmetrized entries of the leading m x m block.
    Eigen::VectorXd sym_diag(int m) const;
    Eigen::VectorXd sym_off(int m) const;
};

/// Throws NotNaturalIndexed unless the table is an N-indexed section whose
/// generator rows are supported on {n-1, n, n+1}.
JacobiSection jacobi_section(const HypergroupTable& h);

double top_eigenvalue(const JacobiSection& j, int m);
/// Positive normalized top eigenvector of the m x m block.
Eigen::VectorXd perron_vector(const JacobiSection& j, int m);

struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
};
/// Gauss rule of the m x m block; exact for P_a P_b with a + b <= 2m - 1.
Quadrature gauss_quadrature(const JacobiSection& j, int m);

/// P_0(t), ..., P_{count-1}(t) with P_n(t) the character at n with value t at the generator.
std::vector<double> character_values(const JacobiSection& j, double t, int count);

enum class P2Status { Holds, Fails, Inconclusive };
const char* p2_status_name(P2Status s);

struct P2Report {
    P2Status status = P2Status::Holds;
    bool finite = false;
    /// Certified bracket for the spectral radius of A_g on l2(lambda).
    double lower = 1.0;
    double upper = 1.0;
    std::vector<std::pair<int, double>> lower_by_radius;
    bool monotone = true;
    /// Row sums of the symmetrized tail, assumed stationary past the section.
    double tail_bound = 0.0;
    std::string certificate;
};

P2Report check_p2(const HypergroupTable& h, double tol = 1e-6);

struct Chi0Result {
    std::vector<double> values;
    double at_generator = 1.0;
    double multiplicativity_error = 0.0;
    /// max over sampled characters chi of |chi(x)| - chi0(x), <= 0 when dominated.
    double domination_excess = 0.0;
    std::size_t sampled = 0;
    bool finite = false;
};

/// Finite tables: the constant 1 after checking domination. Sections: the
/// character at the certified top of the spectrum. Throws DominationFailure.
Chi0Result chi0(const HypergroupTable& h, double tol = 1e-9);

struct DeformedPair {
    HypergroupTable original;
    std::vector<double> chi0;
    HypergroupTable deformed;
    std::vector<double> haar_prime;
    /// max error of chi/chi0 as a character of the deformed table, over dominated chi
    double dual_map_error = 0.0;
    std::size_t dual_map_checked = 0;
};

/// c'^z_{x,y} = chi0(z) c^z_{x,y} / (chi0(x) chi0(y)), lambda' = chi0^2 lambda.
DeformedPair voit_deform(const HypergroupTable& h, const std::vector<double>& chi0, double tol = 1e-9);

}  // namespace hgroup
