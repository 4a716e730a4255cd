#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgroup/hfunction.hpp"
#include "hgroup/norms.hpp"
#include "hgroup/section.hpp"
#include "hgroup/table.hpp"

namespace hgroup {

/// Functions on H x H use the index x * |H| + y, matching product(H, H).
Index pair_index(const HypergroupTable& h, Index x, Index y);

/// psi(x,x) = 1/lambda(x), zero off the diagonal.
HFunction diagonal_psi(const HypergroupTable& h);
std::vector<Rational> diagonal_psi_exact(const HypergroupTable& h);

/// x -> rho(x,x).
HFunction restrict_to_diagonal(const HypergroupTable& h, const HFunction& rho);

struct InvertedMultiplier {
    HFunction inverse;
    std::size_t value_set_size = 0;
    double product_error = 0.0;
    /// ||phi^{-1}||_{MA(H)}; finite tables only
    std::optional<double> ma_norm;
};
/// Pointwise inverse. Throws ZeroValue, and UnboundedValueSet on a section
/// whose value set keeps growing from the half ball to the full ball.
InvertedMultiplier invert_multiplier(const HypergroupTable& h, const HFunction& phi);

struct DiagonalIndicator {
    HypergroupTable square;
    HFunction indicator;
    bool exact = false;
    /// max |1_Delta - diagonal indicator|; computed in rationals when exact
    double indicator_error = 0.0;
    double ma_norm = 0.0;
    double a_norm = 0.0;
    double psi_blambda_norm = 0.0;
    double phi_inverse_ma_norm = 0.0;
};
/// 1_Delta = (phi^{-1} x 1) psi on H x H.
DiagonalIndicator indicator_diagonal(const HypergroupTable& h);

struct ApproximateDiagonal {
    double bound = 0.0;
    /// max over tests of ||u.m - m.u||_A; the cancellation is algebraic
    double commutator_norm = 0.0;
    /// max over tests of ||u m(m) - u||_A
    double identity_residual = 0.0;
    std::size_t tests = 0;
};
/// m = (e x e) 1_Delta for each e in the net (default: the constant 1).
ApproximateDiagonal approximate_diagonal(const HypergroupTable& h, const DiagonalIndicator& d,
                                         const std::vector<HFunction>& e_net = {},
                                         const std::vector<HFunction>& tests = {});

struct WeakAmenabilityStep {
    int radius = 0;
    HFunction e;
    /// ||xi||^2 in l2(lambda'); bounds ||e||_{MA(H)} through A(H_0)
    double bound = 0.0;
    Interval ma_interval;
    /// e against ((chi0 xi) ._lambda (chi0 xi)~)/chi0 computed on H
    double crosscheck_error = 0.0;
    std::vector<double> residuals;
};

struct WeakAmenabilityWitness {
    bool finite = false;
    double constant_bound = 0.0;
    std::vector<WeakAmenabilityStep> steps;
    std::vector<std::string> test_names;
    /// Residuals below this are treated as zero when checking monotonicity.
    double residual_floor = 1e-12;
    bool residuals_decreasing() const;
};
WeakAmenabilityWitness weak_amenability_witness(const HypergroupTable& h, const std::vector<int>& radii,
                                                const std::vector<HFunction>& tests = {});

struct BoundedApproximateIdentity {
    HFunction u;
    int radius = 0;
    double achieved = 0.0;
    double norm_bound = 1.0;
};
/// Throws P2Failure when (P2) is not certified to hold.
BoundedApproximateIdentity bai_from_p2(const HypergroupTable& h, const std::vector<Index>& F, double eps);

struct AmenabilityReport {
    std::string id;
    P2Status p2 = P2Status::Holds;
    std::vector<double> phi_values;
    std::optional<double> diagonal_psi_norm;
    std::optional<double> phi_inverse_MA_norm;
    std::optional<double> one_delta_MA_norm;
    std::optional<double> approx_diagonal_bound;
    std::optional<double> commutator_norm;
    std::optional<double> indicator_error;
    bool indicator_exact = false;
    double weak_amenability_constant_bound = 0.0;
    std::vector<std::string> notes;
    /// one_delta_MA_norm <= phi_inverse_MA_norm * diagonal_psi_norm + tol
    bool submultiplicative = true;
};
AmenabilityReport amenability_report(const HypergroupTable& h, double tol = 1e-9);

}  // namespace hgroup
