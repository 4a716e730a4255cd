#include "hgroup/amenability.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hgroup/builders.hpp"
#include "hgroup/core.hpp"
#include "hgroup/errors.hpp"
#include "hgroup/spectral.hpp"

namespace hgroup {

Index pair_index(const HypergroupTable& h, Index x, Index y) { return x * h.size() + y; }

HFunction diagonal_psi(const HypergroupTable& h) {
    const std::size_t n = h.size();
    HFunction psi(n * n);
    for (Index x = 0; x < n; ++x) psi[pair_index(h, x, x)] = 1.0 / h.haar(x);
    return psi;
}

std::vector<Rational> diagonal_psi_exact(const HypergroupTable& h) {
    if (h.haar_exact().empty()) throw Error(ErrorCode::InvalidParameter, h.name() + " has no exact Haar weights");
    const std::size_t n = h.size();
    std::vector<Rational> psi(n * n);
    for (Index x = 0; x < n; ++x) psi[pair_index(h, x, x)] = 1 / h.haar_exact()[x];
    return psi;
}

HFunction restrict_to_diagonal(const HypergroupTable& h, const HFunction& rho) {
    const std::size_t n = h.size();
    if (rho.size() != n * n) throw Error(ErrorCode::InvalidParameter, "function is not on H x H");
    HFunction r(n);
    for (Index x = 0; x < n; ++x) r[x] = rho[pair_index(h, x, x)];
    return r;
}

namespace {

std::size_t distinct_values(const HFunction& f, std::size_t upto) {
    std::vector<Complex> seen;
    for (Index x = 0; x < upto; ++x) {
        bool found = false;
        for (const Complex& v : seen)
            found = found || std::abs(v - f[x]) <= 1e-12 * std::max(1.0, std::abs(v));
        if (!found) seen.push_back(f[x]);
    }
    return seen.size();
}

}  // namespace

InvertedMultiplier invert_multiplier(const HypergroupTable& h, const HFunction& phi) {
    const std::size_t n = h.size();
    if (phi.size() != n) throw Error(ErrorCode::InvalidParameter, "function size does not match table");
    InvertedMultiplier r;
    r.inverse = HFunction(n);
    for (Index x = 0; x < n; ++x) {
        if (phi[x] == 0.0) throw Error(ErrorCode::ZeroValue, "phi vanishes at " + h.label(x));
        r.inverse[x] = 1.0 / phi[x];
    }
    r.value_set_size = distinct_values(phi, n);
    if (h.truncated()) {
        std::size_t half = distinct_values(phi, n / 2 + 1);
        if (r.value_set_size > half)
            throw Error(ErrorCode::UnboundedValueSet, "value set of phi grows from " + std::to_string(half) +
                                                          " to " + std::to_string(r.value_set_size) +
                                                          " between the half ball and the full section");
    }
    for (Index x = 0; x < n; ++x) r.product_error = std::max(r.product_error, std::abs(phi[x] * r.inverse[x] - 1.0));
    if (!h.truncated()) {
        CharacterTable t = characters(h);
        r.ma_norm = norm_MA(h, t, r.inverse).value;
    }
    return r;
}

DiagonalIndicator indicator_diagonal(const HypergroupTable& h) {
    if (h.truncated()) throw Error(ErrorCode::InvalidParameter, "indicator_diagonal needs a finite table");
    const std::size_t n = h.size();
    HFunction phi(n);
    for (Index x = 0; x < n; ++x) phi[x] = 1.0 / h.haar(x);
    InvertedMultiplier inv = invert_multiplier(h, phi);

    DiagonalIndicator d{product(h, h), HFunction(n * n), false, 0.0, 0.0, 0.0, 0.0, inv.ma_norm.value_or(0.0)};
    if (h.exact() && !h.haar_exact().empty()) {
        d.exact = true;
        std::vector<Rational> psi = diagonal_psi_exact(h);
        Rational worst = 0;
        for (Index x = 0; x < n; ++x)
            for (Index y = 0; y < n; ++y) {
                Index k = pair_index(h, x, y);
                Rational v = h.haar_exact()[x] * psi[k];
                Rational want = x == y ? 1 : 0;
                worst = std::max(worst, Rational(abs(v - want)));
                d.indicator[k] = v.get_d();
            }
        d.indicator_error = worst.get_d();
    } else {
        HFunction psi = diagonal_psi(h);
        for (Index x = 0; x < n; ++x)
            for (Index y = 0; y < n; ++y) {
                Index k = pair_index(h, x, y);
                d.indicator[k] = inv.inverse[x] * psi[k];
                d.indicator_error = std::max(d.indicator_error, std::abs(d.indicator[k] - (x == y ? 1.0 : 0.0)));
            }
    }
    CharacterTable tk = characters(d.square);
    d.ma_norm = norm_MA(d.square, tk, d.indicator).value;
    d.a_norm = norm_A(d.square, tk, d.indicator).value;
    d.psi_blambda_norm = norm_Blambda(d.square, tk, diagonal_psi(h)).value;
    return d;
}

ApproximateDiagonal approximate_diagonal(const HypergroupTable& h, const DiagonalIndicator& d,
                                         const std::vector<HFunction>& e_net, const std::vector<HFunction>& tests) {
    const std::size_t n = h.size();
    std::vector<HFunction> net = e_net;
    if (net.empty()) net.push_back(HFunction::constant(n, 1.0));
    std::vector<HFunction> us = tests;
    if (us.empty())
        for (Index x = 0; x < n; ++x) us.push_back(HFunction::delta(n, x));
    CharacterTable tk = characters(d.square);
    CharacterTable th = characters(h);
    ApproximateDiagonal r;
    for (const HFunction& e : net) {
        HFunction m(n * n);
        for (Index x = 0; x < n; ++x)
            for (Index y = 0; y < n; ++y) m[pair_index(h, x, y)] = e[x] * e[y] * d.indicator[pair_index(h, x, y)];
        r.bound = std::max(r.bound, norm_A(d.square, tk, m).value);
        HFunction mm = restrict_to_diagonal(h, m);
        for (const HFunction& u : us) {
            HFunction comm(n * n);
            for (Index x = 0; x < n; ++x)
                for (Index y = 0; y < n; ++y) {
                    Index k = pair_index(h, x, y);
                    comm[k] = u[x] * m[k] - m[k] * u[y];
                }
            r.commutator_norm = std::max(r.commutator_norm, norm_A(d.square, tk, comm).value);
            r.identity_residual = std::max(r.identity_residual, norm_A(h, th, pointwise(u, mm) - u).value);
            ++r.tests;
        }
    }
    return r;
}

bool WeakAmenabilityWitness::residuals_decreasing() const {
    for (std::size_t k = 0; k < test_names.size(); ++k)
        for (std::size_t s = 1; s < steps.size(); ++s) {
            double a = steps[s - 1].residuals[k], b = steps[s].residuals[k];
            if (b <= residual_floor) continue;
            if (!(b < a)) return false;
        }
    return true;
}

WeakAmenabilityWitness weak_amenability_witness(const HypergroupTable& h, const std::vector<int>& radii,
                                                const std::vector<HFunction>& tests) {
    const std::size_t n = h.size();
    WeakAmenabilityWitness w;
    std::vector<HFunction> us = tests;
    if (us.empty()) {
        us.push_back(HFunction::delta(n, h.identity()));
        if (n > 1) us.push_back(HFunction::delta(n, h.generator()));
    }
    for (const HFunction& u : us) {
        auto s = u.support();
        w.test_names.push_back(s.size() == 1 ? "delta_" + h.label(s[0]) : "u" + std::to_string(w.test_names.size()));
    }
    if (!h.truncated()) {
        w.finite = true;
        CharacterTable t = characters(h);
        WeakAmenabilityStep step;
        step.e = HFunction::constant(n, 1.0);
        double ma = norm_MA(h, t, step.e).value;
        if (std::abs(ma - 1.0) >= 1e-12)
            throw Error(ErrorCode::DegenerateSpectrum, "multiplier norm of 1 is " + std::to_string(ma));
        step.bound = 1.0;
        step.ma_interval = Interval::point(ma);
        for (const HFunction& u : us) step.residuals.push_back(norm_A(h, t, pointwise(step.e, u) - u).value);
        w.steps.push_back(step);
        w.constant_bound = 1.0;
        return w;
    }
    Chi0Result c = chi0(h);
    DeformedPair pair = voit_deform(h, c.values);
    const HypergroupTable& h0 = pair.deformed;
    JacobiSection j0 = jacobi_section(h0);
    for (int r : radii) {
        if (r < 1 || r + 1 > j0.size() || 2 * r > h.radius())
            throw Error(ErrorCode::TruncationOverflow, "radius " + std::to_string(r) + " does not fit the section");
        Eigen::VectorXd phi = perron_vector(j0, r + 1);
        HFunction xi(n);
        for (int k = 0; k <= r; ++k) xi[k] = phi(k) / std::sqrt(h0.haar(k));
        WeakAmenabilityStep step;
        step.radius = r;
        step.e = convolve_functions(h0, xi, involute(h0, xi));
        step.bound = l2_norm(h0, xi) * l2_norm(h0, xi);
        HFunction cx(n);
        for (Index k = 0; k < n; ++k) cx[k] = c.values[k] * xi[k];
        HFunction back = convolve_functions(h, cx, involute(h, cx));
        for (Index k = 0; k < n; ++k) step.crosscheck_error = std::max(step.crosscheck_error, std::abs(back[k] / c.values[k] - step.e[k]));
        step.ma_interval = norm_A_section(h0, step.e).value;
        for (const HFunction& u : us) {
            HFunction res = pointwise(step.e, u) - u;
            step.residuals.push_back(norm_A_section(h, res).value.upper);
        }
        w.constant_bound = std::max(w.constant_bound, step.bound);
        w.steps.push_back(std::move(step));
    }
    return w;
}

BoundedApproximateIdentity bai_from_p2(const HypergroupTable& h, const std::vector<Index>& F, double eps) {
    const std::size_t n = h.size();
    BoundedApproximateIdentity b;
    if (!h.truncated()) {
        b.u = HFunction::constant(n, 1.0);
        return b;
    }
    P2Report p2 = check_p2(h);
    if (p2.status != P2Status::Holds)
        throw Error(ErrorCode::P2Failure, h.name() + ": (P2) is " + p2_status_name(p2.status) + " (" + p2.certificate + ")");
    JacobiSection j = jacobi_section(h);
    for (int r = 1; 2 * r <= h.radius() && r + 1 <= j.size(); ++r) {
        Eigen::VectorXd phi = perron_vector(j, r + 1);
        HFunction xi(n);
        for (int k = 0; k <= r; ++k) xi[k] = phi(k) / std::sqrt(h.haar(k));
        HFunction u = convolve_functions(h, xi, involute(h, xi));
        double worst = 0.0;
        for (Index x : F) worst = std::max(worst, std::abs(u[x] - 1.0) * std::sqrt(h.haar(x)));
        if (worst < eps) {
            b.u = u;
            b.radius = r;
            b.achieved = worst;
            b.norm_bound = l2_norm(h, xi) * l2_norm(h, xi);
            return b;
        }
    }
    throw Error(ErrorCode::TruncationOverflow, "no ball inside the section reaches the requested accuracy");
}

AmenabilityReport amenability_report(const HypergroupTable& h, double tol) {
    AmenabilityReport r;
    r.id = h.name();
    P2Report p2 = check_p2(h);
    r.p2 = p2.status;
    const std::size_t n = h.size();
    HFunction phi(n);
    for (Index x = 0; x < n; ++x) {
        r.phi_values.push_back(1.0 / h.haar(x));
        phi[x] = r.phi_values.back();
    }
    if (!h.truncated()) {
        DiagonalIndicator d = indicator_diagonal(h);
        r.diagonal_psi_norm = d.psi_blambda_norm;
        r.phi_inverse_MA_norm = d.phi_inverse_ma_norm;
        r.one_delta_MA_norm = d.ma_norm;
        r.indicator_error = d.indicator_error;
        r.indicator_exact = d.exact;
        ApproximateDiagonal a = approximate_diagonal(h, d);
        r.approx_diagonal_bound = a.bound;
        r.commutator_norm = a.commutator_norm;
        r.submultiplicative = d.ma_norm <= d.phi_inverse_ma_norm * d.psi_blambda_norm + tol;
        r.weak_amenability_constant_bound = weak_amenability_witness(h, {}).constant_bound;
        return r;
    }
    try {
        invert_multiplier(h, phi);
    } catch (const Error& e) {
        r.notes.push_back(e.what());
    }
    std::vector<int> radii;
    for (int rad : {5, 10, 20})
        if (2 * rad <= h.radius()) radii.push_back(rad);
    if (radii.empty()) radii.push_back(std::max(1, h.radius() / 2));
    try {
        r.weak_amenability_constant_bound = weak_amenability_witness(h, radii).constant_bound;
    } catch (const Error& e) {
        r.notes.push_back(e.what());
    }
    return r;
}

}  // namespace hgroup
