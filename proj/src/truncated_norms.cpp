#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "hgroup/core.hpp"
#include "hgroup/errors.hpp"
#include "hgroup/norms.hpp"
#include "hgroup/section.hpp"

namespace hgroup {

namespace {

/// Roots of sum_n gamma_n P_n via the comrade matrix of the three-term basis.
std::vector<Complex> roots_in_basis(const JacobiSection& j, const std::vector<Complex>& gamma) {
    const int d = static_cast<int>(gamma.size()) - 1;
    if (d < 1) return {};
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
    for (int n = 0; n < d; ++n) {
        if (n > 0) c(n, n - 1) = j.down[n];
        c(n, n) = j.diag[n];
        if (n + 1 < d) c(n, n + 1) = j.up[n];
    }
    for (int n = 0; n < d; ++n) c(d - 1, n) -= j.up[d - 1] * gamma[n] / gamma[d];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, false);
    std::vector<Complex> r;
    for (int i = 0; i < d; ++i) r.push_back(es.eigenvalues()(i));
    return r;
}

double jackson(int n, int L) {
    const double pi = std::acos(-1.0);
    double a = pi / (L + 1);
    return ((L - n + 1) * std::cos(n * a) + std::sin(n * a) / std::tan(a)) / (L + 1);
}

}  // namespace

SectionNorm norm_A_section(const HypergroupTable& h, const HFunction& u, const SectionNormOptions& opt) {
    JacobiSection j = jacobi_section(h);
    const int m = j.size();
    const auto& lam = h.haar();
    SectionNorm res;
    res.spectral_bound = opt.spectral_bound > 0.0 ? opt.spectral_bound : check_p2(h).upper;
    auto supp = u.support();
    if (supp.empty()) {
        res.value = Interval::point(0.0);
        res.upper_method = "zero";
        res.xi = res.eta = res.extremal = HFunction(h.size());
        return res;
    }
    const int D = static_cast<int>(supp.back());
    if (D > m) throw Error(ErrorCode::TruncationOverflow, "support of u leaves the section");
    const int L = std::max(1, std::min(opt.lower_degree, m - 1));
    const int count = std::min(m + 1, std::max(D, L) + 1);

    Quadrature q = gauss_quadrature(j, m);
    const int K = static_cast<int>(q.nodes.size());
    std::vector<std::vector<double>> P(K);
    for (int k = 0; k < K; ++k) P[k] = character_values(j, q.nodes[k], count);
    std::vector<Complex> gamma(D + 1);
    for (int n = 0; n <= D; ++n) gamma[n] = lam[n] * u[n];
    std::vector<Complex> p(K);
    for (int k = 0; k < K; ++k) {
        Complex s = 0.0;
        for (int n = 0; n <= D; ++n) s += gamma[n] * P[k][n];
        p[k] = s;
        res.estimate += q.weights[k] * std::abs(s);
    }

    // Upper bound 1: ||delta_x||_A <= sqrt(lambda(x)).
    double cs = 0.0;
    for (Index x : supp) cs += std::abs(u[x]) * std::sqrt(lam[x]);
    res.value.upper = cs;
    res.upper_method = "cauchy-schwarz";

    // Upper bound 2: split the roots of u^ between the two factors.
    if (D >= 1 && D + 1 <= m) {
        std::vector<Complex> roots = roots_in_basis(j, gamma);
        int kstar = 0;
        for (int k = 1; k < K; ++k)
            if (std::abs(p[k]) > std::abs(p[kstar])) kstar = k;
        Complex all = 1.0;
        for (const Complex& r : roots) all *= q.nodes[kstar] - r;
        const Complex kappa = p[kstar] / all;
        // |t_k - r_i|^2 table
        std::vector<std::vector<double>> dist(K, std::vector<double>(D));
        for (int k = 0; k < K; ++k)
            for (int i = 0; i < D; ++i) dist[k][i] = std::norm(q.nodes[k] - roots[i]);
        auto cost = [&](const std::vector<char>& in) {
            double na = 0.0, nb = 0.0;
            for (int k = 0; k < K; ++k) {
                double a = 1.0, b = std::norm(kappa);
                for (int i = 0; i < D; ++i) (in[i] ? a : b) *= dist[k][i];
                na += q.weights[k] * a;
                nb += q.weights[k] * b;
            }
            return std::sqrt(na * nb);
        };
        std::vector<char> best(D, 0);
        double best_cost = cost(best);
        if (D <= opt.exhaustive_roots) {
            std::vector<char> in(D);
            for (unsigned long mask = 1; mask < (1UL << D); ++mask) {
                for (int i = 0; i < D; ++i) in[i] = (mask >> i) & 1UL;
                double c = cost(in);
                if (c < best_cost) best_cost = c, best = in;
            }
        } else {
            bool improved = true;
            while (improved) {
                improved = false;
                for (int i = 0; i < D; ++i) {
                    std::vector<char> in = best;
                    in[i] = !in[i];
                    double c = cost(in);
                    if (c < best_cost - 1e-15) best_cost = c, best = in, improved = true;
                }
            }
        }
        const int da = static_cast<int>(std::count(best.begin(), best.end(), 1));
        HFunction xi(h.size()), eta(h.size());
        for (int k = 0; k < K; ++k) {
            Complex a = 1.0, b = kappa;
            for (int i = 0; i < D; ++i) (best[i] ? a : b) *= q.nodes[k] - roots[i];
            for (int n = 0; n <= da; ++n) xi[n] += q.weights[k] * a * P[k][n];
            for (int n = 0; n <= D - da; ++n) eta[n] += q.weights[k] * b * P[k][n];
        }
        eta = conj(eta);
        HFunction back = convolve_functions(h, xi, involute(h, eta));
        double resid = 0.0;
        for (Index x = 0; x < h.size(); ++x) resid += std::abs(u[x] - back[x]) * std::sqrt(lam[x]);
        double bound = l2_norm(h, xi) * l2_norm(h, eta) + resid;
        res.xi = xi;
        res.eta = eta;
        res.witness_residual = resid;
        if (bound < res.value.upper) {
            res.value.upper = bound;
            res.upper_method = "root-split factorization";
        }
    }

    // Lower bound: pair with a damped sign polynomial, sup certified on [-U, U].
    std::vector<Complex> f(L + 1, 0.0);
    for (int k = 0; k < K; ++k) {
        Complex s = std::abs(p[k]) > 0.0 ? std::conj(p[k]) / std::abs(p[k]) : Complex(0.0);
        for (int n = 0; n <= L && n < count; ++n) f[n] += q.weights[k] * s * P[k][n];
    }
    for (int n = 0; n <= L; ++n) f[n] *= jackson(n, L);
    res.extremal = HFunction(h.size());
    for (int n = 0; n <= L; ++n) res.extremal[n] = f[n];
    Complex pair = 0.0;
    for (int n = 0; n <= std::min(D, L); ++n) pair += lam[n] * u[n] * f[n];
    res.pairing = pair;
    const double U = res.spectral_bound;
    const long grid = 64L * L * L + 1;
    double mgrid = 0.0;
    for (long g = 0; g < grid; ++g) {
        double t = -U + 2.0 * U * static_cast<double>(g) / static_cast<double>(grid - 1);
        std::vector<double> pv = character_values(j, t, L + 1);
        Complex s = 0.0;
        for (int n = 0; n <= L; ++n) s += lam[n] * f[n] * pv[n];
        mgrid = std::max(mgrid, std::abs(s));
    }
    res.extremal_sup = mgrid / (1.0 - static_cast<double>(L) * L / static_cast<double>(grid - 1));
    res.value.lower = res.extremal_sup > 0.0 ? std::abs(pair) / res.extremal_sup : 0.0;
    return res;
}

Interval norm_MA_section(const HypergroupTable& h, const HFunction& u, const SectionNormOptions& opt) {
    Chi0Result c = chi0(h);
    bool trivial = std::all_of(c.values.begin(), c.values.end(), [](double v) { return v == 1.0; });
    if (trivial) return norm_A_section(h, u, opt).value;
    DeformedPair d = voit_deform(h, c.values);
    SectionNormOptions o = opt;
    o.spectral_bound = 0.0;
    return norm_A_section(d.deformed, u, o).value;
}

}  // namespace hgroup
