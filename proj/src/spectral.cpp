#include "hgroup/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "hgroup/errors.hpp"

namespace hgroup {

HFunction CharacterTable::row(Index chi) const {
    HFunction f(static_cast<std::size_t>(values.cols()));
    for (Index x = 0; x < f.size(); ++x) f[x] = values(chi, x);
    return f;
}

Eigen::MatrixXd structure_matrix(const HypergroupTable& h, Index x) {
    const std::size_t n = h.size();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Index y = 0; y < n; ++y)
        for (const Term& t : h.row(x, y)) a(y, t.z) = t.value;
    return a;
}

namespace {

double multiplicativity_error(const HypergroupTable& h, const Eigen::VectorXcd& chi) {
    const std::size_t n = h.size();
    double err = 0.0;
    for (Index x = 0; x < n; ++x)
        for (Index y = h.commutative() ? x : 0; y < n; ++y) {
            Complex s = 0.0;
            for (const Term& t : h.row(x, y)) s += t.value * chi(t.z);
            err = std::max(err, std::abs(chi(x) * chi(y) - s));
        }
    return err;
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::max(std::abs(a), std::abs(b))); }

}  // namespace

CharacterTable characters(const HypergroupTable& h, const SpectralOptions& opt) {
    if (!h.commutative()) throw Error(ErrorCode::NotCommutative, h.name() + " is not commutative");
    if (h.truncated()) throw Error(ErrorCode::InvalidParameter, "characters() needs a finite table; " + h.name() + " is a section");
    const std::size_t n = h.size();
    const Index e = h.identity();
    const auto& lam = h.haar();
    Eigen::VectorXd s(n);
    for (Index x = 0; x < n; ++x) s(x) = std::sqrt(lam[x]);

    std::vector<Eigen::MatrixXd> A(n);
    for (Index x = 0; x < n; ++x) A[x] = structure_matrix(h, x);

    std::string last_reason = "no attempt made";
    for (int attempt = 0; attempt < opt.retries; ++attempt) {
        std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(attempt));
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
        for (Index x = 0; x < n; ++x) {
            double r = dist(rng);
            if (x == e) continue;
            for (Index y = 0; y < n; ++y)
                for (Index z = 0; z < n; ++z)
                    if (A[x](y, z) != 0.0) M(y, z) += r * s(y) * A[x](y, z) / s(z);
        }
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M);
        if (es.info() != Eigen::Success) {
            last_reason = "eigensolver did not converge";
            continue;
        }
        const auto& ev = es.eigenvalues();
        double gap = 1e300;
        for (Index i = 0; i < n; ++i)
            for (Index j = i + 1; j < n; ++j) gap = std::min(gap, std::abs(ev(i) - ev(j)));
        if (n > 1 && gap < opt.gap) {
            last_reason = "eigenvalue gap " + std::to_string(gap);
            continue;
        }

        Eigen::MatrixXcd chars(n, n);
        bool ok = true;
        for (Index j = 0; j < n && ok; ++j) {
            Eigen::VectorXcd chi(n);
            for (Index y = 0; y < n; ++y) chi(y) = es.eigenvectors()(y, j) / s(y);
            if (std::abs(chi(e)) < 1e-12 * chi.cwiseAbs().maxCoeff()) {
                ok = false;
                last_reason = "eigenvector vanishes at the identity";
                break;
            }
            chi /= chi(e);
            // Rayleigh refinement in l2(lambda)
            double norm2 = 0.0;
            for (Index y = 0; y < n; ++y) norm2 += lam[y] * std::norm(chi(y));
            Eigen::VectorXcd refined(n);
            for (Index x = 0; x < n; ++x) {
                Eigen::VectorXcd ax = A[x].cast<Complex>() * chi;
                Complex num = 0.0;
                for (Index y = 0; y < n; ++y) num += lam[y] * ax(y) * std::conj(chi(y));
                refined(x) = num / norm2;
            }
            refined /= refined(e);
            double scale = std::max(1.0, refined.cwiseAbs().maxCoeff());
            if (multiplicativity_error(h, refined) > opt.tol * scale) {
                ok = false;
                last_reason = "character fails multiplicativity after refinement";
                break;
            }
            chars.row(j) = refined.transpose();
        }
        if (!ok) continue;

        const Index g = h.generator();
        std::vector<Index> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](Index a, Index b) {
            double ga = chars(a, g).real(), gb = chars(b, g).real();
            if (!close(ga, gb)) return ga > gb;
            for (Index x = 0; x < n; ++x) {
                double ra = chars(a, x).real(), rb = chars(b, x).real();
                if (!close(ra, rb)) return ra > rb;
            }
            for (Index x = 0; x < n; ++x) {
                double ia = chars(a, x).imag(), ib = chars(b, x).imag();
                if (!close(ia, ib)) return ia > ib;
            }
            return false;
        });
        CharacterTable t;
        t.values.resize(n, n);
        for (Index i = 0; i < n; ++i) t.values.row(i) = chars.row(order[i]);
        t.generator = g;
        t.attempts = attempt + 1;
        t.plancherel = plancherel(h, t);
        t.in_support.assign(n, true);
        t.positive.assign(n, false);
        t.conjugate.assign(n, n);
        for (Index i = 0; i < n; ++i) {
            bool pos = true;
            for (Index x = 0; x < n; ++x) pos = pos && t.values(i, x).real() > opt.tol && std::abs(t.values(i, x).imag()) <= opt.tol;
            t.positive[i] = pos;
            double best = 1e300;
            for (Index j = 0; j < n; ++j) {
                double d = (t.values.row(j) - t.values.row(i).conjugate()).cwiseAbs().maxCoeff();
                if (d < best) best = d, t.conjugate[i] = j;
            }
        }
        return t;
    }
    throw Error(ErrorCode::DegenerateSpectrum,
                "joint diagonalization of " + h.name() + " failed after " + std::to_string(opt.retries) + " attempts (" + last_reason + ")");
}

std::vector<double> plancherel(const HypergroupTable& h, const CharacterTable& t) {
    const auto& lam = h.haar();
    std::vector<double> w(t.count());
    for (Index i = 0; i < t.count(); ++i) {
        double s = 0.0;
        for (Index x = 0; x < h.size(); ++x) s += lam[x] * std::norm(t(i, x));
        w[i] = 1.0 / s;
    }
    return w;
}

Eigen::VectorXcd fourier(const HypergroupTable& h, const CharacterTable& t, const HFunction& f) {
    if (f.size() != h.size()) throw Error(ErrorCode::InvalidParameter, "function size does not match table");
    const auto& lam = h.haar();
    Eigen::VectorXcd u(t.count());
    for (Index i = 0; i < t.count(); ++i) {
        Complex s = 0.0;
        for (Index x = 0; x < h.size(); ++x) s += lam[x] * f[x] * std::conj(t(i, x));
        u(i) = s;
    }
    return u;
}

HFunction inverse_fourier(const HypergroupTable& h, const CharacterTable& t, const Eigen::VectorXcd& coeffs) {
    if (static_cast<std::size_t>(coeffs.size()) != t.count())
        throw Error(ErrorCode::InvalidParameter, "coefficient vector does not match character table");
    HFunction f(h.size());
    for (Index x = 0; x < h.size(); ++x) {
        Complex s = 0.0;
        for (Index i = 0; i < t.count(); ++i) s += t.plancherel[i] * coeffs(i) * t(i, x);
        f[x] = s;
    }
    return f;
}

double CharacterCheck::max() const { return std::max({multiplicativity, hermitian, orthogonality, normalization}); }

CharacterCheck check_characters(const HypergroupTable& h, const CharacterTable& t) {
    CharacterCheck c;
    const std::size_t n = h.size();
    const auto& lam = h.haar();
    for (Index i = 0; i < t.count(); ++i) {
        Eigen::VectorXcd chi = t.values.row(i).transpose();
        c.multiplicativity = std::max(c.multiplicativity, multiplicativity_error(h, chi));
        c.normalization = std::max(c.normalization, std::abs(chi(h.identity()) - 1.0));
        for (Index x = 0; x < n; ++x)
            c.hermitian = std::max(c.hermitian, std::abs(chi(h.involution(x)) - std::conj(chi(x))));
        for (Index j = 0; j < t.count(); ++j) {
            Complex g = 0.0;
            for (Index x = 0; x < n; ++x) g += lam[x] * t(i, x) * std::conj(t(j, x));
            double v = i == j ? std::abs(g * t.plancherel[i] - 1.0)
                              : std::abs(g) * std::sqrt(t.plancherel[i] * t.plancherel[j]);
            c.orthogonality = std::max(c.orthogonality, v);
        }
    }
    return c;
}

}  // namespace hgroup
