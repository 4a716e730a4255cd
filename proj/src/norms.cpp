#include "hgroup/norms.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "hgroup/builders.hpp"
#include "hgroup/core.hpp"
#include "hgroup/errors.hpp"

namespace hgroup {

namespace {

void require_finite(const HypergroupTable& h) {
    if (h.truncated()) throw Error(ErrorCode::InvalidParameter, h.name() + " is a section; use the section norms");
}

Complex phase(Complex z) {
    double a = std::abs(z);
    return a > 0.0 ? z / a : Complex(1.0);
}

}  // namespace

NormA norm_A(const HypergroupTable& h, const CharacterTable& t, const HFunction& u) {
    require_finite(h);
    Eigen::VectorXcd uh = fourier(h, t, u);
    NormA r;
    Eigen::VectorXcd xh(uh.size()), eh(uh.size());
    for (Index i = 0; i < t.count(); ++i) {
        r.value += t.plancherel[i] * std::abs(uh(i));
        double s = std::sqrt(std::abs(uh(i)));
        xh(i) = s * phase(uh(i));
        eh(i) = s;
    }
    r.xi = inverse_fourier(h, t, xh);
    r.eta = inverse_fourier(h, t, eh);
    HFunction back = convolve_functions(h, r.xi, involute(h, r.eta));
    r.reproduction_error = max_abs_diff(back, u);
    r.witness_product = l2_norm(h, r.xi) * l2_norm(h, r.eta);
    return r;
}

double lambda_operator_norm(const HypergroupTable& h, const HFunction& f) {
    require_finite(h);
    const std::size_t n = h.size();
    const auto& lam = h.haar();
    Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(n, n);
    for (Index y = 0; y < n; ++y) {
        if (f[y] == 0.0) continue;
        Index yt = h.involution(y);
        for (Index x = 0; x < n; ++x)
            for (const Term& t : h.row(yt, x)) k(x, t.z) += lam[y] * f[y] * t.value;
    }
    for (Index x = 0; x < n; ++x)
        for (Index z = 0; z < n; ++z) k(x, z) *= std::sqrt(lam[x] / lam[z]);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(k);
    return svd.singularValues()(0);
}

NormBlambda norm_Blambda(const HypergroupTable& h, const CharacterTable& t, const HFunction& u) {
    require_finite(h);
    Eigen::VectorXcd uh = fourier(h, t, u);
    Eigen::VectorXcd gh(uh.size());
    for (Index i = 0; i < t.count(); ++i) gh(i) = phase(uh(i));
    NormBlambda r;
    r.extremal = conj(inverse_fourier(h, t, gh));
    r.pairing = pairing(h, u, r.extremal);
    r.operator_norm = lambda_operator_norm(h, r.extremal);
    r.value = std::abs(r.pairing) / r.operator_norm;
    return r;
}

NormMA norm_MA(const HypergroupTable& h, const CharacterTable& t, const HFunction& u) {
    require_finite(h);
    const std::size_t n = h.size();
    const std::size_t k = t.count();
    Eigen::MatrixXcd X(n, k);
    for (Index x = 0; x < n; ++x)
        for (Index i = 0; i < k; ++i) X(x, i) = t(i, x);
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(X);
    if (k != n || lu.rank() != static_cast<Eigen::Index>(n))
        throw Error(ErrorCode::SingularCharacterBasis, "characters of " + h.name() + " do not span");
    Eigen::MatrixXcd rhs(n, k);
    for (Index x = 0; x < n; ++x)
        for (Index j = 0; j < k; ++j) rhs(x, j) = u[x] * t(j, x);
    NormMA r;
    r.matrix = lu.solve(rhs);
    for (Index j = 0; j < k; ++j) r.value = std::max(r.value, r.matrix.col(j).cwiseAbs().sum());
    return r;
}

double norm_B_finite(const HypergroupTable& h, const CharacterTable& t, const HFunction& u) {
    return norm_Blambda(h, t, u).value;
}

TraceNormEngine::TraceNormEngine(const HypergroupTable& h) : h_(h) {
    require_finite(h);
    const std::size_t n = h.size();
    const auto& lam = h.haar();
    ops_.resize(n);
    // L_x in the basis delta_y / sqrt(lambda(y)): entry (y,z) = sqrt(lambda(y)/lambda(z)) c^z_{x~,y}
    for (Index x = 0; x < n; ++x) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
        Index xt = h.involution(x);
        for (Index y = 0; y < n; ++y)
            for (const Term& t : h.row(xt, y)) m(y, t.z) = std::sqrt(lam[y] / lam[t.z]) * t.value;
        ops_[x] = std::move(m);
    }
    Eigen::MatrixXd gram(n, n);
    for (Index x = 0; x < n; ++x)
        for (Index w = 0; w < n; ++w) gram(x, w) = ops_[x].cwiseProduct(ops_[w].transpose()).sum();
    gram_ = Eigen::FullPivLU<Eigen::MatrixXd>(gram);
    if (gram_.rank() != static_cast<Eigen::Index>(n))
        throw Error(ErrorCode::SingularCharacterBasis, "translation operators of " + h.name() + " are dependent");
}

double TraceNormEngine::norm(const HFunction& u) const {
    const std::size_t n = h_.size();
    if (u.size() != n) throw Error(ErrorCode::InvalidParameter, "function size does not match table");
    Eigen::VectorXd re(n), im(n);
    for (Index x = 0; x < n; ++x) re(x) = u[x].real(), im(x) = u[x].imag();
    Eigen::VectorXd a = gram_.solve(re), b = gram_.solve(im);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n, n);
    for (Index w = 0; w < n; ++w) rho += Complex(a(w), b(w)) * ops_[w].cast<Complex>();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(rho);
    return svd.singularValues().sum();
}

std::vector<FiniteGroup> default_mcb_groups() {
    return {cyclic_group(2), symmetric_group_s3(), dihedral_group_d4()};
}

NormMcb norm_Mcb_approx(const HypergroupTable& h, const CharacterTable& t, const HFunction& u,
                        const std::vector<FiniteGroup>& groups, double gap_tol) {
    require_finite(h);
    NormMcb r;
    r.value = {0.0, 0.0};
    for (const FiniteGroup& g : groups) {
        HypergroupTable k = product(h, group_hypergroup(g));
        const std::size_t ng = g.order();
        auto extend = [&](const HFunction& f) {
            HFunction w(k.size());
            for (Index x = 0; x < h.size(); ++x)
                for (Index s = 0; s < ng; ++s) w[x * ng + s] = f[x];
            return w;
        };
        Interval iv;
        if (k.commutative()) {
            CharacterTable tk = characters(k);
            iv = Interval::point(norm_MA(k, tk, extend(u)).value);
        } else {
            TraceNormEngine eng(k);
            iv.upper = eng.norm(extend(u));
            iv.lower = 0.0;
            for (Index i = 0; i < t.count(); ++i) {
                HFunction chi = t.row(i);
                double ratio = eng.norm(extend(pointwise(u, chi))) / eng.norm(extend(chi));
                iv.lower = std::max(iv.lower, ratio);
            }
        }
        r.groups.push_back(g.name());
        r.per_group.push_back(iv);
        r.value.lower = std::max(r.value.lower, iv.lower);
        r.value.upper = std::max(r.value.upper, iv.upper);
    }
    r.resolved = r.value.width() <= gap_tol;
    return r;
}

NormReport norm_report(const HypergroupTable& h, const HFunction& u, const NormReportOptions& opt) {
    NormReport r;
    if (h.truncated()) {
        r.truncated = true;
        SectionNorm a = norm_A_section(h, u);
        r.norm_A = a.value;
        r.norm_Blambda = a.value;
        r.norm_MA = norm_MA_section(h, u);
        r.extremal_f = a.extremal;
        r.b_convention_dependent = false;
        return r;
    }
    CharacterTable t = characters(h);
    NormA a = norm_A(h, t, u);
    NormBlambda b = norm_Blambda(h, t, u);
    r.norm_A = Interval::point(a.value);
    r.norm_Blambda = Interval::point(b.value);
    r.norm_MA = Interval::point(norm_MA(h, t, u).value);
    r.witness_A = a;
    r.extremal_f = b.extremal;
    r.norm_B_finite = b.value;
    if (opt.with_mcb)
        r.norm_Mcb_approx = norm_Mcb_approx(h, t, u, opt.groups.empty() ? default_mcb_groups() : opt.groups);
    return r;
}

}  // namespace hgroup
