#include "hgroup/section.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "hgroup/errors.hpp"
#include "hgroup/spectral.hpp"

namespace hgroup {

Eigen::VectorXd JacobiSection::sym_diag(int m) const {
    Eigen::VectorXd d(m);
    for (int n = 0; n < m; ++n) d(n) = diag.at(n);
    return d;
}

Eigen::VectorXd JacobiSection::sym_off(int m) const {
    Eigen::VectorXd o(std::max(m - 1, 0));
    for (int n = 0; n + 1 < m; ++n) o(n) = std::sqrt(up.at(n) * down.at(n + 1));
    return o;
}

JacobiSection jacobi_section(const HypergroupTable& h) {
    if (!h.truncated() || !h.natural_indexed())
        throw Error(ErrorCode::NotNaturalIndexed, h.name() + " is not an N-indexed section");
    if (h.identity() != 0 || h.generator() != 1 || h.involution(1) != 1 || h.size() < 3)
        throw Error(ErrorCode::NotNaturalIndexed, h.name() + " needs identity 0 and a symmetric generator 1");
    JacobiSection j;
    for (Index n = 0; n + 1 < h.size() && h.has_row(1, n); ++n) {
        double dn = 0.0, bn = 0.0, un = 0.0;
        for (const Term& t : h.row(1, n)) {
            if (t.z + 1 == n) dn = t.value;
            else if (t.z == n) bn = t.value;
            else if (t.z == n + 1) un = t.value;
            else throw Error(ErrorCode::NotNaturalIndexed, "generator row " + std::to_string(n) + " is not three-term");
        }
        if (!(un > 0.0)) throw Error(ErrorCode::NotNaturalIndexed, "generator row " + std::to_string(n) + " does not reach n+1");
        j.down.push_back(dn);
        j.diag.push_back(bn);
        j.up.push_back(un);
    }
    if (j.size() < 2) throw Error(ErrorCode::NotNaturalIndexed, h.name() + " has too few generator rows");
    return j;
}

double top_eigenvalue(const JacobiSection& j, int m) {
    if (m < 1 || m > j.size()) throw Error(ErrorCode::InvalidParameter, "block size out of range");
    if (m == 1) return j.diag[0];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(j.sym_diag(m), j.sym_off(m), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(m - 1);
}

Eigen::VectorXd perron_vector(const JacobiSection& j, int m) {
    if (m < 1 || m > j.size()) throw Error(ErrorCode::InvalidParameter, "block size out of range");
    if (m == 1) return Eigen::VectorXd::Ones(1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(j.sym_diag(m), j.sym_off(m), Eigen::ComputeEigenvectors);
    Eigen::VectorXd v = es.eigenvectors().col(m - 1).cwiseAbs();
    return v / v.norm();
}

Quadrature gauss_quadrature(const JacobiSection& j, int m) {
    if (m < 1 || m > j.size()) throw Error(ErrorCode::InvalidParameter, "block size out of range");
    Quadrature q;
    if (m == 1) {
        q.nodes = {j.diag[0]};
        q.weights = {1.0};
        return q;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(j.sym_diag(m), j.sym_off(m), Eigen::ComputeEigenvectors);
    for (int k = 0; k < m; ++k) {
        q.nodes.push_back(es.eigenvalues()(k));
        q.weights.push_back(es.eigenvectors()(0, k) * es.eigenvectors()(0, k));
    }
    return q;
}

std::vector<double> character_values(const JacobiSection& j, double t, int count) {
    if (count < 1 || count > j.size() + 1) throw Error(ErrorCode::TruncationOverflow, "character requested beyond the section");
    std::vector<double> p(count);
    p[0] = 1.0;
    for (int n = 0; n + 1 < count; ++n) {
        double prev = n > 0 ? p[n - 1] : 0.0;
        p[n + 1] = (t * p[n] - j.down[n] * prev - j.diag[n] * p[n]) / j.up[n];
    }
    return p;
}

const char* p2_status_name(P2Status s) {
    switch (s) {
        case P2Status::Holds: return "holds";
        case P2Status::Fails: return "fails";
        case P2Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

P2Report check_p2(const HypergroupTable& h, double tol) {
    P2Report rep;
    if (!h.truncated()) {
        rep.finite = true;
        double err = 0.0;
        for (Index x = 0; x < h.size(); ++x)
            for (Index y = 0; y < h.size(); ++y) {
                double s = 0.0;
                for (const Term& t : h.row(x, y)) s += t.value;
                err = std::max(err, std::abs(s - 1.0));
            }
        std::ostringstream ss;
        ss << "constant 1 is a character row (max row-sum defect " << err << ")";
        rep.certificate = ss.str();
        rep.status = err <= tol ? P2Status::Holds : P2Status::Inconclusive;
        return rep;
    }
    JacobiSection j = jacobi_section(h);
    const int m = j.size();
    for (int r : {std::max(1, m / 4), std::max(1, m / 2), m}) rep.lower_by_radius.emplace_back(r, top_eigenvalue(j, r));
    for (std::size_t i = 1; i < rep.lower_by_radius.size(); ++i)
        rep.monotone = rep.monotone && rep.lower_by_radius[i].second >= rep.lower_by_radius[i - 1].second - 1e-14;
    rep.lower = rep.lower_by_radius.back().second;

    // Schur test with the Perron vector held constant past its peak.
    Eigen::VectorXd phi = perron_vector(j, m);
    Eigen::VectorXd d = j.sym_diag(m), o = j.sym_off(m);
    int peak = 0;
    for (int n = 1; n < m; ++n)
        if (phi(n) > phi(peak)) peak = n;
    auto v = [&](int n) { return n <= peak ? phi(n) : phi(peak); };
    double ratio = 0.0;
    for (int n = 0; n + 1 < m; ++n) {
        double s = std::abs(d(n)) * v(n) + o(n) * v(n + 1);
        if (n > 0) s += o(n - 1) * v(n - 1);
        ratio = std::max(ratio, s / v(n));
    }
    double tail = 0.0;
    for (int n = std::max(1, (3 * m) / 4); n + 1 < m; ++n) tail = std::max(tail, o(n - 1) + std::abs(d(n)) + o(n));
    rep.tail_bound = tail;
    rep.upper = std::min(1.0, std::max(ratio, tail));
    rep.upper = std::max(rep.upper, rep.lower);

    std::ostringstream ss;
    ss.precision(12);
    if (rep.upper < 1.0 - tol) {
        rep.status = P2Status::Fails;
        ss << "spectral radius of the generator operator <= " << rep.upper << " < 1";
    } else if (rep.upper < 1.0 - 1e-12) {
        rep.status = P2Status::Inconclusive;
        ss << "upper bound " << rep.upper << " within tolerance of 1";
    } else {
        rep.status = P2Status::Holds;
        ss << "bounds straddle 1: [" << rep.lower << ", " << rep.upper << "]";
    }
    rep.certificate = ss.str();
    return rep;
}

Chi0Result chi0(const HypergroupTable& h, double tol) {
    Chi0Result res;
    const std::size_t n = h.size();
    if (!h.truncated()) {
        res.finite = true;
        CharacterTable t = characters(h);
        res.values.assign(n, 1.0);
        res.domination_excess = -1e300;
        for (Index i = 0; i < t.count(); ++i)
            for (Index x = 0; x < n; ++x) res.domination_excess = std::max(res.domination_excess, std::abs(t(i, x)) - 1.0);
        res.sampled = t.count();
        if (res.domination_excess > tol)
            throw Error(ErrorCode::DominationFailure, "a character of " + h.name() + " exceeds 1 in modulus");
        return res;
    }
    JacobiSection j = jacobi_section(h);
    P2Report p2 = check_p2(h);
    const int count = j.size() + 1;
    if (p2.status == P2Status::Holds) {
        res.values.assign(n, 1.0);
        res.at_generator = 1.0;
    } else {
        res.at_generator = p2.upper;
        std::vector<double> p = character_values(j, p2.upper, count);
        res.values.assign(p.begin(), p.end());
        res.values.resize(n, 0.0);
    }
    for (int k = 0; k < count; ++k)
        if (!(res.values[k] > 0.0))
            throw Error(ErrorCode::DominationFailure, "candidate chi0 is not positive at " + std::to_string(k));
    for (Index x = 0; x < static_cast<Index>(count); ++x)
        for (Index y = x; y < static_cast<Index>(count); ++y) {
            if (!h.has_row(x, y)) continue;
            double s = 0.0;
            bool inside = true;
            for (const Term& t : h.row(x, y)) {
                if (t.z >= static_cast<Index>(count)) inside = false;
                else s += t.value * res.values[t.z];
            }
            if (!inside) continue;
            double lhs = res.values[x] * res.values[y];
            res.multiplicativity_error = std::max(res.multiplicativity_error, std::abs(lhs - s) / lhs);
        }
    Quadrature q = gauss_quadrature(j, j.size());
    res.domination_excess = -1e300;
    for (double s : q.nodes) {
        std::vector<double> p = character_values(j, s, count);
        for (int k = 0; k < count; ++k)
            res.domination_excess = std::max(res.domination_excess, (std::abs(p[k]) - res.values[k]) / res.values[k]);
        ++res.sampled;
    }
    if (res.multiplicativity_error > std::max(tol, 1e-9))
        throw Error(ErrorCode::DominationFailure, "candidate chi0 is not multiplicative (error " +
                                                      std::to_string(res.multiplicativity_error) + ")");
    if (res.domination_excess > std::max(tol, 1e-9))
        throw Error(ErrorCode::DominationFailure, "candidate chi0 does not dominate sampled characters");
    return res;
}

}  // namespace hgroup
