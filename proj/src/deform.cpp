#include <algorithm>
#include <cmath>

#include "hgroup/errors.hpp"
#include "hgroup/section.hpp"
#include "hgroup/spectral.hpp"

namespace hgroup {

namespace {

HypergroupTable deform_table(const HypergroupTable& h, const std::vector<double>& c0) {
    const std::size_t n = h.size();
    const bool identity = std::all_of(c0.begin(), c0.end(), [](double v) { return v == 1.0; });
    TableBuilder b(h.labels());
    b.name(h.name() + "_0").identity(h.identity()).involution(h.involution()).generator(h.generator());
    if (h.truncated()) b.truncated(h.radius());
    b.natural_indexed(h.natural_indexed());
    const bool exact = identity && h.exact();
    if (h.haar_declared() || h.truncated()) {
        if (exact && !h.haar_exact().empty()) {
            b.haar(h.haar_exact());
        } else {
            std::vector<double> w(n);
            for (Index x = 0; x < n; ++x) w[x] = c0[x] * c0[x] * h.haar(x);
            b.haar(w);
        }
    }
    for (Index x = 0; x < n; ++x)
        for (Index y = h.commutative() ? x : 0; y < n; ++y) {
            if (!h.has_row(x, y)) continue;
            const auto& r = h.row(x, y);
            if (exact) {
                const auto& q = h.exact_row(x, y);
                for (std::size_t i = 0; i < r.size(); ++i) b.add(x, y, r[i].z, q[i]);
            } else {
                std::vector<Term> row;
                for (const Term& t : r) row.push_back({t.z, c0[t.z] * t.value / (c0[x] * c0[y])});
                b.set_row(x, y, row);
            }
        }
    return b.build();
}

}  // namespace

DeformedPair voit_deform(const HypergroupTable& h, const std::vector<double>& c0, double tol) {
    const std::size_t n = h.size();
    if (c0.size() != n) throw Error(ErrorCode::InvalidParameter, "chi0 has the wrong length");
    for (Index x = 0; x < n; ++x)
        if (!(c0[x] > 0.0)) throw Error(ErrorCode::DominationFailure, "chi0 must be positive");
    DeformedPair p{h, c0, deform_table(h, c0), {}, 0.0, 0};
    p.haar_prime.resize(n);
    for (Index x = 0; x < n; ++x) p.haar_prime[x] = c0[x] * c0[x] * h.haar(x);

    if (!h.truncated()) {
        CharacterTable t = characters(h);
        CharacterTable t0 = characters(p.deformed);
        for (Index i = 0; i < t.count(); ++i) {
            bool dominated = true;
            for (Index x = 0; x < n; ++x) dominated = dominated && std::abs(t(i, x)) <= c0[x] * (1.0 + tol);
            if (!dominated) continue;
            double best = 1e300;
            for (Index k = 0; k < t0.count(); ++k) {
                double err = 0.0;
                for (Index x = 0; x < n; ++x) err = std::max(err, std::abs(t(i, x) / c0[x] - t0(k, x)));
                best = std::min(best, err);
            }
            p.dual_map_error = std::max(p.dual_map_error, best);
            ++p.dual_map_checked;
        }
    } else if (h.natural_indexed()) {
        JacobiSection j = jacobi_section(h);
        Quadrature q = gauss_quadrature(j, j.size());
        const int count = j.size() + 1;
        for (double s : q.nodes) {
            std::vector<double> chi = character_values(j, s, count);
            std::vector<double> psi(count);
            for (int k = 0; k < count; ++k) psi[k] = chi[k] / c0[k];
            // psi must satisfy the generator recurrence of the deformed table
            double err = 0.0;
            for (Index m = 0; m + 1 < static_cast<Index>(count); ++m) {
                if (!p.deformed.has_row(1, m)) break;
                double rhs = 0.0;
                for (const Term& t : p.deformed.row(1, m)) rhs += t.value * psi[t.z];
                double lhs = psi[1] * psi[m];
                err = std::max(err, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
            }
            p.dual_map_error = std::max(p.dual_map_error, err);
            ++p.dual_map_checked;
        }
    }
    return p;
}

}  // namespace hgroup
