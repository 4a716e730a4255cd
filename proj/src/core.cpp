#include "hgroup/core.hpp"

#include <algorithm>
#include <cmath>

#include "hgroup/errors.hpp"

namespace hgroup {

namespace {

void require_size(const HypergroupTable& h, const HFunction& f) {
    if (f.size() != h.size())
        throw Error(ErrorCode::InvalidParameter, "function size does not match table " + h.name());
}

template <class T>
struct Entry {
    Index z;
    T v;
};

template <class T>
std::vector<Entry<T>> get_row(const HypergroupTable& h, Index x, Index y);

template <>
std::vector<Entry<double>> get_row<double>(const HypergroupTable& h, Index x, Index y) {
    std::vector<Entry<double>> r;
    for (const Term& t : h.row(x, y)) r.push_back({t.z, t.value});
    return r;
}

template <>
std::vector<Entry<Rational>> get_row<Rational>(const HypergroupTable& h, Index x, Index y) {
    const auto& terms = h.row(x, y);
    const auto& q = h.exact_row(x, y);
    std::vector<Entry<Rational>> r;
    r.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) r.push_back({terms[i].z, q[i]});
    return r;
}

double mag(const double& v) { return std::abs(v); }
double mag(const Rational& v) { return std::abs(v.get_d()); }

/// Row cache so triple loops do not rebuild rational rows.
template <class T>
class Rows {
public:
    explicit Rows(const HypergroupTable& h) : h_(h), n_(h.size()), cache_(n_ * n_), done_(n_ * n_, 0) {}
    bool has(Index x, Index y) const { return h_.has_row(x, y); }
    const std::vector<Entry<T>>& get(Index x, Index y) {
        std::size_t k = x * n_ + y;
        if (!done_[k]) {
            cache_[k] = get_row<T>(h_, x, y);
            done_[k] = 1;
        }
        return cache_[k];
    }

private:
    const HypergroupTable& h_;
    std::size_t n_;
    std::vector<std::vector<Entry<T>>> cache_;
    std::vector<char> done_;
};

template <class T>
void run_checks(const HypergroupTable& h, double tol, AxiomReport& rep) {
    const std::size_t n = h.size();
    const Index e = h.identity();
    Rows<T> rows(h);

    AxiomCheck prob{"probability", true, 0.0, 0};
    AxiomCheck comm{"commutativity", true, 0.0, 0};
    AxiomCheck ident{"identity", true, 0.0, 0};
    AxiomCheck invol{"involution", true, 0.0, 0};
    AxiomCheck supp{"support", true, 0.0, 0};
    AxiomCheck assoc{"associativity", true, 0.0, 0};
    AxiomCheck haar{"haar", true, 0.0, 0};

    auto coeff = [&](const std::vector<Entry<T>>& r, Index z) -> T {
        for (const auto& t : r)
            if (t.z == z) return t.v;
        return T(0);
    };

    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            if (!rows.has(x, y)) continue;
            const auto& r = rows.get(x, y);
            T sum(0);
            double neg = 0.0;
            for (const auto& t : r) {
                sum += t.v;
                if (t.v < T(0)) neg = std::max(neg, mag(t.v));
            }
            prob.max_violation = std::max({prob.max_violation, mag(T(sum - T(1))), neg});
            ++prob.checked;

            if (rows.has(y, x)) {
                const auto& s = rows.get(y, x);
                for (Index z = 0; z < n; ++z)
                    comm.max_violation = std::max(comm.max_violation, mag(T(coeff(r, z) - coeff(s, z))));
                ++comm.checked;
            }

            Index xt = h.involution(x), yt = h.involution(y);
            if (rows.has(yt, xt)) {
                const auto& s = rows.get(yt, xt);
                for (Index z = 0; z < n; ++z)
                    invol.max_violation =
                        std::max(invol.max_violation, mag(T(coeff(r, z) - coeff(s, h.involution(z)))));
                ++invol.checked;
            }

            T ce = coeff(r, e);
            if (x == yt) {
                if (!(ce > T(0))) supp.max_violation = std::max(supp.max_violation, 1.0);
            } else {
                supp.max_violation = std::max(supp.max_violation, mag(ce));
            }
            ++supp.checked;
        }

    for (Index x = 0; x < n; ++x) {
        for (Index side = 0; side < 2; ++side) {
            Index a = side ? x : e, b = side ? e : x;
            if (!rows.has(a, b)) continue;
            const auto& r = rows.get(a, b);
            for (Index z = 0; z < n; ++z) {
                T want = z == x ? T(1) : T(0);
                ident.max_violation = std::max(ident.max_violation, mag(T(coeff(r, z) - want)));
            }
            ++ident.checked;
        }
    }

    // (x.y).z against x.(y.z) over all triples whose rows exist.
    std::vector<T> left(n), right(n);
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            if (!rows.has(x, y)) continue;
            const auto& xy = rows.get(x, y);
            for (Index z = 0; z < n; ++z) {
                if (!rows.has(y, z)) continue;
                const auto& yz = rows.get(y, z);
                bool ok = true;
                for (const auto& t : xy) ok = ok && rows.has(t.z, z);
                for (const auto& t : yz) ok = ok && rows.has(x, t.z);
                if (!ok) continue;
                std::fill(left.begin(), left.end(), T(0));
                std::fill(right.begin(), right.end(), T(0));
                for (const auto& t : xy)
                    for (const auto& s : rows.get(t.z, z)) left[s.z] += t.v * s.v;
                for (const auto& t : yz)
                    for (const auto& s : rows.get(x, t.z)) right[s.z] += t.v * s.v;
                for (Index w = 0; w < n; ++w)
                    assoc.max_violation = std::max(assoc.max_violation, mag(T(left[w] - right[w])));
                ++assoc.checked;
            }
        }

    if (h.has_haar()) {
        std::vector<T> lam(n);
        for (Index x = 0; x < n; ++x) {
            if constexpr (std::is_same_v<T, Rational>) {
                lam[x] = h.haar_exact().empty() ? Rational(h.haar(x)) : h.haar_exact()[x];
            } else {
                lam[x] = h.haar(x);
            }
        }
        haar.max_violation = mag(T(lam[e] - T(1)));
        for (Index x = 0; x < n; ++x) {
            Index xt = h.involution(x);
            if (!rows.has(x, xt)) continue;
            T c = coeff(rows.get(x, xt), e);
            haar.max_violation = std::max(haar.max_violation, mag(T(lam[x] * c - T(1))));
            ++haar.checked;
        }
        for (Index x = 0; x < n; ++x)
            for (Index y = 0; y < n; ++y) {
                if (!rows.has(x, y)) continue;
                Index xt = h.involution(x);
                const auto& r = rows.get(x, y);
                for (Index z = 0; z < n; ++z) {
                    if (!rows.has(xt, z)) continue;
                    T lhs = lam[y] * coeff(r, z);
                    T rhs = lam[z] * coeff(rows.get(xt, z), y);
                    // scale-free comparison; weights grow on infinite families
                    double scale = std::max({1.0, mag(lhs), mag(rhs)});
                    haar.max_violation = std::max(haar.max_violation, mag(T(lhs - rhs)) / scale);
                    ++haar.checked;
                }
            }
    } else {
        haar.passed = false;
        haar.max_violation = 1.0;
    }

    for (AxiomCheck* c : {&prob, &comm, &assoc, &ident, &invol, &supp, &haar}) {
        c->passed = c->passed && c->max_violation <= tol;
        rep.checks.push_back(*c);
    }
}

}  // namespace

HFunction convolve_point(const HypergroupTable& h, Index x, Index y) {
    HFunction r(h.size());
    for (const Term& t : h.row(x, y)) r[t.z] = t.value;
    return r;
}

HFunction convolve_functions(const HypergroupTable& h, const HFunction& f, const HFunction& g) {
    require_size(h, f);
    require_size(h, g);
    const auto& lam = h.haar();
    const std::size_t n = h.size();
    HFunction out(n);
    auto sf = f.support(), sg = g.support();
    if (!h.truncated()) {
        for (Index x = 0; x < n; ++x) {
            Complex acc = 0.0;
            for (Index y : sf) {
                Complex gx = 0.0;
                for (const Term& t : h.row(h.involution(y), x)) gx += t.value * g[t.z];
                acc += lam[y] * f[y] * gx;
            }
            out[x] = acc;
        }
        return out;
    }
    // Sections: lambda(x) c^z_{y~,x} = lambda(z) c^x_{y,z} only needs rows (y,z).
    for (Index y : sf)
        for (Index z : sg)
            for (const Term& t : h.row(y, z)) out[t.z] += lam[y] * lam[z] * f[y] * g[z] * t.value;
    for (Index x = 0; x < n; ++x) out[x] /= lam[x];
    return out;
}

std::vector<Rational> convolve_functions(const HypergroupTable& h, const std::vector<Rational>& f,
                                         const std::vector<Rational>& g) {
    const std::size_t n = h.size();
    if (f.size() != n || g.size() != n) throw Error(ErrorCode::InvalidParameter, "function size mismatch");
    if (!h.exact() || h.haar_exact().empty())
        throw Error(ErrorCode::InvalidParameter, "exact convolution needs an exact table");
    const auto& lam = h.haar_exact();
    std::vector<Rational> out(n);
    for (Index y = 0; y < n; ++y) {
        if (f[y] == 0) continue;
        for (Index z = 0; z < n; ++z) {
            if (g[z] == 0) continue;
            const auto& terms = h.row(y, z);
            const auto& q = h.exact_row(y, z);
            Rational w = lam[y] * lam[z] * f[y] * g[z];
            for (std::size_t i = 0; i < terms.size(); ++i) out[terms[i].z] += w * q[i];
        }
    }
    for (Index x = 0; x < n; ++x) out[x] /= lam[x];
    return out;
}

HFunction translate(const HypergroupTable& h, Index x, const HFunction& f) {
    require_size(h, f);
    const std::size_t n = h.size();
    HFunction out(n);
    if (!h.truncated()) {
        Index xt = h.involution(x);
        for (Index y = 0; y < n; ++y) {
            Complex acc = 0.0;
            for (const Term& t : h.row(xt, y)) acc += t.value * f[t.z];
            out[y] = acc;
        }
        return out;
    }
    const auto& lam = h.haar();
    for (Index z : f.support())
        for (const Term& t : h.row(x, z)) out[t.z] += lam[z] * t.value * f[z];
    for (Index y = 0; y < n; ++y) out[y] /= lam[y];
    return out;
}

HFunction involute(const HypergroupTable& h, const HFunction& f) {
    require_size(h, f);
    HFunction out(h.size());
    for (Index x = 0; x < h.size(); ++x) out[x] = std::conj(f[h.involution(x)]);
    return out;
}

double l1_norm(const HypergroupTable& h, const HFunction& f) {
    require_size(h, f);
    double s = 0.0;
    for (Index x = 0; x < h.size(); ++x) s += h.haar(x) * std::abs(f[x]);
    return s;
}

double l2_norm(const HypergroupTable& h, const HFunction& f) {
    require_size(h, f);
    double s = 0.0;
    for (Index x = 0; x < h.size(); ++x) s += h.haar(x) * std::norm(f[x]);
    return std::sqrt(s);
}

Complex pairing(const HypergroupTable& h, const HFunction& u, const HFunction& f) {
    require_size(h, u);
    require_size(h, f);
    Complex s = 0.0;
    for (Index x = 0; x < h.size(); ++x) s += h.haar(x) * u[x] * f[x];
    return s;
}

bool AxiomReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck& AxiomReport::get(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw Error(ErrorCode::InvalidParameter, "no axiom check named " + name);
}

double AxiomReport::max_violation() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.max_violation);
    return m;
}

AxiomReport verify_axioms(const HypergroupTable& h, double tol) {
    AxiomReport rep;
    rep.exact = h.exact();
    rep.tolerance = tol;
    if (h.exact())
        run_checks<Rational>(h, tol, rep);
    else
        run_checks<double>(h, tol, rep);
    return rep;
}

HaarResult haar_weights(const HypergroupTable& h) {
    const std::size_t n = h.size();
    HaarResult res;
    res.exact = h.exact();
    res.weights.resize(n);
    if (res.exact) res.exact_weights.resize(n);
    const Index e = h.identity();
    for (Index x = 0; x < n; ++x) {
        Index xt = h.involution(x);
        if (!h.has_row(x, xt)) {
            // outside the section: fall back to the declared weight
            res.weights[x] = h.haar(x);
            if (res.exact) {
                if (h.haar_exact().empty()) {
                    res.exact = false;
                    res.exact_weights.clear();
                } else {
                    res.exact_weights[x] = h.haar_exact()[x];
                }
            }
            continue;
        }
        ++res.derived;
        if (res.exact) {
            Rational c = h.exact_coefficient(x, xt, e);
            if (c == 0) throw Error(ErrorCode::ZeroDiagonal, "c^e_{x,x~} = 0 at " + h.label(x));
            res.exact_weights[x] = 1 / c;
            res.weights[x] = res.exact_weights[x].get_d();
        } else {
            double c = h.coefficient(x, xt, e);
            if (c == 0.0) throw Error(ErrorCode::ZeroDiagonal, "c^e_{x,x~} = 0 at " + h.label(x));
            res.weights[x] = 1.0 / c;
        }
    }
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            Index xt = h.involution(x);
            if (!h.has_row(x, y)) continue;
            for (Index z = 0; z < n; ++z) {
                if (!h.has_row(xt, z)) continue;
                double v;
                if (res.exact) {
                    Rational d = res.exact_weights[y] * h.exact_coefficient(x, y, z) -
                                 res.exact_weights[z] * h.exact_coefficient(xt, z, y);
                    v = std::abs(d.get_d());
                } else {
                    double lhs = res.weights[y] * h.coefficient(x, y, z);
                    double rhs = res.weights[z] * h.coefficient(xt, z, y);
                    v = std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
                }
                res.max_invariance_violation = std::max(res.max_invariance_violation, v);
                ++res.checked;
            }
        }
    return res;
}

}  // namespace hgroup
