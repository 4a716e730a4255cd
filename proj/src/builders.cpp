#include "hgroup/builders.hpp"

#include <algorithm>
#include <cmath>

#include "hgroup/errors.hpp"
#include "hgroup/spectral.hpp"

namespace hgroup {

HypergroupTable group_hypergroup(const FiniteGroup& g) {
    const std::size_t n = g.order();
    // identity first
    std::vector<Index> order{g.identity()};
    for (Index a = 0; a < n; ++a)
        if (a != g.identity()) order.push_back(a);
    std::vector<Index> pos(n);
    for (Index i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<std::string> labels;
    std::vector<Index> inv(n);
    for (Index i = 0; i < n; ++i) {
        labels.push_back(g.element_names()[order[i]]);
        inv[i] = pos[g.inverse(order[i])];
    }
    TableBuilder b(labels);
    b.name(g.name()).identity(0).involution(inv).generator(n > 1 ? 1 : 0);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) b.add(i, j, pos[g.mul(order[i], order[j])], Rational(1));
    return b.build();
}

HypergroupTable conjugacy_hypergroup(const FiniteGroup& g) {
    const auto& cls = g.classes();
    const std::size_t k = cls.size();
    std::vector<std::string> labels;
    std::vector<Index> inv(k);
    for (Index i = 0; i < k; ++i) {
        labels.push_back("C" + std::to_string(i));
        inv[i] = g.class_of(g.inverse(cls[i][0]));
    }
    TableBuilder b(labels);
    b.name("Conj(" + g.name() + ")").identity(0).involution(inv).generator(k > 1 ? 1 : 0);
    for (Index i = 0; i < k; ++i)
        for (Index j = i; j < k; ++j) {
            std::vector<long> count(k, 0);
            // count pairs landing on each class representative
            for (Index a : cls[i])
                for (Index c : cls[j]) {
                    Index p = g.mul(a, c);
                    Index t = g.class_of(p);
                    if (p == cls[t][0]) ++count[t];
                }
            for (Index t = 0; t < k; ++t)
                if (count[t])
                    b.add(i, j, t,
                          Rational(count[t] * static_cast<long>(cls[t].size()),
                                   static_cast<long>(cls[i].size() * cls[j].size())));
        }
    return b.build();
}

IrreducibleData irreducible_data(const FiniteGroup& g) {
    HypergroupTable conj = conjugacy_hypergroup(g);
    CharacterTable ct = characters(conj);
    const std::size_t k = conj.size();
    const double order = static_cast<double>(g.order());
    IrreducibleData d;
    for (Index c = 0; c < k; ++c) d.class_sizes.push_back(g.classes()[c].size());

    std::vector<int> dims(k);
    for (Index p = 0; p < k; ++p) {
        double s = 0.0;
        for (Index c = 0; c < k; ++c) s += d.class_sizes[c] * std::norm(ct(p, c));
        double dim = std::sqrt(order / s);
        double r = std::round(dim);
        if (std::abs(dim - r) > 1e-6 || r < 1)
            throw Error(ErrorCode::NonIntegerDimension, "recovered dimension " + std::to_string(dim));
        dims[p] = static_cast<int>(r);
    }
    // trivial first (row 0 of a character table is the constant row), then dimension ascending
    std::vector<Index> order_idx(k);
    for (Index i = 0; i < k; ++i) order_idx[i] = i;
    Index triv = 0;
    for (Index p = 0; p < k; ++p) {
        bool one = true;
        for (Index c = 0; c < k; ++c) one = one && std::abs(ct(p, c) - 1.0) < 1e-8;
        if (one) triv = p;
    }
    std::stable_sort(order_idx.begin(), order_idx.end(), [&](Index a, Index b) {
        if ((a == triv) != (b == triv)) return a == triv;
        return dims[a] < dims[b];
    });

    d.chars.resize(k, k);
    std::vector<int> letter_count(1024, 0);
    for (Index i = 0; i < k; ++i) {
        Index p = order_idx[i];
        d.dims.push_back(dims[p]);
        for (Index c = 0; c < k; ++c) d.chars(i, c) = static_cast<double>(dims[p]) * ct(p, c);
        int& cnt = letter_count[std::min(dims[p], 1023)];
        std::string suffix = cnt < 26 ? std::string(1, char('a' + cnt)) : std::to_string(cnt);
        d.labels.push_back(std::to_string(dims[p]) + suffix);
        ++cnt;
    }
    d.conjugate.resize(k);
    for (Index a = 0; a < k; ++a) {
        Index best = a;
        double best_err = 1e300;
        for (Index b = 0; b < k; ++b) {
            double err = 0.0;
            for (Index c = 0; c < k; ++c) err = std::max(err, std::abs(d.chars(b, c) - std::conj(d.chars(a, c))));
            if (err < best_err) best_err = err, best = b;
        }
        if (best_err > 1e-6) throw Error(ErrorCode::DegenerateSpectrum, "no conjugate character found");
        d.conjugate[a] = best;
    }
    d.mult.assign(k, std::vector<std::vector<int>>(k, std::vector<int>(k, 0)));
    for (Index a = 0; a < k; ++a)
        for (Index b = 0; b < k; ++b)
            for (Index c = 0; c < k; ++c) {
                Complex s = 0.0;
                for (Index cl = 0; cl < k; ++cl)
                    s += static_cast<double>(d.class_sizes[cl]) * d.chars(a, cl) * d.chars(b, cl) * std::conj(d.chars(c, cl));
                s /= order;
                double r = std::round(s.real());
                if (std::abs(s - Complex(r, 0.0)) > 1e-6 || r < 0)
                    throw Error(ErrorCode::NonIntegerDimension, "tensor multiplicity " + std::to_string(s.real()));
                d.mult[a][b][c] = static_cast<int>(r);
            }
    return d;
}

HypergroupTable irr_hypergroup(const IrreducibleData& irr, const std::string& name) {
    const std::size_t k = irr.labels.size();
    TableBuilder b(irr.labels);
    b.name(name).identity(0).involution(irr.conjugate).generator(k > 1 ? 1 : 0);
    for (Index a = 0; a < k; ++a)
        for (Index bb = a; bb < k; ++bb)
            for (Index c = 0; c < k; ++c)
                if (irr.mult[a][bb][c])
                    b.add(a, bb, c, Rational(irr.dims[c] * irr.mult[a][bb][c], irr.dims[a] * irr.dims[bb]));
    return b.build();
}

HypergroupTable irr_hypergroup(const FiniteGroup& g) {
    return irr_hypergroup(irreducible_data(g), "Irr(" + g.name() + ")");
}

HypergroupTable product(const HypergroupTable& a, const HypergroupTable& b, std::size_t max_elements) {
    const std::size_t na = a.size(), nb = b.size();
    if (na * nb > max_elements)
        throw Error(ErrorCode::SizeOverflow, "product would have " + std::to_string(na * nb) + " elements (cap " +
                                                 std::to_string(max_elements) + ")");
    std::vector<std::string> labels;
    std::vector<Index> inv;
    for (Index x = 0; x < na; ++x)
        for (Index u = 0; u < nb; ++u) {
            labels.push_back("(" + a.label(x) + "," + b.label(u) + ")");
            inv.push_back(a.involution(x) * nb + b.involution(u));
        }
    const bool exact = a.exact() && b.exact();
    TableBuilder t(labels);
    t.name(a.name() + "x" + b.name()).identity(a.identity() * nb + b.identity()).involution(inv);
    t.generator(a.generator() * nb + b.identity());
    if (a.truncated() || b.truncated()) {
        t.truncated(std::max(a.truncated() ? a.radius() : 1, b.truncated() ? b.radius() : 1));
        std::vector<double> w;
        for (Index x = 0; x < na; ++x)
            for (Index u = 0; u < nb; ++u) w.push_back(a.haar(x) * b.haar(u));
        t.haar(w);
    }
    const bool comm = a.commutative() && b.commutative();
    for (Index x = 0; x < na; ++x)
        for (Index y = 0; y < na; ++y) {
            if (!a.has_row(x, y)) continue;
            for (Index u = 0; u < nb; ++u)
                for (Index v = 0; v < nb; ++v) {
                    Index p = x * nb + u, q = y * nb + v;
                    if (comm && q < p) continue;
                    if (!b.has_row(u, v)) continue;
                    const auto& ra = a.row(x, y);
                    const auto& rb = b.row(u, v);
                    for (std::size_t i = 0; i < ra.size(); ++i)
                        for (std::size_t j = 0; j < rb.size(); ++j) {
                            Index z = ra[i].z * nb + rb[j].z;
                            if (exact)
                                t.add(p, q, z, Rational(a.exact_row(x, y)[i] * b.exact_row(u, v)[j]));
                            else
                                t.add(p, q, z, ra[i].value * rb[j].value);
                        }
                }
        }
    return t.build();
}

double q_integer(int n, double q) {
    if (q == 1.0) return n;
    return (std::pow(q, n) - std::pow(q, -n)) / (q - 1.0 / q);
}

namespace {

std::vector<std::string> dimension_labels(int radius) {
    std::vector<std::string> l;
    for (int a = 1; a <= radius + 1; ++a) l.push_back(std::to_string(a));
    return l;
}

void check_radius(int radius) {
    if (radius < 1) throw Error(ErrorCode::InvalidParameter, "truncation radius must be >= 1");
}

}  // namespace

HypergroupTable su2_fusion(int radius) {
    check_radius(radius);
    TableBuilder b(dimension_labels(radius));
    b.name("su2_fusion_R" + std::to_string(radius)).identity(0).generator(1).truncated(radius).natural_indexed();
    std::vector<Rational> haar;
    for (int a = 1; a <= radius + 1; ++a) haar.emplace_back(a * a);
    b.haar(haar);
    for (int n = 0; n <= radius; ++n)
        for (int m = n; n + m <= radius; ++m) {
            int a = n + 1, bb = m + 1;
            for (int c = std::abs(a - bb) + 1; c <= a + bb - 1; c += 2) b.add(n, m, c - 1, Rational(c, a * bb));
        }
    return b.build();
}

HypergroupTable suq2_fusion(double q, int radius) {
    check_radius(radius);
    if (!(q > 0.0 && q <= 1.0)) throw Error(ErrorCode::InvalidParameter, "suq2_fusion needs q in (0,1]");
    if (q == 1.0) return su2_fusion(radius);
    TableBuilder b(dimension_labels(radius));
    b.name("suq2_fusion_R" + std::to_string(radius)).identity(0).generator(1).truncated(radius).natural_indexed();
    std::vector<double> haar;
    for (int a = 1; a <= radius + 1; ++a) haar.push_back(q_integer(a, q) * q_integer(a, q));
    b.haar(haar);
    for (int n = 0; n <= radius; ++n)
        for (int m = n; n + m <= radius; ++m) {
            int a = n + 1, bb = m + 1;
            double denom = q_integer(a, q) * q_integer(bb, q);
            for (int c = std::abs(a - bb) + 1; c <= a + bb - 1; c += 2) b.add(n, m, c - 1, q_integer(c, q) / denom);
        }
    return b.build();
}

HypergroupTable tree_radial(int q, int radius) {
    check_radius(radius);
    if (q < 2) throw Error(ErrorCode::InvalidParameter, "tree_radial needs integer q >= 2");
    const int R = radius;
    const Rational a(1, q + 1), bq(q, q + 1);
    std::vector<std::string> labels;
    for (int k = 0; k <= R; ++k) labels.push_back(std::to_string(k));
    TableBuilder b(labels);
    b.name("tree_radial_q" + std::to_string(q) + "_R" + std::to_string(R)).identity(0).generator(1).truncated(R);
    b.natural_indexed();
    std::vector<double> haar{1.0};
    for (int k = 1; k <= R; ++k) haar.push_back((q + 1) * std::pow(static_cast<double>(q), k - 1));
    b.haar(haar);

    // layer[n] = delta_m . delta_n (m <= n, m + n <= R), exact, dense over 0..m+n
    using Layer = std::vector<std::vector<Rational>>;
    auto emit = [&](int m, const Layer& layer) {
        for (int n = m; m + n <= R; ++n) {
            std::vector<Term> row;
            for (int k = 0; k < static_cast<int>(layer[n].size()); ++k)
                if (layer[n][k] != 0) row.push_back({static_cast<Index>(k), layer[n][k].get_d()});
            b.set_row(m, n, row);
        }
    };
    Layer before(R + 1), cur(R + 1);
    for (int n = 0; n <= R; ++n) {
        before[n].assign(n + 1, Rational(0));
        before[n][n] = 1;
    }
    emit(0, before);
    for (int n = 1; n + 1 <= R; ++n) {
        cur[n].assign(n + 2, Rational(0));
        cur[n][n - 1] = a;
        cur[n][n + 1] = bq;
    }
    emit(1, cur);
    // delta_m = (delta_1 . delta_{m-1} - a delta_{m-2}) / b
    for (int m = 2; m <= R / 2; ++m) {
        Layer next(R + 1);
        for (int n = m; m + n <= R; ++n) {
            std::vector<Rational> out(m + n + 1, Rational(0));
            const auto& prev = cur[n];
            for (int k = 0; k < static_cast<int>(prev.size()); ++k) {
                if (prev[k] == 0) continue;
                if (k == 0) {
                    out[1] += prev[k];
                } else {
                    out[k - 1] += a * prev[k];
                    out[k + 1] += bq * prev[k];
                }
            }
            const auto& prev2 = before[n];
            for (int k = 0; k < static_cast<int>(prev2.size()); ++k) out[k] -= a * prev2[k];
            for (auto& v : out) v /= bq;
            next[n] = std::move(out);
        }
        emit(m, next);
        before = std::move(cur);
        cur = std::move(next);
    }
    return b.build();
}

FiniteGroup resolve_group(const FamilySpec& spec) {
    if (!spec.cayley_path.empty()) return load_group_file(spec.cayley_path);
    return builtin_group(spec.group);
}

HypergroupTable family(const FamilySpec& spec) {
    const std::string& f = spec.family;
    if (f == "cyclic") {
        if (spec.n < 1) throw Error(ErrorCode::InvalidParameter, "cyclic needs n >= 1");
        return group_hypergroup(cyclic_group(static_cast<std::size_t>(spec.n)));
    }
    if (f == "group_from_cayley" || f == "group") return group_hypergroup(resolve_group(spec));
    if (f == "conj") return conjugacy_hypergroup(resolve_group(spec));
    if (f == "irr") return irr_hypergroup(resolve_group(spec));
    if (f == "su2_fusion" || f == "chebyshev") return su2_fusion(spec.radius);
    if (f == "suq2_fusion") return suq2_fusion(spec.q, spec.radius);
    if (f == "tree_radial") {
        double r = std::round(spec.q);
        if (std::abs(spec.q - r) > 0) throw Error(ErrorCode::InvalidParameter, "tree_radial needs integer q");
        return tree_radial(static_cast<int>(r), spec.radius);
    }
    throw Error(ErrorCode::InvalidParameter, "unknown family '" + f + "'");
}

std::vector<std::string> family_names() {
    return {"cyclic", "group_from_cayley", "conj", "irr", "su2_fusion", "suq2_fusion", "tree_radial", "chebyshev"};
}

}  // namespace hgroup
