#include "hgroup/table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hgroup/errors.hpp"

namespace hgroup {

namespace {

std::size_t tri(Index x, Index y) {
    Index hi = std::max(x, y), lo = std::min(x, y);
    return hi * (hi + 1) / 2 + lo;
}

const std::vector<Term> kEmptyRow;
const std::vector<Rational> kEmptyExact;

}  // namespace

const std::string& HypergroupTable::label(Index x) const {
    check_index(x);
    return labels_[x];
}

std::optional<Index> HypergroupTable::find_label(const std::string& label) const {
    auto it = label_index_.find(label);
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

Index HypergroupTable::involution(Index x) const {
    check_index(x);
    return involution_[x];
}

bool HypergroupTable::symmetric() const {
    for (Index x = 0; x < size(); ++x)
        if (involution_[x] != x) return false;
    return true;
}

void HypergroupTable::check_index(Index x) const {
    if (x >= size())
        throw Error(ErrorCode::IndexOutOfRange,
                    "index " + std::to_string(x) + " outside table of size " + std::to_string(size()));
}

std::size_t HypergroupTable::slot(Index x, Index y) const {
    return commutative_ ? tri(x, y) : x * size() + y;
}

bool HypergroupTable::has_row(Index x, Index y) const {
    check_index(x);
    check_index(y);
    return present_[slot(x, y)] != 0;
}

const std::vector<Term>& HypergroupTable::row(Index x, Index y) const {
    if (!has_row(x, y))
        throw Error(ErrorCode::TruncationOverflow,
                    "product " + labels_[x] + "*" + labels_[y] + " leaves the section of " + name_);
    return rows_[slot(x, y)];
}

const std::vector<Rational>& HypergroupTable::exact_row(Index x, Index y) const {
    if (!exact_) throw Error(ErrorCode::InvalidParameter, "table " + name_ + " is not exact");
    row(x, y);
    return exact_rows_[slot(x, y)];
}

double HypergroupTable::coefficient(Index x, Index y, Index z) const {
    for (const Term& t : row(x, y))
        if (t.z == z) return t.value;
    check_index(z);
    return 0.0;
}

Rational HypergroupTable::exact_coefficient(Index x, Index y, Index z) const {
    const auto& r = row(x, y);
    const auto& q = exact_row(x, y);
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i].z == z) return q[i];
    check_index(z);
    return Rational(0);
}

const std::vector<double>& HypergroupTable::haar() const {
    if (!haar_error_.empty())
        throw Error(haar_zero_diagonal_ ? ErrorCode::ZeroDiagonal : ErrorCode::HaarUnavailable, haar_error_);
    return haar_;
}

std::size_t HypergroupTable::term_count() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

TableBuilder::TableBuilder(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw Error(ErrorCode::InvalidTable, "table needs at least one element");
    if (labels_.size() < 2) generator_ = 0;
}

TableBuilder& TableBuilder::name(std::string n) {
    name_ = std::move(n);
    return *this;
}
TableBuilder& TableBuilder::identity(Index e) {
    check(e);
    identity_ = e;
    return *this;
}
TableBuilder& TableBuilder::involution(std::vector<Index> inv) {
    involution_ = std::move(inv);
    return *this;
}
TableBuilder& TableBuilder::generator(Index g) {
    check(g);
    generator_ = g;
    return *this;
}
TableBuilder& TableBuilder::truncated(int radius) {
    if (radius < 1) throw Error(ErrorCode::InvalidParameter, "truncation radius must be >= 1");
    radius_ = radius;
    return *this;
}
TableBuilder& TableBuilder::natural_indexed(bool on) {
    natural_indexed_ = on;
    return *this;
}
TableBuilder& TableBuilder::haar(std::vector<double> weights) {
    haar_ = std::move(weights);
    haar_exact_.reset();
    return *this;
}
TableBuilder& TableBuilder::haar(std::vector<Rational> weights) {
    for (auto& w : weights) w.canonicalize();
    haar_exact_ = std::move(weights);
    haar_.reset();
    return *this;
}

void TableBuilder::check(Index x) const {
    if (x >= labels_.size())
        throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(x) + " outside table");
}

void TableBuilder::add(Index x, Index y, Index z, const Rational& value) {
    check(x);
    check(y);
    check(z);
    // mpq_class(p, q) is not reduced; comparisons need canonical operands
    Rational v = value;
    v.canonicalize();
    rows_[{x, y}].exact[z] += v;
}

void TableBuilder::add(Index x, Index y, Index z, double value) {
    check(x);
    check(y);
    check(z);
    rows_[{x, y}].approx[z] += value;
    any_float_ = true;
}

void TableBuilder::set_row(Index x, Index y, const std::vector<Term>& terms) {
    check(x);
    check(y);
    RowData& r = rows_[{x, y}];
    r.exact.clear();
    r.approx.clear();
    for (const Term& t : terms) {
        check(t.z);
        r.approx[t.z] += t.value;
    }
    any_float_ = true;
}

HypergroupTable TableBuilder::build() const {
    const std::size_t n = labels_.size();
    HypergroupTable t;
    t.name_ = name_;
    t.labels_ = labels_;
    for (Index i = 0; i < n; ++i) {
        if (labels_[i].empty() || labels_[i].find_first_of(" \t\n") != std::string::npos)
            throw Error(ErrorCode::InvalidTable, "label '" + labels_[i] + "' must be a nonempty token");
        if (!t.label_index_.emplace(labels_[i], i).second)
            throw Error(ErrorCode::InvalidTable, "duplicate label " + labels_[i]);
    }
    t.identity_ = identity_;
    t.generator_ = generator_;
    t.radius_ = radius_;
    t.natural_indexed_ = natural_indexed_;

    if (involution_) {
        if (involution_->size() != n) throw Error(ErrorCode::InvalidTable, "involution has wrong length");
        for (Index x = 0; x < n; ++x) {
            Index y = (*involution_)[x];
            if (y >= n || (*involution_)[y] != x)
                throw Error(ErrorCode::InvalidTable, "involution is not an involutive permutation");
        }
        t.involution_ = *involution_;
    } else {
        t.involution_.resize(n);
        for (Index x = 0; x < n; ++x) t.involution_[x] = x;
    }

    bool exact = !any_float_;
    if (haar_) exact = false;

    // Merge every supplied row into (double, rational) form.
    struct Merged {
        std::vector<Term> terms;
        std::vector<Rational> exact;
    };
    std::map<std::pair<Index, Index>, Merged> merged;
    for (const auto& [key, data] : rows_) {
        Merged m;
        std::map<Index, Rational> q = data.exact;
        std::map<Index, double> d;
        for (const auto& [z, v] : q) d[z] += v.get_d();
        for (const auto& [z, v] : data.approx) d[z] += v;
        for (const auto& [z, v] : d) {
            if (exact) {
                if (q[z] == 0) continue;
                m.terms.push_back({z, q[z].get_d()});
                m.exact.push_back(q[z]);
            } else if (v != 0.0) {
                m.terms.push_back({z, v});
            }
        }
        merged.emplace(key, std::move(m));
    }
    auto same_row = [&](const Merged& a, const Merged& b) {
        if (a.terms.size() != b.terms.size()) return false;
        for (std::size_t i = 0; i < a.terms.size(); ++i) {
            if (a.terms[i].z != b.terms[i].z) return false;
            if (exact ? a.exact[i] != b.exact[i] : a.terms[i].value != b.terms[i].value) return false;
        }
        return true;
    };
    bool commutative = true;
    for (const auto& [key, m] : merged) {
        auto mirror = merged.find({key.second, key.first});
        if (mirror != merged.end() && !same_row(m, mirror->second)) {
            commutative = false;
            break;
        }
    }
    t.exact_ = exact;
    t.commutative_ = commutative;

    const std::size_t slots = commutative ? n * (n + 1) / 2 : n * n;
    t.rows_.assign(slots, {});
    t.present_.assign(slots, 0);
    if (exact) t.exact_rows_.assign(slots, {});
    auto place = [&](Index x, Index y, const Merged& m) {
        std::size_t s = t.slot(x, y);
        if (t.present_[s]) return;
        t.present_[s] = 1;
        t.rows_[s] = m.terms;
        if (exact) t.exact_rows_[s] = m.exact;
    };
    for (const auto& [key, m] : merged) place(key.first, key.second, m);
    if (!commutative)
        for (const auto& [key, m] : merged) place(key.second, key.first, m);

    Merged unit;
    for (Index x = 0; x < n; ++x) {
        unit.terms = {{x, 1.0}};
        unit.exact = exact ? std::vector<Rational>{Rational(1)} : std::vector<Rational>{};
        place(identity_, x, unit);
        place(x, identity_, unit);
    }

    if (!radius_) {
        for (Index x = 0; x < n; ++x)
            for (Index y = 0; y < n; ++y)
                if (!t.present_[t.slot(x, y)])
                    throw Error(ErrorCode::InvalidTable, "finite table " + name_ + " is missing row (" +
                                                             labels_[x] + "," + labels_[y] + ")");
    }

    // Haar weights: declared or derived from the diagonal coefficient.
    if (haar_exact_ || haar_) {
        std::size_t len = haar_exact_ ? haar_exact_->size() : haar_->size();
        if (len != n) throw Error(ErrorCode::InvalidTable, "haar line has wrong length");
        t.haar_declared_ = true;
        t.haar_.resize(n);
        for (Index x = 0; x < n; ++x) {
            double w = haar_exact_ ? (*haar_exact_)[x].get_d() : (*haar_)[x];
            if (!(w > 0.0)) throw Error(ErrorCode::InvalidTable, "haar weights must be positive");
            t.haar_[x] = w;
        }
        if (haar_exact_ && exact) t.haar_exact_ = *haar_exact_;
    } else {
        t.haar_.resize(n);
        if (exact) t.haar_exact_.resize(n);
        for (Index x = 0; x < n; ++x) {
            Index xt = t.involution_[x];
            if (!t.present_[t.slot(x, xt)]) {
                t.haar_error_ = "diagonal row of " + labels_[x] + " lies outside the section and no haar line was given";
                break;
            }
            if (exact) {
                Rational c = t.exact_coefficient(x, xt, identity_);
                if (c == 0) {
                    t.haar_error_ = "c^e_{x,x~} = 0 at " + labels_[x];
                    t.haar_zero_diagonal_ = true;
                    break;
                }
                t.haar_exact_[x] = 1 / c;
                t.haar_[x] = t.haar_exact_[x].get_d();
            } else {
                double c = t.coefficient(x, xt, identity_);
                if (c == 0.0) {
                    t.haar_error_ = "c^e_{x,x~} = 0 at " + labels_[x];
                    t.haar_zero_diagonal_ = true;
                    break;
                }
                t.haar_[x] = 1.0 / c;
            }
        }
        if (!t.haar_error_.empty()) {
            t.haar_.clear();
            t.haar_exact_.clear();
        }
    }
    return t;
}

bool same_table(const HypergroupTable& a, const HypergroupTable& b, double tol, bool compare_labels) {
    const std::size_t n = a.size();
    if (n != b.size() || a.identity() != b.identity() || a.involution() != b.involution()) return false;
    if (compare_labels && a.labels() != b.labels()) return false;
    if (a.truncated() != b.truncated()) return false;
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            if (a.has_row(x, y) != b.has_row(x, y)) return false;
            if (!a.has_row(x, y)) continue;
            if (tol == 0.0 && a.exact() && b.exact()) {
                for (Index z = 0; z < n; ++z)
                    if (a.exact_coefficient(x, y, z) != b.exact_coefficient(x, y, z)) return false;
            } else {
                for (Index z = 0; z < n; ++z)
                    if (std::abs(a.coefficient(x, y, z) - b.coefficient(x, y, z)) > tol) return false;
            }
        }
    return true;
}

std::string format_rational(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
    if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace hgroup
