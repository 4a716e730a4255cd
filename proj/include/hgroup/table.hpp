/**
 * @file table.hpp
 * @brief Structure-constant tables of discrete hypergroups.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hgroup {

using Rational = mpq_class;
using Complex = std::complex<double>;
using Index = std::size_t;

struct Term {
    Index z;
    double value;
};

/// Immutable table of c^z_{x,y}. Build through TableBuilder.
///
/// Commutative tables keep one row per unordered pair; others keep the full
/// grid. Truncated tables are finite sections of an infinite hypergroup and
/// only hold rows whose support stays inside the section; asking for any
/// other row throws TruncationOverflow.
class HypergroupTable {
public:
    std::size_t size() const { return labels_.size(); }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Index x) const;
    std::optional<Index> find_label(const std::string& label) const;

    Index identity() const { return identity_; }
    Index involution(Index x) const;
    const std::vector<Index>& involution() const { return involution_; }
    Index generator() const { return generator_; }

    bool exact() const { return exact_; }
    bool commutative() const { return commutative_; }
    bool truncated() const { return radius_.has_value(); }
    int radius() const { return radius_.value_or(-1); }
    /// Elements are 0,1,2,... with the generator 1 acting as a three-term recurrence.
    bool natural_indexed() const { return natural_indexed_; }
    bool symmetric() const;

    bool has_row(Index x, Index y) const;
    const std::vector<Term>& row(Index x, Index y) const;
    /// Exact coefficients aligned with row(x, y); only for exact tables.
    const std::vector<Rational>& exact_row(Index x, Index y) const;
    double coefficient(Index x, Index y, Index z) const;
    Rational exact_coefficient(Index x, Index y, Index z) const;

    bool has_haar() const { return haar_error_.empty(); }
    const std::vector<double>& haar() const;
    double haar(Index x) const { return haar()[x]; }
    /// Exact weights; empty unless the table and its weights are exact.
    const std::vector<Rational>& haar_exact() const { return haar_exact_; }
    bool haar_declared() const { return haar_declared_; }

    std::size_t term_count() const;

private:
    friend class TableBuilder;
    std::size_t slot(Index x, Index y) const;
    void check_index(Index x) const;

    std::string name_;
    std::vector<std::string> labels_;
    std::map<std::string, Index> label_index_;
    Index identity_ = 0;
    std::vector<Index> involution_;
    Index generator_ = 0;
    bool exact_ = true;
    bool commutative_ = true;
    bool natural_indexed_ = false;
    std::optional<int> radius_;
    std::vector<std::vector<Term>> rows_;
    std::vector<std::vector<Rational>> exact_rows_;
    std::vector<char> present_;
    std::vector<double> haar_;
    std::vector<Rational> haar_exact_;
    bool haar_declared_ = false;
    std::string haar_error_;
    bool haar_zero_diagonal_ = false;
};

class TableBuilder {
public:
    explicit TableBuilder(std::vector<std::string> labels);

    TableBuilder& name(std::string name);
    TableBuilder& identity(Index e);
    TableBuilder& involution(std::vector<Index> inv);
    TableBuilder& generator(Index g);
    TableBuilder& truncated(int radius);
    TableBuilder& natural_indexed(bool on = true);
    TableBuilder& haar(std::vector<double> weights);
    TableBuilder& haar(std::vector<Rational> weights);

    /// Adds to c^z_{x,y}; repeated calls accumulate.
    void add(Index x, Index y, Index z, const Rational& value);
    void add(Index x, Index y, Index z, double value);
    void set_row(Index x, Index y, const std::vector<Term>& terms);

    std::size_t size() const { return labels_.size(); }

    /// Validates shape and fills identity rows when absent. Finite tables
    /// must supply every row (one orientation suffices when commutative).
    HypergroupTable build() const;

private:
    struct RowData {
        std::map<Index, Rational> exact;
        std::map<Index, double> approx;
    };
    void check(Index x) const;

    std::vector<std::string> labels_;
    std::string name_ = "unnamed";
    Index identity_ = 0;
    std::optional<std::vector<Index>> involution_;
    Index generator_ = 1;
    std::optional<int> radius_;
    bool natural_indexed_ = false;
    std::optional<std::vector<double>> haar_;
    std::optional<std::vector<Rational>> haar_exact_;
    std::map<std::pair<Index, Index>, RowData> rows_;
    bool any_float_ = false;
};

/// Entry-for-entry comparison, including involution, identity and labels.
bool same_table(const HypergroupTable& a, const HypergroupTable& b, double tol = 0.0,
                bool compare_labels = true);

std::string format_rational(const Rational& q);
Rational parse_rational(const std::string& text);
std::string format_double(double v);

}  // namespace hgroup
