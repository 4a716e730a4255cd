#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hgroup/table.hpp"

namespace hgroup {

using CayleyTable = std::vector<std::vector<Index>>;

class FiniteGroup {
public:
    /// Validates the table; throws NotLatinSquare, NoIdentity or NotAssociative.
    static FiniteGroup from_cayley_table(const CayleyTable& table, std::string name = "G",
                                         std::vector<std::string> element_names = {});

    const std::string& name() const { return name_; }
    std::size_t order() const { return table_.size(); }
    Index mul(Index a, Index b) const { return table_[a][b]; }
    Index inverse(Index a) const { return inverse_[a]; }
    Index identity() const { return identity_; }
    bool abelian() const { return abelian_; }
    const CayleyTable& cayley() const { return table_; }
    const std::vector<std::string>& element_names() const { return names_; }

    /// Classes ordered by first appearance; the identity class comes first.
    const std::vector<std::vector<Index>>& classes() const { return classes_; }
    Index class_of(Index g) const { return class_of_[g]; }
    /// Subgroup generated by commutators, as a sorted element list.
    std::vector<Index> derived_subgroup() const;

private:
    std::string name_;
    CayleyTable table_;
    std::vector<std::string> names_;
    std::vector<Index> inverse_;
    Index identity_ = 0;
    bool abelian_ = false;
    std::vector<std::vector<Index>> classes_;
    std::vector<Index> class_of_;
};

FiniteGroup cyclic_group(std::size_t n);
/// Elements e,(01),(02),(12),(012),(021).
FiniteGroup symmetric_group_s3();
/// Elements e,r^2,r,r^3,s,sr^2,sr,sr^3.
FiniteGroup dihedral_group_d4();
/// Elements 1,-1,i,-i,j,-j,k,-k.
FiniteGroup quaternion_group_q8();
FiniteGroup alternating_group_a4();
FiniteGroup klein_four_group();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// z<n>, s3, d4, q8, a4, klein.
FiniteGroup builtin_group(const std::string& name);
std::vector<std::string> builtin_group_names();

/// "cayley <n>" followed by n rows of n indices; an optional "name <token>" line may precede it.
FiniteGroup read_group(std::istream& in);
FiniteGroup load_group_file(const std::string& path);
void write_group(std::ostream& out, const FiniteGroup& g);

}  // namespace hgroup
