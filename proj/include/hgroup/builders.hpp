#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hgroup/group.hpp"
#include "hgroup/table.hpp"

namespace hgroup {

/// c^{gh}_{g,h} = 1, lambda = 1.
HypergroupTable group_hypergroup(const FiniteGroup& g);

/// Classes as elements; c^{C_k}_{C_i,C_j} = #{(a,b) in C_i x C_j : ab = r_k} |C_k| / (|C_i||C_j|).
HypergroupTable conjugacy_hypergroup(const FiniteGroup& g);

struct IrreducibleData {
    std::vector<std::string> labels;
    std::vector<int> dims;
    std::vector<Index> conjugate;
    std::vector<std::size_t> class_sizes;
    /// chars(pi, C) = chi_pi(g) for g in class C (unnormalized).
    Eigen::MatrixXcd chars;
    /// N[a][b][c] = <chi_a chi_b, chi_c>.
    std::vector<std::vector<std::vector<int>>> mult;
};

/// Character table recovered from Conj(G) by the spectral engine.
/// Trivial first, then dimension ascending. Throws NonIntegerDimension.
IrreducibleData irreducible_data(const FiniteGroup& g);

/// c^gamma_{alpha,beta} = d_gamma N^gamma_{alpha,beta} / (d_alpha d_beta).
HypergroupTable irr_hypergroup(const FiniteGroup& g);
HypergroupTable irr_hypergroup(const IrreducibleData& irr, const std::string& name);

/// c^{(z,w)}_{(x,u),(y,v)} = c^z_{x,y} c^w_{u,v}; elements in x-major order.
HypergroupTable product(const HypergroupTable& a, const HypergroupTable& b, std::size_t max_elements = 10000);

/// Labels 1..R+1 are the dimensions; truncated at ball radius R.
HypergroupTable su2_fusion(int radius);
/// q-integer weights; q == 1 gives su2_fusion.
HypergroupTable suq2_fusion(double q, int radius);
/// Radial functions on the (q+1)-regular tree, elements 0..R.
HypergroupTable tree_radial(int q, int radius);

double q_integer(int n, double q);

struct FamilySpec {
    /// cyclic, group_from_cayley, conj, irr, su2_fusion, suq2_fusion, tree_radial, chebyshev
    std::string family;
    /// builtin group name, used by conj, irr (and cyclic when n is unset)
    std::string group = "s3";
    /// Cayley file path; overrides group when non-empty
    std::string cayley_path;
    double q = 2.0;
    int n = 2;
    int radius = 10;
};

FiniteGroup resolve_group(const FamilySpec& spec);
HypergroupTable family(const FamilySpec& spec);
std::vector<std::string> family_names();

}  // namespace hgroup
