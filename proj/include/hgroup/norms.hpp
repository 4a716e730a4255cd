/**
 * @file norms.hpp
 * @brief Fourier algebra, reduced Fourier-Stieltjes and multiplier norms.
 *
 * Finite commutative tables are handled in character space and give exact
 * values. Sections of N-indexed families give certified intervals. The trace
 * norm engine works for any finite table, commutative or not.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hgroup/group.hpp"
#include "hgroup/hfunction.hpp"
#include "hgroup/spectral.hpp"
#include "hgroup/table.hpp"

namespace hgroup {

struct Interval {
    double lower = 0.0;
    double upper = 0.0;
    static Interval point(double v) { return {v, v}; }
    bool is_point() const { return lower == upper; }
    double width() const { return upper - lower; }
    bool contains(const Interval& o, double slack = 0.0) const {
        return lower - slack <= o.lower && o.upper <= upper + slack;
    }
    bool overlaps(const Interval& o, double slack = 0.0) const {
        return lower - slack <= o.upper && o.lower <= upper + slack;
    }
};

struct NormA {
    double value = 0.0;
    HFunction xi, eta;
    /// max |xi ._lambda eta~ - u| with the convolution computed in the table
    double reproduction_error = 0.0;
    /// ||xi||_2 ||eta||_2
    double witness_product = 0.0;
};
NormA norm_A(const HypergroupTable& h, const CharacterTable& t, const HFunction& u);

struct NormBlambda {
    double value = 0.0;
    HFunction extremal;
    Complex pairing = 0.0;
    /// ||lambda(f)|| from singular values of the convolution operator
    double operator_norm = 0.0;
};
NormBlambda norm_Blambda(const HypergroupTable& h, const CharacterTable& t, const HFunction& u);

struct NormMA {
    double value = 0.0;
    /// m(chi', chi'') with u chi' = sum m(chi', chi'') chi''; columns indexed by chi'
    Eigen::MatrixXcd matrix;
};
NormMA norm_MA(const HypergroupTable& h, const CharacterTable& t, const HFunction& u);

/// Finite convention C*(H) = C*_lambda(H): same as norm_Blambda.
double norm_B_finite(const HypergroupTable& h, const CharacterTable& t, const HFunction& u);

/// ||lambda(f)|| on l2(lambda), any finite table.
double lambda_operator_norm(const HypergroupTable& h, const HFunction& f);

/// Trace norm of the element of span{L_x} representing u; any finite table.
class TraceNormEngine {
public:
    explicit TraceNormEngine(const HypergroupTable& h);
    double norm(const HFunction& u) const;
    const HypergroupTable& table() const { return h_; }

private:
    const HypergroupTable& h_;
    std::vector<Eigen::MatrixXd> ops_;
    Eigen::FullPivLU<Eigen::MatrixXd> gram_;
};

struct NormMcb {
    std::vector<std::string> groups;
    /// per group: bracket for ||u x 1_G||_{MA(H x G)}
    std::vector<Interval> per_group;
    Interval value;
    bool resolved = false;
};
/// Maximum over the groups of ||u x 1_G||_{MA(H x G)}.
NormMcb norm_Mcb_approx(const HypergroupTable& h, const CharacterTable& t, const HFunction& u,
                        const std::vector<FiniteGroup>& groups, double gap_tol = 1e-8);
std::vector<FiniteGroup> default_mcb_groups();

struct SectionNormOptions {
    /// bound on the spectral radius of the generator; <= 0 means take check_p2's upper bound
    double spectral_bound = 0.0;
    int lower_degree = 32;
    int exhaustive_roots = 12;
};

struct SectionNorm {
    Interval value;
    /// quadrature value on the section (not certified)
    double estimate = 0.0;
    HFunction xi, eta;
    double witness_residual = 0.0;
    std::string upper_method;
    HFunction extremal;
    Complex pairing = 0.0;
    double extremal_sup = 0.0;
    double spectral_bound = 0.0;
};
/// Certified interval for ||u||_{A(H)} on a section of an N-indexed family.
SectionNorm norm_A_section(const HypergroupTable& h, const HFunction& u, const SectionNormOptions& opt = {});

struct NormReport {
    bool truncated = false;
    Interval norm_A, norm_Blambda, norm_MA;
    std::optional<NormMcb> norm_Mcb_approx;
    std::optional<NormA> witness_A;
    std::optional<HFunction> extremal_f;
    /// norm_B on finite tables follows the convention C*(H) = C*_lambda(H)
    bool b_convention_dependent = true;
    double norm_B_finite = 0.0;
};

struct NormReportOptions {
    bool with_mcb = true;
    std::vector<FiniteGroup> groups;
};
NormReport norm_report(const HypergroupTable& h, const HFunction& u, const NormReportOptions& opt = {});

/// ||u||_{MA(H)} on a section as ||u||_{A(H_0)} with H_0 the Voit deformation.
Interval norm_MA_section(const HypergroupTable& h, const HFunction& u, const SectionNormOptions& opt = {});

}  // namespace hgroup
