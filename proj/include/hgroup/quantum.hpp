#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgroup/builders.hpp"
#include "hgroup/group.hpp"
#include "hgroup/hfunction.hpp"
#include "hgroup/table.hpp"

namespace hgroup {

/// Fusion rules N^c_{a,b} with classical dims n and quantum dims d.
/// A truncated ring uses labels indexed 0..R and keeps the rules with a + b <= R.
struct FusionRing {
    std::string name = "fusion";
    std::vector<std::string> labels;
    std::vector<Index> conj;
    std::vector<int> n;
    std::vector<double> d;
    Index trivial = 0;
    std::optional<int> radius;
    /// (a,b) -> sorted (c, N) with N > 0
    std::map<std::pair<Index, Index>, std::vector<std::pair<Index, int>>> rules;

    std::size_t size() const { return labels.size(); }
    bool has_row(Index a, Index b) const { return !radius || static_cast<int>(a + b) <= *radius; }
    int N(Index a, Index b, Index c) const;
    Index find_label(const std::string& label) const;
};

/// Checks reciprocity, N^triv_{a,b} = [b = conj a] and both dimension
/// homomorphisms on every defined row. Throws ReciprocityViolation or InvalidTable.
void validate_fusion(const FusionRing& fr, double tol = 1e-9);

/// Irreducible representations of a finite group; d = n.
FusionRing fusion_ring(const FiniteGroup& g);
FusionRing fusion_ring(const IrreducibleData& irr, const std::string& name);
/// SU_q(2) rules a x b = |a-b|+1, ..., a+b-1 on dimensions 1..R+1, d = [a]_q.
FusionRing suq2_fusion_ring(double q, int radius);

/// Text format:
///
///   fusion v1
///   name <token>                 (optional)
///   labels <k tokens>
///   conj <k labels>              (optional, default self-conjugate)
///   ndims <k integers>
///   ddims <k reals>              (optional, default ndims)
///   q <real>                     (optional, d = [n]_q; excludes ddims)
///   truncated <R>                (optional)
///   rules
///   <a> <b> <c> <N>              (labels; missing triples are 0)
///   end
///
/// Rules may be listed for one orientation of a commutative pair only when
/// the mirror is absent; listed pairs are taken as written.
FusionRing read_fusion(std::istream& in);
FusionRing load_fusion_file(const std::string& path);
void write_fusion(std::ostream& out, const FusionRing& fr);
void save_fusion_file(const std::string& path, const FusionRing& fr);

/// c^g_{a,b} = n_g N^g_{a,b} / (n_a n_b), exact.
HypergroupTable hypergroup_n(const FusionRing& fr);
/// c^g_{a,b} = d_g N^g_{a,b} / (d_a d_b); equals hypergroup_n when is_kac(fr, 0).
HypergroupTable hypergroup_d(const FusionRing& fr);
bool is_kac(const FusionRing& fr, double tol = 1e-12);

/// {c : N^c_{a,b}} for c with N > 0.
std::map<Index, int> quantum_character_decomposition(const FusionRing& fr, Index a, Index b);

/// Values per conjugacy class, in the order of FiniteGroup::classes().
using CentralFunction = std::vector<Complex>;

/// Class functions on a finite group and their image on Irr(G).
class GroupCenter {
public:
    explicit GroupCenter(FiniteGroup g);

    const FiniteGroup& group() const { return group_; }
    const IrreducibleData& irr() const { return irr_; }
    const HypergroupTable& irr_table() const { return irr_table_; }
    std::size_t class_count() const { return group_.classes().size(); }

    /// hat f(a) = (1/n_a) (1/|G|) sum_g f(g) conj chi_a(g)
    HFunction hat(const CentralFunction& f) const;
    CentralFunction inverse_hat(const HFunction& u) const;
    /// (1/|G|) sum_g |f(g)|
    double zl1_norm(const CentralFunction& f) const;
    /// (f*g)(x) = (1/|G|) sum_y f(y) g(y^-1 x)
    CentralFunction convolve(const CentralFunction& f, const CentralFunction& g) const;

    /// T*(mu)(a) = (1/n_a) sum_g chi_a(g) mu(g) for a measure mu with masses mu(g).
    HFunction zm_to_b(const CentralFunction& mu) const;
    /// sum_g |mu(g)|
    double zm_norm(const CentralFunction& mu) const;
    /// (mu*nu)(x) = sum_y mu(y) nu(y^-1 x)
    CentralFunction convolve_measures(const CentralFunction& mu, const CentralFunction& nu) const;

    /// chi_a as a class function.
    CentralFunction character(Index a) const;

private:
    std::vector<Complex> expand(const CentralFunction& f) const;
    CentralFunction collapse(const std::vector<Complex>& v) const;

    FiniteGroup group_;
    IrreducibleData irr_;
    HypergroupTable irr_table_;
};

HFunction hat_map(const FiniteGroup& g, const CentralFunction& f);

}  // namespace hgroup
