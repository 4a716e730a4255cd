#pragma once

#include <string>
#include <vector>

#include "hgroup/hfunction.hpp"
#include "hgroup/table.hpp"

namespace hgroup {

/// z -> c^z_{x,y}.
HFunction convolve_point(const HypergroupTable& h, Index x, Index y);

/// f ._lambda g (x) = sum_y lambda(y) f(y) g(y~ . x).
HFunction convolve_functions(const HypergroupTable& h, const HFunction& f, const HFunction& g);
/// Same in exact arithmetic; requires exact structure constants and weights.
std::vector<Rational> convolve_functions(const HypergroupTable& h, const std::vector<Rational>& f,
                                         const std::vector<Rational>& g);

/// L_x f(y) = f(x~ . y).
HFunction translate(const HypergroupTable& h, Index x, const HFunction& f);

/// x -> conj f(x~).
HFunction involute(const HypergroupTable& h, const HFunction& f);

double l1_norm(const HypergroupTable& h, const HFunction& f);
double l2_norm(const HypergroupTable& h, const HFunction& f);
/// sum_x lambda(x) u(x) f(x).
Complex pairing(const HypergroupTable& h, const HFunction& u, const HFunction& f);

struct AxiomCheck {
    std::string name;
    bool passed = true;
    double max_violation = 0.0;
    std::size_t checked = 0;
};

struct AxiomReport {
    bool exact = false;
    double tolerance = 0.0;
    std::vector<AxiomCheck> checks;

    bool all_passed() const;
    const AxiomCheck& get(const std::string& name) const;
    double max_violation() const;
};

/// Checks probability rows, commutativity, associativity, identity, involution,
/// support law and Haar consistency over every triple available in the table.
AxiomReport verify_axioms(const HypergroupTable& h, double tol = 1e-9);

struct HaarResult {
    std::vector<double> weights;
    std::vector<Rational> exact_weights;
    bool exact = false;
    /// Elements whose weight came from 1/c^e_{x,x~} rather than a declaration.
    std::size_t derived = 0;
    double max_invariance_violation = 0.0;
    std::size_t checked = 0;
};

/// lambda(x) = 1/c^e_{x,x~}, checked against lambda(y)c^z_{x,y} = lambda(z)c^y_{x~,z}.
HaarResult haar_weights(const HypergroupTable& h);

}  // namespace hgroup
