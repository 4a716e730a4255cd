#pragma once

#include <random>
#include <string>
#include <vector>

#include "hgroup/builders.hpp"
#include "hgroup/group.hpp"
#include "hgroup/hfunction.hpp"

namespace support {

inline std::vector<std::string> finite_groups() { return {"z2", "z4", "s3", "d4", "q8", "a4"}; }

/// Conj(G) and Irr(G) for every group in finite_groups().
inline std::vector<hgroup::HypergroupTable> finite_tables() {
    std::vector<hgroup::HypergroupTable> out;
    for (const auto& g : finite_groups()) {
        auto G = hgroup::builtin_group(g);
        out.push_back(hgroup::conjugacy_hypergroup(G));
        out.push_back(hgroup::irr_hypergroup(G));
    }
    return out;
}

inline hgroup::HFunction random_function(std::mt19937_64& rng, std::size_t n, std::size_t support,
                                         bool complex = true) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    hgroup::HFunction f(n);
    for (std::size_t x = 0; x < support; ++x) {
        double re = d(rng);
        double im = complex ? d(rng) : 0.0;
        f[x] = hgroup::Complex(re, im);
    }
    return f;
}

}  // namespace support

namespace support {

/// Reduced p/q.
inline hgroup::Rational Q(long p, long q) {
    hgroup::Rational r(p, q);
    r.canonicalize();
    return r;
}

}  // namespace support
