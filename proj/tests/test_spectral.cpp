#include <doctest.h>

#include <random>

#include "hgroup/builders.hpp"
#include "hgroup/errors.hpp"
#include "hgroup/spectral.hpp"
#include "support.hpp"

using namespace hgroup;

namespace {

bool has_row(const CharacterTable& t, const std::vector<Complex>& want, double tol = 1e-12) {
    for (Index i = 0; i < t.count(); ++i) {
        double e = 0.0;
        for (Index x = 0; x < want.size(); ++x) e = std::max(e, std::abs(t(i, x) - want[x]));
        if (e < tol) return true;
    }
    return false;
}

Index find_row(const CharacterTable& t, const std::vector<Complex>& want) {
    for (Index i = 0; i < t.count(); ++i) {
        double e = 0.0;
        for (Index x = 0; x < want.size(); ++x) e = std::max(e, std::abs(t(i, x) - want[x]));
        if (e < 1e-12) return i;
    }
    FAIL("row not found");
    return 0;
}

}  // namespace

TEST_CASE("Z2 characters and Plancherel weights") {
    auto h = group_hypergroup(cyclic_group(2));
    auto t = characters(h);
    CHECK(t.count() == 2);
    CHECK(has_row(t, {1.0, 1.0}));
    CHECK(has_row(t, {1.0, -1.0}));
    for (double w : t.plancherel) CHECK(w == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("Conj(S3) and Irr(S3) characters") {
    auto g = symmetric_group_s3();
    auto c = characters(conjugacy_hypergroup(g));
    CHECK(has_row(c, {1.0, 1.0, 1.0}));
    CHECK(has_row(c, {1.0, -1.0, 1.0}));
    CHECK(has_row(c, {1.0, 0.0, -0.5}));
    // descending at the generator
    for (Index i = 1; i < c.count(); ++i) CHECK(c(i - 1, c.generator).real() >= c(i, c.generator).real());
    CHECK(c.plancherel[find_row(c, {1.0, 1.0, 1.0})] == doctest::Approx(1.0 / 6).epsilon(1e-14));
    CHECK(c.plancherel[find_row(c, {1.0, 0.0, -0.5})] == doctest::Approx(2.0 / 3).epsilon(1e-14));

    auto i = characters(irr_hypergroup(g));
    CHECK(has_row(i, {1.0, 1.0, 1.0}));
    CHECK(has_row(i, {1.0, -1.0, 0.0}));
    CHECK(has_row(i, {1.0, 1.0, -0.5}));
}

TEST_CASE("Irr(G) characters are normalized class values") {
    for (const auto& name : support::finite_groups()) {
        auto g = builtin_group(name);
        auto irr = irreducible_data(g);
        auto t = characters(irr_hypergroup(g));
        CHECK(t.count() == g.classes().size());
        for (Index cl = 0; cl < g.classes().size(); ++cl) {
            std::vector<Complex> want;
            for (Index a = 0; a < irr.labels.size(); ++a) want.push_back(std::conj(irr.chars(a, cl)) / double(irr.dims[a]));
            std::vector<Complex> want_conj;
            for (auto v : want) want_conj.push_back(std::conj(v));
            CHECK_MESSAGE((has_row(t, want, 1e-10) || has_row(t, want_conj, 1e-10)), name);
        }
    }
}

TEST_CASE("character invariants on every finite table") {
    std::mt19937_64 rng(5);
    for (const auto& h : support::finite_tables()) {
        auto t = characters(h);
        CHECK(t.count() == h.size());
        auto c = check_characters(h, t);
        CHECK_MESSAGE(c.multiplicativity < 1e-9, h.name());
        CHECK(c.hermitian < 1e-9);
        CHECK(c.orthogonality < 1e-9);
        CHECK(c.normalization < 1e-9);
        // Gram matrix diagonal is 1/varpi
        for (Index i = 0; i < t.count(); ++i) {
            double s = 0.0;
            for (Index x = 0; x < h.size(); ++x) s += h.haar(x) * std::norm(t(i, x));
            CHECK(s * t.plancherel[i] == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(t.in_support[i]);
        }
        for (int k = 0; k < 100; ++k) {
            HFunction f = support::random_function(rng, h.size(), h.size());
            CHECK(max_abs_diff(inverse_fourier(h, t, fourier(h, t, f)), f) < 1e-10);
        }
    }
}

TEST_CASE("fourier examples") {
    auto h = conjugacy_hypergroup(symmetric_group_s3());
    auto t = characters(h);
    auto d = fourier(h, t, HFunction::delta(3, 0));
    for (Index i = 0; i < 3; ++i) CHECK(std::abs(d(i) - 1.0) < 1e-14);
    for (Index i = 0; i < 3; ++i) {
        auto u = fourier(h, t, t.row(i));
        for (Index j = 0; j < 3; ++j) CHECK(std::abs(u(j) - (i == j ? 1.0 / t.plancherel[i] : 0.0)) < 1e-12);
    }
    std::mt19937_64 rng(1);
    HFunction f = support::random_function(rng, 3, 3);
    auto u = fourier(h, t, f);
    double lhs = 0.0, rhs = 0.0;
    for (Index x = 0; x < 3; ++x) lhs += h.haar(x) * std::norm(f[x]);
    for (Index i = 0; i < 3; ++i) rhs += t.plancherel[i] * std::norm(u(i));
    CHECK(std::abs(lhs - rhs) < 1e-12 * lhs);
}

TEST_CASE("structure matrices") {
    auto h = conjugacy_hypergroup(symmetric_group_s3());
    auto a = structure_matrix(h, 1);
    CHECK(a(1, 0) == doctest::Approx(1.0 / 3));
    CHECK(a(1, 2) == doctest::Approx(2.0 / 3));
    CHECK(a.rowwise().sum().isOnes(1e-15));
}

TEST_CASE("determinism and errors") {
    auto h = irr_hypergroup(alternating_group_a4());
    auto a = characters(h), b = characters(h);
    CHECK(a.values == b.values);
    CHECK(a.plancherel == b.plancherel);
    SpectralOptions other;
    other.seed = 99;
    auto c = characters(h, other);
    CHECK((c.values - a.values).cwiseAbs().maxCoeff() < 1e-10);
    try {
        characters(group_hypergroup(symmetric_group_s3()));
        FAIL("expected NotCommutative");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotCommutative);
    }
    CHECK_THROWS_AS(characters(su2_fusion(5)), Error);
}
