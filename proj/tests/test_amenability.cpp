#include <doctest.h>

#include "hgroup/amenability.hpp"
#include "hgroup/builders.hpp"
#include "hgroup/errors.hpp"
#include "hgroup/norms.hpp"
#include "hgroup/section.hpp"
#include "support.hpp"

using namespace hgroup;

TEST_CASE("diagonal psi values") {
    auto s3 = symmetric_group_s3();
    auto c = conjugacy_hypergroup(s3);
    auto pc = diagonal_psi_exact(c);
    CHECK(pc[pair_index(c, 0, 0)] == 1);
    CHECK(pc[pair_index(c, 1, 1)] == Rational(1, 3));
    CHECK(pc[pair_index(c, 2, 2)] == Rational(1, 2));
    CHECK(pc[pair_index(c, 1, 2)] == 0);
    auto i = irr_hypergroup(s3);
    auto pi = diagonal_psi_exact(i);
    CHECK(pi[pair_index(i, 2, 2)] == Rational(1, 4));
    auto g = group_hypergroup(s3);
    auto pg = diagonal_psi(g);
    for (Index x = 0; x < 6; ++x)
        for (Index y = 0; y < 6; ++y) CHECK(pg[pair_index(g, x, y)] == Complex(x == y ? 1.0 : 0.0));
}

TEST_CASE("restriction to the diagonal") {
    auto c = conjugacy_hypergroup(symmetric_group_s3());
    HFunction phi = restrict_to_diagonal(c, diagonal_psi(c));
    CHECK(max_abs_diff(phi, HFunction::real({1.0, 1.0 / 3, 0.5})) < 1e-15);
    HFunction u = HFunction::real({1, 2, 3}), v = HFunction::real({-1, 0.5, 2});
    HFunction uv(9);
    for (Index x = 0; x < 3; ++x)
        for (Index y = 0; y < 3; ++y) uv[pair_index(c, x, y)] = u[x] * v[y];
    CHECK(max_abs_diff(restrict_to_diagonal(c, uv), pointwise(u, v)) == 0.0);
    CHECK(max_abs_diff(restrict_to_diagonal(c, HFunction(9)), HFunction(3)) == 0.0);
}

TEST_CASE("invert_multiplier") {
    auto c = conjugacy_hypergroup(symmetric_group_s3());
    auto r = invert_multiplier(c, HFunction::real({1.0, 1.0 / 3, 0.5}));
    CHECK(max_abs_diff(r.inverse, HFunction::real({1.0, 3.0, 2.0})) < 1e-14);
    REQUIRE(r.ma_norm);
    CHECK(*r.ma_norm > 0.0);
    auto g = group_hypergroup(cyclic_group(4));
    auto rg = invert_multiplier(g, HFunction::constant(4, 1.0));
    CHECK(*rg.ma_norm == doctest::Approx(1.0).epsilon(1e-12));
    auto s = su2_fusion(20);
    HFunction phi(s.size());
    for (Index x = 0; x < s.size(); ++x) phi[x] = 1.0 / s.haar(x);
    try {
        invert_multiplier(s, phi);
        FAIL("expected UnboundedValueSet");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnboundedValueSet);
    }
    CHECK_THROWS_AS(invert_multiplier(c, HFunction::real({1.0, 0.0, 1.0})), Error);
}

TEST_CASE("indicator_diagonal on every finite table") {
    for (const auto& h : support::finite_tables()) {
        auto d = indicator_diagonal(h);
        CHECK(d.exact);
        CHECK_MESSAGE(d.indicator_error == 0.0, h.name());
        for (Index x = 0; x < h.size(); ++x)
            for (Index y = 0; y < h.size(); ++y) CHECK(d.indicator[pair_index(h, x, y)] == Complex(x == y ? 1.0 : 0.0));
        CHECK(std::isfinite(d.ma_norm));
        CHECK(std::isfinite(d.a_norm));
        CHECK(d.ma_norm == doctest::Approx(d.a_norm).epsilon(1e-8));
        CHECK(d.ma_norm <= d.phi_inverse_ma_norm * d.psi_blambda_norm + 1e-9);
    }
    auto z2 = indicator_diagonal(group_hypergroup(cyclic_group(2)));
    CHECK(z2.ma_norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("approximate diagonal") {
    for (const auto& h : support::finite_tables()) {
        auto d = indicator_diagonal(h);
        auto a = approximate_diagonal(h, d);
        CHECK(a.commutator_norm == 0.0);
        CHECK(a.bound == doctest::Approx(d.a_norm).epsilon(1e-12));
        CHECK(a.identity_residual < 1e-10);
        CHECK(a.tests == h.size());
    }
    for (int n : {2, 3, 5}) {
        auto h = group_hypergroup(cyclic_group(n));
        auto a = approximate_diagonal(h, indicator_diagonal(h));
        CHECK(a.bound == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("weak amenability on finite tables is the constant 1") {
    for (const auto& h : support::finite_tables()) {
        auto w = weak_amenability_witness(h, {});
        CHECK(w.finite);
        CHECK(w.constant_bound == 1.0);
        REQUIRE(w.steps.size() == 1);
        for (double r : w.steps[0].residuals) CHECK(r < 1e-12);
    }
}

TEST_CASE("weak amenability on the tree") {
    auto h = tree_radial(2, 40);
    auto w = weak_amenability_witness(h, {5, 10, 20});
    CHECK_FALSE(w.finite);
    CHECK(w.constant_bound <= 1.0 + 1e-6);
    REQUIRE(w.steps.size() == 3);
    for (const auto& s : w.steps) {
        CHECK(s.ma_interval.lower <= 1.0 + 1e-6);
        CHECK(s.crosscheck_error < 1e-10);
        CHECK(s.e[0].real() == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(w.residuals_decreasing());
    CHECK(w.test_names == std::vector<std::string>{"delta_0", "delta_1"});
    for (std::size_t s = 1; s < w.steps.size(); ++s) CHECK(w.steps[s].residuals[1] < w.steps[s - 1].residuals[1]);
    CHECK_THROWS_AS(weak_amenability_witness(h, {30}), Error);
}

TEST_CASE("weak amenability on SU(2) sections") {
    auto h = su2_fusion(40);
    auto w = weak_amenability_witness(h, {5, 10, 20});
    CHECK(w.constant_bound <= 1.0 + 1e-6);
    for (const auto& s : w.steps) CHECK(s.ma_interval.lower <= 1.0 + 1e-6);
    CHECK(w.residuals_decreasing());
}

TEST_CASE("bounded approximate identity from (P2)") {
    auto f = bai_from_p2(conjugacy_hypergroup(symmetric_group_s3()), {0, 1, 2}, 0.1);
    CHECK(max_abs_diff(f.u, HFunction::constant(3, 1.0)) == 0.0);
    auto h = su2_fusion(80);
    auto b = bai_from_p2(h, {0, 1, 2, 3}, 0.1);
    CHECK(b.achieved < 0.1);
    CHECK(b.radius > 0);
    CHECK(b.norm_bound <= 1.0 + 1e-9);
    try {
        bai_from_p2(tree_radial(2, 40), {0, 1}, 0.1);
        FAIL("expected P2Failure");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::P2Failure);
    }
}

TEST_CASE("amenability report") {
    auto r = amenability_report(irr_hypergroup(quaternion_group_q8()));
    REQUIRE(r.one_delta_MA_norm);
    CHECK(std::isfinite(*r.one_delta_MA_norm));
    CHECK(r.indicator_exact);
    CHECK(*r.commutator_norm == 0.0);
    CHECK(r.submultiplicative);
    CHECK(r.weak_amenability_constant_bound == 1.0);
    CHECK(r.phi_values == std::vector<double>{1, 1, 1, 1, 0.25});
    auto t = amenability_report(tree_radial(2, 40));
    CHECK(t.p2 == P2Status::Fails);
    CHECK_FALSE(t.one_delta_MA_norm);
    CHECK(t.weak_amenability_constant_bound <= 1.0 + 1e-6);
}
