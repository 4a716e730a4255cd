#include <doctest.h>

#include <cmath>
#include <random>

#include "hgroup/builders.hpp"
#include "hgroup/core.hpp"
#include "hgroup/errors.hpp"
#include "hgroup/norms.hpp"
#include "hgroup/section.hpp"
#include "support.hpp"

using namespace hgroup;

namespace {

/// a * integral over SU(2) of |chi_a|, by the Weyl integration formula.
double su2_delta_norm(int a) {
    const int n = 200000;
    double s = 0.0;
    for (int k = 0; k < n; ++k) {
        double th = M_PI * (k + 0.5) / n;
        double chi = std::sin(a * th) / std::sin(th);
        s += std::abs(chi) * (2.0 / M_PI) * std::sin(th) * std::sin(th);
    }
    return a * s * M_PI / n;
}

}  // namespace

TEST_CASE("norm_A examples on Conj(S3)") {
    auto h = conjugacy_hypergroup(symmetric_group_s3());
    auto t = characters(h);
    for (Index i = 0; i < t.count(); ++i) CHECK(norm_A(h, t, t.row(i)).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(norm_A(h, t, HFunction::constant(3, 1.0)).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(norm_A(h, t, HFunction::delta(3, 0)).value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("norm_Blambda examples") {
    auto h = conjugacy_hypergroup(symmetric_group_s3());
    auto t = characters(h);
    for (Index i = 0; i < t.count(); ++i) CHECK(norm_Blambda(h, t, t.row(i)).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(norm_Blambda(h, t, HFunction(3)).value == 0.0);
    // products of two characters, divided by chi0 = 1, have norm at most 1
    for (Index i = 0; i < t.count(); ++i)
        for (Index j = 0; j < t.count(); ++j)
            CHECK(norm_Blambda(h, t, pointwise(t.row(i), t.row(j))).value <= 1.0 + 1e-12);
    for (Index i = 0; i < t.count(); ++i)
        CHECK(norm_B_finite(h, t, t.row(i)) == doctest::Approx(norm_Blambda(h, t, t.row(i)).value));
}

TEST_CASE("norm_MA examples") {
    auto z2 = group_hypergroup(cyclic_group(2));
    auto tz = characters(z2);
    for (double a : {0.3, -1.2})
        for (double b : {2.0, -0.25}) {
            HFunction u = HFunction::real({a + b, a - b});
            CHECK(norm_MA(z2, tz, u).value == doctest::Approx(std::abs(a) + std::abs(b)).epsilon(1e-12));
        }
    auto h = conjugacy_hypergroup(symmetric_group_s3());
    auto t = characters(h);
    HFunction std_char = HFunction::real({1.0, 0.0, -0.5});
    CHECK(norm_MA(h, t, std_char).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(norm_MA(h, t, std_char).value == doctest::Approx(norm_Blambda(h, t, std_char).value).epsilon(1e-12));
    HFunction d1 = HFunction::delta(3, 1);
    CHECK(norm_MA(h, t, d1).value == doctest::Approx(norm_A(h, t, d1).value).epsilon(1e-10));
}

TEST_CASE("norm equalities on 100 random functions per finite table") {
    std::mt19937_64 rng(2024);
    for (const auto& h : support::finite_tables()) {
        auto t = characters(h);
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            HFunction u = support::random_function(rng, h.size(), h.size());
            auto a = norm_A(h, t, u);
            double b = norm_Blambda(h, t, u).value, m = norm_MA(h, t, u).value;
            worst = std::max({worst, std::abs(m - b), std::abs(b - a.value)});
            HFunction rep = convolve_functions(h, a.xi, involute(h, a.eta));
            CHECK(max_abs_diff(rep, u) < 1e-10);
            CHECK(a.reproduction_error < 1e-10);
            CHECK(std::abs(l2_norm(h, a.xi) * l2_norm(h, a.eta) - a.value) < 1e-9);
        }
        CHECK_MESSAGE(worst < 1e-8, h.name());
    }
}

TEST_CASE("A(H) is a Banach algebra under pointwise product") {
    std::mt19937_64 rng(99);
    for (const auto& h : support::finite_tables()) {
        auto t = characters(h);
        for (int k = 0; k < 30; ++k) {
            HFunction u = support::random_function(rng, h.size(), h.size());
            HFunction v = support::random_function(rng, h.size(), h.size());
            CHECK(norm_A(h, t, pointwise(u, v)).value <= norm_A(h, t, u).value * norm_A(h, t, v).value + 1e-9);
        }
    }
}

TEST_CASE("trace norm engine") {
    std::mt19937_64 rng(4);
    for (const auto& h : support::finite_tables()) {
        auto t = characters(h);
        TraceNormEngine e(h);
        for (int k = 0; k < 10; ++k) {
            HFunction u = support::random_function(rng, h.size(), h.size());
            CHECK(e.norm(u) == doctest::Approx(norm_A(h, t, u).value).epsilon(1e-9));
        }
    }
    // finite group: ||chi_pi||_A = d_pi, ||delta_e||_A = ||1||_A = 1
    auto g = symmetric_group_s3();
    auto h = group_hypergroup(g);
    TraceNormEngine e(h);
    CHECK(e.norm(HFunction::delta(6, 0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.norm(HFunction::constant(6, 1.0)) == doctest::Approx(1.0).epsilon(1e-12));
    HFunction chi = HFunction::real({2, 0, 0, 0, -1, -1});
    CHECK(e.norm(chi) == doctest::Approx(2.0).epsilon(1e-12));
    auto q8 = group_hypergroup(quaternion_group_q8());
    TraceNormEngine eq(q8);
    CHECK(eq.norm(HFunction::real({2, -2, 0, 0, 0, 0, 0, 0})) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("M_cb approximation") {
    auto h = conjugacy_hypergroup(symmetric_group_s3());
    auto t = characters(h);
    HFunction std_char = HFunction::real({1.0, 0.0, -0.5});
    auto z = norm_Mcb_approx(h, t, std_char, {cyclic_group(2)});
    CHECK(z.resolved);
    CHECK(z.value.lower == doctest::Approx(1.0).epsilon(1e-12));
    auto s = norm_Mcb_approx(h, t, std_char, {symmetric_group_s3()});
    CHECK(s.value.lower <= 1.0 + 1e-9);
    CHECK(s.value.upper >= 1.0 - 1e-9);
    CHECK(s.value.width() < 1e-9);
    double md = norm_MA(h, t, HFunction::delta(3, 0)).value;
    auto d = norm_Mcb_approx(h, t, HFunction::delta(3, 0), default_mcb_groups());
    CHECK(d.value.contains(Interval::point(md), 1e-9));
    CHECK(d.groups.size() == 3);
}

TEST_CASE("section norms bracket known values") {
    auto h = su2_fusion(40);
    auto r = norm_A_section(h, HFunction::delta(h.size(), 0));
    CHECK(r.value.lower <= 1.0 + 1e-9);
    CHECK(r.value.upper >= 1.0 - 1e-9);
    for (int a : {2, 3, 4}) {
        double want = su2_delta_norm(a);
        auto s = norm_A_section(h, HFunction::delta(h.size(), a - 1));
        CHECK_MESSAGE(s.value.lower <= want + 1e-6, a);
        CHECK_MESSAGE(s.value.upper >= want - 1e-6, a);
        CHECK(s.value.lower <= s.value.upper);
        CHECK(s.witness_residual < 1e-8);
    }
}

TEST_CASE("Voit isometry u -> u/chi0 on the tree") {
    auto h = tree_radial(2, 40);
    auto c = chi0(h);
    auto d = voit_deform(h, c.values);
    std::mt19937_64 rng(8);
    for (int k = 0; k < 5; ++k) {
        HFunction u = support::random_function(rng, h.size(), 4, false);
        HFunction v(h.size());
        for (Index x = 0; x < h.size(); ++x) v[x] = u[x] / c.values[x];
        auto on_h = norm_A_section(h, u).value;
        auto on_h0 = norm_A_section(d.deformed, v).value;
        CHECK(on_h.overlaps(on_h0, 1e-9));
        // A(H0) norm of the same function is no larger than its A(H) norm
        auto same = norm_A_section(d.deformed, u).value;
        CHECK(same.lower <= on_h.upper + 1e-9);
        // MA(H) interval of u equals the A(H0) interval of u
        auto ma = norm_MA_section(h, u);
        CHECK(ma.overlaps(same, 1e-9));
    }
}

TEST_CASE("finite deformation is the identity on norms") {
    auto h = irr_hypergroup(quaternion_group_q8());
    auto d = voit_deform(h, chi0(h).values);
    auto t0 = characters(h), t1 = characters(d.deformed);
    std::mt19937_64 rng(12);
    for (int k = 0; k < 10; ++k) {
        HFunction u = support::random_function(rng, h.size(), h.size());
        CHECK(norm_A(h, t0, u).value == norm_A(d.deformed, t1, u).value);
        CHECK(norm_MA(h, t0, u).value == norm_MA(d.deformed, t1, u).value);
    }
}

TEST_CASE("norm_report") {
    auto h = irr_hypergroup(symmetric_group_s3());
    HFunction u = HFunction::real({0.5, -1.0, 0.25});
    auto r = norm_report(h, u);
    CHECK_FALSE(r.truncated);
    CHECK(r.norm_A.is_point());
    CHECK(std::abs(r.norm_A.lower - r.norm_MA.lower) < 1e-10);
    REQUIRE(r.norm_Mcb_approx);
    CHECK(r.norm_Mcb_approx->value.contains(r.norm_MA, 1e-8));
    auto s = norm_report(su2_fusion(20), HFunction::delta(21, 1));
    CHECK(s.truncated);
    CHECK(s.norm_A.lower <= s.norm_A.upper);
}
