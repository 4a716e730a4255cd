// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "hgroup/amenability.hpp"
#include "hgroup/builders.hpp"
#include "hgroup/core.hpp"
#include "hgroup/errors.hpp"
#include "hgroup/norms.hpp"
#include "hgroup/quantum.hpp"
#include "hgroup/section.hpp"
#include "hgroup/spectral.hpp"
#include "support.hpp"

using namespace hgroup;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

Outcome axioms_and_haar() {
    Outcome o;
    for (const auto& name : support::finite_groups()) {
        auto g = builtin_group(name);
        auto c = conjugacy_hypergroup(g);
        auto i = irr_hypergroup(g);
        for (const auto* h : {&c, &i}) {
            auto r = verify_axioms(*h);
            o.require(r.exact && r.all_passed() && r.max_violation() == 0.0, h->name() + " axioms");
        }
        auto hc = haar_weights(c);
        o.require(hc.exact, c.name() + " haar not exact");
        for (Index k = 0; k < c.size(); ++k)
            o.require(hc.exact_weights[k] == Rational(g.classes()[k].size()), c.name() + " lambda(C) != |C|");
        auto irr = irreducible_data(g);
        auto hi = haar_weights(i);
        o.require(hi.exact, i.name() + " haar not exact");
        for (Index a = 0; a < i.size(); ++a)
            o.require(hi.exact_weights[a] == Rational(irr.dims[a] * irr.dims[a]), i.name() + " lambda(pi) != d^2");
    }
    o.detail = o.pass ? "Conj and Irr of Z2 Z4 S3 D4 Q8 A4 exact, lambda = |C| and d^2" : o.detail;
    return o;
}

Outcome norm_equality() {
    Outcome o;
    std::mt19937_64 rng(20240611);
    double worst = 0.0;
    for (const auto& h : support::finite_tables()) {
        auto t = characters(h);
        for (int k = 0; k < 100; ++k) {
            HFunction u = support::random_function(rng, h.size(), h.size());
            double a = norm_A(h, t, u).value, b = norm_Blambda(h, t, u).value, m = norm_MA(h, t, u).value;
            worst = std::max({worst, std::abs(m - b), std::abs(b - a)});
            o.require(std::abs(m - b) < 1e-8 && std::abs(b - a) < 1e-8, h.name() + " norms differ");
        }
    }
    if (o.pass) o.detail = "max |MA-B|,|B-A| = " + fmt(worst) + " over 1200 functions";
    return o;
}

Outcome mcb_supremum() {
    Outcome o;
    std::mt19937_64 rng(7);
    std::vector<FiniteGroup> groups{cyclic_group(2), symmetric_group_s3(), dihedral_group_d4()};
    double worst = 0.0;
    for (const auto& h : {conjugacy_hypergroup(symmetric_group_s3()), irr_hypergroup(symmetric_group_s3())}) {
        auto t = characters(h);
        for (int k = 0; k < 20; ++k) {
            HFunction u = support::random_function(rng, h.size(), h.size());
            double m = norm_MA(h, t, u).value;
            auto mcb = norm_Mcb_approx(h, t, u, groups);
            double err = std::max(std::abs(mcb.value.lower - m), std::abs(mcb.value.upper - m));
            worst = std::max(worst, err);
            o.require(err < 1e-8, h.name() + " M_cb bracket [" + fmt(mcb.value.lower) + "," + fmt(mcb.value.upper) +
                                      "] vs MA " + fmt(m));
        }
    }
    if (o.pass) o.detail = "max deviation " + fmt(worst) + " over groups Z2 S3 D4";
    return o;
}

Outcome p2_classification() {
    Outcome o;
    for (const auto& h : support::finite_tables()) o.require(check_p2(h).status == P2Status::Holds, h.name());
    for (int R : {10, 20, 40, 80}) o.require(check_p2(su2_fusion(R)).status == P2Status::Holds, "su2_fusion R=" + std::to_string(R));
    auto t = check_p2(tree_radial(2, 40));
    const double target = 2.0 * std::sqrt(2.0) / 3.0;
    o.require(t.status == P2Status::Fails, "tree_radial q=2 not classified as failing");
    o.require(std::abs(t.upper - target) < 1e-3, "tree bound " + fmt(t.upper));
    if (o.pass) o.detail = "finite + su2 hold; tree fails with bound " + std::to_string(t.upper);
    return o;
}

Outcome voit_pipeline() {
    Outcome o;
    auto h = tree_radial(2, 40);
    auto c = chi0(h);
    auto d = voit_deform(h, c.values);
    auto ax = verify_axioms(d.deformed, 1e-10);
    o.require(ax.all_passed(), "deformed axioms violation " + fmt(ax.max_violation()));
    o.require(check_p2(d.deformed).status == P2Status::Holds, "deformed (P2) not holding");
    double herr = 0.0;
    for (Index x = 0; x < h.size(); ++x) {
        double want = c.values[x] * c.values[x] * h.haar(x);
        herr = std::max(herr, std::abs(d.deformed.haar(x) - want) / want);
    }
    o.require(herr < 1e-10, "lambda' error " + fmt(herr));
    auto w = weak_amenability_witness(h, {5, 10, 20});
    o.require(w.constant_bound <= 1.0 + 1e-6, "weak amenability bound " + fmt(w.constant_bound));
    for (const auto& s : w.steps) o.require(s.ma_interval.lower <= 1.0 + 1e-6, "MA bound of e above 1");
    o.require(w.residuals_decreasing(), "residuals not decreasing");
    for (const auto& f : support::finite_tables()) {
        auto wf = weak_amenability_witness(f, {});
        o.require(wf.finite && wf.constant_bound == 1.0, f.name() + " witness bound not 1");
        o.require(max_abs_diff(wf.steps[0].e, HFunction::constant(f.size(), 1.0)) == 0.0, f.name() + " witness not 1");
    }
    if (o.pass) {
        std::string res;
        for (const auto& s : w.steps) res += (res.empty() ? "" : ",") + fmt(s.residuals[1]);
        o.detail = "lambda' err " + fmt(herr) + ", bound " + fmt(w.constant_bound) + ", delta_1 residuals " + res;
    }
    return o;
}

Outcome amenability_construction() {
    Outcome o;
    for (const std::string name : {"z2", "z3", "z4", "z5", "z6", "klein", "s3", "d4", "q8", "a4"}) {
        auto g = builtin_group(name);
        for (const auto& h : {irr_hypergroup(g), conjugacy_hypergroup(g)}) {
            auto d = indicator_diagonal(h);
            o.require(d.exact && d.indicator_error == 0.0, h.name() + " indicator not exact");
            o.require(std::isfinite(d.ma_norm) && std::isfinite(d.a_norm), h.name() + " norm not finite");
            auto a = approximate_diagonal(h, d);
            o.require(a.commutator_norm == 0.0, h.name() + " commutator " + fmt(a.commutator_norm));
        }
    }
    if (o.pass) o.detail = "20 tables, 1_Delta exact, commutator 0";
    return o;
}

Outcome kac_isomorphism() {
    Outcome o;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    double iso = 0.0, mult = 0.0;
    for (const std::string name : {"s3", "z4", "d4", "q8"}) {
        GroupCenter c(builtin_group(name));
        auto t = characters(c.irr_table());
        for (int s = 0; s < 50; ++s) {
            CentralFunction f(c.class_count()), g(c.class_count());
            for (auto* v : {&f, &g})
                for (auto& x : *v) {
                    double re = dist(rng), im = dist(rng);
                    x = Complex(re, im);
                }
            HFunction fh = c.hat(f);
            iso = std::max(iso, std::abs(c.zl1_norm(f) - norm_A(c.irr_table(), t, fh).value));
            mult = std::max(mult, max_abs_diff(c.hat(c.convolve(f, g)), pointwise(fh, c.hat(g))));
        }
    }
    o.require(iso < 1e-9, "isometry error " + fmt(iso));
    o.require(mult < 1e-9, "multiplicativity error " + fmt(mult));
    GroupCenter s3(symmetric_group_s3());
    auto f = s3.character(2);
    double l1 = s3.zl1_norm(f);
    double a = norm_A(s3.irr_table(), characters(s3.irr_table()), s3.hat(f)).value;
    o.require(std::abs(l1 - 2.0 / 3) < 1e-12 && std::abs(a - 2.0 / 3) < 1e-12, "S3 spot value");
    if (o.pass) o.detail = "isometry " + fmt(iso) + ", multiplicativity " + fmt(mult) + ", S3 chi_sigma -> 2/3";
    return o;
}

Outcome quantum_fusion() {
    Outcome o;
    for (int R = 1; R <= 12; ++R) {
        auto hd = hypergroup_d(suq2_fusion_ring(0.5, R));
        o.require(verify_axioms(hd, 1e-12).all_passed(), "axioms at R=" + std::to_string(R));
    }
    auto half = suq2_fusion_ring(0.5, 12), one = suq2_fusion_ring(1.0, 12);
    o.require(!is_kac(half), "q=1/2 reported Kac");
    o.require(is_kac(one), "q=1 not Kac");
    o.require(same_table(hypergroup_n(one), hypergroup_d(one), 0.0, true), "q=1 tables differ");
    auto hd = hypergroup_d(half);
    o.require(std::abs(hd.coefficient(1, 1, 0) - 0.16) < 1e-12 && std::abs(hd.coefficient(1, 1, 2) - 0.84) < 1e-12,
              "delta_2 . delta_2 row");
    if (o.pass) o.detail = "axioms R<=12, Kac flags, (0.16, 0.84)";
    return o;
}

Outcome reproducibility() {
    Outcome o;
    std::vector<hgtool::RunConfig> configs;
    auto add = [&](const std::string& cmd, const std::string& fam, const std::string& group, double q, int radius) {
        hgtool::RunConfig c;
        c.subcommand = cmd;
        c.spec.family = fam;
        c.spec.group = group;
        c.spec.q = q;
        c.spec.radius = radius;
        c.family_set = true;
        c.structured = true;
        configs.push_back(c);
    };
    add("norms", "conj", "s3", 2, 10);
    add("characters", "irr", "a4", 2, 10);
    add("quantum", "irr", "d4", 2, 10);
    add("amenability", "conj", "q8", 2, 10);
    add("deform", "tree_radial", "s3", 2, 40);
    add("p2", "tree_radial", "s3", 2, 40);
    for (auto& c : configs) {
        std::string first, second;
        for (int run = 0; run < 2; ++run) {
            hgtool::RunConfig cc = c;
            cc.jobs = run == 0 ? 1 : 4;
            Report r(cc.subcommand);
            hgtool::run_command(cc, r);
            (run == 0 ? first : second) = r.structured();
        }
        o.require(first == second, c.subcommand + " reports differ");
        o.require(first.rfind("hgreport v1\n", 0) == 0, "missing header");
    }
    if (o.pass) o.detail = std::to_string(configs.size()) + " commands byte-identical across runs";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> all{
        {"1 axioms and Haar weights", axioms_and_haar},
        {"2 MA = B_lambda = A on finite tables", norm_equality},
        {"3 M_cb supremum over Z2 S3 D4", mcb_supremum},
        {"4 (P2) classification", p2_classification},
        {"5 Voit deformation and weak amenability", voit_pipeline},
        {"6 diagonal indicator amenability", amenability_construction},
        {"7 ZL1(G) = A(Irr(G)) hat map", kac_isomorphism},
        {"8 SU_q(2) fusion hypergroups", quantum_fusion},
        {"9 reproducible structured reports", reproducibility},
    };
    int failed = 0;
    for (const auto& c : all) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed ? 1 : 0;
}
