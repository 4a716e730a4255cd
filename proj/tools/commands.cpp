#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <random>
#include <thread>

#include "hgroup/amenability.hpp"
#include "hgroup/core.hpp"
#include "hgroup/io.hpp"
#include "hgroup/norms.hpp"
#include "hgroup/quantum.hpp"
#include "hgroup/section.hpp"
#include "hgroup/spectral.hpp"

namespace hgtool {

using namespace hgroup;

namespace {

/// Runs f(0..count-1) on up to `jobs` threads; results are written by index so
/// the outcome does not depend on the schedule.
template <class F>
void parallel_for(int count, int jobs, F f) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::exception_ptr> errors(count);
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < std::min(jobs, count); ++w)
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) {
                try {
                    f(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

HypergroupTable load_table(const RunConfig& cfg) {
    if (!cfg.input.empty()) return load_hypergroup(cfg.input);
    if (cfg.family_set) return family(cfg.spec);
    throw Error(ErrorCode::InvalidParameter, "no table given: use --family or --input");
}

HFunction random_function(std::size_t n, std::size_t support, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    HFunction u(n);
    for (std::size_t x = 0; x < support; ++x) {
        double re = dist(rng), im = dist(rng);
        u[x] = Complex(re, im);
    }
    return u;
}

void describe(Report& r, const HypergroupTable& h) {
    r.add("id", h.name());
    r.add("size", h.size());
    r.add("exact", h.exact());
    r.add("commutative", h.commutative());
    r.add("truncated", h.truncated());
    if (h.truncated()) r.add("radius", h.radius());
}

void cmd_verify(const RunConfig& cfg, Report& r) {
    HypergroupTable h = load_table(cfg);
    describe(r, h);
    AxiomReport a = verify_axioms(h, cfg.tol);
    r.section("axioms");
    r.add("mode", a.exact ? "exact" : "float");
    r.add("tolerance", a.tolerance);
    for (const AxiomCheck& c : a.checks) {
        r.add(c.name + ".max_violation", c.max_violation);
        r.add(c.name + ".checked", c.checked);
        r.check(c.name, c.passed);
    }
    r.section("haar");
    if (h.has_haar()) {
        r.add("declared", h.haar_declared());
        r.add("weights", h.haar());
        HaarResult hr = haar_weights(h);
        r.add("invariance_violation", hr.max_invariance_violation);
    } else {
        r.add("available", false);
    }
}

void cmd_characters(const RunConfig& cfg, Report& r) {
    HypergroupTable h = load_table(cfg);
    if (h.truncated()) throw Error(ErrorCode::InvalidParameter, "characters needs a finite table");
    describe(r, h);
    SpectralOptions opt;
    opt.seed = cfg.seed;
    CharacterTable t = characters(h, opt);
    r.add("count", t.count());
    r.add("attempts", t.attempts);
    r.add("plancherel", t.plancherel);
    r.section("characters");
    for (Index i = 0; i < t.count(); ++i) r.add("chi" + std::to_string(i), t.row(i));
    CharacterCheck c = check_characters(h, t);
    r.section("checks");
    r.add("multiplicativity", c.multiplicativity);
    r.add("hermitian", c.hermitian);
    r.add("orthogonality", c.orthogonality);
    r.add("normalization", c.normalization);
    r.check("characters", c.max() <= std::max(cfg.tol, 1e-9));
}

void cmd_norms(const RunConfig& cfg, Report& r) {
    HypergroupTable h = load_table(cfg);
    describe(r, h);
    const std::size_t n = h.size();
    r.add("samples", cfg.samples);
    r.add("seed", static_cast<long long>(cfg.seed));
    if (!h.commutative()) {
        TraceNormEngine engine(h);
        std::vector<double> values(cfg.samples);
        for (int s = 0; s < cfg.samples; ++s) values[s] = engine.norm(random_function(n, n, cfg.seed + s));
        r.add("norm_A_trace", values);
        return;
    }
    const std::size_t support = h.truncated() ? std::min<std::size_t>(n, std::max(2, h.radius() / 4) + 1) : n;
    std::vector<HFunction> us(cfg.samples);
    std::vector<NormReport> reports(cfg.samples);
    for (int s = 0; s < cfg.samples; ++s) us[s] = random_function(n, support, cfg.seed + s);
    parallel_for(cfg.samples, cfg.jobs, [&](int s) { reports[s] = norm_report(h, us[s]); });
    std::optional<P2Report> p2;
    if (h.truncated()) p2 = check_p2(h);
    for (int s = 0; s < cfg.samples; ++s) {
        const NormReport& nr = reports[s];
        r.section("sample" + std::to_string(s));
        r.add("u", us[s]);
        if (nr.truncated) {
            r.add("norm_A", std::vector<double>{nr.norm_A.lower, nr.norm_A.upper});
            r.add("norm_Blambda", std::vector<double>{nr.norm_Blambda.lower, nr.norm_Blambda.upper});
            r.add("norm_MA", std::vector<double>{nr.norm_MA.lower, nr.norm_MA.upper});
            r.check("interval_order", nr.norm_A.lower <= nr.norm_A.upper * (1 + 1e-12));
            if (p2->status == P2Status::Holds)
                r.check("ma_equals_a", nr.norm_MA.overlaps(nr.norm_A, 1e-8 * std::max(1.0, nr.norm_A.upper)));
            continue;
        }
        double a = nr.norm_A.lower, b = nr.norm_Blambda.lower, m = nr.norm_MA.lower;
        r.add("norm_A", a);
        r.add("norm_Blambda", b);
        r.add("norm_MA", m);
        const double scale = std::max(1.0, a);
        r.check("ma_equals_blambda", std::abs(m - b) < 1e-8 * scale);
        r.check("blambda_equals_a", std::abs(b - a) < 1e-8 * scale);
        if (nr.norm_Mcb_approx) {
            const NormMcb& mcb = *nr.norm_Mcb_approx;
            r.add("norm_Mcb", std::vector<double>{mcb.value.lower, mcb.value.upper});
            r.add("mcb_resolved", mcb.resolved);
            r.check("mcb_equals_ma", mcb.value.contains(Interval::point(m), 1e-8 * scale));
        }
    }
}

void cmd_amenability(const RunConfig& cfg, Report& r) {
    HypergroupTable h = load_table(cfg);
    describe(r, h);
    AmenabilityReport a = amenability_report(h, cfg.tol);
    r.add("p2", p2_status_name(a.p2));
    r.add("phi", a.phi_values);
    if (a.diagonal_psi_norm) r.add("psi_Blambda_norm", *a.diagonal_psi_norm);
    if (a.phi_inverse_MA_norm) r.add("phi_inverse_MA_norm", *a.phi_inverse_MA_norm);
    if (a.one_delta_MA_norm) {
        r.add("one_delta_MA_norm", *a.one_delta_MA_norm);
        r.check("one_delta_finite", std::isfinite(*a.one_delta_MA_norm));
    }
    if (a.indicator_error) {
        r.add("indicator_exact", a.indicator_exact);
        r.add("indicator_error", *a.indicator_error);
        r.check("indicator", a.indicator_exact ? *a.indicator_error == 0.0 : *a.indicator_error <= cfg.tol);
    }
    if (a.approx_diagonal_bound) r.add("approx_diagonal_bound", *a.approx_diagonal_bound);
    if (a.commutator_norm) {
        r.add("commutator_norm", *a.commutator_norm);
        r.check("commutator_zero", *a.commutator_norm == 0.0);
    }
    if (!h.truncated()) r.check("submultiplicative", a.submultiplicative);
    r.add("weak_amenability_bound", a.weak_amenability_constant_bound);
    if (a.weak_amenability_constant_bound > 0.0)
        r.check("weak_amenability_constant_1", a.weak_amenability_constant_bound <= 1.0 + 1e-6);
    for (std::size_t i = 0; i < a.notes.size(); ++i) r.add("note" + std::to_string(i), a.notes[i]);
}

void cmd_deform(const RunConfig& cfg, Report& r) {
    HypergroupTable h = load_table(cfg);
    describe(r, h);
    Chi0Result c = chi0(h);
    r.section("chi0");
    r.add("at_generator", c.at_generator);
    r.add("values", c.values);
    r.add("multiplicativity_error", c.multiplicativity_error);
    r.add("domination_excess", c.domination_excess);
    r.check("chi0_dominates", c.domination_excess <= 1e-9);
    DeformedPair d = voit_deform(h, c.values);
    r.section("deformed");
    r.add("id", d.deformed.name());
    r.add("haar_prime", d.haar_prime);
    double haar_error = 0.0;
    for (Index x = 0; x < h.size(); ++x) {
        double want = c.values[x] * c.values[x] * h.haar(x);
        haar_error = std::max(haar_error, std::abs(d.deformed.haar(x) - want) / want);
    }
    r.add("haar_prime_error", haar_error);
    r.check("haar_prime", haar_error <= 1e-10);
    AxiomReport a = verify_axioms(d.deformed, std::max(cfg.tol, 1e-10));
    r.add("axioms_max_violation", a.max_violation());
    r.check("deformed_axioms", a.all_passed());
    P2Report p = check_p2(d.deformed);
    r.add("p2", p2_status_name(p.status));
    r.check("deformed_p2", p.status == P2Status::Holds);
    r.add("dual_map_error", d.dual_map_error);
    r.add("dual_map_checked", d.dual_map_checked);
}

void cmd_product(const RunConfig& cfg, Report& r) {
    HypergroupTable a = load_table(cfg);
    HypergroupTable b = !cfg.second_input.empty() ? load_hypergroup(cfg.second_input)
                        : !cfg.second_group.empty()
                            ? group_hypergroup(builtin_group(cfg.second_group))
                            : throw Error(ErrorCode::InvalidParameter, "product needs --with-group or --with-input");
    HypergroupTable p = product(a, b);
    r.add("left", a.name());
    r.add("right", b.name());
    describe(r, p);
    AxiomReport ax = verify_axioms(p, cfg.tol);
    for (const AxiomCheck& c : ax.checks) {
        r.add(c.name + ".max_violation", c.max_violation);
        r.check(c.name, c.passed);
    }
    if (!cfg.save.empty()) {
        save_hypergroup(cfg.save, p);
        r.add("saved", cfg.save);
    }
}

void cmd_quantum(const RunConfig& cfg, Report& r) {
    std::optional<FiniteGroup> group;
    FusionRing fr;
    if (!cfg.fusion.empty()) {
        fr = load_fusion_file(cfg.fusion);
    } else if (cfg.family_set && (cfg.spec.family == "suq2_fusion" || cfg.spec.family == "su2_fusion")) {
        fr = suq2_fusion_ring(cfg.spec.family == "su2_fusion" ? 1.0 : cfg.spec.q, cfg.spec.radius);
    } else if (cfg.family_set) {
        group = resolve_group(cfg.spec);
        fr = fusion_ring(*group);
    } else {
        throw Error(ErrorCode::InvalidParameter, "quantum needs --fusion, --group or a fusion family");
    }
    r.add("ring", fr.name);
    r.add("labels", [&] {
        std::string s;
        for (const auto& l : fr.labels) s += (s.empty() ? "" : ",") + l;
        return s;
    }());
    std::vector<double> nd(fr.n.begin(), fr.n.end());
    r.add("n", nd);
    r.add("d", fr.d);
    const bool kac = is_kac(fr, cfg.tol);
    r.add("kac", kac);
    HypergroupTable hn = hypergroup_n(fr), hd = hypergroup_d(fr);
    r.add("hypergroup_n", hn.name());
    r.add("hypergroup_d", hd.name());
    for (const HypergroupTable* t : {&hn, &hd}) {
        const std::string tag = t == &hn ? "n" : "d";
        AxiomReport a = verify_axioms(*t, std::max(cfg.tol, 1e-12));
        r.add("axioms_" + tag + ".max_violation", a.max_violation());
        r.check("axioms_" + tag, a.all_passed());
    }
    double haar_error = 0.0;
    for (Index x = 0; x < hd.size(); ++x) {
        if (!hd.has_row(x, hd.involution(x))) continue;
        double c = hd.coefficient(x, hd.involution(x), hd.identity());
        haar_error = std::max(haar_error, std::abs(1.0 / c - fr.d[x] * fr.d[x]) / (fr.d[x] * fr.d[x]));
    }
    r.add("haar_d_error", haar_error);
    r.check("haar_d", haar_error <= 1e-12);
    if (kac) r.check("kac_tables_equal", same_table(hn, hd, 0.0, true));
    r.add("p2_n", p2_status_name(check_p2(hn).status));
    if (!group) return;
    GroupCenter center(*group);
    const std::size_t k = center.class_count();
    double iso = 0.0, mult = 0.0;
    CharacterTable t = characters(center.irr_table());
    for (int s = 0; s < cfg.samples; ++s) {
        HFunction f0 = random_function(k, k, cfg.seed + 2 * s), g0 = random_function(k, k, cfg.seed + 2 * s + 1);
        CentralFunction f = f0.values(), g = g0.values();
        HFunction fh = center.hat(f);
        iso = std::max(iso, std::abs(center.zl1_norm(f) - norm_A(center.irr_table(), t, fh).value));
        HFunction lhs = center.hat(center.convolve(f, g));
        mult = std::max(mult, max_abs_diff(lhs, pointwise(fh, center.hat(g))));
    }
    r.section("hat_map");
    r.add("samples", cfg.samples);
    r.add("isometry_error", iso);
    r.add("multiplicativity_error", mult);
    r.check("hat_isometry", iso < 1e-9);
    r.check("hat_multiplicative", mult < 1e-9);
}

void cmd_p2(const RunConfig& cfg, Report& r) {
    HypergroupTable h = load_table(cfg);
    describe(r, h);
    P2Report p = check_p2(h);
    r.add("status", p2_status_name(p.status));
    r.add("lower", p.lower);
    r.add("upper", p.upper);
    for (const auto& [rad, v] : p.lower_by_radius) r.add("lower.R" + std::to_string(rad), v);
    r.add("monotone", p.monotone);
    if (h.truncated()) r.add("tail_bound", p.tail_bound);
    r.add("certificate", p.certificate);
    r.check("lower_monotone", p.monotone);
}

}  // namespace

void run_command(const RunConfig& cfg, Report& report) {
    const std::string& c = cfg.subcommand;
    if (c == "verify") return cmd_verify(cfg, report);
    if (c == "characters") return cmd_characters(cfg, report);
    if (c == "norms") return cmd_norms(cfg, report);
    if (c == "amenability") return cmd_amenability(cfg, report);
    if (c == "deform") return cmd_deform(cfg, report);
    if (c == "product") return cmd_product(cfg, report);
    if (c == "quantum") return cmd_quantum(cfg, report);
    if (c == "p2") return cmd_p2(cfg, report);
    throw Error(ErrorCode::InvalidParameter, "unknown subcommand '" + c + "'");
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::ParseError:
        case ErrorCode::InvalidParameter:
        case ErrorCode::IndexOutOfRange:
        case ErrorCode::SizeOverflow:
        case ErrorCode::InvalidTable:
        case ErrorCode::NotLatinSquare:
        case ErrorCode::NoIdentity:
        case ErrorCode::NotAssociative:
        case ErrorCode::ReciprocityViolation:
        case ErrorCode::TruncationOverflow:
        case ErrorCode::NotNaturalIndexed:
        case ErrorCode::NotCommutative:
            return 2;
        default:
            return 1;
    }
}

}  // namespace hgtool
