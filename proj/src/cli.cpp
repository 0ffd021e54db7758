#include "ghcode/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ghcode/codes.hpp"
#include "ghcode/curve.hpp"
#include "ghcode/lattice.hpp"
#include "ghcode/verify.hpp"

namespace ghcode::cli {

namespace {

struct CurveArgs {
    std::int64_t q = 0;
    unsigned c = 0;
};

struct SpecArgs {
    std::int64_t v = 0;
    std::int64_t r = 0;
    std::int64_t s = 0;
    std::int64_t t = 0;

    DivisorSpec spec() const { return {v, r, s, t}; }
};

struct Sweep {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::int64_t step = 1;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Sweep parse_sweep(const std::string& text) {
    Sweep sw;
    char c1 = 0, c2 = 0, extra = 0;
    std::istringstream is(text);
    if (!(is >> sw.lo >> c1 >> sw.hi >> c2 >> sw.step) || c1 != ':' || c2 != ':' || (is >> extra)) {
        throw UsageError("--sweep expects vmin:vmax:step, got '" + text + "'");
    }
    if (sw.step <= 0) throw UsageError("--sweep step must be positive");
    if (sw.hi < sw.lo) throw UsageError("--sweep needs vmin <= vmax");
    return sw;
}

void add_curve(CLI::App* sub, CurveArgs& ca) {
    sub->add_option("--q", ca.q, "Base field size q (prime power)")->required();
    sub->add_option("--c", ca.c, "Extension degree c (odd, at least 3)")->required();
}

void add_spec(CLI::App* sub, SpecArgs& sa, bool with_v = true) {
    if (with_v) sub->add_option("--v", sa.v, "Coefficient of P_1");
    sub->add_option("--r", sa.r, "Coefficient of P_0");
    sub->add_option("--s", sa.s, "Coefficient of Q");
    sub->add_option("--t", sa.t, "Coefficient of V");
}

std::string spec_csv(const DivisorSpec& s) {
    return std::to_string(s.v) + "," + std::to_string(s.r) + "," + std::to_string(s.s) + "," + std::to_string(s.t);
}

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

void print_params(const Curve& curve, std::ostream& out) {
    const auto& cp = curve.params();
    const auto sp = curve.special_places();
    out << "a=" << cp.a << " b=" << cp.b << " g=" << cp.g << " n=" << cp.n << " v0=" << cp.v0 << " A=" << cp.A
        << " B=" << cp.B << "\n";
    out << "q=" << cp.q << " p=" << cp.p << " e=" << cp.e << " c=" << cp.c << " field=GF(" << curve.field().size()
        << ") modulus=" << modulus_to_string(curve.field().modulus()) << "\n";
    out << "R=" << cp.R << " degP1=" << cp.degP << " degP0=1 degQ=" << cp.degQ << " degV=" << cp.degV << "\n";
    out << "P1=" << (sp.p1_exists ? "rational" : "absent") << " gamma=" << sp.gamma.value
        << " Q1=" << (sp.q1_exists ? "rational" : "absent") << " V_rational=" << sp.v_rational_count << "\n";
}

int cmd_code(const Curve& curve, const DivisorSpec& spec, const std::string& out_path, bool check_dual,
             bool min_dist, std::uint64_t budget, std::ostream& out, std::ostream& err) {
    const auto& cp = curve.params();
    const auto code = build_code(curve, spec);
    if (!out_path.empty()) {
        std::ofstream os(out_path);
        if (!os) {
            err << "error: cannot open " << out_path << " for writing\n";
            return kUsage;
        }
        write_matrix(os, code.gen);
    }
    out << code.n << " " << code.k << " " << code.goppa_lb << " " << code.degree << "\n";
    int status = kOk;
    if (check_dual) {
        const auto dual = build_code(curve, code.dual);
        const bool orthogonal = code.gen.rows() == 0 || dual.gen.rows() == 0 || mul_transpose(code.gen, dual.gen).is_zero();
        const bool ranks = code.k + dual.k == cp.n;
        out << "dual " << spec_csv(code.dual) << " k=" << dual.k << " orthogonal=" << (orthogonal ? "yes" : "no")
            << " rank_sum=" << code.k + dual.k << "\n";
        if (!orthogonal || !ranks) status = kVerifyFailed;
    }
    if (min_dist) {
        if (code.k == 0) {
            out << "d=none (zero code)\n";
        } else {
            try {
                const auto d = min_distance_bruteforce(code, budget);
                out << "d=" << d << "\n";
                if (d < code.goppa_lb) status = kVerifyFailed;
            } catch (const BudgetExceeded&) {
                out << "d>=" << std::max<std::int64_t>(code.goppa_lb, 1) << " (exhaustive search over budget)\n";
            }
        }
    }
    return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multi-point AG codes on generalized Hermitian curves", "ghcode"};
    app.require_subcommand(1);
    app.fallthrough();
    bool verbose = false;
    app.add_flag("--verbose", verbose, "Timing and progress on stderr");

    CurveArgs ca;
    SpecArgs sa;
    std::string out_path;
    bool prime = false, check_dual = false, min_dist = false;
    std::uint64_t budget = kDefaultMinDistanceBudget;
    std::uint64_t seed = 1;
    std::string sweep_text;

    auto* params = app.add_subcommand("params", "Curve constants");
    add_curve(params, ca);
    auto* points = app.add_subcommand("points", "Affine rational points as CSV");
    add_curve(points, ca);
    auto* omega = app.add_subcommand("omega", "Lattice basis set Omega as CSV");
    add_curve(omega, ca);
    add_spec(omega, sa);
    omega->add_flag("--prime", prime, "Emit the transformed set Omega' (x^i y^j u^k)");
    auto* code = app.add_subcommand("code", "Build C_{v,r,s,t}");
    add_curve(code, ca);
    add_spec(code, sa);
    code->add_option("--out", out_path, "Write the generator matrix to this file");
    code->add_flag("--check-dual", check_dual, "Also build the dual code and check orthogonality");
    code->add_flag("--min-dist", min_dist, "Exhaustive minimum distance");
    code->add_option("--budget", budget, "Codeword budget for --min-dist");
    auto* dual = app.add_subcommand("dual", "Dual divisor and its dimension");
    add_curve(dual, ca);
    add_spec(dual, sa);
    auto* table = app.add_subcommand("table", "Parameter table over a range of v");
    add_curve(table, ca);
    add_spec(table, sa, false);
    table->add_option("--sweep", sweep_text, "vmin:vmax:step")->required();
    auto* gv = app.add_subcommand("gv-compare", "Rate against the asymptotic GV bound");
    add_curve(gv, ca);
    add_spec(gv, sa, false);
    gv->add_option("--sweep", sweep_text, "vmin:vmax:step")->required();
    auto* verify = app.add_subcommand("verify", "Run the invariant battery");
    add_curve(verify, ca);
    verify->add_option("--seed", seed, "Seed for the randomized sections");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    const auto report_time = [&](const char* what) {
        if (!verbose) return;
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        err << what << ": " << dt.count() << " s\n";
    };

    try {
        std::optional<Curve> curve_storage;
        if (params->parsed() || points->parsed() || code->parsed() || dual->parsed() || verify->parsed()) {
            curve_storage.emplace(ca.q, ca.c);
        }
        if (params->parsed()) {
            print_params(*curve_storage, out);
            return kOk;
        }
        if (points->parsed()) {
            const auto& pts = curve_storage->points();
            out << "alpha,beta\n";
            for (const auto& p : pts) out << p.alpha.value << "," << p.beta.value << "\n";
            report_time("points");
            return kOk;
        }
        if (omega->parsed()) {
            const auto cp = make_curve_params(ca.q, ca.c);
            auto set = omega_enumerate(cp, sa.spec());
            if (prime) set = omega_prime_transform(cp, set);
            out << "i,j,k\n";
            for (const auto& t : set.points) out << t.i << "," << t.j << "," << t.k << "\n";
            return kOk;
        }
        if (code->parsed()) {
            const int st = cmd_code(*curve_storage, sa.spec(), out_path, check_dual, min_dist, budget, out, err);
            report_time("code");
            return st;
        }
        if (dual->parsed()) {
            const auto& cp = curve_storage->params();
            const auto d = dual_spec(cp, sa.spec());
            out << "v,r,s,t,degG,k\n";
            out << spec_csv(d) << "," << degree(cp, d) << "," << code_dimension(cp, d) << "\n";
            return kOk;
        }
        if (table->parsed() || gv->parsed()) {
            const auto cp = make_curve_params(ca.q, ca.c);
            const auto sw = parse_sweep(sweep_text);
            std::vector<DivisorSpec> specs;
            for (std::int64_t v = sw.lo; v <= sw.hi; v += sw.step) specs.push_back({v, sa.r, sa.s, sa.t});
            if (table->parsed()) {
                out << "v,r,s,t,degG,k,goppa_lb,dual_v,dual_r,dual_s,dual_t\n";
                for (const auto& s : specs) {
                    const auto deg = degree(cp, s);
                    out << spec_csv(s) << "," << deg << "," << code_dimension(cp, s) << "," << cp.n - deg << ","
                        << spec_csv(dual_spec(cp, s)) << "\n";
                }
            } else {
                out << "degG,k,goppa_lb,delta,rate,gv_rate,beats_gv\n";
                for (const auto& row : gv_compare(cp, specs)) {
                    out << row.degree << "," << row.k << "," << row.goppa_lb << "," << fixed6(row.delta) << ","
                        << fixed6(row.rate) << "," << fixed6(row.gv_rate) << "," << to_string(row.status) << "\n";
                }
                err << "note: beats_gv=na marks delta outside (0,(l-1)/l); there gv_rate is 1 for delta<=0 and 0"
                       " past the entropy peak\n";
            }
            return kOk;
        }
        if (verify->parsed()) {
            VerifyOptions opt;
            opt.seed = seed;
            int failed = 0;
            const auto results = run_verification(*curve_storage, opt, [&](const SectionResult& r) {
                out << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
                out.flush();
                report_time(r.name.c_str());
                failed += !r.pass;
            });
            out << "verify: " << results.size() - failed << "/" << results.size() << " sections passed\n";
            return failed == 0 ? kOk : kVerifyFailed;
        }
    } catch (const CurveError& e) {
        err << "error: unsupported curve: " << e.what() << "\n";
        return kUsage;
    } catch (const FieldError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kUsage;
}

}  // namespace ghcode::cli
