#include "ghcode/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <set>
#include <sstream>

#include "ghcode/oracles.hpp"

namespace ghcode {

std::int64_t SpecSampler::uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

DivisorSpec SpecSampler::any() {
    return {uniform(-20, 80), uniform(-3, 3), uniform(-30, 60), uniform(-15, 30)};
}

DivisorSpec SpecSampler::above_threshold() {
    DivisorSpec spec{0, uniform(-4, 4), uniform(-40, 80), uniform(-20, 40)};
    const auto red = omega_reduce(cp_, spec);
    spec.v = cp_.v0 - red.spec_hat.v + uniform(0, 3 * cp_.unit_order());
    return spec;
}

DivisorSpec SpecSampler::with_degree(std::int64_t lo, std::int64_t hi) {
    DivisorSpec spec{0, uniform(-3, 3), uniform(-20, 40), uniform(-10, 20)};
    spec.v = uniform(lo, hi) - degree(cp_, spec);
    return spec;
}

DivisorSpec SpecSampler::non_canonical_with_degree(std::int64_t lo, std::int64_t hi) {
    for (;;) {
        DivisorSpec spec = with_degree(lo, hi);
        if (omega_reduce(cp_, spec).spec_hat != spec) return spec;
    }
}

std::vector<std::pair<std::int64_t, std::int64_t>> random_simple_polygon(std::mt19937_64& rng, int vertices,
                                                                        std::int64_t radius) {
    std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
    std::uniform_int_distribution<std::int64_t> rad(1, radius);
    for (;;) {
        std::vector<std::pair<double, std::pair<std::int64_t, std::int64_t>>> pts;
        for (int i = 0; i < vertices; ++i) {
            const double th = angle(rng);
            const double r = static_cast<double>(rad(rng));
            const std::pair<std::int64_t, std::int64_t> p{std::llround(r * std::cos(th)), std::llround(r * std::sin(th))};
            if (p.first == 0 && p.second == 0) continue;
            pts.push_back({std::atan2(static_cast<double>(p.second), static_cast<double>(p.first)), p});
        }
        std::sort(pts.begin(), pts.end());
        LatticePolygon poly;
        for (const auto& [th, p] : pts) poly.vertices.push_back(p);
        if (poly.vertices.size() >= 3 && is_simple(poly)) {
            std::int64_t area2 = 0;
            for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
                const auto& a = poly.vertices[i];
                const auto& b = poly.vertices[(i + 1) % poly.vertices.size()];
                area2 += a.first * b.second - a.second * b.first;
            }
            if (area2 != 0) return poly.vertices;
        }
    }
}

std::vector<DivisorSpec> small_canonical_specs(const CurveParams& cp, std::int64_t max_k) {
    std::vector<DivisorSpec> out;
    std::set<std::vector<Triple>> seen;
    for (std::int64_t s = 0; s < cp.unit_order(); ++s) {
        for (std::int64_t t = 0; t < cp.N(cp.c); ++t) {
            DivisorSpec spec{-(cp.degQ * s + cp.degV * t), 0, s, t};
            for (; degree(cp, spec) < cp.n; ++spec.v) {
                auto om = omega_enumerate(cp, spec);
                if (static_cast<std::int64_t>(om.size()) > max_k) break;
                if (om.size() == 0) continue;
                if (seen.insert(om.points).second) out.push_back(spec);
            }
        }
    }
    return out;
}

namespace {

std::string spec_str(const DivisorSpec& s) {
    std::ostringstream os;
    os << "(" << s.v << "," << s.r << "," << s.s << "," << s.t << ")";
    return os.str();
}

struct Section {
    std::string name;
    std::function<std::string()> body;
};

class Failure : public std::exception {
public:
    explicit Failure(std::string msg) : msg_(std::move(msg)) {}
    const char* what() const noexcept override { return msg_.c_str(); }

private:
    std::string msg_;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

std::string check_field(const Curve& curve) {
    const Field& f = curve.field();
    const auto& cp = curve.params();
    const std::uint32_t sz = f.size();
    const std::uint32_t stride = sz <= 1024 ? 1 : sz / 997;
    std::int64_t checks = 0;
    for (std::uint32_t x = 0; x < sz; x += stride) {
        const Element ex{x};
        if (x != 0) {
            require(f.mul(ex, f.inv(ex)) == f.one(), "x * inv(x) != 1 for x = " + std::to_string(x));
            require(f.pow(ex, sz - 1) == f.one(), "x^(|F|-1) != 1 for x = " + std::to_string(x));
        }
        require(f.frobenius_q(ex, cp.c) == ex, "Frobenius^c is not the identity");
        const Element tr = f.tr_partial(ex, cp.c);
        require(f.frobenius_q(tr, 1) == tr, "Tr_c(x) is not in F_q");
        for (std::uint32_t y = 0; y < sz; y += stride) {
            const Element ey{y};
            require(f.mul(ex, ey) == f.mul(ey, ex), "multiplication not commutative");
            require(f.frobenius_q(f.mul(ex, ey), 1) == f.mul(f.frobenius_q(ex, 1), f.frobenius_q(ey, 1)),
                    "Frobenius not multiplicative");
            require(f.frobenius_q(f.add(ex, ey), 1) == f.add(f.frobenius_q(ex, 1), f.frobenius_q(ey, 1)),
                    "Frobenius not additive");
            require(f.sub(f.add(ex, ey), ey) == ex, "add/sub mismatch");
            const Element z{(x * 7 + y * 13 + 1) % sz};
            require(f.mul(ex, f.add(ey, z)) == f.add(f.mul(ex, ey), f.mul(ex, z)), "distributivity fails");
            ++checks;
        }
    }
    return std::to_string(checks) + " element pairs";
}

std::string check_census(const Curve& curve) {
    const auto& cp = curve.params();
    const auto& pts = curve.points();
    require(static_cast<std::int64_t>(pts.size()) == cp.n,
            "point count " + std::to_string(pts.size()) + " != " + std::to_string(cp.n));
    require(std::is_sorted(pts.begin(), pts.end()), "points are not in canonical order");
    std::vector<std::int64_t> per_alpha(curve.field().size(), 0);
    for (const auto& p : pts) ++per_alpha[p.alpha.value];
    const std::int64_t expected = cp.pow(cp.c - 1);
    for (std::uint32_t a = 1; a < curve.field().size(); ++a) {
        require(per_alpha[a] == expected, "alpha " + std::to_string(a) + " has " + std::to_string(per_alpha[a]) +
                                              " points, expected " + std::to_string(expected));
        require(oracle::betas_with_full_trace_one(curve, Element{a}) == expected, "full-trace oracle disagrees");
    }
    return std::to_string(pts.size()) + " points, " + std::to_string(expected) + " per alpha";
}

std::string check_places(const Curve& curve) {
    const auto sp = curve.special_places();
    const auto& cp = curve.params();
    const Field& f = curve.field();
    require(sp.p1_exists, "P_1 must exist when p does not divide a");
    require(f.tr_partial(sp.gamma, cp.a) == f.one(), "Tr_a(gamma) != 1");
    require(f.mul(f.from_integer(cp.a), sp.gamma) == f.one(), "gamma is not a^-1");
    require(oracle::count_mu_solutions(curve) == sp.v_rational_count, "mu^(q-1) = -1 count disagrees");
    return "P1 gamma=" + std::to_string(sp.gamma.value) + " Q1=" + (sp.q1_exists ? "yes" : "no") +
           " V=" + std::to_string(sp.v_rational_count);
}

std::string check_omega_oracle(const Curve& curve, const VerifyOptions& opt) {
    const auto& cp = curve.params();
    SpecSampler sampler(cp, opt.seed);
    std::vector<DivisorSpec> specs{{0, 0, 0, 0}, {-1, 0, 0, 0}, {-5, 0, 0, 0}};
    for (int i = 0; i < opt.omega_oracle_specs; ++i) specs.push_back(sampler.any());
    for (const auto& spec : specs) {
        const auto fast = omega_enumerate(cp, spec);
        const auto slow = oracle::omega_bruteforce(cp, spec);
        require(fast.points == slow, "enumeration differs from brute force for " + spec_str(spec));
        require(omega_guard_clear(cp, spec), "guard window not empty for " + spec_str(spec));
        for (std::size_t i = 1; i < fast.points.size(); ++i) {
            require(fast.points[i - 1].i < fast.points[i].i, "repeated i in Omega");
        }
    }
    require(omega_enumerate(cp, {0, 0, 0, 0}).points == std::vector<Triple>{{0, 0, 0}}, "Omega(0) != {(0,0,0)}");
    return std::to_string(specs.size()) + " specs";
}

std::string check_counting(const Curve& curve, const VerifyOptions& opt) {
    const auto& cp = curve.params();
    SpecSampler sampler(cp, opt.seed + 1);
    for (int i = 0; i < opt.counting_specs; ++i) {
        const auto spec = sampler.above_threshold();
        const auto count = static_cast<std::int64_t>(omega_enumerate(cp, spec).size());
        require(count == omega_count_formula(cp, spec), "count theorem fails for " + spec_str(spec));
        require(count == 1 - cp.g + degree(cp, spec), "count != 1-g+deg for " + spec_str(spec));
    }
    for (int i = 0; i < opt.reduction_specs; ++i) {
        const auto spec = sampler.any();
        const auto red = omega_reduce(cp, spec);
        require(omega_enumerate(cp, spec).size() == omega_enumerate(cp, red.spec_hat).size(),
                "reduction changes |Omega| for " + spec_str(spec));
        require(degree(cp, spec) == degree(cp, red.spec_hat), "reduction changes degree");
        require(red.spec_hat.r == 0 && red.spec_hat.s >= 0 && red.spec_hat.s < cp.unit_order() &&
                    red.spec_hat.t >= 0 && red.spec_hat.t < cp.N(cp.c),
                "reduced spec not canonical");
    }
    return std::to_string(opt.counting_specs) + " threshold specs, " + std::to_string(opt.reduction_specs) +
           " reductions";
}

std::string check_lemmas(const Curve& curve, const VerifyOptions& opt) {
    const auto& cp = curve.params();
    const std::int64_t qb1 = cp.pow(cp.b - 1);
    std::int64_t n_psi = 0;
    for (std::int64_t m = 0; m < qb1; ++m) {
        for (std::int64_t s = 0; s <= opt.psi_st_max; ++s) {
            for (std::int64_t t = 0; t <= opt.psi_st_max; ++t) {
                require(psi_count(cp, m, s, t) == oracle::psi_bruteforce(cp, m, s, t),
                        "Psi count mismatch at m=" + std::to_string(m) + " s=" + std::to_string(s) +
                            " t=" + std::to_string(t));
                ++n_psi;
            }
        }
    }
    for (std::int64_t al = -opt.segment_alpha_max; al <= opt.segment_alpha_max; ++al) {
        for (auto kind : {SegmentKind::L1, SegmentKind::L2, SegmentKind::L3}) {
            require(segment_counts(cp, kind, al) == oracle::segment_bruteforce(cp, kind, al),
                    "segment count mismatch at alpha=" + std::to_string(al));
        }
    }
    const std::int64_t nc = cp.N(cp.c);
    for (std::int64_t t = 0; t < nc; ++t) {
        std::int64_t sum = 0;
        for (std::int64_t m = 0; m < qb1; ++m) sum += floor_div(t + nc * m, qb1);
        require(sum == (nc - 1) * (qb1 - 1) / 2 + t, "Phi identity fails at t=" + std::to_string(t));
        require(sum == oracle::phi_bruteforce(cp, t), "Phi lattice count disagrees at t=" + std::to_string(t));
    }
    std::mt19937_64 rng(opt.seed + 2);
    for (int i = 0; i < opt.pick_polygons; ++i) {
        LatticePolygon poly{random_simple_polygon(rng, 3 + static_cast<int>(rng() % 8), 12)};
        const auto pc = pick_count(poly);
        const auto scan = oracle::polygon_scan(poly);
        require(pc.boundary == scan.boundary && pc.interior == scan.interior, "Pick identity fails");
    }
    // Triangle O, A, B from the Psi count.
    const LatticePolygon tri{{{0, 0}, {0, -cp.q}, {cp.unit_order(), cp.pow(cp.b + 1) - cp.q}}};
    const auto pc = pick_count(tri);
    const auto tri_scan = oracle::polygon_scan(tri);
    require(pc.area2 == cp.q * cp.unit_order() && pc.boundary == tri_scan.boundary &&
                pc.interior == tri_scan.interior,
            "triangle OAB counts");
    return std::to_string(n_psi) + " Psi cases, " + std::to_string(opt.pick_polygons) + " polygons";
}

std::string check_basis_change(const Curve& curve, const VerifyOptions& opt) {
    const auto& cp = curve.params();
    const Evaluator ev(curve);
    SpecSampler sampler(cp, opt.seed + 3);
    std::int64_t rows = 0;
    for (int i = 0; i < 10; ++i) {
        const auto spec = sampler.with_degree(0, cp.n - 1);
        const auto om = omega_enumerate(cp, spec);
        const auto prime = omega_prime_transform(cp, om);
        for (std::size_t r = 0; r < om.size(); ++r) {
            require(in_omega_prime(cp, spec, prime.points[r]), "transformed triple violates Omega' inequalities");
            require(from_omega_prime(cp, prime.points[r]) == om.points[r], "inverse map is not the identity");
            require(ev.row_xyu(prime.points[r]) == ev.row_xzw(om.points[r]), "x^i y^j u^k != x^i z^j w^k");
            ++rows;
        }
    }
    return std::to_string(rows) + " rows";
}

std::string check_dimension(const Curve& curve, const VerifyOptions& opt) {
    const auto& cp = curve.params();
    SpecSampler sampler(cp, opt.seed + 4);
    for (int i = 0; i < opt.dimension_specs; ++i) {
        const auto spec = sampler.with_degree(0, cp.n - 1);
        const auto code = build_code(curve, spec);
        require(code.k == static_cast<std::int64_t>(omega_enumerate(cp, spec).size()),
                "rank != |Omega| for " + spec_str(spec));
        require(code.k == static_cast<std::int64_t>(code.gen.rows()), "Omega' rows not independent");
    }
    for (int i = 0; i < opt.dimension_upper_specs; ++i) {
        const auto spec = sampler.with_degree(cp.n, cp.R);
        const auto expected = cp.n - static_cast<std::int64_t>(omega_enumerate(cp, dual_spec(cp, spec)).size());
        const auto eval = evaluation_matrix(curve, spec);
        require(static_cast<std::int64_t>(rank(eval)) == expected,
                "rank of L(G) evaluation != n - |Omega(dual)| for " + spec_str(spec));
        const auto code = build_code(curve, spec);
        require(code.k == expected, "nullspace generator has the wrong rank for " + spec_str(spec));
        require(row_space_equal(code.gen, eval), "nullspace code != evaluation code for " + spec_str(spec));
    }
    return std::to_string(opt.dimension_specs) + " + " + std::to_string(opt.dimension_upper_specs) + " specs";
}

std::string check_duality(const Curve& curve, const VerifyOptions& opt) {
    const auto& cp = curve.params();
    SpecSampler sampler(cp, opt.seed + 5);
    for (int i = 0; i < opt.duality_pairs; ++i) {
        // Both sides built from monomials: 2g-2 < deg G < n.
        const auto spec = sampler.with_degree(2 * cp.g - 1, cp.n - 1);
        const auto dual = dual_spec(cp, spec);
        require(dual_spec(cp, dual) == spec, "dual is not an involution");
        const auto g1 = build_code(curve, spec);
        const auto g2 = build_code(curve, dual);
        require(mul_transpose(g1.gen, g2.gen).is_zero(), "G * H^T != 0 for " + spec_str(spec));
        require(g1.k + g2.k == cp.n, "ranks do not sum to n for " + spec_str(spec));
    }
    return std::to_string(opt.duality_pairs) + " pairs";
}

std::string check_witness(const Curve& curve, const VerifyOptions& opt) {
    const auto& cp = curve.params();
    SpecSampler sampler(cp, opt.seed + 6);
    for (int i = 0; i < opt.witness_specs; ++i) {
        const auto spec = sampler.non_canonical_with_degree(0, cp.n - 1);
        const auto red = omega_reduce(cp, spec);
        const auto w = equivalence_witness(curve, spec);
        const auto g = build_code(curve, spec);
        const auto h = build_code(curve, red.spec_hat);
        require(row_space_equal(scale_columns(g.gen, w), h.gen), "witness fails for " + spec_str(spec));
    }
    const auto ones = equivalence_witness(curve, {5, 0, 1, 1});
    require(std::all_of(ones.begin(), ones.end(), [](Element x) { return x.value == 1; }),
            "canonical witness is not all ones");
    return std::to_string(opt.witness_specs) + " specs";
}

std::string check_min_distance(const Curve& curve, const VerifyOptions&) {
    const auto& cp = curve.params();
    const auto specs = small_canonical_specs(cp, 2);
    for (const auto& spec : specs) {
        const auto code = build_code(curve, spec);
        const auto d = min_distance_bruteforce(code);
        require(d >= code.goppa_lb && d <= cp.n, "Goppa bound violated for " + spec_str(spec));
    }
    const auto d0 = min_distance_bruteforce(build_code(curve, {0, 0, 0, 0}));
    require(d0 == cp.n, "constant code does not have d = n");
    return std::to_string(specs.size()) + " codes with k <= 2";
}

std::string check_monotone(const Curve& curve, const VerifyOptions& opt) {
    const auto& cp = curve.params();
    SpecSampler sampler(cp, opt.seed + 7);
    for (int i = 0; i < 5; ++i) {
        DivisorSpec spec = sampler.any();
        spec.v = -degree(cp, {0, spec.r, spec.s, spec.t}) - 5;
        std::int64_t prev = 0;
        for (; degree(cp, spec) <= cp.R + 5; spec.v += 3) {
            const auto k = code_dimension(cp, spec);
            require(k >= prev, "dimension decreases in v at " + spec_str(spec));
            prev = k;
        }
        require(prev == cp.n, "dimension does not reach n");
    }
    return "5 sweeps";
}

}  // namespace

std::vector<SectionResult> run_verification(const Curve& curve, const VerifyOptions& opt,
                                            const std::function<void(const SectionResult&)>& on_section) {
    const std::vector<Section> sections{
        {"field-axioms", [&] { return check_field(curve); }},
        {"curve-census", [&] { return check_census(curve); }},
        {"special-places", [&] { return check_places(curve); }},
        {"omega-oracle", [&] { return check_omega_oracle(curve, opt); }},
        {"counting-theorem", [&] { return check_counting(curve, opt); }},
        {"lemma-oracles", [&] { return check_lemmas(curve, opt); }},
        {"basis-change", [&] { return check_basis_change(curve, opt); }},
        {"dimension-theorem", [&] { return check_dimension(curve, opt); }},
        {"duality", [&] { return check_duality(curve, opt); }},
        {"equivalence-witness", [&] { return check_witness(curve, opt); }},
        {"min-distance", [&] { return check_min_distance(curve, opt); }},
        {"monotonicity", [&] { return check_monotone(curve, opt); }},
    };
    std::vector<SectionResult> results;
    for (const auto& sec : sections) {
        SectionResult res{sec.name, false, ""};
        try {
            res.detail = sec.body();
            res.pass = true;
        } catch (const std::exception& ex) {
            res.detail = ex.what();
        }
        if (on_section) on_section(res);
        results.push_back(res);
    }
    return results;
}

}  // namespace ghcode
