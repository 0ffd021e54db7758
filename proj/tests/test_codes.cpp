#include <cmath>

#include "doctest.h"
#include "ghcode/codes.hpp"
#include "ghcode/verify.hpp"

using namespace ghcode;

namespace {

const Curve& curve25() {
    static const Curve c(2, 5);
    return c;
}

const Curve& curve33() {
    static const Curve c(3, 3);
    return c;
}

double entropy(double l, double d) {
    return d * std::log(l - 1) / std::log(l) - d * std::log(d) / std::log(l) - (1 - d) * std::log(1 - d) / std::log(l);
}

}  // namespace

TEST_SUITE("codes") {

TEST_CASE("u never vanishes on the curve") {
    for (const Curve* c : {&curve25(), &curve33()}) {
        for (const auto& p : c->points()) CHECK_FALSE(eval_u(*c, p).is_zero());
    }
}

TEST_CASE("u vanishes at some off-curve pair") {
    const Curve& c = curve33();
    const Field& f = c.field();
    std::int64_t zeros = 0;
    for (std::uint32_t a = 1; a < f.size(); ++a) {
        for (std::uint32_t b = 1; b < f.size(); ++b) {
            try {
                (void)eval_u(c, {Element{a}, Element{b}});
            } catch (const CodeError&) {
                ++zeros;
                CHECK_FALSE(c.curve_eq_holds(Element{a}, Element{b}));
            }
        }
    }
    CHECK(zeros > 0);
}

TEST_CASE("monomial rows") {
    const Curve& c = curve33();
    const auto& pts = c.points();
    const auto ones = eval_row(c, {0, 0, 0}, pts);
    for (const auto& x : ones) CHECK(x == c.field().one());
    const auto xs = eval_row(c, {1, 0, 0}, pts);
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(xs[i] == pts[i].alpha);
    const auto pos = eval_row(c, {3, -2, 1}, pts);
    const auto neg = eval_row(c, {-3, 2, -1}, pts);
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(c.field().mul(pos[i], neg[i]) == c.field().one());
    const Evaluator ev(c);
    CHECK(ev.row_xyu({3, -2, 1}) == pos);
    CHECK(ev.row_xyu({-7, 4, 2}) == eval_row(c, {-7, 4, 2}, pts));
}

TEST_CASE("flagship code over F_32") {
    const auto code = build_code(curve25(), {324, 0, 0, 0});
    CHECK(code.kind == CodeKind::Evaluation);
    CHECK(code.n == 496);
    CHECK(code.k == 250);
    CHECK(code.goppa_lb == 172);
    CHECK(code.gen.rows() == 250);
}

TEST_CASE("small codes on (3,3)") {
    const auto c0 = build_code(curve33(), {0, 0, 0, 0});
    CHECK(c0.k == 1);
    CHECK(c0.goppa_lb == 234);
    for (std::size_t j = 0; j < 234; ++j) CHECK(c0.gen.at(0, j) == curve33().field().one());
    CHECK(min_distance_bruteforce(c0) == 234);
    CHECK(build_code(curve33(), {100, 0, 0, 0}).k == 64);
    CHECK(code_dimension(curve33().params(), {100, 0, 0, 0}) == 64);
}

TEST_CASE("degenerate codes") {
    const auto& cp = curve33().params();
    const auto zero = build_code(curve33(), {-1, 0, 0, 0});
    CHECK(zero.kind == CodeKind::Zero);
    CHECK(zero.k == 0);
    CHECK(zero.degenerate());
    CHECK_THROWS_AS(min_distance_bruteforce(zero), CodeError);
    const auto full = build_code(curve33(), {cp.R + 1, 0, 0, 0});
    CHECK(full.kind == CodeKind::Full);
    CHECK(full.k == cp.n);
    CHECK(code_dimension(cp, {cp.R + 1, 0, 0, 0}) == cp.n);
    const auto upper = build_code(curve33(), {cp.n + 5, 0, 0, 0});
    CHECK(upper.kind == CodeKind::DualNullspace);
    CHECK(upper.k == code_dimension(cp, {cp.n + 5, 0, 0, 0}));
}

TEST_CASE("dual specs") {
    const auto& cp25 = curve25().params();
    CHECK(dual_spec(cp25, {0, 0, 0, 0}) == DivisorSpec{-1, -1, 278, 92});
    CHECK(dual_spec(cp25, {324, 0, 0, 0}) == DivisorSpec{-325, -1, 278, 92});
    CHECK(dual_spec(curve33().params(), {0, 0, 0, 0}) == DivisorSpec{-1, -1, 259, 25});
    SpecSampler sampler(cp25, 3);
    for (int i = 0; i < 50; ++i) {
        const auto s = sampler.any();
        CHECK(dual_spec(cp25, dual_spec(cp25, s)) == s);
        CHECK(degree(cp25, s) + degree(cp25, dual_spec(cp25, s)) == cp25.R);
    }
}

TEST_CASE("dual codes are orthogonal") {
    const auto& cp = curve33().params();
    SpecSampler sampler(cp, 4);
    for (int i = 0; i < 10; ++i) {
        const auto spec = sampler.with_degree(2 * cp.g - 1, cp.n - 1);
        const auto a = build_code(curve33(), spec);
        const auto b = build_code(curve33(), dual_spec(cp, spec));
        CHECK(mul_transpose(a.gen, b.gen).is_zero());
        CHECK(a.k + b.k == cp.n);
    }
    const auto low = build_code(curve33(), {60, 0, 0, 0});
    const auto high = build_code(curve33(), dual_spec(cp, {60, 0, 0, 0}));
    CHECK(high.kind == CodeKind::DualNullspace);
    CHECK(mul_transpose(low.gen, high.gen).is_zero());
    CHECK(low.k + high.k == cp.n);
}

TEST_CASE("upper branch matches the evaluation map") {
    const auto& cp = curve33().params();
    SpecSampler sampler(cp, 5);
    for (int i = 0; i < 5; ++i) {
        const auto spec = sampler.with_degree(cp.n, cp.R);
        const auto code = build_code(curve33(), spec);
        const auto eval = evaluation_matrix(curve33(), spec);
        CHECK(rank(eval) == static_cast<std::size_t>(code.k));
        CHECK(row_space_equal(eval, code.gen));
    }
}

TEST_CASE("equivalence witness") {
    const auto ones = equivalence_witness(curve33(), {35, 0, 13, 2});
    for (const auto& x : ones) CHECK(x == curve33().field().one());
    const DivisorSpec spec{10, 1, 30, 5};
    const auto w = equivalence_witness(curve33(), spec);
    for (const auto& x : w) CHECK_FALSE(x.is_zero());
    const auto g = build_code(curve33(), spec);
    const auto h = build_code(curve33(), {35, 0, 13, 2});
    CHECK(row_space_equal(scale_columns(g.gen, w), h.gen));
    CHECK(g.k == h.k);
    CHECK_FALSE(row_space_equal(g.gen, h.gen));
}

TEST_CASE("minimum distance respects the Goppa bound") {
    const auto& cp = curve33().params();
    for (const auto& spec : small_canonical_specs(cp, 2)) {
        const auto code = build_code(curve33(), spec);
        const auto d = min_distance_bruteforce(code);
        CHECK(d >= code.goppa_lb);
        CHECK(d <= cp.n);
    }
    const auto big = build_code(curve33(), {100, 0, 0, 0});
    CHECK_THROWS_AS(min_distance_bruteforce(big), BudgetExceeded);
    CHECK_THROWS_AS(min_distance_bruteforce(build_code(curve33(), {40, 0, 0, 0}), 100), BudgetExceeded);
}

TEST_CASE("q-ary entropy") {
    CHECK(q_ary_entropy(32, 0) == 0);
    CHECK(q_ary_entropy(2, 0.5) == doctest::Approx(1.0));
    CHECK(q_ary_entropy(32, 31.0 / 32) == doctest::Approx(1.0));
    for (double d : {0.1, 0.25, 0.5, 0.9}) CHECK(q_ary_entropy(27, d) == doctest::Approx(entropy(27, d)));
}

TEST_CASE("GV comparison") {
    const auto& cp = curve25().params();
    const std::vector<DivisorSpec> specs{{324, 0, 0, 0}, {0, 0, 0, 0}, {-1, 0, 0, 0}, {600, 0, 0, 0}};
    const auto rows = gv_compare(cp, specs);
    REQUIRE(rows.size() == 4);
    const double gv = 1 - entropy(32, 172.0 / 496);
    CHECK(rows[0].rate == doctest::Approx(250.0 / 496));
    CHECK(rows[0].gv_rate == doctest::Approx(gv));
    CHECK(rows[0].gv_rate == doctest::Approx(0.470172).epsilon(1e-5));
    CHECK(rows[0].status == GvStatus::Beats);
    CHECK(rows[0].rate - rows[0].gv_rate > 0.03);
    CHECK(rows[1].delta == 1.0);
    CHECK(rows[1].status == GvStatus::OutOfDomain);
    CHECK(rows[2].k == 0);
    CHECK(rows[2].status == GvStatus::OutOfDomain);
    CHECK(rows[3].delta < 0);
    CHECK(rows[3].gv_rate == 1.0);
    CHECK(rows[3].status == GvStatus::OutOfDomain);
    CHECK(std::string(to_string(GvStatus::Beats)) == "1");
    CHECK(std::string(to_string(GvStatus::Below)) == "0");
    CHECK(std::string(to_string(GvStatus::OutOfDomain)) == "na");
}

TEST_CASE("dimension from counts equals generator rank") {
    const auto& cp = curve33().params();
    for (std::int64_t v = -3; v <= cp.R + 3; v += 17) {
        const DivisorSpec spec{v, 0, 2, 1};
        CHECK(build_code(curve33(), spec).k == code_dimension(cp, spec));
    }
}

}  // TEST_SUITE
