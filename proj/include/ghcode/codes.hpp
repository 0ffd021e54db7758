#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ghcode/curve.hpp"
#include "ghcode/lattice.hpp"
#include "ghcode/matrix.hpp"

namespace ghcode {

class CodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// u = a^(-1) - y^(q^a)/x - y^q/x^(q^a) at a point. Throws CodeError if it vanishes;
/// u is nonzero at every affine point of the curve.
Element eval_u(const Curve& curve, const AffinePoint& pt);

/// alpha^i beta^j u^k at every point, in the given order.
std::vector<Element> eval_row(const Curve& curve, const Triple& monomial, std::span<const AffinePoint> points);

/// Caches discrete logs of x, y, u over the curve's points so that monomial
/// rows cost one table lookup per entry.
class Evaluator {
public:
    explicit Evaluator(const Curve& curve);

    std::size_t length() const { return n_; }
    /// Row of x^i y^j u^k.
    std::vector<Element> row_xyu(const Triple& t) const;
    /// Row of x^i z^j w^k with z = y/x^(q^b), w = y^(q^a)/(x u).
    std::vector<Element> row_xzw(const Triple& t) const;

    Matrix matrix_xyu(std::span<const Triple> triples) const;

private:
    std::vector<Element> row_from_logs(std::int64_t ei, std::int64_t ej, std::int64_t ek,
                                       const std::vector<std::int64_t>& li,
                                       const std::vector<std::int64_t>& lj,
                                       const std::vector<std::int64_t>& lk) const;

    const Curve* curve_;
    std::size_t n_;
    std::vector<std::int64_t> log_x_, log_y_, log_u_, log_z_, log_w_;
};

DivisorSpec dual_spec(const CurveParams& cp, const DivisorSpec& spec);

enum class CodeKind {
    Zero,           // deg G < 0
    Evaluation,     // 0 <= deg G < n, rows from Omega'
    DualNullspace,  // n <= deg G <= R, nullspace of the dual generator
    Full,           // deg G > R
};

const char* to_string(CodeKind kind);

struct LinearCode {
    DivisorSpec spec;
    DivisorSpec dual;
    CodeKind kind = CodeKind::Zero;
    std::int64_t n = 0;
    std::int64_t degree = 0;
    std::int64_t k = 0;
    std::int64_t goppa_lb = 0;  // n - deg G
    Matrix gen;
    std::vector<Triple> basis;  // Omega' triples when kind == Evaluation

    bool degenerate() const { return kind == CodeKind::Zero || kind == CodeKind::Full; }
};

/// Dimension from the lattice counts alone; no matrices are built.
std::int64_t code_dimension(const CurveParams& cp, const DivisorSpec& spec);

/// Rows x^i y^j u^k for every (i, j, k) in Omega'(spec), i.e. the evaluation of a
/// basis of L(G). Its rank is dim C_L(D, G) for any spec.
Matrix evaluation_matrix(const Curve& curve, const DivisorSpec& spec);

LinearCode build_code(const Curve& curve, const DivisorSpec& spec);

/// Coordinate scaling that carries C(spec) onto C(reduced spec): the values of
/// 1/f at the points of D, where f = x^((q^c-1)lambda-r) z^(q^a lambda-sigma) w^(-lambda)
/// satisfies div(f) = reduced G - G.
std::vector<Element> equivalence_witness(const Curve& curve, const DivisorSpec& spec);

constexpr std::uint64_t kDefaultMinDistanceBudget = std::uint64_t{1} << 22;

/// Exact minimum weight over all nonzero codewords. Throws BudgetExceeded when
/// (q^c)^k exceeds the budget and CodeError for the zero code.
std::int64_t min_distance_bruteforce(const LinearCode& code, std::uint64_t budget = kDefaultMinDistanceBudget);

/// l-ary entropy H_l(delta) for 0 <= delta <= 1.
double q_ary_entropy(double l, double delta);

enum class GvStatus { Beats, Below, OutOfDomain };

const char* to_string(GvStatus status);

struct GvRow {
    DivisorSpec spec;
    std::int64_t degree = 0;
    std::int64_t k = 0;
    std::int64_t goppa_lb = 0;
    double delta = 0;
    double rate = 0;
    double gv_rate = 0;
    GvStatus status = GvStatus::OutOfDomain;
};

/// Asymptotic GV rate 1 - H_l(delta) with l = q^c: 1 for delta <= 0 and 0 for
/// delta >= (l-1)/l. Rows with delta outside (0, (l-1)/l) are OutOfDomain.
std::vector<GvRow> gv_compare(const CurveParams& cp, std::span<const DivisorSpec> specs);

}  // namespace ghcode
