#include "ghcode/codes.hpp"

#include <cmath>
#include <functional>
#include <string>

namespace ghcode {

Element eval_u(const Curve& curve, const AffinePoint& pt) {
    const Field& f = curve.field();
    const auto& cp = curve.params();
    if (pt.alpha.is_zero() || pt.beta.is_zero()) throw CodeError("point has a zero coordinate");
    const Element a_inv = f.int_inverse_embedded(cp.a);
    const Element t1 = f.div(f.frobenius_q(pt.beta, cp.a), pt.alpha);
    const Element t2 = f.div(f.frobenius_q(pt.beta, 1), f.frobenius_q(pt.alpha, cp.a));
    const Element u = f.sub(f.sub(a_inv, t1), t2);
    if (u.is_zero()) {
        throw CodeError("u vanishes at (" + std::to_string(pt.alpha.value) + ", " + std::to_string(pt.beta.value) +
                        "); the point is not on the curve");
    }
    return u;
}

std::vector<Element> eval_row(const Curve& curve, const Triple& monomial, std::span<const AffinePoint> points) {
    const Field& f = curve.field();
    std::vector<Element> out;
    out.reserve(points.size());
    for (const auto& pt : points) {
        Element v = f.mul(f.pow(pt.alpha, monomial.i), f.pow(pt.beta, monomial.j));
        if (monomial.k != 0) v = f.mul(v, f.pow(eval_u(curve, pt), monomial.k));
        out.push_back(v);
    }
    return out;
}

Evaluator::Evaluator(const Curve& curve) : curve_(&curve), n_(curve.points().size()) {
    const Field& f = curve.field();
    if (!f.has_tables()) throw CodeError("evaluation needs a field small enough for log tables");
    const auto& cp = curve.params();
    const std::int64_t ord = cp.unit_order();
    const std::int64_t qa = cp.pow(cp.a);
    const std::int64_t qb = cp.pow(cp.b);
    for (const auto& pt : curve.points()) {
        const std::int64_t lx = f.log(pt.alpha);
        const std::int64_t ly = f.log(pt.beta);
        const std::int64_t lu = f.log(eval_u(curve, pt));
        log_x_.push_back(lx);
        log_y_.push_back(ly);
        log_u_.push_back(lu);
        log_z_.push_back(pos_mod(ly - (qb % ord) * lx, ord));
        log_w_.push_back(pos_mod((qa % ord) * ly - lx - lu, ord));
    }
}

std::vector<Element> Evaluator::row_from_logs(std::int64_t ei, std::int64_t ej, std::int64_t ek,
                                              const std::vector<std::int64_t>& li,
                                              const std::vector<std::int64_t>& lj,
                                              const std::vector<std::int64_t>& lk) const {
    const Field& f = curve_->field();
    const std::int64_t ord = static_cast<std::int64_t>(f.size()) - 1;
    const std::int64_t ri = pos_mod(ei, ord);
    const std::int64_t rj = pos_mod(ej, ord);
    const std::int64_t rk = pos_mod(ek, ord);
    std::vector<Element> out(n_);
    for (std::size_t p = 0; p < n_; ++p) {
        const std::int64_t l = (ri * li[p] + rj * lj[p] + rk * lk[p]) % ord;
        out[p] = f.exp(static_cast<std::uint32_t>(l));
    }
    return out;
}

std::vector<Element> Evaluator::row_xyu(const Triple& t) const {
    return row_from_logs(t.i, t.j, t.k, log_x_, log_y_, log_u_);
}

std::vector<Element> Evaluator::row_xzw(const Triple& t) const {
    return row_from_logs(t.i, t.j, t.k, log_x_, log_z_, log_w_);
}

Matrix Evaluator::matrix_xyu(std::span<const Triple> triples) const {
    Matrix out(curve_->field_ptr(), 0, n_);
    for (const auto& t : triples) out.append_row(row_xyu(t));
    return out;
}

DivisorSpec dual_spec(const CurveParams& cp, const DivisorSpec& spec) {
    return {-1 - spec.v, -1 - spec.r, cp.A - spec.s, cp.B - spec.t};
}

const char* to_string(CodeKind kind) {
    switch (kind) {
        case CodeKind::Zero: return "zero";
        case CodeKind::Evaluation: return "evaluation";
        case CodeKind::DualNullspace: return "dual-nullspace";
        case CodeKind::Full: return "full";
    }
    return "?";
}

std::int64_t code_dimension(const CurveParams& cp, const DivisorSpec& spec) {
    const std::int64_t deg = degree(cp, spec);
    if (deg < 0) return 0;
    if (deg < cp.n) return static_cast<std::int64_t>(omega_enumerate(cp, spec).size());
    if (deg <= cp.R) return cp.n - static_cast<std::int64_t>(omega_enumerate(cp, dual_spec(cp, spec)).size());
    return cp.n;
}

Matrix evaluation_matrix(const Curve& curve, const DivisorSpec& spec) {
    const auto& cp = curve.params();
    const auto prime = omega_prime_transform(cp, omega_enumerate(cp, spec));
    return Evaluator(curve).matrix_xyu(prime.points);
}

LinearCode build_code(const Curve& curve, const DivisorSpec& spec) {
    const auto& cp = curve.params();
    const std::int64_t deg = degree(cp, spec);
    const std::size_t n = static_cast<std::size_t>(cp.n);
    LinearCode code{spec, dual_spec(cp, spec), CodeKind::Zero, cp.n, deg, 0, cp.n - deg,
                    Matrix(curve.field_ptr(), 0, n), {}};
    if (deg < 0) return code;
    if (deg > cp.R) {
        code.kind = CodeKind::Full;
        code.gen = Matrix(curve.field_ptr(), n, n);
        for (std::size_t i = 0; i < n; ++i) code.gen.at(i, i) = curve.field().one();
        code.k = cp.n;
        return code;
    }
    const Evaluator ev(curve);
    if (deg < cp.n) {
        code.kind = CodeKind::Evaluation;
        code.basis = omega_prime_transform(cp, omega_enumerate(cp, spec)).points;
        code.gen = ev.matrix_xyu(code.basis);
    } else {
        code.kind = CodeKind::DualNullspace;
        const auto dual_basis = omega_prime_transform(cp, omega_enumerate(cp, code.dual)).points;
        code.gen = nullspace(ev.matrix_xyu(dual_basis));
    }
    code.k = static_cast<std::int64_t>(rank(code.gen));
    return code;
}

std::vector<Element> equivalence_witness(const Curve& curve, const DivisorSpec& spec) {
    const auto& cp = curve.params();
    const auto red = omega_reduce(cp, spec);
    const Triple inverse_f{spec.r - cp.unit_order() * red.lambda, red.sigma - cp.pow(cp.a) * red.lambda, red.lambda};
    auto out = Evaluator(curve).row_xzw(inverse_f);
    for (const auto& x : out) {
        if (x.is_zero()) throw CodeError("equivalence witness has a zero entry");
    }
    return out;
}

std::int64_t min_distance_bruteforce(const LinearCode& code, std::uint64_t budget) {
    const Field& f = code.gen.field();
    const Matrix basis = rref(code.gen);
    const std::size_t k = basis.rows();
    const std::size_t n = basis.cols();
    if (k == 0) throw CodeError("the zero code has no minimum distance");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > budget / f.size()) {
            throw BudgetExceeded("exhaustive sweep over " + std::to_string(f.size()) + "^" + std::to_string(k) +
                                 " codewords exceeds the budget of " + std::to_string(budget));
        }
        total *= f.size();
    }
    if (total > budget) throw BudgetExceeded("codeword count exceeds the budget");

    // scaled[r][x] = x * row r
    std::vector<std::vector<std::vector<Element>>> scaled(k, std::vector<std::vector<Element>>(f.size()));
    for (std::size_t r = 0; r < k; ++r) {
        for (std::uint32_t x = 0; x < f.size(); ++x) {
            auto& v = scaled[r][x];
            v.resize(n);
            for (std::size_t c = 0; c < n; ++c) v[c] = f.mul(Element{x}, basis.at(r, c));
        }
    }
    std::int64_t best = static_cast<std::int64_t>(n);
    std::vector<std::vector<Element>> buf(k + 1, std::vector<Element>(n));
    std::function<void(std::size_t, const std::vector<Element>&)> sweep = [&](std::size_t level,
                                                                            const std::vector<Element>& acc) {
        if (level == k) {
            std::int64_t w = 0;
            for (const auto& x : acc) w += !x.is_zero();
            best = std::min(best, w);
            return;
        }
        sweep(level + 1, acc);
        auto& next = buf[level];
        for (std::uint32_t x = 1; x < f.size(); ++x) {
            const auto& add = scaled[level][x];
            for (std::size_t c = 0; c < n; ++c) next[c] = f.add(acc[c], add[c]);
            sweep(level + 1, next);
        }
    };
    // Projective sweep: the first nonzero message coordinate is 1.
    for (std::size_t lead = 0; lead < k; ++lead) sweep(lead + 1, scaled[lead][1]);
    return best;
}

double q_ary_entropy(double l, double delta) {
    if (delta <= 0) return 0;
    const double ln_l = std::log(l);
    double h = delta * std::log(l - 1) / ln_l - delta * std::log(delta) / ln_l;
    if (delta < 1) h -= (1 - delta) * std::log(1 - delta) / ln_l;
    return h;
}

const char* to_string(GvStatus status) {
    switch (status) {
        case GvStatus::Beats: return "1";
        case GvStatus::Below: return "0";
        case GvStatus::OutOfDomain: return "na";
    }
    return "?";
}

std::vector<GvRow> gv_compare(const CurveParams& cp, std::span<const DivisorSpec> specs) {
    const double l = static_cast<double>(cp.pow(cp.c));
    const double n = static_cast<double>(cp.n);
    const double peak = (l - 1) / l;
    std::vector<GvRow> rows;
    rows.reserve(specs.size());
    for (const auto& spec : specs) {
        GvRow row;
        row.spec = spec;
        row.degree = degree(cp, spec);
        row.k = code_dimension(cp, spec);
        row.goppa_lb = cp.n - row.degree;
        row.delta = static_cast<double>(row.goppa_lb) / n;
        row.rate = static_cast<double>(row.k) / n;
        if (row.delta <= 0) row.gv_rate = 1;
        else if (row.delta >= peak) row.gv_rate = 0;
        else row.gv_rate = 1 - q_ary_entropy(l, row.delta);
        const bool in_domain = row.delta > 0 && row.delta < peak;
        row.status = !in_domain ? GvStatus::OutOfDomain : (row.rate > row.gv_rate ? GvStatus::Beats : GvStatus::Below);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace ghcode
