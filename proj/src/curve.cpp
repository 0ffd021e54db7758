#include "ghcode/curve.hpp"

#include <cstdlib>
#include <limits>
#include <string>

namespace ghcode {

std::int64_t ipow(std::int64_t base, unsigned exp) {
    std::int64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && std::abs(r) > std::numeric_limits<std::int64_t>::max() / std::abs(base)) {
            throw std::overflow_error("integer power overflows 64 bits");
        }
        r *= base;
    }
    return r;
}

std::pair<unsigned, unsigned> split_prime_power(std::int64_t q) {
    if (q < 2) throw CurveError("q = " + std::to_string(q) + " is not a prime power");
    std::int64_t p = 2;
    while (q % p != 0) ++p;
    std::int64_t rest = q;
    unsigned e = 0;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw CurveError("q = " + std::to_string(q) + " is not a prime power");
    return {static_cast<unsigned>(p), e};
}

CurveParams make_curve_params(std::int64_t q, unsigned c) {
    const auto [p, e] = split_prime_power(q);
    if (c < 3 || c % 2 == 0) {
        throw CurveError("c = " + std::to_string(c) + " must be odd and at least 3");
    }
    CurveParams cp;
    cp.q = q;
    cp.p = p;
    cp.e = e;
    cp.c = c;
    cp.b = (c - 1) / 2;
    cp.a = cp.b + 1;
    if (cp.a % p == 0) {
        throw CurveError("p = " + std::to_string(p) + " divides a = " + std::to_string(cp.a) +
                         ": the construction requires p not dividing a (rational place P_1); "
                         "the symmetric case built on Q_1 is not supported");
    }
    const std::int64_t qc = cp.pow(c);
    const std::int64_t qa1 = cp.pow(cp.a - 1);
    const std::int64_t qb1 = cp.pow(cp.b - 1);
    const std::int64_t twice_g = (qc - 2) * (qa1 + qb1 - 2) + (qc - q);
    if (twice_g % 2 != 0) throw CurveError("genus formula is not integral");
    cp.g = twice_g / 2;
    cp.n = cp.pow(c - 1) * (qc - 1);
    cp.degP = qa1;
    cp.degQ = qb1;
    cp.degV = q - 1;
    cp.v0 = (qc - 1) * (cp.pow(cp.b) + qb1 - 1);
    cp.A = cp.pow(c + cp.a) + qc - cp.pow(cp.a) - 2;
    cp.B = (qa1 - 1) * cp.N(c) - 1;
    cp.R = cp.n + 2 * cp.g - 2;
    return cp;
}

Curve::Curve(std::int64_t q, unsigned c, std::uint64_t max_field)
    : params_(make_curve_params(q, c)), field_(Field::create(params_.p, params_.e, c, max_field)) {
    const Field& f = *field_;
    points_.reserve(static_cast<std::size_t>(params_.n));
    for (std::uint32_t x = 1; x < f.size(); ++x) {
        for (std::uint32_t y = 1; y < f.size(); ++y) {
            if (curve_eq_holds(Element{x}, Element{y})) points_.push_back({Element{x}, Element{y}});
        }
    }
}

bool Curve::curve_eq_holds(Element alpha, Element beta) const {
    if (alpha.is_zero() || beta.is_zero()) throw CurveError("curve points need nonzero coordinates");
    const Field& f = *field_;
    const Element first = f.div(f.frobenius_q(beta, params_.a), alpha);
    const Element second = f.div(beta, f.frobenius_q(alpha, params_.b));
    return f.add(f.tr_partial(first, params_.b), f.tr_partial(second, params_.a)) == f.one();
}

SpecialPlaces Curve::special_places() const {
    SpecialPlaces sp;
    sp.p1_exists = params_.a % params_.p != 0;
    if (sp.p1_exists) sp.gamma = field_->int_inverse_embedded(params_.a);
    sp.q1_exists = params_.b % params_.p != 0;
    sp.v_rational_count = params_.p == 2 ? params_.q - 1 : 0;
    return sp;
}

}  // namespace ghcode
