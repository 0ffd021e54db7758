#include "ghcode/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace ghcode {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t pos_mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

std::int64_t degree(const CurveParams& cp, const DivisorSpec& spec) {
    return spec.v + (cp.degP - 1) * spec.r + cp.degQ * spec.s + cp.degV * spec.t;
}

namespace {

// Coefficients of the V-valuation of x^i z^j w^k.
struct VCoefficients {
    std::int64_t ci;
    std::int64_t cj;
    std::int64_t ck;
};

VCoefficients omega_v_coefficients(const CurveParams& cp) {
    return {cp.pow(cp.a - 1) * cp.N(cp.b), cp.pow(cp.b - 1) * cp.N(cp.c), (cp.pow(cp.a - 1) - 1) * cp.N(cp.c)};
}

}  // namespace

bool in_omega(const CurveParams& cp, const DivisorSpec& spec, const Triple& x) {
    const std::int64_t m = cp.unit_order();
    const std::int64_t p0 = x.i + m * x.k;
    const std::int64_t qv = -cp.pow(cp.a) * x.i + m * x.j;
    const auto vc = omega_v_coefficients(cp);
    return x.i >= -spec.v && p0 >= -spec.r && p0 < -spec.r + m && qv >= -spec.s && qv < m - spec.s &&
           vc.ci * x.i - vc.cj * x.j - vc.ck * x.k + spec.t >= 0;
}

bool in_omega_prime(const CurveParams& cp, const DivisorSpec& spec, const Triple& x) {
    const std::int64_t m = cp.unit_order();
    const std::int64_t qb = cp.pow(cp.b);
    const std::int64_t p0 = x.i + qb * x.j;
    const std::int64_t qv = -cp.pow(cp.a) * x.i - x.j;
    const std::int64_t vv = cp.pow(cp.a - 1) * cp.N(cp.b) * x.i - cp.pow(cp.b - 1) * cp.N(cp.a) * x.j - cp.N(cp.c) * x.k;
    return p0 + m * x.k >= -spec.v && p0 >= -spec.r && p0 < -spec.r + m && qv >= -spec.s && qv < -spec.s + m &&
           vv + spec.t >= 0;
}

std::int64_t omega_i_max(const CurveParams& cp, const DivisorSpec& spec) {
    const std::int64_t qc = cp.pow(cp.c);
    return (cp.q - 1) * spec.t + cp.degQ * std::abs(spec.s) + (cp.degP - 1) * (std::abs(spec.r) + qc) + qc;
}

namespace {

bool omega_member_at(const CurveParams& cp, const DivisorSpec& spec, std::int64_t i, Triple& out) {
    const std::int64_t m = cp.unit_order();
    const std::int64_t j = ceil_div(cp.pow(cp.a) * i - spec.s, m);
    const std::int64_t k = ceil_div(-i - spec.r, m);
    const auto vc = omega_v_coefficients(cp);
    if (vc.ci * i - vc.cj * j - vc.ck * k + spec.t < 0) return false;
    out = {i, j, k};
    return true;
}

}  // namespace

OmegaSet omega_enumerate(const CurveParams& cp, const DivisorSpec& spec) {
    OmegaSet os{OmegaVariant::Omega, spec, {}};
    const std::int64_t hi = omega_i_max(cp, spec);
    Triple x;
    for (std::int64_t i = -spec.v; i <= hi; ++i) {
        if (omega_member_at(cp, spec, i, x)) os.points.push_back(x);
    }
    return os;
}

bool omega_guard_clear(const CurveParams& cp, const DivisorSpec& spec) {
    const std::int64_t hi = omega_i_max(cp, spec);
    Triple x;
    for (std::int64_t i = std::max(hi + 1, -spec.v); i <= hi + cp.pow(cp.c); ++i) {
        if (omega_member_at(cp, spec, i, x)) return false;
    }
    return true;
}

Reduction omega_reduce(const CurveParams& cp, const DivisorSpec& spec) {
    const std::int64_t m = cp.unit_order();
    const std::int64_t nc = cp.N(cp.c);
    const std::int64_t shifted_s = spec.s + cp.pow(cp.a) * spec.r;
    Reduction red;
    red.sigma = floor_div(shifted_s, m);
    const std::int64_t s_hat = shifted_s - red.sigma * m;
    const std::int64_t t_prime =
        spec.t - spec.r * cp.pow(cp.a - 1) * cp.N(cp.b) + red.sigma * cp.pow(cp.b - 1) * nc;
    red.lambda = floor_div(t_prime, nc);
    const std::int64_t t_hat = t_prime - red.lambda * nc;
    red.spec_hat = {spec.v + m * red.lambda - spec.r, 0, s_hat, t_hat};
    return red;
}

std::int64_t omega_count_formula(const CurveParams& cp, const DivisorSpec& spec) {
    const auto red = omega_reduce(cp, spec);
    if (red.spec_hat.v < cp.v0) {
        throw ThresholdError("reduced v = " + std::to_string(red.spec_hat.v) + " is below v_0 = " +
                             std::to_string(cp.v0) + "; enumerate instead");
    }
    return 1 - cp.g + degree(cp, spec);
}

Triple to_omega_prime(const CurveParams& cp, const Triple& x) {
    return {x.i - cp.pow(cp.b) * x.j - x.k, x.j + cp.pow(cp.a) * x.k, -x.k};
}

Triple from_omega_prime(const CurveParams& cp, const Triple& x) {
    const std::int64_t k = -x.k;
    const std::int64_t j = x.j - cp.pow(cp.a) * k;
    return {x.i + cp.pow(cp.b) * j + k, j, k};
}

OmegaSet omega_prime_transform(const CurveParams& cp, const OmegaSet& os) {
    if (os.variant != OmegaVariant::Omega) throw std::invalid_argument("input is already an Omega' set");
    OmegaSet out{OmegaVariant::OmegaPrime, os.spec, {}};
    out.points.reserve(os.points.size());
    for (const auto& x : os.points) out.points.push_back(to_omega_prime(cp, x));
    return out;
}

namespace {

using Pt = std::pair<std::int64_t, std::int64_t>;

std::int64_t cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

int sign(std::int64_t x) { return (x > 0) - (x < 0); }

bool on_segment(const Pt& a, const Pt& b, const Pt& p) {
    return std::min(a.first, b.first) <= p.first && p.first <= std::max(a.first, b.first) &&
           std::min(a.second, b.second) <= p.second && p.second <= std::max(a.second, b.second);
}

bool segments_intersect(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    const int d1 = sign(cross(c, d, a));
    const int d2 = sign(cross(c, d, b));
    const int d3 = sign(cross(a, b, c));
    const int d4 = sign(cross(a, b, d));
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    return (d1 == 0 && on_segment(c, d, a)) || (d2 == 0 && on_segment(c, d, b)) ||
           (d3 == 0 && on_segment(a, b, c)) || (d4 == 0 && on_segment(a, b, d));
}

}  // namespace

bool is_simple(const LatticePolygon& poly) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (v[i] == v[j]) return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Pt& a = v[i];
        const Pt& b = v[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            const Pt& c = v[j];
            const Pt& d = v[(j + 1) % n];
            const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if (adjacent) {
                // Adjacent edges may meet only at their common vertex.
                const Pt& shared = (j == i + 1) ? b : a;
                const Pt& other_first = (j == i + 1) ? a : b;
                const Pt& other_second = (j == i + 1) ? d : c;
                if (cross(shared, other_first, other_second) == 0) {
                    const std::int64_t dot = (other_first.first - shared.first) * (other_second.first - shared.first) +
                                             (other_first.second - shared.second) * (other_second.second - shared.second);
                    if (dot > 0) return false;
                }
                continue;
            }
            if (segments_intersect(a, b, c, d)) return false;
        }
    }
    return true;
}

PickCount pick_count(const LatticePolygon& poly) {
    if (!is_simple(poly)) throw std::invalid_argument("polygon is degenerate or not simple");
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    std::int64_t area2 = 0;
    std::int64_t boundary = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Pt& a = v[i];
        const Pt& b = v[(i + 1) % n];
        area2 += a.first * b.second - a.second * b.first;
        boundary += std::gcd(std::abs(b.first - a.first), std::abs(b.second - a.second));
    }
    area2 = std::abs(area2);
    if (area2 == 0) throw std::invalid_argument("polygon has zero area");
    return {area2, boundary, (area2 - boundary + 2) / 2};
}

std::int64_t segment_counts(const CurveParams& cp, SegmentKind kind, std::int64_t alpha) {
    switch (kind) {
        case SegmentKind::L1:
            return pos_mod(alpha, cp.pow(cp.b - 1)) == 0 ? cp.q - 1 : 0;
        case SegmentKind::L2:
        case SegmentKind::L3:
            return 1;
    }
    return 0;
}

std::int64_t psi_count(const CurveParams& cp, std::int64_t m, std::int64_t s, std::int64_t t) {
    const std::int64_t qb1 = cp.pow(cp.b - 1);
    if (m < 0 || m >= qb1) {
        throw std::out_of_range("m = " + std::to_string(m) + " outside [0, " + std::to_string(qb1) + ")");
    }
    if (s < 0 || t < 0) throw std::invalid_argument("psi_count needs s, t >= 0");
    const std::int64_t qc = cp.pow(cp.c);
    return (qc + 1) * cp.q / 2 + floor_div(t + cp.N(cp.c) * m, qb1) * (cp.q - 1) + s;
}

}  // namespace ghcode
