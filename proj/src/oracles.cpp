#include "ghcode/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace ghcode::oracle {

std::vector<Triple> omega_bruteforce(const CurveParams& cp, const DivisorSpec& spec) {
    const std::int64_t m = cp.unit_order();
    const std::int64_t qa = cp.pow(cp.a);
    const std::int64_t qc = cp.pow(cp.c);
    // Box: i from -v past both upper bounds, j and k padded around their window values.
    const std::int64_t exact = cp.degQ * spec.s + (cp.degP - 1) * spec.r + cp.degV * spec.t;
    const std::int64_t i_lo = -spec.v;
    const std::int64_t i_hi = std::max(exact, omega_i_max(cp, spec)) + 2 * qc;
    std::vector<Triple> out;
    if (i_hi < i_lo) return out;
    const std::int64_t j_lo = floor_div(qa * i_lo - spec.s, m) - 2;
    const std::int64_t j_hi = floor_div(qa * i_hi - spec.s, m) + 2;
    const std::int64_t k_lo = floor_div(-spec.r - i_hi, m) - 2;
    const std::int64_t k_hi = floor_div(-spec.r - i_lo, m) + 2;
    for (std::int64_t i = i_lo; i <= i_hi; ++i) {
        for (std::int64_t j = j_lo; j <= j_hi; ++j) {
            for (std::int64_t k = k_lo; k <= k_hi; ++k) {
                const Triple x{i, j, k};
                if (in_omega(cp, spec, x)) out.push_back(x);
            }
        }
    }
    return out;
}

std::int64_t betas_with_full_trace_one(const Curve& curve, Element alpha) {
    const Field& f = curve.field();
    const auto& cp = curve.params();
    Element denom = alpha;
    for (unsigned i = 0; i < cp.b; ++i) denom = f.pow(denom, cp.q);
    std::int64_t count = 0;
    for (std::uint32_t y = 1; y < f.size(); ++y) {
        Element z = f.div(Element{y}, denom);
        Element trace = f.zero();
        for (unsigned i = 0; i < cp.c; ++i) {
            trace = f.add(trace, z);
            z = f.pow(z, cp.q);
        }
        count += trace == f.one();
    }
    return count;
}

std::int64_t count_mu_solutions(const Curve& curve) {
    const Field& f = curve.field();
    const Element minus_one = f.neg(f.one());
    std::int64_t count = 0;
    for (std::uint32_t x = 1; x < f.size(); ++x) {
        Element acc = f.one();
        for (std::int64_t i = 0; i < curve.params().q - 1; ++i) acc = f.mul(acc, Element{x});
        count += acc == minus_one;
    }
    return count;
}

std::int64_t psi_bruteforce(const CurveParams& cp, std::int64_t m, std::int64_t s, std::int64_t t) {
    const std::int64_t mod = cp.unit_order();
    const std::int64_t qa = cp.pow(cp.a);
    const std::int64_t c1 = cp.pow(cp.a - 1) * cp.N(cp.b);
    const std::int64_t c2 = cp.pow(cp.b - 1) * cp.N(cp.c);
    const std::int64_t nc = cp.N(cp.c);
    // Box in j: the Q-inequality bounds j from below, the V-inequality from above.
    const std::int64_t j_lo = floor_div(-s - mod * cp.q, mod) - 2;
    const std::int64_t j_hi = floor_div(c1 * (mod - 1) + nc * m + t, c2) + 2;
    std::int64_t count = 0;
    for (std::int64_t i = 0; i < mod; ++i) {
        for (std::int64_t j = j_lo; j <= j_hi; ++j) {
            if (-t <= c1 * i - c2 * j + nc * m && -s - mod * cp.q <= -qa * i + mod * j) ++count;
        }
    }
    return count;
}

std::int64_t segment_bruteforce(const CurveParams& cp, SegmentKind kind, std::int64_t alpha) {
    const std::int64_t mod = cp.unit_order();
    std::int64_t count = 0;
    switch (kind) {
        case SegmentKind::L1: {
            const std::int64_t c1 = cp.pow(cp.a - 1) * cp.N(cp.b);
            const std::int64_t c2 = cp.pow(cp.b - 1) * cp.N(cp.c);
            for (std::int64_t i = 0; i < mod; ++i) count += pos_mod(c1 * i + alpha, c2) == 0;
            break;
        }
        case SegmentKind::L2: {
            const std::int64_t qa = cp.pow(cp.a);
            for (std::int64_t i = 0; i < mod; ++i) count += pos_mod(qa * i - mod * cp.q - alpha, mod) == 0;
            break;
        }
        case SegmentKind::L3: {
            const std::int64_t qb1 = cp.pow(cp.b - 1);
            for (std::int64_t m = 0; m < qb1; ++m) count += pos_mod(alpha + cp.N(cp.c) * m, qb1) == 0;
            break;
        }
    }
    return count;
}

std::int64_t phi_bruteforce(const CurveParams& cp, std::int64_t t) {
    const std::int64_t qb1 = cp.pow(cp.b - 1);
    std::int64_t count = 0;
    for (std::int64_t m = 0; m < qb1; ++m) {
        for (std::int64_t l = 1; qb1 * l <= t + cp.N(cp.c) * m; ++l) ++count;
    }
    return count;
}

namespace {

using Pt = std::pair<std::int64_t, std::int64_t>;

bool on_edge(const Pt& a, const Pt& b, std::int64_t x, std::int64_t y) {
    const std::int64_t cr = (b.first - a.first) * (y - a.second) - (b.second - a.second) * (x - a.first);
    return cr == 0 && std::min(a.first, b.first) <= x && x <= std::max(a.first, b.first) &&
           std::min(a.second, b.second) <= y && y <= std::max(a.second, b.second);
}

// Even-odd rule with a ray towards +x; the half-open rule on y avoids double counting vertices.
bool strictly_inside(const std::vector<Pt>& v, std::int64_t x, std::int64_t y) {
    bool inside = false;
    for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
        const auto& a = v[i];
        const auto& b = v[j];
        if ((a.second > y) != (b.second > y)) {
            // x-coordinate of the crossing compared exactly: x < a.x + (y - a.y)(b.x - a.x)/(b.y - a.y)
            const std::int64_t num = (y - a.second) * (b.first - a.first);
            const std::int64_t den = b.second - a.second;
            const std::int64_t lhs = (x - a.first) * den;
            if (den > 0 ? lhs < num : lhs > num) inside = !inside;
        }
    }
    return inside;
}

}  // namespace

LatticeScan polygon_scan(const LatticePolygon& poly) {
    const auto& v = poly.vertices;
    std::int64_t x_lo = std::numeric_limits<std::int64_t>::max(), x_hi = std::numeric_limits<std::int64_t>::min();
    std::int64_t y_lo = x_lo, y_hi = x_hi;
    for (const auto& [x, y] : v) {
        x_lo = std::min(x_lo, x);
        x_hi = std::max(x_hi, x);
        y_lo = std::min(y_lo, y);
        y_hi = std::max(y_hi, y);
    }
    LatticeScan scan;
    for (std::int64_t x = x_lo; x <= x_hi; ++x) {
        for (std::int64_t y = y_lo; y <= y_hi; ++y) {
            bool boundary = false;
            for (std::size_t i = 0; i < v.size() && !boundary; ++i) boundary = on_edge(v[i], v[(i + 1) % v.size()], x, y);
            if (boundary) ++scan.boundary;
            else if (strictly_inside(v, x, y)) ++scan.interior;
        }
    }
    return scan;
}

}  // namespace ghcode::oracle
