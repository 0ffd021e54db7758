#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ghcode/curve.hpp"

namespace ghcode {

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);
/// a mod b in [0, b) for b > 0.
std::int64_t pos_mod(std::int64_t a, std::int64_t b);

/// The divisor v P_1 + r P_0 + s Q + t V.
struct DivisorSpec {
    std::int64_t v = 0;
    std::int64_t r = 0;
    std::int64_t s = 0;
    std::int64_t t = 0;

    auto operator<=>(const DivisorSpec&) const = default;
};

std::int64_t degree(const CurveParams& cp, const DivisorSpec& spec);

struct Triple {
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::int64_t k = 0;

    auto operator<=>(const Triple&) const = default;
};

enum class OmegaVariant { Omega, OmegaPrime };

/// Lattice points indexing a Riemann-Roch basis: x^i z^j w^k for Omega,
/// x^i y^j u^k for OmegaPrime.
struct OmegaSet {
    OmegaVariant variant = OmegaVariant::Omega;
    DivisorSpec spec;
    std::vector<Triple> points;

    std::size_t size() const { return points.size(); }
};

/// Membership in Omega_{v,r,s,t} by its four defining inequalities.
bool in_omega(const CurveParams& cp, const DivisorSpec& spec, const Triple& t);
/// Membership in Omega'_{v,r,s,t}.
bool in_omega_prime(const CurveParams& cp, const DivisorSpec& spec, const Triple& t);

/// Upper bound on i for members of Omega; nothing lies above it.
std::int64_t omega_i_max(const CurveParams& cp, const DivisorSpec& spec);

/// All of Omega_{v,r,s,t} in increasing i. For each i >= -v, j and k are forced
/// by the two window inequalities and the V-inequality is tested.
OmegaSet omega_enumerate(const CurveParams& cp, const DivisorSpec& spec);

/// True when no member of Omega has i in (i_max, i_max + q^c].
bool omega_guard_clear(const CurveParams& cp, const DivisorSpec& spec);

struct Reduction {
    DivisorSpec spec_hat;  // r = 0, 0 <= s < q^c-1, 0 <= t < N_c
    std::int64_t lambda = 0;
    std::int64_t sigma = 0;
};

/// Canonical representative of the linear equivalence class of the divisor.
/// The equivalence is realized by x^((q^c-1)lambda - r) z^(q^a lambda - sigma) w^(-lambda).
Reduction omega_reduce(const CurveParams& cp, const DivisorSpec& spec);

class ThresholdError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// 1 - g + deg(spec), valid once the reduced v reaches v_0. Throws ThresholdError below it.
std::int64_t omega_count_formula(const CurveParams& cp, const DivisorSpec& spec);

/// (i, j, k) -> (i - q^b j - k, j + q^a k, -k), turning x^i z^j w^k into x^i' y^j' u^k'.
Triple to_omega_prime(const CurveParams& cp, const Triple& t);
Triple from_omega_prime(const CurveParams& cp, const Triple& t);

OmegaSet omega_prime_transform(const CurveParams& cp, const OmegaSet& os);

struct LatticePolygon {
    std::vector<std::pair<std::int64_t, std::int64_t>> vertices;
};

struct PickCount {
    std::int64_t area2 = 0;  // twice the area
    std::int64_t boundary = 0;
    std::int64_t interior = 0;
};

bool is_simple(const LatticePolygon& poly);

/// Shoelace area, gcd boundary count, and interior count from S = I + M/2 - 1.
/// Throws std::invalid_argument on degenerate or self-intersecting input.
PickCount pick_count(const LatticePolygon& poly);

enum class SegmentKind { L1, L2, L3 };

/// Closed-form sizes of the segment sets L^(1)_alpha, L^(2)_alpha, L^(3)_alpha.
std::int64_t segment_counts(const CurveParams& cp, SegmentKind kind, std::int64_t alpha);

/// (q^c+1)q/2 + floor((t + N_c m)/q^(b-1)) (q-1) + s for 0 <= m < q^(b-1), s, t >= 0.
std::int64_t psi_count(const CurveParams& cp, std::int64_t m, std::int64_t s, std::int64_t t);

}  // namespace ghcode
