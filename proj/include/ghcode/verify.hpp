#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ghcode/codes.hpp"
#include "ghcode/curve.hpp"
#include "ghcode/lattice.hpp"

namespace ghcode {

/// Random divisor specs for the property batteries. Deterministic for a seed.
class SpecSampler {
public:
    SpecSampler(const CurveParams& cp, std::uint64_t seed) : cp_(cp), rng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    /// Small coefficients, any sign.
    DivisorSpec any();
    /// Reduced v at or above v_0, so the closed-form count applies.
    DivisorSpec above_threshold();
    /// Degree in [lo, hi] with random r, s, t.
    DivisorSpec with_degree(std::int64_t lo, std::int64_t hi);
    /// Degree in [lo, hi] and not already canonical.
    DivisorSpec non_canonical_with_degree(std::int64_t lo, std::int64_t hi);

private:
    const CurveParams& cp_;
    std::mt19937_64 rng_;
};

std::vector<std::pair<std::int64_t, std::int64_t>> random_simple_polygon(std::mt19937_64& rng, int vertices,
                                                                        std::int64_t radius);

struct SectionResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    int omega_oracle_specs = 40;
    int counting_specs = 200;
    int reduction_specs = 200;
    int dimension_specs = 50;
    int dimension_upper_specs = 20;
    int duality_pairs = 50;
    int witness_specs = 50;
    int pick_polygons = 100;
    int psi_st_max = 40;
    int segment_alpha_max = 200;
};

/// Runs the full invariant battery on one curve. Every section reports, even
/// after another has failed.
std::vector<SectionResult> run_verification(const Curve& curve, const VerifyOptions& options,
                                            const std::function<void(const SectionResult&)>& on_section = {});

/// Canonical specs (r = 0, 0 <= s < q^c-1, 0 <= t < N_c) with 0 <= deg G < n and
/// 1 <= k <= max_k, one per distinct Omega set. Every spec is equivalent to one of these.
std::vector<DivisorSpec> small_canonical_specs(const CurveParams& cp, std::int64_t max_k);

}  // namespace ghcode
