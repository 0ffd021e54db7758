#pragma once

// Brute-force counterparts of the closed forms and fast paths. These scan
// explicit boxes and test defining conditions directly; they share no
// shortcuts with the code paths they check.

#include <cstdint>
#include <vector>

#include "ghcode/curve.hpp"
#include "ghcode/lattice.hpp"

namespace ghcode::oracle {

/// Triple loop over a box that contains Omega with room to spare.
std::vector<Triple> omega_bruteforce(const CurveParams& cp, const DivisorSpec& spec);

/// Number of beta with Tr_c(beta / alpha^(q^b)) = 1, using the full trace.
std::int64_t betas_with_full_trace_one(const Curve& curve, Element alpha);

/// mu in F_(q^c) with mu^(q-1) = -1.
std::int64_t count_mu_solutions(const Curve& curve);

std::int64_t psi_bruteforce(const CurveParams& cp, std::int64_t m, std::int64_t s, std::int64_t t);

std::int64_t segment_bruteforce(const CurveParams& cp, SegmentKind kind, std::int64_t alpha);

/// #Phi_t = #{(m, l): 0 <= m < q^(b-1), 0 < l, q^(b-1) l <= t + N_c m}, counted point by point.
std::int64_t phi_bruteforce(const CurveParams& cp, std::int64_t t);

struct LatticeScan {
    std::int64_t interior = 0;
    std::int64_t boundary = 0;
};

/// Classifies every lattice point of the bounding box as interior, boundary or outside.
LatticeScan polygon_scan(const LatticePolygon& poly);

}  // namespace ghcode::oracle
