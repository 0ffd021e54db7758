#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "ghcode/field.hpp"

namespace ghcode {

class CurveError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Overflow-checked integer power.
std::int64_t ipow(std::int64_t base, unsigned exp);

/**
 * Integer invariants of the generalized Hermitian curve
 *
 *     Tr_b(y^(q^a) / x) + Tr_a(y / x^(q^b)) = 1      over F_(q^c),
 *
 * with c odd, a = b + 1 and a + b = c. Everything the lattice and code layers
 * need, without the field itself.
 */
struct CurveParams {
    std::int64_t q = 0;
    unsigned p = 0;
    unsigned e = 0;
    unsigned c = 0;
    unsigned a = 0;
    unsigned b = 0;
    std::int64_t g = 0;     // genus
    std::int64_t n = 0;     // number of affine rational points = code length
    std::int64_t degP = 0;  // q^(a-1)
    std::int64_t degQ = 0;  // q^(b-1)
    std::int64_t degV = 0;  // q-1
    std::int64_t v0 = 0;    // (q^c-1)(q^b+q^(b-1)-1)
    std::int64_t A = 0;     // q^(c+a)+q^c-q^a-2
    std::int64_t B = 0;     // (q^(a-1)-1)N_c-1
    std::int64_t R = 0;     // n+2g-2

    std::int64_t pow(unsigned k) const { return ipow(q, k); }
    /// q-number (q^k-1)/(q-1).
    std::int64_t N(unsigned k) const { return (pow(k) - 1) / (q - 1); }
    /// q^c - 1, the order of the multiplicative group.
    std::int64_t unit_order() const { return pow(c) - 1; }
};

/// Splits q = p^e; throws CurveError unless q is a prime power >= 2.
std::pair<unsigned, unsigned> split_prime_power(std::int64_t q);

/// Throws CurveError for even c, c < 3, non prime-power q, or p | a.
CurveParams make_curve_params(std::int64_t q, unsigned c);

struct AffinePoint {
    Element alpha;
    Element beta;

    auto operator<=>(const AffinePoint&) const = default;
};

struct SpecialPlaces {
    bool p1_exists = false;
    Element gamma{};  // a^(-1) in the prime field, meaningful when p1_exists
    bool q1_exists = false;
    std::int64_t v_rational_count = 0;
};

/// The curve together with its field and the eagerly enumerated affine points,
/// sorted by (alpha, beta) encoding.
class Curve {
public:
    Curve(std::int64_t q, unsigned c, std::uint64_t max_field = default_max_field_size());

    const CurveParams& params() const { return params_; }
    const Field& field() const { return *field_; }
    std::shared_ptr<const Field> field_ptr() const { return field_; }
    const std::vector<AffinePoint>& points() const { return points_; }

    /// Evaluates the curve equation at a pair of nonzero elements.
    bool curve_eq_holds(Element alpha, Element beta) const;

    SpecialPlaces special_places() const;

private:
    CurveParams params_;
    std::shared_ptr<const Field> field_;
    std::vector<AffinePoint> points_;
};

}  // namespace ghcode
