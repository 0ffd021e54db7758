#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghcode {

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Element of GF(p^m), stored as the base-p integer encoding of its
/// polynomial representative (constant term is the least significant digit).
struct Element {
    std::uint32_t value = 0;

    constexpr Element() = default;
    constexpr explicit Element(std::uint32_t v) : value(v) {}

    constexpr bool is_zero() const { return value == 0; }
    constexpr auto operator<=>(const Element&) const = default;
};

/// Default upper bound on the number of field elements. Overridden by the
/// GHCODE_MAX_FIELD environment variable.
std::uint64_t default_max_field_size();

bool is_prime(std::uint64_t n);

/// Monic polynomials over F_p are given as coefficient lists, constant term
/// first, leading coefficient last.
bool is_irreducible(const std::vector<unsigned>& poly, unsigned p);

/// Lexicographically smallest monic irreducible polynomial of degree m over
/// F_p, scanning the base-p encodings p^m, p^m + 1, ... in increasing order.
std::vector<unsigned> smallest_irreducible(unsigned p, unsigned m);

/**
 * The finite field GF(p^m) with m = e*c, viewed as the degree-c extension of
 * F_q, q = p^e. Immutable after construction.
 *
 * Multiplication goes through exp/log tables when the field has at most 2^20
 * elements and through polynomial multiplication with reduction otherwise.
 */
class Field {
public:
    Field(unsigned p, unsigned e, unsigned c, std::uint64_t max_size = default_max_field_size());

    static std::shared_ptr<const Field> create(unsigned p, unsigned e, unsigned c,
                                               std::uint64_t max_size = default_max_field_size());

    unsigned characteristic() const { return p_; }
    unsigned e() const { return e_; }
    unsigned c() const { return c_; }
    unsigned degree() const { return m_; }
    std::uint64_t q() const { return q_; }
    std::uint32_t size() const { return size_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }
    bool has_tables() const { return !log_.empty(); }

    Element zero() const { return Element{0}; }
    Element one() const { return Element{1}; }
    /// Validated conversion from an integer encoding.
    Element element(std::uint64_t encoding) const;
    /// Image of the integer n under Z -> F_p -> GF(p^m).
    Element from_integer(std::int64_t n) const;

    Element add(Element x, Element y) const;
    Element sub(Element x, Element y) const;
    Element neg(Element x) const;
    Element mul(Element x, Element y) const;
    Element inv(Element x) const;
    Element div(Element x, Element y) const;
    /// x^n for any integer n; negative n requires x != 0. 0^0 = 1.
    Element pow(Element x, std::int64_t n) const;

    /// x^(q^k).
    Element frobenius_q(Element x, std::uint64_t k) const;
    /// x + x^q + ... + x^(q^(a-1)).
    Element tr_partial(Element x, unsigned a) const;
    /// Inverse of (a mod p) in the prime field; throws when p | a.
    Element int_inverse_embedded(std::int64_t a) const;

    /// Discrete log with respect to the table generator. Requires tables and x != 0.
    std::uint32_t log(Element x) const { return log_[x.value]; }
    /// generator^k for k in [0, size - 1). Requires tables.
    Element exp(std::uint32_t k) const { return Element{exp_[k]}; }
    Element generator() const { return generator_; }

private:
    std::vector<unsigned> digits(std::uint32_t v) const;
    std::uint32_t encode(const std::vector<unsigned>& d) const;
    std::uint32_t poly_mul(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t poly_pow(std::uint32_t x, std::uint64_t n) const;
    std::uint32_t digit_add(std::uint32_t x, std::uint32_t y, bool subtract) const;
    void build_tables();

    unsigned p_;
    unsigned e_;
    unsigned c_;
    unsigned m_;
    std::uint64_t q_;
    std::uint32_t size_;
    std::vector<unsigned> modulus_;
    std::vector<std::uint32_t> pow_p_;  // p^i for i in [0, m]
    Element generator_{};
    std::vector<std::uint32_t> exp_;  // length 2 * (size - 1)
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> add_table_;  // odd characteristic, small fields only
    std::vector<std::uint32_t> neg_table_;
};

std::string modulus_to_string(const std::vector<unsigned>& poly);

}  // namespace ghcode
