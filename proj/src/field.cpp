#include "ghcode/field.hpp"

#include <cstdlib>
#include <sstream>

namespace ghcode {

namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;
constexpr std::uint64_t kAddTableLimit = 512;
constexpr std::uint64_t kHardLimit = std::uint64_t{1} << 31;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Remainder of a modulo the monic polynomial d, coefficients mod p.
std::vector<unsigned> poly_rem(std::vector<unsigned> a, const std::vector<unsigned>& d, unsigned p) {
    const std::size_t dd = d.size() - 1;
    while (a.size() > dd) {
        const unsigned lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - dd;
            for (std::size_t i = 0; i < dd; ++i) {
                a[shift + i] = (a[shift + i] + (p - lead) * d[i]) % p;
            }
        }
        a.pop_back();
    }
    return a;
}

std::vector<unsigned> decode_poly(std::uint64_t code, unsigned p) {
    std::vector<unsigned> out;
    while (code) {
        out.push_back(static_cast<unsigned>(code % p));
        code /= p;
    }
    return out;
}

}  // namespace

std::uint64_t default_max_field_size() {
    if (const char* env = std::getenv("GHCODE_MAX_FIELD")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return std::uint64_t{1} << 16;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible(const std::vector<unsigned>& poly, unsigned p) {
    if (poly.size() < 2 || poly.back() != 1) return false;
    const unsigned m = static_cast<unsigned>(poly.size() - 1);
    std::uint64_t pd = 1;
    for (unsigned d = 1; 2 * d <= m; ++d) {
        pd *= p;
        for (std::uint64_t r = 0; r < pd; ++r) {
            const auto divisor = decode_poly(pd + r, p);
            const auto rem = poly_rem(poly, divisor, p);
            bool zero = true;
            for (unsigned x : rem) zero = zero && x == 0;
            if (zero) return false;
        }
    }
    return true;
}

std::vector<unsigned> smallest_irreducible(unsigned p, unsigned m) {
    std::uint64_t pm = 1;
    for (unsigned i = 0; i < m; ++i) pm *= p;
    for (std::uint64_t r = 0; r < pm; ++r) {
        auto poly = decode_poly(pm + r, p);
        if (is_irreducible(poly, p)) return poly;
    }
    throw FieldError("no irreducible polynomial found");
}

std::string modulus_to_string(const std::vector<unsigned>& poly) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = poly.size(); i-- > 0;) {
        if (poly[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (poly[i] != 1 || i == 0) os << poly[i];
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return first ? "0" : os.str();
}

Field::Field(unsigned p, unsigned e, unsigned c, std::uint64_t max_size) : p_(p), e_(e), c_(c), m_(e * c) {
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (e == 0 || c == 0) throw FieldError("field degree must be positive");
    std::uint64_t size = 1;
    for (unsigned i = 0; i < m_; ++i) {
        size *= p;
        if (size > kHardLimit || size > max_size) {
            throw FieldError("field GF(" + std::to_string(p) + "^" + std::to_string(m_) +
                             ") exceeds the configured size limit of " + std::to_string(max_size) +
                             " elements (set GHCODE_MAX_FIELD to raise it)");
        }
    }
    size_ = static_cast<std::uint32_t>(size);
    q_ = 1;
    for (unsigned i = 0; i < e; ++i) q_ *= p;
    pow_p_.resize(m_ + 1);
    pow_p_[0] = 1;
    for (unsigned i = 1; i <= m_; ++i) pow_p_[i] = pow_p_[i - 1] * p;
    modulus_ = smallest_irreducible(p, m_);

    if (p_ != 2 && size_ <= kAddTableLimit) {
        add_table_.resize(std::size_t{size_} * size_);
        for (std::uint32_t x = 0; x < size_; ++x) {
            for (std::uint32_t y = 0; y < size_; ++y) {
                add_table_[std::size_t{x} * size_ + y] = digit_add(x, y, false);
            }
        }
        neg_table_.resize(size_);
        for (std::uint32_t x = 0; x < size_; ++x) neg_table_[x] = digit_add(0, x, true);
    }
    if (size_ <= kTableLimit) build_tables();
    else generator_ = Element{0};
}

std::shared_ptr<const Field> Field::create(unsigned p, unsigned e, unsigned c, std::uint64_t max_size) {
    return std::make_shared<const Field>(p, e, c, max_size);
}

std::vector<unsigned> Field::digits(std::uint32_t v) const {
    std::vector<unsigned> d(m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
        d[i] = v % p_;
        v /= p_;
    }
    return d;
}

std::uint32_t Field::encode(const std::vector<unsigned>& d) const {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
    return v;
}

std::uint32_t Field::digit_add(std::uint32_t x, std::uint32_t y, bool subtract) const {
    std::uint32_t out = 0;
    for (unsigned i = 0; i < m_; ++i) {
        const unsigned a = x % p_;
        const unsigned b = y % p_;
        x /= p_;
        y /= p_;
        const unsigned s = subtract ? (a + p_ - b) % p_ : (a + b) % p_;
        out += s * pow_p_[i];
    }
    return out;
}

std::uint32_t Field::poly_mul(std::uint32_t x, std::uint32_t y) const {
    const auto a = digits(x);
    const auto b = digits(y);
    std::vector<unsigned> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    }
    auto rem = poly_rem(std::move(prod), modulus_, p_);
    rem.resize(m_, 0);
    return encode(rem);
}

std::uint32_t Field::poly_pow(std::uint32_t x, std::uint64_t n) const {
    std::uint32_t result = 1;
    while (n) {
        if (n & 1) result = poly_mul(result, x);
        x = poly_mul(x, x);
        n >>= 1;
    }
    return result;
}

void Field::build_tables() {
    const std::uint64_t order = size_ - 1;
    const auto factors = prime_factors(order);
    std::uint32_t g = 0;
    for (std::uint32_t cand = 1; cand < size_; ++cand) {
        bool primitive = true;
        for (auto r : factors) {
            if (poly_pow(cand, order / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            g = cand;
            break;
        }
    }
    generator_ = Element{g};
    exp_.assign(2 * order, 0);
    log_.assign(size_, 0);
    std::uint32_t cur = 1;
    for (std::uint64_t k = 0; k < order; ++k) {
        exp_[k] = cur;
        exp_[k + order] = cur;
        log_[cur] = static_cast<std::uint32_t>(k);
        cur = poly_mul(cur, g);
    }
}

Element Field::element(std::uint64_t encoding) const {
    if (encoding >= size_) throw FieldError("encoding " + std::to_string(encoding) + " out of range");
    return Element{static_cast<std::uint32_t>(encoding)};
}

Element Field::from_integer(std::int64_t n) const {
    const std::int64_t r = ((n % static_cast<std::int64_t>(p_)) + p_) % p_;
    return Element{static_cast<std::uint32_t>(r)};
}

Element Field::add(Element x, Element y) const {
    if (p_ == 2) return Element{x.value ^ y.value};
    if (!add_table_.empty()) return Element{add_table_[std::size_t{x.value} * size_ + y.value]};
    return Element{digit_add(x.value, y.value, false)};
}

Element Field::sub(Element x, Element y) const {
    if (p_ == 2) return Element{x.value ^ y.value};
    if (!add_table_.empty()) return Element{add_table_[std::size_t{x.value} * size_ + neg_table_[y.value]]};
    return Element{digit_add(x.value, y.value, true)};
}

Element Field::neg(Element x) const { return sub(zero(), x); }

Element Field::mul(Element x, Element y) const {
    if (x.is_zero() || y.is_zero()) return zero();
    if (has_tables()) return Element{exp_[std::size_t{log_[x.value]} + log_[y.value]]};
    return Element{poly_mul(x.value, y.value)};
}

Element Field::inv(Element x) const {
    if (x.is_zero()) throw FieldError("inverse of zero");
    if (has_tables()) {
        const std::uint32_t order = size_ - 1;
        return Element{exp_[(order - log_[x.value]) % order]};
    }
    return Element{poly_pow(x.value, std::uint64_t{size_} - 2)};
}

Element Field::div(Element x, Element y) const { return mul(x, inv(y)); }

Element Field::pow(Element x, std::int64_t n) const {
    if (x.is_zero()) {
        if (n == 0) return one();
        if (n < 0) throw FieldError("negative power of zero");
        return zero();
    }
    const std::int64_t order = static_cast<std::int64_t>(size_) - 1;
    const auto r = static_cast<std::uint64_t>(((n % order) + order) % order);
    if (has_tables()) return Element{exp_[mulmod(log_[x.value], r, order)]};
    return Element{poly_pow(x.value, r)};
}

Element Field::frobenius_q(Element x, std::uint64_t k) const {
    if (x.is_zero()) return x;
    const std::uint64_t order = size_ - 1;
    const std::uint64_t exponent = powmod(q_, k % c_, order);
    return pow(x, static_cast<std::int64_t>(exponent == 0 ? order : exponent));
}

Element Field::tr_partial(Element x, unsigned a) const {
    Element sum = zero();
    for (unsigned i = 0; i < a; ++i) sum = add(sum, frobenius_q(x, i));
    return sum;
}

Element Field::int_inverse_embedded(std::int64_t a) const {
    const std::int64_t r = ((a % static_cast<std::int64_t>(p_)) + p_) % p_;
    if (r == 0) {
        throw FieldError(std::to_string(a) + " is divisible by the characteristic " + std::to_string(p_));
    }
    for (std::int64_t x = 1; x < static_cast<std::int64_t>(p_); ++x) {
        if ((x * r) % p_ == 1) return Element{static_cast<std::uint32_t>(x)};
    }
    throw FieldError("no inverse modulo p");
}

}  // namespace ghcode
