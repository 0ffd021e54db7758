#include <cstdlib>
#include <set>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "ghcode/field.hpp"

using namespace ghcode;

namespace {

// Schoolbook product of two encodings reduced by the field modulus, digit by digit.
std::uint32_t slow_mul(const Field& f, std::uint32_t x, std::uint32_t y) {
    const unsigned p = f.characteristic();
    const unsigned m = f.degree();
    std::vector<unsigned> a(m), b(m), prod(2 * m, 0);
    for (unsigned i = 0; i < m; ++i) {
        a[i] = x % p;
        x /= p;
        b[i] = y % p;
        y /= p;
    }
    for (unsigned i = 0; i < m; ++i) {
        for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    const auto& mod = f.modulus();
    for (unsigned d = 2 * m - 1; d >= m; --d) {
        const unsigned lead = prod[d];
        if (lead == 0) continue;
        for (unsigned i = 0; i <= m; ++i) prod[d - m + i] = (prod[d - m + i] + (p - lead) * mod[i]) % p;
    }
    std::uint32_t out = 0;
    for (unsigned i = m; i-- > 0;) out = out * p + prod[i];
    return out;
}

std::vector<unsigned> poly_mul(const std::vector<unsigned>& a, const std::vector<unsigned>& b, unsigned p) {
    std::vector<unsigned> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    return out;
}

std::vector<std::vector<unsigned>> monic_polys(unsigned p, unsigned deg) {
    std::vector<std::vector<unsigned>> out;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<unsigned> poly(deg + 1, 0);
        std::uint64_t c = code;
        for (unsigned i = 0; i < deg; ++i) {
            poly[i] = c % p;
            c /= p;
        }
        poly[deg] = 1;
        out.push_back(poly);
    }
    return out;
}

// Every reducible monic polynomial of degree m, as a product of two monic factors.
std::set<std::vector<unsigned>> reducible_monic(unsigned p, unsigned m) {
    std::set<std::vector<unsigned>> out;
    for (unsigned d = 1; d <= m / 2; ++d) {
        for (const auto& a : monic_polys(p, d)) {
            for (const auto& b : monic_polys(p, m - d)) out.insert(poly_mul(a, b, p));
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("frozen moduli") {
    CHECK(smallest_irreducible(2, 3) == std::vector<unsigned>{1, 1, 0, 1});
    CHECK(smallest_irreducible(2, 5) == std::vector<unsigned>{1, 0, 1, 0, 0, 1});
    CHECK(smallest_irreducible(3, 3) == std::vector<unsigned>{1, 2, 0, 1});
    CHECK(modulus_to_string(smallest_irreducible(2, 5)) == "x^5+x^2+1");
    CHECK(modulus_to_string(smallest_irreducible(3, 3)) == "x^3+2x+1");
}

TEST_CASE("smallest irreducible matches factor enumeration") {
    for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {5, 2}, {5, 3}}) {
        const auto reducible = reducible_monic(p, m);
        std::vector<unsigned> first;
        for (const auto& poly : monic_polys(p, m)) {
            const bool irr = !reducible.contains(poly);
            CHECK(is_irreducible(poly, p) == irr);
            if (irr && first.empty()) first = poly;
        }
        CHECK(smallest_irreducible(p, m) == first);
    }
}

TEST_CASE("GF(8) inverse of x") {
    const Field f(2, 1, 3);
    CHECK(f.inv(Element{2}) == Element{5});
    CHECK(f.mul(Element{2}, Element{5}) == f.one());
}

TEST_CASE("table multiplication agrees with schoolbook reduction") {
    for (auto [p, e, c] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 1, 3}, {3, 1, 2}, {3, 1, 3}, {2, 1, 5}, {5, 1, 3}, {2, 2, 3}}) {
        const Field f(p, e, c);
        for (std::uint32_t x = 0; x < f.size(); ++x) {
            for (std::uint32_t y = 0; y < f.size(); ++y) {
                REQUIRE(f.mul(Element{x}, Element{y}).value == slow_mul(f, x, y));
            }
        }
    }
}

TEST_CASE("field axioms on GF(27) and GF(32)") {
    for (auto [p, c] : std::vector<std::pair<unsigned, unsigned>>{{3, 3}, {2, 5}}) {
        const Field f(p, 1, c);
        for (std::uint32_t x = 0; x < f.size(); ++x) {
            const Element ex{x};
            CHECK(f.add(ex, f.neg(ex)) == f.zero());
            CHECK(f.add(ex, f.zero()) == ex);
            CHECK(f.mul(ex, f.one()) == ex);
            if (x == 0) continue;
            CHECK(f.mul(ex, f.inv(ex)) == f.one());
            CHECK(f.pow(ex, -1) == f.inv(ex));
            CHECK(f.pow(ex, f.size() - 1) == f.one());
            for (std::uint32_t y = 0; y < f.size(); ++y) {
                const Element ey{y};
                CHECK(f.sub(f.add(ex, ey), ey) == ex);
                CHECK(f.add(ex, ey) == f.add(ey, ex));
                if (y != 0) CHECK(f.mul(f.div(ex, ey), ey) == ex);
            }
        }
    }
}

TEST_CASE("generator has full order") {
    const Field f(3, 1, 3);
    std::set<std::uint32_t> seen;
    for (std::uint32_t k = 0; k + 1 < f.size(); ++k) seen.insert(f.exp(k).value);
    CHECK(seen.size() == f.size() - 1);
    CHECK(f.exp(f.log(Element{7})) == Element{7});
}

TEST_CASE("Frobenius and partial traces") {
    const Field f(2, 1, 5);
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        const Element ex{x};
        CHECK(f.frobenius_q(ex, 1) == f.pow(ex, 2));
        CHECK(f.frobenius_q(ex, 5) == ex);
        Element acc = f.zero(), term = ex;
        for (int i = 0; i < 3; ++i) {
            acc = f.add(acc, term);
            term = f.pow(term, 2);
        }
        CHECK(f.tr_partial(ex, 3) == acc);
        const Element full = f.tr_partial(ex, 5);
        CHECK((full == f.zero() || full == f.one()));
    }
}

TEST_CASE("prime-field embedding") {
    const Field f(3, 1, 3);
    CHECK(f.from_integer(5) == Element{2});
    CHECK(f.from_integer(-1) == Element{2});
    CHECK(f.int_inverse_embedded(2) == Element{2});
    CHECK_THROWS_AS(f.int_inverse_embedded(3), FieldError);
    const Field g(2, 1, 5);
    CHECK(g.int_inverse_embedded(3) == g.one());
}

TEST_CASE("invalid inputs") {
    const Field f(2, 1, 3);
    CHECK_THROWS_AS(f.element(8), FieldError);
    CHECK_THROWS_AS(f.inv(f.zero()), FieldError);
    CHECK_THROWS_AS(f.pow(f.zero(), -1), FieldError);
    CHECK_THROWS_AS(Field(4, 1, 3), FieldError);
    CHECK_THROWS_AS(Field(2, 17, 1), FieldError);
    CHECK_NOTHROW(Field(2, 17, 1, std::uint64_t{1} << 17));
}

TEST_CASE("size guard reads the environment") {
    ::setenv("GHCODE_MAX_FIELD", "131072", 1);
    CHECK(default_max_field_size() == 131072);
    CHECK_NOTHROW(Field(2, 17, 1));
    ::unsetenv("GHCODE_MAX_FIELD");
    CHECK(default_max_field_size() == 65536);
}

}  // TEST_SUITE
