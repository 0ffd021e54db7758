#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "ghcode/matrix.hpp"

using namespace ghcode;

namespace {

Matrix random_matrix(const std::shared_ptr<const Field>& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                     double zero_bias = 0.0) {
    Matrix m(f, rows, cols);
    std::uniform_int_distribution<std::uint32_t> dist(1, f->size() - 1);
    std::bernoulli_distribution zero(zero_bias);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = zero(rng) ? f->zero() : Element{dist(rng)};
    }
    return m;
}

// rank via brute-force span size: the row space of a rank-k matrix over F_l has l^k elements.
std::size_t span_rank(const Matrix& m) {
    const Field& f = m.field();
    std::set<std::vector<std::uint32_t>> span{std::vector<std::uint32_t>(m.cols(), 0)};
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::set<std::vector<std::uint32_t>> next;
        for (const auto& v : span) {
            for (std::uint32_t a = 0; a < f.size(); ++a) {
                auto w = v;
                for (std::size_t c = 0; c < m.cols(); ++c) {
                    w[c] = f.add(Element{w[c]}, f.mul(Element{a}, m.at(r, c))).value;
                }
                next.insert(w);
            }
        }
        span = std::move(next);
    }
    std::size_t k = 0;
    for (std::size_t sz = 1; sz < span.size(); sz *= f.size()) ++k;
    return k;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("identity and zero") {
    auto f = Field::create(3, 1, 3);
    Matrix id(f, 5, 5), zero(f, 4, 6);
    for (std::size_t i = 0; i < 5; ++i) id.at(i, i) = f->one();
    CHECK(rank(id) == 5);
    CHECK(rank(zero) == 0);
    CHECK(zero.is_zero());
    CHECK(rref(id) == id);
    CHECK(nullspace(id).rows() == 0);
    CHECK(nullspace(zero).rows() == 6);
}

TEST_CASE("rank agrees with span size") {
    auto f = Field::create(3, 1, 1);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        const auto m = random_matrix(f, 1 + i % 4, 2 + i % 3, rng, 0.5);
        CHECK(rank(m) == span_rank(m));
    }
}

TEST_CASE("rref shape") {
    auto f = Field::create(2, 1, 5);
    std::mt19937_64 rng(4);
    const auto m = random_matrix(f, 6, 10, rng, 0.3);
    std::vector<std::size_t> piv;
    const auto red = rref(m, &piv);
    CHECK(red.rows() == rank(m));
    REQUIRE(piv.size() == red.rows());
    for (std::size_t r = 0; r < red.rows(); ++r) {
        CHECK(red.at(r, piv[r]) == f->one());
        for (std::size_t r2 = 0; r2 < red.rows(); ++r2) {
            if (r2 != r) CHECK(red.at(r2, piv[r]).is_zero());
        }
    }
    CHECK(row_space_equal(red, m));
}

TEST_CASE("nullspace is orthogonal and complementary") {
    for (auto [p, c] : std::vector<std::pair<unsigned, unsigned>>{{2, 5}, {3, 3}}) {
        auto f = Field::create(p, 1, c);
        std::mt19937_64 rng(5 + p);
        for (int i = 0; i < 20; ++i) {
            const std::size_t rows = 1 + i % 7, cols = 4 + i % 9;
            const auto m = random_matrix(f, rows, cols, rng, 0.4);
            const auto ns = nullspace(m);
            CHECK(rank(ns) == ns.rows());
            CHECK(rank(m) + ns.rows() == cols);
            if (ns.rows() > 0) CHECK(mul_transpose(m, ns).is_zero());
        }
    }
}

TEST_CASE("row space equality") {
    auto f = Field::create(3, 1, 3);
    std::mt19937_64 rng(6);
    const auto a = random_matrix(f, 3, 8, rng);
    Matrix b(f, 0, 8);
    std::vector<Element> row(8);
    for (std::size_t c = 0; c < 8; ++c) row[c] = f->add(a.at(0, c), f->mul(Element{5}, a.at(2, c)));
    b.append_row(row);
    b.append_row(a.row(1));
    b.append_row(a.row(2));
    CHECK(row_space_equal(a, b));
    Matrix c(f, 0, 8);
    c.append_row(a.row(0));
    c.append_row(a.row(1));
    CHECK_FALSE(row_space_equal(a, c));
}

TEST_CASE("scale_columns") {
    auto f = Field::create(2, 1, 3);
    Matrix m(f, 1, 3);
    m.at(0, 0) = Element{1};
    m.at(0, 1) = Element{2};
    m.at(0, 2) = Element{3};
    const std::vector<Element> s{Element{2}, Element{2}, Element{1}};
    const auto out = scale_columns(m, s);
    CHECK(out.at(0, 0) == Element{2});
    CHECK(out.at(0, 1) == f->mul(Element{2}, Element{2}));
    CHECK(out.at(0, 2) == Element{3});
    CHECK_THROWS_AS(scale_columns(m, std::vector<Element>{Element{1}}), MatrixError);
}

TEST_CASE("mismatched operands") {
    auto f = Field::create(2, 1, 3);
    auto g = Field::create(3, 1, 2);
    CHECK_THROWS_AS(mul_transpose(Matrix(f, 2, 3), Matrix(g, 2, 3)), MatrixError);
    CHECK_THROWS_AS(mul_transpose(Matrix(f, 2, 3), Matrix(f, 2, 4)), MatrixError);
    CHECK_THROWS_AS(stack(Matrix(f, 2, 3), Matrix(f, 2, 4)), MatrixError);
    CHECK_THROWS_AS(row_space_equal(Matrix(f, 0, 3), Matrix(f, 1, 4)), MatrixError);
    Matrix m(f, 0, 3);
    CHECK_THROWS_AS(m.append_row(std::vector<Element>(2)), MatrixError);
}

TEST_CASE("file format round trip") {
    auto f = Field::create(3, 1, 3);
    std::mt19937_64 rng(7);
    const auto m = random_matrix(f, 4, 6, rng, 0.2);
    std::stringstream ss;
    write_matrix(ss, m);
    const std::string text = ss.str();
    CHECK(text.rfind("3 1 3 4 6\n", 0) == 0);
    const auto back = read_matrix(ss);
    CHECK(back == m);

    std::istringstream bad1("3 1 3 1 2\n1 27\n");
    CHECK_THROWS_AS(read_matrix(bad1), std::invalid_argument);
    std::istringstream bad2("3 1 3 2 2\n1 2\n");
    CHECK_THROWS_AS(read_matrix(bad2), MatrixError);
    std::istringstream empty("2 1 3 0 5\n");
    CHECK(read_matrix(empty).rows() == 0);
}

}  // TEST_SUITE
