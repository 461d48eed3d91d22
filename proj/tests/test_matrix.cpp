#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "leonard/charpoly.hpp"
#include "leonard/matrix.hpp"

using namespace leonard;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Matrix random_matrix(std::size_t n, std::mt19937& rng, const FieldSpec& f, long lo = -6,
                     long hi = 6) {
    std::uniform_int_distribution<long> dist(lo, hi);
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = FieldElement::from_int(dist(rng), f);
    return m;
}

// entry-by-entry sum over k, the definition the fast path is checked against
Matrix naive_product(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows(), b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            FieldElement s = field_zero(a.field());
            for (std::size_t k = 0; k < a.cols(); ++k) s += a.at(i, k) * b.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

} // namespace

TEST_CASE("basic arithmetic identities") {
    std::mt19937 rng(3);
    Matrix X = random_matrix(3, rng, Q);
    Matrix I = Matrix::identity(3, Q);
    CHECK(I * X == X);
    CHECK(X + X.scaled(FieldElement::from_int(-1, Q)) == Matrix::zero(3, 3, Q));
    CHECK((-X) + X == Matrix::zero(3, 3, Q));
}

TEST_CASE("product matches the triple-loop definition") {
    std::mt19937 rng(5);
    for (int k = 0; k < 25; ++k) {
        Matrix a = random_matrix(3, rng, Q);
        Matrix b = random_matrix(3, rng, Q);
        CHECK(a * b == naive_product(a, b));
    }
    FieldSpec f101 = FieldSpec::prime_field(101);
    for (int k = 0; k < 25; ++k) {
        Matrix a = random_matrix(4, rng, f101, 0, 100);
        Matrix b = random_matrix(4, rng, f101, 0, 100);
        CHECK(a * b == naive_product(a, b));
    }
}

TEST_CASE("shape and field mismatches throw") {
    Matrix a(2, 3, Q), b(2, 3, Q);
    CHECK_THROWS_AS(a * b, Error);
    Matrix c(2, 3, FieldSpec::prime_field(5));
    CHECK_THROWS_AS(a + c, Error);
    CHECK_THROWS_AS(a.trace(), Error);
}

TEST_CASE("trace identities") {
    std::mt19937 rng(9);
    Matrix I = Matrix::identity(3, Q);
    CHECK(I.trace() == FieldElement::from_int(3, Q));
    Matrix X = random_matrix(3, rng, Q), Y = random_matrix(3, rng, Q);
    CHECK((X * Y).trace() == (Y * X).trace());
    Matrix N = Matrix::zero(3, 3, Q);
    N.at(0, 1) = FieldElement::from_int(4, Q);
    N.at(1, 2) = FieldElement::from_int(-7, Q);
    CHECK(N.trace() == field_zero(Q));
}

TEST_CASE("solve: identity, singular-consistent, inconsistent") {
    std::mt19937 rng(13);
    Matrix I = Matrix::identity(4, Q);
    Matrix b = random_matrix(4, rng, Q);
    LinearSolution s = solve(I, b);
    CHECK(s.consistent);
    CHECK(s.rank == 4);
    CHECK(s.particular == b);
    CHECK(s.null_basis.empty());

    // rank-1 singular system with consistent rhs
    Matrix M = Matrix::from_ints({{1, 2, 3}, {2, 4, 6}, {3, 6, 9}}, Q);
    Vector rhs(3, Q);
    rhs[0] = FieldElement::from_int(1, Q);
    rhs[1] = FieldElement::from_int(2, Q);
    rhs[2] = FieldElement::from_int(3, Q);
    LinearSolution t = solve(M, rhs);
    CHECK(t.consistent);
    CHECK(t.rank == 1);
    CHECK(t.null_basis.size() == 2);
    // solution plus any null vector still solves
    Vector x(3, Q);
    for (std::size_t i = 0; i < 3; ++i) x[i] = t.particular.at(i, 0);
    CHECK(M * x == rhs);
    for (const auto& nv : t.null_basis) CHECK((M * nv).is_zero());

    Vector bad = rhs;
    bad[2] = FieldElement::from_int(4, Q);
    CHECK_FALSE(solve(M, bad).consistent);
}

TEST_CASE("solve round-trips on random consistent systems") {
    std::mt19937 rng(17);
    for (int k = 0; k < 30; ++k) {
        Matrix M = random_matrix(4, rng, Q);
        Matrix x0 = random_matrix(4, rng, Q);
        Matrix rhs = M * x0;
        LinearSolution s = solve(M, rhs);
        REQUIRE(s.consistent);
        CHECK(M * s.particular == rhs);
        CHECK(s.rank + s.null_basis.size() == 4);
    }
}

TEST_CASE("rank plus nullity equals the column count") {
    std::mt19937 rng(19);
    for (int k = 0; k < 20; ++k) {
        Matrix a = random_matrix(3, rng, Q, -2, 2);
        Matrix b = random_matrix(3, rng, Q, -2, 2);
        Matrix M = a * b; // often singular with small entries
        CHECK(rank(M) + null_space(M).size() == M.cols());
    }
}

TEST_CASE("inverse multiplies back to the identity") {
    std::mt19937 rng(23);
    FieldSpec f101 = FieldSpec::prime_field(101);
    for (const FieldSpec& f : {Q, f101}) {
        for (int k = 0; k < 10; ++k) {
            Matrix M = random_matrix(4, rng, f, 0, 50);
            if (rank(M) < 4) continue;
            CHECK(M * inverse(M) == Matrix::identity(4, f));
        }
    }
    Matrix singular = Matrix::from_ints({{1, 2}, {2, 4}}, Q);
    CHECK_THROWS_AS(inverse(singular), Error);
}

TEST_CASE("poly_eval: root list form") {
    std::mt19937 rng(29);
    Matrix X = random_matrix(3, rng, Q);
    CHECK(poly_eval_roots(std::vector<FieldElement>{}, X) == Matrix::identity(3, Q));

    std::vector<FieldElement> zero{field_zero(Q)};
    CHECK(poly_eval_roots(zero, X) == X);

    // (X - r0)(X - r1) equals two explicit shifted products
    std::vector<FieldElement> roots{FieldElement::from_int(2, Q),
                                    FieldElement::from_int(-3, Q)};
    Matrix s0 = X - Matrix::identity(3, Q).scaled(roots[0]);
    Matrix s1 = X - Matrix::identity(3, Q).scaled(roots[1]);
    CHECK(poly_eval_roots(roots, X) == s0 * s1);
}

TEST_CASE("root-list and coefficient-list evaluation agree") {
    std::mt19937 rng(31);
    Matrix X = random_matrix(3, rng, Q);
    // (x-1)(x-2)(x+2) = x^3 - x^2 - 4x + 4
    std::vector<FieldElement> roots{FieldElement::from_int(1, Q), FieldElement::from_int(2, Q),
                                    FieldElement::from_int(-2, Q)};
    std::vector<FieldElement> coeffs{FieldElement::from_int(4, Q),
                                     FieldElement::from_int(-4, Q),
                                     FieldElement::from_int(-1, Q),
                                     FieldElement::from_int(1, Q)};
    CHECK(poly_eval_roots(roots, X) == poly_eval_coeffs(coeffs, X));
}

TEST_CASE("is_basis") {
    std::vector<Vector> std_basis;
    for (int i = 0; i < 3; ++i) {
        Vector e(3, Q);
        e[i] = field_one(Q);
        std_basis.push_back(e);
    }
    CHECK(is_basis(std_basis));
    std::vector<Vector> repeated = std_basis;
    repeated[2] = repeated[0];
    CHECK_FALSE(is_basis(repeated));
    std::vector<Vector> too_few(std_basis.begin(), std_basis.begin() + 2);
    CHECK_FALSE(is_basis(too_few));
}

TEST_CASE("characteristic polynomial: Cayley-Hamilton and known cases") {
    std::mt19937 rng(37);
    FieldSpec f101 = FieldSpec::prime_field(101);
    for (const FieldSpec& f : {Q, f101}) {
        for (int k = 0; k < 10; ++k) {
            Matrix M = random_matrix(4, rng, f, 0, 20);
            auto cp = characteristic_polynomial(M);
            REQUIRE(cp.size() == 5);
            CHECK(cp[4] == field_one(f)); // monic
            CHECK(poly_eval_coeffs(cp, M).is_zero());
        }
    }
    // diagonal matrix: roots are the diagonal
    Matrix D = Matrix::from_ints({{2, 0}, {0, 5}}, Q);
    auto cp = characteristic_polynomial(D);
    // (x-2)(x-5) = x^2 -7x + 10
    CHECK(cp[0] == FieldElement::from_int(10, Q));
    CHECK(cp[1] == FieldElement::from_int(-7, Q));
    CHECK(cp[2] == FieldElement::from_int(1, Q));
}

TEST_CASE("roots_in_field finds exactly the rational roots") {
    // (x-1)(x-2)(2x-3) scaled monic: roots 1, 2, 3/2
    Matrix M = Matrix::zero(3, 3, Q);
    M.at(0, 0) = FieldElement::from_int(1, Q);
    M.at(1, 1) = FieldElement::from_int(2, Q);
    M.at(2, 2) = FieldElement::from_rational(mpq_class(3, 2));
    auto r = roots_in_field(characteristic_polynomial(M));
    CHECK(r.split);
    REQUIRE(r.roots.size() == 3);

    // rotation-like matrix: x^2 + 1 has no rational roots
    Matrix rot = Matrix::from_ints({{0, -1}, {1, 0}}, Q);
    auto r2 = roots_in_field(characteristic_polynomial(rot));
    CHECK_FALSE(r2.split);
    CHECK(r2.roots.empty());

    // over GF(101), x^2 + 1 = (x-10)(x+10)
    FieldSpec f101 = FieldSpec::prime_field(101);
    Matrix rotp = Matrix::zero(2, 2, f101);
    rotp.at(0, 1) = FieldElement::from_int(-1, f101);
    rotp.at(1, 0) = FieldElement::from_int(1, f101);
    auto r3 = roots_in_field(characteristic_polynomial(rotp));
    CHECK(r3.split);
    CHECK(r3.roots.size() == 2);
}
