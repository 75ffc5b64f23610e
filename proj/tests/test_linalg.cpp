#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubic/linalg.hpp"
#include "cubic/modular.hpp"
#include "cubic/rng.hpp"

using namespace cubic;

namespace {

QMatrix matrix(int rows, int cols, std::vector<long> entries) {
    QMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = make_rational(entries[r * cols + c]);
    return m;
}

std::vector<Rational> rvec(std::vector<long> v) {
    std::vector<Rational> r;
    for (long x : v) r.push_back(make_rational(x));
    return r;
}

}  // namespace

TEST_CASE("solve_linear: identity, zero, underdetermined") {
    auto s1 = solve_linear(QMatrix::identity(3), rvec({4, -2, 7}));
    CHECK(s1.kind == LinearSolution::Kind::Unique);
    CHECK(s1.rank == 3);
    CHECK(s1.particular == rvec({4, -2, 7}));

    auto s2 = solve_linear(QMatrix(2, 2), rvec({1, 0}));
    CHECK(s2.kind == LinearSolution::Kind::Inconsistent);

    auto s3 = solve_linear(matrix(1, 2, {1, 1}), rvec({1}));
    CHECK(s3.kind == LinearSolution::Kind::Affine);
    CHECK(s3.rank == 1);
    CHECK(s3.nullspace.size() == 1);
    CHECK(s3.particular[0] + s3.particular[1] == 1);
    CHECK(s3.nullspace[0][0] + s3.nullspace[0][1] == 0);
}

TEST_CASE("solve_linear property: solutions substitute back exactly") {
    Rng rng(31);
    for (int t = 0; t < 25; ++t) {
        const int m = static_cast<int>(rng.uniform(1, 6));
        const int n = static_cast<int>(rng.uniform(1, 6));
        QMatrix a(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                a.at(i, j) = make_rational(rng.uniform(-5, 5), rng.uniform(1, 4));
        // Build a consistent rhs from a known x.
        std::vector<Rational> x(n);
        for (int j = 0; j < n; ++j) x[j] = make_rational(rng.uniform(-5, 5));
        std::vector<Rational> b(m, Rational(0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) b[i] += a.at(i, j) * x[j];

        auto s = solve_linear(a, b);
        REQUIRE(s.kind != LinearSolution::Kind::Inconsistent);
        for (int i = 0; i < m; ++i) {
            Rational acc(0);
            for (int j = 0; j < n; ++j) acc += a.at(i, j) * s.particular[j];
            CHECK(acc == b[i]);
        }
        for (const auto& nv : s.nullspace)
            for (int i = 0; i < m; ++i) {
                Rational acc(0);
                for (int j = 0; j < n; ++j) acc += a.at(i, j) * nv[j];
                CHECK(acc == 0);
            }
        CHECK(s.rank + static_cast<int>(s.nullspace.size()) == n);
        CHECK(rank(a) == s.rank);
    }
}

TEST_CASE("determinant and inverse") {
    const QMatrix m = matrix(3, 3, {2, 0, 1, 1, 3, 0, 0, 1, 4});
    CHECK(determinant(m) == make_rational(2 * 12 - 0 + 1 * 1));
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(*inv * m == QMatrix::identity(3));
    CHECK_FALSE(inverse(matrix(2, 2, {1, 2, 2, 4})).has_value());
    CHECK(determinant(matrix(2, 2, {1, 2, 2, 4})) == 0);
    // Swap-parity sign.
    CHECK(determinant(matrix(2, 2, {0, 1, 1, 0})) == -1);
}

TEST_CASE("kernel basis") {
    auto k = kernel_basis(matrix(1, 3, {1, 1, 1}));
    CHECK(k.size() == 2);
    for (const auto& v : k) CHECK(v[0] + v[1] + v[2] == 0);
    CHECK(kernel_basis(QMatrix::identity(4)).empty());
}

TEST_CASE("barrett arithmetic") {
    const Barrett b(kSolvePrimes[0]);
    Rng rng(37);
    for (int t = 0; t < 200; ++t) {
        const std::uint64_t x = rng.next();
        CHECK(b.reduce(x) == x % b.p());
    }
    const std::uint32_t a = 123456789u;
    CHECK(b.mul(a, b.inv(a)) == 1u);
}

TEST_CASE("modular echelon agrees with exact elimination") {
    Rng rng(41);
    for (int t = 0; t < 10; ++t) {
        const int n = 6;
        const int rows = 12;
        QMatrix a(rows, n);
        std::vector<Rational> x(n), b(rows, Rational(0));
        for (int j = 0; j < n; ++j) x[j] = make_rational(rng.uniform(-9, 9), rng.uniform(1, 5));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < n; ++j) {
                a.at(i, j) = make_rational(rng.uniform(-9, 9));
                b[i] += a.at(i, j) * x[j];
            }
        auto s = solve_linear(a, b);
        if (s.kind != LinearSolution::Kind::Unique) continue;

        const Barrett bar(kSolvePrimes[1]);
        ModEchelon ech(bar, n, true);
        for (int i = 0; i < rows && !ech.full_column_rank(); ++i) {
            std::vector<std::uint32_t> row(n + 1);
            bool ok = true;
            for (int j = 0; j <= n; ++j) {
                auto v = mod_reduce(j < n ? a.at(i, j) : b[i], bar.p());
                if (!v) ok = false;
                else row[j] = *v;
            }
            if (ok) ech.add_row(std::move(row), i);
        }
        REQUIRE(ech.full_column_rank());
        auto sol = ech.solve_unique();
        for (int j = 0; j < n; ++j) CHECK(sol[j] == *mod_reduce(s.particular[j], bar.p()));
    }
}

TEST_CASE("CRT + rational reconstruction round-trips") {
    Rng rng(43);
    for (int t = 0; t < 50; ++t) {
        const Rational q = make_rational(rng.uniform(-100000, 100000), rng.uniform(1, 50000));
        CrtReconstructor crt(1);
        for (int pi = 0; pi < 3; ++pi) {
            auto r = mod_reduce(q, kSolvePrimes[pi]);
            REQUIRE(r.has_value());
            crt.add_prime(kSolvePrimes[pi], {*r});
        }
        auto rec = crt.reconstruct();
        REQUIRE(rec.has_value());
        CHECK((*rec)[0] == q);
    }
    // A value too large for one prime needs more moduli.
    const Rational big = make_rational(Integer("123456789123456789"), Integer(1000003));
    CrtReconstructor crt(1);
    crt.add_prime(kSolvePrimes[0], {*mod_reduce(big, kSolvePrimes[0])});
    bool one_prime_enough = false;
    if (auto rec = crt.reconstruct()) one_prime_enough = (*rec)[0] == big;
    CHECK_FALSE(one_prime_enough);
    // |num| = 1.2e17 needs the modulus above 2·num^2 ~ 2^115: four primes.
    crt.add_prime(kSolvePrimes[1], {*mod_reduce(big, kSolvePrimes[1])});
    crt.add_prime(kSolvePrimes[2], {*mod_reduce(big, kSolvePrimes[2])});
    crt.add_prime(kSolvePrimes[3], {*mod_reduce(big, kSolvePrimes[3])});
    auto rec = crt.reconstruct();
    REQUIRE(rec.has_value());
    CHECK((*rec)[0] == big);
}
