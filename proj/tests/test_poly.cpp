#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubic/cubic_form.hpp"
#include "cubic/poly.hpp"
#include "cubic/poly_io.hpp"
#include "cubic/rng.hpp"

using namespace cubic;

namespace {

Poly P(const std::string& text, int n = 0) { return parse_poly(text, n); }

Vec vec(std::vector<long> v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = make_rational(v[i]);
    return r;
}

Vec random_vec(Rng& rng, int n, int lo = -7, int hi = 7) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = rng.rational_in(lo, hi);
    return v;
}

}  // namespace

TEST_CASE("eval") {
    const Poly p = P("x0*x1*x2");
    CHECK(p.eval(vec({1, 1, 1}).c) == 1);
    CHECK(p.eval(vec({2, 3, 5}).c) == 30);
    CHECK(Poly::zero(3).eval(vec({4, -1, 9}).c) == 0);
    CHECK_THROWS_AS(p.eval(vec({1, 1}).c), std::invalid_argument);
}

TEST_CASE("gradient") {
    const CubicForm f(P("x0^3", 2));
    CHECK(f.gradient()[0] == P("3*x0^2", 2));
    CHECK(f.gradient()[1].is_zero());

    const CubicForm g(P("x0*x1*x2"));
    CHECK(g.gradient()[0] == P("x1*x2", 3));
    CHECK(g.gradient()[1] == P("x0*x2", 3));
    CHECK(g.gradient()[2] == P("x0*x1", 3));
}

TEST_CASE("euler identity is a polynomial identity") {
    // Sym3 determinant norm: x.grad f = 3f by symbolic expansion.
    const CubicForm f(P("x0*x1*x2 - x0*x3^2 - x1*x4^2 - x2*x5^2 + 2*x3*x4*x5"));
    Poly acc(6);
    for (int i = 0; i < 6; ++i) acc += Poly::variable(6, i) * f.gradient()[i];
    CHECK(acc == make_rational(3) * f.poly());
}

TEST_CASE("hessian") {
    const CubicForm f(P("x0*x1*x2"));
    CHECK(f.hessian()[0][1] == P("x2", 3));
    const CubicForm g(P("x0^3", 2));
    CHECK(g.hessian()[0][0] == P("6*x0", 2));

    // Entry (i,j) at x equals 6 Q(e_i, e_j, x).
    Rng rng(7);
    const Vec x = random_vec(rng, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Rational lhs = f.hessian()[i][j].eval(x.c);
            CHECK(lhs == 6 * f.polarize(Vec::unit(3, i), Vec::unit(3, j), x));
            CHECK(lhs == f.hess_at(x).at(i, j));
        }
}

TEST_CASE("polarize") {
    const CubicForm f(P("x0*x1*x2"));
    CHECK(f.polarize(Vec::unit(3, 0), Vec::unit(3, 1), Vec::unit(3, 2)) == make_rational(1, 6));

    // Herm3(C) norm: Q(A,A,A) = f(A) and 3Q(A,A,e_i) = grad f(A).
    const CubicForm h(P("x0*x1*x2 - x0*x3^2 - x0*x4^2 - x1*x5^2 - x1*x6^2 - x2*x7^2 - x2*x8^2 "
                        "+ 2*x3*x5*x7 - 2*x3*x6*x8 - 2*x4*x5*x8 - 2*x4*x6*x7"));
    Rng rng(11);
    for (int t = 0; t < 5; ++t) {
        const Vec a = random_vec(rng, 9);
        CHECK(h.polarize(a, a, a) == h.eval(a));
        for (int i = 0; i < 9; ++i)
            CHECK(3 * h.polarize(a, a, Vec::unit(9, i)) == h.gradient()[i].eval(a.c));
    }
}

TEST_CASE("polarization symmetry under permutations") {
    const CubicForm f(P("x0*x1*x2 - x0*x3^2 - x1*x4^2 - x2*x5^2 + 2*x3*x4*x5"));
    Rng rng(13);
    for (int t = 0; t < 6; ++t) {
        const Vec a = random_vec(rng, 6), b = random_vec(rng, 6), c = random_vec(rng, 6);
        const Rational q = f.polarize(a, b, c);
        CHECK(q == f.polarize(a, c, b));
        CHECK(q == f.polarize(b, a, c));
        CHECK(q == f.polarize(b, c, a));
        CHECK(q == f.polarize(c, a, b));
        CHECK(q == f.polarize(c, b, a));
    }
}

TEST_CASE("polarize agrees with coefficient expansion of f(sA+tB+uC)") {
    const CubicForm f(P("x0*x1*x2 - x0*x3^2 - x1*x4^2 - x2*x5^2 + 2*x3*x4*x5"));
    Rng rng(17);
    for (int t = 0; t < 4; ++t) {
        const Vec a = random_vec(rng, 6), b = random_vec(rng, 6), c = random_vec(rng, 6);
        std::vector<Poly> images;
        for (int i = 0; i < 6; ++i) {
            Poly im = Poly::variable(3, 0) * a[i];
            im += Poly::variable(3, 1) * b[i];
            im += Poly::variable(3, 2) * c[i];
            images.push_back(std::move(im));
        }
        Monomial stu(3);
        stu.e = {1, 1, 1};
        CHECK(f.poly().substitute(images).coeff(stu) / 6 == f.polarize(a, b, c));
    }
}

TEST_CASE("substitute") {
    const Poly p = P("x0^2", 2);
    std::vector<Poly> images{P("x0 + x1", 2), P("x1", 2)};
    CHECK(p.substitute(images) == P("x0^2 + 2*x0*x1 + x1^2"));

    // Identity images are a fixed point.
    const Poly q = P("3*x0^2*x1 - 1/2*x2^3");
    std::vector<Poly> id{Poly::variable(3, 0), Poly::variable(3, 1), Poly::variable(3, 2)};
    CHECK(q.substitute(id) == q);

    // Homogeneous degree-d images multiply the degree.
    std::vector<Poly> sq{P("x0^2 - x1^2", 3), P("x1*x2", 3), P("x0*x2", 3)};
    const Poly r = q.substitute(sq);
    CHECK(r.degree() == q.degree() * 2);
    CHECK(r.is_homogeneous(6));
}

TEST_CASE("cone_direction") {
    const CubicForm cone(P("x0^3", 3));
    auto v = cone.cone_direction();
    REQUIRE(v.has_value());
    CHECK(v->dim() == 3);
    CHECK(cubic::is_zero((*v)[0]));  // in span{e1,e2}
    CHECK_FALSE(v->is_zero());

    CHECK_FALSE(CubicForm(P("x0*x1*x2")).cone_direction().has_value());
    CHECK_FALSE(CubicForm(P("x0*x1*x2 - x0*x3^2 - x1*x4^2 - x2*x5^2 + 2*x3*x4*x5"))
                    .cone_direction()
                    .has_value());
}

TEST_CASE("cubic form validation") {
    CHECK_THROWS_AS(CubicForm(P("x0^2", 2)), std::invalid_argument);
    CHECK_THROWS_AS(CubicForm(P("x0^3 + x0", 2)), std::invalid_argument);
    CHECK_THROWS_AS(CubicForm(P("x0^3", 1)), std::invalid_argument);
    CHECK_THROWS_AS(CubicForm(Poly::zero(3)), std::invalid_argument);
}

TEST_CASE("parser and canonical printer") {
    const Poly p = P("3*x0^2*x1 - 1/2*x2^3");
    CHECK(p.to_string() == "3*x0^2*x1 - 1/2*x2^3");
    CHECK(parse_poly(p.to_string()) == p);

    // Whitespace-insensitive, implicit coefficient, term merging.
    CHECK(P("  x0 ^ 2 * x1+ x0^2*x1 ") == P("2*x0^2*x1"));
    CHECK(P("x0 - x0 + x1", 2) == P("x1", 2));
    CHECK(Poly::zero(2).to_string() == "0");
    CHECK(P("7", 1).to_string() == "7");

    // Graded-lex order in the printer output.
    CHECK(P("x2^3 + 3*x0^2*x1").to_string() == "3*x0^2*x1 + x2^3");
}

TEST_CASE("parse errors carry position") {
    try {
        parse_poly("x0 + @");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 6);
    }
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0"), ParseError);
    CHECK_THROWS_AS(parse_poly("x0 x1"), ParseError);
}

TEST_CASE("rational helpers") {
    CHECK(rational_to_string(make_rational(-3, 6)) == "-1/2");
    CHECK(*rational_from_string("-4/6") == make_rational(-2, 3));
    CHECK_FALSE(rational_from_string("x").has_value());
    CHECK_FALSE(rational_from_string("1/0").has_value());
    CHECK(*exact_cube_root(make_rational(-27, 8)) == make_rational(-3, 2));
    CHECK_FALSE(exact_cube_root(make_rational(2)).has_value());
    CHECK(*mod_reduce(make_rational(1, 2), 7) == 4);  // 2*4 = 8 = 1 mod 7
}

TEST_CASE("round-trip property on random polynomials") {
    Rng rng(23);
    for (int t = 0; t < 20; ++t) {
        const int n = static_cast<int>(rng.uniform(1, 5));
        std::vector<Poly::Term> ts;
        const int terms = static_cast<int>(rng.uniform(1, 8));
        for (int k = 0; k < terms; ++k) {
            Monomial m(n);
            for (int i = 0; i < n; ++i) m.e[i] = static_cast<std::uint8_t>(rng.uniform(0, 3));
            ts.emplace_back(std::move(m),
                            make_rational(rng.uniform(-20, 20), rng.uniform(1, 9)));
        }
        const Poly p = Poly::from_terms(n, std::move(ts));
        if (p.is_zero()) continue;
        CHECK(parse_poly(p.to_string(), n) == p);
    }
}
