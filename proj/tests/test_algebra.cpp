#include <complex>
#include <random>

#include "doctest.h"
#include "liouville/algebra/linear.hpp"
#include "liouville/algebra/poly.hpp"
#include "liouville/algebra/rational.hpp"
#include "liouville/algebra/roots.hpp"

using namespace liouville;
using P = Poly<Rat>;
using PG = Poly<GaussRat>;

namespace {

P poly(std::initializer_list<long> low_to_high) {
    std::vector<Rat> v;
    for (long c : low_to_high) v.emplace_back(c);
    return P(v);
}

const P X = P::variable();

struct Gen {
    std::mt19937_64 rng{0x5eed};

    long small(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
    Rat rat() {
        long d = small(1, 4);
        return Rat(small(-6, 6), d);
    }
    P poly(int max_deg, bool nonzero = true) {
        for (;;) {
            int d = static_cast<int>(small(0, max_deg));
            std::vector<Rat> v;
            for (int i = 0; i <= d; ++i) v.push_back(rat());
            P p(v);
            if (!nonzero || !p.is_zero()) return p;
        }
    }
};

// Sylvester matrix determinant: an oracle for resultants that shares no code
// with the pseudo-remainder sequence.
Rat sylvester_resultant(const P& a, const P& b) {
    int m = a.degree(), n = b.degree();
    if (m == 0) return a.lc().pow(n);
    if (n == 0) return b.lc().pow(m);
    int size = m + n;
    Matrix s(static_cast<size_t>(size), std::vector<GaussRat>(static_cast<size_t>(size)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) s[r][r + j] = GaussRat(a.coeff(m - j));
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) s[n + r][r + j] = GaussRat(b.coeff(n - j));
    GaussRat d = determinant(s);
    REQUIRE(d.is_real());
    return d.re();
}

}  // namespace

TEST_CASE("Rat keeps lowest terms") {
    Rat r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rat(0, 7).denominator() == 1);
    CHECK(Rat::parse("1.25") == Rat(5, 4));
    CHECK(Rat::parse("-3/4") == Rat(-3, 4));
    CHECK(Rat::parse("12") == Rat(12));
    CHECK(Rat::parse("010") == Rat(10));
    CHECK(Rat::parse("0.25") == Rat(1, 4));
    CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("GaussRat field laws") {
    Gen g;
    for (int k = 0; k < 200; ++k) {
        GaussRat a(g.rat(), g.rat()), b(g.rat(), g.rat()), c(g.rat(), g.rat());
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        if (!a.is_zero()) CHECK(a * a.inverse() == GaussRat(1));
    }
    GaussRat i = GaussRat::imaginary_unit();
    CHECK(i * i == GaussRat(-1));
    CHECK(i.str() == "i");
    CHECK(GaussRat(Rat(1, 2), Rat(-3, 4)).str() == "1/2 - 3/4*i");
}

TEST_CASE("gcd examples") {
    CHECK(gcd(poly({-1, 0, 1}), poly({-1, 0, 0, 1})) == poly({-1, 1}));
    P p = poly({2, 0, 4});
    CHECK(gcd(p, P()) == monic(p));
    CHECK(gcd(poly({1, 1}), poly({2, 1})) == P::one());
}

TEST_CASE("gcd agrees with common-root oracle") {
    // Products of distinct linear factors (x - r): the gcd is the product over
    // the shared roots, which is known by construction.
    Gen g;
    for (int k = 0; k < 200; ++k) {
        std::vector<long> ra, rb;
        for (int j = 0; j < 3; ++j) ra.push_back(g.small(-4, 4));
        for (int j = 0; j < 3; ++j) rb.push_back(g.small(-4, 4));
        P a = P::one(), b = P::one(), expect = P::one();
        for (long r : ra) a = a * (X - P(Rat(r)));
        for (long r : rb) b = b * (X - P(Rat(r)));
        std::vector<long> left = rb;
        for (long r : ra) {
            auto it = std::find(left.begin(), left.end(), r);
            if (it != left.end()) {
                expect = expect * (X - P(Rat(r)));
                left.erase(it);
            }
        }
        CHECK(gcd(a, b) == expect);
    }
}

TEST_CASE("gcd of p*r and q*r is divisible by r") {
    Gen g;
    for (int k = 0; k < 1000; ++k) {
        P p = g.poly(3), q = g.poly(3), r = g.poly(3);
        P h = gcd(p * r, q * r);
        CHECK(rem(h, monic(r)).is_zero());
        CHECK((h.is_zero() || h.lc().is_one()));
    }
}

TEST_CASE("extended gcd") {
    auto e = extended_gcd(poly({1, 0, 1}), X);
    CHECK(e.g == P::one());
    CHECK(e.s == P::one());
    CHECK(e.t == -X);

    P p = poly({3, 1, 7});
    auto u = extended_gcd(p, P::one());
    CHECK(u.g == P::one());
    CHECK(u.s.is_zero());
    CHECK(u.t == P::one());

    auto same = extended_gcd(poly({-1, 1}), poly({-1, 1}));
    CHECK(same.g == poly({-1, 1}));
    CHECK(same.s.is_zero());
    CHECK(same.t == P::one());

    CHECK_THROWS_WITH(extended_gcd(P(), P()), "gcd of zeros");
}

TEST_CASE("extended gcd identity on random inputs") {
    Gen g;
    for (int k = 0; k < 1000; ++k) {
        P a = g.poly(5, false), b = g.poly(5);
        auto e = extended_gcd(a, b);
        CHECK(e.s * a + e.t * b == e.g);
        CHECK(e.g == gcd(a, b));
        if (!rem(a, b).is_zero()) CHECK(e.s.degree() < b.degree() - e.g.degree());
    }
}

TEST_CASE("squarefree decomposition examples") {
    auto f = squarefree_decompose(poly({0, 0, 1, 1}));
    REQUIRE(f.size() == 2);
    CHECK(f[0] == SquarefreeFactor<Rat>{poly({1, 1}), 1});
    CHECK(f[1] == SquarefreeFactor<Rat>{X, 2});

    P sq = poly({-2, 0, 3});
    auto s = squarefree_decompose(sq);
    REQUIRE(s.size() == 1);
    CHECK(s[0].factor == monic(sq));
    CHECK(s[0].multiplicity == 1);

    auto d = squarefree_decompose(poly({1, 2, 1}));
    REQUIRE(d.size() == 1);
    CHECK(d[0] == SquarefreeFactor<Rat>{poly({1, 1}), 2});

    CHECK_THROWS(squarefree_decompose(P()));
}

TEST_CASE("squarefree decomposition reconstructs input") {
    Gen g;
    for (int k = 0; k < 1000; ++k) {
        P p = g.poly(2) * pow(g.poly(2), 2) * pow(g.poly(1), static_cast<int>(g.small(1, 3)));
        auto fs = squarefree_decompose(p);
        P prod(p.lc());
        int last = 0;
        for (const auto& f : fs) {
            prod = prod * pow(f.factor, f.multiplicity);
            CHECK(f.multiplicity > last);
            last = f.multiplicity;
            CHECK(f.factor.lc().is_one());
            CHECK(gcd(f.factor, derivative(f.factor)) == P::one());
        }
        CHECK(prod == p);
        for (size_t i = 0; i < fs.size(); ++i)
            for (size_t j = i + 1; j < fs.size(); ++j) CHECK(gcd(fs[i].factor, fs[j].factor) == P::one());
    }
}

TEST_CASE("resultant examples") {
    // Product over the roots +-i of x^2+1 of (z^2 - 2): (-1-2)^2 = 9.
    CHECK(resultant(poly({1, 0, 1}), poly({-2, 0, 1})) == Rat(9));
    P q = poly({5, -3, 0, 2});
    CHECK(resultant(X - P(Rat(3)), q) == q(Rat(3)));
    CHECK_THROWS(resultant(P(), q));
}

TEST_CASE("resultant matches Sylvester determinant and is multiplicative") {
    Gen g;
    for (int k = 0; k < 1000; ++k) {
        P a = g.poly(4), b = g.poly(3), c = g.poly(3);
        Rat rab = resultant(a, b);
        CHECK(rab == sylvester_resultant(a, b));
        CHECK(resultant(a, b * c) == rab * resultant(a, c));
        int sgn = (a.degree() * b.degree()) % 2 ? -1 : 1;
        CHECK(resultant(b, a) == Rat(sgn) * rab);
    }
}

TEST_CASE("resultant over a polynomial ring") {
    // res_x(x^2 + 1, z - x) = z^2 + 1, computed with Poly<Poly<Rat>> coefficients.
    using PP = Poly<P>;
    PP a(std::vector<P>{P::one(), P(), P::one()});
    PP b(std::vector<P>{X, P(Rat(-1))});
    CHECK(resultant(a, b) == poly({1, 0, 1}));
}

TEST_CASE("partial fractions examples") {
    P den = poly({-1, 0, 1});
    auto pf = partial_fractions(P::one(), den, {{poly({-1, 1}), 1}, {poly({1, 1}), 1}});
    REQUIRE(pf.size() == 2);
    CHECK(pf[0] == PartialFraction<Rat>{P(Rat(1, 2)), poly({-1, 1}), 1});
    CHECK(pf[1] == PartialFraction<Rat>{P(Rat(-1, 2)), poly({1, 1}), 1});

    auto sq = partial_fractions(P::one(), X * X, {{X, 2}});
    REQUIRE(sq.size() == 1);
    CHECK(sq[0] == PartialFraction<Rat>{P::one(), X, 2});

    P irr = poly({1, 0, 1});
    auto one = partial_fractions(X, irr, {{irr, 1}});
    REQUIRE(one.size() == 1);
    CHECK(one[0] == PartialFraction<Rat>{X, irr, 1});

    CHECK_THROWS_WITH(partial_fractions(X * X, irr, {{irr, 1}}), "call poly_divmod first");
}

TEST_CASE("partial fractions recombine exactly") {
    Gen g;
    for (int k = 0; k < 1000; ++k) {
        P den = g.poly(2) * pow(g.poly(2), 2);
        if (den.degree() <= 0) continue;
        P num = rem(g.poly(6), den);
        auto parts = partial_fractions(num, den, squarefree_decompose(den));
        RatFunc<Rat> sum;
        for (const auto& p : parts) {
            CHECK(p.numerator.degree() < p.factor.degree());
            sum = sum + RatFunc<Rat>(p.numerator, pow(p.factor, p.power));
        }
        CHECK(sum == RatFunc<Rat>(num, den));
    }
}

TEST_CASE("linear solve and determinant") {
    Matrix a = {{2, 1}, {1, 3}};
    auto x = solve_linear(a, {3, 5});
    REQUIRE(x);
    CHECK((*x)[0] == GaussRat(Rat(4, 5)));
    CHECK((*x)[1] == GaussRat(Rat(7, 5)));
    CHECK(determinant(a) == GaussRat(5));
    CHECK_FALSE(solve_linear({{1, 1}, {2, 2}}, {1, 3}));
}

TEST_CASE("Gaussian rational roots") {
    GaussRat i = GaussRat::imaginary_unit();
    PG p = (PG::variable() - PG(GaussRat(Rat(1, 3)))) * (PG::variable() - PG(i * GaussRat(Rat(-5, 2)))) *
           PG(std::vector<GaussRat>{1, 1, 1});
    auto roots = gaussian_rational_roots(p);
    REQUIRE(roots.size() == 2);
    bool third = false, imag = false;
    for (const auto& r : roots) {
        third |= r == GaussRat(Rat(1, 3));
        imag |= r == i * GaussRat(Rat(-5, 2));
    }
    CHECK(third);
    CHECK(imag);

    auto nr = numeric_roots(PG(std::vector<GaussRat>{1, 0, 1}));
    REQUIRE(nr.size() == 2);
    for (auto z : nr) CHECK(std::abs(z * z + 1.0) < 1e-12);
}
