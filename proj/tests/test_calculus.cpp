#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hhci/calculus.hpp"

using namespace hhci;

namespace {

Presentation pres_of(const std::string& ring, std::vector<std::string> vars,
                     std::vector<std::string> rels) {
    CoeffRing r = CoeffRing::from_text(ring);
    std::vector<Poly> ps;
    for (const auto& s : rels) ps.push_back(parse_poly(s, vars, r));
    return Presentation(r, std::move(vars), std::move(ps));
}

DerivationVec deriv(const Presentation& p, std::vector<std::string> coeffs) {
    DerivationVec d;
    for (const auto& s : coeffs) d.push_back(p.normal_form(p.parse(s)));
    return d;
}

Poly rand_elt(const Presentation& p, std::mt19937& rng) {
    std::uniform_int_distribution<int> expd(0, 3), nterms(0, 4);
    const CoeffRing& ring = p.ring();
    int cmax = ring.is_modular() ? static_cast<int>(ring.modulus()) - 1 : 5;
    std::uniform_int_distribution<int> coef(ring.is_modular() ? 0 : -5, cmax);
    Poly f(ring, p.nvars());
    for (int i = nterms(rng); i > 0; --i) {
        MultiIndex e(p.nvars());
        for (int j = 0; j < p.nvars(); ++j) e[j] = expd(rng);
        f.add_term(e, Rat(coef(rng)));
    }
    return p.normal_form(f);
}

}  // namespace

TEST_CASE("jacobian: examples") {
    SUBCASE("x^2 over GF(2) has zero Jacobian") {
        auto p = pres_of("GF(2)", {"x"}, {"x^2"});
        CHECK(jacobian(p)[0][0].is_zero());
    }
    SUBCASE("the Z[x,y] hypersurface") {
        auto p = pres_of("Z", {"x", "y"}, {"x^2 - 4*x*y + y^2 - 1"});
        auto jac = jacobian(p);
        CHECK(jac[0][0] == p.parse("2*x - 4*y"));
        CHECK(jac[0][1] == p.parse("-4*x + 2*y"));
    }
    SUBCASE("group relations give a diagonal Jacobian") {
        auto p = pres_of("Z", {"x", "y"}, {"x^3 - 1", "y^2 - 1"});
        auto jac = jacobian(p);
        CHECK(jac[0][0] == p.parse("3*x^2"));
        CHECK(jac[0][1].is_zero());
        CHECK(jac[1][0].is_zero());
        CHECK(jac[1][1] == p.parse("2*y"));
    }
}

TEST_CASE("is_derivation: examples") {
    auto zxy = pres_of("Z", {"x", "y"}, {"x^2 - 4*x*y + y^2 - 1"});
    CHECK(is_derivation(deriv(zxy, {"2*x - y", "x - 2*y"}), zxy));

    auto f2 = pres_of("GF(2)", {"x"}, {"x^2"});
    CHECK(is_derivation(deriv(f2, {"1"}), f2));

    auto qx = pres_of("Q", {"x"}, {"x^2"});
    CHECK_FALSE(is_derivation(deriv(qx, {"1"}), qx));
    // but x*d/dx is one
    CHECK(is_derivation(deriv(qx, {"x"}), qx));
}

TEST_CASE("hessian_q: examples") {
    SUBCASE("the paper's Z[x,y] counterexample evaluates to -3, i.e. 1 mod (f,2)") {
        auto p = pres_of("Z", {"x", "y"}, {"x^2 - 4*x*y + y^2 - 1"});
        DerivationVec d = deriv(p, {"2*x - y", "x - 2*y"});
        NormalVec q = hessian_q(d, p);
        REQUIRE(q.size() == 1);
        CHECK(q[0] == p.normal_form(p.parse("-3")));
        // reduce into A/2A: nonzero there
        auto p2 = pres_of("GF(2)", {"x", "y"}, {"x^2 - 4*x*y + y^2 - 1"});
        Poly mod2 = p2.normal_form(q[0].map_ring(p2.ring()));
        CHECK(mod2 == p2.parse("1"));
        CHECK_FALSE(mod2.is_zero());
    }
    SUBCASE("q(0) = 0") {
        auto p = pres_of("Q", {"x", "y"}, {"x^2 - 1", "y^2 - 1"});
        NormalVec q = hessian_q(deriv(p, {"0", "0"}), p);
        CHECK(q[0].is_zero());
        CHECK(q[1].is_zero());
    }
    SUBCASE("d/dx on GF(2)[x]/(x^2) squares to 1") {
        auto p = pres_of("GF(2)", {"x"}, {"x^2"});
        CHECK(hessian_q(deriv(p, {"1"}), p)[0] == p.parse("1"));
    }
    SUBCASE("the derivation precondition is enforced") {
        auto p = pres_of("Q", {"x"}, {"x^2"});
        CHECK_THROWS_AS(hessian_q(deriv(p, {"1"}), p), NotADerivation);
    }
}

TEST_CASE("polarization: examples and identity") {
    SUBCASE("B(D,D) = 2 q(D)") {
        auto p = pres_of("Z", {"x", "y"}, {"x^2 - 4*x*y + y^2 - 1"});
        DerivationVec d = deriv(p, {"2*x - y", "x - 2*y"});
        NormalVec b = polarization(d, d, p);
        NormalVec q = hessian_q(d, p);
        CHECK(b[0] == p.normal_form(q[0].scaled(Rat(2))));
    }
    SUBCASE("coordinate fields on K[x,y]/(xy - 1) pair to the mixed second derivative") {
        auto p = pres_of("Q", {"x", "y"}, {"x*y - 1"});
        DerivationVec d1 = deriv(p, {"1", "0"}), d2 = deriv(p, {"0", "1"});
        // neither is a derivation alone; scale by the dual variable
        DerivationVec e1 = deriv(p, {"x", "0"});
        // is_derivation: d(xy-1) = y*x... check x*y = 1 directions
        CHECK(is_derivation(deriv(p, {"x", "-y"}), p));
        // the pure coordinate vectors are not derivations here, so exercise
        // the precondition
        CHECK_THROWS_AS(polarization(d1, d2, p), NotADerivation);
        (void)e1;
    }
    SUBCASE("mixed-term evaluation on a torus-like pair of derivations") {
        auto p = pres_of("Q", {"x", "y"}, {"x*y - 1"});
        DerivationVec d1 = deriv(p, {"x", "-y"}), d2 = deriv(p, {"x", "-y"});
        // B(D,D) picks up 2 * (d^2(xy)/dxdy) * x * (-y) = -2xy = -2
        NormalVec b = polarization(d1, d2, p);
        CHECK(b[0] == p.parse("-2"));
    }
    SUBCASE("zero partner kills the form") {
        auto p = pres_of("Q", {"x", "y"}, {"x^2 - 1", "y^2 - 1"});
        DerivationVec d = deriv(p, {"0", "x"});
        // jacobian row for y^2-1 is (0, 2y): 2y*x != 0, so adjust: use a
        // genuine derivation pair
        DerivationVec zero = deriv(p, {"0", "0"});
        auto pz = pres_of("GF(2)", {"x", "y"}, {"x^2", "y^2"});
        DerivationVec dz = deriv(pz, {"1", "x"});
        CHECK(is_derivation(dz, pz));
        NormalVec b = polarization(dz, deriv(pz, {"0", "0"}), pz);
        CHECK(b[0].is_zero());
        CHECK(b[1].is_zero());
        (void)d;
        (void)zero;
    }
    SUBCASE("polarization identity on random derivations") {
        std::mt19937 rng(808);
        // over GF(2)[x,y]/(x^2, y^2) every vector is a derivation
        auto p = pres_of("GF(2)", {"x", "y"}, {"x^2", "y^2"});
        for (int trial = 0; trial < 40; ++trial) {
            DerivationVec d1 = {rand_elt(p, rng), rand_elt(p, rng)};
            DerivationVec d2 = {rand_elt(p, rng), rand_elt(p, rng)};
            REQUIRE(is_derivation(d1, p));
            REQUIRE(is_derivation(d2, p));
            DerivationVec sum = {p.normal_form(d1[0] + d2[0]),
                                 p.normal_form(d1[1] + d2[1])};
            NormalVec qs = hessian_q(sum, p), q1 = hessian_q(d1, p),
                      q2 = hessian_q(d2, p), b = polarization(d1, d2, p);
            for (int j = 0; j < p.nrels(); ++j)
                CHECK(qs[j] == p.normal_form(q1[j] + q2[j] + b[j]));
        }
    }
}

TEST_CASE("quadratic scaling: q(aD) = a^2 q(D)") {
    std::mt19937 rng(606);
    auto p = pres_of("GF(2)", {"x", "y"}, {"x^2", "y^2"});
    auto p3 = pres_of("GF(3)", {"x"}, {"x^3"});
    for (int trial = 0; trial < 40; ++trial) {
        {
            DerivationVec d = {rand_elt(p, rng), rand_elt(p, rng)};
            Poly a = rand_elt(p, rng);
            DerivationVec ad = {p.normal_form(a * d[0]), p.normal_form(a * d[1])};
            NormalVec lhs = hessian_q(ad, p), rhs = hessian_q(d, p);
            for (int j = 0; j < p.nrels(); ++j)
                CHECK(lhs[j] == p.normal_form(a * a * rhs[j]));
        }
        {
            DerivationVec d = {rand_elt(p3, rng)};
            Poly a = rand_elt(p3, rng);
            DerivationVec ad = {p3.normal_form(a * d[0])};
            NormalVec lhs = hessian_q(ad, p3), rhs = hessian_q(d, p3);
            CHECK(lhs[0] == p3.normal_form(a * a * rhs[0]));
        }
    }
}

TEST_CASE("normal-module membership: syzygies annihilate q(D)") {
    // a non-regular presentation with honest syzygies: (xy, x^2) over Q.
    auto p = pres_of("Q", {"x", "y"}, {"x*y", "x^2"});
    DerivationVec d = deriv(p, {"x", "-y"});
    REQUIRE(is_derivation(d, p));
    NormalVec q = hessian_q(d, p);

    // desk-scale syzygy search: all (z1, z2) of degree <= 2 with
    // z1*f1 + z2*f2 = 0, found by exact linear algebra over Q
    std::vector<MultiIndex> monos;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b) monos.push_back({a, b});
    std::vector<MultiIndex> target;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 4; ++b) target.push_back({a, b});
    CoeffRing qq = CoeffRing::rationals();
    Matrix m(qq, target.size(), 2 * monos.size());
    for (std::size_t col = 0; col < 2 * monos.size(); ++col) {
        int which = col < monos.size() ? 0 : 1;
        const MultiIndex& e = monos[col % monos.size()];
        Poly prod = Poly::monomial(qq, e, Rat(1)) * p.relations()[which];
        for (std::size_t row = 0; row < target.size(); ++row)
            m.set(row, col, prod.coeff(target[row]));
    }
    Matrix syz = kernel(m);
    REQUIRE(syz.cols() > 0);  // e.g. x*(xy) - y*(x^2) = 0
    for (std::size_t s = 0; s < syz.cols(); ++s) {
        Poly z1(qq, 2), z2(qq, 2);
        for (std::size_t t = 0; t < monos.size(); ++t) {
            if (syz.at(t, s) != 0) z1.add_term(monos[t], syz.at(t, s));
            if (syz.at(monos.size() + t, s) != 0)
                z2.add_term(monos[t], syz.at(monos.size() + t, s));
        }
        // certificate that it is a syzygy
        REQUIRE((z1 * p.relations()[0] + z2 * p.relations()[1]).is_zero());
        // and it must annihilate q(D) in A
        CHECK(p.normal_form(z1 * q[0] + z2 * q[1]).is_zero());
    }
}

TEST_CASE("parse_derivation") {
    auto p = pres_of("Z", {"x", "y"}, {"x^2 - 4*x*y + y^2 - 1"});
    DerivationVec d = parse_derivation("2*x - y, x - 2*y", p);
    CHECK(d.size() == 2);
    CHECK(d[0] == p.parse("2*x - y"));
    CHECK_THROWS_AS(parse_derivation("x", p), DomainError);
}
