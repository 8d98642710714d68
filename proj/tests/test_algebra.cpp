#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hhci/algebra.hpp"

using namespace hhci;

namespace {

Presentation pres_of(const std::string& ring, std::vector<std::string> vars,
                     std::vector<std::string> rels, bool assume = false) {
    CoeffRing r = CoeffRing::from_text(ring);
    std::vector<Poly> ps;
    for (const auto& s : rels) ps.push_back(parse_poly(s, vars, r));
    return Presentation(r, std::move(vars), std::move(ps), assume);
}

Poly rand_poly(const Presentation& p, int max_deg, int max_terms, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expd(0, max_deg);
    const CoeffRing& ring = p.ring();
    int cmax = ring.is_modular() ? static_cast<int>(ring.modulus()) - 1 : 7;
    std::uniform_int_distribution<int> coef(ring.is_modular() ? 0 : -7, cmax);
    Poly f(ring, p.nvars());
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        MultiIndex e(p.nvars());
        for (int j = 0; j < p.nvars(); ++j) e[j] = expd(rng);
        f.add_term(e, Rat(coef(rng)));
    }
    return f;
}

}  // namespace

TEST_CASE("normal_form: examples") {
    SUBCASE("one reduction step") {
        auto p = pres_of("Q", {"x"}, {"x^2 - 1"});
        CHECK(p.normal_form(p.parse("x^2")) == p.parse("1"));
    }
    SUBCASE("already reduced") {
        auto p = pres_of("Q", {"x", "y"}, {"x^2 + 1", "y^2 + 1"});
        CHECK(p.normal_form(p.parse("x*y")) == p.parse("x*y"));
    }
    SUBCASE("the GF(2) hypersurface collapses (x+y+1)^2") {
        auto p = pres_of("GF(2)", {"x", "y"}, {"x^2 - 4*x*y + y^2 - 1"});
        // mod 2 the relation reads x^2 + y^2 + 1 = (x+y+1)^2
        CHECK(p.normal_form(p.parse("(x + y + 1)^2")).is_zero());
    }
    SUBCASE("triangular strategy over Z") {
        auto p = pres_of("Z", {"x", "y"}, {"x^2 - 1", "y^3 - 1"});
        CHECK(p.strategy() == Strategy::Triangular);
        CHECK(p.normal_form(p.parse("x^3*y^3")) == p.parse("x"));
    }
    SUBCASE("strategy failure is reported on use") {
        CoeffRing z = CoeffRing::integers();
        Presentation p(z, {"x"}, {parse_poly("17*x", {"x"}, z)});
        CHECK_FALSE(p.has_strategy());
        CHECK_THROWS_AS(p.normal_form(parse_poly("x", {"x"}, z)), StrategyError);
    }
}

TEST_CASE("normal_form: idempotence and ring-homomorphism laws") {
    std::mt19937 rng(555);
    std::vector<Presentation> ps;
    ps.push_back(pres_of("Q", {"x", "y"}, {"x^2 - 4*x*y + y^2 - 1"}));
    ps.push_back(pres_of("GF(3)", {"x", "y"}, {"x^2 - y", "y^2"}));
    ps.push_back(pres_of("Z", {"x", "y"}, {"x^2 - 1", "y^4 - 1"}));
    ps.push_back(pres_of("Z/4", {"x"}, {"x^2 - 1"}));
    for (const auto& p : ps)
        for (int trial = 0; trial < 25; ++trial) {
            Poly g = rand_poly(p, 4, 5, rng), h = rand_poly(p, 4, 5, rng);
            Poly ng = p.normal_form(g);
            CHECK(p.normal_form(ng) == ng);
            CHECK(p.normal_form(g + h) == p.normal_form(ng + p.normal_form(h)));
            CHECK(p.normal_form(g * h) == p.normal_form(ng * p.normal_form(h)));
        }
}

TEST_CASE("groebner_basis: examples and the S-polynomial certificate") {
    SUBCASE("principal ideals are their own basis") {
        auto p = pres_of("Q", {"x"}, {"x^2 - 1"});
        CHECK(p.groebner() == std::vector<Poly>{p.parse("x^2 - 1")});
        auto p2 = pres_of("Q", {"x", "y"}, {"x^2 - 4*x*y + y^2 - 1"});
        CHECK(p2.groebner().size() == 1);
    }
    SUBCASE("GF(3) pair with a reduction to zero") {
        auto p = pres_of("GF(3)", {"x", "y"}, {"x^2 - y", "y^2"});
        CHECK(p.normal_form(p.parse("x^4")).is_zero());
        // idempotence of the reduced basis
        Presentation again(p.ring(), p.vars(), p.groebner());
        CHECK(again.groebner() == p.groebner());
    }
    SUBCASE("every S-polynomial of the returned basis reduces to zero") {
        std::vector<Presentation> ps;
        ps.push_back(pres_of("GF(3)", {"x", "y"}, {"x^2 - y", "y^2"}));
        ps.push_back(pres_of("Q", {"x", "y"}, {"x*y - 1", "x^2 + y^2 - 4"}));
        ps.push_back(pres_of("GF(2)", {"x", "y", "z"}, {"x^2 - y*z", "y^2 - z", "z^2"}));
        for (const auto& p : ps) {
            const auto& gb = p.groebner();
            for (std::size_t i = 0; i < gb.size(); ++i)
                for (std::size_t j = i + 1; j < gb.size(); ++j)
                    CHECK(reduce_by(s_polynomial(gb[i], gb[j]), gb).is_zero());
        }
    }
    SUBCASE("non-field rings are rejected") {
        auto p = pres_of("Z", {"x"}, {"x^2 - 1"});
        CHECK_THROWS_AS(p.groebner(), DomainError);
    }
}

TEST_CASE("k_basis: examples") {
    SUBCASE("K[x]/(x^2) has basis {1, x}") {
        auto p = pres_of("Q", {"x"}, {"x^2"});
        const KBasis& kb = p.k_basis();
        REQUIRE(kb.size() == 2);
        CHECK(kb.monomials[0] == MultiIndex{0});
        CHECK(kb.monomials[1] == MultiIndex{1});
    }
    SUBCASE("group algebra of Z/2 x Z/4 has 8 standard monomials") {
        auto p = pres_of("Z", {"x", "y"}, {"x^2 - 1", "y^4 - 1"});
        CHECK(p.k_basis().size() == 8);
    }
    SUBCASE("Q[x,y]/(xy) is infinite") {
        auto p = pres_of("Q", {"x", "y"}, {"x*y"});
        CHECK_FALSE(p.has_finite_basis());
        CHECK_THROWS_AS(p.k_basis(), InfiniteBasis);
    }
    SUBCASE("coordinates round-trip") {
        auto p = pres_of("GF(5)", {"x", "y"}, {"x^2 - 1", "y^2 - x"});
        Poly f = p.normal_form(p.parse("3*x*y + 2*y + 4"));
        CHECK(p.from_coordinates(p.coordinates(f)) == f);
    }
    SUBCASE("basis monomials are their own normal forms") {
        std::vector<Presentation> ps;
        ps.push_back(pres_of("GF(3)", {"x", "y"}, {"x^2 - y", "y^2"}));
        ps.push_back(pres_of("Z/6", {"x", "y"}, {"x^2 - 1", "y^3 - 1"}));
        for (const auto& p : ps)
            for (const auto& m : p.k_basis().monomials) {
                Poly mono = Poly::monomial(p.ring(), m, Rat(1));
                CHECK(p.normal_form(mono) == mono);
            }
    }
}

TEST_CASE("is_regular_sequence") {
    CHECK(is_regular_sequence(pres_of("Q", {"x", "y"}, {"x^2 - 1", "y^3 - 1"})));
    CHECK_FALSE(is_regular_sequence(pres_of("Q", {"x"}, {"x", "x"})));
    CHECK(is_regular_sequence(pres_of("Q", {"x", "y"}, {"x^2 - 4*x*y + y^2 - 1"})));
    // x is a zero divisor mod xy
    CHECK_FALSE(is_regular_sequence(pres_of("Q", {"x", "y"}, {"x*y", "x"})));
    // certified structurally over Z
    auto zt = regularity(pres_of("Z", {"x", "y"}, {"x^2 - 1", "y^2 - 1"}));
    CHECK(zt.regular);
    CHECK(zt.source == RegularityInfo::Source::CertifiedTriangular);
    // assumed when undecidable
    CoeffRing z = CoeffRing::integers();
    Presentation hard(z, {"x"}, {parse_poly("17*x", {"x"}, z)}, true);
    auto ra = regularity(hard);
    CHECK(ra.source == RegularityInfo::Source::Assumed);
    Presentation hard2(z, {"x"}, {parse_poly("17*x", {"x"}, z)}, false);
    CHECK_THROWS_AS(regularity(hard2), StrategyError);
}

TEST_CASE("hci_check_univariate: the content-grade trichotomy") {
    SUBCASE("17x over Z has content grade 1") {
        CoeffRing z = CoeffRing::integers();
        Presentation p(z, {"x"}, {parse_poly("17*x", {"x"}, z)});
        HciReport r = hci_check_univariate(p);
        CHECK(r.cls == HciClass::NotHCI);
        CHECK(r.reason == "content grade 1");
        CHECK(r.content == std::vector<Rat>{Rat(17)});
    }
    SUBCASE("x^n - 1 over Z has unit content") {
        for (int n : {2, 3, 6}) {
            auto p = pres_of("Z", {"x"}, {"x^" + std::to_string(n) + " - 1"});
            CHECK(hci_check_univariate(p).cls == HciClass::HCI);
        }
    }
    SUBCASE("2x over Z/4 is a zero divisor") {
        auto p = pres_of("Z/4", {"x"}, {"2*x"});
        HciReport r = hci_check_univariate(p);
        CHECK(r.cls == HciClass::ZeroDivisor);
        CHECK(r.reason == "content annihilator nonzero");
    }
    SUBCASE("monic polynomials are always HCI") {
        std::mt19937 rng(17);
        std::vector<std::string> ringtexts = {"Z", "Z/6", "GF(3)", "Q"};
        for (int trial = 0; trial < 40; ++trial) {
            CoeffRing ring = CoeffRing::from_text(ringtexts[trial % 4]);
            std::uniform_int_distribution<int> deg(1, 5), coef(-4, 4);
            Poly f = Poly::variable(ring, 1, 0, deg(rng));
            for (int k = 0; k < f.leading_term()->first[0]; ++k)
                f.add_term({k}, ring.normalize(Rat(coef(rng))));
            Presentation p(ring, {"x"}, {f});
            CHECK(hci_check_univariate(p).cls == HciClass::HCI);
        }
    }
    SUBCASE("quasi-monic example over Z/30") {
        auto p = pres_of("Z/30", {"x"}, {"15*x^3 + 10*x + 6"});
        // content (15,10,6) generates the unit ideal mod 30
        CHECK(hci_check_univariate(p).cls == HciClass::HCI);
    }
}

TEST_CASE("k_basis size equals the product of invariant factors for group algebras") {
    std::vector<std::vector<int>> groups = {{2}, {3}, {2, 2}, {2, 4}, {8}};
    for (const auto& g : groups) {
        std::vector<std::string> vars;
        std::vector<std::string> rels;
        long long order = 1;
        for (std::size_t j = 0; j < g.size(); ++j) {
            vars.push_back("x" + std::to_string(j));
            rels.push_back(vars.back() + "^" + std::to_string(g[j]) + " - 1");
            order *= g[j];
        }
        auto p = pres_of("Z", vars, rels);
        CHECK(p.k_basis().size() == static_cast<std::size_t>(order));
    }
}
