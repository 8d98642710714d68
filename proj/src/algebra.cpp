// algebra.cpp

#include "hhci/algebra.hpp"

#include <algorithm>
#include <cassert>

namespace hhci {

namespace {

bool divides(const MultiIndex& a, const MultiIndex& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

MultiIndex exp_sub(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

MultiIndex exp_lcm(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool exp_coprime(const MultiIndex& a, const MultiIndex& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// leading variable and exponent of a pure-power leading term, if any
std::optional<std::pair<int, int>> pure_power(const MultiIndex& e) {
    int var = -1;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (var >= 0) return std::nullopt;
        var = static_cast<int>(i);
    }
    if (var < 0) return std::nullopt;  // constant
    return std::make_pair(var, e[var]);
}

}  // namespace

// ---------------------------------------------------------------------------
// division and Buchberger

Poly reduce_by(const Poly& g, const std::vector<Poly>& divisors,
               const MonomialOrder& order) {
    const CoeffRing& ring = g.ring();
    struct Rule {
        MultiIndex lt;
        Rat lc_inv;
        const Poly* f;
    };
    std::vector<Rule> rules;
    for (const Poly& f : divisors) {
        if (f.is_zero()) continue;
        auto lt = f.leading_term(order);
        if (!ring.is_unit(lt->second))
            throw StrategyError("divisor leading coefficient is not a unit");
        rules.push_back({lt->first, ring.inv(lt->second), &f});
    }
    Poly rem(ring, g.nvars());
    Poly work = g;
    while (!work.is_zero()) {
        auto lt = work.leading_term(order);
        const Rule* hit = nullptr;
        for (const Rule& r : rules)
            if (divides(r.lt, lt->first)) {
                hit = &r;
                break;
            }
        if (!hit) {
            Poly t = Poly::monomial(ring, lt->first, lt->second);
            rem = rem + t;
            work = work - t;
            continue;
        }
        Rat c = ring.mul(lt->second, hit->lc_inv);
        Poly t = Poly::monomial(ring, exp_sub(lt->first, hit->lt), c);
        work = work - t * (*hit->f);
    }
    return rem;
}

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order) {
    const CoeffRing& ring = f.ring();
    auto lf = f.leading_term(order), lg = g.leading_term(order);
    MultiIndex l = exp_lcm(lf->first, lg->first);
    Poly a = Poly::monomial(ring, exp_sub(l, lf->first), ring.inv(lf->second));
    Poly b = Poly::monomial(ring, exp_sub(l, lg->first), ring.inv(lg->second));
    return a * f - b * g;
}

std::vector<Poly> buchberger(std::vector<Poly> gens, const MonomialOrder& order) {
    if (gens.empty()) return gens;
    const CoeffRing& ring = gens.front().ring();
    if (!ring.is_field()) throw DomainError("Groebner bases require a field");
    std::vector<Poly> g;
    for (Poly& f : gens) {
        if (f.is_zero()) continue;
        g.push_back(f.scaled(ring.inv(f.leading_term(order)->second)));
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        MultiIndex li = g[i].leading_term(order)->first;
        MultiIndex lj = g[j].leading_term(order)->first;
        if (exp_coprime(li, lj)) continue;
        Poly r = reduce_by(s_polynomial(g[i], g[j], order), g, order);
        if (r.is_zero()) continue;
        r = r.scaled(ring.inv(r.leading_term(order)->second));
        for (std::size_t k = 0; k < g.size(); ++k) pairs.emplace_back(k, g.size());
        g.push_back(r);
    }
    // minimalize: drop members whose leading term is divisible by another's
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        MultiIndex li = g[i].leading_term(order)->first;
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            MultiIndex lj = g[j].leading_term(order)->first;
            if (divides(lj, li) && (lj != li || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    // tail-reduce for the unique reduced basis
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly r = reduce_by(minimal[i], others, order);
        reduced.push_back(r.scaled(ring.inv(r.leading_term(order)->second)));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return order.less(a.leading_term(order)->first, b.leading_term(order)->first);
    });
    return reduced;
}

// ---------------------------------------------------------------------------
// Presentation

Presentation::Presentation(CoeffRing ring, std::vector<std::string> vars,
                           std::vector<Poly> relations, bool assume_regular)
    : ring_(std::move(ring)),
      vars_(std::move(vars)),
      relations_(std::move(relations)),
      assume_regular_(assume_regular) {
    for (const Poly& f : relations_) {
        if (f.is_zero()) throw DomainError("zero relation in presentation");
        if (f.nvars() != nvars() || !(f.ring() == ring_))
            throw DomainError("relation ring/arity mismatch");
    }
    if (ring_.is_field()) {
        strategy_ = Strategy::GroebnerOverField;
        groebner_ = buchberger(relations_);
        rules_ = *groebner_;
    } else {
        // triangular shape: pure-power unit leading terms in distinct
        // variables, tails strictly under every threshold
        std::vector<int> lead_var(nrels(), -1), lead_exp(nrels(), 0);
        bool ok = nrels() <= nvars();
        for (int j = 0; j < nrels() && ok; ++j) {
            auto lt = relations_[j].leading_term();
            auto pp = pure_power(lt->first);
            if (!pp || !ring_.is_unit(lt->second)) {
                ok = false;
                no_strategy_reason_ = "relation " + std::to_string(j + 1) +
                                      " has no unit pure-power leading term";
                break;
            }
            lead_var[j] = pp->first;
            lead_exp[j] = pp->second;
            for (int i = 0; i < j; ++i)
                if (lead_var[i] == lead_var[j]) {
                    ok = false;
                    no_strategy_reason_ = "repeated leading variable";
                }
        }
        for (int j = 0; j < nrels() && ok; ++j)
            for (const auto& [e, c] : relations_[j].terms()) {
                auto lt = relations_[j].leading_term();
                if (e == lt->first) continue;
                for (int i = 0; i < nrels(); ++i)
                    if (e[lead_var[i]] >= lead_exp[i]) {
                        ok = false;
                        no_strategy_reason_ = "tail exceeds the triangular staircase";
                    }
            }
        if (ok) {
            strategy_ = nvars() == 1 ? Strategy::Univariate : Strategy::Triangular;
            rules_ = relations_;
        } else if (no_strategy_reason_.empty()) {
            no_strategy_reason_ = "more relations than variables";
        }
    }

    if (strategy_) {
        // staircase finiteness and the standard-monomial basis
        std::vector<MultiIndex> lts;
        for (const Poly& f : rules_) lts.push_back(f.leading_term()->first);
        std::vector<int> bound(nvars(), -1);
        for (const MultiIndex& lt : lts) {
            auto pp = pure_power(lt);
            if (!pp) continue;
            if (bound[pp->first] < 0 || pp->second < bound[pp->first])
                bound[pp->first] = pp->second;
        }
        bool finite = true;
        for (int i = 0; i < nvars(); ++i)
            if (bound[i] < 0) {
                finite = false;
                no_basis_reason_ = "no pure power of " + vars_[i] +
                                   " among the leading terms";
            }
        // a unit in the ideal collapses A to 0 (reduced basis is then {1})
        if (rules_.size() == 1 &&
            rules_[0].leading_term()->first == MultiIndex(nvars(), 0)) {
            basis_ = KBasis{};
            return;
        }
        if (finite) {
            KBasis kb;
            MultiIndex m(nvars(), 0);
            // enumerate the box under the staircase
            for (;;) {
                bool standard = true;
                for (const MultiIndex& lt : lts)
                    if (divides(lt, m)) {
                        standard = false;
                        break;
                    }
                if (standard) kb.monomials.push_back(m);
                int i = 0;
                while (i < nvars()) {
                    if (++m[i] < bound[i]) break;
                    m[i] = 0;
                    ++i;
                }
                if (i == nvars()) break;
            }
            std::sort(kb.monomials.begin(), kb.monomials.end(), grevlex_less);
            for (std::size_t i = 0; i < kb.monomials.size(); ++i)
                kb.index[kb.monomials[i]] = i;
            basis_ = std::move(kb);
        }
    }
}

Strategy Presentation::strategy() const {
    if (!strategy_)
        throw StrategyError("no normal-form strategy applies: " + no_strategy_reason_);
    return *strategy_;
}

Poly Presentation::normal_form(const Poly& g) const {
    if (!strategy_)
        throw StrategyError("no normal-form strategy applies: " + no_strategy_reason_);
    if (g.nvars() != nvars() || !(g.ring() == ring_))
        throw std::logic_error("normal_form: ring/arity mismatch");
    return reduce_by(g, rules_);
}

const std::vector<Poly>& Presentation::groebner() const {
    if (!groebner_) throw DomainError("Groebner bases require a field");
    return *groebner_;
}

bool Presentation::has_finite_basis() const { return basis_.has_value(); }

const KBasis& Presentation::k_basis() const {
    if (!strategy_)
        throw StrategyError("no normal-form strategy applies: " + no_strategy_reason_);
    if (!basis_) throw InfiniteBasis(no_basis_reason_);
    return *basis_;
}

std::size_t KBasis::index_of(const MultiIndex& m) const {
    auto it = index.find(m);
    if (it == index.end())
        throw std::logic_error("monomial is not a standard monomial of the basis");
    return it->second;
}

std::vector<Rat> Presentation::coordinates(const Poly& nf) const {
    const KBasis& kb = k_basis();
    std::vector<Rat> out(kb.size(), Rat(0));
    for (const auto& [e, c] : nf.terms()) out[kb.index_of(e)] = c;
    return out;
}

Poly Presentation::from_coordinates(const std::vector<Rat>& coords) const {
    const KBasis& kb = k_basis();
    Poly f(ring_, nvars());
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) f.add_term(kb.monomials[i], coords[i]);
    return f;
}

std::vector<Poly> groebner_basis(const Presentation& pres) { return pres.groebner(); }
KBasis k_basis(const Presentation& pres) { return pres.k_basis(); }

Matrix multiplication_matrix(const Presentation& pres, const Poly& g) {
    const KBasis& kb = pres.k_basis();
    Matrix m(pres.ring(), kb.size(), kb.size());
    for (std::size_t j = 0; j < kb.size(); ++j) {
        Poly img = pres.normal_form(g * Poly::monomial(pres.ring(), kb.monomials[j], Rat(1)));
        auto coords = pres.coordinates(img);
        for (std::size_t i = 0; i < kb.size(); ++i) m.set(i, j, coords[i]);
    }
    return m;
}

// ---------------------------------------------------------------------------
// ideal quotient and regular sequences

namespace {

Poly extend_vars(const Poly& f, int extra) {
    Poly r(f.ring(), f.nvars() + extra);
    for (const auto& [e, c] : f.terms()) {
        MultiIndex e2 = e;
        e2.resize(e.size() + static_cast<std::size_t>(extra), 0);
        r.add_term(e2, c);
    }
    return r;
}

Poly drop_last_var(const Poly& f) {
    Poly r(f.ring(), f.nvars() - 1);
    for (const auto& [e, c] : f.terms()) {
        assert(e.back() == 0);
        MultiIndex e2(e.begin(), e.end() - 1);
        r.add_term(e2, c);
    }
    return r;
}

// exact quotient h / f (h must lie in (f))
Poly exact_divide(const Poly& h, const Poly& f) {
    const CoeffRing& ring = h.ring();
    MonomialOrder ord{};
    auto lf = f.leading_term(ord);
    Rat lc_inv = ring.inv(lf->second);
    Poly q(ring, h.nvars());
    Poly work = h;
    while (!work.is_zero()) {
        auto lt = work.leading_term(ord);
        if (!divides(lf->first, lt->first))
            throw std::logic_error("exact_divide: not divisible");
        Poly t = Poly::monomial(ring, exp_sub(lt->first, lf->first),
                                ring.mul(lt->second, lc_inv));
        q = q + t;
        work = work - t * f;
    }
    return q;
}

}  // namespace

std::vector<Poly> ideal_quotient(const std::vector<Poly>& j_gens, const Poly& f) {
    const CoeffRing& ring = f.ring();
    if (!ring.is_field()) throw DomainError("ideal_quotient requires a field");
    // (J : f) = (J cap (f)) / f, with the intersection computed by
    // eliminating w from w*J + (1-w)*(f)
    int n = f.nvars();
    MonomialOrder elim{MonomialOrder::Kind::ElimLast};
    Poly w = Poly::variable(ring, n + 1, n);
    Poly one = Poly::constant(ring, n + 1, Rat(1));
    std::vector<Poly> gens;
    for (const Poly& g : j_gens) gens.push_back(w * extend_vars(g, 1));
    gens.push_back((one - w) * extend_vars(f, 1));
    std::vector<Poly> gb = buchberger(gens, elim);
    std::vector<Poly> out;
    for (const Poly& g : gb) {
        if (g.leading_term(elim)->first.back() != 0) continue;
        out.push_back(exact_divide(drop_last_var(g), f));
    }
    return out;
}

RegularityInfo regularity(const Presentation& pres) {
    const CoeffRing& ring = pres.ring();
    if (ring.is_field()) {
        // proper ideal
        const auto& gb = pres.groebner();
        for (const Poly& g : gb)
            if (g.leading_term()->first == MultiIndex(pres.nvars(), 0))
                return {false, RegularityInfo::Source::VerifiedGroebner};
        std::vector<Poly> j;
        for (int t = 0; t + 1 < pres.nrels(); ++t) {
            j.push_back(pres.relations()[t]);
            std::vector<Poly> jgb = buchberger(j);
            const Poly& next = pres.relations()[t + 1];
            for (const Poly& q : ideal_quotient(jgb, next))
                if (!reduce_by(q, jgb).is_zero())
                    return {false, RegularityInfo::Source::VerifiedGroebner};
        }
        return {true, RegularityInfo::Source::VerifiedGroebner};
    }
    if (pres.has_strategy() &&
        (pres.strategy() == Strategy::Triangular || pres.strategy() == Strategy::Univariate))
        // monic triangular relations in distinct variables are always regular
        return {true, RegularityInfo::Source::CertifiedTriangular};
    if (pres.assume_regular()) return {true, RegularityInfo::Source::Assumed};
    throw StrategyError(
        "regularity is undecidable for this ring/strategy; pass assume_regular");
}

bool is_regular_sequence(const Presentation& pres) { return regularity(pres).regular; }

// ---------------------------------------------------------------------------
// homological complete intersection test in one variable

std::string to_text(HciClass c) {
    switch (c) {
        case HciClass::HCI: return "HCI";
        case HciClass::NotHCI: return "NotHCI";
        case HciClass::ZeroDivisor: return "ZeroDivisor";
    }
    return "?";
}

HciReport hci_check_univariate(const Presentation& pres) {
    if (pres.nvars() != 1 || pres.nrels() != 1)
        throw DomainError("hci_check_univariate expects one variable and one relation");
    const CoeffRing& ring = pres.ring();
    const Poly& f = pres.relations()[0];
    HciReport rep;
    rep.content = content_ideal(f);

    if (ring.is_field()) {
        // a nonzero polynomial over a field has unit content
        rep.cls = HciClass::HCI;
        rep.reason = "content is the unit ideal";
        return rep;
    }

    if (ring.tag() == CoeffRing::Tag::Integers) {
        Int g = 0;
        for (const Rat& c : rep.content) g = boost::multiprecision::gcd(g, numerator(c));
        if (g == 0) {
            rep.cls = HciClass::ZeroDivisor;
            rep.reason = "content annihilator nonzero";
            return rep;
        }
        if (g == 1) {
            rep.cls = HciClass::HCI;
            rep.reason = "content is the unit ideal";
            return rep;
        }
        // Ext^1_Z(Z/(g), Z) = coker(g) from the length-one free resolution
        Matrix d_in(ring, 1, 1), d_out(ring, 0, 1);
        d_in.set(0, 0, Rat(g));
        ModuleInvariants ext1 = cohomology_at(d_in, d_out);
        rep.cls = ext1.is_zero() ? HciClass::HCI : HciClass::NotHCI;
        rep.reason = ext1.is_zero() ? "content grade at least 2" : "content grade 1";
        return rep;
    }

    // Z/n: annihilator of the content by a Howell kernel computation
    const Int& n = ring.modulus();
    Matrix m(ring, static_cast<std::size_t>(rep.content.size()), 1);
    for (std::size_t i = 0; i < rep.content.size(); ++i) m.set(i, 0, rep.content[i]);
    Matrix ann = kernel(m);
    bool ann_nonzero = false;
    for (std::size_t j = 0; j < ann.cols(); ++j)
        if (ann.at(0, j) != 0) ann_nonzero = true;
    if (rep.content.empty()) ann_nonzero = true;
    if (ann_nonzero) {
        rep.cls = HciClass::ZeroDivisor;
        rep.reason = "content annihilator nonzero";
        return rep;
    }
    // Ext^1 of (Z/n)/(g) from the 2-periodic resolution (. g . n/g . g .)
    Int g = n;
    for (const Rat& c : rep.content) g = boost::multiprecision::gcd(g, numerator(c));
    Matrix d_in(ring, 1, 1), d_out(ring, 1, 1);
    d_in.set(0, 0, Rat(g));
    d_out.set(0, 0, Rat(n / g));
    ModuleInvariants ext1 = cohomology_at(d_in, d_out);
    rep.cls = ext1.is_zero() ? HciClass::HCI : HciClass::NotHCI;
    rep.reason = ext1.is_zero() ? "content is the unit ideal" : "content grade 1";
    return rep;
}

}  // namespace hhci
