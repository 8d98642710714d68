// cyclic.cpp

#include "hhci/cyclic.hpp"

namespace hhci {

std::string to_text(CyclicClass c) {
    switch (c) {
        case CyclicClass::Separable: return "Separable";
        case CyclicClass::GenericallyUnramified: return "GenericallyUnramified";
        case CyclicClass::TotallyRamified: return "TotallyRamified";
        case CyclicClass::Mixed: return "Mixed";
    }
    return "?";
}

namespace {

int deg_or_zero(const Poly& f) {
    auto d = f.total_degree();
    return d ? *d : 0;
}

Poly lift_to_xyz(const Poly& f, int y_extra, int z_extra) {
    // embed a polynomial in x into K[x,y,z], optionally multiplied by y or z
    Poly r(f.ring(), 3);
    for (const auto& [e, c] : f.terms()) r.add_term({e[0], y_extra, z_extra}, c);
    return r;
}

}  // namespace

CyclicReport cyclic_hh(const Poly& f_in, int max_degree) {
    const CoeffRing& ring = f_in.ring();
    if (!ring.is_field())
        throw DomainError("cyclic_hh requires field coefficients; use hh over " +
                          ring.to_text());
    if (f_in.nvars() != 1) throw DomainError("cyclic_hh expects one variable");
    if (f_in.is_zero()) throw DomainError("cyclic_hh requires f != 0");

    CyclicReport rep{Poly(ring, 1), Poly(ring, 1), Poly(ring, 1), Poly(ring, 1),
                     CyclicClass::Mixed, "", {}};
    rep.f = f_in.scaled(ring.inv(f_in.leading_term()->second));
    Poly fp = partial(rep.f, 0);
    rep.g = gcd_univariate(rep.f, fp);
    rep.h = divmod_univariate(rep.f, rep.g).first;

    Presentation pres(ring, {"x"}, {rep.f});
    rep.fdiv2 = pres.normal_form(divided_partial(rep.f, {2}));

    int df = deg_or_zero(rep.f), dg = deg_or_zero(rep.g);
    if (dg == 0)
        rep.classification = CyclicClass::Separable;
    else if (dg == df)
        rep.classification = CyclicClass::TotallyRamified;
    else
        rep.classification = CyclicClass::Mixed;

    // graded presentation K[x,y,z]/(f, g y, g z, y^2 + f^(2) h^2 z) with
    // x in degree 0, y in degree 1, z in degree 2; the last relation loses
    // its z-term whenever f^(2) h^2 = 0 mod f (always in char != 2)
    Poly w = pres.normal_form(rep.fdiv2 * rep.h * rep.h);
    std::vector<std::string> rel_texts;
    std::vector<std::string> xyz = {"x", "y", "z"};
    rel_texts.push_back(to_text(lift_to_xyz(rep.f, 0, 0), xyz));
    rel_texts.push_back(to_text(lift_to_xyz(rep.g, 1, 0), xyz));
    rel_texts.push_back(to_text(lift_to_xyz(rep.g, 0, 1), xyz));
    {
        Poly y2 = Poly::monomial(ring, {0, 2, 0}, Rat(1));
        Poly last = y2 + lift_to_xyz(w, 0, 1);
        rel_texts.push_back(to_text(last, xyz));
    }
    std::string text = ring.to_text() + "[x,y,z]/(";
    for (std::size_t i = 0; i < rel_texts.size(); ++i)
        text += (i ? ", " : "") + rel_texts[i];
    text += ")";
    rep.presentation_text = text;

    for (int p = 0; p <= max_degree; ++p) {
        ModuleInvariants inv;
        inv.free_rank = (p == 0) ? df : dg;
        rep.dims.by_degree[p] = inv;
    }
    return rep;
}

ThetaReport theta(const Poly& f) {
    const CoeffRing& ring = f.ring();
    if (!ring.is_field()) throw DomainError("theta requires field coefficients");
    if (f.is_zero()) throw DomainError("theta requires f != 0");
    Poly fm = f.scaled(ring.inv(f.leading_term()->second));
    Poly g = gcd_univariate(fm, partial(fm, 0));
    Poly h = divmod_univariate(fm, g).first;
    return ThetaReport{h, deg_or_zero(g)};
}

PeriodicModel periodic_model(const Poly& f) {
    if (f.nvars() != 1) throw DomainError("periodic_model expects one variable");
    if (f.is_zero()) throw ZeroDivisor("the zero polynomial is a zero divisor");
    Presentation pres(f.ring(), {"x"}, {f});
    HciReport hci = hci_check_univariate(pres);
    if (hci.cls == HciClass::ZeroDivisor)
        throw ZeroDivisor("f is a zero divisor: " + hci.reason);
    PeriodicModel model{delta_quotient(f), hci.cls, hci.cls == HciClass::HCI, ""};
    // the defining identity of Delta
    Poly xp = Poly::variable(f.ring(), 2, 0), xpp = Poly::variable(f.ring(), 2, 1);
    if (!((xpp - xp) * model.delta == substitute(f, {xpp}) - substitute(f, {xp})))
        throw std::logic_error("difference-quotient identity failed");
    std::string dtext = to_text(model.delta, {"x'", "x''"});
    model.description =
        "2-periodic complex over A^ev: ... --x''-x'--> A^ev --" + dtext +
        "--> A^ev --x''-x'--> A^ev --> A; " +
        (model.exact ? "exact (resolves A)"
                     : "not exact (" + to_text(hci.cls) + ": " + hci.reason + ")");
    return model;
}

}  // namespace hhci
