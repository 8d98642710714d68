// calculus.cpp

#include "hhci/calculus.hpp"

namespace hhci {

std::vector<std::vector<Poly>> jacobian(const Presentation& pres) {
    std::vector<std::vector<Poly>> jac(pres.nrels());
    for (int j = 0; j < pres.nrels(); ++j) {
        jac[j].reserve(pres.nvars());
        for (int i = 0; i < pres.nvars(); ++i)
            jac[j].push_back(pres.normal_form(partial(pres.relations()[j], i)));
    }
    return jac;
}

bool is_derivation(const DerivationVec& d, const Presentation& pres) {
    if (d.size() != static_cast<std::size_t>(pres.nvars()))
        throw DomainError("derivation vector length must match the variable count");
    for (int j = 0; j < pres.nrels(); ++j) {
        Poly acc(pres.ring(), pres.nvars());
        for (int i = 0; i < pres.nvars(); ++i)
            acc = acc + partial(pres.relations()[j], i) * d[static_cast<std::size_t>(i)];
        if (!pres.normal_form(acc).is_zero()) return false;
    }
    return true;
}

Poly hessian_entry(const Presentation& pres, int j, int i, int k) {
    MultiIndex a(pres.nvars(), 0);
    ++a[i];
    ++a[k];
    return pres.normal_form(divided_partial(pres.relations()[j], a));
}

NormalVec hessian_q(const DerivationVec& d, const Presentation& pres) {
    if (!is_derivation(d, pres))
        throw NotADerivation("hessian_q is only defined on derivations");
    NormalVec out;
    out.reserve(pres.nrels());
    for (int j = 0; j < pres.nrels(); ++j) {
        Poly acc(pres.ring(), pres.nvars());
        for (int i = 0; i < pres.nvars(); ++i)
            for (int k = i; k < pres.nvars(); ++k)
                acc = acc + hessian_entry(pres, j, i, k) * d[i] * d[k];
        out.push_back(pres.normal_form(acc));
    }
    return out;
}

NormalVec polarization(const DerivationVec& d1, const DerivationVec& d2,
                       const Presentation& pres) {
    if (!is_derivation(d1, pres) || !is_derivation(d2, pres))
        throw NotADerivation("polarization is only defined on derivations");
    NormalVec out;
    out.reserve(pres.nrels());
    for (int j = 0; j < pres.nrels(); ++j) {
        const Poly& f = pres.relations()[j];
        Poly acc(pres.ring(), pres.nvars());
        for (int i = 0; i < pres.nvars(); ++i) {
            // the diagonal carries the ordinary second derivative, which is
            // twice the divided one
            acc = acc + partial(partial(f, i), i) * d1[i] * d2[i];
            for (int k = i + 1; k < pres.nvars(); ++k)
                acc = acc + partial(partial(f, i), k) * (d1[i] * d2[k] + d1[k] * d2[i]);
        }
        out.push_back(pres.normal_form(acc));
    }
    return out;
}

DerivationVec parse_derivation(const std::string& csv, const Presentation& pres) {
    DerivationVec d;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        std::string piece = csv.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        d.push_back(pres.normal_form(pres.parse(piece)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (d.size() != static_cast<std::size_t>(pres.nvars()))
        throw DomainError("expected " + std::to_string(pres.nvars()) +
                          " derivation coefficients, got " + std::to_string(d.size()));
    return d;
}

}  // namespace hhci
