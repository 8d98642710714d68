// abelian.cpp

#include "hhci/abelian.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace hhci {

AbelianGroup AbelianGroup::from_factors(std::vector<Int> factors) {
    if (factors.empty()) throw DomainError("the trivial group needs at least one factor");
    std::map<Int, std::vector<int>> prime_exps;  // prime -> exponents, descending
    for (Int m : factors) {
        if (m < 2) throw DomainError("group factors must be >= 2");
        for (Int p = 2; p * p <= m; ++p) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            if (e) prime_exps[p].push_back(e);
        }
        if (m > 1) prime_exps[m].push_back(1);
    }
    std::size_t rank = 0;
    for (auto& [p, exps] : prime_exps) {
        std::sort(exps.rbegin(), exps.rend());
        rank = std::max(rank, exps.size());
    }
    std::vector<Int> inv(rank, Int(1));
    for (auto& [p, exps] : prime_exps)
        for (std::size_t i = 0; i < exps.size(); ++i) {
            Int pe = 1;
            for (int k = 0; k < exps[i]; ++k) pe *= p;
            inv[i] *= pe;  // slot 0 gets the largest factor
        }
    std::reverse(inv.begin(), inv.end());
    return AbelianGroup{std::move(inv)};
}

Int AbelianGroup::order() const {
    Int o = 1;
    for (const Int& n : invariant_factors) o *= n;
    return o;
}

CliffordFactor clifford_factor(const Int& n) {
    if (n < 2) throw DomainError("cyclic factor order must be >= 2");
    return CliffordFactor{n, n % 2 == 0 ? Int(n / 2) : Int(0)};
}

// ---------------------------------------------------------------------------
// the factor complex

namespace {

struct TauSigmaMono {
    std::uint32_t mask;     // square-free tau part
    std::vector<int> sexp;  // sigma exponents
};

void sexps_rec(int r, int total, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == r - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = 0; e <= total; ++e) {
        cur.push_back(e);
        sexps_rec(r, total - e, cur, out);
        cur.pop_back();
    }
}

std::vector<TauSigmaMono> factor_monomials(int r, int degree) {
    std::vector<TauSigmaMono> out;
    for (int tw = degree % 2; tw <= std::min(r, degree); tw += 2) {
        int sw = (degree - tw) / 2;
        std::vector<std::vector<int>> sexps;
        if (r == 0) {
            if (sw == 0) sexps.push_back({});
        } else {
            std::vector<int> cur;
            sexps_rec(r, sw, cur, sexps);
        }
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << r); ++mask) {
            if (std::popcount(mask) != tw) continue;
            for (const auto& e : sexps) out.push_back({mask, e});
        }
    }
    return out;
}

struct FactorComplex {
    std::vector<Int> orders;   // n_j
    std::size_t group_copies;  // 1 for group cohomology, |G| for Hochschild

    Matrix matrix(const CoeffRing& ring, int degree) const {
        int r = static_cast<int>(orders.size());
        auto src = factor_monomials(r, degree);
        auto dst = factor_monomials(r, degree + 1);
        std::map<std::pair<std::uint32_t, std::vector<int>>, std::size_t> dst_index;
        for (std::size_t i = 0; i < dst.size(); ++i)
            dst_index[{dst[i].mask, dst[i].sexp}] = i;
        Matrix m(ring, dst.size() * group_copies, src.size() * group_copies);
        for (std::size_t mi = 0; mi < src.size(); ++mi) {
            std::uint32_t mask = src[mi].mask;
            int pos = 0;
            for (int l = 0; l < r; ++l) {
                if (!(mask & (std::uint32_t(1) << l))) continue;
                int sign = (pos % 2 == 0) ? 1 : -1;
                ++pos;
                std::vector<int> e = src[mi].sexp;
                ++e[l];
                std::size_t di = dst_index.at({mask & ~(std::uint32_t(1) << l), e});
                Rat v = ring.normalize(Rat(sign) * Rat(orders[l]));
                if (v == 0) continue;
                for (std::size_t gidx = 0; gidx < group_copies; ++gidx)
                    m.set(di * group_copies + gidx, mi * group_copies + gidx, v);
            }
        }
        return m;
    }
};

GradedModule complex_cohomology(const FactorComplex& cx, const CoeffRing& ring,
                                int max_degree) {
    GradedModule gm;
    int r = static_cast<int>(cx.orders.size());
    Matrix prev(ring, factor_monomials(r, 0).size() * cx.group_copies, 0);
    for (int p = 0; p <= max_degree; ++p) {
        Matrix next = cx.matrix(ring, p);
        gm.by_degree[p] = cohomology_at(prev, next);
        prev = std::move(next);
    }
    return gm;
}

}  // namespace

GradedModule group_cohomology(const AbelianGroup& g, const CoeffRing& k, int max_degree) {
    FactorComplex cx{g.invariant_factors, 1};
    return complex_cohomology(cx, k, max_degree);
}

GradedModule group_hh(const AbelianGroup& g, const CoeffRing& k, int max_degree) {
    FactorComplex cx{g.invariant_factors, static_cast<std::size_t>(g.order())};
    return complex_cohomology(cx, k, max_degree);
}

ChangeOfBasis clifford_change_of_basis(const Int& n) {
    CliffordFactor cf = clifford_factor(n);
    ChangeOfBasis cb;
    cb.n = n;
    cb.m = cf.m;
    cb.eta_coefficient = (n - 1) / 2;
    cb.substitution = "tau = x*t, sigma = x^" + n.str() + "*s";
    Int binom = n * (n - 1) / 2;
    cb.general_model = "t^2 = " + binom.str() + "*x^" + Int(n - 2).str() +
                       "*s, d(t) = " + n.str() + "*x^" + Int(n - 1).str() + "*s";
    cb.adapted_model =
        "tau^2 = " + cf.m.str() + "*sigma, d(tau) = " + n.str() + "*sigma";
    return cb;
}

Presentation group_presentation(const AbelianGroup& g, const CoeffRing& k) {
    std::vector<std::string> vars;
    std::vector<Poly> rels;
    int r = g.rank();
    for (int j = 0; j < r; ++j) vars.push_back("x" + std::to_string(j + 1));
    for (int j = 0; j < r; ++j) {
        Int n = g.invariant_factors[j];
        Poly f = Poly::variable(k, r, j, static_cast<int>(n));
        f.add_term(MultiIndex(r, 0), Rat(-1));
        rels.push_back(f);
    }
    return Presentation(k, std::move(vars), std::move(rels));
}

}  // namespace hhci
