// bar.cpp

#include "hhci/bar.hpp"

#include <cmath>

namespace hhci {

namespace {

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

FiniteAlgebra FiniteAlgebra::from_presentation(const Presentation& pres,
                                               std::size_t max_dim) {
    if (!pres.ring().is_field())
        throw DomainError("the bar oracle requires field coefficients");
    const KBasis& kb = pres.k_basis();
    std::size_t d = kb.size();
    if (d == 0) throw DomainError("the zero algebra has no bar complex");
    if (d > max_dim)
        throw SizeError("algebra dimension " + std::to_string(d) +
                        " exceeds the bar-complex bound " + std::to_string(max_dim));
    if (kb.monomials[0] != MultiIndex(pres.nvars(), 0))
        throw DomainError("the unit must be the first basis element");
    std::vector<std::vector<std::vector<Rat>>> mult(
        d, std::vector<std::vector<Rat>>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Poly p = pres.nf_mul(Poly::monomial(pres.ring(), kb.monomials[i], Rat(1)),
                                 Poly::monomial(pres.ring(), kb.monomials[j], Rat(1)));
            mult[i][j] = pres.coordinates(p);
        }
    FiniteAlgebra alg(pres.ring(), std::move(mult));
    alg.validate();
    return alg;
}

FiniteAlgebra FiniteAlgebra::from_table(
    CoeffRing ring, std::vector<std::vector<std::vector<Rat>>> mult) {
    FiniteAlgebra alg(std::move(ring), std::move(mult));
    alg.validate();
    return alg;
}

void FiniteAlgebra::validate() const {
    std::size_t d = dim();
    for (std::size_t i = 0; i < d; ++i)
        if (mult_[i].size() != d)
            throw DomainError("multiplication table is not square");
    auto unit_vec = [&](std::size_t k) {
        std::vector<Rat> v(d, Rat(0));
        v[k] = Rat(1);
        return v;
    };
    for (std::size_t i = 0; i < d; ++i) {
        if (mult_[0][i] != unit_vec(i) || mult_[i][0] != unit_vec(i))
            throw DomainError("basis element 0 is not a two-sided unit");
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                std::vector<Rat> lhs = multiply(mult_[i][j], unit_vec(k));
                std::vector<Rat> rhs = multiply(unit_vec(i), mult_[j][k]);
                if (lhs != rhs)
                    throw DomainError("multiplication table is not associative");
            }
}

std::vector<Rat> FiniteAlgebra::multiply(const std::vector<Rat>& a,
                                         const std::vector<Rat>& b) const {
    std::size_t d = dim();
    std::vector<Rat> out(d, Rat(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j] == 0) continue;
            Rat f = ring_.mul(a[i], b[j]);
            for (std::size_t k = 0; k < d; ++k) {
                if (mult_[i][j][k] == 0) continue;
                out[k] = ring_.add(out[k], ring_.mul(f, mult_[i][j][k]));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// cochains

Cochain zero_cochain(const FiniteAlgebra& alg, int degree) {
    Cochain c;
    c.degree = degree;
    c.table.assign(ipow(alg.dim() - 1, degree),
                   std::vector<Rat>(alg.dim(), Rat(0)));
    return c;
}

std::size_t tuple_flat_index(const FiniteAlgebra& alg,
                             const std::vector<std::size_t>& t) {
    std::size_t radix = alg.dim() - 1;
    std::size_t idx = 0;
    for (std::size_t a : t) {
        if (a < 1 || a > radix) throw std::logic_error("tuple entry out of range");
        idx = idx * radix + (a - 1);
    }
    return idx;
}

namespace {

std::vector<std::size_t> tuple_of_index(const FiniteAlgebra& alg, std::size_t idx,
                                        int degree) {
    std::size_t radix = alg.dim() - 1;
    std::vector<std::size_t> t(degree);
    for (int i = degree - 1; i >= 0; --i) {
        t[i] = idx % radix + 1;
        idx /= radix;
    }
    return t;
}

}  // namespace

Cochain bar_differential(const Cochain& f, const FiniteAlgebra& alg) {
    const CoeffRing& ring = alg.ring();
    std::size_t d = alg.dim();
    Cochain out = zero_cochain(alg, f.degree + 1);
    int p = f.degree;
    for (std::size_t ti = 0; ti < out.table.size(); ++ti) {
        std::vector<std::size_t> a = tuple_of_index(alg, ti, p + 1);
        std::vector<Rat>& val = out.table[ti];
        auto add_scaled = [&](const std::vector<Rat>& v, int sign) {
            for (std::size_t k = 0; k < d; ++k)
                val[k] = sign > 0 ? ring.add(val[k], v[k]) : ring.sub(val[k], v[k]);
        };
        // a_1 . f(a_2..a_{p+1})
        {
            std::vector<std::size_t> rest(a.begin() + 1, a.end());
            const std::vector<Rat>& fv = f.table[tuple_flat_index(alg, rest)];
            std::vector<Rat> e(d, Rat(0));
            e[a[0]] = Rat(1);
            add_scaled(alg.multiply(e, fv), 1);
        }
        // inner face maps, products re-expanded with the unit class dropped
        for (int i = 0; i < p; ++i) {
            int sign = (i % 2 == 0) ? -1 : 1;
            const std::vector<Rat>& prod = alg.product(a[i], a[i + 1]);
            for (std::size_t k = 1; k < d; ++k) {
                if (prod[k] == 0) continue;
                std::vector<std::size_t> inner;
                inner.reserve(p);
                for (int t = 0; t < i; ++t) inner.push_back(a[t]);
                inner.push_back(k);
                for (int t = i + 2; t <= p; ++t) inner.push_back(a[t]);
                const std::vector<Rat>& fv = f.table[tuple_flat_index(alg, inner)];
                for (std::size_t c = 0; c < d; ++c)
                    val[c] = ring.add(val[c],
                                      ring.mul(ring.normalize(Rat(sign) * prod[k]), fv[c]));
            }
        }
        // f(a_1..a_p) . a_{p+1}
        {
            std::vector<std::size_t> rest(a.begin(), a.end() - 1);
            const std::vector<Rat>& fv = f.table[tuple_flat_index(alg, rest)];
            std::vector<Rat> e(d, Rat(0));
            e[a[p]] = Rat(1);
            add_scaled(alg.multiply(fv, e), (p + 1) % 2 == 0 ? 1 : -1);
        }
    }
    return out;
}

Matrix bar_matrix(const FiniteAlgebra& alg, int degree) {
    std::size_t d = alg.dim();
    std::size_t src = ipow(d - 1, degree) * d;
    std::size_t dst = ipow(d - 1, degree + 1) * d;
    Matrix m(alg.ring(), dst, src);
    for (std::size_t col = 0; col < src; ++col) {
        Cochain f = zero_cochain(alg, degree);
        f.table[col / d][col % d] = Rat(1);
        Cochain df = bar_differential(f, alg);
        for (std::size_t t = 0; t < df.table.size(); ++t)
            for (std::size_t k = 0; k < d; ++k)
                if (df.table[t][k] != 0) m.set(t * d + k, col, df.table[t][k]);
    }
    return m;
}

GradedModule bar_cohomology(const FiniteAlgebra& alg, int max_degree) {
    if (max_degree > 3)
        throw SizeError("the bar oracle is bounded at degree 3");
    GradedModule gm;
    Matrix prev(alg.ring(), alg.dim(), 0);
    for (int p = 0; p <= max_degree; ++p) {
        Matrix next = bar_matrix(alg, p);
        gm.by_degree[p] = cohomology_at(prev, next);
        prev = std::move(next);
    }
    return gm;
}

Cochain bar_cup(const Cochain& f, const Cochain& g, const FiniteAlgebra& alg) {
    if (f.degree + g.degree > 3)
        throw SizeError("the bar oracle is bounded at degree 3");
    Cochain out = zero_cochain(alg, f.degree + g.degree);
    for (std::size_t ti = 0; ti < out.table.size(); ++ti) {
        std::vector<std::size_t> a = tuple_of_index(alg, ti, out.degree);
        std::vector<std::size_t> left(a.begin(), a.begin() + f.degree);
        std::vector<std::size_t> right(a.begin() + f.degree, a.end());
        out.table[ti] = alg.multiply(f.table[tuple_flat_index(alg, left)],
                                     g.table[tuple_flat_index(alg, right)]);
    }
    return out;
}

namespace {

std::vector<Rat> cochain_coords(const Cochain& f, const FiniteAlgebra& alg) {
    std::vector<Rat> out;
    out.reserve(f.table.size() * alg.dim());
    for (const auto& v : f.table) out.insert(out.end(), v.begin(), v.end());
    return out;
}

}  // namespace

bool bar_is_cocycle(const Cochain& f, const FiniteAlgebra& alg) {
    Cochain df = bar_differential(f, alg);
    for (const auto& v : df.table)
        for (const Rat& x : v)
            if (x != 0) return false;
    return true;
}

bool bar_is_coboundary(const Cochain& f, const FiniteAlgebra& alg) {
    if (f.degree == 0) return false;
    Matrix d = bar_matrix(alg, f.degree - 1);
    return solve_linear(d, cochain_coords(f, alg)).has_value();
}

Cochain derivation_cochain(const DerivationVec& d, const Presentation& pres,
                           const FiniteAlgebra& alg) {
    if (!is_derivation(d, pres)) throw NotADerivation("not a derivation");
    const KBasis& kb = pres.k_basis();
    Cochain out = zero_cochain(alg, 1);
    for (std::size_t b = 1; b < kb.size(); ++b) {
        Poly mono = Poly::monomial(pres.ring(), kb.monomials[b], Rat(1));
        Poly img(pres.ring(), pres.nvars());
        for (int i = 0; i < pres.nvars(); ++i) img = img + partial(mono, i) * d[i];
        out.table[tuple_flat_index(alg, {b})] = pres.coordinates(pres.normal_form(img));
    }
    return out;
}

}  // namespace hhci
