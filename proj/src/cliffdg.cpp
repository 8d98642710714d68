// cliffdg.cpp

#include "hhci/cliffdg.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>

namespace hhci {

int CliffKey::t_weight() const { return std::popcount(tmask); }
int CliffKey::s_weight() const {
    int w = 0;
    for (int e : sexp) w += e;
    return w;
}
int CliffKey::degree() const { return t_weight() + 2 * s_weight(); }

void CliffordElement::add_term(const CliffKey& key, const Poly& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
        return;
    }
    Poly sum = it->second + coeff;
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = sum;
}

std::optional<int> CliffordElement::homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [k, c] : terms_) {
        int kd = k.degree();
        if (!d)
            d = kd;
        else if (*d != kd)
            return std::nullopt;
    }
    return d;
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
    CliffordElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
    return *this + (-o);
}

CliffordElement CliffordElement::operator-() const {
    CliffordElement r(ring_, nvars_, nrels_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

CliffordElement CliffordElement::scaled(const Poly& a) const {
    CliffordElement r(ring_, nvars_, nrels_);
    for (const auto& [k, c] : terms_) r.add_term(k, c * a);
    return r;
}

CliffordElement cliff_scalar(const Presentation& pres, const Poly& a) {
    CliffordElement u(pres);
    u.add_term(CliffKey{0, std::vector<int>(pres.nrels(), 0)}, pres.normal_form(a));
    return u;
}

CliffordElement cliff_t(const Presentation& pres, int i) {
    CliffordElement u(pres);
    u.add_term(CliffKey{std::uint32_t(1) << i, std::vector<int>(pres.nrels(), 0)},
               Poly::constant(pres.ring(), pres.nvars(), Rat(1)));
    return u;
}

CliffordElement cliff_s(const Presentation& pres, int j) {
    CliffordElement u(pres);
    std::vector<int> e(pres.nrels(), 0);
    e[j] = 1;
    u.add_term(CliffKey{0, e}, Poly::constant(pres.ring(), pres.nvars(), Rat(1)));
    return u;
}

// ---------------------------------------------------------------------------
// multiplication

namespace {

std::vector<int> mask_bits(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i);
    return out;
}

struct Word {
    explicit Word(Poly c) : coeff(std::move(c)) {}
    Poly coeff;
    std::vector<int> tword;
    std::vector<int> sexp;
};

}  // namespace

CliffordElement clifford_mul(const CliffordElement& u, const CliffordElement& v,
                             const Presentation& pres) {
    CliffordElement out(pres);
    std::vector<Word> work;
    for (const auto& [ku, cu] : u.terms())
        for (const auto& [kv, cv] : v.terms()) {
            Word w(pres.normal_form(cu * cv));
            w.tword = mask_bits(ku.tmask);
            for (int b : mask_bits(kv.tmask)) w.tword.push_back(b);
            w.sexp.resize(pres.nrels());
            for (int j = 0; j < pres.nrels(); ++j) w.sexp[j] = ku.sexp[j] + kv.sexp[j];
            work.push_back(std::move(w));
        }
    // sort t-factors by adjacent transpositions; every swap or square
    // contraction emits a Hessian correction with strictly fewer t-factors
    while (!work.empty()) {
        Word w = std::move(work.back());
        work.pop_back();
        if (w.coeff.is_zero()) continue;
        bool reduced = true;
        for (std::size_t r = 0; r + 1 < w.tword.size(); ++r) {
            int a = w.tword[r], b = w.tword[r + 1];
            if (a < b) continue;
            reduced = false;
            if (a == b) {
                // t_i^2 -> sum_j (divided d2 f_j/dx_i^2) s_j
                for (int j = 0; j < pres.nrels(); ++j) {
                    Poly h = hessian_entry(pres, j, a, a);
                    if (h.is_zero()) continue;
                    Word nw(pres.normal_form(w.coeff * h));
                    nw.tword = w.tword;
                    nw.tword.erase(nw.tword.begin() + r, nw.tword.begin() + r + 2);
                    nw.sexp = w.sexp;
                    ++nw.sexp[j];
                    work.push_back(std::move(nw));
                }
            } else {
                // t_a t_b = -t_b t_a + sum_j (d2 f_j/dx_b dx_a) s_j,  a > b
                Word sw(-w.coeff);
                sw.tword = w.tword;
                std::swap(sw.tword[r], sw.tword[r + 1]);
                sw.sexp = w.sexp;
                work.push_back(std::move(sw));
                for (int j = 0; j < pres.nrels(); ++j) {
                    Poly h = hessian_entry(pres, j, b, a);
                    if (h.is_zero()) continue;
                    Word nw(pres.normal_form(w.coeff * h));
                    nw.tword = w.tword;
                    nw.tword.erase(nw.tword.begin() + r, nw.tword.begin() + r + 2);
                    nw.sexp = w.sexp;
                    ++nw.sexp[j];
                    work.push_back(std::move(nw));
                }
            }
            break;
        }
        if (!reduced) continue;
        CliffKey key;
        for (int b : w.tword) key.tmask |= std::uint32_t(1) << b;
        key.sexp = w.sexp;
        out.add_term(key, w.coeff);
    }
    return out;
}

CliffordElement differential(const CliffordElement& u, const Presentation& pres) {
    auto jac = jacobian(pres);
    CliffordElement out(pres);
    for (const auto& [key, coeff] : u.terms()) {
        std::vector<int> bits = mask_bits(key.tmask);
        for (std::size_t r = 0; r < bits.size(); ++r) {
            int sign = (r % 2 == 0) ? 1 : -1;
            for (int j = 0; j < pres.nrels(); ++j) {
                const Poly& jij = jac[j][bits[r]];
                if (jij.is_zero()) continue;
                CliffKey nk;
                nk.tmask = key.tmask & ~(std::uint32_t(1) << bits[r]);
                nk.sexp = key.sexp;
                ++nk.sexp[j];
                Poly c = pres.normal_form(coeff * jij);
                out.add_term(nk, sign > 0 ? c : -c);
            }
        }
    }
    return out;
}

std::string to_text(const CliffordElement& u, const Presentation& pres) {
    if (u.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : u.terms()) {
        if (!first) os << " + ";
        first = false;
        std::string mono;
        for (int b : mask_bits(key.tmask)) {
            if (!mono.empty()) mono += "*";
            mono += "t" + std::to_string(b + 1);
        }
        for (int j = 0; j < static_cast<int>(key.sexp.size()); ++j) {
            if (key.sexp[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "s" + std::to_string(j + 1);
            if (key.sexp[j] > 1) mono += "^" + std::to_string(key.sexp[j]);
        }
        std::string ctext = pres.text(coeff);
        if (mono.empty()) {
            os << ctext;
        } else if (ctext == "1") {
            os << mono;
        } else if (coeff.terms().size() == 1 && ctext.find(' ') == std::string::npos &&
                   ctext[0] != '-') {
            os << ctext << "*" << mono;
        } else {
            os << "(" << ctext << ")*" << mono;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// chain-level plumbing

namespace {

void enumerate_sexps(int c, int total, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == c - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = 0; e <= total; ++e) {
        cur.push_back(e);
        enumerate_sexps(c, total - e, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> sexps_of_weight(int c, int w) {
    if (c == 0) return w == 0 ? std::vector<std::vector<int>>{{}} : std::vector<std::vector<int>>{};
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    enumerate_sexps(c, w, cur, out);
    return out;
}

std::vector<CliffKey> monomials_of_biweight(int n, int c, int tw, int sw) {
    std::vector<CliffKey> out;
    if (tw < 0 || tw > n || sw < 0) return out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        if (std::popcount(mask) != tw) continue;
        for (auto& e : sexps_of_weight(c, sw)) out.push_back(CliffKey{mask, e});
    }
    return out;
}

// flat index: monomial slot * dim(A) + basis slot
struct DegreeBasis {
    std::vector<CliffKey> monos;
    std::map<CliffKey, std::size_t> index;
    std::size_t dim_a = 0;

    std::size_t size() const { return monos.size() * dim_a; }
    std::size_t flat(const CliffKey& k, std::size_t b) const {
        auto it = index.find(k);
        if (it == index.end()) throw std::logic_error("clifford monomial out of range");
        return it->second * dim_a + b;
    }
};

DegreeBasis degree_basis(const Presentation& pres, std::vector<CliffKey> monos) {
    DegreeBasis db;
    db.monos = std::move(monos);
    for (std::size_t i = 0; i < db.monos.size(); ++i) db.index[db.monos[i]] = i;
    db.dim_a = pres.k_basis().size();
    return db;
}

// multiplication-by-jacobian-entry matrices on the K-basis of A, indexed
// [relation j][variable i]; empty optional where the entry vanishes
using JacMul = std::vector<std::vector<std::optional<Matrix>>>;

JacMul jac_mult_table(const Presentation& pres, const std::vector<std::vector<Poly>>& jac) {
    JacMul jm(jac.size(), std::vector<std::optional<Matrix>>(pres.nvars()));
    for (std::size_t j = 0; j < jac.size(); ++j)
        for (int i = 0; i < pres.nvars(); ++i)
            if (!jac[j][i].is_zero()) jm[j][i] = multiplication_matrix(pres, jac[j][i]);
    return jm;
}

// differential matrix between arbitrary monomial slices
Matrix diff_matrix_between(const Presentation& pres, const DegreeBasis& src,
                           const DegreeBasis& dst, const JacMul& jmul) {
    const KBasis& kb = pres.k_basis();
    Matrix m(pres.ring(), dst.size(), src.size());
    for (std::size_t mi = 0; mi < src.monos.size(); ++mi) {
        const CliffKey& key = src.monos[mi];
        std::vector<int> bits = mask_bits(key.tmask);
        for (std::size_t r = 0; r < bits.size(); ++r) {
            int sign = (r % 2 == 0) ? 1 : -1;
            for (int j = 0; j < pres.nrels(); ++j) {
                const auto& mul = jmul[j][bits[r]];
                if (!mul) continue;
                CliffKey nk;
                nk.tmask = key.tmask & ~(std::uint32_t(1) << bits[r]);
                nk.sexp = key.sexp;
                ++nk.sexp[j];
                for (std::size_t b = 0; b < kb.size(); ++b) {
                    std::size_t col = mi * src.dim_a + b;
                    for (std::size_t i = 0; i < kb.size(); ++i) {
                        const Rat& v = mul->at(i, b);
                        if (v == 0) continue;
                        std::size_t row = dst.flat(nk, i);
                        m.set(row, col, m.at(row, col) + (sign > 0 ? v : -v));
                    }
                }
            }
        }
    }
    return m;
}

}  // namespace

std::vector<CliffKey> cliff_monomials(const Presentation& pres, int degree) {
    std::vector<CliffKey> out;
    if (degree < 0) return out;
    for (int tw = degree % 2; tw <= std::min(pres.nvars(), degree); tw += 2) {
        int rem = degree - tw;
        auto part = monomials_of_biweight(pres.nvars(), pres.nrels(), tw, rem / 2);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

Matrix differential_matrix(const Presentation& pres, int degree) {
    JacMul jmul = jac_mult_table(pres, jacobian(pres));
    DegreeBasis src = degree_basis(pres, cliff_monomials(pres, degree));
    DegreeBasis dst = degree_basis(pres, cliff_monomials(pres, degree + 1));
    return diff_matrix_between(pres, src, dst, jmul);
}

std::vector<Rat> element_coordinates(const Presentation& pres,
                                     const CliffordElement& u, int degree) {
    DegreeBasis db = degree_basis(pres, cliff_monomials(pres, degree));
    std::vector<Rat> out(db.size(), Rat(0));
    for (const auto& [key, coeff] : u.terms()) {
        if (key.degree() != degree)
            throw std::logic_error("element is not homogeneous of the requested degree");
        auto coords = pres.coordinates(pres.normal_form(coeff));
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (coords[i] != 0) out[db.flat(key, i)] = coords[i];
    }
    return out;
}

CliffordElement element_from_coordinates(const Presentation& pres, int degree,
                                         const std::vector<Rat>& coords) {
    DegreeBasis db = degree_basis(pres, cliff_monomials(pres, degree));
    if (coords.size() != db.size()) throw std::logic_error("coordinate length mismatch");
    CliffordElement u(pres);
    const KBasis& kb = pres.k_basis();
    for (std::size_t mi = 0; mi < db.monos.size(); ++mi)
        for (std::size_t b = 0; b < kb.size(); ++b) {
            const Rat& c = coords[mi * db.dim_a + b];
            if (c == 0) continue;
            u.add_term(db.monos[mi], Poly::monomial(pres.ring(), kb.monomials[b], c));
        }
    return u;
}

bool is_coboundary(const CliffordElement& u, const Presentation& pres) {
    if (u.is_zero()) return true;
    auto deg = u.homogeneous_degree();
    if (!deg) throw std::logic_error("is_coboundary expects a homogeneous element");
    if (*deg == 0) return false;
    Matrix d = differential_matrix(pres, *deg - 1);
    return solve_linear(d, element_coordinates(pres, u, *deg)).has_value();
}

// ---------------------------------------------------------------------------
// cohomology

namespace {

std::vector<std::string> gather_assumptions(const Presentation& pres) {
    std::vector<std::string> out;
    RegularityInfo info = regularity(pres);
    if (!info.regular)
        throw StrategyError("the relations do not form a regular sequence");
    if (info.source == RegularityInfo::Source::Assumed)
        out.push_back("regular_sequence: assumed");
    return out;
}

}  // namespace

GradedModule hh(const Presentation& pres, int max_degree) {
    GradedModule gm;
    gm.assumptions = gather_assumptions(pres);
    pres.k_basis();  // InfiniteBasis propagates
    JacMul jac = jac_mult_table(pres, jacobian(pres));
    std::vector<DegreeBasis> bases;
    for (int p = 0; p <= max_degree + 1; ++p)
        bases.push_back(degree_basis(pres, cliff_monomials(pres, p)));
    Matrix prev(pres.ring(), bases[0].size(), 0);
    for (int p = 0; p <= max_degree; ++p) {
        Matrix next = diff_matrix_between(pres, bases[p], bases[p + 1], jac);
        gm.by_degree[p] = cohomology_at(prev, next);
        prev = std::move(next);
    }
    return gm;
}

HodgeTable hodge(const Presentation& pres, int max_degree) {
    HodgeTable table;
    table.assumptions = gather_assumptions(pres);
    pres.k_basis();
    JacMul jac = jac_mult_table(pres, jacobian(pres));
    for (int p = 0; p <= max_degree; ++p)
        for (int j = 0; 2 * j <= p; ++j) {
            int i = p - 2 * j;
            if (i > pres.nvars()) continue;
            DegreeBasis mid =
                degree_basis(pres, monomials_of_biweight(pres.nvars(), pres.nrels(), i, j));
            DegreeBasis src = degree_basis(
                pres, monomials_of_biweight(pres.nvars(), pres.nrels(), i + 1, j - 1));
            DegreeBasis dst = degree_basis(
                pres, monomials_of_biweight(pres.nvars(), pres.nrels(), i - 1, j + 1));
            Matrix d_in = diff_matrix_between(pres, src, mid, jac);
            Matrix d_out = diff_matrix_between(pres, mid, dst, jac);
            table.entries[{i, j}] = cohomology_at(d_in, d_out);
        }
    return table;
}

// ---------------------------------------------------------------------------
// cup products

Cup1Result cup_1cochains(const std::vector<Poly>& fvals,
                         const std::vector<Poly>& gvals, const Presentation& pres) {
    std::size_t n = static_cast<std::size_t>(pres.nvars());
    if (fvals.size() != n || gvals.size() != n)
        throw DomainError("1-cochains must assign a value to every dx_i");
    Cup1Result out;
    out.wedge.assign(n, std::vector<Poly>(n, Poly(pres.ring(), pres.nvars())));
    for (std::size_t a1 = 0; a1 < n; ++a1)
        for (std::size_t a2 = a1 + 1; a2 < n; ++a2) {
            Poly v = pres.normal_form(gvals[a1] * fvals[a2] - fvals[a1] * gvals[a2]);
            out.wedge[a1][a2] = v;
            out.wedge[a2][a1] = pres.normal_form(-v);
        }
    for (int j = 0; j < pres.nrels(); ++j) {
        Poly acc(pres.ring(), pres.nvars());
        for (int i = 0; i < pres.nvars(); ++i)
            for (int k = i; k < pres.nvars(); ++k)
                acc = acc + hessian_entry(pres, j, i, k) * fvals[i] * gvals[k];
        out.hess.push_back(pres.normal_form(acc));
    }
    return out;
}

CliffordElement cup_square_class(const DerivationVec& d, const Presentation& pres) {
    NormalVec q = hessian_q(d, pres);  // enforces the derivation precondition
    CliffordElement v(pres);
    for (int j = 0; j < pres.nrels(); ++j) {
        std::vector<int> e(pres.nrels(), 0);
        e[j] = 1;
        v.add_term(CliffKey{0, e}, q[j]);
    }
    // the same class must arise as the Clifford square of sum a_i t_i
    CliffordElement u(pres);
    for (int i = 0; i < pres.nvars(); ++i) {
        std::vector<int> e(pres.nrels(), 0);
        u.add_term(CliffKey{std::uint32_t(1) << i, e}, pres.normal_form(d[i]));
    }
    if (!(clifford_mul(u, u, pres) == v))
        throw std::logic_error("Clifford square disagrees with the Hessian class");
    return v;
}

}  // namespace hhci
