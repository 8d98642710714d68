// cliffdg.hpp -- the DG Clifford algebra A<t_1..t_n; s_1..s_c> attached to a
// presentation: normal-form multiplication (t-anticommutators given by the
// Hessian, s central), the Jacobian differential, degree-wise cohomology, the
// Hodge bigrading, and cup products of 1-cochains.

#ifndef HHCI_CLIFFDG_HPP
#define HHCI_CLIFFDG_HPP

#include <cstdint>
#include <tuple>

#include "hhci/calculus.hpp"

namespace hhci {

// monomial part of a Clifford term: an increasing product of t_i recorded as
// a bitmask, times a monomial in the central s_j
struct CliffKey {
    std::uint32_t tmask = 0;
    std::vector<int> sexp;

    int degree() const;
    int t_weight() const;
    int s_weight() const;
    auto operator<=>(const CliffKey&) const = default;
};

class CliffordElement {
  public:
    CliffordElement(CoeffRing ring, int nvars, int nrels)
        : ring_(std::move(ring)), nvars_(nvars), nrels_(nrels) {}
    explicit CliffordElement(const Presentation& pres)
        : CliffordElement(pres.ring(), pres.nvars(), pres.nrels()) {}

    const std::map<CliffKey, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int nvars() const { return nvars_; }
    int nrels() const { return nrels_; }

    // accumulate coeff * t^mask * s^exp; zero coefficients are dropped
    void add_term(const CliffKey& key, const Poly& coeff);

    // degree when homogeneous, nullopt otherwise (zero counts as homogeneous
    // of any degree and reports nullopt)
    std::optional<int> homogeneous_degree() const;

    CliffordElement operator+(const CliffordElement& o) const;
    CliffordElement operator-(const CliffordElement& o) const;
    CliffordElement operator-() const;
    CliffordElement scaled(const Poly& a) const;
    bool operator==(const CliffordElement& o) const {
        return terms_ == o.terms_;
    }

  private:
    CoeffRing ring_;
    int nvars_, nrels_;
    std::map<CliffKey, Poly> terms_;
};

// generators
CliffordElement cliff_scalar(const Presentation& pres, const Poly& a);
CliffordElement cliff_t(const Presentation& pres, int i);
CliffordElement cliff_s(const Presentation& pres, int j);

// normal-form product: s-variables move out as central, t-factors sort by
// adjacent transpositions, each swap or square contraction emitting its
// Hessian correction term
CliffordElement clifford_mul(const CliffordElement& u, const CliffordElement& v,
                             const Presentation& pres);

// degree +1 graded derivation with d(t_i) = sum_j (df_j/dx_i mod I) s_j,
// d(s_j) = 0, d(A) = 0
CliffordElement differential(const CliffordElement& u, const Presentation& pres);

std::string to_text(const CliffordElement& u, const Presentation& pres);

// ---------------------------------------------------------------------------
// cohomology

struct GradedModule {
    std::map<int, ModuleInvariants> by_degree;
    std::vector<std::string> assumptions;

    const ModuleInvariants& at(int p) const { return by_degree.at(p); }
    bool operator==(const GradedModule& o) const { return by_degree == o.by_degree; }
};

struct HodgeTable {
    // (t-weight i, s-weight j) -> invariants, for i <= nvars and i+2j <= max
    std::map<std::pair<int, int>, ModuleInvariants> entries;
    std::vector<std::string> assumptions;
};

// Hochschild cohomology of A (as Ext over the enveloping algebra) in degrees
// 0..max_degree. Requires a finite K-basis and a regular (or assumed regular)
// sequence of relations.
GradedModule hh(const Presentation& pres, int max_degree);

// the same cohomology split along the s-weight bigrading
HodgeTable hodge(const Presentation& pres, int max_degree);

// ---------------------------------------------------------------------------
// cup products of 1-cochains

struct Cup1Result {
    std::vector<std::vector<Poly>> wedge;  // antisymmetric n x n table
    NormalVec hess;                        // value on each relation class
};

// cup product of two A^ev-linear 1-cochains given by their values on the dx_i
Cup1Result cup_1cochains(const std::vector<Poly>& fvals,
                         const std::vector<Poly>& gvals, const Presentation& pres);

// the degree-2 cocycle sum_j q(D)_j s_j; equality with (sum a_i t_i)^2 is
// asserted against clifford_mul
CliffordElement cup_square_class(const DerivationVec& d, const Presentation& pres);

// ---------------------------------------------------------------------------
// chain-level plumbing (also used by the oracle comparisons and tests)

// Clifford monomials of the given total degree, in a fixed deterministic order
std::vector<CliffKey> cliff_monomials(const Presentation& pres, int degree);

// matrix of the differential Cliff^degree -> Cliff^(degree+1) over K, on the
// basis (monomial x K-basis element)
Matrix differential_matrix(const Presentation& pres, int degree);

std::vector<Rat> element_coordinates(const Presentation& pres,
                                     const CliffordElement& u, int degree);
CliffordElement element_from_coordinates(const Presentation& pres, int degree,
                                         const std::vector<Rat>& coords);

// is the homogeneous cocycle u a coboundary?
bool is_coboundary(const CliffordElement& u, const Presentation& pres);

}  // namespace hhci

#endif
