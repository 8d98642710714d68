// abelian.hpp -- Hochschild and ordinary cohomology of finite abelian group
// algebras through the tensor product of one-variable DG Clifford factors
// (tau_j, sigma_j with tau_j^2 = m_j sigma_j, d tau_j = n_j sigma_j).

#ifndef HHCI_ABELIAN_HPP
#define HHCI_ABELIAN_HPP

#include "hhci/cliffdg.hpp"

namespace hhci {

struct AbelianGroup {
    std::vector<Int> invariant_factors;  // ascending chain n_1 | n_2 | ..., each >= 2

    // normalizes an arbitrary factor list into invariant factors
    static AbelianGroup from_factors(std::vector<Int> factors);
    Int order() const;
    int rank() const { return static_cast<int>(invariant_factors.size()); }
};

struct CliffordFactor {
    Int n;  // order of the cyclic factor
    Int m;  // square correction: 0 for odd n, n/2 for even n
};
CliffordFactor clifford_factor(const Int& n);

// group cohomology H^*(G, K) as cohomology of the tensor factor complex
GradedModule group_cohomology(const AbelianGroup& g, const CoeffRing& k, int max_degree);

// Hochschild cohomology of KG, computed from the full complex KG (x) factors
GradedModule group_hh(const AbelianGroup& g, const CoeffRing& k, int max_degree);

// the substitution tying the adapted factor model to the general Clifford
// engine on K[x]/(x^n - 1), with the eta-coefficient that absorbs the
// difference of the two degree-2 squares
struct ChangeOfBasis {
    Int n;
    Int m;
    Int eta_coefficient;  // floor((n-1)/2)
    std::string substitution;
    std::string general_model;
    std::string adapted_model;
};
ChangeOfBasis clifford_change_of_basis(const Int& n);

// K[x_1..x_r]/(x_j^{n_j} - 1), the general-engine route to the same algebra
Presentation group_presentation(const AbelianGroup& g, const CoeffRing& k);

}  // namespace hhci

#endif
