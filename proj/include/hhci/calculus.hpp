// calculus.hpp -- the Jacobian matrix, derivation membership, the Hessian
// quadratic map q on derivations and its polarization.

#ifndef HHCI_CALCULUS_HPP
#define HHCI_CALCULUS_HPP

#include "hhci/algebra.hpp"

namespace hhci {

// coefficients a_1..a_n of D = sum a_i d/dx_i, kept in normal form
using DerivationVec = std::vector<Poly>;
// value on each relation class [f_b]
using NormalVec = std::vector<Poly>;

// entry (j,i) = nf(df_j/dx_i); a c x n matrix over A
std::vector<std::vector<Poly>> jacobian(const Presentation& pres);

// D is a derivation of A iff jacobian * D = 0 in A^c
bool is_derivation(const DerivationVec& d, const Presentation& pres);

// divided Hessian entry of relation j at variables i <= k: the divided
// second derivative on the diagonal, the ordinary mixed derivative off it
// (both arise uniformly as the divided partial at e_i + e_k)
Poly hessian_entry(const Presentation& pres, int j, int i, int k);

// q(D)_j = sum_{i<=k} hessian_entry(j,i,k) a_i a_k mod I.
// NotADerivation unless D is a derivation.
NormalVec hessian_q(const DerivationVec& d, const Presentation& pres);

// the symmetric bilinear form attached to q, computed directly from second
// derivatives; satisfies B(D1,D2) = q(D1+D2) - q(D1) - q(D2)
NormalVec polarization(const DerivationVec& d1, const DerivationVec& d2,
                       const Presentation& pres);

// parse "a_1, a_2, ..." in the presentation's variables
DerivationVec parse_derivation(const std::string& csv, const Presentation& pres);

}  // namespace hhci

#endif
