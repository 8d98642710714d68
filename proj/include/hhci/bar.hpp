// bar.hpp -- brute-force oracle: Hochschild cohomology and cup products from
// the normalized bar complex of a small finite-dimensional algebra over a
// field.

#ifndef HHCI_BAR_HPP
#define HHCI_BAR_HPP

#include "hhci/cliffdg.hpp"

namespace hhci {

class FiniteAlgebra {
  public:
    // structure constants from a presentation with a finite K-basis; the
    // basis element of index 0 is the unit
    static FiniteAlgebra from_presentation(const Presentation& pres,
                                           std::size_t max_dim = 4);
    // direct construction; checks the unit law at index 0 and associativity
    // on all triples
    static FiniteAlgebra from_table(CoeffRing ring,
                                    std::vector<std::vector<std::vector<Rat>>> mult);

    const CoeffRing& ring() const { return ring_; }
    std::size_t dim() const { return mult_.size(); }
    // coordinates of e_i * e_j
    const std::vector<Rat>& product(std::size_t i, std::size_t j) const {
        return mult_[i][j];
    }
    std::vector<Rat> multiply(const std::vector<Rat>& a, const std::vector<Rat>& b) const;

  private:
    FiniteAlgebra(CoeffRing ring, std::vector<std::vector<std::vector<Rat>>> mult)
        : ring_(std::move(ring)), mult_(std::move(mult)) {}
    void validate() const;
    CoeffRing ring_;
    std::vector<std::vector<std::vector<Rat>>> mult_;
};

// normalized bar cochain of degree p: a table on p-tuples of non-unit basis
// classes (indices 1..dim-1) with values in A
struct Cochain {
    int degree = 0;
    // table[t] = A-coordinates at the tuple with flat index t (radix dim-1)
    std::vector<std::vector<Rat>> table;
};

Cochain zero_cochain(const FiniteAlgebra& alg, int degree);
std::size_t tuple_flat_index(const FiniteAlgebra& alg, const std::vector<std::size_t>& t);

// the Hochschild differential on normalized cochains
Cochain bar_differential(const Cochain& f, const FiniteAlgebra& alg);

// matrix of the differential C^p -> C^(p+1) over K
Matrix bar_matrix(const FiniteAlgebra& alg, int degree);

// dimensions of HH^p for p <= max_degree (max_degree <= 3: SizeError beyond)
GradedModule bar_cohomology(const FiniteAlgebra& alg, int max_degree);

// (f cup g)(a_1..a_{p+q}) = f(a_1..a_p) g(a_{p+1}..a_{p+q})
Cochain bar_cup(const Cochain& f, const Cochain& g, const FiniteAlgebra& alg);

bool bar_is_cocycle(const Cochain& f, const FiniteAlgebra& alg);
bool bar_is_coboundary(const Cochain& f, const FiniteAlgebra& alg);

// a derivation of A as a normalized 1-cochain
Cochain derivation_cochain(const DerivationVec& d, const Presentation& pres,
                           const FiniteAlgebra& alg);

}  // namespace hhci

#endif
