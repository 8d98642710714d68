// cyclic.hpp -- closed-form Hochschild cohomology for A = K[x]/(f) over a
// field: gcd splitting, the ramification module theta, the 2-periodic model
// and the graded-ring presentation of HH.

#ifndef HHCI_CYCLIC_HPP
#define HHCI_CYCLIC_HPP

#include "hhci/cliffdg.hpp"

namespace hhci {

enum class CyclicClass { Separable, GenericallyUnramified, TotallyRamified, Mixed };
std::string to_text(CyclicClass c);

struct CyclicReport {
    Poly f;      // monic defining polynomial
    Poly g;      // gcd(f, f')
    Poly h;      // f / g
    Poly fdiv2;  // divided second derivative of f, reduced mod f
    CyclicClass classification;
    std::string presentation_text;
    GradedModule dims;
};

// closed-form HH of K[x]/(f) over a field; DomainError for non-field K
CyclicReport cyclic_hh(const Poly& f, int max_degree);

struct ThetaReport {
    Poly generator;       // h, generating theta = (h)/(f)
    long long dimension;  // deg g
};
ThetaReport theta(const Poly& f);

struct PeriodicModel {
    Poly delta;  // Delta(x', x'') in two variables
    HciClass hci;
    bool exact;  // the 2-periodic complex resolves A iff f is HCI
    std::string description;
};
// requires the content annihilator to vanish; ZeroDivisor otherwise
PeriodicModel periodic_model(const Poly& f);

}  // namespace hhci

#endif
