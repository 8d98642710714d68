// poly.hpp -- exact multivariate polynomials over a CoeffRing: arithmetic,
// divided partial derivatives, content ideals, the one-variable difference
// quotient, Euclidean gcd over fields, and a text parser.

#ifndef HHCI_POLY_HPP
#define HHCI_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hhci/coeff.hpp"

namespace hhci {

// exponent vector of length nvars
using MultiIndex = std::vector<int>;

// graded reverse lexicographic order; the order used for printing and for
// Groebner reductions
bool grevlex_less(const MultiIndex& a, const MultiIndex& b);

struct MonomialOrder {
    enum class Kind { Grevlex, ElimLast } kind = Kind::Grevlex;
    // ElimLast: the last variable dominates (block order), grevlex inside the
    // block; used to eliminate an auxiliary variable
    bool less(const MultiIndex& a, const MultiIndex& b) const;
};

class Poly {
  public:
    Poly(CoeffRing ring, int nvars) : ring_(std::move(ring)), nvars_(nvars) {}

    static Poly constant(const CoeffRing& ring, int nvars, const Rat& c);
    static Poly variable(const CoeffRing& ring, int nvars, int i, int exp = 1);
    static Poly monomial(const CoeffRing& ring, MultiIndex e, const Rat& c);

    const CoeffRing& ring() const { return ring_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    // nullopt is the "minus infinity" degree of the zero polynomial
    std::optional<int> total_degree() const;
    const std::map<MultiIndex, Rat>& terms() const { return terms_; }
    Rat coeff(const MultiIndex& e) const;

    void add_term(const MultiIndex& e, const Rat& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rat& c) const;
    bool operator==(const Poly& o) const {
        return nvars_ == o.nvars_ && ring_ == o.ring_ && terms_ == o.terms_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const { return terms_ < o.terms_; }

    // leading term with respect to an order (zero polynomial has none)
    std::optional<std::pair<MultiIndex, Rat>> leading_term(
        const MonomialOrder& order = {}) const;

    // reinterpret the coefficients in another ring (e.g. reduce Z -> GF(2))
    Poly map_ring(const CoeffRing& target) const;

  private:
    CoeffRing ring_;
    int nvars_;
    std::map<MultiIndex, Rat> terms_;
};

// ---------------------------------------------------------------------------
// parsing and printing

// Grammar: integer literals (with an optional /literal denominator where that
// is invertible), declared variable names, +, -, *, ^ with non-negative
// integer exponents, and parentheses. Implicit multiplication is rejected.
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                const CoeffRing& ring);

// canonical printing: terms in grevlex-descending order; round-trips through
// parse_poly
std::string to_text(const Poly& f, const std::vector<std::string>& vars);

// ---------------------------------------------------------------------------
// calculus on polynomials

// ordinary partial derivative d/dx_i
Poly partial(const Poly& f, int i);

// divided partial derivative: on x^e with multi-index a it is
// binom(e_1,a_1)...binom(e_n,a_n) x^(e-a); a! times it is the ordinary
// iterated derivative
Poly divided_partial(const Poly& f, const MultiIndex& a);

// coefficients of a one-variable polynomial, highest degree first, zeros
// stripped
std::vector<Rat> content_ideal(const Poly& f);

// the unique Delta(x', x'') with f(x'') - f(x') = (x'' - x')*Delta;
// input in one variable, output in two (x' = var 0, x'' = var 1)
Poly delta_quotient(const Poly& f);

// monic Euclidean gcd over Q or GF(p); gcd(f, 0) is the monic scaling of f
Poly gcd_univariate(const Poly& f, const Poly& g);

// ---------------------------------------------------------------------------
// univariate and substitution helpers

// ascending coefficient vector (empty for 0)
std::vector<Rat> coeffs_univariate(const Poly& f);

// quotient and remainder; requires the leading coefficient of g to be a unit
std::pair<Poly, Poly> divmod_univariate(const Poly& f, const Poly& g);

// substitute images[i] for variable i (images must share ring and nvars)
Poly substitute(const Poly& f, const std::vector<Poly>& images);

}  // namespace hhci

#endif
