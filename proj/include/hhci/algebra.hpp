// algebra.hpp -- algebra presentations A = P/I: canonical normal forms
// modulo I (Groebner over fields, confluent triangular rewriting otherwise),
// finite K-bases, regular-sequence verification and the one-variable
// homological-complete-intersection test.

#ifndef HHCI_ALGEBRA_HPP
#define HHCI_ALGEBRA_HPP

#include <optional>

#include "hhci/poly.hpp"

namespace hhci {

enum class Strategy { GroebnerOverField, Triangular, Univariate };

// ordered list of standard monomials forming a K-basis of A
struct KBasis {
    std::vector<MultiIndex> monomials;  // grevlex ascending; index 0 is 1
    std::map<MultiIndex, std::size_t> index;

    std::size_t size() const { return monomials.size(); }
    std::size_t index_of(const MultiIndex& m) const;
};

class Presentation {
  public:
    Presentation(CoeffRing ring, std::vector<std::string> vars,
                 std::vector<Poly> relations, bool assume_regular = false);

    const CoeffRing& ring() const { return ring_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Poly>& relations() const { return relations_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    int nrels() const { return static_cast<int>(relations_.size()); }
    bool assume_regular() const { return assume_regular_; }

    // the normal-form strategy; StrategyError when no strategy applies
    Strategy strategy() const;
    bool has_strategy() const { return strategy_.has_value(); }

    // canonical representative mod I; K-linear, multiplicative up to
    // renormalization
    Poly normal_form(const Poly& g) const;
    Poly nf_mul(const Poly& a, const Poly& b) const { return normal_form(a * b); }

    // reduced Groebner basis (fields only)
    const std::vector<Poly>& groebner() const;

    bool has_finite_basis() const;
    const KBasis& k_basis() const;  // InfiniteBasis when the staircase is infinite

    // coordinates of a normal form over the K-basis, and back
    std::vector<Rat> coordinates(const Poly& nf) const;
    Poly from_coordinates(const std::vector<Rat>& coords) const;

    Poly parse(const std::string& text) const { return parse_poly(text, vars_, ring_); }
    std::string text(const Poly& f) const { return to_text(f, vars_); }

  private:
    CoeffRing ring_;
    std::vector<std::string> vars_;
    std::vector<Poly> relations_;
    bool assume_regular_;
    std::optional<Strategy> strategy_;
    std::vector<Poly> rules_;  // reduced GB over fields; the relations themselves
                               // under the triangular strategies
    std::optional<std::vector<Poly>> groebner_;
    std::optional<KBasis> basis_;
    std::string no_basis_reason_;
    std::string no_strategy_reason_;
};

// free-function spellings of the presentation queries
std::vector<Poly> groebner_basis(const Presentation& pres);
KBasis k_basis(const Presentation& pres);

// matrix of multiplication by g on the K-basis of A (columns = images)
Matrix multiplication_matrix(const Presentation& pres, const Poly& g);

// true iff f_1..f_c is a regular sequence defining a proper ideal. Verified
// by Groebner ideal quotients over fields, certified structurally for
// triangular presentations; otherwise StrategyError unless the presentation
// carries assume_regular.
bool is_regular_sequence(const Presentation& pres);

struct RegularityInfo {
    bool regular;
    enum class Source { VerifiedGroebner, CertifiedTriangular, Assumed } source;
};
RegularityInfo regularity(const Presentation& pres);

// one-variable homological-complete-intersection trichotomy
enum class HciClass { HCI, NotHCI, ZeroDivisor };
struct HciReport {
    HciClass cls;
    std::vector<Rat> content;
    std::string reason;
};
HciReport hci_check_univariate(const Presentation& pres);
std::string to_text(HciClass c);

// ---------------------------------------------------------------------------
// Groebner machinery (exposed for tests)

// full division remainder; every divisor must have a unit leading coefficient
Poly reduce_by(const Poly& g, const std::vector<Poly>& divisors,
               const MonomialOrder& order = {});

// reduced Groebner basis over a field
std::vector<Poly> buchberger(std::vector<Poly> gens, const MonomialOrder& order = {});

// S-polynomial of two monic generators
Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order = {});

// ideal quotient (J : f) over a field, J given by generators
std::vector<Poly> ideal_quotient(const std::vector<Poly>& j_gens, const Poly& f);

}  // namespace hhci

#endif
