// coeff.hpp -- exact coefficient rings (Q, Z, Z/n, GF(p)) and the linear
// algebra kernels (Smith form, Howell form, kernels, subquotient invariants)
// that every cohomology computation in this library reduces to.

#ifndef HHCI_COEFF_HPP
#define HHCI_COEFF_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hhci {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
    Error(std::string k, const std::string& msg)
        : std::runtime_error(msg), kind(std::move(k)) {}
    std::string kind;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error("ParseError", msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};
struct UnknownVariable : Error {
    explicit UnknownVariable(const std::string& name)
        : Error("UnknownVariable", "unknown variable '" + name + "'") {}
};
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error("DomainError", msg) {}
};
struct StrategyError : Error {
    explicit StrategyError(const std::string& msg) : Error("StrategyError", msg) {}
};
struct InfiniteBasis : Error {
    explicit InfiniteBasis(const std::string& msg) : Error("InfiniteBasis", msg) {}
};
struct NotADerivation : Error {
    explicit NotADerivation(const std::string& msg) : Error("NotADerivation", msg) {}
};
struct ComplexError : Error {
    explicit ComplexError(const std::string& msg) : Error("ComplexError", msg) {}
};
struct SizeError : Error {
    explicit SizeError(const std::string& msg) : Error("SizeError", msg) {}
};
struct ZeroDivisor : Error {
    explicit ZeroDivisor(const std::string& msg) : Error("ZeroDivisor", msg) {}
};

// ---------------------------------------------------------------------------
// CoeffRing

// One of Q, Z, Z/n (n >= 2) or GF(p) (p prime, checked by trial division).
// Elements are carried as Rat values; over Z, Z/n and GF(p) the denominator
// is always 1 and residues are kept canonical in [0, n).
class CoeffRing {
  public:
    enum class Tag { Rationals, Integers, IntegersModN, PrimeField };

    static CoeffRing rationals() { return CoeffRing(Tag::Rationals, 0); }
    static CoeffRing integers() { return CoeffRing(Tag::Integers, 0); }
    static CoeffRing integers_mod(const Int& n);
    static CoeffRing prime_field(const Int& p);

    // Text forms "Q", "Z", "Z/<n>", "GF(<p>)".
    static CoeffRing from_text(const std::string& text);
    std::string to_text() const;

    Tag tag() const { return tag_; }
    const Int& modulus() const { return modulus_; }
    bool is_field() const {
        return tag_ == Tag::Rationals || tag_ == Tag::PrimeField;
    }
    bool is_modular() const {
        return tag_ == Tag::IntegersModN || tag_ == Tag::PrimeField;
    }

    bool operator==(const CoeffRing& o) const {
        return tag_ == o.tag_ && modulus_ == o.modulus_;
    }
    bool operator!=(const CoeffRing& o) const { return !(*this == o); }

    Rat normalize(const Rat& x) const;
    Rat from_int(const Int& x) const { return normalize(Rat(x)); }

    Rat add(const Rat& a, const Rat& b) const { return normalize(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return normalize(a - b); }
    Rat mul(const Rat& a, const Rat& b) const { return normalize(a * b); }
    Rat neg(const Rat& a) const { return normalize(-a); }

    bool is_zero(const Rat& a) const { return a == 0; }
    bool is_unit(const Rat& a) const;
    Rat inv(const Rat& a) const;  // DomainError when a is not a unit

  private:
    CoeffRing(Tag t, Int m) : tag_(t), modulus_(std::move(m)) {}
    Tag tag_;
    Int modulus_;
};

// ---------------------------------------------------------------------------
// ModuleInvariants

// Canonical value of a finitely generated module over the coefficient ring:
// a free rank plus an invariant-factor chain d_1 | d_2 | ... of torsion
// generators (positive and > 1 over Z; proper divisors of n over Z/n; empty
// over fields).
struct ModuleInvariants {
    long long free_rank = 0;
    std::vector<Int> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const ModuleInvariants&) const = default;
    std::string to_text() const;
};

// ---------------------------------------------------------------------------
// Matrix

// Dense row-major matrix over a CoeffRing; maps act on column vectors.
class Matrix {
  public:
    Matrix(CoeffRing ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static Matrix identity(const CoeffRing& ring, std::size_t n);

    const CoeffRing& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const Rat& v) {
        a_[i * cols_ + j] = ring_.normalize(v);
    }

    Matrix operator*(const Matrix& o) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && ring_ == o.ring_ && a_ == o.a_;
    }

  private:
    CoeffRing ring_;
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

// ---------------------------------------------------------------------------
// Canonical forms and kernels

struct SmithResult {
    Matrix u, d, v;  // u*m*v = d, u and v unimodular, d diagonal, d_i | d_{i+1}
};

// Smith normal form over Z. Diagonal entries are non-negative and form a
// divisibility chain; zeros come last.
SmithResult smith_normal_form(const Matrix& m);

// Howell normal form over Z/n: the canonical echelon form of the row span.
// Returns only the nonzero rows. Two matrices with equal row span over Z/n
// have identical Howell forms.
Matrix howell_form(const Matrix& m);

// Columns spanning ker(m) (acting on column vectors). Over fields and Z the
// columns are a basis; over Z/n they are a canonical spanning set.
Matrix kernel(const Matrix& m);

// Solve m*x = rhs over the ring of m; nullopt when no solution exists.
std::optional<std::vector<Rat>> solve_linear(const Matrix& m, const std::vector<Rat>& rhs);

// Invariants of ker(d_out)/im(d_in) for consecutive differentials
// d_in : K^a -> K^b, d_out : K^b -> K^c. ComplexError unless d_out*d_in = 0.
ModuleInvariants cohomology_at(const Matrix& d_in, const Matrix& d_out);

// Rank over a field (DomainError otherwise); exposed for cross-checks.
std::size_t field_rank(const Matrix& m);

}  // namespace hhci

#endif
