// coeff.cpp -- exact ring arithmetic, Smith and Howell normal forms, kernels
// and subquotient invariants.

#include "hhci/coeff.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace hhci {

namespace {

Int igcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// extended gcd: g = gcd(a,b) >= 0 with p*a + q*b = g
struct Xgcd {
    Int g, p, q;
};
Xgcd xgcd(Int a, Int b) {
    Int p0 = 1, q0 = 0, p1 = 0, q1 = 1;
    while (b != 0) {
        Int quot = a / b;
        Int r = a - quot * b;
        a = b;
        b = r;
        Int p2 = p0 - quot * p1, q2 = q0 - quot * q1;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    if (a < 0) return {-a, -p0, -q0};
    return {a, p0, q0};
}

Int imod(const Int& a, const Int& n) {
    Int r = a % n;
    if (r < 0) r += n;
    return r;
}

Int modinv(const Int& a, const Int& n) {
    auto e = xgcd(imod(a, n), n);
    assert(e.g == 1);
    return imod(e.p, n);
}

// m with m*a == b mod n, assuming gcd(a,n) | b
Int solve_cong(const Int& a, const Int& b, const Int& n) {
    Int ga = igcd(a, n);
    assert(b % ga == 0);
    Int np = n / ga;
    if (np == 1) return 0;
    return imod((b / ga) * modinv(a / ga, np), np);
}

// unit u mod n with u*a == gcd(a,n) mod n
Int unit_to_gcd(const Int& a, const Int& n) {
    Int g = igcd(a, n);
    Int ap = a / g, np = n / g;
    if (np == 1) return 1;
    Int u0 = modinv(imod(ap, np), np);
    for (Int t = 0; t < g; ++t) {
        Int u = u0 + t * np;
        if (igcd(u, n) == 1) return imod(u, n);
    }
    assert(false && "unit lifting failed");
    return 1;
}

using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;

IMat to_imat(const Matrix& m) {
    IMat a(m.rows(), IVec(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i][j] = numerator(m.at(i, j));
    return a;
}

Matrix from_imat(const CoeffRing& ring, const IMat& a, std::size_t cols) {
    Matrix m(ring, a.size(), cols);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, Rat(a[i][j]));
    return m;
}

bool is_probable_prime_by_trial_division(const Int& p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (Int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// CoeffRing

CoeffRing CoeffRing::integers_mod(const Int& n) {
    if (n < 2) throw DomainError("Z/n requires n >= 2");
    return CoeffRing(Tag::IntegersModN, n);
}

CoeffRing CoeffRing::prime_field(const Int& p) {
    if (!is_probable_prime_by_trial_division(p))
        throw DomainError("GF(p) requires p prime, got " + p.str());
    return CoeffRing(Tag::PrimeField, p);
}

CoeffRing CoeffRing::from_text(const std::string& text) {
    if (text == "Q") return rationals();
    if (text == "Z") return integers();
    if (text.rfind("Z/", 0) == 0) {
        try {
            return integers_mod(Int(text.substr(2)));
        } catch (const std::runtime_error& e) {
            if (dynamic_cast<const DomainError*>(&e)) throw;
        }
    }
    if (text.rfind("GF(", 0) == 0 && text.back() == ')') {
        try {
            return prime_field(Int(text.substr(3, text.size() - 4)));
        } catch (const std::runtime_error& e) {
            if (dynamic_cast<const DomainError*>(&e)) throw;
        }
    }
    throw DomainError("unrecognized ring '" + text + "' (expected Q, Z, Z/<n> or GF(<p>))");
}

std::string CoeffRing::to_text() const {
    switch (tag_) {
        case Tag::Rationals: return "Q";
        case Tag::Integers: return "Z";
        case Tag::IntegersModN: return "Z/" + modulus_.str();
        case Tag::PrimeField: return "GF(" + modulus_.str() + ")";
    }
    return "?";
}

Rat CoeffRing::normalize(const Rat& x) const {
    if (tag_ == Tag::Rationals) return x;
    if (tag_ == Tag::Integers) {
        if (denominator(x) != 1) throw DomainError("non-integral value over Z");
        return x;
    }
    Int nu = numerator(x), de = denominator(x);
    Int r = imod(nu, modulus_);
    if (de != 1) {
        // a denominator can only appear transiently; it must be invertible
        r = imod(r * modinv(imod(de, modulus_), modulus_), modulus_);
    }
    return Rat(r);
}

bool CoeffRing::is_unit(const Rat& a) const {
    switch (tag_) {
        case Tag::Rationals: return a != 0;
        case Tag::Integers: return a == 1 || a == -1;
        case Tag::PrimeField: return normalize(a) != 0;
        case Tag::IntegersModN: return igcd(numerator(normalize(a)), modulus_) == 1;
    }
    return false;
}

Rat CoeffRing::inv(const Rat& a) const {
    if (!is_unit(a)) throw DomainError("not a unit in " + to_text());
    if (tag_ == Tag::Rationals) return Rat(1) / a;
    if (tag_ == Tag::Integers) return a;  // +-1
    return Rat(modinv(numerator(normalize(a)), modulus_));
}

std::string ModuleInvariants::to_text() const {
    std::ostringstream os;
    os << "free " << free_rank << ", torsion [";
    for (std::size_t i = 0; i < torsion.size(); ++i)
        os << (i ? "," : "") << torsion[i].str();
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::identity(const CoeffRing& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rat(1));
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || !(ring_ == o.ring_))
        throw std::logic_error("matrix product shape mismatch");
    Matrix r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j) == 0) continue;
                r.set(i, j, r.at(i, j) + x * o.at(k, j));
            }
        }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// Smith normal form over Z

SmithResult smith_normal_form(const Matrix& m) {
    if (m.ring().tag() != CoeffRing::Tag::Integers)
        throw DomainError("smith_normal_form requires ring Z");
    const std::size_t r = m.rows(), c = m.cols();
    IMat d = to_imat(m);
    IMat u(r, IVec(r, 0)), v(c, IVec(c, 0));
    for (std::size_t i = 0; i < r; ++i) u[i][i] = 1;
    for (std::size_t j = 0; j < c; ++j) v[j][j] = 1;

    auto row_sub = [&](std::size_t i, std::size_t k, const Int& q) {
        // row_i -= q * row_k
        for (std::size_t j = 0; j < c; ++j) d[i][j] -= q * d[k][j];
        for (std::size_t j = 0; j < r; ++j) u[i][j] -= q * u[k][j];
    };
    auto col_sub = [&](std::size_t j, std::size_t k, const Int& q) {
        for (std::size_t i = 0; i < r; ++i) d[i][j] -= q * d[i][k];
        for (std::size_t i = 0; i < c; ++i) v[i][j] -= q * v[i][k];
    };
    auto row_swap = [&](std::size_t i, std::size_t k) {
        std::swap(d[i], d[k]);
        std::swap(u[i], u[k]);
    };
    auto col_swap = [&](std::size_t j, std::size_t k) {
        for (std::size_t i = 0; i < r; ++i) std::swap(d[i][j], d[i][k]);
        for (std::size_t i = 0; i < c; ++i) std::swap(v[i][j], v[i][k]);
    };

    std::size_t t = 0;
    while (t < r && t < c) {
        // smallest nonzero entry of the trailing block becomes the pivot
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                if (d[i][j] == 0) continue;
                if (!found || abs(d[i][j]) < abs(d[pi][pj])) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        row_swap(t, pi);
        col_swap(t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (d[i][t] == 0) continue;
                Int q = d[i][t] / d[t][t];
                if (q != 0) row_sub(i, t, q);
                if (d[i][t] != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (d[t][j] == 0) continue;
                Int q = d[t][j] / d[t][t];
                if (q != 0) col_sub(j, t, q);
                if (d[t][j] != 0) dirty = true;
            }
            if (dirty) {
                // leftover remainders are smaller than the pivot; re-pivot
                std::size_t qi = t, qj = t;
                for (std::size_t i = t; i < r; ++i)
                    for (std::size_t j = t; j < c; ++j)
                        if (d[i][j] != 0 && abs(d[i][j]) < abs(d[qi][qj])) {
                            qi = i;
                            qj = j;
                        }
                row_swap(t, qi);
                col_swap(t, qj);
                continue;
            }
            // divisibility of the trailing block by the pivot
            bool fixed = true;
            for (std::size_t i = t + 1; i < r && fixed; ++i)
                for (std::size_t j = t + 1; j < c && fixed; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        row_sub(t, i, Int(-1));  // row_t += row_i
                        fixed = false;
                    }
            if (fixed) break;
        }
        ++t;
    }
    // positive diagonal
    for (std::size_t i = 0; i < r && i < c; ++i)
        if (d[i][i] < 0) {
            for (std::size_t j = 0; j < c; ++j) d[i][j] = -d[i][j];
            for (std::size_t j = 0; j < r; ++j) u[i][j] = -u[i][j];
        }
    CoeffRing z = CoeffRing::integers();
    return SmithResult{from_imat(z, u, r), from_imat(z, d, c), from_imat(z, v, c)};
}

// ---------------------------------------------------------------------------
// Howell form over Z/n

namespace {

// Echelon builder over Z/n keyed by pivot column. insert() returns true when
// the pivot set changed (new pivot or pivot value refined).
struct ZnEchelon {
    Int n;
    std::size_t cols;
    std::map<std::size_t, IVec> pivots;

    explicit ZnEchelon(Int n_, std::size_t cols_) : n(std::move(n_)), cols(cols_) {}

    void reduce_mod(IVec& row) const {
        for (auto& x : row) x = imod(x, n);
    }

    bool insert(IVec row) {
        reduce_mod(row);
        bool changed = false;
        std::size_t j = 0;
        while (j < cols) {
            if (row[j] == 0) {
                ++j;
                continue;
            }
            auto it = pivots.find(j);
            if (it == pivots.end()) {
                pivots.emplace(j, row);
                return true;
            }
            IVec& s = it->second;
            Int a = s[j], b = row[j];
            if (b % igcd(a, n) == 0) {
                Int mlt = solve_cong(a, b, n);
                for (std::size_t k = j; k < cols; ++k)
                    row[k] = imod(row[k] - mlt * s[k], n);
            } else {
                auto e = xgcd(a, b);
                IVec ns(cols), elim(cols);
                for (std::size_t k = 0; k < cols; ++k) {
                    ns[k] = imod(e.p * s[k] + e.q * row[k], n);
                    elim[k] = imod((a / e.g) * row[k] - (b / e.g) * s[k], n);
                }
                s = ns;
                row = elim;
                changed = true;
            }
        }
        return changed;
    }

    // add (n/gcd(pivot,n)) * row for every pivot row until stable
    void close() {
        for (;;) {
            bool changed = false;
            auto snapshot = pivots;
            for (auto& [j, row] : snapshot) {
                Int g = igcd(row[j], n);
                Int f = n / g;
                if (f == 1) continue;
                IVec cl(cols);
                for (std::size_t k = 0; k < cols; ++k) cl[k] = imod(f * row[k], n);
                if (insert(std::move(cl))) changed = true;
            }
            if (!changed) break;
        }
    }

    // canonical pivots (divisors of n) and entries above pivots reduced
    std::vector<IVec> normalized_rows() {
        for (auto& [j, row] : pivots) {
            Int u = unit_to_gcd(row[j], n);
            for (std::size_t k = j; k < cols; ++k) row[k] = imod(u * row[k], n);
        }
        std::vector<IVec> rows;
        rows.reserve(pivots.size());
        for (auto& [j, row] : pivots) rows.push_back(row);
        // reduce each row at every later pivot column
        std::vector<std::size_t> pivot_cols;
        for (auto& [j, row] : pivots) pivot_cols.push_back(j);
        for (std::size_t ri = 0; ri < rows.size(); ++ri)
            for (std::size_t pk = ri + 1; pk < rows.size(); ++pk) {
                std::size_t j = pivot_cols[pk];
                Int p = rows[pk][j];
                Int q = rows[ri][j] / p;
                if (q == 0) continue;
                for (std::size_t k = j; k < cols; ++k)
                    rows[ri][k] = imod(rows[ri][k] - q * rows[pk][k], n);
            }
        return rows;
    }
};

ZnEchelon howell_build(const Matrix& m) {
    ZnEchelon ech(m.ring().modulus(), m.cols());
    IMat rows = to_imat(m);
    for (auto& row : rows) ech.insert(std::move(row));
    ech.close();
    return ech;
}

}  // namespace

Matrix howell_form(const Matrix& m) {
    if (m.ring().tag() != CoeffRing::Tag::IntegersModN &&
        m.ring().tag() != CoeffRing::Tag::PrimeField)
        throw DomainError("howell_form requires ring Z/n");
    ZnEchelon ech = howell_build(m);
    auto rows = ech.normalized_rows();
    return from_imat(m.ring(), rows, m.cols());
}

// ---------------------------------------------------------------------------
// field elimination

namespace {

// row echelon, returns rank; optionally tracks a second block (augmented)
std::size_t field_echelon(const CoeffRing& ring, std::vector<std::vector<Rat>>& a,
                          std::vector<std::size_t>* pivot_cols = nullptr) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols && rank < rows; ++j) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][j] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        Rat inv = ring.inv(a[rank][j]);
        for (std::size_t k = j; k < cols; ++k) a[rank][k] = ring.mul(a[rank][k], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][j] == 0) continue;
            Rat f = a[i][j];
            for (std::size_t k = j; k < cols; ++k)
                a[i][k] = ring.sub(a[i][k], ring.mul(f, a[rank][k]));
        }
        if (pivot_cols) pivot_cols->push_back(j);
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rat>> to_rows(const Matrix& m) {
    std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);
    return a;
}

}  // namespace

std::size_t field_rank(const Matrix& m) {
    if (!m.ring().is_field()) throw DomainError("field_rank requires a field");
    auto a = to_rows(m);
    return field_echelon(m.ring(), a);
}

// ---------------------------------------------------------------------------
// kernels

namespace {

Matrix field_kernel(const Matrix& m) {
    const CoeffRing& ring = m.ring();
    auto a = to_rows(m);
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = field_echelon(ring, a, &pivot_cols);
    std::vector<std::size_t> free_cols;
    {
        std::size_t pi = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (pi < pivot_cols.size() && pivot_cols[pi] == j)
                ++pi;
            else
                free_cols.push_back(j);
        }
    }
    Matrix k(ring, m.cols(), free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        std::size_t fc = free_cols[t];
        k.set(fc, t, Rat(1));
        for (std::size_t i = 0; i < rank; ++i)
            k.set(pivot_cols[i], t, ring.neg(a[i][fc]));
    }
    return k;
}

Matrix integer_kernel(const Matrix& m) {
    SmithResult s = smith_normal_form(m);
    std::size_t rank = 0;
    std::size_t lim = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < lim; ++i)
        if (s.d.at(i, i) != 0) ++rank;
    Matrix k(m.ring(), m.cols(), m.cols() - rank);
    for (std::size_t j = rank; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) k.set(i, j - rank, s.v.at(i, j));
    return k;
}

// rows (marked block | identity markers) + rows (unmarked block | 0);
// returns marker parts of Howell rows whose left block vanished
std::vector<IVec> zn_marked_row_kernel(const CoeffRing& ring, const IMat& marked,
                                       std::size_t left_cols, const IMat& unmarked) {
    const Int& n = ring.modulus();
    std::size_t k = marked.size();
    ZnEchelon ech(n, left_cols + k);
    for (std::size_t i = 0; i < k; ++i) {
        IVec row(left_cols + k, 0);
        for (std::size_t j = 0; j < left_cols; ++j) row[j] = marked[i][j];
        row[left_cols + i] = 1;
        ech.insert(std::move(row));
    }
    for (const auto& s : unmarked) {
        IVec row(left_cols + k, 0);
        for (std::size_t j = 0; j < left_cols; ++j) row[j] = s[j];
        ech.insert(std::move(row));
    }
    ech.close();
    auto rows = ech.normalized_rows();
    std::vector<IVec> out;
    for (const auto& row : rows) {
        bool left_zero = true;
        for (std::size_t j = 0; j < left_cols && left_zero; ++j)
            if (row[j] != 0) left_zero = false;
        if (!left_zero) continue;
        out.emplace_back(row.begin() + static_cast<long>(left_cols), row.end());
    }
    return out;
}

Matrix zn_kernel(const Matrix& m) {
    IMat rows_t = to_imat(m.transpose());
    auto xs = zn_marked_row_kernel(m.ring(), rows_t, m.rows(), {});
    Matrix k(m.ring(), m.cols(), xs.size());
    for (std::size_t t = 0; t < xs.size(); ++t)
        for (std::size_t i = 0; i < m.cols(); ++i) k.set(i, t, Rat(xs[t][i]));
    return k;
}

}  // namespace

Matrix kernel(const Matrix& m) {
    switch (m.ring().tag()) {
        case CoeffRing::Tag::Rationals:
        case CoeffRing::Tag::PrimeField: return field_kernel(m);
        case CoeffRing::Tag::Integers: return integer_kernel(m);
        case CoeffRing::Tag::IntegersModN: return zn_kernel(m);
    }
    throw DomainError("kernel: unsupported ring");
}

// ---------------------------------------------------------------------------
// linear solve

namespace {

std::optional<std::vector<Rat>> field_solve(const Matrix& m, const std::vector<Rat>& rhs) {
    const CoeffRing& ring = m.ring();
    auto a = to_rows(m);
    for (std::size_t i = 0; i < m.rows(); ++i) a[i].push_back(rhs[i]);
    std::vector<std::size_t> pivot_cols;
    // eliminate on the first m.cols() columns only
    std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols && rank < rows; ++j) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][j] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        Rat inv = ring.inv(a[rank][j]);
        for (std::size_t k = j; k <= cols; ++k) a[rank][k] = ring.mul(a[rank][k], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][j] == 0) continue;
            Rat f = a[i][j];
            for (std::size_t k = j; k <= cols; ++k)
                a[i][k] = ring.sub(a[i][k], ring.mul(f, a[rank][k]));
        }
        pivot_cols.push_back(j);
        ++rank;
    }
    for (std::size_t i = rank; i < rows; ++i)
        if (a[i][cols] != 0) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t i = 0; i < rank; ++i) x[pivot_cols[i]] = a[i][cols];
    return x;
}

std::optional<std::vector<Rat>> integer_solve(const Matrix& m, const std::vector<Rat>& rhs) {
    SmithResult s = smith_normal_form(m);
    std::size_t rows = m.rows(), cols = m.cols();
    // c = U * rhs
    std::vector<Int> c(rows, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < rows; ++j)
            acc += numerator(s.u.at(i, j)) * numerator(rhs[j]);
        c[i] = acc;
    }
    std::vector<Int> xp(cols, 0);
    std::size_t lim = std::min(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        Int di = (i < lim) ? numerator(s.d.at(i, i)) : Int(0);
        if (di == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % di != 0) return std::nullopt;
            xp[i] = c[i] / di;
        }
    }
    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t i = 0; i < cols; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < cols; ++j) acc += numerator(s.v.at(i, j)) * xp[j];
        x[i] = Rat(acc);
    }
    return x;
}

std::optional<std::vector<Rat>> zn_solve(const Matrix& m, const std::vector<Rat>& rhs) {
    // lift: m*x + n*y = rhs over Z
    const Int& n = m.ring().modulus();
    CoeffRing z = CoeffRing::integers();
    Matrix lifted(z, m.rows(), m.cols() + m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) lifted.set(i, j, m.at(i, j));
        lifted.set(i, m.cols() + i, Rat(n));
    }
    auto sol = integer_solve(lifted, rhs);
    if (!sol) return std::nullopt;
    std::vector<Rat> x(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) x[j] = m.ring().normalize((*sol)[j]);
    return x;
}

}  // namespace

std::optional<std::vector<Rat>> solve_linear(const Matrix& m, const std::vector<Rat>& rhs) {
    if (rhs.size() != m.rows()) throw std::logic_error("solve_linear shape mismatch");
    switch (m.ring().tag()) {
        case CoeffRing::Tag::Rationals:
        case CoeffRing::Tag::PrimeField: return field_solve(m, rhs);
        case CoeffRing::Tag::Integers: return integer_solve(m, rhs);
        case CoeffRing::Tag::IntegersModN: return zn_solve(m, rhs);
    }
    throw DomainError("solve_linear: unsupported ring");
}

// ---------------------------------------------------------------------------
// cohomology_at

namespace {

ModuleInvariants field_cohomology(const Matrix& d_in, const Matrix& d_out) {
    std::size_t b = d_in.rows();
    std::size_t ker = b - field_rank(d_out);
    std::size_t im = field_rank(d_in);
    ModuleInvariants inv;
    inv.free_rank = static_cast<long long>(ker - im);
    return inv;
}

ModuleInvariants integer_cohomology(const Matrix& d_in, const Matrix& d_out) {
    Matrix n = integer_kernel(d_out);  // b x k, basis of the kernel lattice
    std::size_t k = n.cols(), a = d_in.cols();
    // coordinates of im(d_in) in that basis; integral since the lattice is
    // saturated and contains the image
    Matrix x(CoeffRing::integers(), k, a);
    SmithResult sn = smith_normal_form(n);
    std::size_t rank_n = 0;
    for (std::size_t i = 0; i < std::min(n.rows(), n.cols()); ++i)
        if (sn.d.at(i, i) != 0) ++rank_n;
    assert(rank_n == k);
    for (std::size_t col = 0; col < a; ++col) {
        std::vector<Int> c(n.rows(), 0);
        for (std::size_t i = 0; i < n.rows(); ++i) {
            Int acc = 0;
            for (std::size_t j = 0; j < n.rows(); ++j)
                acc += numerator(sn.u.at(i, j)) * numerator(d_in.at(j, col));
            c[i] = acc;
        }
        std::vector<Int> xp(k, 0);
        for (std::size_t i = 0; i < n.rows(); ++i) {
            Int di = (i < k) ? numerator(sn.d.at(i, i)) : Int(0);
            if (di == 0) {
                if (c[i] != 0) throw ComplexError("image does not lie in the kernel");
            } else {
                if (c[i] % di != 0) throw ComplexError("image does not lie in the kernel");
                xp[i] = c[i] / di;
            }
        }
        for (std::size_t i = 0; i < k; ++i) {
            Int acc = 0;
            for (std::size_t j = 0; j < k; ++j) acc += numerator(sn.v.at(i, j)) * xp[j];
            x.set(i, col, Rat(acc));
        }
    }
    SmithResult sx = smith_normal_form(x);
    ModuleInvariants inv;
    std::size_t nz = 0;
    std::size_t lim = std::min(x.rows(), x.cols());
    for (std::size_t i = 0; i < lim; ++i) {
        Int di = numerator(sx.d.at(i, i));
        if (di == 0) continue;
        ++nz;
        if (di > 1) inv.torsion.push_back(di);
    }
    inv.free_rank = static_cast<long long>(k - nz);
    std::sort(inv.torsion.begin(), inv.torsion.end());
    return inv;
}

// invariant factors over Z/n of the quotient (Z/n)^k by the row span of rel;
// one canonical divisor of n per generator column (n itself = free factor)
std::vector<Int> zn_quotient_invariants(const CoeffRing& ring, IMat rel, std::size_t k) {
    const Int& n = ring.modulus();
    for (auto& row : rel)
        for (auto& e : row) e = imod(e, n);
    std::size_t r = rel.size();
    std::size_t t = 0;
    auto ideal = [&](const Int& e) { return igcd(e, n); };
    while (t < r && t < k) {
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best = 0;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < k; ++j) {
                if (rel[i][j] == 0) continue;
                Int g = ideal(rel[i][j]);
                if (!found || g < best) {
                    best = g;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        std::swap(rel[t], rel[pi]);
        for (std::size_t i = 0; i < r; ++i) std::swap(rel[i][t], rel[i][pj]);
        for (;;) {
            Int a = rel[t][t];
            bool dirty = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                Int b = rel[i][t];
                if (b == 0) continue;
                if (b % igcd(a, n) == 0) {
                    Int mlt = solve_cong(a, b, n);
                    for (std::size_t j = t; j < k; ++j)
                        rel[i][j] = imod(rel[i][j] - mlt * rel[t][j], n);
                } else {
                    auto e = xgcd(a, b);
                    for (std::size_t j = t; j < k; ++j) {
                        Int st = rel[t][j], si = rel[i][j];
                        rel[t][j] = imod(e.p * st + e.q * si, n);
                        rel[i][j] = imod((a / e.g) * si - (b / e.g) * st, n);
                    }
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < k; ++j) {
                Int b = rel[t][j];
                if (b == 0) continue;
                Int a2 = rel[t][t];
                if (b % igcd(a2, n) == 0) {
                    Int mlt = solve_cong(a2, b, n);
                    for (std::size_t i = t; i < r; ++i)
                        rel[i][j] = imod(rel[i][j] - mlt * rel[i][t], n);
                } else {
                    auto e = xgcd(a2, b);
                    for (std::size_t i = t; i < r; ++i) {
                        Int ct = rel[i][t], cj = rel[i][j];
                        rel[i][t] = imod(e.p * ct + e.q * cj, n);
                        rel[i][j] = imod((a2 / e.g) * cj - (b / e.g) * ct, n);
                    }
                    dirty = true;
                }
            }
            if (dirty) continue;
            bool ok = true;
            Int g = ideal(rel[t][t]);
            for (std::size_t i = t + 1; i < r && ok; ++i)
                for (std::size_t j = t + 1; j < k && ok; ++j)
                    if (rel[i][j] % g != 0) {
                        for (std::size_t j2 = t; j2 < k; ++j2)
                            rel[t][j2] = imod(rel[t][j2] + rel[i][j2], n);
                        ok = false;
                    }
            if (ok) break;
        }
        ++t;
    }
    std::vector<Int> out;
    out.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        Int e = (j < t && j < rel.size()) ? rel[j][j] : Int(0);
        Int g = igcd(e, n);  // gcd(0, n) = n marks a free factor
        out.push_back(g);
    }
    return out;
}

ModuleInvariants zn_cohomology(const Matrix& d_in, const Matrix& d_out) {
    const CoeffRing& ring = d_in.ring();
    const Int& n = ring.modulus();
    // kernel generators of d_out, as rows
    IMat ker_rows_t = to_imat(d_out.transpose());
    auto gens = zn_marked_row_kernel(ring, ker_rows_t, d_out.rows(), {});
    std::size_t k = gens.size(), b = d_in.rows();
    // relations: combinations of the generators landing in im(d_in)
    IMat marked(k, IVec(b, 0));
    for (std::size_t i = 0; i < k; ++i) marked[i] = gens[i];
    IMat unmarked = to_imat(d_in.transpose());
    auto rel = zn_marked_row_kernel(ring, marked, b, unmarked);
    auto factors = zn_quotient_invariants(ring, rel, k);
    ModuleInvariants inv;
    for (const Int& d : factors) {
        if (d == n)
            ++inv.free_rank;
        else if (d > 1)
            inv.torsion.push_back(d);
    }
    std::sort(inv.torsion.begin(), inv.torsion.end());
    return inv;
}

}  // namespace

ModuleInvariants cohomology_at(const Matrix& d_in, const Matrix& d_out) {
    if (!(d_in.ring() == d_out.ring()))
        throw ComplexError("cohomology_at: differentials over different rings");
    if (d_out.cols() != d_in.rows())
        throw ComplexError("cohomology_at: differential shapes do not compose");
    if (d_in.cols() > 0 && d_out.rows() > 0 && !(d_out * d_in).is_zero())
        throw ComplexError("cohomology_at: d_out * d_in != 0");
    switch (d_in.ring().tag()) {
        case CoeffRing::Tag::Rationals:
        case CoeffRing::Tag::PrimeField: return field_cohomology(d_in, d_out);
        case CoeffRing::Tag::Integers: return integer_cohomology(d_in, d_out);
        case CoeffRing::Tag::IntegersModN: return zn_cohomology(d_in, d_out);
    }
    throw DomainError("cohomology_at: unsupported ring");
}

}  // namespace hhci
