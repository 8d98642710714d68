// poly.cpp

#include "hhci/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hhci {

namespace {

int degree_of(const MultiIndex& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

Int binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

}  // namespace

bool grevlex_less(const MultiIndex& a, const MultiIndex& b) {
    int da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db;
    // same degree: a < b iff the rightmost nonzero entry of a - b is positive
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

bool MonomialOrder::less(const MultiIndex& a, const MultiIndex& b) const {
    if (kind == Kind::ElimLast) {
        int la = a.back(), lb = b.back();
        if (la != lb) return la < lb;
        MultiIndex ap(a.begin(), a.end() - 1), bp(b.begin(), b.end() - 1);
        return grevlex_less(ap, bp);
    }
    return grevlex_less(a, b);
}

// ---------------------------------------------------------------------------
// Poly basics

Poly Poly::constant(const CoeffRing& ring, int nvars, const Rat& c) {
    Poly f(ring, nvars);
    f.add_term(MultiIndex(nvars, 0), c);
    return f;
}

Poly Poly::variable(const CoeffRing& ring, int nvars, int i, int exp) {
    MultiIndex e(nvars, 0);
    e[i] = exp;
    return monomial(ring, std::move(e), Rat(1));
}

Poly Poly::monomial(const CoeffRing& ring, MultiIndex e, const Rat& c) {
    Poly f(ring, static_cast<int>(e.size()));
    f.add_term(e, c);
    return f;
}

std::optional<int> Poly::total_degree() const {
    std::optional<int> d;
    for (const auto& [e, c] : terms_) {
        int de = degree_of(e);
        if (!d || de > *d) d = de;
    }
    return d;
}

Rat Poly::coeff(const MultiIndex& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const MultiIndex& e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::logic_error("exponent vector length mismatch");
    Rat v = ring_.add(coeff(e), c);
    if (v == 0)
        terms_.erase(e);
    else
        terms_[e] = v;
}

Poly Poly::operator+(const Poly& o) const {
    if (nvars_ != o.nvars_ || !(ring_ == o.ring_))
        throw std::logic_error("polynomial ring mismatch");
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r(ring_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = ring_.neg(c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (nvars_ != o.nvars_ || !(ring_ == o.ring_))
        throw std::logic_error("polynomial ring mismatch");
    Poly r(ring_, nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            MultiIndex e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, ring_.mul(c1, c2));
        }
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r(ring_, nvars_);
    Rat cn = ring_.normalize(c);
    if (cn == 0) return r;
    for (const auto& [e, v] : terms_) {
        Rat w = ring_.mul(v, cn);
        if (w != 0) r.terms_[e] = w;
    }
    return r;
}

std::optional<std::pair<MultiIndex, Rat>> Poly::leading_term(
    const MonomialOrder& order) const {
    std::optional<std::pair<MultiIndex, Rat>> best;
    for (const auto& [e, c] : terms_)
        if (!best || order.less(best->first, e)) best = {e, c};
    return best;
}

Poly Poly::map_ring(const CoeffRing& target) const {
    Poly r(target, nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Token {
    enum class Kind { Int, Name, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::size_t pos;
    Int value;
    std::string name;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ == s_.size()) return {Token::Kind::End, start, 0, {}};
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                digits += s_[i_++];
            return {Token::Kind::Int, start, Int(digits), {}};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' ||
                    s_[i_] == '\''))
                name += s_[i_++];
            return {Token::Kind::Name, start, 0, name};
        }
        ++i_;
        switch (c) {
            case '+': return {Token::Kind::Plus, start, 0, {}};
            case '-': return {Token::Kind::Minus, start, 0, {}};
            case '*': return {Token::Kind::Star, start, 0, {}};
            case '^': return {Token::Kind::Caret, start, 0, {}};
            case '/': return {Token::Kind::Slash, start, 0, {}};
            case '(': return {Token::Kind::LParen, start, 0, {}};
            case ')': return {Token::Kind::RParen, start, 0, {}};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

  private:
    const std::string& s_;
    std::size_t i_ = 0;
};

class Parser {
  public:
    Parser(const std::string& text, const std::vector<std::string>& vars,
           const CoeffRing& ring)
        : lex_(text), vars_(vars), ring_(ring) {
        advance();
    }

    Poly parse() {
        Poly f = expr();
        expect(Token::Kind::End, "end of input");
        return f;
    }

  private:
    void advance() { tok_ = lex_.next(); }

    void expect(Token::Kind k, const std::string& what) {
        if (tok_.kind != k) throw ParseError("expected " + what, tok_.pos);
    }

    int var_index(const Token& t) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == t.name) return static_cast<int>(i);
        throw UnknownVariable(t.name);
    }

    Poly expr() {
        bool neg = false;
        if (tok_.kind == Token::Kind::Minus) {
            neg = true;
            advance();
        } else if (tok_.kind == Token::Kind::Plus) {
            advance();
        }
        Poly f = term();
        if (neg) f = -f;
        while (tok_.kind == Token::Kind::Plus || tok_.kind == Token::Kind::Minus) {
            bool sub = tok_.kind == Token::Kind::Minus;
            advance();
            Poly g = term();
            f = sub ? f - g : f + g;
        }
        return f;
    }

    Poly term() {
        Poly f = factor();
        while (tok_.kind == Token::Kind::Star) {
            advance();
            f = f * factor();
        }
        return f;
    }

    Poly factor() {
        Poly b = base();
        if (tok_.kind == Token::Kind::Caret) {
            advance();
            expect(Token::Kind::Int, "a non-negative integer exponent");
            Int e = tok_.value;
            advance();
            if (e > 64) throw ParseError("exponent too large", tok_.pos);
            Poly r = Poly::constant(ring_, nv(), Rat(1));
            for (Int i = 0; i < e; ++i) r = r * b;
            return r;
        }
        return b;
    }

    Poly base() {
        switch (tok_.kind) {
            case Token::Kind::Int: {
                Rat c(tok_.value);
                std::size_t pos = tok_.pos;
                advance();
                if (tok_.kind == Token::Kind::Slash) {
                    advance();
                    expect(Token::Kind::Int, "an integer denominator");
                    if (tok_.value == 0) throw ParseError("division by zero", tok_.pos);
                    if (!ring_.is_unit(Rat(tok_.value)))
                        throw ParseError("denominator is not a unit in " + ring_.to_text(),
                                         pos);
                    c = ring_.mul(c, ring_.inv(Rat(tok_.value)));
                    advance();
                }
                return Poly::constant(ring_, nv(), c);
            }
            case Token::Kind::Name: {
                int i = var_index(tok_);
                advance();
                return Poly::variable(ring_, nv(), i);
            }
            case Token::Kind::LParen: {
                advance();
                Poly f = expr();
                expect(Token::Kind::RParen, "')'");
                advance();
                return f;
            }
            default:
                throw ParseError("expected a literal, variable or '('", tok_.pos);
        }
    }

    int nv() const { return static_cast<int>(vars_.size()); }

    Lexer lex_;
    Token tok_;
    const std::vector<std::string>& vars_;
    const CoeffRing& ring_;
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                const CoeffRing& ring) {
    return Parser(text, vars, ring).parse();
}

std::string to_text(const Poly& f, const std::vector<std::string>& vars) {
    if (f.is_zero()) return "0";
    std::vector<const std::pair<const MultiIndex, Rat>*> terms;
    for (const auto& t : f.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(),
              [](auto* a, auto* b) { return grevlex_less(b->first, a->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : terms) {
        const MultiIndex& e = t->first;
        Rat c = t->second;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (neg) c = -c;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        auto rat_text = [](const Rat& x) {
            std::string s = numerator(x).str();
            if (denominator(x) != 1) s += "/" + denominator(x).str();
            return s;
        };
        if (mono.empty())
            os << rat_text(c);
        else if (c == 1)
            os << mono;
        else
            os << rat_text(c) << "*" << mono;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// calculus

Poly partial(const Poly& f, int i) {
    Poly r(f.ring(), f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (e[i] == 0) continue;
        MultiIndex e2 = e;
        --e2[i];
        r.add_term(e2, f.ring().mul(c, f.ring().from_int(e[i])));
    }
    return r;
}

Poly divided_partial(const Poly& f, const MultiIndex& a) {
    if (static_cast<int>(a.size()) != f.nvars())
        throw std::logic_error("multi-index length mismatch");
    Poly r(f.ring(), f.nvars());
    for (const auto& [e, c] : f.terms()) {
        Int mult = 1;  // binomials over Z, reduced into the ring afterwards
        bool ok = true;
        for (int i = 0; i < f.nvars() && ok; ++i) {
            if (e[i] < a[i]) {
                ok = false;
                break;
            }
            mult *= binom(e[i], a[i]);
        }
        if (!ok) continue;
        MultiIndex e2(f.nvars());
        for (int i = 0; i < f.nvars(); ++i) e2[i] = e[i] - a[i];
        r.add_term(e2, f.ring().mul(c, f.ring().from_int(mult)));
    }
    return r;
}

std::vector<Rat> coeffs_univariate(const Poly& f) {
    if (f.nvars() != 1) throw std::logic_error("expected a one-variable polynomial");
    std::optional<int> d = f.total_degree();
    if (!d) return {};
    std::vector<Rat> cs(static_cast<std::size_t>(*d) + 1, Rat(0));
    for (const auto& [e, c] : f.terms()) cs[static_cast<std::size_t>(e[0])] = c;
    return cs;
}

std::vector<Rat> content_ideal(const Poly& f) {
    auto cs = coeffs_univariate(f);
    std::vector<Rat> out;
    for (std::size_t i = cs.size(); i-- > 0;)
        if (cs[i] != 0) out.push_back(cs[i]);
    return out;
}

Poly delta_quotient(const Poly& f) {
    if (f.nvars() != 1) throw std::logic_error("expected a one-variable polynomial");
    const CoeffRing& ring = f.ring();
    Poly r(ring, 2);
    for (const auto& [e, c] : f.terms()) {
        int k = e[0];
        // (x''^k - x'^k)/(x'' - x') = sum x'^(k-1-i) x''^i
        for (int i = 0; i < k; ++i) r.add_term({k - 1 - i, i}, c);
    }
    return r;
}

std::pair<Poly, Poly> divmod_univariate(const Poly& f, const Poly& g) {
    if (f.nvars() != 1 || g.nvars() != 1)
        throw std::logic_error("expected one-variable polynomials");
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    const CoeffRing& ring = f.ring();
    auto lt = g.leading_term();
    if (!ring.is_unit(lt->second))
        throw DomainError("leading coefficient is not a unit");
    Rat linv = ring.inv(lt->second);
    int dg = lt->first[0];
    Poly q(ring, 1), r = f;
    while (!r.is_zero()) {
        auto rl = r.leading_term();
        int dr = rl->first[0];
        if (dr < dg) break;
        Rat c = ring.mul(rl->second, linv);
        Poly t = Poly::monomial(ring, {dr - dg}, c);
        q = q + t;
        r = r - t * g;
    }
    return {q, r};
}

Poly gcd_univariate(const Poly& f, const Poly& g) {
    const CoeffRing& ring = f.ring();
    if (!ring.is_field()) throw DomainError("gcd_univariate requires a field");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        auto [q, r] = divmod_univariate(a, b);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.scaled(ring.inv(a.leading_term()->second));  // monic
}

Poly substitute(const Poly& f, const std::vector<Poly>& images) {
    if (images.size() != static_cast<std::size_t>(f.nvars()))
        throw std::logic_error("substitute: arity mismatch");
    int out_vars = images.empty() ? 0 : images[0].nvars();
    const CoeffRing& ring = f.ring();
    Poly r(ring, out_vars);
    for (const auto& [e, c] : f.terms()) {
        Poly term = Poly::constant(ring, out_vars, c);
        for (int i = 0; i < f.nvars(); ++i)
            for (int k = 0; k < e[i]; ++k) term = term * images[i];
        r = r + term;
    }
    return r;
}

}  // namespace hhci
