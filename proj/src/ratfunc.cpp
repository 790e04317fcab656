#include "zplusi/ratfunc.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

#include "zplusi/errors.hpp"
#include "zbridge.hpp"

namespace zplusi {

namespace {

const Poly& one_poly() {
    static const Poly one = Poly::constant(1);
    return one;
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("inexact division where exactness was proven");
    return q;
}

}  // namespace

RatFunc::RatFunc() : den_(one_poly()) {}

RatFunc::RatFunc(const Poly& p) : num_(p), den_(one_poly()) {}

RatFunc::RatFunc(const Rational& c) : num_(Poly::constant(c)), den_(one_poly()) {}

RatFunc::RatFunc(Poly num, Poly den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}

RatFunc RatFunc::make(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    if (num.is_zero()) return RatFunc();
    // Work on the primitive integer forms: one gcd there settles coprimality,
    // and the scalar part is carried exactly as a rational.
    auto [zn, sn] = detail::integerize(num);
    auto [zd, sd] = detail::integerize(den);
    // zprimitive divides by the signed content (primitive parts have positive
    // leading coefficient), so carry that sign on the content side too.
    Integer cn = detail::zcontent(zn);
    if (zn.back() < 0) cn = -cn;
    Integer cd = detail::zcontent(zd);
    if (zd.back() < 0) cd = -cd;
    detail::ZVec pn = detail::zprimitive(zn);
    detail::ZVec pd = detail::zprimitive(zd);
    detail::ZVec g = detail::zgcd(pn, pd);
    if (detail::zdeg(g) > 0) {
        auto qn = detail::zdivexact(pn, g);
        auto qd = detail::zdivexact(pd, g);
        if (!qn || !qd) throw std::logic_error("gcd failed to divide its inputs");
        pn = std::move(*qn);
        pd = std::move(*qd);
    }
    // f = (cn*sd)/(cd*sn) * pn/pd with pn, pd coprime; fold the scalar and
    // pd's leading coefficient into the numerator so the denominator is monic.
    Rational scale(cn * sd, cd * sn * pd.back());
    scale.canonicalize();
    Poly n = detail::poly_from_z(pn).scaled(scale);
    Poly d = detail::poly_from_z(pd, pd.back());
    return RatFunc(std::move(n), std::move(d), Trusted{});
}

bool RatFunc::is_poly() const { return den_ == one_poly(); }

Rational RatFunc::as_constant() const {
    if (!is_poly() || (!num_.is_zero() && num_.deg() > 0))
        throw std::logic_error("rational function is not a constant");
    return num_.coeff(0);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Trusted{}); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // Both operands canonical: cancel gcd(den, o.den) up front, then only a
    // gcd against that small factor is needed to recanonicalize.
    Poly g = poly_gcd(den_, o.den_);
    if (g == one_poly()) {
        Poly n = num_ * o.den_ + o.num_ * den_;
        if (n.is_zero()) return RatFunc();
        return RatFunc(std::move(n), den_ * o.den_, Trusted{});
    }
    Poly b1 = poly_divexact(den_, g);
    Poly d1 = poly_divexact(o.den_, g);
    Poly t = num_ * d1 + o.num_ * b1;
    if (t.is_zero()) return RatFunc();
    Poly h = poly_gcd(t, g);
    if (h == one_poly()) return RatFunc(std::move(t), b1 * o.den_, Trusted{});
    Poly n = poly_divexact(t, h);
    Poly d = b1 * poly_divexact(o.den_, h);
    return RatFunc(std::move(n), std::move(d), Trusted{});
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    // Cross-cancel before multiplying; inputs being canonical makes the
    // result canonical with no further gcd.
    Poly g1 = poly_gcd(num_, o.den_);
    Poly g2 = poly_gcd(o.num_, den_);
    const Poly& one = one_poly();
    Poly a = g1 == one ? num_ : poly_divexact(num_, g1);
    Poly d = g1 == one ? o.den_ : poly_divexact(o.den_, g1);
    Poly c = g2 == one ? o.num_ : poly_divexact(o.num_, g2);
    Poly b = g2 == one ? den_ : poly_divexact(den_, g2);
    return RatFunc(a * c, b * d, Trusted{});
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DivisionByZero("division by the zero rational function");
    // Invert o in place: swap and re-monicize; coprimality is untouched.
    Rational inv = Rational(1) / o.num_.leading_coeff();
    RatFunc recip(o.den_.scaled(inv), o.num_.scaled(inv), Trusted{});
    return *this * recip;
}

namespace {

long place_multiplicity(const Poly& p, const Poly& pi) {
    long m = 0;
    Poly cur = p;
    for (;;) {
        auto [q, r] = poly_divmod(cur, pi);
        if (!r.is_zero()) break;
        ++m;
        cur = std::move(q);
    }
    return m;
}

}  // namespace

OrdVal ord_at_place(const RatFunc& f, const Place& place) {
    if (f.is_zero()) return OrdVal::inf();
    if (place.is_infinity()) {
        long dn = f.num().is_zero() ? 0 : f.num().deg();
        return OrdVal::of((f.den().deg()) - dn);
    }
    const Poly& pi = place.modulus();
    // x itself is the workhorse place; its multiplicity is just the trailing
    // exponent, no division needed.
    if (pi == Poly::x()) {
        unsigned long tn = f.num().terms().begin()->first;
        if (tn > 0) return OrdVal::of(static_cast<long>(tn));
        return OrdVal::of(-static_cast<long>(f.den().terms().begin()->first));
    }
    long mn = place_multiplicity(f.num(), pi);
    if (mn > 0) return OrdVal::of(mn);  // coprime form: denominator is clean
    return OrdVal::of(-place_multiplicity(f.den(), pi));
}

Rational eval_at(const RatFunc& f, const Rational& c) {
    Rational dv = f.den().eval(c);
    if (dv == 0) throw PoleAtPoint("pole at x = " + rat_to_string(c));
    return f.num().eval(c) / dv;
}

std::string ratfunc_to_string(const RatFunc& f) {
    if (f.is_poly()) return poly_to_string(f.num());
    return "(" + poly_to_string(f.num()) + ")/(" + poly_to_string(f.den()) + ")";
}

namespace {

std::string_view trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Strip matching outermost parentheses, repeatedly.
std::string_view strip_parens(std::string_view s) {
    s = trim(s);
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        bool outer = true;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            if (depth == 0) {
                outer = false;  // the opening paren closes before the end
                break;
            }
        }
        if (!outer) break;
        s = trim(s.substr(1, s.size() - 2));
    }
    return s;
}

}  // namespace

RatFunc ratfunc_from_string(std::string_view text) {
    std::string_view body = trim(text);
    if (body.empty()) throw ParseError("empty rational function text");
    try {
        return RatFunc(poly_from_string(body));
    } catch (const ParseError&) {
    }
    // Split at a top-level '/': both sides must be polynomials (each side may
    // be parenthesized, as the canonical form is).
    int depth = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
        char ch = body[i];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == '/' && depth == 0) {
            std::string_view lhs = strip_parens(body.substr(0, i));
            std::string_view rhs = strip_parens(body.substr(i + 1));
            try {
                Poly n = poly_from_string(lhs);
                Poly d = poly_from_string(rhs);
                return RatFunc::make(n, d);
            } catch (const ParseError&) {
            }
        }
    }
    throw ParseError("unparseable rational function: " + std::string(text));
}

}  // namespace zplusi
