#include "zplusi/poly.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "zplusi/errors.hpp"
#include "zbridge.hpp"

namespace zplusi {

namespace {

Rational make_rat(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rational_pow(const Rational& base, unsigned long e) {
    if (e == 0) return Rational(1);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), e);
    return Rational(n, d);  // base canonical => powers stay canonical
}

}  // namespace

Poly Poly::constant(const Rational& c) {
    Poly p;
    p.set(0, c);
    return p;
}

Poly Poly::monomial(unsigned long e, const Rational& c) {
    Poly p;
    p.set(e, c);
    return p;
}

Poly Poly::from_terms(const TermMap& terms) {
    Poly p;
    for (const auto& [e, c] : terms) p.set(e, c);
    return p;
}

void Poly::set(unsigned long e, const Rational& c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

std::optional<long> Poly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return static_cast<long>(terms_.rbegin()->first);
}

long Poly::deg() const {
    auto d = degree();
    if (!d) throw std::logic_error("deg() of the zero polynomial");
    return *d;
}

Rational Poly::coeff(unsigned long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Rational& Poly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading_coeff of the zero polynomial");
    return terms_.rbegin()->second;
}

bool Poly::is_monic() const { return !terms_.empty() && leading_coeff() == 1; }

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    // Large products go through the dense integer engine: clearing
    // denominators first avoids the per-term rational gcds that dominate a
    // sparse-map schoolbook product at this size.
    if (terms_.size() * o.terms_.size() > 1024) return detail::mul_via_z(*this, o);
    Poly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            unsigned long e = ea + eb;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_[e] = ca * cb;
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    if (c == 0) return Poly();
    Poly r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) throw std::invalid_argument("monic() of the zero polynomial");
    return scaled(Rational(1) / leading_coeff());
}

Poly Poly::derivative() const {
    Poly r;
    for (const auto& [e, c] : terms_)
        if (e >= 1) r.terms_[e - 1] = c * Rational(static_cast<long>(e));
    return r;
}

Rational Poly::eval(const Rational& point) const {
    if (terms_.empty()) return Rational(0);
    if (point == 0) return coeff(0);
    // Horner over the exponent gaps, walking terms from the top down.
    auto it = terms_.rbegin();
    Rational acc = it->second;
    unsigned long last = it->first;
    for (++it; it != terms_.rend(); ++it) {
        acc = acc * rational_pow(point, last - it->first) + it->second;
        last = it->first;
    }
    if (last > 0) acc *= rational_pow(point, last);
    return acc;
}

Poly Poly::pow(unsigned long e) const {
    Poly r = Poly::constant(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

int Poly::compare(const Poly& a, const Poly& b) {
    if (a.terms_.empty() || b.terms_.empty()) {
        if (a.terms_.empty() && b.terms_.empty()) return 0;
        return a.terms_.empty() ? -1 : 1;
    }
    long da = a.deg(), db = b.deg();
    if (da != db) return da < db ? -1 : 1;
    auto ia = a.terms_.rbegin();
    auto ib = b.terms_.rbegin();
    while (ia != a.terms_.rend() && ib != b.terms_.rend()) {
        if (ia->first != ib->first) return ia->first > ib->first ? 1 : -1;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c < 0 ? -1 : 1;
        ++ia;
        ++ib;
    }
    if (ia == a.terms_.rend() && ib == b.terms_.rend()) return 0;
    return ia == a.terms_.rend() ? -1 : 1;
}

PolyDivMod poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly q, r = a;
    const long db = b.deg();
    const Rational& lb = b.leading_coeff();
    while (!r.is_zero() && r.deg() >= db) {
        unsigned long e = static_cast<unsigned long>(r.deg() - db);
        Rational c = r.leading_coeff() / lb;
        Poly t = Poly::monomial(e, c);
        q = q + t;
        r = r - t * b;
    }
    return {q, r};
}

namespace detail {

std::pair<ZVec, Integer> integerize(const Poly& p) {
    Integer l(1);
    for (const auto& [e, c] : p.terms()) {
        (void)e;
        Integer d = c.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    ZVec z;
    if (!p.is_zero()) {
        z.assign(static_cast<std::size_t>(p.deg()) + 1, Integer(0));
        for (const auto& [e, c] : p.terms()) {
            Integer scale;
            mpz_divexact(scale.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
            z[e] = c.get_num() * scale;
        }
    }
    return {std::move(z), std::move(l)};
}

Poly poly_from_z(const ZVec& z, const Integer& den) {
    Poly::TermMap t;
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i] != 0) {
            Rational c(z[i], den);
            c.canonicalize();
            t[i] = c;
        }
    return Poly::from_terms(t);
}

Poly mul_via_z(const Poly& a, const Poly& b) {
    auto [za, sa] = integerize(a);
    auto [zb, sb] = integerize(b);
    return poly_from_z(zmul(za, zb), sa * sb);
}

bool identity_holds_mod_p(const std::vector<std::vector<Poly>>& terms) {
    // A handful of screening primes guards against one colliding with a
    // coefficient denominator; if all collide, stay inconclusive.
    for (std::size_t pi = 0; pi < 5; ++pi) {
        const std::uint64_t p = nth_modular_prime(pi);
        MVec acc;
        bool usable = true;
        for (const auto& factors : terms) {
            MVec prod{1 % p};
            for (const Poly& f : factors) {
                auto [z, den] = integerize(f);
                auto img = zreduce_rational_mod(z, den, p);
                if (!img) {
                    usable = false;
                    break;
                }
                prod = mpoly_mul(prod, *img, p);
                if (prod.empty()) break;
            }
            if (!usable) break;
            acc = mpoly_add(acc, prod, p);
        }
        if (usable) return acc.empty();
    }
    return true;
}

}  // namespace detail

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    // Unit and equal operands dominate the rational-function hot paths.
    if (a.deg() == 0 || b.deg() == 0) return Poly::constant(Rational(1));
    if (a == b) return a.monic();
    auto [za, la] = detail::integerize(a);
    auto [zb, lb] = detail::integerize(b);
    (void)la;
    (void)lb;
    detail::ZVec g = detail::zgcd(za, zb);
    return detail::poly_from_z(g, g.back());  // monic over ℚ
}

Poly poly_gcd_subresultant(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    auto [za, la] = detail::integerize(a);
    auto [zb, lb] = detail::integerize(b);
    (void)la;
    (void)lb;
    detail::ZVec g = detail::zgcd_subresultant(za, zb);
    return detail::poly_from_z(g, g.back());
}

PolyBezout poly_gcd_bezout(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw BothZero("bezout of (0, 0)");
    Rational one(1);
    if (a == b || b.is_zero()) {
        Rational inv = one / a.leading_coeff();
        return {a.monic(), Poly::constant(inv), Poly()};
    }
    if (a.is_zero()) {
        Rational inv = one / b.leading_coeff();
        return {b.monic(), Poly(), Poly::constant(inv)};
    }
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(1), s1;
    Poly t0, t1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, rem] = poly_divmod(r0, r1);
        r0 = r1;
        r1 = rem;
        Poly s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        Poly t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    Rational inv = one / r0.leading_coeff();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (e == 0) {
            out += rat_to_string(mag);
        } else {
            if (mag != 1) {
                out += rat_to_string(mag);
                out += "*";
            }
            out += "x";
            if (e >= 2) {
                out += "^";
                out += std::to_string(e);
            }
        }
    }
    return out;
}

namespace {

struct PolyParser {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError("expected digits in polynomial at offset " +
                                         std::to_string(start));
        return std::string(s.substr(start, i - start));
    }

    // Unsigned rational literal: "p" or "p/q". Signs belong to the
    // surrounding +/- separators.
    Rational rational_lit() {
        std::string num = digits();
        if (eat('/')) {
            std::string den = digits();
            return rat_from_string(num + "/" + den);
        }
        return rat_from_string(num);
    }

    unsigned long exponent() {
        std::string d = digits();
        errno = 0;
        char* end = nullptr;
        unsigned long v = std::strtoul(d.c_str(), &end, 10);
        if (errno != 0 || end == nullptr || *end != '\0')
            throw ParseError("exponent out of range: " + d);
        return v;
    }

    // term := rational ('*' xpow)? | xpow ;  xpow := 'x' ('^' uint)?
    std::pair<unsigned long, Rational> term() {
        Rational c(1);
        bool saw_coeff = false;
        if (peek() != 'x') {
            c = rational_lit();
            saw_coeff = true;
        }
        unsigned long e = 0;
        bool want_x = !saw_coeff || eat('*');
        if (want_x) {
            skip_ws();
            if (i >= s.size() || s[i] != 'x')
                throw ParseError("expected 'x' in polynomial at offset " + std::to_string(i));
            ++i;
            e = eat('^') ? exponent() : 1;
        }
        return {e, c};
    }

    Poly parse() {
        Poly acc;
        if (done()) throw ParseError("empty polynomial text");
        int sign = 1;
        if (eat('-'))
            sign = -1;
        else
            eat('+');
        for (;;) {
            auto [e, c] = term();
            acc = acc + Poly::monomial(e, sign < 0 ? Rational(-c) : c);
            if (done()) break;
            if (eat('+'))
                sign = 1;
            else if (eat('-'))
                sign = -1;
            else
                throw ParseError("expected '+' or '-' in polynomial at offset " +
                                 std::to_string(i));
        }
        return acc;
    }
};

}  // namespace

Poly poly_from_string(std::string_view text) {
    PolyParser p{text};
    return p.parse();
}

namespace {

// Trial-division factorization of |n| into primes, with a probable-prime
// acceptance for one large cofactor. Returns false when the budget runs out.
bool factor_abs(const Integer& n_in, std::vector<Integer>& primes) {
    Integer n = abs(n_in);
    if (n == 0) return false;
    for (Integer p(2); p * p <= n && p < 1000000; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            primes.push_back(p);
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) return false;
        primes.push_back(n);
    }
    return true;
}

bool all_divisors(const std::vector<Integer>& primes, std::vector<Integer>& out,
                  std::size_t cap) {
    out.assign(1, Integer(1));
    std::vector<Integer> sorted = primes;
    std::size_t i = 0;
    while (i < sorted.size()) {
        Integer p = sorted[i];
        std::size_t mult = 0;
        while (i < sorted.size() && sorted[i] == p) {
            ++mult;
            ++i;
        }
        std::size_t base = out.size();
        Integer pk(1);
        for (std::size_t k = 1; k <= mult; ++k) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) {
                out.push_back(out[j] * pk);
                if (out.size() > cap) return false;
            }
        }
    }
    return true;
}

}  // namespace

std::optional<Rational> find_rational_root(const Poly& p) {
    auto dopt = p.degree();
    if (!dopt || *dopt == 0)
        throw std::invalid_argument("rational-root search needs degree >= 1");
    long d = *dopt;
    if (d > 3) throw std::invalid_argument("rational-root search limited to degree <= 3");

    auto [z, scale] = detail::integerize(p);
    (void)scale;
    z = detail::zprimitive(z);
    if (z[0] == 0) return Rational(0);

    if (d == 1) return make_rat(-z[0], z[1]);

    if (d == 2) {
        Integer disc = z[1] * z[1] - 4 * z[2] * z[0];
        if (disc < 0) return std::nullopt;
        if (mpz_perfect_square_p(disc.get_mpz_t()) == 0) return std::nullopt;
        Integer s;
        mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
        return make_rat(-z[1] + s, 2 * z[2]);
    }

    // Degree 3. A full-degree, rootless reduction mod p rules out any
    // rational root (a root r = u/v in lowest terms with p dividing neither
    // v nor lc would reduce to a root mod p).
    static const unsigned small_primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29,
                                            31, 37, 41, 43, 47, 53, 59, 61, 67,
                                            71, 73, 79, 83, 89, 97, 101};
    for (unsigned q : small_primes) {
        if (mpz_fdiv_ui(z[3].get_mpz_t(), q) == 0) continue;
        bool has_root = false;
        for (unsigned long r = 0; r < q && !has_root; ++r) {
            unsigned long acc = 0;
            for (std::size_t k = z.size(); k-- > 0;) {
                unsigned long ck = mpz_fdiv_ui(z[k].get_mpz_t(), q);
                acc = (acc * r + ck) % q;
            }
            has_root = (acc == 0);
        }
        if (!has_root) return std::nullopt;
    }

    // Inconclusive screen: decide exactly by enumerating candidate roots
    // ±(divisor of constant)/(divisor of leading).
    std::vector<Integer> pf, qf;
    if (!factor_abs(z[0], pf) || !factor_abs(z[3], qf))
        throw CannotCertify("coefficient factoring budget exhausted in root search");
    std::vector<Integer> ps, qs;
    if (!all_divisors(pf, ps, 4096) || !all_divisors(qf, qs, 4096))
        throw CannotCertify("divisor enumeration budget exhausted in root search");
    Poly pp = detail::poly_from_z(z);
    for (const Integer& num : ps)
        for (const Integer& den : qs) {
            if (gcd(num, den) != 1) continue;
            Rational cand(num, den);
            if (pp.eval(cand) == 0) return cand;
            if (pp.eval(-cand) == 0) return -cand;
        }
    return std::nullopt;
}

}  // namespace zplusi
