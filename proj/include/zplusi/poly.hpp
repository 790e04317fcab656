// Univariate polynomials over ℚ with exact arithmetic, GCD (production
// modular path, subresultant variant, extended Euclid with Bezout
// cofactors) and the canonical text form.
//
// Coefficients are stored sparsely, keyed by exponent, iterated ascending —
// that ordering is what makes every serialization deterministic.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "zplusi/rational.hpp"

namespace zplusi {

class Poly {
  public:
    using TermMap = std::map<unsigned long, Rational>;

    Poly() = default;  // the zero polynomial
    static Poly constant(const Rational& c);
    static Poly monomial(unsigned long e, const Rational& c = Rational(1));  // c*x^e
    static Poly x() { return monomial(1); }
    static Poly from_terms(const TermMap& terms);

    bool is_zero() const { return terms_.empty(); }
    // The zero polynomial has no degree: a distinguished sentinel (empty
    // optional), deliberately not -1, so degree arithmetic cannot go wrong
    // silently.
    std::optional<long> degree() const;
    // Degree of a known-nonzero polynomial.
    long deg() const;
    const TermMap& terms() const { return terms_; }
    Rational coeff(unsigned long e) const;
    const Rational& leading_coeff() const;  // throws std::logic_error on zero
    bool is_monic() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rational& c) const;
    Poly monic() const;  // throws std::invalid_argument on zero
    Poly derivative() const;
    Rational eval(const Rational& point) const;
    Poly pow(unsigned long e) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    // Total order (degree, then coefficients from the top); gives places and
    // fixtures a canonical ordering.
    static int compare(const Poly& a, const Poly& b);
    bool operator<(const Poly& o) const { return compare(*this, o) < 0; }

  private:
    void set(unsigned long e, const Rational& c);  // drops zeros
    TermMap terms_;
};

struct PolyDivMod {
    Poly quot, rem;
};
// Euclidean division over ℚ: a = quot*b + rem, rem = 0 or deg rem < deg b.
PolyDivMod poly_divmod(const Poly& a, const Poly& b);  // DivisionByZero

// Monic gcd over ℚ. Production path: modular gcd with degree certification
// and division verification, subresultant PRS as fallback. gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);
// Same result computed purely by the fraction-free subresultant remainder
// sequence (kept as an independent, always-correct expert witness).
Poly poly_gcd_subresultant(const Poly& a, const Poly& b);

struct PolyBezout {
    Poly g, A, B;  // g monic, A*a + B*b = g
};
PolyBezout poly_gcd_bezout(const Poly& a, const Poly& b);  // BothZero

// Canonical text: terms ascending by exponent, reduced "p/q" coefficients,
// e.g. "1 + x", "-1 + 2*x^3", "3/2*x^2"; the zero polynomial is "0".
// Re-serializing a parsed canonical string is byte-identical.
std::string poly_to_string(const Poly& p);
Poly poly_from_string(std::string_view text);  // ParseError

// Exact rational-root search for deg(p) <= 3 (used by irreducibility
// certification): degree 2 via a perfect-square discriminant test, degree 3
// via a modular no-root certificate with a budgeted divisor search as the
// deciding fallback. Throws CannotCertify if the coefficient factoring
// budget is exhausted, std::invalid_argument for deg > 3 or constants.
std::optional<Rational> find_rational_root(const Poly& p);

}  // namespace zplusi
