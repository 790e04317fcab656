// Rational functions over ℚ(x) in canonical form: numerator and denominator
// coprime, denominator monic, zero represented as 0/1. Canonicalization and
// the arithmetic operators run on the integer engine underneath; orders at
// places and evaluation are the two ways the rest of the toolkit looks at a
// function locally.
#pragma once

#include <string>
#include <string_view>

#include "zplusi/place.hpp"
#include "zplusi/poly.hpp"

namespace zplusi {

class RatFunc {
  public:
    RatFunc();  // zero
    explicit RatFunc(const Poly& p);
    explicit RatFunc(const Rational& c);
    static RatFunc make(const Poly& num, const Poly& den);  // ZeroDenominator
    static RatFunc x() { return RatFunc(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const;
    // Constant value when this is one; throws std::logic_error otherwise.
    Rational as_constant() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;  // DivisionByZero
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

  private:
    struct Trusted {};
    RatFunc(Poly num, Poly den, Trusted);
    Poly num_, den_;
};

// Order of vanishing, with the order of the zero function kept as a
// distinguished infinity rather than a large number.
struct OrdVal {
    bool infinite = false;
    long value = 0;
    static OrdVal inf() { return {true, 0}; }
    static OrdVal of(long v) { return {false, v}; }
    bool at_least(long k) const { return infinite || value >= k; }
    bool operator==(const OrdVal& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
};

// ord of f at a place: multiplicity of the modulus in num minus in den
// (computed by repeated exact division, never by factoring), or
// deg(den) - deg(num) at infinity.
OrdVal ord_at_place(const RatFunc& f, const Place& place);

// Exact evaluation at x = c; PoleAtPoint when the denominator vanishes.
Rational eval_at(const RatFunc& f, const Rational& c);

// Canonical text: the numerator's polynomial text when the denominator is 1,
// otherwise "(num)/(den)".
std::string ratfunc_to_string(const RatFunc& f);
// Accepts the canonical form plus bare polynomial text and unparenthesized
// "num/den" where both sides parse as polynomials.
RatFunc ratfunc_from_string(std::string_view text);

}  // namespace zplusi
