// Places of the rational function field ℚ(x): the finite places are monic
// irreducible polynomials, plus the single place at infinity. Finite places
// carry a certification state — degree 1 is trivially irreducible, degrees 2
// and 3 are certified exactly at construction, higher degrees are accepted
// only on the caller's explicit word (and that is recorded).
#pragma once

#include <string>
#include <string_view>

#include "zplusi/poly.hpp"

namespace zplusi {

class Place {
  public:
    static Place at_infinity();
    // Monic-normalizes, then certifies irreducibility (deg <= 3; may throw
    // CannotCertify when the exact degree-3 search runs out of budget,
    // std::invalid_argument if the polynomial is constant or reducible).
    // deg >= 4 is refused here; use finite_asserted.
    static Place finite(const Poly& modulus);
    // Accepts any monic-normalizable polynomial of degree >= 1 on the
    // caller's assertion of irreducibility; the assertion is recorded.
    static Place finite_asserted(const Poly& modulus);

    bool is_infinity() const { return infinity_; }
    bool is_finite() const { return !infinity_; }
    const Poly& modulus() const;  // throws std::logic_error for infinity
    long degree() const;          // deg of modulus; 1 for infinity
    bool irreducibility_asserted() const { return asserted_; }

    bool operator==(const Place& o) const;
    bool operator!=(const Place& o) const { return !(*this == o); }
    // Finite places ordered by polynomial compare; infinity sorts last.
    bool operator<(const Place& o) const;

    // "inf" or the canonical polynomial text of the modulus.
    std::string to_string() const;
    static Place from_string(std::string_view text);  // parses via finite()

  private:
    Place() = default;
    bool infinity_ = false;
    bool asserted_ = false;
    Poly modulus_;
};

}  // namespace zplusi
