// Holomorphy rings of ℚ(x): given a set 𝒲 of allowed-pole places, the ring
// of functions with no pole outside 𝒲, together with the distinguished prime
// 𝔭 ∉ 𝒲 and its ideal I_𝔭 = {f in the ring : ord_𝔭 f > 0}. 𝒲 is either an
// explicit finite list or cofinite (everything except an explicit excluded
// list); both keep membership decidable place-by-place, with no polynomial
// factorization anywhere.
#pragma once

#include <optional>
#include <vector>

#include "zplusi/place.hpp"
#include "zplusi/ratfunc.hpp"

namespace zplusi {

class PlaceSet {
  public:
    enum class Mode { Finite, Cofinite };

    // 𝒲 = exactly these places (nonempty).
    static PlaceSet finite(std::vector<Place> members);
    // 𝒲 = all places except these (excluded list nonempty, so 𝒲 is proper).
    static PlaceSet cofinite(std::vector<Place> excluded);

    Mode mode() const { return mode_; }
    bool is_cofinite() const { return mode_ == Mode::Cofinite; }
    // The explicit list: members in Finite mode, non-members in Cofinite
    // mode. Sorted and distinct.
    const std::vector<Place>& listed() const { return listed_; }
    bool contains(const Place& q) const;

  private:
    PlaceSet(Mode m, std::vector<Place> listed);
    Mode mode_;
    std::vector<Place> listed_;
};

class HolomorphyRing {
  public:
    // Requires prime ∉ allowed_poles (std::invalid_argument otherwise).
    HolomorphyRing(PlaceSet allowed_poles, Place prime);
    // The worked instance: 𝔭 = (x), 𝒲 = every place except (x) — the local
    // ring of ℚ(x) at x.
    static HolomorphyRing local_at_x();

    const PlaceSet& allowed_poles() const { return allowed_; }
    const Place& prime() const { return prime_; }

  private:
    PlaceSet allowed_;
    Place prime_;
};

// f has no pole outside the allowed set.
bool ring_contains(const HolomorphyRing& ring, const RatFunc& f);
// f is in the ring and vanishes at the distinguished prime.
bool ideal_contains(const HolomorphyRing& ring, const RatFunc& f);
// f and 1/f both in the ring: ord zero at every place outside the allowed set.
bool unit_in_ring(const HolomorphyRing& ring, const RatFunc& u);

struct CoprimalityCertificate {
    RatFunc A, B;  // ring members with A*a + B*b = 1
};

struct CoprimeResult {
    std::optional<CoprimalityCertificate> certificate;  // set iff coprime
    std::optional<Place> witness;  // set iff not coprime: q ∉ 𝒲 with ord_q a, ord_q b > 0
    bool coprime() const { return certificate.has_value(); }
};

// Decide whether ring members a, b generate the unit ideal, producing either
// an exact Bezout certificate over the ring or a witness place where both
// vanish. Throws NotInRing when a precondition fails, UnsupportedRing for a
// finite 𝒲 without the infinite place (certificates there would need
// factorization), CannotCertify when a witness of degree >= 4 cannot be
// split into a named irreducible place.
CoprimeResult coprime_in_ring(const HolomorphyRing& ring, const RatFunc& a, const RatFunc& b);

}  // namespace zplusi
