#include "zplusi/rings.hpp"

#include <algorithm>
#include <stdexcept>

#include "zplusi/errors.hpp"

namespace zplusi {

PlaceSet::PlaceSet(Mode m, std::vector<Place> listed) : mode_(m), listed_(std::move(listed)) {
    std::sort(listed_.begin(), listed_.end());
    listed_.erase(std::unique(listed_.begin(), listed_.end()), listed_.end());
    if (listed_.empty())
        throw std::invalid_argument(
            "place set must keep the allowed-pole set proper and nonempty");
}

PlaceSet PlaceSet::finite(std::vector<Place> members) {
    return PlaceSet(Mode::Finite, std::move(members));
}

PlaceSet PlaceSet::cofinite(std::vector<Place> excluded) {
    return PlaceSet(Mode::Cofinite, std::move(excluded));
}

bool PlaceSet::contains(const Place& q) const {
    bool in_list = std::binary_search(listed_.begin(), listed_.end(), q);
    return mode_ == Mode::Finite ? in_list : !in_list;
}

HolomorphyRing::HolomorphyRing(PlaceSet allowed_poles, Place prime)
    : allowed_(std::move(allowed_poles)), prime_(std::move(prime)) {
    if (allowed_.contains(prime_))
        throw std::invalid_argument("the distinguished prime must lie outside the pole set");
}

HolomorphyRing HolomorphyRing::local_at_x() {
    Place px = Place::finite(Poly::x());
    return HolomorphyRing(PlaceSet::cofinite({px}), px);
}

namespace {

// Divide out every power of the listed finite places from p; the residual
// carries exactly the factors at unlisted finite places.
Poly strip_listed(const Poly& p, const std::vector<Place>& listed) {
    Poly cur = p;
    for (const Place& q : listed) {
        if (q.is_infinity()) continue;
        for (;;) {
            auto [quot, rem] = poly_divmod(cur, q.modulus());
            if (!rem.is_zero()) break;
            cur = std::move(quot);
        }
    }
    return cur;
}

bool infinity_listed(const std::vector<Place>& listed) {
    for (const Place& q : listed)
        if (q.is_infinity()) return true;
    return false;
}

long deg_or_zero(const Poly& p) { return p.is_zero() ? 0 : p.deg(); }

}  // namespace

bool ring_contains(const HolomorphyRing& ring, const RatFunc& f) {
    if (f.is_zero()) return true;
    const PlaceSet& w = ring.allowed_poles();
    if (w.is_cofinite()) {
        for (const Place& q : w.listed())
            if (!ord_at_place(f, q).at_least(0)) return false;
        return true;
    }
    // Finite 𝒲: all denominator factors must sit at listed places, and the
    // infinite place imposes its degree condition when unlisted.
    Poly res = strip_listed(f.den(), w.listed());
    if (!res.is_zero() && res.deg() > 0) return false;
    if (!infinity_listed(w.listed()) && f.den().deg() < deg_or_zero(f.num())) return false;
    return true;
}

bool ideal_contains(const HolomorphyRing& ring, const RatFunc& f) {
    return ring_contains(ring, f) && ord_at_place(f, ring.prime()).at_least(1);
}

bool unit_in_ring(const HolomorphyRing& ring, const RatFunc& u) {
    if (u.is_zero()) return false;
    const PlaceSet& w = ring.allowed_poles();
    if (w.is_cofinite()) {
        for (const Place& q : w.listed())
            if (!(ord_at_place(u, q) == OrdVal::of(0))) return false;
        return true;
    }
    Poly rn = strip_listed(u.num(), w.listed());
    Poly rd = strip_listed(u.den(), w.listed());
    if (rn.deg() > 0 || rd.deg() > 0) return false;
    if (!infinity_listed(w.listed()) && u.num().deg() != u.den().deg()) return false;
    return true;
}

namespace {

// A place at which both a and b vanish, extracted from their stripped common
// factor g (deg >= 1). Degree <= 3 is decided exactly; a rational root names
// a linear witness, otherwise g itself is irreducible. Higher degrees would
// need factorization.
Place witness_from(const Poly& g) {
    Poly m = g.monic();
    if (m.deg() == 1) return Place::finite(m);
    if (m.deg() <= 3) {
        if (auto r = find_rational_root(m))
            return Place::finite(Poly::x() - Poly::constant(*r));
        return Place::finite(m);
    }
    throw CannotCertify("common factor of degree >= 4: cannot name an irreducible witness");
}

// A finite place outside 𝒲, for the degenerate both-zero pair. Some monic
// linear polynomial x + k is always available.
Place outside_place(const PlaceSet& w) {
    if (w.is_cofinite()) return w.listed().front();
    for (long k = 0;; ++k) {
        Place cand = Place::finite(Poly::x() + Poly::constant(Rational(k)));
        if (!w.contains(cand)) return cand;
    }
}

}  // namespace

CoprimeResult coprime_in_ring(const HolomorphyRing& ring, const RatFunc& a, const RatFunc& b) {
    if (!ring_contains(ring, a) || !ring_contains(ring, b))
        throw NotInRing("coprimality inputs must be ring members");
    CoprimeResult out;

    if (a.is_zero() && b.is_zero()) {
        out.witness = outside_place(ring.allowed_poles());
        return out;
    }
    RatFunc one(Rational(1));
    if (unit_in_ring(ring, b)) {
        out.certificate = CoprimalityCertificate{RatFunc(), one / b};
        return out;
    }
    if (unit_in_ring(ring, a)) {
        out.certificate = CoprimalityCertificate{one / a, RatFunc()};
        return out;
    }

    const PlaceSet& w = ring.allowed_poles();
    if (w.is_cofinite()) {
        // The places outside 𝒲 are exactly the excluded list; scan it for a
        // common zero, otherwise some shift a + c·b is a unit (each excluded
        // place rules out at most one value of c).
        for (const Place& q : w.listed()) {
            OrdVal oa = ord_at_place(a, q);
            OrdVal ob = ord_at_place(b, q);
            if (oa.at_least(1) && ob.at_least(1)) {
                out.witness = q;
                return out;
            }
        }
        std::size_t k = w.listed().size();
        for (std::size_t c = 0; c <= k; ++c) {
            RatFunc u = a + b * RatFunc(Rational(static_cast<long>(c)));
            bool ok = !u.is_zero();
            for (const Place& q : w.listed()) {
                if (!ok) break;
                ok = (ord_at_place(u, q) == OrdVal::of(0));
            }
            if (ok) {
                RatFunc inv = one / u;
                out.certificate = CoprimalityCertificate{
                    inv, inv * RatFunc(Rational(static_cast<long>(c)))};
                return out;
            }
        }
        throw std::logic_error("unit-shift search exhausted beyond its proven bound");
    }

    // Finite 𝒲: the Bezout certificate lives over polynomials, so its
    // cofactors are polynomials and need the infinite place inside 𝒲.
    if (!infinity_listed(w.listed()))
        throw UnsupportedRing("finite pole set without the infinite place");
    const Poly& na = a.num();
    const Poly& nb = b.num();
    Poly g = a.is_zero() ? nb : (b.is_zero() ? na : poly_gcd(na, nb));
    Poly resid = strip_listed(g, w.listed());
    if (resid.deg() > 0) {
        out.witness = witness_from(resid);
        return out;
    }
    if (a.is_zero() || b.is_zero())
        throw std::logic_error("a zero non-unit must leave an unlisted factor");
    auto bez = poly_gcd_bezout(na, nb);
    // (A'/g)na + (B'/g)nb = 1; multiply through by the denominators.
    RatFunc gg(bez.g);
    RatFunc A = RatFunc(bez.A) * RatFunc(a.den()) / gg;
    RatFunc B = RatFunc(bez.B) * RatFunc(b.den()) / gg;
    out.certificate = CoprimalityCertificate{A, B};
    return out;
}

}  // namespace zplusi
