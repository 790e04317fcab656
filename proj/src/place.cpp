#include "zplusi/place.hpp"

#include <cctype>
#include <stdexcept>

#include "zplusi/errors.hpp"

namespace zplusi {

namespace {

Poly normalize_modulus(const Poly& p) {
    if (p.is_zero() || p.deg() < 1)
        throw std::invalid_argument("finite place needs a nonconstant modulus");
    return p.monic();
}

}  // namespace

Place Place::at_infinity() {
    Place pl;
    pl.infinity_ = true;
    return pl;
}

Place Place::finite(const Poly& modulus) {
    Poly m = normalize_modulus(modulus);
    long d = m.deg();
    if (d > 3)
        throw CannotCertify(
            "cannot certify irreducibility above degree 3; construct with an assertion");
    if (d >= 2) {
        // Degrees 2 and 3: irreducible over ℚ iff no rational root.
        if (find_rational_root(m)) throw std::invalid_argument("modulus is reducible");
    }
    Place pl;
    pl.modulus_ = std::move(m);
    return pl;
}

Place Place::finite_asserted(const Poly& modulus) {
    Place pl;
    pl.modulus_ = normalize_modulus(modulus);
    pl.asserted_ = true;
    return pl;
}

const Poly& Place::modulus() const {
    if (infinity_) throw std::logic_error("the place at infinity has no modulus");
    return modulus_;
}

long Place::degree() const { return infinity_ ? 1 : modulus_.deg(); }

bool Place::operator==(const Place& o) const {
    if (infinity_ != o.infinity_) return false;
    return infinity_ || modulus_ == o.modulus_;
}

bool Place::operator<(const Place& o) const {
    if (infinity_ != o.infinity_) return !infinity_;  // finite before infinity
    if (infinity_) return false;
    return Poly::compare(modulus_, o.modulus_) < 0;
}

std::string Place::to_string() const {
    return infinity_ ? "inf" : poly_to_string(modulus_);
}

Place Place::from_string(std::string_view text) {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string_view body = text.substr(b, e - b);
    if (body == "inf") return at_infinity();
    return finite(poly_from_string(body));
}

}  // namespace zplusi
