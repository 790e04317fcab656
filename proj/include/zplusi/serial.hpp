// JSON serialization for every externally visible object: Diophantine
// systems, witness files, curve points, and the CLI configuration. All
// emission is deterministic (insertion-ordered objects, canonical term
// ordering, exact rational text), and parse → emit reproduces input bytes
// for canonically produced documents.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "zplusi/curve.hpp"
#include "zplusi/dioph.hpp"
#include "zplusi/rings.hpp"
#include "zplusi/witness.hpp"

namespace zplusi {

using Json = nlohmann::ordered_json;

// Canonical dump: two-space indent, trailing newline.
std::string json_text(const Json& j);

Json multipoly_to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const Json& j, const std::vector<std::string>& variables,
                              std::size_t n_params);

Json system_to_json(const DiophSystem& sys);
DiophSystem system_from_json(const Json& j);

// Witness files carry the ξ being certified alongside the tuple.
Json witness_file_to_json(const RatFunc& xi, const ZplusIWitness& wit);
std::pair<RatFunc, ZplusIWitness> witness_file_from_json(const Json& j);

Json point_to_json(const CurvePoint& pt);  // {X, Y} or the literal "infinity"
CurvePoint point_from_json(const Json& j);

// CLI configuration: curve coefficients (descending), ring descriptor,
// sweep bound, output flags. Missing fields keep their defaults.
struct CliConfig {
    std::vector<Rational> curve_coeffs{Rational(1), Rational(0), Rational(1), Rational(1)};
    std::string ring_mode = "cofinite";
    std::vector<std::string> ring_places{"x"};
    std::string ring_prime = "x";
    long sweep_max = 10;
    bool json_output = false;

    TwistedCurve make_curve() const;
    HolomorphyRing make_ring() const;
};

CliConfig config_from_json(const Json& j);
Json config_to_json(const CliConfig& c);

}  // namespace zplusi
