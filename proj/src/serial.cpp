#include "zplusi/serial.hpp"

#include <stdexcept>

#include "zplusi/errors.hpp"

namespace zplusi {

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

Json multipoly_to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [exps, coeff] : p.terms()) {
        Json t = Json::object();
        t["exps"] = exps;
        t["coeff"] = ratfunc_to_string(coeff);
        terms.push_back(std::move(t));
    }
    return terms;
}

MultiPoly multipoly_from_json(const Json& j, const std::vector<std::string>& variables,
                              std::size_t n_params) {
    if (!j.is_array()) throw ParseError("multipoly must be an array of terms");
    MultiPoly p(variables, n_params);
    for (const Json& t : j) {
        if (!t.is_object() || !t.contains("exps") || !t.contains("coeff"))
            throw ParseError("multipoly term needs exps and coeff");
        MultiPoly::Exps e = t.at("exps").get<std::vector<unsigned long>>();
        p.add_term(e, ratfunc_from_string(t.at("coeff").get<std::string>()));
    }
    return p;
}

Json system_to_json(const DiophSystem& sys) {
    Json j = Json::object();
    j["params"] = sys.params;
    j["exists"] = sys.exists;
    Json clauses = Json::array();
    for (const Clause& c : sys.clauses) {
        Json jc = Json::object();
        Json eqs = Json::array();
        for (const MultiPoly& f : c.eqs) eqs.push_back(multipoly_to_json(f));
        Json nz = Json::array();
        for (const MultiPoly& f : c.nonzero) nz.push_back(multipoly_to_json(f));
        jc["eqs"] = std::move(eqs);
        jc["nonzero"] = std::move(nz);
        clauses.push_back(std::move(jc));
    }
    j["clauses"] = std::move(clauses);
    Json basis = Json::array();
    for (const RatFunc& f : sys.coeff_basis) basis.push_back(ratfunc_to_string(f));
    j["coeff_basis"] = std::move(basis);
    return j;
}

DiophSystem system_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("system must be a JSON object");
    DiophSystem sys;
    sys.params = j.value("params", std::vector<std::string>{});
    sys.exists = j.value("exists", std::vector<std::string>{});
    std::vector<std::string> vars = system_variables(sys);
    std::size_t np = sys.params.size();
    if (!j.contains("clauses") || !j.at("clauses").is_array() || j.at("clauses").empty())
        throw ParseError("system needs a nonempty clause list");
    for (const Json& jc : j.at("clauses")) {
        Clause c;
        for (const Json& je : jc.value("eqs", Json::array()))
            c.eqs.push_back(multipoly_from_json(je, vars, np));
        for (const Json& jn : jc.value("nonzero", Json::array()))
            c.nonzero.push_back(multipoly_from_json(jn, vars, np));
        if (c.eqs.empty() && c.nonzero.empty())
            throw ParseError("empty clause");
        sys.clauses.push_back(std::move(c));
    }
    for (const Json& jb : j.value("coeff_basis", Json::array()))
        sys.coeff_basis.push_back(ratfunc_from_string(jb.get<std::string>()));
    return sys;
}

Json witness_file_to_json(const RatFunc& xi, const ZplusIWitness& wit) {
    Json j = Json::object();
    j["xi"] = ratfunc_to_string(xi);
    j["u"] = ratfunc_to_string(wit.u);
    j["v"] = ratfunc_to_string(wit.v);
    j["w"] = ratfunc_to_string(wit.w);
    j["z"] = ratfunc_to_string(wit.z);
    j["a"] = ratfunc_to_string(wit.a);
    j["b"] = ratfunc_to_string(wit.b);
    j["A"] = ratfunc_to_string(wit.A);
    j["B"] = ratfunc_to_string(wit.B);
    j["claimed_n"] = wit.claimed_n;
    return j;
}

std::pair<RatFunc, ZplusIWitness> witness_file_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("witness must be a JSON object");
    auto text = [&](const char* key) {
        if (!j.contains(key) || !j.at(key).is_string())
            throw ParseError(std::string("witness needs text field ") + key);
        return ratfunc_from_string(j.at(key).get<std::string>());
    };
    ZplusIWitness wit;
    RatFunc xi = text("xi");
    wit.u = text("u");
    wit.v = text("v");
    wit.w = text("w");
    wit.z = text("z");
    wit.a = text("a");
    wit.b = text("b");
    wit.A = text("A");
    wit.B = text("B");
    if (!j.contains("claimed_n") || !j.at("claimed_n").is_number_integer())
        throw ParseError("witness needs integer claimed_n");
    wit.claimed_n = j.at("claimed_n").get<long>();
    return {std::move(xi), std::move(wit)};
}

Json point_to_json(const CurvePoint& pt) {
    if (pt.is_infinity()) return Json("infinity");
    Json j = Json::object();
    j["X"] = ratfunc_to_string(pt.X());
    j["Y"] = ratfunc_to_string(pt.Y());
    return j;
}

CurvePoint point_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "infinity") return CurvePoint::at_infinity();
        throw ParseError("unknown point literal: " + j.get<std::string>());
    }
    if (!j.is_object() || !j.contains("X") || !j.contains("Y"))
        throw ParseError("point needs X and Y");
    return CurvePoint::affine(ratfunc_from_string(j.at("X").get<std::string>()),
                              ratfunc_from_string(j.at("Y").get<std::string>()));
}

TwistedCurve CliConfig::make_curve() const {
    if (curve_coeffs.size() != 4)
        throw ParseError("curve needs exactly 4 coefficients, descending degree");
    Poly F;
    for (std::size_t i = 0; i < 4; ++i)
        F = F + Poly::monomial(3 - i, curve_coeffs[i]);
    return curve_setup(F);
}

HolomorphyRing CliConfig::make_ring() const {
    std::vector<Place> listed;
    for (const std::string& s : ring_places) listed.push_back(Place::from_string(s));
    Place prime = Place::from_string(ring_prime);
    if (ring_mode == "cofinite")
        return HolomorphyRing(PlaceSet::cofinite(std::move(listed)), std::move(prime));
    if (ring_mode == "finite")
        return HolomorphyRing(PlaceSet::finite(std::move(listed)), std::move(prime));
    throw ParseError("ring mode must be \"cofinite\" or \"finite\"");
}

CliConfig config_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("config must be a JSON object");
    CliConfig c;
    if (j.contains("curve")) {
        c.curve_coeffs.clear();
        for (const Json& e : j.at("curve"))
            c.curve_coeffs.push_back(rat_from_string(e.get<std::string>()));
    }
    if (j.contains("ring")) {
        const Json& r = j.at("ring");
        c.ring_mode = r.value("mode", c.ring_mode);
        if (r.contains("places"))
            c.ring_places = r.at("places").get<std::vector<std::string>>();
        c.ring_prime = r.value("prime", c.ring_prime);
    }
    if (j.contains("sweep")) c.sweep_max = j.at("sweep").value("max", c.sweep_max);
    if (j.contains("output")) c.json_output = j.at("output").value("json", c.json_output);
    return c;
}

Json config_to_json(const CliConfig& c) {
    Json j = Json::object();
    Json curve = Json::array();
    for (const Rational& r : c.curve_coeffs) curve.push_back(rat_to_string(r));
    j["curve"] = std::move(curve);
    Json ring = Json::object();
    ring["mode"] = c.ring_mode;
    ring["places"] = c.ring_places;
    ring["prime"] = c.ring_prime;
    j["ring"] = std::move(ring);
    j["sweep"] = Json::object({{"max", c.sweep_max}});
    j["output"] = Json::object({{"json", c.json_output}});
    return j;
}

}  // namespace zplusi
