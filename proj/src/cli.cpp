#include "zplusi/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "zplusi/curve.hpp"
#include "zplusi/denef.hpp"
#include "zplusi/dioph.hpp"
#include "zplusi/errors.hpp"
#include "zplusi/serial.hpp"
#include "zplusi/witness.hpp"

namespace zplusi {
namespace {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << text;
    if (!out) throw ParseError("write failed: " + path);
}

Json parse_json_text(const std::string& text, const std::string& what) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON in " + what);
    return j;
}

// ξ provably outside ℤ+I: a ring member whose residue at a degree-one prime
// is a non-integer rational. For such ξ no witness tuple can ever be
// accepted, so the checker reports this directly instead of the incidental
// relation that happens to break first.
bool residue_outside_z(const HolomorphyRing& ring, const RatFunc& xi) {
    if (!ring_contains(ring, xi)) return false;
    const Place& p = ring.prime();
    if (p.is_infinity() || p.degree() != 1) return false;
    Rational root = -p.modulus().coeff(0);
    return !rat_is_integer(eval_at(xi, root));
}

Json trace_to_json(const std::vector<CheckedRelation>& trace) {
    Json arr = Json::array();
    for (const auto& rel : trace) arr.push_back(Json{{"relation", rel.name}, {"passed", rel.passed}});
    return arr;
}

void print_trace(std::ostream& out, const std::vector<CheckedRelation>& trace) {
    for (const auto& rel : trace)
        out << "  " << rel.name << ": " << (rel.passed ? "pass" : "FAIL") << "\n";
}

int cmd_mul_point(const CliConfig& cfg, bool json, long n, std::ostream& out) {
    TwistedCurve E = cfg.make_curve();
    CurvePoint pt = scalar_mul(E, n, E.base_point());
    if (json) {
        Json j{{"n", n}, {"point", point_to_json(pt)}};
        out << json_text(j);
        return 0;
    }
    if (pt.is_infinity()) {
        out << "[" << n << "]P = infinity\n";
    } else {
        out << "[" << n << "]P:\n";
        out << "  X = " << ratfunc_to_string(pt.X()) << "\n";
        out << "  Y = " << ratfunc_to_string(pt.Y()) << "\n";
    }
    return 0;
}

int cmd_denef_sweep(const CliConfig& cfg, bool json, long max_n, bool strict, std::ostream& out) {
    if (max_n < 1) throw ParseError("--max must be at least 1");
    TwistedCurve E = cfg.make_curve();
    bool all_passed = true;
    Json rows = Json::array();
    std::ostringstream table;
    table << std::setw(4) << "n" << std::setw(11) << "deg_alpha" << std::setw(10) << "deg_beta"
          << std::setw(7) << "ord" << std::setw(7) << "check" << "\n";
    for (long n = 1; n <= max_n; ++n) {
        DenefTerm term = denef_term(E, n);
        VerificationReport rep = verify_order_lemma(term);
        all_passed = all_passed && rep.passed;
        long da = term.alpha_n.deg();
        long db = term.beta_n.deg();
        if (json) {
            rows.push_back(Json{{"n", n},
                                {"deg_alpha", da},
                                {"deg_beta", db},
                                {"ord", rep.ord_value.to_string()},
                                {"pass", rep.passed}});
        } else {
            table << std::setw(4) << n << std::setw(11) << da << std::setw(10) << db
                  << std::setw(7) << rep.ord_value.to_string() << std::setw(7)
                  << (rep.passed ? "pass" : "FAIL") << "\n";
        }
    }
    if (json)
        out << json_text(Json{{"max", max_n}, {"rows", rows}, {"all_passed", all_passed}});
    else
        out << table.str();
    return (strict && !all_passed) ? 1 : 0;
}

int cmd_emit_system(const CliConfig& cfg, std::ostream& out) {
    TwistedCurve E = cfg.make_curve();
    out << json_text(system_to_json(emit_membership_system(E)));
    return 0;
}

int cmd_check_witness(const CliConfig& cfg, bool json, const std::string& file,
                      const std::optional<std::string>& xi_text, std::ostream& out) {
    Json j = parse_json_text(read_text_file(file), file);
    auto [xi, wit] = witness_file_from_json(j);
    if (xi_text) xi = ratfunc_from_string(*xi_text);
    TwistedCurve E = cfg.make_curve();
    HolomorphyRing ring = cfg.make_ring();
    if (residue_outside_z(ring, xi)) {
        if (json) {
            out << json_text(Json{{"accepted", false},
                                  {"reason", "NotInZPlusI"},
                                  {"trace", Json::array()}});
        } else {
            out << "reject: NotInZPlusI (residue at the prime is not an integer)\n";
        }
        return 1;
    }
    CheckResult res = check_witness(E, ring, xi, wit);
    if (json) {
        Json doc{{"accepted", res.accepted}};
        if (res.accepted)
            doc["n"] = res.n;
        else
            doc["reason"] = reject_reason_name(*res.reason);
        doc["trace"] = trace_to_json(res.trace);
        out << json_text(doc);
    } else {
        print_trace(out, res.trace);
        if (res.accepted)
            out << "accept: integer part n = " << res.n << "\n";
        else
            out << "reject: " << reject_reason_name(*res.reason) << "\n";
    }
    return res.accepted ? 0 : 1;
}

int cmd_build_witness(const CliConfig& cfg, bool json, long n,
                      const std::optional<std::string>& xi_text,
                      const std::optional<std::string>& out_path, std::ostream& out,
                      std::ostream& err) {
    TwistedCurve E = cfg.make_curve();
    HolomorphyRing ring = cfg.make_ring();
    RatFunc xi = xi_text ? ratfunc_from_string(*xi_text) : RatFunc(Rational(n));
    ZplusIWitness wit = build_witness(E, ring, n);
    CheckResult res = check_witness(E, ring, xi, wit);
    if (!res.accepted) {
        if (json) {
            err << json_text(Json{{"accepted", false},
                                  {"reason", reject_reason_name(*res.reason)},
                                  {"trace", trace_to_json(res.trace)}});
        } else {
            print_trace(err, res.trace);
            err << "reject: witness for n = " << n << " does not certify the given xi ("
                << reject_reason_name(*res.reason) << ")\n";
        }
        return 1;
    }
    std::string doc = json_text(witness_file_to_json(xi, wit));
    out << doc;
    if (out_path) write_text_file(*out_path, doc);
    return 0;
}

int cmd_classify(const CliConfig& cfg, bool json, const std::string& xi_text, std::ostream& out) {
    RatFunc xi = ratfunc_from_string(xi_text);
    TwistedCurve E = cfg.make_curve();
    HolomorphyRing ring = cfg.make_ring();
    ClassificationResult res = classify_xi(E, ring, xi);
    const char* verdict = res.verdict == Verdict::InIdeal      ? "InIdeal"
                          : res.verdict == Verdict::IntegerPart ? "IntegerPart"
                                                                : "NotInZPlusI";
    if (json) {
        Json doc{{"verdict", verdict}};
        if (res.verdict == Verdict::IntegerPart) {
            doc["n"] = res.n;
            doc["witness"] = witness_file_to_json(xi, *res.witness);
        }
        doc["trace"] = trace_to_json(res.trace);
        out << json_text(doc);
    } else {
        print_trace(out, res.trace);
        out << "verdict: " << verdict;
        if (res.verdict == Verdict::IntegerPart) out << " n = " << res.n;
        out << "\n";
    }
    return res.verdict == Verdict::NotInZPlusI ? 1 : 0;
}

RatFunc ratfunc_from_json_text(const Json& j, const std::string& what) {
    if (!j.is_string()) throw ParseError(what + ": expected a string");
    return ratfunc_from_string(j.get<std::string>());
}

int cmd_reduce(const CliConfig& cfg, const std::string& mode, const std::string& file,
               const std::optional<std::string>& algebra_path, bool ring_semantics,
               std::ostream& out) {
    Json j = parse_json_text(read_text_file(file), file);
    DiophSystem result;
    if (mode == "single-eq") {
        result = to_single_equation(system_from_json(j), !ring_semantics);
    } else if (mode == "model-criterion") {
        // Input: an integer polynomial system {"params": [...], "equations": [...]}
        // with optional {"generators": [...]} for the ideal (default: the prime
        // element x).
        if (!j.is_object() || !j.contains("params") || !j.contains("equations"))
            throw ParseError("model-criterion input needs \"params\" and \"equations\"");
        std::vector<std::string> params = j["params"].get<std::vector<std::string>>();
        std::vector<MultiPoly> eqs;
        for (const auto& je : j["equations"])
            eqs.push_back(multipoly_from_json(je, params, params.size()));
        std::vector<RatFunc> gens;
        if (j.contains("generators"))
            for (const auto& jg : j["generators"]) gens.push_back(ratfunc_from_json_text(jg, "generators"));
        else
            gens.push_back(RatFunc::x());
        TwistedCurve E = cfg.make_curve();
        result = model_criterion_transform(eqs, emit_membership_system(E), gens);
    } else {  // weil
        if (!algebra_path) throw ParseError("--algebra is required for mode weil");
        Json ja = parse_json_text(read_text_file(*algebra_path), *algebra_path);
        if (!ja.is_object() || !ja.contains("table") || !ja.contains("one"))
            throw ParseError("algebra file needs \"table\" and \"one\"");
        std::vector<std::vector<std::vector<RatFunc>>> table;
        for (const auto& ji : ja["table"]) {
            std::vector<std::vector<RatFunc>> row_i;
            for (const auto& jk : ji) {
                std::vector<RatFunc> row_j;
                for (const auto& jc : jk) row_j.push_back(ratfunc_from_json_text(jc, "table"));
                row_i.push_back(std::move(row_j));
            }
            table.push_back(std::move(row_i));
        }
        std::vector<RatFunc> one;
        for (const auto& jc : ja["one"]) one.push_back(ratfunc_from_json_text(jc, "one"));
        result = weil_restriction(system_from_json(j), table, one);
    }
    out << json_text(system_to_json(result));
    return 0;
}

int cmd_recognize(const CliConfig& cfg, bool json, const std::string& x_text,
                  const std::string& y_text, std::ostream& out, std::ostream& err) {
    RatFunc X = ratfunc_from_string(x_text);
    RatFunc Y = ratfunc_from_string(y_text);
    TwistedCurve E = cfg.make_curve();
    try {
        long n = recognize_multiple(E, CurvePoint::affine(X, Y));
        if (json)
            out << json_text(Json{{"recognized", true}, {"n", n}});
        else
            out << "n = " << n << "\n";
        return 0;
    } catch (const NotOnCurve&) {
        if (json)
            out << json_text(Json{{"recognized", false}, {"reason", "NotOnCurve"}});
        else
            err << "reject: the point is not on the curve\n";
        return 1;
    } catch (const NotAMultiple&) {
        if (json)
            out << json_text(Json{{"recognized", false}, {"reason", "NotAMultiple"}});
        else
            err << "reject: the point is not a multiple of the base point\n";
        return 1;
    }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic for the ring-membership construction over Q(x)"};
    app.name("zplusi");
    std::string config_path;
    bool json_flag = false;
    long seed = 0;  // reserved for reproducibility plumbing; commands are deterministic
    app.add_option("--config", config_path, "JSON configuration file");
    app.add_flag("--json", json_flag, "emit JSON instead of human-readable text");
    app.add_option("--seed", seed, "seed recorded for reproducibility");
    app.require_subcommand(1);

    auto* mul = app.add_subcommand("mul-point", "compute [n]P on the configured curve");
    long mul_n = 0;
    mul->add_option("--n", mul_n, "multiple to compute")->required();

    auto* sweep = app.add_subcommand("denef-sweep", "tabulate the sequence for n = 1..max");
    long sweep_max = -1;
    bool sweep_verify = false;
    sweep->add_option("--max", sweep_max, "largest index (default from config)");
    sweep->add_flag("--verify", sweep_verify, "exit 1 unless every row verifies");

    auto* emit = app.add_subcommand("emit-system", "emit the membership system as JSON");

    auto* check = app.add_subcommand("check-witness", "verify a witness file");
    std::string check_file;
    std::string check_xi;
    check->add_option("--file", check_file, "witness JSON file")->required();
    auto* check_xi_opt = check->add_option("--xi", check_xi, "override the xi stored in the file");

    auto* build = app.add_subcommand("build-witness", "build the witness for integer n");
    long build_n = 0;
    std::string build_xi;
    std::string build_out;
    build->add_option("--n", build_n, "integer to witness")->required();
    auto* build_xi_opt = build->add_option("--xi", build_xi, "certify this xi (default: n itself)");
    auto* build_out_opt = build->add_option("--out", build_out, "also write the witness here");

    auto* classify = app.add_subcommand("classify", "decide where xi sits relative to Z+I");
    std::string classify_xi;
    classify->add_option("--xi", classify_xi, "element of the ring")->required();

    auto* reduce = app.add_subcommand("reduce", "rewrite a system (single-eq, model-criterion, weil)");
    std::string reduce_mode;
    std::string reduce_file;
    std::string reduce_algebra;
    bool reduce_ring = false;
    reduce->add_option("--mode", reduce_mode, "reduction to apply")
        ->required()
        ->check(CLI::IsMember({"single-eq", "model-criterion", "weil"}));
    reduce->add_option("--file", reduce_file, "input JSON file")->required();
    auto* reduce_alg_opt = reduce->add_option("--algebra", reduce_algebra, "algebra JSON (weil mode)");
    reduce->add_flag("--ring-semantics", reduce_ring,
                     "refuse sum-of-squares collapsing of nonzeroness constraints");

    auto* recog = app.add_subcommand("recognize", "identify an affine point as [n]P");
    std::string recog_x;
    std::string recog_y;
    recog->add_option("--x", recog_x, "X coordinate")->required();
    recog->add_option("--y", recog_y, "Y coordinate")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        // Help requests exit 0; anything else is malformed input.
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        CliConfig cfg;
        if (!config_path.empty())
            cfg = config_from_json(parse_json_text(read_text_file(config_path), config_path));
        bool json = json_flag || cfg.json_output;

        if (app.got_subcommand(mul)) return cmd_mul_point(cfg, json, mul_n, out);
        if (app.got_subcommand(sweep)) {
            long max_n = sweep->count("--max") ? sweep_max : cfg.sweep_max;
            return cmd_denef_sweep(cfg, json, max_n, sweep_verify, out);
        }
        if (app.got_subcommand(emit)) return cmd_emit_system(cfg, out);
        if (app.got_subcommand(check)) {
            std::optional<std::string> xi;
            if (check_xi_opt->count()) xi = check_xi;
            return cmd_check_witness(cfg, json, check_file, xi, out);
        }
        if (app.got_subcommand(build)) {
            std::optional<std::string> xi, path;
            if (build_xi_opt->count()) xi = build_xi;
            if (build_out_opt->count()) path = build_out;
            return cmd_build_witness(cfg, json, build_n, xi, path, out, err);
        }
        if (app.got_subcommand(classify)) return cmd_classify(cfg, json, classify_xi, out);
        if (app.got_subcommand(reduce)) {
            std::optional<std::string> alg;
            if (reduce_alg_opt->count()) alg = reduce_algebra;
            return cmd_reduce(cfg, reduce_mode, reduce_file, alg, reduce_ring, out);
        }
        if (app.got_subcommand(recog)) return cmd_recognize(cfg, json, recog_x, recog_y, out, err);
        err << "error: no subcommand selected\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ArityMismatch& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const EmptyGenerators& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadAlgebra& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ZeroN& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedRing& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotCollapsible& e) {
        err << "reject: " << e.what() << "\n";
        return 1;
    } catch (const NotInZPlusI& e) {
        err << "reject: " << e.what() << "\n";
        return 1;
    } catch (const NotInRing& e) {
        err << "reject: " << e.what() << "\n";
        return 1;
    } catch (const PoleAtPrime& e) {
        err << "reject: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace zplusi
