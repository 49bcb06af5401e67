#include "hensel/job.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hensel/lifting.hpp"
#include "hensel/oracle.hpp"
#include "hensel/textio.hpp"

namespace hensel {

using Json = nlohmann::ordered_json;

namespace {

const char* subcommand_name(Subcommand s) {
    switch (s) {
        case Subcommand::Lift: return "lift";
        case Subcommand::Root: return "root";
        case Subcommand::Commute: return "commute";
        case Subcommand::Decompose: return "decompose";
        case Subcommand::Probe: return "probe";
        case Subcommand::Eval: return "eval";
    }
    return "?";
}

std::optional<Subcommand> subcommand_from(const std::string& name) {
    if (name == "lift") return Subcommand::Lift;
    if (name == "root") return Subcommand::Root;
    if (name == "commute") return Subcommand::Commute;
    if (name == "decompose") return Subcommand::Decompose;
    if (name == "probe") return Subcommand::Probe;
    if (name == "eval") return Subcommand::Eval;
    return std::nullopt;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

void merge_input_file(JobSpec& spec, const std::string& path, bool subcommand_set) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open input file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw UsageError("malformed input file '" + path + "': " + e.what());
    }
    auto str = [&](const char* key) -> std::optional<std::string> {
        if (j.contains(key) && j[key].is_string())
            return j[key].get<std::string>();
        return std::nullopt;
    };
    if (!subcommand_set) {
        if (auto s = str("subcommand")) {
            auto sub = subcommand_from(*s);
            if (!sub)
                throw UsageError("unknown subcommand '" + *s + "' in input file");
            spec.subcommand = *sub;
        } else {
            throw UsageError("input file must name a subcommand when none is given on the command line");
        }
    }
    if (auto s = str("ring")) spec.ring = *s;
    if (auto s = str("poly")) spec.poly = *s;
    if (auto s = str("f1")) spec.f1 = *s;
    if (auto s = str("f2")) spec.f2 = *s;
    if (auto s = str("at")) spec.at = *s;
    if (auto s = str("p")) spec.p = *s;
    if (auto s = str("q")) spec.q = *s;
    if (j.contains("blocks") && j["blocks"].is_array())
        for (const auto& b : j["blocks"]) spec.blocks.push_back(b.get<std::string>());
    if (j.contains("samples") && j["samples"].is_array())
        for (const auto& b : j["samples"]) spec.samples.push_back(b.get<std::string>());
    if (j.contains("precision") && j["precision"].is_number_integer())
        spec.precision = j["precision"].get<int>();
    if (j.contains("verify") && j["verify"].is_boolean())
        spec.verify = j["verify"].get<bool>();
    if (auto s = str("output")) {
        if (*s == "text") spec.output = OutputMode::Text;
        else if (*s == "structured") spec.output = OutputMode::Structured;
        else throw UsageError("unknown output mode '" + *s + "' in input file");
    }
}

} // namespace

std::string usage_text() {
    return "usage: hensel <lift|root|commute|decompose|probe|eval> --ring SPEC [options]\n"
           "  lift       --poly P --f1 F --f2 F      lift a residue factorization\n"
           "  root       --poly P --at R             lift a simple residue root\n"
           "  commute    --p P --q Q                 swap factors: p1*p = q1*q\n"
           "  decompose  --poly P [--blocks B,...]   factor along prime-power blocks\n"
           "  probe      --samples A,...             almost-commutativity probe\n"
           "  eval       --poly P --at S             right-evaluate at a series\n"
           "options: --precision N, --output text|structured, --verify, --input FILE\n";
}

JobSpec parse_job(const std::vector<std::string>& argv) {
    if (argv.empty())
        throw UsageError("missing subcommand (expected lift, root, commute, decompose, probe or eval)");

    JobSpec spec;
    bool subcommand_set = false;
    std::optional<std::string> input_file;
    size_t i = 0;

    if (!argv[0].empty() && argv[0][0] != '-') {
        auto sub = subcommand_from(argv[0]);
        if (!sub)
            throw UsageError("unknown subcommand '" + argv[0] + "' at position 1");
        spec.subcommand = *sub;
        subcommand_set = true;
        i = 1;
    }

    auto need_value = [&](const std::string& flag, size_t pos) -> std::string {
        if (i + 1 >= argv.size())
            throw UsageError("missing value for '" + flag + "' at position " + std::to_string(pos));
        return argv[++i];
    };

    for (; i < argv.size(); ++i) {
        const std::string& tok = argv[i];
        const size_t pos = i + 1; // 1-based for diagnostics
        if (tok == "--ring") {
            spec.ring = need_value(tok, pos);
        } else if (tok == "--poly") {
            spec.poly = need_value(tok, pos);
        } else if (tok == "--f1") {
            spec.f1 = need_value(tok, pos);
        } else if (tok == "--f2") {
            spec.f2 = need_value(tok, pos);
        } else if (tok == "--blocks") {
            for (auto& b : split_commas(need_value(tok, pos)))
                spec.blocks.push_back(b);
        } else if (tok == "--at") {
            spec.at = need_value(tok, pos);
        } else if (tok == "--samples") {
            for (auto& s : split_commas(need_value(tok, pos)))
                spec.samples.push_back(s);
        } else if (tok == "--p") {
            spec.p = need_value(tok, pos);
        } else if (tok == "--q") {
            spec.q = need_value(tok, pos);
        } else if (tok == "--precision") {
            const std::string v = need_value(tok, pos);
            try {
                spec.precision = std::stoi(v);
            } catch (const std::exception&) {
                throw UsageError("invalid precision '" + v + "' at position " + std::to_string(pos + 1));
            }
            if (*spec.precision < 1)
                throw UsageError("precision must be >= 1, got '" + v + "' at position " +
                                 std::to_string(pos + 1));
        } else if (tok == "--output") {
            const std::string v = need_value(tok, pos);
            if (v == "text") spec.output = OutputMode::Text;
            else if (v == "structured") spec.output = OutputMode::Structured;
            else throw UsageError("unknown output mode '" + v + "' at position " + std::to_string(pos + 1));
        } else if (tok == "--verify") {
            spec.verify = true;
        } else if (tok == "--input") {
            input_file = need_value(tok, pos);
        } else {
            throw UsageError("unknown option '" + tok + "' at position " + std::to_string(pos));
        }
    }

    if (input_file) {
        // command-line flags win over file values
        JobSpec from_file;
        merge_input_file(from_file, *input_file, subcommand_set);
        if (subcommand_set) from_file.subcommand = spec.subcommand;
        if (!spec.ring.empty()) from_file.ring = spec.ring;
        if (spec.poly) from_file.poly = spec.poly;
        if (spec.f1) from_file.f1 = spec.f1;
        if (spec.f2) from_file.f2 = spec.f2;
        if (!spec.blocks.empty()) from_file.blocks = spec.blocks;
        if (spec.at) from_file.at = spec.at;
        if (!spec.samples.empty()) from_file.samples = spec.samples;
        if (spec.p) from_file.p = spec.p;
        if (spec.q) from_file.q = spec.q;
        if (spec.precision) from_file.precision = spec.precision;
        if (spec.verify) from_file.verify = true;
        if (spec.output != OutputMode::Text) from_file.output = spec.output;
        spec = from_file;
    } else if (!subcommand_set) {
        throw UsageError("missing subcommand (expected lift, root, commute, decompose, probe or eval)");
    }

    auto require = [&](bool ok, const std::string& what) {
        if (!ok)
            throw UsageError("missing required option " + what + " for subcommand '" +
                             subcommand_name(spec.subcommand) + "'");
    };
    require(!spec.ring.empty(), "'--ring'");
    switch (spec.subcommand) {
        case Subcommand::Lift:
            require(spec.poly.has_value(), "'--poly'");
            require(spec.f1.has_value(), "'--f1'");
            require(spec.f2.has_value(), "'--f2'");
            break;
        case Subcommand::Root:
        case Subcommand::Eval:
            require(spec.poly.has_value(), "'--poly'");
            require(spec.at.has_value(), "'--at'");
            break;
        case Subcommand::Commute:
            require(spec.p.has_value(), "'--p'");
            require(spec.q.has_value(), "'--q'");
            break;
        case Subcommand::Decompose:
            require(spec.poly.has_value(), "'--poly'");
            break;
        case Subcommand::Probe:
            require(!spec.samples.empty(), "'--samples'");
            break;
    }
    return spec;
}

// ---------------------------------------------------------------------------
// run_job

namespace {

Json poly_json(const LocalPoly& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coefficients()) {
        Json series = Json::array();
        for (const auto& v : c.coefficients())
            series.push_back(to_string(v));
        coeffs.push_back(series);
    }
    return Json{{"text", to_string(f)}, {"coefficients", coeffs}};
}

Json series_json(const LocalElement& a) {
    Json series = Json::array();
    for (const auto& v : a.coefficients())
        series.push_back(to_string(v));
    return Json{{"text", to_string(a)}, {"coefficients", series}};
}

Json residue_poly_json(const ResiduePoly& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coefficients())
        coeffs.push_back(to_string(c));
    return Json{{"text", to_string(f)}, {"coefficients", coeffs}};
}

Json ring_json(const RingCtxPtr& ctx) {
    const char* kind = ctx->kind() == RingKind::CommutativeSeries ? "series"
                       : ctx->kind() == RingKind::Volterra        ? "volterra"
                                                                  : "twisted";
    return Json{{"kind", kind},
                {"field", field_spec_string(ctx->field())},
                {"precision", ctx->precision()},
                {"generator", ctx->generator_name()},
                {"spec", ring_spec_string(ctx)}};
}

const char* obstruction_kind_name(ObstructionKind k) {
    switch (k) {
        case ObstructionKind::ResidueNotCoprime: return "residue_not_coprime";
        case ObstructionKind::StepVerificationFailed: return "step_verification_failed";
        case ObstructionKind::DegreeViolation: return "degree_violation";
    }
    return "?";
}

Json obstruction_json(const ObstructionReport& o) {
    return Json{{"stage", o.stage},
                {"classification", obstruction_kind_name(o.classification)},
                {"residual_leading_form", residue_poly_json(o.residual_leading_form)},
                {"witness", poly_json(o.witness)}};
}

Json input_json(const JobSpec& spec) {
    Json j;
    j["subcommand"] = subcommand_name(spec.subcommand);
    j["ring"] = spec.ring;
    j["poly"] = spec.poly ? Json(*spec.poly) : Json(nullptr);
    j["f1"] = spec.f1 ? Json(*spec.f1) : Json(nullptr);
    j["f2"] = spec.f2 ? Json(*spec.f2) : Json(nullptr);
    j["blocks"] = spec.blocks;
    j["at"] = spec.at ? Json(*spec.at) : Json(nullptr);
    j["samples"] = spec.samples;
    j["p"] = spec.p ? Json(*spec.p) : Json(nullptr);
    j["q"] = spec.q ? Json(*spec.q) : Json(nullptr);
    j["precision"] = spec.precision ? Json(*spec.precision) : Json(nullptr);
    j["verify"] = spec.verify;
    return j;
}

struct Verification {
    Json checks = Json::array();
    bool all_pass = true;

    void add(const std::string& name, bool pass) {
        checks.push_back(Json{{"name", name}, {"pass", pass}});
        all_pass = all_pass && pass;
    }
    Json to_json() const { return Json{{"checks", checks}, {"all_pass", all_pass}}; }
};

std::string obstruction_text(const ObstructionReport& o, const RingCtxPtr& ctx) {
    std::ostringstream out;
    out << "status: obstructed\n";
    out << "ring: " << ring_spec_string(ctx) << "\n";
    out << "stage: " << o.stage << "\n";
    out << "classification: " << obstruction_kind_name(o.classification) << "\n";
    out << "residual leading form: " << to_string(o.residual_leading_form) << "\n";
    out << "witness (f - F1*F2): " << pretty_string(o.witness) << "\n";
    return out.str();
}

// f = x^e - c detection for the power-check oracle
std::optional<std::pair<int, LocalElement>> power_shape(const LocalPoly& f) {
    const int n = f.degree();
    if (n < 1 || !f.is_monic())
        return std::nullopt;
    for (int k = 1; k < n; ++k)
        if (!f.coefficient(k).is_zero())
            return std::nullopt;
    return std::make_pair(n, -f.coefficient(0));
}

JobResult finish(const JobSpec& spec, const RingCtxPtr& ctx, int exit_code, Json& doc,
                 const std::string& text) {
    if (spec.output == OutputMode::Structured) {
        doc["ring"] = ctx ? ring_json(ctx) : Json(nullptr);
        return {exit_code, doc.dump(2) + "\n", ""};
    }
    return {exit_code, text, ""};
}

} // namespace

JobResult run_job(const JobSpec& spec) {
    Json doc;
    doc["status"] = "ok";
    doc["ring"] = nullptr;
    doc["input"] = input_json(spec);
    doc["result"] = nullptr;
    doc["obstruction"] = nullptr;
    doc["verification"] = nullptr;
    doc["error"] = nullptr;

    RingCtxPtr ctx;
    try {
        ctx = parse_ring_spec(spec.ring, spec.precision);
        std::ostringstream text;
        Verification verify;

        switch (spec.subcommand) {
            case Subcommand::Lift: {
                LocalPoly f = parse_local_poly(ctx, *spec.poly);
                ResiduePoly f1 = parse_residue_poly(ctx->field(), *spec.f1);
                ResiduePoly f2 = parse_residue_poly(ctx->field(), *spec.f2);
                LiftOutcome outcome = hensel_lift(f, f1, f2);
                if (!outcome.lifted()) {
                    doc["status"] = "obstructed";
                    doc["obstruction"] = obstruction_json(*outcome.obstruction);
                    return finish(spec, ctx, 2, doc, obstruction_text(*outcome.obstruction, ctx));
                }
                const auto& [F1, F2] = *outcome.factors;
                doc["result"] = Json{{"F1", poly_json(F1)}, {"F2", poly_json(F2)},
                                     {"stages_completed", outcome.stages_completed}};
                text << "status: lifted\n";
                text << "ring: " << ring_spec_string(ctx) << "  (generator g = "
                     << ctx->generator_name() << ")\n";
                text << "F1: " << pretty_string(F1) << "\n";
                text << "F2: " << pretty_string(F2) << "\n";
                if (spec.verify) {
                    verify.add("factors multiply back to f",
                               coeff_valuation_floor(f - F1 * F2) >= ctx->precision());
                    verify.add("reductions match the residue factors",
                               reduce_poly(F1) == f1 && reduce_poly(F2) == f2);
                    bool unique = true;
                    for (std::uint64_t seed = 1; seed <= 3; ++seed)
                        unique = unique && uniqueness_check(f, f1, f2, seed);
                    verify.add("perturbed relift reproduces the factors", unique);
                    if (ctx->kind() == RingKind::CommutativeSeries &&
                        ctx->field()->kind() == FieldKind::PrimeField &&
                        ctx->precision() <= SearchSpace::max_precision &&
                        f.degree() <= SearchSpace::max_degree) {
                        auto all = exhaustive_factor_search(f, f1.degree(), f2.degree());
                        int matching = 0;
                        bool found = false;
                        for (const auto& [a, b] : all) {
                            if (reduce_poly(a) == f1 && reduce_poly(b) == f2) {
                                ++matching;
                                found = found || (a == F1 && b == F2);
                            }
                        }
                        verify.add("exhaustive search finds exactly this pair",
                                   matching == 1 && found);
                    }
                }
                break;
            }
            case Subcommand::Root: {
                LocalPoly f = parse_local_poly(ctx, *spec.poly);
                FieldElement r0 = parse_field_literal(ctx->field(), *spec.at);
                RootResult res = lift_root(f, r0);
                if (auto* obstruction = std::get_if<ObstructionReport>(&res)) {
                    doc["status"] = "obstructed";
                    doc["obstruction"] = obstruction_json(*obstruction);
                    return finish(spec, ctx, 2, doc, obstruction_text(*obstruction, ctx));
                }
                const LocalElement& a = std::get<LocalElement>(res);
                doc["result"] = Json{{"root", series_json(a)}};
                text << "status: root lifted\n";
                text << "ring: " << ring_spec_string(ctx) << "  (generator g = "
                     << ctx->generator_name() << ")\n";
                text << "root: " << pretty_string(a) << "\n";
                if (spec.verify) {
                    verify.add("right evaluation vanishes", right_evaluate(f, a).is_zero());
                    verify.add("root reduces to the residue root", a.residue() == r0);
                    if (auto shape = power_shape(f))
                        verify.add("power check a^" + std::to_string(shape->first) + " = c",
                                   series_power_check(a, shape->second, shape->first));
                }
                break;
            }
            case Subcommand::Commute: {
                LocalPoly p = parse_local_poly(ctx, *spec.p);
                LocalPoly q = parse_local_poly(ctx, *spec.q);
                CommuteResult res = commute_factors(p, q);
                if (auto* obstruction = std::get_if<ObstructionReport>(&res)) {
                    doc["status"] = "obstructed";
                    doc["obstruction"] = obstruction_json(*obstruction);
                    return finish(spec, ctx, 2, doc, obstruction_text(*obstruction, ctx));
                }
                const auto& [p1, q1] = std::get<std::pair<LocalPoly, LocalPoly>>(res);
                doc["result"] = Json{{"p1", poly_json(p1)}, {"q1", poly_json(q1)}};
                text << "status: commuted\n";
                text << "ring: " << ring_spec_string(ctx) << "  (generator g = "
                     << ctx->generator_name() << ")\n";
                text << "p1: " << pretty_string(p1) << "\n";
                text << "q1: " << pretty_string(q1) << "\n";
                if (spec.verify) {
                    verify.add("p1*p = q1*q", p1 * p == q1 * q);
                    verify.add("degrees swap", p1.degree() == q.degree() && q1.degree() == p.degree());
                    verify.add("reductions swap",
                               reduce_poly(p1) == reduce_poly(q) && reduce_poly(q1) == reduce_poly(p));
                }
                break;
            }
            case Subcommand::Decompose: {
                LocalPoly f = parse_local_poly(ctx, *spec.poly);
                std::vector<ResiduePoly> blocks;
                if (!spec.blocks.empty()) {
                    for (const auto& b : spec.blocks)
                        blocks.push_back(parse_residue_poly(ctx->field(), b));
                } else {
                    for (const auto& pp : factor_primepowers(reduce_poly(f)))
                        blocks.push_back(pp.block());
                }
                DecompositionResult res = primary_decomposition(f, blocks);
                if (auto* obstruction = std::get_if<ObstructionReport>(&res)) {
                    doc["status"] = "obstructed";
                    doc["obstruction"] = obstruction_json(*obstruction);
                    return finish(spec, ctx, 2, doc, obstruction_text(*obstruction, ctx));
                }
                const auto& factors = std::get<std::vector<LocalPoly>>(res);
                Json jfactors = Json::array();
                for (const auto& g : factors)
                    jfactors.push_back(poly_json(g));
                Json jblocks = Json::array();
                for (const auto& b : blocks)
                    jblocks.push_back(residue_poly_json(b));
                doc["result"] = Json{{"factors", jfactors}, {"blocks", jblocks}};
                text << "status: decomposed\n";
                text << "ring: " << ring_spec_string(ctx) << "  (generator g = "
                     << ctx->generator_name() << ")\n";
                for (size_t k = 0; k < factors.size(); ++k)
                    text << "p" << (k + 1) << ": " << pretty_string(factors[k])
                         << "   (block " << to_string(blocks[k]) << ")\n";
                if (spec.verify) {
                    LocalPoly product = LocalPoly::one(ctx);
                    for (const auto& g : factors)
                        product = product * g;
                    verify.add("factors multiply back to f",
                               coeff_valuation_floor(f - product) >= ctx->precision());
                    bool reductions = true;
                    for (size_t k = 0; k < factors.size(); ++k)
                        reductions = reductions && reduce_poly(factors[k]) == blocks[k];
                    verify.add("factor reductions equal the blocks", reductions);
                }
                break;
            }
            case Subcommand::Probe: {
                std::vector<FieldElement> samples;
                for (const auto& s : spec.samples)
                    samples.push_back(parse_field_literal(ctx->field(), s));
                ProbeResult res = is_almost_commutative_probe(ctx, samples);
                Json jr;
                jr["almost_commutative"] = res.almost_commutative;
                jr["witness_sample"] =
                    res.witness_sample ? Json(to_string(*res.witness_sample)) : Json(nullptr);
                jr["witness_commutator"] =
                    res.witness_commutator ? series_json(*res.witness_commutator) : Json(nullptr);
                jr["witness_valuation"] =
                    res.witness_commutator ? Json(res.witness_commutator->valuation()) : Json(nullptr);
                doc["result"] = jr;
                text << "status: ok\n";
                text << "ring: " << ring_spec_string(ctx) << "  (generator g = "
                     << ctx->generator_name() << ")\n";
                text << "almost commutative: " << (res.almost_commutative ? "yes" : "no") << "\n";
                if (!res.almost_commutative) {
                    text << "witness sample: " << to_string(*res.witness_sample) << "\n";
                    text << "witness commutator g*a - a*g: "
                         << pretty_string(*res.witness_commutator) << "   [valuation "
                         << res.witness_commutator->valuation() << "]\n";
                }
                break;
            }
            case Subcommand::Eval: {
                LocalPoly f = parse_local_poly(ctx, *spec.poly);
                LocalElement a = parse_local_element(ctx, *spec.at);
                LocalElement value = right_evaluate(f, a);
                doc["result"] = Json{{"value", series_json(value)}};
                text << "status: ok\n";
                text << "ring: " << ring_spec_string(ctx) << "  (generator g = "
                     << ctx->generator_name() << ")\n";
                text << "value: " << pretty_string(value) << "\n";
                if (spec.verify) {
                    // independent route: the right-division remainder
                    verify.add("right division remainder agrees",
                               right_divmod(f, a).second == value);
                }
                break;
            }
        }

        if (spec.verify) {
            doc["verification"] = verify.to_json();
            text << "verification: " << (verify.all_pass ? "all checks passed" : "CHECKS FAILED")
                 << " (" << verify.checks.size() << ")\n";
        }
        return finish(spec, ctx, 0, doc, text.str());
    } catch (const Error& e) {
        doc["status"] = "error";
        doc["error"] = e.what();
        JobResult r = finish(spec, ctx, 1, doc, "");
        r.diagnostics = std::string("error: ") + e.what() + "\n";
        return r;
    } catch (const std::exception& e) {
        doc["status"] = "error";
        doc["error"] = e.what();
        JobResult r = finish(spec, ctx, 1, doc, "");
        r.diagnostics = std::string("internal error: ") + e.what() + "\n";
        return r;
    }
}

} // namespace hensel
