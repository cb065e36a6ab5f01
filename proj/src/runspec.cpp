#include "asailab/runspec.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "asailab/oracle.hpp"

namespace asailab {

namespace {

[[noreturn]] void spec_fail(const std::string& where, const std::string& msg) {
    throw SpecError(where + ": " + msg);
}

// Deterministic sampling: rejection on the raw engine, never
// std::uniform_int_distribution (its mapping is implementation-defined).
struct DetRng {
    std::mt19937_64 eng;
    explicit DetRng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw Error("DetRng::below(0)");
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
        std::uint64_t x;
        do { x = eng(); } while (x >= limit);
        return x % n;
    }
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

FieldElement parse_element(const Json& j, const FieldPtr& E, const std::string& where) {
    if (j.is_number_integer()) return E->from_integer(j.get<long long>());
    if (j.is_string()) return E->from_rational(parse_rat(j.get<std::string>()));
    if (j.is_object() && j.contains("class")) {
        // a square-class representative of the base field, embedded
        std::string cls = j.at("class").get<std::string>();
        FieldPtr root = E;
        while (!root->is_base()) root = root->parent();
        std::vector<FieldElement> base_reps = root->square_class_reps();
        std::size_t idx;
        if (cls == "u") idx = 1;
        else if (cls == "p") idx = 2;
        else if (cls == "up") idx = 3;
        else { spec_fail(where, "unknown square class '" + cls + "' (use u, p, up)"); }
        return E->embed(base_reps[idx]);
    }
    if (j.is_array()) {
        if (E->is_base()) spec_fail(where, "array element literal over the base field");
        if (j.size() != 2) spec_fail(where, "element literal arrays have exactly two entries");
        FieldElement lo = parse_element(j.at(0), E->parent(), where);
        FieldElement hi = parse_element(j.at(1), E->parent(), where);
        return E->embed(lo) + E->embed(hi) * E->generator();
    }
    spec_fail(where, "unrecognized element literal");
}

ExactValue parse_exact_value(const Json& j, const std::string& where) {
    if (!j.is_object()) spec_fail(where, "expected {\"zeta\": ..., \"qexp\": ...}");
    Rat z = j.contains("zeta") ? parse_rat(j.at("zeta").get<std::string>()) : Rat(0);
    Rat q = j.contains("qexp") ? parse_rat(j.at("qexp").get<std::string>()) : Rat(0);
    return {z, q};
}

}  // namespace

RunSpec parse_runspec(const Json& doc) {
    RunSpec spec;
    if (!doc.is_object()) throw SpecError("run spec must be a JSON object");
    spec.prime = doc.value("prime", 3);
    spec.precision = doc.value("precision", 8);
    spec.base = LocalField::make_base(spec.prime, spec.precision, "F");
    spec.fields["F"] = spec.base;

    if (doc.contains("fields")) {
        for (const auto& [name, def] : doc.at("fields").items()) {
            std::string where = "fields." + name;
            if (spec.fields.count(name)) spec_fail(where, "duplicate field name");
            if (!def.is_object() || !def.contains("base") || !def.contains("adjoin"))
                spec_fail(where, "field definitions need \"base\" and \"adjoin\"");
            auto bit = spec.fields.find(def.at("base").get<std::string>());
            if (bit == spec.fields.end())
                spec_fail(where, "unknown base field '" + def.at("base").get<std::string>() +
                                     "' (define fields before use)");
            const FieldPtr& base = bit->second;
            const Json& adj = def.at("adjoin");
            FieldElement d;
            if (adj.is_string() && adj.get<std::string>() == "nonsquare-unit")
                d = base->canonical_nonsquare_unit();
            else if (adj.is_string() && adj.get<std::string>() == "uniformizer")
                d = base->uniformizer();
            else
                d = parse_element(adj, base, where + ".adjoin");
            try {
                spec.fields[name] = LocalField::make_extension(base, d, name);
            } catch (const Error& e) {
                spec_fail(where, e.what());
            }
        }
    }

    if (doc.contains("characters")) {
        for (const auto& [name, def] : doc.at("characters").items()) {
            std::string where = "characters." + name;
            if (!def.is_object() || !def.contains("field"))
                spec_fail(where, "character definitions need \"field\"");
            auto fit = spec.fields.find(def.at("field").get<std::string>());
            if (fit == spec.fields.end()) spec_fail(where, "unknown field");
            int level = def.value("level", 0);
            ExactValue unif = def.contains("uniformizer_value")
                                  ? parse_exact_value(def.at("uniformizer_value"), where)
                                  : ExactValue::one();
            std::vector<ExactValue> images;
            if (def.contains("generator_values"))
                for (const auto& g : def.at("generator_values"))
                    images.push_back(ExactValue::root_of_unity(parse_rat(g.get<std::string>())));
            try {
                spec.characters.emplace(
                    name, SmoothChar::from_generator_values(fit->second, level, images, unif));
            } catch (const Error& e) {
                spec_fail(where, e.what());
            }
        }
    }

    if (doc.contains("representations")) {
        for (const auto& [name, def] : doc.at("representations").items()) {
            std::string where = "representations." + name;
            if (!def.is_object() || !def.contains("kind")) spec_fail(where, "missing \"kind\"");
            std::string kind = def.at("kind").get<std::string>();
            auto chr = [&](const char* key) -> const SmoothChar& {
                auto it = spec.characters.find(def.at(key).get<std::string>());
                if (it == spec.characters.end())
                    spec_fail(where, std::string("unknown character in \"") + key + "\"");
                return it->second;
            };
            try {
                if (kind == "dihedral") {
                    auto fit = spec.fields.find(def.at("tower").get<std::string>());
                    if (fit == spec.fields.end()) spec_fail(where, "unknown tower field");
                    spec.representations.emplace(name, GL2Rep::dihedral(fit->second, chr("omega")));
                } else if (kind == "steinberg") {
                    spec.representations.emplace(name, GL2Rep::steinberg(chr("chi")));
                } else if (kind == "principal-series") {
                    spec.representations.emplace(name,
                                                 GL2Rep::principal(chr("lambda"), chr("mu")));
                } else {
                    spec_fail(where, "unknown kind '" + kind + "'");
                }
            } catch (const Error& e) {
                spec_fail(where, e.what());
            }
        }
    }

    if (doc.contains("commands"))
        for (const auto& c : doc.at("commands")) spec.commands.push_back(c.get<std::string>());
    return spec;
}

RunSpec load_runspec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open spec file '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecError(path + ": " + e.what());  // includes the byte offset
    }
    return parse_runspec(doc);
}

// --- serialization -------------------------------------------------------------

Json json_of(const ExactValue& v) {
    return Json{{"zeta", to_string(v.zeta)}, {"qexp", to_string(v.qexp)}};
}

Json json_of(const EulerFactor& f) {
    Json roots = Json::array();
    for (const ExactValue& r : f.inverse_roots()) roots.push_back(json_of(r));
    return roots;
}

ExactValue exact_value_from_json(const Json& j) {
    return parse_exact_value(j, "exact value");
}

EulerFactor euler_factor_from_json(const Json& j) {
    if (!j.is_array()) throw SpecError("euler factor: expected an array of inverse roots");
    std::vector<ExactValue> roots;
    for (const auto& r : j) roots.push_back(exact_value_from_json(r));
    return EulerFactor(std::move(roots));
}

namespace {

Json json_of(const TwistSet& tw) {
    Json out = Json::array();
    for (const ExactValue& v : tw) out.push_back(json_of(v));
    return out;
}

Json metadata_of(const Decomposition& dec) {
    Json choices = Json::array();
    Json ambiguities = Json::array();
    if (dec.nongalois_reduction_used) {
        choices.push_back("nongalois-reduction: descent extension invariance verified");
        if (dec.nongalois_reduction_failed)
            ambiguities.push_back(
                "nongalois reduction failed: L_As = 1 relies on the base-change dichotomy");
    }
    if (dec.cyclic_choice_ambiguous)
        ambiguities.push_back("cyclic subfield tie-break: square-class-least chosen");
    return Json{{"choices", choices}, {"ambiguities", ambiguities}};
}

struct CommandContext {
    const RunSpec& spec;
    AsaiEngine engine;
    const RunOptions& opt;
    Json results = Json::array();
    std::ostringstream text;
    int failures = 0;

    CommandContext(const RunSpec& s, const RunOptions& o)
        : spec(s), engine(AsaiEngine::Options{o.unit_budget, o.degree8_budget}), opt(o) {}

    std::vector<std::pair<std::string, GL2Rep>> rep_targets() {
        std::vector<std::pair<std::string, GL2Rep>> out;
        for (const auto& [name, rep] : spec.representations)
            if (opt.target.empty() || opt.target == name) out.emplace_back(name, rep);
        if (out.empty())
            throw SpecError(opt.target.empty() ? "no representations in the spec"
                                               : "unknown representation '" + opt.target + "'");
        return out;
    }

    void emit(const std::string& object, const std::string& command, Json result, Json factors,
              Json metadata = Json{{"choices", Json::array()}, {"ambiguities", Json::array()}}) {
        results.push_back(Json{{"object", object},
                               {"command", command},
                               {"result", std::move(result)},
                               {"factors", std::move(factors)},
                               {"metadata", std::move(metadata)}});
    }
};

void cmd_classify(CommandContext& ctx) {
    bool any = false;
    for (const auto& [name, field] : ctx.spec.fields) {
        if (field->height() != 2) continue;
        if (!ctx.opt.target.empty() && ctx.opt.target != name) continue;
        any = true;
        TowerClass cls = classify_tower(field);
        ctx.emit(name, "classify", Json{{"class", to_string(cls)}}, Json::array());
        ctx.text << name << ": " << to_string(cls) << "\n";
    }
    if (!any) throw SpecError("no tower field to classify (need height-2 fields)");
}

void cmd_rep_factor(CommandContext& ctx, const std::string& command) {
    for (const auto& [name, rep] : ctx.rep_targets()) {
        if (command == "lw") {
            WDRep2 rho = langlands_parameter(rep);
            EulerFactor f = ctx.engine.lw_factor(rho);
            ctx.emit(name, command, Json{{"lw", json_of(f)}}, json_of(f),
                     metadata_of(ctx.engine.induction_decompose(rho)));
            ctx.text << name << ": L_W = " << f.str() << "\n";
        } else if (command == "las") {
            EulerFactor f = ctx.engine.las_factor(rep);
            ctx.emit(name, command, Json{{"las", json_of(f)}}, json_of(f));
            ctx.text << name << ": L_As = " << f.str() << "\n";
        } else if (command == "l1") {
            EulerFactor f = ctx.engine.l1_factor(rep);
            ctx.emit(name, command, Json{{"l1", json_of(f)}}, json_of(f));
            ctx.text << name << ": L_1 = " << f.str() << "\n";
        } else if (command == "twists") {
            TwistSet tw = ctx.engine.distinguishing_twists(rep);
            ctx.emit(name, command, Json{{"twists", json_of(tw)}}, json_of(tw));
            ctx.text << name << ": " << tw.size() << " distinguishing twist(s)\n";
        } else if (command == "distinguished") {
            bool d = ctx.engine.is_distinguished(rep);
            ctx.emit(name, command, Json{{"distinguished", d}},
                     json_of(ctx.engine.lradex_factor(rep)));
            ctx.text << name << ": " << (d ? "distinguished" : "not distinguished") << "\n";
        } else if (command == "check-egal") {
            EgalReport r = ctx.engine.check_egal(rep);
            if (!r.equal) ++ctx.failures;
            ctx.emit(name, command,
                     Json{{"equal", r.equal},
                          {"lw", json_of(r.lw)},
                          {"las", json_of(r.las)},
                          {"l1", json_of(r.l1)},
                          {"lradex", json_of(r.lradex)},
                          {"twists", json_of(r.twists)}},
                     json_of(r.las), metadata_of(r.decomposition));
            ctx.text << name << ": equal = " << (r.equal ? "true" : "false")
                     << "\n  L_W  = " << r.lw.str() << "\n  L_As = " << r.las.str() << "\n";
        }
    }
}

void cmd_verify(CommandContext& ctx) {
    const FieldPtr& F = ctx.spec.base;
    std::string what = ctx.opt.target.empty() ? "all" : ctx.opt.target;
    int level = ctx.opt.verify_level;
    std::vector<FieldElement> reps = F->square_class_reps();

    std::vector<std::pair<std::string, BiquadraticLattice>> lattices;
    for (std::size_t i = 1; i < reps.size(); ++i) {
        FieldPtr K = LocalField::make_extension(F, reps[i]);
        for (std::size_t j = 1; j < reps.size(); ++j) {
            if (j == i) continue;
            std::ostringstream id;
            id << "p" << ctx.spec.prime << ".lattice[K=" << i << ",c=" << j << "]";
            lattices.emplace_back(id.str(), biquadratic_lattice_for(K, reps[j]));
        }
    }

    if (what == "all" || what == "normbiquad") {
        for (const auto& [id, lat] : lattices) {
            bool ok = oracle::verify_normbiquad(lat, level, ctx.opt.unit_budget);
            if (!ok) ++ctx.failures;
            ctx.emit(id, "verify normbiquad", Json{{"pass", ok}, {"level", level}}, Json::array());
            ctx.text << "normbiquad " << id << ": " << (ok ? "pass" : "FAIL") << "\n";
        }
    }
    if (what == "all" || what == "ker") {
        for (const auto& [id, lat] : lattices) {
            bool ok = oracle::verify_ker_lemma(lat, level, ctx.opt.unit_budget);
            if (!ok) ++ctx.failures;
            ctx.emit(id, "verify ker", Json{{"pass", ok}, {"level", level}}, Json::array());
            ctx.text << "ker " << id << ": " << (ok ? "pass" : "FAIL") << "\n";
        }
    }
    if (what == "all" || what == "hilbert") {
        DetRng rng(ctx.opt.seed + 0x9e3779b97f4a7c15ULL);
        std::uint64_t checked = 0, disagreements = 0;
        std::vector<FieldPtr> bases = {F};
        for (std::size_t i = 1; i < reps.size(); ++i)
            bases.push_back(LocalField::make_extension(F, reps[i]));
        while (checked < static_cast<std::uint64_t>(ctx.opt.hilbert_samples)) {
            for (const FieldPtr& E : bases) {
                std::vector<FieldElement> ereps = E->square_class_reps();
                for (std::size_t j = 1; j < ereps.size(); ++j) {
                    FieldPtr Ep = LocalField::make_extension(E, ereps[j]);
                    // tame symbols are level-1 data; back off where a level-2
                    // enumeration would exceed the budget (residue degree 4)
                    int lvl = level;
                    while (lvl > 1 && Ep->unit_group_cardinality(2 * lvl - 1) > ctx.opt.unit_budget)
                        --lvl;
                    oracle::NormImage ni = oracle::norm_image_enum(Ep, lvl, ctx.opt.unit_budget);
                    for (int t = 0; t < 32; ++t) {
                        FieldElement u = E->residue_rep(1 + rng.below(E->q() - 1));
                        FieldElement piv = E->one();
                        for (int s = 1; s < level; ++s) {
                            piv = piv * E->uniformizer();
                            std::uint64_t idx = rng.below(E->q());
                            if (idx) u = u + E->residue_rep(idx) * piv;
                        }
                        long long v = rng.range(-2, 2);
                        FieldElement x =
                            u * (v >= 0 ? E->uniformizer() : E->uniformizer_inverse()).pow(
                                    std::abs(v));
                        bool pred = hilbert_symbol(x, ereps[j]) == 1;
                        if (pred != ni.contains(x)) ++disagreements;
                        ++checked;
                    }
                }
            }
        }
        bool ok = disagreements == 0;
        if (!ok) ++ctx.failures;
        ctx.emit("p" + std::to_string(ctx.spec.prime), "verify hilbert",
                 Json{{"pass", ok}, {"samples", checked}, {"disagreements", disagreements}},
                 Json::array());
        ctx.text << "hilbert vs norm enumeration: " << checked << " samples, " << disagreements
                 << " disagreements\n";
    }
    if (what == "all" || what == "dist") {
        DetRng rng(ctx.opt.seed + 0xda942042e4dd58b5ULL);
        std::uint64_t checked = 0, mismatches = 0, exclusivity = 0;
        for (const auto& [id, lat] : lattices) {
            GaloisElement sigma = GaloisElement::top_conjugation(lat.B);
            std::vector<FieldElement> gens = canonical_unit_generators(lat.B, 1);
            for (int t = 0; t < 24; ++t) {
                long long q1 = static_cast<long long>(lat.B->q()) - 1;
                SmoothChar omega = SmoothChar::from_generator_values(
                    lat.B, 1,
                    {ExactValue::root_of_unity(Rat(rng.range(0, q1 - 1), q1))},
                    ExactValue(Rat(rng.range(0, 7), 8), Rat(rng.range(-2, 2), 2)));
                if (!is_regular(omega, sigma)) continue;
                GL2Rep pi = GL2Rep::dihedral(lat.B, omega);
                oracle::DistinguishedVerdict v =
                    oracle::independent_distinguished(lat, ctx.engine.omega_on_lattice(lat, omega),
                                                      ctx.opt.unit_budget);
                if (v.distinguished() != ctx.engine.is_distinguished(pi)) ++mismatches;
                if (v.eta_distinguished() != ctx.engine.is_eta_distinguished(pi)) ++mismatches;
                if (v.distinguished() && v.eta_distinguished()) ++exclusivity;
                ++checked;
            }
        }
        bool ok = mismatches == 0 && exclusivity == 0;
        if (!ok) ++ctx.failures;
        ctx.emit("p" + std::to_string(ctx.spec.prime), "verify dist",
                 Json{{"pass", ok},
                      {"samples", checked},
                      {"mismatches", mismatches},
                      {"exclusivity_violations", exclusivity}},
                 Json::array());
        ctx.text << "independent distinguishedness: " << checked << " samples, " << mismatches
                 << " mismatches, " << exclusivity << " exclusivity violations\n";
    }
}

}  // namespace

RunOutcome run_command(const RunSpec& spec, const std::string& command, const RunOptions& opt) {
    CommandContext ctx(spec, opt);
    auto dispatch = [&](const std::string& cmd) {
        if (cmd == "classify") cmd_classify(ctx);
        else if (cmd == "lw" || cmd == "las" || cmd == "l1" || cmd == "twists" ||
                 cmd == "distinguished" || cmd == "check-egal")
            cmd_rep_factor(ctx, cmd);
        else if (cmd == "verify") cmd_verify(ctx);
        else throw SpecError("unsupported command '" + cmd + "'");
    };
    if (command == "run") {
        if (spec.commands.empty()) throw SpecError("spec has no command list for 'run'");
        for (const std::string& line : spec.commands) {
            std::istringstream is(line);
            std::string cmd, target;
            is >> cmd >> target;
            RunOptions sub_opt = opt;
            sub_opt.target = target;
            CommandContext inner(spec, sub_opt);
            if (cmd == "classify") cmd_classify(inner);
            else if (cmd == "verify") cmd_verify(inner);
            else cmd_rep_factor(inner, cmd);
            for (auto& r : inner.results) ctx.results.push_back(std::move(r));
            ctx.text << inner.text.str();
            ctx.failures += inner.failures;
        }
    } else {
        dispatch(command);
    }
    RunOutcome out;
    out.failures = ctx.failures;
    out.document = Json{{"command", command}, {"results", std::move(ctx.results)},
                        {"failures", ctx.failures}};
    out.text = ctx.text.str();
    return out;
}

// --- corpus --------------------------------------------------------------------

namespace {

SmoothChar sample_char(DetRng& rng, const FieldPtr& E, int max_level, std::uint64_t budget) {
    int cap = max_level;
    while (cap > 0 && E->unit_group_cardinality(cap) > budget) --cap;
    int lvl = static_cast<int>(rng.below(static_cast<std::uint64_t>(cap) + 1));
    std::vector<ExactValue> images;
    if (lvl > 0) {
        long long q1 = static_cast<long long>(E->q()) - 1;
        long long p = E->context().p;
        std::vector<FieldElement> gens = canonical_unit_generators(E, lvl);
        images.push_back(ExactValue::root_of_unity(Rat(rng.range(0, q1 - 1), q1)));
        for (std::size_t g = 1; g < gens.size(); ++g)
            images.push_back(ExactValue::root_of_unity(Rat(rng.range(0, p - 1), p)));
    }
    ExactValue unif(Rat(rng.range(0, 7), 8), Rat(rng.range(-4, 4), 2));
    return SmoothChar::from_generator_values(E, lvl, images, unif);
}

}  // namespace

CorpusStats run_corpus(const CorpusOptions& opt, Json* document) {
    if (opt.max_level < 0 || opt.max_level > 2)
        throw SpecError("corpus sampling supports character levels 0..2 "
                        "(the canonical generator images are independent only up to level 2)");
    CorpusStats stats;
    DetRng rng(opt.seed);
    Json instances = Json::array();

    for (long long p : opt.primes) {
        FieldPtr F = LocalField::make_base(p, opt.precision);
        AsaiEngine engine(AsaiEngine::Options{opt.unit_budget, opt.degree8_budget});
        std::vector<FieldElement> freps = F->square_class_reps();
        static const char* kClassNames[] = {"1", "u", "p", "up"};

        for (std::size_t ki = 1; ki < freps.size(); ++ki) {
            FieldPtr K = LocalField::make_extension(
                F, freps[ki], "Q_" + std::to_string(p) + "(sqrt " + kClassNames[ki] + ")");
            int n = opt.instances_per_field;
            int n_st = std::max(1, n / 5);
            int n_ps = std::max(1, 2 * n / 5);
            int n_dh = std::max(1, (2 * n / 5 + 2) / 3);

            auto process_checked = [&](const std::string& id, const GL2Rep& rep) {
                ++stats.admissible;
                if (rep.is_dihedral()) ++stats.dihedral;
                else if (rep.is_steinberg()) ++stats.steinberg;
                else ++stats.principal;

                EgalReport r = engine.check_egal(rep);
                bool ok = true;
                if (!r.equal) { ++stats.egal_failures; ok = false; stats.violations.push_back(id + ":egal"); }
                if (!ef_divides(r.l1, r.las)) {
                    ++stats.divides_failures; ok = false;
                    stats.violations.push_back(id + ":divides");
                }
                if (r.decomposition.nongalois_reduction_used) {
                    if (r.decomposition.nongalois_reduction_failed) ++stats.nongalois_failed;
                    else ++stats.nongalois_reduced;
                }
                // simple-pole relation to the central character
                SmoothChar cF = restrict_to(central_char(rep), F);
                if (!cF.is_unramified()) {
                    if (!r.twists.empty()) {
                        ++stats.simplepoles_failures; ok = false;
                        stats.violations.push_back(id + ":simplepoles");
                    }
                } else {
                    for (const ExactValue& alpha : r.twists)
                        if (!(alpha.pow(2) == *cF.unramified_value())) {
                            ++stats.simplepoles_failures; ok = false;
                            stats.violations.push_back(id + ":simplepoles");
                            break;
                        }
                }
                if (rep.is_supercuspidal()) {
                    bool lcusp = r.l1 == EulerFactor::one() && r.las.has_simple_poles();
                    std::vector<ExactValue> tw(r.twists.begin(), r.twists.end());
                    lcusp = lcusp && r.las.poles() == tw;
                    if (!lcusp) {
                        ++stats.lcusp_failures; ok = false;
                        stats.violations.push_back(id + ":lcusp");
                    }
                    if (engine.is_distinguished(rep) && engine.is_eta_distinguished(rep)) {
                        ++stats.exclusivity_failures; ok = false;
                        stats.violations.push_back(id + ":exclusivity");
                    }
                }
                // pole at zero iff distinguished, for supercuspidal and
                // square-integrable (unitary) Steinberg twists
                bool applies = rep.is_supercuspidal();
                if (rep.is_steinberg())
                    applies = rep.steinberg_data().chi.uniformizer_value().qexp.numerator() == 0;
                if (applies) {
                    bool pole = false;
                    for (const ExactValue& root : r.las.poles())
                        if (root.is_one()) pole = true;
                    if (pole != engine.is_distinguished(rep)) {
                        ++stats.pole_at_zero_failures; ok = false;
                        stats.violations.push_back(id + ":pole-at-zero");
                    }
                }
                if (document)
                    instances.push_back(Json{{"id", id},
                                             {"kind", rep.kind_name()},
                                             {"equal", r.equal},
                                             {"ok", ok},
                                             {"las", json_of(r.las)}});
            };
            // enumeration budgets can rule out an instance (large primes,
            // deep non-Galois descents); count it rather than aborting the run
            auto process = [&](const std::string& id, const GL2Rep& rep) {
                try {
                    process_checked(id, rep);
                } catch (const BudgetExceeded&) {
                    ++stats.budget_skipped;
                    --stats.admissible;  // not admitted into the checked corpus
                    if (rep.is_dihedral()) --stats.dihedral;
                    else if (rep.is_steinberg()) --stats.steinberg;
                    else --stats.principal;
                }
            };

            auto instance_id = [&](const std::string& kind, int idx) {
                std::ostringstream os;
                os << "p" << p << ".K" << kClassNames[ki] << "." << kind << "." << idx;
                return os.str();
            };

            for (int i = 0; i < n_st; ++i) {
                ++stats.candidates;
                process(instance_id("st", i), GL2Rep::steinberg(sample_char(
                                                  rng, K, opt.max_level, opt.unit_budget)));
            }
            int made = 0;
            for (int attempt = 0; attempt < 6 * n_ps && made < n_ps; ++attempt) {
                ++stats.candidates;
                SmoothChar lambda = sample_char(rng, K, opt.max_level, opt.unit_budget);
                SmoothChar mu = sample_char(rng, K, opt.max_level, opt.unit_budget);
                try {
                    GL2Rep rep = GL2Rep::principal(lambda, mu);
                    process(instance_id("ps", made), rep);
                    ++made;
                } catch (const Inadmissible&) {
                }
            }
            std::vector<FieldElement> kreps = K->square_class_reps();
            for (std::size_t dj = 1; dj < kreps.size(); ++dj) {
                FieldPtr L = LocalField::make_extension(K, kreps[dj]);
                made = 0;
                for (int attempt = 0; attempt < 8 * n_dh && made < n_dh; ++attempt) {
                    ++stats.candidates;
                    SmoothChar omega = sample_char(rng, L, opt.max_level, opt.unit_budget);
                    try {
                        GL2Rep rep = GL2Rep::dihedral(L, omega);
                        process(instance_id("dh" + std::to_string(dj), made), rep);
                        ++made;
                    } catch (const Inadmissible&) {
                    }
                }
            }
        }
    }

    if (document) {
        Json opts{{"primes", opt.primes},
                  {"precision", opt.precision},
                  {"seed", opt.seed},
                  {"max_level", opt.max_level},
                  {"instances_per_field", opt.instances_per_field}};
        Json st{{"candidates", stats.candidates},
                {"admissible", stats.admissible},
                {"budget_skipped", stats.budget_skipped},
                {"dihedral", stats.dihedral},
                {"steinberg", stats.steinberg},
                {"principal", stats.principal},
                {"nongalois_reduced", stats.nongalois_reduced},
                {"nongalois_failed", stats.nongalois_failed},
                {"egal_failures", stats.egal_failures},
                {"divides_failures", stats.divides_failures},
                {"simplepoles_failures", stats.simplepoles_failures},
                {"lcusp_failures", stats.lcusp_failures},
                {"exclusivity_failures", stats.exclusivity_failures},
                {"pole_at_zero_failures", stats.pole_at_zero_failures},
                {"violations", stats.violations}};
        *document = Json{{"command", "corpus"},
                         {"options", std::move(opts)},
                         {"stats", std::move(st)},
                         {"instances", std::move(instances)}};
    }
    return stats;
}

std::string corpus_text_summary(const CorpusOptions& opt, const CorpusStats& stats) {
    std::ostringstream os;
    os << "corpus sweep: primes {";
    for (std::size_t i = 0; i < opt.primes.size(); ++i)
        os << (i ? "," : "") << opt.primes[i];
    os << "}, seed " << opt.seed << ", level <= " << opt.max_level << "\n";
    os << "  admissible instances: " << stats.admissible << " (dihedral " << stats.dihedral
       << ", steinberg " << stats.steinberg << ", principal " << stats.principal << ")\n";
    if (stats.budget_skipped)
        os << "  skipped by enumeration budget: " << stats.budget_skipped << "\n";
    os << "  non-Galois reductions: " << stats.nongalois_reduced << " descended, "
       << stats.nongalois_failed << " irreducible\n";
    os << "  L_W = L_As failures:        " << stats.egal_failures << "\n";
    os << "  L_1 | L_As failures:        " << stats.divides_failures << "\n";
    os << "  central-character failures: " << stats.simplepoles_failures << "\n";
    os << "  supercuspidal-shape failures: " << stats.lcusp_failures << "\n";
    os << "  exclusivity failures:       " << stats.exclusivity_failures << "\n";
    os << "  pole-at-zero failures:      " << stats.pole_at_zero_failures << "\n";
    os << (stats.total_failures() == 0 ? "  all checks passed" : "  CHECKS FAILED") << "\n";
    return os.str();
}

}  // namespace asailab
