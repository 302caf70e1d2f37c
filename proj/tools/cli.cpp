#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "srlab/face_ring.hpp"
#include "srlab/homology.hpp"
#include "srlab/io.hpp"
#include "srlab/lefschetz.hpp"
#include "srlab/toric.hpp"
#include "srlab/vectors.hpp"

namespace srlab::cli {

namespace {

struct Options {
    std::string command;
    std::string path;
    std::string field;
    std::uint64_t seed = 0;
    int max_tries = 5;
    bool certify = false;
    std::string format = "human";
    int steps = 0;
    std::string out_dir;
    int degree = -1;
};

struct Result {
    Json json;
    std::string human;
    int code = kOk;
};

Json to_json(const GradedVector& v) {
    Json a = Json::array();
    for (const auto& x : v.entries) {
        if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
            a.push_back(x.convert_to<long long>());
        else
            a.push_back(x.str());
    }
    return a;
}

std::string csv(const Json& a) {
    std::string s;
    for (const auto& x : a) s += (s.empty() ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
    return s;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

Json header(const Options& o, const std::string& field) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = o.command;
    j["input"] = std::filesystem::path(o.path).filename().string();
    j["seed"] = o.seed;
    if (!field.empty()) j["field"] = field;
    return j;
}

std::string monomial_label(const SimplicialComplex& c, const Monomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < m.size();) {
        std::size_t e = k;
        while (e < m.size() && m[e] == m[k]) ++e;
        s += (s.empty() ? "" : "*") + ("x" + std::to_string(c.vertices()[static_cast<std::size_t>(m[k])]));
        if (e - k > 1) s += "^" + std::to_string(e - k);
        k = e;
    }
    return s;
}

// ---------------------------------------------------------------- vectors

Result cmd_vectors(const Options& o) {
    const auto complex = read_complex(o.path);
    const auto f = f_vector(complex);
    const auto h = h_vector(complex);
    const auto g = g_vector(h);
    Result r{header(o, ""), "", kOk};
    r.json["f"] = to_json(f);
    if (o.command == "fvector") {
        r.human = "f=" + to_string(f) + "\n";
        return r;
    }
    r.json["h"] = to_json(h);
    if (o.command == "hvector") {
        r.human = "h=" + to_string(h) + "\n";
        return r;
    }
    r.json["g"] = to_json(g);
    const auto cond = check_g_conditions(h);
    r.json["conditions"] = {{"dehn_sommerville", cond.dehn_sommerville}, {"unimodal", cond.unimodal}, {"g_is_m", cond.g_is_m}};
    std::ostringstream os;
    os << "f=" << to_string(f) << " h=" << to_string(h) << " g=" << to_string(g) << "\n";
    os << "dehn_sommerville=" << yes(cond.dehn_sommerville) << " unimodal=" << yes(cond.unimodal)
       << " g_is_m=" << yes(cond.g_is_m) << "\n";
    if (complex.dim() >= 1) {
        const auto gks = gks_inequality(complex);
        r.json["gks"] = {{"lhs", gks.lhs.str()}, {"rhs", gks.rhs.str()}, {"holds", gks.holds}};
        os << "gks: " << gks.lhs.str() << " <= " << gks.rhs.str() << " " << (gks.holds ? "holds" : "fails") << "\n";
    }
    r.human = os.str();
    return r;
}

// --------------------------------------------------------------- classify

Result cmd_classify(const Options& o, const FieldSpec& field) {
    const auto complex = read_complex(o.path);
    const auto c = classify(complex, field);
    Result r{header(o, field_name(field)), "", kOk};
    r.json["betti"] = c.betti.betti;
    r.json["pure"] = c.pure;
    r.json["connected"] = c.connected;
    r.json["homology_manifold"] = c.manifold;
    r.json["homology_sphere"] = c.sphere;
    r.json["cohen_macaulay"] = c.cohen_macaulay;
    r.json["gorenstein_star"] = c.gorenstein_star;
    r.json["buchsbaum"] = c.buchsbaum;
    r.json["orientable"] = c.orientable ? Json(*c.orientable) : Json(nullptr);
    std::ostringstream os;
    os << "betti(reduced, " << field_name(field) << ")=" << csv(r.json["betti"]) << "\n";
    for (const char* key : {"pure", "connected", "homology_manifold", "homology_sphere", "cohen_macaulay",
                            "gorenstein_star", "buchsbaum"})
        os << key << "=" << yes(r.json[key].get<bool>()) << "\n";
    os << "orientable=" << (c.orientable ? yes(*c.orientable) : "n/a") << "\n";
    r.human = os.str();
    return r;
}

// -------------------------------------------------------------------- wlp

template <class Field>
Result cmd_wlp_in(const Options& o, const Field& field) {
    const auto complex = read_complex(o.path);
    const auto cert = find_wle(complex, field, o.seed, {o.max_tries, o.certify, true});
    Result r{header(o, field.name()), "", kOk};
    r.json["certificate"] = certificate_to_json(cert);
    std::ostringstream os;
    os << "weak Lefschetz element found on try " << cert.tries << " over " << field.name() << " (seed " << o.seed << ")\n";
    for (const auto& v : cert.verdicts)
        os << "  degree " << v.degree << " -> " << v.degree + 1 << ": " << v.dim_from << " -> " << v.dim_to << ", rank "
           << v.rank << ", " << v.kind() << "\n";
    if (o.certify) os << "certified over Q: " << yes(cert.certified_over_q) << "\n";
    r.human = os.str();
    return r;
}

// ------------------------------------------------------------------- walk

Result cmd_walk(const Options& o) {
    const auto complex = read_complex(o.path);
    if (!complex.is_pure()) throw Error(ErrorCode::NotPure, "walks need a pure complex");
    const int D = complex.dim();
    const FieldSpec field = PrimeField{};
    const bool sphere_input = is_homology_sphere(complex, field);
    const auto walk = random_pachner_walk(complex, o.steps, o.seed);

    Result r{header(o, ""), "", kOk};
    r.json["steps"] = o.steps;
    Json log = Json::array();
    const GradedVector start = g_vector(h_vector(complex));
    GradedVector ledger = start;
    std::map<int, int> counts;
    bool laws = true, nonnegative = true, spheres = true, move_counts = true;
    for (std::size_t s = 0; s < walk.size(); ++s) {
        const auto& step = walk[s];
        Json e;
        e["step"] = s;
        bool law = true;
        if (step.move) {
            const auto& m = *step.move;
            ++counts[m.index];
            e["move"] = {{"index", m.index}, {"sigma", m.sigma}, {"tau", m.tau}};
            if (2 * m.index < D) ledger[static_cast<std::size_t>(m.index + 1)] += 1;
            if (2 * m.index > D) ledger[static_cast<std::size_t>(D - m.index + 1)] -= 1;
            try {
                pachner_g_delta(walk[s - 1].complex, step.complex, m);
            } catch (const Error&) {
                law = false;
            }
        } else {
            e["move"] = nullptr;
        }
        const auto h = h_vector(step.complex);
        const auto g = g_vector(h);
        if (g != ledger) law = false;
        for (const auto& x : g.entries) nonnegative = nonnegative && x >= 0;
        // #k-moves - #(D-k)-moves = g_{k+1} - g_{k+1}(start) for k < D/2.
        for (int k = 0; 2 * k < D; ++k) {
            const auto i = static_cast<std::size_t>(k + 1);
            if (i < g.size() && Integer(counts[k] - counts[D - k]) != g[i] - start[i]) law = false;
            if (i < g.size() && start[i] == 0 && counts[D - k] > counts[k]) move_counts = false;
        }
        e["f"] = to_json(f_vector(step.complex));
        e["h"] = to_json(h);
        e["g"] = to_json(g);
        e["g_ledger"] = to_json(ledger);
        e["law_holds"] = law;
        if (sphere_input) {
            const bool sphere = is_homology_sphere(step.complex, field);
            e["homology_sphere"] = sphere;
            spheres = spheres && sphere;
        }
        laws = laws && law;
        log.push_back(e);
    }
    Json count_json = Json::object();
    for (int k = 0; k <= D; ++k) count_json[std::to_string(k)] = counts[k];

    r.json["complexes"] = walk.size();
    r.json["move_counts"] = count_json;
    r.json["g_law_holds"] = laws;
    r.json["g_nonnegative"] = nonnegative;
    r.json["move_count_inequality"] = move_counts;
    if (sphere_input) r.json["all_homology_spheres"] = spheres;
    r.json["final_g"] = to_json(g_vector(h_vector(walk.back().complex)));
    r.json["final_g_ledger"] = to_json(ledger);
    r.json["log"] = log;

    if (!o.out_dir.empty()) {
        std::filesystem::create_directories(o.out_dir);
        std::ofstream(std::filesystem::path(o.out_dir) / "walk.json") << r.json.dump(2) << "\n";
        for (std::size_t s = 0; s < walk.size(); ++s) {
            char name[32];
            std::snprintf(name, sizeof name, "step_%03zu.txt", s);
            std::ofstream(std::filesystem::path(o.out_dir) / name) << format_facets(walk[s].complex);
        }
    }

    std::ostringstream os;
    os << walk.size() << " complexes (seed " << o.seed << ")\n";
    os << "final f=" << csv(log.back()["f"]) << " g=" << csv(r.json["final_g"]) << " ledger g=" << csv(r.json["final_g_ledger"])
       << "\n";
    os << "move counts:";
    for (int k = 0; k <= D; ++k) os << " " << k << ":" << counts[k];
    os << "\n";
    os << "g-law " << (laws ? "holds" : "VIOLATED") << " at every step; g nonnegative: " << yes(nonnegative) << "\n";
    if (sphere_input) os << "all complexes homology spheres: " << yes(spheres) << "\n";
    r.human = os.str();
    if (!laws || !move_counts || (sphere_input && !spheres)) r.code = kPropertyViolated;
    return r;
}

// ------------------------------------------------------------- manifold-g

template <class Field>
Result cmd_manifold_g_in(const Options& o, const Field& field) {
    const auto complex = read_complex(o.path);
    const LinkHomology lh(complex, FieldSpec{field});
    if (!lh.is_buchsbaum()) throw Error(ErrorCode::NotBuchsbaum, "complex is not Buchsbaum over " + field.name());
    const auto h = h_vector(complex);
    const auto hp = h_prime(complex, field, o.seed);
    const auto hpp = kalai_h_doubleprime(hp, lh.global());
    const auto gpp = g_vector(hpp, VectorKind::GDoublePrime);
    const auto m = is_m_sequence(gpp);

    Result r{header(o, field.name()), "", kOk};
    r.json["betti"] = lh.global().betti;
    r.json["h"] = to_json(h);
    r.json["h_prime"] = to_json(hp);
    r.json["h_prime_formula"] = to_json(schenzel_h_prime(h, lh.global()));
    r.json["h_doubleprime"] = to_json(hpp);
    r.json["g_doubleprime"] = to_json(gpp);
    r.json["g_doubleprime_is_m"] = m.ok;
    std::ostringstream os;
    os << "h=" << to_string(h) << " h'=" << to_string(hp) << " h''=" << to_string(hpp) << "\n";
    os << "g''=" << to_string(gpp) << " M-vector: " << yes(m.ok) << "\n";
    const bool orientable = is_connected(complex) && lh.is_homology_manifold() && lh.global().at(complex.dim()) == 1;
    if (orientable) {
        const auto ns = novik_swartz_check(complex, field, o.seed);
        r.json["socle"] = ns.socle_dims;
        r.json["socle_expected"] = ns.expected;
        r.json["quotient_dims"] = ns.quotient_dims;
        r.json["pairing_ranks"] = ns.pairing_ranks;
        r.json["pairing_nondegenerate"] = ns.pairing_nondegenerate;
        os << "socle dims:";
        for (std::size_t i = 0; i < ns.socle_dims.size(); ++i) os << " Soc_" << i << "=" << ns.socle_dims[i];
        os << "\nA/I dims=" << csv(r.json["quotient_dims"]) << " pairing ranks=" << csv(r.json["pairing_ranks"])
           << " nondegenerate: " << yes(ns.pairing_nondegenerate) << "\n";
    } else {
        r.json["socle"] = nullptr;
    }
    r.human = os.str();
    return r;
}

// ------------------------------------------------------------------ toric

Result cmd_toric(const Options& o) {
    const auto fan = read_fan(o.path);
    const auto m = toric_m_check(fan);
    const auto w = toric_wle(fan, o.seed, o.max_tries);
    Result r{header(o, "q"), "", kOk};
    r.json["warnings"] = fan.warnings;
    r.json["betti_even"] = to_json(m.betti);
    r.json["symmetric"] = m.symmetric;
    r.json["differences"] = to_json(m.differences);
    r.json["differences_are_m"] = m.m_sequence.ok;
    Json wle = {{"found", w.found}, {"tries", w.tries}, {"verdicts", verdicts_to_json(w.verdicts)}};
    if (w.omega) {
        Json om = Json::array();
        for (Index i = 0; i < w.omega->size(); ++i) om.push_back(scalar_to_string((*w.omega)(i)));
        wle["omega"] = om;
    }
    r.json["wle"] = wle;
    std::ostringstream os;
    for (const auto& warning : fan.warnings) os << "warning: " << warning << "\n";
    os << "dim H^{2i}=" << to_string(m.betti) << " (odd degrees vanish); symmetric: " << yes(m.symmetric) << "\n";
    os << "differences=" << to_string(m.differences) << " M-vector: " << yes(m.m_sequence.ok) << "\n";
    os << "WLE for the ray system: " << (w.found ? "found on try " + std::to_string(w.tries) : "not found") << "\n";
    r.human = os.str();
    return r;
}

// ------------------------------------------------------ reduce and socle

template <class Field>
Result cmd_reduce_in(const Options& o, const Field& field) {
    const auto complex = read_complex(o.path);
    std::mt19937_64 rng(o.seed);
    const auto sys = random_lsop(complex, field, rng);
    const GradedQuotient<Field> q(complex, sys.theta, field);
    Result r{header(o, field.name()), "", kOk};
    const auto dims = q.dims_vector(VectorKind::Other);
    r.json["dims"] = to_json(dims);
    r.json["h"] = to_json(h_vector(complex));
    std::ostringstream os;
    os << "dims=" << to_string(dims) << " h=" << to_string(h_vector(complex)) << "\n";
    if (o.command == "socle") {
        const auto soc = socle(q);
        r.json["socle"] = soc.dims;
        os << "socle=" << csv(r.json["socle"]) << "\n";
    } else {
        Json basis = Json::array();
        for (int i = 0; i <= q.top_degree(); ++i) {
            Json deg = Json::array();
            std::string line;
            for (const auto& mono : q.standard_monomials(i)) {
                deg.push_back(monomial_label(complex, mono));
                line += (line.empty() ? "" : " ") + monomial_label(complex, mono);
            }
            basis.push_back(deg);
            os << "degree " << i << ": " << line << "\n";
        }
        r.json["basis"] = basis;
    }
    r.human = os.str();
    return r;
}

// ---------------------------------------------------------------- hilbert

Result cmd_hilbert(const Options& o) {
    const auto complex = read_complex(o.path);
    const int top = o.degree >= 0 ? o.degree : complex.dim() + 4;
    const auto hf = hilbert_function(complex, top);
    const auto series = hilbert_series(complex);
    const auto expansion = series.expand(top);
    Result r{header(o, ""), "", kOk};
    r.json["hilbert_function"] = to_json(hf);
    r.json["numerator"] = to_json(series.numerator);
    r.json["denominator_exponent"] = series.denominator_exponent;
    r.json["series_agrees"] = hf == expansion;
    std::ostringstream os;
    os << "H(i), i=0.." << top << ": " << to_string(hf) << "\n";
    os << "series: (" << to_string(series.numerator) << ") / (1-t)^" << series.denominator_exponent
       << "; expansion agrees: " << yes(hf == expansion) << "\n";
    r.human = os.str();
    if (hf != expansion) r.code = kPropertyViolated;
    return r;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::SearchExhausted:
        case ErrorCode::GenericityExhausted: return kSearchExhausted;
        case ErrorCode::LawViolated:
        case ErrorCode::FormulaMismatch:
        case ErrorCode::SchenzelMismatch:
        case ErrorCode::TransferFailed: return kPropertyViolated;
        default: return kInputError;
    }
}

template <class F>
Result with_field(const std::string& text, const std::string& fallback, F&& body) {
    const FieldSpec field = parse_field(text.empty() ? fallback : text);
    return std::visit([&](const auto& f) { return body(f); }, field);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact computations on simplicial complexes and their face rings", "srlab"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "structured"}));

    const auto add_input = [&](CLI::App* sub, bool fan = false) {
        sub->add_option("input", o.path, fan ? "Fan file" : "Facet-list or JSON complex")->required();
    };
    const auto add_field = [&](CLI::App* sub, const std::string& fallback) {
        sub->add_option("--field", o.field, "q or fp:<prime> (default " + fallback + ")");
    };
    const auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "RNG seed"); };

    std::map<std::string, std::string> descriptions = {
        {"fvector", "f-vector"},
        {"hvector", "h-vector"},
        {"gcheck", "f-, h-, g-vectors and the g-theorem conditions"},
        {"classify", "homological classification"},
        {"wlp", "search for a weak Lefschetz element"},
        {"walk", "seeded bistellar walk with g-ledger"},
        {"manifold-g", "h', h'', g'' and socle for Buchsbaum complexes"},
        {"toric", "Betti numbers of a toric variety from its fan"},
        {"reduce", "Artinian reduction with a random l.s.o.p."},
        {"hilbert", "Hilbert function and series of the face ring"},
        {"socle", "socle dimensions of an Artinian reduction"},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, text] : descriptions) {
        auto* sub = app.add_subcommand(name, text);
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "structured"}));
        add_input(sub, name == "toric");
        subs[name] = sub;
    }
    for (const char* name : {"classify", "manifold-g", "reduce", "socle"}) add_field(subs[name], "q");
    add_field(subs["wlp"], "fp:2305843009213693951");
    for (const char* name : {"wlp", "walk", "manifold-g", "toric", "reduce", "socle"}) add_seed(subs[name]);
    for (const char* name : {"wlp", "toric"}) subs[name]->add_option("--max-tries", o.max_tries, "Search budget");
    subs["wlp"]->add_flag("--certify", o.certify, "Re-verify the witness over Q");
    subs["walk"]->add_option("--steps", o.steps, "Number of moves")->check(CLI::NonNegativeNumber);
    subs["walk"]->add_option("--out", o.out_dir, "Directory for the walk log and step complexes");
    subs["hilbert"]->add_option("--degree", o.degree, "Largest degree (default d+3)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kInputError;
    }
    for (const auto& [name, sub] : subs)
        if (sub->parsed()) o.command = name;
    const bool structured = o.format == "structured";

    Result result;
    try {
        const auto& c = o.command;
        if (c == "fvector" || c == "hvector" || c == "gcheck") result = cmd_vectors(o);
        else if (c == "classify") result = cmd_classify(o, parse_field(o.field.empty() ? "q" : o.field));
        else if (c == "wlp") result = with_field(o.field, "fp:2305843009213693951", [&](const auto& f) { return cmd_wlp_in(o, f); });
        else if (c == "walk") result = cmd_walk(o);
        else if (c == "manifold-g") result = with_field(o.field, "q", [&](const auto& f) { return cmd_manifold_g_in(o, f); });
        else if (c == "toric") result = cmd_toric(o);
        else if (c == "reduce" || c == "socle") result = with_field(o.field, "q", [&](const auto& f) { return cmd_reduce_in(o, f); });
        else if (c == "hilbert") result = cmd_hilbert(o);
    } catch (const Error& e) {
        const int code = exit_code_for(e.code());
        if (structured) {
            Json j = header(o, o.field);
            j["error"] = {{"code", error_name(e.code())}, {"message", e.what()}};
            if (const auto* pe = dynamic_cast<const ParseError*>(&e)) j["error"]["line"] = pe->line();
            out << j.dump(2) << "\n";
        } else {
            err << "error: " << e.what() << "\n";
        }
        return code;
    }
    if (structured) out << result.json.dump(2) << "\n";
    else out << result.human;
    return result.code;
}

}  // namespace srlab::cli
