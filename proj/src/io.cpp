#include "srlab/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace srlab {

namespace {

std::string strip_comment(const std::string& line) {
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

std::vector<long long> parse_integers(const std::string& text, int line_no) {
    std::istringstream is(text);
    std::vector<long long> out;
    std::string token;
    while (is >> token) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw ParseError(line_no, "not an integer: '" + token + "'");
        }
        if (used != token.size()) throw ParseError(line_no, "not an integer: '" + token + "'");
        out.push_back(v);
    }
    return out;
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return in;
}

bool looks_like_json(std::istream& in) {
    char c = 0;
    while (in.get(c))
        if (!std::isspace(static_cast<unsigned char>(c))) break;
    in.clear();
    in.seekg(0);
    return c == '{';
}

Json parse_json(std::istream& in) {
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(0, e.what());
    }
}

}  // namespace

SimplicialComplex parse_facets(std::istream& in) {
    std::vector<Face> facets;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = strip_comment(line);
        if (blank(text)) continue;
        Face f;
        for (long long v : parse_integers(text, line_no)) {
            if (v < 1 || v > std::numeric_limits<Vertex>::max()) throw ParseError(line_no, "vertex labels must be positive");
            f.push_back(static_cast<Vertex>(v));
        }
        const std::size_t n = f.size();
        f = make_face(std::move(f));
        if (f.size() != n) throw ParseError(line_no, "repeated vertex in a facet");
        facets.push_back(std::move(f));
    }
    return SimplicialComplex(std::move(facets));
}

std::string format_facets(const SimplicialComplex& complex) {
    std::ostringstream os;
    for (const auto& f : complex.facets()) {
        for (std::size_t k = 0; k < f.size(); ++k) os << (k ? " " : "") << f[k];
        os << '\n';
    }
    return os.str();
}

Json complex_to_json(const SimplicialComplex& complex) {
    Json facets = Json::array();
    for (const auto& f : complex.facets()) facets.push_back(f);
    return Json{{"facets", facets}};
}

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        throw ParseError(0, "expected an object with a \"facets\" array");
    std::vector<Face> facets;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw ParseError(0, "each facet must be an array");
        Face face;
        for (const auto& v : f) {
            if (!v.is_number_integer() || v.get<long long>() < 1) throw ParseError(0, "vertex labels must be positive integers");
            face.push_back(v.get<Vertex>());
        }
        const std::size_t n = face.size();
        face = make_face(std::move(face));
        if (face.size() != n) throw ParseError(0, "repeated vertex in a facet");
        facets.push_back(std::move(face));
    }
    return SimplicialComplex(std::move(facets));
}

Fan parse_fan(std::istream& in) {
    std::string line;
    int line_no = 0, d = 0;
    bool in_cones = false;
    std::vector<std::vector<long long>> rays;
    std::vector<Face> cones;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = strip_comment(line);
        if (blank(text)) continue;
        if (d == 0) {
            const auto header = parse_integers(text, line_no);
            if (header.size() != 1 || header[0] < 1) throw ParseError(line_no, "header must be the fan dimension");
            d = static_cast<int>(header[0]);
            continue;
        }
        if (!in_cones) {
            std::istringstream is(text);
            std::string word;
            is >> word;
            if (word == "cones") {
                in_cones = true;
                continue;
            }
            auto ray = parse_integers(text, line_no);
            if (static_cast<int>(ray.size()) != d)
                throw ParseError(line_no, "ray needs " + std::to_string(d) + " coordinates");
            rays.push_back(std::move(ray));
            continue;
        }
        Face cone;
        for (long long v : parse_integers(text, line_no)) {
            if (v < 1 || v > static_cast<long long>(rays.size())) throw ParseError(line_no, "ray index out of range");
            cone.push_back(static_cast<Vertex>(v));
        }
        cones.push_back(std::move(cone));
    }
    if (d == 0) throw ParseError(line_no, "missing header");
    if (!in_cones) throw ParseError(line_no, "missing \"cones\" line");
    return make_fan(d, std::move(rays), std::move(cones));
}

Json fan_to_json(const Fan& fan) {
    Json cones = Json::array();
    for (const auto& c : fan.cones) cones.push_back(c);
    return Json{{"dimension", fan.dimension}, {"rays", fan.rays}, {"cones", cones}};
}

Fan fan_from_json(const Json& j) {
    try {
        return make_fan(j.at("dimension").get<int>(), j.at("rays").get<std::vector<std::vector<long long>>>(),
                        j.at("cones").get<std::vector<Face>>());
    } catch (const Json::exception& e) {
        throw ParseError(0, e.what());
    }
}

SimplicialComplex read_complex(const std::string& path) {
    auto in = open(path);
    if (looks_like_json(in)) return complex_from_json(parse_json(in));
    return parse_facets(in);
}

Fan read_fan(const std::string& path) {
    auto in = open(path);
    if (looks_like_json(in)) return fan_from_json(parse_json(in));
    return parse_fan(in);
}

std::string scalar_to_string(const Rational& x) { return x.str(); }
std::string scalar_to_string(const Fp& x) { return x.to_string(); }

Json verdicts_to_json(const std::vector<DegreeVerdict>& verdicts) {
    Json out = Json::array();
    for (const auto& v : verdicts) {
        out.push_back({{"degree", v.degree},
                       {"dim_from", v.dim_from},
                       {"dim_to", v.dim_to},
                       {"rank", v.rank},
                       {"verdict", v.kind()}});
    }
    return out;
}

template <class S>
Json certificate_to_json(const WlpCertificate<S>& cert) {
    Json theta = Json::array();
    for (Index i = 0; i < cert.theta.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < cert.theta.cols(); ++j) row.push_back(scalar_to_string(cert.theta(i, j)));
        theta.push_back(row);
    }
    Json omega = Json::array();
    for (Index j = 0; j < cert.omega.size(); ++j) omega.push_back(scalar_to_string(cert.omega(j)));
    Json prime = nullptr;
    if (cert.field.rfind("fp:", 0) == 0) prime = cert.field.substr(3);
    return Json{{"field", cert.field},   {"prime", prime},
                {"seed", std::to_string(cert.seed)},
                {"tries", cert.tries},   {"theta", theta},
                {"omega", omega},        {"verdicts", verdicts_to_json(cert.verdicts)},
                {"passed", cert.passed()}, {"certified_over_q", cert.certified_over_q}};
}

template <class Field>
CertificateFor<Field> certificate_from_json(const Json& j, const Field& field) {
    using S = typename Field::Scalar;
    const auto parse_scalar = [&](const Json& v) -> S {
        const auto text = v.get<std::string>();
        if constexpr (std::is_same_v<S, Fp>) return Fp::from_residue(std::stoull(text), field.prime);
        else return Rational(text);
    };
    try {
        if (j.at("field").get<std::string>() != field.name()) throw ParseError(0, "certificate is over another field");
        const auto& theta_j = j.at("theta");
        const auto rows = static_cast<Index>(theta_j.size());
        const auto cols = rows ? static_cast<Index>(theta_j[0].size()) : 0;
        CertificateFor<Field> cert;
        cert.theta.resize(rows, cols);
        for (Index r = 0; r < rows; ++r)
            for (Index c = 0; c < cols; ++c) cert.theta(r, c) = parse_scalar(theta_j.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c)));
        const auto& omega_j = j.at("omega");
        cert.omega.resize(static_cast<Index>(omega_j.size()));
        for (Index c = 0; c < cert.omega.size(); ++c) cert.omega(c) = parse_scalar(omega_j.at(static_cast<std::size_t>(c)));
        cert.field = field.name();
        cert.seed = std::stoull(j.at("seed").get<std::string>());
        cert.tries = j.at("tries").get<int>();
        cert.certified_over_q = j.at("certified_over_q").get<bool>();
        for (const auto& v : j.at("verdicts")) {
            DegreeVerdict d;
            d.degree = v.at("degree").get<int>();
            d.dim_from = v.at("dim_from").get<Index>();
            d.dim_to = v.at("dim_to").get<Index>();
            d.rank = v.at("rank").get<Index>();
            d.injective = d.rank == d.dim_from;
            d.surjective = d.rank == d.dim_to;
            cert.verdicts.push_back(d);
        }
        return cert;
    } catch (const Json::exception& e) {
        throw ParseError(0, e.what());
    }
}

template Json certificate_to_json(const WlpCertificate<Rational>&);
template Json certificate_to_json(const WlpCertificate<Fp>&);
template CertificateFor<RationalField> certificate_from_json(const Json&, const RationalField&);
template CertificateFor<PrimeField> certificate_from_json(const Json&, const PrimeField&);

}  // namespace srlab
