#pragma once

// Text and JSON formats for complexes, fans and WLE certificates.
//
// Facet list: one facet per line, whitespace-separated positive integers;
// '#' starts a comment; blank lines are skipped.
//
// Fan: first data line is the dimension d, then one ray per line (d
// integers), then a line reading "cones", then one cone per line (1-based
// ray indices).

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "srlab/complex.hpp"
#include "srlab/lefschetz.hpp"
#include "srlab/toric.hpp"

namespace srlab {

using Json = nlohmann::ordered_json;

SimplicialComplex parse_facets(std::istream& in);
std::string format_facets(const SimplicialComplex& complex);

Json complex_to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const Json& j);

Fan parse_fan(std::istream& in);
Json fan_to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

/// Reads a file in either format; JSON is recognized by a leading '{'.
SimplicialComplex read_complex(const std::string& path);
Fan read_fan(const std::string& path);

std::string scalar_to_string(const Rational& x);
std::string scalar_to_string(const Fp& x);

Json verdicts_to_json(const std::vector<DegreeVerdict>& verdicts);

/// Field, prime, seed, Θ, ω and verdicts; scalars are exact strings.
template <class S>
Json certificate_to_json(const WlpCertificate<S>& cert);

/// Inverse of certificate_to_json for the given field.
template <class Field>
CertificateFor<Field> certificate_from_json(const Json& j, const Field& field);

}  // namespace srlab
