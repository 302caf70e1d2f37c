#pragma once

// Face-number invariants: f-, h- and g-vectors, Macaulay pseudopowers and
// M-sequences, the three g-theorem conditions, and the bistellar g-law.

#include <optional>
#include <string>
#include <vector>

#include "srlab/complex.hpp"
#include "srlab/field.hpp"

namespace srlab {

enum class VectorKind { F, H, G, HPrime, HDoublePrime, GDoublePrime, Betti, Hilbert, Other };

std::string_view kind_name(VectorKind kind);

/// An integer sequence indexed by degree.
///
/// f-vectors hold (f_0, ..., f_{d-1}) with f_{-1} = 1 implicit; h-type vectors
/// hold (h_0, ..., h_d); g-type vectors hold (g_0, ..., g_{⌊d/2⌋}).
struct GradedVector {
    VectorKind kind = VectorKind::Other;
    std::vector<Integer> entries;

    std::size_t size() const { return entries.size(); }
    const Integer& operator[](std::size_t i) const { return entries[i]; }
    Integer& operator[](std::size_t i) { return entries[i]; }

    friend bool operator==(const GradedVector&, const GradedVector&) = default;
};

GradedVector make_vector(VectorKind kind, const std::vector<long long>& values);

/// Comma-separated, no spaces: "1,4,10,-1".
std::string to_string(const GradedVector& v);

Integer binomial(long long n, long long k);

GradedVector f_vector(const SimplicialComplex& complex);
/// h from f, with d = f.size() (the Krull dimension).
GradedVector f_to_h(const GradedVector& f, std::size_t d);
GradedVector h_to_f(const GradedVector& h, std::size_t d);
GradedVector h_vector(const SimplicialComplex& complex);
/// g_0 = h_0 and g_i = h_i - h_{i-1} for 1 ≤ i ≤ ⌊d/2⌋, with d = h.size()-1.
GradedVector g_vector(const GradedVector& h, VectorKind kind = VectorKind::G);

/// Terms a_i > a_{i-1} > ... > a_j ≥ j ≥ 1 with a = Σ C(a_k, k), listed from
/// k = i downwards as (a_k, k).  Greedy; empty for a = 0.
std::vector<std::pair<long long, long long>> binomial_expansion(const Integer& a, long long i);
Integer pseudopower(const Integer& a, long long i);

struct MSequenceResult {
    bool ok = true;
    std::optional<std::size_t> first_failure;

    explicit operator bool() const { return ok; }
};

MSequenceResult is_m_sequence(const std::vector<Integer>& k);
inline MSequenceResult is_m_sequence(const GradedVector& k) { return is_m_sequence(k.entries); }

struct GConditionReport {
    bool dehn_sommerville = false;  // h_i = h_{d-i}
    bool unimodal = false;          // 1 = h_0 ≤ h_1 ≤ ... ≤ h_{⌊d/2⌋}
    bool g_is_m = false;            // g_{i+1} ≤ g_i^<i> for i ≥ 1

    bool all() const { return dehn_sommerville && unimodal && g_is_m; }
};

GConditionReport check_g_conditions(const GradedVector& h);

struct GksReport {
    Integer lhs;  // f_d
    Integer rhs;  // (d+2) f_{d-1}
    bool holds = false;
};

/// Evaluates f_d ≤ (d+2) f_{d-1} for a complex of dimension d.
GksReport gks_inequality(const SimplicialComplex& complex);

struct GDeltaReport {
    GradedVector before;
    GradedVector after;
    GradedVector expected;
};

/// Checks the change of the g-vector across a bistellar k-move on a
/// D-manifold: g_{k+1} rises by one for k < D/2, g_{D-k+1} drops by one for
/// k > D/2, nothing changes for k = D/2.  Throws LawViolated otherwise.
GDeltaReport pachner_g_delta(const SimplicialComplex& before, const SimplicialComplex& after,
                             const BistellarMove& move);

}  // namespace srlab
