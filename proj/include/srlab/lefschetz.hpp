#pragma once

// Weak Lefschetz elements: checking, random search with optional rational
// certification, repair across a bistellar move, and the Buchsbaum/manifold
// invariants built on the Artinian reduction (h', h'', socle, pairings).
//
// Randomized routines take a 64-bit seed; trial k of a search draws from an
// independent stream derive_seed(seed, k), so results are reproducible.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srlab/complex.hpp"
#include "srlab/face_ring.hpp"
#include "srlab/homology.hpp"
#include "srlab/vectors.hpp"

namespace srlab {

/// Rank of ·ω : A_i → A_{i+1}.
struct DegreeVerdict {
    int degree = 0;
    Index dim_from = 0;
    Index dim_to = 0;
    Index rank = 0;
    bool injective = false;
    bool surjective = false;

    bool ok() const { return injective || surjective; }
    /// "bijective", "injective", "surjective" or "neither".
    std::string_view kind() const;
};

template <class S>
struct WlpCertificate {
    Matrix<S> theta;
    Vector<S> omega;
    std::vector<DegreeVerdict> verdicts;
    std::string field;
    std::uint64_t seed = 0;
    int tries = 0;
    bool certified_over_q = false;

    bool passed() const {
        for (const auto& v : verdicts)
            if (!v.ok()) return false;
        return true;
    }
    std::optional<int> first_failure() const {
        for (const auto& v : verdicts)
            if (!v.ok()) return v.degree;
        return std::nullopt;
    }
};

template <class Field>
using CertificateFor = WlpCertificate<typename Field::Scalar>;

template <class Field>
std::vector<DegreeVerdict> wle_verdicts(const GradedQuotient<Field>& q, const Vector<typename Field::Scalar>& omega);

/// Surjectivity of ·ω from degree ⌊d/2⌋ to ⌊d/2⌋+1.
template <class Field>
bool middle_surjective(const GradedQuotient<Field>& q, const Vector<typename Field::Scalar>& omega);

/// Verdicts for every degree i < d; the certificate reports failure through passed().
/// Needs system.omega.  Throws NotLsop or NotCohenMacaulay.
template <class Field>
CertificateFor<Field> check_wle(const SimplicialComplex& complex, const LinearSystem<typename Field::Scalar>& system,
                                const Field& field);

/// Gorenstein* shortcut: only the middle map is tested.  Throws NotGorensteinStar.
template <class Field>
bool check_wle_middle(const SimplicialComplex& complex, const LinearSystem<typename Field::Scalar>& system,
                      const Field& field);

struct SearchOptions {
    int max_tries = 5;
    /// Re-verify the witness over Q.  Witness entries are then drawn as
    /// integers in [-2^31, 2^31], so the same integer pair is checked in both fields.
    bool certify = false;
    bool check_hypotheses = true;
};

/// Samples Θ (an l.s.o.p., generic when C(m, d) ≤ 10^5), then ω, until a WLE
/// appears.  Throws SearchExhausted or NotCohenMacaulay.
template <class Field>
CertificateFor<Field> find_wle(const SimplicialComplex& complex, const Field& field, std::uint64_t seed,
                               const SearchOptions& options = {});

/// Whether a witness with integer-box entries also works over Q.
template <class S>
bool certify_over_rationals(const SimplicialComplex& complex, const WlpCertificate<S>& certificate);

enum class TransferPath { Unchanged, Repaired, Resampled };
std::string_view path_name(TransferPath path);

template <class Field>
struct TransferResult {
    SimplicialComplex complex;
    CertificateFor<Field> certificate;
    TransferPath path = TransferPath::Unchanged;
    std::optional<long long> t;
    std::vector<long long> t_tried;
    Vertex scan_vertex = 0;
};

/// Moves a WLE across a bistellar move.  ω is tried unchanged; if only the
/// middle map fails, ω + t·x_v is scanned for t = 1, 2, ..., d·h_n + 1 with v
/// the first vertex of τ; otherwise, or if the scan fails, a fresh search runs.
/// A vertex created by the move gets a new Θ column and ω coefficient 0.
/// Throws TransferFailed (with the t values tried) if everything fails.
template <class Field>
TransferResult<Field> wle_transfer(const SimplicialComplex& before, const CertificateFor<Field>& certificate,
                                   const BistellarMove& move, const Field& field, int max_tries = 5);

struct RigidityReport {
    std::vector<Index> dims;   // dim A_0, A_1, A_2
    bool monotone = false;     // dims[0] ≤ dims[1] ≤ dims[2]
    Index rank = 0;            // rank of ·ω : A_1 → A_2
    bool injective = false;
    bool hypothesis_met = false;  // dimension ≥ 3
};

/// Throws NotConnected or NotAManifold.
template <class Field>
RigidityReport rigidity_check(const SimplicialComplex& complex, const Field& field, std::uint64_t seed);

struct FaceMonomialReport {
    SimplicialComplex complex;
    int degree = 0;
    std::size_t faces_checked = 0;
    std::size_t nonzero = 0;

    bool holds() const { return faces_checked == nonzero; }
};

/// Δ = Δ^i * ∂Δ^j with generic Θ: every x_σ with |σ| = j generates (k[Δ]/Θ)_j = k.
template <class Field>
FaceMonomialReport lemma35_check(int i, int j, const Field& field, std::uint64_t seed);

/// Δ = Δ^i * L with L a homology (j-1)-sphere and lk_v L = ∂Δ^{j-1}: every x_σ
/// with |σ| = j and v ∈ σ generates (k[Δ]/Θ)_j = k.  Throws HypothesisViolated.
template <class Field>
FaceMonomialReport lemma36_check(int i, const SimplicialComplex& L, Vertex v, const Field& field, std::uint64_t seed);

/// h'_i = h_i - C(d,i) Σ_{j=1}^{i-1} (-1)^j β̃_{i-j-1}.
GradedVector schenzel_h_prime(const GradedVector& h, const BettiProfile& betti);
/// h''_i = h'_i - C(d,i) β̃_{i-1} for i < d, h''_d = h'_d.
GradedVector kalai_h_doubleprime(const GradedVector& h_prime, const BettiProfile& betti);

/// Ring dimensions with a random l.s.o.p., cross-checked against Schenzel's
/// formula (resampling Θ on mismatch).  Throws NotBuchsbaum or SchenzelMismatch.
template <class Field>
GradedVector h_prime(const SimplicialComplex& complex, const Field& field, std::uint64_t seed);
template <class Field>
GradedVector h_doubleprime(const SimplicialComplex& complex, const Field& field, std::uint64_t seed);
template <class Field>
GradedVector g_doubleprime(const SimplicialComplex& complex, const Field& field, std::uint64_t seed);

struct NovikSwartzReport {
    BettiProfile betti;
    std::vector<Index> dims;            // dim A_i
    std::vector<Index> socle_dims;      // dim Soc_i
    std::vector<long long> expected;    // C(d,i) β̃_{i-1} for 1 ≤ i ≤ d-1, 0 elsewhere
    std::vector<Index> quotient_dims;   // dim (A/I)_i
    std::vector<Index> pairing_ranks;   // rank of (A/I)_j x (A/I)_{d-j} → (A/I)_d
    bool formula_holds = false;
    bool pairing_nondegenerate = false;
};

/// Throws NotOrientableManifold, or FormulaMismatch if either check fails.
template <class Field>
NovikSwartzReport novik_swartz_check(const SimplicialComplex& complex, const Field& field, std::uint64_t seed);

struct KalaiReport {
    GradedVector h_prime;
    GradedVector h_doubleprime;
    GradedVector g_doubleprime;
    MSequenceResult m_sequence;
};

/// Throws NotOrientableManifold.
template <class Field>
KalaiReport kalai_g_check(const SimplicialComplex& complex, const Field& field, std::uint64_t seed);

/// Symmetric lift of F_p entries to integers; rational input is returned unchanged.
Matrix<Rational> lift_to_rational(const Matrix<Fp>& m);
Vector<Rational> lift_to_rational(const Vector<Fp>& v);

}  // namespace srlab
