#pragma once

// Complete simplicial fans and the graded Betti numbers of their toric
// varieties: H^{2i}(X_Σ; Q) is the degree-i piece of Q[Δ_Σ] modulo the
// linear forms read off the rays.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srlab/complex.hpp"
#include "srlab/lefschetz.hpp"
#include "srlab/vectors.hpp"

namespace srlab {

struct Fan {
    int dimension = 0;
    std::vector<std::vector<long long>> rays;  // primitive integer generators
    std::vector<Face> cones;                    // 1-based ray indices
    std::vector<std::string> warnings;
};

/// Validates shapes and index ranges, primitivizes rays (with a warning) and
/// checks each cone is simplicial.  Throws InvalidFan.
Fan make_fan(int dimension, std::vector<std::vector<long long>> rays, std::vector<Face> cones);

/// Complex on ray indices 1..m whose faces are the cones.  Completeness is
/// checked through two proxies: the complex is a homology (d-1)-sphere over Q,
/// and every (d-1)-cone lies in exactly two d-cones.  Throws InvalidFan.
SimplicialComplex underlying_complex(const Fan& fan);

/// d x m matrix whose column i is the ray λ_i.
Matrix<Rational> ray_matrix(const Fan& fan);

/// dim H^{2i}(X_Σ; Q) for i = 0..d; odd cohomology vanishes.  Throws InvalidFan or NotLsop.
GradedVector toric_betti(const Fan& fan);

struct ToricMReport {
    GradedVector betti;
    GradedVector differences;  // (1, μ_1-μ_0, ..., μ_⌊d/2⌋-μ_⌊d/2⌋-1)
    MSequenceResult m_sequence;
    bool symmetric = false;
};

ToricMReport toric_m_check(const Fan& fan);

struct ToricWleReport {
    bool found = false;
    int tries = 0;
    std::optional<Vector<Rational>> omega;
    std::vector<DegreeVerdict> verdicts;
};

/// Searches ω for the fixed ray system Θ; Θ is never resampled.
ToricWleReport toric_wle(const Fan& fan, std::uint64_t seed, int max_tries = 5);

// Fixtures.
Fan projective_plane_fan();
Fan product_of_lines_fan();
Fan projective_line_fan();

}  // namespace srlab
