#include "srlab/toric.hpp"

#include <numeric>

#include "srlab/homology.hpp"

namespace srlab {

Fan make_fan(int dimension, std::vector<std::vector<long long>> rays, std::vector<Face> cones) {
    if (dimension < 1) throw Error(ErrorCode::InvalidFan, "fan dimension must be at least 1");
    Fan fan;
    fan.dimension = dimension;
    for (std::size_t r = 0; r < rays.size(); ++r) {
        auto& ray = rays[r];
        if (static_cast<int>(ray.size()) != dimension)
            throw Error(ErrorCode::InvalidFan, "ray " + std::to_string(r + 1) + " has the wrong length");
        long long g = 0;
        for (long long x : ray) g = std::gcd(g, x);
        if (g == 0) throw Error(ErrorCode::InvalidFan, "ray " + std::to_string(r + 1) + " is zero");
        if (g > 1) {
            for (long long& x : ray) x /= g;
            fan.warnings.push_back("ray " + std::to_string(r + 1) + " divided by " + std::to_string(g));
        }
    }
    fan.rays = std::move(rays);
    const auto m = static_cast<Vertex>(fan.rays.size());
    for (auto& cone : cones) {
        cone = make_face(cone);
        for (Vertex i : cone)
            if (i < 1 || i > m) throw Error(ErrorCode::InvalidFan, "cone refers to ray " + std::to_string(i));
        Matrix<Rational> gens(dimension, static_cast<Index>(cone.size()));
        for (std::size_t k = 0; k < cone.size(); ++k)
            for (int row = 0; row < dimension; ++row)
                gens(row, static_cast<Index>(k)) = Rational(fan.rays[static_cast<std::size_t>(cone[k] - 1)][static_cast<std::size_t>(row)]);
        if (rank(gens) != static_cast<Index>(cone.size())) throw Error(ErrorCode::InvalidFan, "a cone is not simplicial");
    }
    fan.cones = std::move(cones);
    return fan;
}

SimplicialComplex underlying_complex(const Fan& fan) {
    const SimplicialComplex complex(fan.cones);
    const int d = fan.dimension;
    if (complex.num_vertices() != static_cast<int>(fan.rays.size()))
        throw Error(ErrorCode::InvalidFan, "some ray lies in no cone");
    if (!complex.is_pure() || complex.dim() != d - 1)
        throw Error(ErrorCode::InvalidFan, "maximal cones must all have dimension " + std::to_string(d));
    for (const auto& wall : complex.faces(d - 2)) {
        int count = 0;
        for (const auto& cone : complex.faces(d - 1)) count += is_subset(wall, cone) ? 1 : 0;
        if (count != 2) throw Error(ErrorCode::InvalidFan, "a wall borders " + std::to_string(count) + " maximal cones");
    }
    if (!is_homology_sphere(complex, RationalField{}))
        throw Error(ErrorCode::InvalidFan, "fan is not complete: Δ_Σ is not a homology sphere");
    return complex;
}

Matrix<Rational> ray_matrix(const Fan& fan) {
    Matrix<Rational> m(fan.dimension, static_cast<Index>(fan.rays.size()));
    for (std::size_t c = 0; c < fan.rays.size(); ++c)
        for (int r = 0; r < fan.dimension; ++r) m(r, static_cast<Index>(c)) = Rational(fan.rays[c][static_cast<std::size_t>(r)]);
    return m;
}

GradedVector toric_betti(const Fan& fan) {
    const SimplicialComplex complex = underlying_complex(fan);
    const GradedQuotient<RationalField> q(complex, ray_matrix(fan), RationalField{});
    return q.dims_vector(VectorKind::Betti);
}

ToricMReport toric_m_check(const Fan& fan) {
    ToricMReport r;
    r.betti = toric_betti(fan);
    r.differences = g_vector(r.betti, VectorKind::G);
    r.m_sequence = is_m_sequence(r.differences);
    const std::size_t d = r.betti.size() - 1;
    r.symmetric = true;
    for (std::size_t i = 0; i <= d; ++i) r.symmetric = r.symmetric && r.betti[i] == r.betti[d - i];
    return r;
}

ToricWleReport toric_wle(const Fan& fan, std::uint64_t seed, int max_tries) {
    const SimplicialComplex complex = underlying_complex(fan);
    const RationalField field;
    const GradedQuotient<RationalField> q(complex, ray_matrix(fan), field);
    ToricWleReport r;
    for (int trial = 0; trial < max_tries; ++trial) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        Vector<Rational> omega = random_vector(field, complex.num_vertices(), rng);
        auto verdicts = wle_verdicts(q, omega);
        r.tries = trial + 1;
        bool ok = true;
        for (const auto& v : verdicts) ok = ok && v.ok();
        r.verdicts = std::move(verdicts);
        if (ok) {
            r.found = true;
            r.omega = std::move(omega);
            return r;
        }
    }
    return r;
}

Fan projective_plane_fan() { return make_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{1, 2}, {2, 3}, {1, 3}}); }

Fan product_of_lines_fan() {
    return make_fan(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
}

Fan projective_line_fan() { return make_fan(1, {{1}, {-1}}, {{1}, {2}}); }

}  // namespace srlab
