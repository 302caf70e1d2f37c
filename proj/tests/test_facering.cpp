#include <doctest.h>

#include <random>

#include "srlab/complex.hpp"
#include "srlab/errors.hpp"
#include "srlab/face_ring.hpp"
#include "srlab/vectors.hpp"

using namespace srlab;

namespace {

const RationalField Q;
const PrimeField P;

std::vector<long long> as_ll(const GradedVector& v) {
    std::vector<long long> out;
    for (const auto& x : v.entries) out.push_back(x.convert_to<long long>());
    return out;
}

std::vector<long long> as_ll(const std::vector<Index>& v) { return {v.begin(), v.end()}; }

SimplicialComplex reversed(const SimplicialComplex& c) {
    std::vector<Face> fs;
    for (const auto& f : c.facets()) {
        Face g;
        for (Vertex v : f) g.push_back(c.max_label() + 1 - v);
        fs.push_back(make_face(g));
    }
    return SimplicialComplex(fs);
}

std::vector<SimplicialComplex> cm_fixtures() {
    std::vector<SimplicialComplex> out;
    for (int n = 2; n <= 5; ++n) out.push_back(boundary_simplex(n));
    for (int d = 2; d <= 4; ++d) out.push_back(cross_polytope_boundary(d));
    out.push_back(join(boundary_simplex(2), relabel(boundary_simplex(2), 3)));
    out.push_back(join(boundary_simplex(1), relabel(boundary_simplex(3), 2)));
    const auto walk = random_pachner_walk(boundary_simplex(4), 12, 5);
    out.push_back(walk.back().complex);
    return out;
}

template <class Field>
std::vector<long long> reduction_dims(const SimplicialComplex& c, const Field& field, std::uint64_t seed,
                                      ReductionMethod method = ReductionMethod::Squarefree) {
    std::mt19937_64 rng(seed);
    const auto sys = random_lsop(c, field, rng);
    return as_ll(artinian_reduction(c, sys, field, method).dims());
}

}  // namespace

TEST_CASE("is_lsop") {
    const auto b = boundary_simplex(3);
    CHECK_FALSE(is_lsop(b, Matrix<Rational>(zero_matrix(Q, 3, 4))));
    CHECK(is_lsop(simplex(2), Matrix<Rational>(Matrix<Rational>::Identity(3, 3))));
    std::mt19937_64 rng(1);
    CHECK(is_lsop(cross_polytope_boundary(3), random_matrix(Q, 3, 6, rng)));
    CHECK_THROWS_AS(is_lsop(b, Matrix<Rational>(zero_matrix(Q, 2, 4))), Error);
}

TEST_CASE("is_generic") {
    Matrix<Rational> a(2, 3);
    a << 1, 0, 1, 0, 1, 1;
    const auto r = is_generic(a);
    CHECK(r.generic);
    CHECK(r.exhaustive);
    CHECK(r.minors_checked == 3);
    Matrix<Rational> z = a;
    z.col(1).setZero();
    CHECK_FALSE(is_generic(z).generic);
    Matrix<Rational> v(3, 6);
    for (Index c = 0; c < 6; ++c)
        for (Index r2 = 0; r2 < 3; ++r2) v(r2, c) = Rational(r2 == 0 ? 1 : r2 == 1 ? c + 1 : (c + 1) * (c + 1));
    CHECK(is_generic(v).generic);
    std::mt19937_64 rng(2);
    const Matrix<Rational> big = random_matrix(Q, 4, 60, rng);
    const auto sampled = is_generic(big, 9);
    CHECK(sampled.generic);
    CHECK_FALSE(sampled.exhaustive);
}

TEST_CASE("random_lsop") {
    const auto b = boundary_simplex(3);
    std::mt19937_64 r1(0), r2(0);
    const auto s1 = random_lsop(b, Q, r1);
    CHECK(is_lsop(b, s1.theta));
    CHECK(s1.theta == random_lsop(b, Q, r2).theta);
    const SimplicialComplex pts({{1}, {2}, {3}});
    std::mt19937_64 r3(4);
    const auto s3 = random_lsop(pts, Q, r3);
    CHECK(s3.theta.rows() == 1);
    for (Index c = 0; c < 3; ++c) CHECK_FALSE(is_zero(s3.theta(0, c)));
    // F_2^2 has only three nonzero vectors, so four pairwise independent columns cannot exist.
    std::mt19937_64 r4(0);
    CHECK_THROWS_AS(random_lsop(cycle_graph(4), PrimeField{2}, r4, true), Error);
}

TEST_CASE("Artinian reduction dims equal h on Cohen-Macaulay fixtures") {
    for (const auto& c : cm_fixtures()) {
        const auto h = as_ll(h_vector(c));
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            CHECK(reduction_dims(c, Q, seed) == h);
            CHECK(reduction_dims(c, P, seed) == h);
        }
    }
    CHECK(reduction_dims(boundary_simplex(3), Q, 0) == std::vector<long long>{1, 1, 1, 1});
    CHECK(reduction_dims(cross_polytope_boundary(3), Q, 0) == std::vector<long long>{1, 3, 3, 1});
    CHECK(reduction_dims(kuehnel_torus(), Q, 0) == std::vector<long long>{1, 4, 10, 1});
}

TEST_CASE("full Macaulay construction agrees and vanishes above d") {
    for (const auto& c : {boundary_simplex(3), cross_polytope_boundary(3), kuehnel_torus(), real_projective_plane()}) {
        std::mt19937_64 rng(8);
        const auto sys = random_lsop(c, Q, rng);
        const GradedQuotient<RationalField> sq(c, sys.theta, Q);
        const GradedQuotient<RationalField> full(c, sys.theta, Q, ReductionMethod::FullMacaulay, c.dim() + 2);
        CHECK(full.dim(c.dim() + 2) == 0);
        for (int i = 0; i <= c.dim() + 1; ++i) {
            CHECK(sq.dim(i) == full.dim(i));
            // Squarefree face monomials span each graded piece.
            Matrix<Rational> classes(full.dim(i), static_cast<Index>(c.num_faces(i - 1)));
            Index k = 0;
            for (const auto& f : c.faces(i - 1)) classes.col(k++) = full.face_monomial_class(f);
            CHECK(rank(classes) == full.dim(i));
        }
    }
}

TEST_CASE("dims do not depend on vertex order") {
    for (const auto& c : {cross_polytope_boundary(3), kuehnel_torus(), random_pachner_walk(boundary_simplex(3), 10, 2).back().complex})
        for (std::uint64_t seed = 0; seed < 3; ++seed) CHECK(reduction_dims(c, Q, seed) == reduction_dims(reversed(c), Q, seed));
}

TEST_CASE("NotLsop") {
    CHECK_THROWS_AS(GradedQuotient<RationalField>(boundary_simplex(3), zero_matrix(Q, 3, 4), Q), Error);
}

TEST_CASE("multiplication maps") {
    const auto b = boundary_simplex(3);
    std::mt19937_64 rng(3);
    const auto sys = random_lsop(b, Q, rng);
    const GradedQuotient<RationalField> q(b, sys.theta, Q);
    const auto zero = q.multiplication_map(zero_vector(Q, 4), 1);
    CHECK(zero.rows() == 1);
    CHECK(is_zero(zero(0, 0)));
    const auto w = random_vector(Q, 4, rng);
    const auto m1 = q.multiplication_map(w, 1);
    REQUIRE(m1.rows() == 1);
    REQUIRE(m1.cols() == 1);
    CHECK_FALSE(is_zero(m1(0, 0)));
    CHECK_THROWS_AS(q.multiplication_map(w, 3), Error);
    CHECK_THROWS_AS(q.multiplication_map(w, -1), Error);

    for (const auto& c : {cross_polytope_boundary(3), kuehnel_torus(), cross_polytope_boundary(4)}) {
        std::mt19937_64 r(4);
        const auto s = random_lsop(c, Q, r);
        const GradedQuotient<RationalField> qc(c, s.theta, Q);
        const auto m = static_cast<Index>(c.num_vertices());
        const auto a = random_vector(Q, m, r), bb = random_vector(Q, m, r);
        const Rational x(3), y(-7);
        for (int i = 0; i + 1 < qc.top_degree(); ++i) {
            const Vector<Rational> comb = x * a + y * bb;
            const Matrix<Rational> lin = x * qc.multiplication_map(a, i) + y * qc.multiplication_map(bb, i);
            CHECK(qc.multiplication_map(comb, i) == lin);
            const Matrix<Rational> ab = qc.multiplication_map(a, i + 1) * qc.multiplication_map(bb, i);
            const Matrix<Rational> ba = qc.multiplication_map(bb, i + 1) * qc.multiplication_map(a, i);
            CHECK(ab == ba);
        }
    }
}

TEST_CASE("socle") {
    for (const auto& c : {boundary_simplex(3), cross_polytope_boundary(3), boundary_simplex(5)}) {
        std::mt19937_64 rng(6);
        const auto sys = random_lsop(c, Q, rng);
        const auto soc = socle(GradedQuotient<RationalField>(c, sys.theta, Q));
        std::vector<Index> expected(static_cast<std::size_t>(c.dim() + 2), 0);
        expected.back() = 1;
        CHECK(soc.dims == expected);
    }
    std::mt19937_64 rng(7);
    const auto t = kuehnel_torus();
    const auto sys = random_lsop(t, Q, rng);
    const auto soc = socle(GradedQuotient<RationalField>(t, sys.theta, Q));
    CHECK(as_ll(soc.dims) == std::vector<long long>{0, 0, 6, 1});
}

TEST_CASE("face monomial classes") {
    const auto b = boundary_simplex(3);
    std::mt19937_64 rng(2);
    const auto sys = random_lsop(b, Q, rng);
    const GradedQuotient<RationalField> q(b, sys.theta, Q);
    const auto one = q.face_monomial_class({});
    REQUIRE(one.size() == 1);
    CHECK(one(0) == 1);
    for (const auto& f : b.facets()) CHECK_FALSE(is_zero(q.face_monomial_class(f)(0)));
    CHECK_THROWS_AS(q.face_monomial_class({1, 2, 3, 4}), Error);
    CHECK(q.coordinates(Monomial{0, 1, 2, 3}).size() == 0);
}

TEST_CASE("Hilbert function and series") {
    CHECK(to_string(hilbert_function(simplex(0), 5)) == "1,1,1,1,1,1");
    CHECK(to_string(hilbert_function(boundary_simplex(3), 4)) == "1,4,10,20,34");
    const auto s = hilbert_series(boundary_simplex(3));
    CHECK(to_string(s.numerator) == "1,1,1,1");
    CHECK(s.denominator_exponent == 3);
    for (const auto& c : {boundary_simplex(3), cross_polytope_boundary(4), kuehnel_torus(), real_projective_plane(),
                          simplex(0), SimplicialComplex({{1, 2, 3}, {3, 4}, {5}}), cycle_graph(6)}) {
        const int top = c.dim() + 4;
        CHECK(hilbert_function(c, top) == hilbert_series(c).expand(top));
        // Direct count: degree-i monomials with face support.
        const PositionFaces pf(c);
        for (int i = 0; i <= 4; ++i)
            CHECK(hilbert_function(c, top)[static_cast<std::size_t>(i)] == static_cast<long long>(face_support_monomials(pf, i).size()));
    }
}
