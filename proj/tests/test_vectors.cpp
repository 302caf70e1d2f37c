#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "srlab/complex.hpp"
#include "srlab/errors.hpp"
#include "srlab/vectors.hpp"

using namespace srlab;

namespace {

GradedVector hv(std::vector<long long> v) { return make_vector(VectorKind::H, v); }

std::vector<long long> as_ll(const GradedVector& v) {
    std::vector<long long> out;
    for (const auto& x : v.entries) out.push_back(x.convert_to<long long>());
    return out;
}

}  // namespace

TEST_CASE("f-vectors") {
    CHECK(to_string(f_vector(boundary_simplex(3))) == "4,6,4");
    CHECK(to_string(f_vector(cross_polytope_boundary(3))) == "6,12,8");
    CHECK(to_string(f_vector(kuehnel_torus())) == "7,21,14");
}

TEST_CASE("f to h against polynomial expansion") {
    CHECK(to_string(f_to_h(make_vector(VectorKind::F, {4, 6, 4}), 3)) == "1,1,1,1");
    CHECK(to_string(f_to_h(make_vector(VectorKind::F, {6, 12, 8}), 3)) == "1,3,3,1");
    CHECK(to_string(f_to_h(make_vector(VectorKind::F, {7, 21, 14}), 3)) == "1,4,10,-1");
    CHECK_THROWS_AS(f_to_h(make_vector(VectorKind::F, {4, 6}), 3), Error);

    std::mt19937_64 rng(3);
    for (int len = 1; len <= 12; ++len) {
        for (int t = 0; t < 10; ++t) {
            std::vector<long long> f(static_cast<std::size_t>(len));
            for (auto& x : f) x = static_cast<long long>(rng() % 1000);
            const auto gf = make_vector(VectorKind::F, f);
            const auto h = f_to_h(gf, static_cast<std::size_t>(len));
            CHECK(as_ll(h) == oracle::h_from_f(f, len));
            CHECK(h_to_f(h, static_cast<std::size_t>(len)) == gf);
            // Euler relation: Σ (-1)^i f_i = 1 + (-1)^{d-1} h_d.
            long long euler = 0;
            for (int i = 0; i < len; ++i) euler += (i % 2 ? -1 : 1) * f[static_cast<std::size_t>(i)];
            CHECK(Integer(euler) == 1 + ((len - 1) % 2 ? -1 : 1) * h[static_cast<std::size_t>(len)]);
        }
    }
}

TEST_CASE("g-vectors") {
    CHECK(to_string(g_vector(hv({1, 1, 1, 1}))) == "1,0");
    CHECK(to_string(g_vector(hv({1, 3, 3, 1}))) == "1,2");
    CHECK(to_string(g_vector(hv({1, 2, 2, 1}))) == "1,1");
    CHECK(to_string(g_vector(hv({1, 5, 12, 5, 1}))) == "1,4,7");
}

TEST_CASE("pseudopowers") {
    CHECK(pseudopower(0, 3) == 0);
    CHECK(pseudopower(3, 1) == 6);
    CHECK(pseudopower(4, 2) == 5);
    CHECK_THROWS_AS(pseudopower(3, 0), Error);
    for (long long a = 0; a <= 300; ++a)
        for (long long i = 1; i <= 6; ++i) {
            const auto p = pseudopower(a, i);
            CHECK(p == oracle::pseudopower(a, i));
            CHECK(p >= a);
            CHECK(pseudopower(a + 1, i) >= p);
        }
}

TEST_CASE("binomial expansions reconstruct their argument") {
    for (long long a = 0; a <= 2000; ++a) {
        for (long long i = 1; i <= 8; ++i) {
            const auto terms = binomial_expansion(a, i);
            Integer total = 0;
            long long prev_top = std::numeric_limits<long long>::max(), prev_k = i + 1;
            for (const auto& [top, k] : terms) {
                total += binomial(top, k);
                CHECK(top < prev_top);
                CHECK(k == prev_k - 1);
                CHECK(top >= k);
                prev_top = top;
                prev_k = k;
            }
            CHECK(total == a);
        }
    }
}

TEST_CASE("M-sequences") {
    CHECK(is_m_sequence(make_vector(VectorKind::Other, {1, 2, 3, 4})).ok);
    const auto r = is_m_sequence(make_vector(VectorKind::Other, {1, 0, 1}));
    CHECK_FALSE(r.ok);
    CHECK(r.first_failure == 2u);
    const auto r0 = is_m_sequence(make_vector(VectorKind::Other, {2, 1}));
    CHECK_FALSE(r0.ok);
    CHECK(r0.first_failure == 0u);
    CHECK(is_m_sequence(make_vector(VectorKind::Other, {1, 3})).ok);
    CHECK_FALSE(is_m_sequence(make_vector(VectorKind::Other, {1, 2, 4})).ok);
    CHECK_FALSE(is_m_sequence(make_vector(VectorKind::Other, {1, 2, -1})).ok);
}

TEST_CASE("g-theorem conditions") {
    const auto a = check_g_conditions(hv({1, 3, 3, 1}));
    CHECK(a.dehn_sommerville);
    CHECK(a.unimodal);
    CHECK(a.g_is_m);
    CHECK_FALSE(check_g_conditions(hv({1, 4, 10, -1})).dehn_sommerville);
    CHECK(check_g_conditions(hv({1, 1, 1, 1})).all());
    CHECK_FALSE(check_g_conditions(hv({1, 3, 2, 3, 1})).unimodal);
}

TEST_CASE("GKS inequality") {
    const auto b = gks_inequality(boundary_simplex(3));
    CHECK(b.lhs == 4);
    CHECK(b.rhs == 24);
    CHECK(b.holds);
    const auto t = gks_inequality(kuehnel_torus());
    CHECK(t.lhs == 14);
    CHECK(t.rhs == 84);
    const auto g = gks_inequality(cycle_graph(5));
    CHECK(g.lhs == 5);
    CHECK(g.rhs == 15);
    CHECK(g.holds);
}

TEST_CASE("Pachner g-law") {
    const auto b = boundary_simplex(3);
    const auto m = find_bistellar_moves(b, 0).front();
    const auto after = apply_bistellar(b, m);
    const auto r = pachner_g_delta(b, after, m);
    CHECK(to_string(r.before) == "1,0");
    CHECK(to_string(r.after) == "1,1");
    CHECK(pachner_g_delta(after, b, reverse(m, 2)).after == r.before);

    const auto o = cross_polytope_boundary(3);
    const auto m1 = find_bistellar_moves(o, 1).front();
    const auto flip = pachner_g_delta(o, apply_bistellar(o, m1), m1);
    CHECK(to_string(flip.after) == "1,2");
    CHECK_THROWS_AS(pachner_g_delta(b, b, m), Error);

    for (int D : {2, 3, 4}) {
        const auto walk = random_pachner_walk(boundary_simplex(D + 1), 25, 100 + static_cast<unsigned>(D));
        for (std::size_t s = 1; s < walk.size(); ++s) {
            CHECK_NOTHROW(pachner_g_delta(walk[s - 1].complex, walk[s].complex, *walk[s].move));
            CHECK(check_g_conditions(h_vector(walk[s].complex)).all());
        }
    }
}
