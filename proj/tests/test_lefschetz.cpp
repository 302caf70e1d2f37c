#include <doctest.h>

#include "srlab/complex.hpp"
#include "srlab/errors.hpp"
#include "srlab/homology.hpp"
#include "srlab/lefschetz.hpp"
#include "transfer_cases.hpp"

using namespace srlab;

namespace {

const RationalField Q;
const PrimeField P;

std::vector<long long> as_ll(const GradedVector& v) {
    std::vector<long long> out;
    for (const auto& x : v.entries) out.push_back(x.convert_to<long long>());
    return out;
}

template <class Field>
LinearSystem<typename Field::Scalar> random_system(const SimplicialComplex& c, const Field& field, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto sys = random_lsop(c, field, rng);
    sys.omega = random_vector(field, c.num_vertices(), rng);
    return sys;
}

}  // namespace

TEST_CASE("check_wle") {
    const auto b = boundary_simplex(3);
    const auto cert = check_wle(b, random_system(b, Q, 1), Q);
    CHECK(cert.passed());
    for (const auto& v : cert.verdicts) CHECK(v.kind() == "bijective");

    auto zero = random_system(b, Q, 1);
    zero.omega = zero_vector(Q, 4);
    const auto fail = check_wle(b, zero, Q);
    CHECK_FALSE(fail.passed());
    CHECK(fail.first_failure() == 0);

    const auto o = cross_polytope_boundary(3);
    const auto oc = check_wle(o, random_system(o, Q, 2), Q);
    REQUIRE(oc.verdicts.size() == 3);
    CHECK(oc.verdicts[0].kind() == "injective");
    CHECK(oc.verdicts[1].kind() == "bijective");
    CHECK(oc.verdicts[2].kind() == "surjective");

    CHECK_THROWS_AS(check_wle(kuehnel_torus(), random_system(kuehnel_torus(), Q, 0), Q), Error);
    auto no_omega = random_system(b, Q, 1);
    no_omega.omega.reset();
    CHECK_THROWS_AS(check_wle(b, no_omega, Q), Error);
}

TEST_CASE("middle-degree shortcut agrees with the full check") {
    std::vector<SimplicialComplex> spheres{boundary_simplex(3), cross_polytope_boundary(3), cross_polytope_boundary(4)};
    const auto walk = random_pachner_walk(boundary_simplex(4), 10, 3);
    spheres.push_back(walk.back().complex);
    for (const auto& s : spheres) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            // A small prime makes non-WLE draws common enough to exercise both verdicts.
            const PrimeField small{7};
            std::mt19937_64 rng(seed);
            LinearSystem<Fp> sys;
            try {
                sys = random_lsop(s, small, rng);
            } catch (const Error&) {
                continue;
            }
            sys.omega = random_vector(small, s.num_vertices(), rng);
            CHECK(check_wle_middle(s, sys, small) == check_wle(s, sys, small).passed());
        }
    }
    auto zero = random_system(boundary_simplex(3), Q, 0);
    zero.omega = zero_vector(Q, 4);
    CHECK_FALSE(check_wle_middle(boundary_simplex(3), zero, Q));
    CHECK_THROWS_AS(check_wle_middle(kuehnel_torus(), random_system(kuehnel_torus(), Q, 0), Q), Error);
}

TEST_CASE("find_wle") {
    for (int n = 2; n <= 6; ++n) {
        const auto cert = find_wle(boundary_simplex(n), P, 5);
        CHECK(cert.passed());
        CHECK(cert.tries == 1);
    }
    const auto walk = random_pachner_walk(boundary_simplex(4), 15, 8);
    const auto a = find_wle(walk.back().complex, P, 77);
    const auto b = find_wle(walk.back().complex, P, 77);
    CHECK(a.theta == b.theta);
    CHECK(a.omega == b.omega);
    CHECK(a.seed == 77);
    CHECK_THROWS_AS(find_wle(boundary_simplex(3), P, 0, {0, false, true}), Error);
    CHECK_THROWS_AS(find_wle(kuehnel_torus(), P, 0), Error);

    const auto certified = find_wle(cross_polytope_boundary(3), P, 4, {5, true, true});
    CHECK(certified.certified_over_q);
    CHECK(certify_over_rationals(cross_polytope_boundary(3), certified));
    const auto q = find_wle(cross_polytope_boundary(3), Q, 4);
    CHECK(q.passed());
}

TEST_CASE("lift_to_rational") {
    const PrimeField f{101};
    Vector<Fp> v(3);
    v << f.from_int(-3), f.from_int(50), f.from_int(51);
    const auto r = lift_to_rational(v);
    CHECK(r(0) == -3);
    CHECK(r(1) == 50);
    CHECK(r(2) == -50);
}

TEST_CASE("transfer across non-middle moves") {
    // d = 4: the middle index is 2, so 0-, 1-, 3- and 4-moves are non-critical.
    const auto walk = random_pachner_walk(boundary_simplex(4), 8, 12);
    auto sphere = walk.back().complex;
    auto cert = find_wle(sphere, P, 3);
    int unchanged = 0;
    for (int step = 0; step < 10; ++step) {
        BistellarMove move;
        bool found = false;
        for (int i : {0, 1, 3}) {
            const auto moves = find_bistellar_moves(sphere, i);
            if (!moves.empty()) {
                move = moves[static_cast<std::size_t>(step) % moves.size()];
                found = true;
                break;
            }
        }
        REQUIRE(found);
        const auto res = wle_transfer(sphere, cert, move, P);
        const auto recheck = check_wle(res.complex, LinearSystem<Fp>{res.certificate.theta, res.certificate.omega}, P);
        CHECK(recheck.passed());
        unchanged += res.path == TransferPath::Unchanged;
        sphere = res.complex;
        cert = res.certificate;
    }
    CHECK(unchanged >= 1);
}

TEST_CASE("transfer repairs middle failures with a t-scan") {
    const PrimeField f{101};
    const auto found = cases::middle_failures(3, 2024, f);
    REQUIRE(found.size() == 3);
    for (const auto& c : found) {
        const auto res = wle_transfer(c.before, c.certificate, c.move, f);
        CHECK(res.path == TransferPath::Repaired);
        REQUIRE(res.t);
        CHECK(*res.t >= 1);
        CHECK(res.scan_vertex == c.move.tau.front());
        CHECK(res.certificate.theta == c.certificate.theta);
        const auto recheck = check_wle(res.complex, LinearSystem<Fp>{res.certificate.theta, res.certificate.omega}, f);
        CHECK(recheck.passed());
    }
    // An ω that already works is returned unchanged.
    const auto o = cross_polytope_boundary(3);
    const auto cert = find_wle(o, P, 1);
    const auto moves = find_bistellar_moves(o, 1);
    for (const auto& m : moves) {
        const auto res = wle_transfer(o, cert, m, P);
        if (res.path == TransferPath::Unchanged) {
            CHECK(res.certificate.omega == cert.omega);
            CHECK_FALSE(res.t);
        }
        CHECK(check_wle(res.complex, LinearSystem<Fp>{res.certificate.theta, res.certificate.omega}, P).passed());
    }
}

TEST_CASE("rigidity") {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto t = rigidity_check(kuehnel_torus(), Q, seed);
        CHECK(t.dims == std::vector<Index>{1, 4, 10});
        CHECK(t.monotone);
        CHECK(t.rank == 4);
        CHECK(t.injective);
        CHECK_FALSE(t.hypothesis_met);
    }
    const auto b = rigidity_check(boundary_simplex(5), Q, 0);
    CHECK(b.dims == std::vector<Index>{1, 1, 1});
    CHECK(b.injective);
    CHECK(b.hypothesis_met);
    CHECK_THROWS_AS(rigidity_check(SimplicialComplex({{1, 2, 3}, {4, 5, 6}}), Q, 0), Error);
    CHECK_THROWS_AS(rigidity_check(SimplicialComplex({{1, 2, 3}, {2, 3, 4}}), Q, 0), Error);
}

TEST_CASE("face monomial lemmas") {
    for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}) {
        const auto r = lemma35_check(i, j, Q, 3);
        CHECK(r.holds());
        CHECK(r.faces_checked == r.complex.num_faces(j - 1));
        CHECK(r.degree == j);
    }
    CHECK(lemma35_check(1, 1, Q, 0).faces_checked == 4);
    const auto r = lemma36_check(1, cycle_graph(4), 1, Q, 3);
    CHECK(r.holds());
    CHECK(r.faces_checked > 0);
    CHECK(lemma36_check(1, cycle_graph(5), 2, P, 1).holds());
    CHECK_THROWS_AS(lemma36_check(1, SimplicialComplex({{1, 2}, {2, 3}}), 2, Q, 0), Error);
    CHECK_THROWS_AS(lemma36_check(1, cycle_graph(4), 9, Q, 0), Error);
}

TEST_CASE("Schenzel and Kalai vectors") {
    const auto t = kuehnel_torus();
    const auto h = h_vector(t);
    const auto betti = reduced_betti(t, Q);
    CHECK(as_ll(schenzel_h_prime(h, betti)) == std::vector<long long>{1, 4, 10, 1});
    for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(as_ll(h_prime(t, Q, seed)) == std::vector<long long>{1, 4, 10, 1});
    CHECK(as_ll(h_doubleprime(t, Q, 0)) == std::vector<long long>{1, 4, 4, 1});
    CHECK(as_ll(g_doubleprime(t, Q, 0)) == std::vector<long long>{1, 3});

    const auto rp2 = real_projective_plane();
    const auto rp_formula = schenzel_h_prime(h_vector(rp2), reduced_betti(rp2, Q));
    for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(h_prime(rp2, Q, seed) == rp_formula);
    CHECK(as_ll(rp_formula) == std::vector<long long>{1, 3, 6, 0});

    for (const auto& s : {boundary_simplex(4), cross_polytope_boundary(3)}) {
        const auto hs = h_vector(s);
        CHECK(as_ll(h_prime(s, Q, 0)) == as_ll(hs));
        CHECK(as_ll(h_doubleprime(s, Q, 0)) == as_ll(hs));
    }
    CHECK_THROWS_AS(h_prime(SimplicialComplex({{1, 2, 3}, {3, 4}}), Q, 0), Error);
}

TEST_CASE("Novik-Swartz socle") {
    const auto r = novik_swartz_check(kuehnel_torus(), Q, 0);
    CHECK(r.socle_dims[1] == 0);
    CHECK(r.socle_dims[2] == 6);
    CHECK(r.quotient_dims == std::vector<Index>{1, 4, 4, 1});
    CHECK(r.pairing_ranks == std::vector<Index>{1, 4, 4, 1});
    CHECK(r.formula_holds);
    CHECK(r.pairing_nondegenerate);

    const auto s = novik_swartz_check(boundary_simplex(3), Q, 0);
    CHECK(s.socle_dims == std::vector<Index>{0, 0, 0, 1});
    CHECK(s.pairing_nondegenerate);

    // Bistellar moves keep the torus a manifold; the formula still holds.
    auto perturbed = kuehnel_torus();
    const auto walk = random_pachner_walk(perturbed, 4, 9);
    perturbed = walk.back().complex;
    CHECK(is_homology_manifold(perturbed, Q));
    const auto p = novik_swartz_check(perturbed, Q, 1);
    CHECK(p.socle_dims[2] == 6);
    CHECK(p.pairing_nondegenerate);

    CHECK_THROWS_AS(novik_swartz_check(real_projective_plane(), Q, 0), Error);
}

TEST_CASE("Kalai g''") {
    const auto t = kalai_g_check(kuehnel_torus(), Q, 0);
    CHECK(as_ll(t.g_doubleprime) == std::vector<long long>{1, 3});
    CHECK(t.m_sequence.ok);
    const auto o = cross_polytope_boundary(4);
    const auto s = kalai_g_check(o, Q, 0);
    CHECK(s.g_doubleprime.entries == g_vector(h_vector(o)).entries);
    CHECK(s.m_sequence.ok);
    CHECK(as_ll(kalai_g_check(boundary_simplex(4), Q, 0).g_doubleprime) == std::vector<long long>{1, 0, 0});
}
