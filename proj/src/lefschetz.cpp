#include "srlab/lefschetz.hpp"

#include <type_traits>

namespace srlab {

std::string_view DegreeVerdict::kind() const {
    if (injective && surjective) return "bijective";
    if (injective) return "injective";
    if (surjective) return "surjective";
    return "neither";
}

std::string_view path_name(TransferPath path) {
    switch (path) {
        case TransferPath::Unchanged: return "unchanged";
        case TransferPath::Repaired: return "repaired";
        case TransferPath::Resampled: return "resampled";
    }
    return "unknown";
}

Matrix<Rational> lift_to_rational(const Matrix<Fp>& m) {
    Matrix<Rational> out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            const std::uint64_t p = m(i, j).prime(), r = m(i, j).residue();
            if (p == 0) out(i, j) = Rational(static_cast<long long>(r));
            else if (r > p / 2) out(i, j) = -Rational(Integer(p - r));
            else out(i, j) = Rational(Integer(r));
        }
    }
    return out;
}

Vector<Rational> lift_to_rational(const Vector<Fp>& v) {
    Matrix<Fp> m = v;
    return lift_to_rational(m).col(0);
}

namespace {

Matrix<Rational> lift_to_rational(const Matrix<Rational>& m) { return m; }
Vector<Rational> lift_to_rational(const Vector<Rational>& v) { return v; }

// Integers uniform in [-2^31, 2^31], mapped into the field.
template <class Field, class Rng>
Matrix<typename Field::Scalar> integer_box_matrix(const Field& field, Index rows, Index cols, Rng& rng) {
    std::uniform_int_distribution<long long> dist(-(1LL << 31), 1LL << 31);
    Matrix<typename Field::Scalar> m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = field.from_int(dist(rng));
    return m;
}

template <class S>
bool nonzero(const Vector<S>& v) {
    for (Index i = 0; i < v.size(); ++i)
        if (!is_zero(v(i))) return true;
    return false;
}

bool needs_generic_check(const SimplicialComplex& complex) {
    return binomial(complex.num_vertices(), complex.dim() + 1) <= 100000;
}

void require_orientable_manifold(const SimplicialComplex& complex, const LinkHomology& lh) {
    if (!is_connected(complex) || !lh.is_homology_manifold() || lh.global().at(complex.dim()) != 1)
        throw Error(ErrorCode::NotOrientableManifold, "needs a connected orientable homology manifold");
}

template <class Field>
FaceMonomialReport face_generation(const SimplicialComplex& delta, int j, std::optional<Vertex> through,
                                   const Field& field, std::uint64_t seed) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        const auto theta = random_matrix(field, delta.dim() + 1, delta.num_vertices(), rng);
        if (!is_lsop(delta, theta) || !is_generic(theta)) continue;
        GradedQuotient<Field> q(delta, theta, field, ReductionMethod::Squarefree, j);
        if (q.dim(j) != 1)
            throw Error(ErrorCode::HypothesisViolated,
                        "degree " + std::to_string(j) + " has dimension " + std::to_string(q.dim(j)) + ", expected 1");
        FaceMonomialReport r{delta, j, 0, 0};
        for (const auto& sigma : delta.faces(j - 1)) {
            if (through && !std::binary_search(sigma.begin(), sigma.end(), *through)) continue;
            ++r.faces_checked;
            if (nonzero(q.face_monomial_class(sigma))) ++r.nonzero;
        }
        return r;
    }
    throw Error(ErrorCode::GenericityExhausted, "no generic Θ in 32 draws");
}

struct BuchsbaumData {
    BettiProfile betti;
    GradedVector h_prime;
};

template <class Field>
BuchsbaumData buchsbaum_data(const SimplicialComplex& complex, const Field& field, std::uint64_t seed) {
    const LinkHomology lh(complex, FieldSpec{field});
    if (!lh.is_buchsbaum()) throw Error(ErrorCode::NotBuchsbaum, "complex is not Buchsbaum over " + field.name());
    const GradedVector formula = schenzel_h_prime(h_vector(complex), lh.global());
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        const auto sys = random_lsop(complex, field, rng);
        const GradedQuotient<Field> q(complex, sys.theta, field);
        if (q.dims_vector(VectorKind::HPrime) == formula) return {lh.global(), formula};
    }
    throw Error(ErrorCode::SchenzelMismatch, "ring dimensions never matched " + to_string(formula));
}

}  // namespace

template <class Field>
std::vector<DegreeVerdict> wle_verdicts(const GradedQuotient<Field>& q, const Vector<typename Field::Scalar>& omega) {
    std::vector<DegreeVerdict> out;
    for (int i = 0; i < q.top_degree(); ++i) {
        DegreeVerdict v;
        v.degree = i;
        v.dim_from = q.dim(i);
        v.dim_to = q.dim(i + 1);
        v.rank = rank(q.multiplication_map(omega, i));
        v.injective = v.rank == v.dim_from;
        v.surjective = v.rank == v.dim_to;
        out.push_back(v);
    }
    return out;
}

template <class Field>
bool middle_surjective(const GradedQuotient<Field>& q, const Vector<typename Field::Scalar>& omega) {
    const int n = q.top_degree() / 2;
    if (n >= q.top_degree()) return true;
    return rank(q.multiplication_map(omega, n)) == q.dim(n + 1);
}

template <class Field>
CertificateFor<Field> check_wle(const SimplicialComplex& complex, const LinearSystem<typename Field::Scalar>& system,
                                const Field& field) {
    if (!system.omega) throw Error(ErrorCode::ShapeMismatch, "check_wle needs ω");
    if (!is_lsop(complex, system.theta)) throw Error(ErrorCode::NotLsop, "Θ is not an l.s.o.p.");
    if (!is_cohen_macaulay(complex, FieldSpec{field}))
        throw Error(ErrorCode::NotCohenMacaulay, "complex is not Cohen-Macaulay over " + field.name());
    const GradedQuotient<Field> q(complex, system.theta, field);
    return {system.theta, *system.omega, wle_verdicts(q, *system.omega), field.name(), 0, 0, false};
}

template <class Field>
bool check_wle_middle(const SimplicialComplex& complex, const LinearSystem<typename Field::Scalar>& system,
                      const Field& field) {
    if (!system.omega) throw Error(ErrorCode::ShapeMismatch, "check_wle_middle needs ω");
    if (!is_gorenstein_star(complex, FieldSpec{field}))
        throw Error(ErrorCode::NotGorensteinStar, "complex is not Gorenstein* over " + field.name());
    const GradedQuotient<Field> q(complex, system.theta, field);
    return middle_surjective(q, *system.omega);
}

template <class S>
bool certify_over_rationals(const SimplicialComplex& complex, const WlpCertificate<S>& certificate) {
    const Matrix<Rational> theta = lift_to_rational(certificate.theta);
    const Vector<Rational> omega = lift_to_rational(certificate.omega);
    if (!is_lsop(complex, theta)) return false;
    const GradedQuotient<RationalField> q(complex, theta, RationalField{});
    for (const auto& v : wle_verdicts(q, omega))
        if (!v.ok()) return false;
    return true;
}

template <class Field>
CertificateFor<Field> find_wle(const SimplicialComplex& complex, const Field& field, std::uint64_t seed,
                               const SearchOptions& options) {
    if (options.check_hypotheses && !is_cohen_macaulay(complex, FieldSpec{field}))
        throw Error(ErrorCode::NotCohenMacaulay, "complex is not Cohen-Macaulay over " + field.name());
    const Index d = complex.dim() + 1, m = complex.num_vertices();
    const bool generic_check = needs_generic_check(complex);
    for (int trial = 0; trial < options.max_tries; ++trial) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        const auto theta = options.certify ? integer_box_matrix(field, d, m, rng) : random_matrix(field, d, m, rng);
        if (!is_lsop(complex, theta)) continue;
        if (generic_check && !is_generic(theta)) continue;
        const Vector<typename Field::Scalar> omega =
            options.certify ? integer_box_matrix(field, m, 1, rng).col(0) : random_vector(field, m, rng);
        const GradedQuotient<Field> q(complex, theta, field);
        CertificateFor<Field> cert{theta, omega, wle_verdicts(q, omega), field.name(), seed, trial + 1, false};
        if (!cert.passed()) continue;
        if (options.certify) {
            if (!certify_over_rationals(complex, cert)) continue;
            cert.certified_over_q = true;
        }
        return cert;
    }
    throw Error(ErrorCode::SearchExhausted, "no weak Lefschetz element in " + std::to_string(options.max_tries) + " tries");
}

template <class Field>
TransferResult<Field> wle_transfer(const SimplicialComplex& before, const CertificateFor<Field>& certificate,
                                   const BistellarMove& move, const Field& field, int max_tries) {
    using S = typename Field::Scalar;
    TransferResult<Field> res{apply_bistellar(before, move), {}, TransferPath::Unchanged, std::nullopt, {}, move.tau.front()};
    const SimplicialComplex& after = res.complex;
    const Index d = after.dim() + 1, m = after.num_vertices();
    if (certificate.theta.cols() != before.num_vertices() || certificate.theta.rows() != d)
        throw Error(ErrorCode::ShapeMismatch, "certificate does not match the complex");

    std::mt19937_64 rng(derive_seed(certificate.seed, 0x7472616e73666572ULL));
    Matrix<S> theta(d, m);
    Vector<S> omega(m);
    for (Index c = 0; c < m; ++c) {
        if (const auto p = before.vertex_position(after.vertices()[static_cast<std::size_t>(c)])) {
            theta.col(c) = certificate.theta.col(static_cast<Index>(*p));
            omega(c) = certificate.omega(static_cast<Index>(*p));
        } else {
            theta.col(c) = random_vector(field, d, rng);
            omega(c) = field.zero();
        }
    }

    const auto resample = [&] {
        try {
            res.certificate = find_wle(after, field, derive_seed(certificate.seed, 1), {max_tries, false, false});
        } catch (const Error& e) {
            std::string tried;
            for (long long t : res.t_tried) tried += (tried.empty() ? "" : ",") + std::to_string(t);
            throw Error(ErrorCode::TransferFailed, "t values tried {" + tried + "}; " + e.what());
        }
        res.path = TransferPath::Resampled;
        return res;
    };

    if (!is_lsop(after, theta)) return resample();
    const GradedQuotient<Field> q(after, theta, field);
    res.certificate = {theta, omega, wle_verdicts(q, omega), field.name(), certificate.seed, 0, false};
    if (res.certificate.passed()) return res;

    const int n = static_cast<int>(d / 2);
    bool only_middle = true;
    for (const auto& v : res.certificate.verdicts)
        if (!v.ok() && v.degree != n) only_middle = false;
    if (only_middle) {
        long long bound = static_cast<long long>(d * q.dim(n) + 1);
        if constexpr (std::is_same_v<Field, PrimeField>)
            bound = std::min<long long>(bound, static_cast<long long>(std::min<std::uint64_t>(field.prime - 1, 1ULL << 62)));
        const Index x = static_cast<Index>(*after.vertex_position(res.scan_vertex));
        for (long long t = 1; t <= bound; ++t) {
            res.t_tried.push_back(t);
            Vector<S> shifted = omega;
            shifted(x) += field.from_int(t);
            auto verdicts = wle_verdicts(q, shifted);
            CertificateFor<Field> cert{theta, shifted, std::move(verdicts), field.name(), certificate.seed, 0, false};
            if (cert.passed()) {
                res.certificate = std::move(cert);
                res.path = TransferPath::Repaired;
                res.t = t;
                return res;
            }
        }
    }
    return resample();
}

template <class Field>
RigidityReport rigidity_check(const SimplicialComplex& complex, const Field& field, std::uint64_t seed) {
    if (!is_connected(complex)) throw Error(ErrorCode::NotConnected, "rigidity needs a connected complex");
    if (!complex.is_pure() || !LinkHomology(complex, FieldSpec{field}).is_homology_manifold())
        throw Error(ErrorCode::NotAManifold, "rigidity needs a homology manifold");
    if (complex.dim() < 1) throw Error(ErrorCode::DegreeOutOfRange, "rigidity needs dimension at least 1");
    std::mt19937_64 rng(seed);
    const auto sys = random_lsop(complex, field, rng);
    const auto omega = random_vector(field, complex.num_vertices(), rng);
    const GradedQuotient<Field> q(complex, sys.theta, field, ReductionMethod::Squarefree, 2);
    RigidityReport r;
    r.dims = {q.dim(0), q.dim(1), q.dim(2)};
    r.monotone = r.dims[0] <= r.dims[1] && r.dims[1] <= r.dims[2];
    r.rank = rank(q.multiplication_map(omega, 1));
    r.injective = r.rank == r.dims[1];
    r.hypothesis_met = complex.dim() >= 3;
    return r;
}

template <class Field>
FaceMonomialReport lemma35_check(int i, int j, const Field& field, std::uint64_t seed) {
    if (i < 0 || j < 1) throw Error(ErrorCode::HypothesisViolated, "need i >= 0 and j >= 1");
    const SimplicialComplex delta = join(simplex(i), relabel(boundary_simplex(j), i + 1));
    return face_generation(delta, j, std::nullopt, field, seed);
}

template <class Field>
FaceMonomialReport lemma36_check(int i, const SimplicialComplex& L, Vertex v, const Field& field, std::uint64_t seed) {
    if (i < 0) throw Error(ErrorCode::HypothesisViolated, "need i >= 0");
    const int j = L.dim() + 1;
    if (j < 1 || !L.is_pure() || !is_homology_sphere(L, FieldSpec{field}))
        throw Error(ErrorCode::HypothesisViolated, "L is not a homology sphere over " + field.name());
    if (!L.contains(Face{v})) throw Error(ErrorCode::HypothesisViolated, "v is not a vertex of L");
    const SimplicialComplex lk = link(L, Face{v});
    if (lk.num_vertices() != j || lk != boundary_of(lk.vertices()))
        throw Error(ErrorCode::HypothesisViolated, "lk_v L is not the boundary of a simplex");
    const SimplicialComplex delta = join(relabel(simplex(i), L.max_label()), L);
    return face_generation(delta, j, v, field, seed);
}

GradedVector schenzel_h_prime(const GradedVector& h, const BettiProfile& betti) {
    GradedVector out{VectorKind::HPrime, {}};
    const long long d = static_cast<long long>(h.size()) - 1;
    for (long long i = 0; i <= d; ++i) {
        Integer s(0);
        for (long long j = 1; j <= i - 1; ++j) s += (j % 2 ? -1 : 1) * betti.at(static_cast<int>(i - j - 1));
        out.entries.push_back(h[static_cast<std::size_t>(i)] - binomial(d, i) * s);
    }
    return out;
}

GradedVector kalai_h_doubleprime(const GradedVector& h_prime, const BettiProfile& betti) {
    GradedVector out{VectorKind::HDoublePrime, {}};
    const long long d = static_cast<long long>(h_prime.size()) - 1;
    for (long long i = 0; i <= d; ++i) {
        const Integer correction = i < d ? binomial(d, i) * betti.at(static_cast<int>(i - 1)) : Integer(0);
        out.entries.push_back(h_prime[static_cast<std::size_t>(i)] - correction);
    }
    return out;
}

template <class Field>
GradedVector h_prime(const SimplicialComplex& complex, const Field& field, std::uint64_t seed) {
    return buchsbaum_data(complex, field, seed).h_prime;
}

template <class Field>
GradedVector h_doubleprime(const SimplicialComplex& complex, const Field& field, std::uint64_t seed) {
    const auto data = buchsbaum_data(complex, field, seed);
    return kalai_h_doubleprime(data.h_prime, data.betti);
}

template <class Field>
GradedVector g_doubleprime(const SimplicialComplex& complex, const Field& field, std::uint64_t seed) {
    return g_vector(h_doubleprime(complex, field, seed), VectorKind::GDoublePrime);
}

template <class Field>
NovikSwartzReport novik_swartz_check(const SimplicialComplex& complex, const Field& field, std::uint64_t seed) {
    const LinkHomology lh(complex, FieldSpec{field});
    require_orientable_manifold(complex, lh);
    std::mt19937_64 rng(seed);
    const auto sys = random_lsop(complex, field, rng);
    const GradedQuotient<Field> q(complex, sys.theta, field);
    const int d = q.top_degree();

    NovikSwartzReport r;
    r.betti = lh.global();
    r.dims = q.dims();
    r.socle_dims = socle(q).dims;
    r.formula_holds = true;
    for (int i = 0; i <= d; ++i) {
        const bool inner = i >= 1 && i <= d - 1;
        const long long expected = inner ? (binomial(d, i) * r.betti.at(i - 1)).template convert_to<long long>() : 0;
        r.expected.push_back(expected);
        if (inner && r.socle_dims[static_cast<std::size_t>(i)] != expected) r.formula_holds = false;
        r.quotient_dims.push_back(r.dims[static_cast<std::size_t>(i)] - (inner ? r.socle_dims[static_cast<std::size_t>(i)] : 0));
    }
    if (!r.formula_holds) throw Error(ErrorCode::FormulaMismatch, "socle dimensions differ from C(d,i) β̃_{i-1}");
    if (q.dim(d) != 1) throw Error(ErrorCode::FormulaMismatch, "top degree is not one-dimensional");

    r.pairing_nondegenerate = true;
    for (int j = 0; j <= d; ++j) {
        const auto left = q.standard_monomials(j), right = q.standard_monomials(d - j);
        auto pairing = zero_matrix(field, static_cast<Index>(left.size()), static_cast<Index>(right.size()));
        for (std::size_t a = 0; a < left.size(); ++a)
            for (std::size_t b = 0; b < right.size(); ++b)
                pairing(static_cast<Index>(a), static_cast<Index>(b)) = q.coordinates(multiply(left[a], right[b]))(0);
        const Index rk = rank(pairing);
        r.pairing_ranks.push_back(rk);
        if (rk != r.quotient_dims[static_cast<std::size_t>(j)]) r.pairing_nondegenerate = false;
    }
    if (!r.pairing_nondegenerate) throw Error(ErrorCode::FormulaMismatch, "pairing on A/Soc is degenerate");
    return r;
}

template <class Field>
KalaiReport kalai_g_check(const SimplicialComplex& complex, const Field& field, std::uint64_t seed) {
    require_orientable_manifold(complex, LinkHomology(complex, FieldSpec{field}));
    const auto data = buchsbaum_data(complex, field, seed);
    KalaiReport r;
    r.h_prime = data.h_prime;
    r.h_doubleprime = kalai_h_doubleprime(data.h_prime, data.betti);
    r.g_doubleprime = g_vector(r.h_doubleprime, VectorKind::GDoublePrime);
    r.m_sequence = is_m_sequence(r.g_doubleprime);
    return r;
}

#define SRLAB_INSTANTIATE(F)                                                                                       \
    template std::vector<DegreeVerdict> wle_verdicts(const GradedQuotient<F>&, const Vector<F::Scalar>&);          \
    template bool middle_surjective(const GradedQuotient<F>&, const Vector<F::Scalar>&);                          \
    template CertificateFor<F> check_wle(const SimplicialComplex&, const LinearSystem<F::Scalar>&, const F&);      \
    template bool check_wle_middle(const SimplicialComplex&, const LinearSystem<F::Scalar>&, const F&);           \
    template CertificateFor<F> find_wle(const SimplicialComplex&, const F&, std::uint64_t, const SearchOptions&); \
    template bool certify_over_rationals(const SimplicialComplex&, const WlpCertificate<F::Scalar>&);             \
    template TransferResult<F> wle_transfer(const SimplicialComplex&, const CertificateFor<F>&,                   \
                                            const BistellarMove&, const F&, int);                                 \
    template RigidityReport rigidity_check(const SimplicialComplex&, const F&, std::uint64_t);                    \
    template FaceMonomialReport lemma35_check(int, int, const F&, std::uint64_t);                                 \
    template FaceMonomialReport lemma36_check(int, const SimplicialComplex&, Vertex, const F&, std::uint64_t);    \
    template GradedVector h_prime(const SimplicialComplex&, const F&, std::uint64_t);                             \
    template GradedVector h_doubleprime(const SimplicialComplex&, const F&, std::uint64_t);                       \
    template GradedVector g_doubleprime(const SimplicialComplex&, const F&, std::uint64_t);                       \
    template NovikSwartzReport novik_swartz_check(const SimplicialComplex&, const F&, std::uint64_t);             \
    template KalaiReport kalai_g_check(const SimplicialComplex&, const F&, std::uint64_t);

SRLAB_INSTANTIATE(RationalField)
SRLAB_INSTANTIATE(PrimeField)

#undef SRLAB_INSTANTIATE

}  // namespace srlab
