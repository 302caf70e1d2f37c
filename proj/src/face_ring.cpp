#include "srlab/face_ring.hpp"

namespace srlab {

namespace {

// Appends every exponent vector of total degree k with all exponents ≥ 1 on `face`.
void compositions(const Face& face, std::size_t at, int left, Monomial& cur, std::vector<Monomial>& out) {
    if (at + 1 == face.size()) {
        cur.insert(cur.end(), static_cast<std::size_t>(left), face[at]);
        out.push_back(cur);
        cur.resize(cur.size() - static_cast<std::size_t>(left));
        return;
    }
    const int remaining = static_cast<int>(face.size() - at - 1);
    for (int e = 1; e <= left - remaining; ++e) {
        cur.insert(cur.end(), static_cast<std::size_t>(e), face[at]);
        compositions(face, at + 1, left - e, cur, out);
        cur.resize(cur.size() - static_cast<std::size_t>(e));
    }
}

}  // namespace

std::vector<Monomial> face_support_monomials(const PositionFaces& faces, int k) {
    std::vector<Monomial> out;
    if (k < 0) return out;
    if (k == 0) return {Monomial{}};
    for (std::size_t card = 1; card <= static_cast<std::size_t>(k); ++card) {
        for (const auto& f : faces.of_card(card)) {
            Monomial cur;
            compositions(f, 0, k, cur, out);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

GradedVector hilbert_function(const SimplicialComplex& complex, int i_max) {
    GradedVector h{VectorKind::Hilbert, {}};
    for (int i = 0; i <= i_max; ++i) {
        if (i == 0) {
            h.entries.emplace_back(1);
            continue;
        }
        Integer s(0);
        for (int dim = 0; dim <= complex.dim(); ++dim)
            s += binomial(i - 1, dim) * Integer(complex.num_faces(dim));
        h.entries.push_back(s);
    }
    return h;
}

GradedVector HilbertSeries::expand(int i_max) const {
    GradedVector out{VectorKind::Hilbert, {}};
    const int d = denominator_exponent;
    for (int i = 0; i <= i_max; ++i) {
        Integer s(0);
        for (int k = 0; k <= i && k < static_cast<int>(numerator.size()); ++k) {
            // coefficient of λ^{i-k} in (1-λ)^{-d}
            const Integer c = d == 0 ? Integer(i == k ? 1 : 0) : binomial(i - k + d - 1, d - 1);
            s += numerator[static_cast<std::size_t>(k)] * c;
        }
        out.entries.push_back(s);
    }
    return out;
}

HilbertSeries hilbert_series(const SimplicialComplex& complex) {
    return {h_vector(complex), complex.dim() + 1};
}

}  // namespace srlab
