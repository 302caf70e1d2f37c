#pragma once

// Reduced simplicial homology over a field, and the homological
// classifications of a complex built from it: homology manifold and sphere,
// Cohen-Macaulay (Reisner), Gorenstein*, Buchsbaum, and an orientability proxy.

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "srlab/complex.hpp"
#include "srlab/field.hpp"
#include "srlab/linalg.hpp"

namespace srlab {

/// β̃_i for -1 ≤ i ≤ dim, stored at position i+1.
struct BettiProfile {
    std::string field;
    std::vector<long long> betti;

    long long at(int i) const {
        const int k = i + 1;
        return (k < 0 || k >= static_cast<int>(betti.size())) ? 0 : betti[static_cast<std::size_t>(k)];
    }
    /// Σ (-1)^i β̃_i.
    long long euler_characteristic() const;

    friend bool operator==(const BettiProfile&, const BettiProfile&) = default;
};

/// Reduced Euler characteristic Σ_{i ≥ -1} (-1)^i f_i from face counts.
long long reduced_euler_characteristic(const SimplicialComplex& complex);

/// Matrix of ∂_k : C_k → C_{k-1} in the lexicographic face bases; k = 0 is
/// the augmentation onto the empty face.
template <class Field>
Matrix<typename Field::Scalar> boundary_matrix(const SimplicialComplex& complex, int k, const Field& field) {
    const auto& rows = complex.faces(k - 1);
    const auto& cols = complex.faces(k);
    auto m = zero_matrix(field, static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Face& f = cols[c];
        for (std::size_t j = 0; j < f.size(); ++j) {
            Face g = f;
            g.erase(g.begin() + static_cast<std::ptrdiff_t>(j));
            const auto r = complex.face_position(g);
            m(static_cast<Index>(*r), static_cast<Index>(c)) = field.from_int(j % 2 ? -1 : 1);
        }
    }
    return m;
}

template <class Field>
BettiProfile reduced_betti(const SimplicialComplex& complex, const Field& field) {
    const int top = complex.dim();
    // ranks[k + 1] = rank ∂_k for k = -1 .. top+1 (∂_{-1} and ∂_{top+1} vanish)
    std::vector<Index> ranks(static_cast<std::size_t>(top + 3), 0);
    for (int k = 0; k <= top; ++k)
        ranks[static_cast<std::size_t>(k + 1)] = rank(boundary_matrix(complex, k, field));
    BettiProfile out{field.name(), {}};
    for (int i = -1; i <= top; ++i) {
        const auto n = static_cast<Index>(complex.num_faces(i));
        out.betti.push_back(static_cast<long long>(n - ranks[static_cast<std::size_t>(i + 1)] -
                                                   ranks[static_cast<std::size_t>(i + 2)]));
    }
    return out;
}

BettiProfile reduced_betti(const SimplicialComplex& complex, const FieldSpec& field);

/// Betti profile of the sphere S^n: β̃_n = 1, all others zero (n ≥ -1).
bool has_sphere_homology(const BettiProfile& betti, int n);

/// Connectivity of the 1-skeleton (union-find).  The complex {∅} counts as disconnected.
bool is_connected(const SimplicialComplex& complex);

/// Reduced Betti numbers of every face link, computed once and shared by the
/// classification predicates below.
class LinkHomology {
public:
    LinkHomology(const SimplicialComplex& complex, const FieldSpec& field);

    const SimplicialComplex& complex() const { return complex_; }
    const BettiProfile& global() const { return links_.at(Face{}); }
    const BettiProfile& of(const Face& face) const { return links_.at(face); }

    bool is_homology_manifold() const;
    bool is_homology_sphere() const;
    bool is_cohen_macaulay() const;
    bool is_buchsbaum() const;

private:
    bool reisner_on_links(bool include_empty) const;

    SimplicialComplex complex_;
    std::map<Face, BettiProfile> links_;
};

bool is_homology_manifold(const SimplicialComplex& complex, const FieldSpec& field);
bool is_homology_sphere(const SimplicialComplex& complex, const FieldSpec& field);
bool is_cohen_macaulay(const SimplicialComplex& complex, const FieldSpec& field);
bool is_gorenstein_star(const SimplicialComplex& complex, const FieldSpec& field);
bool is_buchsbaum(const SimplicialComplex& complex, const FieldSpec& field);
/// β̃_top = 1 for a connected homology manifold; throws NotAManifold otherwise.
bool is_orientable(const SimplicialComplex& complex, const FieldSpec& field);

struct Classification {
    BettiProfile betti;
    bool pure = false;
    bool connected = false;
    bool manifold = false;
    bool sphere = false;
    bool cohen_macaulay = false;
    bool gorenstein_star = false;
    bool buchsbaum = false;
    std::optional<bool> orientable;  // only defined for connected manifolds
};

Classification classify(const SimplicialComplex& complex, const FieldSpec& field);

}  // namespace srlab
