#pragma once

// Finite abstract simplicial complexes in canonical facet form, with the
// standard local constructions (link, star, deletion, join, cone, stellar
// subdivision) and bistellar moves.

#include <cstdint>
#include <optional>
#include <vector>

namespace srlab {

using Vertex = int;

/// A face: strictly increasing vertex labels.  The empty vector is the empty face.
using Face = std::vector<Vertex>;

/// Sorts and deduplicates.
Face make_face(std::vector<Vertex> vertices);

bool is_subset(const Face& small, const Face& big);
Face face_union(const Face& a, const Face& b);
Face face_difference(const Face& a, const Face& b);
Face face_intersection(const Face& a, const Face& b);

/// An immutable simplicial complex stored by its facets.
///
/// Every complex contains the empty face; the complex whose only face is the
/// empty face has dimension -1.  All faces are enumerated at construction and
/// kept per dimension in lexicographic order.
class SimplicialComplex {
public:
    SimplicialComplex();
    explicit SimplicialComplex(std::vector<Face> faces);

    const std::vector<Face>& facets() const { return facets_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int dim() const { return dim_; }

    /// Faces of dimension `d` (cardinality d+1), sorted; d = -1 gives {∅}.
    const std::vector<Face>& faces(int d) const;
    std::size_t num_faces(int d) const { return faces(d).size(); }

    bool contains(const Face& face) const;
    /// Position of `face` in faces(|face|-1), or nullopt.
    std::optional<std::size_t> face_position(const Face& face) const;
    /// Position of a vertex label in vertices().
    std::optional<std::size_t> vertex_position(Vertex v) const;

    bool is_pure() const;
    Vertex max_label() const { return vertices_.empty() ? 0 : vertices_.back(); }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.facets_ == b.facets_;
    }
    friend bool operator!=(const SimplicialComplex& a, const SimplicialComplex& b) { return !(a == b); }

private:
    std::vector<Face> facets_;
    std::vector<Vertex> vertices_;
    int dim_ = -1;
    std::vector<std::vector<Face>> faces_by_card_;  // index = cardinality
};

SimplicialComplex link(const SimplicialComplex& complex, const Face& face);
SimplicialComplex star(const SimplicialComplex& complex, const Face& face);
SimplicialComplex deletion(const SimplicialComplex& complex, const Face& face);
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
/// Cone with apex max_label()+1.
SimplicialComplex cone(const SimplicialComplex& complex);
/// Full simplex on the given vertices.
SimplicialComplex simplex_on(const Face& vertices);
/// Boundary of the simplex on the given vertices.
SimplicialComplex boundary_of(const Face& vertices);
/// Adds `shift` to every label.
SimplicialComplex relabel(const SimplicialComplex& complex, Vertex shift);
/// Disjoint union; labels must not collide.
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);

/// Replaces the star of `face` by the cone over ∂face * lk(face); the apex is
/// max_label()+1.  Subdividing at a vertex returns the complex unchanged.
SimplicialComplex stellar_subdivision(const SimplicialComplex& complex, const Face& face);

/// A bistellar i-move χ_σ: σ has dim D-i, lk σ = ∂τ, and τ is not a face.
/// For i = 0, τ is a single fresh vertex label.
struct BistellarMove {
    int index = 0;
    Face sigma;
    Face tau;

    friend bool operator==(const BistellarMove&, const BistellarMove&) = default;
    friend auto operator<=>(const BistellarMove&, const BistellarMove&) = default;
};

/// The move χ_τ undoing `move` on a complex of dimension `dim`.
BistellarMove reverse(const BistellarMove& move, int dim);

/// All valid i-moves, sorted.  For i = 0 there is one move per facet, with
/// fresh label max_label()+1.
std::vector<BistellarMove> find_bistellar_moves(const SimplicialComplex& complex, int i);
bool is_valid_move(const SimplicialComplex& complex, const BistellarMove& move);
SimplicialComplex apply_bistellar(const SimplicialComplex& complex, const BistellarMove& move);

struct WalkPolicy {
    /// Move indices to draw from; empty means all 0..D.
    std::vector<int> indices;
    /// Skip the move that would undo the previous step.
    bool exclude_reverse = true;
};

struct WalkStep {
    SimplicialComplex complex;
    std::optional<BistellarMove> move;  // move that produced `complex`; empty for the seed
};

/// Seeded random walk by bistellar moves; uniform over all admissible moves.
std::vector<WalkStep> random_pachner_walk(const SimplicialComplex& seed_complex, int steps,
                                          std::uint64_t rng_seed, const WalkPolicy& policy = {});

// Fixtures.
SimplicialComplex simplex(int d);
SimplicialComplex boundary_simplex(int d);
SimplicialComplex cross_polytope_boundary(int d);
SimplicialComplex kuehnel_torus();
SimplicialComplex real_projective_plane();
SimplicialComplex cycle_graph(int n);

}  // namespace srlab
