#include "srlab/complex.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "srlab/errors.hpp"

namespace srlab {

Face make_face(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

bool is_subset(const Face& small, const Face& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Face face_union(const Face& a, const Face& b) {
    Face out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Face face_difference(const Face& a, const Face& b) {
    Face out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Face face_intersection(const Face& a, const Face& b) {
    Face out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

namespace {

// Keeps only inclusion-maximal faces, sorted lexicographically.
std::vector<Face> maximal_faces(std::vector<Face> faces) {
    for (auto& f : faces) f = make_face(std::move(f));
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> kept;
    for (const auto& f : faces) {
        bool dominated = false;
        for (const auto& g : kept) {
            if (g.size() > f.size() && is_subset(f, g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

}  // namespace

SimplicialComplex::SimplicialComplex() : SimplicialComplex(std::vector<Face>{}) {}

SimplicialComplex::SimplicialComplex(std::vector<Face> faces) {
    facets_ = maximal_faces(std::move(faces));
    if (facets_.empty()) facets_.push_back(Face{});

    std::set<Vertex> verts;
    std::size_t max_card = 0;
    for (const auto& f : facets_) {
        verts.insert(f.begin(), f.end());
        max_card = std::max(max_card, f.size());
    }
    vertices_.assign(verts.begin(), verts.end());
    dim_ = static_cast<int>(max_card) - 1;

    std::vector<std::set<Face>> by_card(max_card + 1);
    for (const auto& f : facets_) {
        const std::size_t n = f.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            Face sub;
            for (std::size_t k = 0; k < n; ++k)
                if (mask >> k & 1U) sub.push_back(f[k]);
            by_card[sub.size()].insert(std::move(sub));
        }
    }
    faces_by_card_.reserve(by_card.size());
    for (auto& s : by_card) faces_by_card_.emplace_back(s.begin(), s.end());
}

const std::vector<Face>& SimplicialComplex::faces(int d) const {
    static const std::vector<Face> kNone;
    const int card = d + 1;
    if (card < 0 || card >= static_cast<int>(faces_by_card_.size())) return kNone;
    return faces_by_card_[static_cast<std::size_t>(card)];
}

std::optional<std::size_t> SimplicialComplex::face_position(const Face& face) const {
    const auto& list = faces(static_cast<int>(face.size()) - 1);
    auto it = std::lower_bound(list.begin(), list.end(), face);
    if (it == list.end() || *it != face) return std::nullopt;
    return static_cast<std::size_t>(it - list.begin());
}

bool SimplicialComplex::contains(const Face& face) const { return face_position(face).has_value(); }

std::optional<std::size_t> SimplicialComplex::vertex_position(Vertex v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

bool SimplicialComplex::is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Face& f) { return static_cast<int>(f.size()) == dim_ + 1; });
}

namespace {

void require_face(const SimplicialComplex& complex, const Face& face) {
    if (!complex.contains(face)) throw Error(ErrorCode::NotAFace, "face is not in the complex");
}

}  // namespace

SimplicialComplex link(const SimplicialComplex& complex, const Face& face) {
    require_face(complex, face);
    std::vector<Face> out;
    for (const auto& f : complex.facets())
        if (is_subset(face, f)) out.push_back(face_difference(f, face));
    return SimplicialComplex(std::move(out));
}

SimplicialComplex star(const SimplicialComplex& complex, const Face& face) {
    require_face(complex, face);
    std::vector<Face> out;
    for (const auto& f : complex.facets())
        if (is_subset(face, f)) out.push_back(f);
    return SimplicialComplex(std::move(out));
}

SimplicialComplex deletion(const SimplicialComplex& complex, const Face& face) {
    require_face(complex, face);
    std::vector<Face> out;
    for (int d = -1; d <= complex.dim(); ++d)
        for (const auto& f : complex.faces(d))
            if (!is_subset(face, f)) out.push_back(f);
    return SimplicialComplex(std::move(out));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (!face_intersection(a.vertices(), b.vertices()).empty())
        throw Error(ErrorCode::VertexCollision, "join of complexes sharing vertex labels");
    std::vector<Face> out;
    for (const auto& f : a.facets())
        for (const auto& g : b.facets()) out.push_back(face_union(f, g));
    return SimplicialComplex(std::move(out));
}

SimplicialComplex cone(const SimplicialComplex& complex) {
    return join(complex, simplex_on({complex.max_label() + 1}));
}

SimplicialComplex simplex_on(const Face& vertices) { return SimplicialComplex({make_face(vertices)}); }

SimplicialComplex boundary_of(const Face& vertices) {
    const Face v = make_face(vertices);
    std::vector<Face> out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        Face f = v;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
        out.push_back(std::move(f));
    }
    return SimplicialComplex(std::move(out));
}

SimplicialComplex relabel(const SimplicialComplex& complex, Vertex shift) {
    std::vector<Face> out = complex.facets();
    for (auto& f : out)
        for (auto& v : f) v += shift;
    return SimplicialComplex(std::move(out));
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (!face_intersection(a.vertices(), b.vertices()).empty())
        throw Error(ErrorCode::VertexCollision, "disjoint union of complexes sharing vertex labels");
    std::vector<Face> out = a.facets();
    out.insert(out.end(), b.facets().begin(), b.facets().end());
    return SimplicialComplex(std::move(out));
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& complex, const Face& face) {
    if (face.empty()) throw Error(ErrorCode::EmptyFace, "stellar subdivision at the empty face");
    require_face(complex, face);
    if (face.size() == 1) return complex;
    const Vertex apex = complex.max_label() + 1;
    std::vector<Face> out;
    for (const auto& f : complex.facets()) {
        if (!is_subset(face, f)) {
            out.push_back(f);
            continue;
        }
        const Face rest = face_difference(f, face);
        for (std::size_t k = 0; k < face.size(); ++k) {
            Face g = rest;
            for (std::size_t j = 0; j < face.size(); ++j)
                if (j != k) g.push_back(face[j]);
            g.push_back(apex);
            out.push_back(std::move(g));
        }
    }
    return SimplicialComplex(std::move(out));
}

BistellarMove reverse(const BistellarMove& move, int dim) {
    return BistellarMove{dim - move.index, move.tau, move.sigma};
}

namespace {

// lk_σ = ∂Δ^i: exactly i+1 vertices, every i-subset a face, the full set not.
bool link_is_simplex_boundary(const SimplicialComplex& lk, int i) {
    if (i == 0) return lk.dim() == -1;
    if (lk.num_vertices() != i + 1) return false;
    const Face& all = lk.vertices();
    if (lk.contains(all)) return false;
    for (std::size_t k = 0; k < all.size(); ++k) {
        Face f = all;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
        if (!lk.contains(f)) return false;
    }
    return true;
}

}  // namespace

std::vector<BistellarMove> find_bistellar_moves(const SimplicialComplex& complex, int i) {
    if (!complex.is_pure()) throw Error(ErrorCode::NotPure, "bistellar moves need a pure complex");
    const int dim = complex.dim();
    if (i < 0 || i > dim) throw Error(ErrorCode::BadIndex, "move index outside [0, dim]");
    std::vector<BistellarMove> out;
    if (i == 0) {
        const Vertex fresh = complex.max_label() + 1;
        for (const auto& f : complex.facets()) out.push_back({0, f, {fresh}});
        return out;
    }
    for (const auto& sigma : complex.faces(dim - i)) {
        const SimplicialComplex lk = link(complex, sigma);
        if (!link_is_simplex_boundary(lk, i)) continue;
        if (complex.contains(lk.vertices())) continue;
        out.push_back({i, sigma, lk.vertices()});
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_valid_move(const SimplicialComplex& complex, const BistellarMove& move) {
    const int dim = complex.dim();
    if (!complex.is_pure() || move.index < 0 || move.index > dim) return false;
    if (static_cast<int>(move.sigma.size()) != dim - move.index + 1) return false;
    if (static_cast<int>(move.tau.size()) != move.index + 1) return false;
    if (!complex.contains(move.sigma)) return false;
    if (move.index == 0) return !complex.vertex_position(move.tau.front()).has_value();
    if (complex.contains(move.tau)) return false;
    const SimplicialComplex lk = link(complex, move.sigma);
    return link_is_simplex_boundary(lk, move.index) && lk.vertices() == move.tau;
}

SimplicialComplex apply_bistellar(const SimplicialComplex& complex, const BistellarMove& move) {
    if (!is_valid_move(complex, move)) throw Error(ErrorCode::InvalidMove, "move is not valid on this complex");
    std::vector<Face> out;
    for (const auto& f : complex.facets())
        if (!is_subset(move.sigma, f)) out.push_back(f);
    for (std::size_t k = 0; k < move.sigma.size(); ++k) {
        Face g = move.sigma;
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(k));
        out.push_back(face_union(g, move.tau));
    }
    return SimplicialComplex(std::move(out));
}

std::vector<WalkStep> random_pachner_walk(const SimplicialComplex& seed_complex, int steps,
                                          std::uint64_t rng_seed, const WalkPolicy& policy) {
    if (!seed_complex.is_pure()) throw Error(ErrorCode::NotPure, "walk needs a pure complex");
    std::mt19937_64 rng(rng_seed);
    std::vector<WalkStep> walk{{seed_complex, std::nullopt}};
    const int dim = seed_complex.dim();
    std::vector<int> indices = policy.indices;
    if (indices.empty())
        for (int i = 0; i <= dim; ++i) indices.push_back(i);

    for (int s = 0; s < steps; ++s) {
        const auto& current = walk.back();
        std::optional<BistellarMove> undo;
        if (policy.exclude_reverse && current.move) undo = reverse(*current.move, dim);
        std::vector<BistellarMove> candidates;
        for (int i : indices) {
            for (auto& m : find_bistellar_moves(current.complex, i)) {
                if (undo && m == *undo) continue;
                candidates.push_back(std::move(m));
            }
        }
        if (candidates.empty()) throw Error(ErrorCode::NoMoveAvailable, "no admissible bistellar move");
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        const BistellarMove move = candidates[pick(rng)];
        walk.push_back({apply_bistellar(current.complex, move), move});
    }
    return walk;
}

SimplicialComplex simplex(int d) {
    Face f;
    for (int v = 1; v <= d + 1; ++v) f.push_back(v);
    return simplex_on(f);
}

SimplicialComplex boundary_simplex(int d) {
    Face f;
    for (int v = 1; v <= d + 1; ++v) f.push_back(v);
    return boundary_of(f);
}

SimplicialComplex cross_polytope_boundary(int d) {
    std::vector<Face> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
        Face f;
        for (int k = 0; k < d; ++k) f.push_back(2 * k + 1 + static_cast<int>(mask >> k & 1U));
        out.push_back(std::move(f));
    }
    return SimplicialComplex(std::move(out));
}

SimplicialComplex kuehnel_torus() {
    std::vector<Face> out;
    for (int i = 0; i < 7; ++i) {
        out.push_back(make_face({i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1}));
        out.push_back(make_face({i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1}));
    }
    return SimplicialComplex(std::move(out));
}

SimplicialComplex real_projective_plane() {
    return SimplicialComplex({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                              {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

SimplicialComplex cycle_graph(int n) {
    std::vector<Face> out;
    for (int i = 1; i <= n; ++i) out.push_back(make_face({i, i % n + 1}));
    return SimplicialComplex(std::move(out));
}

}  // namespace srlab
