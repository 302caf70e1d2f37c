#include "srlab/homology.hpp"

#include "srlab/errors.hpp"

namespace srlab {

long long BettiProfile::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t k = 0; k < betti.size(); ++k) {
        const long long i = static_cast<long long>(k) - 1;
        chi += (i % 2 == 0 ? 1 : -1) * betti[k];
    }
    return chi;
}

long long reduced_euler_characteristic(const SimplicialComplex& complex) {
    long long chi = 0;
    for (int i = -1; i <= complex.dim(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(complex.num_faces(i));
    return chi;
}

BettiProfile reduced_betti(const SimplicialComplex& complex, const FieldSpec& field) {
    return std::visit([&](const auto& f) { return reduced_betti(complex, f); }, field);
}

bool has_sphere_homology(const BettiProfile& betti, int n) {
    for (std::size_t k = 0; k < betti.betti.size(); ++k) {
        const long long expected = static_cast<int>(k) - 1 == n ? 1 : 0;
        if (betti.betti[k] != expected) return false;
    }
    return n + 1 < static_cast<int>(betti.betti.size());
}

bool is_connected(const SimplicialComplex& complex) {
    const auto& verts = complex.vertices();
    if (verts.empty()) return false;
    std::vector<std::size_t> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : complex.faces(1)) {
        const auto a = find(*complex.vertex_position(e[0]));
        const auto b = find(*complex.vertex_position(e[1]));
        if (a != b) parent[a] = b;
    }
    const auto root = find(0);
    for (std::size_t v = 1; v < verts.size(); ++v)
        if (find(v) != root) return false;
    return true;
}

LinkHomology::LinkHomology(const SimplicialComplex& complex, const FieldSpec& field) : complex_(complex) {
    for (int d = -1; d <= complex.dim(); ++d)
        for (const auto& f : complex.faces(d)) links_.emplace(f, reduced_betti(link(complex, f), field));
}

bool LinkHomology::is_homology_manifold() const {
    if (!complex_.is_pure()) return false;
    const int top = complex_.dim();
    for (const auto& [face, betti] : links_) {
        if (face.empty()) continue;
        if (!has_sphere_homology(betti, top - static_cast<int>(face.size()))) return false;
    }
    return true;
}

bool LinkHomology::is_homology_sphere() const {
    return is_homology_manifold() && has_sphere_homology(global(), complex_.dim());
}

bool LinkHomology::reisner_on_links(bool include_empty) const {
    for (const auto& [face, betti] : links_) {
        if (face.empty() && !include_empty) continue;
        const int lk_dim = static_cast<int>(betti.betti.size()) - 2;
        for (int i = -1; i < lk_dim; ++i)
            if (betti.at(i) != 0) return false;
    }
    return true;
}

bool LinkHomology::is_cohen_macaulay() const { return reisner_on_links(true); }

bool LinkHomology::is_buchsbaum() const { return complex_.is_pure() && reisner_on_links(false); }

bool is_homology_manifold(const SimplicialComplex& complex, const FieldSpec& field) {
    if (!complex.is_pure()) throw Error(ErrorCode::NotPure, "homology manifold test needs a pure complex");
    return LinkHomology(complex, field).is_homology_manifold();
}

bool is_homology_sphere(const SimplicialComplex& complex, const FieldSpec& field) {
    if (!complex.is_pure()) throw Error(ErrorCode::NotPure, "homology sphere test needs a pure complex");
    return LinkHomology(complex, field).is_homology_sphere();
}

bool is_cohen_macaulay(const SimplicialComplex& complex, const FieldSpec& field) {
    return LinkHomology(complex, field).is_cohen_macaulay();
}

bool is_gorenstein_star(const SimplicialComplex& complex, const FieldSpec& field) {
    return complex.is_pure() && LinkHomology(complex, field).is_homology_sphere();
}

bool is_buchsbaum(const SimplicialComplex& complex, const FieldSpec& field) {
    return LinkHomology(complex, field).is_buchsbaum();
}

bool is_orientable(const SimplicialComplex& complex, const FieldSpec& field) {
    if (!complex.is_pure() || !is_connected(complex))
        throw Error(ErrorCode::NotAManifold, "orientability needs a connected homology manifold");
    const LinkHomology lh(complex, field);
    if (!lh.is_homology_manifold()) throw Error(ErrorCode::NotAManifold, "not a homology manifold");
    return lh.global().at(complex.dim()) == 1;
}

Classification classify(const SimplicialComplex& complex, const FieldSpec& field) {
    const LinkHomology lh(complex, field);
    Classification c;
    c.betti = lh.global();
    c.pure = complex.is_pure();
    c.connected = is_connected(complex);
    c.manifold = lh.is_homology_manifold();
    c.sphere = lh.is_homology_sphere();
    c.cohen_macaulay = lh.is_cohen_macaulay();
    c.gorenstein_star = c.sphere;
    c.buchsbaum = lh.is_buchsbaum();
    if (c.manifold && c.connected) c.orientable = c.betti.at(complex.dim()) == 1;
    return c;
}

}  // namespace srlab
