#pragma once

// Stanley-Reisner ring machinery: linear systems of parameters, Artinian
// reductions k[Δ]/Θ computed degree by degree, multiplication maps, socles,
// face-monomial classes, and the Hilbert function of k[Δ].
//
// Monomials are sorted lists of vertex positions (indices into
// complex.vertices()) with repetition; x_1^2 x_3 is {0, 0, 2}.

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

#include "srlab/complex.hpp"
#include "srlab/errors.hpp"
#include "srlab/field.hpp"
#include "srlab/linalg.hpp"
#include "srlab/vectors.hpp"

namespace srlab {

using Monomial = std::vector<int>;

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = m.size();
        for (int v : m) h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

/// Distinct vertices of a monomial.
inline Face support(const Monomial& m) {
    Face s = m;
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Monomial times_variable(const Monomial& m, int v) {
    Monomial out = m;
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
}

/// Faces of a complex expressed in vertex positions, for support tests.
class PositionFaces {
public:
    explicit PositionFaces(const SimplicialComplex& complex) {
        for (int d = -1; d <= complex.dim(); ++d) {
            std::vector<Face> list;
            for (const auto& f : complex.faces(d)) {
                Face p;
                for (Vertex v : f) p.push_back(static_cast<int>(*complex.vertex_position(v)));
                list.push_back(std::move(p));
            }
            by_card_.push_back(std::move(list));
        }
    }

    bool contains(const Face& positions) const {
        if (positions.size() >= by_card_.size()) return false;
        const auto& list = by_card_[positions.size()];
        return std::binary_search(list.begin(), list.end(), positions);
    }
    /// Is supp(m) ∪ {v} a face?
    bool extends(const Face& supp, int v) const {
        if (std::binary_search(supp.begin(), supp.end(), v)) return contains(supp);
        Face s = supp;
        s.insert(std::upper_bound(s.begin(), s.end(), v), v);
        return contains(s);
    }
    const std::vector<Face>& of_card(std::size_t k) const {
        static const std::vector<Face> kNone;
        return k < by_card_.size() ? by_card_[k] : kNone;
    }

private:
    std::vector<std::vector<Face>> by_card_;
};

/// All monomials of degree k whose support is a face, sorted.
std::vector<Monomial> face_support_monomials(const PositionFaces& faces, int k);

/// d linear forms θ_1..θ_d (rows of `theta`, columns follow complex.vertices()),
/// optionally with an extra form ω.
template <class S>
struct LinearSystem {
    Matrix<S> theta;
    std::optional<Vector<S>> omega;

    Index d() const { return theta.rows(); }
    Index m() const { return theta.cols(); }
};

/// Every facet's column submatrix has full column rank.
template <class S>
bool is_lsop(const SimplicialComplex& complex, const Matrix<S>& theta) {
    if (theta.rows() != complex.dim() + 1 || theta.cols() != complex.num_vertices())
        throw Error(ErrorCode::ShapeMismatch, "Θ must be (dim+1) x (number of vertices)");
    for (const auto& f : complex.facets()) {
        Matrix<S> sub(theta.rows(), static_cast<Index>(f.size()));
        for (std::size_t k = 0; k < f.size(); ++k)
            sub.col(static_cast<Index>(k)) = theta.col(static_cast<Index>(*complex.vertex_position(f[k])));
        if (rank(sub) != static_cast<Index>(f.size())) return false;
    }
    return true;
}

struct GenericityReport {
    bool generic = false;
    bool exhaustive = true;       // false when minors were sampled
    std::size_t minors_checked = 0;

    explicit operator bool() const { return generic; }
};

/// All d x d minors nonsingular: exhaustive when C(m, d) ≤ 10^5, otherwise
/// 10^4 random minors (verdict flagged as probabilistic).
template <class S>
GenericityReport is_generic(const Matrix<S>& theta, std::uint64_t sample_seed = 0) {
    GenericityReport r;
    const Index d = theta.rows(), m = theta.cols();
    if (d == 0) {
        r.generic = true;
        return r;
    }
    if (m < d) return r;
    for (Index c = 0; c < m; ++c) {
        bool zero_col = true;
        for (Index i = 0; i < d; ++i) zero_col = zero_col && is_zero(theta(i, c));
        if (zero_col) return r;
    }
    const auto minor_ok = [&](const std::vector<Index>& cols) {
        Matrix<S> sub(d, d);
        for (Index k = 0; k < d; ++k) sub.col(k) = theta.col(cols[static_cast<std::size_t>(k)]);
        ++r.minors_checked;
        return !is_zero(det(std::move(sub)));
    };
    if (binomial(m, d) <= 100000) {
        std::vector<Index> cols(static_cast<std::size_t>(d));
        for (Index k = 0; k < d; ++k) cols[static_cast<std::size_t>(k)] = k;
        while (true) {
            if (!minor_ok(cols)) return r;
            Index k = d - 1;
            while (k >= 0 && cols[static_cast<std::size_t>(k)] == m - d + k) --k;
            if (k < 0) break;
            ++cols[static_cast<std::size_t>(k)];
            for (Index j = k + 1; j < d; ++j) cols[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j - 1)] + 1;
        }
        r.generic = true;
        return r;
    }
    r.exhaustive = false;
    std::mt19937_64 rng(sample_seed);
    std::vector<Index> all(static_cast<std::size_t>(m));
    for (Index c = 0; c < m; ++c) all[static_cast<std::size_t>(c)] = c;
    for (int s = 0; s < 10000; ++s) {
        std::vector<Index> cols;
        std::sample(all.begin(), all.end(), std::back_inserter(cols), d, rng);
        if (!minor_ok(cols)) return r;
    }
    r.generic = true;
    return r;
}

/// Random d x m system passing is_lsop; up to 32 draws before GenericityExhausted.
template <class Field, class Rng>
LinearSystem<typename Field::Scalar> random_lsop(const SimplicialComplex& complex, const Field& field, Rng& rng,
                                                 bool require_generic = false) {
    const Index d = complex.dim() + 1, m = complex.num_vertices();
    for (int attempt = 0; attempt < 32; ++attempt) {
        LinearSystem<typename Field::Scalar> sys{random_matrix(field, d, m, rng), std::nullopt};
        if (!is_lsop(complex, sys.theta)) continue;
        if (require_generic && !is_generic(sys.theta, rng())) continue;
        return sys;
    }
    throw Error(ErrorCode::GenericityExhausted, "no l.s.o.p. found in 32 random draws over " + field.name());
}

enum class ReductionMethod {
    /// Spanning set = squarefree face monomials; other monomials are rewritten
    /// into them through Θ before elimination.
    Squarefree,
    /// Spanning set = every monomial with face support (the plain Macaulay matrix).
    FullMacaulay,
};

/// The Artinian reduction k[Δ]/Θ, degree by degree.
///
/// In each degree the relation space is kept in reduced echelon form over
/// the spanning monomials (sorted lexicographically, so the smallest monomial
/// is eliminated first); the standard monomials are the non-pivot columns.
template <class Field>
class GradedQuotient {
public:
    using Scalar = typename Field::Scalar;
    using SparseRow = std::vector<std::pair<Index, Scalar>>;

    GradedQuotient(const SimplicialComplex& complex, const Matrix<Scalar>& theta, const Field& field,
                   ReductionMethod method = ReductionMethod::Squarefree, int max_degree = -1)
        : complex_(complex), theta_(theta), field_(field), method_(method), faces_(complex) {
        if (!is_lsop(complex, theta)) throw Error(ErrorCode::NotLsop, "Θ is not an l.s.o.p. for the complex");
        d_ = static_cast<int>(theta.rows());
        max_degree_ = max_degree < 0 ? d_ : max_degree;
        if (method_ == ReductionMethod::Squarefree) max_degree_ = std::min(max_degree_, d_);
        for (int i = 0; i <= max_degree_; ++i) build_degree(i);
    }

    const SimplicialComplex& complex() const { return complex_; }
    const Matrix<Scalar>& theta() const { return theta_; }
    const Field& field() const { return field_; }
    ReductionMethod method() const { return method_; }
    /// d = dim Δ + 1.
    int top_degree() const { return d_; }
    int max_degree() const { return max_degree_; }

    Index dim(int i) const { return in_range(i) ? static_cast<Index>(degrees_[static_cast<std::size_t>(i)].basis.size()) : 0; }
    std::vector<Index> dims() const {
        std::vector<Index> out;
        for (int i = 0; i <= max_degree_; ++i) out.push_back(dim(i));
        return out;
    }
    GradedVector dims_vector(VectorKind kind = VectorKind::HPrime) const {
        GradedVector v{kind, {}};
        for (int i = 0; i <= std::min(max_degree_, d_); ++i) v.entries.emplace_back(static_cast<long long>(dim(i)));
        return v;
    }

    /// Spanning monomials of degree i (the columns of the relation matrix).
    const std::vector<Monomial>& spanning_monomials(int i) const { return degree(i).columns; }
    /// The chosen basis of (k[Δ]/Θ)_i.
    std::vector<Monomial> standard_monomials(int i) const {
        std::vector<Monomial> out;
        for (Index c : degree(i).basis) out.push_back(degree(i).columns[static_cast<std::size_t>(c)]);
        return out;
    }
    /// Relations in reduced row echelon form.
    Matrix<Scalar> relations(int i) const { return degree(i).relations.matrix(); }

    /// Coordinates of a monomial's class in the degree-|m| standard basis.
    Vector<Scalar> coordinates(const Monomial& m) const {
        const int i = static_cast<int>(m.size());
        auto v = zero_vector(field_, dim(i));
        if (!in_range(i) || !faces_.contains(support(m))) return v;
        const Degree& deg = degree(i);
        RowVector<Scalar> row(static_cast<Index>(deg.columns.size()));
        row.setConstant(field_.zero());
        for (const auto& [col, a] : to_columns(m)) row(col) = a;
        return reduce_to_basis(deg, row);
    }

    /// Coordinates of Σ c_k m_k, all m_k of degree i.
    Vector<Scalar> coordinates(int i, const std::vector<std::pair<Monomial, Scalar>>& poly) const {
        if (!in_range(i)) return zero_vector(field_, 0);
        const Degree& deg = degree(i);
        RowVector<Scalar> row(static_cast<Index>(deg.columns.size()));
        row.setConstant(field_.zero());
        for (const auto& [m, c] : poly) {
            if (static_cast<int>(m.size()) != i) throw Error(ErrorCode::DegreeOutOfRange, "inhomogeneous polynomial");
            if (is_zero(c) || !faces_.contains(support(m))) continue;
            for (const auto& [col, a] : to_columns(m)) row(col) += c * a;
        }
        return reduce_to_basis(deg, row);
    }

    /// Class of the face monomial x_σ (σ given by vertex labels).
    Vector<Scalar> face_monomial_class(const Face& face) const {
        if (!complex_.contains(face)) throw Error(ErrorCode::NotAFace, "face monomial of a non-face");
        Monomial m;
        for (Vertex v : face) m.push_back(static_cast<int>(*complex_.vertex_position(v)));
        return coordinates(m);
    }

    /// Matrix (dim_{i+1} x dim_i) of multiplication by the linear form ω.
    Matrix<Scalar> multiplication_map(const Vector<Scalar>& omega, int i) const {
        if (i < 0 || i >= d_) throw Error(ErrorCode::DegreeOutOfRange, "multiplication map needs 0 <= i < d");
        if (omega.size() != complex_.num_vertices()) throw Error(ErrorCode::ShapeMismatch, "ω length");
        return multiplication_map_unchecked(omega, i);
    }

    /// Product of classes a ∈ A_i and b ∈ A_j, in A_{i+j}.
    Vector<Scalar> product(const Vector<Scalar>& a, int i, const Vector<Scalar>& b, int j) const {
        std::vector<std::pair<Monomial, Scalar>> poly;
        const auto ma = standard_monomials(i), mb = standard_monomials(j);
        for (Index k = 0; k < a.size(); ++k) {
            if (is_zero(a(k))) continue;
            for (Index l = 0; l < b.size(); ++l) {
                if (is_zero(b(l))) continue;
                poly.emplace_back(multiply(ma[static_cast<std::size_t>(k)], mb[static_cast<std::size_t>(l)]), a(k) * b(l));
            }
        }
        return coordinates(i + j, poly);
    }

    /// Matrix of ·ω : A_i → A_{i+1} for any i ≤ max_degree (zero target above it).
    Matrix<Scalar> multiplication_map_unchecked(const Vector<Scalar>& omega, int i) const {
        const Index rows = dim(i + 1), cols = dim(i);
        auto out = zero_matrix(field_, rows, cols);
        if (rows == 0) return out;
        const auto basis = standard_monomials(i);
        for (Index c = 0; c < cols; ++c) {
            const Monomial& m = basis[static_cast<std::size_t>(c)];
            const Face supp = support(m);
            std::vector<std::pair<Monomial, Scalar>> poly;
            for (int v = 0; v < static_cast<int>(omega.size()); ++v) {
                if (is_zero(omega(v)) || !faces_.extends(supp, v)) continue;
                poly.emplace_back(times_variable(m, v), omega(v));
            }
            out.col(c) = coordinates(i + 1, poly);
        }
        return out;
    }

private:
    struct Degree {
        std::vector<Monomial> columns;
        std::unordered_map<Monomial, Index, MonomialHash> column_index;
        EchelonBasis<Scalar> relations;
        std::vector<Index> basis;
    };

    bool in_range(int i) const { return i >= 0 && i <= max_degree_; }
    const Degree& degree(int i) const {
        if (!in_range(i)) throw Error(ErrorCode::DegreeOutOfRange, "degree outside the computed range");
        return degrees_[static_cast<std::size_t>(i)];
    }

    Vector<Scalar> reduce_to_basis(const Degree& deg, RowVector<Scalar> row) const {
        deg.relations.reduce(row);
        Vector<Scalar> out(static_cast<Index>(deg.basis.size()));
        for (std::size_t k = 0; k < deg.basis.size(); ++k) out(static_cast<Index>(k)) = row(deg.basis[k]);
        return out;
    }

    // Expresses a face-support monomial in the spanning columns of its degree.
    const SparseRow& to_columns(const Monomial& m) const {
        auto& memo = rewrite_memo_[m.size()];
        if (auto it = memo.find(m); it != memo.end()) return it->second;
        const Degree& deg = degrees_[m.size()];
        SparseRow row;
        if (method_ == ReductionMethod::FullMacaulay || std::adjacent_find(m.begin(), m.end()) == m.end()) {
            row.emplace_back(deg.column_index.at(m), field_.one());
        } else {
            // x_v m' with v repeated: x_v ≡ -Σ_{w ∉ τ} ℓ_w x_w on support τ, where ℓ ∈ span Θ
            // restricts to x_v on τ.  Each x_w m' has strictly larger support.
            const Face tau = support(m);
            const int v = *std::adjacent_find(m.begin(), m.end());
            Monomial rest = m;
            rest.erase(std::find(rest.begin(), rest.end(), v));
            const Vector<Scalar>& ell = support_form(tau, v);
            std::map<Index, Scalar> acc;
            for (int w = 0; w < static_cast<int>(ell.size()); ++w) {
                if (is_zero(ell(w)) || std::binary_search(tau.begin(), tau.end(), w)) continue;
                if (!faces_.extends(tau, w)) continue;
                for (const auto& [col, a] : to_columns(times_variable(rest, w))) {
                    auto [it, inserted] = acc.emplace(col, field_.zero());
                    it->second -= ell(w) * a;
                }
            }
            for (auto& [col, a] : acc)
                if (!is_zero(a)) row.emplace_back(col, std::move(a));
        }
        return memo.emplace(m, std::move(row)).first->second;
    }

    // Linear form in span Θ whose restriction to τ is x_v.
    const Vector<Scalar>& support_form(const Face& tau, int v) const {
        const auto key = std::make_pair(tau, v);
        if (auto it = support_forms_.find(key); it != support_forms_.end()) return it->second;
        const Index k = static_cast<Index>(tau.size());
        Matrix<Scalar> lhs(k, theta_.rows());  // Θ_τ^T
        for (Index r = 0; r < k; ++r) lhs.row(r) = theta_.col(tau[static_cast<std::size_t>(r)]).transpose();
        auto rhs = zero_vector(field_, k);
        rhs(std::lower_bound(tau.begin(), tau.end(), v) - tau.begin()) = field_.one();
        const auto lambda = solve(lhs, rhs);
        if (!lambda) throw Error(ErrorCode::NotLsop, "Θ restricted to a face is rank deficient");
        Vector<Scalar> ell = theta_.transpose() * *lambda;
        return support_forms_.emplace(key, std::move(ell)).first->second;
    }

    void build_degree(int i) {
        Degree deg;
        if (method_ == ReductionMethod::Squarefree) {
            for (const auto& f : faces_.of_card(static_cast<std::size_t>(i))) deg.columns.push_back(f);
        } else {
            deg.columns = face_support_monomials(faces_, i);
        }
        for (std::size_t c = 0; c < deg.columns.size(); ++c) deg.column_index.emplace(deg.columns[c], static_cast<Index>(c));
        const Index ncols = static_cast<Index>(deg.columns.size());
        deg.relations = EchelonBasis<Scalar>(ncols);
        degrees_.push_back(std::move(deg));
        rewrite_memo_.emplace_back();
        Degree& cur = degrees_.back();

        if (i > 0 && ncols > 0) {
            const Index m = complex_.num_vertices();
            RowVector<Scalar> row(ncols);
            for (const Monomial& mono : face_support_monomials(faces_, i - 1)) {
                const Face supp = support(mono);
                std::vector<std::pair<int, const SparseRow*>> terms;
                for (int u = 0; u < m; ++u)
                    if (faces_.extends(supp, u)) terms.emplace_back(u, &to_columns(times_variable(mono, u)));
                for (Index j = 0; j < theta_.rows() && !cur.relations.full(); ++j) {
                    row.setConstant(field_.zero());
                    for (const auto& [u, sparse] : terms) {
                        const Scalar& a = theta_(j, u);
                        if (is_zero(a)) continue;
                        for (const auto& [col, coef] : *sparse) row(col) += a * coef;
                    }
                    cur.relations.insert(row);
                }
                if (cur.relations.full()) break;
            }
        }
        cur.basis = cur.relations.free_columns();
    }

    SimplicialComplex complex_;
    Matrix<Scalar> theta_;
    Field field_;
    ReductionMethod method_;
    PositionFaces faces_;
    int d_ = 0;
    int max_degree_ = 0;
    std::vector<Degree> degrees_;
    mutable std::vector<std::unordered_map<Monomial, SparseRow, MonomialHash>> rewrite_memo_;
    mutable std::map<std::pair<Face, int>, Vector<Scalar>> support_forms_;
};

template <class Field>
GradedQuotient<Field> artinian_reduction(const SimplicialComplex& complex, const LinearSystem<typename Field::Scalar>& system,
                                         const Field& field, ReductionMethod method = ReductionMethod::Squarefree) {
    return GradedQuotient<Field>(complex, system.theta, field, method);
}

template <class Field>
struct SocleResult {
    std::vector<Index> dims;                                    // degrees 0..d
    std::vector<Matrix<typename Field::Scalar>> bases;          // columns in A_i coordinates
};

/// Soc_i = joint kernel of ·x_v over all vertices; the top degree is all socle.
template <class Field>
SocleResult<Field> socle(const GradedQuotient<Field>& q) {
    using S = typename Field::Scalar;
    SocleResult<Field> out;
    const Index m = q.complex().num_vertices();
    for (int i = 0; i <= q.top_degree(); ++i) {
        const Index n = q.dim(i), next = i + 1 <= q.max_degree() ? q.dim(i + 1) : 0;
        Matrix<S> stacked = zero_matrix(q.field(), m * next, n);
        if (next > 0) {
            for (Index v = 0; v < m; ++v) {
                auto e = zero_vector(q.field(), m);
                e(v) = q.field().one();
                stacked.middleRows(v * next, next) = q.multiplication_map_unchecked(e, i);
            }
        }
        Matrix<S> ker = kernel_basis(stacked);
        out.dims.push_back(ker.cols());
        out.bases.push_back(std::move(ker));
    }
    return out;
}

/// dim k[Δ]_i = Σ_{∅≠σ∈Δ} C(i-1, |σ|-1) for i ≥ 1, and 1 for i = 0.
GradedVector hilbert_function(const SimplicialComplex& complex, int i_max);

/// (h_0 + h_1 λ + ... + h_d λ^d) / (1 - λ)^d.
struct HilbertSeries {
    GradedVector numerator;
    int denominator_exponent = 0;

    /// Power-series coefficients through λ^{i_max}.
    GradedVector expand(int i_max) const;
};

HilbertSeries hilbert_series(const SimplicialComplex& complex);

}  // namespace srlab
