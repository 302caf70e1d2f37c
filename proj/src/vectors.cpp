#include "srlab/vectors.hpp"

#include <sstream>

#include "srlab/errors.hpp"

namespace srlab {

std::string_view kind_name(VectorKind kind) {
    switch (kind) {
        case VectorKind::F: return "f";
        case VectorKind::H: return "h";
        case VectorKind::G: return "g";
        case VectorKind::HPrime: return "h_prime";
        case VectorKind::HDoublePrime: return "h_doubleprime";
        case VectorKind::GDoublePrime: return "g_doubleprime";
        case VectorKind::Betti: return "betti";
        case VectorKind::Hilbert: return "hilbert";
        case VectorKind::Other: return "other";
    }
    return "other";
}

GradedVector make_vector(VectorKind kind, const std::vector<long long>& values) {
    GradedVector v{kind, {}};
    for (long long x : values) v.entries.emplace_back(x);
    return v;
}

std::string to_string(const GradedVector& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i].str();
    }
    return os.str();
}

Integer binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    k = std::min(k, n - k);
    Integer r(1);
    for (long long j = 1; j <= k; ++j) {
        r *= (n - k + j);
        r /= j;  // exact: r = C(n-k+j, j) after this step
    }
    return r;
}

GradedVector f_vector(const SimplicialComplex& complex) {
    GradedVector f{VectorKind::F, {}};
    for (int d = 0; d <= complex.dim(); ++d) f.entries.emplace_back(complex.num_faces(d));
    return f;
}

GradedVector f_to_h(const GradedVector& f, std::size_t d) {
    if (f.size() != d) throw Error(ErrorCode::LengthMismatch, "f-vector length must equal d");
    const auto fm1 = [&](std::size_t j) { return j == 0 ? Integer(1) : f[j - 1]; };  // f_{j-1}
    GradedVector h{VectorKind::H, {}};
    const auto sd = static_cast<long long>(d);
    for (long long i = 0; i <= sd; ++i) {
        Integer s(0);
        for (long long j = 0; j <= i; ++j) {
            Integer term = binomial(sd - j, sd - i) * fm1(static_cast<std::size_t>(j));
            if ((i - j) % 2) s -= term;
            else s += term;
        }
        h.entries.push_back(s);
    }
    return h;
}

GradedVector h_to_f(const GradedVector& h, std::size_t d) {
    if (h.size() != d + 1) throw Error(ErrorCode::LengthMismatch, "h-vector length must equal d+1");
    GradedVector f{VectorKind::F, {}};
    const auto sd = static_cast<long long>(d);
    for (long long i = 1; i <= sd; ++i) {
        Integer s(0);
        for (long long j = 0; j <= i; ++j) s += binomial(sd - j, sd - i) * h[static_cast<std::size_t>(j)];
        f.entries.push_back(s);
    }
    return f;
}

GradedVector h_vector(const SimplicialComplex& complex) {
    return f_to_h(f_vector(complex), static_cast<std::size_t>(complex.dim() + 1));
}

GradedVector g_vector(const GradedVector& h, VectorKind kind) {
    GradedVector g{kind, {}};
    if (h.size() == 0) return g;
    const std::size_t d = h.size() - 1;
    g.entries.push_back(h[0]);
    for (std::size_t i = 1; i <= d / 2; ++i) g.entries.push_back(h[i] - h[i - 1]);
    return g;
}

namespace {

// Largest n with C(n, k) ≤ a, for a ≥ 1 and k ≥ 1 (so n ≥ k).
long long largest_binomial_top(const Integer& a, long long k) {
    long long lo = k, hi = k + 1;
    while (binomial(hi, k) <= a) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        const long long mid = lo + (hi - lo) / 2;
        if (binomial(mid, k) <= a) lo = mid;
        else hi = mid;
    }
    return lo;
}

}  // namespace

std::vector<std::pair<long long, long long>> binomial_expansion(const Integer& a, long long i) {
    if (i < 1) throw Error(ErrorCode::BadIndex, "binomial expansion index must be at least 1");
    if (a < 0) throw Error(ErrorCode::BadIndex, "binomial expansion of a negative number");
    std::vector<std::pair<long long, long long>> terms;
    Integer rest = a;
    for (long long k = i; k >= 1 && rest > 0; --k) {
        const long long top = largest_binomial_top(rest, k);
        rest -= binomial(top, k);
        terms.emplace_back(top, k);
    }
    return terms;
}

Integer pseudopower(const Integer& a, long long i) {
    if (i < 1) throw Error(ErrorCode::BadIndex, "pseudopower index must be at least 1");
    Integer out(0);
    for (const auto& [top, k] : binomial_expansion(a, i)) out += binomial(top + 1, k + 1);
    return out;
}

MSequenceResult is_m_sequence(const std::vector<Integer>& k) {
    const auto fail = [](std::size_t at) { return MSequenceResult{false, at}; };
    if (k.empty() || k[0] != 1) return fail(0);
    for (std::size_t i = 1; i < k.size(); ++i) {
        if (k[i] < 0) return fail(i);
        if (i >= 2 && k[i] > pseudopower(k[i - 1], static_cast<long long>(i - 1))) return fail(i);
    }
    return {};
}

GConditionReport check_g_conditions(const GradedVector& h) {
    GConditionReport r;
    if (h.size() == 0) return r;
    const std::size_t d = h.size() - 1;
    r.dehn_sommerville = true;
    for (std::size_t i = 0; i <= d; ++i)
        if (h[i] != h[d - i]) r.dehn_sommerville = false;
    r.unimodal = h[0] == 1;
    for (std::size_t i = 1; i <= d / 2; ++i)
        if (h[i] < h[i - 1]) r.unimodal = false;
    r.g_is_m = is_m_sequence(g_vector(h)).ok;
    return r;
}

GksReport gks_inequality(const SimplicialComplex& complex) {
    const int d = complex.dim();
    GksReport r;
    r.lhs = Integer(complex.num_faces(d));
    r.rhs = Integer(d + 2) * Integer(complex.num_faces(d - 1));
    r.holds = r.lhs <= r.rhs;
    return r;
}

GDeltaReport pachner_g_delta(const SimplicialComplex& before, const SimplicialComplex& after,
                             const BistellarMove& move) {
    const int dim = before.dim();
    if (after.dim() != dim) throw Error(ErrorCode::LawViolated, "bistellar move changed the dimension");
    GDeltaReport r;
    r.before = g_vector(h_vector(before));
    r.after = g_vector(h_vector(after));
    r.expected = r.before;
    const int k = move.index;
    if (2 * k < dim) r.expected[static_cast<std::size_t>(k + 1)] += 1;
    else if (2 * k > dim) r.expected[static_cast<std::size_t>(dim - k + 1)] -= 1;
    if (r.after != r.expected)
        throw Error(ErrorCode::LawViolated, "g-vector " + to_string(r.before) + " -> " + to_string(r.after) +
                                                " under a " + std::to_string(k) + "-move, expected " +
                                                to_string(r.expected));
    return r;
}

}  // namespace srlab
