/**
 * @file complex.hpp
 * @brief Finite simplicial complexes in canonical facet form and the
 *        structural operations on them (link, deletion, induced
 *        subcomplexes, skeletons, free pairs, elementary collapses).
 *
 * A complex is stored as its facets: an antichain of faces, sorted
 * lexicographically. The empty complex is the empty facet list; the complex
 * {∅} is identified with it. Equality is label-sensitive.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "sc/face.hpp"

namespace sc {

/// Sort, drop empty faces, duplicates and non-maximal faces. In-place.
inline void maximalize(std::vector<Face>& fs)
{
    std::erase_if(fs, [](Face f) { return f.empty(); });
    // Larger faces first so every candidate is compared against all of its supersets.
    std::sort(fs.begin(), fs.end(), [](Face a, Face b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a.bits() < b.bits();
    });
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    std::vector<Face> kept;
    kept.reserve(fs.size());
    for (Face f : fs) {
        bool covered = false;
        for (Face g : kept) {
            if (g.size() == f.size())
                break;
            if (f.is_subset_of(g)) {
                covered = true;
                break;
            }
        }
        if (!covered)
            kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    fs = std::move(kept);
}

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Canonicalizing constructor: duplicates and non-maximal sets are removed.
    static SimplicialComplex from_facets(std::vector<Face> raw)
    {
        maximalize(raw);
        return SimplicialComplex(std::move(raw), Canonical{});
    }

    static SimplicialComplex from_facets(const std::vector<std::vector<Vertex>>& raw)
    {
        std::vector<Face> fs;
        fs.reserve(raw.size());
        for (const auto& r : raw)
            fs.push_back(Face::of(r));
        return from_facets(std::move(fs));
    }

    static SimplicialComplex simplex(Face f) { return from_facets(std::vector<Face>{f}); }

    const std::vector<Face>& facets() const { return facets_; }
    Face vertex_set() const { return vertices_; }
    int num_vertices() const { return vertices_.size(); }
    std::size_t num_facets() const { return facets_.size(); }
    bool empty() const { return facets_.empty(); }

    /// Dimension; -1 for the empty complex.
    int dim() const
    {
        int d = -1;
        for (Face f : facets_)
            d = std::max(d, f.dim());
        return d;
    }

    /// True for a single facet. The empty complex counts as the (-1)-simplex.
    bool is_simplex() const { return facets_.size() <= 1; }

    bool contains(Face f) const
    {
        if (facets_.empty())
            return false;
        for (Face g : facets_)
            if (f.is_subset_of(g))
                return true;
        return false;
    }

    bool is_facet(Face f) const { return std::binary_search(facets_.begin(), facets_.end(), f); }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

    std::size_t hash() const
    {
        std::uint64_t h = 1469598103934665603ull;
        for (Face f : facets_) {
            h ^= f.bits();
            h *= 1099511628211ull;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }

private:
    struct Canonical {};
    SimplicialComplex(std::vector<Face> canonical, Canonical) : facets_(std::move(canonical))
    {
        for (Face f : facets_)
            vertices_ = vertices_ | f;
    }

    std::vector<Face> facets_;
    Face vertices_;
};

struct FreePair {
    Face free_face;
    Face maximal_face;

    friend bool operator==(const FreePair&, const FreePair&) = default;
};

inline int dim(const SimplicialComplex& x) { return x.dim(); }

inline bool is_pure(const SimplicialComplex& x)
{
    const auto& fs = x.facets();
    return std::all_of(fs.begin(), fs.end(), [&](Face f) { return f.size() == fs.front().size(); });
}

/// Every face of @p x (the empty face included when x is nonempty), sorted.
inline std::vector<Face> all_faces(const SimplicialComplex& x)
{
    std::unordered_set<std::uint64_t> seen;
    for (Face f : x.facets())
        for_each_subset(f, [&](Face s) { seen.insert(s.bits()); });
    std::vector<Face> out;
    out.reserve(seen.size());
    for (auto b : seen)
        out.push_back(Face::from_bits(b));
    std::sort(out.begin(), out.end());
    return out;
}

/// Faces of dimension exactly @p k; k = -1 yields {∅} unless x is empty.
inline std::vector<Face> faces(const SimplicialComplex& x, int k)
{
    if (k < -1)
        throw Error("faces: dimension must be >= -1");
    std::unordered_set<std::uint64_t> seen;
    for (Face f : x.facets())
        for_each_subset_of_size(f, k + 1, [&](Face s) { seen.insert(s.bits()); });
    std::vector<Face> out;
    for (auto b : seen)
        out.push_back(Face::from_bits(b));
    std::sort(out.begin(), out.end());
    return out;
}

/// lk(σ, X) = {τ : σ∩τ = ∅, σ∪τ ∈ X}.
inline SimplicialComplex link(const SimplicialComplex& x, Face sigma)
{
    if (!x.contains(sigma))
        throw Error("link: face " + to_string(sigma) + " is not in the complex");
    std::vector<Face> fs;
    for (Face f : x.facets())
        if (sigma.is_subset_of(f))
            fs.push_back(f - sigma);
    return SimplicialComplex::from_facets(std::move(fs));
}

/// del(σ, X) = {τ ∈ X : σ ⊄ τ}. Rejects σ = ∅.
inline SimplicialComplex deletion(const SimplicialComplex& x, Face sigma)
{
    if (sigma.empty())
        throw Error("deletion: the empty face cannot be deleted");
    std::vector<Face> fs;
    for (Face f : x.facets()) {
        if (!sigma.is_subset_of(f)) {
            fs.push_back(f);
            continue;
        }
        sigma.for_each_vertex([&](Vertex v) { fs.push_back(f.without(v)); });
    }
    return SimplicialComplex::from_facets(std::move(fs));
}

/// X[A] = {σ ∈ X : σ ⊆ A}.
inline SimplicialComplex induced(const SimplicialComplex& x, Face a)
{
    std::vector<Face> fs;
    fs.reserve(x.num_facets());
    for (Face f : x.facets())
        fs.push_back(f & a);
    return SimplicialComplex::from_facets(std::move(fs));
}

/// Non-cone k-faces: σ of dimension k with lk(σ, X) ≠ X[V(X) ∖ σ].
inline std::vector<Face> open_k_faces(const SimplicialComplex& x, int k)
{
    if (k < 0)
        throw Error("open_k_faces: k must be >= 0");
    std::vector<Face> out;
    for (Face s : faces(x, k))
        if (link(x, s) != induced(x, x.vertex_set() - s))
            out.push_back(s);
    return out;
}

/// True when γ lies in exactly one facet, namely @p sigma.
inline bool is_free_in(const SimplicialComplex& x, Face gamma, Face sigma)
{
    if (!gamma.is_subset_of(sigma) || !x.is_facet(sigma))
        return false;
    if (gamma.empty())
        return x.num_facets() == 1;
    for (Face f : x.facets())
        if (f != sigma && gamma.is_subset_of(f))
            return false;
    return true;
}

namespace detail {

/// Free faces of facet @p sigma with at most @p d vertices; γ = ∅ excluded.
template <typename Fn>
void for_each_free_face(std::span<const Face> facets, Face sigma, int d, Fn&& fn)
{
    // γ ⊆ σ is free iff it is contained in none of the shared parts σ ∩ τ.
    std::vector<Face> shared;
    for (Face t : facets)
        if (t != sigma)
            shared.push_back(sigma & t);
    for_each_subset(sigma, [&](Face g) {
        if (g.empty() || g.size() > d)
            return;
        for (Face s : shared)
            if (g.is_subset_of(s))
                return;
        fn(g);
    });
}

} // namespace detail

/// All free pairs (γ, σ) with |γ| ≤ d. (∅, σ) appears exactly when X is a simplex.
inline std::vector<FreePair> free_pairs(const SimplicialComplex& x, int d)
{
    if (d < 0)
        throw Error("free_pairs: d must be >= 0");
    std::vector<FreePair> out;
    if (x.num_facets() == 1)
        out.push_back({Face{}, x.facets().front()});
    for (Face s : x.facets())
        detail::for_each_free_face(x.facets(), s, d, [&](Face g) { out.push_back({g, s}); });
    std::sort(out.begin(), out.end(), [](const FreePair& a, const FreePair& b) {
        if (a.free_face.size() != b.free_face.size())
            return a.free_face.size() < b.free_face.size();
        if (a.free_face != b.free_face)
            return a.free_face < b.free_face;
        return a.maximal_face < b.maximal_face;
    });
    return out;
}

/// Facets after removing the interval [γ, σ]; no validation.
inline std::vector<Face> collapse_facets(std::span<const Face> facets, Face gamma, Face sigma)
{
    std::vector<Face> fs;
    if (gamma.empty())
        return fs;
    fs.reserve(facets.size() + static_cast<std::size_t>(gamma.size()));
    for (Face f : facets)
        if (f != sigma)
            fs.push_back(f);
    gamma.for_each_vertex([&](Vertex v) { fs.push_back(sigma.without(v)); });
    maximalize(fs);
    return fs;
}

inline SimplicialComplex elementary_collapse(const SimplicialComplex& x, const FreePair& p)
{
    if (!is_free_in(x, p.free_face, p.maximal_face))
        throw Error("elementary_collapse: (" + to_string(p.free_face) + ", " + to_string(p.maximal_face) +
                    ") is not a free pair");
    return SimplicialComplex::from_facets(collapse_facets(x.facets(), p.free_face, p.maximal_face));
}

/// Join of complexes on disjoint vertex sets.
inline SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y)
{
    if (x.vertex_set().intersects(y.vertex_set()))
        throw Error("join: vertex sets must be disjoint");
    if (x.empty())
        return y;
    if (y.empty())
        return x;
    std::vector<Face> fs;
    for (Face f : x.facets())
        for (Face g : y.facets())
            fs.push_back(f | g);
    return SimplicialComplex::from_facets(std::move(fs));
}

/// Faces of dimension ≤ n.
inline SimplicialComplex skeleton(const SimplicialComplex& x, int n)
{
    if (n > x.dim())
        throw Error("skeleton: n exceeds the dimension");
    if (n < 0)
        return {};
    std::vector<Face> fs;
    for (Face f : x.facets()) {
        if (f.dim() <= n)
            fs.push_back(f);
        else
            for_each_subset_of_size(f, n + 1, [&](Face s) { fs.push_back(s); });
    }
    return SimplicialComplex::from_facets(std::move(fs));
}

/// Subcomplex spanned by the n-faces.
inline SimplicialComplex pure_skeleton(const SimplicialComplex& x, int n)
{
    if (n > x.dim())
        throw Error("pure_skeleton: n exceeds the dimension");
    if (n < 0)
        return {};
    return SimplicialComplex::from_facets(faces(x, n));
}

/// ∂σ = proper faces of σ.
inline SimplicialComplex boundary(Face sigma)
{
    std::vector<Face> fs;
    sigma.for_each_vertex([&](Vertex v) { fs.push_back(sigma.without(v)); });
    return SimplicialComplex::from_facets(std::move(fs));
}

inline std::string to_string(const SimplicialComplex& x)
{
    std::string s = "[";
    for (std::size_t i = 0; i < x.facets().size(); ++i) {
        if (i)
            s += ',';
        s += to_string(x.facets()[i]);
    }
    return s + "]";
}

struct ComplexHash {
    std::size_t operator()(const SimplicialComplex& x) const noexcept { return x.hash(); }
};

} // namespace sc
