/**
 * @file mes.hpp
 * @brief Minimal exclusion sequences and the collapsibility bound d(X, ≺).
 */
#pragma once

#include <algorithm>
#include <vector>

#include "sc/complex.hpp"

namespace sc {

/// A total order γ_1 ≺ … ≺ γ_m on the facets of one complex.
class FacetOrdering {
public:
    FacetOrdering() = default;

    /// Validates that @p order is a permutation of the facets of @p x.
    FacetOrdering(const SimplicialComplex& x, std::vector<Face> order) : order_(std::move(order))
    {
        std::vector<Face> sorted = order_;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != x.facets())
            throw Error("FacetOrdering: not a permutation of the facets");
    }

    /// The canonical (lexicographic) facet order.
    static FacetOrdering natural(const SimplicialComplex& x) { return FacetOrdering(x, x.facets()); }

    const std::vector<Face>& facets() const { return order_; }
    std::size_t size() const { return order_.size(); }

private:
    std::vector<Face> order_;
};

namespace detail {

inline std::vector<Vertex> mes_unchecked(Face gamma, const std::vector<Face>& ord)
{
    std::size_t j = 0;
    while (j < ord.size() && !gamma.is_subset_of(ord[j]))
        ++j;
    std::vector<Vertex> seq;
    seq.reserve(j);
    Face used;
    for (std::size_t k = 0; k < j; ++k) {
        const Face excluded = gamma - ord[k];
        const Face prior = used & excluded;
        const Vertex v = prior.empty() ? excluded.min_vertex() : prior.min_vertex();
        seq.push_back(v);
        used = used.with(v);
    }
    return seq;
}

} // namespace detail

/// mes(γ, ≺): null when γ ⊆ γ_1, otherwise (v_1, …, v_{j-1}) where γ_j is the
/// first facet containing γ and each v_k reuses the smallest earlier entry
/// excluded by γ_k if there is one, else takes min(γ ∖ γ_k).
inline std::vector<Vertex> mes(Face gamma, const SimplicialComplex& x, const FacetOrdering& ord)
{
    if (!x.contains(gamma))
        throw Error("mes: face " + to_string(gamma) + " is not in the complex");
    return detail::mes_unchecked(gamma, ord.facets());
}

/// M(γ, ≺): the set of vertices appearing in mes(γ, ≺).
inline Face mes_support(Face gamma, const SimplicialComplex& x, const FacetOrdering& ord)
{
    return Face::of(mes(gamma, x, ord));
}

/// d(X, ≺) = max over all faces γ of |M(γ, ≺)|.
inline int d_of_ordering(const SimplicialComplex& x, const FacetOrdering& ord)
{
    int best = 0;
    for (Face g : all_faces(x))
        best = std::max(best, Face::of(detail::mes_unchecked(g, ord.facets())).size());
    return best;
}

} // namespace sc
