/**
 * @file hypergraph.hpp
 * @brief Hypergraphs on [n] = {1, …, n}, covers and independent sets, the
 *        non-cover complex NC(H), its lexicographic facet order, and exact
 *        solvers for the domination parameters γ_A, γ_i, γ̃, γ_si and γ_E.
 *
 * Neighbourhoods never contain the vertex itself: w ∈ N(v) iff w ≠ v and
 * some edge contains both.
 */
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sc/complex.hpp"
#include "sc/mes.hpp"
#include "sc/outcome.hpp"

namespace sc {

/// Raised when a domination parameter has no feasible witness.
class Infeasible : public Error {
public:
    using Error::Error;
};

class Hypergraph {
public:
    Hypergraph() = default;

    /// Edges are deduplicated and sorted; empty edges and labels outside [1, n] are rejected.
    Hypergraph(int n, std::vector<Face> edges) : n_(n), edges_(std::move(edges))
    {
        if (n < 0 || n > kMaxVertex)
            throw Error("Hypergraph: n must lie in [0, 63]");
        for (Face e : edges_) {
            if (e.empty())
                throw Error("Hypergraph: empty edge");
            if (!e.is_subset_of(all()))
                throw Error("Hypergraph: edge " + to_string(e) + " has a label outside [1, " + std::to_string(n) + "]");
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }

    Hypergraph(int n, const std::vector<std::vector<Vertex>>& edges) : Hypergraph(n, to_faces(edges)) {}

    int n() const { return n_; }
    const std::vector<Face>& edges() const { return edges_; }

    /// [n] as a vertex mask.
    Face all() const
    {
        return Face::from_bits(n_ == 0 ? 0 : ((n_ == 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n_ + 1)) - 1) &
                                              ~std::uint64_t{1}));
    }

    Face complement(Face a) const { return all() - a; }

    int max_edge_size() const
    {
        int m = 0;
        for (Face e : edges_)
            m = std::max(m, e.size());
        return m;
    }

    /// Inclusion-minimal edges.
    std::vector<Face> minimal_edges() const
    {
        std::vector<Face> out;
        for (Face e : edges_) {
            bool minimal = true;
            for (Face f : edges_)
                if (f != e && f.is_subset_of(e)) {
                    minimal = false;
                    break;
                }
            if (minimal)
                out.push_back(e);
        }
        return out;
    }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    static std::vector<Face> to_faces(const std::vector<std::vector<Vertex>>& raw)
    {
        std::vector<Face> out;
        for (const auto& e : raw)
            out.push_back(Face::of(e));
        return out;
    }

    int n_ = 0;
    std::vector<Face> edges_;
};

inline void check_vertex(const Hypergraph& h, Vertex v)
{
    if (v < 1 || v > h.n())
        throw Error("vertex " + std::to_string(v) + " outside [1, " + std::to_string(h.n()) + "]");
}

inline Face neighbors(const Hypergraph& h, Vertex v)
{
    check_vertex(h, v);
    Face out;
    for (Face e : h.edges())
        if (e.contains(v))
            out = out | e;
    return out.without(v);
}

/// N(A) = ∪_{v ∈ A} N(v).
inline Face neighbors_set(const Hypergraph& h, Face a)
{
    Face out;
    a.for_each_vertex([&](Vertex v) { out = out | neighbors(h, v); });
    return out;
}

inline bool has_isolated_vertex(const Hypergraph& h)
{
    for (Vertex v = 1; v <= h.n(); ++v)
        if (neighbors(h, v).empty())
            return true;
    return false;
}

inline bool is_cover(const Hypergraph& h, Face b)
{
    return std::all_of(h.edges().begin(), h.edges().end(), [&](Face e) { return e.intersects(b); });
}

inline bool is_independent(const Hypergraph& h, Face i)
{
    return std::none_of(h.edges().begin(), h.edges().end(), [&](Face e) { return e.is_subset_of(i); });
}

/// Independent, and every edge meets I in at most one vertex.
inline bool is_strongly_independent(const Hypergraph& h, Face i)
{
    return is_independent(h, i) &&
           std::all_of(h.edges().begin(), h.edges().end(), [&](Face e) { return (e & i).size() <= 1; });
}

/// NC(H): facets are the complements of the inclusion-minimal edges.
inline SimplicialComplex non_cover_complex(const Hypergraph& h)
{
    std::vector<Face> fs;
    for (Face e : h.minimal_edges())
        fs.push_back(h.complement(e));
    return SimplicialComplex::from_facets(std::move(fs));
}

/// Lexicographic comparison of edges written as decreasing sequences.
inline bool edge_lex_less(Face a, Face b)
{
    auto da = a.vertices();
    auto db = b.vertices();
    std::reverse(da.begin(), da.end());
    std::reverse(db.begin(), db.end());
    return std::lexicographical_compare(da.begin(), da.end(), db.begin(), db.end());
}

/// Facets of NC(H) ordered by their complementary edges under edge_lex_less.
inline FacetOrdering nc_facet_order(const Hypergraph& h)
{
    const auto nc = non_cover_complex(h);
    if (nc.empty())
        throw Error("nc_facet_order: the non-cover complex is empty");
    std::vector<Face> fs = nc.facets();
    std::sort(fs.begin(), fs.end(),
              [&](Face x, Face y) { return edge_lex_less(h.complement(x), h.complement(y)); });
    return FacetOrdering(nc, std::move(fs));
}

struct DominationResult {
    int value = 0;
    Face witness;                         ///< dominating vertex set (or union of the edge family)
    Face target;                          ///< the set being dominated (or the maximizing set)
    std::vector<Face> edge_witness;       ///< γ_E only
};

namespace detail {

/// Smallest subset of @p pool (increasing cardinality, then lexicographic) satisfying @p ok.
inline std::optional<Face> smallest_subset(Face pool, const std::function<bool(Face)>& ok)
{
    for (int k = 0; k <= pool.size(); ++k) {
        std::optional<Face> found;
        for_each_subset_of_size(pool, k, [&](Face s) {
            if (!found && ok(s))
                found = s;
        });
        if (found)
            return found;
    }
    return std::nullopt;
}

} // namespace detail

inline bool dominates(const Hypergraph& h, Face w, Face a) { return a.is_subset_of(neighbors_set(h, w)); }

/// γ_A(H) = min{ |W| : W ⊆ V ∖ A, A ⊆ N(W) }.
inline DominationResult gamma_A(const Hypergraph& h, Face a)
{
    if (!a.is_subset_of(h.all()))
        throw Error("gamma_A: set outside [1, n]");
    const Face pool = h.complement(a);
    if (!dominates(h, pool, a))
        throw Infeasible("gamma_A: " + to_string(a) + " cannot be dominated from its complement");
    const auto w = detail::smallest_subset(pool, [&](Face s) { return dominates(h, s, a); });
    return {w->size(), *w, a, {}};
}

/// Maximal independent sets, i.e. complements of the minimal covers.
inline std::vector<Face> maximal_independent_sets(const Hypergraph& h)
{
    std::vector<Face> out;
    const Face all = h.all();
    std::function<void(Vertex, Face)> rec = [&](Vertex v, Face cur) {
        if (v > h.n()) {
            bool maximal = true;
            all.for_each_vertex([&](Vertex u) {
                if (maximal && !cur.contains(u) && is_independent(h, cur.with(u)))
                    maximal = false;
            });
            if (maximal)
                out.push_back(cur);
            return;
        }
        if (is_independent(h, cur.with(v)))
            rec(v + 1, cur.with(v));
        rec(v + 1, cur);
    };
    rec(1, Face{});
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Face> minimal_covers(const Hypergraph& h)
{
    std::vector<Face> out;
    for (Face i : maximal_independent_sets(h))
        out.push_back(h.complement(i));
    std::sort(out.begin(), out.end());
    return out;
}

inline void require_no_isolated(const Hypergraph& h, const char* who)
{
    if (has_isolated_vertex(h))
        throw Error(std::string(who) + ": hypergraph has an isolated vertex");
}

/// γ_i(H) = max over independent I of γ_I(H). Since γ_A is monotone in A,
/// only maximal independent sets are examined. target = the maximizing I.
inline DominationResult gamma_i(const Hypergraph& h)
{
    require_no_isolated(h, "gamma_i");
    DominationResult best{-1, {}, {}, {}};
    for (Face i : maximal_independent_sets(h)) {
        auto r = gamma_A(h, i);
        if (r.value > best.value)
            best = r;
    }
    return best;
}

/// B strongly totally dominates v: some edge e ∋ v has e ∖ {v} ⊆ B.
inline bool strongly_dominates_vertex(const Hypergraph& h, Face b, Vertex v)
{
    for (Face e : h.edges())
        if (e.contains(v) && e.without(v).is_subset_of(b))
            return true;
    return false;
}

/// B strongly dominates every vertex of W.
inline bool strongly_dominates(const Hypergraph& h, Face b, Face w)
{
    bool ok = true;
    w.for_each_vertex([&](Vertex v) { ok = ok && strongly_dominates_vertex(h, b, v); });
    return ok;
}

/// γ(H; W) = min{ |B| : B ⊆ V, B strongly dominates W }.
inline DominationResult gamma_strong(const Hypergraph& h, Face w)
{
    if (!strongly_dominates(h, h.all(), w))
        throw Infeasible("gamma_strong: " + to_string(w) + " cannot be strongly dominated");
    const auto b = detail::smallest_subset(h.all(), [&](Face s) { return strongly_dominates(h, s, w); });
    return {b->size(), *b, w, {}};
}

/// γ̃(H) = γ(H; V).
inline DominationResult gamma_tilde(const Hypergraph& h)
{
    require_no_isolated(h, "gamma_tilde");
    return gamma_strong(h, h.all());
}

/// γ_si(H) = max over strongly independent I of γ(H; I).
inline DominationResult gamma_si(const Hypergraph& h)
{
    require_no_isolated(h, "gamma_si");
    DominationResult best{-1, {}, {}, {}};
    // γ(H; I) is monotone in I, so maximal strongly independent sets suffice.
    std::vector<Face> candidates;
    std::function<void(Vertex, Face)> rec = [&](Vertex v, Face cur) {
        if (v > h.n()) {
            bool maximal = true;
            h.all().for_each_vertex([&](Vertex u) {
                if (maximal && !cur.contains(u) && is_strongly_independent(h, cur.with(u)))
                    maximal = false;
            });
            if (maximal)
                candidates.push_back(cur);
            return;
        }
        if (is_strongly_independent(h, cur.with(v)))
            rec(v + 1, cur.with(v));
        rec(v + 1, cur);
    };
    rec(1, Face{});
    std::sort(candidates.begin(), candidates.end());
    for (Face i : candidates) {
        auto r = gamma_strong(h, i);
        if (r.value > best.value)
            best = r;
    }
    return best;
}

/// γ_E(H) = min{ |F| : F ⊆ E, ∪F strongly dominates V }.
inline DominationResult gamma_E(const Hypergraph& h)
{
    require_no_isolated(h, "gamma_E");
    const auto& es = h.edges();
    const int m = static_cast<int>(es.size());
    if (m > 63)
        throw Error("gamma_E: more than 63 edges");
    const Face all_edges = Face::from_bits((std::uint64_t{1} << m) - 1);
    const auto pick = detail::smallest_subset(all_edges, [&](Face idx) {
        Face u;
        idx.for_each_vertex([&](Vertex i) { u = u | es[static_cast<std::size_t>(i)]; });
        return strongly_dominates(h, u, h.all());
    });
    if (!pick)
        throw Infeasible("gamma_E: no edge family strongly dominates V");
    DominationResult r{pick->size(), {}, h.all(), {}};
    pick->for_each_vertex([&](Vertex i) {
        r.edge_witness.push_back(es[static_cast<std::size_t>(i)]);
        r.witness = r.witness | es[static_cast<std::size_t>(i)];
    });
    return r;
}

inline bool is_minimal_cover(const Hypergraph& h, Face d)
{
    if (!is_cover(h, d))
        return false;
    bool minimal = true;
    d.for_each_vertex([&](Vertex v) { minimal = minimal && !is_cover(h, d.without(v)); });
    return minimal;
}

/// |N(S) ∩ D̄| − |S| ≤ |D̄| − γ_{D̄}(H) for a minimal cover D and S ⊆ D.
inline CheckOutcome neighbor_inequality_check(const Hypergraph& h, Face d, Face s)
{
    if (has_isolated_vertex(h) || !is_minimal_cover(h, d) || !s.is_subset_of(d))
        return CheckOutcome::PreconditionFails;
    const Face dbar = h.complement(d);
    const int lhs = (neighbors_set(h, s) & dbar).size() - s.size();
    const int rhs = dbar.size() - gamma_A(h, dbar).value;
    return lhs <= rhs ? CheckOutcome::Holds : CheckOutcome::Violated;
}

/// A vertex permutation of [n]; image[v] is the new label of v (image[0] unused).
struct Relabeling {
    std::vector<Vertex> image;

    Face apply(Face f) const
    {
        Face out;
        f.for_each_vertex([&](Vertex v) { out = out.with(image[static_cast<std::size_t>(v)]); });
        return out;
    }
};

/// Relabels H so that @p d becomes the initial segment {1, …, |D|}; the
/// relative order inside D and inside its complement is preserved.
inline std::pair<Hypergraph, Relabeling> relabel_prefix(const Hypergraph& h, Face d)
{
    if (!d.is_subset_of(h.all()))
        throw Error("relabel_prefix: set outside [1, n]");
    Relabeling r;
    r.image.assign(static_cast<std::size_t>(h.n() + 1), 0);
    Vertex next = 1;
    d.for_each_vertex([&](Vertex v) { r.image[static_cast<std::size_t>(v)] = next++; });
    h.complement(d).for_each_vertex([&](Vertex v) { r.image[static_cast<std::size_t>(v)] = next++; });
    std::vector<Face> es;
    for (Face e : h.edges())
        es.push_back(r.apply(e));
    return {Hypergraph(h.n(), std::move(es)), r};
}

/// H relabeled so that D = V \ I is the initial segment {1, …, |D|}, where I is
/// a maximal independent set with γ_I = γ_i(H). d(NC(H), ≺) depends on the
/// labeling and the bound n - γ_i - 1 needs this D: its last step uses
/// γ_{V \ D} ≥ γ_i. On the path 1-4-2-3 the cover {1, 2} gives d = 2 > 1,
/// while the cover {2, 4} from I = {1, 3} gives d = 1.
inline std::pair<Hypergraph, Relabeling> prefix_cover_form(const Hypergraph& h)
{
    Face i = gamma_i(h).target;
    // γ_A only grows with A, so extending I keeps it maximizing
    for (Vertex v = 1; v <= h.n(); ++v)
        if (!i.contains(v) && is_independent(h, i.with(v)))
            i = i.with(v);
    return relabel_prefix(h, h.complement(i));
}

/// d(NC(H), ≺) under prefix_cover_form; 0 when NC(H) is empty.
inline int nc_prefix_d(const Hypergraph& h)
{
    const auto hp = prefix_cover_form(h).first;
    const auto nc = non_cover_complex(hp);
    return nc.empty() ? 0 : d_of_ordering(nc, nc_facet_order(hp));
}

/// For faces γ, γ′ of NC(H) under the lexicographic facet order, with
/// D = {1, …, |D|} a minimal cover: if γ̄ ∩ D = γ̄′ ∩ D and H[γ̄ ∩ D] has an
/// edge then mes(γ) = mes(γ′). Hypothesis failures are reported as such.
inline CheckOutcome mes_equal_check(const Hypergraph& h, Face d, Face gamma, Face gamma_prime)
{
    const Face prefix = Face::from_bits(((std::uint64_t{1} << (d.size() + 1)) - 1) & ~std::uint64_t{1});
    if (d != prefix || !is_minimal_cover(h, d))
        return CheckOutcome::PreconditionFails;
    const auto nc = non_cover_complex(h);
    if (nc.empty() || !nc.contains(gamma) || !nc.contains(gamma_prime))
        return CheckOutcome::PreconditionFails;
    const Face cut = h.complement(gamma) & d;
    if (cut != (h.complement(gamma_prime) & d))
        return CheckOutcome::PreconditionFails;
    const bool has_edge =
        std::any_of(h.edges().begin(), h.edges().end(), [&](Face e) { return e.is_subset_of(cut); });
    if (!has_edge)
        return CheckOutcome::PreconditionFails;
    const auto ord = nc_facet_order(h);
    return mes(gamma, nc, ord) == mes(gamma_prime, nc, ord) ? CheckOutcome::Holds : CheckOutcome::Violated;
}

/// |V(H)| − γ_i(H) − 1, the bound on C(NC(H)) for isolated-vertex-free H.
inline int nc_collapsibility_bound(const Hypergraph& h) { return h.n() - gamma_i(h).value - 1; }


} // namespace sc
