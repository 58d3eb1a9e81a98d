/**
 * @file generators.hpp
 * @brief Deterministic instance generators: random complexes, pure and
 *        decomposable complexes, random hypergraphs and graphs, the star
 *        family, and named examples.
 *
 * All randomness flows from a 64-bit seed through std::mt19937_64 and the
 * portable bounded draw below, so identical specs give identical instances
 * on every platform.
 */
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "sc/complex.hpp"
#include "sc/decomposability.hpp"
#include "sc/hypergraph.hpp"

namespace sc {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n)
    {
        if (n == 0)
            throw Error("Rng::below: empty range");
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do
            x = eng_();
        while (x >= limit);
        return x % n;
    }

    /// Uniform integer in [lo, hi].
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    template <typename T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

    std::uint64_t next() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

/// splitmix64 step; derives independent per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Uniform random subset of {1, …, n} with exactly k elements.
inline Face random_subset(Rng& rng, int n, int k)
{
    std::vector<Vertex> vs;
    for (Vertex v = 1; v <= n; ++v)
        vs.push_back(v);
    rng.shuffle(vs);
    Face f;
    for (int i = 0; i < k; ++i)
        f = f.with(vs[static_cast<std::size_t>(i)]);
    return f;
}

/// m facets, each of uniform size in [1, max_size] on vertices {1..n}; canonicalized.
inline SimplicialComplex random_complex(Rng& rng, int n, int m, int max_size)
{
    if (n < 1 || n > kMaxVertex || m < 1 || max_size < 1)
        throw Error("random_complex: invalid parameters");
    max_size = std::min(max_size, n);
    std::vector<Face> fs;
    for (int i = 0; i < m; ++i)
        fs.push_back(random_subset(rng, n, rng.between(1, max_size)));
    return SimplicialComplex::from_facets(std::move(fs));
}

/// Pure complex: m random facets of exactly `size` vertices.
inline SimplicialComplex random_pure_complex(Rng& rng, int n, int m, int size)
{
    if (n < 1 || n > kMaxVertex || m < 1 || size < 1 || size > n)
        throw Error("random_pure_complex: invalid parameters");
    std::vector<Face> fs;
    for (int i = 0; i < m; ++i)
        fs.push_back(random_subset(rng, n, size));
    return SimplicialComplex::from_facets(std::move(fs));
}

/// Pure shellable complex grown facet by facet along a shelling.
inline SimplicialComplex random_shellable_complex(Rng& rng, int n, int m, int size)
{
    if (n < 1 || n > kMaxVertex || m < 1 || size < 1 || size > n)
        throw Error("random_shellable_complex: invalid parameters");
    std::vector<Face> placed{random_subset(rng, n, size)};
    for (int attempt = 0; static_cast<int>(placed.size()) < m && attempt < 40 * m; ++attempt) {
        // new facet = an existing ridge plus one fresh vertex
        const Face base = placed[rng.below(placed.size())];
        const auto bv = base.vertices();
        const Face ridge = base.without(bv[rng.below(bv.size())]);
        const Face outside = Face::from_bits(((std::uint64_t{1} << (n + 1)) - 2) & ~base.bits());
        if (outside.empty())
            break;
        const auto ov = outside.vertices();
        const Face f = ridge.with(ov[rng.below(ov.size())]);
        if (std::find(placed.begin(), placed.end(), f) != placed.end())
            continue;
        if (shelling_step_ok(placed, f))
            placed.push_back(f);
    }
    return SimplicialComplex::from_facets(std::move(placed));
}

/// Rejection sampler over shellable complexes for k-vertex decomposable
/// non-simplices. Throws after @p max_attempts draws.
inline SimplicialComplex random_kvd_complex(Rng& rng, int n, int k, int max_attempts = 10000)
{
    for (int a = 0; a < max_attempts; ++a) {
        const int vn = rng.between(3, n);
        const int size = rng.between(2, std::min(4, vn - 1));
        const int m = rng.between(2, 12);
        auto x = random_shellable_complex(rng, vn, m, size);
        if (x.is_simplex())
            continue;
        if (is_k_vertex_decomposable(x, k).decomposable)
            return x;
    }
    throw Error("random_kvd_complex: no sample found");
}

/// Drops isolated vertices (and the singleton edges on them) and relabels to [n'].
inline Hypergraph remove_isolated(const Hypergraph& h)
{
    std::vector<Vertex> keep;
    for (Vertex v = 1; v <= h.n(); ++v)
        if (!neighbors(h, v).empty())
            keep.push_back(v);
    std::vector<Vertex> image(static_cast<std::size_t>(h.n() + 1), 0);
    for (std::size_t i = 0; i < keep.size(); ++i)
        image[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i + 1);
    std::vector<Face> es;
    for (Face e : h.edges()) {
        if (e.size() == 1 && image[static_cast<std::size_t>(e.min_vertex())] == 0)
            continue;
        Face r;
        e.for_each_vertex([&](Vertex v) { r = r.with(image[static_cast<std::size_t>(v)]); });
        es.push_back(r);
    }
    return Hypergraph(static_cast<int>(keep.size()), std::move(es));
}

/// m random edges of uniform size in [min_size, max_size] on [n].
inline Hypergraph random_hypergraph(Rng& rng, int n, int m, int min_size, int max_size, bool drop_isolated)
{
    if (n < 1 || n > kMaxVertex || m < 1 || min_size < 1 || min_size > max_size)
        throw Error("random_hypergraph: invalid parameters");
    max_size = std::min(max_size, n);
    min_size = std::min(min_size, max_size);
    std::vector<Face> es;
    for (int i = 0; i < m; ++i)
        es.push_back(random_subset(rng, n, rng.between(min_size, max_size)));
    Hypergraph h(n, std::move(es));
    return drop_isolated ? remove_isolated(h) : h;
}

/// Erdős–Rényi graph G(n, num/den) as a 2-uniform hypergraph.
inline Hypergraph random_graph(Rng& rng, int n, std::uint64_t num, std::uint64_t den, bool drop_isolated)
{
    std::vector<Face> es;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (rng.chance(num, den))
                es.push_back(Face{u, v});
    Hypergraph h(n, std::move(es));
    return drop_isolated ? remove_isolated(h) : h;
}

/// Centers a_i = i for i = 1..n, then the leaves of each star in order.
/// Edges: star edges, {a_i, a_{i+1}}, and {a_1, …, a_n}.
inline Hypergraph star_family(const std::vector<int>& leaves)
{
    const int n = static_cast<int>(leaves.size());
    if (n < 2)
        throw Error("star_family: need at least two stars");
    std::vector<Face> es;
    Vertex next = n + 1;
    Face centers;
    for (int i = 1; i <= n; ++i) {
        if (leaves[static_cast<std::size_t>(i - 1)] < 1)
            throw Error("star_family: every star needs a leaf");
        for (int j = 0; j < leaves[static_cast<std::size_t>(i - 1)]; ++j)
            es.push_back(Face{i, next++});
        if (i < n)
            es.push_back(Face{i, i + 1});
        centers = centers.with(i);
    }
    es.push_back(centers);
    return Hypergraph(next - 1, std::move(es));
}

/// Named complexes used as golden cases.
inline SimplicialComplex named_complex(const std::string& name)
{
    using F = std::vector<std::vector<Vertex>>;
    if (name == "v6f10-6")
        return SimplicialComplex::from_facets(F{{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 6},
                                                {2, 4, 5}, {2, 5, 6}, {3, 4, 6}, {3, 5, 6}, {4, 5, 6}});
    if (name == "3-cycle")
        return SimplicialComplex::from_facets(F{{1, 2}, {1, 3}, {2, 3}});
    if (name == "tetrahedron-boundary")
        return boundary(Face{1, 2, 3, 4});
    if (name == "two-edges")
        return SimplicialComplex::from_facets(F{{1, 2}, {3, 4}});
    if (name == "strip")
        return SimplicialComplex::from_facets(F{{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}});
    if (name.rfind("simplex-", 0) == 0) {
        const int n = std::stoi(name.substr(8));
        Face f;
        for (Vertex v = 1; v <= n; ++v)
            f = f.with(v);
        return SimplicialComplex::simplex(f);
    }
    throw Error("named_complex: unknown name '" + name + "'");
}

inline std::vector<std::string> named_complexes()
{
    return {"v6f10-6", "3-cycle", "tetrahedron-boundary", "two-edges", "strip", "simplex-3"};
}

/// Parameters of one generated instance.
struct GeneratorSpec {
    std::string kind = "random-complex"; ///< random-complex | random-pure | random-kvd | random-hypergraph
                                         ///< | random-graph | star-family | named-example
    int n = 6;                            ///< vertex count (upper bound for sampled counts)
    int m = 0;                            ///< facets / edges; 0 = sampled
    int max_size = 0;                     ///< largest facet / edge; 0 = sampled
    int k = 1;                            ///< decomposability parameter for random-kvd
    std::vector<int> leaves;              ///< star-family leaf counts
    std::string name;                     ///< named-example
    std::uint64_t seed = 0;
};

using Instance = std::variant<SimplicialComplex, Hypergraph>;

inline bool is_hypergraph_kind(const std::string& kind)
{
    return kind == "random-hypergraph" || kind == "random-graph" || kind == "star-family";
}

inline Instance generate(const GeneratorSpec& spec)
{
    Rng rng(spec.seed);
    const std::string& k = spec.kind;
    if (k == "named-example")
        return named_complex(spec.name);
    if (k == "star-family")
        return star_family(spec.leaves.empty() ? std::vector<int>(static_cast<std::size_t>(spec.n), 1) : spec.leaves);
    if (spec.n < 1 || spec.n > kMaxVertex)
        throw Error("generate: n must lie in [1, 63]");
    if (k == "random-complex") {
        const int n = rng.between(std::min(3, spec.n), spec.n);
        const int m = spec.m > 0 ? spec.m : rng.between(1, 2 * n);
        const int s = spec.max_size > 0 ? spec.max_size : rng.between(2, std::min(4, n));
        return random_complex(rng, n, m, s);
    }
    if (k == "random-pure") {
        const int n = rng.between(std::min(3, spec.n), spec.n);
        const int size = spec.max_size > 0 ? std::min(spec.max_size, n) : rng.between(1, std::min(4, n));
        const int m = spec.m > 0 ? spec.m : rng.between(1, 2 * n);
        return random_pure_complex(rng, n, m, size);
    }
    if (k == "random-kvd")
        return random_kvd_complex(rng, std::max(3, spec.n), spec.k);
    if (k == "random-hypergraph") {
        for (int attempt = 0; attempt < 1000; ++attempt) {
            const int n = rng.between(std::min(2, spec.n), spec.n);
            const int m = spec.m > 0 ? spec.m : rng.between(1, 2 * n);
            const int s = spec.max_size > 0 ? spec.max_size : rng.between(2, std::min(4, n));
            auto h = random_hypergraph(rng, n, m, 1, s, true);
            if (h.n() >= 2)
                return h;
        }
        throw Error("generate: could not draw a hypergraph without isolated vertices");
    }
    if (k == "random-graph") {
        for (int attempt = 0; attempt < 1000; ++attempt) {
            const int n = rng.between(std::min(2, spec.n), spec.n);
            auto h = random_graph(rng, n, 1, 2, true);
            if (h.n() >= 2)
                return h;
        }
        throw Error("generate: could not draw a graph without isolated vertices");
    }
    throw Error("generate: unknown kind '" + k + "'");
}

} // namespace sc
