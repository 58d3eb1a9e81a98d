/**
 * @file decomposability.hpp
 * @brief Cohen–Macaulayness, shellability and k-vertex decomposability.
 */
#pragma once

#include <functional>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sc/collapse.hpp"
#include "sc/homology.hpp"
#include "sc/outcome.hpp"

namespace sc {

/// Pure X with every link lk(σ, X), σ ∈ X ∪ {∅}, homologically (dim lk − 1)-connected.
inline bool is_cohen_macaulay(const SimplicialComplex& x, const Field& field = Field::rationals())
{
    if (!is_pure(x))
        return false;
    if (x.empty())
        return true;
    for (Face s : all_faces(x)) {
        const auto lk = link(x, s);
        if (!is_homologically_connected(lk, lk.dim() - 1, field))
            return false;
    }
    return true;
}

/// Pure X with every induced subcomplex X[A], A ⊆ V(X), homologically (dim X[A] − 1)-connected.
inline bool is_cohen_macaulay_induced(const SimplicialComplex& x, const Field& field = Field::rationals())
{
    if (!is_pure(x))
        return false;
    const auto vs = x.vertex_set().vertices();
    const std::size_t n = vs.size();
    if (static_cast<int>(n) > kLerayBruteForceVertexCap)
        throw Error("is_cohen_macaulay_induced: too many vertices");
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        Face a;
        for (std::size_t i = 0; i < n; ++i)
            if ((m >> i) & 1u)
                a = a.with(vs[i]);
        const auto sub = induced(x, a);
        if (!is_homologically_connected(sub, sub.dim() - 1, field))
            return false;
    }
    return true;
}

struct ShellabilityResult {
    bool shellable = false;
    std::optional<std::vector<Face>> order;
};

/// True when (∪ placed) ∩ next is pure of dimension dim(next) − 1.
inline bool shelling_step_ok(const std::vector<Face>& placed, Face next)
{
    std::vector<Face> meets;
    meets.reserve(placed.size());
    for (Face g : placed)
        meets.push_back(g & next);
    maximalize(meets);
    if (meets.empty()) // intersection is {∅}: fine only for 0-dimensional facets
        return next.size() == 1;
    for (Face m : meets)
        if (m.size() != next.size() - 1)
            return false;
    return true;
}

/// Backtracking over facet orders; feasibility depends only on the placed set,
/// which is memoized.
inline ShellabilityResult is_shellable(const SimplicialComplex& x, std::uint64_t max_nodes = kDefaultNodeBudget)
{
    if (!is_pure(x))
        throw Error("is_shellable: complex is not pure");
    const auto& fs = x.facets();
    const std::size_t m = fs.size();
    if (m <= 1)
        return {true, fs};
    Budget budget(max_nodes);
    using Mask = std::vector<std::uint64_t>;
    struct MaskHash {
        std::size_t operator()(const Mask& v) const noexcept
        {
            std::size_t h = 0;
            for (auto w : v)
                h = h * 1000003u ^ std::hash<std::uint64_t>{}(w);
            return h;
        }
    };
    std::unordered_set<Mask, MaskHash> dead;
    Mask used((m + 63) / 64, 0);
    std::vector<Face> order;

    auto set_bit = [&](std::size_t i, bool on) {
        if (on)
            used[i / 64] |= std::uint64_t{1} << (i % 64);
        else
            used[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    };
    auto has_bit = [&](std::size_t i) { return (used[i / 64] >> (i % 64)) & 1u; };

    std::function<bool()> dfs = [&]() -> bool {
        if (order.size() == m)
            return true;
        budget.tick("is_shellable");
        if (dead.contains(used))
            return false;
        for (std::size_t i = 0; i < m; ++i) {
            if (has_bit(i))
                continue;
            if (!order.empty() && !shelling_step_ok(order, fs[i]))
                continue;
            set_bit(i, true);
            order.push_back(fs[i]);
            if (dfs())
                return true;
            order.pop_back();
            set_bit(i, false);
        }
        dead.insert(used);
        return false;
    };
    if (dfs())
        return {true, order};
    return {false, std::nullopt};
}

struct SheddingWitness {
    Face face;
    int dim_bound = 0;
    friend bool operator==(const SheddingWitness&, const SheddingWitness&) = default;
};

/// A shedding face: nonempty σ ∈ X, dim σ ≤ k, del(σ, X) pure of dimension dim X.
inline bool is_shedding_face(const SimplicialComplex& x, Face sigma, int k)
{
    if (sigma.empty() || sigma.dim() > k || !x.contains(sigma))
        return false;
    const auto del = deletion(x, sigma);
    return is_pure(del) && del.dim() == x.dim();
}

struct DecomposabilityResult {
    bool decomposable = false;
    /// Shedding faces in preorder: at each non-simplex node, its face, then
    /// the deletion's subtree, then the link's subtree.
    std::optional<std::vector<SheddingWitness>> witness;
};

namespace detail {

class KvdSearch {
public:
    KvdSearch(int k, std::uint64_t max_nodes) : k_(k), budget_(max_nodes) {}

    bool decide(const SimplicialComplex& x)
    {
        if (x.is_simplex())
            return true;
        if (auto it = memo_.find(x); it != memo_.end())
            return it->second.has_value();
        budget_.tick("is_k_vertex_decomposable");
        std::optional<Face> chosen;
        // dimension ascending, then lexicographic
        for (int d = 0; d <= k_ && !chosen; ++d) {
            for (Face s : faces(x, d)) {
                if (!is_shedding_face(x, s, k_))
                    continue;
                if (decide(deletion(x, s)) && decide(link(x, s))) {
                    chosen = s;
                    break;
                }
            }
        }
        memo_.emplace(x, chosen);
        return chosen.has_value();
    }

    void witness(const SimplicialComplex& x, std::vector<SheddingWitness>& out) const
    {
        if (x.is_simplex())
            return;
        const Face s = *memo_.at(x);
        out.push_back({s, k_});
        witness(deletion(x, s), out);
        witness(link(x, s), out);
    }

private:
    int k_;
    Budget budget_;
    std::unordered_map<SimplicialComplex, std::optional<Face>, ComplexHash> memo_;
};

inline bool replay_shedding_at(const SimplicialComplex& x, int k, const std::vector<SheddingWitness>& seq,
                               std::size_t& pos)
{
    if (x.is_simplex())
        return true;
    if (pos >= seq.size())
        return false;
    const auto& w = seq[pos++];
    if (w.dim_bound != k || !is_shedding_face(x, w.face, k))
        return false;
    return replay_shedding_at(deletion(x, w.face), k, seq, pos) && replay_shedding_at(link(x, w.face), k, seq, pos);
}

} // namespace detail

inline DecomposabilityResult is_k_vertex_decomposable(const SimplicialComplex& x, int k,
                                                      std::uint64_t max_nodes = kDefaultNodeBudget)
{
    if (k < 0)
        throw Error("is_k_vertex_decomposable: k must be >= 0");
    if (!is_pure(x))
        throw Error("is_k_vertex_decomposable: complex is not pure");
    detail::KvdSearch search(k, max_nodes);
    if (!search.decide(x))
        return {false, std::nullopt};
    std::vector<SheddingWitness> w;
    search.witness(x, w);
    return {true, std::move(w)};
}

/// Re-validates a shedding sequence produced by is_k_vertex_decomposable.
inline bool replay_shedding_sequence(const SimplicialComplex& x, int k, const std::vector<SheddingWitness>& seq)
{
    if (!is_pure(x))
        return false;
    std::size_t pos = 0;
    return detail::replay_shedding_at(x, k, seq, pos) && pos == seq.size();
}

/// For a shedding face σ (k = dim σ) with del(σ, X) Cohen–Macaulay:
/// L(X) ≥ max{ L(del(σ, X)), L(lk(σ, X)) + k + 1 }.
inline CheckOutcome shedding_leray_inequality_check(const SimplicialComplex& x, Face sigma,
                                                    const Field& field = Field::rationals())
{
    if (!is_pure(x) || !is_shedding_face(x, sigma, sigma.dim()))
        return CheckOutcome::PreconditionFails;
    const auto del = deletion(x, sigma);
    if (!is_cohen_macaulay(del, field))
        return CheckOutcome::PreconditionFails;
    const int lx = leray_number(x, field);
    const int rhs = std::max(leray_number(del, field), leray_number(link(x, sigma), field) + sigma.size());
    return lx >= rhs ? CheckOutcome::Holds : CheckOutcome::Violated;
}

} // namespace sc
