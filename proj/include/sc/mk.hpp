/**
 * @file mk.hpp
 * @brief The recursive upper bounds M_0 = M and M_k, M'_k for the
 *        collapsibility number, plus the link/deletion inequality probes.
 *
 *   M_0(X)  = 0 if X has no non-cone vertex, else
 *             min_{v ∈ X^o} max{ M_0(lk v) + 1, M_0(del v) }
 *   M'_k(X) = M_{k-1}(X) if X_(k)^o = ∅, else
 *             min_{σ ∈ X_(k)^o} max{ M'_k(del σ), M'_k(lk σ) + k + 1 }
 *   M_k(X)  = min{ M'_k(X), M_{k-1}(X) }
 */
#pragma once

#include <algorithm>
#include <climits>
#include <unordered_map>

#include "sc/collapse.hpp"
#include "sc/complex.hpp"

namespace sc {

/// Memo for one top-level evaluation. Keys are exact labeled facet sets.
class MkEvaluator {
public:
    explicit MkEvaluator(std::uint64_t max_nodes = kDefaultNodeBudget) : budget_(max_nodes) {}

    int m0(const SimplicialComplex& x) { return value(x, 0, Tag::Full); }

    int mk(const SimplicialComplex& x, int k)
    {
        check_k(k);
        return value(x, k, Tag::Full);
    }

    int mk_prime(const SimplicialComplex& x, int k)
    {
        check_k(k);
        return value(x, k, Tag::Prime);
    }

    const Budget& budget() const { return budget_; }
    std::size_t memo_size() const { return memo_.size(); }

private:
    enum class Tag : int { Full = 0, Prime = 1 };

    struct Key {
        SimplicialComplex x;
        int k;
        Tag tag;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& key) const noexcept
        {
            return key.x.hash() ^ (static_cast<std::size_t>(key.k) * 0x9e3779b97f4a7c15ull) ^
                   (static_cast<std::size_t>(key.tag) << 7);
        }
    };

    static void check_k(int k)
    {
        if (k < 0)
            throw Error("M_k: k must be >= 0");
    }

    int value(const SimplicialComplex& x, int k, Tag tag)
    {
        if (k == 0)
            tag = Tag::Full; // M'_0 = M_0
        Key key{x, k, tag};
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        budget_.tick("M_k");
        int r;
        if (k == 0)
            r = compute_m0(x);
        else if (tag == Tag::Prime)
            r = compute_prime(x, k);
        else
            r = std::min(value(x, k, Tag::Prime), value(x, k - 1, Tag::Full));
        memo_.emplace(std::move(key), r);
        return r;
    }

    int compute_m0(const SimplicialComplex& x)
    {
        int best = INT_MAX;
        x.vertex_set().for_each_vertex([&](Vertex v) {
            const Face s{v};
            auto lk = link(x, s);
            auto del = deletion(x, s);
            if (lk == del)
                return;
            best = std::min(best, std::max(value(lk, 0, Tag::Full) + 1, value(del, 0, Tag::Full)));
        });
        return best == INT_MAX ? 0 : best;
    }

    int compute_prime(const SimplicialComplex& x, int k)
    {
        int best = INT_MAX;
        for (Face s : open_k_faces(x, k)) {
            int l = value(link(x, s), k, Tag::Prime) + k + 1;
            if (l >= best)
                continue;
            best = std::min(best, std::max(value(deletion(x, s), k, Tag::Prime), l));
        }
        return best == INT_MAX ? value(x, k - 1, Tag::Full) : best;
    }

    Budget budget_;
    std::unordered_map<Key, int, KeyHash> memo_;
};

inline int m0(const SimplicialComplex& x, std::uint64_t max_nodes = kDefaultNodeBudget)
{
    return MkEvaluator(max_nodes).m0(x);
}

inline int mk(const SimplicialComplex& x, int k, std::uint64_t max_nodes = kDefaultNodeBudget)
{
    return MkEvaluator(max_nodes).mk(x, k);
}

inline int mk_prime(const SimplicialComplex& x, int k, std::uint64_t max_nodes = kDefaultNodeBudget)
{
    return MkEvaluator(max_nodes).mk_prime(x, k);
}

/// C(X) ≤ max{ C(del(σ,X)), C(lk(σ,X)) + dim σ + 1 } for a face σ of dimension k ≥ 0.
inline bool claim_inequality_check(const SimplicialComplex& x, Face sigma,
                                   std::uint64_t max_nodes = kDefaultNodeBudget)
{
    if (sigma.empty() || !x.contains(sigma))
        throw Error("claim_inequality_check: sigma must be a nonempty face of X");
    Budget b(max_nodes);
    const int c = collapsibility_number(x, b).value;
    const int cd = collapsibility_number(deletion(x, sigma), b).value;
    const int cl = collapsibility_number(link(x, sigma), b).value;
    return c <= std::max(cd, cl + sigma.size());
}

/// The vertex case of the claim: C(X) ≤ max{ C(del(v,X)), C(lk(v,X)) + 1 }.
inline bool tancer_vertex_check(const SimplicialComplex& x, Vertex v,
                                std::uint64_t max_nodes = kDefaultNodeBudget)
{
    return claim_inequality_check(x, Face{v}, max_nodes);
}

} // namespace sc
