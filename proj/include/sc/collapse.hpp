/**
 * @file collapse.hpp
 * @brief Exact d-collapsibility search and the collapsibility number.
 *
 * The search is a depth-first backtracking over elementary d-collapses with
 * a transposition table of dead face-sets. Greedy collapsing is not sound
 * (a bad choice can strand the complex), so every dead end backtracks.
 * Moves are tried smallest free face first, ties broken lexicographically.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "sc/complex.hpp"
#include "sc/homology.hpp"

namespace sc {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Raised when an exact search runs out of nodes. Never means "false".
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Node counter shared by one top-level evaluation.
class Budget {
public:
    explicit Budget(std::uint64_t max_nodes = kDefaultNodeBudget) : max_(max_nodes) {}

    void tick(const char* who)
    {
        if (++used_ > max_)
            throw BudgetExceeded(std::string(who) + ": node budget of " + std::to_string(max_) + " exceeded");
    }

    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return max_; }

private:
    std::uint64_t max_;
    std::uint64_t used_ = 0;
};

struct CollapseCertificate {
    std::vector<FreePair> steps;
    int claimed_d = 0;
};

struct CollapseResult {
    bool collapsible = false;
    std::optional<CollapseCertificate> certificate;
};

/// Replays @p cert from @p x; true iff every step is a valid elementary
/// claimed_d-collapse and the final complex is empty.
inline bool replay_certificate(const SimplicialComplex& x, const CollapseCertificate& cert)
{
    SimplicialComplex cur = x;
    for (const FreePair& p : cert.steps) {
        if (p.free_face.size() > cert.claimed_d)
            return false;
        if (!is_free_in(cur, p.free_face, p.maximal_face))
            return false;
        cur = SimplicialComplex::from_facets(collapse_facets(cur.facets(), p.free_face, p.maximal_face));
    }
    return cur.empty();
}

namespace detail {

struct FacetVecHash {
    std::size_t operator()(const std::vector<Face>& v) const noexcept
    {
        std::uint64_t h = 1469598103934665603ull ^ v.size();
        for (Face f : v) {
            h ^= f.bits() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

class CollapseSearch {
public:
    CollapseSearch(int d, Budget& budget) : d_(d), budget_(budget) {}

    bool run(const std::vector<Face>& facets) { return dfs(facets); }

    std::vector<FreePair> path;

private:
    bool dfs(const std::vector<Face>& facets)
    {
        if (facets.empty())
            return true;
        budget_.tick("is_d_collapsible");
        if (facets.size() == 1) {
            path.push_back({Face{}, facets.front()});
            return true;
        }
        if (dead_.contains(facets))
            return false;

        std::vector<FreePair> moves;
        for (Face s : facets)
            for_each_free_face(facets, s, d_, [&](Face g) { moves.push_back({g, s}); });
        std::sort(moves.begin(), moves.end(), [](const FreePair& a, const FreePair& b) {
            if (a.free_face.size() != b.free_face.size())
                return a.free_face.size() < b.free_face.size();
            if (a.free_face != b.free_face)
                return a.free_face < b.free_face;
            return a.maximal_face < b.maximal_face;
        });

        for (const FreePair& m : moves) {
            path.push_back(m);
            if (dfs(collapse_facets(facets, m.free_face, m.maximal_face)))
                return true;
            path.pop_back();
        }
        dead_.insert(facets);
        return false;
    }

    int d_;
    Budget& budget_;
    std::unordered_set<std::vector<Face>, FacetVecHash> dead_;
};

} // namespace detail

/// Exact decision of d-collapsibility with a replayable certificate on success.
/// Throws BudgetExceeded when the search cannot decide within @p budget.
inline CollapseResult is_d_collapsible(const SimplicialComplex& x, int d, Budget& budget)
{
    if (d < 0)
        throw Error("is_d_collapsible: d must be >= 0");
    detail::CollapseSearch search(d, budget);
    CollapseResult r;
    r.collapsible = search.run(x.facets());
    if (r.collapsible)
        r.certificate = CollapseCertificate{std::move(search.path), d};
    return r;
}

inline CollapseResult is_d_collapsible(const SimplicialComplex& x, int d,
                                       std::uint64_t max_nodes = kDefaultNodeBudget)
{
    Budget b(max_nodes);
    return is_d_collapsible(x, d, b);
}

struct CollapsibilityNumber {
    int value = 0;
    CollapseCertificate certificate;
};

/// Least d such that x is d-collapsible, searched upward from @p start_d.
/// Passing a proven lower bound as start_d is sound. The Leray number is always
/// used as one: a d-collapsible complex is d-Leray, and refuting d below it
/// can cost tens of millions of nodes.
inline CollapsibilityNumber collapsibility_number(const SimplicialComplex& x, Budget& budget, int start_d = 0)
{
    // Every d-dimensional complex is (d+1)-collapsible, so the loop terminates.
    for (int d = std::max({0, start_d, leray_number_links(x)});; ++d) {
        auto r = is_d_collapsible(x, d, budget);
        if (r.collapsible)
            return {d, std::move(*r.certificate)};
    }
}

inline CollapsibilityNumber collapsibility_number(const SimplicialComplex& x,
                                                  std::uint64_t max_nodes = kDefaultNodeBudget)
{
    Budget b(max_nodes);
    return collapsibility_number(x, b);
}

} // namespace sc
