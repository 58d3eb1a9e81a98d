/**
 * @file theorems.hpp
 * @brief Randomized verification of the inequalities and identities, and the
 * search for complexes separating M_k from M_{k-1}.
 */
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sc/collapse.hpp"
#include "sc/decomposability.hpp"
#include "sc/generators.hpp"
#include "sc/homology.hpp"
#include "sc/hypergraph.hpp"
#include "sc/json_io.hpp"
#include "sc/mes.hpp"
#include "sc/mk.hpp"

namespace sc {

enum class TrialStatus { Pass, Fail, Skip };

struct TrialResult {
    TrialStatus status = TrialStatus::Pass;
    std::string detail; ///< why a trial failed or was skipped
    static TrialResult pass() { return {}; }
    static TrialResult skip(std::string why) { return {TrialStatus::Skip, std::move(why)}; }
    static TrialResult fail(std::string why) { return {TrialStatus::Fail, std::move(why)}; }
};

struct VerifyOptions {
    Field field = Field::rationals();
    std::uint64_t node_budget = kDefaultNodeBudget;
    int trial_index = 0; ///< used by instance-indexed suites such as star-gap
};

using TrialFn = std::function<TrialResult(const Instance&, Rng&, const VerifyOptions&)>;

struct Theorem {
    std::string name;
    std::string statement;
    std::string default_kind; ///< generator kind used when the caller does not pick one
    int default_n;
    TrialFn run;
};

namespace detail {

inline std::string str(int v) { return std::to_string(v); }

inline const SimplicialComplex& as_complex(const Instance& inst)
{
    if (const auto* x = std::get_if<SimplicialComplex>(&inst))
        return *x;
    throw Error("this theorem needs a simplicial complex instance");
}

inline const Hypergraph& as_hypergraph(const Instance& inst)
{
    if (const auto* h = std::get_if<Hypergraph>(&inst))
        return *h;
    throw Error("this theorem needs a hypergraph instance");
}

inline FacetOrdering random_ordering(const SimplicialComplex& x, Rng& rng)
{
    std::vector<Face> fs = x.facets();
    rng.shuffle(fs);
    return FacetOrdering(x, fs);
}

/// C(NC(H)) and d(NC(H), ≺) with a minimal cover as the label prefix; an
/// empty NC(H) has both equal to 0.
inline std::pair<int, int> nc_collapse_and_d(const Hypergraph& h, std::uint64_t budget)
{
    const auto nc = non_cover_complex(h);
    if (nc.empty())
        return {0, 0};
    const int c = collapsibility_number(nc, budget).value;
    return {c, nc_prefix_d(h)};
}

inline int ceil_half(int v) { return (v + 1) / 2; }

inline TrialResult nc_bound(const Instance& inst, Rng&, const VerifyOptions& o)
{
    const auto& h = as_hypergraph(inst);
    if (has_isolated_vertex(h))
        return TrialResult::skip("isolated vertex");
    const auto [c, d] = nc_collapse_and_d(h, o.node_budget);
    const int rhs = h.n() - gamma_i(h).value - 1;
    if (c <= d && d <= rhs)
        return TrialResult::pass();
    return TrialResult::fail("C=" + str(c) + " d=" + str(d) + " n-gamma_i-1=" + str(rhs));
}

inline TrialResult m0_bound_nc(const Instance& inst, Rng&, const VerifyOptions& o)
{
    const auto& h = as_hypergraph(inst);
    if (has_isolated_vertex(h))
        return TrialResult::skip("isolated vertex");
    const auto nc = non_cover_complex(h);
    if (nc.empty())
        return TrialResult::skip("empty non-cover complex");
    const int m = m0(nc, o.node_budget);
    const int d = d_of_ordering(nc, nc_facet_order(h));
    if (m <= d)
        return TrialResult::pass();
    return TrialResult::fail("M0=" + str(m) + " d=" + str(d));
}

inline TrialResult mk_chain(const Instance& inst, Rng& rng, const VerifyOptions& o)
{
    const auto& x = as_complex(inst);
    const int l = leray_number(x, o.field);
    const int c = collapsibility_number(x, o.node_budget).value;
    MkEvaluator ev(o.node_budget);
    const int m2 = ev.mk(x, 2), m1 = ev.mk(x, 1), m0v = ev.m0(x);
    std::string msg = "L=" + str(l) + " C=" + str(c) + " M2=" + str(m2) + " M1=" + str(m1) + " M0=" + str(m0v);
    if (!(l <= c && c <= m2 && m2 <= m1 && m1 <= m0v))
        return TrialResult::fail(msg);
    for (int i = 0; i < 3; ++i) {
        const auto ord = random_ordering(x, rng);
        const int d = d_of_ordering(x, ord);
        if (m0v > d)
            return TrialResult::fail(msg + " d=" + str(d));
    }
    return TrialResult::pass();
}

inline TrialResult m0_le_mes(const Instance& inst, Rng& rng, const VerifyOptions& o)
{
    const auto& x = as_complex(inst);
    const int m = m0(x, o.node_budget);
    const int d = d_of_ordering(x, random_ordering(x, rng));
    return m <= d ? TrialResult::pass() : TrialResult::fail("M0=" + str(m) + " d=" + str(d));
}

inline TrialResult kvd_equality(const Instance& inst, Rng&, const VerifyOptions& o)
{
    const auto& x = as_complex(inst);
    if (!is_pure(x))
        return TrialResult::skip("not pure");
    // every k for which X qualifies, not only the smallest: at k = 0 M'_k = M_k hides nothing
    bool any = false;
    std::optional<int> c;
    MkEvaluator ev(o.node_budget);
    for (int k = 0; k <= 2; ++k) {
        if (!is_k_vertex_decomposable(x, k, o.node_budget).decomposable)
            continue;
        any = true;
        if (!c)
            c = collapsibility_number(x, o.node_budget).value;
        const int m = ev.mk(x, k), mp = ev.mk_prime(x, k);
        if (*c != m || m != mp)
            return TrialResult::fail("k=" + str(k) + " C=" + str(*c) + " M_k=" + str(m) + " M'_k=" + str(mp));
    }
    return any ? TrialResult::pass() : TrialResult::skip("not k-vertex decomposable for k <= 2");
}

inline TrialResult gamma_si_eq(const Instance& inst, Rng&, const VerifyOptions&)
{
    const auto& h = as_hypergraph(inst);
    if (has_isolated_vertex(h))
        return TrialResult::skip("isolated vertex");
    if (h.max_edge_size() > 2)
        return TrialResult::skip("edge of size > 2");
    const int a = gamma_i(h).value, b = gamma_si(h).value;
    return a == b ? TrialResult::pass() : TrialResult::fail("gamma_i=" + str(a) + " gamma_si=" + str(b));
}

inline TrialResult kimkim(const Instance& inst, Rng&, const VerifyOptions& o)
{
    const auto& h = as_hypergraph(inst);
    if (has_isolated_vertex(h))
        return TrialResult::skip("isolated vertex");
    const auto nc = non_cover_complex(h);
    const int l = leray_number(nc, o.field);
    const int n = h.n();
    const int ge = gamma_E(h).value;
    if (l > n - ge - 1)
        return TrialResult::fail("L=" + str(l) + " gamma_E=" + str(ge));
    if (h.max_edge_size() <= 2) {
        const int gsi = gamma_si(h).value;
        if (l > n - gsi - 1)
            return TrialResult::fail("L=" + str(l) + " gamma_si=" + str(gsi));
    }
    if (h.max_edge_size() <= 3) {
        const int gt = gamma_tilde(h).value;
        if (l > n - ceil_half(gt) - 1)
            return TrialResult::fail("L=" + str(l) + " gamma_tilde=" + str(gt));
    }
    return TrialResult::pass();
}

inline TrialResult link_del_commute(const Instance& inst, Rng&, const VerifyOptions&)
{
    const auto& x = as_complex(inst);
    const auto fs = all_faces(x);
    for (Face s : fs) {
        if (s.empty())
            continue;
        const auto del = deletion(x, s);
        for (Face t : fs) {
            if (s.intersects(t) || !del.contains(t))
                continue;
            if (link(del, t) != deletion(link(x, t), s))
                return TrialResult::fail("sigma=" + to_string(s) + " tau=" + to_string(t));
        }
    }
    return TrialResult::pass();
}

inline TrialResult open_faces_simplex(const Instance& inst, Rng&, const VerifyOptions&)
{
    const auto& x = as_complex(inst);
    for (int k = 0; k <= x.dim(); ++k)
        if (open_k_faces(x, k).empty() && !x.is_simplex())
            return TrialResult::fail("k=" + str(k) + " has no open faces but X is not a simplex");
    return TrialResult::pass();
}

inline TrialResult vertex_deletion_induced(const Instance& inst, Rng&, const VerifyOptions&)
{
    const auto& x = as_complex(inst);
    const Face vs = x.vertex_set();
    for (Vertex v : vs.vertices()) {
        if (deletion(x, Face{v}) != induced(x, vs.without(v)))
            return TrialResult::fail("v=" + str(v));
        // for vertices the open-face set coincides with {v : lk(v) != del(v)}
        const bool open = link(x, Face{v}) != deletion(x, Face{v});
        const auto o0 = open_k_faces(x, 0);
        if (open != (std::find(o0.begin(), o0.end(), Face{v}) != o0.end()))
            return TrialResult::fail("open vertex mismatch at v=" + str(v));
    }
    return TrialResult::pass();
}

inline TrialResult neighbor_ineq(const Instance& inst, Rng&, const VerifyOptions&)
{
    const auto& h = as_hypergraph(inst);
    if (has_isolated_vertex(h))
        return TrialResult::skip("isolated vertex");
    for (Face d : minimal_covers(h)) {
        bool bad = false;
        Face witness;
        for_each_subset(d, [&](Face s) {
            if (!bad && neighbor_inequality_check(h, d, s) == CheckOutcome::Violated) {
                bad = true;
                witness = s;
            }
        });
        if (bad)
            return TrialResult::fail("D=" + to_string(d) + " S=" + to_string(witness));
    }
    return TrialResult::pass();
}

inline TrialResult mes_equal(const Instance& inst, Rng&, const VerifyOptions&)
{
    const auto& h0 = as_hypergraph(inst);
    if (has_isolated_vertex(h0))
        return TrialResult::skip("isolated vertex");
    int qualifying = 0;
    for (Face d0 : minimal_covers(h0)) {
        const auto [h, relabel] = relabel_prefix(h0, d0);
        const Face d = relabel.apply(d0);
        const auto nc = non_cover_complex(h);
        if (nc.empty())
            continue;
        const auto fs = all_faces(nc);
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = i; j < fs.size(); ++j) {
                const auto r = mes_equal_check(h, d, fs[i], fs[j]);
                if (r == CheckOutcome::Violated)
                    return TrialResult::fail("D=" + to_string(d0) + " gamma=" + to_string(fs[i]) +
                                             " gamma'=" + to_string(fs[j]) + " (relabeled)");
                qualifying += r == CheckOutcome::Holds;
            }
    }
    return qualifying ? TrialResult::pass() : TrialResult::skip("no qualifying pair");
}

inline TrialResult tancer(const Instance& inst, Rng&, const VerifyOptions& o)
{
    const auto& x = as_complex(inst);
    for (Vertex v : x.vertex_set().vertices())
        if (!tancer_vertex_check(x, v, o.node_budget))
            return TrialResult::fail("v=" + str(v));
    return TrialResult::pass();
}

inline TrialResult claim(const Instance& inst, Rng&, const VerifyOptions& o)
{
    const auto& x = as_complex(inst);
    for (int k = 0; k <= std::min(2, x.dim()); ++k)
        for (Face s : faces(x, k))
            if (!claim_inequality_check(x, s, o.node_budget))
                return TrialResult::fail("sigma=" + to_string(s));
    return TrialResult::pass();
}

inline TrialResult euler(const Instance& inst, Rng&, const VerifyOptions& o)
{
    const auto& x = as_complex(inst);
    long long chi = 0; // reduced: the empty face counts in degree -1
    for (Face f : all_faces(x))
        chi += (f.dim() % 2 == 0) ? 1 : -1;
    if (x.empty())
        chi = -1;
    const auto b = reduced_betti(x, o.field);
    if (chi == b.reduced_euler())
        return TrialResult::pass();
    return TrialResult::fail("faces give " + std::to_string(chi) + ", Betti numbers give " +
                             std::to_string(b.reduced_euler()));
}

inline TrialResult leray_methods(const Instance& inst, Rng&, const VerifyOptions& o)
{
    const auto& x = as_complex(inst);
    if (x.num_vertices() > kLerayBruteForceVertexCap)
        return TrialResult::skip("above the brute-force cap");
    const int a = leray_number_brute_force(x, o.field), b = leray_number_links(x, o.field);
    return a == b ? TrialResult::pass() : TrialResult::fail("induced=" + str(a) + " links=" + str(b));
}

inline TrialResult cm_agree(const Instance& inst, Rng&, const VerifyOptions& o)
{
    const auto& x = as_complex(inst);
    if (!is_pure(x))
        return TrialResult::skip("not pure");
    const bool a = is_cohen_macaulay(x, o.field), b = is_cohen_macaulay_induced(x, o.field);
    if (a == b)
        return TrialResult::pass();
    return TrialResult::fail(std::string("links=") + (a ? "true" : "false") + " induced=" + (b ? "true" : "false"));
}

inline TrialResult implication_chain(const Instance& inst, Rng&, const VerifyOptions& o)
{
    const auto& x = as_complex(inst);
    if (!is_pure(x))
        return TrialResult::skip("not pure");
    const bool v0 = is_k_vertex_decomposable(x, 0, o.node_budget).decomposable;
    const bool v1 = is_k_vertex_decomposable(x, 1, o.node_budget).decomposable;
    const bool sh = is_shellable(x, o.node_budget).shellable;
    const bool cm = is_cohen_macaulay(x, o.field);
    if ((v0 && !v1) || (v1 && !sh) || (sh && !cm))
        return TrialResult::fail(std::string("0vd=") + (v0 ? "1" : "0") + " 1vd=" + (v1 ? "1" : "0") +
                                 " shellable=" + (sh ? "1" : "0") + " cm=" + (cm ? "1" : "0"));
    return TrialResult::pass();
}

inline TrialResult shedding_leray(const Instance& inst, Rng&, const VerifyOptions& o)
{
    const auto& x = as_complex(inst);
    if (!is_pure(x) || x.is_simplex())
        return TrialResult::skip("not a pure non-simplex");
    int checked = 0;
    for (int k = 0; k <= x.dim(); ++k)
        for (Face s : faces(x, k)) {
            const auto r = shedding_leray_inequality_check(x, s, o.field);
            if (r == CheckOutcome::Violated)
                return TrialResult::fail("sigma=" + to_string(s));
            checked += r == CheckOutcome::Holds;
        }
    return checked ? TrialResult::pass() : TrialResult::skip("no shedding face with Cohen-Macaulay deletion");
}

inline TrialResult gamma_monotone(const Instance& inst, Rng& rng, const VerifyOptions&)
{
    const auto& h = as_hypergraph(inst);
    int checked = 0;
    for (int t = 0; t < 20; ++t) {
        const Face b = Face::from_bits(rng.next() & h.all().bits());
        const Face a = Face::from_bits(rng.next() & b.bits());
        std::optional<int> ga, gb;
        try {
            ga = gamma_A(h, a).value;
            gb = gamma_A(h, b).value;
        } catch (const Infeasible&) {
            continue;
        }
        ++checked;
        if (*ga > *gb)
            return TrialResult::fail("A=" + to_string(a) + " B=" + to_string(b));
    }
    return checked ? TrialResult::pass() : TrialResult::skip("no feasible pair");
}

inline TrialResult cover_duality(const Instance& inst, Rng&, const VerifyOptions&)
{
    const auto& h = as_hypergraph(inst);
    bool bad = false;
    Face at;
    for_each_subset(h.all(), [&](Face d) {
        if (!bad && is_cover(h, d) != is_independent(h, h.complement(d))) {
            bad = true;
            at = d;
        }
    });
    return bad ? TrialResult::fail("D=" + to_string(at)) : TrialResult::pass();
}

inline TrialResult star_gap(const Instance& inst, Rng&, const VerifyOptions&)
{
    const auto& h = as_hypergraph(inst);
    // star edges have two vertices and the long edge has n, so n is the largest edge size
    const int n = h.max_edge_size();
    const int gi = gamma_i(h).value, gt = gamma_tilde(h).value, ge = gamma_E(h).value;
    const int gap = gi - std::max(ceil_half(gt), ge);
    if (gi >= n && ge == 1 && gt <= n && (n < 3 || gap >= n - ceil_half(n)))
        return TrialResult::pass();
    return TrialResult::fail("n=" + str(n) + " gamma_i=" + str(gi) + " gamma_tilde=" + str(gt) +
                             " gamma_E=" + str(ge));
}

} // namespace detail

inline const std::vector<Theorem>& theorem_registry()
{
    using namespace detail;
    static const std::vector<Theorem> reg = {
        {"nc-bound", "C(NC(H)) <= d(NC(H), lex) <= |V| - gamma_i - 1, cover V - I labeled first", "random-hypergraph", 7, nc_bound},
        {"m0-bound-nc", "M0(NC(H)) <= d(NC(H), lex)", "random-hypergraph", 7, m0_bound_nc},
        {"mk-chain", "L <= C <= M2 <= M1 <= M0 <= d(X, random order)", "random-complex", 7, mk_chain},
        {"m0-le-mes", "M0(X) <= d(X, order)", "random-complex", 7, m0_le_mes},
        {"kvd-equality", "k-vertex decomposable => C = M_k = M'_k", "random-kvd", 7, kvd_equality},
        {"gamma-si-eq", "graphs: gamma_i = gamma_si", "random-graph", 8, gamma_si_eq},
        {"kimkim", "Leray bounds of NC(H) via gamma_si, gamma_tilde, gamma_E", "random-hypergraph", 7, kimkim},
        {"link-del-commute", "lk(t, del(s, X)) = del(s, lk(t, X)) for disjoint s, t", "random-complex", 7,
         link_del_commute},
        {"open-faces-simplex", "no open k-faces and dim >= k => simplex", "random-complex", 7, open_faces_simplex},
        {"vertex-deletion-induced", "del(v, X) = X[V - v]", "random-complex", 7, vertex_deletion_induced},
        {"neighbor-ineq", "|N(S) & ~D| - |S| <= |~D| - gamma_~D", "random-hypergraph", 7, neighbor_ineq},
        {"mes-equal", "equal traces on D with an edge => equal mes", "random-hypergraph", 6, mes_equal},
        {"tancer", "C(X) <= max{C(del v), C(lk v) + 1}", "random-complex", 6, tancer},
        {"claim", "C(X) <= max{C(del s), C(lk s) + k + 1}, dim s = k <= 2", "random-complex", 6, claim},
        {"euler", "reduced Euler characteristic from faces = from Betti numbers", "random-complex", 8, euler},
        {"leray-methods", "induced-subcomplex and link Leray numbers agree", "random-complex", 10, leray_methods},
        {"cm-agree", "link and induced-subcomplex Cohen-Macaulay predicates agree", "random-pure", 7, cm_agree},
        {"implication-chain", "0-vd => 1-vd => shellable => Cohen-Macaulay", "random-pure", 7, implication_chain},
        {"shedding-leray", "L(X) >= max{L(del s), L(lk s) + dim s + 1}", "random-kvd", 7, shedding_leray},
        {"gamma-monotone", "A subset of B => gamma_A <= gamma_B", "random-hypergraph", 7, gamma_monotone},
        {"cover-duality", "D cover <=> complement independent", "random-hypergraph", 8, cover_duality},
        {"star-gap", "star family gap gamma_i - max{ceil(gamma_tilde/2), gamma_E} >= n - ceil(n/2)", "star-family",
         5, star_gap},
    };
    return reg;
}

inline const Theorem& find_theorem(const std::string& name)
{
    for (const auto& t : theorem_registry())
        if (t.name == name)
            return t;
    throw Error("unknown theorem '" + name + "'");
}

struct Counterexample {
    int trial = 0;
    std::uint64_t seed = 0;
    std::string detail;
    Instance instance;
};

struct VerifySummary {
    std::string theorem;
    int pass = 0, fail = 0, skip = 0, budget = 0;
    std::vector<Counterexample> counterexamples;
    std::map<std::string, int> skip_reasons;
};

/// Generator settings for trial @p i: the caller's template with a per-trial seed. Star
/// families walk n = 2, 3, ... up to the template's n.
inline GeneratorSpec trial_spec(const GeneratorSpec& base, std::uint64_t seed, int i)
{
    GeneratorSpec s = base;
    s.seed = mix_seed(seed, static_cast<std::uint64_t>(i));
    if (s.kind == "star-family" && s.leaves.empty()) {
        const int span = std::max(1, base.n - 1);
        s.n = 2 + i % span;
    }
    return s;
}

inline VerifySummary verify(const Theorem& thm, const GeneratorSpec& base, int trials, std::uint64_t seed,
                            const VerifyOptions& opt = {})
{
    VerifySummary out;
    out.theorem = thm.name;
    for (int i = 0; i < trials; ++i) {
        const auto spec = trial_spec(base, seed, i);
        const Instance inst = generate(spec);
        Rng rng(mix_seed(spec.seed, 0x5eed));
        VerifyOptions o = opt;
        o.trial_index = i;
        TrialResult r;
        try {
            r = thm.run(inst, rng, o);
        } catch (const BudgetExceeded&) {
            ++out.budget;
            continue;
        }
        switch (r.status) {
        case TrialStatus::Pass:
            ++out.pass;
            break;
        case TrialStatus::Skip:
            ++out.skip;
            ++out.skip_reasons[r.detail];
            break;
        case TrialStatus::Fail:
            ++out.fail;
            out.counterexamples.push_back({i, spec.seed, r.detail, inst});
            break;
        }
    }
    return out;
}

inline json to_json(const VerifySummary& s)
{
    json ces = json::array();
    for (const auto& c : s.counterexamples)
        ces.push_back(json{{"trial", c.trial}, {"seed", c.seed}, {"detail", c.detail}, {"instance", to_json(c.instance)}});
    return json{{"schema", "sc-verify/1"}, {"theorem", s.theorem}, {"pass", s.pass},   {"fail", s.fail},
                {"skip", s.skip},          {"budget_exceeded", s.budget},       {"skip_reasons", s.skip_reasons},
                {"counterexamples", ces}};
}

struct SearchCandidate {
    SimplicialComplex complex;
    std::string origin; ///< named example or generator seed
    int mk = 0, mk_prev = 0;
};

/// Complexes with M_k(X) < M_{k-1}(X). Each hit is recomputed with fresh memo
/// tables before it is kept.
inline std::vector<SearchCandidate> conjecture_search(int k, const GeneratorSpec& base, int trials, std::uint64_t seed,
                                                      std::uint64_t node_budget = kDefaultNodeBudget,
                                                      bool named_only = false)
{
    if (k < 1)
        throw Error("conjecture_search: k must be >= 1");
    std::vector<std::pair<SimplicialComplex, std::string>> pool;
    if (named_only) {
        for (const auto& n : named_complexes())
            pool.emplace_back(named_complex(n), n);
    } else {
        for (int i = 0; i < trials; ++i) {
            const auto spec = trial_spec(base, seed, i);
            const Instance inst = generate(spec);
            if (const auto* x = std::get_if<SimplicialComplex>(&inst))
                pool.emplace_back(*x, "seed " + std::to_string(spec.seed));
        }
    }
    std::vector<SearchCandidate> out;
    for (const auto& [x, origin] : pool) {
        MkEvaluator ev(node_budget);
        const int a = ev.mk(x, k), b = ev.mk(x, k - 1);
        if (a >= b)
            continue;
        MkEvaluator fresh_a(node_budget), fresh_b(node_budget);
        if (fresh_a.mk(x, k) != a || fresh_b.mk(x, k - 1) != b)
            throw Error("conjecture_search: recomputation disagrees on " + origin);
        out.push_back({x, origin, a, b});
    }
    return out;
}

} // namespace sc
