/**
 * @file report.hpp
 * @brief Invariant registry and deterministic JSON reports.
 */
#pragma once

#include <functional>
#include <map>
#include <regex>
#include <string>
#include <vector>

#include "sc/collapse.hpp"
#include "sc/decomposability.hpp"
#include "sc/homology.hpp"
#include "sc/hypergraph.hpp"
#include "sc/json_io.hpp"
#include "sc/mes.hpp"
#include "sc/mk.hpp"

namespace sc {

inline constexpr const char* kReportSchema = "sc-report/1";

struct ComputeOptions {
    Field field = Field::rationals();
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::uint64_t seed = 0;
};

class UnknownInvariant : public Error {
public:
    using Error::Error;
};

struct ComputeResult {
    json report;
    bool budget_exhausted = false;
};

namespace detail {

/// One invariant evaluation: writes values[name] and optionally witnesses[name].
using Evaluator = std::function<void(json& values, json& witnesses, std::uint64_t& nodes)>;

inline std::vector<std::string> all_complex_invariants()
{
    return {"C", "M0", "M1", "M2", "Mp1", "Mp2", "d", "leray", "betti", "dim", "pure",
            "cm", "shellable", "kvd0", "kvd1"};
}

inline std::vector<std::string> all_hypergraph_invariants()
{
    return {"gamma_i", "gamma_si", "gamma_tilde", "gamma_E", "nc", "C_nc", "d_nc", "M0_nc", "leray_nc", "nc_bound"};
}

inline json domination_json(const DominationResult& r)
{
    json j{{"value", r.value}, {"witness", to_json(r.witness)}, {"target", to_json(r.target)}};
    if (!r.edge_witness.empty()) {
        json es = json::array();
        for (Face e : r.edge_witness)
            es.push_back(to_json(e));
        j["edges"] = es;
    }
    return j;
}

inline Evaluator complex_evaluator(const std::string& name, const SimplicialComplex& x, const ComputeOptions& opt)
{
    const auto budget = opt.node_budget;
    const Field field = opt.field;
    static const std::regex mk_re("M(p?)([0-9]+)");
    static const std::regex kvd_re("kvd([0-9]+)");
    std::smatch m;
    if (name == "C")
        return [=](json& v, json& w, std::uint64_t& nodes) {
            Budget b(budget);
            auto r = collapsibility_number(x, b);
            nodes = b.used();
            v["C"] = r.value;
            w["C"] = to_json(r.certificate);
        };
    if (std::regex_match(name, m, mk_re)) {
        const bool prime = m[1].length() > 0;
        const int k = std::stoi(m[2].str());
        return [=](json& v, json&, std::uint64_t& nodes) {
            MkEvaluator ev(budget);
            v[name] = prime ? ev.mk_prime(x, k) : ev.mk(x, k);
            nodes = ev.budget().used();
        };
    }
    if (name == "d")
        return [=](json& v, json& w, std::uint64_t&) {
            const auto ord = FacetOrdering::natural(x);
            v["d"] = d_of_ordering(x, ord);
            json o = json::array();
            for (Face f : ord.facets())
                o.push_back(to_json(f));
            w["d"] = json{{"ordering", o}};
        };
    if (name == "leray")
        return [=](json& v, json&, std::uint64_t&) { v["leray"] = leray_number(x, field); };
    if (name == "betti")
        return [=](json& v, json&, std::uint64_t&) {
            const auto b = reduced_betti(x, field);
            v["betti"] = json{{"field", field.name()}, {"minus_one", b.minus_one}, {"ranks", b.ranks}};
        };
    if (name == "dim")
        return [=](json& v, json&, std::uint64_t&) { v["dim"] = x.dim(); };
    if (name == "pure")
        return [=](json& v, json&, std::uint64_t&) { v["pure"] = is_pure(x); };
    if (name == "cm")
        return [=](json& v, json&, std::uint64_t&) { v["cm"] = is_cohen_macaulay(x, field); };
    if (name == "shellable")
        return [=](json& v, json& w, std::uint64_t&) {
            if (!is_pure(x)) {
                v["shellable"] = nullptr;
                return;
            }
            auto r = is_shellable(x, budget);
            v["shellable"] = r.shellable;
            if (r.order) {
                json o = json::array();
                for (Face f : *r.order)
                    o.push_back(to_json(f));
                w["shellable"] = json{{"order", o}};
            }
        };
    if (std::regex_match(name, m, kvd_re)) {
        const int k = std::stoi(m[1].str());
        return [=](json& v, json& w, std::uint64_t&) {
            if (!is_pure(x)) {
                v[name] = nullptr;
                return;
            }
            auto r = is_k_vertex_decomposable(x, k, budget);
            v[name] = r.decomposable;
            if (r.witness)
                w[name] = json{{"shedding_sequence", to_json(*r.witness)}};
        };
    }
    throw UnknownInvariant("unknown complex invariant '" + name + "'");
}

inline Evaluator hypergraph_evaluator(const std::string& name, const Hypergraph& h, const ComputeOptions& opt)
{
    const auto budget = opt.node_budget;
    const Field field = opt.field;
    auto nc = [h] { return non_cover_complex(h); };
    if (name == "gamma_i")
        return [=](json& v, json& w, std::uint64_t&) {
            auto r = gamma_i(h);
            v[name] = r.value;
            w[name] = domination_json(r);
        };
    if (name == "gamma_si")
        return [=](json& v, json& w, std::uint64_t&) {
            auto r = gamma_si(h);
            v[name] = r.value;
            w[name] = domination_json(r);
        };
    if (name == "gamma_tilde")
        return [=](json& v, json& w, std::uint64_t&) {
            auto r = gamma_tilde(h);
            v[name] = r.value;
            w[name] = domination_json(r);
        };
    if (name == "gamma_E")
        return [=](json& v, json& w, std::uint64_t&) {
            auto r = gamma_E(h);
            v[name] = r.value;
            w[name] = domination_json(r);
        };
    if (name == "nc")
        return [=](json& v, json&, std::uint64_t&) { v[name] = to_json(nc()); };
    if (name == "C_nc")
        return [=](json& v, json& w, std::uint64_t& nodes) {
            Budget b(budget);
            auto r = collapsibility_number(nc(), b);
            nodes = b.used();
            v[name] = r.value;
            w[name] = to_json(r.certificate);
        };
    if (name == "d_nc")
        return [=](json& v, json& w, std::uint64_t&) {
            const auto x = nc();
            if (x.empty()) {
                v[name] = 0;
                return;
            }
            // ordering is in the relabeled vertex names; labels[v] is the new name of v
            const auto [hp, r] = prefix_cover_form(h);
            const auto ord = nc_facet_order(hp);
            v[name] = d_of_ordering(non_cover_complex(hp), ord);
            json o = json::array();
            for (Face f : ord.facets())
                o.push_back(to_json(f));
            w[name] = json{{"ordering", o}, {"labels", r.image}};
        };
    if (name == "M0_nc")
        return [=](json& v, json&, std::uint64_t& nodes) {
            MkEvaluator ev(budget);
            v[name] = ev.m0(nc());
            nodes = ev.budget().used();
        };
    if (name == "leray_nc")
        return [=](json& v, json&, std::uint64_t&) { v[name] = leray_number(nc(), field); };
    if (name == "nc_bound")
        return [=](json& v, json&, std::uint64_t&) { v[name] = nc_collapsibility_bound(h); };
    throw UnknownInvariant("unknown hypergraph invariant '" + name + "'");
}

} // namespace detail

/// Splits "C,M0,leray" and expands "all" for the instance type.
inline std::vector<std::string> parse_invariant_list(const std::string& csv, const Instance& inst)
{
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        if (item == "all") {
            auto all = std::holds_alternative<SimplicialComplex>(inst) ? detail::all_complex_invariants()
                                                                        : detail::all_hypergraph_invariants();
            out.insert(out.end(), all.begin(), all.end());
        } else {
            out.push_back(item);
        }
    }
    return out;
}

/// Evaluates @p names on @p inst. Unknown names throw before any work is done;
/// budget exhaustion is recorded per invariant and the rest still run.
inline ComputeResult compute(const Instance& inst, const std::vector<std::string>& names, const ComputeOptions& opt = {})
{
    std::vector<std::pair<std::string, detail::Evaluator>> evals;
    for (const auto& n : names) {
        if (std::holds_alternative<SimplicialComplex>(inst))
            evals.emplace_back(n, detail::complex_evaluator(n, std::get<SimplicialComplex>(inst), opt));
        else
            evals.emplace_back(n, detail::hypergraph_evaluator(n, std::get<Hypergraph>(inst), opt));
    }
    const json content = to_json(inst);
    ComputeResult res;
    json values = json::object(), witnesses = json::object(), status = json::object(), consumed = json::object();
    for (auto& [name, ev] : evals) {
        std::uint64_t nodes = 0;
        try {
            ev(values, witnesses, nodes);
            status[name] = "ok";
        } catch (const BudgetExceeded&) {
            status[name] = "budget_exceeded";
            values[name] = nullptr;
            nodes = opt.node_budget;
            res.budget_exhausted = true;
        } catch (const Infeasible& e) {
            status[name] = std::string("infeasible: ") + e.what();
            values[name] = nullptr;
        }
        consumed[name] = nodes;
    }
    res.report = json{
        {"schema", kReportSchema},
        {"instance",
         {{"format", std::holds_alternative<SimplicialComplex>(inst) ? "complex" : "hypergraph"},
          {"hash", content_hash(content)},
          {"content", content}}},
        {"field", opt.field.name()},
        {"seed", opt.seed},
        {"budgets", {{"nodes", opt.node_budget}, {"consumed", consumed}}},
        {"values", values},
        {"witnesses", witnesses},
        {"status", status},
    };
    return res;
}

/// Re-validates every witness in a report against its instance.
inline bool validate_report_witnesses(const json& report)
{
    const Instance inst = instance_from_json(report.at("instance").at("content"));
    const json& w = report.at("witnesses");
    const json& v = report.at("values");
    if (const auto* x = std::get_if<SimplicialComplex>(&inst)) {
        if (w.contains("C")) {
            const auto cert = certificate_from_json(w.at("C"));
            if (cert.claimed_d != v.at("C").get<int>() || !replay_certificate(*x, cert))
                return false;
        }
        for (auto it = w.begin(); it != w.end(); ++it) {
            if (it.key().rfind("kvd", 0) == 0) {
                const int k = std::stoi(it.key().substr(3));
                if (!replay_shedding_sequence(*x, k, shedding_from_json(it.value().at("shedding_sequence"))))
                    return false;
            }
        }
        if (w.contains("shellable")) {
            std::vector<Face> order;
            for (const auto& f : w.at("shellable").at("order"))
                order.push_back(face_from_json(f));
            for (std::size_t i = 1; i < order.size(); ++i)
                if (!shelling_step_ok(std::vector<Face>(order.begin(), order.begin() + static_cast<long>(i)), order[i]))
                    return false;
        }
        return true;
    }
    const auto& h = std::get<Hypergraph>(inst);
    for (const char* g : {"gamma_i", "gamma_si", "gamma_tilde", "gamma_E"}) {
        if (!w.contains(g))
            continue;
        const Face wit = face_from_json(w.at(g).at("witness"));
        const Face tgt = face_from_json(w.at(g).at("target"));
        const std::string name = g;
        if (name == "gamma_i" && (!is_independent(h, tgt) || wit.intersects(tgt) || !dominates(h, wit, tgt)))
            return false;
        if ((name == "gamma_si" || name == "gamma_tilde" || name == "gamma_E") && !strongly_dominates(h, wit, tgt))
            return false;
        if (name != "gamma_E" && wit.size() != v.at(g).get<int>())
            return false;
    }
    if (w.contains("C_nc")) {
        const auto cert = certificate_from_json(w.at("C_nc"));
        if (!replay_certificate(non_cover_complex(h), cert))
            return false;
    }
    return true;
}

} // namespace sc
