#pragma once

// JSON renderings of the toolkit's result types (nlohmann::ordered_json, so
// field order is stable and reports are byte-reproducible).

#include <string>

#include "json.hpp"

#include "corpus.hpp"
#include "graph6.hpp"
#include "invariants.hpp"
#include "patterns.hpp"
#include "structure.hpp"

namespace chibound {

using Json = nlohmann::ordered_json;

inline Json to_json(VertexSet s)
{
    Json arr = Json::array();
    for (Vertex v : s) arr.push_back(v);
    return arr;
}

inline Json to_json(const PatternWitness& w)
{
    Json j;
    j["kind"] = std::string(to_string(w.kind));
    j["vertices"] = w.vertices;
    if (w.roles) {
        j["roles"] = {{"u1", w.roles->u1}, {"u2", w.roles->u2}, {"a", w.roles->a}, {"b", w.roles->b}, {"c", w.roles->c}};
    }
    return j;
}

inline Json to_json(const MembershipVerdict& m)
{
    Json j;
    j["member"] = m.member();
    j["witness"] = m.witness ? to_json(*m.witness) : Json(nullptr);
    return j;
}

inline Json to_json(const InvariantReport& r)
{
    Json j;
    j["n"] = r.n;
    j["omega"] = r.omega;
    j["chi"] = r.chi;
    j["delta"] = r.delta;
    j["bound"] = r.bound;
    j["tight"] = r.tight;
    j["clique"] = to_json(r.clique);
    j["coloring"] = r.coloring;
    return j;
}

inline Json to_json(const Decomposition& d)
{
    Json j;
    j["v"] = d.v;
    j["w"] = d.w;
    j["A"] = to_json(d.A);
    j["D"] = to_json(d.D);
    j["X"] = to_json(d.X);
    j["Y"] = to_json(d.Y);
    j["Yp"] = to_json(d.Yp);
    j["B"] = to_json(d.B);
    j["C"] = to_json(d.C);
    Json mm = Json::array();
    for (const auto& [y, missed] : d.missmap) mm.push_back({{"y", y}, {"missed", to_json(missed)}});
    j["missmap"] = mm;
    j["missmap_injective"] = d.missmap_injective;
    return j;
}

inline Json to_json(const Verdict& v)
{
    Json j;
    j["outcome"] = std::string(to_string(v.outcome));
    if (!v.scope.empty()) j["scope"] = v.scope;
    if (v.outcome == Outcome::Fails) j["witness"] = v.witness;
    return j;
}

inline Json to_json(const Lemma1Report& r)
{
    Json arr = Json::array();
    for (const PropertyCheck& p : r.properties) {
        Json j;
        j["id"] = p.id;
        j["verdict"] = to_json(p.verdict);
        if (p.alternate) j["alternate"] = to_json(*p.alternate);
        arr.push_back(j);
    }
    return arr;
}

inline Json to_json(const Tally& t)
{
    return {{"holds", t.holds}, {"vacuous", t.vacuous}, {"fails", t.fails}};
}

inline Json to_json(const Violation& v)
{
    Json j;
    j["kind"] = v.kind;
    j["graph6"] = v.graph6;
    if (!v.property.empty()) j["property"] = v.property;
    if (v.pair) j["pair"] = {v.pair->first, v.pair->second};
    j["witness"] = v.witness;
    j["message"] = v.message;
    return j;
}

inline Json to_json(const CorpusReport& r)
{
    Json j;
    Json pop;
    pop["mode"] = std::string(to_string(r.mode));
    pop["n_min"] = r.n_min;
    pop["n_max"] = r.n_max;
    pop["seed"] = r.seed;
    pop["requested"] = r.requested;
    if (!r.sampler.empty()) pop["sampler"] = r.sampler;
    if (!r.label.empty()) pop["label"] = r.label;
    j["population"] = pop;
    j["checks"] = r.checks;
    j["counts"] = {{"graphs_examined", r.graphs_examined},
                   {"members", r.members},
                   {"excluded", r.excluded},
                   {"disconnected_members", r.disconnected_members},
                   {"sample_attempts", r.sample_attempts}};

    Json hist = Json::array();
    for (const auto& [omega, b] : r.omega_histogram)
        hist.push_back({{"omega", omega},
                        {"count", b.count},
                        {"max_chi", b.max_chi},
                        {"bound", b.bound},
                        {"tight", b.tight},
                        {"violations", b.violations}});
    j["omega_histogram"] = hist;
    j["bound_violations"] = r.bound_violations;

    Json l1;
    l1["pairs_checked"] = r.lemma1_pairs;
    Json props;
    for (std::size_t i = 0; i < r.lemma1.size(); ++i) props["1." + std::to_string(i + 1)] = to_json(r.lemma1[i]);
    l1["properties"] = props;
    l1["alternate_readings"] = {{"1.4 over M1|M2", to_json(r.lemma1_4_literal)},
                                {"1.5 over Y|Yp", to_json(r.lemma1_5_y_yp)}};
    l1["missmap_non_injective"] = r.missmap_non_injective;
    j["lemma1"] = l1;

    j["lemma2"] = {{"components_checked", r.lemma2_checked}, {"violations", r.lemma2_violations}};
    j["oracle"] = {{"checked", r.oracle_checked}, {"disagreements", r.oracle_disagreements}};
    j["chi_cross_check"] = {{"checked", r.chi_cross_checked}, {"disagreements", r.chi_cross_disagreements}};

    Json viol = Json::array();
    for (const Violation& v : r.violations) viol.push_back(to_json(v));
    j["violations"] = viol;
    j["ok"] = r.ok();
    return j;
}

}  // namespace chibound
