#include "wreathlab/reports.hpp"

namespace wreathlab {

json group_info_json(const FiniteGroup& G, int aut_cap) {
    json j;
    j["name"] = G.name();
    j["order"] = G.order();
    j["family"] = family_name(G.family());
    j["identity"] = G.identity();
    j["abelian"] = G.is_abelian();
    j["center_order"] = center(G).size();
    j["commutator_order"] = commutator_subgroup(G).size();
    j["abelianization"] = decomposition_json(abelianization(G));
    j["conjugacy_class_count"] = conjugacy_classes(G).size();
    j["simple"] = is_simple(G);
    try {
        j["automorphism_count"] = automorphism_group(G, aut_cap).size();
        j["outer_trivial"] = outer_automorphisms_trivial(G, aut_cap);
    } catch (const CapacityError&) {
        j["automorphism_count"] = nullptr;
        j["outer_trivial"] = nullptr;
    }
    return j;
}

json element_json(const WreathGroup& W, const WreathElement& g) {
    json lamps = json::array();
    for (auto [p, v] : g.lamps.entries())
        lamps.push_back({{"pos", p}, {"value", v}, {"label", W.base().label(v)}});
    return {{"lamps", lamps}, {"shift", g.shift}, {"text", W.to_string(g)}};
}

json normal_form_json(const NormalForm& nf) {
    json nonneg = json::array(), neg = json::array();
    for (auto [i, e] : nf.nonneg) nonneg.push_back({{"index", i}, {"exponent", e}});
    for (auto [i, e] : nf.neg) neg.push_back({{"index", i}, {"exponent", e}});
    return {{"side", nf.side == NormalFormSide::RF ? "rf" : "lf"},
            {"nonneg", nonneg},
            {"neg", neg},
            {"shift", nf.shift},
            {"text", to_string(nf)}};
}

json decomposition_json(const AbelianDecomposition& d) {
    json factors = json::array();
    for (const auto& f : d.factors)
        factors.push_back({{"p", f.p}, {"k", f.k}, {"r", f.r}});
    return {{"factors", factors}, {"text", d.to_string()}};
}

json twisted_report_json(const TwistedClassReport& r) {
    const char* method = r.method == TwistedMethod::Orbit
                             ? "orbit"
                             : (r.method == TwistedMethod::Cokernel ? "cokernel" : "fh");
    return {{"count", r.count}, {"representatives", r.representatives}, {"method", method}};
}

json autospec_json(const LampAutSpec& s) {
    return {{"xi", s.xi.image}, {"c", s.offset}, {"eps", s.eps}};
}

json reidemeister_json(const ReidemeisterResult& r) {
    json j;
    switch (r.kind) {
        case ReidemeisterResult::Kind::Finite:
            j["kind"] = "finite";
            j["value"] = r.finite.value;
            j["r_phi_prime"] = r.finite.r_phi_prime;
            j["r_t_twist"] = r.finite.r_t_twist;
            break;
        case ReidemeisterResult::Kind::InfiniteCertified:
            j["kind"] = "infinite";
            j["rule"] = r.infinite.rule;
            if (r.infinite.block_index) {
                j["block_index"] = *r.infinite.block_index;
                j["block_count"] = r.infinite.block_count;
            }
            break;
        case ReidemeisterResult::Kind::Unknown:
            j["kind"] = "unknown";
            break;
    }
    j["text"] = r.to_string();
    return j;
}

json vertex_json(const DLVertex& v) {
    auto tree = [](const TreeVertex& t) {
        json digits = json::array();
        for (auto [p, d] : t.digits) digits.push_back({{"pos", p}, {"digit", d}});
        return json{{"height", t.height}, {"digits", digits}};
    };
    return {{"t1", tree(v.v1)}, {"t2", tree(v.v2)}, {"text", vertex_to_string(v)}};
}

json iso_report_json(const IsoCheckReport& r) {
    return {{"m", r.m},
            {"radius", r.radius},
            {"cayley_sphere_sizes", r.cayley_sphere_sizes},
            {"graph_sphere_sizes", r.graph_sphere_sizes},
            {"pass", r.pass},
            {"failure", r.failure}};
}

json char_report_json(const CharCheckReport& r) {
    return {{"tag", r.tag.to_string()},
            {"window", r.window},
            {"members_checked", r.members_checked},
            {"specs_checked", r.specs_checked},
            {"pass", r.pass},
            {"violation", r.violation}};
}

json verdict_json(const Verdict& v) {
    json j;
    j["group"] = v.group_name;
    switch (v.kind) {
        case Verdict::Kind::RInf: j["verdict"] = "R-infinity"; break;
        case Verdict::Kind::NotRInf: j["verdict"] = "not-R-infinity"; break;
        case Verdict::Kind::Unknown: j["verdict"] = "unknown"; break;
    }
    if (v.certificate)
        j["certificate"] = {{"rule", v.certificate->rule}, {"support", v.certificate->support}};
    json fired = json::array();
    for (const auto& c : v.fired) fired.push_back({{"rule", c.rule}, {"support", c.support}});
    j["fired"] = fired;
    if (v.witness) {
        j["witness"] = autospec_json(v.witness->spec);
        j["witness"]["reidemeister"] = v.witness->reidemeister_value;
    }
    j["rules_tried"] = v.rules_tried;
    return j;
}

json cyclic_cross_json(const CyclicCrossReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"m", row.m},
                        {"expected_rinf", row.expected_rinf},
                        {"got_rinf", row.got_rinf},
                        {"witness_value", row.witness_value},
                        {"pass", row.pass}});
    return {{"rows", rows}, {"pass", r.pass}};
}

}  // namespace wreathlab
