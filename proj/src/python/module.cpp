#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wreathlab/classifier.hpp"
#include "wreathlab/dl_graph.hpp"
#include "wreathlab/group_spec.hpp"
#include "wreathlab/normal_form.hpp"
#include "wreathlab/suite.hpp"

namespace py = pybind11;
using namespace wreathlab;

namespace {

WreathElement make_element(const WreathGroup& W,
                           const std::vector<std::pair<int, int>>& lamps, int shift) {
    WreathElement g;
    g.lamps = LampConfig(lamps);
    g.shift = shift;
    for (auto [p, v] : g.lamps.entries()) {
        (void)p;
        if (v < 0 || v >= W.base().order() || v == W.base().identity())
            throw ValidationError("lamp values must be non-identity element indices");
    }
    return g;
}

py::dict verdict_to_dict(const Verdict& v) {
    py::dict d;
    d["group"] = v.group_name;
    d["verdict"] = v.kind == Verdict::Kind::RInf
                       ? "R-infinity"
                       : (v.kind == Verdict::Kind::NotRInf ? "not-R-infinity" : "unknown");
    if (v.certificate) {
        d["rule"] = v.certificate->rule;
        d["support"] = v.certificate->support;
    }
    py::list fired;
    for (const auto& c : v.fired) fired.append(c.rule);
    d["fired"] = fired;
    if (v.witness) {
        py::dict w;
        w["xi"] = v.witness->spec.xi.image;
        w["c"] = v.witness->spec.offset;
        w["eps"] = v.witness->spec.eps;
        w["reidemeister"] = v.witness->reidemeister_value;
        d["witness"] = w;
    }
    d["rules_tried"] = v.rules_tried;
    return d;
}

py::dict reid_to_dict(const ReidemeisterResult& r) {
    py::dict d;
    switch (r.kind) {
        case ReidemeisterResult::Kind::Finite:
            d["kind"] = "finite";
            d["value"] = r.finite.value;
            d["r_phi_prime"] = r.finite.r_phi_prime;
            d["r_t_twist"] = r.finite.r_t_twist;
            break;
        case ReidemeisterResult::Kind::InfiniteCertified:
            d["kind"] = "infinite";
            d["rule"] = r.infinite.rule;
            if (r.infinite.block_index) {
                d["block_index"] = *r.infinite.block_index;
                d["block_count"] = r.infinite.block_count;
            }
            break;
        case ReidemeisterResult::Kind::Unknown:
            d["kind"] = "unknown";
            break;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact computations in wreath products G wr Z";

    py::register_exception<CapacityError>(m, "CapacityError");
    py::register_exception<ValidationError>(m, "ValidationError");

    py::class_<FiniteGroup>(m, "FiniteGroup")
        .def_property_readonly("order", &FiniteGroup::order)
        .def_property_readonly("identity", &FiniteGroup::identity)
        .def_property_readonly("name", &FiniteGroup::name)
        .def_property_readonly("family", [](const FiniteGroup& G) { return family_name(G.family()); })
        .def("op", &FiniteGroup::op)
        .def("inv", &FiniteGroup::inv)
        .def("power", &FiniteGroup::power)
        .def("element_order", &FiniteGroup::element_order)
        .def("label", &FiniteGroup::label)
        .def("is_abelian", &FiniteGroup::is_abelian)
        .def("__repr__", [](const FiniteGroup& G) {
            return "<FiniteGroup " + G.name() + " of order " + std::to_string(G.order()) + ">";
        });

    m.def("build_group", &build_group, py::arg("spec"),
          "Build a group from the spec mini-grammar (C5, C2xC4, D12, Q8, S5, A6)");
    m.def("group_from_table", [](const std::vector<std::vector<int>>& table) {
        return FiniteGroup::from_table(table);
    });
    m.def("center", &center);
    m.def("commutator_subgroup", &commutator_subgroup);
    m.def("abelianization", [](const FiniteGroup& G) {
        py::list out;
        for (const auto& f : abelianization(G).factors)
            out.append(py::make_tuple(f.p, f.k, f.r));
        return out;
    });
    m.def("sylow", [](const FiniteGroup& G, long long p) {
        auto [set, unique] = sylow(G, p);
        return py::make_tuple(set, unique);
    });
    m.def("conjugacy_classes", &conjugacy_classes);
    m.def("automorphism_group",
          [](const FiniteGroup& G, int aut_cap) {
              std::vector<std::vector<int>> out;
              for (const auto& a : automorphism_group(G, aut_cap)) out.push_back(a.image);
              return out;
          },
          py::arg("group"), py::arg("aut_cap") = kDefaultAutCap);
    m.def("outer_automorphisms_trivial", &outer_automorphisms_trivial, py::arg("group"),
          py::arg("aut_cap") = kDefaultAutCap);
    m.def("is_simple", &is_simple);

    py::class_<WreathElement>(m, "WreathElement")
        .def_property_readonly("shift", [](const WreathElement& g) { return g.shift; })
        .def_property_readonly("lamps", [](const WreathElement& g) { return g.lamps.entries(); })
        .def("is_identity", &WreathElement::is_identity)
        .def("__eq__", [](const WreathElement& a, const WreathElement& b) { return a == b; });

    py::class_<WreathGroup>(m, "WreathGroup")
        .def(py::init<FiniteGroup>())
        .def_property_readonly("base", &WreathGroup::base)
        .def("element", &make_element, py::arg("lamps"), py::arg("shift") = 0)
        .def("identity", &WreathGroup::identity_element)
        .def("lamp", &WreathGroup::lamp)
        .def("t_power", &WreathGroup::t_power)
        .def("mul", &WreathGroup::mul)
        .def("inverse", &WreathGroup::inverse)
        .def("to_string", &WreathGroup::to_string)
        .def("word_length_bfs",
             [](const WreathGroup& W, const WreathElement& g, const std::string& gens, int cap) {
                 auto r = W.word_length_bfs(g, gens == "ta" ? GenSet::TA : GenSet::AT, cap);
                 return r ? py::cast(*r) : py::none().cast<py::object>();
             },
             py::arg("element"), py::arg("gens") = "at",
             py::arg("cap") = WreathGroup::kDefaultBallCap);

    m.def("parse_word", [](const WreathGroup& W, const std::string& text, const std::string& gens) {
        return eval_word(W, parse_word(text, gens == "ta" ? GenSet::TA : GenSet::AT,
                                       W.lamp_order()));
    });
    m.def("normal_form", [](const WreathGroup& W, const WreathElement& g) {
        auto nf = normal_form(W, g);
        py::dict d;
        d["nonneg"] = nf.nonneg;
        d["neg"] = nf.neg;
        d["shift"] = nf.shift;
        d["word"] = print_word(to_word(nf));
        return d;
    });
    m.def("word_length_ct", &word_length_ct);

    m.def("vertex_of_element", [](const WreathElement& g, int order) {
        return vertex_to_string(vertex_of_element(g, order));
    });
    m.def("check_cayley_isomorphism", [](int order, int radius) {
        auto rep = check_cayley_isomorphism(order, radius);
        py::dict d;
        d["pass"] = rep.pass;
        d["sphere_sizes"] = rep.cayley_sphere_sizes;
        d["failure"] = rep.failure;
        return d;
    });

    py::class_<LampAutSpec>(m, "LampAutSpec")
        .def_property_readonly("c", [](const LampAutSpec& s) { return s.offset; })
        .def_property_readonly("eps", [](const LampAutSpec& s) { return s.eps; })
        .def_property_readonly("xi", [](const LampAutSpec& s) { return s.xi.image; })
        .def("__repr__", [](const LampAutSpec& s) { return "<LampAutSpec " + s.to_string() + ">"; });

    m.def("make_autospec",
          [](const WreathGroup& W, const std::vector<int>& xi, int c, int eps) {
              return make_autospec(W, GroupAut{xi}, c, eps);
          });
    m.def("unit_autospec", [](const WreathGroup& W, int k, int c, int eps) {
        return make_autospec(W, unit_aut(W.base(), k), c, eps);
    });
    m.def("apply_aut", &apply_aut);
    m.def("block_class_count",
          [](const WreathGroup& W, const LampAutSpec& s, int i) {
              return block_class_count(W, s, i);
          });
    m.def("block_fixed_points", &block_fixed_points);
    m.def("window_class_count", &window_class_count);
    m.def("window_direct_count",
          [](const WreathGroup& W, const LampAutSpec& s, const std::vector<int>& window) {
              return window_direct_count(W, s, window);
          });

    m.def("twisted_classes", [](const FiniteGroup& G, const std::vector<int>& phi) {
        auto rep = twisted_classes(G, GroupAut{phi});
        return py::make_tuple(rep.count, rep.representatives);
    });
    m.def("reidemeister_abelian", [](const FiniteGroup& G, const std::vector<int>& phi) {
        return reidemeister_abelian(G, GroupAut{phi});
    });
    m.def("reidemeister_fh", [](const FiniteGroup& G, const std::vector<int>& phi) {
        return reidemeister_fh(G, GroupAut{phi});
    });
    m.def("reidemeister_wreath", [](const WreathGroup& W, const LampAutSpec& s) {
        return reid_to_dict(reidemeister_wreath(W, s));
    });

    m.def("classify", [](const FiniteGroup& G) { return verdict_to_dict(classify(G)); });
    m.def("classify", [](const std::string& spec) {
        return verdict_to_dict(classify(build_group(spec)));
    });
    m.def("cross_validate_cyclic", [](int limit) {
        auto rep = cross_validate_cyclic(limit);
        py::list rows;
        for (const auto& r : rep.rows)
            rows.append(py::make_tuple(r.m, r.got_rinf, r.witness_value));
        return py::make_tuple(rep.pass, rows);
    });
}
