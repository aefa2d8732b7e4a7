#pragma once

#include <json.hpp>

#include "wreathlab/classifier.hpp"
#include "wreathlab/dl_graph.hpp"
#include "wreathlab/normal_form.hpp"

namespace wreathlab {

using json = nlohmann::json;

json group_info_json(const FiniteGroup& G, int aut_cap = kDefaultAutCap);
json element_json(const WreathGroup& W, const WreathElement& g);
json normal_form_json(const NormalForm& nf);
json decomposition_json(const AbelianDecomposition& d);
json twisted_report_json(const TwistedClassReport& r);
json reidemeister_json(const ReidemeisterResult& r);
json autospec_json(const LampAutSpec& s);
json vertex_json(const DLVertex& v);
json iso_report_json(const IsoCheckReport& r);
json char_report_json(const CharCheckReport& r);
json verdict_json(const Verdict& v);
json cyclic_cross_json(const CyclicCrossReport& r);

}  // namespace wreathlab
