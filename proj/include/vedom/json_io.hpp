#pragma once

#include "vedom/graph.hpp"
#include "vedom/reduction.hpp"
#include "vedom/tree_recognizer.hpp"
#include "vedom/validation.hpp"
#include "vedom/ve_domination.hpp"

#include "json.hpp"

namespace vedom {

using Json = nlohmann::ordered_json;

Json vertex_list(VertexSet const& s);
Json graph_json(Graph const& g);
Json report_json(DominationReport const& r);
Json reduction_json(ReductionMap const& m);
Json partition_json(UnitPartition const& p);
Json recognition_json(RecognitionResult const& r);
Json validation_json(ValidationReport const& r);

} // namespace vedom
