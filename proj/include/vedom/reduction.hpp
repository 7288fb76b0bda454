#pragma once

#include "vedom/graph.hpp"

#include <vector>

namespace vedom {

// Vertices with identical open neighborhoods collapsed to their minimum-index
// member.
struct ReductionMap {
	std::vector<std::size_t> class_of;      // per original vertex
	std::vector<Vertex> representative;     // per class
	Graph reduced_graph;                    // one vertex per class, in class order
	std::vector<Vertex> to_reduced;         // original vertex -> reduced index
};

// Classes of equal open neighborhoods, each sorted, ordered by minimum member.
std::vector<std::vector<Vertex>> neighborhood_classes(Graph const& g);

ReductionMap reduce(Graph const& g);

bool is_reduced(Graph const& g);

} // namespace vedom
