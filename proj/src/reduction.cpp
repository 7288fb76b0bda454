#include "vedom/reduction.hpp"

#include <cstdint>
#include <unordered_map>

namespace vedom {

namespace {

struct NeighborListHash {
	std::size_t operator()(std::span<Vertex const> list) const {
		std::uint64_t h = 1469598103934665603ull;
		for (Vertex v : list) {
			h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
			h *= 1099511628211ull;
		}
		return static_cast<std::size_t>(h ^ list.size());
	}
};

struct NeighborListEqual {
	bool operator()(std::span<Vertex const> a, std::span<Vertex const> b) const {
		return std::equal(a.begin(), a.end(), b.begin(), b.end());
	}
};

} // namespace

std::vector<std::vector<Vertex>> neighborhood_classes(Graph const& g) {
	// Adjacency lists are already sorted, so they serve directly as keys.
	std::unordered_map<std::span<Vertex const>, std::size_t, NeighborListHash, NeighborListEqual> class_index;
	std::vector<std::vector<Vertex>> classes;
	for (Vertex v = 0; v < g.vertex_count(); ++v) {
		auto [it, inserted] = class_index.emplace(g.neighbors(v), classes.size());
		if (inserted) classes.emplace_back();
		classes[it->second].push_back(v);
	}
	return classes;
}

ReductionMap reduce(Graph const& g) {
	ReductionMap map;
	auto classes = neighborhood_classes(g);
	map.class_of.assign(g.vertex_count(), 0);
	VertexSet kept = g.empty_vertex_set();
	for (std::size_t c = 0; c < classes.size(); ++c) {
		map.representative.push_back(classes[c].front());
		kept.insert(classes[c].front());
		for (Vertex v : classes[c]) map.class_of[v] = c;
	}
	auto sub = induced_subgraph(g, kept);
	map.reduced_graph = std::move(sub.graph);
	map.to_reduced.resize(g.vertex_count());
	for (Vertex v = 0; v < g.vertex_count(); ++v) map.to_reduced[v] = sub.old_to_new[map.representative[map.class_of[v]]];
	return map;
}

bool is_reduced(Graph const& g) {
	return neighborhood_classes(g).size() == g.vertex_count();
}

} // namespace vedom
