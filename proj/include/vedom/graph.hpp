#pragma once

#include "vedom/index_set.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vedom {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// Unordered pair stored with u < v.
struct Edge {
	Vertex u = 0;
	Vertex v = 0;

	friend auto operator<=>(Edge const&, Edge const&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1. Adjacency lists are
// sorted; edges are numbered in lexicographic (min, max) order.
class Graph {
public:
	Graph() = default;
	explicit Graph(std::size_t vertex_count);

	// Throws InvalidInput on self-loops, duplicate edges and out-of-range
	// endpoints. Endpoint order within a pair does not matter.
	static Graph from_edges(std::size_t vertex_count, std::span<Edge const> edges);

	std::size_t vertex_count() const { return adjacency_.size(); }
	std::size_t edge_count() const { return edges_.size(); }

	std::span<Vertex const> neighbors(Vertex v) const { return adjacency_[v]; }
	std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
	std::span<Edge const> edges() const { return edges_; }
	Edge edge(std::size_t index) const { return edges_[index]; }

	bool adjacent(Vertex a, Vertex b) const;
	std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

	// N[v] = N(v) u {v}.
	VertexSet closed_neighborhood(Vertex v) const;

	VertexSet empty_vertex_set() const { return VertexSet(vertex_count()); }
	EdgeSet empty_edge_set() const { return EdgeSet(edge_count()); }

	friend bool operator==(Graph const&, Graph const&) = default;

private:
	std::vector<std::vector<Vertex>> adjacency_;
	std::vector<Edge> edges_;
};

// Result of deleting vertices: the induced subgraph plus the old -> new index
// map (kNoVertex for deleted vertices) and its inverse.
struct InducedSubgraph {
	Graph graph;
	std::vector<Vertex> old_to_new;
	std::vector<Vertex> new_to_old;
};

// Edge-list text format: '#' comment lines, an optional "n <count>" header,
// then one "u v" pair per line.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(Graph const& g);

bool is_tree(Graph const& g);
bool is_forest(Graph const& g);

// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(Graph const& g);

struct PendantEdge {
	Vertex leaf;
	Vertex support;

	friend bool operator==(PendantEdge const&, PendantEdge const&) = default;
};

// Pendant edges whose non-leaf endpoint has degree exactly 2, sorted by leaf.
std::vector<PendantEdge> good_pendant_edges(Graph const& g);

InducedSubgraph induced_delete(Graph const& g, VertexSet const& removed);
InducedSubgraph induced_subgraph(Graph const& g, VertexSet const& kept);

// Same vertex set, listed edges removed.
Graph delete_edges(Graph const& g, std::span<Edge const> removed);

// Vertices of `b` are shifted by a.vertex_count().
Graph disjoint_union(Graph const& a, Graph const& b);

// Vertex v of g becomes permutation[v].
Graph relabel(Graph const& g, std::span<Vertex const> permutation);

bool is_independent(Graph const& g, VertexSet const& s);

} // namespace vedom
