#pragma once

#include "vedom/graph.hpp"
#include "vedom/tree_recognizer.hpp"
#include "vedom/ve_domination.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace vedom {

// ---------------------------------------------------------------- 3-SAT gadget

struct Literal {
	std::size_t variable = 0; // 0-based
	bool negated = false;

	friend bool operator==(Literal const&, Literal const&) = default;
};

using Clause = std::array<Literal, 3>;

struct CnfInstance {
	std::size_t variable_count = 0;
	std::vector<Clause> clauses;

	// Throws InvalidInput: no clauses, variable out of range, repeated variable
	// or a complementary pair inside a clause.
	void validate() const;
	bool satisfied_by(std::vector<bool> const& assignment) const;
};

// DIMACS CNF: "c" comments, "p cnf <vars> <clauses>", clauses terminated by 0.
// Clauses must have exactly three literals.
CnfInstance parse_dimacs(std::string_view text);

// Vertex ids of the gadget. Per variable the path x - y - u - u' - w - z.
struct VariablePath {
	Vertex x, y, u, u_neg, w, z;
};

struct SatReductionMap {
	Graph graph;
	std::vector<VariablePath> variables;
	std::vector<Vertex> clause_vertices;
	Vertex apex = 0;
};

// Variable paths first (6 ids each, in path order), then one vertex per clause,
// then the apex. Clause vertices form a clique, all adjacent to the apex; a
// clause vertex meets u_i for a positive literal and u_i' for a negated one.
SatReductionMap sat_to_graph(CnfInstance const& f);

struct SatDecision {
	bool satisfiable = false;              // answer read off the gadget
	std::optional<VertexSet> witness;      // ve-dominating set of size 2n
};

// Searches the 6n path vertices of the gadget for a ve-dominating set of size 2n.
SatDecision sat_decide_via_graph(CnfInstance const& f, OracleLimits const& limits = {});

// Truth-table satisfiability, for small instances.
bool brute_force_satisfiable(CnfInstance const& f);

// ---------------------------------------------------------------- trees

struct PartitionedTree {
	Graph tree;
	UnitPartition partition;
};

// Attaches a pendant path s_w - l_w to every vertex w of r. Backbone keeps its
// indices, supports follow in backbone order, then leaves.
PartitionedTree expand_backbone(Graph const& r);

// Components left after deleting every backbone edge (the unit bodies).
std::vector<InducedSubgraph> unit_cut_decompose(Graph const& t, UnitPartition const& p);

// The two components left after deleting one backbone edge.
std::array<InducedSubgraph, 2> unit_cut_split(Graph const& t, UnitPartition const& p, Edge cut);

// Disjoint union of t1 and t2 (t2 shifted by |V(t1)|) plus the edge u - v.
// u and v must be backbone vertices; both trees must be reduced members of T_2.
PartitionedTree unit_cut_extend(Graph const& t1, UnitPartition const& p1, Vertex u, Graph const& t2, UnitPartition const& p2, Vertex v);

Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

// Paths that are well-ve-dominated: n in {1, 2, 3, 6}.
bool is_wvd_path(std::size_t n);

} // namespace vedom
