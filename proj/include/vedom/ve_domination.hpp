#pragma once

#include "vedom/graph.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vedom {

// Limits for the exhaustive searches. Full enumeration refuses graphs with more
// than max_vertices vertices; the size-bounded mode accepts up to
// bounded_max_vertices vertices as long as the bound is at most max_bound.
struct OracleLimits {
	std::size_t max_vertices = 24;
	std::size_t bounded_max_vertices = 40;
	std::size_t max_bound = 10;
};

struct EnumerationMode {
	std::optional<std::size_t> size_bound; // nullopt = full

	bool full() const { return !size_bound.has_value(); }
	std::string to_string() const;
};

struct DominationReport {
	std::size_t gamma_ve = 0;
	std::size_t big_gamma_ve = 0;
	std::map<std::size_t, std::size_t> minimal_size_multiset;
	VertexSet witness_min;
	VertexSet witness_max;
	std::size_t i_ve = 0;
	std::size_t beta_ve = 0;
	// In size-bounded mode these describe only the sets found; a "false" is
	// conclusive, a "true" is not.
	bool is_well_ve_dominated = true;
	bool is_well_ve_covered = true;
	EnumerationMode mode;
};

// Edges with an endpoint in N[v].
EdgeSet ve_dominated_edges(Graph const& g, Vertex v);

bool is_ve_dominating(Graph const& g, VertexSet const& s);

// Edges ve-dominated by v and by no other member of s. Requires v in s.
EdgeSet private_edges(Graph const& g, VertexSet const& s, Vertex v);

// Private-edge characterization: s dominates and every member has a private edge.
bool is_minimal_ve_dominating(Graph const& g, VertexSet const& s);

// Definition check: s dominates and no s - {v} dominates.
bool is_minimal_ve_dominating_by_removal(Graph const& g, VertexSet const& s);

// All inclusion-minimal ve-dominating sets, ordered by (size, members). With a
// size bound only sets of at most that many vertices are produced.
std::vector<VertexSet> enumerate_minimal_ve_dominating_sets(Graph const& g, EnumerationMode mode = {}, OracleLimits const& limits = {});

DominationReport oracle_report(Graph const& g, EnumerationMode mode = {}, OracleLimits const& limits = {});

bool domination_chain_check(Graph const& g, OracleLimits const& limits = {});
bool domination_chain_holds(DominationReport const& r);

// gamma_ve by increasing-cardinality search; stops at the first size that
// admits a dominating set.
std::size_t ve_domination_number(Graph const& g, OracleLimits const& limits = {});

// A ve-dominating set with exactly `size` members drawn from `candidates`, or
// nullopt. The first such set in lexicographic member order is returned.
std::optional<VertexSet> find_ve_dominating_set(Graph const& g, std::size_t size, VertexSet const& candidates, OracleLimits const& limits = {});

} // namespace vedom
