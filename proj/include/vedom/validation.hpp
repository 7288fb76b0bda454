#pragma once

#include "vedom/graph.hpp"
#include "vedom/ve_domination.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vedom {

struct ValidationOptions {
	OracleLimits limits;
	unsigned threads = 0;                 // 0 = hardware concurrency
	std::size_t oracle_max_order = 15;    // recognizer vs oracle comparison
	std::size_t transport_max_order = 12; // reduction transport on leaf-duplicated trees
	std::size_t transport_samples = 200;
	std::size_t covered_max_order = 12;   // wvd => i_ve = beta_ve, and the chain
	std::size_t extension_max_order = 18; // unit-cut extension pairs
	std::uint64_t seed = 0x5eed'cafe'f00dull;
};

struct RecognizerMismatch {
	Graph tree;
	bool recognizer_verdict;
	bool oracle_verdict;
};

struct LemmaFailure {
	std::string lemma;
	Graph witness;
	std::string detail;
};

struct ValidationReport {
	std::size_t max_order = 0;
	std::map<std::size_t, std::size_t> trees_checked;
	std::map<std::size_t, std::size_t> wvd_tree_census;
	std::vector<RecognizerMismatch> recognizer_oracle_mismatches;
	std::vector<LemmaFailure> lemma_failures;
	// Number of instances each named check was applied to.
	std::map<std::string, std::size_t> checks_run;
	std::chrono::duration<double> elapsed{};

	bool ok() const { return recognizer_oracle_mismatches.empty() && lemma_failures.empty(); }
};

// Recognizer against the oracle on every free tree up to max_order, plus the
// certificate checks on every accepted tree. Orders above
// options.oracle_max_order (at most 18) get only the structural checks.
ValidationReport cross_validate(std::size_t max_order, ValidationOptions const& options = {});

// Checks lemma-level claims against the oracle on every free tree up to max_order:
// reduction transport, cut-edge and cut-vertex decomposition, forbidden paths,
// wvd => i_ve = beta_ve, the domination chain, unit-cut additivity and extension.
ValidationReport lemma_suite(std::size_t max_order, ValidationOptions const& options = {});

// Lemma hypotheses in a tree: each endpoint keeps a path of length >= 2 away
// from the other.
bool cut_edge_hypothesis(Graph const& t, Vertex u, Vertex v);
bool cut_vertex_hypothesis(Graph const& t, Vertex c);

// Random tree on n vertices with `duplicates` extra leaves, each a twin of an
// existing leaf.
Graph leaf_duplicated_tree(std::size_t n, std::size_t duplicates, std::uint64_t seed);

} // namespace vedom
