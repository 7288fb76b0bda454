#pragma once

#include "vedom/graph.hpp"
#include "vedom/reduction.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace vedom {

enum class UnitLabel : std::uint8_t { Leaf, Support, Backbone };

char label_char(UnitLabel l); // 'L', 'S', 'W'

// Body of a unit: the path leaf - support - backbone.
struct Unit {
	Vertex leaf;
	Vertex support;
	Vertex backbone;

	friend bool operator==(Unit const&, Unit const&) = default;
};

// L/S/W split of a tree in which every vertex lies in exactly one unit body.
// Units are ordered by backbone vertex.
struct UnitPartition {
	std::vector<Unit> units;
	std::vector<UnitLabel> labels;
	std::vector<Edge> backbone_edges;

	friend bool operator==(UnitPartition const&, UnitPartition const&) = default;
};

enum class RefutationKind {
	OrderNot3n,
	BadLeaf,
	BadSupportDegree,
	WMultiplicity,
	ForbiddenPath,
	BackboneDisconnected,
	CertificateFailed,
};

std::string to_string(RefutationKind k);

// Induced leaf-to-leaf paths that rule out well-ve-domination:
//   (i)   v1..v4, d(v1) = d(v4) = 1, d(v2) = 2
//   (ii)  v1..v5, d(v1) = d(v5) = 1, d(v2) = 2
//   (iii) v1..v7, d(v1) = d(v7) = 1, d(v2) = d(v4) = d(v6) = 2
enum class ForbiddenConfig { I = 1, II = 2, III = 3 };

std::string to_string(ForbiddenConfig c);

struct ForbiddenWitness {
	ForbiddenConfig config;
	std::vector<Vertex> path;

	friend bool operator==(ForbiddenWitness const&, ForbiddenWitness const&) = default;
};

struct Refutation {
	RefutationKind kind;
	std::vector<Vertex> witness; // offending vertices, in the reduced tree
	std::optional<ForbiddenConfig> config;
	std::string detail;
};

enum class RecognitionCase { T1, T2, Rejected };

std::string to_string(RecognitionCase c);

struct CertificateCheck {
	std::vector<std::size_t> dominator_counts; // per edge index
	bool independent = false;
	bool within_leaves_and_supports = false;
	bool exactly_once = false;

	bool passed() const { return independent && within_leaves_and_supports && exactly_once; }
};

// Partition, certificate and refutation refer to vertices of reduction.reduced_graph.
struct RecognitionResult {
	bool verdict = false;
	ReductionMap reduction;
	RecognitionCase tree_case = RecognitionCase::Rejected;
	std::optional<UnitPartition> partition;
	std::optional<VertexSet> certificate;
	std::optional<Refutation> refutation;

	Graph const& reduced_tree() const { return reduction.reduced_graph; }
};

// Decides whether a tree is well-ve-dominated in time linear in its size.
// Throws PreconditionError("not-a-tree") for other graphs.
RecognitionResult recognize(Graph const& t);

// Requires a reduced tree on at least 6 vertices.
std::variant<UnitPartition, Refutation> unit_partition(Graph const& t);

// Checks the structural invariants of p against t; nullopt when valid,
// otherwise a description of the first violation.
std::optional<std::string> partition_violation(Graph const& t, UnitPartition const& p);

// Exactly-once dominating set: two-colour the backbone, take the support of
// every unit whose backbone vertex shares the colour of the smallest backbone
// vertex and the leaf of every other unit. `swap_colours` picks the other class.
VertexSet build_certificate(Graph const& t, UnitPartition const& p, bool swap_colours = false);

CertificateCheck verify_certificate(Graph const& t, VertexSet const& i);

// First witness in the order (i), (ii), (iii), lexicographically smallest
// vertex sequence within a configuration. Requires a tree.
std::optional<ForbiddenWitness> find_forbidden_configuration(Graph const& t);

} // namespace vedom
