#include "vedom/constructions.hpp"

#include "vedom/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace vedom {

void CnfInstance::validate() const {
	if (clauses.empty()) throw InvalidInput("instance has no clauses");
	for (std::size_t j = 0; j < clauses.size(); ++j) {
		auto const& c = clauses[j];
		for (std::size_t a = 0; a < 3; ++a) {
			if (c[a].variable >= variable_count)
				throw InvalidInput("clause " + std::to_string(j + 1) + " uses variable " + std::to_string(c[a].variable + 1) + " beyond the declared " + std::to_string(variable_count));
			for (std::size_t b = a + 1; b < 3; ++b) {
				if (c[a].variable != c[b].variable) continue;
				if (c[a].negated != c[b].negated)
					throw InvalidInput("clause " + std::to_string(j + 1) + " contains variable " + std::to_string(c[a].variable + 1) + " and its negation");
				throw InvalidInput("clause " + std::to_string(j + 1) + " repeats variable " + std::to_string(c[a].variable + 1));
			}
		}
	}
}

bool CnfInstance::satisfied_by(std::vector<bool> const& assignment) const {
	return std::all_of(clauses.begin(), clauses.end(), [&](Clause const& c) {
		return std::any_of(c.begin(), c.end(), [&](Literal l) { return assignment[l.variable] != l.negated; });
	});
}

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
	std::vector<std::string_view> out;
	std::size_t i = 0;
	while (i < line.size()) {
		while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
		std::size_t j = i;
		while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
		if (j > i) out.push_back(line.substr(i, j - i));
		i = j;
	}
	return out;
}

template <typename Int>
bool parse_int(std::string_view tok, Int& out) {
	auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
	return ec == std::errc{} && ptr == tok.data() + tok.size();
}

} // namespace

CnfInstance parse_dimacs(std::string_view text) {
	CnfInstance f;
	std::optional<std::size_t> declared_clauses;
	std::vector<Literal> pending;
	std::size_t pending_line = 0;

	std::size_t line_no = 0, pos = 0;
	while (pos <= text.size()) {
		auto nl = text.find('\n', pos);
		auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
		pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
		++line_no;

		auto toks = tokens_of(line);
		if (toks.empty() || toks.front() == "c") continue;
		if (toks.front() == "%") break;
		if (toks.front() == "p") {
			if (declared_clauses) throw ParseError(line_no, "duplicate problem line");
			std::size_t vars = 0, count = 0;
			if (toks.size() != 4 || toks[1] != "cnf" || !parse_int(toks[2], vars) || !parse_int(toks[3], count))
				throw ParseError(line_no, "malformed problem line, expected \"p cnf <vars> <clauses>\"");
			f.variable_count = vars;
			declared_clauses = count;
			continue;
		}
		if (!declared_clauses) throw ParseError(line_no, "clause before the problem line");

		for (auto tok : toks) {
			long long lit = 0;
			if (!parse_int(tok, lit)) throw ParseError(line_no, "malformed literal \"" + std::string(tok) + "\"");
			if (pending.empty()) pending_line = line_no;
			if (lit == 0) {
				if (pending.size() != 3) throw ParseError(pending_line, "clause has " + std::to_string(pending.size()) + " literals, expected 3");
				Clause c{pending[0], pending[1], pending[2]};
				f.clauses.push_back(c);
				try {
					CnfInstance single{f.variable_count, {c}};
					single.validate();
				} catch (InvalidInput const& e) {
					throw ParseError(pending_line, e.what());
				}
				pending.clear();
				continue;
			}
			auto var = static_cast<std::size_t>(std::llabs(lit));
			if (var > f.variable_count) throw ParseError(line_no, "variable " + std::to_string(var) + " exceeds the declared " + std::to_string(f.variable_count));
			pending.push_back({var - 1, lit < 0});
		}
	}
	if (!declared_clauses) throw ParseError(line_no, "missing problem line");
	if (!pending.empty()) throw ParseError(pending_line, "unterminated clause");
	if (f.clauses.size() != *declared_clauses)
		throw ParseError(line_no, "expected " + std::to_string(*declared_clauses) + " clauses, found " + std::to_string(f.clauses.size()));
	if (f.clauses.empty()) throw ParseError(line_no, "instance has no clauses");
	return f;
}

SatReductionMap sat_to_graph(CnfInstance const& f) {
	f.validate();
	std::size_t const n = f.variable_count, m = f.clauses.size();
	SatReductionMap map;
	std::vector<Edge> edges;
	for (std::size_t i = 0; i < n; ++i) {
		auto b = static_cast<Vertex>(6 * i);
		VariablePath p{b, b + 1, b + 2, b + 3, b + 4, b + 5};
		map.variables.push_back(p);
		for (Vertex k = 0; k < 5; ++k) edges.push_back({b + k, b + k + 1});
	}
	for (std::size_t j = 0; j < m; ++j) map.clause_vertices.push_back(static_cast<Vertex>(6 * n + j));
	map.apex = static_cast<Vertex>(6 * n + m);

	for (std::size_t j = 0; j < m; ++j) {
		Vertex c = map.clause_vertices[j];
		for (Literal l : f.clauses[j]) {
			auto const& p = map.variables[l.variable];
			edges.push_back({l.negated ? p.u_neg : p.u, c});
		}
		for (std::size_t k = j + 1; k < m; ++k) edges.push_back({c, map.clause_vertices[k]});
		edges.push_back({c, map.apex});
	}
	map.graph = Graph::from_edges(6 * n + m + 1, edges);
	return map;
}

SatDecision sat_decide_via_graph(CnfInstance const& f, OracleLimits const& limits) {
	auto gadget = sat_to_graph(f);
	std::size_t const n = f.variable_count;
	VertexSet path_vertices = gadget.graph.empty_vertex_set();
	for (Vertex v = 0; v < 6 * n; ++v) path_vertices.insert(v);

	SatDecision d;
	d.witness = find_ve_dominating_set(gadget.graph, 2 * n, path_vertices, limits);
	d.satisfiable = d.witness.has_value();
	return d;
}

bool brute_force_satisfiable(CnfInstance const& f) {
	std::size_t const n = f.variable_count;
	if (n > 30) throw InstanceTooLarge("truth-table check limited to 30 variables");
	std::vector<bool> assignment(n);
	for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
		for (std::size_t i = 0; i < n; ++i) assignment[i] = bits >> i & 1u;
		if (f.satisfied_by(assignment)) return true;
	}
	return false;
}

PartitionedTree expand_backbone(Graph const& r) {
	if (!is_tree(r)) throw PreconditionError("not-a-tree", "backbone must be a tree");
	std::size_t const k = r.vertex_count();
	if (k < 2) throw PreconditionError("order-too-small", "backbone needs at least 2 vertices");

	std::vector<Edge> edges(r.edges().begin(), r.edges().end());
	PartitionedTree out;
	out.partition.labels.assign(3 * k, UnitLabel::Backbone);
	for (Vertex w = 0; w < k; ++w) {
		auto s = static_cast<Vertex>(k + w), l = static_cast<Vertex>(2 * k + w);
		edges.push_back({w, s});
		edges.push_back({s, l});
		out.partition.units.push_back({l, s, w});
		out.partition.labels[s] = UnitLabel::Support;
		out.partition.labels[l] = UnitLabel::Leaf;
	}
	out.tree = Graph::from_edges(3 * k, edges);
	out.partition.backbone_edges.assign(r.edges().begin(), r.edges().end());
	return out;
}

namespace {

void require_valid(Graph const& t, UnitPartition const& p) {
	if (auto why = partition_violation(t, p)) throw PreconditionError("invalid-partition", *why);
}

std::vector<InducedSubgraph> components_of(Graph const& g) {
	std::vector<InducedSubgraph> out;
	for (auto const& comp : connected_components(g)) out.push_back(induced_subgraph(g, comp));
	return out;
}

} // namespace

std::vector<InducedSubgraph> unit_cut_decompose(Graph const& t, UnitPartition const& p) {
	require_valid(t, p);
	return components_of(delete_edges(t, p.backbone_edges));
}

std::array<InducedSubgraph, 2> unit_cut_split(Graph const& t, UnitPartition const& p, Edge cut) {
	require_valid(t, p);
	if (cut.u > cut.v) std::swap(cut.u, cut.v);
	if (!std::binary_search(p.backbone_edges.begin(), p.backbone_edges.end(), cut))
		throw PreconditionError("not-a-unit-cut-edge", "edge (" + std::to_string(cut.u) + ", " + std::to_string(cut.v) + ") is not a backbone edge");
	Edge removed[] = {cut};
	auto parts = components_of(delete_edges(t, removed));
	return {std::move(parts[0]), std::move(parts[1])};
}

PartitionedTree unit_cut_extend(Graph const& t1, UnitPartition const& p1, Vertex u, Graph const& t2, UnitPartition const& p2, Vertex v) {
	require_valid(t1, p1);
	require_valid(t2, p2);
	if (u >= t1.vertex_count() || p1.labels[u] != UnitLabel::Backbone) throw PreconditionError("endpoint-not-in-W", "vertex " + std::to_string(u) + " of the first tree is not a backbone vertex");
	if (v >= t2.vertex_count() || p2.labels[v] != UnitLabel::Backbone) throw PreconditionError("endpoint-not-in-W", "vertex " + std::to_string(v) + " of the second tree is not a backbone vertex");
	for (Graph const* t : {&t1, &t2}) {
		auto r = recognize(*t);
		if (r.tree_case != RecognitionCase::T2 || !is_reduced(*t)) throw PreconditionError("not-in-T2", "input tree is not a reduced well-ve-dominated tree of order >= 6");
	}

	auto const offset = static_cast<Vertex>(t1.vertex_count());
	Graph joined = disjoint_union(t1, t2);
	std::vector<Edge> edges(joined.edges().begin(), joined.edges().end());
	edges.push_back({u, v + offset});

	PartitionedTree out;
	out.tree = Graph::from_edges(joined.vertex_count(), edges);
	out.partition.labels = p1.labels;
	out.partition.labels.insert(out.partition.labels.end(), p2.labels.begin(), p2.labels.end());
	out.partition.units = p1.units;
	for (auto unit : p2.units) out.partition.units.push_back({unit.leaf + offset, unit.support + offset, unit.backbone + offset});
	std::sort(out.partition.units.begin(), out.partition.units.end(), [](Unit const& a, Unit const& b) { return a.backbone < b.backbone; });
	for (Edge e : out.tree.edges())
		if (out.partition.labels[e.u] == UnitLabel::Backbone && out.partition.labels[e.v] == UnitLabel::Backbone) out.partition.backbone_edges.push_back(e);
	return out;
}

Graph path_graph(std::size_t n) {
	if (n < 1) throw InvalidInput("path needs at least one vertex");
	std::vector<Edge> edges;
	for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
	return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
	std::vector<Edge> edges;
	for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
	return Graph::from_edges(leaves + 1, edges);
}

bool is_wvd_path(std::size_t n) {
	if (n < 1) throw InvalidInput("path needs at least one vertex");
	return n == 1 || n == 2 || n == 3 || n == 6;
}

} // namespace vedom
