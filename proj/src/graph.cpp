#include "vedom/graph.hpp"

#include "vedom/errors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace vedom {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph Graph::from_edges(std::size_t vertex_count, std::span<Edge const> edges) {
	Graph g(vertex_count);
	g.edges_.reserve(edges.size());
	for (Edge e : edges) {
		if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
		if (e.u >= vertex_count || e.v >= vertex_count)
			throw InvalidInput("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") has an endpoint >= " + std::to_string(vertex_count));
		if (e.u > e.v) std::swap(e.u, e.v);
		g.edges_.push_back(e);
	}
	std::sort(g.edges_.begin(), g.edges_.end());
	auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
	if (dup != g.edges_.end()) throw InvalidInput("duplicate edge (" + std::to_string(dup->u) + ", " + std::to_string(dup->v) + ")");

	for (Edge e : g.edges_) {
		g.adjacency_[e.u].push_back(e.v);
		g.adjacency_[e.v].push_back(e.u);
	}
	for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
	return g;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
	if (a >= vertex_count()) return false;
	auto const& list = adjacency_[a];
	return std::binary_search(list.begin(), list.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
	Edge key{std::min(a, b), std::max(a, b)};
	auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
	if (it == edges_.end() || *it != key) return std::nullopt;
	return static_cast<std::size_t>(it - edges_.begin());
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
	VertexSet s(vertex_count());
	s.insert(v);
	for (Vertex u : adjacency_[v]) s.insert(u);
	return s;
}

namespace {

std::string_view trim(std::string_view s) {
	auto const ws = " \t\r\n\v\f";
	auto b = s.find_first_not_of(ws);
	if (b == std::string_view::npos) return {};
	auto e = s.find_last_not_of(ws);
	return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
	std::vector<std::string_view> out;
	std::size_t i = 0;
	while (i < s.size()) {
		while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
		std::size_t j = i;
		while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
		if (j > i) out.push_back(s.substr(i, j - i));
		i = j;
	}
	return out;
}

bool parse_index(std::string_view tok, std::size_t& out) {
	if (tok.empty()) return false;
	auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
	return ec == std::errc{} && ptr == tok.data() + tok.size();
}

} // namespace

Graph parse_edge_list(std::string_view text) {
	std::optional<std::size_t> declared;
	bool seen_content = false;
	std::vector<Edge> edges;
	std::map<Edge, std::size_t> first_line;
	std::size_t max_index_plus_one = 0;

	std::size_t line_no = 0;
	std::size_t pos = 0;
	while (pos <= text.size()) {
		auto nl = text.find('\n', pos);
		auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
		pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
		++line_no;

		auto line = trim(raw);
		if (line.empty() || line.front() == '#') continue;
		auto tokens = split_ws(line);

		if (tokens.front() == "n") {
			if (seen_content) throw ParseError(line_no, "vertex-count header must precede all edges");
			std::size_t count = 0;
			if (tokens.size() != 2 || !parse_index(tokens[1], count)) throw ParseError(line_no, "malformed header, expected \"n <count>\"");
			declared = count;
			seen_content = true;
			continue;
		}
		seen_content = true;

		std::size_t a = 0, b = 0;
		if (tokens.size() != 2 || !parse_index(tokens[0], a) || !parse_index(tokens[1], b))
			throw ParseError(line_no, "malformed edge line \"" + std::string(line) + "\"");
		if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
		if (a >= kNoVertex || b >= kNoVertex) throw ParseError(line_no, "vertex index too large");
		if (declared && (a >= *declared || b >= *declared))
			throw ParseError(line_no, "vertex index " + std::to_string(std::max(a, b)) + " >= declared count " + std::to_string(*declared));

		Edge e{static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
		auto [it, inserted] = first_line.emplace(e, line_no);
		if (!inserted)
			throw ParseError(line_no, "duplicate edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + "), first seen on line " + std::to_string(it->second));
		edges.push_back(e);
		max_index_plus_one = std::max<std::size_t>(max_index_plus_one, e.v + 1);
	}
	return Graph::from_edges(declared.value_or(max_index_plus_one), edges);
}

std::string to_edge_list(Graph const& g) {
	std::ostringstream out;
	out << "n " << g.vertex_count() << '\n';
	for (Edge e : g.edges()) out << e.u << ' ' << e.v << '\n';
	return out.str();
}

std::vector<VertexSet> connected_components(Graph const& g) {
	std::size_t const n = g.vertex_count();
	std::vector<bool> seen(n, false);
	std::vector<VertexSet> out;
	std::vector<Vertex> stack;
	for (Vertex start = 0; start < n; ++start) {
		if (seen[start]) continue;
		VertexSet comp(n);
		seen[start] = true;
		stack.push_back(start);
		while (!stack.empty()) {
			Vertex v = stack.back();
			stack.pop_back();
			comp.insert(v);
			for (Vertex u : g.neighbors(v)) {
				if (!seen[u]) {
					seen[u] = true;
					stack.push_back(u);
				}
			}
		}
		out.push_back(std::move(comp));
	}
	return out;
}

bool is_forest(Graph const& g) {
	return g.edge_count() + connected_components(g).size() == g.vertex_count();
}

bool is_tree(Graph const& g) {
	if (g.vertex_count() == 0) return false;
	return g.edge_count() + 1 == g.vertex_count() && connected_components(g).size() == 1;
}

std::vector<PendantEdge> good_pendant_edges(Graph const& g) {
	std::vector<PendantEdge> out;
	for (Vertex v = 0; v < g.vertex_count(); ++v) {
		if (g.degree(v) != 1) continue;
		Vertex s = g.neighbors(v).front();
		if (g.degree(s) == 2) out.push_back({v, s});
	}
	return out;
}

InducedSubgraph induced_subgraph(Graph const& g, VertexSet const& kept) {
	InducedSubgraph out;
	out.old_to_new.assign(g.vertex_count(), kNoVertex);
	for (Vertex v = 0; v < g.vertex_count(); ++v) {
		if (kept.contains(v)) {
			out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
			out.new_to_old.push_back(v);
		}
	}
	std::vector<Edge> edges;
	for (Edge e : g.edges()) {
		Vertex a = out.old_to_new[e.u], b = out.old_to_new[e.v];
		if (a != kNoVertex && b != kNoVertex) edges.push_back({a, b});
	}
	out.graph = Graph::from_edges(out.new_to_old.size(), edges);
	return out;
}

InducedSubgraph induced_delete(Graph const& g, VertexSet const& removed) {
	VertexSet kept(g.vertex_count());
	for (Vertex v = 0; v < g.vertex_count(); ++v)
		if (!removed.contains(v)) kept.insert(v);
	return induced_subgraph(g, kept);
}

Graph delete_edges(Graph const& g, std::span<Edge const> removed) {
	std::vector<Edge> drop(removed.begin(), removed.end());
	for (auto& e : drop)
		if (e.u > e.v) std::swap(e.u, e.v);
	std::sort(drop.begin(), drop.end());
	std::vector<Edge> keep;
	for (Edge e : g.edges())
		if (!std::binary_search(drop.begin(), drop.end(), e)) keep.push_back(e);
	return Graph::from_edges(g.vertex_count(), keep);
}

Graph disjoint_union(Graph const& a, Graph const& b) {
	auto const offset = static_cast<Vertex>(a.vertex_count());
	std::vector<Edge> edges(a.edges().begin(), a.edges().end());
	for (Edge e : b.edges()) edges.push_back({e.u + offset, e.v + offset});
	return Graph::from_edges(a.vertex_count() + b.vertex_count(), edges);
}

Graph relabel(Graph const& g, std::span<Vertex const> permutation) {
	if (permutation.size() != g.vertex_count()) throw InvalidInput("relabel: permutation size mismatch");
	std::vector<bool> hit(permutation.size());
	for (Vertex p : permutation) {
		if (p >= permutation.size() || hit[p]) throw InvalidInput("relabel: not a permutation");
		hit[p] = true;
	}
	std::vector<Edge> edges;
	for (Edge e : g.edges()) edges.push_back({permutation[e.u], permutation[e.v]});
	return Graph::from_edges(g.vertex_count(), edges);
}

bool is_independent(Graph const& g, VertexSet const& s) {
	for (Edge e : g.edges())
		if (s.contains(e.u) && s.contains(e.v)) return false;
	return true;
}

} // namespace vedom
