#pragma once

// Slow reference implementations used as test oracles. They share nothing with
// the library beyond the Graph type.

#include "vedom/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace vedom::testing {

inline Graph make_graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> const& pairs) {
	std::vector<Edge> edges;
	for (auto [u, v] : pairs) edges.push_back({u, v});
	return Graph::from_edges(n, edges);
}

inline bool naive_dominates(Graph const& g, std::vector<Vertex> const& s, Edge e) {
	for (Vertex v : s) {
		if (v == e.u || v == e.v || g.adjacent(v, e.u) || g.adjacent(v, e.v)) return true;
	}
	return false;
}

inline bool naive_is_dominating(Graph const& g, std::vector<Vertex> const& s) {
	for (Edge e : g.edges())
		if (!naive_dominates(g, s, e)) return false;
	return true;
}

inline std::vector<Vertex> members_of(std::uint64_t mask) {
	std::vector<Vertex> out;
	for (Vertex v = 0; v < 64; ++v)
		if (mask >> v & 1u) out.push_back(v);
	return out;
}

// Minimal by definition: dominating, and dropping any one member breaks it.
inline bool naive_is_minimal(Graph const& g, std::vector<Vertex> const& s) {
	if (!naive_is_dominating(g, s)) return false;
	for (std::size_t k = 0; k < s.size(); ++k) {
		auto t = s;
		t.erase(t.begin() + static_cast<std::ptrdiff_t>(k));
		if (naive_is_dominating(g, t)) return false;
	}
	return true;
}

inline bool naive_is_independent(Graph const& g, std::vector<Vertex> const& s) {
	for (std::size_t a = 0; a < s.size(); ++a)
		for (std::size_t b = a + 1; b < s.size(); ++b)
			if (g.adjacent(s[a], s[b])) return false;
	return true;
}

struct NaiveReport {
	std::vector<std::vector<Vertex>> minimal_sets; // (size, lex) order
	std::map<std::size_t, std::size_t> sizes;
	std::size_t gamma = 0, big_gamma = 0, i = 0, beta = 0;
	bool wvd = true;
};

// Sweeps all 2^n subsets; meant for n <= 14.
inline NaiveReport naive_report(Graph const& g) {
	std::size_t const n = g.vertex_count();
	NaiveReport r;
	std::size_t i_min = SIZE_MAX;
	for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
		auto s = members_of(mask);
		if (naive_is_dominating(g, s) && naive_is_independent(g, s)) i_min = std::min(i_min, s.size());
		if (!naive_is_minimal(g, s)) continue;
		r.minimal_sets.push_back(s);
		if (naive_is_independent(g, s)) r.beta = std::max(r.beta, s.size());
	}
	std::sort(r.minimal_sets.begin(), r.minimal_sets.end(), [](auto const& a, auto const& b) {
		return a.size() != b.size() ? a.size() < b.size() : a < b;
	});
	for (auto const& s : r.minimal_sets) ++r.sizes[s.size()];
	r.gamma = r.minimal_sets.front().size();
	r.big_gamma = r.minimal_sets.back().size();
	r.i = i_min;
	r.wvd = r.gamma == r.big_gamma;
	return r;
}

// Isomorphism invariant for trees: minimum AHU string over every root.
inline std::string naive_tree_form(Graph const& t) {
	std::function<std::string(Vertex, Vertex)> encode = [&](Vertex v, Vertex parent) {
		std::vector<std::string> kids;
		for (Vertex u : t.neighbors(v))
			if (u != parent) kids.push_back(encode(u, v));
		std::sort(kids.begin(), kids.end());
		std::string s = "(";
		for (auto const& k : kids) s += k;
		return s + ")";
	};
	std::string best;
	for (Vertex r = 0; r < t.vertex_count(); ++r) {
		auto s = encode(r, kNoVertex);
		if (r == 0 || s < best) best = s;
	}
	return best;
}

// Every labeled tree on n vertices (n^(n-2) of them) via Pruefer codes.
inline std::vector<Graph> labeled_trees(std::size_t n) {
	std::vector<Graph> out;
	if (n == 1) return {Graph(1)};
	if (n == 2) return {make_graph(2, {{0, 1}})};
	std::vector<Vertex> code(n - 2, 0);
	while (true) {
		std::vector<std::size_t> degree(n, 1);
		for (Vertex c : code) ++degree[c];
		std::vector<Edge> edges;
		for (Vertex c : code) {
			Vertex leaf = 0;
			while (degree[leaf] != 1) ++leaf;
			edges.push_back({leaf, c});
			--degree[leaf];
			--degree[c];
		}
		std::vector<Vertex> last;
		for (Vertex v = 0; v < n; ++v)
			if (degree[v] == 1) last.push_back(v);
		edges.push_back({last[0], last[1]});
		out.push_back(Graph::from_edges(n, edges));

		std::size_t k = 0;
		while (k < code.size() && ++code[k] == n) code[k++] = 0;
		if (k == code.size()) break;
	}
	return out;
}

// Free trees on n vertices by growing every tree on n-1 vertices by one leaf and
// deduplicating on naive_tree_form.
inline std::map<std::string, Graph> grown_free_trees(std::size_t n) {
	std::map<std::string, Graph> level{{naive_tree_form(Graph(1)), Graph(1)}};
	for (std::size_t m = 2; m <= n; ++m) {
		std::map<std::string, Graph> next;
		for (auto const& [form, t] : level) {
			for (Vertex v = 0; v < t.vertex_count(); ++v) {
				std::vector<Edge> edges(t.edges().begin(), t.edges().end());
				edges.push_back({v, static_cast<Vertex>(m - 1)});
				Graph grown = Graph::from_edges(m, edges);
				next.emplace(naive_tree_form(grown), grown);
			}
		}
		level = std::move(next);
	}
	return level;
}

} // namespace vedom::testing
