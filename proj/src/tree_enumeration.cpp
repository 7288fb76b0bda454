#include "vedom/tree_enumeration.hpp"

#include "vedom/errors.hpp"

#include <algorithm>
#include <array>

namespace vedom {

namespace {

using Layout = std::vector<int>;

// Successor of a rooted level sequence, modifying positions from p on.
std::optional<Layout> next_rooted_tree(Layout const& pred, std::optional<std::size_t> p_hint = std::nullopt) {
	std::size_t p;
	if (p_hint) {
		p = *p_hint;
	} else {
		p = pred.size() - 1;
		while (pred[p] == 1) --p;
	}
	if (p == 0) return std::nullopt;
	std::size_t q = p - 1;
	while (pred[q] != pred[p] - 1) --q;
	Layout out = pred;
	for (std::size_t i = p; i < out.size(); ++i) out[i] = out[i - p + q];
	return out;
}

// Splits at the second vertex on level 1: the first subtree of the root
// (levels shifted down by one) and the remaining tree.
std::pair<Layout, Layout> split_tree(Layout const& layout) {
	bool one_found = false;
	std::size_t m = layout.size();
	for (std::size_t i = 0; i < layout.size(); ++i) {
		if (layout[i] != 1) continue;
		if (one_found) {
			m = i;
			break;
		}
		one_found = true;
	}
	Layout left, rest{0};
	for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
	for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
	return {left, rest};
}

// Returns the candidate if it is the canonical layout of a free tree,
// otherwise jumps to the next layout that is.
std::optional<Layout> next_tree(Layout const& candidate) {
	auto [left, rest] = split_tree(candidate);
	int left_height = *std::max_element(left.begin(), left.end());
	int rest_height = *std::max_element(rest.begin(), rest.end());
	bool valid = rest_height >= left_height;
	if (valid && rest_height == left_height) {
		if (left.size() > rest.size())
			valid = false;
		else if (left.size() == rest.size() && left > rest)
			valid = false;
	}
	if (valid) return candidate;

	std::size_t p = left.size();
	auto next = next_rooted_tree(candidate, p);
	if (!next) return std::nullopt;
	if (candidate[p] > 2) {
		auto [new_left, new_rest] = split_tree(*next);
		int new_left_height = *std::max_element(new_left.begin(), new_left.end());
		std::size_t len = static_cast<std::size_t>(new_left_height) + 1;
		for (std::size_t k = 0; k < len; ++k) (*next)[next->size() - len + k] = static_cast<int>(k) + 1;
	}
	return next;
}

Graph layout_to_graph(Layout const& layout) {
	std::vector<Edge> edges;
	std::vector<std::size_t> stack;
	for (std::size_t i = 0; i < layout.size(); ++i) {
		if (!stack.empty()) {
			while (layout[stack.back()] >= layout[i]) stack.pop_back();
			edges.push_back({static_cast<Vertex>(stack.back()), static_cast<Vertex>(i)});
		}
		stack.push_back(i);
	}
	return Graph::from_edges(layout.size(), edges);
}

} // namespace

FreeTreeGenerator::FreeTreeGenerator(std::size_t n) : n_(n) {
	if (n < 1 || n > 18) throw InvalidInput("free-tree enumeration supports 1 <= n <= 18");
	if (n >= 2) {
		Layout layout;
		for (std::size_t i = 0; i <= n / 2; ++i) layout.push_back(static_cast<int>(i));
		for (std::size_t i = 1; i < (n + 1) / 2; ++i) layout.push_back(static_cast<int>(i));
		layout_ = std::move(layout);
	}
}

std::optional<Graph> FreeTreeGenerator::next() {
	if (done_) return std::nullopt;
	if (n_ == 1) {
		done_ = true;
		return Graph(1);
	}
	if (!layout_) {
		done_ = true;
		return std::nullopt;
	}
	auto valid = next_tree(*layout_);
	if (!valid) {
		done_ = true;
		return std::nullopt;
	}
	Graph g = layout_to_graph(*valid);
	layout_ = next_rooted_tree(*valid);
	return g;
}

std::vector<Graph> free_trees(std::size_t n) {
	FreeTreeGenerator gen(n);
	std::vector<Graph> out;
	while (auto t = gen.next()) out.push_back(std::move(*t));
	return out;
}

namespace {

std::string encode_rooted(Graph const& t, Vertex root) {
	// Iterative post-order so deep paths do not recurse.
	std::size_t const n = t.vertex_count();
	std::vector<Vertex> parent(n, kNoVertex), order;
	order.reserve(n);
	std::vector<Vertex> stack{root};
	parent[root] = root;
	while (!stack.empty()) {
		Vertex v = stack.back();
		stack.pop_back();
		order.push_back(v);
		for (Vertex u : t.neighbors(v)) {
			if (parent[u] == kNoVertex) {
				parent[u] = v;
				stack.push_back(u);
			}
		}
	}
	std::vector<std::vector<std::string>> child_codes(n);
	std::vector<std::string> code(n);
	for (auto it = order.rbegin(); it != order.rend(); ++it) {
		Vertex v = *it;
		auto& kids = child_codes[v];
		std::sort(kids.begin(), kids.end());
		std::string s = "(";
		for (auto& k : kids) s += k;
		s += ')';
		code[v] = std::move(s);
		if (v != root) child_codes[parent[v]].push_back(code[v]);
	}
	return code[root];
}

} // namespace

std::string canonical_tree_form(Graph const& t) {
	if (!is_tree(t)) throw PreconditionError("not-a-tree", "canonical form is defined for trees");
	std::size_t const n = t.vertex_count();
	if (n == 1) return "()";

	// Peel leaves layer by layer; the last one or two vertices are the centers.
	std::vector<std::size_t> degree(n);
	std::vector<Vertex> layer;
	for (Vertex v = 0; v < n; ++v) {
		degree[v] = t.degree(v);
		if (degree[v] == 1) layer.push_back(v);
	}
	std::size_t remaining = n;
	while (remaining > 2) {
		remaining -= layer.size();
		std::vector<Vertex> next;
		for (Vertex v : layer) degree[v] = 0;
		for (Vertex v : layer)
			for (Vertex u : t.neighbors(v))
				if (degree[u] > 0 && --degree[u] == 1) next.push_back(u);
		layer = std::move(next);
	}
	std::string best = encode_rooted(t, layer[0]);
	if (layer.size() == 2) best = std::min(best, encode_rooted(t, layer[1]));
	return best;
}

std::size_t known_free_tree_count(std::size_t n) {
	static constexpr std::array<std::size_t, 19> counts{1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867};
	if (n >= counts.size()) throw InvalidInput("known free-tree counts stop at n = 18");
	return counts[n];
}

} // namespace vedom
