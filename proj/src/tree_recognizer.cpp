#include "vedom/tree_recognizer.hpp"

#include "vedom/errors.hpp"

#include <algorithm>
#include <queue>

namespace vedom {

char label_char(UnitLabel l) {
	switch (l) {
	case UnitLabel::Leaf: return 'L';
	case UnitLabel::Support: return 'S';
	case UnitLabel::Backbone: return 'W';
	}
	return '?';
}

std::string to_string(RefutationKind k) {
	switch (k) {
	case RefutationKind::OrderNot3n: return "order-not-3n";
	case RefutationKind::BadLeaf: return "bad-leaf";
	case RefutationKind::BadSupportDegree: return "bad-support-degree";
	case RefutationKind::WMultiplicity: return "w-multiplicity";
	case RefutationKind::ForbiddenPath: return "forbidden-path";
	case RefutationKind::BackboneDisconnected: return "backbone-disconnected";
	case RefutationKind::CertificateFailed: return "certificate-failed";
	}
	return "unknown";
}

std::string to_string(ForbiddenConfig c) {
	switch (c) {
	case ForbiddenConfig::I: return "i";
	case ForbiddenConfig::II: return "ii";
	case ForbiddenConfig::III: return "iii";
	}
	return "?";
}

std::string to_string(RecognitionCase c) {
	switch (c) {
	case RecognitionCase::T1: return "T1";
	case RecognitionCase::T2: return "T2";
	case RecognitionCase::Rejected: return "rejected";
	}
	return "?";
}

namespace {

void require_tree(Graph const& t) {
	if (!is_tree(t)) throw PreconditionError("not-a-tree", "input graph is not a tree");
}

// Number of vertices reachable from `start` without leaving `inside`.
std::size_t reachable_within(Graph const& t, std::vector<bool> const& inside, Vertex start) {
	std::vector<bool> seen(t.vertex_count(), false);
	std::vector<Vertex> stack{start};
	seen[start] = true;
	std::size_t count = 0;
	while (!stack.empty()) {
		Vertex v = stack.back();
		stack.pop_back();
		++count;
		for (Vertex u : t.neighbors(v)) {
			if (inside[u] && !seen[u]) {
				seen[u] = true;
				stack.push_back(u);
			}
		}
	}
	return count;
}

Refutation refute(RefutationKind kind, std::vector<Vertex> witness, std::string detail) {
	return Refutation{kind, std::move(witness), std::nullopt, std::move(detail)};
}

} // namespace

std::optional<ForbiddenWitness> find_forbidden_configuration(Graph const& t) {
	require_tree(t);
	std::size_t const n = t.vertex_count();
	auto leaf = [&](Vertex v) { return t.degree(v) == 1; };

	std::vector<std::size_t> leaf_neighbors(n, 0);
	for (Vertex v = 0; v < n; ++v)
		for (Vertex u : t.neighbors(v))
			if (leaf(u)) ++leaf_neighbors[v];

	// Degree-2 vertex adjacent to a leaf.
	auto good_support = [&](Vertex v) { return t.degree(v) == 2 && leaf_neighbors[v] > 0; };
	auto other_neighbor = [&](Vertex v, Vertex not_this) {
		auto nb = t.neighbors(v);
		return nb[0] == not_this ? nb[1] : nb[0];
	};
	auto smallest_leaf_neighbor = [&](Vertex v, Vertex excluded) {
		for (Vertex u : t.neighbors(v))
			if (u != excluded && leaf(u)) return u;
		return kNoVertex;
	};

	// Leaf v1 with a degree-2 neighbor v2; the path continues at v3.
	struct Start {
		Vertex v1, v2, v3;
	};
	std::vector<Start> starts;
	for (Vertex v1 = 0; v1 < n; ++v1) {
		if (!leaf(v1)) continue;
		Vertex v2 = t.neighbors(v1).front();
		if (t.degree(v2) != 2) continue;
		starts.push_back({v1, v2, other_neighbor(v2, v1)});
	}

	// (i): v3 has a leaf neighbor.
	for (auto [v1, v2, v3] : starts) {
		if (leaf_neighbors[v3] == 0) continue;
		Vertex v4 = smallest_leaf_neighbor(v3, v2);
		if (v4 != kNoVertex) return ForbiddenWitness{ForbiddenConfig::I, {v1, v2, v3, v4}};
	}

	// (ii): v3 has a neighbor v4 != v2 that itself has a leaf neighbor.
	std::vector<std::size_t> leafy_neighbors(n, 0);
	for (Vertex v = 0; v < n; ++v)
		for (Vertex u : t.neighbors(v))
			if (leaf_neighbors[u] > 0) ++leafy_neighbors[v];
	for (auto [v1, v2, v3] : starts) {
		if (leaf(v3)) continue;
		// v2 is always counted (its leaf is v1).
		if (leafy_neighbors[v3] < 2) continue;
		for (Vertex v4 : t.neighbors(v3)) {
			if (v4 == v2 || leaf_neighbors[v4] == 0) continue;
			return ForbiddenWitness{ForbiddenConfig::II, {v1, v2, v3, v4, smallest_leaf_neighbor(v4, v3)}};
		}
	}

	// (iii): v3 - v4 - v5 - v6 - v7 with d(v4) = 2 and v6 a good support other than v4.
	std::vector<std::size_t> good_support_neighbors(n, 0);
	for (Vertex v = 0; v < n; ++v)
		for (Vertex u : t.neighbors(v))
			if (good_support(u)) ++good_support_neighbors[v];
	auto continues_from = [&](Vertex v3, Vertex v4) {
		if (t.degree(v4) != 2) return false;
		Vertex v5 = other_neighbor(v4, v3);
		std::size_t own = good_support(v4) ? 1 : 0;
		return good_support_neighbors[v5] > own;
	};
	std::vector<std::size_t> continuations(n, 0);
	for (Vertex v = 0; v < n; ++v)
		for (Vertex u : t.neighbors(v))
			if (continues_from(v, u)) ++continuations[v];
	for (auto [v1, v2, v3] : starts) {
		if (continuations[v3] == 0) continue;
		for (Vertex v4 : t.neighbors(v3)) {
			if (v4 == v2 || !continues_from(v3, v4)) continue;
			Vertex v5 = other_neighbor(v4, v3);
			for (Vertex v6 : t.neighbors(v5)) {
				if (v6 == v4 || !good_support(v6)) continue;
				return ForbiddenWitness{ForbiddenConfig::III, {v1, v2, v3, v4, v5, v6, smallest_leaf_neighbor(v6, v5)}};
			}
		}
	}
	return std::nullopt;
}

std::variant<UnitPartition, Refutation> unit_partition(Graph const& t) {
	require_tree(t);
	if (!is_reduced(t)) throw PreconditionError("not-reduced", "unit_partition expects a reduced tree");
	std::size_t const n = t.vertex_count();
	if (n < 6) throw PreconditionError("too-small", "unit_partition expects at least 6 vertices");

	constexpr auto unset = static_cast<UnitLabel>(0xff);
	std::vector<UnitLabel> labels(n, unset);

	// Leaves must sit on good pendant edges.
	for (Vertex l = 0; l < n; ++l) {
		if (t.degree(l) != 1) continue;
		Vertex s = t.neighbors(l).front();
		if (t.degree(s) != 2)
			return refute(RefutationKind::BadLeaf, {l, s}, "leaf " + std::to_string(l) + " hangs from vertex " + std::to_string(s) + " of degree " + std::to_string(t.degree(s)));
		labels[l] = UnitLabel::Leaf;
		labels[s] = UnitLabel::Support;
	}
	// Each support needs exactly one backbone neighbor.
	for (Vertex s = 0; s < n; ++s) {
		if (labels[s] != UnitLabel::Support) continue;
		for (Vertex x : t.neighbors(s)) {
			if (labels[x] == UnitLabel::Leaf) continue;
			if (labels[x] == UnitLabel::Support)
				return refute(RefutationKind::BadSupportDegree, {s, x}, "support " + std::to_string(s) + " is adjacent to support " + std::to_string(x));
		}
	}
	std::vector<Vertex> backbone;
	for (Vertex v = 0; v < n; ++v) {
		if (labels[v] == unset) {
			labels[v] = UnitLabel::Backbone;
			backbone.push_back(v);
		}
	}
	// Each backbone vertex carries exactly one support.
	std::vector<Unit> units;
	for (Vertex w : backbone) {
		std::vector<Vertex> supports;
		for (Vertex x : t.neighbors(w))
			if (labels[x] == UnitLabel::Support) supports.push_back(x);
		if (supports.size() != 1) {
			std::vector<Vertex> witness{w};
			witness.insert(witness.end(), supports.begin(), supports.end());
			return refute(RefutationKind::WMultiplicity, witness, "backbone vertex " + std::to_string(w) + " has " + std::to_string(supports.size()) + " support neighbors");
		}
		Vertex s = supports.front();
		Vertex l = t.neighbors(s)[0] == w ? t.neighbors(s)[1] : t.neighbors(s)[0];
		units.push_back({l, s, w});
	}
	if (units.size() * 3 != n)
		return refute(RefutationKind::WMultiplicity, {}, "label classes have unequal sizes");

	std::vector<bool> in_backbone(n, false);
	for (Vertex w : backbone) in_backbone[w] = true;
	if (reachable_within(t, in_backbone, backbone.front()) != backbone.size())
		return refute(RefutationKind::BackboneDisconnected, {backbone.front()}, "backbone vertices do not induce a connected subtree");

	UnitPartition p;
	p.units = std::move(units);
	p.labels = std::move(labels);
	for (Edge e : t.edges())
		if (in_backbone[e.u] && in_backbone[e.v]) p.backbone_edges.push_back(e);
	return p;
}

std::optional<std::string> partition_violation(Graph const& t, UnitPartition const& p) {
	std::size_t const n = t.vertex_count();
	if (p.labels.size() != n) return "label vector does not cover the vertex set";
	if (p.units.size() * 3 != n) return "vertex count is not three times the unit count";
	std::vector<int> covered(n, 0);
	std::vector<bool> in_backbone(n, false);
	for (auto const& u : p.units) {
		if (u.leaf >= n || u.support >= n || u.backbone >= n) return "unit vertex out of range";
		if (t.degree(u.leaf) != 1) return "unit leaf " + std::to_string(u.leaf) + " is not a leaf";
		if (t.degree(u.support) != 2) return "unit support " + std::to_string(u.support) + " does not have degree 2";
		if (!t.adjacent(u.leaf, u.support) || !t.adjacent(u.support, u.backbone)) return "unit body is not a path";
		if (p.labels[u.leaf] != UnitLabel::Leaf || p.labels[u.support] != UnitLabel::Support || p.labels[u.backbone] != UnitLabel::Backbone)
			return "unit labels disagree with the label vector";
		++covered[u.leaf];
		++covered[u.support];
		++covered[u.backbone];
		in_backbone[u.backbone] = true;
	}
	for (Vertex v = 0; v < n; ++v)
		if (covered[v] != 1) return "vertex " + std::to_string(v) + " lies in " + std::to_string(covered[v]) + " unit bodies";

	std::vector<Edge> expected;
	for (Edge e : t.edges())
		if (in_backbone[e.u] && in_backbone[e.v]) expected.push_back(e);
	if (expected != p.backbone_edges) return "backbone edge list does not match the tree";
	if (!p.units.empty() && reachable_within(t, in_backbone, p.units.front().backbone) != p.units.size())
		return "backbone is disconnected";
	return std::nullopt;
}

VertexSet build_certificate(Graph const& t, UnitPartition const& p, bool swap_colours) {
	std::size_t const n = t.vertex_count();
	std::vector<int> colour(n, -1);
	std::vector<bool> in_backbone(n, false);
	Vertex smallest = kNoVertex;
	for (auto const& u : p.units) {
		in_backbone[u.backbone] = true;
		smallest = std::min(smallest, u.backbone);
	}

	VertexSet cert(n);
	if (smallest == kNoVertex) return cert;
	std::queue<Vertex> queue;
	colour[smallest] = 0;
	queue.push(smallest);
	while (!queue.empty()) {
		Vertex v = queue.front();
		queue.pop();
		for (Vertex u : t.neighbors(v)) {
			if (in_backbone[u] && colour[u] < 0) {
				colour[u] = 1 - colour[v];
				queue.push(u);
			}
		}
	}
	int const chosen = swap_colours ? 1 : 0;
	for (auto const& u : p.units) cert.insert(colour[u.backbone] == chosen ? u.support : u.leaf);
	return cert;
}

CertificateCheck verify_certificate(Graph const& t, VertexSet const& i) {
	std::size_t const n = t.vertex_count();
	CertificateCheck check;

	VertexSet pendant_layer(n);
	for (auto [l, s] : good_pendant_edges(t)) {
		pendant_layer.insert(l);
		pendant_layer.insert(s);
	}
	check.within_leaves_and_supports = i.universe() == n && i.is_subset_of(pendant_layer);
	check.independent = is_independent(t, i);

	// |I n (N[x] u N[y])| = |I n N[x]| + |I n N[y]| - |I n N[x] n N[y]|.
	std::vector<std::size_t> closed_hits(n, 0);
	for (Vertex v = 0; v < n; ++v) {
		closed_hits[v] = i.contains(v) ? 1 : 0;
		for (Vertex u : t.neighbors(v))
			if (i.contains(u)) ++closed_hits[v];
	}
	bool const triangle_free = is_forest(t);
	check.dominator_counts.reserve(t.edge_count());
	for (Edge e : t.edges()) {
		std::size_t shared = (i.contains(e.u) ? 1 : 0) + (i.contains(e.v) ? 1 : 0);
		if (!triangle_free) {
			auto a = t.neighbors(e.u), b = t.neighbors(e.v);
			std::size_t x = 0, y = 0;
			while (x < a.size() && y < b.size()) {
				if (a[x] < b[y]) {
					++x;
				} else if (b[y] < a[x]) {
					++y;
				} else {
					if (i.contains(a[x])) ++shared;
					++x;
					++y;
				}
			}
		}
		check.dominator_counts.push_back(closed_hits[e.u] + closed_hits[e.v] - shared);
	}
	check.exactly_once = std::all_of(check.dominator_counts.begin(), check.dominator_counts.end(), [](std::size_t c) { return c == 1; });
	return check;
}

RecognitionResult recognize(Graph const& t) {
	require_tree(t);
	RecognitionResult result;
	result.reduction = reduce(t);
	Graph const& rt = result.reduction.reduced_graph;
	std::size_t const n = rt.vertex_count();

	if (n <= 2) {
		result.verdict = true;
		result.tree_case = RecognitionCase::T1;
		return result;
	}

	if (auto witness = find_forbidden_configuration(rt)) {
		Refutation r{RefutationKind::ForbiddenPath, witness->path, witness->config, "induced path of configuration (" + to_string(witness->config) + ")"};
		result.refutation = std::move(r);
		return result;
	}

	if (n < 6 || n % 3 != 0) {
		result.refutation = refute(RefutationKind::OrderNot3n, {}, "reduced order " + std::to_string(n) + " is not a multiple of 3 that is at least 6");
		return result;
	}

	auto outcome = unit_partition(rt);
	if (auto* r = std::get_if<Refutation>(&outcome)) {
		result.refutation = std::move(*r);
		return result;
	}
	auto& partition = std::get<UnitPartition>(outcome);
	VertexSet cert = build_certificate(rt, partition);
	if (!verify_certificate(rt, cert).passed()) {
		result.refutation = refute(RefutationKind::CertificateFailed, {}, "exactly-once certificate did not verify");
		return result;
	}
	result.verdict = true;
	result.tree_case = RecognitionCase::T2;
	result.partition = std::move(partition);
	result.certificate = std::move(cert);
	return result;
}

} // namespace vedom
