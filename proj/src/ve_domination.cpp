#include "vedom/ve_domination.hpp"

#include "vedom/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <functional>

namespace vedom {

std::string EnumerationMode::to_string() const {
	if (full()) return "full";
	return "size-bounded(" + std::to_string(*size_bound) + ")";
}

EdgeSet ve_dominated_edges(Graph const& g, Vertex v) {
	EdgeSet out = g.empty_edge_set();
	auto mark_incident = [&](Vertex x) {
		for (Vertex y : g.neighbors(x)) out.insert(*g.edge_index(x, y));
	};
	mark_incident(v);
	for (Vertex u : g.neighbors(v)) mark_incident(u);
	return out;
}

namespace {

EdgeSet dominated_by(Graph const& g, VertexSet const& s) {
	EdgeSet covered = g.empty_edge_set();
	for (auto v : s.members()) covered |= ve_dominated_edges(g, static_cast<Vertex>(v));
	return covered;
}

} // namespace

bool is_ve_dominating(Graph const& g, VertexSet const& s) {
	return dominated_by(g, s).size() == g.edge_count();
}

EdgeSet private_edges(Graph const& g, VertexSet const& s, Vertex v) {
	if (!s.contains(v)) throw PreconditionError("vertex-not-in-set", "private_edges requires v in s");
	VertexSet others = s;
	others.erase(v);
	return ve_dominated_edges(g, v) - dominated_by(g, others);
}

bool is_minimal_ve_dominating(Graph const& g, VertexSet const& s) {
	if (!is_ve_dominating(g, s)) return false;
	for (auto v : s.members())
		if (private_edges(g, s, static_cast<Vertex>(v)).empty()) return false;
	return true;
}

bool is_minimal_ve_dominating_by_removal(Graph const& g, VertexSet const& s) {
	if (!is_ve_dominating(g, s)) return false;
	for (auto v : s.members()) {
		VertexSet smaller = s;
		smaller.erase(v);
		if (is_ve_dominating(g, smaller)) return false;
	}
	return true;
}

namespace {

// Fixed-width edge mask; W words cover up to 64*W edges.
template <std::size_t W>
struct Mask {
	std::array<std::uint64_t, W> w{};

	Mask operator|(Mask const& o) const {
		Mask r;
		for (std::size_t k = 0; k < W; ++k) r.w[k] = w[k] | o.w[k];
		return r;
	}
	Mask operator&(Mask const& o) const {
		Mask r;
		for (std::size_t k = 0; k < W; ++k) r.w[k] = w[k] & o.w[k];
		return r;
	}
	// this & ~o is nonzero
	bool has_outside(Mask const& o) const {
		for (std::size_t k = 0; k < W; ++k)
			if (w[k] & ~o.w[k]) return true;
		return false;
	}
	bool operator==(Mask const&) const = default;
};

// Depth-first search over irredundant vertex sets (every member keeps a
// private edge). A dominating irredundant set is exactly a minimal
// ve-dominating set, and supersets of a set with a redundant member stay
// redundant, which gives the pruning.
template <std::size_t W>
class IrredundantSearch {
public:
	using Visitor = std::function<bool(std::uint64_t)>; // return false to stop

	IrredundantSearch(Graph const& g, std::vector<Vertex> candidates) : candidates_(std::move(candidates)) {
		std::size_t const m = g.edge_count();
		for (std::size_t k = 0; k < m; ++k) full_.w[k >> 6] |= std::uint64_t{1} << (k & 63);
		masks_.resize(g.vertex_count());
		for (Vertex v = 0; v < g.vertex_count(); ++v) {
			for (auto e : ve_dominated_edges(g, v).members()) masks_[v].w[e >> 6] |= std::uint64_t{1} << (e & 63);
		}
		suffix_.resize(candidates_.size() + 1);
		for (std::size_t i = candidates_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] | masks_[candidates_[i]];
	}

	// Visits every minimal ve-dominating set drawn from the candidates with at
	// most `bound` members, in lexicographic member order.
	void run(std::size_t bound, Visitor const& visit) {
		bound_ = bound;
		visit_ = &visit;
		stopped_ = false;
		chosen_.clear();
		dfs(0, Mask<W>{}, Mask<W>{}, 0);
	}

private:
	void dfs(std::size_t start, Mask<W> const& once, Mask<W> const& twice, std::uint64_t set) {
		if (once == full_) {
			if (!(*visit_)(set)) stopped_ = true;
			return;
		}
		if (chosen_.size() == bound_) return;
		for (std::size_t i = start; i < candidates_.size() && !stopped_; ++i) {
			if ((once | suffix_[i]) != full_) break;
			Vertex v = candidates_[i];
			auto const& m = masks_[v];
			if (!m.has_outside(once)) continue;
			Mask<W> next_twice = twice | (once & m);
			bool keeps_private = true;
			for (Vertex u : chosen_) {
				if (!masks_[u].has_outside(next_twice)) {
					keeps_private = false;
					break;
				}
			}
			if (!keeps_private) continue;
			chosen_.push_back(v);
			dfs(i + 1, once | m, next_twice, set | (std::uint64_t{1} << v));
			chosen_.pop_back();
		}
	}

	std::vector<Vertex> candidates_;
	std::vector<Mask<W>> masks_;
	std::vector<Mask<W>> suffix_;
	Mask<W> full_{};
	std::vector<Vertex> chosen_;
	std::size_t bound_ = 0;
	Visitor const* visit_ = nullptr;
	bool stopped_ = false;
};

void run_search(Graph const& g, std::vector<Vertex> candidates, std::size_t bound, std::function<bool(std::uint64_t)> const& visit) {
	if (g.vertex_count() > 64) throw InstanceTooLarge("exhaustive search supports at most 64 vertices");
	std::size_t const words = (g.edge_count() + 63) / 64;
	if (words <= 1) {
		IrredundantSearch<1>(g, std::move(candidates)).run(bound, visit);
	} else if (words <= 2) {
		IrredundantSearch<2>(g, std::move(candidates)).run(bound, visit);
	} else if (words <= 4) {
		IrredundantSearch<4>(g, std::move(candidates)).run(bound, visit);
	} else if (words <= 8) {
		IrredundantSearch<8>(g, std::move(candidates)).run(bound, visit);
	} else if (words <= 16) {
		IrredundantSearch<16>(g, std::move(candidates)).run(bound, visit);
	} else {
		throw InstanceTooLarge("exhaustive search supports at most 1024 edges");
	}
}

std::vector<Vertex> all_vertices(Graph const& g) {
	std::vector<Vertex> out(g.vertex_count());
	for (Vertex v = 0; v < g.vertex_count(); ++v) out[v] = v;
	return out;
}

VertexSet to_vertex_set(std::size_t n, std::uint64_t bits) {
	VertexSet s(n);
	for (; bits; bits &= bits - 1) s.insert(static_cast<std::size_t>(std::countr_zero(bits)));
	return s;
}

void check_limits(Graph const& g, EnumerationMode const& mode, OracleLimits const& limits) {
	std::size_t const n = g.vertex_count();
	// A bound of at least n is a full enumeration and is guarded as one.
	if (mode.full() || *mode.size_bound >= n) {
		if (n > limits.max_vertices)
			throw InstanceTooLarge("full enumeration on " + std::to_string(n) + " vertices exceeds the guard of " + std::to_string(limits.max_vertices));
	} else {
		if (n > limits.bounded_max_vertices)
			throw InstanceTooLarge("size-bounded search on " + std::to_string(n) + " vertices exceeds the guard of " + std::to_string(limits.bounded_max_vertices));
		if (*mode.size_bound > limits.max_bound)
			throw InstanceTooLarge("size bound " + std::to_string(*mode.size_bound) + " exceeds the limit of " + std::to_string(limits.max_bound));
	}
}

} // namespace

std::vector<VertexSet> enumerate_minimal_ve_dominating_sets(Graph const& g, EnumerationMode mode, OracleLimits const& limits) {
	check_limits(g, mode, limits);
	std::size_t const n = g.vertex_count();
	std::vector<std::uint64_t> found;
	run_search(g, all_vertices(g), mode.size_bound.value_or(n), [&](std::uint64_t set) {
		found.push_back(set);
		return true;
	});
	std::stable_sort(found.begin(), found.end(), [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });

	std::vector<VertexSet> out;
	out.reserve(found.size());
	for (auto bits : found) {
		out.push_back(to_vertex_set(n, bits));
		assert(is_minimal_ve_dominating_by_removal(g, out.back()));
	}
	return out;
}

DominationReport oracle_report(Graph const& g, EnumerationMode mode, OracleLimits const& limits) {
	auto sets = enumerate_minimal_ve_dominating_sets(g, mode, limits);
	DominationReport r;
	r.mode = mode;
	r.witness_min = g.empty_vertex_set();
	r.witness_max = g.empty_vertex_set();
	if (sets.empty()) {
		// Only reachable in size-bounded mode when the bound is below gamma_ve.
		r.is_well_ve_dominated = r.is_well_ve_covered = true;
		return r;
	}

	for (auto const& s : sets) ++r.minimal_size_multiset[s.size()];
	r.gamma_ve = sets.front().size();
	r.big_gamma_ve = sets.back().size();
	r.witness_min = sets.front();
	r.witness_max = *std::find_if(sets.begin(), sets.end(), [&](VertexSet const& s) { return s.size() == r.big_gamma_ve; });

	std::optional<std::size_t> i_min, i_max;
	for (auto const& s : sets) {
		if (!is_independent(g, s)) continue;
		std::size_t k = s.size();
		if (!i_min || k < *i_min) i_min = k;
		if (!i_max || k > *i_max) i_max = k;
	}
	// A maximal independent set dominates every vertex, so some minimal
	// ve-dominating set is independent; only a size bound can hide it.
	r.i_ve = i_min.value_or(0);
	r.beta_ve = i_max.value_or(0);
	r.is_well_ve_dominated = r.gamma_ve == r.big_gamma_ve;
	r.is_well_ve_covered = r.i_ve == r.beta_ve;
	return r;
}

bool domination_chain_holds(DominationReport const& r) {
	return r.gamma_ve <= r.i_ve && r.i_ve <= r.beta_ve && r.beta_ve <= r.big_gamma_ve;
}

bool domination_chain_check(Graph const& g, OracleLimits const& limits) {
	return domination_chain_holds(oracle_report(g, {}, limits));
}

std::size_t ve_domination_number(Graph const& g, OracleLimits const& limits) {
	check_limits(g, {}, limits);
	for (std::size_t k = 0;; ++k) {
		bool found = false;
		run_search(g, all_vertices(g), k, [&](std::uint64_t) {
			found = true;
			return false;
		});
		if (found) return k;
	}
}

std::optional<VertexSet> find_ve_dominating_set(Graph const& g, std::size_t size, VertexSet const& candidates, OracleLimits const& limits) {
	if (g.vertex_count() > limits.bounded_max_vertices || size > limits.max_bound)
		throw InstanceTooLarge("dominating-set search on " + std::to_string(g.vertex_count()) + " vertices with size " + std::to_string(size) + " exceeds the configured guard");
	std::vector<Vertex> pool;
	for (auto v : candidates.members()) pool.push_back(static_cast<Vertex>(v));
	if (pool.size() < size) return std::nullopt;

	std::optional<std::uint64_t> hit;
	run_search(g, pool, size, [&](std::uint64_t set) {
		hit = set;
		return false;
	});
	if (!hit) return std::nullopt;

	// Pad the minimal set with the smallest unused candidates.
	std::uint64_t bits = *hit;
	for (Vertex v : pool) {
		if (static_cast<std::size_t>(std::popcount(bits)) == size) break;
		bits |= std::uint64_t{1} << v;
	}
	return to_vertex_set(g.vertex_count(), bits);
}

} // namespace vedom
