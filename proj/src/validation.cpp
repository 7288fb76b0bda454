#include "vedom/validation.hpp"

#include "vedom/constructions.hpp"
#include "vedom/errors.hpp"
#include "vedom/reduction.hpp"
#include "vedom/tree_enumeration.hpp"
#include "vedom/tree_recognizer.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <thread>

namespace vedom {

namespace {

// Runs fn(i) for i in [0, count) on a pool of workers; results keep index order.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, unsigned threads, Fn fn) {
	std::vector<Result> out(count);
	if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
	threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
	std::atomic<std::size_t> next{0};
	std::exception_ptr failure;
	std::mutex failure_mutex;
	auto worker = [&] {
		for (std::size_t i; (i = next.fetch_add(1)) < count;) {
			try {
				out[i] = fn(i);
			} catch (...) {
				std::lock_guard lock(failure_mutex);
				if (!failure) failure = std::current_exception();
			}
		}
	};
	if (threads <= 1) {
		worker();
	} else {
		std::vector<std::thread> pool;
		for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
		for (auto& t : pool) t.join();
	}
	if (failure) std::rethrow_exception(failure);
	return out;
}

struct TreeOutcome {
	bool oracle_checked = false;
	bool oracle_verdict = false;
	bool recognizer_verdict = false;
	std::vector<LemmaFailure> failures;
	std::map<std::string, std::size_t> checks;
};

void merge(ValidationReport& report, std::size_t order, Graph const& t, TreeOutcome&& o) {
	++report.trees_checked[order];
	bool const verdict = o.oracle_checked ? o.oracle_verdict : o.recognizer_verdict;
	report.wvd_tree_census[order] += verdict ? 1 : 0;
	if (o.oracle_checked && o.oracle_verdict != o.recognizer_verdict) report.recognizer_oracle_mismatches.push_back({t, o.recognizer_verdict, o.oracle_verdict});
	for (auto& f : o.failures) report.lemma_failures.push_back(std::move(f));
	for (auto const& [k, v] : o.checks) report.checks_run[k] += v;
}

bool all_components_wvd(Graph const& g, OracleLimits const& limits) {
	for (auto const& comp : connected_components(g)) {
		auto sub = induced_subgraph(g, comp);
		if (!oracle_report(sub.graph, {}, limits).is_well_ve_dominated) return false;
	}
	return true;
}

// Certificate-level checks on an accepted T2 tree. `oracle` may be null.
void check_certificate(RecognitionResult const& r, DominationReport const* oracle, TreeOutcome& o) {
	Graph const& rt = r.reduced_tree();
	auto const& p = *r.partition;
	auto fail = [&](std::string what) { o.failures.push_back({"certificate", rt, std::move(what)}); };

	++o.checks["certificate"];
	if (auto why = partition_violation(rt, p)) fail("invalid partition: " + *why);
	for (bool swap : {false, true}) {
		auto cert = build_certificate(rt, p, swap);
		auto check = verify_certificate(rt, cert);
		if (!check.passed()) fail(std::string("certificate does not verify (swap=") + (swap ? "1" : "0") + ")");
		if (cert.size() != p.units.size()) fail("certificate size differs from unit count");
	}
	if (rt.vertex_count() != 3 * p.units.size()) fail("order is not three times the unit count");
	if (good_pendant_edges(rt).size() != p.units.size()) fail("unit count differs from the good pendant edge count");

	VertexSet supports = rt.empty_vertex_set();
	for (auto const& u : p.units) supports.insert(u.support);
	if (!is_minimal_ve_dominating(rt, supports)) fail("support set is not a minimal ve-dominating set");

	if (oracle) {
		if (oracle->gamma_ve != p.units.size() || oracle->big_gamma_ve != p.units.size())
			fail("unit count " + std::to_string(p.units.size()) + " differs from gamma_ve " + std::to_string(oracle->gamma_ve) + " / Gamma_ve " + std::to_string(oracle->big_gamma_ve));
	}
}

std::vector<std::pair<std::size_t, Graph>> trees_up_to(std::size_t max_order) {
	std::vector<std::pair<std::size_t, Graph>> out;
	for (std::size_t n = 1; n <= max_order; ++n)
		for (auto& t : free_trees(n)) out.emplace_back(n, std::move(t));
	return out;
}

} // namespace

ValidationReport cross_validate(std::size_t max_order, ValidationOptions const& options) {
	if (max_order < 1 || max_order > 18) throw InvalidInput("cross_validate supports orders 1..18");
	auto const start = std::chrono::steady_clock::now();
	ValidationReport report;
	report.max_order = max_order;

	auto trees = trees_up_to(max_order);
	auto outcomes = parallel_map<TreeOutcome>(trees.size(), options.threads, [&](std::size_t i) {
		auto const& [n, t] = trees[i];
		TreeOutcome o;
		auto r = recognize(t);
		o.recognizer_verdict = r.verdict;
		std::optional<DominationReport> rep;
		if (n <= options.oracle_max_order) {
			// gamma of a tree and of its reduction coincide, so the reduced
			// tree's report also serves the unit-count check.
			rep = oracle_report(t, {}, options.limits);
			o.oracle_checked = true;
			o.oracle_verdict = rep->is_well_ve_dominated;
			++o.checks["recognizer-vs-oracle"];
		}
		if (r.tree_case == RecognitionCase::T2) check_certificate(r, rep ? &*rep : nullptr, o);
		return o;
	});
	for (std::size_t i = 0; i < trees.size(); ++i) merge(report, trees[i].first, trees[i].second, std::move(outcomes[i]));
	report.elapsed = std::chrono::steady_clock::now() - start;
	return report;
}

bool cut_edge_hypothesis(Graph const& t, Vertex u, Vertex v) {
	auto reaches_away = [&](Vertex a, Vertex b) {
		for (Vertex x : t.neighbors(a))
			if (x != b && t.degree(x) >= 2) return true;
		return false;
	};
	return t.adjacent(u, v) && reaches_away(u, v) && reaches_away(v, u);
}

bool cut_vertex_hypothesis(Graph const& t, Vertex c) {
	std::size_t qualifying = 0;
	for (Vertex v : t.neighbors(c)) {
		for (Vertex x : t.neighbors(v)) {
			if (x != c && t.degree(x) >= 2) {
				++qualifying;
				break;
			}
		}
	}
	return qualifying >= 2;
}

Graph leaf_duplicated_tree(std::size_t n, std::size_t duplicates, std::uint64_t seed) {
	if (n < 2) throw InvalidInput("leaf duplication needs a tree with at least 2 vertices");
	std::mt19937_64 rng(seed);
	std::vector<Edge> edges;
	if (n == 2) {
		edges.push_back({0, 1});
	} else {
		// Random Pruefer sequence.
		std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
		std::vector<Vertex> code(n - 2);
		for (auto& c : code) c = pick(rng);
		std::vector<std::size_t> degree(n, 1);
		for (Vertex c : code) ++degree[c];
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
	}
	Graph g = Graph::from_edges(n, edges);
	for (std::size_t k = 0; k < duplicates; ++k) {
		std::vector<Vertex> leaves;
		for (Vertex v = 0; v < g.vertex_count(); ++v)
			if (g.degree(v) == 1) leaves.push_back(v);
		Vertex leaf = leaves[std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng)];
		std::vector<Edge> grown(g.edges().begin(), g.edges().end());
		grown.push_back({g.neighbors(leaf).front(), static_cast<Vertex>(g.vertex_count())});
		g = Graph::from_edges(g.vertex_count() + 1, grown);
	}
	return g;
}

ValidationReport lemma_suite(std::size_t max_order, ValidationOptions const& options) {
	if (max_order < 1 || max_order > options.oracle_max_order) throw InvalidInput("lemma_suite needs 1 <= max_order <= " + std::to_string(options.oracle_max_order));
	auto const start = std::chrono::steady_clock::now();
	ValidationReport report;
	report.max_order = max_order;
	auto const& limits = options.limits;

	auto trees = trees_up_to(max_order);
	auto outcomes = parallel_map<TreeOutcome>(trees.size(), options.threads, [&](std::size_t i) {
		auto const& [n, t] = trees[i];
		TreeOutcome o;
		auto fail = [&](std::string lemma, Graph const& g, std::string detail) { o.failures.push_back({std::move(lemma), g, std::move(detail)}); };

		auto rep = oracle_report(t, {}, limits);
		bool const wvd = rep.is_well_ve_dominated;
		o.oracle_checked = true;
		o.oracle_verdict = wvd;
		auto rec = recognize(t);
		o.recognizer_verdict = rec.verdict;

		// Reduction transport.
		if (n <= options.transport_max_order) {
			++o.checks["reduction-transport"];
			auto red = reduce(t);
			if (oracle_report(red.reduced_graph, {}, limits).is_well_ve_dominated != wvd) fail("reduction-transport", t, "verdict differs on the reduced graph");
		}

		// Forbidden induced paths are sound refutations.
		if (auto w = find_forbidden_configuration(t)) {
			++o.checks["forbidden-path"];
			if (wvd) fail("forbidden-path", t, "configuration (" + to_string(w->config) + ") found in a well-ve-dominated tree");
		}

		if (wvd) {
			for (Edge e : t.edges()) {
				if (!cut_edge_hypothesis(t, e.u, e.v)) continue;
				++o.checks["cut-edge"];
				VertexSet removed(n, {e.u, e.v});
				if (!all_components_wvd(induced_delete(t, removed).graph, limits))
					fail("cut-edge", t, "a component of G - {" + std::to_string(e.u) + ", " + std::to_string(e.v) + "} is not well-ve-dominated");
			}
			for (Vertex c = 0; c < n; ++c) {
				if (!cut_vertex_hypothesis(t, c)) continue;
				++o.checks["cut-vertex"];
				VertexSet removed(n, {c});
				if (!all_components_wvd(induced_delete(t, removed).graph, limits))
					fail("cut-vertex", t, "a component of G - " + std::to_string(c) + " is not well-ve-dominated");
			}
		}

		if (n <= options.covered_max_order) {
			++o.checks["chain"];
			if (!domination_chain_holds(rep)) fail("chain", t, "gamma <= i <= beta <= Gamma violated");
			if (wvd) {
				++o.checks["wvd-implies-wvc"];
				if (rep.i_ve != rep.beta_ve) fail("wvd-implies-wvc", t, "i_ve " + std::to_string(rep.i_ve) + " != beta_ve " + std::to_string(rep.beta_ve));
			}
		}

		// Unit-cut additivity, once per reduced member of T_2.
		if (rec.tree_case == RecognitionCase::T2 && is_reduced(t)) {
			auto const& p = *rec.partition;
			std::size_t const gamma = rep.gamma_ve;
			for (Edge cut : p.backbone_edges) {
				++o.checks["unit-cut-split"];
				auto parts = unit_cut_split(t, p, cut);
				std::size_t sum = ve_domination_number(parts[0].graph, limits) + ve_domination_number(parts[1].graph, limits);
				if (sum != gamma) fail("unit-cut-split", t, "gamma " + std::to_string(gamma) + " != " + std::to_string(sum) + " after cutting " + std::to_string(cut.u) + "-" + std::to_string(cut.v));
				for (auto const& part : parts)
					if (!oracle_report(part.graph, {}, limits).is_well_ve_dominated) fail("unit-cut-split", t, "a side of the cut is not well-ve-dominated");
			}
			++o.checks["unit-cut-decompose"];
			auto bodies = unit_cut_decompose(t, p);
			std::size_t sum = 0;
			bool bodies_ok = bodies.size() == p.units.size();
			for (auto const& b : bodies) {
				bodies_ok = bodies_ok && b.graph.vertex_count() == 3 && canonical_tree_form(b.graph) == canonical_tree_form(path_graph(3));
				sum += ve_domination_number(b.graph, limits);
			}
			if (!bodies_ok) fail("unit-cut-decompose", t, "decomposition does not yield one P_3 per unit");
			if (sum != gamma) fail("unit-cut-decompose", t, "body gammas do not add up to gamma");
		}
		return o;
	});
	for (std::size_t i = 0; i < trees.size(); ++i) merge(report, trees[i].first, trees[i].second, std::move(outcomes[i]));

	// Reduction transport on randomly leaf-duplicated trees.
	std::mt19937_64 rng(options.seed);
	std::size_t const cap = std::min(options.transport_max_order, limits.max_vertices);
	for (std::size_t k = 0; k < options.transport_samples && cap >= 3; ++k) {
		std::size_t base = std::uniform_int_distribution<std::size_t>(2, cap - 1)(rng);
		std::size_t dups = std::uniform_int_distribution<std::size_t>(1, cap - base)(rng);
		Graph g = leaf_duplicated_tree(base, dups, rng());
		++report.checks_run["reduction-transport-random"];
		bool const lhs = oracle_report(g, {}, limits).is_well_ve_dominated;
		bool const rhs = oracle_report(reduce(g).reduced_graph, {}, limits).is_well_ve_dominated;
		if (lhs != rhs) report.lemma_failures.push_back({"reduction-transport-random", g, "verdict differs on the reduced graph"});
	}

	// Unit-cut extension of every pair of reduced T_2 trees within range.
	std::vector<PartitionedTree> members;
	for (std::size_t n = 6; n + 6 <= std::min(options.extension_max_order, limits.max_vertices); n += 3) {
		for (auto& t : free_trees(n)) {
			auto r = recognize(t);
			if (r.tree_case == RecognitionCase::T2 && is_reduced(t)) members.push_back({t, *r.partition});
		}
	}
	for (std::size_t a = 0; a < members.size(); ++a) {
		for (std::size_t b = a; b < members.size(); ++b) {
			auto const& [t1, p1] = members[a];
			auto const& [t2, p2] = members[b];
			if (t1.vertex_count() + t2.vertex_count() > std::min(options.extension_max_order, limits.max_vertices)) continue;
			std::size_t const g1 = p1.units.size(), g2 = p2.units.size();
			for (auto const& u1 : p1.units) {
				for (auto const& u2 : p2.units) {
					++report.checks_run["unit-cut-extend"];
					auto ext = unit_cut_extend(t1, p1, u1.backbone, t2, p2, u2.backbone);
					auto rep = oracle_report(ext.tree, {}, limits);
					auto rec = recognize(ext.tree);
					std::string where = "joining " + std::to_string(u1.backbone) + " and " + std::to_string(u2.backbone);
					if (!rep.is_well_ve_dominated || rec.tree_case != RecognitionCase::T2) report.lemma_failures.push_back({"unit-cut-extend", ext.tree, "extension not well-ve-dominated, " + where});
					if (rep.gamma_ve != g1 + g2) report.lemma_failures.push_back({"unit-cut-extend", ext.tree, "gamma not additive, " + where});
					if (auto why = partition_violation(ext.tree, ext.partition)) report.lemma_failures.push_back({"unit-cut-extend", ext.tree, "combined partition invalid: " + *why});

					auto parts = unit_cut_split(ext.tree, ext.partition, {u1.backbone, static_cast<Vertex>(u2.backbone + t1.vertex_count())});
					if (canonical_tree_form(parts[0].graph) != canonical_tree_form(t1) || canonical_tree_form(parts[1].graph) != canonical_tree_form(t2))
						report.lemma_failures.push_back({"unit-cut-extend", ext.tree, "deleting the joining edge does not recover the inputs, " + where});
				}
			}
		}
	}

	report.elapsed = std::chrono::steady_clock::now() - start;
	return report;
}

} // namespace vedom
