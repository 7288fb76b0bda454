// Acceptance run: one PASS/FAIL line per criterion. Exit status is non-zero
// when any criterion fails.

#include "vedom/constructions.hpp"
#include "vedom/reduction.hpp"
#include "vedom/tree_enumeration.hpp"
#include "vedom/tree_recognizer.hpp"
#include "vedom/validation.hpp"
#include "vedom/ve_domination.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace vedom;

namespace {

struct Outcome {
	bool pass = true;
	std::ostringstream detail;

	void require(bool ok, std::string const& what) {
		if (!ok) {
			pass = false;
			detail << " [" << what << "]";
		}
	}
};

struct Criterion {
	int id;
	std::string name;
	double budget_seconds;
	std::function<void(Outcome&)> body;
};

constexpr std::size_t kOracleMaxOrder = 15;

// Trees recognized as reduced-order >= 6 members, with the recognizer output.
struct Recognized {
	Graph tree;
	RecognitionResult result;
};

std::vector<Recognized> recognized_trees(std::size_t max_order) {
	std::vector<Recognized> out;
	for (std::size_t n = 1; n <= max_order; ++n) {
		for (auto& t : free_trees(n)) {
			auto r = recognize(t);
			if (r.tree_case == RecognitionCase::T2) out.push_back({std::move(t), std::move(r)});
		}
	}
	return out;
}

void path_classification(Outcome& o) {
	for (std::size_t n = 1; n <= 12; ++n) {
		bool wvd = oracle_report(path_graph(n)).is_well_ve_dominated;
		bool expected = n == 1 || n == 2 || n == 3 || n == 6;
		o.require(wvd == expected, "P_" + std::to_string(n) + " verdict " + (wvd ? "yes" : "no"));
	}
	auto p6 = oracle_report(path_graph(6));
	o.require(p6.gamma_ve == 2 && p6.big_gamma_ve == 2, "P_6 gamma/Gamma");

	auto p4 = enumerate_minimal_ve_dominating_sets(path_graph(4));
	bool has_single = false, has_ends = false;
	std::set<std::size_t> sizes;
	for (auto const& s : p4) {
		sizes.insert(s.size());
		has_single = has_single || s == VertexSet(4, {2});
		has_ends = has_ends || s == VertexSet(4, {0, 3});
	}
	o.require(sizes == std::set<std::size_t>{1, 2}, "P_4 sizes");
	o.require(has_single && has_ends, "P_4 named sets");
	o.detail << " P_1..P_12 classified, P_4 sizes {1,2}";
}

ValidationReport const& cross_validation_report() {
	static ValidationReport const report = [] {
		ValidationOptions opts;
		opts.oracle_max_order = kOracleMaxOrder;
		return cross_validate(kOracleMaxOrder, opts);
	}();
	return report;
}

void recognizer_vs_oracle(Outcome& o) {
	auto const& r = cross_validation_report();
	std::size_t trees = 0, expected = 0;
	for (auto const& [n, c] : r.trees_checked) trees += c;
	for (std::size_t n = 1; n <= kOracleMaxOrder; ++n) expected += known_free_tree_count(n);
	o.require(trees == expected, "tree count " + std::to_string(trees) + " != " + std::to_string(expected));
	o.require(r.checks_run.count("recognizer-vs-oracle") && r.checks_run.at("recognizer-vs-oracle") == trees, "oracle not run on every tree");
	o.require(r.recognizer_oracle_mismatches.empty(), std::to_string(r.recognizer_oracle_mismatches.size()) + " mismatches");
	o.detail << " " << trees << " trees, " << r.recognizer_oracle_mismatches.size() << " mismatches";
}

void certificate_validity(Outcome& o) {
	auto const& report = cross_validation_report();
	std::size_t certificate_failures = 0;
	for (auto const& f : report.lemma_failures) certificate_failures += f.lemma == "certificate" ? 1 : 0;
	o.require(certificate_failures == 0, std::to_string(certificate_failures) + " certificate failures in the cross-validation run");

	std::size_t checked = 0;
	for (auto const& [t, r] : recognized_trees(kOracleMaxOrder)) {
		Graph const& rt = r.reduced_tree();
		auto const& p = *r.partition;
		auto const& cert = *r.certificate;
		bool ok = is_independent(rt, cert);
		for (auto v : cert.members()) ok = ok && p.labels[v] != UnitLabel::Backbone;
		for (Edge e : rt.edges()) {
			std::size_t hits = 0;
			for (auto v : cert.members()) {
				auto x = static_cast<Vertex>(v);
				hits += (x == e.u || x == e.v || rt.adjacent(x, e.u) || rt.adjacent(x, e.v)) ? 1 : 0;
			}
			ok = ok && hits == 1;
		}
		ok = ok && rt.vertex_count() == 3 * p.units.size();
		VertexSet supports = rt.empty_vertex_set();
		for (auto const& u : p.units) supports.insert(u.support);
		ok = ok && is_minimal_ve_dominating(rt, supports);
		o.require(ok, "certificate check failed on a tree of order " + std::to_string(t.vertex_count()));
		++checked;
	}
	o.require(checked > 0, "no recognized trees");
	o.detail << " " << checked << " accepted trees of reduced order >= 6 checked";
}

void backbone_expansion(Outcome& o) {
	std::size_t checked = 0;
	for (std::size_t k = 2; k <= 6; ++k) {
		for (auto const& r : free_trees(k)) {
			auto e = expand_backbone(r);
			auto rep = oracle_report(e.tree);
			bool ok = rep.is_well_ve_dominated && rep.gamma_ve == k && e.tree.vertex_count() == 3 * k;
			o.require(ok, "expansion of a backbone on " + std::to_string(k) + " vertices");
			++checked;
		}
	}
	o.detail << " " << checked << " backbones expanded";
}

void additivity(Outcome& o) {
	OracleLimits const limits;
	std::size_t cuts = 0;
	for (auto const& [t, r] : recognized_trees(kOracleMaxOrder)) {
		Graph const& rt = r.reduced_tree();
		auto const& p = *r.partition;
		std::size_t const whole = ve_domination_number(rt, limits);
		for (Edge e : p.backbone_edges) {
			auto parts = unit_cut_split(rt, p, e);
			std::size_t sum = ve_domination_number(parts[0].graph, limits) + ve_domination_number(parts[1].graph, limits);
			o.require(sum == whole, "split not additive");
			++cuts;
		}
	}

	std::vector<PartitionedTree> members;
	for (std::size_t k = 2; 3 * k + 6 <= limits.max_vertices; ++k)
		for (auto const& r : free_trees(k)) members.push_back(expand_backbone(r));
	std::size_t joins = 0;
	for (std::size_t a = 0; a < members.size(); ++a) {
		for (std::size_t b = a; b < members.size(); ++b) {
			auto const& m1 = members[a];
			auto const& m2 = members[b];
			if (m1.tree.vertex_count() + m2.tree.vertex_count() > limits.max_vertices) continue;
			std::size_t const g1 = m1.partition.units.size(), g2 = m2.partition.units.size();
			for (auto const& u1 : m1.partition.units) {
				for (auto const& u2 : m2.partition.units) {
					auto ext = unit_cut_extend(m1.tree, m1.partition, u1.backbone, m2.tree, m2.partition, u2.backbone);
					auto rep = oracle_report(ext.tree, {}, limits);
					o.require(rep.is_well_ve_dominated && rep.gamma_ve == g1 + g2, "extension not well-ve-dominated or not additive");
					++joins;
				}
			}
		}
	}
	o.detail << " " << cuts << " unit-cut splits, " << joins << " extensions up to " << limits.max_vertices << " vertices";
}

CnfInstance figure_instance() {
	return parse_dimacs("p cnf 4 3\n1 2 -3 0\n-1 3 4 0\n-2 -3 -4 0\n");
}

CnfInstance all_sign_patterns() {
	CnfInstance f{3, {}};
	for (unsigned signs = 0; signs < 8; ++signs)
		f.clauses.push_back({Literal{0, (signs & 1) != 0}, Literal{1, (signs & 2) != 0}, Literal{2, (signs & 4) != 0}});
	return f;
}

void sat_reduction(Outcome& o) {
	auto fig = figure_instance();
	auto gadget = sat_to_graph(fig);
	o.require(gadget.graph.vertex_count() == 28 && gadget.graph.edge_count() == 35, "figure gadget shape");
	std::size_t const n = fig.variable_count;
	auto bounded = oracle_report(gadget.graph, {2 * n + 1});
	std::set<std::size_t> sizes;
	for (auto const& [size, count] : bounded.minimal_size_multiset) sizes.insert(size);
	o.require(sizes == std::set<std::size_t>{2 * n, 2 * n + 1}, "figure gadget minimal sizes");
	o.require(!bounded.is_well_ve_dominated, "figure gadget reported well-ve-dominated");
	o.require(sat_decide_via_graph(fig).satisfiable, "figure instance decided unsatisfiable");
	o.detail << " figure gadget 28/35, sizes {8,9};";

	auto all = all_sign_patterns();
	auto g2 = sat_to_graph(all);
	auto path_vertices = g2.graph.empty_vertex_set();
	for (Vertex v = 0; v < 6 * all.variable_count; ++v) path_vertices.insert(v);
	auto six = find_ve_dominating_set(g2.graph, 2 * all.variable_count, path_vertices);
	auto six_anywhere = find_ve_dominating_set(g2.graph, 2 * all.variable_count, VertexSet::full(g2.graph.vertex_count()));
	o.require(!six_anywhere, "all-sign gadget has a ve-dominating set of size 6");
	bool const decided = sat_decide_via_graph(all).satisfiable;
	o.require(!decided, "all-sign instance decided satisfiable");
	if (six) {
		o.detail << " all-sign gadget dominated by {";
		bool first = true;
		for (auto v : six->members()) {
			o.detail << (first ? "" : ",") << v;
			first = false;
		}
		o.detail << "}";
	}
}

void lemma_suite_check(Outcome& o) {
	ValidationOptions opts;
	opts.transport_samples = 200;
	opts.transport_max_order = 12;
	opts.covered_max_order = 12;
	auto r = lemma_suite(kOracleMaxOrder, opts);
	for (auto const& f : r.lemma_failures) o.require(false, f.lemma + ": " + f.detail);
	for (std::string const name : {"reduction-transport-random", "cut-edge", "cut-vertex", "forbidden-path", "wvd-implies-wvc"})
		o.require(r.checks_run.count(name) && r.checks_run.at(name) > 0, "check " + name + " never ran");
	o.require(r.checks_run.count("reduction-transport-random") && r.checks_run.at("reduction-transport-random") == 200, "random transport sample count");
	o.detail << " " << r.lemma_failures.size() << " failures;";
	for (auto const& [name, count] : r.checks_run) o.detail << " " << name << "=" << count;
}

void chain_sanity(Outcome& o) {
	std::size_t trees = 0;
	for (std::size_t n = 1; n <= 12; ++n) {
		for (auto const& t : free_trees(n)) {
			auto r = oracle_report(t);
			o.require(r.gamma_ve <= r.i_ve && r.i_ve <= r.beta_ve && r.beta_ve <= r.big_gamma_ve, "chain violated at order " + std::to_string(n));
			++trees;
		}
	}
	o.detail << " " << trees << " trees";
}

} // namespace

int main() {
	std::vector<Criterion> const criteria{
	    {1, "path classification", 1.0, path_classification},
	    {2, "recognizer matches oracle on all trees up to 15 vertices", 300.0, recognizer_vs_oracle},
	    {3, "certificate validity", 0.0, certificate_validity},
	    {4, "backbone expansion", 30.0, backbone_expansion},
	    {5, "unit-cut additivity", 0.0, additivity},
	    {6, "3-SAT gadget", 60.0, sat_reduction},
	    {7, "lemma suite", 0.0, lemma_suite_check},
	    {8, "domination chain", 0.0, chain_sanity},
	};

	int failed = 0;
	for (auto const& c : criteria) {
		Outcome o;
		auto const start = std::chrono::steady_clock::now();
		try {
			c.body(o);
		} catch (std::exception const& e) {
			o.require(false, std::string("exception: ") + e.what());
		}
		double const seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		if (c.budget_seconds > 0 && seconds > c.budget_seconds) o.require(false, "over time budget");
		if (!o.pass) ++failed;
		std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " (" << std::fixed << std::setprecision(2) << seconds << " s)" << o.detail.str() << std::endl;
	}
	std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed" << std::endl;
	return failed == 0 ? 0 : 1;
}
