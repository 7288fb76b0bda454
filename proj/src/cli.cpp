#include "vedom/cli.hpp"

#include "vedom/constructions.hpp"
#include "vedom/errors.hpp"
#include "vedom/json_io.hpp"
#include "vedom/reduction.hpp"
#include "vedom/tree_recognizer.hpp"
#include "vedom/validation.hpp"
#include "vedom/ve_domination.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace vedom {

namespace {

struct Globals {
	bool json = false;
	std::size_t max_vertices = OracleLimits{}.max_vertices;
	unsigned threads = 0;

	OracleLimits limits() const {
		OracleLimits l;
		l.max_vertices = max_vertices;
		l.bounded_max_vertices = std::max(l.bounded_max_vertices, max_vertices);
		return l;
	}
};

class Io {
public:
	Io(std::ostream& out, std::istream& in) : out_(out), in_(in) {}

	std::string read(std::string const& path) {
		if (path == "-") {
			std::ostringstream ss;
			ss << in_.rdbuf();
			return ss.str();
		}
		std::ifstream f(path, std::ios::binary);
		if (!f) throw std::runtime_error("cannot open " + path);
		std::ostringstream ss;
		ss << f.rdbuf();
		return ss.str();
	}

	std::ostream& out() { return out_; }

private:
	std::ostream& out_;
	std::istream& in_;
};

std::string set_text(VertexSet const& s) {
	std::string out = "{";
	bool first = true;
	for (auto v : s.members()) {
		out += (first ? "" : ", ") + std::to_string(v);
		first = false;
	}
	return out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_report_text(std::ostream& o, Graph const& g, DominationReport const& r) {
	o << "vertices " << g.vertex_count() << "\n";
	o << "edges " << g.edge_count() << "\n";
	o << "mode " << r.mode.to_string() << "\n";
	o << "gamma_ve " << r.gamma_ve << "\n";
	o << "Gamma_ve " << r.big_gamma_ve << "\n";
	o << "i_ve " << r.i_ve << "\n";
	o << "beta_ve " << r.beta_ve << "\n";
	o << "minimal sets by size";
	for (auto const& [size, count] : r.minimal_size_multiset) o << " " << size << ":" << count;
	o << "\n";
	o << "witness_min " << set_text(r.witness_min) << "\n";
	o << "witness_max " << set_text(r.witness_max) << "\n";
	o << "well-ve-dominated " << yes_no(r.is_well_ve_dominated) << "\n";
	o << "well-ve-covered " << yes_no(r.is_well_ve_covered) << "\n";
}

int cmd_analyze(Io& io, Globals const& g, std::string const& file, std::optional<std::size_t> bound) {
	Graph graph = parse_edge_list(io.read(file));
	EnumerationMode mode{bound};
	auto r = oracle_report(graph, mode, g.limits());
	if (g.json)
		io.out() << report_json(r).dump(2) << "\n";
	else
		print_report_text(io.out(), graph, r);
	return 0;
}

int cmd_recognize(Io& io, Globals const& g, std::string const& file, bool verify) {
	Graph t = parse_edge_list(io.read(file));
	auto r = recognize(t);
	std::optional<bool> oracle;
	bool certificate_ok = true;
	if (verify) {
		oracle = oracle_report(t, {}, g.limits()).is_well_ve_dominated;
		if (r.certificate) certificate_ok = verify_certificate(r.reduced_tree(), *r.certificate).passed();
	}
	bool const agree = !oracle || (*oracle == r.verdict && certificate_ok);

	if (g.json) {
		Json j = recognition_json(r);
		if (oracle) {
			j["oracle_verdict"] = *oracle;
			j["certificate_verified"] = certificate_ok;
			j["agree"] = agree;
		}
		io.out() << j.dump(2) << "\n";
	} else {
		auto& o = io.out();
		o << "verdict " << yes_no(r.verdict) << "\n";
		o << "case " << to_string(r.tree_case) << "\n";
		o << "reduced order " << r.reduced_tree().vertex_count() << " (from " << t.vertex_count() << ")\n";
		if (r.partition) {
			o << "units";
			for (auto const& u : r.partition->units) o << " " << u.leaf << "-" << u.support << "-" << u.backbone;
			o << "\n";
		}
		if (r.certificate) o << "certificate " << set_text(*r.certificate) << "\n";
		if (r.refutation) {
			auto const& f = *r.refutation;
			o << "refutation " << to_string(f.kind);
			if (f.config) o << " (" << to_string(*f.config) << ")";
			if (!f.witness.empty()) {
				o << " at";
				for (Vertex v : f.witness) o << " " << v;
			}
			o << "\n";
			if (!f.detail.empty()) o << "detail " << f.detail << "\n";
		}
		if (oracle) {
			o << "oracle " << yes_no(*oracle) << "\n";
			o << "certificate verified " << yes_no(certificate_ok) << "\n";
			o << (agree ? "agree" : "DISAGREE") << "\n";
		}
	}
	return agree ? 0 : 1;
}

int cmd_reduce(Io& io, Globals const& g, std::string const& file) {
	Graph graph = parse_edge_list(io.read(file));
	auto m = reduce(graph);
	Json reps = m.representative;
	if (g.json) {
		Json j = reduction_json(m);
		j["reduced"] = graph_json(m.reduced_graph);
		io.out() << j.dump(2) << "\n";
	} else {
		io.out() << "# representatives " << reps.dump() << "\n" << to_edge_list(m.reduced_graph);
	}
	return 0;
}

int cmd_expand(Io& io, Globals const& g, std::string const& file) {
	Graph r = parse_edge_list(io.read(file));
	auto e = expand_backbone(r);
	if (g.json) {
		io.out() << Json{{"tree", graph_json(e.tree)}, {"partition", partition_json(e.partition)}}.dump(2) << "\n";
	} else {
		std::string labels;
		for (auto l : e.partition.labels) labels += label_char(l);
		io.out() << "# labels " << labels << "\n" << to_edge_list(e.tree);
	}
	return 0;
}

int cmd_decompose(Io& io, Globals const& g, std::string const& file, std::vector<Vertex> const& cut) {
	Graph t = parse_edge_list(io.read(file));
	auto r = recognize(t);
	if (r.tree_case != RecognitionCase::T2) throw PreconditionError("not-in-T2", "tree is not a well-ve-dominated tree with reduced order >= 6");
	Graph const& rt = r.reduced_tree();
	auto const& p = *r.partition;

	std::vector<InducedSubgraph> parts;
	if (cut.empty()) {
		parts = unit_cut_decompose(rt, p);
	} else {
		auto split = unit_cut_split(rt, p, {cut[0], cut[1]});
		parts.assign(std::make_move_iterator(split.begin()), std::make_move_iterator(split.end()));
	}

	auto const limits = g.limits();
	std::size_t const whole = ve_domination_number(rt, limits);
	std::size_t sum = 0;
	Json comps = Json::array();
	std::ostringstream text;
	for (auto const& part : parts) {
		std::size_t gamma = ve_domination_number(part.graph, limits);
		sum += gamma;
		Json vertices = part.new_to_old;
		Json edges = Json::array();
		text << "component vertices";
		for (Vertex v : part.new_to_old) text << " " << v;
		text << " edges";
		for (Edge e : part.graph.edges()) {
			Vertex a = part.new_to_old[e.u], b = part.new_to_old[e.v];
			edges.push_back({a, b});
			text << " " << a << "-" << b;
		}
		text << " gamma_ve " << gamma << "\n";
		comps.push_back({{"vertices", std::move(vertices)}, {"edges", std::move(edges)}, {"gamma_ve", gamma}});
	}
	bool const additive = sum == whole;
	if (g.json) {
		io.out() << Json{{"reduced", t.vertex_count() != rt.vertex_count()}, {"gamma_ve", whole}, {"components", std::move(comps)}, {"component_gamma_sum", sum}, {"additive", additive}}.dump(2) << "\n";
	} else {
		if (t.vertex_count() != rt.vertex_count()) io.out() << "# input was reduced to " << rt.vertex_count() << " vertices; indices refer to the reduced tree\n";
		io.out() << text.str();
		io.out() << "gamma_ve " << whole << " sum " << sum << (additive ? " additive" : " NOT additive") << "\n";
	}
	return additive ? 0 : 1;
}

int cmd_from_cnf(Io& io, Globals const& g, std::string const& file, bool decide) {
	auto f = parse_dimacs(io.read(file));
	auto gadget = sat_to_graph(f);
	if (!decide) {
		if (g.json)
			io.out() << Json{{"graph", graph_json(gadget.graph)}, {"apex", gadget.apex}, {"clause_vertices", gadget.clause_vertices}}.dump(2) << "\n";
		else
			io.out() << "# gadget: " << f.variable_count << " variables, " << f.clauses.size() << " clauses, apex " << gadget.apex << "\n" << to_edge_list(gadget.graph);
		return 0;
	}
	auto d = sat_decide_via_graph(f, g.limits());
	bool const truth = brute_force_satisfiable(f);
	bool const agree = d.satisfiable == truth;
	if (g.json) {
		Json j = {{"vertices", gadget.graph.vertex_count()}, {"edges", gadget.graph.edge_count()}, {"satisfiable", d.satisfiable}, {"truth_table", truth}, {"agree", agree}};
		if (d.witness) j["witness"] = vertex_list(*d.witness);
		io.out() << j.dump(2) << "\n";
	} else {
		auto& o = io.out();
		o << "gadget " << gadget.graph.vertex_count() << " vertices " << gadget.graph.edge_count() << " edges\n";
		o << "ve-dominating set of size " << 2 * f.variable_count << " among path vertices: " << (d.witness ? set_text(*d.witness) : "none") << "\n";
		o << "decided " << (d.satisfiable ? "satisfiable" : "unsatisfiable") << "\n";
		o << "truth table " << (truth ? "satisfiable" : "unsatisfiable") << "\n";
		o << (agree ? "agree" : "DISAGREE") << "\n";
	}
	return agree ? 0 : 1;
}

void print_validation_text(std::ostream& o, std::string const& title, ValidationReport const& r) {
	o << title << " up to n = " << r.max_order << "\n";
	o << "n trees wvd\n";
	for (auto const& [n, count] : r.trees_checked) {
		auto it = r.wvd_tree_census.find(n);
		o << n << " " << count << " " << (it == r.wvd_tree_census.end() ? 0 : it->second) << "\n";
	}
	for (auto const& [name, count] : r.checks_run) o << "check " << name << " " << count << "\n";
	o << "recognizer/oracle mismatches " << r.recognizer_oracle_mismatches.size() << "\n";
	for (auto const& m : r.recognizer_oracle_mismatches)
		o << "  mismatch recognizer=" << yes_no(m.recognizer_verdict) << " oracle=" << yes_no(m.oracle_verdict) << " " << graph_json(m.tree).dump() << "\n";
	o << "failures " << r.lemma_failures.size() << "\n";
	for (auto const& f : r.lemma_failures) o << "  " << f.lemma << ": " << f.detail << " " << graph_json(f.witness).dump() << "\n";
}

int cmd_enumerate(Io& io, std::ostream& err, Globals const& g, std::size_t max_n, bool lemmas) {
	ValidationOptions opts;
	opts.limits = g.limits();
	opts.threads = g.threads;
	auto cross = cross_validate(max_n, opts);
	std::optional<ValidationReport> suite;
	if (lemmas) suite = lemma_suite(std::min(max_n, opts.oracle_max_order), opts);

	err << "cross-validation took " << cross.elapsed.count() << " s\n";
	if (suite) err << "lemma suite took " << suite->elapsed.count() << " s\n";
	if (g.json) {
		Json j = {{"cross_validation", validation_json(cross)}};
		if (suite) j["lemma_suite"] = validation_json(*suite);
		io.out() << j.dump(2) << "\n";
	} else {
		print_validation_text(io.out(), "cross-validation", cross);
		if (suite) print_validation_text(io.out(), "lemma suite", *suite);
	}
	return cross.ok() && (!suite || suite->ok()) ? 0 : 1;
}

} // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err, std::istream& in) {
	CLI::App app{"ve-domination toolkit: oracle, tree recognizer, constructions, validation"};
	app.name("vedom");
	app.require_subcommand(1);
	app.fallthrough();

	Globals g;
	app.add_flag("--json", g.json, "Write JSON instead of text");
	app.add_option("--max-vertices", g.max_vertices, "Guard for full enumeration")->check(CLI::Range(1, 64));
	app.add_option("--threads", g.threads, "Worker threads for enumerate (0 = all cores)");

	std::string file;
	std::optional<std::size_t> bound;
	bool verify = false, decide = false, lemmas = false;
	std::vector<Vertex> cut;
	std::size_t max_n = 0;

	auto* analyze = app.add_subcommand("analyze", "Oracle report for a graph");
	analyze->add_option("graph", file, "Edge-list file")->required();
	analyze->add_option("--bound", bound, "Only minimal sets of at most this size");

	auto* rec = app.add_subcommand("recognize", "Linear-time well-ve-domination test for a tree");
	rec->add_option("tree", file, "Edge-list file")->required();
	rec->add_flag("--verify", verify, "Compare against the oracle and re-check the certificate");

	auto* red = app.add_subcommand("reduce", "Collapse vertices with equal open neighborhoods");
	red->add_option("graph", file, "Edge-list file")->required();

	auto* exp = app.add_subcommand("expand", "Attach a pendant path of length 2 to every vertex of a tree");
	exp->add_option("backbone", file, "Edge-list file")->required();

	auto* dec = app.add_subcommand("decompose", "Unit-cut decomposition of a well-ve-dominated tree");
	dec->add_option("tree", file, "Edge-list file")->required();
	dec->add_option("--cut", cut, "Split at one backbone edge only")->expected(2);

	auto* cnf = app.add_subcommand("from-cnf", "Build the 3-SAT gadget graph");
	cnf->add_option("dimacs", file, "DIMACS CNF file")->required();
	cnf->add_flag("--decide", decide, "Decide satisfiability through the gadget and by truth table");

	auto* en = app.add_subcommand("enumerate", "Recognizer vs oracle on every free tree");
	en->add_option("--max-n", max_n, "Largest order")->required()->check(CLI::Range(1, 18));
	en->add_flag("--lemmas", lemmas, "Also run the lemma suite (orders up to 15)");

	std::vector<std::string> reversed(args.rbegin(), args.rend());
	try {
		app.parse(reversed);
	} catch (CLI::ParseError const& e) {
		int code = app.exit(e, out, err);
		return code == 0 ? 0 : 2;
	}

	Io io(out, in);
	try {
		if (*analyze) return cmd_analyze(io, g, file, bound);
		if (*rec) return cmd_recognize(io, g, file, verify);
		if (*red) return cmd_reduce(io, g, file);
		if (*exp) return cmd_expand(io, g, file);
		if (*dec) return cmd_decompose(io, g, file, cut);
		if (*cnf) return cmd_from_cnf(io, g, file, decide);
		if (*en) return cmd_enumerate(io, err, g, max_n, lemmas);
	} catch (std::exception const& e) {
		err << "error: " << e.what() << "\n";
		return 2;
	}
	return 2;
}

} // namespace vedom
