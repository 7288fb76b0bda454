#include "doctest.h"

#include "support.hpp"
#include "vedom/cli.hpp"
#include "vedom/constructions.hpp"
#include "vedom/errors.hpp"
#include "vedom/json_io.hpp"
#include "vedom/reduction.hpp"
#include "vedom/tree_enumeration.hpp"
#include "vedom/validation.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace vedom;
using namespace vedom::testing;

namespace {

struct CliRun {
	int code;
	std::string out;
	std::string err;
};

CliRun run(std::vector<std::string> args, std::string const& stdin_text = "") {
	std::ostringstream out, err;
	std::istringstream in(stdin_text);
	int code = run_cli(args, out, err, in);
	return {code, out.str(), err.str()};
}

class TempFile {
public:
	TempFile(std::string const& name, std::string const& content)
	    : path_(std::filesystem::temp_directory_path() / ("vedom_test_" + name)) {
		std::ofstream(path_) << content;
	}
	~TempFile() { std::filesystem::remove(path_); }
	std::string path() const { return path_.string(); }

private:
	std::filesystem::path path_;
};

} // namespace

TEST_SUITE("tree_enumeration") {

TEST_CASE("counts match the known sequence") {
	CHECK(free_trees(1).size() == 1);
	CHECK(free_trees(4).size() == 2);
	CHECK(free_trees(7).size() == 11);
	for (std::size_t n = 1; n <= 15; ++n) {
		FreeTreeGenerator gen(n);
		std::size_t count = 0;
		while (auto t = gen.next()) {
			CHECK(t->vertex_count() == n);
			++count;
		}
		CHECK(count == known_free_tree_count(n));
	}
	CHECK_THROWS_AS(FreeTreeGenerator(0), InvalidInput);
	CHECK_THROWS_AS(FreeTreeGenerator(19), InvalidInput);
}

TEST_CASE("n = 4 yields the path and the star") {
	std::set<std::string> forms;
	for (auto const& t : free_trees(4)) forms.insert(naive_tree_form(t));
	CHECK(forms == std::set<std::string>{naive_tree_form(path_graph(4)), naive_tree_form(star_graph(3))});
}

TEST_CASE("no duplicates and nothing missing, against labeled trees") {
	for (std::size_t n = 1; n <= 8; ++n) {
		std::set<std::string> labeled;
		for (auto const& t : labeled_trees(n)) labeled.insert(naive_tree_form(t));
		std::set<std::string> generated;
		for (auto const& t : free_trees(n)) {
			CHECK(is_tree(t));
			generated.insert(naive_tree_form(t));
		}
		CHECK(generated.size() == free_trees(n).size());
		CHECK(generated == labeled);
	}
}

TEST_CASE("no duplicates and nothing missing, against grown trees") {
	for (std::size_t n = 9; n <= 10; ++n) {
		std::set<std::string> grown;
		for (auto const& [form, t] : grown_free_trees(n)) grown.insert(form);
		std::set<std::string> generated;
		for (auto const& t : free_trees(n)) generated.insert(naive_tree_form(t));
		CHECK(generated.size() == free_trees(n).size());
		CHECK(generated == grown);
	}
}

TEST_CASE("deterministic order") {
	auto a = free_trees(9), b = free_trees(9);
	CHECK(a == b);
}

TEST_CASE("canonical form decides isomorphism") {
	for (std::size_t n = 1; n <= 9; ++n) {
		std::map<std::string, std::string> by_library;
		for (auto const& t : labeled_trees(std::min<std::size_t>(n, 7))) {
			auto lib = canonical_tree_form(t);
			auto ref = naive_tree_form(t);
			auto [it, fresh] = by_library.emplace(lib, ref);
			if (!fresh) CHECK(it->second == ref);
		}
		std::set<std::string> forms;
		for (auto const& t : free_trees(n)) forms.insert(canonical_tree_form(t));
		CHECK(forms.size() == free_trees(n).size());
	}
	CHECK_THROWS_AS(canonical_tree_form(Graph(0)), PreconditionError);
}

}

TEST_SUITE("validation") {

TEST_CASE("cross validation on small orders") {
	auto r1 = cross_validate(1);
	CHECK(r1.trees_checked.at(1) == 1);
	CHECK(r1.wvd_tree_census.at(1) == 1);
	CHECK(r1.ok());

	auto r6 = cross_validate(6);
	CHECK(r6.ok());
	CHECK(r6.recognizer_oracle_mismatches.empty());
	// At n = 6 the accepted trees are those reducing to P_1 or P_2, plus P_6.
	std::size_t expected = 0;
	for (auto const& t : free_trees(6)) {
		auto red = reduce(t).reduced_graph;
		if (red.vertex_count() <= 2 || canonical_tree_form(red) == canonical_tree_form(path_graph(6))) ++expected;
	}
	CHECK(r6.wvd_tree_census.at(6) == expected);
	CHECK_THROWS_AS(cross_validate(19), InvalidInput);
	CHECK_THROWS_AS(cross_validate(0), InvalidInput);
}

TEST_CASE("thread count does not change the report") {
	ValidationOptions one, many;
	one.threads = 1;
	many.threads = 4;
	auto a = cross_validate(11, one), b = cross_validate(11, many);
	CHECK(a.trees_checked == b.trees_checked);
	CHECK(a.wvd_tree_census == b.wvd_tree_census);
	CHECK(a.checks_run == b.checks_run);
	CHECK(validation_json(a) == validation_json(b));
}

TEST_CASE("lemma suite on small orders") {
	ValidationOptions opts;
	opts.transport_samples = 20;
	auto r = lemma_suite(10, opts);
	CHECK(r.ok());
	CHECK(r.checks_run.at("reduction-transport-random") == 20);
	CHECK(r.checks_run.at("cut-edge") > 0);
	CHECK(r.checks_run.at("unit-cut-extend") > 0);
	CHECK_THROWS_AS(lemma_suite(16), InvalidInput);
}

TEST_CASE("lemma hypotheses") {
	Graph p6 = path_graph(6);
	CHECK(cut_edge_hypothesis(p6, 2, 3));
	CHECK_FALSE(cut_edge_hypothesis(p6, 1, 2));
	CHECK_FALSE(cut_edge_hypothesis(p6, 0, 3));
	auto parts = connected_components(induced_delete(p6, VertexSet(6, {2, 3})).graph);
	CHECK(parts.size() == 2);
	for (auto const& c : parts) CHECK(c.size() == 2);

	CHECK(cut_vertex_hypothesis(path_graph(7), 3));
	CHECK_FALSE(cut_vertex_hypothesis(path_graph(7), 1));
	CHECK_FALSE(cut_vertex_hypothesis(star_graph(5), 0));
}

TEST_CASE("leaf-duplicated trees") {
	Graph g = leaf_duplicated_tree(6, 3, 42);
	CHECK(g.vertex_count() == 9);
	CHECK(is_tree(g));
	CHECK(leaf_duplicated_tree(6, 3, 42) == g);
	CHECK(reduce(g).reduced_graph.vertex_count() <= 6);
	CHECK_THROWS_AS(leaf_duplicated_tree(1, 1, 0), InvalidInput);
}

TEST_CASE("json shapes") {
	auto j = report_json(oracle_report(path_graph(6)));
	CHECK(j["gamma_ve"] == 2);
	CHECK(j["big_gamma_ve"] == 2);
	CHECK(j["wvd"] == true);
	CHECK(j["mode"] == "full");
	std::vector<std::string> keys;
	for (auto const& [k, v] : j.items()) keys.push_back(k);
	CHECK(keys == std::vector<std::string>{"gamma_ve", "big_gamma_ve", "sizes", "witness_min", "witness_max", "i_ve", "beta_ve", "wvd", "wvc", "mode"});

	auto rj = recognition_json(recognize(path_graph(7)));
	CHECK(rj["verdict"] == false);
	CHECK(rj["refutation"]["kind"] == "forbidden-path");
	CHECK(rj["refutation"]["config"] == "iii");
}

}

TEST_SUITE("cli") {

TEST_CASE("analyze") {
	TempFile p6("p6.el", "n 6\n0 1\n1 2\n2 3\n3 4\n4 5\n");
	auto r = run({"--json", "analyze", p6.path()});
	CHECK(r.code == 0);
	auto j = Json::parse(r.out);
	CHECK(j["gamma_ve"] == 2);
	CHECK(j["big_gamma_ve"] == 2);
	CHECK(j["wvd"] == true);

	auto text = run({"analyze", p6.path()});
	CHECK(text.code == 0);
	CHECK(text.out.find("well-ve-dominated yes") != std::string::npos);

	auto bounded = run({"analyze", "--bound", "1", "-"}, "0 1\n1 2\n2 3\n");
	CHECK(bounded.out.find("mode size-bounded(1)") != std::string::npos);

	auto again = run({"--json", "analyze", p6.path()});
	CHECK(again.out == r.out);
}

TEST_CASE("recognize") {
	TempFile p7("p7.el", "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n");
	auto r = run({"recognize", p7.path()});
	CHECK(r.code == 0);
	CHECK(r.out.find("verdict no") != std::string::npos);
	CHECK(r.out.find("refutation forbidden-path (iii)") != std::string::npos);

	auto v = run({"recognize", "--verify", "-"}, "0 1\n1 2\n2 3\n3 4\n4 5\n");
	CHECK(v.code == 0);
	CHECK(v.out.find("agree") != std::string::npos);

	auto not_tree = run({"recognize", "-"}, "0 1\n1 2\n2 0\n");
	CHECK(not_tree.code == 2);
	CHECK(not_tree.err.find("not-a-tree") != std::string::npos);
}

TEST_CASE("reduce, expand, decompose") {
	auto red = run({"reduce", "-"}, "0 1\n0 2\n0 3\n");
	CHECK(red.code == 0);
	CHECK(red.out == "# representatives [0,1]\nn 2\n0 1\n");

	auto exp = run({"expand", "-"}, "0 1\n");
	CHECK(exp.code == 0);
	CHECK(exp.out.find("# labels WWSSLL") == 0);
	Graph expanded = parse_edge_list(exp.out);
	CHECK(canonical_tree_form(expanded) == canonical_tree_form(path_graph(6)));

	auto dec = run({"decompose", "-"}, "0 1\n1 2\n2 3\n3 4\n4 5\n");
	CHECK(dec.code == 0);
	CHECK(dec.out.find("gamma_ve 2 sum 2 additive") != std::string::npos);

	auto cut = run({"--json", "decompose", "--cut", "2", "3", "-"}, "0 1\n1 2\n2 3\n3 4\n4 5\n");
	CHECK(cut.code == 0);
	auto j = Json::parse(cut.out);
	CHECK(j["components"].size() == 2);
	CHECK(j["additive"] == true);

	auto bad = run({"decompose", "--cut", "1", "2", "-"}, "0 1\n1 2\n2 3\n3 4\n4 5\n");
	CHECK(bad.code == 2);
	auto rejected = run({"decompose", "-"}, "0 1\n1 2\n2 3\n");
	CHECK(rejected.code == 2);
}

TEST_CASE("from-cnf") {
	std::string const fig2 = "p cnf 4 3\n1 2 -3 0\n-1 3 4 0\n-2 -3 -4 0\n";
	auto g = run({"from-cnf", "-"}, fig2);
	CHECK(g.code == 0);
	Graph gadget = parse_edge_list(g.out);
	CHECK(gadget.vertex_count() == 28);
	CHECK(gadget.edge_count() == 35);

	auto d = run({"--json", "from-cnf", "--decide", "-"}, fig2);
	CHECK(d.code == 0);
	auto j = Json::parse(d.out);
	CHECK(j["satisfiable"] == true);
	CHECK(j["truth_table"] == true);

	auto bad = run({"from-cnf", "-"}, "p cnf 3 1\n1 2 0\n");
	CHECK(bad.code == 2);
	CHECK(bad.err.find("line 2") != std::string::npos);
}

TEST_CASE("enumerate") {
	auto r = run({"enumerate", "--max-n", "8", "--lemmas"});
	CHECK(r.code == 0);
	CHECK(r.out.find("recognizer/oracle mismatches 0") != std::string::npos);
	CHECK(r.out.find("failures 0") != std::string::npos);
	auto j = run({"--json", "--threads", "2", "enumerate", "--max-n", "8"});
	CHECK(j.code == 0);
	CHECK(Json::parse(j.out)["cross_validation"]["ok"] == true);
	CHECK(run({"enumerate", "--max-n", "19"}).code == 2);
}

TEST_CASE("usage errors") {
	CHECK(run({}).code == 2);
	CHECK(run({"frobnicate"}).code == 2);
	CHECK(run({"analyze", "/nonexistent/file.el"}).code == 2);
	CHECK(run({"--help"}).code == 0);
	CHECK(run({"--max-vertices", "5", "analyze", "-"}, "0 1\n1 2\n2 3\n3 4\n4 5\n").code == 2);
}

}
