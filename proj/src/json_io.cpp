#include "vedom/json_io.hpp"

namespace vedom {

Json vertex_list(VertexSet const& s) {
	Json out = Json::array();
	for (auto v : s.members()) out.push_back(v);
	return out;
}

Json graph_json(Graph const& g) {
	Json edges = Json::array();
	for (Edge e : g.edges()) edges.push_back({e.u, e.v});
	return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Json report_json(DominationReport const& r) {
	Json sizes = Json::object();
	for (auto const& [size, count] : r.minimal_size_multiset) sizes[std::to_string(size)] = count;
	return {
	    {"gamma_ve", r.gamma_ve},
	    {"big_gamma_ve", r.big_gamma_ve},
	    {"sizes", std::move(sizes)},
	    {"witness_min", vertex_list(r.witness_min)},
	    {"witness_max", vertex_list(r.witness_max)},
	    {"i_ve", r.i_ve},
	    {"beta_ve", r.beta_ve},
	    {"wvd", r.is_well_ve_dominated},
	    {"wvc", r.is_well_ve_covered},
	    {"mode", r.mode.to_string()},
	};
}

Json reduction_json(ReductionMap const& m) {
	Json classes = Json::array();
	std::vector<Json> members(m.representative.size(), Json::array());
	for (std::size_t v = 0; v < m.class_of.size(); ++v) members[m.class_of[v]].push_back(v);
	for (std::size_t c = 0; c < members.size(); ++c) classes.push_back({{"representative", m.representative[c]}, {"members", std::move(members[c])}});
	return {{"classes", std::move(classes)}, {"to_reduced", m.to_reduced}};
}

Json partition_json(UnitPartition const& p) {
	Json units = Json::array();
	for (auto const& u : p.units) units.push_back({{"leaf", u.leaf}, {"support", u.support}, {"backbone", u.backbone}});
	std::string labels;
	for (auto l : p.labels) labels += label_char(l);
	Json backbone = Json::array();
	for (Edge e : p.backbone_edges) backbone.push_back({e.u, e.v});
	return {{"units", std::move(units)}, {"labels", labels}, {"backbone_edges", std::move(backbone)}};
}

Json recognition_json(RecognitionResult const& r) {
	Json out = {
	    {"verdict", r.verdict},
	    {"case", to_string(r.tree_case)},
	    {"reduced_order", r.reduced_tree().vertex_count()},
	    {"reduction", reduction_json(r.reduction)},
	};
	if (r.partition) out["partition"] = partition_json(*r.partition);
	if (r.certificate) out["certificate"] = vertex_list(*r.certificate);
	if (r.refutation) {
		auto const& f = *r.refutation;
		Json ref = {{"kind", to_string(f.kind)}, {"witness", f.witness}, {"detail", f.detail}};
		if (f.config) ref["config"] = to_string(*f.config);
		out["refutation"] = std::move(ref);
	}
	return out;
}

Json validation_json(ValidationReport const& r) {
	Json orders = Json::array();
	for (auto const& [n, count] : r.trees_checked) {
		auto it = r.wvd_tree_census.find(n);
		orders.push_back({{"n", n}, {"trees", count}, {"wvd", it == r.wvd_tree_census.end() ? 0 : it->second}});
	}
	Json mismatches = Json::array();
	for (auto const& m : r.recognizer_oracle_mismatches)
		mismatches.push_back({{"tree", graph_json(m.tree)}, {"recognizer", m.recognizer_verdict}, {"oracle", m.oracle_verdict}});
	Json failures = Json::array();
	for (auto const& f : r.lemma_failures) failures.push_back({{"check", f.lemma}, {"witness", graph_json(f.witness)}, {"detail", f.detail}});
	Json checks = Json::object();
	for (auto const& [name, count] : r.checks_run) checks[name] = count;
	return {
	    {"max_order", r.max_order},
	    {"census", std::move(orders)},
	    {"recognizer_oracle_mismatches", std::move(mismatches)},
	    {"lemma_failures", std::move(failures)},
	    {"checks_run", std::move(checks)},
	    {"ok", r.ok()},
	};
}

} // namespace vedom
