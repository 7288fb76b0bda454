#pragma once

#include "vedom/graph.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace vedom {

// Every unlabeled tree on n vertices (1 <= n <= 18) exactly once, by
// successor steps on canonical level sequences.
class FreeTreeGenerator {
public:
	explicit FreeTreeGenerator(std::size_t n);

	std::optional<Graph> next();

private:
	std::size_t n_;
	std::optional<std::vector<int>> layout_;
	bool done_ = false;
};

std::vector<Graph> free_trees(std::size_t n);

// AHU encoding rooted at the center (minimum over both roots for a bicentral
// tree). Two trees are isomorphic iff their forms are equal.
std::string canonical_tree_form(Graph const& t);

// Number of unlabeled trees on n vertices for n = 0..18 (OEIS A000055 with 1 at n = 0).
std::size_t known_free_tree_count(std::size_t n);

} // namespace vedom
