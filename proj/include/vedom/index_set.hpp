#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace vedom {

// Dense bit-per-index subset of {0, ..., universe-1}. The tag keeps vertex
// sets and edge sets from being mixed up.
template <typename Tag>
class IndexSet {
public:
	IndexSet() = default;
	explicit IndexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
	IndexSet(std::size_t universe, std::initializer_list<std::size_t> members) : IndexSet(universe) {
		for (std::size_t i : members) insert(i);
	}
	template <typename Range>
	static IndexSet from_range(std::size_t universe, Range const& members) {
		IndexSet s(universe);
		for (auto i : members) s.insert(static_cast<std::size_t>(i));
		return s;
	}
	static IndexSet full(std::size_t universe) {
		IndexSet s(universe);
		for (std::size_t i = 0; i < universe; ++i) s.insert(i);
		return s;
	}

	std::size_t universe() const { return universe_; }

	bool contains(std::size_t i) const { return i < universe_ && (words_[i >> 6] >> (i & 63) & 1u); }

	void insert(std::size_t i) {
		if (i >= universe_) throw std::out_of_range("IndexSet::insert: index outside universe");
		words_[i >> 6] |= std::uint64_t{1} << (i & 63);
	}
	void erase(std::size_t i) {
		if (i < universe_) words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
	}

	std::size_t size() const {
		std::size_t c = 0;
		for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
		return c;
	}
	bool empty() const {
		for (auto w : words_)
			if (w) return false;
		return true;
	}

	// Members in increasing order.
	std::vector<std::size_t> members() const {
		std::vector<std::size_t> out;
		for (std::size_t k = 0; k < words_.size(); ++k) {
			for (std::uint64_t w = words_[k]; w; w &= w - 1) out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
		}
		return out;
	}

	IndexSet& operator|=(IndexSet const& o) { return combine(o, [](auto a, auto b) { return a | b; }); }
	IndexSet& operator&=(IndexSet const& o) { return combine(o, [](auto a, auto b) { return a & b; }); }
	IndexSet& operator-=(IndexSet const& o) { return combine(o, [](auto a, auto b) { return a & ~b; }); }

	friend IndexSet operator|(IndexSet a, IndexSet const& b) { return a |= b; }
	friend IndexSet operator&(IndexSet a, IndexSet const& b) { return a &= b; }
	friend IndexSet operator-(IndexSet a, IndexSet const& b) { return a -= b; }

	bool is_subset_of(IndexSet const& o) const {
		check_same_universe(o);
		for (std::size_t k = 0; k < words_.size(); ++k)
			if (words_[k] & ~o.words_[k]) return false;
		return true;
	}

	std::vector<std::uint64_t> const& words() const { return words_; }

	friend bool operator==(IndexSet const&, IndexSet const&) = default;

private:
	template <typename Op>
	IndexSet& combine(IndexSet const& o, Op op) {
		check_same_universe(o);
		for (std::size_t k = 0; k < words_.size(); ++k) words_[k] = op(words_[k], o.words_[k]);
		return *this;
	}
	void check_same_universe(IndexSet const& o) const {
		if (o.universe_ != universe_) throw std::invalid_argument("IndexSet: universes differ");
	}

	std::size_t universe_ = 0;
	std::vector<std::uint64_t> words_;
};

struct VertexTag;
struct EdgeTag;
using VertexSet = IndexSet<VertexTag>;
using EdgeSet = IndexSet<EdgeTag>;

// Order used for every emitted family of vertex sets: by size, then by the
// sorted member sequence.
template <typename Tag>
bool size_lex_less(IndexSet<Tag> const& a, IndexSet<Tag> const& b) {
	auto ma = a.members(), mb = b.members();
	if (ma.size() != mb.size()) return ma.size() < mb.size();
	return ma < mb;
}

} // namespace vedom
