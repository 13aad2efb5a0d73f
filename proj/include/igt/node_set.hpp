#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace igt {

using NodeIndex = std::uint32_t;

/// Set of node indices of one graph, stored as a dense bitset sized to the
/// graph's node count.
class NodeSet {
  public:
    NodeSet() = default;
    explicit NodeSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    NodeSet(std::size_t universe, std::initializer_list<NodeIndex> items) : NodeSet(universe) {
        for (auto v : items)
            insert(v);
    }

    std::size_t universe() const { return universe_; }

    bool contains(NodeIndex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void insert(NodeIndex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(NodeIndex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    std::size_t size() const {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    bool is_subset_of(const NodeSet &other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    NodeSet &operator|=(const NodeSet &other) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    std::vector<NodeIndex> indices() const {
        std::vector<NodeIndex> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                out.push_back(static_cast<NodeIndex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
        return out;
    }

    friend bool operator==(const NodeSet &, const NodeSet &) = default;

  private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace igt
