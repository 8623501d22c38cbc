#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace qclique {

// Fixed-width vertex set, one bit per vertex. Width matches the adjacency
// rows of the graph it indexes into, so induced edge counts reduce to masked
// popcounts.
class VertexSet {
  public:
    VertexSet() : nbits_(0) {}
    explicit VertexSet(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }
    int word_count() const { return static_cast<int>(words_.size()); }
    const std::uint64_t* data() const { return words_.data(); }
    std::uint64_t* data() { return words_.data(); }

    void add(int i) { words_[static_cast<std::size_t>(i) >> 6] |= 1ULL << (i & 63); }
    void remove(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~(1ULL << (i & 63)); }
    bool contains(int i) const {
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1ULL;
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<int>(wi * 64) + b);
                w &= w - 1;
            }
        }
        return out;
    }

    static VertexSet of(int nbits, std::initializer_list<int> vs) {
        VertexSet s(nbits);
        for (int v : vs) s.add(v);
        return s;
    }

    bool operator==(const VertexSet& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }

  private:
    int nbits_;
    std::vector<std::uint64_t> words_;
};

}  // namespace qclique
