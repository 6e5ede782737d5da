#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <vector>

namespace tts {

// Fixed-width set of node ids over [0, n). Configurations of the dynamics
// are values of this type.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

    int universe_size() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (words_[v >> 6] >> (v & 63)) & 1;
    }
    void set(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] |= uint64_t(1) << (v & 63);
    }
    void reset(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] &= ~(uint64_t(1) << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool none() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }
    bool all() const { return count() == n_; }

    static NodeSet full(int n) {
        NodeSet s(n);
        for (int v = 0; v < n; v++) s.set(v);
        return s;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = 0; v < n_; v++)
            if (test(v)) out.push_back(v);
        return out;
    }

    bool operator==(const NodeSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const NodeSet& o) const { return !(*this == o); }

    // subset test: *this ⊆ o
    bool is_subset_of(const NodeSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); i++)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    NodeSet& operator|=(const NodeSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); i++) words_[i] |= o.words_[i];
        return *this;
    }

    size_t hash() const {
        uint64_t h = 0x9e3779b97f4a7c15ULL ^ uint64_t(n_);
        for (uint64_t w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return size_t(h);
    }

private:
    int n_ = 0;
    std::vector<uint64_t> words_;
};

struct NodeSetHash {
    size_t operator()(const NodeSet& s) const { return s.hash(); }
};

}  // namespace tts
