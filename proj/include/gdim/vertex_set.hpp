#pragma once

#include <cstdint>
#include <vector>

namespace gdim {

// Fixed-universe bitset over vertex indices 0..n-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : n_(universe), blocks_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }
    static VertexSet from(int universe, const std::vector<int>& vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }
    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.add(v);
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        return (blocks_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }
    void add(int v) { blocks_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
    void remove(int v) { blocks_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (auto b : blocks_) c += __builtin_popcountll(b);
        return c;
    }
    bool empty() const {
        for (auto b : blocks_)
            if (b) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= o.blocks_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= o.blocks_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    VertexSet complement() const {
        VertexSet r(n_);
        for (std::size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] = ~blocks_[i];
        int rem = n_ & 63;
        if (rem && !r.blocks_.empty()) r.blocks_.back() &= (std::uint64_t{1} << rem) - 1;
        return r;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & o.blocks_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & ~o.blocks_[i]) return false;
        return true;
    }
    bool covers_universe() const { return complement().empty(); }

    bool operator==(const VertexSet& o) const = default;

    // Smallest member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(blocks_[i]));
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            std::uint64_t b = blocks_[i];
            while (b) {
                out.push_back(static_cast<int>(i * 64 + __builtin_ctzll(b)));
                b &= b - 1;
            }
        }
        return out;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> blocks_;
};

} // namespace gdim
