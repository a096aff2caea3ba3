#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace burn {

/// Set of vertices over a fixed universe 0..n-1, packed into 64-bit words.
/// Value type: copy freely, mutate local copies. Membership test is O(1);
/// union/intersection are O(n/64).
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {
        if (universe < 0) throw std::invalid_argument("negative universe");
    }

    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members) s.set(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.set(v);
        return s;
    }

    int universe() const { return universe_; }

    bool test(int v) const {
        check(v);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) {
        check(v);
        words_[v >> 6] |= uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        check(v);
        words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }

    bool is_full() const { return count() == universe_; }

    /// True when every member of this set is also in `other`.
    bool subset_of(const VertexSet& other) const {
        same(other);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        same(other);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        same(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        same(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        same(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

    /// Smallest member, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    /// Smallest member strictly greater than v, or -1.
    int next(int v) const {
        for (int i = (v + 1) >> 6; i < int(words_.size()); ++i) {
            uint64_t w = words_[i];
            if (i == (v + 1) >> 6) w &= ~uint64_t{0} << ((v + 1) & 63);
            if (w) return int(i * 64 + std::countr_zero(w));
        }
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    /// Lexicographic order over the ascending member sequences
    /// (e.g. {0,2} < {1}, {0} < {0,1}). Used as the deterministic tie-break.
    bool lex_less(const VertexSet& o) const {
        int a = first(), b = o.first();
        while (a >= 0 && b >= 0) {
            if (a != b) return a < b;
            a = next(a);
            b = o.next(b);
        }
        return a < 0 && b >= 0;
    }

    /// Single-word view for solver fast paths; requires universe <= 64.
    uint64_t to_u64() const {
        if (universe_ > 64) throw std::logic_error("universe exceeds 64");
        return words_.empty() ? 0 : words_[0];
    }

    static VertexSet from_u64(int universe, uint64_t bits) {
        if (universe > 64) throw std::logic_error("universe exceeds 64");
        VertexSet s(universe);
        if (!s.words_.empty()) s.words_[0] = bits;
        return s;
    }

private:
    void check(int v) const {
        if (v < 0 || v >= universe_) throw std::out_of_range("vertex out of range");
    }
    void same(const VertexSet& o) const {
        if (universe_ != o.universe_) throw std::invalid_argument("universe mismatch");
    }

    int universe_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace burn
