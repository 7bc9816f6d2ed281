#ifndef TDC_BITSET_HPP
#define TDC_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace tdc {

// Fixed-capacity dynamic bitset over 64-bit words. Vertex sets, adjacency
// rows and coverage masks are all instances of this; the solvers live on
// word-parallel union/intersection.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits, bool all_set = false)
        : nbits_(nbits), words_((nbits + 63) / 64, all_set ? ~0ull : 0ull)
    {
        if (all_set) trim();
    }

    int capacity() const { return nbits_; }

    void set(int i) { words_[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void clear()
    {
        for (auto& w : words_) w = 0;
    }
    void fill()
    {
        for (auto& w : words_) w = ~0ull;
        trim();
    }

    int count() const
    {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const
    {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o)
    {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o)
    {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o)
    {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    // this := this \ o
    Bitset& subtract(const Bitset& o)
    {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    void flip_all()
    {
        for (auto& w : words_) w = ~w;
        trim();
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset difference(Bitset a, const Bitset& b) { return a.subtract(b); }

    bool is_subset_of(const Bitset& o) const
    {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const
    {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    int intersection_count(const Bitset& o) const
    {
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    bool operator==(const Bitset& o) const
    {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }

    // Smallest member, -1 if empty.
    int first() const { return next(0); }
    // Smallest member >= from, -1 if none.
    int next(int from) const
    {
        if (from >= nbits_) return -1;
        size_t wi = from >> 6;
        uint64_t w = words_[wi] & (~0ull << (from & 63));
        while (true) {
            if (w) return int(wi * 64 + std::countr_zero(w));
            if (++wi == words_.size()) return -1;
            w = words_[wi];
        }
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }

    template <typename F> void for_each(F&& f) const
    {
        for (int v = first(); v >= 0; v = next(v + 1)) f(v);
    }

private:
    void trim()
    {
        int tail = nbits_ & 63;
        if (tail && !words_.empty()) words_.back() &= (1ull << tail) - 1;
    }

    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

using VertexSet = Bitset;

} // namespace tdc

#endif
