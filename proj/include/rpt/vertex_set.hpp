#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace rpt {

using Vertex = int;

/// Fixed-universe bitset over host-graph vertex ids 0..universe-1.
class VertexSet
{
public:
    VertexSet() = default;
    explicit VertexSet(int universe) :
        universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0)
    {
    }

    static VertexSet full(int universe)
    {
        VertexSet s(universe);
        for (auto & w : s.words_)
            w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    static VertexSet of(int universe, std::span<const Vertex> vertices)
    {
        VertexSet s(universe);
        for (Vertex v : vertices)
            s.insert(v);
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<Vertex> vertices)
    {
        return of(universe, std::span<const Vertex>(vertices.begin(), vertices.size()));
    }

    int universe() const { return universe_; }

    bool contains(Vertex v) const
    {
        return v >= 0 && v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u);
    }

    void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int size() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    /// |this ∩ other| without materialising the intersection.
    int count_common(const VertexSet & other) const
    {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    bool intersects(const VertexSet & other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    bool is_subset_of(const VertexSet & other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    /// Lowest member, or -1.
    Vertex first() const { return next(0); }

    /// Lowest member >= from, or -1.
    Vertex next(Vertex from) const
    {
        if (from >= universe_)
            return -1;
        std::size_t i = static_cast<std::size_t>(from) >> 6;
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return static_cast<Vertex>(i * 64 + std::countr_zero(w));
            if (++i >= words_.size())
                return -1;
            w = words_[i];
        }
    }

    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const
    {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    VertexSet & operator&=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet & operator|=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet & operator-=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet & b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet & b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet & b) { return a -= b; }

    /// Complement within the universe.
    VertexSet operator~() const
    {
        VertexSet r = *this;
        for (auto & w : r.words_)
            w = ~w;
        r.trim();
        return r;
    }

    friend bool operator==(const VertexSet &, const VertexSet &) = default;

    std::span<const std::uint64_t> words() const { return words_; }

private:
    void trim()
    {
        if (universe_ % 64 && ! words_.empty())
            words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace rpt
