/**
 * @file face.hpp
 * @brief Faces of a simplicial complex stored as 64-bit vertex masks.
 *
 * Vertex labels are non-negative integers in [0, kMaxVertex]. Every set
 * operation the searches need (subset, union, difference) is one word op.
 */
#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace sc {

using Vertex = int;

inline constexpr Vertex kMaxVertex = 63;

/// Base class of every library error that signals bad input.
class Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Face {
public:
    constexpr Face() = default;

    Face(std::initializer_list<Vertex> vs)
    {
        for (Vertex v : vs)
            insert(v);
    }

    template <typename Range>
    static Face of(const Range& vs)
    {
        Face f;
        for (auto v : vs)
            f.insert(static_cast<Vertex>(v));
        return f;
    }

    static constexpr Face from_bits(std::uint64_t bits)
    {
        Face f;
        f.bits_ = bits;
        return f;
    }

    static constexpr bool valid_label(long long v) { return v >= 0 && v <= kMaxVertex; }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr int dim() const { return size() - 1; }
    constexpr bool empty() const { return bits_ == 0; }

    constexpr bool contains(Vertex v) const
    {
        return v >= 0 && v <= kMaxVertex && ((bits_ >> v) & 1u);
    }
    constexpr bool is_subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(Face other) const { return (bits_ & other.bits_) != 0; }

    void insert(Vertex v)
    {
        if (!valid_label(v))
            throw Error("vertex label " + std::to_string(v) + " outside [0, 63]");
        bits_ |= std::uint64_t{1} << v;
    }

    constexpr Face with(Vertex v) const { return from_bits(bits_ | (std::uint64_t{1} << v)); }
    constexpr Face without(Vertex v) const { return from_bits(bits_ & ~(std::uint64_t{1} << v)); }

    /// Smallest label; undefined on the empty face.
    constexpr Vertex min_vertex() const { return std::countr_zero(bits_); }
    constexpr Vertex max_vertex() const { return 63 - std::countl_zero(bits_); }

    std::vector<Vertex> vertices() const
    {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    template <typename Fn>
    void for_each_vertex(Fn&& fn) const
    {
        for (std::uint64_t b = bits_; b; b &= b - 1)
            fn(static_cast<Vertex>(std::countr_zero(b)));
    }

    friend constexpr Face operator|(Face a, Face b) { return from_bits(a.bits_ | b.bits_); }
    friend constexpr Face operator&(Face a, Face b) { return from_bits(a.bits_ & b.bits_); }
    friend constexpr Face operator-(Face a, Face b) { return from_bits(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(Face a, Face b) = default;

    /// Lexicographic order of the increasing vertex sequences ({1,2} < {1,2,3} < {1,3}).
    friend constexpr std::strong_ordering operator<=>(Face a, Face b)
    {
        const std::uint64_t diff = a.bits_ ^ b.bits_;
        if (diff == 0)
            return std::strong_ordering::equal;
        const int t = std::countr_zero(diff);
        const std::uint64_t above = t == 63 ? 0 : ~std::uint64_t{0} << (t + 1);
        // The set holding t is smaller unless the other set ends before t.
        if ((a.bits_ >> t) & 1u)
            return (b.bits_ & above) ? std::strong_ordering::less : std::strong_ordering::greater;
        return (a.bits_ & above) ? std::strong_ordering::greater : std::strong_ordering::less;
    }

private:
    std::uint64_t bits_ = 0;
};

/// Visit every subset of @p f (including the empty set and @p f itself).
template <typename Fn>
void for_each_subset(Face f, Fn&& fn)
{
    const std::uint64_t m = f.bits();
    std::uint64_t s = m;
    while (true) {
        fn(Face::from_bits(s));
        if (s == 0)
            break;
        s = (s - 1) & m;
    }
}

/// Visit every subset of @p f with exactly @p k elements.
template <typename Fn>
void for_each_subset_of_size(Face f, int k, Fn&& fn)
{
    if (k < 0 || k > f.size())
        return;
    if (k == 0) {
        fn(Face{});
        return;
    }
    const auto vs = f.vertices();
    const int n = static_cast<int>(vs.size());
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        Face s;
        for (int i : idx)
            s = s.with(vs[i]);
        fn(s);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

inline std::string to_string(Face f)
{
    std::string s = "{";
    bool first = true;
    f.for_each_vertex([&](Vertex v) {
        if (!first)
            s += ',';
        s += std::to_string(v);
        first = false;
    });
    return s + "}";
}

} // namespace sc

template <>
struct std::hash<sc::Face> {
    std::size_t operator()(sc::Face f) const noexcept { return std::hash<std::uint64_t>{}(f.bits()); }
};
