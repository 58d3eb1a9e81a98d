/**
 * @file homology.hpp
 * @brief Reduced simplicial homology ranks and Leray numbers.
 *
 * Ranks of boundary matrices are computed exactly: over Q by fraction-free
 * row reduction on integer rows (each row is divided by the gcd of its
 * entries after every update), or over a prime field GF(p).
 *
 * The empty complex is identified with {∅}, so it has H̃_{-1} of rank one.
 */
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sc/complex.hpp"

namespace sc {

struct Field {
    enum class Kind { Rational, Prime };
    Kind kind = Kind::Rational;
    std::int64_t p = 0;

    static Field rationals() { return {}; }
    static Field prime(std::int64_t p)
    {
        if (p < 2 || p > (std::int64_t{1} << 31))
            throw Error("Field: prime must lie in [2, 2^31]");
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw Error("Field: " + std::to_string(p) + " is not prime");
        return {Kind::Prime, p};
    }
    static Field gf2() { return {Kind::Prime, 2}; }

    /// "rational", "gf2", "gf3", ...
    static Field parse(const std::string& s)
    {
        if (s == "rational" || s == "Q")
            return rationals();
        if (s.size() > 2 && s.rfind("gf", 0) == 0 &&
            std::all_of(s.begin() + 2, s.end(), [](unsigned char c) { return std::isdigit(c); }))
            return prime(std::stoll(s.substr(2)));
        throw Error("unknown field '" + s + "' (expected rational or gfP)");
    }

    std::string name() const { return kind == Kind::Rational ? "rational" : "gf" + std::to_string(p); }
    friend bool operator==(const Field&, const Field&) = default;
};

/// Reduced Betti numbers b̃_{-1}, b̃_0, …, b̃_dim.
struct BettiVector {
    int minus_one = 0;     ///< b̃_{-1}; 1 exactly for the empty complex.
    std::vector<int> ranks; ///< ranks[i] = b̃_i for 0 ≤ i ≤ dim.
    Field field;

    /// b̃_i for any i ≥ -1; zero beyond the dimension.
    int operator[](int i) const
    {
        if (i == -1)
            return minus_one;
        if (i < 0 || i >= static_cast<int>(ranks.size()))
            return 0;
        return ranks[static_cast<std::size_t>(i)];
    }

    /// Largest i with b̃_i ≠ 0, or -2 when all vanish.
    int top_nonzero() const
    {
        for (int i = static_cast<int>(ranks.size()) - 1; i >= 0; --i)
            if (ranks[static_cast<std::size_t>(i)] != 0)
                return i;
        return minus_one ? -1 : -2;
    }

    long long reduced_euler() const
    {
        long long chi = -minus_one;
        for (std::size_t i = 0; i < ranks.size(); ++i)
            chi += (i % 2 == 0 ? 1 : -1) * ranks[i];
        return chi;
    }
};

namespace detail {

using SparseRow = std::vector<std::pair<int, long long>>;

template <typename Int>
struct IntRank {
    // Rows are kept sorted by column. Fraction-free: r ← a·r − b·pivot, then
    // divide by the row gcd.
    using Row = std::vector<std::pair<int, Int>>;

    static Int gcd_abs(Int a, Int b)
    {
        if (a < 0)
            a = -a;
        if (b < 0)
            b = -b;
        while (b != 0) {
            Int t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static int rank(const std::vector<SparseRow>& input)
    {
        std::vector<Row> rows;
        rows.reserve(input.size());
        for (const auto& r : input) {
            Row row;
            for (auto [c, v] : r)
                if (v != 0)
                    row.emplace_back(c, Int(v));
            if (!row.empty())
                rows.push_back(std::move(row));
        }
        // pivot column -> row index in `basis`
        std::unordered_map<int, std::size_t> pivot_of;
        std::vector<Row> basis;
        for (auto& row : rows) {
            while (!row.empty()) {
                auto it = pivot_of.find(row.front().first);
                if (it == pivot_of.end())
                    break;
                row = combine(row, basis[it->second]);
            }
            if (!row.empty()) {
                pivot_of.emplace(row.front().first, basis.size());
                basis.push_back(std::move(row));
            }
        }
        return static_cast<int>(basis.size());
    }

    static Row combine(const Row& r, const Row& piv)
    {
        const Int a = piv.front().second;
        const Int b = r.front().second;
        Row out;
        out.reserve(r.size() + piv.size());
        std::size_t i = 0, j = 0;
        while (i < r.size() || j < piv.size()) {
            int col;
            Int v = 0;
            if (j >= piv.size() || (i < r.size() && r[i].first < piv[j].first)) {
                col = r[i].first;
                v = mul(a, r[i].second);
                ++i;
            } else if (i >= r.size() || piv[j].first < r[i].first) {
                col = piv[j].first;
                v = -mul(b, piv[j].second);
                ++j;
            } else {
                col = r[i].first;
                v = sub(mul(a, r[i].second), mul(b, piv[j].second));
                ++i;
                ++j;
            }
            if (v != 0)
                out.emplace_back(col, v);
        }
        Int g = 0;
        for (auto& e : out)
            g = gcd_abs(g, e.second);
        if (g > 1)
            for (auto& e : out)
                e.second /= g;
        return out;
    }

    static Int mul(const Int& a, const Int& b)
    {
        if constexpr (std::is_same_v<Int, long long>) {
            long long r;
            if (__builtin_mul_overflow(a, b, &r))
                throw Overflow{};
            return r;
        } else {
            return a * b;
        }
    }
    static Int sub(const Int& a, const Int& b)
    {
        if constexpr (std::is_same_v<Int, long long>) {
            long long r;
            if (__builtin_sub_overflow(a, b, &r))
                throw Overflow{};
            return r;
        } else {
            return a - b;
        }
    }

    struct Overflow {};
};

inline int rank_rational(const std::vector<SparseRow>& rows)
{
    try {
        return IntRank<long long>::rank(rows);
    } catch (const IntRank<long long>::Overflow&) {
        return IntRank<boost::multiprecision::cpp_int>::rank(rows);
    }
}

inline std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p)
{
    std::int64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = static_cast<std::int64_t>((__int128)r * a % p);
        a = static_cast<std::int64_t>((__int128)a * a % p);
        e >>= 1;
    }
    return r;
}

inline int rank_mod_p(const std::vector<SparseRow>& input, std::int64_t p)
{
    using Row = std::vector<std::pair<int, std::int64_t>>;
    std::unordered_map<int, std::size_t> pivot_of;
    std::vector<Row> basis;
    auto norm = [p](long long v) { return ((v % p) + p) % p; };
    for (const auto& in : input) {
        Row row;
        for (auto [c, v] : in)
            if (norm(v) != 0)
                row.emplace_back(c, norm(v));
        while (!row.empty()) {
            auto it = pivot_of.find(row.front().first);
            if (it == pivot_of.end())
                break;
            const Row& piv = basis[it->second]; // leading coefficient 1
            const std::int64_t f = row.front().second;
            Row out;
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < piv.size()) {
                if (j >= piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                    out.push_back(row[i++]);
                } else if (i >= row.size() || piv[j].first < row[i].first) {
                    out.emplace_back(piv[j].first, norm(-static_cast<long long>((__int128)f * piv[j].second % p)));
                    ++j;
                } else {
                    std::int64_t v = norm(row[i].second - static_cast<long long>((__int128)f * piv[j].second % p));
                    if (v)
                        out.emplace_back(row[i].first, v);
                    ++i;
                    ++j;
                }
            }
            row = std::move(out);
        }
        if (!row.empty()) {
            const std::int64_t inv = mod_pow(row.front().second, p - 2, p);
            for (auto& e : row)
                e.second = static_cast<std::int64_t>((__int128)e.second * inv % p);
            pivot_of.emplace(row.front().first, basis.size());
            basis.push_back(std::move(row));
        }
    }
    return static_cast<int>(basis.size());
}

inline int rank(const std::vector<SparseRow>& rows, const Field& f)
{
    return f.kind == Field::Kind::Rational ? rank_rational(rows) : rank_mod_p(rows, f.p);
}

/// Faces grouped by dimension: by_dim[i + 1] holds the i-faces, i ≥ -1.
inline std::vector<std::vector<Face>> faces_by_dim(const SimplicialComplex& x)
{
    const int d = x.dim();
    std::vector<std::vector<Face>> out(static_cast<std::size_t>(d + 2));
    for (Face f : all_faces(x))
        out[static_cast<std::size_t>(f.size())].push_back(f);
    if (x.empty())
        out.assign(1, {Face{}});
    return out;
}

} // namespace detail

inline BettiVector reduced_betti(const SimplicialComplex& x, const Field& field = Field::rationals())
{
    const auto by_dim = detail::faces_by_dim(x);
    const int top = static_cast<int>(by_dim.size()) - 2; // = dim(x)
    // rank_of[i + 1] = rank of ∂_i : C_i → C_{i-1}, i ≥ 0.
    std::vector<int> rank_of(by_dim.size() + 1, 0);
    for (int i = 0; i <= top; ++i) {
        const auto& lower = by_dim[static_cast<std::size_t>(i)];
        std::unordered_map<std::uint64_t, int> index;
        for (std::size_t j = 0; j < lower.size(); ++j)
            index.emplace(lower[j].bits(), static_cast<int>(j));
        std::vector<detail::SparseRow> rows;
        rows.reserve(by_dim[static_cast<std::size_t>(i + 1)].size());
        for (Face f : by_dim[static_cast<std::size_t>(i + 1)]) {
            detail::SparseRow row;
            int sign = 1;
            f.for_each_vertex([&](Vertex v) {
                row.emplace_back(index.at(f.without(v).bits()), sign);
                sign = -sign;
            });
            std::sort(row.begin(), row.end());
            rows.push_back(std::move(row));
        }
        rank_of[static_cast<std::size_t>(i + 1)] = detail::rank(rows, field);
    }
    BettiVector b;
    b.field = field;
    auto betti_at = [&](int i) {
        const int ci = static_cast<int>(by_dim[static_cast<std::size_t>(i + 1)].size());
        return ci - rank_of[static_cast<std::size_t>(i + 1)] - rank_of[static_cast<std::size_t>(i + 2)];
    };
    b.minus_one = betti_at(-1);
    for (int i = 0; i <= top; ++i)
        b.ranks.push_back(betti_at(i));
    return b;
}

/// H̃_i(X) = 0 for every -1 ≤ i ≤ n. The empty complex is never (-1)-connected.
inline bool is_homologically_connected(const SimplicialComplex& x, int n, const Field& field = Field::rationals())
{
    if (n < -1)
        return true;
    const auto b = reduced_betti(x, field);
    for (int i = -1; i <= n; ++i)
        if (b[i] != 0)
            return false;
    return true;
}

inline constexpr int kLerayBruteForceVertexCap = 14;

/// max over A ⊆ V(X) of (top nonzero degree of H̃(X[A])) + 1, at least 0.
inline int leray_number_brute_force(const SimplicialComplex& x, const Field& field = Field::rationals(),
                                    int vertex_cap = kLerayBruteForceVertexCap)
{
    if (x.num_vertices() > vertex_cap)
        throw Error("leray_number_brute_force: " + std::to_string(x.num_vertices()) + " vertices exceed the cap of " +
                    std::to_string(vertex_cap));
    int best = 0;
    const auto vs = x.vertex_set().vertices();
    const std::uint64_t n = vs.size();
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        Face a;
        for (std::uint64_t i = 0; i < n; ++i)
            if ((m >> i) & 1u)
                a = a.with(vs[i]);
        best = std::max(best, reduced_betti(induced(x, a), field).top_nonzero() + 1);
    }
    return best;
}

/// Link criterion: L(X) ≥ d iff H̃_{d-1}(lk(γ, X)) ≠ 0 for some γ ∈ X (∅ included).
inline int leray_number_links(const SimplicialComplex& x, const Field& field = Field::rationals())
{
    int best = 0;
    for (Face g : all_faces(x))
        best = std::max(best, reduced_betti(link(x, g), field).top_nonzero() + 1);
    return best;
}

/// Raised when the two Leray computations disagree; indicates a bug, not bad input.
class CrossCheckFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Leray number. Under the vertex cap both methods run and must agree;
/// above it the link criterion is used alone.
inline int leray_number(const SimplicialComplex& x, const Field& field = Field::rationals())
{
    const int by_links = leray_number_links(x, field);
    if (x.num_vertices() > kLerayBruteForceVertexCap)
        return by_links;
    const int brute = leray_number_brute_force(x, field);
    if (brute != by_links)
        throw CrossCheckFailure("leray_number: induced-subcomplex value " + std::to_string(brute) +
                                " differs from link-criterion value " + std::to_string(by_links) + " on " +
                                to_string(x));
    return brute;
}

} // namespace sc
