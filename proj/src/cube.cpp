#include "seqcube/cube.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "seqcube/errors.hpp"

namespace seqcube {

namespace {

void check_edges(int n, std::span<const int> edges) {
    for (std::size_t t = 0; t < edges.size(); ++t) {
        if (edges[t] < 0 || edges[t] >= n)
            throw DomainError("edge exponent " + std::to_string(edges[t]) +
                              " out of range [0, " + std::to_string(n) + ")");
        if (t > 0 && edges[t] <= edges[t - 1])
            throw DomainError("edge exponents must be strictly increasing");
    }
}

int valuation(std::uint64_t a, std::uint64_t b) {
    return std::countr_zero(a > b ? a - b : b - a);
}

// Core recognizer on a sorted position vector; nullopt = not a cube.
std::optional<std::vector<int>> recognize_rec(const std::vector<std::uint64_t>& pos) {
    const std::size_t m = pos.size();
    if (m == 1) return std::vector<int>{};
    if ((m & (m - 1)) != 0) return std::nullopt;

    int vstar = -1;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) vstar = std::max(vstar, valuation(pos[a], pos[b]));

    // Perfect matching at the top valuation: exactly one partner each.
    std::vector<std::size_t> partner(m, m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b || valuation(pos[a], pos[b]) != vstar) continue;
            if (partner[a] != m) return std::nullopt;
            partner[a] = b;
        }
        if (partner[a] == m) return std::nullopt;
    }

    std::vector<std::uint64_t> lo, hi;
    lo.reserve(m / 2);
    hi.reserve(m / 2);
    for (std::size_t a = 0; a < m; ++a) {
        if (a < partner[a]) {
            lo.push_back(pos[a]);
            hi.push_back(pos[partner[a]]);
        }
    }
    std::sort(hi.begin(), hi.end());  // lo inherits pos order, already sorted

    auto sub_lo = recognize_rec(lo);
    if (!sub_lo) return std::nullopt;
    auto sub_hi = recognize_rec(hi);
    if (!sub_hi || *sub_lo != *sub_hi) return std::nullopt;
    if (!sub_lo->empty() && sub_lo->back() >= vstar) return std::nullopt;
    sub_lo->push_back(vstar);
    return sub_lo;
}

struct ProtoCube {
    std::vector<std::uint64_t> vertices;  // sorted
    std::vector<int> edges;               // strictly increasing
};

// Match-and-lift recursion over sorted positions within period 2^level.
std::vector<ProtoCube> decompose_rec(const std::vector<std::uint64_t>& pos, int level) {
    if (pos.empty()) return {};
    if (level == 0) return {ProtoCube{{0}, {}}};

    const std::uint64_t half = std::uint64_t{1} << (level - 1);
    std::vector<std::uint64_t> left, right;
    for (std::uint64_t p : pos) (p < half ? left : right).push_back(p < half ? p : p - half);

    // matched = left ∩ right; survivors = symmetric difference, remembering the source half
    std::vector<std::uint64_t> matched, surv_off, surv_origin;
    std::size_t i = 0, j = 0;
    while (i < left.size() || j < right.size()) {
        if (j == right.size() || (i < left.size() && left[i] < right[j])) {
            surv_off.push_back(left[i]);
            surv_origin.push_back(left[i]);
            ++i;
        } else if (i == left.size() || right[j] < left[i]) {
            surv_off.push_back(right[j]);
            surv_origin.push_back(right[j] + half);
            ++j;
        } else {
            matched.push_back(left[i]);
            ++i;
            ++j;
        }
    }

    std::vector<ProtoCube> out;
    for (ProtoCube& c : decompose_rec(matched, level - 1)) {
        ProtoCube lifted;
        lifted.vertices.reserve(c.vertices.size() * 2);
        for (std::uint64_t v : c.vertices) lifted.vertices.push_back(v);
        for (std::uint64_t v : c.vertices) lifted.vertices.push_back(v + half);
        lifted.edges = std::move(c.edges);
        lifted.edges.push_back(level - 1);
        out.push_back(std::move(lifted));
    }
    for (ProtoCube& c : decompose_rec(surv_off, level - 1)) {
        for (std::uint64_t& v : c.vertices) {
            const auto it = std::lower_bound(surv_off.begin(), surv_off.end(), v);
            v = surv_origin[static_cast<std::size_t>(it - surv_off.begin())];
        }
        std::sort(c.vertices.begin(), c.vertices.end());
        out.push_back(std::move(c));
    }
    return out;
}

std::uint64_t edge_sum(const std::vector<int>& edges) {
    std::uint64_t s = 0;
    for (int e : edges) s += std::uint64_t{1} << e;
    return s;
}

}  // namespace

LinearComplexity Cube::lc() const { return cube_lc(n, edges); }

std::uint64_t element_distance(std::uint64_t i, std::uint64_t j) {
    if (i == j) throw DomainError("element_distance requires distinct positions");
    return std::uint64_t{1} << valuation(i, j);
}

LinearComplexity cube_lc(int n, std::span<const int> edges) {
    if (n < 0 || n > PeriodicSequence::kMaxExponent)
        throw DomainError("period exponent out of range");
    check_edges(n, edges);
    std::uint64_t sum = 0;
    for (int e : edges) sum += std::uint64_t{1} << e;
    return (std::uint64_t{1} << n) - sum;
}

std::optional<Cube> recognize_cube(const SupportSet& p) {
    if (p.positions.empty()) throw DomainError("recognize_cube requires a nonempty support");
    auto edges = recognize_rec(p.positions);
    if (!edges) return std::nullopt;
    if (!edges->empty() && edges->back() >= p.n) return std::nullopt;  // edge beyond the period
    Cube c;
    c.n = p.n;
    c.vertices = p.positions;
    c.edges = std::move(*edges);
    return c;
}

PeriodicSequence materialize(const Cube& c) {
    PeriodicSequence s(c.n);
    for (std::uint64_t v : c.vertices) s.set_bit(v, true);
    return s;
}

Cube construct_cube(int n, std::span<const int> edges, std::uint64_t anchor,
                    std::span<const std::uint64_t> offsets) {
    if (n < 1 || n > PeriodicSequence::kMaxExponent)
        throw DomainError("period exponent out of range");
    check_edges(n, edges);
    const std::uint64_t period = std::uint64_t{1} << n;
    if (anchor >= period) throw DomainError("anchor out of range");
    if (offsets.size() != edges.size())
        throw DomainError("need exactly one odd offset per edge");
    for (std::uint64_t o : offsets)
        if (o == 0 || o % 2 == 0)
            throw DomainError("offsets must be odd and positive");

    const std::size_t m = edges.size();
    std::vector<std::uint64_t> vertices;
    vertices.reserve(std::size_t{1} << m);
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
        std::uint64_t v = anchor;
        for (std::size_t t = 0; t < m; ++t)
            if ((subset >> t) & 1) v += offsets[t] << edges[t];
        vertices.push_back(v % period);
    }
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw ConstructionError("generated vertices collide");

    Cube c;
    c.n = n;
    c.vertices = std::move(vertices);
    c.edges.assign(edges.begin(), edges.end());

    const auto check = recognize_cube(SupportSet{n, c.vertices});
    if (!check || check->edges != c.edges)
        throw InternalCheckError("constructed cube failed recognition with its own edges");
    return c;
}

CubeDecomposition standard_decompose(const PeriodicSequence& s) {
    CubeDecomposition d;
    d.n = s.exponent();
    const SupportSet support = support_of(s);
    if (support.positions.empty()) return d;

    std::vector<ProtoCube> protos = decompose_rec(support.positions, s.exponent());
    for (ProtoCube& pc : protos) {
        if (pc.edges.empty()) {
            if (d.lone_vertex)
                throw InternalCheckError("decomposition produced two lone vertices");
            d.lone_vertex = pc.vertices.front();
            continue;
        }
        Cube c;
        c.n = d.n;
        c.vertices = std::move(pc.vertices);
        c.edges = std::move(pc.edges);
        d.cubes.push_back(std::move(c));
    }
    if (d.lone_vertex.has_value() != (support.size() % 2 == 1))
        throw InternalCheckError("lone vertex must appear exactly for odd weight");

    // ascending LC = descending edge sum; edge sets are distinct so ties are impossible
    std::sort(d.cubes.begin(), d.cubes.end(),
              [](const Cube& a, const Cube& b) { return edge_sum(a.edges) > edge_sum(b.edges); });
    std::uint64_t covered = d.lone_vertex ? 1 : 0;
    for (std::size_t i = 0; i < d.cubes.size(); ++i) {
        covered += d.cubes[i].vertices.size();
        if (i > 0 && edge_sum(d.cubes[i].edges) >= edge_sum(d.cubes[i - 1].edges))
            throw InternalCheckError("cube linear complexities must be strictly increasing");
    }
    if (covered != support.size())
        throw InternalCheckError("decomposition does not partition the support");
    return d;
}

std::uint64_t inter_cube_distance(const Cube& a, const Cube& b) {
    for (std::uint64_t u : a.vertices)
        if (std::binary_search(b.vertices.begin(), b.vertices.end(), u))
            throw DomainError("inter_cube_distance requires disjoint supports");
    std::uint64_t best = std::uint64_t{1} << 63;
    for (std::uint64_t u : a.vertices)
        for (std::uint64_t v : b.vertices) best = std::min(best, element_distance(u, v));
    return best;
}

namespace detail {

bool prop32_condition(const CubeDecomposition& d) {
    std::unordered_set<std::uint64_t> lcs;
    for (const Cube& c : d.cubes)
        if (!lcs.insert(c.lc()).second) return false;
    if (d.cubes.size() <= 1) return true;

    int w = PeriodicSequence::kMaxExponent + 1;
    for (const Cube& c : d.cubes)
        for (int e : c.edges) w = std::min(w, e);
    const std::uint64_t min_edge_len = std::uint64_t{1} << w;
    for (std::size_t i = 0; i < d.cubes.size(); ++i)
        for (std::size_t j = i + 1; j < d.cubes.size(); ++j)
            if (inter_cube_distance(d.cubes[i], d.cubes[j]) >= min_edge_len) return false;
    return true;
}

}  // namespace detail

bool has_unique_decomposition_hint(const PeriodicSequence& s) {
    const std::uint64_t w = s.weight();
    if (w == 0 || w % 2 != 0)
        throw DomainError("uniqueness hint requires nonzero even weight");
    return detail::prop32_condition(standard_decompose(s));
}

bool longest_edge_in_smallest_cube(const CubeDecomposition& d) {
    if (d.cubes.empty()) throw DomainError("decomposition has no cubes");
    std::vector<std::uint64_t> all;
    for (const Cube& c : d.cubes) all.insert(all.end(), c.vertices.begin(), c.vertices.end());
    if (d.lone_vertex) all.push_back(*d.lone_vertex);

    int vmax = 0;
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b)
            vmax = std::max(vmax, valuation(all[a], all[b]));

    const auto& smallest = d.cubes.front().vertices;
    for (std::size_t a = 0; a < smallest.size(); ++a)
        for (std::size_t b = a + 1; b < smallest.size(); ++b)
            if (valuation(smallest[a], smallest[b]) == vmax) return true;
    return false;
}

}  // namespace seqcube
