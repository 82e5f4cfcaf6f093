#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "seqcube/bitseq.hpp"
#include "seqcube/linear_complexity.hpp"

namespace seqcube {

/// An m-cube: 2^m positions whose pairwise structure is a nested perfect
/// matching with strictly increasing edge exponents i_1 < ... < i_m < n.
/// A 0-cube (no edges) is a single vertex.
struct Cube {
    int n = 0;
    std::vector<std::uint64_t> vertices;  // sorted ascending, size 2^edges.size()
    std::vector<int> edges;               // strictly increasing exponents, each < n

    int dimension() const { return static_cast<int>(edges.size()); }
    std::uint64_t anchor() const { return vertices.front(); }
    LinearComplexity lc() const;
};

/// Disjoint cubes sorted by strictly increasing linear complexity, plus one
/// lone vertex exactly when the source sequence has odd weight.
struct CubeDecomposition {
    int n = 0;
    std::vector<Cube> cubes;
    std::optional<std::uint64_t> lone_vertex;
};

/// 2^y where |j - i| = (2x+1) * 2^y. Requires i != j.
std::uint64_t element_distance(std::uint64_t i, std::uint64_t j);

/// 2^n - sum of 2^{i_t}; empty edge list -> 2^n. Edges must be strictly
/// increasing and below n.
LinearComplexity cube_lc(int n, std::span<const int> edges);

/// Structural cube recognition. Returns the cube with its unique edge set,
/// or nullopt when the support is not a cube (a normal result).
///
/// Procedure: a singleton is a 0-cube. Otherwise the size must be a power of
/// two; take v* = the maximum 2-adic valuation over all pairwise differences,
/// require every element to have exactly one partner at valuation v*, split
/// each pair into (min, max) halves, require both halves to be cubes with
/// identical edge sets, and append v* as the top edge.
std::optional<Cube> recognize_cube(const SupportSet& p);

/// Sequence whose support is exactly the cube's vertex set.
PeriodicSequence materialize(const Cube& c);

/// Vertex set { anchor + sum over T of offsets[t] * 2^{edges[t]} mod 2^n :
/// T subset of edges }. Offsets must be odd and positive. Throws
/// ConstructionError on vertex collision; the result is checked against
/// recognize_cube (disagreement is an internal error).
Cube construct_cube(int n, std::span<const int> edges, std::uint64_t anchor,
                    std::span<const std::uint64_t> offsets);

/// Standard cube decomposition (Games-Chan driven match-and-lift recursion).
///
/// At half length H: positions matched across the two halves leave as pairs;
/// the matched offsets are decomposed over period H and every resulting cube
/// is lifted by {v, v+H} with edge exponent log2(H); unmatched survivors fold
/// to offsets, continue, and lift back through their unique source half.
/// Zero sequence -> empty decomposition.
CubeDecomposition standard_decompose(const PeriodicSequence& s);

/// Minimum element_distance over all cross pairs. Requires disjoint supports.
std::uint64_t inter_cube_distance(const Cube& a, const Cube& b);

/// Sufficient condition for decomposition uniqueness: the standard cubes have
/// pairwise distinct LCs, the minimum edge length over all cubes is 2^w, and
/// every pairwise inter-cube distance is < 2^w. False means "not established",
/// not "not unique". Requires nonzero even weight.
bool has_unique_decomposition_hint(const PeriodicSequence& s);

/// True iff the maximum element_distance over all vertex pairs of the whole
/// support is realized inside the cube of minimal LC. Requires >= 1 cube.
bool longest_edge_in_smallest_cube(const CubeDecomposition& d);

namespace detail {

/// The uniqueness condition applied to an existing decomposition.
bool prop32_condition(const CubeDecomposition& d);

}  // namespace detail

}  // namespace seqcube
