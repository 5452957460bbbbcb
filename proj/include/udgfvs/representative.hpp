#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "udgfvs/graph.hpp"

namespace udgfvs {

// A partition of the kept vertices 0..s-1 of a DP cell, as block labels in
// canonical form: labels appear in first-occurrence order 0, 1, 2, ...
using BlockLabels = std::vector<std::uint8_t>;

void canonicalize(BlockLabels& labels);
std::size_t block_count(const BlockLabels& labels);

// Union of two forests glued on the same ground set, or nullopt if gluing
// closes a cycle.
std::optional<BlockLabels> glue_acyclic(const BlockLabels& a, const BlockLabels& b);

struct TableRow {
    BlockLabels blocks;
    int value = 0;  // deletions, minimized
};

// Rows sharing one kept-vertex signature.
struct RepresentativeTable {
    std::vector<Vertex> kept;
    std::vector<TableRow> rows;
    bool reduced = false;
};

// Largest transversal-space dimension (bits) a block-count group may have for
// the elimination to run; bigger groups are left unreduced.
constexpr std::size_t kMaxRankDimension = std::size_t{1} << 20;

// Indices (ascending) of a subset of rows that is representative for acyclic
// gluing: for every partition q of the ground set, the minimum value over rows
// whose gluing with q is acyclic is attained by a kept row. At most
// 2^(s-1) rows survive, s = ground set size.
//
// Rows are grouped by block count b. A partition is encoded by the GF(2)
// indicator vector of its transversals (b-sets containing element 0 and
// meeting every block once), which are exactly the nonzero maximal minors of
// a spanning forest in the binary graphic matroid. Rows are inserted in
// (value, labels) order and kept iff linearly independent of those before.
std::vector<std::size_t> representative_rows(std::span<const TableRow> rows);

// Dedupes identical partitions (keeping the smallest value), then keeps the
// representative rows.
RepresentativeTable rank_reduce(const RepresentativeTable& table);

}  // namespace udgfvs
