#pragma once

#include <string_view>
#include <vector>

namespace hypermaps {

enum class CellType { vertex, hyperedge, face };

std::string_view to_string(CellType t);

/// Accepts "vertex", "edge", "hyperedge", "face". Throws ParseError otherwise.
CellType cell_type_from_string(std::string_view name);

/// Stable name for a cell: its type plus the smallest flag (tau model),
/// half-edge (sigma model) or graph vertex it contains. Partial duality
/// keeps the supports of cells of the dualized type, so the id survives it.
struct CellRef {
    CellType type;
    int canonical_id;

    bool operator==(const CellRef&) const = default;
};

struct Cell {
    CellRef ref;
    /// tau model: the flag orbit, ascending. sigma model: the cycle, starting
    /// at its minimum and following the permutation.
    std::vector<int> members;
    int valency = 0;
};

}  // namespace hypermaps
