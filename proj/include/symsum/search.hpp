#pragma once

#include "symsum/lattice.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace symsum {

/// One constraint of a box search: value(x) must lie in [lo, hi], where
///   value(x) = (with_square ? x^T gram x : 0) + linear . x .
/// Equality constraints (lo == hi) prune hardest; use the sentinels below
/// for one-sided ranges.
struct SearchConstraint {
    static constexpr i64 kNoBound = std::numeric_limits<i64>::max() / 4;

    bool with_square = false;
    std::vector<i64> linear; // empty means zero functional
    i64 lo = -kNoBound;
    i64 hi = kNoBound;
    std::string tag; // for diagnostics
};

/// Exhaustive search over integer coefficient vectors in [-bound, bound]^rank
/// satisfying every constraint, with interval-arithmetic pruning on partial
/// assignments.  Coordinates are assigned in basis order and values ascend,
/// so single-threaded traversal emits solutions in lexicographic order.
///
/// Parallel runs partition the first coordinate across workers; collectors
/// merge per-prefix results in coordinate order, so the output is
/// deterministic regardless of worker count.
class BoxSearch {
public:
    BoxSearch(LatticePtr lattice, i64 bound);

    void add(SearchConstraint c);

    /// Collects every solution, lexicographically sorted.  `jobs` <= 1 runs
    /// sequentially.
    std::vector<std::vector<i64>> collect(int jobs = 1) const;

    /// First solution in lexicographic order, if any.
    std::optional<std::vector<i64>> first(int jobs = 1) const;

    /// Visits every solution in lexicographic order (sequential).  The
    /// visitor returns false to stop early.
    void visit(const std::function<bool(const std::vector<i64>&)>& visitor) const;

    /// Number of box points enumerated fully (diagnostics for tests).
    static thread_local unsigned long long nodes_visited;

private:
    LatticePtr lattice_;
    i64 bound_;
    std::vector<SearchConstraint> constraints_;
};

} // namespace symsum
