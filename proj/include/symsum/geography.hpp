#pragma once

#include "symsum/sum.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symsum {

/// One of the seven building blocks used for the minimal-geography
/// constructions.  Concrete blocks carry a verified model and gluing
/// surface; abstract blocks (M_G, Q2, S11) carry asserted invariant records,
/// with their derivations noted.
struct BuildingBlock {
    std::string name;
    std::optional<ManifoldModel> model;
    std::optional<SurfaceInModel> surface;
    Chern chern;
    bool is_abstract = false;
    std::vector<std::string> notes;
};

/// The seven blocks (M_G, P1, P2, Q1, Q2, S11, CP2_8) with every stated
/// invariant verified by computation at construction: squares and genera via
/// adjunction, Chern pairs, the Noether congruence, surface/exceptional
/// pairings.  Any failure aborts construction (fixture corruption).
std::vector<BuildingBlock> building_blocks(i64 degree_bound = 6, int jobs = 1);

/// The realizable-region predicate: a + b = 0 (mod 12) and 0 <= a <= 2(b - r).
bool realizable(i64 a, i64 b, i64 r);

/// All realizable (a, b) in the box, sorted.
std::vector<std::pair<i64, i64>> enumerate_region(i64 a_lo, i64 a_hi, i64 b_lo, i64 b_hi, i64 r);

/// One stage of an iterated sum: the accumulated manifold (as supplied,
/// since the engine never materializes a sum) on side 1, the next block on
/// side 2.  interstage_blowups records blowups applied to the accumulated
/// manifold since the previous stage; the Chern fold checks the supplied
/// side-1 invariants against the folded ones.
struct ChainStage {
    SumDescriptor sum;
    int interstage_blowups = 0;
};

struct ChainStageReport {
    MinimalityDecision decision;
    Chern folded;
    bool chern_c1_exact = true; // false when signature additivity was assumed (squares != 0)
    bool euler_positive = false; // folded c2 > 0: not ruled over positive genus
    std::vector<std::string> assumptions;
};

struct ChainReport {
    std::vector<ChainStageReport> stages;
    Chern final_chern;
    bool all_minimal = false;
    std::vector<std::string> notes;
};

/// Runs decide_minimality at every stage, folding (c1^2, c2).  c2 folds by
/// Euler-characteristic additivity (exact for any opposite squares); c1^2
/// additionally uses signature additivity, which for nonzero opposite
/// squares is recorded as a consumed assumption.  Each intermediate c2 > 0
/// discharges the ruled alternative for the next stage.  A case (i) witness
/// stops the chain with the failing stage reported.
ChainReport verify_chain(const std::vector<ChainStage>& stages, i64 degree_bound, int jobs = 1);

/// The two-stage construction of the S11 block: the 9-fold blowup of the
/// 4-torus summed with the projective plane along a (-9)-torus against a
/// cubic, eight more blowups, and a second such sum.
std::vector<ChainStage> s11_stages();

/// Self-sum of the P1 block along its genus-2 surface (single stage).
std::vector<ChainStage> p1_selfsum_stages();

/// A chain engineered to fail: the accumulated side is blown up at a point
/// off the gluing surface, producing a case (i) witness at stage 1.
std::vector<ChainStage> failure_demo_stages();

} // namespace symsum
