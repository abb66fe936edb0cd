#pragma once

#include "nearsymp/topo_core.hpp"

#include <utility>
#include <vector>

namespace nearsymp {

struct LegendrianState {
    Integer tb = 0;
    Integer rot = 0;

    bool operator==(const LegendrianState&) const = default;
};

/// Counts of connected summands K_{-2,+1}, K_{-2,-1}, K_{0,+1}, K_{0,-1}.
struct StabilizationPlan {
    Integer p = 0, q = 0, r = 0, s = 0;

    Integer total() const { return p + q + r + s; }
    Integer delta_tb() const { return -(p + q) + (r + s); }
    Integer delta_rot() const { return (p - q) + (r - s); }
    bool operator==(const StabilizationPlan&) const = default;
};

/// The four summand knots in the order p, q, r, s.
inline constexpr LegendrianState kStabilizerNeg{-2, +1};
inline constexpr LegendrianState kStabilizerNegBar{-2, -1};
inline constexpr LegendrianState kTwistPos{0, +1};
inline constexpr LegendrianState kTwistNeg{0, -1};

struct ObstructionRecord {
    Integer h = 0;
    Integer theta_times_2 = -1;

    bool operator==(const ObstructionRecord&) const = default;
};

enum class BoundarySign { Positive, Negative };

LegendrianState connect_sum(const LegendrianState& a, const LegendrianState& b);

StabilizationPlan plan_stabilization(const LegendrianState& current, const LegendrianState& target, bool overtwisted);

/// Applies the plan to `start` by repeated connected sum.
LegendrianState replay_plan(const LegendrianState& start, const StabilizationPlan& plan);

Integer handle_framing(Integer tb, BoundarySign sign);

Integer transverse_unknot(int sign, bool overtwisted);

Integer obstruction_from_lk(Integer lk);

ObstructionRecord theta_from_h(Integer h);

Integer total_obstruction(const std::vector<int>& signs, Integer d);

std::pair<Integer, Integer> split_obstruction(Integer h, Integer k1);

Integer obstruction_from_linking_matrix(const SymmetricForm& l);

Integer o_from_counts(Integer e_minus, Integer h_minus);

/// L0 framed −1, one 0-framed meridian per anticomplex point (lk +1 elliptic,
/// lk −1 hyperbolic), meridians mutually unlinked.
SymmetricForm canonical_anticomplex_link(Integer e_minus, Integer h_minus);

}  // namespace nearsymp
