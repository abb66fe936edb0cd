#include "nearsymp/contact_kit.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace nearsymp {

LegendrianState connect_sum(const LegendrianState& a, const LegendrianState& b) {
    return {a.tb + b.tb + 1, a.rot + b.rot};
}

StabilizationPlan plan_stabilization(const LegendrianState& current, const LegendrianState& target, bool overtwisted) {
    const Integer dtb = target.tb - current.tb;
    const Integer drot = target.rot - current.rot;
    if (mod2(dtb + drot) != 0)
        throw std::invalid_argument("plan_stabilization: parity violation (Δtb + Δrot = " +
                                    std::to_string(dtb + drot) + " is odd)");
    StabilizationPlan plan;
    if (!overtwisted) {
        if (-dtb < std::llabs(drot))
            throw std::invalid_argument("plan_stabilization: infeasible in a tight structure (−Δtb = " +
                                        std::to_string(-dtb) + " < |Δrot| = " + std::to_string(std::llabs(drot)) + ")");
        plan.p = (-dtb + drot) / 2;
        plan.q = (-dtb - drot) / 2;
        return plan;
    }
    // Minimum total N = max(|Δtb|, |Δrot|); the tb equation then fixes p+q and r+s.
    const Integer n = std::max(std::llabs(dtb), std::llabs(drot));
    const Integer pq = (n - dtb) / 2;
    const Integer rs = (n + dtb) / 2;
    // u = p − q, w = r − s with u + w = Δrot; smallest admissible u gives the lexicographic minimum.
    Integer u = std::max(-pq, drot - rs);
    if (mod2(u - pq) != 0) ++u;
    const Integer w = drot - u;
    plan.p = (pq + u) / 2;
    plan.q = pq - plan.p;
    plan.r = (rs + w) / 2;
    plan.s = rs - plan.r;
    return plan;
}

LegendrianState replay_plan(const LegendrianState& start, const StabilizationPlan& plan) {
    LegendrianState k = start;
    for (Integer i = 0; i < plan.p; ++i) k = connect_sum(k, kStabilizerNeg);
    for (Integer i = 0; i < plan.q; ++i) k = connect_sum(k, kStabilizerNegBar);
    for (Integer i = 0; i < plan.r; ++i) k = connect_sum(k, kTwistPos);
    for (Integer i = 0; i < plan.s; ++i) k = connect_sum(k, kTwistNeg);
    return k;
}

Integer handle_framing(Integer tb, BoundarySign sign) {
    return sign == BoundarySign::Positive ? tb - 1 : tb + 1;
}

Integer transverse_unknot(int sign, bool overtwisted) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("transverse_unknot: sign must be ±1");
    if (sign == 1 && !overtwisted)
        throw std::invalid_argument("transverse_unknot: a self-linking +1 unknot requires an overtwisted structure");
    return sign;
}

Integer obstruction_from_lk(Integer lk) { return lk; }

ObstructionRecord theta_from_h(Integer h) { return {h, -2 * h - 1}; }

Integer total_obstruction(const std::vector<int>& signs, Integer d) {
    Integer sum = 0;
    for (int s : signs) sum += s;
    return d - sum;
}

std::pair<Integer, Integer> split_obstruction(Integer h, Integer k1) { return {k1, h - k1}; }

Integer obstruction_from_linking_matrix(const SymmetricForm& l) {
    Integer sum = 0;
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = 0; j < l.dim(); ++j) sum += l.matrix(i, j);
    return sum;
}

Integer o_from_counts(Integer e_minus, Integer h_minus) {
    if (e_minus < 0 || h_minus < 0) throw std::invalid_argument("o_from_counts: counts must be non-negative");
    return -1 + 2 * (e_minus - h_minus);
}

SymmetricForm canonical_anticomplex_link(Integer e_minus, Integer h_minus) {
    if (e_minus < 0 || h_minus < 0) throw std::invalid_argument("canonical_anticomplex_link: negative count");
    const auto n = static_cast<std::size_t>(1 + e_minus + h_minus);
    IntMatrix m(n, n);
    m(0, 0) = -1;
    for (std::size_t i = 1; i < n; ++i) {
        const Integer lk = i <= static_cast<std::size_t>(e_minus) ? 1 : -1;
        m(0, i) = m(i, 0) = lk;
    }
    return SymmetricForm{m, {}};
}

}  // namespace nearsymp
