#pragma once

#include "nearsymp/clause.hpp"
#include "nearsymp/topo_core.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nearsymp {

struct SurfaceSpec {
    std::string label;
    Integer genus = 0;
    IntVector cls;  // homology class in the ambient H_2 basis
    Integer self_intersection = 0;
    bool uses_up_3handles = false;

    bool operator==(const SurfaceSpec&) const = default;
};

/// Extra prescribed value c·a = value for the spin^c class.
struct PairingConstraint {
    std::string label;
    IntVector cls;
    Integer value = 0;

    bool operator==(const PairingConstraint&) const = default;
};

struct ConfigurationGraph {
    std::vector<SurfaceSpec> vertices;
    /// Each pair is one positive transverse intersection point.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    /// Side conditions carried with the configuration (e.g. from a capping).
    std::vector<PairingConstraint> side_conditions;

    bool operator==(const ConfigurationGraph&) const = default;
};

struct CirclePlan {
    std::vector<int> signs;
    std::vector<double> levels;  // n+1 values from 0.9 to 1.0
    Integer d = 0;

    bool operator==(const CirclePlan&) const = default;
};

struct HandleCounts {
    std::vector<Integer> counts = {0, 0, 0, 0, 0};
    IntVector framings;
    /// Distinguished pair with boundary(2-cell) = 1-cell; absent when not applicable.
    std::optional<std::size_t> distinguished_two_cell;
    std::optional<std::size_t> distinguished_one_cell;

    bool operator==(const HandleCounts&) const = default;
};

Integer adjunction_target(Integer genus, Integer self_int, bool stabilized);

struct ConstraintReport {
    std::vector<Clause> clauses;
    bool pass() const { return all_pass(clauses); }
};

/// Surface 0 is held to the stabilized target, the others to the unstabilized one.
ConstraintReport check_spinc_constraints(const IntVector& c, const ConfigurationGraph& config,
                                         const SymmetricForm& q,
                                         const std::vector<PairingConstraint>& extra = {});

Integer compute_d(Integer c_squared, Integer sigma, Integer chi);

CirclePlan plan_circles(Integer d);
CirclePlan custom_circle_plan(const std::vector<int>& signs);

Integer genus_reserve(Integer g, Integer l);
HandleCounts e_decomposition(Integer g, Integer m);
Integer stabilized_surface_genus(Integer g);

SymmetricForm plumbing_form(const ConfigurationGraph& config);
/// Structural validity (indices in range, no self-edges, positive row sums).
ValidationReport validate_configuration(const ConfigurationGraph& config);

ConfigurationGraph cap_corollary_config(Integer m, Integer g);

/// Case 1, 2 or 3 of the sphere-configuration criteria; nullopt when none applies.
std::optional<int> noextragenus_case(const ConfigurationGraph& config);

using IntegerCochain = IntVector;

IntegerCochain choose_cocycle(const IntegerCochain& x0, const IntegerCochain& x_prime, const ChainComplex& c);

IntegerCochain torsion_adjust(const IntegerCochain& x0, const IntegerCochain& z, const ChainComplex& c,
                              std::size_t p_plus_1, std::size_t b);

/// True when delta^2 x = 0.
bool is_two_cocycle(const IntegerCochain& x, const ChainComplex& c);

}  // namespace nearsymp
