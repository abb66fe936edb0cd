#pragma once

#include "nearsymp/clause.hpp"
#include "nearsymp/contact_kit.hpp"
#include "nearsymp/local_model.hpp"
#include "nearsymp/spinc_planner.hpp"
#include "nearsymp/topo_core.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nearsymp {

struct FramedLink {
    IntVector framings;
    IntMatrix linkings;

    bool operator==(const FramedLink&) const = default;
};

/// Cell complex of the Morse function used by the construction, with its
/// distinguished pair (2-cell whose boundary is exactly one 1-cell).
struct ConstructionData {
    ChainComplex complex;
    IntVector framings;  // one per 2-cell
    std::vector<std::string> cell_labels;
    std::size_t two_cell = 0;
    std::size_t one_cell = 0;
    Integer complement_one_handles = 0;

    bool operator==(const ConstructionData&) const = default;
};

struct SpincData {
    IntVector c;
    std::vector<PairingConstraint> pairings;
    std::optional<IntVector> x0;
    std::optional<IntVector> x_prime;
    std::optional<IntVector> z;

    bool operator==(const SpincData&) const = default;
};

struct InputOptions {
    std::optional<std::vector<int>> signs;
    ProfileParams profile;
    double tolerance = 1e-12;
    int grid = 200;
    int samples = 10000;
    std::uint64_t seed = 20240611;
    double eps_prime = 0.1;

    bool operator==(const InputOptions&) const = default;
};

struct ManifoldInput {
    std::string name;
    std::optional<SymmetricForm> intersection_form;
    std::optional<FramedLink> framed_link;
    Integer b1 = 0;
    Integer b3 = 0;
    std::vector<Integer> handle_counts;
    ConfigurationGraph configuration;
    std::optional<ConstructionData> construction;
    SpincData spinc;
    InputOptions options;

    bool operator==(const ManifoldInput&) const = default;
};

/// Raised when a hard precondition fails; carries the failing clauses.
class CertificationAborted : public std::runtime_error {
public:
    CertificationAborted(const std::string& what, std::vector<Clause> failed)
        : std::runtime_error(what), failed_(std::move(failed)) {}
    const std::vector<Clause>& failed_clauses() const { return failed_; }

private:
    std::vector<Clause> failed_;
};

struct CircleRecord {
    std::size_t index = 0;
    double level = 0;
    double lower = 0, upper = 0;
    int lk = 0;
    bool ambient_overtwisted = false;
    ObstructionRecord obstruction;
};

struct HandleRecord {
    std::size_t cell = 0;
    std::string label;
    Integer framing = 0;
    LegendrianState initial;
    LegendrianState target;
    StabilizationPlan plan;             // from the initial Legendrian realization
    StabilizationPlan plan_from_unknot; // from the standard unknot (−1, 0)
};

struct Invariants {
    Integer chi = 0;
    Integer sigma = 0;
    Integer b2_plus = 0;
    Integer c_squared = 0;
    Integer d = 0;
};

struct ObstructionLedger {
    Integer sum_h = 0;
    Integer theta_sum_times_2 = 0;
    Integer residual = 0;
};

struct CocycleData {
    IntVector x0, x_prime, x;
    std::optional<IntVector> z;
    std::optional<IntVector> x1;
};

struct ConstructionCertificate {
    std::string input_name;
    std::uint64_t seed = 0;
    ProfileParams profile;
    std::vector<Clause> preconditions;
    Invariants invariants;
    CirclePlan plan;
    std::vector<CircleRecord> circles;
    ConstructionData construction;
    CocycleData cocycle;
    std::vector<HandleRecord> handles;
    ObstructionLedger obstruction;
    std::vector<Clause> obstruction_clauses;
    std::vector<Clause> e_side;
    std::vector<Clause> gluing;
    std::vector<Clause> cohomology;
    std::vector<Clause> configuration_clauses;
    BatteryReport battery;
    bool pass = false;

    /// Every clause in certificate order.
    std::vector<Clause> all_clauses() const;
};

/// Intersection form from the input, either given directly or read off the framed link.
SymmetricForm resolve_form(const ManifoldInput& in);

/// Complex used for the construction: the one supplied, or the 1-/3-handle-free
/// presentation augmented by a cancelling 1-/2-handle pair that the surface's
/// 2-handle is slid over.
ConstructionData resolve_construction(const ManifoldInput& in, const SymmetricForm& q);

ConstructionCertificate certify(const ManifoldInput& in);

/// Plain-text summary of a certificate.
std::string render_report(const ConstructionCertificate& cert);

}  // namespace nearsymp
