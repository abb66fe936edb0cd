#include "nearsymp/certify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace nearsymp {

namespace {

std::string vec_str(const IntVector& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

Clause checked(std::string id, std::string statement, bool pass, std::string lhs = {}, std::string rhs = {},
               std::string note = {}) {
    return Clause{std::move(id), std::move(statement), ClauseKind::Checked, pass, std::move(lhs), std::move(rhs),
                  std::move(note)};
}

Clause int_equation(std::string id, std::string statement, Integer lhs, Integer rhs, const std::string& lhs_name) {
    return checked(std::move(id), std::move(statement), lhs == rhs, lhs_name + " = " + std::to_string(lhs),
                   std::to_string(rhs));
}

Clause assumed(std::string id, std::string statement, std::string note) {
    return Clause{std::move(id), std::move(statement), ClauseKind::Assumed, true, {}, {}, std::move(note)};
}

Clause recorded(std::string id, std::string statement, std::string note, bool pass = true) {
    return Clause{std::move(id), std::move(statement), ClauseKind::Recorded, pass, {}, {}, std::move(note)};
}

[[noreturn]] void abort_with(const std::vector<Clause>& clauses) {
    std::vector<Clause> failed;
    for (const auto& c : clauses)
        if (!c.pass) failed.push_back(c);
    std::ostringstream os;
    os << "precondition failed: ";
    for (std::size_t i = 0; i < failed.size(); ++i) {
        const auto& c = failed[i];
        os << (i ? "; " : "") << c.id;
        if (!c.lhs.empty()) os << " (" << c.lhs << " ≠ " << c.rhs << ")";
        else if (!c.note.empty()) os << " (" << c.note << ")";
    }
    throw CertificationAborted(os.str(), failed);
}

// Homotopy model of a plumbed neighbourhood: one vertex per surface and per
// intersection point, two arcs per intersection point, 2g loops and one
// 2-cell per surface.
ChainComplex neighborhood_complex(const ConfigurationGraph& cfg) {
    const std::size_t k = cfg.vertices.size(), e = cfg.edges.size();
    Integer loops = 0;
    for (const auto& v : cfg.vertices) loops += 2 * v.genus;
    const auto n0 = static_cast<std::size_t>(k + e);
    const auto n1 = static_cast<std::size_t>(loops) + 2 * e;
    ChainComplex c = zero_boundary_complex({static_cast<Integer>(n0), static_cast<Integer>(n1),
                                            static_cast<Integer>(k), 0, 0});
    IntMatrix d1(n0, n1);
    std::size_t col = static_cast<std::size_t>(loops);
    for (std::size_t i = 0; i < e; ++i) {
        const auto [a, b] = cfg.edges[i];
        for (std::size_t end : {a, b}) {
            d1(end, col) += 1;
            d1(k + i, col) -= 1;
            ++col;
        }
    }
    c.boundary[1] = d1;
    return c;
}

std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

}  // namespace

SymmetricForm resolve_form(const ManifoldInput& in) {
    if (!in.intersection_form && !in.framed_link)
        throw std::invalid_argument("intersection_form: missing (supply intersection_form or framed_link)");
    std::optional<SymmetricForm> from_link;
    if (in.framed_link) from_link = intersection_form_from_link(in.framed_link->framings, in.framed_link->linkings);
    if (in.intersection_form) {
        SymmetricForm q = make_form(in.intersection_form->matrix, in.intersection_form->labels);
        if (from_link && from_link->matrix != q.matrix)
            throw std::invalid_argument("intersection_form: disagrees with the framed_link presentation");
        return q;
    }
    return *from_link;
}

ConstructionData resolve_construction(const ManifoldInput& in, const SymmetricForm& q) {
    if (in.construction) return *in.construction;
    const std::size_t n = q.dim();
    const std::vector<Integer> presentation{1, 0, static_cast<Integer>(n), 0, 1};
    if (in.handle_counts != presentation)
        throw std::invalid_argument(
            "construction: required unless the presentation has no 1- or 3-handles (handle_counts = (1,0,n,0,1))");
    if (in.configuration.vertices.empty()) throw std::invalid_argument("configuration.surfaces: empty");
    const SurfaceSpec& s = in.configuration.vertices.front();
    std::size_t j = n;
    for (std::size_t i = 0; i < n && i < s.cls.size(); ++i) {
        if (s.cls[i] == 1 && j == n) j = i;
        else if (s.cls[i] != 0) j = n + 1;
    }
    if (j >= n || s.genus != 0)
        throw std::invalid_argument("construction: required unless the first surface is a sphere in a basis class");

    auto label = [&](std::size_t i) { return i < q.labels.size() ? q.labels[i] : "e" + std::to_string(i + 1); };
    ConstructionData cd;
    cd.complex = zero_boundary_complex({1, 1, static_cast<Integer>(n + 1), 0, 1});
    IntMatrix d2(1, n + 1);
    cd.framings.push_back(0);
    cd.cell_labels.push_back("cancelling 2-handle");
    for (std::size_t i = 0; i < n; ++i)
        if (i != j) {
            cd.framings.push_back(q.matrix(i, i));
            cd.cell_labels.push_back(label(i));
        }
    cd.framings.push_back(q.matrix(j, j));
    cd.cell_labels.push_back(label(j) + " (surface handle)");
    d2(0, 0) = 1;
    d2(0, n) = 1;
    cd.complex.boundary[2] = d2;
    cd.two_cell = n;
    cd.one_cell = 0;
    return cd;
}

namespace {

// Default x0: values of c on the presentation handles, 0 on the cancelling one.
IntVector default_x0(const ManifoldInput& in, const SymmetricForm& q) {
    const SurfaceSpec& s = in.configuration.vertices.front();
    const IntVector qc = q.matrix * in.spinc.c;
    IntVector x0{0};
    std::size_t j = 0;
    while (s.cls[j] != 1) ++j;
    for (std::size_t i = 0; i < q.dim(); ++i)
        if (i != j) x0.push_back(qc[i]);
    x0.push_back(qc[j]);
    return x0;
}

}  // namespace

std::vector<Clause> ConstructionCertificate::all_clauses() const {
    std::vector<Clause> out = preconditions;
    for (const auto* list : {&obstruction_clauses, &e_side, &gluing, &cohomology, &configuration_clauses})
        out.insert(out.end(), list->begin(), list->end());
    return out;
}

ConstructionCertificate certify(const ManifoldInput& in) {
    ConstructionCertificate cert;
    cert.input_name = in.name;
    cert.seed = in.options.seed;
    cert.profile = in.options.profile;

    const SymmetricForm q = resolve_form(in);
    if (in.spinc.c.size() != q.dim()) throw std::invalid_argument("spinc.c: length differs from the form dimension");
    if (in.handle_counts.size() != 5) throw std::invalid_argument("handle_counts: expected five entries");
    if (in.configuration.vertices.empty()) throw std::invalid_argument("configuration.surfaces: empty");

    // ---- topology and spin^c preconditions
    auto& pre = cert.preconditions;
    const ChainComplex handles = zero_boundary_complex(in.handle_counts);
    const Integer chi = euler_characteristic(handles);
    const Integer sigma = signature(q);
    const Integer bplus = b2_plus(q);
    const Integer c2 = pairing(in.spinc.c, in.spinc.c, q);
    pre.push_back(checked("b2-plus", "b₂⁺ > 0", bplus > 0, "b₂⁺ = " + std::to_string(bplus), "> 0"));
    pre.push_back(int_equation("euler-homology", "χ from handles equals 2 − b₁ − b₃ + b₂", chi,
                               2 - in.b1 - in.b3 + static_cast<Integer>(q.dim()), "χ"));
    pre.push_back(checked("euler-signature-parity", "χ + σ is even", mod2(chi + sigma) == 0,
                          "χ + σ = " + std::to_string(chi + sigma), "even"));

    const ConstraintReport spinc = check_spinc_constraints(in.spinc.c, in.configuration, q, in.spinc.pairings);
    pre.insert(pre.end(), spinc.clauses.begin(), spinc.clauses.end());

    const SurfaceSpec& s1 = in.configuration.vertices.front();
    pre.push_back(recorded("uses-up-3-handles", "the surface configuration uses up all 3-handles",
                           s1.uses_up_3handles ? "asserted by the input" : "not asserted by the input",
                           s1.uses_up_3handles));
    const Integer d_num = c2 - 3 * sigma - 2 * chi;
    pre.push_back(checked("d-divisibility", "c² − 3σ − 2χ ≡ 0 mod 4", d_num % 4 == 0,
                          "c² − 3σ − 2χ = " + std::to_string(d_num), "≡ 0 mod 4"));
    if (!all_pass(pre)) abort_with(pre);

    cert.invariants = {chi, sigma, bplus, c2, compute_d(c2, sigma, chi)};
    const Integer d = cert.invariants.d;

    // ---- construction complex and cocycles
    cert.construction = resolve_construction(in, q);
    const ChainComplex& cx = cert.construction.complex;
    const auto n2 = static_cast<std::size_t>(cx.cells(2));
    {
        std::vector<Clause> cx_clauses;
        const auto v = validate_complex(cx);
        cx_clauses.push_back(checked("complex-valid", "∂∘∂ = 0 and shapes match", v.valid, {}, {},
                                     v.valid ? "" : v.violations.front()));
        cx_clauses.push_back(checked("framings-per-cell", "one framing per 2-cell",
                                     cert.construction.framings.size() == n2,
                                     std::to_string(cert.construction.framings.size()), std::to_string(n2)));
        bool pair_ok = cert.construction.two_cell < n2 &&
                       cert.construction.one_cell < static_cast<std::size_t>(cx.cells(1));
        if (pair_ok) {
            const IntMatrix d2 = cx.boundary_or_zero(2);
            for (std::size_t r = 0; r < d2.rows(); ++r)
                pair_ok = pair_ok && d2(r, cert.construction.two_cell) == (r == cert.construction.one_cell ? 1 : 0);
        }
        cx_clauses.push_back(checked("distinguished-pair", "∂C²_{p+1} = C¹₁ for the distinguished pair", pair_ok,
                                     "2-cell " + std::to_string(cert.construction.two_cell),
                                     "1-cell " + std::to_string(cert.construction.one_cell)));
        pre.insert(pre.end(), cx_clauses.begin(), cx_clauses.end());
        if (!all_pass(cx_clauses)) abort_with(cx_clauses);
    }

    CocycleData& co = cert.cocycle;
    co.x0 = in.spinc.x0 ? *in.spinc.x0 : (in.construction ? IntVector{} : default_x0(in, q));
    if (co.x0.empty()) throw std::invalid_argument("spinc.x0: required when a construction complex is supplied");
    if (in.spinc.x_prime) {
        co.x_prime = *in.spinc.x_prime;
    } else {
        for (Integer f : cert.construction.framings) co.x_prime.push_back(mod2(f));
    }
    if (co.x0.size() != n2 || co.x_prime.size() != n2)
        throw std::invalid_argument("spinc: x0 and x_prime need one entry per 2-cell");
    {
        std::vector<Clause> cc;
        cc.push_back(checked("x0-cocycle", "δx₀ = 0", is_two_cocycle(co.x0, cx)));
        bool parity = true;
        for (std::size_t i = 0; i < n2; ++i) parity = parity && mod2(co.x_prime[i]) == mod2(cert.construction.framings[i]);
        cc.push_back(checked("legendrian-parity", "x′(C²ᵢ) ≡ framing of C²ᵢ mod 2 (tb + rot odd)", parity,
                             "x′ = " + vec_str(co.x_prime), "framings = " + vec_str(cert.construction.framings)));
        pre.insert(pre.end(), cc.begin(), cc.end());
        if (!all_pass(cc)) abort_with(cc);
        try {
            co.x = choose_cocycle(co.x0, co.x_prime, cx);
        } catch (const std::runtime_error& e) {
            std::vector<Clause> fail{checked("cocycle-choice", "x₀ − x′ ≡ δy mod 2 is solvable", false, {}, {}, e.what())};
            pre.insert(pre.end(), fail.begin(), fail.end());
            abort_with(fail);
        }
    }
    bool congruent = true;
    for (std::size_t i = 0; i < n2; ++i) congruent = congruent && mod2(co.x[i] - co.x_prime[i]) == 0;
    IntVector diff(n2);
    for (std::size_t i = 0; i < n2; ++i) diff[i] = co.x0[i] - co.x[i];
    pre.push_back(checked("cocycle-congruence", "x ≡ x′ mod 2", congruent, "x = " + vec_str(co.x), vec_str(co.x_prime)));
    pre.push_back(checked("cocycle-closed", "δx = 0", is_two_cocycle(co.x, cx)));
    pre.push_back(checked("cocycle-class", "[x] = [x₀] (x₀ − x ∈ im δ over Z)",
                          solve_integer(coboundary_matrix(cx, 1), diff).has_value(), "x₀ − x = " + vec_str(diff)));
    IntVector rot_targets = co.x;
    if (in.spinc.z) {
        co.z = *in.spinc.z;
        co.x1 = torsion_adjust(co.x, *co.z, cx, cert.construction.two_cell, cert.construction.one_cell);
        bool same_parity = true;
        for (std::size_t i = 0; i < n2; ++i) same_parity = same_parity && mod2((*co.x1)[i] - co.x[i]) == 0;
        pre.push_back(checked("torsion-adjust-parity", "x₁ ≡ x mod 2", same_parity, "x₁ = " + vec_str(*co.x1)));
        rot_targets = *co.x1;
    }

    // ---- circles and the obstruction ledger
    cert.plan = in.options.signs ? custom_circle_plan(*in.options.signs) : plan_circles(d);
    const LevelReport levels = level_schedule_check(cert.plan);
    cert.obstruction_clauses.push_back(checked("level-schedule", "one circle per level interval in [0.9, 1]",
                                               levels.pass, {}, {},
                                               levels.violations.empty() ? "" : levels.violations.front()));
    bool lk_ok = true;
    for (const auto& lc : levels.circles) {
        CircleRecord rec;
        rec.index = lc.index;
        rec.level = lc.level;
        rec.lower = lc.lower;
        rec.upper = lc.upper;
        rec.ambient_overtwisted = lc.index > 1;  // every twist after the first sits in an overtwisted structure
        try {
            rec.lk = static_cast<int>(transverse_unknot(lc.lk, rec.ambient_overtwisted));
        } catch (const std::invalid_argument&) {
            lk_ok = false;
            rec.lk = lc.lk;
        }
        rec.obstruction = theta_from_h(obstruction_from_lk(rec.lk));
        cert.obstruction.sum_h += rec.obstruction.h;
        cert.obstruction.theta_sum_times_2 += rec.obstruction.theta_times_2;
        cert.circles.push_back(rec);
    }
    cert.obstruction.residual = total_obstruction(cert.plan.signs, d);
    auto& ob = cert.obstruction_clauses;
    ob.push_back(checked("transverse-unknots", "each circle has a transverse unknot with lk = lᵢ available", lk_ok));
    ob.push_back(int_equation("circle-count", "Σ lᵢ = d", cert.plan.d, d, "Σ lᵢ"));
    ob.push_back(int_equation("obstruction-sum", "Σ h(J|∂Bᵢ) = d", cert.obstruction.sum_h, d, "Σ h"));
    ob.push_back(int_equation("theta-sum", "Σ 2θᵢ = −2Σh − n", cert.obstruction.theta_sum_times_2,
                              -2 * cert.obstruction.sum_h - static_cast<Integer>(cert.circles.size()), "Σ 2θ"));
    ob.push_back(int_equation("obstruction-residual", "4-handle extension obstruction d − Σ lᵢ vanishes",
                              cert.obstruction.residual, 0, "residual"));

    // ---- 2-handles: framings, rotation targets, stabilizations
    bool replay_ok = true, framing_ok = true;
    for (std::size_t i = 0; i < n2; ++i) {
        HandleRecord h;
        h.cell = i;
        h.label = i < cert.construction.cell_labels.size() ? cert.construction.cell_labels[i] : "C²" + std::to_string(i + 1);
        h.framing = cert.construction.framings[i];
        h.target = {h.framing + 1, rot_targets[i]};
        h.initial = {h.framing + 1, co.x_prime[i]};
        h.plan = plan_stabilization(h.initial, h.target, true);
        h.plan_from_unknot = plan_stabilization({-1, 0}, h.target, true);
        replay_ok = replay_ok && replay_plan(h.initial, h.plan) == h.target &&
                    replay_plan({-1, 0}, h.plan_from_unknot) == h.target;
        framing_ok = framing_ok && handle_framing(h.target.tb, BoundarySign::Positive) == h.framing;
        cert.handles.push_back(h);
    }
    ob.push_back(checked("stabilization-replay", "connected sums reproduce every (tb, rot) target", replay_ok));
    ob.push_back(checked("handle-framing", "framing = tb − 1 for every 2-handle", framing_ok));
    ob.push_back(assumed("weinstein-extension", "Legendrian 2-handles with framing tb − 1 extend the contact structure",
                         "Weinstein handle attachment; not recomputed"));

    // ---- E side
    const Integer g = s1.genus, m = s1.self_intersection;
    const Integer gp = stabilized_surface_genus(g);
    const Integer cs1 = pairing(in.spinc.c, s1.cls, q);
    auto& es = cert.e_side;
    es.push_back(recorded("stabilized-genus", "Σ′ = Σ # T² has genus g + 1", "g′ = " + std::to_string(gp)));
    es.push_back(recorded("genus-reserve", "minimal admissible genus g + l",
                          "g(α) = " + std::to_string(genus_reserve(g, cert.construction.complement_one_handles))));
    es.push_back(int_equation("c1-stabilized-surface", "c·Σ = 2 − 2g′ + Σ·Σ", cs1, adjunction_target(gp, m, false), "c·Σ₁"));
    if (in.configuration.vertices.size() == 1 && m > 0) {
        const HandleCounts e = e_decomposition(g, m);
        std::ostringstream os;
        os << "counts " << vec_str(IntVector(e.counts.begin(), e.counts.begin() + 3)) << ", framings " << vec_str(e.framings);
        es.push_back(recorded("e-decomposition", "E: one 0-handle, 2g + m − 1 1-handles, m 2-handles framed +1", os.str()));
        es.push_back(int_equation("e-euler", "χ(E) = χ(Σ)", euler_characteristic(zero_boundary_complex(e.counts)),
                                  2 - 2 * g, "χ(E)"));
    } else {
        es.push_back(recorded("e-decomposition", "E is the plumbed neighbourhood of the configuration",
                              "handle counts of the single-surface model do not apply"));
    }
    es.push_back(assumed("xi-E-overtwisted", "ξ_E on ∂E is negative and overtwisted",
                         "holds by construction of the E-side handles; not recomputed"));

    // ---- gluing
    auto& gl = cert.gluing;
    const ChainComplex ecx = neighborhood_complex(in.configuration);
    const HomologyGroup h1e = homology(ecx, 1);
    gl.push_back(checked("no-2-torsion-E", "H²(E; Z) has no 2-torsion (torsion of H₁(E) by universal coefficients)",
                          !has_two_torsion(h1e), "torsion(H₁(E)) = " + vec_str(h1e.torsion), "no even entries"));
    bool adj_ok = true;
    for (const auto& c : spinc.clauses)
        if (c.id.rfind("adjunction", 0) == 0) adj_ok = adj_ok && c.pass;
    gl.push_back(checked("c1-agreement", "c₁(ξ_E) = c₁(ξ_N) on the gluing boundary", adj_ok, {}, {},
                         "follows from the adjunction clauses on every surface"));
    gl.push_back(assumed("overtwisted-isotopy", "ξ_E and ξ_N are isotopic",
                         "homotopic overtwisted contact structures are isotopic (Eliashberg classification)"));
    gl.push_back(recorded("mayer-vietoris", "H²(X) → H²(E) ⊕ H²(N) detects the spin^c data used",
                          "det(Q_config) ≠ 0 is checked among the preconditions"));

    // ---- cohomology
    cert.cohomology.push_back(recorded("omega-class", "[ω] is Poincaré dual to [Σ₁] + … + [Σ_k]",
                                       "normalization ∫_Σ ω = Σ·Σ; no numerical integration is performed"));
    cert.cohomology.push_back(recorded("trivialization", "rotation numbers are relative to one trivialization of ξ₁",
                                       "values are meaningful only within this certificate"));

    // ---- configuration cases
    if (in.configuration.vertices.size() > 1) {
        const auto kase = noextragenus_case(in.configuration);
        cert.configuration_clauses.push_back(recorded(
            "sphere-configuration-case", "first matching genus-preserving case",
            kase ? "case " + std::to_string(*kase) : "none"));
        if (kase)
            cert.configuration_clauses.push_back(assumed("concave-filling", "genus-preserving alternative applies",
                                                         "concavity argument (Goodman) assumed, not recomputed"));
    }

    // ---- local model
    BatteryOptions bo;
    bo.samples = in.options.samples;
    bo.grid = in.options.grid;
    bo.seed = in.options.seed;
    bo.tolerance = in.options.tolerance;
    bo.eps_prime = in.options.eps_prime;
    bo.profile = in.options.profile;
    cert.battery = run_local_battery(bo);

    cert.pass = all_pass(cert.all_clauses()) && cert.battery.pass() && cert.obstruction.residual == 0;
    return cert;
}

std::string render_report(const ConstructionCertificate& cert) {
    std::ostringstream os;
    os << "Certificate for " << (cert.input_name.empty() ? "(unnamed input)" : cert.input_name) << "\n";
    os << "Result: " << (cert.pass ? "PASS" : "FAIL") << "\n";
    os << "Seed: " << cert.seed << "   profile ε = " << cert.profile.eps << ", δ = " << cert.profile.delta
       << ", κ = " << cert.profile.kappa << "\n\n";
    const auto& iv = cert.invariants;
    os << "Invariants: χ = " << iv.chi << ", σ = " << iv.sigma << ", b₂⁺ = " << iv.b2_plus << ", c² = " << iv.c_squared
       << ", d = " << iv.d << "\n";
    os << "Circle signs: (";
    for (std::size_t i = 0; i < cert.plan.signs.size(); ++i) os << (i ? "," : "") << std::showpos << cert.plan.signs[i];
    os << std::noshowpos << ")   residual obstruction: " << cert.obstruction.residual << "\n";
    for (const auto& c : cert.circles)
        os << "  circle " << c.index << " at level " << fmt_double(c.level) << ": lk = " << std::showpos << c.lk
           << std::noshowpos << ", h = " << c.obstruction.h << ", θ = " << c.obstruction.theta_times_2 << "/2"
           << (c.ambient_overtwisted ? " (overtwisted ambient)" : " (tight ambient)") << "\n";
    os << "\n2-handles:\n";
    for (const auto& h : cert.handles)
        os << "  [" << h.cell << "] " << h.label << ": framing " << h.framing << ", target (tb, rot) = (" << h.target.tb
           << ", " << h.target.rot << "), plan (p,q,r,s) = (" << h.plan.p << "," << h.plan.q << "," << h.plan.r << ","
           << h.plan.s << "), from unknot (" << h.plan_from_unknot.p << "," << h.plan_from_unknot.q << ","
           << h.plan_from_unknot.r << "," << h.plan_from_unknot.s << ")\n";
    os << "\nClauses:\n";
    for (const auto& c : cert.all_clauses()) {
        os << "  [" << (c.pass ? "ok" : "FAILED") << "] (" << to_string(c.kind) << ") " << c.id << ": " << c.statement;
        if (!c.lhs.empty()) os << "  [" << c.lhs << (c.rhs.empty() ? "" : " vs " + c.rhs) << "]";
        if (!c.note.empty()) os << "  -- " << c.note;
        os << "\n";
    }
    os << "\nLocal model checks:\n";
    for (const auto& r : cert.battery.records)
        os << "  [" << (r.pass ? "ok" : "FAILED") << "] " << r.quantity << ": " << fmt_double(r.value) << " "
           << r.comparison << " " << fmt_double(r.tolerance) << "\n";
    return os.str();
}

}  // namespace nearsymp
