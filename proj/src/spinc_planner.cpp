#include "nearsymp/spinc_planner.hpp"

#include <sstream>
#include <stdexcept>

namespace nearsymp {

namespace {

std::string vec_str(const IntVector& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

Clause equation(std::string id, std::string statement, Integer lhs, Integer rhs, std::string lhs_name) {
    Clause c;
    c.id = std::move(id);
    c.statement = std::move(statement);
    c.pass = lhs == rhs;
    c.lhs = lhs_name + " = " + std::to_string(lhs);
    c.rhs = std::to_string(rhs);
    return c;
}

std::string surface_name(const SurfaceSpec& s, std::size_t i) {
    return s.label.empty() ? "Σ" + std::to_string(i + 1) : s.label;
}

}  // namespace

Integer adjunction_target(Integer genus, Integer self_int, bool stabilized) {
    if (genus < 0) throw std::invalid_argument("adjunction_target: negative genus");
    return stabilized ? 2 - 2 * (genus + 1) + self_int : 2 - 2 * genus + self_int;
}

ConstraintReport check_spinc_constraints(const IntVector& c, const ConfigurationGraph& config,
                                         const SymmetricForm& q, const std::vector<PairingConstraint>& extra) {
    if (config.vertices.empty()) throw std::invalid_argument("check_spinc_constraints: empty configuration");
    if (c.size() != q.dim()) throw std::invalid_argument("check_spinc_constraints: c has wrong dimension");
    ConstraintReport report;
    auto& out = report.clauses;

    for (std::size_t i = 0; i < config.vertices.size(); ++i) {
        const auto& s = config.vertices[i];
        if (s.cls.size() != q.dim())
            throw std::invalid_argument("check_spinc_constraints: class of " + surface_name(s, i) + " has wrong dimension");
        const std::string name = surface_name(s, i);
        out.push_back(equation("self-intersection:" + name, "recorded self-intersection equals the form value",
                               pairing(s.cls, s.cls, q), s.self_intersection, name + "·" + name));
    }

    const auto& s1 = config.vertices.front();
    out.push_back(equation("adjunction-stabilized:" + surface_name(s1, 0),
                           "c·Σ₁ = 2 − 2(g₁+1) + Σ₁·Σ₁", pairing(c, s1.cls, q),
                           adjunction_target(s1.genus, s1.self_intersection, true), "c·" + surface_name(s1, 0)));
    for (std::size_t i = 1; i < config.vertices.size(); ++i) {
        const auto& s = config.vertices[i];
        out.push_back(equation("adjunction:" + surface_name(s, i), "c·Σᵢ = 2 − 2gᵢ + Σᵢ·Σᵢ",
                               pairing(c, s.cls, q), adjunction_target(s.genus, s.self_intersection, false),
                               "c·" + surface_name(s, i)));
    }

    {
        Clause ch;
        ch.id = "characteristic";
        ch.statement = "c·e ≡ e·e mod 2 for every basis vector e";
        ch.pass = is_characteristic(c, q);
        ch.lhs = "c = " + vec_str(c);
        ch.rhs = ch.pass ? "characteristic" : "not characteristic";
        out.push_back(ch);
    }

    const SymmetricForm qc = plumbing_form(config);
    const Integer det = determinant(qc.matrix);
    {
        Clause dc;
        dc.id = "config-determinant";
        dc.statement = "det(Q_config) ≠ 0";
        dc.pass = det != 0;
        dc.lhs = "det(Q_config) = " + std::to_string(det);
        dc.rhs = "≠ 0";
        out.push_back(dc);
    }
    if (config.vertices.size() == 1) {
        Clause pc;
        pc.id = "positive-square";
        pc.statement = "α·α > 0";
        pc.pass = s1.self_intersection > 0;
        pc.lhs = "α·α = " + std::to_string(s1.self_intersection);
        pc.rhs = "> 0";
        out.push_back(pc);
    } else {
        for (std::size_t i = 0; i < qc.dim(); ++i) {
            Integer row = 0;
            for (std::size_t j = 0; j < qc.dim(); ++j) row += qc.matrix(i, j);
            Clause rc;
            rc.id = "row-sum:" + surface_name(config.vertices[i], i);
            rc.statement = "Σⱼ Σᵢ·Σⱼ > 0";
            rc.pass = row > 0;
            rc.lhs = "row sum = " + std::to_string(row);
            rc.rhs = "> 0";
            out.push_back(rc);
        }
    }

    auto add_pairings = [&](const std::vector<PairingConstraint>& list) {
        for (const auto& p : list) {
            if (p.cls.size() != q.dim())
                throw std::invalid_argument("check_spinc_constraints: constraint " + p.label + " has wrong dimension");
            out.push_back(equation("pairing:" + p.label, "prescribed value of c on " + p.label,
                                   pairing(c, p.cls, q), p.value, "c·" + p.label));
        }
    };
    add_pairings(config.side_conditions);
    add_pairings(extra);
    return report;
}

Integer compute_d(Integer c_squared, Integer sigma, Integer chi) {
    const Integer num = c_squared - 3 * sigma - 2 * chi;
    if (num % 4 != 0) {
        std::ostringstream os;
        os << "compute_d: c² − 3σ − 2χ = " << num << " is not divisible by 4 (c not characteristic or inconsistent data)";
        throw std::domain_error(os.str());
    }
    return num / 4;
}

namespace {

std::vector<double> uniform_levels(std::size_t n) {
    std::vector<double> levels;
    levels.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        levels.push_back(i == n ? 1.0 : 0.9 + 0.1 * static_cast<double>(i) / static_cast<double>(n));
    return levels;
}

}  // namespace

CirclePlan plan_circles(Integer d) {
    std::vector<int> signs;
    if (d < 0) {
        signs.assign(static_cast<std::size_t>(-d), -1);
    } else {
        signs.assign(static_cast<std::size_t>(d) + 2, +1);
        signs.front() = -1;
    }
    return custom_circle_plan(signs);
}

CirclePlan custom_circle_plan(const std::vector<int>& signs) {
    if (signs.empty()) throw std::invalid_argument("custom_circle_plan: at least one circle is required");
    for (int s : signs)
        if (s != 1 && s != -1) throw std::invalid_argument("custom_circle_plan: signs must be ±1");
    if (signs.front() != -1) throw std::invalid_argument("custom_circle_plan: l₁ must be −1");
    CirclePlan plan;
    plan.signs = signs;
    plan.levels = uniform_levels(signs.size());
    for (int s : signs) plan.d += s;
    return plan;
}

Integer genus_reserve(Integer g, Integer l) {
    if (g < 0 || l < 0) throw std::invalid_argument("genus_reserve: arguments must be non-negative");
    return g + l;
}

HandleCounts e_decomposition(Integer g, Integer m) {
    if (m <= 0) throw std::invalid_argument("e_decomposition: α·α must be positive");
    if (g < 0) throw std::invalid_argument("e_decomposition: negative genus");
    HandleCounts h;
    h.counts = {1, 2 * g + m - 1, m, 0, 0};
    h.framings.assign(static_cast<std::size_t>(m), 1);
    return h;
}

Integer stabilized_surface_genus(Integer g) {
    if (g < 0) throw std::invalid_argument("stabilized_surface_genus: negative genus");
    return g + 1;
}

ValidationReport validate_configuration(const ConfigurationGraph& config) {
    ValidationReport r;
    const std::size_t k = config.vertices.size();
    for (const auto& [a, b] : config.edges) {
        if (a >= k || b >= k) {
            r.valid = false;
            r.violations.push_back("edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
        } else if (a == b) {
            r.valid = false;
            r.violations.push_back("self-edge at vertex " + std::to_string(a));
        }
    }
    for (const auto& v : config.vertices)
        if (v.genus < 0) {
            r.valid = false;
            r.violations.push_back("negative genus on " + v.label);
        }
    return r;
}

SymmetricForm plumbing_form(const ConfigurationGraph& config) {
    auto v = validate_configuration(config);
    if (!v.valid) throw std::invalid_argument("plumbing_form: " + v.violations.front());
    const std::size_t k = config.vertices.size();
    IntMatrix q(k, k);
    for (std::size_t i = 0; i < k; ++i) q(i, i) = config.vertices[i].self_intersection;
    for (const auto& [a, b] : config.edges) {
        ++q(a, b);
        ++q(b, a);
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i) labels.push_back(surface_name(config.vertices[i], i));
    return SymmetricForm{q, labels};
}

ConfigurationGraph cap_corollary_config(Integer m, Integer g) {
    if (m <= 0) throw std::invalid_argument("cap_corollary_config: [Σ]·[Σ] must be positive");
    if (g < 0) throw std::invalid_argument("cap_corollary_config: negative genus");
    ConfigurationGraph cfg;
    const IntVector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
    cfg.vertices = {
        SurfaceSpec{"Σ1", g, e1, m, true},
        SurfaceSpec{"Σ2", 0, e2, 0, false},
        SurfaceSpec{"Σ3", 0, e3, 0, false},
    };
    cfg.edges = {{0, 2}, {1, 2}};
    cfg.side_conditions = {PairingConstraint{"Σ2", e2, 2}, PairingConstraint{"Σ3", e3, 2}};
    const Integer det = determinant(plumbing_form(cfg).matrix);
    if (det != -m)
        throw std::logic_error("cap_corollary_config: determinant " + std::to_string(det) + " differs from −m");
    return cfg;
}

std::optional<int> noextragenus_case(const ConfigurationGraph& config) {
    const std::size_t k = config.vertices.size();
    if (k < 2) return std::nullopt;
    const SymmetricForm q = plumbing_form(config);
    const auto& v = config.vertices;
    if (k == 2) {
        if (v[0].genus == 0 && v[1].genus == 0 && v[0].self_intersection >= 2 && v[1].self_intersection >= 1)
            return 1;
        if (v[0].genus == 0 && v[1].genus >= 1 && v[0].self_intersection >= 1 && v[1].self_intersection >= 1)
            return 2;
        return std::nullopt;
    }
    if (v[0].genus != 0 || v[0].self_intersection < 1 || q.matrix(0, 1) != 1) return std::nullopt;
    // Σ₁·Σᵢ = 0 for every i beyond Σ₂ (i ≥ 2 would contradict Σ₁·Σ₂ = 1).
    for (std::size_t i = 2; i < k; ++i)
        if (q.matrix(0, i) != 0) return std::nullopt;
    return 3;
}

bool is_two_cocycle(const IntegerCochain& x, const ChainComplex& c) {
    if (static_cast<Integer>(x.size()) != c.cells(2)) return false;
    IntVector dx = coboundary_matrix(c, 2) * x;
    for (Integer v : dx)
        if (v != 0) return false;
    return true;
}

IntegerCochain choose_cocycle(const IntegerCochain& x0, const IntegerCochain& x_prime, const ChainComplex& c) {
    const auto n2 = static_cast<std::size_t>(c.cells(2));
    if (x0.size() != n2 || x_prime.size() != n2)
        throw std::invalid_argument("choose_cocycle: cochains must have one entry per 2-cell");
    if (!is_two_cocycle(x0, c)) throw std::invalid_argument("choose_cocycle: x0 is not a cocycle");
    const IntMatrix delta1 = coboundary_matrix(c, 1);
    IntVector diff(n2);
    for (std::size_t i = 0; i < n2; ++i) diff[i] = x0[i] - x_prime[i];
    auto y = solve_mod2(delta1, diff);
    if (!y) throw std::runtime_error("choose_cocycle: x0 − x′ is not a coboundary mod 2 (c mod 2 does not match the x′ data)");
    IntVector lift(y->begin(), y->end());
    IntVector dy = delta1 * lift;
    IntegerCochain x(n2);
    for (std::size_t i = 0; i < n2; ++i) x[i] = x0[i] - dy[i];
    return x;
}

IntegerCochain torsion_adjust(const IntegerCochain& x0, const IntegerCochain& z, const ChainComplex& c,
                              std::size_t p_plus_1, std::size_t b) {
    const auto n1 = static_cast<std::size_t>(c.cells(1));
    const auto n2 = static_cast<std::size_t>(c.cells(2));
    if (x0.size() != n2 || z.size() != n2)
        throw std::invalid_argument("torsion_adjust: cochains must have one entry per 2-cell");
    if (p_plus_1 >= n2 || b >= n1)
        throw std::invalid_argument("torsion_adjust: complex lacks the distinguished pair (index out of range)");
    const IntMatrix d2 = c.boundary_or_zero(2);
    for (std::size_t r = 0; r < n1; ++r)
        if (d2(r, p_plus_1) != (r == b ? 1 : 0))
            throw std::invalid_argument("torsion_adjust: complex lacks the distinguished pair (boundary of 2-cell " +
                                        std::to_string(p_plus_1) + " is not 1-cell " + std::to_string(b) + ")");
    if (!is_two_cocycle(z, c)) throw std::invalid_argument("torsion_adjust: z is not a cocycle");
    const Integer zp = z[p_plus_1];
    IntegerCochain x1(n2);
    for (std::size_t j = 0; j < n2; ++j) {
        const Integer zj = z[j] - zp * d2(b, j);
        x1[j] = x0[j] - 2 * zj;
    }
    return x1;
}

}  // namespace nearsymp
