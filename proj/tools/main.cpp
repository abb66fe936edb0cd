#include "nearsymp/certify.hpp"
#include "nearsymp/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace nearsymp;

namespace {

std::string sign_list(const std::vector<int>& signs) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < signs.size(); ++i) os << (i ? "," : "") << (signs[i] > 0 ? "+1" : "-1");
    os << ")";
    return os.str();
}

std::vector<int> parse_signs(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (v != 1 && v != -1) throw std::invalid_argument("--signs: entries must be +1 or -1, got " + tok);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("--signs: empty list");
    return out;
}

IntMatrix parse_matrix_text(const std::string& text) {
    const Json j = Json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("matrix must be a JSON array of rows");
    std::vector<IntVector> rows;
    for (const auto& r : j) rows.push_back(r.get<IntVector>());
    return IntMatrix::from_rows(rows);
}

void print_battery(const BatteryReport& rep) {
    for (const auto& r : rep.records)
        std::cout << (r.pass ? "  ok   " : "  FAIL ") << r.quantity << " = " << r.value << " (" << r.comparison << " "
                  << r.tolerance << ")\n";
    std::cout << (rep.pass() ? "local-check: PASS" : "local-check: FAIL") << " (" << rep.records.size() << " checks)\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planner and verifier for near-symplectic 2-forms on closed 4-manifolds"};
    app.require_subcommand(1);

    // certify
    auto* cert_cmd = app.add_subcommand("certify", "Run the full pipeline on a manifold description");
    std::string input_path, out_dir, signs_text;
    std::optional<double> tolerance, profile_eps, profile_delta;
    std::optional<int> grid;
    std::optional<std::uint64_t> seed;
    cert_cmd->add_option("input", input_path, "Manifold input (JSON)")->required()->check(CLI::ExistingFile);
    cert_cmd->add_option("--out", out_dir, "Directory for certificate.json and report.txt");
    cert_cmd->add_option("--tolerance", tolerance, "Tolerance for pointwise identities");
    cert_cmd->add_option("--grid", grid, "Grid size for the profile immersion check");
    cert_cmd->add_option("--seed", seed, "Sampling seed");
    cert_cmd->add_option("--signs", signs_text, "Custom circle signs, e.g. -1,1,1");
    cert_cmd->add_option("--profile-eps", profile_eps, "Profile parameter eps");
    cert_cmd->add_option("--profile-delta", profile_delta, "Profile parameter delta");

    // signature
    auto* sig_cmd = app.add_subcommand("signature", "Signature of a symmetric integer matrix");
    std::string matrix_text, matrix_file;
    auto* mopt = sig_cmd->add_option("--matrix", matrix_text, "Matrix as JSON rows, e.g. [[1,0],[0,-1]]");
    sig_cmd->add_option("--file", matrix_file, "Manifold input whose form is used")->excludes(mopt);

    // plan-circles
    auto* plan_cmd = app.add_subcommand("plan-circles", "Default circle signs for a given d");
    Integer d_value = 0;
    plan_cmd->add_option("-d", d_value, "Signed circle count")->required();
    bool show_levels = false;
    plan_cmd->add_flag("--levels", show_levels, "Also print the level values");

    // stabilize
    auto* stab_cmd = app.add_subcommand("stabilize", "Plan connected sums reaching a (tb, rot) target");
    Integer tb = -1, rot = 0, target_tb = 0, target_rot = 0;
    bool overtwisted = false;
    stab_cmd->add_option("--tb", tb, "Current Thurston-Bennequin number (default -1)");
    stab_cmd->add_option("--rot", rot, "Current rotation number (default 0)");
    stab_cmd->add_option("--target-tb", target_tb, "Target tb")->required();
    stab_cmd->add_option("--target-rot", target_rot, "Target rotation")->required();
    stab_cmd->add_flag("--overtwisted", overtwisted, "Allow twisted unknots (overtwisted ambient)");

    // obstruction
    auto* obs_cmd = app.add_subcommand("obstruction", "Obstruction of an anticomplex configuration");
    Integer e_minus = 0, h_minus = 0;
    obs_cmd->add_option("--elliptic", e_minus, "Negative elliptic points")->required()->check(CLI::NonNegativeNumber);
    obs_cmd->add_option("--hyperbolic", h_minus, "Negative hyperbolic points")->required()->check(CLI::NonNegativeNumber);
    bool show_link = false;
    obs_cmd->add_flag("--link", show_link, "Also evaluate the canonical linking matrix");

    // local-check
    auto* local_cmd = app.add_subcommand("local-check", "Run the local model check battery");
    BatteryOptions bopt;
    local_cmd->add_option("--grid", bopt.grid, "Grid size for the immersion check");
    local_cmd->add_option("--samples", bopt.samples, "Random sample count");
    local_cmd->add_option("--seed", bopt.seed, "Sampling seed");
    local_cmd->add_option("--tolerance", bopt.tolerance, "Tolerance for pointwise identities");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cert_cmd) {
            ManifoldInput in = parse_input(input_path);
            if (tolerance) in.options.tolerance = *tolerance;
            if (grid) in.options.grid = *grid;
            if (seed) in.options.seed = *seed;
            if (!signs_text.empty()) in.options.signs = parse_signs(signs_text);
            if (profile_eps) in.options.profile.eps = *profile_eps;
            if (profile_delta) in.options.profile.delta = *profile_delta;
            ConstructionCertificate cert;
            try {
                cert = certify(in);
            } catch (const CertificationAborted& e) {
                std::cerr << "certification aborted: " << e.what() << "\n";
                for (const auto& c : e.failed_clauses())
                    std::cerr << "  failing clause " << c.id << ": " << c.statement << "\n";
                return 2;
            }
            if (!out_dir.empty()) emit_certificate(cert, out_dir);
            std::cout << render_report(cert);
            return cert.pass ? 0 : 1;
        }
        if (*sig_cmd) {
            SymmetricForm q;
            if (!matrix_file.empty())
                q = resolve_form(parse_input(matrix_file));
            else if (!matrix_text.empty())
                q = make_form(parse_matrix_text(matrix_text));
            else
                throw std::invalid_argument("signature: supply --matrix or --file");
            std::cout << signature(q) << "\n";
            return 0;
        }
        if (*plan_cmd) {
            const CirclePlan plan = plan_circles(d_value);
            std::cout << sign_list(plan.signs) << "\n";
            if (show_levels) {
                for (double l : plan.levels) std::cout << l << " ";
                std::cout << "\n";
            }
            return 0;
        }
        if (*stab_cmd) {
            const LegendrianState from{tb, rot}, to{target_tb, target_rot};
            const StabilizationPlan p = plan_stabilization(from, to, overtwisted);
            const LegendrianState got = replay_plan(from, p);
            std::cout << "p=" << p.p << " q=" << p.q << " r=" << p.r << " s=" << p.s << " total=" << p.total()
                      << " -> (tb=" << got.tb << ", rot=" << got.rot << ")\n";
            return got == to ? 0 : 1;
        }
        if (*obs_cmd) {
            const Integer o = o_from_counts(e_minus, h_minus);
            std::cout << o << "\n";
            if (show_link) {
                const Integer ol = obstruction_from_linking_matrix(canonical_anticomplex_link(e_minus, h_minus));
                std::cout << "linking-matrix: " << ol << "\n";
                return ol == o ? 0 : 1;
            }
            return 0;
        }
        if (*local_cmd) {
            const BatteryReport rep = run_local_battery(bopt);
            print_battery(rep);
            return rep.pass() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
