#include "nearsymp/io.hpp"

#include <fstream>
#include <sstream>

namespace nearsymp {

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg) { throw SchemaError(path + ": " + msg); }

const Json& require(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) schema_fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema_fail(path.empty() ? key : path + "." + key, "missing");
    return *it;
}

std::string sub(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

Integer get_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) schema_fail(path, "expected an integer");
    return j.get<Integer>();
}

double get_double(const Json& j, const std::string& path) {
    if (!j.is_number()) schema_fail(path, "expected a number");
    return j.get<double>();
}

bool get_bool(const Json& j, const std::string& path) {
    if (!j.is_boolean()) schema_fail(path, "expected a boolean");
    return j.get<bool>();
}

std::string get_string(const Json& j, const std::string& path) {
    if (!j.is_string()) schema_fail(path, "expected a string");
    return j.get<std::string>();
}

IntVector get_vec(const Json& j, const std::string& path) {
    if (!j.is_array()) schema_fail(path, "expected an array of integers");
    IntVector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(get_int(j[i], idx(path, i)));
    return v;
}

std::vector<std::string> get_strings(const Json& j, const std::string& path) {
    if (!j.is_array()) schema_fail(path, "expected an array of strings");
    std::vector<std::string> v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(get_string(j[i], idx(path, i)));
    return v;
}

IntMatrix get_matrix(const Json& j, const std::string& path, std::size_t cols_if_empty = 0) {
    if (!j.is_array()) schema_fail(path, "expected an array of rows");
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(get_vec(j[i], idx(path, i)));
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].size() != rows[0].size()) schema_fail(idx(path, i), "row length differs from row 0");
    return IntMatrix::from_rows(rows, cols_if_empty);
}

Json matrix_json(const IntMatrix& m) {
    Json out = Json::array();
    for (const auto& r : m.to_rows()) out.push_back(r);
    return out;
}

PairingConstraint get_pairing(const Json& j, const std::string& path) {
    return {get_string(require(j, "label", path), sub(path, "label")), get_vec(require(j, "class", path), sub(path, "class")),
            get_int(require(j, "value", path), sub(path, "value"))};
}

Json pairing_json(const PairingConstraint& p) { return Json{{"label", p.label}, {"class", p.cls}, {"value", p.value}}; }

std::vector<PairingConstraint> get_pairings(const Json& parent, const char* key, const std::string& path) {
    std::vector<PairingConstraint> out;
    if (!parent.contains(key)) return out;
    const Json& arr = parent.at(key);
    const std::string p = sub(path, key);
    if (!arr.is_array()) schema_fail(p, "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(get_pairing(arr[i], idx(p, i)));
    return out;
}

Json clause_json(const Clause& c) {
    Json j{{"id", c.id}, {"kind", to_string(c.kind)}, {"pass", c.pass}, {"statement", c.statement}};
    if (!c.lhs.empty()) j["lhs"] = c.lhs;
    if (!c.rhs.empty()) j["rhs"] = c.rhs;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

Json clauses_json(const std::vector<Clause>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) out.push_back(clause_json(c));
    return out;
}

Json plan_json(const StabilizationPlan& p) { return Json{{"p", p.p}, {"q", p.q}, {"r", p.r}, {"s", p.s}}; }
Json state_json(const LegendrianState& s) { return Json{{"tb", s.tb}, {"rot", s.rot}}; }

Json profile_json(const ProfileParams& p) { return Json{{"eps", p.eps}, {"delta", p.delta}, {"kappa", p.kappa}}; }

Json complex_json(const ChainComplex& c) {
    Json j{{"cells", c.cells_per_degree}};
    Json b = Json::object();
    for (const auto& [k, m] : c.boundary) b[std::to_string(k)] = matrix_json(m);
    j["boundary"] = b;
    return j;
}

}  // namespace

ManifoldInput input_from_json(const Json& j) {
    if (!j.is_object()) schema_fail("$", "expected a JSON object");
    ManifoldInput in;
    if (j.contains("name")) in.name = get_string(j["name"], "name");

    if (j.contains("intersection_form")) {
        const Json& f = j["intersection_form"];
        SymmetricForm q;
        q.matrix = get_matrix(require(f, "matrix", "intersection_form"), "intersection_form.matrix");
        if (q.matrix.rows() != q.matrix.cols()) schema_fail("intersection_form.matrix", "must be square");
        if (!q.matrix.is_symmetric()) schema_fail("intersection_form.matrix", "must be symmetric");
        if (f.contains("labels")) q.labels = get_strings(f["labels"], "intersection_form.labels");
        if (!q.labels.empty() && q.labels.size() != q.matrix.rows())
            schema_fail("intersection_form.labels", "one label per basis element expected");
        in.intersection_form = q;
    }
    if (j.contains("framed_link")) {
        const Json& f = j["framed_link"];
        FramedLink l;
        l.framings = get_vec(require(f, "framings", "framed_link"), "framed_link.framings");
        l.linkings = get_matrix(require(f, "linkings", "framed_link"), "framed_link.linkings", l.framings.size());
        in.framed_link = l;
    }
    if (!in.intersection_form && !in.framed_link)
        schema_fail("intersection_form", "missing (supply intersection_form or framed_link)");

    in.b1 = get_int(require(j, "b1", ""), "b1");
    in.b3 = get_int(require(j, "b3", ""), "b3");
    in.handle_counts = get_vec(require(j, "handle_counts", ""), "handle_counts");
    if (in.handle_counts.size() != 5) schema_fail("handle_counts", "expected five counts (degrees 0..4)");

    const Json& cfg = require(j, "configuration", "");
    const Json& surfs = require(cfg, "surfaces", "configuration");
    if (!surfs.is_array() || surfs.empty()) schema_fail("configuration.surfaces", "expected a non-empty array");
    for (std::size_t i = 0; i < surfs.size(); ++i) {
        const std::string p = idx("configuration.surfaces", i);
        SurfaceSpec s;
        if (surfs[i].contains("label")) s.label = get_string(surfs[i]["label"], sub(p, "label"));
        s.genus = get_int(require(surfs[i], "genus", p), sub(p, "genus"));
        s.cls = get_vec(require(surfs[i], "class", p), sub(p, "class"));
        s.self_intersection = get_int(require(surfs[i], "self_intersection", p), sub(p, "self_intersection"));
        if (surfs[i].contains("uses_up_3handles"))
            s.uses_up_3handles = get_bool(surfs[i]["uses_up_3handles"], sub(p, "uses_up_3handles"));
        in.configuration.vertices.push_back(s);
    }
    if (cfg.contains("edges")) {
        const Json& e = cfg["edges"];
        if (!e.is_array()) schema_fail("configuration.edges", "expected an array of pairs");
        for (std::size_t i = 0; i < e.size(); ++i) {
            const IntVector pr = get_vec(e[i], idx("configuration.edges", i));
            if (pr.size() != 2 || pr[0] < 0 || pr[1] < 0)
                schema_fail(idx("configuration.edges", i), "expected a pair of vertex indices");
            in.configuration.edges.emplace_back(static_cast<std::size_t>(pr[0]), static_cast<std::size_t>(pr[1]));
        }
    }
    in.configuration.side_conditions = get_pairings(cfg, "side_conditions", "configuration");

    if (j.contains("construction")) {
        const Json& c = j["construction"];
        ConstructionData cd;
        cd.complex.cells_per_degree = get_vec(require(c, "cells", "construction"), "construction.cells");
        if (cd.complex.cells_per_degree.size() != 5) schema_fail("construction.cells", "expected five counts");
        if (c.contains("boundary")) {
            const Json& b = c["boundary"];
            if (!b.is_object()) schema_fail("construction.boundary", "expected an object keyed by degree");
            for (auto it = b.begin(); it != b.end(); ++it) {
                const std::string p = "construction.boundary." + it.key();
                int k = 0;
                try {
                    k = std::stoi(it.key());
                } catch (...) {
                    schema_fail(p, "degree key must be an integer");
                }
                if (k < 1 || k > 4) schema_fail(p, "degree must be in 1..4");
                cd.complex.boundary[k] =
                    get_matrix(it.value(), p, static_cast<std::size_t>(std::max<Integer>(0, cd.complex.cells(k))));
            }
        }
        cd.framings = get_vec(require(c, "framings", "construction"), "construction.framings");
        if (c.contains("cell_labels")) cd.cell_labels = get_strings(c["cell_labels"], "construction.cell_labels");
        cd.two_cell = static_cast<std::size_t>(
            get_int(require(c, "distinguished_two_cell", "construction"), "construction.distinguished_two_cell"));
        cd.one_cell = static_cast<std::size_t>(
            get_int(require(c, "distinguished_one_cell", "construction"), "construction.distinguished_one_cell"));
        if (c.contains("complement_one_handles"))
            cd.complement_one_handles = get_int(c["complement_one_handles"], "construction.complement_one_handles");
        in.construction = cd;
    }

    const Json& sp = require(j, "spinc", "");
    in.spinc.c = get_vec(require(sp, "c", "spinc"), "spinc.c");
    in.spinc.pairings = get_pairings(sp, "pairings", "spinc");
    if (sp.contains("x0")) in.spinc.x0 = get_vec(sp["x0"], "spinc.x0");
    if (sp.contains("x_prime")) in.spinc.x_prime = get_vec(sp["x_prime"], "spinc.x_prime");
    if (sp.contains("z")) in.spinc.z = get_vec(sp["z"], "spinc.z");

    if (j.contains("options")) {
        const Json& o = j["options"];
        if (!o.is_object()) schema_fail("options", "expected an object");
        if (o.contains("signs")) {
            std::vector<int> signs;
            for (Integer s : get_vec(o["signs"], "options.signs")) signs.push_back(static_cast<int>(s));
            in.options.signs = signs;
        }
        if (o.contains("profile")) {
            const Json& p = o["profile"];
            if (p.contains("eps")) in.options.profile.eps = get_double(p["eps"], "options.profile.eps");
            if (p.contains("delta")) in.options.profile.delta = get_double(p["delta"], "options.profile.delta");
            if (p.contains("kappa")) in.options.profile.kappa = get_double(p["kappa"], "options.profile.kappa");
        }
        if (o.contains("tolerance")) in.options.tolerance = get_double(o["tolerance"], "options.tolerance");
        if (o.contains("grid")) in.options.grid = static_cast<int>(get_int(o["grid"], "options.grid"));
        if (o.contains("samples")) in.options.samples = static_cast<int>(get_int(o["samples"], "options.samples"));
        if (o.contains("seed")) {
            if (!o["seed"].is_number_unsigned()) schema_fail("options.seed", "expected a non-negative integer");
            in.options.seed = o["seed"].get<std::uint64_t>();
        }
        if (o.contains("eps_prime")) in.options.eps_prime = get_double(o["eps_prime"], "options.eps_prime");
    }
    return in;
}

Json input_to_json(const ManifoldInput& in) {
    Json j;
    j["name"] = in.name;
    if (in.intersection_form) {
        Json f{{"matrix", matrix_json(in.intersection_form->matrix)}};
        if (!in.intersection_form->labels.empty()) f["labels"] = in.intersection_form->labels;
        j["intersection_form"] = f;
    }
    if (in.framed_link)
        j["framed_link"] = Json{{"framings", in.framed_link->framings}, {"linkings", matrix_json(in.framed_link->linkings)}};
    j["b1"] = in.b1;
    j["b3"] = in.b3;
    j["handle_counts"] = in.handle_counts;
    Json surfs = Json::array();
    for (const auto& s : in.configuration.vertices)
        surfs.push_back(Json{{"label", s.label}, {"genus", s.genus}, {"class", s.cls},
                             {"self_intersection", s.self_intersection}, {"uses_up_3handles", s.uses_up_3handles}});
    Json edges = Json::array();
    for (const auto& [a, b] : in.configuration.edges) edges.push_back(Json::array({a, b}));
    Json side = Json::array();
    for (const auto& p : in.configuration.side_conditions) side.push_back(pairing_json(p));
    j["configuration"] = Json{{"surfaces", surfs}, {"edges", edges}, {"side_conditions", side}};
    if (in.construction) {
        const auto& cd = *in.construction;
        Json c = complex_json(cd.complex);
        c["framings"] = cd.framings;
        if (!cd.cell_labels.empty()) c["cell_labels"] = cd.cell_labels;
        c["distinguished_two_cell"] = cd.two_cell;
        c["distinguished_one_cell"] = cd.one_cell;
        c["complement_one_handles"] = cd.complement_one_handles;
        j["construction"] = c;
    }
    Json sp{{"c", in.spinc.c}};
    Json pairs = Json::array();
    for (const auto& p : in.spinc.pairings) pairs.push_back(pairing_json(p));
    sp["pairings"] = pairs;
    if (in.spinc.x0) sp["x0"] = *in.spinc.x0;
    if (in.spinc.x_prime) sp["x_prime"] = *in.spinc.x_prime;
    if (in.spinc.z) sp["z"] = *in.spinc.z;
    j["spinc"] = sp;
    Json o;
    if (in.options.signs) o["signs"] = *in.options.signs;
    o["profile"] = profile_json(in.options.profile);
    o["tolerance"] = in.options.tolerance;
    o["grid"] = in.options.grid;
    o["samples"] = in.options.samples;
    o["seed"] = in.options.seed;
    o["eps_prime"] = in.options.eps_prime;
    j["options"] = o;
    return j;
}

ManifoldInput parse_input(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open input file " + path.string());
    Json j;
    try {
        j = Json::parse(f);
    } catch (const Json::parse_error& e) {
        throw SchemaError("$: not valid JSON (" + std::string(e.what()) + ")");
    }
    return input_from_json(j);
}

void emit_input(const ManifoldInput& in, const std::filesystem::path& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << input_to_json(in).dump(2) << "\n";
}

Json battery_to_json(const BatteryReport& rep) {
    Json recs = Json::array();
    for (const auto& r : rep.records)
        recs.push_back(Json{{"quantity", r.quantity}, {"value", r.value}, {"comparison", r.comparison},
                            {"tolerance", r.tolerance}, {"pass", r.pass}, {"point", r.point}});
    return Json{{"pass", rep.pass()}, {"records", recs}};
}

Json certificate_to_json(const ConstructionCertificate& cert) {
    Json j;
    j["input"] = cert.input_name;
    j["pass"] = cert.pass;
    j["seed"] = cert.seed;
    j["profile"] = profile_json(cert.profile);
    j["preconditions"] = clauses_json(cert.preconditions);
    const auto& iv = cert.invariants;
    j["invariants"] = Json{{"chi", iv.chi}, {"sigma", iv.sigma}, {"b2_plus", iv.b2_plus}, {"c_squared", iv.c_squared}, {"d", iv.d}};
    Json circles = Json::array();
    for (const auto& c : cert.circles)
        circles.push_back(Json{{"index", c.index}, {"level", c.level}, {"interval", {c.lower, c.upper}}, {"lk", c.lk},
                               {"ambient_overtwisted", c.ambient_overtwisted}, {"h", c.obstruction.h},
                               {"theta_times_2", c.obstruction.theta_times_2}});
    j["circle_plan"] = Json{{"d", cert.plan.d}, {"signs", cert.plan.signs}, {"levels", cert.plan.levels}, {"circles", circles}};
    Json cx = complex_json(cert.construction.complex);
    cx["framings"] = cert.construction.framings;
    cx["cell_labels"] = cert.construction.cell_labels;
    cx["distinguished_two_cell"] = cert.construction.two_cell;
    cx["distinguished_one_cell"] = cert.construction.one_cell;
    j["construction"] = cx;
    Json co{{"x0", cert.cocycle.x0}, {"x_prime", cert.cocycle.x_prime}, {"x", cert.cocycle.x}};
    if (cert.cocycle.z) co["z"] = *cert.cocycle.z;
    if (cert.cocycle.x1) co["x1"] = *cert.cocycle.x1;
    j["cocycles"] = co;
    Json hs = Json::array();
    for (const auto& h : cert.handles)
        hs.push_back(Json{{"cell", h.cell}, {"label", h.label}, {"framing", h.framing}, {"initial", state_json(h.initial)},
                          {"target", state_json(h.target)}, {"plan", plan_json(h.plan)},
                          {"plan_from_unknot", plan_json(h.plan_from_unknot)}});
    j["two_handles"] = hs;
    j["obstruction"] = Json{{"sum_h", cert.obstruction.sum_h},
                            {"theta_sum_times_2", cert.obstruction.theta_sum_times_2},
                            {"residual", cert.obstruction.residual},
                            {"clauses", clauses_json(cert.obstruction_clauses)}};
    j["e_side"] = clauses_json(cert.e_side);
    j["gluing"] = clauses_json(cert.gluing);
    j["cohomology"] = clauses_json(cert.cohomology);
    j["configuration"] = clauses_json(cert.configuration_clauses);
    j["local_model"] = battery_to_json(cert.battery);
    return j;
}

void emit_certificate(const ConstructionCertificate& cert, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    {
        std::ofstream f(dir / "certificate.json");
        if (!f) throw std::runtime_error("cannot write " + (dir / "certificate.json").string());
        f << certificate_to_json(cert).dump(2) << "\n";
    }
    std::ofstream r(dir / "report.txt");
    if (!r) throw std::runtime_error("cannot write " + (dir / "report.txt").string());
    r << render_report(cert);
}

}  // namespace nearsymp
