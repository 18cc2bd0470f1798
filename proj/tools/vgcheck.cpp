// Command-line front end: runs the verification suites and emits
// machine-readable reports. Exit codes: 0 all checks pass, 1 at least one
// check failed, 2 usage or configuration error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vgcheck/bps.hpp"
#include "vgcheck/chainlink.hpp"
#include "vgcheck/dilog.hpp"
#include "vgcheck/dwork.hpp"
#include "vgcheck/locsys.hpp"
#include "vgcheck/suite.hpp"
#include "vgcheck/tropical.hpp"
#include "vgcheck/vshs.hpp"

namespace {

using vgc::suite::Config;
using vgc::suite::Json;
using vgc::suite::Report;

int emit(const std::vector<Report>& reports, const std::string& out_path, bool markdown) {
    std::string text = markdown ? vgc::suite::to_markdown(reports)
                                : vgc::suite::to_json(reports).dump(1) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        out << text;
    }
    return vgc::suite::exit_code(reports);
}

vgc::Rat parse_rat(const std::string& s) {
    vgc::Rat r(s);
    r.canonicalize();
    return r;
}

// Field elements on the command line: the shortcuts 1, -1, w, -w, w2, -w2
// or a JSON array of five [xNum, xDen, yNum, yDen] quads (x + y sqrt(-3)
// coefficients of 1, a, a^2, a^3, a^4).
vgc::Tower parse_tower(const std::string& text) {
    using vgc::Quad;
    using vgc::Tower;
    if (text == "1") return Tower::one();
    if (text == "-1") return -Tower::one();
    if (text == "w") return Tower::omega();
    if (text == "-w") return -Tower::omega();
    if (text == "w2") return Tower::omega_sq();
    if (text == "-w2") return -Tower::omega_sq();
    auto j = nlohmann::json::parse(text);
    if (!j.is_array() || j.size() != 5)
        throw std::invalid_argument("expected a 5-coefficient tower element");
    std::array<Quad, 5> c;
    for (int i = 0; i < 5; ++i) {
        const auto& q = j[i];
        if (!q.is_array() || q.size() != 4)
            throw std::invalid_argument("each coefficient is [xNum, xDen, yNum, yDen]");
        auto num = [&](int k) {
            return q[k].is_string() ? parse_rat(q[k].get<std::string>())
                                    : vgc::Rat(q[k].get<long>());
        };
        c[i] = Quad(num(0) / num(1), num(2) / num(3));
    }
    return Tower(c);
}

Json tower_to_json(const vgc::Tower& t) {
    Json out = Json::array();
    for (const auto& q : t.c)
        out.push_back({q.x.get_num().get_str(), q.x.get_den().get_str(),
                       q.y.get_num().get_str(), q.y.get_den().get_str()});
    return out;
}

Json tuple_to_json(const vgc::locsys::HolonomyTuple& h) {
    Json mu = Json::array(), lambda = Json::array();
    for (int i = 0; i < 5; ++i) {
        mu.push_back(tower_to_json(h.mu[i]));
        lambda.push_back(tower_to_json(h.lambda[i]));
    }
    return Json{{"mu", mu}, {"lambda", lambda}};
}

vgc::bps::Table table_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open table: " + path);
    nlohmann::json j;
    in >> j;
    vgc::bps::Table t;
    for (const auto& [key, value] : j.items()) {
        long d = std::stol(key);
        if (!value.is_array() || value.size() != 2)
            throw std::invalid_argument("table entries are [numerator, denominator]");
        vgc::Rat num = value[0].is_string() ? parse_rat(value[0].get<std::string>())
                                            : vgc::Rat(value[0].get<long>());
        vgc::Rat den = value[1].is_string() ? parse_rat(value[1].get<std::string>())
                                            : vgc::Rat(value[1].get<long>());
        t[d] = vgc::Quad(vgc::Rat(0), num / den);  // scaled by sqrt(-3)
    }
    return t;
}

Json table_to_json(const vgc::bps::Table& t) {
    Json out = Json::object();
    for (const auto& [d, v] : t) {
        if (v.x != 0) throw std::runtime_error("table value outside sqrt(-3) * Q");
        out[std::to_string(d)] = {v.y.get_num().get_str(), v.y.get_den().get_str()};
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification suite for the van Geemen line geometry"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, out_path;
    bool markdown = false, json_fmt = false;
    app.add_option("--config", config_path, "JSON config {truncationOrder, floatTolerance, dataDir}");
    app.add_option("--out", out_path, "write the report here instead of stdout");
    app.add_flag("--markdown", markdown, "emit a markdown table");
    app.add_flag("--json", json_fmt, "emit JSON (default)");

    auto* run_all_cmd = app.add_subcommand("run-all", "run every verification suite");

    auto* dwork_cmd = app.add_subcommand("dwork", "line geometry checks");
    auto* dwork_verify = dwork_cmd->add_subcommand("verify", "containment of the lines");
    auto* dwork_orbits = dwork_cmd->add_subcommand("orbits", "group orbit counts");
    auto* dwork_boundary = dwork_cmd->add_subcommand("boundary", "toric boundary data");

    auto* tropical_cmd = app.add_subcommand("tropical", "tropical curve checks");
    auto* tropical_verify = tropical_cmd->add_subcommand("verify", "balancing and type checks");
    auto* tropical_show = tropical_cmd->add_subcommand("show", "emit a curve as JSON");
    std::string curve_name = "V";
    std::string eps_text = "1";
    tropical_show->add_option("--curve", curve_name, "V or V1, V2, V3");
    tropical_show->add_option("--eps", eps_text, "smoothing parameter (rational)");
    auto* tropical_balance = tropical_cmd->add_subcommand("balance", "check a curve from JSON");
    std::string curve_file;
    tropical_balance->add_option("--input", curve_file, "curve JSON file")->required();

    auto* chainlink_cmd = app.add_subcommand("chainlink", "chain link homology checks");
    chainlink_cmd->add_subcommand("verify", "longitudes, deck group, doubling");

    auto* locsys_cmd = app.add_subcommand("locsys", "local system checks");
    auto* locsys_vg = locsys_cmd->add_subcommand("verify-vg", "the van Geemen local systems");
    auto* locsys_extend = locsys_cmd->add_subcommand("extend", "extend a pair-of-pants point");
    std::string mu0_text, lambda0_text;
    locsys_extend->add_option("--mu0", mu0_text, "mu_0 (1, -1, w, -w, w2, -w2 or JSON)")->required();
    locsys_extend->add_option("--lambda0", lambda0_text, "lambda_0")->required();

    auto* floer_cmd = app.add_subcommand("floer", "collapsed-page rank checks");
    floer_cmd->add_subcommand("verify", "dimensions, ranks, cohomology");

    auto* bps_cmd = app.add_subcommand("bps", "multiple-cover formula checks");
    auto* bps_invert = bps_cmd->add_subcommand("invert", "invert a coefficient table");
    std::string table_path;
    long bps_order = 0;
    bps_invert->add_option("--input", table_path, "JSON table {d: [num, den]}")->required();
    bps_invert->add_option("--order", bps_order, "truncation order (default: max degree)");
    bps_cmd->add_subcommand("check-paper-values", "ring membership of the tabulated values");

    auto* vshs_cmd = app.add_subcommand("vshs", "connection and normal function checks");
    auto* vshs_check = vshs_cmd->add_subcommand("check", "horizontality and transversality");
    std::string psi_path;
    int vshs_order = 4;
    vshs_check->add_option("--psi", psi_path, "potential table {d: [num, den]} (default: built-in)");
    vshs_check->add_option("--order", vshs_order, "truncation order");

    auto* dilog_cmd = app.add_subcommand("dilog", "dilogarithm and volume checks");
    dilog_cmd->add_subcommand("volumes", "volume report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Config cfg;
    try {
        if (!config_path.empty()) cfg = Config::from_file(config_path);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (run_all_cmd->parsed()) return emit(vgc::suite::run_all(cfg), out_path, markdown);

        if (dwork_cmd->parsed()) {
            auto reports = vgc::suite::run_dwork(cfg);
            if (dwork_verify->parsed() || dwork_orbits->parsed() || dwork_boundary->parsed()) {
                std::string want = dwork_verify->parsed()   ? "dwork/containment"
                                   : dwork_orbits->parsed() ? "dwork/orbit"
                                                            : "dwork/boundary";
                std::erase_if(reports, [&](const Report& r) {
                    return r.check_name.rfind(want, 0) != 0;
                });
            }
            return emit(reports, out_path, markdown);
        }

        if (tropical_cmd->parsed()) {
            if (tropical_show->parsed()) {
                vgc::tropical::TropCurve c;
                if (curve_name == "V")
                    c = vgc::tropical::make_V();
                else if (curve_name.size() == 2 && curve_name[0] == 'V')
                    c = vgc::tropical::make_V_smoothed(curve_name[1] - '0', parse_rat(eps_text));
                else
                    throw std::invalid_argument("unknown curve: " + curve_name);
                std::cout << vgc::tropical::curve_to_json(c) << "\n";
                return 0;
            }
            if (tropical_balance->parsed()) {
                std::ifstream in(curve_file);
                if (!in) {
                    std::cerr << "cannot open " << curve_file << "\n";
                    return 2;
                }
                std::string text((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
                bool ok = vgc::tropical::check_balancing(vgc::tropical::curve_from_json(text));
                std::cout << Json{{"balanced", ok}}.dump(1) << "\n";
                return ok ? 0 : 1;
            }
            (void)tropical_verify;
            return emit(vgc::suite::run_tropical(cfg), out_path, markdown);
        }

        if (chainlink_cmd->parsed()) return emit(vgc::suite::run_chainlink(cfg), out_path, markdown);

        if (locsys_cmd->parsed()) {
            if (locsys_extend->parsed()) {
                auto result = vgc::locsys::extend_point(parse_tower(mu0_text),
                                                        parse_tower(lambda0_text),
                                                        vgc::locsys::van_geemen_root_pool());
                Json tuples = Json::array();
                for (const auto& t : result.tuples) tuples.push_back(tuple_to_json(t));
                std::cout << Json{{"tuples", tuples}, {"diagnostics", result.diagnostics}}.dump(1)
                          << "\n";
                return 0;
            }
            (void)locsys_vg;
            return emit(vgc::suite::run_locsys(cfg), out_path, markdown);
        }

        if (floer_cmd->parsed()) return emit(vgc::suite::run_floer(cfg), out_path, markdown);

        if (bps_cmd->parsed()) {
            if (bps_invert->parsed()) {
                auto nt = table_from_file(table_path);
                long order = bps_order > 0 ? bps_order : (nt.empty() ? 0 : nt.rbegin()->first);
                auto n = vgc::bps::invert(nt, order);
                Json membership = Json::object();
                for (const auto& [d, v] : n)
                    membership[std::to_string(d)] = vgc::bps::ring_member(v);
                std::cout << Json{{"n", table_to_json(n)}, {"ringMembership", membership}}.dump(1)
                          << "\n";
                return 0;
            }
            return emit(vgc::suite::run_bps(cfg), out_path, markdown);
        }

        if (vshs_cmd->parsed()) {
            if (vshs_check->parsed() && !psi_path.empty()) {
                auto table = table_from_file(psi_path);
                vgc::vshs::Series psi("Q", vshs_order);
                for (const auto& [d, v] : table)
                    if (d <= vshs_order) psi.c[d] = v;
                auto cm = vgc::vshs::ConnectionMatrix::standard_shape(
                    vgc::vshs::Series::constant(vgc::Quad(vgc::Rat(5)), "Q", vshs_order));
                auto nf = vgc::vshs::NormalFunctionCandidate::from_potential(psi);
                bool horiz = vgc::vshs::horizontality_check(cm, nf);
                std::cout << Json{{"horizontality", horiz}, {"order", vshs_order}}.dump(1) << "\n";
                return horiz ? 0 : 1;
            }
            return emit(vgc::suite::run_vshs(cfg), out_path, markdown);
        }

        if (dilog_cmd->parsed()) return emit(vgc::suite::run_dilog(cfg), out_path, markdown);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "no subcommand selected\n";
    return 2;
}
