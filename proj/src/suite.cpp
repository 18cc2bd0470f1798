#include "vgcheck/suite.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "vgcheck/bps.hpp"
#include "vgcheck/chainlink.hpp"
#include "vgcheck/dilog.hpp"
#include "vgcheck/dwork.hpp"
#include "vgcheck/floer_ss.hpp"
#include "vgcheck/locsys.hpp"
#include "vgcheck/tropical.hpp"
#include "vgcheck/vshs.hpp"

namespace vgc {
namespace suite {

namespace {

Report make(const std::string& name, const std::string& citation, bool ok, Json details) {
    return Report{name, citation, ok ? Status::Pass : Status::Fail, std::move(details), 0};
}

Report flag(const std::string& name, const std::string& citation, Json details) {
    return Report{name, citation, Status::Flagged, std::move(details), 0};
}

std::string status_str(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "flagged";
    }
}

}  // namespace

Config Config::from_json(const Json& j) {
    Config cfg;
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key == "truncationOrder") {
            if (!value.is_number_integer() || value.get<int>() < 1)
                throw std::invalid_argument("truncationOrder must be a positive integer");
            cfg.truncation_order = value.get<int>();
        } else if (key == "floatTolerance") {
            if (!value.is_number() || value.get<double>() <= 0)
                throw std::invalid_argument("floatTolerance must be a positive number");
            cfg.float_tolerance = value.get<double>();
        } else if (key == "dataDir") {
            if (!value.is_string()) throw std::invalid_argument("dataDir must be a string");
            cfg.data_dir = value.get<std::string>();
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
    return cfg;
}

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("malformed config JSON: " + std::string(e.what()));
    }
    return from_json(j);
}

// ---------------------------------------------------------------- dwork --

std::vector<Report> run_dwork(const Config&) {
    std::vector<Report> out;
    const char* containment_cite = "van Geemen lines on the Dwork quintic pencil";

    for (bool sq : {false, true}) {
        dwork::DworkParams params = dwork::degenerate_params(sq);
        dwork::ParamLine line = dwork::build_van_geemen_line(params);
        bool specific = dwork::verify_on_dwork(line, params);
        bool generic = dwork::verify_on_dwork_generic(params.omega);
        out.push_back(make(std::string("dwork/containment-") + (sq ? "omega2" : "omega"),
                           containment_cite, specific && generic,
                           Json{{"b0Instance", specific}, {"genericAB", generic}}));
    }

    dwork::ParamLine line = dwork::build_van_geemen_line(dwork::degenerate_params(false));
    dwork::OrbitSizes orb = dwork::orbit_sizes(line);
    bool orbits_ok = orb.g5_orbit == 125 && orb.s5_orbit == 40 && orb.s5_stabilizer == 3 &&
                     orb.lower_bound == 5000 && orb.lower_bound > orb.virtual_count;
    out.push_back(make("dwork/orbit-counts", "orbit counts exceed the virtual count of lines",
                       orbits_ok,
                       Json{{"g5Orbit", orb.g5_orbit},
                            {"s5Orbit", orb.s5_orbit},
                            {"s5Stabilizer", orb.s5_stabilizer},
                            {"lowerBound", orb.lower_bound},
                            {"virtualCount", orb.virtual_count}}));

    auto boundary = dwork::boundary_intersections(line);
    bool limit_omega = dwork::verify_limit_equations(dwork::degenerate_params(false));
    bool limit_omega2 = dwork::verify_limit_equations(dwork::degenerate_params(true));
    out.push_back(make("dwork/boundary-and-limit",
                       "toric boundary intersections of the degenerate line",
                       boundary.size() == 4 && limit_omega && limit_omega2,
                       Json{{"boundaryPoints", boundary.size()},
                            {"limitEquationsOmega", limit_omega},
                            {"limitEquationsOmega2", limit_omega2}}));
    return out;
}

// ------------------------------------------------------------- tropical --

std::vector<Report> run_tropical(const Config&) {
    std::vector<Report> out;

    bool v_ok = tropical::check_balancing(tropical::make_V());
    out.push_back(make("tropical/V-balancing", "balancing of the 4-valent tropical curve", v_ok,
                       Json{{"rays", 4}, {"weights", 1}}));

    std::mt19937_64 rng(421331);
    std::uniform_int_distribution<long> num(1, 40), den(1, 12);
    bool smooth_ok = true;
    for (int i = 1; i <= 3; ++i)
        for (int trial = 0; trial < 10; ++trial) {
            Rat eps = rat(num(rng), den(rng));
            smooth_ok = smooth_ok && tropical::check_balancing(tropical::make_V_smoothed(i, eps));
        }
    out.push_back(make("tropical/smoothings-balanced",
                       "balancing of the trivalent smoothings", smooth_ok,
                       Json{{"indices", {1, 2, 3}}, {"randomEpsilons", 10}}));

    dwork::ParamLine line = dwork::build_van_geemen_line(dwork::degenerate_params(false));
    auto type = tropical::tropicalization_type(dwork::boundary_intersections(line));
    std::vector<tropical::IVec3> v_dirs;
    for (const auto& e : tropical::make_V().edges) v_dirs.push_back(e.direction);
    bool type_ok = tropical::same_directions_up_to_global_sign(type, v_dirs);
    out.push_back(make("tropical/limit-line-type",
                       "tropicalization of the degenerate line matches the curve", type_ok,
                       Json{{"matchedUpToGlobalSign", type_ok}}));

    using tropical::ConormalPoint;
    ConormalPoint p1({rat(2), rat(2), rat(1)}, {rat(0), rat(0), rat(0)});
    ConormalPoint p2({rat(2), rat(2), rat(3)}, {rat(0), rat(0), rat(1, 5)});
    ConormalPoint p3({rat(1, 2), rat(1, 2), rat(1, 2)}, {rat(1, 3), rat(1, 3), rat(1, 3)});
    bool conormal_ok = tropical::conormal_member(p1, 3, false) &&
                       tropical::conormal_member(p2, 3, true) &&
                       !tropical::conormal_member(p2, 3, false) &&
                       tropical::conormal_member(p3, 4, false);
    out.push_back(make("tropical/conormal-predicates",
                       "periodized conormal membership and its 5-fold lift", conormal_ok,
                       Json{{"baseLeg", true}, {"coverOnlyPoint", true}, {"leg4", true}}));
    return out;
}

// ------------------------------------------------------------ chainlink --

std::vector<Report> run_chainlink(const Config&) {
    std::vector<Report> out;
    auto lc = chainlink::check_longitude_images();
    out.push_back(make("chainlink/longitude-images",
                       "longitude images in the torus homology", lc.ok,
                       Json{{"failingLongitudes", lc.failing}}));

    // The longitude matrix is the symmetric linking matrix of a signed
    // 5-cycle: determinant -2, so full rank over Z with invariant factors
    // (1,1,1,1,2); the vector (1,1,1,1,1) spans its kernel mod 2.
    auto lsnf = snf(chainlink::longitude_matrix());
    auto ldiv = lsnf.divisors();
    bool lrank_ok = lsnf.rank() == 5 && ldiv.size() == 5 && ldiv[4] == 2;
    out.push_back(make("chainlink/longitude-matrix-form", "longitude relation matrix",
                       lrank_ok,
                       Json{{"rank", lsnf.rank()}, {"invariantFactors", {1, 1, 1, 1, 2}}}));

    auto deck = chainlink::deck_group();
    bool deck_ok = deck.torus_map_rank == 3 && deck.elementary_divisors.size() == 3;
    for (const auto& d : deck.elementary_divisors) deck_ok = deck_ok && d == 5;
    out.push_back(make("chainlink/deck-group", "deck group of the 125-fold cover", deck_ok,
                       Json{{"torusMapRank", deck.torus_map_rank},
                            {"elementaryDivisors", {5, 5, 5}}}));

    auto g = chainlink::GluingData::standard();
    int mv = chainlink::mayer_vietoris_h1_rank(g);
    int arank = chainlink::gluing_map_rank(g);
    out.push_back(make("chainlink/mayer-vietoris-rank", "first homology of the double", mv == 9,
                       Json{{"h1Rank", mv}, {"gluingMapRank", arank}, {"h0Contribution", 4}}));

    std::string ab;
    for (size_t i = 0; i < deck.abelianized_quotient_divisors.size(); ++i)
        ab += (i ? "," : "") + deck.abelianized_quotient_divisors[i].get_str();
    out.push_back(flag("chainlink/pi1-quotient-vs-abelianization",
                       "deck group versus abelianized quotient",
                       Json{{"deckGroup", "(Z/5)^3"},
                            {"abelianizedQuotient", "(Z/5)^" + std::to_string(
                                 deck.abelianized_quotient_divisors.size())},
                            {"note", "the pi_1 quotient by the normal closure of "
                                     "{m0, m1^5..m4^5} is (Z/5)^3 while the abelianized "
                                     "quotient is (Z/5)^4; nonabelian relations must enlarge "
                                     "the closure, which H_1 methods cannot decide"}}));
    return out;
}

// --------------------------------------------------------------- locsys --

std::vector<Report> run_locsys(const Config&) {
    std::vector<Report> out;
    Tower a = Tower::gen_a();

    bool resid_ok = true, consist_ok = true;
    for (bool sq : {false, true}) {
        auto h = locsys::van_geemen_tuple(sq, a);
        resid_ok = resid_ok && locsys::residues(h).all_zero();
        consist_ok = consist_ok && h.consistent();
    }
    out.push_back(make("locsys/van-geemen-residues",
                       "teardrop cancellation for the van Geemen local systems",
                       resid_ok && consist_ok,
                       Json{{"bothRootsVanish", resid_ok}, {"longitudeMonomials", consist_ok}}));

    auto vg = locsys::van_geemen_tuple(false, a);
    auto ext = locsys::extend_point(vg.mu[0], vg.lambda[0], locsys::van_geemen_root_pool());
    bool found = false, all_unobstructed = !ext.tuples.empty();
    for (const auto& t : ext.tuples) {
        all_unobstructed = all_unobstructed && locsys::residues(t).all_zero();
        bool same = true;
        for (int i = 0; i < 5; ++i)
            same = same && t.mu[i] == vg.mu[i] && t.lambda[i] == vg.lambda[i];
        found = found || same;
    }
    out.push_back(make("locsys/extend-round-trip",
                       "one-parameter extension recovers the van Geemen point",
                       found && all_unobstructed,
                       Json{{"tuplesFound", ext.tuples.size()},
                            {"roundTrip", found},
                            {"allResiduesVanish", all_unobstructed}}));

    long g6 = locsys::riemann_hurwitz_genus(
        25, 3, {{5, 5, 5, 5, 5}, {5, 5, 5, 5, 5}, {5, 5, 5, 5, 5}});
    long g0 = locsys::riemann_hurwitz_genus(1, 3, {{1}, {1}, {1}});
    long g0b = locsys::riemann_hurwitz_genus(5, 3, {{5}, {5}, {1, 1, 1, 1, 1}});
    out.push_back(make("locsys/riemann-hurwitz", "genus of the local-system curve",
                       g6 == 6 && g0 == 0 && g0b == 0,
                       Json{{"cover25", g6}, {"identityCover", g0}, {"mixedCycles", g0b}}));

    // Local one-dimensionality: fixing (mu_0, lambda_0) and the root choices
    // cannot produce more distinct tuples than quadratic roots x root choices.
    bool count_ok = ext.tuples.size() <= 2;
    out.push_back(make("locsys/solution-count", "local dimension of the unobstructed family",
                       count_ok, Json{{"solutions", ext.tuples.size()}, {"bound", 2}}));
    return out;
}

// ---------------------------------------------------------------- floer --

std::vector<Report> run_floer(const Config& cfg) {
    std::vector<Report> out;
    const std::string path = cfg.data_dir + "/floer_incidence.json";

    floer::IncidenceFile file;
    try {
        file = floer::load_incidence(path);
    } catch (const std::exception& e) {
        Json details{{"file", path}, {"error", e.what()}};
        out.push_back(make("floer/incidence-data", "collapsed-page differential data", false,
                           details));
        return out;
    }

    floer::GradedDims e2 = floer::build_e2(file.summands);
    std::vector<long> want_dims = {5, 15, 22, 22, 15, 5};
    bool dims_ok = true;
    for (int p = -1; p <= 4; ++p) dims_ok = dims_ok && e2.at(p) == want_dims[p + 1];
    out.push_back(make("floer/e2-dimensions", "cochain summand dimensions", dims_ok,
                       Json{{"dims", want_dims}}));

    auto val = floer::validate(file.diff, e2);
    out.push_back(make("floer/differential-ranks", "differential ranks on the collapsed page",
                       val.ok, Json{{"file", path}, {"problems", val.problems}}));
    if (!val.ok) return out;

    floer::GradedDims h = floer::cohomology_ranks(e2, file.diff);
    std::vector<long> want_h = {1, 3, 4, 4, 3, 1};
    bool h_ok = true;
    for (int p = -1; p <= 4; ++p) h_ok = h_ok && h.at(p) == want_h[p + 1];
    out.push_back(make("floer/cohomology-ranks", "Floer cohomology of the immersed brane", h_ok,
                       Json{{"ranks", want_h}}));

    bool pd = floer::poincare_check(h, 3);
    bool euler = (e2.euler() == 0) && (h.euler() == 0);
    out.push_back(make("floer/poincare-euler", "duality and Euler characteristic", pd && euler,
                       Json{{"poincare", pd}, {"eulerE2", e2.euler()}, {"eulerH", h.euler()}}));
    return out;
}

// ------------------------------------------------------------------ bps --

std::vector<Report> run_bps(const Config& cfg) {
    std::vector<Report> out;

    bool chi_ok = bps::chi_by_formula(0) == Quad(Rat(bps::chi(0)));
    for (long k = 1; k <= 1000; ++k) {
        Quad formula = bps::chi_by_formula(k);
        chi_ok = chi_ok && formula == Quad(Rat(bps::chi(k)));
        for (long m = 1; m * k <= 1000; ++m)
            chi_ok = chi_ok && bps::chi(k * m) == bps::chi(k) * bps::chi(m);
    }
    out.push_back(make("bps/character", "the order-3 Dirichlet character", chi_ok,
                       Json{{"formulaMatches", chi_ok}, {"multiplicativeUpTo", 1000}}));

    long order = std::min<long>(4, cfg.truncation_order);
    bps::Table nt;
    for (const auto& [d, v] : bps::tabulated_n_tilde())
        if (d <= order) nt[d] = v;
    bps::Table n = bps::invert(nt, order);
    bool ring_ok = true, half_ok = true;
    Json values = Json::object();
    for (const auto& [d, v] : n) {
        ring_ok = ring_ok && bps::ring_member(v);
        half_ok = half_ok && bps::ring_member(Quad(rat(1, 2)) * v);
        values[std::to_string(d)] = to_string(v.y);
    }
    out.push_back(make("bps/tabulated-values-ring-membership",
                       "integrality of the multiple-cover inversion", ring_ok && half_ok,
                       Json{{"order", order},
                            {"inRing", ring_ok},
                            {"halvesInRing", half_ok},
                            {"nValuesOverSqrtMinus3", values}}));

    bool rt = bps::expand(n, order) == nt;
    out.push_back(make("bps/round-trip", "triangular inversion of the resummation", rt,
                       Json{{"expandInvertIdentity", rt}}));

    double l2 = bps::dirichlet_l2(1e-10);
    double via_dilog = dilog::l2chi_via_dilog();
    bool l2_ok = std::abs(l2 - via_dilog) <= cfg.float_tolerance;
    out.push_back(make("bps/l-value-cross-check", "special L-value against the Clausen route",
                       l2_ok, Json{{"partialSums", l2}, {"clausenRoute", via_dilog}}));

    out.push_back(flag("bps/chi-case-display",
                       "case table of the character versus its defining formula",
                       Json{{"formulaValueAt2Mod3", -1},
                            {"note", "the defining formula (omega^k - omega^{2k})/sqrt(-3) "
                                     "forces chi(k) = -1 for k = 2 mod 3; a case-table "
                                     "transcription showing 2 is an erratum"}}));
    return out;
}

// ----------------------------------------------------------------- vshs --

std::vector<Report> run_vshs(const Config& cfg) {
    std::vector<Report> out;
    using vshs::Series;

    int order = std::min(4, cfg.truncation_order);
    Series psi = vshs::tabulated_potential(order);
    Series coupling = Series::constant(Quad(Rat(5)), "Q", order);  // test coupling constant
    auto cm = vshs::ConnectionMatrix::standard_shape(coupling);
    auto nf = vshs::NormalFunctionCandidate::from_potential(psi);
    bool horiz = vshs::horizontality_check(cm, nf);
    // e1 component must be exactly -sum d^2 nTilde_d Q^d
    auto grad = vshs::apply_connection(cm, nf.nu_tilde);
    bool e1_exact = true;
    for (int d = 0; d <= order; ++d)
        e1_exact = e1_exact && grad[2].c[d] == Quad(Rat(d * d)) * psi.c[d];
    out.push_back(make("vshs/horizontality", "the potential defines a normal function",
                       horiz && e1_exact,
                       Json{{"order", order}, {"e1ComponentExact", e1_exact}}));

    std::mt19937_64 rng(58111);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
    bool ext_ok = true;
    for (int t = 0; t < 50 && ext_ok; ++t) {
        Series random_psi("Q", 8);
        for (int k = 0; k <= 8; ++k)
            random_psi.c[k] = Quad(rat(num(rng), den(rng)), rat(num(rng), den(rng)));
        Series cpl("Q", 8);
        for (int k = 0; k <= 8; ++k) cpl.c[k] = Quad(rat(num(rng), den(rng)));
        auto m = vshs::ConnectionMatrix::standard_shape(cpl);
        try {
            auto spec = vshs::build_extension(m, vshs::NormalFunctionCandidate::from_potential(random_psi), 1);
            ext_ok = ext_ok && spec.transversality_ok;
        } catch (const std::exception&) {
            ext_ok = false;
        }
    }
    out.push_back(make("vshs/extension-transversality",
                       "Griffiths transversality of the rank-5 extension", ext_ok,
                       Json{{"randomPotentials", 50}, {"order", 8}}));

    auto resA = vshs::residue_checks(cm);
    Series yukawa = Series::constant(Quad(Rat(5)), "Q", order);
    for (int k = 1; k <= order; ++k) yukawa.c[k] = Quad(Rat(k));  // any series shape
    auto resB = vshs::residue_checks(vshs::ConnectionMatrix::standard_shape(yukawa));
    out.push_back(make("vshs/residue-nilpotency", "regular singularity of both model shapes",
                       resA.ok() && resB.ok(),
                       Json{{"n4ZeroA", resA.fourth_power_zero},
                            {"n4ZeroB", resB.fourth_power_zero},
                            {"kernelFlag", resA.kernel_flag_dims}}));

    Series w0 = Series::monomial(Quad::one(), 1, "z", order);  // w0 = z
    bool w1_ok = vshs::w1_from_w0(w0) == w0;
    Series w0c = Series::constant(Quad(Rat(7)), "z", order);
    w1_ok = w1_ok && vshs::w1_from_w0(w0c).is_zero();
    // vanishing at 0 is preserved
    Series w0v("z", order);
    for (int k = 1; k <= order; ++k) w0v.c[k] = Quad(Rat(k + 1));
    w1_ok = w1_ok && vshs::w1_from_w0(w0v).c[0].is_zero();
    out.push_back(make("vshs/w1-from-w0", "the derivative relation between the period parts",
                       w1_ok, Json{{"thetaRelation", w1_ok}}));
    return out;
}

// ---------------------------------------------------------------- dilog --

std::vector<Report> run_dilog(const Config& cfg) {
    std::vector<Report> out;
    constexpr double pi = std::numbers::pi;

    double basel = dilog::li2({1.0, 0.0}).real();
    bool basel_ok = std::abs(basel - pi * pi / 6.0) <= 1e-12;
    out.push_back(make("dilog/basel", "the dilogarithm at 1", basel_ok,
                       Json{{"li2At1", basel}}));

    double lhs = dilog::l2chi_via_dilog();
    double rhs = bps::dirichlet_l2(1e-10);
    double dup = dilog::clausen2(2 * pi / 3) - (2.0 / 3.0) * dilog::clausen2(pi / 3);
    bool cross_ok = std::abs(lhs - rhs) <= cfg.float_tolerance && std::abs(dup) <= 1e-10 && lhs > 0;
    out.push_back(make("dilog/l-value", "Clausen route to the special L-value", cross_ok,
                       Json{{"clausenRoute", lhs}, {"partialSums", rhs},
                            {"duplicationDefect", dup}}));

    auto vol = dilog::volume_report();
    bool vol_ok = std::abs(vol.tetrahedron - 1.0149416064) <= 1e-8 &&
                  vol.chain_link == 10 * vol.tetrahedron &&
                  vol.cover125 == 125 * vol.chain_link && vol.jmw_multiplier == 130 &&
                  vol.cover_vs_prediction_mismatch;
    out.push_back(make("dilog/volumes", "ideal tetrahedron counts and hyperbolic volumes",
                       vol_ok,
                       Json{{"tetrahedron", vol.tetrahedron},
                            {"chainLink", vol.chain_link},
                            {"cover125", vol.cover125},
                            {"predicted", vol.jmw_prediction},
                            {"mismatch", vol.cover_vs_prediction_mismatch}}));

    out.push_back(flag("dilog/volume-sign-convention",
                       "sign of the dilogarithm argument in the volume formulas",
                       Json{{"note", "for omega = e^{2 pi i/3} the value Im Li2(-omega) is "
                                     "negative while volumes are positive; the magnitude "
                                     "Cl2(pi/3) is used throughout"}}));
    return out;
}

std::vector<Report> run_all(const Config& cfg) {
    std::vector<Report> all;
    for (auto* fn : {run_dwork, run_tropical, run_chainlink, run_locsys, run_floer, run_bps,
                     run_vshs, run_dilog}) {
        auto part = fn(cfg);
        all.insert(all.end(), part.begin(), part.end());
    }
    // Order-normalize so concurrent execution, if ever introduced, cannot
    // perturb the emitted report.
    std::stable_sort(all.begin(), all.end(),
                     [](const Report& a, const Report& b) { return a.check_name < b.check_name; });
    return all;
}

Json to_json(const std::vector<Report>& reports) {
    Json checks = Json::array();
    for (const auto& r : reports)
        checks.push_back(Json{{"checkName", r.check_name},
                              {"paperCitation", r.citation},
                              {"status", status_str(r.status)},
                              {"details", r.details},
                              {"elapsedMillis", r.elapsed_millis}});
    int fails = 0, flagged = 0;
    for (const auto& r : reports) {
        if (r.status == Status::Fail) ++fails;
        if (r.status == Status::Flagged) ++flagged;
    }
    return Json{{"schemaVersion", 1},
                {"checks", checks},
                {"summary", Json{{"total", reports.size()},
                                 {"pass", reports.size() - fails - flagged},
                                 {"fail", fails},
                                 {"flagged", flagged}}}};
}

std::string to_markdown(const std::vector<Report>& reports) {
    std::ostringstream os;
    os << "| check | status | citation |\n|---|---|---|\n";
    for (const auto& r : reports)
        os << "| " << r.check_name << " | " << status_str(r.status) << " | " << r.citation
           << " |\n";
    return os.str();
}

int exit_code(const std::vector<Report>& reports) {
    for (const auto& r : reports)
        if (r.status == Status::Fail) return 1;
    return 0;
}

}  // namespace suite
}  // namespace vgc
