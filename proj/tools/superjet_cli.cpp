// Batch verification driver: every command recomputes one slice of the
// exceptional-superalgebra certification and prints a deterministic report.
#include "superjet/clifford.hpp"
#include "superjet/cubicforms.hpp"
#include "superjet/f4.hpp"
#include "superjet/parallel.hpp"
#include "superjet/pdesym.hpp"
#include "superjet/report.hpp"
#include "superjet/rootkit.hpp"
#include "superjet/spencer.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

namespace superjet {
std::string report_body_json(const Report& rep);
}

using namespace superjet;

namespace {

Report run_verify_f4(bool parallel) {
    Report rep;
    rep.command = "verify-f4";
    const F4Algebra& F = f4();
    rep.merge(F.verify_brackets());
    rep.merge(F.verify_super_jacobi(parallel));
    rep.merge(F.verify_root_decomposition());
    rep.merge(F.verify_regrade(SystemLabel::I, {1}, grading_dims(simple_system(SystemLabel::I), {1})));
    rep.merge(F.verify_regrade(SystemLabel::VI, {4}, grading_dims(simple_system(SystemLabel::VI), {4})));
    rep.merge(F.verify_centralizers());
    rep.merge(F.verify_transitivity_and_generation());
    rep.merge(F.freudenthal_check());
    return rep;
}

Report run_root_systems() {
    Report rep;
    rep.command = "root-systems";
    rep.merge(verify_simple_system_closure());
    rep.merge(verify_positive_root_tables());
    rep.merge(verify_cartan_matrices());
    return rep;
}

Report run_gradings() {
    Report rep;
    rep.command = "gradings";
    rep.merge(verify_parabolic_gradings());
    // the alpha-parameter orbit identifying the degree-zero superalgebra
    auto orb = alpha_orbit(mpq_class(2));
    std::string got;
    for (auto& x : orb) got += x.get_str() + ",";
    rep.add("alpha_2_orbit", "-3,-3/2,-2/3,-1/3,1/2,2,", got);
    bool has = orb.count(mpq_class(-2, 3)) == 1;
    rep.add_bool("orbit_contains_minus_two_thirds", has);
    auto orb1 = alpha_orbit(mpq_class(1));
    rep.add("alpha_1_orbit_size", "3", std::to_string(orb1.size()));
    return rep;
}

Report run_spencer(const std::string& grading, int degree, bool parallel) {
    if (grading == "odd" || grading == "mixed") {
        spencer::Grading g = grading == "odd" ? spencer::Grading::Odd : spencer::Grading::Mixed;
        Report rep = spencer::verify(g, parallel);
        if (degree >= 0) {
            Report filtered;
            filtered.command = rep.command + "-d" + std::to_string(degree);
            std::string tag = "H" + std::to_string(degree);
            for (auto& c : rep.checks)
                if (c.name.rfind(tag, 0) == 0) filtered.checks.push_back(c);
            return filtered;
        }
        return rep;
    }
    Report rep;
    rep.command = "spencer";
    rep.merge(spencer::verify(spencer::Grading::Odd, parallel));
    rep.merge(spencer::verify(spencer::Grading::Mixed, parallel));
    return rep;
}

Report run_cubic_identity() {
    Report rep;
    rep.command = "cubic-identity";
    rep.merge(cubicforms::verify_cubic_identity());
    rep.merge(cubicforms::verify_osp22(Scalar(1)));
    rep.merge(cubicforms::invariant_cubics_kernel());
    return rep;
}

Report run_verify_2pde(bool parallel) {
    Report rep;
    rep.command = "verify-2pde";
    rep.merge(cubicforms::verify_osculation());
    rep.merge(pdesym::verify_second_order(parallel));
    rep.merge(pdesym::perturbation_probe());
    return rep;
}

Report run_verify_3pde(bool parallel) {
    Report rep;
    rep.command = "verify-3pde";
    rep.merge(pdesym::verify_exponential_matrix());
    rep.merge(pdesym::verify_third_order(parallel));
    rep.merge(pdesym::isomorphism_witness());
    return rep;
}

Report run_quartic(bool parallel) {
    Report rep;
    rep.command = "quartic";
    rep.merge(clifford().verify_cayley_quartic());
    rep.merge(clifford().lagrangian_kernel_check());
    rep.merge(pdesym::verify_quartic_symmetries(parallel));
    return rep;
}

Report run_clifford(bool parallel) {
    Report rep;
    rep.command = "clifford";
    const CliffordModel& C = clifford();
    rep.merge(C.verify_gamma_relations());
    rep.merge(C.verify_pairing_invariance());
    rep.merge(C.verify_fierz(parallel));
    rep.merge(C.verify_cubic_spinor_identity());
    rep.merge(C.verify_spin_matrix_pattern());
    rep.add("omega_vanishing_rank", "168", std::to_string(C.omega_vanishing_rank()));
    return rep;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification suite for the exceptional Lie superalgebra of dimension (24|16), its contact geometries, and the associated super-PDE systems"};
    app.name("superjet");

    std::string command;
    app.add_option("command", command,
                   "one of: verify-f4, root-systems, gradings, spencer, cubic-identity, "
                   "verify-2pde, verify-3pde, quartic, flag-growth, solution-space, clifford, all")
        ->required();
    bool json_out = false;
    app.add_flag("--json", json_out, "emit the machine-readable report");
    std::string fixture;
    app.add_option("--fixture", fixture, "write the report body to PATH, or compare when PATH exists");
    std::string grading = "";
    app.add_option("--grading", grading, "spencer grading: odd or mixed")
        ->check(CLI::IsMember({"odd", "mixed", ""}));
    int degree = -1;
    app.add_option("--degree", degree, "restrict the spencer report to one degree");
    std::string export_path;
    app.add_option("--export", export_path,
                   "verify-f4: write structure constants; verify-2pde/3pde: write the system");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    bool parallel = thread_count() > 1;
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    if (command == "verify-f4") rep = run_verify_f4(parallel);
    else if (command == "root-systems") rep = run_root_systems();
    else if (command == "gradings") rep = run_gradings();
    else if (command == "spencer") rep = run_spencer(grading, degree, parallel);
    else if (command == "cubic-identity") rep = run_cubic_identity();
    else if (command == "verify-2pde") rep = run_verify_2pde(parallel);
    else if (command == "verify-3pde") rep = run_verify_3pde(parallel);
    else if (command == "quartic") rep = run_quartic(parallel);
    else if (command == "flag-growth") rep = pdesym::verify_flag_growth();
    else if (command == "solution-space") rep = pdesym::verify_solution_space();
    else if (command == "clifford") rep = run_clifford(parallel);
    else if (command == "all") {
        rep.command = "all";
        rep.merge(run_clifford(parallel));
        rep.merge(run_root_systems());
        rep.merge(run_gradings());
        rep.merge(run_verify_f4(parallel));
        rep.merge(run_spencer("", -1, parallel));
        rep.merge(run_cubic_identity());
        rep.merge(run_verify_2pde(parallel));
        rep.merge(run_verify_3pde(parallel));
        rep.merge(run_quartic(parallel));
        rep.merge(pdesym::verify_flag_growth());
        rep.merge(pdesym::verify_solution_space());
        rep.merge(pdesym::verify_bracket_infrastructure());
    } else {
        std::cerr << "unknown command: " << command << "\n";
        return 2;
    }
    auto t1 = std::chrono::steady_clock::now();
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

    if (!export_path.empty()) {
        std::ofstream out(export_path);
        if (command == "verify-f4") {
            out << f4().structure_constants_json() << "\n";
        } else if (command == "verify-2pde") {
            out << pdesym::second_order_system().to_json() << "\n";
        } else if (command == "verify-3pde") {
            out << pdesym::build_incidence_pipeline().system->to_json() << "\n";
        } else if (command == "spencer") {
            if (grading == "mixed")
                out << spencer::to_json(spencer::compute(spencer::Grading::Mixed, parallel)) << "\n";
            else
                out << spencer::to_json(spencer::compute(spencer::Grading::Odd, parallel)) << "\n";
        }
    }

    std::string body = report_body_json(rep);
    if (!fixture.empty()) {
        std::ifstream in(fixture);
        if (in.good()) {
            std::string existing((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            if (existing != body + "\n") {
                std::cerr << "fixture mismatch: " << fixture << "\n";
                return 1;
            }
        } else {
            std::ofstream out(fixture);
            out << body << "\n";
        }
    }

    if (json_out) {
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(body);
        j["wall_time_ms"] = ms;
        std::cout << j.dump(2) << "\n";
    } else {
        int passed = 0;
        for (auto& c : rep.checks) {
            std::cout << (c.exact ? "PASS " : "FAIL ") << c.name;
            if (!c.exact) std::cout << "  expected=" << c.expected << " got=" << c.got;
            std::cout << "\n";
            passed += c.exact ? 1 : 0;
        }
        std::cout << rep.command << ": " << passed << "/" << rep.checks.size() << " checks, "
                  << (rep.pass() ? "PASS" : "FAIL") << " (" << ms << " ms)\n";
    }
    return rep.pass() ? 0 : 1;
}
