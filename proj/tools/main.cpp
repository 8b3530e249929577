#include "boxlogic/io.hpp"
#include "boxlogic/pasting.hpp"
#include "boxlogic/products.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace boxlogic;
using nlohmann::json;

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::create_directories(path.parent_path().empty() ? "."
                                                                   : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
}

void write_json(const std::filesystem::path& path, const json& j) {
    write_text(path, j.dump(2) + "\n");
}

struct Options {
    std::string spec_path;
    std::string out_dir = ".";
    std::string behavior_path;
    std::string format = "json";
    std::string expr;
    std::size_t budget = kDefaultElementBudget;
    bool use_pr = false;
};

BoxWorld make_world(const Options& opt) {
    auto [left, right] = load_box_spec(opt.spec_path);
    return BoxWorld(std::move(left), std::move(right), opt.budget);
}

Behavior make_behavior(const Options& opt) {
    if (opt.use_pr && !opt.behavior_path.empty())
        throw InputError("choose either --behavior or --pr");
    if (opt.use_pr) return pr_box_state();
    if (opt.behavior_path.empty()) throw InputError("need --behavior PATH or --pr");
    return load_behavior(opt.behavior_path);
}

int cmd_build(const Options& opt) {
    const BoxWorld w = make_world(opt);
    const std::filesystem::path dir = opt.out_dir;
    if (opt.format == "dot") {
        write_text(dir / "left_logic.dot", logic_to_dot(w.left_logic(), "left_logic"));
        write_text(dir / "right_logic.dot", logic_to_dot(w.right_logic(), "right_logic"));
        write_text(dir / "two_box_logic.dot", logic_to_dot(w.logic(), "two_box_logic"));
    } else {
        write_json(dir / "left_logic.json", logic_to_json(w.left_logic()));
        write_json(dir / "right_logic.json", logic_to_json(w.right_logic()));
        write_json(dir / "two_box_logic.json", logic_to_json(w.logic()));
    }
    std::cout << "left logic: " << w.left_logic().size() << " events, "
              << w.left_logic().atoms().size() << " atoms\n"
              << "right logic: " << w.right_logic().size() << " events, "
              << w.right_logic().atoms().size() << " atoms\n"
              << "two-box logic: " << w.logic().size() << " events, "
              << w.logic().atoms().size() << " atoms\n";
    return 0;
}

int cmd_axioms(const Options& opt) {
    const BoxWorld w = make_world(opt);
    json out = json::object();
    bool all = true;
    const auto run = [&](const char* name, const ConcreteLogic& L) {
        const Report r = L.verify_axioms();
        out[name] = r.to_json();
        all = all && r.all_pass();
        std::cout << name << ": " << (r.all_pass() ? "pass" : "FAIL") << "\n";
    };
    run("left_logic", w.left_logic());
    run("right_logic", w.right_logic());
    run("two_box_logic", w.logic());
    write_json(std::filesystem::path(opt.out_dir) / "axioms_report.json", out);
    return all ? 0 : 1;
}

int cmd_states(const Options& opt) {
    const BoxWorld w = make_world(opt);
    const auto tv = enumerate_two_valued_states(w);
    json tv_json = json::array();
    for (const auto& chi : tv) tv_json.push_back(behavior_to_json(chi.behavior));

    const StatePolytope poly = ns_polytope(w);
    const auto& verts = poly.vertices();
    std::size_t integral = 0;
    for (const auto& v : verts)
        if (v.is_two_valued()) ++integral;

    write_json(std::filesystem::path(opt.out_dir) / "states.json",
               json{{"two_valued_count", tv.size()}, {"two_valued", tv_json}});
    write_json(std::filesystem::path(opt.out_dir) / "polytope.json", polytope_to_json(poly));
    std::cout << "two-valued states: " << tv.size() << "\n"
              << "polytope vertices: " << verts.size() << " (" << integral
              << " deterministic)\n";
    return 0;
}

int cmd_verify(const Options& opt) {
    const BoxWorld w = make_world(opt);
    const ProductWitness wit = w.build_product_witness();

    Report report = verify_free_orthodistributive(w, wit);
    report.add({.check_id = "atoms_product",
                .pass = verify_atoms_product(w, wit),
                .counts = {{"atoms", w.logic().atoms().size()}}});
    report.merge(verify_strong_tensor_product(w, wit));

    const StatePolytope poly = ns_polytope(w);
    report.merge(verify_weak_conditions(w, wit, poly.vertices()));

    report.add({.check_id = "set_representable.two_box",
                .pass = is_set_representable(w.logic())});
    report.add({.check_id = "set_representable.left",
                .pass = is_set_representable(w.left_logic())});
    report.add({.check_id = "set_representable.right",
                .pass = is_set_representable(w.right_logic())});

    // the single-box pasting structure, certified by isomorphism
    {
        const auto pasting_blocks = [](const BoxSpec& spec) {
            std::vector<ConcreteLogic> blocks;
            for (const int k : spec.outcome_sizes)
                blocks.push_back(single_box_logic(BoxSpec{{k}}));
            return blocks;
        };
        const auto blocks_l = pasting_blocks(w.left());
        const auto blocks_r = pasting_blocks(w.right());
        report.add({.check_id = "pasting.left",
                    .pass = are_isomorphic(w.left_logic(),
                                           zero_one_pasting_abstract(blocks_l))});
        report.add({.check_id = "pasting.right",
                    .pass = are_isomorphic(w.right_logic(),
                                           zero_one_pasting_abstract(blocks_r))});
    }

    write_json(std::filesystem::path(opt.out_dir) / "verify_report.json", report.to_json());
    for (const auto& c : report.checks)
        std::cout << (c.pass ? "  pass  " : "  FAIL  ") << c.check_id << "\n";
    std::cout << (report.all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return report.all_pass() ? 0 : 1;
}

int cmd_chsh(const Options& opt) {
    const Behavior b = make_behavior(opt);
    std::cout << chsh_value(b).str() << "\n";
    return 0;
}

int cmd_evaluate(const Options& opt) {
    const BoxWorld w = make_world(opt);
    const Behavior b = make_behavior(opt);
    const EventId e = parse_event_expr(w, opt.expr);
    std::cout << evaluate(b, w, e).str() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct and verify the quantum logics of no-signaling box worlds"};
    app.require_subcommand(1);

    Options opt;
    const auto add_common = [&](CLI::App* cmd, bool needs_spec) {
        if (needs_spec)
            cmd->add_option("--spec", opt.spec_path, "box-world spec file (JSON)")
                ->required();
        cmd->add_option("--out", opt.out_dir, "output directory for artifacts");
        cmd->add_option("--budget", opt.budget, "element budget for logic closure");
    };

    auto* build = app.add_subcommand("build", "construct the logics and export them");
    add_common(build, true);
    build->add_option("--format", opt.format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));

    auto* axioms = app.add_subcommand("axioms", "check the logic axioms on all three logics");
    add_common(axioms, true);

    auto* states = app.add_subcommand("states", "enumerate two-valued states and polytope vertices");
    add_common(states, true);

    auto* verify = app.add_subcommand("verify", "run the product and tensor-product verification suites");
    add_common(verify, true);

    auto* chsh = app.add_subcommand("chsh", "CHSH value of a behavior");
    chsh->add_option("--behavior", opt.behavior_path, "behavior file (JSON)");
    chsh->add_flag("--pr", opt.use_pr, "use the built-in extremal box");

    auto* evaluate = app.add_subcommand("evaluate", "value of a behavior on an event expression");
    add_common(evaluate, true);
    evaluate->add_option("--behavior", opt.behavior_path, "behavior file (JSON)");
    evaluate->add_flag("--pr", opt.use_pr, "use the built-in extremal box");
    evaluate->add_option("expr", opt.expr, "event expression, e.g. \"[1:0,1:0]+[1:1,1:1]\"")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(opt);
        if (axioms->parsed()) return cmd_axioms(opt);
        if (states->parsed()) return cmd_states(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (chsh->parsed()) return cmd_chsh(opt);
        if (evaluate->parsed()) return cmd_evaluate(opt);
    } catch (const boxlogic::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const boxlogic::BudgetError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
