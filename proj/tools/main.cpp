// fairchore: solve, verify, generate, and exhaustively cross-check
// weighted-EF1 + Pareto-optimal chore allocations.
//
// Exit codes: 0 success, 1 I/O or validation error, 2 unsupported instance,
// 3 oracle budget exceeded.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fairchore/errors.hpp"
#include "fairchore/generator.hpp"
#include "fairchore/io.hpp"
#include "fairchore/oracle.hpp"
#include "fairchore/three_types_solver.hpp"
#include "fairchore/two_chore_types_solver.hpp"
#include "fairchore/verify.hpp"

namespace {

using namespace fairchore;
using fairchore::io::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitBudget = 3;

oracle::Budget budget_from_env() {
    oracle::Budget budget;
    if (const char* raw = std::getenv("FAIRCHORE_ORACLE_BUDGET")) {
        try {
            budget.enumeration_limit = std::stoull(raw);
        } catch (const std::exception&) {
            throw ValidationError("FAIRCHORE_ORACLE_BUDGET must be an unsigned integer");
        }
    }
    return budget;
}

json trace_from_three_types(const ThreeTypesResult& result) {
    json trace = json::array();
    for (const auto& event : result.trace) {
        json entry{{"beta", event.beta}, {"lambda", event.lambda}, {"mu", event.mu}};
        switch (event.kind) {
            case StepKind::TransferBetaToLambda: entry["kind"] = "transfer-beta-to-lambda"; break;
            case StepKind::TransferMuToLambda: entry["kind"] = "transfer-mu-to-lambda"; break;
            case StepKind::TransferBetaToMu: entry["kind"] = "transfer-beta-to-mu"; break;
            case StepKind::DropMuLambda: entry["kind"] = "drop-mu-lambda"; break;
            case StepKind::DropLambda: entry["kind"] = "drop-lambda"; break;
        }
        if (event.chore >= 0)
            entry["chore"] = event.chore;
        else
            entry["gamma"] = io::rational_to_json(event.gamma);
        trace.push_back(entry);
    }
    return trace;
}

json trace_from_two_chore_types(const TwoChoreTypesResult& result) {
    json trace = json::array();
    for (const auto& phase : result.phases) {
        const char* label = phase.result == PhaseResult::Success ? "success"
                            : phase.result == PhaseResult::AFail ? "a-fail"
                                                                 : "b-fail";
        trace.push_back({{"kind", "phase"},
                         {"pivot", phase.pivot},
                         {"result", label},
                         {"transfers", phase.transfers}});
    }
    return trace;
}

void print_report(const Instance& instance, const FairnessReport& report,
                  const std::string& name) {
    std::cout << name << ": " << (report.verdict ? "ok" : "violated") << "\n";
    for (const auto& witness : report.witnesses)
        std::cout << "  " << instance.agent_name(witness.envier) << " envies "
                  << instance.agent_name(witness.envied) << ": " << format_rational(witness.lhs)
                  << " > " << format_rational(witness.rhs) << "\n";
}

int run_solve(const std::string& input, const std::string& algorithm, const std::string& output,
              bool verify) {
    const Instance instance = io::load_instance(input);
    auto [agent_types, chore_types] = classify(instance);

    std::string chosen = algorithm;
    if (chosen == "auto") {
        if (agent_types.type_count() <= 3)
            chosen = "three-agent-types";
        else if (chore_types.type_count() <= 2)
            chosen = "two-chore-types";
        else
            throw UnsupportedInstanceError(
                "instance has " + std::to_string(agent_types.type_count()) +
                " agent types and " + std::to_string(chore_types.type_count()) +
                " chore types; supported classes are <=3 agent types or <=2 chore types");
    }

    io::Solution solution;
    solution.algorithm = chosen;
    solution.hash = io::instance_hash(instance);
    CompetitiveState state;
    if (chosen == "three-agent-types") {
        ThreeTypesResult result = solve_three_agent_types(instance);
        solution.trace = trace_from_three_types(result);
        state = std::move(result.state);
    } else if (chosen == "two-chore-types") {
        TwoChoreTypesResult result = solve_two_chore_types(instance);
        solution.trace = trace_from_two_chore_types(result);
        state = std::move(result.state);
    } else {
        throw ValidationError("unknown algorithm: " + chosen);
    }

    solution.allocation = state.allocation;
    solution.payments = state.payments;
    solution.certificate.mpb_ok = check_mpb_certificate(state);
    const auto wef1 = check_wef1(instance, state.allocation);
    const auto wpef1 = check_wpef1(state, instance.weights);
    solution.certificate.wef1_ok = wef1.verdict;
    solution.certificate.wpef1_ok = wpef1.verdict;
    if (!solution.certificate.wef1_ok || !solution.certificate.mpb_ok)
        throw InternalError("solver returned an uncertified allocation");

    if (!output.empty()) io::save_solution(solution, output);
    if (verify) {
        print_report(instance, wef1, "wEF1");
        print_report(instance, wpef1, "wpEF1");
        std::cout << "MPB certificate: " << (solution.certificate.mpb_ok ? "ok" : "violated")
                  << "\n";
    }
    std::cout << "solved with " << chosen << "; wEF1 "
              << (solution.certificate.wef1_ok ? "ok" : "violated") << ", fPO certificate "
              << (solution.certificate.mpb_ok ? "ok" : "violated") << "\n";
    return kExitOk;
}

int run_verify(const std::string& input, const std::string& solution_path) {
    const Instance instance = io::load_instance(input);
    const io::Solution solution = io::load_solution(solution_path);
    if (!solution.hash.empty() && solution.hash != io::instance_hash(instance)) {
        std::cerr << "instance hash mismatch: solution was produced for a different input\n";
        return kExitValidation;
    }
    if (solution.allocation.agent_count() != instance.agent_count() ||
        !solution.allocation.is_complete_partition(instance.chore_count())) {
        std::cerr << "solution allocation is not a complete partition of the chores\n";
        return kExitValidation;
    }

    const auto wef1 = check_wef1(instance, solution.allocation);
    print_report(instance, wef1, "wEF1");
    bool ok = wef1.verdict;
    if (!solution.payments.empty()) {
        CompetitiveState state =
            make_competitive_state(instance, solution.allocation, solution.payments);
        const bool mpb = check_mpb_certificate(state);
        print_report(instance, check_wpef1(state, instance.weights), "wpEF1");
        std::cout << "MPB certificate: " << (mpb ? "ok" : "violated") << "\n";
        ok = ok && mpb;
    }
    return ok ? kExitOk : kExitValidation;
}

int run_gen(std::uint64_t seed, const GenSpec& spec, const std::string& output) {
    if (spec.agent_types > 3) throw ValidationError("agent-types must lie in {1,2,3}");
    const Instance instance = random_instance(seed, spec);
    if (!output.empty())
        io::save_instance(instance, output);
    else
        std::cout << io::instance_to_json(instance).dump(2) << "\n";
    return kExitOk;
}

int run_oracle(const std::string& input, const std::string& candidate_path,
               const std::string& mode) {
    const Instance instance = io::load_instance(input);
    const oracle::Budget budget = budget_from_env();
    if (mode == "search") {
        const auto set = oracle::exhaustive_wef1_po_set(instance, budget);
        std::cout << "wEF1+PO allocations: " << set.size() << "\n";
        if (!set.empty()) {
            std::cout << "example:";
            for (int i = 0; i < set.front().agent_count(); ++i) {
                std::cout << " " << instance.agent_name(i) << "=[";
                for (std::size_t k = 0; k < set.front().bundles[i].size(); ++k)
                    std::cout << (k ? "," : "") << set.front().bundles[i][k];
                std::cout << "]";
            }
            std::cout << "\n";
        }
        return kExitOk;
    }
    if (mode != "check") throw ValidationError("mode must be search or check");
    if (candidate_path.empty()) throw ValidationError("check mode needs --candidate");
    const io::Solution candidate = io::load_solution(candidate_path);
    if (!candidate.allocation.is_complete_partition(instance.chore_count()))
        throw ValidationError("candidate allocation is not a complete partition");
    oracle::DominationQuery query{instance, candidate.allocation};
    const auto integral = oracle::is_integrally_dominated(query, budget);
    const bool fractional = oracle::is_fractionally_dominated(query, budget);
    std::cout << "integrally dominated: " << (integral ? "yes" : "no") << "\n";
    std::cout << "fractionally dominated: " << (fractional ? "yes" : "no") << "\n";
    return (integral || fractional) ? kExitValidation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted-EF1 + fPO chore allocation toolkit"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "compute a wEF1+fPO allocation");
    std::string solve_input, solve_output;
    std::string algorithm = "auto";
    bool verify_flag = false;
    solve->add_option("--input", solve_input, "instance JSON file")->required();
    solve->add_option("--algorithm", algorithm, "auto|three-agent-types|two-chore-types")
        ->check(CLI::IsMember({"auto", "three-agent-types", "two-chore-types"}));
    solve->add_option("--output", solve_output, "solution JSON file");
    solve->add_flag("--verify", verify_flag, "run all verifiers and print reports");

    auto* verify = app.add_subcommand("verify", "verify a solution file");
    std::string verify_input, verify_solution;
    verify->add_option("--input", verify_input, "instance JSON file")->required();
    verify->add_option("--solution", verify_solution, "solution JSON file")->required();

    auto* gen = app.add_subcommand("gen", "generate a seeded random instance");
    std::uint64_t seed = 0;
    GenSpec spec;
    std::string gen_output;
    std::string weight_range = "1:5", cost_range = "1:20";
    gen->add_option("--seed", seed, "PRNG seed")->required();
    gen->add_option("--n", spec.agents, "agent count")->required();
    gen->add_option("--m", spec.chores, "chore count")->required();
    gen->add_option("--agent-types", spec.agent_types, "number of agent types (1-3)");
    gen->add_option("--chore-types", spec.chore_types, "number of chore types");
    gen->add_option("--weight-range", weight_range, "LO:HI integer weights");
    gen->add_option("--cost-range", cost_range, "LO:HI integer disutilities");
    gen->add_option("--output", gen_output, "instance JSON file (stdout if omitted)");

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth");
    std::string oracle_input, oracle_candidate, oracle_mode = "search";
    oracle_cmd->add_option("--input", oracle_input, "instance JSON file")->required();
    oracle_cmd->add_option("--candidate", oracle_candidate, "solution JSON file to check");
    oracle_cmd->add_option("--mode", oracle_mode, "search|check")
        ->check(CLI::IsMember({"search", "check"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitValidation : kExitOk;
    }

    try {
        if (solve->parsed()) return run_solve(solve_input, algorithm, solve_output, verify_flag);
        if (verify->parsed()) return run_verify(verify_input, verify_solution);
        if (gen->parsed()) {
            auto parse_range = [](const std::string& text, long long& lo, long long& hi) {
                const auto colon = text.find(':');
                if (colon == std::string::npos)
                    throw ValidationError("range must look like LO:HI");
                lo = std::stoll(text.substr(0, colon));
                hi = std::stoll(text.substr(colon + 1));
            };
            parse_range(weight_range, spec.weight_lo, spec.weight_hi);
            parse_range(cost_range, spec.cost_lo, spec.cost_hi);
            if (spec.chores == 0) spec.chore_types = 0;
            return run_gen(seed, spec, gen_output);
        }
        if (oracle_cmd->parsed()) return run_oracle(oracle_input, oracle_candidate, oracle_mode);
    } catch (const BudgetExceededError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const UnsupportedInstanceError& e) {
        std::cerr << "unsupported instance: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
