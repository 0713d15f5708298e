#include "recall/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace recall {

namespace {

struct RawFlags {
    int neurons = 16;
    int levels = 2;
    std::string rule = "delta";
    int sites = 1;
    double eta = 0.1;
    double theta = 1.0;
    int epochs = 100;
    int passes = 50;
    double wh_epsilon = 0.01;
    int trials = 50;
    std::uint64_t seed = 42;
    int min_memories = 1;
    std::optional<int> max_memories;
    std::string out_path = "curve.csv";
};

void add_experiment_flags(CLI::App* cmd, RawFlags& f) {
    cmd->add_option("--neurons", f.neurons, "Network size n")->capture_default_str();
    cmd->add_option("--levels", f.levels, "Neuron levels, 2 or 4")
        ->check(CLI::IsMember({2, 4}))
        ->capture_default_str();
    cmd->add_option("--rule", f.rule, "Training rule")
        ->check(CLI::IsMember({"hebbian", "widrow-hoff", "delta"}))
        ->capture_default_str();
    cmd->add_option("--sites", f.sites, "Active sites per memory")->capture_default_str();
    cmd->add_option("--eta", f.eta, "Learning constant")->capture_default_str();
    cmd->add_option("--theta", f.theta, "Quaternary threshold scale")->capture_default_str();
    cmd->add_option("--epochs", f.epochs, "Max training epochs")->capture_default_str();
    cmd->add_option("--passes", f.passes, "Max delta passes per memory")->capture_default_str();
    cmd->add_option("--wh-epsilon", f.wh_epsilon, "Widrow-Hoff residual tolerance")
        ->capture_default_str();
    cmd->add_option("--trials", f.trials, "Trials per memory count")->capture_default_str();
    cmd->add_option("--seed", f.seed, "Base seed; env RECALL_LAB_SEED overrides this default")
        ->envname("RECALL_LAB_SEED")
        ->capture_default_str();
    cmd->add_option("--min-memories", f.min_memories, "First memory count of the sweep")
        ->capture_default_str();
    cmd->add_option("--max-memories", f.max_memories, "Last memory count; defaults to --neurons");
    cmd->add_option("--out", f.out_path, "Output CSV path (sweep)")->capture_default_str();
}

ExperimentConfig to_config(const RawFlags& f) {
    ExperimentConfig cfg;
    cfg.neurons = f.neurons;
    cfg.levels = f.levels == 2 ? Levels::Binary : Levels::Quaternary;
    cfg.rule = f.rule == "hebbian"      ? Rule::Hebbian
               : f.rule == "widrow-hoff" ? Rule::WidrowHoff
                                         : Rule::Delta;
    cfg.sites_per_memory = f.sites;
    cfg.learning.eta = f.eta;
    cfg.learning.max_passes_per_memory = f.passes;
    cfg.learning.max_epochs = f.epochs;
    cfg.learning.wh_error_tolerance = f.wh_epsilon;
    cfg.learning.quantizer = QuantizerConfig{cfg.levels, f.theta};
    cfg.trials = f.trials;
    cfg.base_seed = f.seed;
    cfg.min_memories = f.min_memories;
    cfg.max_memories = f.max_memories.value_or(f.neurons);
    return cfg;
}

}  // namespace

std::optional<CliInvocation> parse_args(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"B-matrix associative memory capacity experiments", "recall_lab"};
    app.require_subcommand(1);
    RawFlags flags;
    CLI::App* sweep = app.add_subcommand("sweep", "Run a capacity sweep and write the curve as CSV");
    CLI::App* demo = app.add_subcommand("demo", "Train one network and print per-memory detail");
    add_experiment_flags(sweep, flags);
    add_experiment_flags(demo, flags);

    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("recall_lab");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& a : full) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw usage_error(e.what());
    }

    CliInvocation invocation;
    invocation.command =
        sweep->parsed() ? CliInvocation::Command::Sweep : CliInvocation::Command::Demo;
    invocation.config = to_config(flags);
    invocation.out_path = flags.out_path;
    try {
        validate(invocation.config);
        if (invocation.command == CliInvocation::Command::Demo) {
            if (const auto reason = infeasible_reason(invocation.config, invocation.config.max_memories)) {
                throw std::invalid_argument("demo: " + *reason);
            }
        }
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    (void)demo;
    return invocation;
}

void run(const CliInvocation& invocation, std::ostream& out, std::ostream& err) {
    const ExperimentConfig& cfg = invocation.config;
    if (invocation.command == CliInvocation::Command::Sweep) {
        const CapacityCurve curve = run_capacity_sweep(cfg);
        for (const std::string& w : curve.warnings()) {
            err << "warning: " << w << "\n";
        }
        write_curve_file(curve, invocation.out_path);
        out << "wrote " << invocation.out_path << ": " << curve.points().size() << " points, "
            << cfg.trials << (cfg.trials == 1 ? " trial" : " trials") << " per point\n";
        const CapacityPoint* peak = nullptr;
        for (const CapacityPoint& p : curve.points()) {
            if (peak == nullptr || p.mean_retrieved > peak->mean_retrieved) {
                peak = &p;
            }
        }
        if (peak != nullptr) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.6f", peak->mean_retrieved);
            out << "peak mean_retrieved " << buf << " at M=" << peak->trained << "\n";
        }
        return;
    }

    const int M = cfg.max_memories;
    const TrialOutcome outcome = run_trial_detailed(cfg, M, 0);
    out << "demo: n=" << cfg.neurons << " " << to_string(cfg.levels) << " rule="
        << to_string(cfg.rule) << " s=" << cfg.sites_per_memory << " M=" << M
        << " seed=" << cfg.base_seed << " (neurons numbered from 1)\n";
    for (int i = 0; i < M; ++i) {
        out << "memory " << (i + 1) << ": sites {";
        const std::vector<int>& sites = outcome.assignment.sites_for(i);
        for (std::size_t j = 0; j < sites.size(); ++j) {
            out << (j ? " " : "") << sites[j] + 1;
        }
        out << "}, order (";
        const UpdateOrder& order = outcome.orders[static_cast<std::size_t>(i)];
        for (int p = 0; p < order.size(); ++p) {
            out << (p ? " " : "") << order.at(p) + 1;
        }
        out << "), " << (outcome.retrieved[static_cast<std::size_t>(i)] ? "retrieved" : "missed")
            << "\n";
    }
    out << "retrieved " << outcome.retrieved_count << " of " << M << "\n";
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    try {
        const auto invocation = parse_args(args, out);
        if (!invocation) {
            return 0;
        }
        run(*invocation, out, err);
        return 0;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace recall
