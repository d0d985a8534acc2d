/*
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#include <olrwa/bench.hpp>
#include <olrwa/cli.hpp>
#include <olrwa/error.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace olrwa::cli {

namespace {

struct OutputFlags {
    std::string out_path;
    bool no_timestamp = false;
    bool no_timing = false;
};

struct RunFlags {
    bench::RunOptions run;
    std::string policy = "fixed-point";
    double w_base = 0.0;
    double w_inc = 0.0;
    CLI::Option* w_base_opt = nullptr;
    CLI::Option* w_inc_opt = nullptr;

    bench::RunOptions resolve() const {
        bench::RunOptions r = run;
        r.policy = *parse_policy_kind(policy);
        if (w_base_opt->count() > 0) {
            r.w_base = w_base;
        }
        if (w_inc_opt->count() > 0) {
            r.w_inc = w_inc;
        }
        return r;
    }
};

void add_run_flags(CLI::App* cmd, RunFlags& f, OutputFlags& o) {
    cmd->add_option("--trials", f.run.trials, "Number of trials")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.run.seed, "Base random seed")->capture_default_str();
    cmd->add_option("--base-fraction", f.run.base_fraction, "Fraction of points used for the base model")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--inc-size", f.run.inc_size, "Points per increment")->capture_default_str();
    cmd->add_option("--policy", f.policy, "Weight policy")
        ->capture_default_str()
        ->check(CLI::IsMember({"fixed-point", "fixed-model", "time", "confidence"}));
    f.w_base_opt = cmd->add_option("--w-base", f.w_base, "Initial base-model weight")->check(CLI::PositiveNumber);
    f.w_inc_opt = cmd->add_option("--w-inc", f.w_inc, "Incremental-model weight")->check(CLI::PositiveNumber);
    cmd->add_option("--out", o.out_path, "Results file (default: stdout)");
    cmd->add_flag("--no-timestamp", o.no_timestamp, "Omit the timestamp header line");
    cmd->add_flag("--no-timing", o.no_timing, "Write runtime columns as 0 for byte-stable output");
}

double median_of(const std::vector<bench::ExperimentResult>& rs, double bench::ExperimentResult::*field) {
    std::vector<double> v;
    for (const auto& r : rs) {
        v.push_back(r.*field);
    }
    return bench::median(v);
}

void summarize(std::ostream& err, const std::vector<bench::ExperimentResult>& rs) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "median batch_r2=%.6f online_r2=%.6f gap=%.6f over %zu trials\n",
                  median_of(rs, &bench::ExperimentResult::batch_r2), median_of(rs, &bench::ExperimentResult::online_r2),
                  median_of(rs, &bench::ExperimentResult::gap), rs.size());
    err << buf;
}

int emit(const std::vector<bench::ExperimentResult>& rs, const OutputFlags& o, const std::string& command,
         std::ostream& out, std::ostream& err) {
    bench::WriteOptions wo;
    wo.timestamp = !o.no_timestamp;
    wo.timing = !o.no_timing;
    wo.command = "olrwa-bench " + command;
    if (o.out_path.empty()) {
        bench::write_results(out, rs, wo);
    } else {
        std::ofstream file(o.out_path);
        if (!file) {
            err << "error: cannot write '" << o.out_path << "'\n";
            return kExitRuntime;
        }
        bench::write_results(file, rs, wo);
    }
    summarize(err, rs);
    return kExitOk;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            parts.push_back(item);
        }
    }
    return parts;
}

}// namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Batch vs. online (weighted-average) linear regression experiments", "olrwa-bench"};
    app.require_subcommand(1);

    OutputFlags output;

    bench::SyntheticOptions syn;
    RunFlags syn_run;
    std::string syn_mode = "consistent";
    std::string syn_corr = "pos";
    double syn_variance = 0.0;
    double syn_variance2 = 0.0;
    auto* synthetic = app.add_subcommand("synthetic", "Consistent or shifting-variance synthetic data");
    add_run_flags(synthetic, syn_run, output);
    synthetic->add_option("--dim", syn.dim, "2 or 3 (target included)")->capture_default_str()->check(CLI::IsMember({2, 3}));
    synthetic->add_option("--n", syn.n, "Points per dataset")->capture_default_str();
    synthetic->add_option("--mode", syn_mode, "consistent or shifting")
        ->capture_default_str()
        ->check(CLI::IsMember({"consistent", "shifting"}));
    auto* syn_var_opt = synthetic->add_option("--variance", syn_variance, "Noise variance")->check(CLI::NonNegativeNumber);
    auto* syn_var2_opt =
        synthetic->add_option("--variance2", syn_variance2, "Second-half noise variance (shifting)")->check(CLI::NonNegativeNumber);
    synthetic->add_option("--correlation", syn_corr, "pos or neg")->capture_default_str()->check(CLI::IsMember({"pos", "neg"}));
    synthetic->add_option("--step", syn.step, "Spacing between feature values")->capture_default_str()->check(CLI::PositiveNumber);

    bench::AdversarialOptions adv;
    RunFlags adv_run;
    double adv_variance = 0.0;
    auto* adversarial = app.add_subcommand("adversarial", "Correlation sign flip halfway through the stream");
    add_run_flags(adversarial, adv_run, output);
    adversarial->add_option("--dim", adv.dim, "2 or 3 (target included)")->capture_default_str()->check(CLI::IsMember({2, 3}));
    adversarial->add_option("--n", adv.n, "Points per dataset")->capture_default_str();
    auto* adv_var_opt = adversarial->add_option("--variance", adv_variance, "Noise variance")->check(CLI::NonNegativeNumber);
    adversarial->add_option("--step", adv.step, "Spacing between feature values")->capture_default_str()->check(CLI::PositiveNumber);

    bench::CsvOptions csv;
    RunFlags csv_run;
    std::string csv_features;
    std::string csv_delim = ",";
    auto* csvcmd = app.add_subcommand("csv", "Real data from a CSV file, shuffled per trial");
    add_run_flags(csvcmd, csv_run, output);
    csvcmd->add_option("--input", csv.csv.path, "CSV file")->required();
    csvcmd->add_option("--target", csv.csv.target, "Target column")->required();
    csvcmd->add_option("--features", csv_features, "Comma-separated feature columns")->required();
    csvcmd->add_option("--delimiter", csv_delim, "Field separator")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::string command;
    std::vector<bench::ExperimentResult> results;
    try {
        if (synthetic->parsed()) {
            command = "synthetic";
            syn.run = syn_run.resolve();
            syn.mode = syn_mode == "shifting" ? bench::SyntheticMode::Shifting : bench::SyntheticMode::Consistent;
            syn.correlation = syn_corr == "neg" ? datagen::Correlation::Negative : datagen::Correlation::Positive;
            if (syn_var_opt->count() > 0) {
                syn.variance = syn_variance;
            }
            if (syn_var2_opt->count() > 0) {
                syn.variance2 = syn_variance2;
            }
            if (syn.n < syn.dim) {
                throw Error(ErrorKind::InsufficientData, "--n " + std::to_string(syn.n) + " is below --dim " + std::to_string(syn.dim));
            }
            bench::check_sizes(syn.n, syn.dim - 1, syn.run);
        } else if (adversarial->parsed()) {
            command = "adversarial";
            adv.run = adv_run.resolve();
            if (adv_var_opt->count() > 0) {
                adv.variance = adv_variance;
            }
            if (adv.n < 2 * adv.dim) {
                throw Error(ErrorKind::InsufficientData, "--n " + std::to_string(adv.n) + " cannot split into two fittable halves");
            }
            bench::check_sizes(adv.n, adv.dim - 1, adv.run);
        } else {
            command = "csv";
            csv.run = csv_run.resolve();
            csv.csv.features = split_list(csv_features);
            if (csv_delim.size() != 1) {
                throw Error(ErrorKind::InvalidArgument, "--delimiter must be a single character");
            }
            csv.csv.delimiter = csv_delim[0];
            if (csv.csv.features.empty()) {
                throw Error(ErrorKind::InvalidArgument, "--features names no columns");
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (command == "synthetic") {
            results = bench::run_synthetic(syn);
        } else if (command == "adversarial") {
            results = bench::run_adversarial(adv);
        } else {
            results = bench::run_csv(csv);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return emit(results, output, command, out, err);
}

}// namespace olrwa::cli
