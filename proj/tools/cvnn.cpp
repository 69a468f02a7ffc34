// cvnn: command-line surface for the complex-valued network toolkit.
//   list-activations  catalog listing
//   train             run a task/network/training loop end to end
//   verify            numeric check suites, exit status reflects pass/fail
//   render            domain-coloring PPM images
//   probe             surface grids (re/im/abs/arg) as CSV

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "cvnn/activations.hpp"
#include "cvnn/network.hpp"
#include "cvnn/render.hpp"
#include "cvnn/tasks.hpp"
#include "cvnn/train.hpp"
#include "cvnn/verify.hpp"

namespace {

using namespace cvnn;

std::vector<int> parse_widths(const std::string& text) {
    std::vector<int> widths;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) widths.push_back(std::stoi(tok));
    if (widths.size() < 2) throw ConfigError("need at least two widths: " + text);
    return widths;
}

Complex parse_complex_token(std::string t) {
    // forms: "a", "bi", "a+bi", "a-bi"
    if (t.empty()) throw ConfigError("empty complex literal");
    if (t.back() == 'i') {
        t.pop_back();
        // find the split between real and imaginary parts
        for (size_t k = t.size(); k-- > 1;) {
            if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
                const double re = std::stod(t.substr(0, k));
                std::string imtxt = t.substr(k);
                if (imtxt == "+" || imtxt == "-") imtxt += "1";
                return {re, std::stod(imtxt)};
            }
        }
        if (t.empty() || t == "+") return {0, 1};
        if (t == "-") return {0, -1};
        return {0, std::stod(t)};
    }
    return {std::stod(t), 0};
}

std::vector<Complex> parse_channel(const std::string& text) {
    std::vector<Complex> taps;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) taps.push_back(parse_complex_token(tok));
    if (taps.empty()) throw ConfigError("channel taps must be nonempty");
    return taps;
}

// flat key=value config document; '#' comments and [section] headers allowed
std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read config file " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(f, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string& t) {
            while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
            while (!t.empty() && (t.back() == ' ' || t.back() == '\t' || t.back() == '\r'))
                t.pop_back();
        };
        trim(line);
        if (line.empty() || line.front() == '[') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line is not key = value: " + line);
        std::string k = line.substr(0, eq), v = line.substr(eq + 1);
        trim(k);
        trim(v);
        kv[k] = v;
    }
    return kv;
}

std::string out_dir_default() {
    const char* env = std::getenv("CVNN_OUT_DIR");
    return env && *env ? env : ".";
}

int cmd_list(const std::string& category, const std::string& format) {
    const bool records = format == "records";
    if (!records && format != "table") {
        std::cerr << "unknown format: " << format << "\n";
        return 2;
    }
    for (const ActivationSpec& s : catalog()) {
        if (!category.empty() && category_name(s.category) != category) continue;
        std::cout << catalog_record(s, records) << "\n";
    }
    return 0;
}

struct TrainArgs {
    std::string task = "xor";
    std::string widths = "1,1";
    std::string af = "split_tanh";
    std::string algo = "split";
    double lr = 0.1;
    int epochs = 100;
    std::uint64_t seed = 1;
    bool shuffle = false;
    double stop_loss = 0.0;
    double init_radius = 0.1;
    std::string out_dir;
    // task generator knobs
    int bits = 4;
    int qam_order = 4;
    int qam_n = 2000;
    double noise_sigma = 0.05;
    std::string channel = "1+0i,0.3+0.2i";
};

int cmd_train(const TrainArgs& a) {
    Dataset data;
    if (a.task == "xor") {
        data = gen_xor();
    } else if (a.task == "symmetry") {
        data = gen_symmetry(a.bits, a.seed);
    } else if (a.task == "qam") {
        data = gen_qam(a.qam_order, a.qam_n, a.noise_sigma,
                       parse_channel(a.channel), a.seed);
    } else {
        throw ConfigError("unknown task: " + a.task);
    }

    const std::vector<int> widths = parse_widths(a.widths);
    if (widths.front() != data.input_width())
        throw ConfigError("widths[0]=" + std::to_string(widths.front()) +
                          " does not match task input width " +
                          std::to_string(data.input_width()));
    if (widths.back() != data.target_width())
        throw ConfigError("last width does not match task target width " +
                          std::to_string(data.target_width()));

    const ActivationSpec act = spec_from_string(a.af);
    Network net = init_network(widths, act, a.init_radius, a.seed);

    TrainConfig cfg;
    cfg.algorithm = algorithm_from_name(a.algo);
    cfg.learning_rate = a.lr;
    cfg.epochs = a.epochs;
    cfg.shuffle = a.shuffle;
    cfg.seed = a.seed;
    cfg.stop_loss = a.stop_loss;
    if (cfg.learning_rate == 0.0)
        std::cerr << "warning: learning rate 0; weights will not change\n";

    const TrainReport rep = train(std::move(net), data, cfg);

    const std::string dir = a.out_dir.empty() ? out_dir_default() : a.out_dir;
    const std::string net_path = dir + "/network.txt";
    const std::string rep_path = dir + "/train_report.txt";
    save_network_file(rep.final_net, net_path);
    {
        std::ofstream f(rep_path);
        if (!f) throw IoError("cannot write " + rep_path);
        save_report(rep, f, "network.txt");
    }

    std::cout << "task=" << a.task << " epochs_run=" << rep.epoch_mean_loss.size()
              << " final_mean_loss="
              << (rep.epoch_mean_loss.empty() ? 0.0 : rep.epoch_mean_loss.back())
              << " stop=" << stop_reason_name(rep.stop_reason)
              << " skipped=" << rep.skipped_steps << "\n";
    if (a.task == "xor")
        std::cout << "xor_correct=" << xor_correct_count(rep.final_net) << "/4\n";
    std::cout << "report=" << rep_path << " network=" << net_path << "\n";
    return rep.stop_reason == StopReason::numeric_failure ? 1 : 0;
}

int cmd_verify(const std::string& suite, const std::string& af,
               std::uint64_t seed) {
    std::vector<CheckReport> reports;
    if (!af.empty() && (suite == "cr" || suite == "bounds" || suite == "symmetry")) {
        // single-spec convenience paths
        const ActivationSpec s = spec_from_string(af);
        if (suite == "cr") {
            reports.push_back(cr_scan(s, GridSpec{-2, 2, -2, 2, 41, 41}));
        } else if (suite == "bounds") {
            reports.push_back(liouville_probe(s, {1, 5, 10}));
            if (s.abs_bound || s.part_bounds)
                reports.push_back(bounds_check(s, 10000, 50.0, seed));
        } else {
            for (const CheckReport& r : suite_symmetry(seed))
                if (r.id.find("/" + s.name() + "/") != std::string::npos)
                    reports.push_back(r);
        }
    } else {
        reports = run_suite(suite, seed);
        if (!af.empty()) {
            const ActivationSpec s = spec_from_string(af);
            std::vector<CheckReport> filtered;
            for (CheckReport& r : reports)
                if (r.id.find("/" + s.name()) != std::string::npos)
                    filtered.push_back(std::move(r));
            reports = std::move(filtered);
        }
    }

    int failed = 0;
    for (const CheckReport& r : reports) {
        std::cout << r.record() << "\n";
        if (!r.pass) ++failed;
    }
    std::cout << "---\n"
              << "checks=" << reports.size() << " failed=" << failed << "\n";
    return failed == 0 && !reports.empty() ? 0 : 1;
}

int cmd_render(const std::string& af, const std::string& fixture,
               const std::string& grid_flag, const std::string& shading,
               const std::string& out, const std::string& csv,
               const std::string& part) {
    if (af.empty() == fixture.empty())
        throw ConfigError("render: exactly one of --af / --fixture required");
    const ComplexFn f = af.empty() ? fixture_fn(fixture) : fn_of(spec_from_string(af));
    const GridSpec grid = parse_grid(grid_flag);

    if (!out.empty()) {
        const ImageBuffer img = domain_color(f, grid, shading_from_name(shading));
        write_ppm_file(img, out);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(fnv1a_ppm(img)));
        std::cout << "ppm=" << out << " hash=" << buf << "\n";
    }
    if (!csv.empty()) {
        const SurfacePart p = part_from_name(part);
        write_surface_csv_file(surface_export(f, grid, p), grid, p, csv);
        std::cout << "csv=" << csv << "\n";
    }
    if (out.empty() && csv.empty())
        throw ConfigError("render: nothing to do (need --out or --csv)");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"complex-valued neural network toolkit"};
    app.require_subcommand(1);

    // list-activations
    auto* list = app.add_subcommand("list-activations", "print the activation catalog");
    std::string list_category, list_format = "table";
    list->add_option("--category", list_category,
                     "filter: split-real-imaginary | amplitude-phase | fully-complex");
    list->add_option("--format", list_format, "table | records");

    // train
    auto* train_cmd = app.add_subcommand("train", "train a network on a task");
    TrainArgs ta;
    std::string config_path;
    train_cmd->add_option("--config", config_path, "key = value config file (flags win)");
    auto* o_task = train_cmd->add_option("--task", ta.task, "xor | symmetry | qam");
    auto* o_widths = train_cmd->add_option("--widths", ta.widths, "e.g. 1,1 or 2,3,1");
    auto* o_af = train_cmd->add_option("--af", ta.af, "activation id, e.g. split_tanh or modrelu(b=-0.5)");
    auto* o_algo = train_cmd->add_option("--algo", ta.algo,
                                         "complex_derivative | partial_derivatives | cr_simplified | split");
    auto* o_lr = train_cmd->add_option("--lr", ta.lr, "learning rate");
    auto* o_epochs = train_cmd->add_option("--epochs", ta.epochs, "epoch count");
    auto* o_seed = train_cmd->add_option("--seed", ta.seed, "deterministic seed");
    auto* o_shuffle = train_cmd->add_flag("--shuffle", ta.shuffle, "shuffle samples per epoch");
    auto* o_stop = train_cmd->add_option("--stop-loss", ta.stop_loss, "early stop threshold");
    auto* o_radius = train_cmd->add_option("--init-radius", ta.init_radius, "weight init disc radius");
    auto* o_outdir = train_cmd->add_option("--out-dir", ta.out_dir, "output directory (default $CVNN_OUT_DIR or .)");
    auto* o_bits = train_cmd->add_option("--bits", ta.bits, "symmetry task bits");
    auto* o_qorder = train_cmd->add_option("--qam-order", ta.qam_order, "4 | 16");
    auto* o_qn = train_cmd->add_option("--qam-n", ta.qam_n, "qam sample count");
    auto* o_qsigma = train_cmd->add_option("--noise-sigma", ta.noise_sigma, "qam noise std dev");
    auto* o_qchan = train_cmd->add_option("--channel", ta.channel, "FIR taps, e.g. 1+0i,0.3+0.2i");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run numeric check suites");
    std::string v_suite = "all", v_af;
    std::uint64_t v_seed = 20240901;
    verify_cmd->add_option("--suite", v_suite, "cr | grad | equiv | symmetry | bounds | coverage | all");
    verify_cmd->add_option("--af", v_af, "restrict to one activation id");
    verify_cmd->add_option("--seed", v_seed, "deterministic seed");

    // render / probe
    auto* render_cmd = app.add_subcommand("render", "domain-coloring image / surface CSV");
    std::string r_af, r_fixture, r_grid = "-2:2:-2:2:256x256", r_shading = "arg-only";
    std::string r_out, r_csv, r_part = "abs";
    render_cmd->add_option("--af", r_af, "activation id");
    render_cmd->add_option("--fixture", r_fixture, "builtin subject, e.g. z4m1-over-z2");
    render_cmd->add_option("--grid", r_grid, "remin:remax:immin:immax:NXxNY");
    render_cmd->add_option("--shading", r_shading, "arg-only | log-abs-rings | abs-arg-rings");
    render_cmd->add_option("--out", r_out, "output PPM (P6) path");
    render_cmd->add_option("--csv", r_csv, "output CSV path (surface export)");
    render_cmd->add_option("--part", r_part, "re | im | abs | arg");

    auto* probe_cmd = app.add_subcommand("probe", "surface grid CSV export");
    std::string p_af, p_fixture, p_grid = "-2:2:-2:2:64x64", p_part = "re", p_csv;
    probe_cmd->add_option("--af", p_af, "activation id");
    probe_cmd->add_option("--fixture", p_fixture, "builtin subject");
    probe_cmd->add_option("--grid", p_grid, "remin:remax:immin:immax:NXxNY");
    probe_cmd->add_option("--part", p_part, "re | im | abs | arg");
    probe_cmd->add_option("--csv", p_csv, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) return cmd_list(list_category, list_format);
        if (train_cmd->parsed()) {
            if (!config_path.empty()) {
                // flags win over config values
                const auto kv = read_config(config_path);
                auto use = [&](CLI::Option* opt, const std::string& key, auto setter) {
                    const auto it = kv.find(key);
                    if (it != kv.end() && opt->count() == 0) setter(it->second);
                };
                use(o_task, "task", [&](const std::string& v) { ta.task = v; });
                use(o_widths, "widths", [&](const std::string& v) { ta.widths = v; });
                use(o_af, "af", [&](const std::string& v) { ta.af = v; });
                use(o_algo, "algo", [&](const std::string& v) { ta.algo = v; });
                use(o_lr, "lr", [&](const std::string& v) { ta.lr = std::stod(v); });
                use(o_epochs, "epochs", [&](const std::string& v) { ta.epochs = std::stoi(v); });
                use(o_seed, "seed", [&](const std::string& v) { ta.seed = std::stoull(v); });
                use(o_shuffle, "shuffle", [&](const std::string& v) { ta.shuffle = v == "1" || v == "true"; });
                use(o_stop, "stop_loss", [&](const std::string& v) { ta.stop_loss = std::stod(v); });
                use(o_radius, "init_radius", [&](const std::string& v) { ta.init_radius = std::stod(v); });
                use(o_outdir, "out_dir", [&](const std::string& v) { ta.out_dir = v; });
                use(o_bits, "bits", [&](const std::string& v) { ta.bits = std::stoi(v); });
                use(o_qorder, "qam_order", [&](const std::string& v) { ta.qam_order = std::stoi(v); });
                use(o_qn, "qam_n", [&](const std::string& v) { ta.qam_n = std::stoi(v); });
                use(o_qsigma, "noise_sigma", [&](const std::string& v) { ta.noise_sigma = std::stod(v); });
                use(o_qchan, "channel", [&](const std::string& v) { ta.channel = v; });
            }
            return cmd_train(ta);
        }
        if (verify_cmd->parsed()) return cmd_verify(v_suite, v_af, v_seed);
        if (render_cmd->parsed())
            return cmd_render(r_af, r_fixture, r_grid, r_shading, r_out, r_csv, r_part);
        if (probe_cmd->parsed())
            return cmd_render(p_af, p_fixture, p_grid, "arg-only", "", p_csv, p_part);
    } catch (const ConfigError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const cvnn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
