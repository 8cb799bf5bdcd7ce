// Command-line front end for finite Gabor analysis: group/lattice reports,
// canonical dual and tight windows, frame bounds, spreading export, and the
// identity-verification suite.
//
// Exit codes: 0 success, 1 mathematical failure (not a frame, identity
// violated), 2 input or schema error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fga/io.hpp"
#include "fga/verify.hpp"
#include "fga/windows.hpp"

namespace {

using fga::io::json;

struct CommonOptions {
    std::string group;
    std::string gens;
    double tolerance = -1.0;  // resolved in resolve_tolerance()
    std::uint64_t seed = 0;
    std::string format = "json";
};

double resolve_tolerance(double flag_value) {
    if (flag_value > 0.0) return flag_value;
    if (const char* env = std::getenv("FINITE_GABOR_TOL")) {
        try {
            const double v = std::stod(env);
            if (v > 0.0) return v;
        } catch (const std::exception&) {
            throw fga::io::SchemaError("FINITE_GABOR_TOL is not a number");
        }
    }
    return 1e-10;
}

void emit(const json& j, const std::string& format) {
    if (format == "csv") {
        for (const auto& [key, value] : j.items()) {
            std::cout << key << "," << value.dump() << "\n";
        }
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

json diagnostics_json(const fga::FrameDiagnostics& diag) {
    json j;
    j["lower_bound"] = diag.lower_bound;
    j["upper_bound"] = diag.upper_bound;
    j["is_frame"] = diag.is_frame;
    j["condition_number"] = diag.condition_number;
    return j;
}

json generators_json(const fga::Lattice& lattice) {
    json gens = json::array();
    for (const fga::TFPoint& p : lattice.generators) {
        json point = json::array();
        for (std::int64_t c : p.time.coords) point.push_back(c);
        for (std::int64_t c : p.freq.coords) point.push_back(c);
        gens.push_back(std::move(point));
    }
    return gens;
}

int cmd_info(const CommonOptions& opt) {
    const fga::GroupSpec group = fga::io::parse_group(opt.group);
    const fga::Lattice lattice =
        fga::enumerate_subgroup(group, fga::io::parse_generators(group, opt.gens));
    const fga::Lattice adj = fga::adjoint_subgroup(lattice);
    json j;
    j["group"] = group.orders;
    j["group_order"] = group.order;
    j["plane_points"] = fga::plane_size(group);
    j["lattice_size"] = lattice.size();
    j["adjoint_size"] = adj.size();
    j["adjoint_generators"] = generators_json(adj);
    j["product_check"] = json{{"lattice_times_adjoint", lattice.size() * adj.size()},
                              {"plane_points", fga::plane_size(group)},
                              {"ok", lattice.size() * adj.size() == fga::plane_size(group)}};
    j["lattice_is_isotropic"] = fga::is_isotropic(lattice);
    j["adjoint_is_isotropic"] = fga::is_isotropic(adj);
    emit(j, opt.format);
    return 0;
}

int cmd_dual_or_tight(const CommonOptions& opt, const std::string& window_path,
                      const std::string& out_path, bool tight) {
    const fga::GroupSpec group = fga::io::parse_group(opt.group);
    const fga::Lattice lattice =
        fga::enumerate_subgroup(group, fga::io::parse_generators(group, opt.gens));
    const fga::Signal window =
        fga::io::signal_from_json(json::parse(fga::io::read_file(window_path)));
    if (window.group != group) {
        throw fga::io::SchemaError("window group does not match --group");
    }
    try {
        const fga::FrameDiagnostics diag =
            fga::frame_bounds(fga::make_gabor_system(window, lattice));
        json j = diagnostics_json(diag);
        fga::Signal result = fga::zero_signal(group);
        if (tight) {
            result = fga::canonical_tight(window, lattice);
            const fga::OperatorMatrix s =
                fga::frame_operator(fga::make_gabor_system(result, lattice));
            j["residual"] = fga::frobenius_norm(
                fga::sub(s, fga::OperatorMatrix::identity(static_cast<int>(group.order))));
        } else {
            const fga::DualWindowResult dual = fga::canonical_dual(window, lattice);
            result = dual.window;
            j["residual"] = dual.residual;
        }
        if (!out_path.empty()) {
            fga::io::write_file(out_path, fga::io::signal_to_json(result).dump(2) + "\n");
            j["output"] = out_path;
        } else {
            j["window"] = fga::io::signal_to_json(result);
        }
        emit(j, opt.format);
        return 0;
    } catch (const fga::NotAFrameError& e) {
        json j = diagnostics_json(e.diagnostics());
        j["error"] = "not a frame";
        emit(j, opt.format);
        return 1;
    }
}

int cmd_bounds(const CommonOptions& opt, const std::vector<std::string>& window_paths) {
    const fga::GroupSpec group = fga::io::parse_group(opt.group);
    const fga::Lattice lattice =
        fga::enumerate_subgroup(group, fga::io::parse_generators(group, opt.gens));
    std::vector<fga::Signal> windows;
    for (const std::string& path : window_paths) {
        windows.push_back(fga::io::signal_from_json(json::parse(fga::io::read_file(path))));
        if (windows.back().group != group) {
            throw fga::io::SchemaError("window group does not match --group: " + path);
        }
    }
    const fga::FrameDiagnostics diag =
        fga::frame_bounds(fga::make_gabor_system(std::move(windows), lattice));
    emit(diagnostics_json(diag), opt.format);
    return 0;
}

int cmd_spreading(const CommonOptions& opt, const std::string& matrix_path,
                  const std::string& out_path) {
    const fga::GroupSpec group = fga::io::parse_group(opt.group);
    const auto [mat_group, matrix] =
        fga::io::matrix_from_json(json::parse(fga::io::read_file(matrix_path)));
    if (mat_group != group) {
        throw fga::io::SchemaError("matrix group does not match --group");
    }
    const fga::SpreadingFunction eta = fga::spreading_of(group, matrix);
    const double fro_sq = fga::frobenius_inner(matrix, matrix).real();
    const std::string csv = fga::io::spreading_to_csv(eta, fro_sq);
    if (!out_path.empty()) {
        fga::io::write_file(out_path, csv);
    } else {
        std::cout << csv;
    }
    return 0;
}

int cmd_verify(const CommonOptions& opt) {
    const fga::GroupSpec group = fga::io::parse_group(opt.group);
    const double tol = resolve_tolerance(opt.tolerance);
    const auto results = fga::run_identity_suite(group, opt.seed, tol);
    std::printf("%-26s %-14s %s\n", "identity", "max_residual", "status");
    bool all_pass = true;
    for (const fga::IdentityResult& r : results) {
        std::printf("%-26s %-14.6e %s\n", r.name.c_str(), r.max_residual,
                    r.pass ? "pass" : "FAIL");
        all_pass = all_pass && r.pass;
    }
    std::printf("suite: %s (group %s, seed %llu, tolerance %.6e)\n",
                all_pass ? "PASS" : "FAIL", opt.group.c_str(),
                static_cast<unsigned long long>(opt.seed), tol);
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gabor analysis over finite abelian groups"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string window_path, out_path, matrix_path, windows_flag;

    auto add_common = [&](CLI::App* cmd, bool needs_gens) {
        cmd->add_option("--group", opt.group, "comma-separated cyclic orders, e.g. 8 or 2,3")
            ->required();
        if (needs_gens) {
            cmd->add_option("--gens", opt.gens,
                            "lattice generators: semicolon-separated points, "
                            "comma-separated coordinates, time then frequency");
        }
        cmd->add_option("--tol", opt.tolerance, "tolerance (default 1e-10, or FINITE_GABOR_TOL)");
        cmd->add_option("--seed", opt.seed, "random seed (default 0)");
        cmd->add_option("--format", opt.format, "output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* info = app.add_subcommand("info", "group, lattice and adjoint-lattice report");
    add_common(info, true);

    CLI::App* dual = app.add_subcommand("dual", "canonical dual window");
    add_common(dual, true);
    dual->add_option("--window", window_path, "window JSON file")->required();
    dual->add_option("--out", out_path, "output window JSON file");

    CLI::App* tight = app.add_subcommand("tight", "canonical tight window");
    add_common(tight, true);
    tight->add_option("--window", window_path, "window JSON file")->required();
    tight->add_option("--out", out_path, "output window JSON file");

    CLI::App* bounds = app.add_subcommand("bounds", "frame bounds and diagnostics");
    add_common(bounds, true);
    bounds->add_option("--window", window_path, "window JSON file");
    bounds->add_option("--windows", windows_flag, "comma-separated window JSON files");

    CLI::App* spreading = app.add_subcommand("spreading", "spreading coefficients as CSV");
    add_common(spreading, false);
    spreading->add_option("--matrix", matrix_path, "operator matrix JSON file")->required();
    spreading->add_option("--out", out_path, "output CSV file");

    CLI::App* verify = app.add_subcommand("verify", "run the identity-verification suite");
    add_common(verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(info)) return cmd_info(opt);
        if (app.got_subcommand(dual)) return cmd_dual_or_tight(opt, window_path, out_path, false);
        if (app.got_subcommand(tight)) return cmd_dual_or_tight(opt, window_path, out_path, true);
        if (app.got_subcommand(bounds)) {
            std::vector<std::string> paths;
            if (!window_path.empty()) paths.push_back(window_path);
            if (!windows_flag.empty()) {
                std::stringstream ss(windows_flag);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    if (!item.empty()) paths.push_back(item);
                }
            }
            if (paths.empty()) {
                throw fga::io::SchemaError("bounds: provide --window or --windows");
            }
            return cmd_bounds(opt, paths);
        }
        if (app.got_subcommand(spreading)) return cmd_spreading(opt, matrix_path, out_path);
        if (app.got_subcommand(verify)) return cmd_verify(opt);
    } catch (const fga::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
