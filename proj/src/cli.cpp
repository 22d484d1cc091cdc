#include "slspec/cli.hpp"

#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "slspec/acceptance.hpp"
#include "slspec/asymptotics.hpp"
#include "slspec/factorization.hpp"
#include "slspec/inverse.hpp"
#include "slspec/io.hpp"
#include "slspec/parallel.hpp"
#include "slspec/spectrum.hpp"

namespace slspec::cli {

using nlohmann::json;

namespace {

cplx parse_complex(const std::string& s, const std::string& where)
{
    // forms: "1.5", "2i", "1+2i", "1-0.5i"
    try {
        if (s.empty()) throw std::invalid_argument("empty");
        if (s.back() == 'i' || s.back() == 'I') {
            const std::string body = s.substr(0, s.size() - 1);
            // split at the last +/- that is not an exponent sign or leading
            size_t split = std::string::npos;
            for (size_t i = body.size(); i-- > 1;) {
                if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
                    split = i;
                    break;
                }
            }
            if (split == std::string::npos)
                return cplx(0.0, body.empty() || body == "+" ? 1.0
                                 : body == "-"               ? -1.0
                                                             : std::stod(body));
            const std::string re = body.substr(0, split);
            std::string im = body.substr(split);
            if (im == "+") im = "1";
            if (im == "-") im = "-1";
            return cplx(std::stod(re), std::stod(im));
        }
        size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing characters");
        return cplx(v, 0.0);
    } catch (const std::exception&) {
        throw ConfigError(where + ": cannot parse complex number '" + s + "'");
    }
}

double parse_real(const std::string& s, const std::string& where)
{
    try {
        size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(where + ": cannot parse number '" + s + "'");
    }
}

long parse_int(const std::string& s, const std::string& where)
{
    try {
        size_t used = 0;
        const long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(where + ": cannot parse integer '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) { out.push_back(cur); cur.clear(); }
        else cur += c;
    }
    out.push_back(cur);
    return out;
}

PotentialSpec parse_potential(const std::string& text, const std::string& where)
{
    const auto parts = split(text, ':');
    const std::string& kind = parts[0];
    const size_t nargs = parts.size() - 1;
    if (kind == "zero") {
        if (nargs != 0) throw ConfigError(where + ": zero takes no arguments");
        return PotentialSpec::zero();
    }
    if (kind == "constant") {
        if (nargs != 1) throw ConfigError(where + ": constant:<c>");
        return PotentialSpec::constant(parse_complex(parts[1], where));
    }
    if (kind == "linear") {
        if (nargs != 1) throw ConfigError(where + ": linear:<slope>");
        return PotentialSpec::linear(parse_complex(parts[1], where));
    }
    if (kind == "step") {
        if (nargs == 0 || nargs % 2 != 0)
            throw ConfigError(where + ": step:<pos>:<jump>[:<pos>:<jump>...]");
        std::vector<std::pair<double, cplx>> jumps;
        for (size_t i = 1; i < parts.size(); i += 2)
            jumps.emplace_back(parse_real(parts[i], where), parse_complex(parts[i + 1], where));
        return PotentialSpec::step(std::move(jumps));
    }
    if (kind == "fourier_random") {
        if (nargs != 4)
            throw ConfigError(where + ": fourier_random:<alpha>:<modes>:<seed>:<amplitude>");
        return PotentialSpec::fourier_random(parse_real(parts[1], where),
                                             (int)parse_int(parts[2], where),
                                             (std::uint64_t)parse_int(parts[3], where),
                                             parse_real(parts[4], where));
    }
    if (kind == "log_singularity") {
        if (nargs < 1 || nargs > 2)
            throw ConfigError(where + ": log_singularity:<strength>[:<clip>]");
        return PotentialSpec::log_singularity(
            parse_real(parts[1], where), nargs == 2 ? parse_real(parts[2], where) : 0.0);
    }
    if (kind == "from_file") {
        if (nargs != 1) throw ConfigError(where + ": from_file:<path>");
        return PotentialSpec::from_file(parts[1]);
    }
    throw ConfigError(where + ": unknown potential variant '" + kind + "'");
}

const char* known_commands[] = {"spectrum", "charfn",  "factorize",
                                "asymptotics", "inverse", "selftest"};

} // namespace

void RunConfig::validate() const
{
    bool cmd_ok = false;
    for (const char* c : known_commands) cmd_ok |= command == c;
    if (!cmd_ok)
        throw ConfigError("command '" + command + "' is not one of spectrum, charfn, "
                          "factorize, asymptotics, inverse, selftest");
    if (M < 16) throw ConfigError("M must be at least 16");
    if (n_max < 1) throw ConfigError("n_max must be positive");
    if (8 * n_max > M)
        throw ConfigError("guard violation: n_max = " + std::to_string(n_max) +
                          " exceeds M/8 = " + std::to_string(M / 8));
    if (bc != "both" && bc != "dirichlet" && bc != "neumann")
        throw ConfigError("bc must be both, dirichlet or neumann");
    if (lambda_count < 2) throw ConfigError("lambda_count must be at least 2");
    if (lambda_max <= 0) throw ConfigError("lambda_max must be positive");
    if (command == "charfn" && lambda_max > 0.5 * M)
        throw ConfigError("guard violation: lambda_max = " + std::to_string(lambda_max) +
                          " exceeds the sampling guard M/2");
    if (mc_samples < 100) throw ConfigError("mc_samples must be at least 100");
    if (threads < 0) throw ConfigError("threads must be non-negative");
    potential.validate();
}

void apply_override(RunConfig& cfg, const std::string& key, const std::string& value,
                    const std::string& where)
{
    if (key == "command") cfg.command = value;
    else if (key == "potential") {
        const cplx h = cfg.potential.h_offset; // h_offset may already be set
        cfg.potential = parse_potential(value, where);
        cfg.potential.h_offset = h;
    }
    else if (key == "h_offset") cfg.potential.h_offset = parse_complex(value, where);
    else if (key == "alpha") cfg.alpha = parse_real(value, where);
    else if (key == "M") cfg.M = (int)parse_int(value, where);
    else if (key == "n_max") cfg.n_max = (int)parse_int(value, where);
    else if (key == "seed") cfg.seed = (std::uint64_t)parse_int(value, where);
    else if (key == "threads") cfg.threads = (int)parse_int(value, where);
    else if (key == "bc") cfg.bc = value;
    else if (key == "output_dir") cfg.output_dir = value;
    else if (key == "lambda_max") cfg.lambda_max = parse_real(value, where);
    else if (key == "lambda_count") cfg.lambda_count = (int)parse_int(value, where);
    else if (key == "mc_samples") cfg.mc_samples = (int)parse_int(value, where);
    else if (key == "form") {
        if (value == "sigma_form") cfg.form = SystemForm::sigma_form;
        else if (value == "tau_form") cfg.form = SystemForm::tau_form;
        else throw ConfigError(where + ": form must be sigma_form or tau_form");
    }
    else throw ConfigError(where + ": unknown key '" + key + "'");
}

RunConfig parse_config(const std::string& text)
{
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        // trim
        const size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const size_t e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        const size_t ke = key.find_last_not_of(" \t");
        key = key.substr(0, ke == std::string::npos ? 0 : ke + 1);
        const size_t vb = value.find_first_not_of(" \t");
        value = vb == std::string::npos ? "" : value.substr(vb);
        apply_override(cfg, key, value, "line " + std::to_string(lineno));
    }
    return cfg;
}

namespace {

struct OutputSet {
    std::string dir;
    std::vector<std::pair<std::string, std::string>> files; // name -> content

    void add(const std::string& name, const std::string& content)
    {
        files.emplace_back(name, content);
    }

    void flush()
    {
        std::filesystem::create_directories(dir);
        json manifest;
        manifest["files"] = json::array();
        for (const auto& [name, content] : files) {
            io::write_file(dir + "/" + name, content);
            manifest["files"].push_back(
                {{"name", name}, {"bytes", content.size()}, {"sha256", io::sha256_hex(content)}});
        }
        io::write_file(dir + "/manifest.json", manifest.dump(2) + "\n");
    }
};

json config_echo(const RunConfig& cfg)
{
    const PotentialInfo info = describe(cfg.potential);
    json j;
    j["command"] = cfg.command;
    j["potential"] = info.variant;
    j["potential_params"] = info.params;
    j["nominal_alpha"] = info.nominal_alpha;
    j["h_offset"] = {info.h_offset.real(), info.h_offset.imag()};
    j["M"] = cfg.M;
    j["n_max"] = cfg.n_max;
    j["form"] = cfg.form == SystemForm::sigma_form ? "sigma_form" : "tau_form";
    j["bc"] = cfg.bc;
    j["seed"] = cfg.seed;
    return j;
}

bool is_real_potential(const GridFunction& sigma)
{
    return sigma.max_abs_imag() <= 1e-12 * (1.0 + sigma.max_abs());
}

// spectra along the configured route; tau_form goes through the
// factorization and undoes the accretivity shift
SpectralSequence compute_spectrum(const RunConfig& cfg, const GridFunction& sigma,
                                  BoundaryCondition bc)
{
    if (cfg.form == SystemForm::sigma_form) {
        return is_real_potential(sigma)
                   ? locate_real(sigma, SystemForm::sigma_form, bc, cfg.n_max)
                   : locate_complex(sigma, SystemForm::sigma_form, bc, cfg.n_max);
    }
    const FactorizationResult fac = factorize(sigma);
    SpectralSequence seq = is_real_potential(fac.tau)
                               ? locate_real(fac.tau, SystemForm::tau_form, bc, cfg.n_max)
                               : locate_complex(fac.tau, SystemForm::tau_form, bc, cfg.n_max);
    seq.shift_C = fac.shift_C;
    return unshift(seq);
}

std::vector<BoundaryCondition> selected_bcs(const RunConfig& cfg)
{
    if (cfg.bc == "dirichlet") return {BoundaryCondition::dirichlet};
    if (cfg.bc == "neumann") return {BoundaryCondition::neumann};
    return {BoundaryCondition::dirichlet, BoundaryCondition::neumann};
}

const char* bc_name(BoundaryCondition bc)
{
    return bc == BoundaryCondition::dirichlet ? "dirichlet" : "neumann";
}

int run_spectrum(const RunConfig& cfg, const GridFunction& sigma, OutputSet& out, json& report)
{
    for (BoundaryCondition bc : selected_bcs(cfg)) {
        const SpectralSequence seq = compute_spectrum(cfg, sigma, bc);
        out.add(std::string("spectrum_") + bc_name(bc) + ".csv",
                io::csv_of_spectrum(seq.values, seq.residuals));
        report["results"][bc_name(bc)]["count"] = seq.count();
        report["results"][bc_name(bc)]["first"] = {seq.values[0].real(), seq.values[0].imag()};
    }
    return 0;
}

int run_charfn(const RunConfig& cfg, const GridFunction& sigma, OutputSet& out, json& report)
{
    GridFunction coeff = sigma;
    double shift = 0.0;
    if (cfg.form == SystemForm::tau_form) {
        FactorizationResult fac = factorize(sigma);
        coeff = fac.tau;
        shift = fac.shift_C;
    }
    const PreparedCoeff pc = prepare_coefficient(coeff);
    for (BoundaryCondition bc : selected_bcs(cfg)) {
        std::string csv = "lambda,re,im\n";
        for (int i = 0; i < cfg.lambda_count; ++i) {
            const double lam = cfg.lambda_max * i / (cfg.lambda_count - 1);
            const cplx v = char_value(pc, lam, cfg.form, bc);
            csv += io::format_double(lam) + "," + io::format_double(v.real()) + "," +
                   io::format_double(v.imag()) + "\n";
        }
        out.add(std::string("charfn_") + bc_name(bc) + ".csv", csv);
    }
    report["results"]["shift_C"] = shift;
    return 0;
}

int run_factorize(const RunConfig& cfg, const GridFunction& sigma, OutputSet& out, json& report)
{
    (void)cfg;
    const FactorizationResult fac = factorize(sigma);
    out.add("u.csv", io::csv_of_gridfun(fac.u));
    out.add("phi.csv", io::csv_of_gridfun(fac.phi));
    out.add("tau.csv", io::csv_of_gridfun(fac.tau));
    out.add("tilde_phi.csv", io::csv_of_gridfun(fac.tilde_phi));
    out.add("shifted_sigma.csv", io::csv_of_gridfun(fac.shifted_sigma));
    report["results"]["shift_C"] = fac.shift_C;
    report["results"]["riccati_residual"] = fac.riccati_residual;
    report["tolerances"]["riccati"] = riccati_tolerance;
    return 0;
}

int run_asymptotics(const RunConfig& cfg, const GridFunction& sigma, OutputSet& out,
                    json& report)
{
    const double alpha = cfg.alpha >= 0.0 ? cfg.alpha : cfg.potential.effective_alpha();
    const SpectralSequence dir = compute_spectrum(cfg, sigma, BoundaryCondition::dirichlet);
    const SpectralSequence neu = compute_spectrum(cfg, sigma, BoundaryCondition::neumann);
    const AsymptoticsReport rep = analyze(sigma, dir, neu, alpha);

    out.add("residual_leading_dirichlet.csv", io::csv_of_coeffseq(rep.dirichlet.residual_leading));
    out.add("residual_refined_dirichlet.csv", io::csv_of_coeffseq(rep.dirichlet.residual_refined));
    out.add("residual_leading_neumann.csv", io::csv_of_coeffseq(rep.neumann.residual_leading));
    out.add("residual_refined_neumann.csv", io::csv_of_coeffseq(rep.neumann.residual_refined));
    out.add("sigma_plus.csv", io::csv_of_gridfun(rep.sigma_plus));
    out.add("sigma_minus.csv", io::csv_of_gridfun(rep.sigma_minus));

    report["results"]["alpha"] = rep.alpha;
    report["results"]["gamma"] = rep.gamma;
    for (const auto& [k, v] : rep.fitted_exponents) report["fitted_exponents"][k] = v;
    return 0;
}

int run_inverse(const RunConfig& cfg, const GridFunction& sigma, OutputSet& out, json& report)
{
    const double alpha = cfg.alpha >= 0.0 ? cfg.alpha : cfg.potential.effective_alpha();
    const SpectralSequence dir = compute_spectrum(cfg, sigma, BoundaryCondition::dirichlet);
    const SpectralSequence neu = compute_spectrum(cfg, sigma, BoundaryCondition::neumann);
    const CoeffSeq lam_rem = remainders(dir);
    const CoeffSeq mu_rem = remainders(neu);

    ReconstructionResult rec;
    rec.sigma_star = sigma_star(lam_rem, mu_rem, cfg.M);
    rec.n_used = cfg.n_max;
    rec.detected_jumps = detect_jumps(rec.sigma_star, cfg.n_max);
    rec.gain = smoothness_gain(rec.sigma_star, sigma, alpha, 2 * cfg.n_max);

    out.add("sigma_star.csv", io::csv_of_gridfun(rec.sigma_star));
    out.add("lambda_remainders.csv", io::csv_of_coeffseq(lam_rem));
    out.add("mu_remainders.csv", io::csv_of_coeffseq(mu_rem));

    json jumps = json::array();
    for (const auto& j : rec.detected_jumps)
        jumps.push_back({{"position", j.position},
                         {"size", {j.size.real(), j.size.imag()}}});
    report["results"]["jumps"] = jumps;
    report["results"]["smoothness_gain"] = rec.gain.value;
    report["results"]["smoothness_gain_capped"] = rec.gain.capped;
    report["results"]["expected_gain"] = alpha;
    return 0;
}

} // namespace

int run(const RunConfig& cfg)
{
    try {
        cfg.validate();
        par::set_max_threads(cfg.threads);

        if (cfg.command == "selftest") {
            const auto results = acceptance::run_acceptance(std::cout);
            int fails = 0;
            for (const auto& r : results) fails += r.pass ? 0 : 1;
            return fails == 0 ? 0 : 1;
        }

        const GridFunction sigma = realize(cfg.potential, cfg.M);
        OutputSet out;
        out.dir = cfg.output_dir;
        json report;
        report["config_echo"] = config_echo(cfg);
        report["tolerances"]["root_residual"] = root_residual_tol;

        int rc = 0;
        if (cfg.command == "spectrum") rc = run_spectrum(cfg, sigma, out, report);
        else if (cfg.command == "charfn") rc = run_charfn(cfg, sigma, out, report);
        else if (cfg.command == "factorize") rc = run_factorize(cfg, sigma, out, report);
        else if (cfg.command == "asymptotics") rc = run_asymptotics(cfg, sigma, out, report);
        else if (cfg.command == "inverse") rc = run_inverse(cfg, sigma, out, report);

        report["pass"] = rc == 0;
        out.add("report.json", report.dump(2) + "\n");
        out.flush();
        return rc;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 1;
    }
}

int main_entry(int argc, const char* const* argv)
{
    try {
        RunConfig cfg;
        bool have_config = false;
        std::vector<std::pair<std::string, std::string>> overrides;
        std::string command_arg;

        for (int i = 1; i < argc; ++i) {
            const std::string a = argv[i];
            if (a.rfind("--", 0) == 0) {
                const std::string key = a.substr(2);
                if (i + 1 >= argc)
                    throw ConfigError("flag --" + key + " needs a value");
                const std::string value = argv[++i];
                if (key == "config") {
                    cfg = parse_config(io::read_file(value));
                    have_config = true;
                } else {
                    overrides.emplace_back(key, value);
                }
            } else if (command_arg.empty()) {
                command_arg = a;
            } else {
                throw ConfigError("unexpected positional argument '" + a + "'");
            }
        }
        if (!command_arg.empty()) cfg.command = command_arg;
        for (const auto& [k, v] : overrides)
            apply_override(cfg, k, v, "flag --" + k);
        if (cfg.command.empty() && !have_config)
            throw ConfigError("no command given; usage: slspec <command> [--config file] "
                              "[--key value]...");
        return run(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace slspec::cli
