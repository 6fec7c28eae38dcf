#include "edges/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>

#include "edges/error.hpp"
#include "edges/tables.hpp"

namespace edges {

namespace fs = std::filesystem;

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view text, std::string_view what)
{
    std::ostringstream msg;
    msg << "config key '" << key << "': " << what << " (got '" << text << "')";
    throw PreconditionError(msg.str());
}

double plain_number(std::string_view text, std::string_view key)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        bad_value(key, text, "not a number");
    }
    return v;
}

long long parse_integer(std::string_view text, std::string_view key)
{
    text = trim(text);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        bad_value(key, text, "not an integer");
    }
    return v;
}

bool parse_bool(std::string_view text, std::string_view key)
{
    text = trim(text);
    if (text == "true" || text == "yes" || text == "1" || text == "on") return true;
    if (text == "false" || text == "no" || text == "0" || text == "off") return false;
    bad_value(key, text, "not a boolean");
}

std::vector<Jump> parse_jumps(std::string_view text)
{
    std::vector<Jump> jumps;
    if (trim(text).empty()) {
        return jumps;
    }
    for (const std::string_view item : split(text, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() != 2) {
            bad_value("jumps", item, "expected location:amplitude");
        }
        jumps.push_back({parse_real(parts[0], "jumps"), parse_real(parts[1], "jumps")});
    }
    return jumps;
}

SmoothPart parse_smooth(std::string_view text)
{
    SmoothPart smooth;
    if (trim(text).empty()) {
        return smooth;
    }
    for (const std::string_view item : split(text, ',')) {
        const auto parts = split(item, ':');
        if (parts.empty()) {
            continue;
        }
        if ((parts[0] == "cos" || parts[0] == "sin") && parts.size() == 3) {
            const auto k = static_cast<int>(parse_integer(parts[1], "smooth"));
            const double a = parse_real(parts[2], "smooth");
            if (parts[0] == "cos") {
                smooth.add_cosine(k, a);
            } else {
                smooth.add_sine(k, a);
            }
        } else if (parts[0] == "coef" && parts.size() == 4) {
            const auto k = static_cast<int>(parse_integer(parts[1], "smooth"));
            smooth.add_coefficient(k, {parse_real(parts[2], "smooth"), parse_real(parts[3], "smooth")});
        } else {
            bad_value("smooth", item, "expected cos:k:a, sin:k:b or coef:k:re:im");
        }
    }
    return smooth;
}

std::string join_numbers(const std::vector<double>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? "," : "") + format_number(values[i]);
    }
    return out;
}

void ensure_directory(const fs::path& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw PreconditionError("cannot create output directory '" + dir.string() + "': " + ec.message());
    }
}

std::ofstream open_output(const fs::path& path)
{
    std::ofstream out(path);
    if (!out) {
        throw PreconditionError("cannot write '" + path.string() + "'");
    }
    return out;
}

Metadata run_metadata(const ExperimentConfig& c, const ConcentrationFactor& factor)
{
    return {{"N", std::to_string(c.N)},
            {"eta", format_number(c.eta)},
            {"input_noise", c.input_noise ? "true" : "false"},
            {"seed", std::to_string(c.seed)},
            {"factor", std::string(to_string(factor.family()))},
            {"beta", format_number(factor.params().beta)},
            {"k0", format_number(factor.params().k0)},
            {"N0", std::to_string(factor.params().N0)}};
}

}  // namespace

const std::vector<std::string>& config_keys()
{
    static const std::vector<std::string> keys = {
        "preset", "signal",   "jumps", "smooth",       "N",      "eta",    "input_noise",
        "seed",   "factor",   "beta",  "k0",           "N0",     "eps_reg", "factor_table",
        "normalize", "grid",  "c_abs", "c_rel",        "refine", "trials", "plateau_exclusion",
        "output", "sweep_param", "sweep_values"};
    return keys;
}

double parse_real(std::string_view text, std::string_view key)
{
    text = trim(text);
    if (text.empty()) {
        bad_value(key, text, "empty value");
    }
    const auto pi_pos = text.find("pi");
    if (pi_pos == std::string_view::npos) {
        return plain_number(text, key);
    }
    // [multiplier][*]pi[/divisor]
    std::string_view head = trim(text.substr(0, pi_pos));
    std::string_view tail = trim(text.substr(pi_pos + 2));
    if (!head.empty() && head.back() == '*') {
        head = trim(head.substr(0, head.size() - 1));
    }
    double multiplier = 1.0;
    if (head == "-") {
        multiplier = -1.0;
    } else if (head == "+") {
        multiplier = 1.0;
    } else if (!head.empty()) {
        multiplier = plain_number(head, key);
    }
    double divisor = 1.0;
    if (!tail.empty()) {
        if (tail.front() != '/') {
            bad_value(key, text, "expected [a][*]pi[/b]");
        }
        divisor = plain_number(trim(tail.substr(1)), key);
        if (divisor == 0.0) {
            bad_value(key, text, "division by zero");
        }
    }
    return multiplier * std::numbers::pi / divisor;
}

Settings parse_settings(std::istream& in, std::string_view source)
{
    Settings settings;
    const auto& keys = config_keys();
    std::string line;
    int line_no = 0;
    bool skipping = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        const auto comment = view.find_first_of("#;");
        if (comment != std::string_view::npos) {
            view = view.substr(0, comment);
        }
        view = trim(view);
        if (view.empty()) {
            continue;
        }
        if (view.front() == '[') {
            if (view.back() != ']') {
                std::ostringstream msg;
                msg << source << ":" << line_no << ": malformed section header";
                throw PreconditionError(msg.str());
            }
            skipping = trim(view.substr(1, view.size() - 2)) == "derived";
            continue;
        }
        if (skipping) {
            continue;
        }
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            std::ostringstream msg;
            msg << source << ":" << line_no << ": expected key = value";
            throw PreconditionError(msg.str());
        }
        const std::string key(trim(view.substr(0, eq)));
        const std::string value(trim(view.substr(eq + 1)));
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            std::ostringstream msg;
            msg << source << ":" << line_no << ": unknown key '" << key << "'";
            throw PreconditionError(msg.str());
        }
        if (!settings.emplace(key, value).second) {
            std::ostringstream msg;
            msg << source << ":" << line_no << ": duplicate key '" << key << "'";
            throw PreconditionError(msg.str());
        }
    }
    return settings;
}

Settings preset_settings(std::string_view name)
{
    if (name == "fig1") {
        // Noiseless input, factor designed for η, equal weights (β = 1).
        return {{"preset", "fig1"},       {"signal", "sawtooth"},    {"N", "1000"},
                {"factor", "noise_adapted"}, {"beta", "1"},          {"eta", "1e-3"},
                {"input_noise", "false"}, {"sweep_param", "eta"},    {"sweep_values", "1e-3,1e-4"}};
    }
    if (name == "fig2") {
        return {{"preset", "fig2"},          {"signal", "sawtooth"}, {"N", "1000"},
                {"factor", "noise_adapted"}, {"beta", "auto"},       {"eta", "1e-4"},
                {"input_noise", "true"},     {"seed", "1"},          {"sweep_param", "eta"},
                {"sweep_values", "1e-5,1e-4,1e-3"}};
    }
    if (name == "fig3-case1" || name == "fig3-case2") {
        const bool first = name == "fig3-case1";
        return {{"preset", std::string(name)},
                {"signal", "sawtooth"},
                {"smooth", "cos:1:1, sin:2:0.5"},
                {"N", "2000"},
                {"factor", "truncated_optimal"},
                {"beta", "auto"},
                {"eta", first ? "2e-5" : "4.5e-5"},
                {"k0", first ? "8pi" : "6pi"},
                {"N0", "1000"},
                {"input_noise", "true"},
                {"seed", "1"}};
    }
    throw PreconditionError("unknown preset '" + std::string(name) + "'");
}

void ExperimentConfig::validate() const
{
    require(N >= 2, "N must be >= 2");
    require(std::isfinite(eta) && eta >= 0.0, "eta must be finite and >= 0");
    require(signal == "sawtooth" || signal == "two_jumps" || signal == "custom",
            "signal must be one of sawtooth, two_jumps, custom");
    const bool noise_family = factor == FactorFamily::noise_adapted ||
                              factor == FactorFamily::truncated_optimal ||
                              factor == FactorFamily::regularized_optimal;
    if (noise_family) {
        require(eta > 0.0, "factor " + std::string(to_string(factor)) + " requires eta > 0");
        if (!beta) {
            require(eta < 1.0, "beta = auto requires 0 < eta < 1");
        } else {
            require(std::isfinite(*beta) && *beta > 0.0, "beta must be > 0");
        }
    }
    if (factor == FactorFamily::truncated_optimal) {
        const int n0 = N0 == 0 ? N : N0;
        require(n0 >= 1 && n0 <= N, "N0 must satisfy 1 <= N0 <= N");
        if (!(k0 >= 0.0 && k0 < n0)) {
            std::ostringstream msg;
            msg << "k0 must satisfy 0 <= k0 < N0 (k0 = " << format_number(k0) << ", N0 = " << n0 << ")";
            throw PreconditionError(msg.str());
        }
    }
    if (factor == FactorFamily::regularized_optimal) {
        require(eps_reg > 0.0, "eps_reg must be > 0");
        require(k0 >= 0.0 && k0 < N, "k0 must satisfy 0 <= k0 < N");
    }
    if (factor == FactorFamily::custom_table) {
        require(!factor_table.empty(), "factor custom_table requires factor_table = <path>");
    }
    require(grid == 0 || grid >= 2 * N, "grid must be 0 (auto) or >= 2N so that h <= pi/N");
    require(c_abs >= 0.0 && c_rel >= 0.0, "c_abs and c_rel must be >= 0");
    require(trials >= 1, "trials must be >= 1");
    require(plateau_exclusion >= 0.0, "plateau_exclusion must be >= 0");
    if (!sweep_param.empty()) {
        require(sweep_param == "eta" || sweep_param == "N" || sweep_param == "beta" ||
                    sweep_param == "k0",
                "sweep_param must be one of eta, N, beta, k0");
    }
}

ExperimentConfig resolve_config(const std::vector<Settings>& layers)
{
    Settings merged;
    for (const Settings& layer : layers) {
        for (const auto& [key, value] : layer) {
            merged[key] = value;
        }
    }
    ExperimentConfig c;
    const auto get = [&](const char* key) -> const std::string* {
        const auto it = merged.find(key);
        return it == merged.end() ? nullptr : &it->second;
    };
    if (auto v = get("preset")) c.preset = *v;
    if (auto v = get("signal")) c.signal = *v;
    if (auto v = get("jumps")) c.jumps_text = *v;
    if (auto v = get("smooth")) c.smooth_text = *v;
    if (auto v = get("N")) c.N = static_cast<int>(parse_integer(*v, "N"));
    if (auto v = get("eta")) c.eta = parse_real(*v, "eta");
    if (auto v = get("input_noise")) c.input_noise = parse_bool(*v, "input_noise");
    if (auto v = get("seed")) {
        const long long s = parse_integer(*v, "seed");
        if (s < 0) bad_value("seed", *v, "must be >= 0");
        c.seed = static_cast<std::uint64_t>(s);
    }
    if (auto v = get("factor")) c.factor = factor_family_from_string(trim(*v));
    if (auto v = get("beta")) {
        if (trim(*v) == "auto") {
            c.beta.reset();
        } else {
            c.beta = parse_real(*v, "beta");
        }
    }
    if (auto v = get("k0")) c.k0 = parse_real(*v, "k0");
    if (auto v = get("N0")) c.N0 = static_cast<int>(parse_integer(*v, "N0"));
    if (auto v = get("eps_reg")) c.eps_reg = parse_real(*v, "eps_reg");
    if (auto v = get("factor_table")) c.factor_table = *v;
    if (auto v = get("normalize")) c.normalize = parse_bool(*v, "normalize");
    if (auto v = get("grid")) c.grid = static_cast<int>(parse_integer(*v, "grid"));
    if (auto v = get("c_abs")) c.c_abs = parse_real(*v, "c_abs");
    if (auto v = get("c_rel")) c.c_rel = parse_real(*v, "c_rel");
    if (auto v = get("refine")) c.refine = parse_bool(*v, "refine");
    if (auto v = get("trials")) c.trials = static_cast<int>(parse_integer(*v, "trials"));
    if (auto v = get("plateau_exclusion")) {
        c.plateau_exclusion = trim(*v) == "auto" ? 0.0 : parse_real(*v, "plateau_exclusion");
    }
    if (auto v = get("output")) c.output = *v;
    if (auto v = get("sweep_param")) c.sweep_param = *v;
    if (auto v = get("sweep_values")) {
        if (!trim(*v).empty()) {
            for (const std::string_view item : split(*v, ',')) {
                c.sweep_values.push_back(parse_real(item, "sweep_values"));
            }
        }
    }
    // Parse eagerly so malformed lists fail as config errors.
    parse_jumps(c.jumps_text);
    parse_smooth(c.smooth_text);

    if (c.preset == "fig1") {
        c.notes.push_back("N = 1000 chosen to match the truncated band of the fig3 presets");
    } else if (c.preset == "fig2") {
        c.notes.push_back("input is the unit sawtooth with its jump at x = 0");
    } else if (c.preset.rfind("fig3", 0) == 0) {
        c.notes.push_back("smooth part cos x + 0.5 sin 2x is a chosen default");
    }
    c.validate();
    return c;
}

Settings to_settings(const ExperimentConfig& c)
{
    Settings s;
    if (!c.preset.empty()) s["preset"] = c.preset;
    s["signal"] = c.signal;
    s["jumps"] = c.jumps_text;
    s["smooth"] = c.smooth_text;
    s["N"] = std::to_string(c.N);
    s["eta"] = format_number(c.eta);
    s["input_noise"] = c.input_noise ? "true" : "false";
    s["seed"] = std::to_string(c.seed);
    s["factor"] = std::string(to_string(c.factor));
    const bool uses_beta = c.factor == FactorFamily::noise_adapted ||
                           c.factor == FactorFamily::truncated_optimal ||
                           c.factor == FactorFamily::regularized_optimal;
    s["beta"] = uses_beta ? format_number(resolved_beta(c)) : (c.beta ? format_number(*c.beta) : "auto");
    s["k0"] = format_number(c.k0);
    s["N0"] = std::to_string(c.N0);
    s["eps_reg"] = format_number(c.eps_reg);
    s["factor_table"] = c.factor_table;
    s["normalize"] = c.normalize ? "true" : "false";
    s["grid"] = std::to_string(c.grid);
    s["c_abs"] = format_number(c.c_abs);
    s["c_rel"] = format_number(c.c_rel);
    s["refine"] = c.refine ? "true" : "false";
    s["trials"] = std::to_string(c.trials);
    s["plateau_exclusion"] = format_number(c.plateau_exclusion);
    s["output"] = c.output;
    s["sweep_param"] = c.sweep_param;
    s["sweep_values"] = join_numbers(c.sweep_values);
    return s;
}

SignalSpec build_signal(const ExperimentConfig& c)
{
    SignalSpec signal;
    if (c.signal == "sawtooth") {
        signal = SignalSpec::sawtooth();
    } else if (c.signal == "two_jumps") {
        signal.jumps = {{-std::numbers::pi / 2.0, 1.0}, {std::numbers::pi / 2.0, -0.5}};
    }
    const std::vector<Jump> extra = parse_jumps(c.jumps_text);
    signal.jumps.insert(signal.jumps.end(), extra.begin(), extra.end());
    signal.smooth = parse_smooth(c.smooth_text);
    require(c.signal != "custom" || !signal.jumps.empty() || !signal.smooth.is_zero(),
            "signal custom requires jumps or smooth terms");
    signal.validate();
    return signal;
}

double resolved_beta(const ExperimentConfig& c)
{
    return c.beta ? *c.beta : beta_policy(c.eta);
}

ConcentrationFactor build_factor(const ExperimentConfig& c)
{
    switch (c.factor) {
    case FactorFamily::classical_linear:
        return classical_factor(c.N);
    case FactorFamily::noise_adapted:
        return noise_adapted_factor(c.eta, resolved_beta(c), c.N);
    case FactorFamily::truncated_optimal:
        return truncated_factor(c.eta, resolved_beta(c), c.k0, c.N0 == 0 ? c.N : c.N0, c.N);
    case FactorFamily::regularized_optimal:
        return regularized_factor(c.eta, resolved_beta(c), c.k0, c.N, c.eps_reg);
    case FactorFamily::custom_table: {
        std::ifstream in(c.factor_table);
        if (!in) {
            throw PreconditionError("cannot open factor_table '" + c.factor_table + "'");
        }
        FactorTable table = read_factor(in);
        if (static_cast<int>(table.values.size()) != c.N) {
            std::ostringstream msg;
            msg << "factor_table has " << table.values.size() << " rows but N = " << c.N;
            throw PreconditionError(msg.str());
        }
        return custom_factor(std::move(table.values), c.normalize);
    }
    }
    throw PreconditionError("unsupported factor family");
}

SpectralData build_data(const ExperimentConfig& c)
{
    SpectralData data = analytic_coefficients(build_signal(c), c.N);
    if (c.input_noise && c.eta > 0.0) {
        data = add_white_noise(std::move(data), c.eta, c.seed);
    }
    return data;
}

DetectRun compute_detect(const ExperimentConfig& c)
{
    const SignalSpec signal = build_signal(c);
    DetectRun run{build_data(c), build_factor(c), {}, {}, 0.0};
    const std::vector<double> grid = uniform_grid(c.grid > 0 ? c.grid : 8 * c.N);
    ThresholdPolicy policy{c.c_abs, c.c_rel, c.refine};
    run.detection = detect(run.data, run.factor, grid, policy);
    const double exclusion =
        c.plateau_exclusion > 0.0 ? c.plateau_exclusion : 10.0 * run.detection.epsilon_predicted;
    run.plateau = plateau_stats(run.detection.grid, run.detection.samples, signal.jumps, exclusion);
    for (const Jump& j : signal.jumps) {
        const double k = conjugate_sum_at(run.data, run.factor, j.location);
        run.jump_error = std::max(run.jump_error, std::abs(k - j.amplitude));
    }
    return run;
}

void write_manifest(const fs::path& path, const ExperimentConfig& config, const Settings& derived)
{
    std::ofstream out = open_output(path);
    out << "# resolved parameters; re-run with --config " << path.filename().string() << "\n";
    for (const auto& [key, value] : to_settings(config)) {
        out << key << " = " << value << '\n';
    }
    out << "\n[derived]\n";
    for (const auto& [key, value] : derived) {
        out << key << " = " << value << '\n';
    }
    for (std::size_t i = 0; i < config.notes.size(); ++i) {
        out << "note" << i << " = " << config.notes[i] << '\n';
    }
}

DetectRun run_detect(const ExperimentConfig& c)
{
    DetectRun run = compute_detect(c);
    const fs::path dir = c.output;
    ensure_directory(dir);
    {
        std::ofstream out = open_output(dir / "coefficients.csv");
        write_coefficients(out, run.data);
    }
    {
        std::ofstream out = open_output(dir / "factor.csv");
        write_factor(out, run.factor);
    }
    {
        std::ofstream out = open_output(dir / "detection.csv");
        write_detection(out, run.detection, run_metadata(c, run.factor));
    }
    {
        std::ofstream out = open_output(dir / "edges.csv");
        write_edges(out, run.detection.edges);
    }
    write_manifest(dir / "manifest.cfg", c,
                   {{"epsilon_predicted", format_number(run.detection.epsilon_predicted)},
                    {"threshold", format_number(run.detection.threshold_used)},
                    {"norm_constant", format_number(run.factor.norm_constant())},
                    {"edge_count", std::to_string(run.detection.edges.size())},
                    {"plateau_rms", format_number(run.plateau.rms)},
                    {"plateau_max", format_number(run.plateau.max)},
                    {"plateau_points", std::to_string(run.plateau.count)},
                    {"jump_error", format_number(run.jump_error)}});
    return run;
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& c)
{
    require(!c.sweep_param.empty(), "sweep requires sweep_param");
    require(!c.sweep_values.empty(), "sweep requires a non-empty sweep_values list");
    const fs::path root = c.output;
    ensure_directory(root);
    std::vector<SweepRow> rows;
    for (std::size_t i = 0; i < c.sweep_values.size(); ++i) {
        ExperimentConfig sub = c;
        const double v = c.sweep_values[i];
        if (c.sweep_param == "eta") {
            sub.eta = v;
        } else if (c.sweep_param == "N") {
            require(v == std::floor(v) && v >= 2 && v <= 1 << 24, "sweep over N needs integer values >= 2");
            sub.N = static_cast<int>(v);
        } else if (c.sweep_param == "beta") {
            sub.beta = v;
        } else {
            sub.k0 = v;
        }
        sub.sweep_param.clear();
        sub.sweep_values.clear();
        sub.output = (root / (c.sweep_param + "_" + std::to_string(i))).string();
        sub.validate();
        const DetectRun run = run_detect(sub);
        rows.push_back({v, run.plateau.rms, run.plateau.max, run.jump_error,
                        run.detection.epsilon_predicted, run.detection.edges.size()});
    }
    std::ofstream out = open_output(root / "summary.csv");
    out << "# sweep_param=" << c.sweep_param << '\n';
    out << "value,plateau_rms,plateau_max,jump_error,epsilon_predicted,edge_count\n";
    for (const SweepRow& r : rows) {
        out << format_number(r.value) << ',' << format_number(r.plateau_rms) << ','
            << format_number(r.plateau_max) << ',' << format_number(r.jump_error) << ','
            << format_number(r.epsilon_predicted) << ',' << r.edge_count << '\n';
    }
    write_manifest(root / "manifest.cfg", c, {{"sub_runs", std::to_string(rows.size())}});
    return rows;
}

MonteCarloSummary run_montecarlo(const ExperimentConfig& c)
{
    const SignalSpec signal = build_signal(c);
    const ConcentrationFactor factor = build_factor(c);
    MonteCarloOptions options;
    options.policy = {c.c_abs, c.c_rel, c.refine};
    options.grid_size = c.grid;
    options.plateau_exclusion = c.plateau_exclusion;
    const double eta = c.input_noise ? c.eta : 0.0;
    MonteCarloSummary summary = monte_carlo_scale(signal, eta, factor, c.trials, c.seed, options);

    const fs::path dir = c.output;
    ensure_directory(dir);
    {
        std::ofstream out = open_output(dir / "monte_carlo.csv");
        Metadata meta = run_metadata(c, factor);
        meta.emplace_back("trials", std::to_string(c.trials));
        write_monte_carlo(out, summary, meta);
    }
    write_manifest(dir / "manifest.cfg", c,
                   {{"epsilon_predicted", format_number(summary.epsilon_predicted)},
                    {"detection_rate", format_number(summary.detection_rate)},
                    {"plateau_rms", format_number(summary.plateau_rms)},
                    {"plateau_max", format_number(summary.plateau_max)}});
    return summary;
}

ConcentrationFactor run_factors(const ExperimentConfig& c, std::ostream& out)
{
    ConcentrationFactor factor = build_factor(c);
    write_factor(out, factor);
    const fs::path dir = c.output;
    ensure_directory(dir);
    std::ofstream file = open_output(dir / "factor.csv");
    write_factor(file, factor);
    return factor;
}

}  // namespace edges
