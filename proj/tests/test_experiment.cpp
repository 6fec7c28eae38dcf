#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "edges/error.hpp"
#include "edges/experiment.hpp"
#include "edges/tables.hpp"

using namespace edges;
namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / ("edges_test_" + name);
    fs::remove_all(dir);
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Settings parse(const std::string& text)
{
    std::istringstream in(text);
    return parse_settings(in);
}

int run_cli(const std::string& args, const fs::path& stderr_file)
{
    const std::string cmd = std::string(EDGES_CLI) + " " + args + " >/dev/null 2>" + stderr_file.string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(ParseReal, PiForms)
{
    EXPECT_DOUBLE_EQ(parse_real("8pi", "k0"), 8.0 * pi);
    EXPECT_DOUBLE_EQ(parse_real("-pi/2", "x"), -pi / 2.0);
    EXPECT_DOUBLE_EQ(parse_real("0.5*pi", "x"), 0.5 * pi);
    EXPECT_DOUBLE_EQ(parse_real(" 2e-5 ", "eta"), 2e-5);
    EXPECT_THROW(parse_real("eight", "k0"), PreconditionError);
    EXPECT_THROW(parse_real("pi/0", "k0"), PreconditionError);
}

TEST(ParseSettings, CommentsSectionsAndDerived)
{
    const Settings s = parse("# header\n[run]\nN = 64 ; trailing\neta=1e-4\n\n[derived]\nbeta = 3\n");
    EXPECT_EQ(s.size(), 2u);
    EXPECT_EQ(s.at("N"), "64");
    EXPECT_EQ(s.at("eta"), "1e-4");
}

TEST(ParseSettings, RejectsUnknownAndDuplicateKeys)
{
    EXPECT_THROW(parse("colour = blue\n"), PreconditionError);
    EXPECT_THROW(parse("N = 4\nN = 5\n"), PreconditionError);
    EXPECT_THROW(parse("just words\n"), PreconditionError);
}

TEST(ResolveConfig, LayersAndValidation)
{
    const ExperimentConfig c = resolve_config({preset_settings("fig3-case1"), {{"N", "1500"}}});
    EXPECT_EQ(c.N, 1500);
    EXPECT_DOUBLE_EQ(c.k0, 8.0 * pi);
    EXPECT_FALSE(c.beta.has_value());
    EXPECT_FALSE(c.notes.empty());

    try {
        resolve_config({{{"factor", "truncated"}, {"eta", "1e-4"}, {"k0", "200"}, {"N0", "100"},
                         {"N", "400"}}});
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("k0"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("N0"), std::string::npos);
    }
    EXPECT_THROW(resolve_config({{{"factor", "noise_adapted"}}}), PreconditionError);
    EXPECT_THROW(resolve_config({{{"N", "64"}, {"grid", "100"}}}), PreconditionError);
    EXPECT_THROW(resolve_config({{{"sweep_param", "colour"}}}), PreconditionError);
    EXPECT_THROW(resolve_config({{{"jumps", "0.5"}}}), PreconditionError);
    EXPECT_THROW(preset_settings("fig9"), PreconditionError);
}

TEST(ResolveConfig, SettingsRoundTrip)
{
    const ExperimentConfig c = resolve_config({preset_settings("fig2")});
    const ExperimentConfig d = resolve_config({to_settings(c)});
    EXPECT_EQ(to_settings(c), to_settings(d));
    ASSERT_TRUE(d.beta.has_value());
    EXPECT_DOUBLE_EQ(*d.beta, beta_policy(1e-4));
}

TEST(BuildSignal, CatalogAndCustom)
{
    const SignalSpec two = build_signal(resolve_config({{{"signal", "two_jumps"}}}));
    ASSERT_EQ(two.jumps.size(), 2u);
    const SignalSpec custom = build_signal(resolve_config(
        {{{"signal", "custom"}, {"jumps", "-pi/2:1, 1:-0.25"}, {"smooth", "cos:1:1, coef:3:0.1:0.2"}}}));
    ASSERT_EQ(custom.jumps.size(), 2u);
    EXPECT_DOUBLE_EQ(custom.jumps[0].location, -pi / 2.0);
    EXPECT_EQ(custom.smooth.coefficient(3), cplx(0.1, 0.2));
    EXPECT_THROW(build_signal(resolve_config({{{"signal", "custom"}}})), PreconditionError);
}

TEST(RunDetect, NoiselessSawtoothEndToEnd)
{
    const fs::path out = scratch("detect");
    const ExperimentConfig c = resolve_config({{{"N", "128"}, {"output", out.string()}}});
    const DetectRun run = run_detect(c);
    ASSERT_EQ(run.detection.edges.size(), 1u);
    EXPECT_LE(std::abs(run.detection.edges[0].location), 2.0 * pi / (8 * 128));
    EXPECT_NEAR(run.detection.edges[0].amplitude, 1.0, 5.0 * std::log(128.0) / 128.0);
    for (const char* f : {"coefficients.csv", "factor.csv", "detection.csv", "edges.csv", "manifest.cfg"}) {
        EXPECT_TRUE(fs::exists(out / f)) << f;
    }
    const std::string manifest = slurp(out / "manifest.cfg");
    EXPECT_NE(manifest.find("epsilon_predicted"), std::string::npos);
    fs::remove_all(out);
}

TEST(RunDetect, ByteIdenticalAndReplayable)
{
    const fs::path a = scratch("replay_a");
    const fs::path b = scratch("replay_b");
    ExperimentConfig c = resolve_config({preset_settings("fig2"), {{"N", "256"}, {"output", a.string()}}});
    run_detect(c);
    // Re-run from the manifest alone.
    std::ifstream manifest(a / "manifest.cfg");
    Settings from_manifest = parse_settings(manifest);
    from_manifest["output"] = b.string();
    run_detect(resolve_config({from_manifest}));
    for (const char* f : {"coefficients.csv", "factor.csv", "detection.csv", "edges.csv"}) {
        EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
    }
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST(RunFactors, Fig3PresetMatchesReferenceTable)
{
    const fs::path out = scratch("factors");
    const ExperimentConfig c = resolve_config({preset_settings("fig3-case1"), {{"output", out.string()}}});
    std::ostringstream table;
    const ConcentrationFactor f = run_factors(c, table);
    const double eta = 2e-5, beta = resolved_beta(c);
    for (int k = 26; k <= 1000; ++k) {
        const double expected = 0.3985 * (k - 8.0 * pi) / (1.0 + eta * beta * beta * k * k);
        ASSERT_NEAR(f.value(k) / expected, 1.0, 0.01) << "k=" << k;
    }
    EXPECT_EQ(f.value(1001), 0.0);
    EXPECT_EQ(slurp(out / "factor.csv"), table.str());
    fs::remove_all(out);
}

TEST(FactorTable, RoundTrip)
{
    const ConcentrationFactor f = truncated_factor(4.5e-5, 16.658, 6.0 * pi, 900, 1000);
    std::stringstream io;
    write_factor(io, f);
    const FactorTable t = read_factor(io);
    ASSERT_EQ(t.values.size(), 1000u);
    for (int k = 1; k <= 1000; ++k) {
        EXPECT_EQ(t.values[k - 1], f.value(k));
    }
    EXPECT_EQ(t.header.at("family"), "truncated_optimal");
    EXPECT_EQ(std::stod(t.header.at("norm_constant")), f.norm_constant());

    const ConcentrationFactor g = custom_factor(t.values, false);
    for (int k = 1; k <= 1000; ++k) EXPECT_EQ(g.value(k), f.value(k));

    std::istringstream bad("k,s_k\n1,0.5\n3,0.2\n");
    EXPECT_THROW(read_factor(bad), PreconditionError);
}

TEST(RunSweep, EmptyListAndSummary)
{
    const fs::path out = scratch("sweep");
    ExperimentConfig c = resolve_config({{{"sweep_param", "N"}, {"output", out.string()}}});
    EXPECT_THROW(run_sweep(c), PreconditionError);
    c.sweep_values = {64, 128};
    const std::vector<SweepRow> rows = run_sweep(c);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_LT(rows[1].plateau_max, rows[0].plateau_max);
    EXPECT_TRUE(fs::exists(out / "summary.csv"));
    EXPECT_TRUE(fs::exists(out / "N_1" / "edges.csv"));
    fs::remove_all(out);
}

TEST(RunMonteCarlo, WritesAggregateRow)
{
    const fs::path out = scratch("mc");
    const ExperimentConfig c = resolve_config(
        {{{"N", "64"}, {"eta", "1e-4"}, {"factor", "noise_adapted"}, {"trials", "4"}, {"output", out.string()}}});
    const MonteCarloSummary s = run_montecarlo(c);
    EXPECT_EQ(s.trials.size(), 4u);
    EXPECT_NE(slurp(out / "monte_carlo.csv").find("\naggregate,4,"), std::string::npos);
    fs::remove_all(out);
}

TEST(Cli, ExitCodes)
{
    const fs::path dir = scratch("cli");
    fs::create_directories(dir);
    const fs::path err = dir / "stderr.txt";

    EXPECT_EQ(run_cli("detect --N 64 --output " + (dir / "ok").string(), err), 0);
    EXPECT_EQ(run_cli("factors --factor truncated --eta 1e-4 --k0 300 --N0 200 --N 400 --output " +
                          (dir / "bad").string(),
                      err),
              2);
    const std::string message = slurp(err);
    EXPECT_NE(message.find("\"error\":\"config\""), std::string::npos);
    EXPECT_NE(message.find("k0"), std::string::npos);
    EXPECT_EQ(std::count(message.begin(), message.end(), '\n'), 1);

    EXPECT_EQ(run_cli("sweep --sweep_param eta --output " + (dir / "s").string(), err), 2);
    EXPECT_EQ(run_cli("detect --colour blue", err), 2);
    {
        std::ofstream cfg(dir / "run.cfg");
        cfg << "[signal]\nsignal = two_jumps\nN = 128\n[output]\noutput = " << (dir / "cfg").string() << "\n";
    }
    EXPECT_EQ(run_cli("detect --config " + (dir / "run.cfg").string(), err), 0);
    EXPECT_TRUE(fs::exists(dir / "cfg" / "edges.csv"));
    fs::remove_all(dir);
}
