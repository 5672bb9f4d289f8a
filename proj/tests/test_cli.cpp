#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "adsq/experiments.hpp"
#include "adsq/io.hpp"
#include "adsq/render.hpp"

namespace fs = std::filesystem;
using adsq::json;

namespace {

std::string cli_path() {
    const char* env = std::getenv("ADSQ_CLI");
    REQUIRE_MESSAGE(env != nullptr, "ADSQ_CLI must point at the CLI binary");
    return env;
}

struct CmdResult {
    int exit_code;
    std::string out, err;
};

CmdResult run_cli(const std::string& args) {
    fs::path out = fs::temp_directory_path() / "adsq_cli_stdout.txt";
    fs::path err = fs::temp_directory_path() / "adsq_cli_stderr.txt";
    std::string cmd = cli_path() + " " + args + " >" + out.string() + " 2>" + err.string();
    int rc = std::system(cmd.c_str());
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    return {WEXITSTATUS(rc), slurp(out), slurp(err)};
}

fs::path fresh_dir(const std::string& leaf) {
    fs::path d = fs::temp_directory_path() / leaf;
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

std::string slurp_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("CSV format: shortest round-trip reals and table round-trip") {
    CHECK(adsq::format_real(0.5) == "0.5");
    CHECK(adsq::format_real(-3.0) == "-3");
    CHECK(adsq::format_real(20.0) == "20");
    CHECK(adsq::format_real(100.0) == "100");
    CHECK(adsq::format_real(0.1) == "0.1");
    double v = 0.1 + 0.2;  // needs 17 digits
    CHECK(std::stod(adsq::format_real(v)) == v);

    adsq::CsvTable t;
    t.columns = {"x", "y"};
    t.rows = {{1.0, 0.30000000000000004}, {-2.5, 1e-12}};
    fs::path p = fs::temp_directory_path() / "adsq_roundtrip.csv";
    adsq::write_csv(p, t);
    adsq::CsvTable back = adsq::read_csv(p);
    REQUIRE(back.columns == t.columns);
    REQUIRE(back.rows.size() == 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(back.rows[i][j] == t.rows[i][j]);
}

TEST_CASE("run subcommand executes a small config and writes CSV + metadata") {
    fs::path dir = fresh_dir("adsq_cli_run");
    json config = {{"experiment", "heatmap"},
                   {"name", "tiny"},
                   {"engine", "ff"},
                   {"geometry", {{"N", 4}, {"r_h", 1.0}}},
                   {"sweep", {{"m_min", -1.0}, {"m_max", 1.0}, {"m_points", 3},
                              {"mu_min", -1.0}, {"mu_max", 1.0}, {"mu_points", 3}}}};
    fs::path cfg = dir / "config.json";
    std::ofstream(cfg) << config.dump();

    CmdResult r = run_cli("run --config " + cfg.string() + " --out " + dir.string());
    CHECK(r.exit_code == 0);
    fs::path csv = dir / "tiny.csv";
    fs::path meta = dir / "tiny.meta.json";
    REQUIRE(fs::exists(csv));
    REQUIRE(fs::exists(meta));
    CHECK(r.out.find("tiny.csv") != std::string::npos);

    adsq::CsvTable table = adsq::read_csv(csv);
    CHECK(table.columns.front() == "m");
    CHECK(table.rows.size() == 9);

    json m = json::parse(slurp_file(meta));
    CHECK(m["version"] == adsq::kVersion);
    CHECK(m["config"]["name"] == "tiny");
    CHECK(m.contains("wall_seconds"));
}

TEST_CASE("invalid configs fail with the offending key named") {
    fs::path dir = fresh_dir("adsq_cli_bad");
    fs::path cfg = dir / "bad.json";
    std::ofstream(cfg) << R"({"experiment": "nonsense"})";
    CmdResult r = run_cli("run --config " + cfg.string() + " --out " + dir.string());
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("experiment") != std::string::npos);

    std::ofstream(cfg) << R"({"experiment": "heatmap", "engine": "quantum"})";
    r = run_cli("run --config " + cfg.string() + " --out " + dir.string());
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("engine") != std::string::npos);

    r = run_cli("run --config " + (dir / "missing.json").string());
    CHECK(r.exit_code == 1);
}

TEST_CASE("the ED engine refuses oversized chains") {
    fs::path dir = fresh_dir("adsq_cli_cap");
    fs::path cfg = dir / "cap.json";
    std::ofstream(cfg) << R"({"experiment": "heatmap", "engine": "ed",
        "geometry": {"N": 18},
        "sweep": {"m_points": 1, "mu_points": 1}})";
    CmdResult r = run_cli("run --config " + cfg.string() + " --out " + dir.string());
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("18") != std::string::npos);
}

TEST_CASE("render produces deterministic SVG output") {
    fs::path dir = fresh_dir("adsq_cli_render");
    adsq::CsvTable t;
    t.columns = {"t", "a", "b"};
    for (int i = 0; i < 20; ++i)
        t.rows.push_back({0.1 * i, std::sin(0.3 * i), std::cos(0.3 * i)});
    fs::path csv = dir / "series.csv";
    adsq::write_csv(csv, t);

    fs::path svg1 = dir / "one.svg";
    fs::path svg2 = dir / "two.svg";
    CmdResult r1 = run_cli("render --in " + csv.string() + " --kind line --out " + svg1.string());
    CmdResult r2 = run_cli("render --in " + csv.string() + " --kind line --out " + svg2.string());
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    REQUIRE(fs::exists(svg1));
    std::string body1 = slurp_file(svg1);
    CHECK(body1 == slurp_file(svg2));
    CHECK(body1.find("<svg") != std::string::npos);

    // heatmap needs (x, y, value) columns
    adsq::CsvTable hm;
    hm.columns = {"x", "y", "v"};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            hm.rows.push_back({double(i), double(j), double(i - j)});
    fs::path hcsv = dir / "grid.csv";
    adsq::write_csv(hcsv, hm);
    CmdResult rh = run_cli("render --in " + hcsv.string() + " --kind heatmap");
    CHECK(rh.exit_code == 0);
    CHECK(fs::exists(dir / "grid.svg"));

    CmdResult bad = run_cli("render --in " + csv.string() + " --kind piechart");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("every preset prints a resolved config and is listed") {
    auto names = adsq::preset_names();
    CHECK(names.size() >= 5);
    for (const auto& name : names) {
        CmdResult r = run_cli("preset " + name + " --print");
        CHECK(r.exit_code == 0);
        json config = json::parse(r.out);
        CHECK(config["name"] == name);
        CHECK(config.contains("experiment"));
    }
    CmdResult unknown = run_cli("preset fig-does-not-exist --print");
    CHECK(unknown.exit_code == 1);
}

TEST_CASE("a small preset runs end to end") {
    fs::path dir = fresh_dir("adsq_cli_preset");
    json config = adsq::preset_config("fig-gap");
    // shrink the sweep so the test stays fast
    config["geometry"]["N"] = 4;
    config["sweep"]["m_points"] = 3;
    config["sweep"]["mu_points"] = 3;
    fs::path cfg = dir / "gap.json";
    std::ofstream(cfg) << config.dump();
    CmdResult r = run_cli("run --config " + cfg.string() + " --out " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(dir / "fig-gap.csv"));
}

TEST_CASE("validate --quick passes") {
    CmdResult r = run_cli("validate --quick");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
