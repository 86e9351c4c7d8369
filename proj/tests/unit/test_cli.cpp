#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "thinlayer/cli/commands.hpp"
#include "thinlayer/cli/config.hpp"
#include "thinlayer/cli/io.hpp"
#include "thinlayer/elastic.hpp"
#include "thinlayer/errors.hpp"

using namespace thinlayer;
using namespace thinlayer::cli;
namespace fs = std::filesystem;

namespace {

const std::string kSampleMap = THINLAYER_DATA_DIR "/sample_thickness.csv";

// Fresh scratch directory per test.
class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           ("thinlayer_cli_" + std::to_string(::getpid()) + "_" + info->test_suite_name() + "_" + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  struct Outcome {
    int code;
    std::string out;
    std::string err;
  };

  Outcome invoke(std::vector<std::string> args) const {
    args.insert(args.begin(), "thinlayer");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  Outcome command(const std::string& cmd, const std::string& config_text, const std::string& out = "out") const {
    const fs::path cfg = write(cmd + ".ini", config_text);
    return invoke({cmd, "--config", cfg.string(), "--out", (dir_ / out).string()});
  }

  Json report(const std::string& name, const std::string& out = "out") const {
    std::ifstream in(dir_ / out / name);
    return Json::parse(in);
  }

  std::string slurp(const fs::path& p) const {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

const std::string kBilayer = R"(
[geometry]
R1 = 80
R2 = 40
delta0 = 0.8

[layer1]
E = 10
h = 2

[layer2]
E = 10
h = 2
)";

}  // namespace

TEST(Config, ParsesSectionsCommentsAndPaths) {
  const Config c = Config::parse("# lead\n[a]\nx = 1.5  ; trailing\n\n[b]\npath = m.csv\nname = y1 + 2\n", "cfg.ini",
                                 "/base");
  EXPECT_TRUE(c.has_section("a"));
  EXPECT_DOUBLE_EQ(c.number("a", "x"), 1.5);
  EXPECT_EQ(c.text("b", "name"), "y1 + 2");
  EXPECT_EQ(c.path("b", "path"), fs::path("/base/m.csv"));
  EXPECT_FALSE(c.has("a", "y"));
  EXPECT_DOUBLE_EQ(c.number_or("a", "y", 7.0), 7.0);
}

TEST(Config, DiagnosticsCarryLineAndField) {
  auto message = [](const std::string& text, auto&& probe) {
    try {
      probe(Config::parse(text, "cfg.ini"));
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message("[a]\nx = 1\nx = 2\n", [](const Config&) {}),
            "cfg.ini:3: [a] x: duplicate key (first set on line 2)");
  EXPECT_EQ(message("x = 1\n", [](const Config&) {}), "cfg.ini:1: key outside of any [section]");
  EXPECT_EQ(message("[a\n", [](const Config&) {}), "cfg.ini:1: unterminated section header");
  EXPECT_EQ(message("[a]\n\nx = abc\n", [](const Config& c) { c.number("a", "x"); }),
            "cfg.ini:3: [a] x: expected a finite number, got 'abc'");
  EXPECT_EQ(message("[a]\nx = -1\n", [](const Config& c) { c.positive("a", "x"); }),
            "cfg.ini:2: [a] x: must be positive");
  EXPECT_EQ(message("[a]\n", [](const Config& c) { c.number("a", "x"); }), "cfg.ini: [a] x: required key is missing");
  EXPECT_EQ(message("[a]\nx = 1\nzz = 2\n", [](const Config& c) { c.allow_only("a", {"x"}); }),
            "cfg.ini:3: [a] zz: unknown key");
}

TEST(Format, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(std::numbers::pi), "3.14159265359");
  EXPECT_EQ(format_number(1e-20), "1e-20");
  EXPECT_EQ(format_number(2.0), "2");
  EXPECT_EQ(number(std::numbers::pi).dump(), "3.14159265359");
  EXPECT_EQ(number(0.1 + 0.2).dump(), "0.3");
  EXPECT_TRUE(number(NAN).is_null());
}

TEST_F(CliTest, LatticeCsvRoundTrip) {
  const RectLattice lat{-2.0, 3.0, 6, -1.0, 1.0, 5};
  std::vector<double> v;
  for (int r = 0; r < lat.n2; ++r) {
    for (int c = 0; c < lat.n1; ++c) v.push_back(1.0 + 0.1 * c - 0.25 * r);
  }
  write_lattice_csv(dir_ / "m.csv", lat, v, "H");
  const LatticeMap m = read_lattice_csv(dir_ / "m.csv", "H");
  EXPECT_EQ(m.lattice().n1, 6);
  EXPECT_EQ(m.lattice().n2, 5);
  EXPECT_DOUBLE_EQ(m.lattice().y1_max, 3.0);
  // Cubic interpolation is exact on the affine map.
  EXPECT_NEAR(m({0.3, 0.2}), 1.0 + 0.1 * 2.3 - 0.25 * 2.4, 1e-12);
  EXPECT_THROW(read_lattice_csv(dir_ / "m.csv", "Htilde"), IoError);
}

TEST_F(CliTest, LatticeCsvRejectsCorruptFiles) {
  std::string good = "y1,y2,H\n";
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) good += std::to_string(c) + "," + std::to_string(r) + ",1\n";
  }
  EXPECT_NO_THROW(read_lattice_csv(write("good.csv", good), "H"));
  auto fails_with = [&](const std::string& text, const std::string& fragment) {
    try {
      read_lattice_csv(write("bad.csv", text), "H");
    } catch (const IoError& e) {
      return std::string(e.what()).find(fragment) != std::string::npos;
    }
    return false;
  };
  EXPECT_TRUE(fails_with("x,y,H\n", ":1: expected header"));
  std::string bad_value = good;
  bad_value.replace(bad_value.find("1\n", 9), 1, "nan?");
  EXPECT_TRUE(fails_with(bad_value, ":2: 'nan?' is not a finite number"));
  std::string bad_spacing = good;
  bad_spacing.replace(bad_spacing.find("2,1,1"), 5, "2.5,1,1");
  EXPECT_TRUE(fails_with(bad_spacing, ":8: y1 does not follow"));
  EXPECT_TRUE(fails_with(good.substr(0, good.size() - 6), "not a multiple"));
  EXPECT_THROW(read_lattice_csv(dir_ / "missing.csv", "H"), IoError);
}

TEST_F(CliTest, WinklerCircularForceMatchesClosedForm) {
  const auto o = command("winkler", R"(
[material]
E = 10
nu = 0.3
[geometry]
R1 = 50
R2 = 50
delta0 = 0.4
[layer]
h = 2
)");
  ASSERT_EQ(o.code, 0) << o.err;
  const Json r = report("winkler.json");
  const Material mat = Material::compressible(10.0, 0.3);
  const double exact = std::numbers::pi * mat.p_modulus() * 50.0 * 0.4 * 0.4 / 2.0;
  EXPECT_NEAR(r["force"].get<double>(), exact, 1e-6 * exact);
  EXPECT_NEAR(r["contact"]["a1"].get<double>(), std::sqrt(2.0 * 50.0 * 0.4), 1e-10);
  EXPECT_NEAR(r["peak_pressure"].get<double>(), mat.p_modulus() * 0.4 / 2.0, 1e-9);
  EXPECT_TRUE(fs::exists(dir_ / "out" / "winkler_pressure.csv"));
  EXPECT_EQ(slurp(dir_ / "out" / "winkler_pressure.csv").substr(0, 8), "y1,y2,p\n");
}

TEST_F(CliTest, WinklerAcceptsThicknessMaps) {
  const auto o = command("winkler", "[material]\nE = 10\nnu = 0.3\n[geometry]\nR1 = 80\nR2 = 40\ndelta0 = 0.8\n"
                                    "[layer]\nh = 2\nH_map = " + kSampleMap + "\n[solver]\ngrid = 64\n");
  ASSERT_EQ(o.code, 0) << o.err;
  const Json r = report("winkler.json");
  // The bump thickens the layer, so the force drops below the uniform one.
  const Material mat = Material::compressible(10.0, 0.3);
  const double R = std::sqrt(80.0 * 40.0);
  EXPECT_LT(r["force"].get<double>(), std::numbers::pi * mat.p_modulus() * R * 0.64 / 2.0);
  EXPECT_GT(r["layer"]["eps"].get<double>(), 0.0);
}

TEST_F(CliTest, WinklerRejectsIncompressibleLayer) {
  const auto o = command("winkler", "[material]\nE = 10\nnu = 0.5\n[geometry]\nR1 = 5\nR2 = 5\ndelta0 = 0.1\n"
                                    "[layer]\nh = 1\n");
  EXPECT_EQ(o.code, kExitConfigError);
  EXPECT_NE(o.err.find("incompressible singularity"), std::string::npos) << o.err;
  EXPECT_NE(o.err.find(":3: [material] nu"), std::string::npos) << o.err;
}

TEST_F(CliTest, WinklerMissingMapIsAnIoError) {
  const auto o = command("winkler", "[material]\nE = 10\nnu = 0.3\n[geometry]\nR1 = 5\nR2 = 5\ndelta0 = 0.1\n"
                                    "[layer]\nh = 1\nH_map = nowhere.csv\n");
  EXPECT_EQ(o.code, kExitConfigError);
  EXPECT_NE(o.err.find("I/O error"), std::string::npos) << o.err;
}

TEST_F(CliTest, EllipticCircularHasUnitForceFactorTwo) {
  const auto o = command("elliptic", "[geometry]\nR1 = 30\nR2 = 30\ndelta0 = 0.5\n[layer1]\nE = 10\nh = 2\n");
  ASSERT_EQ(o.code, 0) << o.err;
  const Json r = report("elliptic.json");
  EXPECT_NEAR(r["M_P"].get<double>(), 2.0, 1e-10);
  EXPECT_NEAR(r["s"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(r["a1"].get<double>(), std::sqrt(4.0 * 30.0 * 0.5), 1e-10);
}

TEST_F(CliTest, EllipticSwapsSemiAxesWithRadii) {
  ASSERT_EQ(command("elliptic", kBilayer, "a").code, 0);
  std::string swapped = kBilayer;
  swapped.replace(swapped.find("R1 = 80"), 7, "R1 = 40");
  swapped.replace(swapped.find("R2 = 40"), 7, "R2 = 80");
  ASSERT_EQ(command("elliptic", swapped, "b").code, 0);
  const Json a = report("elliptic.json", "a");
  const Json b = report("elliptic.json", "b");
  EXPECT_NEAR(a["a1"].get<double>(), b["a2"].get<double>(), 1e-9);
  EXPECT_NEAR(a["a2"].get<double>(), b["a1"].get<double>(), 1e-9);
  EXPECT_NEAR(a["p0"].get<double>(), b["p0"].get<double>(), 1e-9);
}

TEST_F(CliTest, EllipticWithoutApproachIsNoContact) {
  std::string text = kBilayer;
  text.replace(text.find("delta0 = 0.8"), 12, "delta0 = 0");
  const auto o = command("elliptic", text);
  EXPECT_EQ(o.code, kExitSolverError);
  EXPECT_NE(o.err.find("no contact"), std::string::npos) << o.err;
}

TEST_F(CliTest, EllipticRejectsCompressibleLayer) {
  const auto o = command("elliptic", kBilayer + "nu = 0.3\n");
  EXPECT_EQ(o.code, kExitConfigError);
  EXPECT_NE(o.err.find("[layer2] nu"), std::string::npos) << o.err;
}

TEST_F(CliTest, SensitivityWithoutVariationHasNoForceChange) {
  const auto o = command("sensitivity", kBilayer + "[solver]\ngrid = 64\n");
  ASSERT_EQ(o.code, 0) << o.err;
  const Json r = report("sensitivity.json");
  EXPECT_EQ(r["force_variation"].get<double>(), 0.0);
  EXPECT_EQ(r["iterations"].get<int>(), 0);
}

TEST_F(CliTest, OptimizedMapFeedsSensitivityWithChainProperty) {
  const auto opt = command("optimize", kBilayer + "[thickness]\nH_map = " + kSampleMap +
                                           "\n[optimize]\northogonalize = rho_star\n");
  ASSERT_EQ(opt.code, 0) << opt.err;
  const fs::path map = dir_ / "out" / "optimize_variation.csv";
  ASSERT_TRUE(fs::exists(map));
  std::string layers = kBilayer;
  layers.replace(layers.find("h = 2\n"), 6, "h = 2\nvariation_map = " + map.string() + "\n");
  layers += "variation_map = " + map.string() + "\n";
  const auto sens = command("sensitivity", layers, "sens");
  ASSERT_EQ(sens.code, 0) << sens.err;
  const Json r = report("sensitivity.json", "sens");
  EXPECT_EQ(r["grid"].get<int>(), 256);
  EXPECT_LE(r["force_ratio"].get<double>(), 1e-3);
  EXPECT_GT(r["absolute_force_variation"].get<double>(), 0.0);
  // Scale: sum_alpha h^2/E * integral of rho * max |Htilde| (bump height 0.5).
  const double a1 = r["contact"]["a1"].get<double>();
  const double a2 = r["contact"]["a2"].get<double>();
  const double scale = 2 * (4.0 / 10.0) * std::numbers::pi * (a1 * a1 + a2 * a2) / 12.0 * 0.5;
  EXPECT_LT(std::abs(r["orthogonality_residual"].get<double>()), 1e-8 * scale);
}

TEST_F(CliTest, SensitivityRejectsMapThatMissesTheContact) {
  std::string text = kBilayer;
  text.replace(text.find("h = 2\n"), 6, "h = 2\nvariation_map = small.csv\n");
  std::string small = "y1,y2,Htilde\n";
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 5; ++c) small += std::to_string(c - 2) + "," + std::to_string(r - 2) + ",0.01\n";
  }
  write("small.csv", small);
  const auto o = command("sensitivity", text);
  EXPECT_EQ(o.code, kExitConfigError);
  EXPECT_NE(o.err.find("shape error"), std::string::npos) << o.err;
}

TEST_F(CliTest, OptimizeConstantMapGivesOneThickness) {
  const auto o = command("optimize", "[domain]\na1 = 5\na2 = 3\n[thickness]\nH = 1.75\n");
  ASSERT_EQ(o.code, 0) << o.err;
  const Json r = report("optimize.json");
  ASSERT_EQ(r["weights"].size(), 3u);
  for (const Json& w : r["weights"]) EXPECT_NEAR(w["h_eff"].get<double>(), 1.75, 1e-12);
}

TEST_F(CliTest, OptimizeBumpMapGivesDistinctThicknesses) {
  const auto o = command("optimize", kBilayer + "[thickness]\nH_map = " + kSampleMap + "\n");
  ASSERT_EQ(o.code, 0) << o.err;
  const Json r = report("optimize.json");
  const double h0 = r["weights"][0]["h_eff"].get<double>();
  const double h1 = r["weights"][1]["h_eff"].get<double>();
  const double h2 = r["weights"][2]["h_eff"].get<double>();
  EXPECT_GT(std::abs(h0 - h1), 1e-4);
  EXPECT_GT(std::abs(h1 - h2), 1e-4);
  EXPECT_GT(std::abs(h0 - h2), 1e-4);
  EXPECT_EQ(r["weights"][0]["kind"], "rho_star");
  EXPECT_NEAR(r["weights"][0]["argmax_radius"].get<double>(), std::sqrt(0.5), 1e-6);
  EXPECT_EQ(r["weights"][1]["argmax_radius"].get<double>(), 0.0);
}

TEST_F(CliTest, OptimizeRejectsZeroShrinkFactor) {
  const auto o = command("optimize", "[domain]\na1 = 5\na2 = 3\n[thickness]\nH = 2 + 0.1*y1\n[optimize]\nkappa = 0\n");
  EXPECT_EQ(o.code, kExitConfigError);
  EXPECT_NE(o.err.find("domain error"), std::string::npos) << o.err;
}

TEST_F(CliTest, ExpressionErrorsPointAtTheField) {
  const auto o = command("optimize", "[domain]\na1 = 5\na2 = 3\n[thickness]\nH = 2 + system(1)\n");
  EXPECT_EQ(o.code, kExitConfigError);
  EXPECT_NE(o.err.find(":5: [thickness] H"), std::string::npos) << o.err;
}

TEST_F(CliTest, GridMustBeAPowerOfTwo) {
  EXPECT_EQ(command("elliptic", kBilayer + "[solver]\ngrid = 100\n").code, kExitConfigError);
  const fs::path cfg = write("e.ini", kBilayer);
  EXPECT_EQ(invoke({"elliptic", "--config", cfg.string(), "--grid", "2048"}).code, kExitConfigError);
  EXPECT_EQ(invoke({"elliptic", "--config", cfg.string(), "--grid", "16"}).code, kExitConfigError);
}

TEST_F(CliTest, ArgumentErrors) {
  EXPECT_EQ(invoke({}).code, kExitConfigError);
  EXPECT_EQ(invoke({"elliptic"}).code, kExitConfigError);
  EXPECT_EQ(invoke({"bogus"}).code, kExitConfigError);
  EXPECT_EQ(invoke({"elliptic", "--config", (dir_ / "none.ini").string()}).code, kExitConfigError);
  const auto help = invoke({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("sensitivity"), std::string::npos);
}

TEST_F(CliTest, ReportsAreByteIdenticalAcrossRunsAndThreadCounts) {
  ::setenv("THINLAYER_THREADS", "1", 1);
  std::string varied = kBilayer;
  varied.replace(varied.find("h = 2\n"), 6, "h = 2\nvariation = 0.1*exp(-(y1^2 + y2^2)/30) - 0.02\n");
  ASSERT_EQ(command("sensitivity", varied + "[solver]\ngrid = 128\n", "b").code, 0);
  ::setenv("THINLAYER_THREADS", "4", 1);
  ASSERT_EQ(command("sensitivity", varied + "[solver]\ngrid = 128\n", "c").code, 0);
  ::unsetenv("THINLAYER_THREADS");
  ASSERT_EQ(command("sensitivity", varied + "[solver]\ngrid = 128\n", "d").code, 0);
  const std::string b = slurp(dir_ / "b" / "sensitivity.json");
  EXPECT_EQ(b, slurp(dir_ / "c" / "sensitivity.json"));
  EXPECT_EQ(b, slurp(dir_ / "d" / "sensitivity.json"));
  EXPECT_EQ(slurp(dir_ / "b" / "sensitivity_pressure_variation.csv"),
            slurp(dir_ / "c" / "sensitivity_pressure_variation.csv"));
  EXPECT_NE(report("sensitivity.json", "b")["force_variation"].get<double>(), 0.0);
}

TEST_F(CliTest, ValidateAbortsOnCorruptSampleMap) {
  write("broken.csv", "y1,y2,H\n0,0,1\n1,0,oops\n");
  const auto o = command("validate", "[validate]\nmap = broken.csv\n");
  EXPECT_EQ(o.code, kExitConfigError);
  EXPECT_NE(o.err.find("I/O error"), std::string::npos) << o.err;
  EXPECT_NE(o.err.find("broken.csv:3"), std::string::npos) << o.err;
  EXPECT_FALSE(fs::exists(dir_ / "out" / "validate.json"));
}

TEST_F(CliTest, ValidateMeasuresConvergenceOnTheRequestedGrid) {
  const auto o = invoke({"validate", "--grid", "64", "--out", (dir_ / "out").string()});
  EXPECT_EQ(o.code, 0) << o.out << o.err;
  EXPECT_NE(o.out.find("12/12 criteria passed"), std::string::npos) << o.out;
  const Json r = report("validate.json");
  EXPECT_EQ(r["ratio_grid"].get<int>(), 64);
  const Json& theta = r["criteria"][3];
  EXPECT_EQ(theta["id"].get<int>(), 4);
  EXPECT_NE(theta["target"].get<std::string>().find("64^2 / 128^2"), std::string::npos);
  const double ratio = theta["measured"]["ratio"].get<double>();
  EXPECT_NEAR(ratio, 4.0, 0.5);
}

TEST_F(CliTest, ExecutableExitCodes) {
  const fs::path cfg = write("e.ini", kBilayer);
  auto status = [](const std::string& cmd) {
    const int s = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  const std::string exe = THINLAYER_EXE;
  EXPECT_EQ(status(exe + " elliptic --config " + cfg.string() + " --out " + (dir_ / "x").string()), 0);
  EXPECT_TRUE(fs::exists(dir_ / "x" / "elliptic.json"));
  EXPECT_EQ(status(exe), 2);
  EXPECT_EQ(status(exe + " elliptic --config " + (dir_ / "nope.ini").string()), 2);
}
