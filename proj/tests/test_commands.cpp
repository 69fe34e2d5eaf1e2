#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <doctest.h>

#include "oamsense/commands.hpp"
#include "oamsense/fock.hpp"
#include "oamsense/validate.hpp"

using namespace oam;

namespace {

constexpr double kPi = std::numbers::pi;

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) {
    if (c == '\n') ++n;
  }
  return n;
}

#ifdef OAMSENSE_CLI_PATH
int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(OAMSENSE_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}
#endif

}  // namespace

TEST_CASE("cmd_signal writes the documented header and rows") {
  SweepSpec spec;
  spec.variant = Variant::ideal;
  spec.phi_max = kPi;
  spec.phi_steps = 5;
  std::ostringstream out, err;
  CHECK(cmd_signal(spec, out, err) == 0);
  const std::string text = out.str();
  CHECK(text.rfind("phi,signal\n", 0) == 0);
  CHECK(count_lines(text) == 6);
  CHECK(err.str().empty());

  // identical invocations are byte-identical; jobs must not change output
  std::ostringstream again;
  spec.jobs = 4;
  cmd_signal(spec, again, err);
  CHECK(again.str() == text);
}

TEST_CASE("cmd_signal reports bad specs on the error stream") {
  SweepSpec spec;
  spec.phi_steps = 1;
  std::ostringstream out, err;
  CHECK(cmd_signal(spec, out, err) == 1);
  CHECK(!err.str().empty());
  CHECK(out.str().empty());
}

TEST_CASE("signal CSV fields parse back onto the generating formula") {
  SweepSpec spec;
  spec.variant = Variant::ideal;
  spec.r = 1.0;
  spec.ell = 2;
  spec.phi_steps = 37;
  std::ostringstream out, err;
  REQUIRE(cmd_signal(spec, out, err) == 0);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);  // header
  int rows = 0;
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    const double phi = std::stod(line.substr(0, comma));
    const double signal = std::stod(line.substr(comma + 1));
    CHECK(std::abs(signal_value(Variant::ideal, Scenario(1.0, 2, phi)) -
                   signal) <= 1e-10);
    ++rows;
  }
  CHECK(rows == 37);
}

TEST_CASE("cmd_sensitivity emits inf rows") {
  SweepSpec spec;
  spec.variant = Variant::ideal;
  spec.phi_max = kPi;
  spec.phi_steps = 5;
  std::ostringstream out, err;
  CHECK(cmd_sensitivity(spec, out, err) == 0);
  CHECK(out.str().rfind("phi,delta_phi,signal\n", 0) == 0);
  CHECK(out.str().find(",inf,") != std::string::npos);
}

TEST_CASE("cmd_optimal output") {
  OptimalSweepSpec spec;
  spec.r_min = 1.0;
  spec.r_max = 1.5;
  spec.r_steps = 2;
  std::ostringstream out, err;
  CHECK(cmd_optimal(spec, out, err) == 0);
  CHECK(out.str().rfind("r,N,phi_opt,delta_phi_min,hl,snl\n", 0) == 0);
  CHECK(count_lines(out.str()) == 3);
}

TEST_CASE("cmd_figure rejects unknown ids") {
  std::ostringstream err;
  CHECK(cmd_figure("9z", ".", 1, err) == 1);
  CHECK(!err.str().empty());
}

TEST_CASE("validation check hooks detect an injected sign error") {
  // matrix route with the rotation block mis-transcribed (both off-diagonal
  // signs positive); the closed-form comparison must flag it
  const auto corrupted = [](const Scenario& sc) {
    const double th = 2.0 * sc.ell * sc.phi;
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(4, 4);
    m(0, 0) = std::cos(th);
    m(0, 1) = std::sin(th);
    m(1, 0) = std::sin(th);
    m(1, 1) = std::cos(th);
    const auto bs = bs_transform(2);
    return propagate(tmsv_state(sc.r), bs * SymplecticTransform(m) * bs);
  };
  CHECK(checks::ideal_matrix_vs_closed(corrupted) > 1e-3);
  CHECK(checks::ideal_matrix_vs_closed(
            [](const Scenario& sc) { return ideal_pipeline(sc); }) <= 1e-12);

  // oracle comparison against a closed form with the wrong trigonometric
  // structure must flag it as well
  const auto wrong_closed = [](const Scenario& sc) {
    const double nb = sc.mean_photon_number();
    const double s = std::sin(2.0 * sc.ell * sc.phi);
    return 1.0 / std::sqrt(1.0 + nb * (nb + 2.0) * s * s);
  };
  CHECK(checks::oracle_vs_closed(0.5, 1, 21, default_cutoff(0.5),
                                 wrong_closed) > 1e-3);
  CHECK(checks::oracle_vs_closed(0.5, 1, 21, default_cutoff(0.5),
                                 signal_ideal) <= 1e-8);
}

TEST_CASE("cmd_validate lists every check and reports the known-red one") {
  std::ostringstream out, err;
  const int code = cmd_validate({}, out, err);
  const std::string text = out.str();
  CHECK(count_lines(text) >= 13);  // >= 12 checks plus the summary line

  // exactly one check is expected to fail: the dark-count optimum cannot sit
  // within 0.5% of the lossless optimum (its true distance is ~32%)
  CHECK(code == 2);
  std::istringstream lines(text);
  std::string line;
  int fails = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("[FAIL]", 0) == 0) {
      ++fails;
      CHECK(line.find("dark_optimal_vs_ideal") != std::string::npos);
    }
  }
  CHECK(fails == 1);

  // with that tolerance overridden the suite exits clean
  std::ostringstream out2, err2;
  CHECK(cmd_validate({"dark_optimal_vs_ideal=0.5"}, out2, err2) == 0);

  // unknown names are usage errors
  std::ostringstream out3, err3;
  CHECK(cmd_validate({"no_such_check=1"}, out3, err3) == 1);
  CHECK(cmd_validate({"dark_ratio"}, out3, err3) == 1);
}

#ifdef OAMSENSE_CLI_PATH
TEST_CASE("CLI accepts exactly the noise flags of the chosen variant") {
  CHECK(run_cli("signal --variant ideal --r 1 --ell 1 --phi-steps 5") == 0);
  CHECK(run_cli("signal --variant ideal --loss 0.1 --phi-steps 5") == 1);
  CHECK(run_cli("signal --variant loss --dark 0.1 --phi-steps 5") == 1);
  CHECK(run_cli("signal --variant dark --dark 0.1 --phi-steps 5") == 0);
  CHECK(run_cli("signal --variant thermal --nth 0.1 --transmissivity 0.99 "
                "--phi-steps 5") == 0);
  CHECK(run_cli("signal --variant loss --loss 2.0 --phi-steps 5") == 1);
  CHECK(run_cli("signal --r 1 --nbar 2 --phi-steps 5") == 1);
  CHECK(run_cli("sensitivity --variant loss --loss 0.01 --phi-steps 7") == 0);
  CHECK(run_cli("optimal --variant ideal --r-steps 3") == 0);
  CHECK(run_cli("figure bogus") == 1);
  CHECK(run_cli("") == 1);
}

TEST_CASE("CLI --degrees converts the phi grid at the boundary") {
  const std::string path_deg = "cli_deg.csv";
  const std::string path_rad = "cli_rad.csv";
  REQUIRE(run_cli("signal --r 1 --ell 1 --phi-min 0 --phi-max 90 "
                  "--phi-steps 3 --degrees --out " + path_deg) == 0);
  REQUIRE(run_cli("signal --r 1 --ell 1 --phi-min 0 --phi-max 1.5707963267948966 "
                  "--phi-steps 3 --out " + path_rad) == 0);
  std::ifstream a(path_deg), b(path_rad);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  std::remove(path_deg.c_str());
  std::remove(path_rad.c_str());
}
#endif
