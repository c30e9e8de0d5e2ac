// CLI behaviour checks: schemas, exit codes, batch mode, decompose/join
// roundtrip. Usage: test_cli <path-to-bc-cli>

#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

using json = nlohmann::json;

struct proc_result {
  int status = -1;
  std::string out;
};

proc_result run_process(const std::string& cmd) {
  proc_result r;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cout << "[FAIL] " << what << "\n";
  } else {
    std::cout << "[ ok ] " << what << "\n";
  }
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-bc-cli>\n";
    return 1;
  }
  const std::string cli = argv[1];

  // documented example: decompose Z = j
  {
    const auto r = run_process(cli + " decompose '{\"z1\":[0,0],\"z2\":[1,0]}'");
    const json env = json::parse(r.out);
    expect(r.status == 0 && env.at("command") == "decompose" &&
               env.at("result").at("b1") == json::array({0.0, -1.0}) &&
               env.at("result").at("b2") == json::array({0.0, 1.0}),
           "decompose j -> (-i, i)");
  }

  // decompose/join roundtrip on fuzzed values, through the process boundary
  {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> dist(-2, 2);
    bool ok = true;
    for (int t = 0; t < 10 && ok; ++t) {
      json z{{"z1", {dist(rng), dist(rng)}}, {"z2", {dist(rng), dist(rng)}}};
      const auto fwd = run_process(cli + " decompose '" + z.dump() + "'");
      const json b = json::parse(fwd.out).at("result");
      const auto back = run_process(cli + " decompose '" + b.dump() + "'");
      const json z2 = json::parse(back.out).at("result");
      for (int c = 0; c < 2; ++c) {
        ok = ok && std::abs(z2.at("z1")[c].get<double>() -
                            z.at("z1")[c].get<double>()) < 1e-12;
        ok = ok && std::abs(z2.at("z2")[c].get<double>() -
                            z.at("z2")[c].get<double>()) < 1e-12;
      }
    }
    expect(ok, "decompose ∘ join is the identity on fuzzed inputs");
  }

  // exit code 1 on malformed input, with an error envelope
  {
    const auto r = run_process(cli + " decompose 'nope'");
    const json env = json::parse(r.out);
    expect(r.status == 1 && env.contains("error") &&
               env.at("error").at("code") == "ParseError",
           "malformed payload -> exit 1 + ParseError");
    const auto r2 = run_process(cli + " no-such-command '{}'");
    expect(r2.status == 1, "unknown command -> exit 1");
  }

  // exit code 2 on a domain error
  {
    const auto r = run_process(
        cli +
        " inner '{\"lhs\":{\"entries\":[{\"z1\":[1,0],\"z2\":[0,0]}]},"
        "\"rhs\":{\"entries\":[{\"z1\":[1,0],\"z2\":[0,0]}]},"
        "\"gram\":{\"rows\":1,\"cols\":1,\"entries\":[{\"z1\":[-1,0],"
        "\"z2\":[0,0]}]}}'");
    const json env = json::parse(r.out);
    expect(r.status == 2 && env.at("error").at("code") == "NotPositive",
           "non-positive gram -> exit 2 + NotPositive");

    const auto r2 = run_process(
        cli + " blaschke '{\"a\":{\"b1\":[1,0],\"b2\":[0,0]}}'");
    expect(r2.status == 2 &&
               json::parse(r2.out).at("error").at("code") ==
                   "DegenerateParameter",
           "unit-circle Blaschke zero -> DegenerateParameter");
  }

  // remaining subcommands respond with results
  {
    const auto holo = run_process(
        cli +
        " holo-eval '{\"f\":{\"N\":3,\"coeffs\":[{\"z1\":[0,0],\"z2\":[0,0]},"
        "{\"z1\":[0,0],\"z2\":[0,0]},{\"z1\":[1,0],\"z2\":[0,0]}]},"
        "\"at\":{\"z1\":[1,0],\"z2\":[1,0]}}'");
    const json henv = json::parse(holo.out);
    // Z^2 at 1+j is 2j; derivative 2(1+j)
    expect(holo.status == 0 &&
               henv.at("result").at("value").at("z2")[0].get<double>() == 2.0,
           "holo-eval Z^2 at 1+j = 2j");

    const auto hardy = run_process(
        cli +
        " hardy '{\"f\":{\"N\":2,\"coeffs\":[{\"z1\":[1,0],\"z2\":[0,0]},"
        "{\"z1\":[1,0],\"z2\":[0,0]}]},\"a\":{\"z1\":[0,0],\"z2\":[0,0]}}'");
    const json ha = json::parse(hardy.out);
    expect(hardy.status == 0 &&
               ha.at("result").at("reproduced").at("z1")[0].get<double>() ==
                   1.0,
           "hardy reproduce at a = 0 returns f(0)");

    const auto schur = run_process(
        cli +
        " schur-run '{\"s\":{\"blaschke_zeros_1\":[[0.5,0],[-0.3,0]],"
        "\"blaschke_zeros_2\":[[0.2,0.1]],\"unimodular_1\":[1,0],"
        "\"unimodular_2\":[0,1]},\"max_steps\":8}'");
    const json se = json::parse(schur.out);
    expect(schur.status == 0 && se.at("result").at("rho_1").size() == 3 &&
               se.at("result").at("rho_2").size() == 2 &&
               se.at("result").at("terminated_1") == true,
           "schur-run emits k coefficients then the unimodular stop");

    const auto realize = run_process(
        cli +
        " realize '{\"realization\":{"
        "\"A\":{\"rows\":1,\"cols\":1,\"entries\":[{\"z1\":[0,0],\"z2\":[0,0]}]},"
        "\"B\":{\"rows\":1,\"cols\":1,\"entries\":[{\"z1\":[1,0],\"z2\":[0,0]}]},"
        "\"C\":{\"rows\":1,\"cols\":1,\"entries\":[{\"z1\":[1,0],\"z2\":[0,0]}]},"
        "\"D\":{\"rows\":1,\"cols\":1,\"entries\":[{\"z1\":[0,0],\"z2\":[0,0]}]}},"
        "\"at\":{\"z1\":[0.25,0],\"z2\":[0,0]}}'");
    const json re = json::parse(realize.out);
    expect(realize.status == 0 && re.at("result").at("unitary") == true &&
               re.at("result")
                       .at("value")
                       .at("entries")[0]
                       .at("z1")[0]
                       .get<double>() == 0.25,
           "realize evaluates the transfer function");

    const auto polar = run_process(
        cli +
        " polarize '{\"gram\":{\"rows\":1,\"cols\":1,\"entries\":"
        "[{\"z1\":[1,0],\"z2\":[0,0]}]},"
        "\"x\":{\"entries\":[{\"z1\":[1,0],\"z2\":[2,0]}]},"
        "\"y\":{\"entries\":[{\"z1\":[0,1],\"z2\":[0,-1]}]}}'");
    const json pe = json::parse(polar.out);
    expect(polar.status == 0 &&
               pe.at("result").at("max_deviation").get<double>() < 1e-12,
           "polarize: four identities agree with the direct form");

    const auto ks = run_process(
        cli +
        " kernel-check '{\"kernel\":\"ks\",\"s\":{\"blaschke_zeros_1\":"
        "[[0.4,0]],\"blaschke_zeros_2\":[[0.1,-0.2]]},\"count\":6}'");
    const json ke = json::parse(ks.out);
    expect(ks.status == 0 && ke.at("result").at("positive") == true,
           "kernel-check ks for a Blaschke factor is positive");
  }

  // batch mode: processes every line, reports per-line errors in-band
  {
    const std::string lines =
        "{\"command\":\"moduli\",\"payload\":{\"z1\":[1,0],\"z2\":[0,0]}}\\n"
        "{\"command\":\"conj\",\"payload\":{\"bogus\":true}}\\n"
        "{\"command\":\"order\",\"payload\":{\"h\":{\"a\":1,\"b\":0.5}}}";
    const auto r =
        run_process("printf '" + lines + "' | " + cli + " --batch");
    std::istringstream is(r.out);
    std::string l1, l2, l3;
    std::getline(is, l1);
    std::getline(is, l2);
    std::getline(is, l3);
    expect(json::parse(l1).contains("result") &&
               json::parse(l2).contains("error") &&
               json::parse(l3).at("result").at("in_cone") == true,
           "batch mode continues past per-line errors");
  }

  std::cout << (failures == 0 ? "CLI CHECKS OK" : "CLI CHECKS FAILED") << "\n";
  return failures;
}
