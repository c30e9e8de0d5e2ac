// bc-cli: JSON front end for the bicomplex numerics library.
//
// Single-shot:  bc-cli <command> '<payload json>' [flags]
// Batch:        bc-cli --batch   (one {"command":...,"payload":...} per line)
//
// stdout carries one JSON response per request; stderr carries human
// diagnostics. Exit codes: 0 ok, 1 malformed input, 2 domain error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "bcnum/json_io.hpp"

namespace {

using bcn::io::json;
using namespace bcn;

constexpr const char* kVersion = "1";

struct cli_options {
  double tol = tol::psd_floor_rel;
  size_t truncation = 64;
  size_t seed = 0;
};

json dump_hermitian_flags(const hermitian_flags& f) {
  return json{{"dagger", f.dagger}, {"bar", f.bar}, {"star", f.star}};
}

json dump_norms(const vector_norms<double>& n) {
  return json{{"euclidean", n.euclidean},
              {"d_norm", io::dump_hyperbolic(n.d_norm)}};
}

json sorted_spectrum(const Eigen::VectorXcd& v) {
  std::vector<std::complex<double>> s(v.data(), v.data() + v.size());
  std::sort(s.begin(), s.end(), [](const auto& x, const auto& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  json out = json::array();
  for (const auto& z : s) out.push_back(io::dump_complex(z));
  return out;
}

json cmd_decompose(const json& payload) {
  const auto z = io::parse_bicomplex(payload);
  if (payload.contains("z1") || payload.contains("z2"))
    return io::dump_bicomplex_idempotent(z);
  return io::dump_bicomplex(z);
}

json cmd_conj(const json& payload) {
  const auto z = io::parse_bicomplex(payload);
  return json{{"bar", io::dump_bicomplex(conj_bar(z))},
              {"dagger", io::dump_bicomplex(conj_dagger(z))},
              {"star", io::dump_bicomplex(conj_star(z))}};
}

json cmd_moduli(const json& payload) {
  const auto z = io::parse_bicomplex(payload);
  return json{{"mod_i2", io::dump_complex(modulus_i2(z))},
              {"mod_j2", io::dump_bicomplex(modulus_j2(z))},
              {"mod_k2", io::dump_hyperbolic(modulus_k2(z))},
              {"euclidean", euclidean_norm(z)},
              {"hyperbolic_norm", io::dump_hyperbolic(hyperbolic_norm(z))}};
}

json cmd_order(const json& payload) {
  json out;
  if (payload.contains("lhs") && payload.contains("rhs")) {
    const auto h1 = io::parse_hyperbolic(payload.at("lhs"));
    const auto h2 = io::parse_hyperbolic(payload.at("rhs"));
    const char* name = "incomparable";
    switch (order_compare(h1, h2)) {
      case order_relation::less: name = "less"; break;
      case order_relation::greater: name = "greater"; break;
      case order_relation::equal: name = "equal"; break;
      case order_relation::incomparable: name = "incomparable"; break;
    }
    out["relation"] = name;
  }
  if (payload.contains("h")) {
    const auto h = io::parse_hyperbolic(payload.at("h"));
    out["in_cone"] = dplus_contains(h);
    out["idempotent"] = json::array({h.idem1(), h.idem2()});
  }
  if (payload.contains("set")) {
    std::vector<hyperbolicd> set;
    for (const auto& e : payload.at("set"))
      set.push_back(io::parse_hyperbolic(e));
    out["sup"] = io::dump_hyperbolic(sup_d(set));
  }
  if (out.empty())
    throw io::parse_error("order: expected lhs/rhs, h, or set");
  return out;
}

json cmd_matinfo(const json& payload) {
  const auto m = io::parse_matrix(payload);
  json out{{"rows", m.rows()}, {"cols", m.cols()}};
  if (m.is_square()) {
    const auto d = det(m);
    out["det"] = io::dump_bicomplex(d);
    out["invertible"] = is_invertible(d);
    out["hermitian"] = dump_hermitian_flags(classify_hermitian(m));
  }
  return out;
}

json cmd_positivity(const json& payload, const cli_options& opt) {
  const auto m = payload.contains("matrix")
                     ? io::parse_matrix(payload.at("matrix"))
                     : io::parse_matrix(payload);
  const double tol = payload.contains("tol") ? payload.at("tol").get<double>()
                                             : opt.tol;
  const auto rep = is_hyperbolic_positive(m, tol);
  json out{
      {"is_positive", rep.is_positive()},
      {"is_star_hermitian", rep.is_star_hermitian},
      {"component_psd",
       json::array({rep.component_psd.first, rep.component_psd.second})},
      {"min_component_eigenvalues",
       json::array({rep.min_component_eigenvalues.first,
                    rep.min_component_eigenvalues.second})},
      {"quadratic_form_in_cone", rep.quadratic_form_in_cone},
      {"cartesian_conditions", rep.cartesian_conditions}};
  if (rep.certificate) out["certificate"] = io::dump_matrix(*rep.certificate);
  return out;
}

json cmd_eig(const json& payload) {
  const auto m = io::parse_matrix(payload);
  const auto [s1, s2] = component_spectra(m);
  return json{{"spectrum_1", sorted_spectrum(s1)},
              {"spectrum_2", sorted_spectrum(s2)}};
}

json cmd_inner(const json& payload, const cli_options& opt) {
  const auto x = io::parse_vector(payload.at("lhs"));
  const auto y = io::parse_vector(payload.at("rhs"));
  bicomplexd value;
  vector_norms<double> nx{}, ny{};
  if (payload.contains("gram")) {
    const auto a = io::parse_matrix(payload.at("gram"));
    value = inner_weighted(x, y, a, opt.tol);
    nx = norms(x, a, opt.tol);
    ny = norms(y, a, opt.tol);
  } else {
    value = inner_canonical(x, y);
    nx = norms(x);
    ny = norms(y);
  }
  return json{{"value", io::dump_bicomplex(value)},
              {"lhs_norms", dump_norms(nx)},
              {"rhs_norms", dump_norms(ny)}};
}

json cmd_riesz(const json& payload) {
  const auto coeffs = io::parse_vector(
      payload.contains("coeffs") ? payload.at("coeffs") : payload);
  const auto y = riesz_representer(LinearFunctional<double>{coeffs});
  return json{{"representer", io::dump_vector(y)}};
}

json cmd_polarize(const json& payload) {
  const SesquilinearForm<double> b{io::parse_matrix(payload.at("gram"))};
  const auto x = io::parse_vector(payload.at("x"));
  const auto y = io::parse_vector(payload.at("y"));
  const auto direct = b(x, y);
  const auto ids = polarization_eval(b, x, y);
  double dev = 0.0;
  json arr = json::array();
  for (const auto& v : ids) {
    arr.push_back(io::dump_bicomplex(v));
    dev = std::max(dev, euclidean_norm(v - direct));
  }
  return json{{"direct", io::dump_bicomplex(direct)},
              {"identities", arr},
              {"max_deviation", dev}};
}

json cmd_holo_eval(const json& payload) {
  const auto f = io::parse_coefficient_function(payload.at("f"));
  const auto z = io::parse_bicomplex(payload.at("at"));
  const auto r = cr_residual(f, z);
  return json{{"value", io::dump_bicomplex(f.eval(z))},
              {"derivative", io::dump_bicomplex(f.derivative().eval(z))},
              {"cr_residuals",
               json{{"dagger", euclidean_norm(r.d_dagger)},
                    {"bar", euclidean_norm(r.d_bar)},
                    {"star", euclidean_norm(r.d_star)}}}};
}

json cmd_hardy(const json& payload) {
  const auto f = io::parse_coefficient_function(payload.at("f"));
  json out;
  if (payload.contains("g")) {
    const auto g = io::parse_coefficient_function(payload.at("g"));
    out["inner"] = io::dump_bicomplex(hardy_inner(f, g));
  } else {
    out["inner"] = io::dump_bicomplex(hardy_inner(f, f));
  }
  out["dnorm"] = io::dump_hyperbolic(hardy_dnorm(f));
  if (payload.contains("a")) {
    const DiskPointd a(io::parse_bicomplex(payload.at("a")));
    out["reproduced"] = io::dump_bicomplex(reproduce_check(f, a));
    out["value_at_a"] = io::dump_bicomplex(f.eval(a.value()));
  }
  return out;
}

json cmd_schur_run(const json& payload) {
  const auto s = io::parse_schur_function(
      payload.contains("s") ? payload.at("s") : payload);
  const size_t max_steps = payload.contains("max_steps")
                               ? payload.at("max_steps").get<size_t>()
                               : 16;
  const auto run = schur_algorithm(s, max_steps);
  auto dump_rho = [](const std::vector<std::complex<double>>& rho) {
    json arr = json::array();
    for (const auto& r : rho) arr.push_back(io::dump_complex(r));
    return arr;
  };
  return json{{"rho_1", dump_rho(run.rho1)},
              {"rho_2", dump_rho(run.rho2)},
              {"terminated_1", run.terminated1},
              {"terminated_2", run.terminated2}};
}

json cmd_blaschke(const json& payload, const cli_options& opt) {
  const auto a = io::parse_bicomplex(payload.at("a"));
  const auto f = blaschke(a);
  json out{{"realization", io::dump_realization(f.realization)},
           {"unitary", is_star_unitary(f.realization.block_matrix())}};
  if (payload.contains("at")) {
    const auto z = io::parse_bicomplex(payload.at("at"));
    const auto v = f.s.eval(z);
    out["value"] = io::dump_bicomplex(v);
    out["hyperbolic_modulus"] = io::dump_hyperbolic(hyperbolic_norm(v));
  }
  if (payload.value("series", false))
    out["series"] =
        io::dump_coefficient_function(f.s.series(opt.truncation));
  return out;
}

json cmd_realize(const json& payload) {
  const auto r = io::parse_realization(payload.at("realization"));
  json out;
  out["state_dim"] = r.state_dim();
  out["unitary"] = is_star_unitary(r.block_matrix());
  if (payload.contains("at")) {
    out["value"] = io::dump_matrix(
        realization_eval(r, io::parse_bicomplex(payload.at("at"))));
  }
  if (payload.contains("points")) {
    json vals = json::array();
    for (const auto& p : payload.at("points"))
      vals.push_back(
          io::dump_matrix(realization_eval(r, io::parse_bicomplex(p))));
    out["values"] = vals;
  }
  return out;
}

json cmd_kernel_check(const json& payload, const cli_options& opt) {
  std::vector<DiskPointd> points;
  if (payload.contains("points")) {
    for (const auto& p : payload.at("points"))
      points.emplace_back(io::parse_bicomplex(p));
  } else {
    const size_t count =
        payload.contains("count") ? payload.at("count").get<size_t>() : 8;
    points = default_disk_samples<double>(count, 0.8, opt.seed);
  }
  const std::string kind = payload.contains("kernel")
                               ? payload.at("kernel").get<std::string>()
                               : "szego";
  kernel_report<double> rep;
  if (kind == "szego") {
    rep = kernel_positivity_check<double>(
        [](const bicomplexd& z, const bicomplexd& w) {
          return szego_kernel_value(z, w);
        },
        points, opt.tol);
  } else if (kind == "ks") {
    const auto s = io::parse_schur_function(payload.at("s"));
    rep = kernel_positivity_check<double>(
        [&](const bicomplexd& z, const bicomplexd& w) {
          return schur_kernel_ks(s, z, w);
        },
        points, opt.tol);
  } else {
    throw io::parse_error("kernel-check: unknown kernel '" + kind + "'");
  }
  return json{{"kernel", kind},
              {"sample_size", points.size()},
              {"star_hermitian", rep.star_hermitian},
              {"min_component_eigenvalues",
               json::array({rep.min_component_eigenvalues.first,
                            rep.min_component_eigenvalues.second})},
              {"positive", rep.positive()}};
}

json run_command(const std::string& cmd, const json& payload,
                 const cli_options& opt) {
  if (cmd == "decompose") return cmd_decompose(payload);
  if (cmd == "conj") return cmd_conj(payload);
  if (cmd == "moduli") return cmd_moduli(payload);
  if (cmd == "order") return cmd_order(payload);
  if (cmd == "matinfo") return cmd_matinfo(payload);
  if (cmd == "positivity") return cmd_positivity(payload, opt);
  if (cmd == "eig") return cmd_eig(payload);
  if (cmd == "inner") return cmd_inner(payload, opt);
  if (cmd == "riesz") return cmd_riesz(payload);
  if (cmd == "polarize") return cmd_polarize(payload);
  if (cmd == "holo-eval") return cmd_holo_eval(payload);
  if (cmd == "hardy") return cmd_hardy(payload);
  if (cmd == "schur-run") return cmd_schur_run(payload);
  if (cmd == "blaschke") return cmd_blaschke(payload, opt);
  if (cmd == "realize") return cmd_realize(payload);
  if (cmd == "kernel-check") return cmd_kernel_check(payload, opt);
  throw io::parse_error("unknown command '" + cmd + "'");
}

json error_envelope(const std::string& cmd, const std::string& code,
                    const std::string& message) {
  return json{{"command", cmd},
              {"version", kVersion},
              {"error", json{{"code", code}, {"message", message}}}};
}

// 0 ok, 1 malformed, 2 domain error
int respond(const std::string& cmd, const json& payload,
            const cli_options& opt, std::ostream& out) {
  try {
    const json result = run_command(cmd, payload, opt);
    out << json{{"command", cmd}, {"version", kVersion}, {"result", result}}
               .dump()
        << "\n";
    return 0;
  } catch (const io::parse_error& e) {
    out << error_envelope(cmd, e.code(), e.what()).dump() << "\n";
    std::cerr << "bc-cli: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    out << error_envelope(cmd, "ParseError", e.what()).dump() << "\n";
    std::cerr << "bc-cli: " << e.what() << "\n";
    return 1;
  } catch (const error& e) {
    out << error_envelope(cmd, e.code(), e.what()).dump() << "\n";
    std::cerr << "bc-cli: " << e.what() << "\n";
    return 2;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"bicomplex numerics toolkit"};
  app.require_subcommand(0, 1);

  cli_options opt;
  if (const char* env_tol = std::getenv("BC_TOL")) opt.tol = std::atof(env_tol);
  bool batch = false;
  app.add_flag("--batch", batch,
               "read {\"command\",\"payload\"} lines from stdin");
  app.add_option("--tol", opt.tol, "positivity / comparison tolerance");
  app.add_option("--truncation", opt.truncation, "default series truncation");
  app.add_option("--seed", opt.seed, "seed for generated sample points");

  const std::vector<std::string> names = {
      "decompose",  "conj",  "moduli",    "order",    "matinfo",
      "positivity", "eig",   "inner",     "riesz",    "polarize",
      "holo-eval",  "hardy", "schur-run", "blaschke", "realize",
      "kernel-check"};
  struct sub_state {
    CLI::App* sub = nullptr;
    std::string payload;
  };
  std::map<std::string, sub_state> subs;
  std::string blaschke_a, blaschke_at;
  for (const auto& name : names) {
    auto& st = subs[name];
    st.sub = app.add_subcommand(name);
    st.sub->fallthrough(); // global flags may follow the subcommand
    st.sub->add_option("payload", st.payload, "request payload (JSON)");
    if (name == "blaschke") {
      st.sub->add_option("--a", blaschke_a, "Blaschke zero (bicomplex JSON)");
      st.sub->add_option("--at", blaschke_at,
                         "evaluation point (bicomplex JSON)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1; // usage errors are malformed input
  }

  if (batch) {
    std::string line;
    int worst = 0;
    while (std::getline(std::cin, line)) {
      if (line.empty()) continue;
      json req;
      try {
        req = json::parse(line);
      } catch (const json::exception& e) {
        std::cout << error_envelope("", "ParseError", e.what()).dump() << "\n";
        worst = std::max(worst, 1);
        continue;
      }
      const std::string cmd = req.value("command", "");
      const json payload =
          req.contains("payload") ? req.at("payload") : json::object();
      respond(cmd, payload, opt, std::cout);
    }
    return worst;
  }

  for (const auto& [name, st] : subs) {
    if (!st.sub->parsed()) continue;
    json payload = json::object();
    try {
      if (!st.payload.empty()) payload = json::parse(st.payload);
      if (name == "blaschke") {
        if (!blaschke_a.empty()) payload["a"] = json::parse(blaschke_a);
        if (!blaschke_at.empty()) payload["at"] = json::parse(blaschke_at);
      }
    } catch (const json::exception& e) {
      std::cout << error_envelope(name, "ParseError", e.what()).dump() << "\n";
      std::cerr << "bc-cli: " << e.what() << "\n";
      return 1;
    }
    return respond(name, payload, opt, std::cout);
  }

  std::cerr << app.help() << "\n";
  return 1;
}
