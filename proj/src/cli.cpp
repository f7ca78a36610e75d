#include "realkirwan/cli.hpp"

#include "realkirwan/errors.hpp"
#include "realkirwan/gkm_module.hpp"
#include "realkirwan/io.hpp"
#include "realkirwan/kirwan.hpp"
#include "realkirwan/morse.hpp"
#include "realkirwan/toric.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>

namespace realkirwan::cli {

namespace {

using io::json;

struct RunConfig {
  std::string path;
  std::string mu;
  std::string xi;
  std::optional<unsigned> up_to;
  bool assert_free = false;
  bool cross_check = false;
  bool json_output = false;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TwoTorsion: return kTorsion;
    case ErrorKind::ParseError:
    case ErrorKind::InvalidGraph: return kParse;
    case ErrorKind::IrregularValue: return kIrregular;
    case ErrorKind::NotDelzant: return kNotDelzant;
    case ErrorKind::ModelInconsistency:
    case ErrorKind::OracleMismatch: return kInconsistent;
    default: return kFailure;
  }
}

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

MomentGraph load_graph(const std::string& path) { return io::graph_from_json(io::read_json_file(path)); }

void print_header(std::ostream& out, const MomentGraph& g, const ValidationReport& v) {
  out << "graph: n=" << g.n() << " q_dim=" << g.q_dim() << " vertices=" << g.num_vertices()
      << " edges=" << g.edges().size() << " closed=" << (g.is_closed() ? "yes" : "no") << "\n";
  out << "status: " << to_string(v.status) << "\n";
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const auto g = load_graph(cfg.path);
  const auto report = validate(g);
  if (cfg.json_output) {
    print_json(out, io::validation_to_json(g, report));
  } else {
    print_header(out, g, report);
    for (const auto& m : report.messages) out << "  " << m << "\n";
  }
  return report.status == ValidationStatus::Rejected ? kTorsion : kOk;
}

int cmd_cohomology(const RunConfig& cfg, std::ostream& out) {
  const auto g = load_graph(cfg.path);
  const auto v = require_accepted(g);
  const unsigned up_to = cfg.up_to.value_or(g.q_dim() + static_cast<unsigned>(g.n()) + 2);
  const auto perf = perfection_check(g, up_to);
  std::optional<DualGradingReport> dual;
  if (v.status == ValidationStatus::Mod2GKM) dual = dual_grading_report(g, up_to);

  if (cfg.json_output) {
    json j;
    j["status"] = std::string(to_string(v.status));
    j["up_to"] = up_to;
    j["real_dims"] = perf.module_dims;
    if (dual) {
      j["complex_dims"] = dual->complex_dims;
      j["degree_halving"] = dual->consistent;
    } else {
      j["complex_dims"] = nullptr;
      j["degree_halving"] = "unavailable: not mod-2 GKM";
    }
    j["formality"] = {{"ok", perf.ok},
                      {"xi", io::json(format_rational_list(perf.xi))},
                      {"morse_dims", perf.morse_dims},
                      {"indices", io::index_table_to_json(g, perf.indices)}};
    print_json(out, j);
  } else {
    print_header(out, g, v);
    out << std::setw(6) << "real" << std::setw(10) << "dim";
    if (dual) out << std::setw(10) << "complex" << std::setw(10) << "dim";
    out << "\n";
    for (unsigned d = 0; d <= up_to; ++d) {
      out << std::setw(6) << d << std::setw(10) << perf.module_dims[d];
      if (dual) out << std::setw(10) << 2 * d << std::setw(10) << dual->complex_dims[2 * d];
      out << "\n";
    }
    if (dual) {
      out << "odd complex degrees: " << (dual->consistent ? "all zero" : "NONZERO") << "\n";
    } else {
      out << "degree halving unavailable: graph is not mod-2 GKM\n";
    }
    out << "formality: " << (perf.ok ? "ok" : "FAILED") << " (xi = " << format_rational_list(perf.xi)
        << ", morse series " << join(perf.morse_dims) << ")\n";
  }
  return perf.ok ? kOk : kInconsistent;
}

int cmd_morse(const RunConfig& cfg, std::ostream& out) {
  const auto g = load_graph(cfg.path);
  const auto v = require_accepted(g);
  const Direction xi = cfg.xi.empty() ? generic_direction(g) : parse_rational_list(cfg.xi);
  const auto table = morse_indices(g, xi);
  const unsigned up_to = cfg.up_to.value_or(g.q_dim() + static_cast<unsigned>(g.n()) + 2);
  const auto perf = perfection_check(g, up_to, xi);
  if (cfg.json_output) {
    print_json(out, {{"xi", format_rational_list(xi)},
                     {"indices", io::index_table_to_json(g, table)},
                     {"perfection", perf.ok}});
  } else {
    print_header(out, g, v);
    out << "xi = (" << format_rational_list(xi) << ")\n";
    for (std::size_t p = 0; p < g.num_vertices(); ++p) {
      out << "  " << std::setw(10) << std::left << g.vertices()[p].id << std::right << " " << table.lambda[p] << "\n";
    }
    out << "perfection through degree " << up_to << ": " << (perf.ok ? "ok" : "FAILED") << "\n";
  }
  return perf.ok ? kOk : kInconsistent;
}

int cmd_reduce(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.assert_free) {
    err << "error: reduce requires --assert-free: the free action of T on the level set cannot be checked from the "
           "graph and must be asserted explicitly\n";
    return kMissingHypothesis;
  }
  const auto g = load_graph(cfg.path);
  const RVec mu = parse_rational_list(cfg.mu);
  if (mu.size() != g.n_phi()) throw Error(ErrorKind::ParseError, "--mu has " + std::to_string(mu.size()) +
                                                                     " entries, graph needs " + std::to_string(g.n_phi()));
  ReduceOptions options;
  options.up_to = cfg.up_to;
  options.assert_free = true;
  const auto r = reduce(g, mu, options);
  if (cfg.json_output) {
    print_json(out, io::report_to_json(g, r));
    return kOk;
  }
  out << "mu = (" << format_rational_list(r.mu) << "), quotient top degree " << r.top_degree << ", "
      << r.chambers.size() << " chambers\n";
  out << std::setw(6) << "degree" << std::setw(10) << "module" << std::setw(10) << "kernel" << std::setw(10)
      << "quotient" << "\n";
  for (unsigned d = 0; d <= r.up_to; ++d) {
    out << std::setw(6) << d << std::setw(10) << r.module_dims[d] << std::setw(10) << r.kernel_dims[d]
        << std::setw(10) << r.quotient_dims[d] << "\n";
  }
  out << "betti: (" << join(r.betti) << ")\n";
  out << "vanishing above " << r.top_degree << ": " << (r.vanishing_ok ? "ok" : "FAILED") << "\n";
  out << "duality: " << (r.duality_checked ? (r.duality_ok ? "ok" : "FAILED") : "not checked") << "\n";
  out << "hypotheses: assert_free=yes, regularity=" << r.regularity << ", validation=" << to_string(r.validation)
      << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return kOk;
}

int cmd_toric(const RunConfig& cfg, std::ostream& out) {
  const auto p = io::polytope_from_json(io::read_json_file(cfg.path));
  if (cfg.cross_check) {
    const auto c = cross_check(p);
    if (cfg.json_output) {
      print_json(out, io::cross_check_to_json(c));
    } else {
      out << "h-vector: (" << join(c.danilov) << ")\n";
      out << "morse counts: (" << join(c.morse_counts) << ")\n";
      out << "reversed: (" << join(c.reversed) << ")\n";
      out << "vertices: " << c.vertex_count << "\n";
      out << "equivariant dims: (" << join(c.gkm_dims) << "), perfection ok\n";
      out << "degree halving: ok\n";
      out << "agreement: ok\n";
    }
    return kOk;
  }
  const auto h = danilov_dims(p);
  if (cfg.json_output) {
    print_json(out, {{"h_vector", h}});
  } else {
    out << "h-vector: (" << join(h) << ")\n";
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mod-2 equivariant cohomology of real loci and their symplectic reductions"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* validate_cmd = app.add_subcommand("validate", "check torsion and the mod-2 GKM condition");
  auto* cohomology_cmd = app.add_subcommand("cohomology", "graded dimensions of the equivariant module");
  auto* morse_cmd = app.add_subcommand("morse", "Morse indices and the perfection check");
  auto* reduce_cmd = app.add_subcommand("reduce", "kernel of the real Kirwan map and Betti numbers of the reduction");
  auto* toric_cmd = app.add_subcommand("toric", "Danilov ring of a Delzant polytope");
  for (auto* sub : {validate_cmd, cohomology_cmd, morse_cmd, reduce_cmd, toric_cmd}) {
    sub->add_option("path", cfg.path, "input JSON file")->required();
    sub->add_flag("--json", cfg.json_output, "emit JSON");
  }
  for (auto* sub : {cohomology_cmd, morse_cmd, reduce_cmd}) sub->add_option("--up-to", cfg.up_to, "highest degree");
  morse_cmd->add_option("--xi", cfg.xi, "direction, e.g. \"1,3\"");
  reduce_cmd->add_option("--mu", cfg.mu, "regular value, e.g. \"1/3,1/3\"")->required();
  reduce_cmd->add_flag("--assert-free", cfg.assert_free, "assert that T acts freely on the level set");
  toric_cmd->add_flag("--cross-check", cfg.cross_check, "compare against the moment graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFailure;
  }

  try {
    if (*validate_cmd) return cmd_validate(cfg, out);
    if (*cohomology_cmd) return cmd_cohomology(cfg, out);
    if (*morse_cmd) return cmd_morse(cfg, out);
    if (*reduce_cmd) return cmd_reduce(cfg, out, err);
    if (*toric_cmd) return cmd_toric(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace realkirwan::cli
