#include "zdi/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "zdi/analytic_pn.hpp"
#include "zdi/indices.hpp"
#include "zdi/report_io.hpp"
#include "zdi/ring_core.hpp"
#include "zdi/zdg_graph.hpp"

namespace zdi {

namespace {

void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  std::string body = text;
  if (!body.empty() && body.back() != '\n') body += '\n';
  if (path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) Fail(ErrorKind::kIo, "cannot open '" + path + "' for writing");
  file << body;
  file.close();
  if (!file) Fail(ErrorKind::kIo, "failed writing '" + path + "'");
}

struct GraphArgs {
  std::uint64_t m = 0;
  std::string format = "edges";
  bool quotient = false;
  std::string out_path;
  std::uint64_t vertex_cap = 0;
};

struct IndicesArgs {
  std::uint64_t m = 0;
  std::string index = "all";
  std::string method = "explicit";
  bool factored = false;
  std::uint64_t vertex_cap = 0;
};

struct VerifyArgs {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::vector<std::string> theorems;
  std::string format = "json";
  std::uint64_t vertex_cap = 0;
};

struct SweepArgs {
  std::uint64_t p_max = 0;
  unsigned n_max = 0;
  std::string out_path;
  std::string format = "csv";
};

BuildOptions Options(std::uint64_t cap_flag) {
  BuildOptions opts;
  opts.vertex_cap = cap_flag ? cap_flag : VertexCapFromEnv();
  return opts;
}

int RunGraph(const GraphArgs& a, std::ostream& out) {
  const auto format = ParseExportFormat(a.format);
  const auto m = Modulus::Factorize(a.m);
  if (a.quotient) {
    Emit(Export(QuotientGraph::Build(m), format), a.out_path, out);
  } else {
    Emit(Export(ZeroDivisorGraph::Build(m, Options(a.vertex_cap)), format), a.out_path, out);
  }
  return kExitOk;
}

int RunIndices(const IndicesArgs& a, std::ostream& out) {
  std::vector<IndexKind> kinds;
  if (a.index == "all") {
    kinds = {IndexKind::kEci, IndexKind::kAeci, IndexKind::kEdiz};
  } else {
    kinds = {ParseIndexKind(a.index)};
  }
  const Method method = ParseMethod(a.method);
  if (method == Method::kPaper) Fail(ErrorKind::kInvalidArgument, "use 'verify' for printed-formula values");
  const auto m = Modulus::Factorize(a.m);

  std::optional<PrimePower> pp;
  if (method == Method::kClass) {
    pp = m.as_prime_power();
    if (!pp || pp->exponent < 2) {
      Fail(ErrorKind::kNotPrimePower, "--method class needs m = p^n with n >= 2; " + std::to_string(a.m) +
                                          " is not of that form");
    }
  }

  std::optional<ZeroDivisorGraph> graph;
  std::vector<std::uint32_t> ecc;
  std::optional<QuotientGraph> quotient;
  if (method == Method::kExplicit) {
    graph = ZeroDivisorGraph::Build(m, Options(a.vertex_cap));
    ecc = Eccentricities(graph->graph());
  } else if (method == Method::kQuotient) {
    quotient = QuotientGraph::Build(m);
  }

  auto compute = [&](IndexKind kind) -> std::string {
    switch (kind) {
      case IndexKind::kEci:
        if (graph) return ToString(Eci(graph->graph(), ecc));
        if (quotient) return ToString(Eci(*quotient));
        return ToString(EciClass(pp->prime, pp->exponent));
      case IndexKind::kAeci: {
        // Explicit graphs check each vertex's own product against the threshold.
        if (graph && !a.factored) return Aeci(graph->graph(), ecc).ToString();
        FactoredSum v = graph      ? AeciFactored(graph->graph(), ecc)
                        : quotient ? AeciFactored(*quotient)
                                   : AeciClassFactored(pp->prime, pp->exponent);
        return a.factored ? v.ToString() : v.Expand().ToString();
      }
      case IndexKind::kEdiz:
        if (graph) return Ediz(graph->graph(), ecc).ToString();
        if (quotient) return Ediz(*quotient).ToString();
        return EdizClass(pp->prime, pp->exponent).ToString();
    }
    return "";
  };

  for (IndexKind kind : kinds) {
    std::string value = compute(kind);
    if (kinds.size() == 1) {
      out << value << "\n";
    } else {
      out << ToString(kind) << ' ' << value << "\n";
    }
    out.flush();
  }
  return kExitOk;
}

int RunVerify(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions opts;
  opts.build = Options(a.vertex_cap);
  if (!a.theorems.empty()) {
    opts.theorems.clear();
    for (const auto& t : a.theorems) {
      if (t == "all") {
        opts.theorems.insert(AllTheorems().begin(), AllTheorems().end());
      } else {
        opts.theorems.insert(t);
      }
    }
  }
  if (a.format != "json" && a.format != "md") Fail(ErrorKind::kInvalidArgument, "--format must be json or md");
  auto report = Verify(a.p, a.n, opts);
  Emit(a.format == "json" ? ReportToJson(report) : ReportToMarkdown(report), "", out);
  return report.RequestedMismatch() ? kExitPaperMismatch : kExitOk;
}

int RunSweep(const SweepArgs& a, std::ostream& out) {
  if (a.format != "csv" && a.format != "json") Fail(ErrorKind::kInvalidArgument, "--format must be csv or json");
  auto rows = Sweep(a.p_max, a.n_max);
  Emit(a.format == "csv" ? SweepToCsv(rows) : SweepToJson(rows), a.out_path, out);
  return kExitOk;
}

}  // namespace

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kOutOfDomain: return kExitInvalidArguments;
    case ErrorKind::kCapExceeded: return kExitCapExceeded;
    case ErrorKind::kUndefinedIndex:
    case ErrorKind::kDegenerateGraph: return kExitUndefinedIndex;
    case ErrorKind::kNotPrimePower: return kExitNotPrimePower;
    case ErrorKind::kExpansionThreshold: return kExitExpansionThreshold;
    case ErrorKind::kIo: return kExitUnwritable;
    case ErrorKind::kInternal: return kExitInternal;
  }
  return kExitInternal;
}

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-divisor graphs of Z_m and their eccentricity-based indices", "zdi"};
  app.require_subcommand(1);

  GraphArgs graph_args;
  auto* graph = app.add_subcommand("graph", "Build and export the zero-divisor graph of Z_m");
  graph->add_option("m", graph_args.m, "Modulus (>= 2)")->required();
  graph->add_option("--format", graph_args.format, "dot | edges | json")->capture_default_str();
  graph->add_flag("--quotient", graph_args.quotient, "Export the divisor-class quotient instead");
  graph->add_option("--out", graph_args.out_path, "Output file (default: stdout)");
  graph->add_option("--vertex-cap", graph_args.vertex_cap, "Override the vertex cap (default: ZDI_VERTEX_CAP or 20000)");

  IndicesArgs indices_args;
  auto* indices = app.add_subcommand("indices", "Compute ECI, augmented ECI and Ediz ECI exactly");
  indices->add_option("m", indices_args.m, "Modulus (>= 2)")->required();
  indices->add_option("--index", indices_args.index, "eci | aeci | ediz | all")->capture_default_str();
  indices->add_option("--method", indices_args.method, "explicit | quotient | class")->capture_default_str();
  indices->add_flag("--factored", indices_args.factored, "Print the augmented index as a sum of power products");
  indices->add_option("--vertex-cap", indices_args.vertex_cap, "Override the vertex cap");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Compare all methods and the printed formulas for m = p^n");
  verify->add_option("--p", verify_args.p, "Prime p")->required();
  verify->add_option("--n", verify_args.n, "Exponent n >= 2")->required();
  verify->add_option("--theorems", verify_args.theorems, "Theorems to adjudicate (3.1,3.2,4.1,4.2,5.1,5.2,all)")
      ->delimiter(',');
  verify->add_option("--format", verify_args.format, "json | md")->capture_default_str();
  verify->add_option("--vertex-cap", verify_args.vertex_cap, "Override the vertex cap");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Class values against printed formulas over a (p, n) grid");
  sweep->add_option("--p-max", sweep_args.p_max, "Largest prime")->required();
  sweep->add_option("--n-max", sweep_args.n_max, "Largest exponent")->required();
  sweep->add_option("--out", sweep_args.out_path, "Output file (default: stdout)");
  sweep->add_option("--format", sweep_args.format, "csv | json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidArguments;
  }

  try {
    if (*graph) return RunGraph(graph_args, out);
    if (*indices) return RunIndices(indices_args, out);
    if (*verify) return RunVerify(verify_args, out);
    if (*sweep) return RunSweep(sweep_args, out);
  } catch (const Error& e) {
    err << "zdi: " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    err << "zdi: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInvalidArguments;
}

}  // namespace zdi
