#include "lapgirth/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "lapgirth/enumerate.hpp"
#include "lapgirth/families.hpp"
#include "lapgirth/graph6.hpp"
#include "lapgirth/invariants.hpp"
#include "lapgirth/parallel.hpp"
#include "lapgirth/report.hpp"
#include "lapgirth/scan.hpp"

namespace lapgirth::cli {

namespace {

std::vector<int> parse_int_list(const std::string& text, std::size_t expected_min, std::size_t expected_max) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || pos - start > 6) {
      throw UsageError("expected a non-negative integer at position " + std::to_string(start) + " of '" + text + "'");
    }
    out.push_back(std::stoi(text.substr(start, pos - start)));
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw UsageError("unexpected character '" + std::string(1, text[pos]) + "' at position " +
                       std::to_string(pos) + " of '" + text + "'");
    }
    ++pos;
  }
  if (out.size() < expected_min || out.size() > expected_max) {
    throw UsageError("'" + text + "' has " + std::to_string(out.size()) + " values");
  }
  return out;
}

struct InputOptions {
  std::string g6;
  std::vector<std::string> family;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  auto* g6 = cmd->add_option("--g6", in.g6, "graph in graph6 format");
  auto* fam = cmd->add_option("--family", in.family, "family spec, e.g. 'cycle 5', 'k 3,2', 'ut 4,1', 'gadget G3'")
                  ->expected(2);
  g6->excludes(fam);
}

FamilyGraph resolve_input(const InputOptions& in) {
  if (!in.family.empty()) return parse_family(in.family[0], in.family[1]);
  if (in.g6.empty()) throw UsageError("one of --g6 or --family is required");
  try {
    return {from_graph6(in.g6), std::nullopt};
  } catch (const Graph6Error& e) {
    throw UsageError(std::string("bad graph6 input: ") + e.what());
  }
}

std::string format_double(double x) {
  std::ostringstream s;
  s << std::setprecision(10) << (std::abs(x) < 5e-13 ? 0.0 : x);
  return s.str();
}

std::string exact_spectrum_string(const ExactLaplacianSpectrum& exact, int order) {
  // The characteristic polynomial is monic, so its square-free factors are
  // monic too and any rational root is an integer. Laplacian eigenvalues lie
  // in [0, 2n], which bounds the search; whatever is left is printed as an
  // unfactored polynomial.
  struct Item {
    long root;
    int multiplicity;
  };
  std::vector<Item> integral;
  std::vector<std::string> other;
  for (const auto& f : exact.decomposition().factors) {
    IntegerPolynomial rest = f.factor;
    for (long k = 0; k <= 2L * order && rest.degree() > 0; ++k) {
      if (rest.sign_at(mpq_class(k)) != 0) continue;
      integral.push_back({k, f.multiplicity});
      rest = exact_quotient(rest, IntegerPolynomial{-k, 1});
    }
    if (rest.degree() > 0) {
      std::string s = "[" + rest.to_string() + "]";
      if (f.multiplicity > 1) s += "×" + std::to_string(f.multiplicity);
      other.push_back(s);
    }
  }
  std::sort(integral.begin(), integral.end(), [](const Item& a, const Item& b) { return a.root < b.root; });
  std::string out;
  for (const auto& item : integral) {
    if (!out.empty()) out += ", ";
    out += std::to_string(item.root);
    if (item.multiplicity > 1) out += "×" + std::to_string(item.multiplicity);
  }
  for (const auto& s : other) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

int cmd_spectrum(const InputOptions& in, std::ostream& out) {
  const FamilyGraph input = resolve_input(in);
  const Graph& g = input.graph;
  const ExactLaplacianSpectrum exact(g);
  out << "graph6: " << to_graph6(g) << "\n";
  out << "vertices: " << g.order() << ", edges: " << g.edge_count() << "\n";
  out << "characteristic polynomial: " << exact.characteristic().to_string() << "\n";
  if (input.closed_form) out << "closed form: " << input.closed_form->to_string() << "\n";
  out << "exact: " << exact_spectrum_string(exact, g.order()) << "\n";
  out << "numeric:";
  const auto values = laplacian_eigenvalues(g);
  for (std::size_t i = 0; i < values.size(); ++i) out << (i == 0 ? " " : ", ") << format_double(values[i]);
  out << "\n";
  return kExitOk;
}

int cmd_count(const InputOptions& in, const std::vector<std::string>& interval, std::ostream& out) {
  const FamilyGraph input = resolve_input(in);
  mpq_class lower;
  mpq_class upper;
  try {
    lower = parse_rational(interval.at(0));
    upper = parse_rational(interval.at(1));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!(lower < upper)) {
    throw UsageError("degenerate interval (" + lower.get_str() + ", " + upper.get_str() + "]: need a < b");
  }
  const ExactLaplacianSpectrum exact(input.graph);
  const IntervalCountCertificate cert = exact.certificate(lower, upper);
  out << "m_G(" << lower.get_str() << ", " << upper.get_str() << "] = " << cert.count() << "\n";
  out << "lower endpoint " << lower.get_str() << " is an eigenvalue: "
      << (cert.lower_is_eigenvalue() ? "yes" : "no") << " (multiplicity " << cert.roots.multiplicity_at_lower
      << ")\n";
  out << "upper endpoint " << upper.get_str() << " is an eigenvalue: "
      << (cert.upper_is_eigenvalue() ? "yes" : "no") << " (multiplicity " << cert.roots.multiplicity_at_upper
      << ")\n";
  out << "characteristic polynomial: " << cert.characteristic.to_string() << "\n";
  for (std::size_t i = 0; i < cert.decomposition.factors.size(); ++i) {
    const auto& f = cert.decomposition.factors[i];
    const auto& fc = cert.roots.per_factor[i];
    out << "  factor " << f.factor.to_string() << " (multiplicity " << f.multiplicity << "): "
        << fc.distinct_roots << " distinct root(s) in interval\n";
  }
  return kExitOk;
}

std::vector<Graph> read_g6_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<Graph> graphs;
  std::string line;
  for (int line_no = 1; std::getline(file, line); ++line_no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back(from_graph6(line));
    } catch (const Graph6Error& e) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return graphs;
}

void write_file(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << content;
  if (!file) throw std::runtime_error("write to '" + path + "' failed");
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : " ") + s;
  return out;
}

struct VerifyOptions {
  int nmax = 0;
  std::string g6_file;
  std::string json_path;
  std::string csv_path;
  int jobs = 0;
  bool skip_lemmas = false;
};

int cmd_verify(const VerifyOptions& opt, const std::string& command_line, std::ostream& out) {
  const int jobs = opt.jobs > 0 ? opt.jobs : default_jobs();
  std::vector<Graph> graphs;
  if (!opt.g6_file.empty()) {
    graphs = read_g6_file(opt.g6_file);
  } else {
    if (opt.nmax < 1 || opt.nmax > kEnumerateMaxVertices) {
      throw UsageError("--nmax must be in 1..9 for internal enumeration");
    }
    for (int n = 1; n <= opt.nmax; ++n) {
      auto level = enumerate_connected(n, jobs);
      std::move(level.begin(), level.end(), std::back_inserter(graphs));
    }
  }

  const ScanReport report = scan_corpus(graphs, {jobs, !opt.skip_lemmas});
  const ReportMeta meta{kVersion, command_line, utc_timestamp()};
  if (!opt.json_path.empty()) write_file(opt.json_path, report_to_json(report, meta).dump(2) + "\n", out);
  if (!opt.csv_path.empty()) write_file(opt.csv_path, report_to_csv(report), out);

  const auto violations = report.violations();
  out << "graphs scanned: " << report.records.size() << "\n";
  for (const auto& [name, count] : report.counts_by_classification()) out << "  " << name << ": " << count << "\n";
  out << "violations: " << violations.size() << (violations.empty() ? "" : " (" + join(violations) + ")") << "\n";
  out << "lemma failures: " << report.lemma_failures.size() << "\n";
  out << "errors: " << report.errors.size() << "\n";
  for (const auto& e : report.errors) out << "  " << e.graph6 << ": " << e.message << "\n";
  out << "equality cases:\n";
  for (const auto& [name, keys] : report.equality_cases()) {
    out << "  " << name << ": " << (keys.empty() ? "-" : join(keys)) << "\n";
  }
  if (const auto t = report.triangle_with_pendant()) {
    out << "triangle with pendant " << t->graph6 << ": count " << *t->count << ", bound " << *t->bound
        << ", equality " << (t->equality ? "yes" : "no") << "\n";
  }
  const auto mismatches = report.classifier_mismatches();
  out << "classifier/equality mismatches: " << mismatches.size() << "\n";
  for (const auto& r : mismatches) {
    out << "  " << r.graph6 << " classified " << to_string(r.classification) << ", equality "
        << (r.equality ? "yes" : "no") << "\n";
  }
  return violations.empty() && report.lemma_failures.empty() ? kExitOk : kExitViolations;
}

int cmd_enumerate(int n, int jobs, std::ostream& out) {
  if (n < 1 || n > kEnumerateMaxVertices) throw UsageError("enumeration supports 1..9 vertices");
  for (const auto& g : enumerate_connected(n, jobs > 0 ? jobs : default_jobs())) out << to_graph6(g) << "\n";
  return kExitOk;
}

}  // namespace

FamilyGraph parse_family(const std::string& kind, const std::string& args) {
  if (kind == "cycle") {
    const int n = parse_int_list(args, 1, 1)[0];
    if (n < 3 || n > Graph::kMaxVertices) throw UsageError("cycle length must be in 3..64");
    return {cycle(n), cycle_spectrum(n)};
  }
  if (kind == "path") {
    const int n = parse_int_list(args, 1, 1)[0];
    if (n < 1 || n > Graph::kMaxVertices) throw UsageError("path length must be in 1..64");
    return {path(n), path_spectrum(n)};
  }
  if (kind == "complete") {
    const int n = parse_int_list(args, 1, 1)[0];
    if (n < 1 || n > Graph::kMaxVertices) throw UsageError("complete graph order must be in 1..64");
    std::optional<ClosedFormSpectrum> closed;
    if (n >= 2) closed = multipartite_spectrum(std::vector<int>(static_cast<std::size_t>(n), 1));
    return {complete(n), closed};
  }
  if (kind == "k") {
    const std::vector<int> parts = parse_int_list(args, 1, Graph::kMaxVertices);
    int total = 0;
    for (int r : parts) {
      if (r < 1) throw UsageError("part sizes must be positive");
      total += r;
    }
    if (total > Graph::kMaxVertices) throw UsageError("complete multipartite graph exceeds 64 vertices");
    std::optional<ClosedFormSpectrum> closed;
    if (parts.size() >= 2) closed = multipartite_spectrum(parts);
    return {complete_multipartite(parts), closed};
  }
  if (kind == "ut") {
    const std::vector<int> v = parse_int_list(args, 2, 2);
    if (v[0] < 3 || v[0] + v[1] > Graph::kMaxVertices) throw UsageError("ut needs G >= 3 and G + T <= 64");
    return {u_t(v[0], v[1]), std::nullopt};
  }
  if (kind == "gadget") {
    try {
      return {gadget_graph(parse_gadget(args)), std::nullopt};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("unknown family '" + kind + "' (expected cycle, path, complete, k, ut, gadget)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Laplacian eigenvalue counts and girth bound verification", "lapgirth"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  InputOptions spectrum_in;
  auto* spectrum = app.add_subcommand("spectrum", "print exact and numeric Laplacian spectrum");
  add_input_options(spectrum, spectrum_in);

  InputOptions count_in;
  std::vector<std::string> interval;
  auto* count = app.add_subcommand("count", "exact number of Laplacian eigenvalues in (a, b]");
  add_input_options(count, count_in);
  count->add_option("--interval", interval, "interval endpoints a b (integers, decimals or p/q)")
      ->expected(2)
      ->required()
      ->allow_extra_args(false);

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "scan a corpus for the girth bound and its equality cases");
  auto* nmax = verify->add_option("--nmax", verify_opt.nmax, "enumerate connected graphs on 1..N vertices");
  auto* file = verify->add_option("--g6-file", verify_opt.g6_file, "read graphs from a graph6 file");
  nmax->excludes(file);
  verify->add_option("--json", verify_opt.json_path, "write the JSON report here ('-' for stdout)");
  verify->add_option("--csv", verify_opt.csv_path, "write the CSV export here ('-' for stdout)");
  verify->add_option("--jobs", verify_opt.jobs, std::string("worker threads (default: $") + kJobsEnvVar +
                                                    " or all cores)");
  verify->add_flag("--skip-lemmas", verify_opt.skip_lemmas, "only run the bound checks");

  int enumerate_n = 0;
  int enumerate_jobs = 0;
  auto* enumerate = app.add_subcommand("enumerate", "print connected graphs on N vertices as graph6");
  enumerate->add_option("n", enumerate_n, "vertex count (1..9)")->required();
  enumerate->add_option("--jobs", enumerate_jobs, "worker threads");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(spectrum_in, out);
    if (*count) return cmd_count(count_in, interval, out);
    if (*verify) {
      if (verify_opt.nmax == 0 && verify_opt.g6_file.empty()) throw UsageError("verify needs --nmax or --g6-file");
      std::string command_line = "verify";
      for (std::size_t i = 1; i < args.size(); ++i) command_line += " " + args[i];
      return cmd_verify(verify_opt, command_line, out);
    }
    if (*enumerate) return cmd_enumerate(enumerate_n, enumerate_jobs, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace lapgirth::cli
