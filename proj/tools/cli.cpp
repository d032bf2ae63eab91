// Copyright 2026 The veblen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "veblen/classical.hpp"
#include "veblen/enumerate.hpp"
#include "veblen/errors.hpp"
#include "veblen/io.hpp"
#include "veblen/rooting.hpp"
#include "veblen/simplex.hpp"
#include "veblen/spectra.hpp"

namespace veblen::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SimpleHypergraph read_host(const std::string& path) {
  MultiHypergraph h = parse_hypergraph(read_file(path));
  try {
    return SimpleHypergraph(h);
  } catch (const DomainError&) {
    throw UsageError("'" + path + "' has repeated edges; a host must be simple");
  }
}

struct Options {
  std::string input;
  std::string output;
  std::string format;
  unsigned max_codegree = 9;
  unsigned k = 3;
  unsigned d = 3;
  unsigned jobs = 1;
  unsigned max_n = 5;
  unsigned random = 0;
  std::uint64_t seed = 1;
  std::uint64_t budget = 10'000'000;
  bool with_coefficients = false;
  bool report_asymptotics = false;
  bool breakdown = false;
  bool oracle = false;
};

int run_coeffs(const Options& o, std::ostream& out) {
  SimpleHypergraph host = read_host(o.input);
  CoefficientTable table = codegree_coefficients(host, o.max_codegree, o.jobs);
  out << emit_table(table, parse_format(o.format.empty() ? "csv" : o.format), o.breakdown);
  return kOk;
}

int run_traces(const Options& o, std::ostream& out, std::ostream& err) {
  SimpleHypergraph host = read_host(o.input);
  TraceVector tv = traces(host, o.max_codegree, o.jobs);
  out << emit_traces(tv, host.k(), host.n(), parse_format(o.format.empty() ? "csv" : o.format));
  if (!o.oracle) return kOk;
  int status = kOk;
  for (unsigned d = 1; d <= o.max_codegree; ++d) {
    Rational brute = trace_bruteforce(host, d, o.budget);
    if (brute != tv.traces[d]) {
      err << "oracle mismatch at d=" << d << ": " << to_string(brute) << '\n';
      status = kCheckFailed;
    }
  }
  return status;
}

int run_enumerate(const Options& o, std::ostream& out) {
  auto records = enumerate_connected_veblen(o.k, o.d, o.with_coefficients, o.jobs);
  for (const auto& r : records) out << atlas_line(r) << '\n';
  return kOk;
}

int run_count(const Options& o, std::ostream& out) {
  std::vector<Natural> connected(o.d + 1, 0);
  for (unsigned j = 1; j <= o.d; ++j) {
    connected[j] = static_cast<unsigned long>(enumerate_connected_veblen(o.k, j, false, o.jobs).size());
  }
  std::vector<Natural> all = euler_transform(connected);
  out << "d,connected,all\n";
  for (unsigned j = 1; j <= o.d; ++j) {
    out << j << ',' << connected[j].get_str() << ',' << all[j].get_str() << '\n';
  }
  return kOk;
}

int run_assoc(const Options& o, std::ostream& out) {
  out << to_string(assoc_coeff(parse_hypergraph(read_file(o.input)))) << '\n';
  return kOk;
}

int run_simplex(const Options& o, std::ostream& out) {
  out << emit_simplex_report(simplex_Ck(o.k),
                             parse_format(o.format.empty() ? "structured" : o.format),
                             o.report_asymptotics);
  return kOk;
}

int run_classical(const Options& o, std::ostream& out) {
  ClassicalSweepReport sweep = classical_sweep(o.max_n, o.jobs);
  out << "exhaustive n<=" << o.max_n << ": " << sweep.graphs << " graphs, "
      << sweep.harary_sachs_mismatches << " Harary-Sachs mismatches, "
      << sweep.pipeline_mismatches << " pipeline mismatches\n";
  std::uint64_t random_bad = 0;
  std::mt19937_64 rng(o.seed);
  for (unsigned i = 0; i < o.random; ++i) {
    Vertex n = static_cast<Vertex>(6 + rng() % 3);
    std::vector<Edge> edges;
    for (Vertex a = 1; a <= n; ++a) {
      for (Vertex b = a + 1; b <= n; ++b) {
        if (rng() & 1) edges.push_back({a, b});
      }
    }
    SimpleHypergraph g(2, n, edges);
    IntPolynomial p = charpoly_graph(g);
    for (unsigned d = 0; d <= n; ++d) {
      if (harary_sachs_coeffs(g, d) != p[n - d]) {
        ++random_bad;
        break;
      }
    }
  }
  if (o.random) {
    out << "random n=6..8 (seed " << o.seed << "): " << o.random << " graphs, " << random_bad
        << " Harary-Sachs mismatches\n";
  }
  bool ok = sweep.harary_sachs_mismatches == 0 && sweep.pipeline_mismatches == 0 && random_bad == 0;
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kOk : kCheckFailed;
}

int run_threshold(const Options& o, std::ostream& out) {
  SimpleHypergraph host = read_host(o.input);
  ThresholdReport r = threshold_search(host, o.max_codegree, o.jobs);
  out << "k=" << r.k << " v=" << r.v << " dmax=" << r.dmax << " threshold=";
  if (!r.threshold) {
    out << "none\n";
    return kOk;
  }
  out << *r.threshold << " witness=" << to_string(r.witness)
      << " status=" << (r.exact ? "exact" : "lower-bound") << '\n';
  return kOk;
}

int run_atlas(const Options& o, std::ostream& out) {
  std::vector<IsoClassRecord> records;
  if (!o.input.empty()) {
    records = connected_infragraph_classes(read_host(o.input), o.d, o.jobs);
    for (auto& r : records) r.assoc_coeff = assoc_coeff(r.representative);
  } else {
    records = enumerate_connected_veblen(o.k, o.d, true, o.jobs);
  }
  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.output.empty()) {
    file.open(o.output, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + o.output + "'");
    sink = &file;
  }
  for (const auto& r : records) *sink << atlas_line(r) << '\n';
  return kOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Codegree coefficients of uniform hypergraphs", "veblen"};
  app.require_subcommand(1);
  Options o;

  auto jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  };
  auto format = [&](CLI::App* sub, const std::string& choices) {
    sub->add_option("--format", o.format, "Output format: " + choices);
  };

  auto* coeffs = app.add_subcommand("coeffs", "Codegree coefficients c_0..c_D of a host");
  coeffs->add_option("--input", o.input, "Host hypergraph file")->required();
  coeffs->add_option("--max-codegree", o.max_codegree, "Largest codegree D");
  coeffs->add_flag("--breakdown", o.breakdown, "Per-class contributions");
  format(coeffs, "csv (default), structured, human");
  jobs(coeffs);

  auto* tr = app.add_subcommand("traces", "Traces Tr_1..Tr_D of a host");
  tr->add_option("--input", o.input, "Host hypergraph file")->required();
  tr->add_option("--max-codegree", o.max_codegree, "Largest d");
  tr->add_flag("--oracle", o.oracle, "Also run the brute-force trace oracle");
  tr->add_option("--budget", o.budget, "Oracle index-sequence budget");
  format(tr, "csv (default), structured, human");
  jobs(tr);

  auto* vb = app.add_subcommand("veblen", "Abstract Veblen hypergraphs");
  vb->require_subcommand(1);
  auto* vb_enum = vb->add_subcommand("enumerate", "Connected classes as atlas records");
  auto* vb_count = vb->add_subcommand("count", "Connected and total class counts for 1..d");
  for (auto* sub : {vb_enum, vb_count}) {
    sub->add_option("--k", o.k, "Uniformity")->check(CLI::Range(2u, 16u));
    sub->add_option("--d", o.d, "Edge count")->required();
    jobs(sub);
  }
  vb_enum->add_flag("--with-coefficients", o.with_coefficients, "Compute C_H per class");

  auto* assoc = app.add_subcommand("assoc-coeff", "Associated coefficient C_H");
  assoc->add_option("--input", o.input, "Veblen hypergraph file")->required();

  auto* simplex = app.add_subcommand("simplex-ck", "Simplex coefficient C_k");
  simplex->add_option("--k", o.k, "Uniformity")->required()->check(CLI::Range(2u, 1000u));
  simplex->add_flag("--report-asymptotics", o.report_asymptotics, "Include limiting ratios");
  format(simplex, "structured (default), csv, human");

  auto* classical = app.add_subcommand("classical-check", "Graph (k = 2) consistency sweep");
  classical->add_option("--max-n", o.max_n, "Exhaustive sweep bound")->check(CLI::Range(1u, 7u));
  classical->add_option("--random", o.random, "Random graphs on 6..8 vertices");
  classical->add_option("--seed", o.seed, "Seed for --random");
  jobs(classical);

  auto* threshold = app.add_subcommand("threshold", "Largest nonzero codegree up to dmax");
  threshold->add_option("--input", o.input, "Host hypergraph file")->required();
  threshold->add_option("--dmax,--max-codegree", o.max_codegree, "Search bound");
  jobs(threshold);

  auto* atlas = app.add_subcommand("atlas-export", "Connected classes with C_H and |Aut|");
  atlas->add_option("--k", o.k, "Uniformity")->check(CLI::Range(2u, 16u));
  atlas->add_option("--d", o.d, "Edge count")->required();
  atlas->add_option("--input", o.input, "Restrict to infragraphs of this host");
  atlas->add_option("--output", o.output, "Write records here instead of stdout");
  jobs(atlas);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int status = app.exit(e, out, err);
    return status == 0 ? kOk : kUsageError;
  }

  try {
    if (coeffs->parsed()) return run_coeffs(o, out);
    if (tr->parsed()) return run_traces(o, out, err);
    if (vb_enum->parsed()) return run_enumerate(o, out);
    if (vb_count->parsed()) return run_count(o, out);
    if (assoc->parsed()) return run_assoc(o, out);
    if (simplex->parsed()) return run_simplex(o, out);
    if (classical->parsed()) return run_classical(o, out);
    if (threshold->parsed()) return run_threshold(o, out);
    if (atlas->parsed()) return run_atlas(o, out);
  } catch (const ConsistencyFailure& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kInternalError;
  } catch (const NormalizationFailure& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kInternalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

int dispatch(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispatch(args, std::cout, std::cerr);
}

}  // namespace veblen::cli
