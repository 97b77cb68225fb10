// Copyright 2026 The tutteseq Authors
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

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tutteseq/betti.hpp"
#include "tutteseq/divisor.hpp"
#include "tutteseq/errors.hpp"
#include "tutteseq/exactness.hpp"
#include "tutteseq/presentation.hpp"
#include "tutteseq/report.hpp"
#include "tutteseq/series.hpp"
#include "tutteseq/tutte.hpp"

namespace ts = tutteseq;
using nlohmann::json;

namespace {

struct Options {
  std::string graph_path;
  std::string corpus;
  std::string kind;
  std::vector<int> edge;
  int sink = 1;
  int max_degree = -1;
  int max_deg = -1;
  bool json_out = false;
  bool parallel = false;
};

// A check result: pass/fail, structured data and a human rendering.
struct Outcome {
  bool ok = true;
  json data;
  std::string text;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

ts::Execution exec_of(const Options& o) { return o.parallel ? ts::Execution::parallel : ts::Execution::serial; }

ts::Vertex checked_sink(const ts::Multigraph& g, int sink) {
  if (sink < 0 || sink >= g.vertex_count())
    throw UsageError("sink " + std::to_string(sink) + " out of range for " + std::to_string(g.vertex_count()) +
                     " vertices");
  return sink;
}

std::pair<ts::Vertex, ts::Vertex> checked_edge(const ts::Multigraph& g, const std::vector<int>& e) {
  if (e.size() != 2) throw UsageError("--edge needs two vertices");
  for (int v : e)
    if (v < 0 || v >= g.vertex_count()) throw UsageError("edge endpoint " + std::to_string(v) + " out of range");
  if (!g.adjacent(e[0], e[1])) throw ts::NoSuchEdge("vertices " + std::to_string(e[0]) + " and " +
                                                    std::to_string(e[1]) + " are not adjacent");
  return {e[0], e[1]};
}

std::string yes_no(bool b) { return b ? "pass" : "FAIL"; }

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  return out.str();
}

ts::IntPoly one_minus_t_power(int k) {
  ts::IntPoly p{1};
  for (int i = 0; i < k; ++i) p = p * ts::IntPoly{1, -1};
  return p;
}

Outcome run_tutte(const ts::Multigraph& g) {
  Outcome o;
  const auto t = ts::tutte_polynomial(g);
  const auto t1 = ts::tutte_eval_1_t(g);
  o.data = {{"tutte", ts::to_json(t)}, {"tutte_1_t", ts::to_json(t1)}};
  o.text = "T(x,y) = " + t.to_string() + "\nT(1,t) = " + t1.to_string() + "\n";
  return o;
}

Outcome run_betti(const ts::Multigraph& g, ts::Vertex q, ts::Execution exec) {
  Outcome o;
  const auto b = ts::betti_table(g, q, exec);
  const auto alt = ts::alternating_numbers(b, b.max_k());
  const auto lhs = b.signed_generating_polynomial();
  const auto rhs = one_minus_t_power(g.vertex_count() - 1) * ts::tutte_eval_1_t(g);
  o.ok = lhs == rhs;
  o.data = {{"betti", ts::to_json(b)}, {"alternating", alt}, {"tutte_identity", o.ok}};
  std::ostringstream out;
  for (const auto& [ik, v] : b.entries) out << "beta_{" << ik.first << "," << ik.second << "} = " << v << "\n";
  out << "alternating numbers: " << join(alt) << "\n";
  out << "signed sum = T(1,t)(1-t)^(n-1): " << yes_no(o.ok) << "\n";
  o.text = out.str();
  return o;
}

Outcome run_merino(const ts::Multigraph& g, ts::Vertex q, ts::Execution exec) {
  Outcome o;
  const int D = ts::default_max_degree(g);
  const auto h = ts::hilbert_function(ts::gpark_presentation(g, q), D, exec);
  const auto tutte = ts::tutte_eval_1_t(g);
  const auto recip = ts::superstable_reciprocity(g, q);
  o.ok = h.stabilized() && h.k_polynomial == tutte && recip == tutte;
  o.data = {{"max_degree", D},
            {"module", ts::to_json(h)},
            {"tutte_1_t", ts::to_json(tutte)},
            {"superstables", ts::to_json(recip)},
            {"agree", o.ok}};
  o.text = "module K(t)       = " + h.k_polynomial.to_string() + "\nT(1,t)            = " + tutte.to_string() +
           "\nsuperstables      = " + recip.to_string() + "\nagree: " + yes_no(o.ok) + "\n";
  return o;
}

Outcome run_exactness(const ts::Multigraph& g, ts::SequenceKind kind, ts::Vertex u, ts::Vertex v, ts::Vertex q,
                      std::optional<int> D, ts::Execution exec) {
  Outcome o;
  const auto r = ts::exactness_report(kind, g, u, v, q, D, exec);
  o.ok = r.verdict;
  o.data = ts::to_json(r);
  std::ostringstream out;
  out << ts::to_string(kind) << " sequence, edge (" << u << "," << v << "), sink " << q << ", degrees 0.." << r.max_degree
      << "\n";
  out << "  t\tdimL\tdimM\tdimR\tim psi\tker phi\tflags\n";
  for (const auto& row : r.rows) {
    out << "  " << row.t << "\t" << row.dimL << "\t" << row.dimM << "\t" << row.dimR << "\t" << row.dim_im_psi << "\t"
        << row.dim_ker_phi << "\t" << (row.flags.all() ? "ok" : "FAIL");
    if (row.kernel_strictly_larger) out << "  (ker psi " << row.dim_ker_psi << " > " << row.dim_x12_left << ")";
    out << "\n";
  }
  out << "maps well defined: " << yes_no(r.maps_well_defined) << "\nverdict: " << yes_no(r.verdict) << "\n";
  o.text = out.str();
  return o;
}

Outcome run_riemann_roch(const ts::Multigraph& g, ts::Vertex q, int max_deg) {
  Outcome o;
  const int genus = g.genus();
  if (max_deg < 0) max_deg = 2 * genus;
  ts::ChipFiring cf(g, q);
  const auto K = ts::canonical_divisor(g);
  const auto N = ts::spanning_tree_count(g);
  const bool rank_k = cf.rank(K) == genus - 1;
  json degrees = json::array();
  std::ostringstream out;
  bool all = rank_k;
  for (int d = -2; d <= max_deg; ++d) {
    const auto classes = ts::picard_classes(g, d, q);
    bool rr = ts::BigInt(classes.size()) == N;
    for (const auto& c : classes) {
      const int r = cf.rank(c.reduced);
      rr = rr && r - cf.rank(K - c.reduced) == d - genus + 1;
      if (d > 2 * genus - 2) rr = rr && r == d - genus;
    }
    all = all && rr;
    degrees.push_back({{"degree", d}, {"classes", classes.size()}, {"ok", rr}});
    out << "degree " << d << ": " << classes.size() << " classes, " << yes_no(rr) << "\n";
  }
  o.ok = all;
  o.data = {{"genus", genus}, {"rank_canonical_ok", rank_k}, {"spanning_trees", N.str()}, {"degrees", degrees}};
  o.text = "genus " + std::to_string(genus) + ", rank K = g - 1: " + yes_no(rank_k) + "\n" + out.str();
  return o;
}

Outcome run_appendix(const ts::Multigraph& g, ts::Vertex q, ts::Execution exec) {
  Outcome o;
  const int genus = g.genus();
  const auto N = static_cast<std::int64_t>(ts::spanning_tree_count(g));
  auto toppling_h = [&](std::int64_t d) { return d < 0 ? 0 : ts::hilb_toppling(g, d, q); };
  bool duality = true, saturation = true;
  json rows = json::array();
  for (int k = -genus; k <= genus + 3; ++k) {
    const auto b = ts::bsc_coefficient(g, k, q);
    const bool dual = b == N - toppling_h(genus - 1 - k);
    const bool sat = k <= 2 * genus - 2 || b == N;
    duality = duality && dual;
    saturation = saturation && sat;
    rows.push_back({{"k", k}, {"h_bsc", b}, {"duality", dual}, {"saturation", sat}});
  }
  const int D = genus + g.loop_count() + 3;
  const auto bsc = ts::bsc_coefficients(g, q, D, exec);
  const bool regularity = bsc.stabilized() && bsc.k_polynomial.degree() == genus;
  const auto park = ts::hilb_parking(g, q, D, exec);
  bool ideals = true;
  for (int d = 0; d <= D; ++d) ideals = ideals && park.h[static_cast<std::size_t>(d)] == toppling_h(d);
  bool module = true;
  if (g.loop_count() == 0) module = ts::hilbert_function(ts::toppling_presentation(g, q), D, exec) == bsc;
  o.ok = duality && saturation && regularity && ideals && module;
  o.data = {{"rows", rows},
            {"bsc", ts::to_json(bsc)},
            {"duality", duality},
            {"saturation", saturation},
            {"regularity", regularity},
            {"ideals_agree", ideals},
            {"bsc_matches_toppling_module", module},
            {"ok", o.ok}};
  o.text = "BSC coefficients: " + join(bsc.h) + "\nduality: " + yes_no(duality) + "\nsaturation: " + yes_no(saturation) +
           "\nK-polynomial degree = g: " + yes_no(regularity) + "\nparking and toppling ideals agree: " + yes_no(ideals) +
           "\nBSC matches toppling module: " + yes_no(module) + (g.loop_count() ? " (skipped, loops)" : "") + "\n";
  return o;
}

Outcome run_alt_dc(const ts::Multigraph& g, ts::Vertex u, ts::Vertex v) {
  Outcome o;
  const auto r = ts::check_alt_deletion_contraction(g, u, v);
  o.ok = r.ok && r.zeroth_sum;
  o.data = ts::to_json(r);
  std::ostringstream out;
  out << "  k  A(G) + A_{k-1}(G/e) = A(G/e) + A(G\\e)\n";
  for (const auto& row : r.rows)
    out << "  " << row.k << "  " << row.a_g << " + " << row.a_contracted_prev << " = " << row.a_contracted << " + "
        << row.a_deleted << "  " << (row.holds ? "ok" : "FAIL") << "\n";
  out << "A_0 sum: " << yes_no(r.zeroth_sum) << "\n";
  o.text = out.str();
  return o;
}

Outcome run_vanishing(const ts::Multigraph& g, ts::Vertex u, ts::Vertex v) {
  Outcome o;
  const auto r = ts::check_vanishing_implies_equality(g, u, v);
  o.ok = r.ok;
  o.data = ts::to_json(r);
  std::ostringstream out;
  out << r.instances.size() << " indices satisfy the hypothesis, " << r.counterexamples.size() << " counterexamples\n";
  for (const auto& in : r.counterexamples)
    out << "  (" << in.i << "," << in.j << "): " << in.beta_g << " vs " << in.beta_deleted << "\n";
  o.text = out.str();
  return o;
}

Outcome run_suite(const std::string& dir, ts::Execution exec) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".graph") files.push_back(entry.path());
  if (files.empty()) throw UsageError("no .graph files in " + dir);
  std::sort(files.begin(), files.end());

  Outcome total;
  total.data = json::array();
  std::ostringstream out;
  for (const auto& path : files) {
    const auto g = ts::read_graph_file(path.string());
    const ts::Vertex q = g.vertex_count() > 1 ? 1 : 0;
    json checks = json::object();
    bool ok = true;
    auto record = [&](const std::string& name, const Outcome& r) {
      checks[name] = r.data;
      ok = ok && r.ok;
      out << "  " << name << ": " << yes_no(r.ok) << "\n";
    };
    out << path.filename().string() << "\n";
    record("betti", run_betti(g, q, exec));
    record("merino", run_merino(g, q, exec));
    record("riemann-roch", run_riemann_roch(g, q, -1));
    record("appendix", run_appendix(g, q, exec));
    for (auto [u, v] : g.adjacent_pairs()) {
      if (ts::is_bridge(g, u, v)) continue;
      const std::string e = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
      record("alt-dc " + e, run_alt_dc(g, u, v));
      record("vanishing " + e, run_vanishing(g, u, v));
      if (g.vertex_count() < 3) continue;
      for (ts::Vertex s : {u, v})
        for (auto kind : {ts::SequenceKind::gpark, ts::SequenceKind::toppling})
          record("exactness " + ts::to_string(kind) + " " + e + " sink " + std::to_string(s),
                 run_exactness(g, kind, u, v, s, std::nullopt, exec));
    }
    total.data.push_back({{"graph", path.filename().string()}, {"ok", ok}, {"checks", checks}});
    total.ok = total.ok && ok;
  }
  out << "suite: " << yes_no(total.ok) << "\n";
  total.text = out.str();
  return total;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tutte short exact sequences of critical modules"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_out, "JSON on standard output");
  app.add_flag("--parallel", o.parallel, "OpenMP kernels (thread count from OMP_NUM_THREADS)");

  auto graph_arg = [&](CLI::App* sub) { sub->add_option("graph", o.graph_path, "graph file")->required(); };
  auto sink_opt = [&](CLI::App* sub) { sub->add_option("--sink", o.sink, "sink vertex")->capture_default_str(); };
  auto edge_opt = [&](CLI::App* sub) { sub->add_option("--edge", o.edge, "edge endpoints u v")->expected(2)->required(); };

  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial and T(1,t)");
  graph_arg(tutte);
  auto* betti = app.add_subcommand("betti", "Betti table and alternating numbers");
  graph_arg(betti);
  sink_opt(betti);
  auto* merino = app.add_subcommand("merino", "K-polynomial of the parking module vs T(1,t) vs superstables");
  graph_arg(merino);
  sink_opt(merino);
  auto* exact = app.add_subcommand("exactness", "verify a Tutte short exact sequence degree by degree");
  exact->add_option("kind", o.kind, "gpark or toppling")->required()->check(CLI::IsMember({"gpark", "toppling"}));
  graph_arg(exact);
  edge_opt(exact);
  sink_opt(exact);
  exact->add_option("--max-degree", o.max_degree, "largest degree checked")->check(CLI::NonNegativeNumber);
  auto* rr = app.add_subcommand("riemann-roch", "Riemann-Roch and rank checks over all divisor classes");
  graph_arg(rr);
  sink_opt(rr);
  rr->add_option("--max-deg", o.max_deg, "largest divisor degree (default 2g)")->check(CLI::NonNegativeNumber);
  auto* appendix = app.add_subcommand("appendix", "BSC duality, saturation and regularity checks");
  graph_arg(appendix);
  sink_opt(appendix);
  auto* altdc = app.add_subcommand("alt-dc", "deletion-contraction for alternating numbers");
  graph_arg(altdc);
  edge_opt(altdc);
  auto* van = app.add_subcommand("vanishing", "vanishing of G/e Betti numbers implies equality for G and G\\e");
  graph_arg(van);
  edge_opt(van);
  auto* suite = app.add_subcommand("suite", "every check on every graph of a directory");
  suite->add_option("--corpus", o.corpus, "directory of .graph files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto exec = exec_of(o);
    Outcome r;
    std::string command;
    if (*suite) {
      command = "suite";
      r = run_suite(o.corpus, exec);
    } else {
      const auto g = ts::read_graph_file(o.graph_path);
      if (*tutte) {
        command = "tutte";
        r = run_tutte(g);
      } else if (*betti) {
        command = "betti";
        r = run_betti(g, checked_sink(g, o.sink), exec);
      } else if (*merino) {
        command = "merino";
        r = run_merino(g, checked_sink(g, o.sink), exec);
      } else if (*exact) {
        command = "exactness";
        auto [u, v] = checked_edge(g, o.edge);
        const auto kind = o.kind == "gpark" ? ts::SequenceKind::gpark : ts::SequenceKind::toppling;
        std::optional<int> D;
        if (o.max_degree >= 0) D = o.max_degree;
        r = run_exactness(g, kind, u, v, checked_sink(g, o.sink), D, exec);
      } else if (*rr) {
        command = "riemann-roch";
        r = run_riemann_roch(g, checked_sink(g, o.sink), o.max_deg);
      } else if (*appendix) {
        command = "appendix";
        r = run_appendix(g, checked_sink(g, o.sink), exec);
      } else if (*altdc) {
        command = "alt-dc";
        auto [u, v] = checked_edge(g, o.edge);
        r = run_alt_dc(g, u, v);
      } else {
        command = "vanishing";
        auto [u, v] = checked_edge(g, o.edge);
        r = run_vanishing(g, u, v);
      }
    }
    if (o.json_out) {
      json doc = {{"schema", ts::kSchemaVersion}, {"command", command}, {"ok", r.ok}, {"result", r.data}};
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << r.text;
    }
    return r.ok ? 0 : 1;
  } catch (const ts::BridgeEdge& e) {
    std::cerr << "error: bridge edge: " << e.what() << "\n";
  } catch (const ts::SinkMismatch& e) {
    std::cerr << "error: sink not on edge: " << e.what() << "\n";
  } catch (const ts::TooFewVertices& e) {
    std::cerr << "error: too few vertices: " << e.what() << "\n";
  } catch (const ts::NoSuchEdge& e) {
    std::cerr << "error: no such edge: " << e.what() << "\n";
  } catch (const ts::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
