#include "hyperspec/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyperspec/bounds.hpp"
#include "hyperspec/constructions.hpp"
#include "hyperspec/hg_format.hpp"
#include "hyperspec/report_json.hpp"
#include "hyperspec/spectra.hpp"
#include "hyperspec/structure.hpp"
#include "hyperspec/surgery.hpp"
#include "hyperspec/verify.hpp"

namespace hyperspec::cli {

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::bad_params:
    case ErrorCode::infeasible_params:
    case ErrorCode::size_cap_exceeded:
    case ErrorCode::dimension_cap_exceeded:
    case ErrorCode::empty_query:
      return kUsage;
    default:
      return kInvalidInput;
  }
}

void report_error(std::ostream& err, std::string_view kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", report_number(x));
  return buf;
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

SizeRange parse_sizes(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const auto s = std::stoul(text);
      return {s, s};
    }
    return {std::stoul(text.substr(0, colon)), std::stoul(text.substr(colon + 1))};
  } catch (const std::exception&) {
    fail(ErrorCode::bad_params, "size range must look like MIN:MAX, got '" + text + "'");
  }
}

std::size_t parse_index(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto v = std::stoul(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorCode::bad_index, "edge index must be a non-negative integer, got '" + text + "'");
}

std::vector<Vertex> resolve(const Hypergraph& h, const std::vector<std::string>& labels) {
  std::vector<Vertex> out;
  for (const auto& l : labels) out.push_back(h.index_of(l));
  return out;
}

struct Options {
  std::string file;
  std::string second;
  std::string out_path;
  bool multi = false;
  bool csv = false;
  bool pretty = false;
  bool no_exact = false;

  // gen
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 2;
  std::string sizes = "2:3";
  std::uint64_t seed = 1;
  bool tree = false;

  // op
  std::string vertex;
  std::string index;
  std::string left;
  std::vector<std::string> cuts;

  // binop
  std::string binop;

  // verify
  verify::Config verify;
  std::string verify_sizes = "2:4";
  std::size_t verify_k = 0;
};

class Runner {
 public:
  Runner(const Options& o, std::istream& in, std::ostream& out) : o_(o), in_(in), out_(out) {}

  Hypergraph load(const std::string& path) const {
    const Mode mode = o_.multi ? Mode::multi : Mode::strict;
    if (path == "-") return parse_hypergraph(in_, mode);
    return load_hypergraph(path, mode);
  }

  void emit_hg(const Hypergraph& h, const std::vector<std::string>& header) const {
    const std::string text = serialize(h, header);
    if (o_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(o_.out_path);
    if (!file) fail(ErrorCode::bad_params, "cannot write '" + o_.out_path + "'");
    file << text;
  }

  int info() const {
    const Hypergraph h = load(o_.file);
    Json j;
    j["n"] = h.num_vertices();
    j["m"] = h.num_edges();
    j["mode"] = h.mode() == Mode::strict ? "strict" : "multi";
    if (h.num_edges()) {
      const auto rs = rank_corank(h);
      j["rank"] = rs.rank;
      j["corank"] = rs.corank;
    } else {
      j["rank"] = nullptr;
      j["corank"] = nullptr;
    }
    if (h.num_vertices()) {
      const auto stats = degree_stats(h);
      j["max_degree"] = stats.max;
      j["min_degree"] = stats.min;
      const auto& avg = stats.average;
      if (avg.denominator() == 1) j["average_degree"] = avg.numerator();
      else j["average_degree"] = std::to_string(avg.numerator()) + "/" + std::to_string(avg.denominator());
      j["regular"] = stats.max == stats.min;
    }
    j["zagreb"] = zagreb(h);
    if (auto k = uniformity(h)) j["uniformity"] = *k;
    else j["uniformity"] = nullptr;
    j["linear"] = is_linear(h);
    j["components"] = count_components(h);
    j["connected"] = is_connected(h);
    j["hypertree"] = is_hypertree(h);
    out_ << j.dump() << '\n';
    return kOk;
  }

  EnergyReport energy_report(const Hypergraph& h) const {
    EnergyOptions opts;
    opts.exact = !o_.no_exact;
    return energy(h, opts);
  }

  int spectrum() const {
    const Hypergraph h = load(o_.file);
    const auto report = energy_report(h);
    if (o_.csv) {
      out_ << "index,eigenvalue\n";
      for (std::size_t i = 0; i < report.spectrum.values.size(); ++i)
        out_ << i + 1 << ',' << fmt(report.spectrum.values[i]) << '\n';
      return kOk;
    }
    if (o_.pretty) {
      out_ << "  #  eigenvalue\n";
      for (std::size_t i = 0; i < report.spectrum.values.size(); ++i) {
        char line[64];
        std::snprintf(line, sizeof line, "%3zu  %s\n", i + 1, fmt(report.spectrum.values[i]).c_str());
        out_ << line;
      }
      out_ << "energy  " << fmt(report.energy) << "  (" << to_string(report.parity.status) << ")\n";
      return kOk;
    }
    out_ << to_json(report).dump() << '\n';
    return kOk;
  }

  static Json alarms_json(double e) {
    Json alarms = Json::array();
    for (const auto& a : root_power_alarms(e))
      alarms.push_back({{"p", a.p}, {"q", a.q}, {"odd_part", a.odd_part},
                        {"deviation", report_number(a.deviation)}});
    return alarms;
  }

  int energy_verb() const {
    const Hypergraph h = load(o_.file);
    const auto report = energy_report(h);
    const Json full = to_json(report);
    Json j;
    j["energy"] = full["energy"];
    j["parity"] = full["parity"];
    j["exact_energy"] = full["exact_energy"];
    j["positive_sum"] = report_number(report.positive_sum);
    j["spectral_radius"] = report_number(report.spectral_radius);
    j["n"] = h.num_vertices();
    j["m"] = h.num_edges();
    out_ << j.dump() << '\n';
    return kOk;
  }

  int parity() const {
    const Hypergraph h = load(o_.file);
    const auto report = energy_report(h);
    const auto& cert = report.parity;
    Json j;
    j["status"] = to_string(cert.status);
    j["energy"] = report_number(report.energy);
    if (cert.exact_energy) j["exact_energy"] = cert.exact_energy->str();
    else j["exact_energy"] = nullptr;
    j["even"] = cert.status == ParityStatus::even_integer ? Json(cert.even) : Json(nullptr);
    Json roots = Json::array();
    for (const auto& r : cert.integer_roots) roots.push_back({r.value, r.multiplicity});
    j["integer_roots"] = std::move(roots);
    if (cert.residual && cert.residual->degree() > 0) j["residual"] = cert.residual->to_string();
    else j["residual"] = nullptr;
    j["root_power_alarms"] = alarms_json(report.energy);
    out_ << j.dump() << '\n';
    const bool violated = cert.status == ParityStatus::even_integer && !cert.even;
    return violated ? kVerificationFailed : kOk;
  }

  int bounds() const {
    const Hypergraph h = load(o_.file);
    const auto report = full_report(h);
    if (o_.pretty) {
      out_ << "energy " << fmt(report.energy) << "  lambda1 " << fmt(report.lambda1)
           << "  sum_squares " << fmt(report.sum_squares) << '\n';
      for (const auto& e : report.entries) {
        char line[160];
        std::snprintf(line, sizeof line, "%-24s %-5s %-11s %16s  %s\n", e.name.c_str(),
                      to_string(e.side).c_str(), to_string(e.target).c_str(), fmt(e.value).c_str(),
                      e.holds ? "holds" : "FAILS");
        out_ << line;
      }
      out_ << "b " << fmt(report.comparison.b) << "  B " << fmt(report.comparison.B) << "  "
           << to_string(report.comparison.verdict) << "  sharper: " << report.sharper_lemma << '\n';
    } else {
      out_ << to_json(report).dump() << '\n';
    }
    return report.all_hold() ? kOk : kVerificationFailed;
  }

  int verify_verb() const {
    verify::Config cfg = o_.verify;
    cfg.sizes = parse_sizes(o_.verify_sizes);
    if (o_.verify_k) cfg.k = o_.verify_k;
    if (cfg.trials == 0) fail(ErrorCode::bad_params, "--trials must be at least 1");
    if (cfg.sizes.min < 2 || cfg.sizes.min > cfg.sizes.max)
      fail(ErrorCode::bad_params, "--sizes must satisfy 2 <= MIN <= MAX");
    if (cfg.n_max < 2 || cfg.m_max < 1) fail(ErrorCode::bad_params, "--n-max >= 2 and --m-max >= 1");
    if (cfg.k && *cfg.k < 2) fail(ErrorCode::bad_params, "--k must be at least 2");
    std::vector<std::string> ids = cfg.theorems.empty() ? verify::theorem_ids() : cfg.theorems;
    for (const auto& id : ids)
      if (!verify::is_theorem_id(id)) fail(ErrorCode::bad_params, "unknown theorem id '" + id + "'");

    Json results = Json::array();
    std::size_t failed = 0;
    for (const auto& id : ids) {
      const auto r = verify::run(id, cfg);
      if (!r.report_only && !r.ok()) ++failed;
      results.push_back(verify::to_json(r));
    }
    Json j;
    j["seed"] = cfg.seed;
    j["trials"] = cfg.trials;
    j["theorems"] = std::move(results);
    j["failed_theorems"] = failed;
    out_ << j.dump() << '\n';
    return failed ? kVerificationFailed : kOk;
  }

  int gen(const std::string& kind, const std::string& command_line) const {
    Hypergraph h;
    if (kind == "star") {
      h = hyperstar({o_.n, o_.k});
    } else if (kind == "complete") {
      h = complete_kgraph(o_.n, o_.k);
    } else if (kind == "power") {
      h = power_graph(load(o_.file), o_.k);
    } else {
      const SizeRange sizes = parse_sizes(o_.sizes);
      h = o_.tree ? random_hypertree(o_.m, sizes, o_.seed) : random_hypergraph(o_.n, o_.m, sizes, o_.seed);
    }
    emit_hg(h, {"generated by: hyperspec " + command_line,
                "n = " + std::to_string(h.num_vertices()) + ", m = " + std::to_string(h.num_edges())});
    return kOk;
  }

  int op(const std::string& kind) const {
    const Hypergraph h = load(o_.file);
    Hypergraph result;
    GapReport gap;
    if (kind == "delete-vertex") {
      const Vertex v = h.index_of(o_.vertex);
      gap = vertex_deletion_check(h, v);
      result = delete_vertex(h, v);
    } else if (kind == "delete-edge") {
      const std::size_t e = parse_index(o_.index);
      gap = edge_deletion_check(h, e);
      result = delete_edge(h, e);
    } else if (kind == "divide") {
      const std::size_t e = parse_index(o_.index);
      h.edge(e);
      const auto left = resolve(h, split_list(o_.left, ','));
      const EdgeSplit split = split_off(h, e, left);
      gap = division_check(h, split);
      result = divide_edges(h, std::span(&split, 1));
    } else {
      WeakCutSpec cut;
      for (const auto& spec : o_.cuts) {
        const auto colon = spec.find(':');
        if (colon == std::string::npos)
          fail(ErrorCode::malformed_cut, "--split expects IDX:LABELS, got '" + spec + "'");
        const std::size_t e = parse_index(spec.substr(0, colon));
        h.edge(e);
        cut.push_back(split_off(h, e, resolve(h, split_list(spec.substr(colon + 1), ','))));
      }
      if (cut.empty()) fail(ErrorCode::malformed_cut, "weak-cut needs at least one --split");
      gap = weak_cut_energy_check(h, cut);
      result = divide_edges(h, cut);
    }
    const std::string gap_json = to_json(gap).dump();
    if (o_.out_path.empty()) {
      out_ << serialize(result) << "# gap: " << gap_json << '\n';
    } else {
      emit_hg(result, {});
      out_ << gap_json << '\n';
    }
    return gap.holds ? kOk : kVerificationFailed;
  }

  int binop() const {
    const Hypergraph a = load(o_.file);
    const Hypergraph b = load(o_.second);
    const bool sum = o_.binop == "sum";
    const Hypergraph r = sum ? direct_sum(a, b) : tensor_product(a, b);
    emit_hg(r, {std::string(sum ? "direct sum" : "product") + " of " + o_.file + " and " + o_.second});
    return kOk;
  }

 private:
  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
};

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Adjacency energy of hypergraphs", "hyperspec"};
  app.require_subcommand(1);

  auto add_file = [&o](CLI::App* sub) {
    sub->add_option("file", o.file, ".hg file, or - for stdin")->required();
    sub->add_flag("--multi", o.multi, "Accept multi-hypergraph input");
  };

  auto* info = app.add_subcommand("info", "Structural parameters");
  add_file(info);

  auto* spectrum = app.add_subcommand("spectrum", "Adjacency eigenvalues");
  add_file(spectrum);
  spectrum->add_flag("--csv", o.csv, "One eigenvalue per line");
  spectrum->add_flag("--pretty", o.pretty, "Human-readable table");
  spectrum->add_flag("--no-exact", o.no_exact, "Skip the exact characteristic polynomial");

  auto* energy = app.add_subcommand("energy", "Adjacency energy");
  add_file(energy);
  energy->add_flag("--no-exact", o.no_exact, "Skip the parity certificate");

  auto* bounds = app.add_subcommand("bounds", "Energy bounds report");
  add_file(bounds);
  bounds->add_flag("--pretty", o.pretty, "Human-readable table");

  auto* parity = app.add_subcommand("parity", "Exact parity certificate");
  add_file(parity);

  auto* verify = app.add_subcommand("verify", "Run theorem property suites");
  verify->add_option("--theorem", o.verify.theorems, "Theorem id (repeatable)");
  verify->add_option("--trials", o.verify.trials, "Trials per suite");
  verify->add_option("--seed", o.verify.seed, "Random seed");
  verify->add_option("--n-max", o.verify.n_max, "Largest vertex count");
  verify->add_option("--m-max", o.verify.m_max, "Largest edge count");
  verify->add_option("--sizes", o.verify_sizes, "Edge size range MIN:MAX");
  verify->add_option("--k", o.verify_k, "Uniformity for sum/product suites");

  auto* gen = app.add_subcommand("gen", "Generate a hypergraph");
  gen->require_subcommand(1);
  auto add_out = [&o](CLI::App* sub) { sub->add_option("--out", o.out_path, "Write the .hg here"); };
  auto* gen_star = gen->add_subcommand("star", "Hyperstar (S_n)^k");
  gen_star->add_option("--n", o.n, "Vertices of the base star")->required();
  gen_star->add_option("--k", o.k, "Uniformity");
  add_out(gen_star);
  auto* gen_complete = gen->add_subcommand("complete", "Complete k-graph");
  gen_complete->add_option("--n", o.n, "Vertices")->required();
  gen_complete->add_option("--k", o.k, "Uniformity")->required();
  add_out(gen_complete);
  auto* gen_power = gen->add_subcommand("power", "Power graph of a 2-graph");
  gen_power->add_option("--base", o.file, "Base graph .hg")->required();
  gen_power->add_option("--k", o.k, "Uniformity")->required();
  add_out(gen_power);
  auto* gen_random = gen->add_subcommand("random", "Seeded random hypergraph");
  gen_random->add_option("--n", o.n, "Vertices");
  gen_random->add_option("--m", o.m, "Edges")->required();
  gen_random->add_option("--sizes", o.sizes, "Edge size range MIN:MAX");
  gen_random->add_option("--seed", o.seed, "Random seed");
  gen_random->add_flag("--tree", o.tree, "Random hypertree with m edges");
  add_out(gen_random);

  auto* op = app.add_subcommand("op", "Edge and vertex surgery with energy gap report");
  op->require_subcommand(1);
  auto* op_dv = op->add_subcommand("delete-vertex", "Remove a vertex");
  add_file(op_dv);
  op_dv->add_option("vertex", o.vertex, "Vertex label")->required();
  add_out(op_dv);
  auto* op_de = op->add_subcommand("delete-edge", "Remove an edge");
  add_file(op_de);
  op_de->add_option("index", o.index, "0-based edge index")->required();
  add_out(op_de);
  auto* op_div = op->add_subcommand("divide", "Divide one edge");
  add_file(op_div);
  op_div->add_option("index", o.index, "0-based edge index")->required();
  op_div->add_option("--left", o.left, "Comma-separated labels of one half")->required();
  add_out(op_div);
  auto* op_wc = op->add_subcommand("weak-cut", "Divide along a weak cut");
  add_file(op_wc);
  op_wc->add_option("--split", o.cuts, "IDX:LABELS, repeatable")->required();
  add_out(op_wc);

  auto* binop = app.add_subcommand("binop", "Sum or product of two k-graphs");
  binop->add_option("kind", o.binop, "sum or product")->required()->check(CLI::IsMember({"sum", "product"}));
  binop->add_option("first", o.file, "First operand")->required();
  binop->add_option("second", o.second, "Second operand")->required();
  binop->add_flag("--multi", o.multi, "Accept multi-hypergraph input");
  add_out(binop);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "UsageError", e.what());
    return kUsage;
  }

  Runner runner(o, in, out);
  try {
    if (*info) return runner.info();
    if (*spectrum) return runner.spectrum();
    if (*energy) return runner.energy_verb();
    if (*bounds) return runner.bounds();
    if (*parity) return runner.parity();
    if (*verify) return runner.verify_verb();
    if (*gen) {
      for (auto* sub : {gen_star, gen_complete, gen_power, gen_random})
        if (*sub) return runner.gen(sub->get_name(), join(args));
    }
    if (*op) {
      for (auto* sub : {op_dv, op_de, op_div, op_wc})
        if (*sub) return runner.op(sub->get_name());
    }
    if (*binop) return runner.binop();
  } catch (const Error& e) {
    report_error(err, to_string(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    report_error(err, "InternalError", e.what());
    return kInvalidInput;
  }
  report_error(err, "UsageError", "no command given");
  return kUsage;
}

}  // namespace hyperspec::cli
