// Command-line front end: verification, feasibility queries, generation,
// classification, catalog export, and lemma checks. Results go to stdout,
// diagnostics to stderr. Exit codes: 0 success/true, 1 property-false or
// check-failure, 2 usage error, 3 budget exhaustion.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sgsr/catalog.hpp"
#include "sgsr/classify.hpp"
#include "sgsr/feasibility.hpp"
#include "sgsr/formats.hpp"
#include "sgsr/json_io.hpp"
#include "sgsr/regular_gen.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GlobalFlags {
  bool json = false;
  bool quiet = false;
};

void diag(const GlobalFlags& flags, const std::string& msg) {
  if (!flags.quiet) std::cerr << msg << '\n';
}

sgsr::SignedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (path.size() > 3 && path.substr(path.size() - 3) == ".g6") {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
      if (!line.empty() && line[0] != '#') return sgsr::parse_graph6(line);
    throw std::runtime_error("no graph6 line in " + path);
  }
  return sgsr::parse_sg(text);
}

std::string params_line(const sgsr::SrsgParams& p) {
  auto opt = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("null");
  };
  return "(" + std::to_string(p.n) + "," + std::to_string(p.r) + "," +
         opt(p.a) + "," + opt(p.b) + "," + opt(p.c) + ")";
}

int cmd_verify(const GlobalFlags& flags, const std::string& file, bool params_only) {
  sgsr::SignedGraph g = load_graph(file);
  auto res = sgsr::check_srsg(g);
  if (params_only || flags.json) {
    std::cout << sgsr::to_json(res).dump() << '\n';
  } else if (std::holds_alternative<sgsr::SrsgParams>(res)) {
    const auto& p = std::get<sgsr::SrsgParams>(res);
    std::cout << "strongly regular: params " << params_line(p) << " class "
              << sgsr::to_string(sgsr::classify_class(p)) << '\n';
  } else {
    const auto& f = std::get<sgsr::CheckFailure>(res);
    std::cout << "not strongly regular: " << sgsr::to_string(f.kind);
    if (f.witness)
      std::cout << " at (" << f.witness->u << "," << f.witness->v << "): "
                << f.witness->expected << " vs " << f.witness->actual;
    std::cout << '\n';
  }
  return std::holds_alternative<sgsr::SrsgParams>(res) ? kExitOk : kExitFalse;
}

int cmd_lemma2(const GlobalFlags& flags, const std::string& file) {
  sgsr::SignedGraph g = load_graph(file);
  auto res = sgsr::lemma2_check(g);
  if (flags.json) {
    std::cout << sgsr::to_json(res).dump() << '\n';
  } else {
    switch (res.status) {
      case sgsr::Lemma2Result::Status::Holds:
        std::cout << "holds\n";
        break;
      case sgsr::Lemma2Result::Status::Violated:
        std::cout << "violated at (" << res.witness->first << ","
                  << res.witness->second << "): " << res.note << '\n';
        break;
      case sgsr::Lemma2Result::Status::PreconditionFailed:
        std::cout << "precondition failed: " << res.note << '\n';
        break;
    }
  }
  return res.holds() ? kExitOk : kExitFalse;
}

int cmd_feasible(const GlobalFlags& flags, const sgsr::ParamQuery& query) {
  auto cands = sgsr::enumerate_candidates(query);
  for (const auto& c : cands) {
    if (flags.json)
      std::cout << sgsr::to_json(c).dump() << '\n';
    else
      std::cout << sgsr::to_string(c) << '\n';
  }
  diag(flags, std::to_string(cands.size()) + " candidate tuples");
  return kExitOk;
}

int cmd_gen(const GlobalFlags& flags, int n, int r, const std::string& out_path) {
  std::ofstream out_file;
  if (!out_path.empty()) {
    out_file.open(out_path);
    if (!out_file) throw std::runtime_error("cannot open " + out_path);
  }
  long long count = 0;
  sgsr::Json lines = sgsr::Json::array();
  sgsr::gen_regular(n, r, [&](const sgsr::SignedGraph& g) {
    ++count;
    std::string g6 = sgsr::write_graph6(g);
    if (out_file.is_open())
      out_file << g6 << '\n';
    else if (!flags.json)
      std::cout << g6 << '\n';
    if (flags.json) lines.push_back(g6);
    return true;
  });
  if (flags.json)
    std::cout << sgsr::Json{{"n", n}, {"r", r}, {"count", count},
                            {"graphs", lines}}
                     .dump()
              << '\n';
  diag(flags, std::to_string(count) + " connected " + std::to_string(r) +
                  "-regular graphs on " + std::to_string(n) + " vertices");
  return kExitOk;
}

void classify_table(std::ostream& out, const sgsr::SearchReport& report) {
  out << "survivors: " << report.survivors.size()
      << (report.complete ? "" : " (INCOMPLETE: budget exceeded)") << '\n';
  for (const auto& s : report.survivors)
    out << "  n=" << s.params.n << " params " << params_line(s.params)
        << " class " << sgsr::to_string(s.label) << '\n';
  for (const auto& run : report.runs)
    out << "n=" << run.n << ": underlying " << run.underlying_count
        << ", signings " << run.signing_count << '\n';
  for (const auto& note : report.notes) out << "note: " << note << '\n';
}

int cmd_classify(const GlobalFlags& flags, const sgsr::ClassifyQuery& query) {
  auto report = sgsr::classify(query);
  if (flags.json) {
    std::cout << sgsr::to_json(report).dump() << '\n';
    if (!flags.quiet) classify_table(std::cerr, report);
  } else {
    classify_table(std::cout, report);
  }
  if (!report.complete) return kExitBudget;
  return kExitOk;
}

int cmd_catalog(const GlobalFlags& flags, const std::string& data_dir,
                const std::string& export_dir) {
  auto entries = sgsr::build_catalog(data_dir);
  auto verdicts = sgsr::verify_catalog(entries);
  bool all_ok = true;
  sgsr::Json out = sgsr::Json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& v = verdicts[i];
    all_ok = all_ok && v.ok;
    if (flags.json) {
      sgsr::Json j = sgsr::catalog_sidecar(entries[i]);
      j["ok"] = v.ok;
      j["problems"] = v.problems;
      out.push_back(std::move(j));
    } else {
      std::cout << (v.ok ? "PASS " : "FAIL ") << v.name << " "
                << params_line(entries[i].expected) << " "
                << sgsr::to_string(entries[i].expected_class) << '\n';
      for (const auto& p : v.problems) std::cout << "     " << p << '\n';
    }
  }
  if (flags.json) std::cout << out.dump() << '\n';
  if (!export_dir.empty()) {
    std::filesystem::create_directories(export_dir);
    for (const auto& e : entries) {
      std::ofstream sg(std::filesystem::path(export_dir) / (e.name + ".sg"));
      sg << sgsr::write_sg(e.graph);
      std::ofstream side(std::filesystem::path(export_dir) / (e.name + ".json"));
      side << sgsr::catalog_sidecar(e).dump(2) << '\n';
    }
    diag(flags, "exported " + std::to_string(entries.size()) + " entries to " +
                    export_dir);
  }
  return all_ok ? kExitOk : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signed-graph strong regularity toolkit"};
  app.require_subcommand(1);
  GlobalFlags flags;
  app.add_flag("--json", flags.json, "machine-readable output");
  app.add_flag("--quiet", flags.quiet, "suppress diagnostics");

  std::string file;
  auto* verify = app.add_subcommand("verify", "check a .sg/.g6 file");
  verify->add_option("file", file)->required();
  auto* params = app.add_subcommand("params", "emit parameters as JSON");
  params->add_option("file", file)->required();
  auto* lemma2 = app.add_subcommand("lemma2", "negative 2-walk parity check");
  lemma2->add_option("file", file)->required();

  sgsr::ParamQuery pq;
  auto* feasible = app.add_subcommand("feasible", "enumerate parameter tuples");
  feasible->add_option("--r", pq.r, "degree")->required();
  feasible->add_option("--net", pq.rho, "net-degree")->required();
  feasible->add_option("--nmax", pq.n_max, "largest order")->required();
  feasible->add_option("--nmin", pq.n_min, "smallest order");
  feasible->add_option("--amin", pq.a_min);
  feasible->add_option("--amax", pq.a_max);
  feasible->add_option("--bmin", pq.b_min);
  feasible->add_option("--bmax", pq.b_max);
  feasible->add_flag("--noncomplete", pq.require_noncomplete,
                     "drop complete candidates");
  feasible->add_flag("--paper-filters", pq.structural_filters,
                     "structural divisibility filters");

  int gen_n = 0, gen_r = 0;
  std::string g6_out;
  auto* gen = app.add_subcommand("gen", "generate connected regular graphs");
  gen->add_option("--n", gen_n, "order")->required();
  gen->add_option("--r", gen_r, "degree")->required();
  gen->add_option("--graph6-out", g6_out, "write graph6 lines to a file");

  sgsr::ClassifyQuery cq;
  std::string source = "generated", census_dir;
  bool constrained = false;
  auto* classify = app.add_subcommand("classify", "search for SRSGs");
  classify->add_option("--r", cq.r, "degree")->required();
  classify->add_option("--net", cq.rho, "net-degree")->required();
  classify->add_option("--nmax", cq.n_max, "largest order")->required();
  classify->add_option("--nmin", cq.n_min, "smallest order (default r+1)");
  classify->add_option("--source", source)
      ->check(CLI::IsMember({"generated", "census"}));
  classify->add_option("--census", census_dir,
                       "census directory (default $SGSR_CENSUS_DIR)");
  classify->add_flag("--constrained", constrained,
                     "parameter-constrained incremental search");
  classify->add_option("--jobs", cq.jobs, "worker threads (0 = all)");
  classify->add_flag("--paper-filters", cq.paper_filters);
  classify->add_option("--max-nodes", cq.max_nodes, "node budget (0 = off)");
  classify->add_option("--time-limit", cq.time_limit_s,
                       "wall-time budget in seconds (0 = off)");

  std::string data_dir, export_dir;
  auto* catalog = app.add_subcommand("catalog", "verify the seven SRSGs");
  catalog->add_option("--data", data_dir,
                      "fixture directory (default $SGSR_DATA_DIR)");
  catalog->add_option("--export", export_dir, "write .sg + sidecars here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(flags, file, false);
    if (params->parsed()) return cmd_verify(flags, file, true);
    if (lemma2->parsed()) return cmd_lemma2(flags, file);
    if (feasible->parsed()) return cmd_feasible(flags, pq);
    if (gen->parsed()) return cmd_gen(flags, gen_n, gen_r, g6_out);
    if (classify->parsed()) {
      cq.mode = constrained ? sgsr::SearchMode::Constrained
                            : sgsr::SearchMode::Full;
      cq.source = source == "census" ? sgsr::SearchSource::Census
                                     : sgsr::SearchSource::Generated;
      if (census_dir.empty())
        if (const char* env = std::getenv("SGSR_CENSUS_DIR")) census_dir = env;
      cq.census_dir = census_dir;
      return cmd_classify(flags, cq);
    }
    if (catalog->parsed()) {
      if (data_dir.empty())
        if (const char* env = std::getenv("SGSR_DATA_DIR")) data_dir = env;
      if (data_dir.empty()) data_dir = "data/catalog";
      return cmd_catalog(flags, data_dir, export_dir);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
