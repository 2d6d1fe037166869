// Command-line front end: load a graph definition, reduce words, measure
// distances, run the verifier suites, classify, and export DOT renderings.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gp/ball.hpp"
#include "gp/coset.hpp"
#include "gp/electrify.hpp"
#include "gp/graph_io.hpp"
#include "gp/proto.hpp"
#include "gp/verifier.hpp"
#include "gp/word.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

gp::Subgraph parse_subgraph(const gp::DefiningGraph& g,
                            const std::string& csv) {
  if (csv.empty()) return g.all_vertices();
  gp::Subgraph out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    const auto v = g.find_vertex(cur);
    if (!v) throw gp::ParseError("unknown vertex '" + cur + "'");
    out = out.with(*v);
    cur.clear();
  };
  for (char c : csv) {
    if (c == ',')
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

int electrified_distance(const gp::DefiningGraph& g, const gp::NormalForm& x,
                         const gp::NormalForm& y, int cap) {
  const gp::NormalForm z = multiply(invert(x), y);
  if (z.is_identity()) return 0;
  const auto ball = enumerate_ball(g, gp::NormalForm::identity(g),
                                   z.syllable_length(), cap, 500'000);
  const auto eball = electrify(ball);
  const int zi = ball.find(z);
  if (zi < 0 || eball.edist[zi] < 0)
    throw gp::ResourceError("element escapes the enumerated ball");
  return eball.edist[zi];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph-product geometry toolkit"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string word_x, word_y, metric = "syl", subgraph_csv, target;
  std::string report_out, dot_out, proto_in, proto_out;
  std::vector<std::string> suites;
  gp::VerifierConfig cfg;
  long sigma = 37;
  bool inject_fault = false;  // test fixture: corrupts one gate image
  bool electrified_dot = false;

  auto* reduce_cmd = app.add_subcommand("reduce", "canonical normal form");
  reduce_cmd->add_option("--graph", graph_path)->required();
  reduce_cmd->add_option("word", word_x, "word text or named element")
      ->required();

  auto* dist_cmd = app.add_subcommand("dist", "distance between elements");
  dist_cmd->add_option("--graph", graph_path)->required();
  dist_cmd->add_option("--metric", metric)
      ->check(CLI::IsMember({"word", "syl", "subgraph", "electrified"}));
  dist_cmd->add_option("--subgraph", subgraph_csv,
                       "comma-separated vertices (subgraph metric)");
  dist_cmd->add_option("--cap", cfg.cap);
  dist_cmd->add_option("x", word_x)->required();
  dist_cmd->add_option("y", word_y)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run verifier suites");
  verify_cmd->add_option("--graph", graph_path)->required();
  verify_cmd->add_option("--suite", suites, "suite names or 'all'");
  verify_cmd->add_option("--radius", cfg.radius);
  verify_cmd->add_option("--cap", cfg.cap);
  verify_cmd->add_option("--sample-radius", cfg.sample_radius);
  verify_cmd->add_option("--sigma", sigma);
  verify_cmd->add_option("--jobs", cfg.jobs);
  verify_cmd->add_option("--seed", cfg.seed);
  verify_cmd->add_option("--triangles", cfg.slim_triangles);
  verify_cmd->add_option("--report-out", report_out, "JSON report path");
  verify_cmd->add_option("--export-dot", dot_out,
                         "ball DOT rendering with hyperplane classes");
  verify_cmd->add_flag("--inject-fault", inject_fault)->group("");

  auto* classify_cmd = app.add_subcommand("classify", "run a classifier");
  classify_cmd->add_option("--graph", graph_path)->required();
  classify_cmd
      ->add_option("--target", target)
      ->check(CLI::IsMember({"meier", "electrification", "quasiline",
                             "minsquare"}))
      ->required();

  auto* export_cmd = app.add_subcommand("export", "DOT rendering of a ball");
  export_cmd->add_option("--graph", graph_path)->required();
  export_cmd->add_option("--radius", cfg.radius);
  export_cmd->add_option("--cap", cfg.cap);
  export_cmd->add_option("--out", dot_out)->required();
  export_cmd->add_flag("--electrified", electrified_dot);

  auto* proto_cmd =
      app.add_subcommand("proto", "proto-structure file operations");
  std::string proto_op;
  proto_cmd->add_option("op", proto_op)
      ->check(CLI::IsMember({"validate", "complete"}))
      ->required();
  proto_cmd->add_option("--in", proto_in)->required();
  proto_cmd->add_option("--out", proto_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (proto_cmd->parsed()) {
      std::ifstream in(proto_in);
      if (!in) throw gp::ParseError(proto_in + ": cannot open file");
      std::ostringstream buf;
      buf << in.rdbuf();
      gp::ProtoStructure ps = gp::proto_from_json_text(buf.str());
      const auto rep = gp::validate(ps);
      for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
      if (proto_op == "validate") {
        std::cout << (rep.pass() ? "valid" : "invalid") << "\n";
        return rep.pass() ? kExitPass : kExitViolation;
      }
      if (!rep.pass()) return kExitViolation;
      const gp::ProtoStructure done = gp::complete(ps);
      const auto out_text = gp::proto_to_json_text(done);
      if (proto_out.empty())
        std::cout << out_text << "\n";
      else
        std::ofstream(proto_out) << out_text;
      std::cout << "completed: " << ps.size() << " -> " << done.size()
                << " domains\n";
      return kExitPass;
    }

    const gp::GraphDefinition def = gp::load_graph_file(graph_path);
    const gp::DefiningGraph& g = def.graph;

    if (reduce_cmd->parsed()) {
      std::cout << def.element(word_x).text() << "\n";
      return kExitPass;
    }

    if (dist_cmd->parsed()) {
      const gp::NormalForm x = def.element(word_x);
      const gp::NormalForm y = def.element(word_y);
      if (metric == "word")
        std::cout << d_word(x, y) << "\n";
      else if (metric == "syl")
        std::cout << d_syl(x, y) << "\n";
      else if (metric == "subgraph")
        std::cout << d_subgraph(parse_subgraph(g, subgraph_csv), x, y) << "\n";
      else
        std::cout << electrified_distance(g, x, y, cfg.cap) << "\n";
      return kExitPass;
    }

    if (verify_cmd->parsed()) {
      if (suites.empty()) suites = {"all"};
      std::vector<gp::CheckReport> reports;
      if (inject_fault) {
        // test fixture: maps the identity's image in the top domain far away
        const int reps = cfg.radius + 3;
        const gp::GateOverride corrupt =
            [&g, reps](const gp::DomainClass& d,
                       const gp::NormalForm& x)
            -> std::optional<gp::NormalForm> {
          if (d.lam == g.all_vertices() && x.is_identity()) {
            gp::NormalForm far = d.rep;
            for (int t = 0; t < reps; ++t)
              for (gp::VertexId v : d.lam.vertices())
                far = multiply(far, gp::NormalForm::syllable(g, {v, 1}));
            return far;
          }
          return std::nullopt;
        };
        reports.push_back(gp::check_projection_axiom(g, cfg, corrupt));
      } else {
        reports = gp::run_suite(g, cfg, suites, sigma);
      }
      bool ok = true;
      for (const auto& r : reports) {
        std::cout << r.summary() << "\n";
        ok = ok && r.pass();
      }
      if (!report_out.empty())
        std::ofstream(report_out) << gp::reports_to_json_text(reports);
      if (!dot_out.empty()) {
        const auto ball = enumerate_ball(g, gp::NormalForm::identity(g),
                                         cfg.radius, cfg.cap,
                                         cfg.ball_budget);
        std::ofstream(dot_out) << ball_to_dot(ball, hyperplanes(ball));
      }
      return ok ? kExitPass : kExitViolation;
    }

    if (classify_cmd->parsed()) {
      if (target == "meier") {
        const auto v = g.meier_hyperbolic();
        std::cout << (v.hyperbolic ? "hyperbolic"
                                   : "not hyperbolic: " + v.witness)
                  << "\n";
      } else if (target == "electrification") {
        std::cout << gp::classify_boundedness(g).text << "\n";
      } else if (target == "quasiline") {
        std::cout << gp::classify_quasiline(g).text << "\n";
      } else {
        const auto mins = g.minsquare_subgraphs();
        if (mins.empty())
          std::cout << "none\n";
        else
          for (const auto& m : mins)
            std::cout << g.subgraph_text(m) << "\n";
      }
      return kExitPass;
    }

    if (export_cmd->parsed()) {
      const auto ball = enumerate_ball(g, gp::NormalForm::identity(g),
                                       cfg.radius, cfg.cap, cfg.ball_budget);
      std::ofstream out(dot_out);
      if (electrified_dot)
        out << electrified_to_dot(electrify(ball));
      else
        out << ball_to_dot(ball, hyperplanes(ball));
      return kExitPass;
    }
  } catch (const gp::ResourceError& e) {
    std::cerr << "resource budget exceeded: " << e.what() << "\n";
    return kExitResource;
  } catch (const gp::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
