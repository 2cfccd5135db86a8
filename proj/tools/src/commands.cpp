#include "severi/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>

#include "CLI11.hpp"
#include "json.hpp"
#include "severi/cli/dot.hpp"
#include "severi/cli/poly_expr.hpp"
#include "severi/error.hpp"
#include "severi/lattice.hpp"
#include "severi/partition.hpp"
#include "severi/symplectic.hpp"
#include "severi/weierstrass.hpp"

namespace severi::cli {

namespace {

using nlohmann::json;

json json_integer(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

json lattice_json(const Sublattice2& l) {
  return {{"a", json_integer(l.a())}, {"b", json_integer(l.b())}, {"c", json_integer(l.c())},
          {"label", l.to_string()}};
}

Integer parse_integer(const std::string& text, const std::string& flag) {
  static const std::regex pattern("[+-]?[0-9]+");
  if (!std::regex_match(text, pattern)) {
    throw CLI::ValidationError(flag, "expected an integer, got '" + text + "'");
  }
  return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

Partition parse_partition(const std::string& text) {
  static const std::regex part(R"(\(\s*([0-9]+)\s*,\s*([0-9]+)\s*,\s*([0-9]+)\s*\))");
  static const std::regex whole(R"(\s*\[\s*(\(\s*[0-9]+\s*,\s*[0-9]+\s*,\s*[0-9]+\s*\)\s*,?\s*)*\]\s*)");
  if (!std::regex_match(text, whole)) {
    raise(ErrorCode::InvalidArgument, "partition must look like [(a,b,c),(a,b,c),...], got '" + text + "'");
  }
  std::vector<Sublattice2> parts;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), part); it != std::sregex_iterator(); ++it) {
    parts.emplace_back(Integer((*it)[1].str(), 10), Integer((*it)[2].str(), 10),
                       Integer((*it)[3].str(), 10));
  }
  return Partition(std::move(parts));
}

Precision parse_precision(const std::string& text) {
  if (text == "exact") return Precision::exact();
  const Integer n = parse_integer(text, "--precision");
  if (n < 1 || !n.fits_slong_p()) throw CLI::ValidationError("--precision", "must be a positive term count or 'exact'");
  return Precision::finite(n.get_si());
}

WeierstrassPoly read_poly(const std::string& text, const Precision& precision) {
  const auto first = text.find_first_not_of(" \t\n");
  WeierstrassPoly p = first != std::string::npos && text[first] == '{' ? parse_poly_json(text)
                                                                         : parse_poly(text);
  return WeierstrassPoly(p.poly().truncated(precision));
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  file << contents;
  if (!file) throw std::ios_base::failure("failed writing '" + path + "'");
}

struct Options {
  bool json_output = false;

  std::uint64_t index = 0;
  std::string d_text;
  std::string g_text;

  std::uint64_t d = 0;
  std::uint64_t k = 0;
  std::string dot_path;
  std::string csv_path;
  std::string from;
  std::uint64_t bound = kDefaultSublattice4Bound;

  std::string poly;
  std::int64_t mu = 1;
  std::int64_t mu_max = 1;
  std::uint64_t max_rounds = kDefaultMaxRounds;
  std::string precision = std::to_string(kDefaultPrecisionTerms);
  std::string polygon_precision = "exact";
  bool trace = false;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  void lat_enum() {
    const auto lattices = enumerate_by_index(opt_.index);
    if (!opt_.csv_path.empty()) {
      std::string csv = "a,b,c,index\n";
      for (const auto& l : lattices) {
        csv += l.a().get_str() + "," + l.b().get_str() + "," + l.c().get_str() + "," +
               l.index().get_str() + "\n";
      }
      write_file(opt_.csv_path, csv);
    }
    if (opt_.json_output) {
      json doc{{"index", opt_.index}, {"count", lattices.size()}, {"lattices", json::array()}};
      for (const auto& l : lattices) doc["lattices"].push_back(lattice_json(l));
      emit(doc);
      return;
    }
    out_ << "index=" << opt_.index << "\ncount=" << lattices.size() << "\n";
    for (const auto& l : lattices) out_ << l.to_string() << "\n";
  }

  void lat_count() {
    const Integer d = parse_integer(opt_.d_text, "--d");
    const Integer g = parse_integer(opt_.g_text, "--g");
    const Integer count = count_components_formula(d, g);
    if (opt_.json_output) {
      emit({{"d", json_integer(d)}, {"g", json_integer(g)}, {"count", json_integer(count)}});
      return;
    }
    out_ << count.get_str() << "\n";
  }

  void part_enum() {
    const auto partitions = enumerate_partitions(opt_.d, opt_.k);
    if (!opt_.csv_path.empty()) {
      std::string csv = "partition,length,degree\n";
      for (const auto& p : partitions) {
        csv += "\"" + p.to_string() + "\"," + std::to_string(p.length()) + "," + p.degree().get_str() + "\n";
      }
      write_file(opt_.csv_path, csv);
    }
    if (opt_.json_output) {
      json doc{{"d", opt_.d}, {"k", opt_.k}, {"count", partitions.size()}, {"partitions", json::array()}};
      for (const auto& p : partitions) doc["partitions"].push_back(p.to_string());
      emit(doc);
      return;
    }
    out_ << "count=" << partitions.size() << "\n";
    for (const auto& p : partitions) out_ << p.to_string() << "\n";
  }

  void part_graph() {
    const PartitionGraph graph = partition_graph(opt_.d, opt_.k);
    maybe_write_dot(graph);
    if (opt_.json_output) {
      json doc{{"d", opt_.d}, {"k", opt_.k}, {"vertices", json::array()}, {"edges", json::array()}};
      for (const auto& v : graph.vertices) doc["vertices"].push_back(v.to_string());
      for (const auto& [i, j] : graph.edges) doc["edges"].push_back({i, j});
      emit(doc);
      return;
    }
    out_ << "vertices=" << graph.vertices.size() << "\nedges=" << graph.edges.size() << "\n";
    for (const auto& [i, j] : graph.edges) {
      out_ << graph.vertices[i].to_string() << " -- " << graph.vertices[j].to_string() << "\n";
    }
  }

  void part_connected() {
    const auto components = connected_components(opt_.d, opt_.k);
    if (!opt_.dot_path.empty()) maybe_write_dot(partition_graph(opt_.d, opt_.k));
    if (opt_.json_output) {
      json doc{{"d", opt_.d}, {"k", opt_.k}, {"components", components.size()},
               {"sizes", json::array()}, {"members", json::array()}};
      for (const auto& c : components) {
        doc["sizes"].push_back(c.size());
        json members = json::array();
        for (const auto& p : c) members.push_back(p.to_string());
        doc["members"].push_back(std::move(members));
      }
      emit(doc);
      return;
    }
    out_ << "components=" << components.size() << "\n";
    for (const auto& c : components) out_ << "size=" << c.size() << "\n";
  }

  void part_path() {
    const Partition start = opt_.from.empty() ? witness_partition(opt_.d, opt_.k) : parse_partition(opt_.from);
    if (!opt_.from.empty() && (start.length() != opt_.k || start.degree() != opt_.d)) {
      raise(ErrorCode::ShapeMismatch, "--from has length " + std::to_string(start.length()) +
                                          " and degree " + start.degree().get_str() + ", expected k=" +
                                          std::to_string(opt_.k) + " and d=" + std::to_string(opt_.d));
    }
    const auto chain = canonical_path(start);
    const Partition* prev = &start;
    for (const auto& q : chain) {
      if (!is_edge(*prev, q)) {
        raise(ErrorCode::InvalidMove, "path step " + prev->to_string() + " -> " + q.to_string() + " is not an edge");
      }
      prev = &q;
    }
    if (opt_.json_output) {
      json doc{{"d", opt_.d}, {"k", opt_.k}, {"from", start.to_string()}, {"to", prev->to_string()},
               {"length", chain.size()}, {"verified", true}, {"chain", json::array()}};
      for (const auto& q : chain) doc["chain"].push_back(q.to_string());
      emit(doc);
      return;
    }
    out_ << "from=" << start.to_string() << "\nto=" << prev->to_string() << "\nlength=" << chain.size() << "\n";
    for (const auto& q : chain) out_ << q.to_string() << "\n";
  }

  void symp_verify() {
    const LemmaReport r = verify_lemma_equivalence(Integer(static_cast<unsigned long>(opt_.d)), opt_.k, opt_.bound);
    if (opt_.json_output) {
      json doc{{"d", json_integer(r.d)},
               {"k", json_integer(r.k)},
               {"total", r.total},
               {"count_cond1", r.count_cond1},
               {"count_cond2", r.count_cond2},
               {"equivalent", r.equivalent}};
      if (r.counterexample) doc["counterexample"] = r.counterexample->to_string();
      emit(doc);
      return;
    }
    out_ << "d=" << r.d.get_str() << "\nk=" << r.k.get_str() << "\ntotal=" << r.total
         << "\ncount_cond1=" << r.count_cond1 << "\ncount_cond2=" << r.count_cond2
         << "\nequivalent=" << (r.equivalent ? "true" : "false") << "\n";
    if (r.counterexample) out_ << "counterexample=" << r.counterexample->to_string() << "\n";
  }

  void game_play() {
    const WeierstrassPoly p = read_poly(opt_.poly, parse_precision(opt_.precision));
    const GameState state = play_game(p, opt_.mu, opt_.max_rounds);
    if (!opt_.csv_path.empty()) {
      std::string csv = "step,kind,alpha,status\n";
      for (const auto& s : state.trace) {
        csv += std::to_string(s.step) + "," + to_string(s.kind) + "," +
               (s.alpha ? to_fraction_string(*s.alpha) : "") + "," + to_string(s.status) + "\n";
      }
      write_file(opt_.csv_path, csv);
    }
    if (opt_.json_output) {
      json doc{{"mu", opt_.mu},
               {"max_rounds", opt_.max_rounds},
               {"status", to_string(state.status)},
               {"steps_taken", state.steps_taken},
               {"current", json::parse(poly_to_json(state.current))}};
      if (opt_.trace) {
        doc["trace"] = json::array();
        for (const auto& s : state.trace) {
          json step{{"step", s.step}, {"kind", to_string(s.kind)}, {"status", to_string(s.status)}};
          if (s.alpha) step["alpha"] = to_fraction_string(*s.alpha);
          doc["trace"].push_back(std::move(step));
        }
      }
      emit(doc);
      return;
    }
    out_ << "status=" << to_string(state.status) << "\nsteps_taken=" << state.steps_taken << "\n";
    if (opt_.trace) {
      for (const auto& s : state.trace) {
        out_ << "step=" << s.step << " kind=" << to_string(s.kind);
        if (s.alpha) out_ << " alpha=" << to_fraction_string(*s.alpha);
        out_ << " status=" << to_string(s.status) << "\n";
      }
    }
  }

  void game_polygon() {
    const WeierstrassPoly p = read_poly(opt_.poly, parse_precision(opt_.polygon_precision));
    const auto segments = newton_polygon(p);
    if (opt_.json_output) {
      json doc{{"segments", json::array()}};
      for (const auto& s : segments) {
        doc["segments"].push_back({{"slope", to_fraction_string(s.slope)}, {"length", s.length}});
      }
      emit(doc);
      return;
    }
    out_ << "segments=" << segments.size() << "\n";
    for (const auto& s : segments) {
      out_ << "slope=" << to_fraction_string(s.slope) << " length=" << s.length << "\n";
    }
  }

  void game_findmu() {
    const WeierstrassPoly p = read_poly(opt_.poly, parse_precision(opt_.precision));
    const auto mu = find_mu_search(p, opt_.mu_max, opt_.max_rounds);
    if (opt_.json_output) {
      json doc{{"mu_max", opt_.mu_max}, {"status", mu ? "Found" : "NotFound"}};
      doc["mu"] = mu ? json(*mu) : json(nullptr);
      emit(doc);
      return;
    }
    out_ << "mu=" << (mu ? std::to_string(*mu) : std::string("NotFound")) << "\n";
  }

 private:
  void emit(const json& doc) { out_ << doc.dump(2) << "\n"; }

  void maybe_write_dot(const PartitionGraph& graph) {
    if (opt_.dot_path.empty()) return;
    const std::string dot = export_dot(graph);
    if (opt_.dot_path == "-") {
      out_ << dot;
    } else {
      write_file(opt_.dot_path, dot);
    }
  }

  const Options& opt_;
  std::ostream& out_;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Sublattice, partition-graph, isogeny-lemma and Weierstrass-game toolkit", "severi"};
  app.require_subcommand(1);
  // lets --json appear after the subcommand
  app.fallthrough();
  app.add_flag("--json", opt.json_output, "Structured JSON on standard output");

  auto* lat = app.add_subcommand("lat", "Sublattices of Z^2")->require_subcommand(1);
  auto* lat_enum = lat->add_subcommand("enum", "List all sublattices of a given index");
  lat_enum->add_option("--index", opt.index, "Index N")->required()->check(CLI::PositiveNumber);
  lat_enum->add_option("--csv", opt.csv_path, "Also write a CSV file");
  auto* lat_count = lat->add_subcommand("count", "Evaluate the component-count formula");
  lat_count->add_option("--d", opt.d_text, "Polarization degree d")->required();
  lat_count->add_option("--g", opt.g_text, "Genus g, 3 <= g <= d+1")->required();

  auto* part = app.add_subcommand("part", "Partitions of Z^2 and their graph")->require_subcommand(1);
  std::vector<CLI::App*> part_cmds;
  for (const char* name : {"enum", "graph", "connected", "path"}) {
    auto* cmd = part->add_subcommand(name);
    cmd->add_option("--d", opt.d, "Degree d")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--k", opt.k, "Length k")->required()->check(CLI::PositiveNumber);
    part_cmds.push_back(cmd);
  }
  part_cmds[0]->description("Enumerate partitions of degree d and length k");
  part_cmds[0]->add_option("--csv", opt.csv_path, "Also write a CSV file");
  part_cmds[1]->description("Vertices and edges of the partition graph");
  part_cmds[1]->add_option("--dot", opt.dot_path, "Write DOT to FILE ('-' for standard out)");
  part_cmds[2]->description("Connected components of the partition graph");
  part_cmds[2]->add_option("--dot", opt.dot_path, "Write DOT to FILE ('-' for standard out)");
  part_cmds[3]->description("Edge path from a partition to the canonical one");
  part_cmds[3]->add_option("--from", opt.from, "Start partition, e.g. [(1,0,1),(2,1,1)]; default: witness");

  auto* symp = app.add_subcommand("symp", "Isogeny lemma on Z^4")->require_subcommand(1);
  auto* symp_verify = symp->add_subcommand("verify", "Compare both conditions on every index-k sublattice");
  symp_verify->add_option("--d", opt.d, "Polarization type (1,d)")->required()->check(CLI::PositiveNumber);
  symp_verify->add_option("--k", opt.k, "Sublattice index k")->required()->check(CLI::PositiveNumber);
  symp_verify->add_option("--bound", opt.bound, "Largest enumerable index")->capture_default_str();

  auto* game = app.add_subcommand("game", "Weierstrass polynomials and the nu/tau game")->require_subcommand(1);
  auto* play = game->add_subcommand("play", "Play the game on p(t^mu, x)");
  play->add_option("--poly", opt.poly, "Polynomial expression or structured JSON")->required();
  play->add_option("--mu", opt.mu, "Base change exponent")->required()->check(CLI::PositiveNumber);
  play->add_option("--max-rounds", opt.max_rounds, "Round budget")->capture_default_str()->check(CLI::PositiveNumber);
  play->add_option("--precision", opt.precision, "Known t-coefficients, or 'exact'")->capture_default_str();
  play->add_flag("--trace", opt.trace, "Print every step");
  play->add_option("--csv", opt.csv_path, "Write the trace as CSV");
  auto* polygon = game->add_subcommand("polygon", "Newton polygon");
  polygon->add_option("--poly", opt.poly, "Polynomial expression or structured JSON")->required();
  polygon->add_option("--precision", opt.polygon_precision, "Known t-coefficients, or 'exact'")->capture_default_str();
  auto* findmu = game->add_subcommand("findmu", "Smallest winning base change");
  findmu->add_option("--poly", opt.poly, "Polynomial expression or structured JSON")->required();
  findmu->add_option("--mu-max", opt.mu_max, "Largest mu to try")->required()->check(CLI::PositiveNumber);
  findmu->add_option("--max-rounds", opt.max_rounds, "Round budget per game")->capture_default_str()->check(CLI::PositiveNumber);
  findmu->add_option("--precision", opt.precision, "Known t-coefficients, or 'exact'")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, err, err);
    return kExitUsageError;
  }

  Runner run(opt, out);
  try {
    if (lat_enum->parsed()) run.lat_enum();
    else if (lat_count->parsed()) run.lat_count();
    else if (part_cmds[0]->parsed()) run.part_enum();
    else if (part_cmds[1]->parsed()) run.part_graph();
    else if (part_cmds[2]->parsed()) run.part_connected();
    else if (part_cmds[3]->parsed()) run.part_path();
    else if (symp_verify->parsed()) run.symp_verify();
    else if (play->parsed()) run.game_play();
    else if (polygon->parsed()) run.game_polygon();
    else if (findmu->parsed()) run.game_findmu();
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return kExitDomainError;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsageError;
  } catch (const std::ios_base::failure& e) {
    err << "error: IoError: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace severi::cli
