#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <iostream>
#include <map>

#include "biplane/error.hpp"
#include "biplane/io.hpp"

namespace biplane::cli {
namespace {

using Params = std::map<std::string, int>;

int to_int(std::string_view s, const std::string& what) {
  int value = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || p != s.data() + s.size())
    throw CLI::ValidationError(what, "'" + std::string(s) + "' is not an integer");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    size_t at = s.find(sep, start);
    out.push_back(s.substr(start, at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

// "k=3" "n=2" or "k=3,n=2"
Params parse_params(const std::vector<std::string>& raw) {
  Params out;
  for (const auto& item : raw) {
    for (auto kv : split(item, ',')) {
      if (kv.empty()) continue;
      auto eq = kv.find('=');
      if (eq == std::string_view::npos) throw CLI::ValidationError("--params", "expected key=value, got " + std::string(kv));
      out[std::string(kv.substr(0, eq))] = to_int(kv.substr(eq + 1), "--params");
    }
  }
  return out;
}

int need(const Params& p, const std::string& key, const std::string& family) {
  auto it = p.find(key);
  if (it == p.end()) throw CLI::ValidationError("--params", "family " + family + " needs " + key + "=...");
  return it->second;
}

Drawing generate(const std::string& family, const Params& p) {
  if (family == "tube") return gen_tube(need(p, "k", family));
  if (family == "box") return gen_box(need(p, "k", family), need(p, "n", family));
  if (family == "two-strips") return gen_two_strips(need(p, "k", family));
  if (family == "odd") return gen_odd(need(p, "v", family));
  if (family == "extremal") return gen_extremal(need(p, "v", family));
  if (family == "kab") return gen_complete_bipartite(need(p, "a", family), need(p, "b", family));
  throw CLI::ValidationError("--family", "unknown family " + family);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_file(path, text);
}

Drawing load_drawing(const std::string& path) { return drawing_from_json(parse_json(read_file(path))); }

// Names the witness when it is a complete bipartite graph, which is the usual
// case at the maximum.
std::string graph_name(const ColoredGraph& g) {
  const int v = g.num_vertices();
  for (int a = 1; a <= v / 2; ++a) {
    if (a * (v - a) == g.num_edges() && isomorphic(g, complete_bipartite(a, v - a)))
      return "K_{" + std::to_string(a) + "," + std::to_string(v - a) + "}";
  }
  return "";
}

struct Chain {
  int m = 0;
  std::int64_t lb = 0;
  std::vector<int> hosts;
};

// "3:1,5,7" means cr(K_{3,3}) >= 1, then hosts 5 and 7.
Chain parse_chain(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--chain", "expected m:lb,host,...");
  Chain c;
  c.m = to_int(std::string_view(s).substr(0, colon), "--chain");
  auto rest = split(std::string_view(s).substr(colon + 1), ',');
  c.lb = to_int(rest[0], "--chain");
  for (size_t i = 1; i < rest.size(); ++i) c.hosts.push_back(to_int(rest[i], "--chain"));
  if (c.hosts.empty()) throw CLI::ValidationError("--chain", "no host sizes given");
  return c;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Drawings of bipartite 1-planar graphs", "biplane"};
  app.require_subcommand(1);

  std::string family, out_path, svg_path, file, graph_path, format = "json", chain;
  std::vector<std::string> params;
  int level = 5, v = 0, jobs = 1;
  std::optional<int> max_crossings;
  std::optional<double> timeout;
  bool decomposition = false;

  auto* gen = app.add_subcommand("generate", "Build a drawing from a named family");
  gen->add_option("--family", family, "tube | box | two-strips | odd | extremal | kab")->required();
  gen->add_option("--params", params, "key=value, e.g. k=3 or a=3,b=4");
  gen->add_option("--out", out_path, "Output file (default stdout)");
  gen->add_option("--svg", svg_path, "Also render an SVG");

  auto* ver = app.add_subcommand("verify", "Check drawing conditions 1..level");
  ver->add_option("--level", level)->check(CLI::Range(1, 5));
  ver->add_option("file", file)->required();

  auto* ana = app.add_subcommand("analyze", "Structural analysis of an extremal drawing");
  ana->add_option("file", file)->required();
  ana->add_option("--svg", svg_path, "Render the decomposition");

  auto* dec = app.add_subcommand("decide", "Exhaustive 1-planarity search");
  dec->add_option("--graph", graph_path)->required();
  dec->add_option("--max-crossings", max_crossings);
  dec->add_option("--timeout", timeout, "Seconds");
  dec->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* bet = app.add_subcommand("beta", "Maximum edge count on v vertices");
  bet->add_option("--v", v)->required()->check(CLI::Range(4, 1 << 20));
  bet->add_option("--timeout", timeout, "Seconds");
  bet->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* crb = app.add_subcommand("crbound", "Counting lower bound chain for cr(K_{3,n})");
  crb->add_option("--chain", chain, "m:lb,host,... e.g. 3:1,5,7")->required();

  app.add_subcommand("refute-k37", "Certificate that K_{3,7} is not 1-planar");

  auto* exp = app.add_subcommand("export", "Re-emit a drawing as json, svg or dot");
  exp->add_option("file", file)->required();
  exp->add_option("--format", format)->check(CLI::IsMember({"json", "svg", "dot"}));
  exp->add_flag("--decomposition", decomposition, "SVG of G' with one layer per part");
  exp->add_option("--out", out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      Drawing d = generate(family, parse_params(params));
      emit(dump(to_json(d)), out_path, out);
      if (!svg_path.empty()) write_file(svg_path, render_svg(d));
      return kOk;
    }
    if (ver->parsed()) {
      auto report = verify(load_drawing(file), level);
      out << dump(to_json(report));
      return report.all_passed() ? kOk : kFailed;
    }
    if (ana->parsed()) {
      Drawing d = load_drawing(file);
      auto report = analyze(d);
      out << dump(to_json(report));
      if (!svg_path.empty()) write_file(svg_path, render_decomposition_svg(d));
      for (const auto& f : report.failures) err << "failed: " << f << "\n";
      return report.ok() ? kOk : kFailed;
    }
    if (dec->parsed()) {
      ColoredGraph g = graph_from_json(parse_json(read_file(graph_path)));
      SearchOptions opts;
      opts.max_crossings = max_crossings;
      opts.timeout_seconds = timeout;
      opts.jobs = jobs;
      auto result = decide_one_planar(g, opts);
      out << dump(to_json(result));
      return result.timeout() ? kTimeout : kOk;
    }
    if (bet->parsed()) {
      Json j;
      j["v"] = v;
      j["beta"] = beta(v);
      BetaSearchOptions opts;
      if (v <= opts.max_v) {
        opts.timeout_seconds = timeout;
        opts.jobs = jobs;
        auto result = beta_exhaustive(v, opts);
        Json ex = to_json(result);
        if (result.witness_graph) ex["witness_name"] = graph_name(*result.witness_graph);
        j["exhaustive"] = ex;
        out << dump(j);
        if (result.timed_out) return kTimeout;
        return result.beta == beta(v) ? kOk : kFailed;
      }
      j["exhaustive"] = nullptr;
      out << dump(j);
      return kOk;
    }
    if (crb->parsed()) {
      Chain c = parse_chain(chain);
      out << dump(to_json(cr_counting_chain(c.m, c.lb, c.hosts)));
      return kOk;
    }
    if (app.got_subcommand("refute-k37")) {
      auto r = refute_k37();
      out << dump(to_json(r));
      return r.contradiction ? kOk : kFailed;
    }
    if (exp->parsed()) {
      Drawing d = load_drawing(file);
      std::string text;
      if (format == "json")
        text = dump(to_json(d));
      else if (format == "dot")
        text = render_dot(d);
      else
        text = decomposition ? render_decomposition_svg(d) : render_svg(d);
      emit(text, out_path, out);
      return kOk;
    }
  } catch (const CLI::ValidationError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::Timeout ? kTimeout : kFailed;
  }
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace biplane::cli
