#include "cli.hpp"

#include "manycolour/construct.hpp"
#include "manycolour/evaluate.hpp"
#include "manycolour/guarantee.hpp"
#include "manycolour/hypergraph.hpp"
#include "manycolour/oracle.hpp"
#include "manycolour/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace manycolour::cli {

using nlohmann::json;

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

struct Args {
  std::uint32_t jobs = 1;
  std::string out_path;
  std::string in_path;
  std::string log_path;
  std::string name;
  std::string kind = "f";
  std::uint32_t d = 0, n = 0, p = 0, r = 0, s = 0, u = 0, x = 0, k = 1, m = 0;
  std::uint64_t seed = 0, edges = 0;
  std::uint32_t count = 1, max_draws = 1000, max_n = 0, max_r = 0;
  bool allow_large = false, vertex_sym = false, census = false, desk = false, list = false;
};

// Collects the primary output so its hash can go into the manifest.
class Sink {
 public:
  explicit Sink(std::ostream& out) : out_(out) {}

  void emit(const std::string& text, const std::string& path) {
    output_ += text;
    if (path.empty())
      out_ << text;
    else
      write_file(path, text);
  }

  const std::string& output() const { return output_; }

 private:
  std::ostream& out_;
  std::string output_;
};

std::string dump(const json& j) { return j.dump() + "\n"; }

EdgeColouring load_colouring(const std::string& path) { return deserialize<EdgeColouring>(read_file(path)); }
Hypergraph load_hypergraph(const std::string& path) { return deserialize<Hypergraph>(read_file(path)); }

json score_json(const Score& score) {
  return json{{"value", score.value},
              {"argmax_colours", to_json(score.colours)},
              {"witness", score.witness},
              {"exact", score.exact}};
}

json seeded_line(std::uint64_t seed, const json& fields) {
  json line = fields;
  line["seed"] = seed;
  return line;
}

void append_manifest(const std::string& subcommand, const json& params, std::optional<std::uint64_t> seed,
                     const std::string& output, int code) {
  const char* env = std::getenv("RUN_LOG");
  const std::string path = env && *env ? env : kDefaultRunLog;
  json line{{"subcommand", subcommand},
            {"params", params},
            {"seed", seed ? json(*seed) : json(nullptr)},
            {"versions", {{"manycolour", kVersion}, {"compiler", __VERSION__}, {"openmp", _OPENMP}}},
            {"output_hash", "fnv1a64:" + fnv1a_hex(output)},
            {"exit_code", code}};
  std::ofstream log(path, std::ios::app);
  if (log) log << line.dump() << '\n';
}

// Subcommand path and the options given on it.
void describe(const CLI::App& app, std::string& path, json& params) {
  for (const CLI::Option* opt : app.get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help" || opt->get_name() == "-h,--help") continue;
    std::string key = opt->get_name();
    key.erase(0, key.find_first_not_of('-'));
    const auto& res = opt->results();
    params[key] = res.size() == 1 ? json(res.front()) : json(res);
  }
  const auto subs = app.get_subcommands();
  if (subs.empty()) return;
  path += path.empty() ? subs.front()->get_name() : " " + subs.front()->get_name();
  describe(*subs.front(), path, params);
}

EdgeColouring colouring_or_hypergraph(const Hypergraph& h, const Args& a, Sink& sink) {
  if (a.n == 0) {
    sink.emit(dump(to_json(h)), a.out_path);
    return {};
  }
  auto c = hypergraph_colouring(h, a.n);
  sink.emit(dump(to_json(c)), a.out_path);
  return c;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Args a;
  Sink sink(out);
  std::function<void()> action;
  std::optional<std::uint64_t> seed_used;

  CLI::App app{"Few-colour connectivity toolkit: constructions, evaluators, guarantees, samplers and exact oracles"};
  app.add_option("--jobs", a.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  // ---- construct ----
  auto* construct = app.add_subcommand("construct", "generate colourings and certificate hypergraphs");
  construct->require_subcommand(1);
  auto* cube = construct->add_subcommand("cube", "Z_2^d difference colouring blown up to n vertices");
  cube->add_option("--d", a.d)->required();
  cube->add_option("--n", a.n)->required();
  cube->add_option("--out", a.out_path)->required();
  cube->callback([&] { action = [&] { sink.emit(dump(to_json(cube_colouring(a.d, a.n))), a.out_path); }; });

  auto* plane = construct->add_subcommand("plane", "PG(2,p) hypergraph, or its colouring with --n");
  plane->add_option("--p", a.p)->required();
  plane->add_option("--n", a.n, "blow up to a colouring of K_n");
  plane->add_option("--out", a.out_path)->required();
  plane->callback([&] { action = [&] { colouring_or_hypergraph(projective_plane_hypergraph(a.p), a, sink); }; });

  auto* hyper_c = construct->add_subcommand("hyper", "colouring of K_n from an intersecting hypergraph");
  hyper_c->add_option("--in", a.in_path)->required();
  hyper_c->add_option("--n", a.n)->required();
  hyper_c->add_option("--out", a.out_path)->required();
  hyper_c->callback([&] {
    action = [&] { sink.emit(dump(to_json(hypergraph_colouring(load_hypergraph(a.in_path), a.n))), a.out_path); };
  });

  auto* complete = construct->add_subcommand("complete", "complete u-uniform hypergraph, or its colouring with --n");
  complete->add_option("--r", a.r)->required();
  complete->add_option("--u", a.u)->required();
  complete->add_option("--n", a.n);
  complete->add_option("--out", a.out_path)->required();
  complete->callback([&] { action = [&] { colouring_or_hypergraph(complete_uniform_hypergraph(a.r, a.u), a, sink); }; });

  auto* catalogue = construct->add_subcommand("catalogue", "named certificate hypergraph, or its colouring with --n");
  auto* name_opt = catalogue->add_option("--name", a.name);
  catalogue->add_option("--n", a.n);
  auto* cat_out = catalogue->add_option("--out", a.out_path);
  catalogue->add_flag("--list", a.list, "print the catalogue");
  name_opt->needs(cat_out);
  catalogue->callback([&] {
    action = [&] {
      if (a.list || a.name.empty()) {
        json list = json::array();
        for (const auto& e : catalogue_entries())
          list.push_back({{"name", e.name},
                          {"description", e.description},
                          {"subset_size", e.subset_size},
                          {"min_edges", e.min_edges}});
        sink.emit(dump(list), "");
        return;
      }
      colouring_or_hypergraph(certificate_catalogue(a.name), a, sink);
    };
  });

  auto* random_base = construct->add_subcommand("random-base", "random K_m base with few-colour components, blown up");
  random_base->add_option("--r", a.r)->required();
  random_base->add_option("--s", a.s)->required();
  random_base->add_option("--n", a.n)->required();
  random_base->add_option("--seed", a.seed)->required();
  random_base->add_option("--max-draws", a.max_draws);
  random_base->add_option("--out", a.out_path)->required();
  random_base->callback([&] {
    action = [&] {
      seed_used = a.seed;
      const auto res = random_base_blowup(a.r, a.s, a.n, a.seed, a.max_draws);
      sink.emit(dump(to_json(res.colouring)), a.out_path);
      err << json{{"base_value", res.base_value}, {"threshold", res.threshold}, {"draws", res.draws}}.dump() << '\n';
    };
  });

  // ---- eval ----
  auto* eval = app.add_subcommand("eval", "exact val_f / val_g / val_f_k of a colouring");
  eval->add_option("--colouring", a.in_path)->required();
  eval->add_option("--s", a.s)->required();
  auto* k_opt = eval->add_option("--k", a.k, "connectivity level (0 = touched, 1 = connected)");
  eval->add_option("--kind", a.kind)->check(CLI::IsMember({"f", "g"}));
  eval->add_flag("--allow-large", a.allow_large);
  eval->add_option("--out", a.out_path);
  eval->callback([&] {
    action = [&, k_opt] {
      const auto c = load_colouring(a.in_path);
      const EvalOptions opts{a.allow_large};
      Score score;
      if (k_opt->count() > 0)
        score = val_f_k(c, a.s, a.k, opts);
      else
        score = kind_from_string(a.kind) == Kind::kF ? val_f(c, a.s, opts) : val_g(c, a.s, opts);
      sink.emit(dump(score_json(score)), a.out_path);
    };
  });

  // ---- guarantee ----
  auto* guarantee = app.add_subcommand("guarantee", "constructive lower-bound witnesses");
  guarantee->require_subcommand(1);
  auto* lower_g = guarantee->add_subcommand("lower-g", "colour set touching many vertices (k = 0)");
  lower_g->add_option("--colouring", a.in_path)->required();
  lower_g->add_option("--s", a.s)->required();
  auto* d_opt = lower_g->add_option("--d", a.d, "degree parameter; default: best over all valid d");
  lower_g->add_option("--out", a.out_path);
  lower_g->callback([&] {
    action = [&, d_opt] {
      const auto c = load_colouring(a.in_path);
      std::optional<GuaranteeReport> best;
      const auto ds = d_opt->count() > 0 ? std::vector<std::uint32_t>{a.d} : valid_lower_g_degrees(c.r(), a.s);
      if (ds.empty()) throw DomainError("no valid d: need s <= d < r - s");
      for (auto d : ds) {
        auto rep = best_colour_set_d(c, a.s, d);
        if (!best || rep.claimed_bound > best->claimed_bound) best = std::move(rep);
      }
      sink.emit(dump(to_json(*best)), a.out_path);
    };
  });
  auto* augment = guarantee->add_subcommand("augment", "greedy colour augmentation (k = 1)");
  augment->add_option("--colouring", a.in_path)->required();
  augment->add_option("--s", a.s)->required();
  augment->add_option("--out", a.out_path);
  augment->callback([&] {
    action = [&] { sink.emit(dump(to_json(greedy_augment(load_colouring(a.in_path), a.s))), a.out_path); };
  });
  auto* contract = guarantee->add_subcommand("contract", "iterated extraction and contraction");
  contract->add_option("--colouring", a.in_path)->required();
  contract->add_option("--s", a.s)->required();
  contract->add_option("--k", a.k);
  contract->add_flag("--desk", a.desk, "report an uncertified witness when n is too small for k");
  contract->add_option("--out", a.out_path);
  contract->callback([&] {
    action = [&] {
      const auto rep = iterated_contraction(load_colouring(a.in_path), a.s, a.k, ContractionOptions{!a.desk});
      sink.emit(dump(to_json(rep)), a.out_path);
    };
  });

  // ---- hyper ----
  auto* hyper = app.add_subcommand("hyper", "hypergraph checks and samplers");
  hyper->require_subcommand(1);
  auto* check = hyper->add_subcommand("check", "intersecting test");
  check->add_option("--in", a.in_path)->required();
  check->add_option("--out", a.out_path);
  check->callback([&] {
    action = [&] {
      const auto res = is_intersecting(load_hypergraph(a.in_path));
      json j{{"intersecting", res.intersecting}};
      if (res.disjoint_pair) j["disjoint_pair"] = {res.disjoint_pair->first, res.disjoint_pair->second};
      sink.emit(dump(j), a.out_path);
    };
  });
  auto* cover = hyper->add_subcommand("cover", "exact cover number");
  cover->add_option("--in", a.in_path)->required();
  cover->add_flag("--allow-large", a.allow_large);
  cover->add_option("--out", a.out_path);
  cover->callback([&] {
    action = [&] {
      const auto tau = cover_number(load_hypergraph(a.in_path), GuardOptions{a.allow_large});
      sink.emit(dump(json{{"cover_number", tau}}), a.out_path);
    };
  });
  auto* subsets = hyper->add_subcommand("subsets", "fewest edges inside an m-subset");
  subsets->add_option("--in", a.in_path)->required();
  subsets->add_option("--m", a.m)->required();
  subsets->add_flag("--allow-large", a.allow_large);
  subsets->add_option("--out", a.out_path);
  subsets->callback([&] {
    action = [&] {
      const auto res = min_edges_in_subsets(load_hypergraph(a.in_path), a.m, GuardOptions{a.allow_large});
      sink.emit(dump(json{{"m", a.m}, {"t", res.t}, {"worst_subset", to_json(res.worst)}}), a.out_path);
    };
  });
  auto* sample_u = hyper->add_subcommand("sample-uniform", "m uniform u-subsets; JSON line per seed");
  sample_u->add_option("--r", a.r)->required();
  sample_u->add_option("--s", a.s)->required();
  sample_u->add_option("--seed", a.seed)->required();
  auto* u_opt = sample_u->add_option("--u", a.u, "uniformity (default 8s)");
  auto* m_opt = sample_u->add_option("--edges", a.edges, "edge count (default floor(e^{u^2/(2r)}))");
  sample_u->add_option("--count", a.count, "consecutive seeds to sample");
  sample_u->add_option("--out", a.out_path);
  sample_u->callback([&] {
    action = [&, u_opt, m_opt] {
      seed_used = a.seed;
      UniformSampleOptions opts;
      if (u_opt->count() > 0) opts.u = a.u;
      if (m_opt->count() > 0) opts.m = a.edges;
      const auto samples = uniform_sample_batch(a.r, a.s, a.seed, a.count, opts);
      std::string text;
      for (std::uint32_t i = 0; i < samples.size(); ++i) {
        const auto& smp = samples[i];
        const bool meets = smp.success() ? Rational(static_cast<std::int64_t>(smp.m)) >=
                                               double_count_lower_bound(a.r, a.s, smp.u)
                                         : true;
        text += dump(seeded_line(a.seed + i, {{"r", a.r},
                                              {"s", a.s},
                                              {"u", smp.u},
                                              {"m", smp.m},
                                              {"intersecting", smp.intersecting},
                                              {"cover_exceeds_s", smp.cover_exceeds_s},
                                              {"success", smp.success()},
                                              {"meets_double_count", meets},
                                              {"hypergraph", to_json(smp.hypergraph)}}));
      }
      sink.emit(text, a.out_path);
    };
  });
  auto* sample_x = hyper->add_subcommand("sample-exclusion", "Bernoulli exclusion process; JSON line per seed");
  sample_x->add_option("--r", a.r)->required();
  sample_x->add_option("--x", a.x)->required();
  sample_x->add_option("--seed", a.seed)->required();
  sample_x->add_option("--count", a.count, "consecutive seeds to sample");
  sample_x->add_option("--out", a.out_path);
  sample_x->callback([&] {
    action = [&] {
      seed_used = a.seed;
      const auto samples = exclusion_sample_batch(a.r, a.x, a.seed, a.count);
      std::string text;
      for (std::uint32_t i = 0; i < samples.size(); ++i)
        text += dump(seeded_line(a.seed + i, {{"r", a.r},
                                              {"x", a.x},
                                              {"edges", samples[i].edge_count()},
                                              {"intersecting", is_intersecting(samples[i]).intersecting},
                                              {"hypergraph", to_json(samples[i])}}));
      sink.emit(text, a.out_path);
    };
  });
  auto* bound = hyper->add_subcommand("bound", "double-counting edge lower bound C(r,s)/C(r-u,s)");
  bound->add_option("--r", a.r)->required();
  bound->add_option("--s", a.s)->required();
  bound->add_option("--u", a.u)->required();
  bound->add_option("--out", a.out_path);
  bound->callback([&] {
    action = [&] {
      const auto q = double_count_lower_bound(a.r, a.s, a.u);
      sink.emit(dump(json{{"bound", to_json(q)}, {"ceil", ceil(q)}}), a.out_path);
    };
  });

  // ---- oracle ----
  auto* oracle = app.add_subcommand("oracle", "exact f(n,r,s) / g(n,r,s) by exhaustive search");
  oracle->add_option("--n", a.n);
  oracle->add_option("--r", a.r);
  oracle->add_option("--s", a.s);
  oracle->add_option("--kind", a.kind)->check(CLI::IsMember({"f", "g"}));
  oracle->add_flag("--vertex-sym", a.vertex_sym, "keep only vertex-canonical extremal colourings");
  oracle->add_flag("--allow-large", a.allow_large);
  oracle->add_flag("--census", a.census, "CSV table over all cells up to --max-n, --max-r");
  oracle->add_option("--max-n", a.max_n);
  oracle->add_option("--max-r", a.max_r);
  oracle->add_option("--out", a.out_path);
  oracle->callback([&] {
    action = [&] {
      const OracleOptions opts{a.allow_large, a.vertex_sym};
      if (a.census) {
        if (a.max_n == 0 || a.max_r == 0) throw CLI::ValidationError("--census needs --max-n and --max-r");
        sink.emit(census_csv(census(a.max_n, a.max_r, opts)), a.out_path);
        return;
      }
      if (a.n == 0 || a.r == 0 || a.s == 0) throw CLI::ValidationError("oracle needs --n, --r and --s");
      sink.emit(dump(to_json(exact_value(a.n, a.r, a.s, kind_from_string(a.kind), opts))), a.out_path);
    };
  });

  std::string path;
  json params = json::object();
  int code = 0;
  try {
    app.parse(argc, argv);
    describe(app, path, params);
    omp_set_num_threads(static_cast<int>(a.jobs));
    if (action) action();
  } catch (const CLI::ParseError& e) {
    describe(app, path, params);
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    code = 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    code = 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    code = 2;
  }
  append_manifest(path, params, seed_used, sink.output(), code);
  return code;
}

}  // namespace manycolour::cli
