// mondepth: exact certificates and depth sequences for powers of monomial
// ideals. See README.md for the file formats and the exit-code contract.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mondepth/cache.hpp"
#include "mondepth/explore.hpp"
#include "mondepth/hilbert.hpp"
#include "mondepth/ideal_io.hpp"
#include "mondepth/report.hpp"
#include "mondepth/version.hpp"

using namespace mondepth;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kResource = 2, kInternal = 3 };

struct GlobalOpts {
  std::string format = "text";
  std::string field_spec;  // empty = take the document's field
  std::string cache_dir;
  bool no_cache = false;
  ResourceLimits limits;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Field effective_field(const GlobalOpts& g, const IdealDocument& doc) {
  return g.field_spec.empty() ? doc.field : parse_field(g.field_spec);
}

void emit(const GlobalOpts& g, const Report& r) {
  if (g.format == "json")
    std::cout << r.to_json_string();
  else
    std::cout << r.to_text();
}

// Certificate-bearing keys get mirrored into a dedicated report section so
// offline re-verification does not need to know each command's output shape.
Json extract_certificates(const Json& outputs) {
  static const char* keys[] = {"witness",           "hilbert_basis", "certificate",
                               "saturation_basis",  "normality",     "hvector",
                               "negative_index"};
  Json c = Json::object();
  for (const char* k : keys)
    if (outputs.contains(k)) c[k] = outputs[k];
  for (const char* nested : {"summand", "rees_cm"})
    if (outputs.contains(nested)) {
      Json inner = extract_certificates(outputs[nested]);
      if (!inner.empty()) c[nested] = inner;
    }
  return c;
}

// Runs one subcommand body with caching and timing; returns the exit code.
// `post` maps the outputs to an exit code (partial results return kResource);
// only clean runs are cached, so a cache hit is always a complete report.
int run_reported(const GlobalOpts& g, const std::string& command, const Json& inputs,
                 const std::function<Json()>& body,
                 const std::function<int(const Json&)>& post = {}) {
  CacheConfig cache{g.no_cache ? std::string() : g.cache_dir};
  std::string key_material =
      std::string(kVersion) + "|" + command + "|" + inputs.dump();
  if (auto hit = cache_lookup(cache, key_material)) {
    Report r;
    r.doc = *hit;
    r.doc["cached"] = true;
    emit(g, r);
    return kOk;
  }
  auto t0 = std::chrono::steady_clock::now();
  Json outputs = body();
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  int code = post ? post(outputs) : kOk;
  Report r = make_report(command, inputs, std::move(outputs));
  Json certs = extract_certificates(r.doc["outputs"]);
  if (!certs.empty()) r.doc["certificates"] = certs;
  if (r.doc["inputs"].contains("field")) r.doc["field"] = r.doc["inputs"]["field"];
  r.doc["timing_ms"] = ms;
  if (code == kOk) cache_store(cache, key_material, r.doc);
  emit(g, r);
  return code;
}

Json ideal_inputs(const IdealDocument& doc, const Field& f, Json params = Json::object()) {
  Json in;
  in["ideal"] = to_json(doc.ideal());
  in["field"] = f.name();
  in["params"] = std::move(params);
  return in;
}

IntMat parse_vector_list(const std::string& spec, const std::string& what) {
  // "1,0;0,1" -> rows {[1,0],[0,1]}
  IntMat rows;
  std::stringstream outer(spec);
  std::string row;
  while (std::getline(outer, row, ';')) {
    std::vector<Int> v;
    std::stringstream inner(row);
    std::string tok;
    while (std::getline(inner, tok, ',')) {
      try {
        v.push_back(Int(tok));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad integer '" + tok + "' in " + what);
      }
    }
    if (v.empty()) throw std::invalid_argument("empty row in " + what);
    rows.push_back(std::move(v));
  }
  if (rows.empty()) throw std::invalid_argument(what + " must be nonempty");
  return rows;
}

std::vector<std::vector<int>> parse_blocks(const std::string& spec, int nvars) {
  // per-variable block ids "1,1,2"; a single id broadcasts to all variables
  std::vector<int> ids;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      ids.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad block id '" + tok + "'");
    }
  }
  if (ids.size() == 1) ids.assign(nvars, ids[0]);
  if (static_cast<int>(ids.size()) != nvars)
    throw std::invalid_argument("--blocks needs one id per variable (or a single id)");
  int s = 0;
  for (int b : ids) {
    if (b < 1) throw std::invalid_argument("block ids start at 1");
    s = std::max(s, b);
  }
  std::vector<std::vector<int>> blocks(s);
  for (int v = 0; v < nvars; ++v) blocks[ids[v] - 1].push_back(v);
  for (int b = 0; b < s; ++b)
    if (blocks[b].empty())
      throw std::invalid_argument("block " + std::to_string(b + 1) + " is empty");
  return blocks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact depth-functions, Rees certificates and summand checks "
               "for monomial ideals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  GlobalOpts g;
  const char* env_cache = std::getenv("MONDEPTH_CACHE_DIR");
  if (env_cache) g.cache_dir = env_cache;
  app.add_option("--format", g.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--field", g.field_spec, "computation field: rational or fp:<p>");
  app.add_option("--cache-dir", g.cache_dir,
                 "report cache directory (also via MONDEPTH_CACHE_DIR)");
  app.add_flag("--no-cache", g.no_cache, "ignore any configured cache");
  app.add_option("--limit-closure", g.limits.max_closure, "lcm-closure ceiling");
  app.add_option("--limit-basis", g.limits.max_basis, "completion set ceiling");
  app.add_option("--limit-candidates", g.limits.max_candidates,
                 "completion queue ceiling");
  app.add_option("--limit-enumeration", g.limits.max_enumeration,
                 "enumeration ceiling");

  std::string file;
  int max_power = 5;
  long degree_bound = 0;  // 0 = max(4(n+1), 20)
  int window = 4;

  auto add_ideal_arg = [&](CLI::App* cmd) {
    cmd->add_option("ideal", file, "ideal file (symbolic or JSON; '-' for stdin)")
        ->required();
  };

  auto* cmd_depth = app.add_subcommand("depth-function",
                                       "depth(S/I^k) for k = 1..max-power");
  add_ideal_arg(cmd_depth);
  cmd_depth->add_option("--max-power", max_power, "largest power (default 5)");

  auto* cmd_betti = app.add_subcommand("betti", "multigraded Betti table of S/I");
  add_ideal_arg(cmd_betti);

  auto* cmd_hilbert =
      app.add_subcommand("hilbert", "Hilbert series numerator of S/I");
  add_ideal_arg(cmd_hilbert);
  long count_degree = -1;
  cmd_hilbert->add_option("--count-degree", count_degree,
                          "also count monomials of this degree in and out of I");

  auto* cmd_dim = app.add_subcommand("dim", "Krull dimension of S/I");
  add_ideal_arg(cmd_dim);

  auto* cmd_summand = app.add_subcommand("summand",
                                         "is K[generators] a direct summand of S");
  add_ideal_arg(cmd_summand);

  auto* cmd_retract =
      app.add_subcommand("retract", "algebra-retract certificate for K[generators]");
  add_ideal_arg(cmd_retract);

  auto* cmd_hv = app.add_subcommand("rees-hvector", "h-vector of the Rees algebra");
  add_ideal_arg(cmd_hv);
  cmd_hv->add_option("--degree-bound", degree_bound,
                     "Hilbert function range (default max(4(n+1), 20))");
  cmd_hv->add_option("--window", window, "stabilization window (default 4)");

  auto* cmd_normal =
      app.add_subcommand("rees-normal", "normality of the Rees semigroup");
  add_ideal_arg(cmd_normal);

  auto* cmd_cm = app.add_subcommand("rees-cm", "Cohen-Macaulay certificate for R(I)");
  add_ideal_arg(cmd_cm);
  cmd_cm->add_option("--degree-bound", degree_bound, "h-vector degree bound");
  cmd_cm->add_option("--window", window, "stabilization window");

  auto* cmd_spread = app.add_subcommand("spread", "analytic spread of I");
  add_ideal_arg(cmd_spread);

  auto* cmd_degsel =
      app.add_subcommand("degree-selection", "build a degree-selection ideal");
  int ds_vars = 0;
  std::string ds_blocks, ds_subgroup;
  cmd_degsel->add_option("--vars", ds_vars, "number of variables")->required();
  cmd_degsel
      ->add_option("--blocks", ds_blocks,
                   "per-variable block ids, e.g. 1,1,2 (single id broadcasts)")
      ->required();
  cmd_degsel
      ->add_option("--subgroup", ds_subgroup,
                   "generators of H in Z^s, rows ';'-separated, e.g. 2 or 1,1;0,2")
      ->required();

  auto* cmd_analyze = app.add_subcommand(
      "analyze", "summand + Rees-CM certificates beside the depth sequence");
  add_ideal_arg(cmd_analyze);
  cmd_analyze->add_option("--max-power", max_power, "depth range (default 5)");
  cmd_analyze->add_option("--degree-bound", degree_bound, "h-vector degree bound");
  cmd_analyze->add_option("--window", window, "stabilization window");

  auto* cmd_explore = app.add_subcommand(
      "explore", "sweep square-free ideals for criterion and Q1/Q2 conformance");
  int ex_nmax = 4, ex_rmax = 3, ex_maxdeg = 3, ex_kmax = 4;
  long ex_budget = 600000;
  std::string ex_inject;
  cmd_explore->add_option("--nmax", ex_nmax, "max variables (default 4)");
  cmd_explore->add_option("--rmax", ex_rmax, "max generators (default 3)");
  cmd_explore->add_option("--max-degree", ex_maxdeg, "max generator degree (default 3)");
  cmd_explore->add_option("--max-power", ex_kmax, "depth range per ideal (default 4)");
  cmd_explore->add_option("--degree-bound", degree_bound, "h-vector degree bound");
  cmd_explore->add_option("--window", window, "stabilization window");
  cmd_explore->add_option("--budget-ms", ex_budget, "wall-clock budget (default 600000)");
  cmd_explore->add_option("--inject", ex_inject, "extra ideal file analyzed as a control");

  for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; }))
    sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    auto auto_bound = [&](int nvars) {
      return degree_bound > 0 ? degree_bound : std::max<long>(4L * (nvars + 1), 20);
    };

    if (app.got_subcommand(cmd_degsel)) {
      Field f = g.field_spec.empty() ? Field::rationals() : parse_field(g.field_spec);
      auto blocks = parse_blocks(ds_blocks, ds_vars);
      IntMat h = parse_vector_list(ds_subgroup, "--subgroup");
      Json params;
      params["vars"] = ds_vars;
      params["blocks"] = ds_blocks;
      params["subgroup"] = ds_subgroup;
      Json inputs;
      inputs["params"] = params;
      inputs["field"] = f.name();
      return run_reported(g, "degree-selection", inputs, [&] {
        MonomialIdeal I = degree_selection(blocks, h, ds_vars, f, g.limits);
        IdealDocument doc;
        doc.nvars = ds_vars;
        doc.field = f;
        doc.gens = I.gens();
        Json out;
        out["ideal"] = to_json(I);
        out["document"] = serialize_symbolic(doc);
        return out;
      });
    }

    if (app.got_subcommand(cmd_explore)) {
      ExploreParams p;
      p.nmax = ex_nmax;
      p.rmax = ex_rmax;
      p.maxdeg = ex_maxdeg;
      p.kmax = ex_kmax;
      p.degree_bound = degree_bound;
      p.window = window;
      p.budget_ms = ex_budget;
      p.field = g.field_spec.empty() ? Field::rationals() : parse_field(g.field_spec);
      p.limits = g.limits;
      if (!ex_inject.empty())
        p.injected.push_back(parse_ideal(read_input(ex_inject)).ideal());
      Json params;
      params["nmax"] = p.nmax;
      params["rmax"] = p.rmax;
      params["max_degree"] = p.maxdeg;
      params["max_power"] = p.kmax;
      params["budget_ms"] = p.budget_ms;
      params["window"] = p.window;
      params["degree_bound"] = p.degree_bound;
      params["injected"] = !ex_inject.empty();
      Json inputs;
      inputs["params"] = params;
      inputs["field"] = p.field.name();
      return run_reported(
          g, "explore", inputs, [&] { return to_json(explore_questions(p)); },
          [](const Json& out) {
            return out["budget_exhausted"] == true ? kResource : kOk;
          });
    }

    // Everything else takes an ideal file.
    IdealDocument doc = parse_ideal(read_input(file));
    Field f = effective_field(g, doc);
    MonomialIdeal I = doc.ideal();

    if (app.got_subcommand(cmd_depth)) {
      Json params;
      params["max_power"] = max_power;
      return run_reported(
          g, "depth-function", ideal_inputs(doc, f, params),
          [&] { return to_json(depth_function(I, max_power, f, g.limits)); },
          [](const Json& out) { return out["truncated"] == true ? kResource : kOk; });
    }
    if (app.got_subcommand(cmd_betti)) {
      return run_reported(g, "betti", ideal_inputs(doc, f), [&] {
        BettiTable t = betti_table(I, f, g.limits);
        Json out = to_json(t);
        out["depth"] = I.nvars() - t.projdim();
        return out;
      });
    }
    if (app.got_subcommand(cmd_hilbert)) {
      Json params;
      if (count_degree >= 0) params["count_degree"] = count_degree;
      return run_reported(g, "hilbert", ideal_inputs(doc, f, params), [&] {
        Json out;
        out["numerator"] = to_json(hilbert_numerator(I, nullptr, g.limits));
        out["denominator"] = "(1-t)^" + std::to_string(I.nvars());
        if (count_degree >= 0) {
          out["count_quotient"] =
              count_quotient(I, count_degree, nullptr, g.limits).get_str();
          out["count_in_ideal"] =
              count_in_ideal(I, count_degree, nullptr, g.limits).get_str();
        }
        return out;
      });
    }
    if (app.got_subcommand(cmd_dim)) {
      return run_reported(g, "dim", ideal_inputs(doc, f), [&] {
        int d = krull_dim(I, nullptr, g.limits);
        Json out;
        if (d < 0)
          out["dim"] = "undefined (unit ideal: the zero ring)";
        else
          out["dim"] = d;
        return out;
      });
    }
    if (app.got_subcommand(cmd_summand)) {
      return run_reported(
          g, "summand", ideal_inputs(doc, f),
          [&] { return to_json(is_summand(I, g.limits)); },
          [](const Json& out) { return out["holds"].is_boolean() ? kOk : kResource; });
    }
    if (app.got_subcommand(cmd_retract)) {
      return run_reported(g, "retract", ideal_inputs(doc, f), [&] {
        auto cert = retract_check(I);
        Json out;
        out["is_retract"] = cert.has_value();
        if (cert) out["certificate"] = to_json(*cert);
        return out;
      });
    }
    if (app.got_subcommand(cmd_hv)) {
      Json params;
      params["degree_bound"] = auto_bound(I.nvars());
      params["window"] = window;
      return run_reported(g, "rees-hvector", ideal_inputs(doc, f, params), [&] {
        return to_json(rees_hvector(I, auto_bound(I.nvars()), window, nullptr, g.limits));
      });
    }
    if (app.got_subcommand(cmd_normal)) {
      return run_reported(g, "rees-normal", ideal_inputs(doc, f), [&] {
        return to_json(rees_normality(I, g.limits));
      });
    }
    if (app.got_subcommand(cmd_cm)) {
      Json params;
      params["degree_bound"] = auto_bound(I.nvars());
      params["window"] = window;
      return run_reported(g, "rees-cm", ideal_inputs(doc, f, params), [&] {
        return to_json(rees_cm_status(I, auto_bound(I.nvars()), window, nullptr, g.limits));
      });
    }
    if (app.got_subcommand(cmd_spread)) {
      return run_reported(g, "spread", ideal_inputs(doc, f), [&] {
        Json out;
        out["analytic_spread"] = analytic_spread(I);
        return out;
      });
    }
    if (app.got_subcommand(cmd_analyze)) {
      Json params;
      params["max_power"] = max_power;
      params["degree_bound"] = auto_bound(I.nvars());
      params["window"] = window;
      return run_reported(
          g, "analyze", ideal_inputs(doc, f, params),
          [&] {
            return to_json(analyze_constant_depth(I, max_power, auto_bound(I.nvars()),
                                                  window, f, g.limits));
          },
          [](const Json& out) {
            return out["depth_function"]["truncated"] == true ? kResource : kOk;
          });
    }
    std::cerr << "mondepth: no subcommand dispatched\n";
    return kUsage;
  } catch (const ResourceLimitError& e) {
    Report r = make_report("error", Json::object(), Json::object());
    r.doc["error"] = e.what();
    r.doc["error_kind"] = "resource-limit";
    emit(g, r);
    std::cerr << "mondepth: " << e.what() << "\n";
    return kResource;
  } catch (const TheoremViolationError& e) {
    std::cerr << "mondepth: INTERNAL INVARIANT VIOLATION: " << e.what() << "\n"
              << "this contradicts a certified criterion; please report this run\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "mondepth: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "mondepth: internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "mondepth: " << e.what() << "\n";
    return kUsage;
  }
}
