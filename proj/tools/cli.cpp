#include "cli.hpp"

#include <fnmatch.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "zlab/algebra.hpp"
#include "zlab/classify.hpp"
#include "zlab/error.hpp"
#include "zlab/io.hpp"
#include "zlab/lemmas.hpp"
#include "zlab/search.hpp"
#include "zlab/waid.hpp"

namespace zlab::cli {

namespace {

using nlohmann::json;

/// Bad command-line input detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, dot };

struct Common {
  Format format = Format::text;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool allow_size5 = false;
  bool unicode = false;
};

std::size_t size_cap(const Common& c) {
  if (const char* env = std::getenv("ZLAB_MAX_SIZE"); env && *env) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0) throw UsageError("ZLAB_MAX_SIZE must be a positive integer");
    return v;
  }
  return c.allow_size5 ? kExtendedSizeCap : kDefaultSizeCap;
}

void check_size(std::size_t n, const Common& c) {
  if (n == 0) throw UsageError("size must be at least 1");
  const std::size_t cap = size_cap(c);
  if (n > cap)
    throw UsageError("size " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap) +
                     " (use --allow-size5 or set ZLAB_MAX_SIZE)");
}

bool glob_match(const std::string& pattern, const Identity& id) {
  return fnmatch(pattern.c_str(), id.name.c_str(), 0) == 0 ||
         (id.alias && fnmatch(pattern.c_str(), id.alias->c_str(), 0) == 0);
}

std::vector<Identity> filtered_waids(const std::string& pattern, int max_len = 4) {
  auto ids = enumerate_waids(max_len);
  if (pattern.empty()) return ids;
  std::erase_if(ids, [&](const Identity& id) { return !glob_match(pattern, id); });
  return ids;
}

std::string render_rows(const FiniteZroupoid& alg) {
  std::string out;
  for (const auto& row : alg.rows()) {
    out += " ";
    for (Element v : row) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

std::string sizes_line(const json& models) {
  std::string out;
  for (const auto& m : models) {
    if (!out.empty()) out += " ";
    out += m["name"].get<std::string>() + "/" + std::to_string(m["size"].get<std::size_t>());
  }
  return out;
}

json model_refs(std::span<const FiniteZroupoid> models) {
  json arr = json::array();
  for (const auto& m : models) arr.push_back({{"name", m.name()}, {"size", m.size()}});
  return arr;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw DataError("cannot write '" + path + "'");
  f << text;
}

// ---------------------------------------------------------------------------
// list

struct ListOpts {
  int max_len = 4;
  std::string filter;
  bool count = false;
  bool expanded = false;
};

int cmd_list(const ListOpts& o, const Common& c, std::ostream& out) {
  if (o.max_len != 3 && o.max_len != 4) throw UsageError("--max-len must be 3 or 4");
  const auto ids = filtered_waids(o.filter, o.max_len);
  const auto style = o.expanded ? RenderStyle::expanded : RenderStyle::sugared;
  const auto notation = c.unicode ? Notation::unicode : Notation::ascii;

  json report;
  if (o.count) {
    std::map<std::string, int> tally;
    for (const auto& id : ids) ++tally[id.name.substr(0, 2)];
    report["counts"] = tally;
    report["total"] = ids.size();
  } else {
    report["identities"] = json::array();
    for (const auto& id : ids)
      report["identities"].push_back({{"name", id.display_name()},
                                      {"canonical", id.name},
                                      {"lhs", render_term(id.lhs, style, notation)},
                                      {"rhs", render_term(id.rhs, style, notation)}});
  }

  if (c.format == Format::json) {
    emit_json(out, report);
  } else if (o.count) {
    for (const auto& [cat, n] : report["counts"].items()) out << cat << ": " << n << "\n";
    out << "total: " << report["total"] << "\n";
  } else {
    for (const auto& e : report["identities"])
      out << e["name"].get<std::string>() << "\t" << e["lhs"].get<std::string>() << " ≈ "
          << e["rhs"].get<std::string>() << "\n";
  }
  return ids.empty() ? kNotFound : kOk;
}

// ---------------------------------------------------------------------------
// check

struct CheckOpts {
  std::string source;
  std::vector<std::string> identities;
  std::vector<std::string> varieties;
  bool all_waids = false;
  bool lemmas = false;
  bool bare = false;
};

struct Target {
  std::string label;
  std::vector<Identity> ids;
};

bool looks_like_equation(const std::string& s) {
  return s.find('=') != std::string::npos || s.find("≈") != std::string::npos;
}

Target target_for(const std::string& text, bool bare) {
  if (looks_like_equation(text)) return {text, {parse_identity(text, text)}};
  const auto& v = variety(text);
  return {text, bare ? v.defining : flatten(v)};
}

json witness_json(const SatisfactionReport& r) {
  json w = json::array();
  for (const auto& [var, val] : r.witness) w.push_back({var, val});
  return w;
}

json check_target(const FiniteZroupoid& alg, const Target& t) {
  json j{{"target", t.label}, {"holds", true}};
  for (const auto& id : t.ids) {
    const auto r = satisfies(alg, id);
    if (!r.holds) {
      j["holds"] = false;
      j["failed"] = id.display_name();
      j["witness"] = witness_json(r);
      j["lhs_value"] = r.lhs_value;
      j["rhs_value"] = r.rhs_value;
      break;
    }
  }
  return j;
}

std::string witness_text(const json& w) {
  std::string out;
  for (const auto& pair : w) {
    if (!out.empty()) out += ", ";
    out += pair[0].get<std::string>() + "=" + std::to_string(pair[1].get<int>());
  }
  return out;
}

int cmd_check(const CheckOpts& o, const Common& c, std::ostream& out) {
  if (o.identities.empty() && o.varieties.empty() && !o.all_waids && !o.lemmas)
    throw UsageError("nothing to check: give --identity, --variety, --all-waids or --lemmas");

  std::vector<Target> targets;
  for (const auto& v : o.varieties) targets.push_back(target_for(v, o.bare));
  for (const auto& i : o.identities) targets.push_back(target_for(i, o.bare));
  if (o.all_waids)
    for (const auto& id : enumerate_waids(4))
      targets.push_back(target_for(id.name, o.bare));

  const auto algebras = load_algebra_source(o.source);
  json report = json::array();
  bool any_fail = false;
  for (const auto& alg : algebras) {
    json a{{"algebra", alg.name()}, {"size", alg.size()}, {"checks", json::array()}};
    std::size_t passed = 0;
    for (const auto& t : targets) {
      json r = check_target(alg, t);
      if (r["holds"].get<bool>()) ++passed;
      a["checks"].push_back(std::move(r));
    }
    a["passed"] = passed;
    a["total"] = targets.size();
    if (passed != targets.size()) any_fail = true;
    if (o.lemmas) {
      const auto lr = lemma_suite(alg);
      a["lemmas"] = json::array();
      for (const auto& cr : lr.clauses) {
        json l{{"name", cr.name}, {"status", to_string(cr.status)}};
        if (cr.status == ClauseResult::Status::fail) {
          l["failed"] = cr.detail.failed;
          l["witness"] = witness_json(cr.detail);
          any_fail = true;
        }
        a["lemmas"].push_back(std::move(l));
      }
      a["lemma_counts"] = {{"pass", lr.count(ClauseResult::Status::pass)},
                           {"fail", lr.count(ClauseResult::Status::fail)},
                           {"vacuous", lr.count(ClauseResult::Status::vacuous)}};
    }
    report.push_back(std::move(a));
  }

  if (c.format == Format::json) {
    emit_json(out, report);
  } else {
    for (const auto& a : report) {
      const std::string name = a["algebra"].get<std::string>();
      for (const auto& r : a["checks"]) {
        out << name << ": " << (r["holds"].get<bool>() ? "PASS " : "FAIL ")
            << r["target"].get<std::string>();
        if (!r["holds"].get<bool>())
          out << "  (" << r["failed"].get<std::string>() << " fails at "
              << witness_text(r["witness"]) << ": lhs " << r["lhs_value"] << ", rhs "
              << r["rhs_value"] << ")";
        out << "\n";
      }
      if (a["total"].get<std::size_t>() > 0)
        out << name << ": " << a["passed"] << "/" << a["total"] << " pass\n";
      if (a.contains("lemmas")) {
        for (const auto& l : a["lemmas"]) {
          out << name << ": lemma " << l["status"].get<std::string>() << " "
              << l["name"].get<std::string>();
          if (l.contains("failed"))
            out << "  (" << l["failed"].get<std::string>() << " fails at "
                << witness_text(l["witness"]) << ")";
          out << "\n";
        }
        const auto& lc = a["lemma_counts"];
        out << name << ": lemmas " << lc["pass"] << " pass, " << lc["fail"] << " fail, "
            << lc["vacuous"] << " vacuous\n";
      }
    }
  }
  return any_fail ? kCheckFailed : kOk;
}

// ---------------------------------------------------------------------------
// find

struct FindOpts {
  std::optional<std::size_t> size;
  std::optional<std::size_t> max_size;
  std::vector<std::string> satisfy;
  std::vector<std::string> fail;
  bool no_iso = false;
  bool first = false;
  bool all = false;
  std::optional<std::size_t> limit;
};

int cmd_find(const FindOpts& o, const Common& c, std::ostream& out) {
  if (o.size && o.max_size) throw UsageError("--size and --max-size are exclusive");
  if (o.first && o.limit) throw UsageError("--first and --limit are exclusive");
  if (o.first && o.all) throw UsageError("--first and --all are exclusive");
  const std::size_t lo = o.size.value_or(1);
  const std::size_t hi = o.size ? *o.size : o.max_size.value_or(kDefaultSizeCap);
  check_size(hi, c);

  std::vector<Identity> must, forbid;
  for (const auto& s : o.satisfy) {
    auto t = target_for(s, false);
    must.insert(must.end(), t.ids.begin(), t.ids.end());
  }
  for (const auto& f : o.fail) {
    if (looks_like_equation(f)) {
      forbid.push_back(parse_identity(f, f));
      continue;
    }
    // Violating a variety means violating one of its defining identities;
    // only single-identity descriptors can be forbidden exactly.
    const auto& v = variety(f);
    if (v.defining.size() != 1)
      throw UsageError("--fail needs a single identity; '" + f + "' has " +
                       std::to_string(v.defining.size()) + " defining identities");
    Identity id = v.defining.front();
    forbid.push_back(std::move(id));
  }

  const std::optional<std::size_t> limit = o.first ? std::optional<std::size_t>(1) : o.limit;
  std::vector<FiniteZroupoid> found;
  for (std::size_t n = lo; n <= hi; ++n) {
    SearchSpec spec;
    spec.size = n;
    spec.size_cap = size_cap(c);
    spec.threads = c.threads;
    spec.iso_reduce = !o.no_iso;
    spec.must_satisfy = must;
    spec.must_fail = forbid;
    if (limit) spec.limit = *limit - found.size();
    for (auto& m : enumerate_models(spec)) found.push_back(std::move(m));
    if (limit && found.size() >= *limit) break;
  }
  if (!o.no_iso) adopt_catalog_names(found);

  json report{{"sizes", {lo, hi}}, {"iso_reduced", !o.no_iso}, {"count", found.size()},
              {"models", json::array()}};
  for (const auto& m : found) report["models"].push_back(algebra_to_json(m));

  if (c.format == Format::json) {
    emit_json(out, report);
  } else {
    out << "found " << found.size() << " model(s) of size " << lo;
    if (hi != lo) out << ".." << hi;
    out << "\n";
    for (const auto& m : found) out << m.name() << " (size " << m.size() << ")\n" << render_rows(m);
  }
  return found.empty() ? kNotFound : kOk;
}

// ---------------------------------------------------------------------------
// classify and hasse

struct ModelOpts {
  std::optional<std::size_t> max_size;
  std::vector<std::string> models;
};

std::vector<FiniteZroupoid> gather_models(const ModelOpts& o, const Common& c) {
  if (o.max_size && !o.models.empty()) throw UsageError("--max-size and --models are exclusive");
  if (!o.models.empty()) {
    std::vector<FiniteZroupoid> out;
    for (const auto& src : o.models)
      for (auto& m : load_algebra_source(src)) out.push_back(std::move(m));
    return out;
  }
  const std::size_t n = o.max_size.value_or(4);
  check_size(n, c);
  return symmetric_models_up_to(n, c.threads, size_cap(c));
}

struct ClassifyOpts {
  ModelOpts models;
  std::string filter;
  std::string dot_path;
  bool with_landmarks = false;
};

json poset_json(const Poset& p) {
  json nodes = json::array();
  for (const auto& n : p.nodes)
    nodes.push_back({{"label", n.label}, {"fingerprint", n.fingerprint}, {"landmark", n.landmark}});
  json edges = json::array();
  for (const auto& [lo, hi] : p.hasse_labels()) edges.push_back({lo, hi});
  return {{"nodes", nodes}, {"edges", edges}, {"merged_landmarks", p.merged_landmarks}};
}

int cmd_classify(const ClassifyOpts& o, const Common& c, std::ostream& out) {
  const auto models = gather_models(o.models, c);
  const auto ids = filtered_waids(o.filter);
  if (ids.empty()) throw UsageError("--filter matches no identity");
  const auto report = induced_partition(ids, models, c.threads);

  json j{{"models", model_refs(report.models)},
         {"identities", ids.size()},
         {"block_count", report.blocks.size()},
         {"blocks", json::array()},
         {"compared_full", report.compared_full},
         {"diff", report.diff}};
  for (const auto& b : report.blocks)
    j["blocks"].push_back({{"label", b.label},
                           {"representative", b.representative},
                           {"fingerprint", b.fingerprint},
                           {"members", b.members}});

  if (!o.dot_path.empty())
    write_file(o.dot_path, hasse_dot(inclusion_poset(report, o.with_landmarks)));

  if (c.format == Format::json) {
    emit_json(out, j);
  } else if (c.format == Format::dot) {
    out << hasse_dot(inclusion_poset(report, o.with_landmarks));
  } else {
    out << "models (" << j["models"].size() << "): " << sizes_line(j["models"]) << "\n";
    out << "identities: " << j["identities"] << "\n";
    for (const auto& b : j["blocks"]) {
      out << b["label"].get<std::string>() << " [" << b["fingerprint"].get<std::string>() << "] "
          << b["members"].size() << ":";
      for (const auto& m : b["members"]) out << " " << m.get<std::string>();
      out << "\n";
    }
    for (const auto& d : j["diff"]) out << "diff: " << d.get<std::string>() << "\n";
    out << j["block_count"] << " blocks, diff: " << (report.diff.empty() ? "none" : "present");
    if (!report.compared_full) out << " (partial comparison)";
    out << "\n";
  }
  return report.diff.empty() ? kOk : kClassificationDiff;
}

struct HasseOpts {
  ModelOpts models;
  std::string dot_path;
  bool with_landmarks = false;
};

int cmd_hasse(const HasseOpts& o, const Common& c, std::ostream& out) {
  const auto models = gather_models(o.models, c);
  const auto ids = enumerate_waids(4);
  const auto report = induced_partition(ids, models, c.threads);
  const auto poset = inclusion_poset(report, o.with_landmarks);
  const std::string dot = hasse_dot(poset);
  if (!o.dot_path.empty()) write_file(o.dot_path, dot);

  json j = poset_json(poset);
  j["models"] = model_refs(report.models);
  if (c.format == Format::json) {
    emit_json(out, j);
  } else if (c.format == Format::dot) {
    out << dot;
  } else {
    out << "models (" << j["models"].size() << "): " << sizes_line(j["models"]) << "\n";
    for (const auto& n : j["nodes"]) {
      out << "node " << n["label"].get<std::string>() << " [" << n["fingerprint"].get<std::string>()
          << "]";
      if (n["landmark"].get<bool>()) out << " landmark";
      out << "\n";
    }
    for (const auto& m : j["merged_landmarks"])
      out << "merged landmark " << m.get<std::string>() << "\n";
    for (const auto& e : j["edges"])
      out << e[0].get<std::string>() << " -> " << e[1].get<std::string>() << "\n";
    out << j["nodes"].size() << " nodes, " << j["edges"].size() << " edges\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// catalog

int cmd_catalog(const std::vector<std::string>& names, const Common& c, std::ostream& out) {
  std::vector<FiniteZroupoid> algs;
  if (names.empty()) {
    for (const auto& [name, alg] : catalog()) algs.push_back(alg);
  } else {
    for (const auto& n : names) algs.push_back(catalog_algebra(n));
  }
  const auto registered = registered_variety_names();
  json report = json::array();
  for (const auto& alg : algs) {
    json a = algebra_to_json(alg);
    a["varieties"] = json::array();
    for (const auto& v : registered)
      if (member_of(alg, variety(v)).holds) a["varieties"].push_back(v);
    report.push_back(std::move(a));
  }
  if (c.format == Format::json) {
    emit_json(out, report);
  } else {
    for (std::size_t i = 0; i < algs.size(); ++i) {
      out << algs[i].name() << " (size " << algs[i].size() << ")\n" << render_rows(algs[i]);
      out << "  in:";
      for (const auto& v : report[i]["varieties"]) out << " " << v.get<std::string>();
      out << "\n";
    }
  }
  return kOk;
}

void add_common(CLI::App* sub, Common& c, bool allow_dot) {
  std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
  if (allow_dot) formats.emplace("dot", Format::dot);
  sub->add_option("--format", c.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_flag("--allow-size5", c.allow_size5, "Raise the model size cap from 4 to 5");
  sub->add_flag("--unicode", c.unicode, "Render terms with Unicode symbols");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak associative laws in symmetric implication zroupoids", "zlab"};
  app.require_subcommand(1);
  Common common;

  ListOpts list_o;
  auto* list = app.add_subcommand("list", "List the weak associative identities");
  list->add_option("--max-len", list_o.max_len, "Longest identity length (3 or 4)");
  list->add_option("--filter", list_o.filter, "Glob on names, e.g. '43*'");
  list->add_flag("--count", list_o.count, "Print per-category tallies");
  list->add_flag("--expanded", list_o.expanded, "Expand ' and ^ into -> and 0");
  add_common(list, common, false);

  CheckOpts check_o;
  auto* check = app.add_subcommand("check", "Check identities, varieties or lemmas on an algebra");
  check->add_option("algebra", check_o.source, "Catalog name or algebra JSON file")->required();
  check->add_option("--identity", check_o.identities, "Identity name or 'lhs = rhs'");
  check->add_option("--variety", check_o.varieties, "Registered variety name");
  check->add_flag("--all-waids", check_o.all_waids, "Check all 155 weak associative laws");
  check->add_flag("--lemmas", check_o.lemmas, "Run the lemma property suite");
  check->add_flag("--bare", check_o.bare, "Skip base identities of varieties");
  add_common(check, common, false);

  FindOpts find_o;
  auto* find = app.add_subcommand("find", "Enumerate finite models");
  find->add_option("--size", find_o.size, "Exact model size");
  find->add_option("--max-size", find_o.max_size, "Search sizes 1..N");
  find->add_option("--satisfy", find_o.satisfy, "Variety, identity name or 'lhs = rhs'")
      ->delimiter(',');
  find->add_option("--fail", find_o.fail, "Identity the models must violate")->delimiter(',');
  find->add_flag("--no-iso", find_o.no_iso, "Keep isomorphic copies");
  find->add_flag("--first", find_o.first, "Stop at the first model");
  find->add_flag("--all", find_o.all, "Report every model (default)");
  find->add_option("--limit", find_o.limit, "Report at most N models")->check(CLI::PositiveNumber);
  add_common(find, common, false);

  ClassifyOpts cls_o;
  auto* cls = app.add_subcommand("classify", "Partition the identities by model-equivalence");
  cls->add_option("--max-size", cls_o.models.max_size, "Use all S-models up to this size");
  cls->add_option("--models", cls_o.models.models, "Catalog names or algebra files");
  cls->add_option("--filter", cls_o.filter, "Classify only identities matching this glob");
  cls->add_option("--dot", cls_o.dot_path, "Also write the Hasse diagram to this file");
  cls->add_flag("--with-landmarks", cls_o.with_landmarks, "Add T and BA to the diagram");
  add_common(cls, common, true);

  HasseOpts hasse_o;
  auto* hasse = app.add_subcommand("hasse", "Inclusion poset of the blocks");
  hasse->add_option("--max-size", hasse_o.models.max_size, "Use all S-models up to this size");
  hasse->add_option("--models", hasse_o.models.models, "Catalog names or algebra files");
  hasse->add_option("--dot", hasse_o.dot_path, "Write DOT to this file");
  hasse->add_flag("--with-landmarks", hasse_o.with_landmarks, "Add T and BA as nodes");
  add_common(hasse, common, true);

  std::vector<std::string> cat_names;
  auto* cat = app.add_subcommand("catalog", "Show the named algebras");
  cat->add_option("names", cat_names, "Subset of T1, 2_s, 2_b, A3, A4");
  add_common(cat, common, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (list->parsed()) return cmd_list(list_o, common, out);
    if (check->parsed()) return cmd_check(check_o, common, out);
    if (find->parsed()) return cmd_find(find_o, common, out);
    if (cls->parsed()) return cmd_classify(cls_o, common, out);
    if (hasse->parsed()) return cmd_hasse(hasse_o, common, out);
    if (cat->parsed()) return cmd_catalog(cat_names, common, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NameError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kData;
  }
  return kUsage;
}

}  // namespace zlab::cli
