#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "mcgh/braid.hpp"
#include "mcgh/error.hpp"
#include "mcgh/io.hpp"
#include "mcgh/obstruction.hpp"

namespace mcgh::cli {

namespace {

using io::json;

struct Options {
  std::string surface, op, exh, seed, word, hom, kept, subset, star, klass, twists, curves, out;
  long long depth = -1;
  long long stage = -1;
  bool strict = false;
  bool stages = false;
};

struct Result {
  json report;
  int status = kOk;
};

std::size_t need_depth(const Options& o) {
  if (o.depth < 0) throw Error(ErrorCode::Usage, "--depth is required");
  return static_cast<std::size_t>(o.depth);
}

std::string need(const std::string& value, const char* flag) {
  if (value.empty()) throw Error(ErrorCode::Usage, std::string(flag) + " is required");
  return value;
}

std::filesystem::path parent_of(const std::string& arg) {
  return std::filesystem::path(arg).parent_path();
}

Exhaustion load_exhaustion(const std::string& arg) {
  return io::exhaustion_from_json(io::read_json_arg(arg));
}

// --hom file, or --subset-A with --depth (and optionally --exh) for phi_A.
HomSpec load_hom(const Options& o) {
  if (!o.hom.empty()) return io::homspec_from_json(io::read_json_arg(o.hom), parent_of(o.hom));
  if (!o.subset.empty()) {
    auto subset = io::subset_from_json(io::read_json_arg(o.subset));
    Exhaustion exh = o.exh.empty() ? flute_exhaustion(need_depth(o)) : load_exhaustion(o.exh);
    return make_phi(subset, exh);
  }
  throw Error(ErrorCode::Usage, "one of --hom or --subset-A is required");
}

json pair_vector_json(const braid::PairVector& v) {
  json j = json::object();
  for (const auto& [key, c] : v)
    j["e" + std::to_string(key.first) + "." + std::to_string(key.second)] = io::int_string(c);
  return j;
}

std::set<std::string> split_labels(const std::string& text) {
  std::set<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.insert(item);
  return out;
}

Result cmd_h1(const Options& o) {
  auto sig = io::surface_from_json(io::read_json_arg(need(o.surface, "--surface")));
  return {io::to_json(h1_presentation(sig))};
}

Result cmd_transition(const Options& o) {
  SurfaceSig sig;
  GluingOp op;
  if (!o.exh.empty()) {
    auto exh = load_exhaustion(o.exh);
    if (o.stage < 0 || static_cast<std::size_t>(o.stage) >= exh.ops.size())
      throw Error(ErrorCode::Usage, "--stage must index an op of the exhaustion");
    auto stages = validate_exhaustion(exh);
    sig = stages[o.stage];
    op = exh.ops[o.stage];
  } else {
    sig = io::surface_from_json(io::read_json_arg(need(o.surface, "--surface")));
    op = io::gluing_from_json(io::read_json_arg(need(o.op, "--op")));
  }
  return {io::to_json(transition_map(sig, op))};
}

Result cmd_star_check(const Options& o) {
  if (!o.star.empty()) {
    auto cfg = io::star_from_json(io::read_json_arg(o.star));
    return {{{"star", io::to_json(cfg)}, {"relation", io::to_json(star_relation_abelianized(cfg))}}};
  }
  auto sig = io::surface_from_json(io::read_json_arg(need(o.surface, "--surface")));
  auto d = boundary_sum_relation(sig);
  auto folded = fold_derivation(d.steps);
  bool match = folded == d.relation.as_class();
  return {{{"relation", io::to_json(d.relation)},
           {"folded", io::to_json(folded)},
           {"steps", d.steps.size()},
           {"match", match}},
          match ? kOk : kCheckFailed};
}

Result cmd_boundary_sum(const Options& o) {
  auto sig = io::surface_from_json(io::read_json_arg(need(o.surface, "--surface")));
  return {io::to_json(boundary_sum_relation(sig))};
}

Result cmd_phi_eval(const Options& o) {
  auto h = load_hom(o);
  if (!o.twists.empty()) {
    auto w = io::twist_word_from_json(io::read_json_arg(o.twists));
    return {{{"stage", w.stage}, {"value", io::int_string(eval_on_twist_word(h, w))}}};
  }
  auto j = io::read_json_arg(need(o.klass, "--class or --twists"));
  if (!j.contains("stage") || !j.contains("class"))
    throw Error(ErrorCode::ParseError, "class file needs 'stage' and 'class'");
  auto stage = static_cast<std::size_t>(io::parse_int(j.at("stage")));
  auto c = io::class_from_json(j.at("class"));
  return {{{"stage", stage}, {"value", io::int_string(eval_on_class(h, c, stage))}}};
}

std::pair<Exhaustion, std::size_t> domain_and_depth(const HomSpec& h, const Options& o) {
  Exhaustion exh = o.exh.empty() ? h.domain() : load_exhaustion(o.exh);
  std::size_t depth = o.depth < 0 ? h.depth() : static_cast<std::size_t>(o.depth);
  return {exh, depth};
}

Result cmd_consistency(const Options& o) {
  auto h = load_hom(o);
  auto [exh, depth] = domain_and_depth(h, o);
  auto v = check_consistency(h, exh, depth);
  return {io::to_json(v), v.ok() ? kOk : kCheckFailed};
}

Result cmd_support(const Options& o) {
  auto h = load_hom(o);
  auto [exh, depth] = domain_and_depth(h, o);
  auto r = escaping_support(h, exh, depth);
  return {io::to_json(r), r.escaping ? kCheckFailed : kOk};
}

Result cmd_product(const Options& o) {
  auto h = load_hom(o);
  auto curves = io::staged_curves_from_json(io::read_json_arg(need(o.curves, "--curves")));
  auto r = eval_truncated_infinite_product(h, curves, o.strict);
  return {io::to_json(r), r.stabilized ? kOk : kCheckFailed};
}

Result cmd_factor(const Options& o) {
  auto h = load_hom(o);
  auto r = factors_through_forgetful(h, split_labels(need(o.kept, "--kept")));
  return {io::to_json(r), r.factors ? kOk : kCheckFailed};
}

Result cmd_trace(const Options& o) {
  auto exh = load_exhaustion(need(o.exh, "--exh"));
  auto j = io::read_json_arg(need(o.seed, "--seed"));
  std::size_t seed_stage = 0;
  Assignment seed;
  if (j.contains("assign")) {
    seed = io::assignment_from_json(j.at("assign"));
    if (j.contains("stage")) seed_stage = static_cast<std::size_t>(io::parse_int(j.at("stage")));
  } else {
    seed = io::assignment_from_json(j);
  }
  std::size_t depth = o.depth < 0 ? exh.ops.size() : static_cast<std::size_t>(o.depth);
  auto t = trace_obstruction(seed, exh, depth, seed_stage);
  return {io::to_json(t), t.outcome == TraceOutcome::ZeroConsistent ? kOk : kCheckFailed};
}

Result cmd_braid_abelianize(const Options& o) {
  auto w = braid::parse_pair_word(need(o.word, "--word"));
  auto v = braid::exponent_sums(w);
  return {{{"strands", w.strands},
           {"exponent_sums", pair_vector_json(v)},
           {"flute_class", io::to_json(braid::to_flute_class(v))}}};
}

Result cmd_braid_oracle(const Options& o) {
  auto w = braid::parse_artin_word(need(o.word, "--word"));
  auto v = braid::linking_numbers(w);
  return {{{"strands", w.strands},
           {"linking", pair_vector_json(v)},
           {"flute_class", io::to_json(braid::to_flute_class(v))}}};
}

Result cmd_flute_gen(const Options& o) {
  auto exh = flute_exhaustion(need_depth(o));
  if (!o.subset.empty())
    return {io::to_json(make_phi(io::subset_from_json(io::read_json_arg(o.subset)), exh))};
  json j = io::to_json(exh);
  if (o.stages) {
    json stages = json::array();
    for (const auto& s : validate_exhaustion(exh)) stages.push_back(io::to_json(s));
    j["stages"] = stages;
  }
  return {j};
}

void emit(const json& report, const Options& o, std::ostream& out) {
  std::string text = report.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw Error(ErrorCode::Usage, "cannot write " + o.out);
  file << text;
}

json error_json(std::string_view code, const std::string& detail) {
  return {{"error", std::string(code)}, {"detail", detail}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  Options o;
  CLI::App app{"Homology of pure mapping class groups along surface exhaustions", "mcgh"};
  app.require_subcommand(1);
  app.add_option("--out", o.out, "write the report to this file");

  using Handler = std::function<Result(const Options&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler handler) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    commands.emplace_back(sub, std::move(handler));
    return sub;
  };

  auto* h1 = add("h1", "first homology presentation of a stage", cmd_h1);
  h1->add_option("--surface", o.surface, "surface signature (file or inline JSON)");

  auto* tr = add("transition", "induced map on H1 for one gluing", cmd_transition);
  tr->add_option("--surface", o.surface);
  tr->add_option("--op", o.op, "gluing op (file or inline JSON)");
  tr->add_option("--exh", o.exh, "exhaustion; use with --stage");
  tr->add_option("--stage", o.stage, "op index within --exh");

  auto* sc = add("star-check", "abelianize a star, or replay the boundary-sum derivation", cmd_star_check);
  sc->add_option("--surface", o.surface);
  sc->add_option("--star", o.star);

  auto* bs = add("boundary-sum", "derive 12 tau = sum of boundary twists", cmd_boundary_sum);
  bs->add_option("--surface", o.surface);

  auto hom_options = [&](CLI::App* sub) {
    sub->add_option("--hom", o.hom, "cochain file");
    sub->add_option("--subset-A", o.subset, "subset spec for phi_A on the flute");
    sub->add_option("--exh", o.exh, "exhaustion");
    sub->add_option("--depth", o.depth, "stage depth");
  };

  auto* pe = add("phi-eval", "evaluate a cochain on a class or twist word", cmd_phi_eval);
  hom_options(pe);
  pe->add_option("--class", o.klass, "{\"stage\": n, \"class\": {...}}");
  pe->add_option("--twists", o.twists, "{\"stage\": n, \"letters\": [...]}");

  hom_options(add("consistency-check", "check restriction compatibility", cmd_consistency));
  hom_options(add("support-check", "locate the support of a cochain", cmd_support));

  auto* pr = add("product-eval", "partial sums over a prefix of an infinite twist product", cmd_product);
  hom_options(pr);
  pr->add_option("--curves", o.curves, "curve list");
  pr->add_flag("--strict", o.strict, "fail if the prefix has not left stage 0");

  auto* fc = add("factor-check", "test factoring through a forgetful map", cmd_factor);
  hom_options(fc);
  fc->add_option("--kept", o.kept, "comma-separated kept punctures");

  auto* ot = add("obstruct-trace", "follow a genus-one cochain along an exhaustion", cmd_trace);
  ot->add_option("--exh", o.exh);
  ot->add_option("--seed", o.seed);
  ot->add_option("--depth", o.depth);

  add("braid-abelianize", "exponent sums of a pair word", cmd_braid_abelianize)
      ->add_option("--word", o.word);
  add("braid-oracle", "linking numbers of an Artin word", cmd_braid_oracle)
      ->add_option("--word", o.word);

  auto* fg = add("flute-gen", "emit the flute exhaustion (or phi_A on it)", cmd_flute_gen);
  fg->add_option("--depth", o.depth);
  fg->add_option("--subset-A", o.subset);
  fg->add_flag("--stages", o.stages, "include stage signatures");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << error_json("Usage", e.what()).dump(2) << "\n";
    return kInputError;
  }

  try {
    for (const auto& [sub, handler] : commands) {
      if (!sub->parsed()) continue;
      Result r = handler(o);
      emit(r.report, o, out);
      return r.status;
    }
    throw Error(ErrorCode::Usage, "no command");
  } catch (const Error& e) {
    out << error_json(to_string(e.code()), e.detail()).dump(2) << "\n";
  } catch (const std::exception& e) {
    out << error_json("Internal", e.what()).dump(2) << "\n";
  }
  return kInputError;
}

}  // namespace mcgh::cli
