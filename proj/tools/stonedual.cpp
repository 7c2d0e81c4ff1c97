// Command-line front end: build catalog objects, run the dualities, decide
// the classification dictionary, unitize, quotient and export.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stonedual/catalog.hpp"
#include "stonedual/duality.hpp"
#include "stonedual/unitize.hpp"

using namespace stonedual;
using nlohmann::json;

namespace {

constexpr int kExitAssertion = 1;
constexpr int kExitBadInput = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + *path);
  out << text;
}

FinInvSemi load_semigroup(const std::string& input) {
  if (std::filesystem::exists(input)) return semigroup_from_json(read_file(input));
  return make_semigroup(input);
}

FinGroupoid load_groupoid(const std::string& input) {
  if (std::filesystem::exists(input)) return groupoid_from_json(read_file(input));
  return make_groupoid(input);
}

// either kind, for subcommands that accept both
struct AnyInput {
  std::optional<FinInvSemi> semi;
  std::optional<FinGroupoid> grpd;
};

AnyInput load_any(const std::string& input) {
  AnyInput out;
  if (std::filesystem::exists(input)) {
    auto text = read_file(input);
    auto j = json::parse(text);
    if (j.contains("identities"))
      out.grpd = groupoid_from_json(text);
    else
      out.semi = semigroup_from_json(text);
    return out;
  }
  if (is_semigroup_key(input)) {
    out.semi = make_semigroup(input);
    return out;
  }
  out.grpd = make_groupoid(input);
  return out;
}

json classify_report(const std::string& name, const FinInvSemi& s) {
  json j;
  j["instance"] = name;
  json preds;
  preds["boolean"] = is_boolean(s).ok();
  preds["fundamental"] = is_fundamental(s);
  preds["0-simplifying"] = is_zero_simplifying(s);
  preds["basic"] = is_basic(s);
  preds["simple"] = is_simple(s);
  preds["0-simple"] = is_0_simple(s);
  preds["semisimple"] = is_semisimple(s);
  preds["meet-semigroup"] = is_meet_semigroup(s);
  preds["purely-infinite"] = is_purely_infinite(s);
  preds["atoms"] = s.atoms().size();
  preds["infinitesimals"] = infinitesimals(s).size();
  auto su = sigma_unital(s);
  preds["sigma-unital"] = su.value;
  preds["sigma-unital-note"] = su.note;
  j["predicates"] = preds;
  json corr = json::array();
  for (const auto& item : verify_correspondences(s).items) {
    json c;
    c["lhs"] = item.lhs;
    c["rhs"] = item.rhs;
    c["lhs_value"] = item.lhs_value;
    c["rhs_value"] = item.rhs_value;
    c["holds"] = item.holds();
    c["degenerate"] = item.degenerate;
    corr.push_back(c);
  }
  j["correspondences"] = corr;
  return j;
}

int cmd_make(const std::string& key, const std::optional<std::string>& out,
             const std::string& format) {
  if (is_semigroup_key(key)) {
    write_output(out, semigroup_to_json(make_semigroup(key)));
    return 0;
  }
  auto g = make_groupoid(key);
  write_output(out, format == "dot" ? groupoid_to_dot(g) : groupoid_to_json(g));
  return 0;
}

int cmd_dual(const std::string& input, const std::optional<std::string>& out,
             const std::string& format) {
  auto s = load_semigroup(input);
  auto stone = stone_groupoid(s);
  write_output(out, format == "dot" ? groupoid_to_dot(stone.groupoid)
                                    : groupoid_to_json(stone.groupoid));
  return 0;
}

int cmd_kb(const std::string& input, const std::optional<std::string>& out, int cap) {
  auto g = load_groupoid(input);
  write_output(out, semigroup_to_json(kb(g, cap).semi));
  return 0;
}

int cmd_roundtrip(const std::string& input) {
  auto any = load_any(input);
  if (any.semi) {
    auto a = alpha(*any.semi);  // throws logic_error when the laws fail
    std::cout << "pass |S|=" << any.semi->size() << " |KB(G(S))|=" << a.kbres.semi.size() << "\n";
    return 0;
  }
  auto b = beta(*any.grpd);
  std::cout << "pass |G|=" << any.grpd->size() << " |G(KB(G))|=" << b.stone.groupoid.size()
            << "\n";
  return 0;
}

int cmd_classify(const std::string& input, const std::optional<std::string>& out) {
  auto s = load_semigroup(input);
  auto rep = classify_report(input, s);
  write_output(out, rep.dump(2) + "\n");
  for (const auto& c : rep.at("correspondences"))
    if (!c.at("holds").get<bool>()) return kExitAssertion;
  return 0;
}

int cmd_unitize(const std::string& input, const std::optional<std::string>& out, uint64_t seed) {
  if (input == "Ifin") {
    // symbolic host: the finite-support partial bijections of the naturals
    std::mt19937_64 rng(seed);
    int samples = 10000;
    bool units_closed = true;
    for (int i = 0; i < samples; ++i) {
      auto x = random_unitized_elem(rng, 10);
      auto y = random_unitized_elem(rng, 10);
      auto xy = compose_unitized(x, y);  // throws when the two routes disagree
      if (is_unit_unitized(x) && is_unit_unitized(y) && !is_unit_unitized(xy))
        units_closed = false;
    }
    json j;
    j["host"] = "Ifin";
    j["seed"] = seed;
    j["samples"] = samples;
    j["product_routes_agree"] = true;
    j["units_closed"] = units_closed;
    std::mt19937_64 rng2(seed);
    j["sample_element"] = json::parse(unitized_to_json(random_unitized_elem(rng2, 10)));
    write_output(out, j.dump(2) + "\n");
    return units_closed ? 0 : kExitAssertion;
  }
  auto s = load_semigroup(input);
  auto u = unitize_finite(s);
  json j;
  j["host_size"] = s.size();
  j["monoid"] = json::parse(semigroup_to_json(u.monoid()));
  j["embedding"] = u.embedding;
  write_output(out, j.dump(2) + "\n");
  return 0;
}

int cmd_quotient(const std::string& input, const std::vector<int>& gens,
                 const std::optional<std::string>& out) {
  auto s = load_semigroup(input);
  auto ideal = additive_ideal_generated(s, gens);
  auto cong = ideal_congruence(s, ideal);
  json j;
  j["ideal"] = ideal;
  j["class_of"] = cong.class_of;
  j["quotient"] = json::parse(semigroup_to_json(cong.quotient));
  write_output(out, j.dump(2) + "\n");
  return 0;
}

int cmd_dualmor(const std::string& path, const std::optional<std::string>& out) {
  auto j = json::parse(read_file(path));
  auto src = load_semigroup(j.at("source").get<std::string>());
  auto dst = load_semigroup(j.at("target").get<std::string>());
  SemigroupMorphism theta(src, dst, j.at("map").get<std::vector<int>>());
  if (!is_callitic(theta)) {
    std::cerr << "morphism is not callitic (proper: " << is_proper_morphism(theta)
              << ", weakly meet preserving: " << is_weakly_meet_preserving(theta) << ")\n";
    return kExitAssertion;
  }
  auto dual = dual_morphism(theta);
  json rep;
  rep["covering"] = true;
  rep["functor"] = dual.functor.map();  // G(target) -> G(source)
  rep["stone_of_source"] = json::parse(groupoid_to_json(dual.stone_src.groupoid));
  rep["stone_of_target"] = json::parse(groupoid_to_json(dual.stone_dst.groupoid));
  write_output(out, rep.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Stone duality for Boolean inverse semigroups"};
  app.require_subcommand(1);

  std::string input, format = "json";
  std::optional<std::string> out;
  uint64_t seed = 42;
  int cap = 2000;
  std::vector<int> gens;

  auto add_common = [&](CLI::App* cmd, bool with_input = true) {
    if (with_input) cmd->add_option("input", input, "construction key or JSON file")->required();
    cmd->add_option("-o,--output", out, "output file (default stdout)");
    cmd->add_option("--format", format, "json|dot")->check(CLI::IsMember({"json", "dot"}));
    cmd->add_option("--seed", seed, "sampler seed");
    cmd->add_option("--cap", cap, "size cap for enumerations");
  };

  auto* mk = app.add_subcommand("make", "emit a catalog object as JSON");
  add_common(mk);
  auto* du = app.add_subcommand("dual", "Stone groupoid of a Boolean inverse semigroup");
  add_common(du);
  auto* kbc = app.add_subcommand("kb", "local-bisection monoid of a groupoid");
  add_common(kbc);
  auto* rt = app.add_subcommand("roundtrip", "verify the duality round trip on an instance");
  add_common(rt);
  auto* cl = app.add_subcommand("classify", "predicate and correspondence report");
  add_common(cl);
  auto* un = app.add_subcommand("unitize", "unitization (finite file/key, or the literal Ifin)");
  add_common(un);
  auto* qu = app.add_subcommand("quotient", "quotient by the additive ideal the generators span");
  add_common(qu);
  qu->add_option("generators", gens, "element indices generating the ideal");
  auto* dm = app.add_subcommand("dualmor", "dualize a callitic morphism file");
  add_common(dm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    if (mk->parsed()) return cmd_make(input, out, format);
    if (du->parsed()) return cmd_dual(input, out, format);
    if (kbc->parsed()) return cmd_kb(input, out, cap);
    if (rt->parsed()) return cmd_roundtrip(input);
    if (cl->parsed()) return cmd_classify(input, out);
    if (un->parsed()) return cmd_unitize(input, out, seed);
    if (qu->parsed()) return cmd_quotient(input, gens, out);
    if (dm->parsed()) return cmd_dualmor(input, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::logic_error& e) {  // includes domain_error: failed checks
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitAssertion;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
