#include "stonedual/catalog.hpp"

#include <random>
#include <stdexcept>

namespace stonedual {

namespace {

constexpr uint64_t kSubalgebraSeed = 0xCA7A106;  // fixed seed for the random subalgebras

// splits "AxB" / "A+B" at paren depth zero; returns empty when absent
std::pair<std::string, std::string> split_top(const std::string& key, char sep) {
  int depth = 0;
  for (size_t i = 0; i < key.size(); ++i) {
    if (key[i] == '(') ++depth;
    if (key[i] == ')') --depth;
    if (depth == 0 && key[i] == sep && i > 0 && i + 1 < key.size())
      return {key.substr(0, i), key.substr(i + 1)};
  }
  return {"", ""};
}

GroupTable parse_group(const std::string& text) {
  if (text == "1") return trivial_group();
  if (text.size() >= 2 && text[0] == 'Z') {
    int k = std::stoi(text.substr(1));
    return cyclic_group(k);
  }
  throw std::invalid_argument("unknown group key: " + text);
}

std::vector<std::string> parse_args(const std::string& key, const std::string& prefix) {
  if (key.size() < prefix.size() + 2 || key.compare(0, prefix.size(), prefix) != 0 ||
      key[prefix.size()] != '(' || key.back() != ')')
    return {};
  std::string inner = key.substr(prefix.size() + 1, key.size() - prefix.size() - 2);
  std::vector<std::string> args;
  std::string cur;
  int depth = 0;
  for (char c : inner) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      args.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  args.push_back(cur);
  return args;
}

}  // namespace

FinInvSemi make_semigroup(const std::string& key) {
  auto [lhs, rhs] = split_top(key, 'x');
  if (!lhs.empty()) return direct_product(make_semigroup(lhs), make_semigroup(rhs));
  if (key.size() > 2 && key.compare(0, 2, "I_") == 0)
    return symmetric_inverse_monoid(std::stoi(key.substr(2)));
  if (auto args = parse_args(key, "GZ"); args.size() == 1)
    return group_with_zero(parse_group(args[0]));
  if (auto args = parse_args(key, "Rook"); args.size() == 2)
    return rook_matrices(std::stoi(args[0]), parse_group(args[1]));
  throw std::invalid_argument("unknown semigroup key: " + key);
}

FinGroupoid make_groupoid(const std::string& key) {
  auto [lhs, rhs] = split_top(key, '+');
  if (!lhs.empty()) return disjoint_union(make_groupoid(lhs), make_groupoid(rhs));
  if (auto args = parse_args(key, "Pair"); args.size() == 1)
    return pair_groupoid(std::stoi(args[0]));
  if (auto args = parse_args(key, "Comp"); args.size() == 3) {
    if (args[0] != args[2])
      throw std::invalid_argument("Comp(p,H,p) needs matching point counts: " + key);
    return from_components({{std::stoi(args[0]), parse_group(args[1])}});
  }
  throw std::invalid_argument("unknown groupoid key: " + key);
}

bool is_semigroup_key(const std::string& key) {
  try {
    make_semigroup(key);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

bool is_groupoid_key(const std::string& key) {
  try {
    make_groupoid(key);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

std::vector<std::string> semigroup_catalog_keys() {
  return {"I_1", "I_2", "I_3", "GZ(Z2)", "GZ(Z3)", "Rook(2,Z2)", "I_2xI_2"};
}

std::vector<std::pair<std::string, FinInvSemi>> acceptance_catalog() {
  std::vector<std::pair<std::string, FinInvSemi>> out;
  for (const auto& key : semigroup_catalog_keys()) out.emplace_back(key, make_semigroup(key));
  auto i3 = symmetric_inverse_monoid(3);
  std::mt19937_64 rng(kSubalgebraSeed);
  std::uniform_int_distribution<int> pick(0, i3.size() - 1);
  for (int k = 0; k < 5; ++k) {
    std::vector<int> gens{i3.zero(), pick(rng), pick(rng)};
    auto sub = subalgebra_generated(i3, gens);
    out.emplace_back("SubI3_" + std::to_string(k), std::move(sub.semi));
  }
  return out;
}

std::vector<std::string> groupoid_catalog_keys() {
  return {"Pair(1)", "Pair(2)", "Pair(3)", "Pair(4)", "Comp(2,Z2,2)", "Comp(2,Z3,2)",
          "Comp(1,Z2,1)", "Pair(2)+Pair(1)", "Pair(2)+Comp(1,Z2,1)"};
}

}  // namespace stonedual
