#pragma once

#include <optional>
#include <string>
#include <vector>

namespace stonedual {

/// Finite poset given by its order relation. Constructors reject relations
/// that are not reflexive, antisymmetric and transitive, and a declared
/// bottom that is not below everything.
class FinPoset {
public:
  FinPoset(int size, std::vector<uint8_t> leq,
           std::optional<int> bottom = std::nullopt);

  static FinPoset chain(int n);               // 0 < 1 < ... < n-1
  static FinPoset powerset(int k);            // subsets of a k-set by inclusion
  static FinPoset diamond();                  // 0 < x,y < 1
  static FinPoset from_leq_pairs(int size, const std::vector<std::pair<int, int>>& pairs,
                                 std::optional<int> bottom = std::nullopt);

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[static_cast<size_t>(a) * n_ + b] != 0; }
  std::optional<int> bottom() const { return bottom_; }

  bool has_all_meets() const;                 // meet semilattice test
  std::optional<int> meet(int a, int b) const;

  /// Maximal elements among those strictly above bottom ("atoms").
  std::vector<int> minimal_above_bottom() const;

private:
  int n_;
  std::vector<uint8_t> leq_;
  std::optional<int> bottom_;
};

/// A filter stored by its principal generator; in a finite poset every
/// filter is of this form.
struct PrincipalFilter {
  int generator;
  bool operator==(const PrincipalFilter&) const = default;
};

std::vector<int> closure_up(const FinPoset& p, const std::vector<int>& xs);
bool is_filter(const FinPoset& p, const std::vector<int>& f);
int filter_minimum(const FinPoset& p, const std::vector<int>& f);
std::vector<int> realize(const FinPoset& p, PrincipalFilter f);

/// Generators of all maximal proper filters. Requires a bottom. For sizes
/// up to 12 the result is cross-checked against a scan over all principal
/// filters.
std::vector<PrincipalFilter> ultrafilters(const FinPoset& p);

/// Maximality criterion for a proper filter in a meet semilattice:
/// every y meeting all of f non-trivially already lies in f.
bool exel_criterion(const FinPoset& p, const std::vector<int>& f);

/// Definitional maximality test, used as the oracle side of the criterion.
bool is_maximal_proper_filter(const FinPoset& p, const std::vector<int>& f);

std::string poset_to_json(const FinPoset& p);
FinPoset poset_from_json(const std::string& text);

}  // namespace stonedual
