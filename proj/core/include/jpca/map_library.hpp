// Registry of the named maps and families used by the experiments, with
// their documented structural properties attached for verification.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jpca/rule.hpp"

namespace jpca {

struct ExpectedProps {
  std::optional<bool> surjective;
  std::optional<bool> left_permutative;
  std::optional<bool> right_permutative;
  std::optional<bool> left_closing;
  std::optional<bool> right_closing;
  std::optional<bool> injective;
  std::optional<bool> fixes_zero;  // table entry for the all-zeros block is 0
  std::string degree_note;         // documentation only, never computed
};

struct MapEntry {
  std::string name;
  std::string spec;  // rulespec text, resolvable by parse_rulespec
  std::string doc;
  ExpectedProps expected;
};

class MapLibrary {
 public:
  static const MapLibrary& instance();

  LocalRule resolve(std::string_view name) const;
  const MapEntry& entry(std::string_view name) const;
  bool contains(std::string_view name) const;
  const std::vector<MapEntry>& entries() const { return entries_; }

  // Derived span-4 families, index 1..32:
  //   flip_post_span4: flip after map j        flip_pre_span4: flip before map j
  //   d_post_span4:    x0+x1 after map j       perm_plus_span4: x0 + p_j(x1..x4)
  LocalRule family(std::string_view kind, unsigned index) const;

  // Resolves either a library name or any rulespec text.
  LocalRule resolve_spec(std::string_view name_or_spec) const;

 private:
  MapLibrary();

  std::vector<MapEntry> entries_;
};

}  // namespace jpca
