#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gil/extension.hpp"
#include "gil/ideals.hpp"

namespace gil {

inline constexpr const char* kCatalogVersion = "1.0";

// Fully concrete counterexample data: ordered key/value items so reports are
// deterministic and witnesses can be replayed.
struct Witness {
  std::vector<std::pair<std::string, std::string>> items;

  void put(std::string key, std::string value) {
    items.emplace_back(std::move(key), std::move(value));
  }
  void put(std::string key, int value) { put(std::move(key), std::to_string(value)); }
  void put(std::string key, const Grade& value) { put(std::move(key), value.str()); }
  void put(std::string key, const CrispSubset& value) { put(std::move(key), value.str()); }

  const std::string* find(const std::string& key) const {
    for (const auto& [k, v] : items) {
      if (k == key) return &v;
    }
    return nullptr;
  }

  std::string str() const {
    std::string out;
    for (const auto& [k, v] : items) {
      if (!out.empty()) out += "  ";
      out += k + "=" + v;
    }
    return out;
  }
};

enum class Outcome { Pass, Vacuous, Violation };

const char* outcome_name(Outcome o);

enum class InstanceKind { Subset, Ifs, SubsetPair, IfsPair };

// One law instance: a structure plus whatever the law's kind consumes.
// cut_grid supplies the thresholds scanned by the cut-commutation law; when
// empty it defaults to the grades of the IF subset plus {0, 1}.
struct Instance {
  const GammaSemigroup* structure = nullptr;
  std::optional<IFSubset> ifs, ifs2;
  std::optional<CrispSubset> subset, subset2;
  std::vector<Grade> cut_grid;
};

struct LawVerdict {
  std::string law_id;
  Outcome outcome = Outcome::Pass;
  Witness witness;  // populated for Violation
};

struct LawOptions {
  std::set<std::string> drop;  // hypothesis names treated as satisfied
  Faults faults;
};

struct LawDef {
  std::string id;
  std::string summary;
  InstanceKind kind;
  std::vector<std::string> hypotheses;  // names accepted by LawOptions::drop
  std::function<LawVerdict(const Instance&, const LawOptions&)> eval;
};

using LawCatalog = std::vector<LawDef>;

// The full catalog in canonical order; ids are unique and stable.
const LawCatalog& law_catalog();

const LawDef& law_by_id(const std::string& id);  // UnknownLawError

// Checks dropped hypothesis names against the law, then evaluates it.
LawVerdict verify_law(const std::string& id, const Instance& instance,
                      const LawOptions& options = {});

// {0, 1/d, ..., 1}
std::vector<Grade> grade_grid(int denominator);

// grades of a, plus 0 and 1, sorted and deduplicated.
std::vector<Grade> default_cut_grid(const IFSubset& a);

}  // namespace gil
