#include "gil/suite.hpp"

#include <algorithm>
#include <exception>
#include <iomanip>
#include <sstream>

#include "gil/errors.hpp"
#include "gil/io.hpp"

namespace gil {

std::int64_t SuiteReport::total_violations() const {
  std::int64_t total = 0;
  for (const LawStats& s : laws) total += s.violation;
  return total;
}

namespace {

std::uint64_t structure_seed(std::uint64_t base, std::int64_t ordinal) {
  return base ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(ordinal + 1));
}

ojson witness_to_json(const Witness& w) {
  ojson out = ojson::object();
  for (const auto& [k, v] : w.items) out[k] = v;
  return out;
}

ojson instance_payload(const GammaSemigroup& g, const Instance& inst) {
  ojson out;
  out["structure"] = structure_to_json(g);
  if (inst.subset) out["subset"] = subset_to_json(*inst.subset);
  if (inst.subset2) out["subset2"] = subset_to_json(*inst.subset2);
  if (inst.ifs) out["ifs"] = ifs_to_json(*inst.ifs);
  if (inst.ifs2) out["ifs2"] = ifs_to_json(*inst.ifs2);
  if (!inst.cut_grid.empty()) {
    ojson grid = ojson::array();
    for (const Grade& t : inst.cut_grid) grid.push_back(t.str());
    out["cut_grid"] = std::move(grid);
  }
  return out;
}

struct StructureBlock {
  std::vector<LawStats> stats;
  std::vector<ViolationRecord> violations;
  std::int64_t subsets = 0, subset_pairs = 0, ifs = 0, ifs_pairs = 0;
};

std::vector<Grade> merged_cut_grid(const std::vector<Grade>& base, const IFSubset& a) {
  std::vector<Grade> grid = base;
  for (int x = 0; x < a.size(); ++x) {
    grid.push_back(a.mu(x));
    grid.push_back(a.nu(x));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

// The per-structure kernel: every law applied to every instance this structure
// contributes, in canonical order (subsets, subset pairs, IF subsets, IF
// pairs; laws in catalog order within an instance).
StructureBlock check_structure(const LawCatalog& catalog, const GammaSemigroup& g,
                               const StructureQuery& query, const Faults& faults,
                               std::uint64_t ifs_seed) {
  StructureBlock block;
  block.stats.resize(catalog.size());
  LawOptions opt;
  opt.faults = faults;

  const auto apply = [&](std::size_t li, const Instance& inst) {
    LawVerdict v = catalog[li].eval(inst, opt);
    switch (v.outcome) {
      case Outcome::Pass:
        ++block.stats[li].pass;
        break;
      case Outcome::Vacuous:
        ++block.stats[li].vacuous;
        break;
      case Outcome::Violation:
        ++block.stats[li].violation;
        block.violations.push_back(
            {catalog[li].id, instance_payload(g, inst), std::move(v.witness)});
        break;
    }
  };

  if (query.subset_mode == StructureQuery::SubsetMode::Exhaustive) {
    const std::vector<CrispSubset> subsets = enumerate_subsets(g.n());
    block.subsets = static_cast<std::int64_t>(subsets.size());
    for (const CrispSubset& m : subsets) {
      Instance inst;
      inst.structure = &g;
      inst.subset = m;
      for (std::size_t li = 0; li < catalog.size(); ++li) {
        if (catalog[li].kind == InstanceKind::Subset) apply(li, inst);
      }
    }
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      for (std::size_t j = i; j < subsets.size(); ++j) {
        Instance inst;
        inst.structure = &g;
        inst.subset = subsets[i];
        inst.subset2 = subsets[j];
        ++block.subset_pairs;
        for (std::size_t li = 0; li < catalog.size(); ++li) {
          if (catalog[li].kind == InstanceKind::SubsetPair) apply(li, inst);
        }
      }
    }
  }

  const std::vector<IFSubset> ifs_list =
      query.ifs_mode == StructureQuery::IfsMode::Exhaustive
          ? enumerate_ifs(g.n(), query.grade_denominator)
          : sample_ifs(g.n(), query.grade_denominator, query.random_count, ifs_seed);
  block.ifs = static_cast<std::int64_t>(ifs_list.size());
  const std::vector<Grade> base_grid = grade_grid(query.grade_denominator);
  for (const IFSubset& a : ifs_list) {
    Instance inst;
    inst.structure = &g;
    inst.ifs = a;
    inst.cut_grid = merged_cut_grid(base_grid, a);
    for (std::size_t li = 0; li < catalog.size(); ++li) {
      if (catalog[li].kind == InstanceKind::Ifs) apply(li, inst);
    }
  }
  for (std::size_t i = 0; i < ifs_list.size(); ++i) {
    for (std::size_t j = i; j < ifs_list.size(); ++j) {
      Instance inst;
      inst.structure = &g;
      inst.ifs = ifs_list[i];
      inst.ifs2 = ifs_list[j];
      ++block.ifs_pairs;
      for (std::size_t li = 0; li < catalog.size(); ++li) {
        if (catalog[li].kind == InstanceKind::IfsPair) apply(li, inst);
      }
    }
  }
  return block;
}

SuiteReport merge_blocks(const LawCatalog& catalog, const StructureQuery& query,
                         std::vector<StructureBlock>&& blocks) {
  SuiteReport report;
  report.catalog_version = kCatalogVersion;
  report.query = query;
  report.structures = static_cast<std::int64_t>(blocks.size());
  report.laws.resize(catalog.size());
  for (std::size_t li = 0; li < catalog.size(); ++li) report.laws[li].law_id = catalog[li].id;
  for (StructureBlock& block : blocks) {
    for (std::size_t li = 0; li < catalog.size(); ++li) {
      report.laws[li].pass += block.stats[li].pass;
      report.laws[li].vacuous += block.stats[li].vacuous;
      report.laws[li].violation += block.stats[li].violation;
    }
    report.subset_instances += block.subsets;
    report.subset_pair_instances += block.subset_pairs;
    report.ifs_instances += block.ifs;
    report.ifs_pair_instances += block.ifs_pairs;
    for (ViolationRecord& v : block.violations) report.violations.push_back(std::move(v));
  }
  return report;
}

}  // namespace

SuiteReport run_suite_serial(const LawCatalog& catalog, const StructureQuery& query,
                             const SuiteOptions& options) {
  query.validate();
  const std::vector<GammaSemigroup> structures = enumerate_structures(query);
  std::vector<StructureBlock> blocks(structures.size());
  for (std::size_t i = 0; i < structures.size(); ++i) {
    blocks[i] = check_structure(catalog, structures[i], query, options.faults,
                                structure_seed(query.seed, static_cast<std::int64_t>(i)));
  }
  return merge_blocks(catalog, query, std::move(blocks));
}

SuiteReport run_suite(const LawCatalog& catalog, const StructureQuery& query,
                      const SuiteOptions& options) {
  query.validate();
  const std::vector<GammaSemigroup> structures = enumerate_structures(query);
  std::vector<StructureBlock> blocks(structures.size());
  const int workers = std::max(1, options.workers);
  std::exception_ptr first_error = nullptr;
  const std::int64_t total = static_cast<std::int64_t>(structures.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#endif
  for (std::int64_t i = 0; i < total; ++i) {
    try {
      blocks[i] = check_structure(catalog, structures[i], query, options.faults,
                                  structure_seed(query.seed, i));
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        if (!first_error) first_error = std::current_exception();
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return merge_blocks(catalog, query, std::move(blocks));
}

LawVerdict replay_violation(const ViolationRecord& record, const LawOptions& options) {
  const ojson& payload = record.instance;
  if (!payload.contains("structure")) throw ParseError("violation record has no structure");
  const GammaSemigroup g = structure_from_json(payload.at("structure"));
  Instance inst;
  inst.structure = &g;
  if (payload.contains("ifs")) inst.ifs = ifs_from_json(payload.at("ifs"));
  if (payload.contains("ifs2")) inst.ifs2 = ifs_from_json(payload.at("ifs2"));
  if (payload.contains("subset")) inst.subset = subset_from_json(payload.at("subset"), g.n());
  if (payload.contains("subset2")) inst.subset2 = subset_from_json(payload.at("subset2"), g.n());
  if (payload.contains("cut_grid")) {
    for (const auto& t : payload.at("cut_grid")) inst.cut_grid.push_back(grade_from_json(t));
  }
  return verify_law(record.law_id, inst, options);
}

HuntResult hunt_counterexample(const std::string& law_id, const StructureQuery& query,
                               const std::string& dropped_hypothesis,
                               const SuiteOptions& options) {
  const LawDef& def = law_by_id(law_id);
  LawOptions lopt;
  lopt.faults = options.faults;
  if (!dropped_hypothesis.empty()) {
    if (std::find(def.hypotheses.begin(), def.hypotheses.end(), dropped_hypothesis) ==
        def.hypotheses.end()) {
      throw UnknownHypothesisError("law " + law_id + " has no hypothesis \"" +
                                   dropped_hypothesis + "\"");
    }
    lopt.drop.insert(dropped_hypothesis);
  }
  query.validate();

  HuntResult result;
  std::int64_t ordinal = -1;
  for_each_structure(query, [&](const GammaSemigroup& g) {
    ++ordinal;
    ++result.structures_scanned;

    const auto try_instance = [&](const Instance& inst) {
      ++result.instances_scanned;
      LawVerdict v = def.eval(inst, lopt);
      if (v.outcome == Outcome::Violation) {
        result.found = true;
        result.record = {def.id, instance_payload(g, inst), std::move(v.witness)};
        return false;
      }
      return true;
    };

    switch (def.kind) {
      case InstanceKind::Subset: {
        if (query.subset_mode != StructureQuery::SubsetMode::Exhaustive) return true;
        for (const CrispSubset& m : enumerate_subsets(g.n())) {
          Instance inst;
          inst.structure = &g;
          inst.subset = m;
          if (!try_instance(inst)) return false;
        }
        return true;
      }
      case InstanceKind::SubsetPair: {
        if (query.subset_mode != StructureQuery::SubsetMode::Exhaustive) return true;
        const std::vector<CrispSubset> subsets = enumerate_subsets(g.n());
        for (std::size_t i = 0; i < subsets.size(); ++i)
          for (std::size_t j = i; j < subsets.size(); ++j) {
            Instance inst;
            inst.structure = &g;
            inst.subset = subsets[i];
            inst.subset2 = subsets[j];
            if (!try_instance(inst)) return false;
          }
        return true;
      }
      case InstanceKind::Ifs:
      case InstanceKind::IfsPair: {
        const std::vector<IFSubset> ifs_list =
            query.ifs_mode == StructureQuery::IfsMode::Exhaustive
                ? enumerate_ifs(g.n(), query.grade_denominator)
                : sample_ifs(g.n(), query.grade_denominator, query.random_count,
                             structure_seed(query.seed, ordinal));
        const std::vector<Grade> base_grid = grade_grid(query.grade_denominator);
        if (def.kind == InstanceKind::Ifs) {
          for (const IFSubset& a : ifs_list) {
            Instance inst;
            inst.structure = &g;
            inst.ifs = a;
            inst.cut_grid = merged_cut_grid(base_grid, a);
            if (!try_instance(inst)) return false;
          }
        } else {
          for (std::size_t i = 0; i < ifs_list.size(); ++i)
            for (std::size_t j = i; j < ifs_list.size(); ++j) {
              Instance inst;
              inst.structure = &g;
              inst.ifs = ifs_list[i];
              inst.ifs2 = ifs_list[j];
              if (!try_instance(inst)) return false;
            }
        }
        return true;
      }
    }
    return true;
  });
  return result;
}

ojson violation_to_json(const ViolationRecord& record) {
  ojson out;
  out["law"] = record.law_id;
  out["instance"] = record.instance;
  out["witness"] = witness_to_json(record.witness);
  return out;
}

namespace {

ojson query_to_json(const StructureQuery& q) {
  ojson out;
  out["n_min"] = q.n_min;
  out["n_max"] = q.n_max;
  out["m_min"] = q.m_min;
  out["m_max"] = q.m_max;
  out["commutative_only"] = q.commutative_only;
  out["dedup_relabel"] = q.dedup_relabel;
  out["grade_denominator"] = q.grade_denominator;
  if (q.ifs_mode == StructureQuery::IfsMode::Random) {
    out["ifs_mode"] = "random";
    out["random_count"] = q.random_count;
    out["seed"] = q.seed;
  } else {
    out["ifs_mode"] = "exhaustive";
  }
  out["subset_mode"] = q.subset_mode == StructureQuery::SubsetMode::None ? "none" : "exhaustive";
  return out;
}

}  // namespace

ojson suite_report_to_json(const SuiteReport& report) {
  ojson out;
  out["catalog_version"] = report.catalog_version;
  out["query"] = query_to_json(report.query);
  ojson counts;
  counts["structures"] = report.structures;
  counts["subsets"] = report.subset_instances;
  counts["subset_pairs"] = report.subset_pair_instances;
  counts["ifs"] = report.ifs_instances;
  counts["ifs_pairs"] = report.ifs_pair_instances;
  out["instances"] = std::move(counts);
  ojson laws = ojson::array();
  for (const LawStats& s : report.laws) {
    ojson entry;
    entry["id"] = s.law_id;
    entry["pass"] = s.pass;
    entry["vacuous"] = s.vacuous;
    entry["violation"] = s.violation;
    ojson witnesses = ojson::array();
    for (const ViolationRecord& v : report.violations) {
      if (v.law_id == s.law_id) witnesses.push_back(violation_to_json(v));
    }
    entry["witnesses"] = std::move(witnesses);
    laws.push_back(std::move(entry));
  }
  out["laws"] = std::move(laws);
  out["total_violations"] = report.total_violations();
  return out;
}

std::string suite_report_to_table(const SuiteReport& report) {
  std::ostringstream out;
  const StructureQuery& q = report.query;
  out << "law suite report (catalog " << report.catalog_version << ")\n";
  out << "query: n=" << q.n_min << ".." << q.n_max << " m=" << q.m_min << ".." << q.m_max
      << " denominator=" << q.grade_denominator
      << " commutative_only=" << (q.commutative_only ? "yes" : "no")
      << " dedup=" << (q.dedup_relabel ? "yes" : "no") << " ifs="
      << (q.ifs_mode == StructureQuery::IfsMode::Random
              ? "random(count=" + std::to_string(q.random_count) +
                    ",seed=" + std::to_string(q.seed) + ")"
              : "exhaustive")
      << " subsets="
      << (q.subset_mode == StructureQuery::SubsetMode::None ? "none" : "exhaustive") << "\n";
  out << "instances: structures=" << report.structures << " subsets=" << report.subset_instances
      << " subset_pairs=" << report.subset_pair_instances << " ifs=" << report.ifs_instances
      << " ifs_pairs=" << report.ifs_pair_instances << "\n\n";
  out << std::left << std::setw(10) << "law" << std::right << std::setw(12) << "pass"
      << std::setw(12) << "vacuous" << std::setw(12) << "violation" << "\n";
  for (const LawStats& s : report.laws) {
    out << std::left << std::setw(10) << s.law_id << std::right << std::setw(12) << s.pass
        << std::setw(12) << s.vacuous << std::setw(12) << s.violation << "\n";
  }
  out << "\ntotal violations: " << report.total_violations() << "\n";
  if (!report.violations.empty()) {
    out << "\nwitnesses:\n";
    for (const ViolationRecord& v : report.violations) {
      out << "  " << v.law_id << ": " << v.witness.str() << "\n";
    }
  }
  return out.str();
}

}  // namespace gil
