#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gil/io.hpp"
#include "gil/suite.hpp"

namespace {

using namespace gil;

// Exit codes: 0 = success / no violation, 1 = violation or witness found,
// 2 = usage or input error.
constexpr int kOk = 0;
constexpr int kFound = 1;
constexpr int kUsage = 2;

int default_workers() {
  if (const char* env = std::getenv("GIL_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (...) {
    }
    std::cerr << "warning: ignoring invalid GIL_WORKERS=\"" << env << "\"\n";
  }
  return 1;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

std::string json_line(const ojson& j) { return j.dump(2) + "\n"; }

std::string yesno(bool b) { return b ? "yes" : "no"; }

ojson ideal_verdict_json(const IfIdealVerdict& v) {
  ojson out;
  out["holds"] = v.holds();
  if (v.state == IfIdealVerdict::State::Empty) {
    out["reason"] = "empty IF subset";
  } else if (v.state == IfIdealVerdict::State::Fails) {
    ojson w;
    w["x"] = v.x;
    w["gamma"] = v.gamma;
    w["y"] = v.y;
    w["component"] = v.component == 'm' ? "mu" : "nu";
    w["side"] = v.side == 'l' ? "left" : "right";
    w["lhs"] = v.lhs.str();
    w["rhs"] = v.rhs.str();
    out["witness"] = std::move(w);
  }
  return out;
}

ojson pred_verdict_json(const IfPredicateVerdict& v) {
  ojson out;
  out["holds"] = v.holds();
  if (v.state == IfPredicateVerdict::State::NotIdeal) {
    out["reason"] = "not an IF ideal";
  } else if (v.fail) {
    ojson w;
    w["x"] = v.fail->x;
    if (v.fail->y >= 0) w["y"] = v.fail->y;
    w["component"] = v.fail->component == 'm' ? "mu" : "nu";
    w["lhs"] = v.fail->lhs.str();
    w["rhs"] = v.fail->rhs.str();
    out["witness"] = std::move(w);
  }
  return out;
}

ojson crisp_verdict_json(const CrispPredicateVerdict& v) {
  ojson out;
  out["holds"] = v.holds();
  if (v.state == CrispPredicateVerdict::State::Empty) {
    out["reason"] = "empty subset";
  } else if (v.state == CrispPredicateVerdict::State::NotIdeal) {
    out["reason"] = "not an ideal";
  } else if (v.fail) {
    ojson w;
    w["x"] = v.fail->x;
    if (v.fail->y >= 0) w["y"] = v.fail->y;
    out["witness"] = std::move(w);
  }
  return out;
}

std::string verdict_line(const ojson& v) {
  std::string line = v.at("holds").get<bool>() ? "yes" : "no";
  if (v.contains("reason")) line += " (" + v.at("reason").get<std::string>() + ")";
  if (v.contains("witness")) line += "  witness: " + v.at("witness").dump();
  return line;
}

struct CheckArgs {
  std::string structure_path, ifs_path, subset_path, format = "table", out_path;
};

int cmd_check(const CheckArgs& args) {
  const GammaSemigroup g = structure_from_json(read_json_file(args.structure_path));
  const CommutativityResult comm = g.is_commutative();

  ojson report;
  ojson st;
  st["valid"] = true;
  st["n"] = g.n();
  st["m"] = g.m();
  st["commutative"] = comm.commutative;
  if (comm.witness) {
    ojson w;
    w["a"] = comm.witness->a;
    w["gamma"] = comm.witness->gamma;
    w["b"] = comm.witness->b;
    st["witness"] = std::move(w);
  }
  report["structure"] = std::move(st);

  if (!args.ifs_path.empty()) {
    const IFSubset a = ifs_from_json(read_json_file(args.ifs_path));
    if (a.size() != g.n()) {
      throw LengthError("IF subset has " + std::to_string(a.size()) + " points, structure has " +
                        std::to_string(g.n()));
    }
    ojson p;
    p["nonempty"] = is_nonempty(a);
    p["constant"] = is_constant(a);
    p["left_ideal"] = ideal_verdict_json(is_if_left_ideal(g, a));
    p["right_ideal"] = ideal_verdict_json(is_if_right_ideal(g, a));
    p["ideal"] = ideal_verdict_json(is_if_ideal(g, a));
    p["prime"] = pred_verdict_json(is_if_prime(g, a));
    p["semiprime"] = pred_verdict_json(is_if_semiprime(g, a));
    report["ifs_profile"] = std::move(p);
  }

  if (!args.subset_path.empty()) {
    const CrispSubset m = subset_from_json(read_json_file(args.subset_path), g.n());
    ojson p;
    p["set"] = m.elements();
    const CrispIdealVerdict iv = is_crisp_ideal(g, m);
    ojson ij;
    ij["holds"] = iv.holds();
    if (iv.state == CrispIdealVerdict::State::Empty) ij["reason"] = "empty subset";
    if (iv.state == CrispIdealVerdict::State::Fails) {
      ojson w;
      w["x"] = iv.x;
      w["gamma"] = iv.gamma;
      w["y"] = iv.y;
      w["side"] = iv.side == 'l' ? "left" : "right";
      ij["witness"] = std::move(w);
    }
    p["ideal"] = std::move(ij);
    p["prime"] = crisp_verdict_json(is_crisp_prime(g, m));
    p["semiprime"] = crisp_verdict_json(is_crisp_semiprime(g, m));
    if (m.is_full()) p["improper"] = true;  // M = S: verbatim-true predicates
    report["subset_profile"] = std::move(p);
  }

  if (args.format == "json") {
    emit(json_line(report), args.out_path);
    return kOk;
  }
  std::string text = "structure: valid gamma-semigroup (n=" + std::to_string(g.n()) +
                     ", m=" + std::to_string(g.m()) + "), commutative: " +
                     yesno(comm.commutative);
  if (comm.witness) {
    text += "  (witness " + std::to_string(comm.witness->a) + "." +
            std::to_string(comm.witness->gamma) + "." + std::to_string(comm.witness->b) + ")";
  }
  text += "\n";
  if (report.contains("ifs_profile")) {
    const ojson& p = report["ifs_profile"];
    text += "ifs profile:\n";
    text += "  nonempty:    " + yesno(p["nonempty"].get<bool>()) + "\n";
    text += "  constant:    " + yesno(p["constant"].get<bool>()) + "\n";
    text += "  left ideal:  " + verdict_line(p["left_ideal"]) + "\n";
    text += "  right ideal: " + verdict_line(p["right_ideal"]) + "\n";
    text += "  ideal:       " + verdict_line(p["ideal"]) + "\n";
    text += "  prime:       " + verdict_line(p["prime"]) + "\n";
    text += "  semiprime:   " + verdict_line(p["semiprime"]) + "\n";
  }
  if (report.contains("subset_profile")) {
    const ojson& p = report["subset_profile"];
    text += "subset profile (" + p["set"].dump() + "):\n";
    text += "  ideal:       " + verdict_line(p["ideal"]) + "\n";
    text += "  prime:       " + verdict_line(p["prime"]) + "\n";
    text += "  semiprime:   " + verdict_line(p["semiprime"]) + "\n";
    if (p.contains("improper")) text += "  note: improper ideal (M = S)\n";
  }
  emit(text, args.out_path);
  return kOk;
}

ojson cut_pair_json(const CutPair& cut) {
  ojson out;
  out["upper"] = cut.upper.elements();
  out["lower"] = cut.lower.elements();
  return out;
}

// Both sides of the cut-commutation identity for the extension by `by`.
ojson cut_commutation_json(const GammaSemigroup& g, int by, const IFSubset& a, const Grade& t) {
  const IFSubset e = extend(g, by, a);
  const CutPair lhs = level_cut(e, t);
  const CutPair cut_a = level_cut(a, t);
  const CutPair rhs{crisp_extension(g, by, cut_a.upper), crisp_extension(g, by, cut_a.lower)};
  ojson out;
  out["t"] = t.str();
  out["cut_of_extension"] = cut_pair_json(lhs);
  out["extension_of_cut"] = cut_pair_json(rhs);
  out["agree"] = lhs == rhs;
  return out;
}

struct ExtendArgs {
  std::string structure_path, ifs_path, format = "table", out_path, t;
  int x = 0;
  std::optional<int> alpha, k;
};

int cmd_extend(const ExtendArgs& args) {
  const GammaSemigroup g = structure_from_json(read_json_file(args.structure_path));
  const IFSubset a = ifs_from_json(read_json_file(args.ifs_path));
  if (args.alpha.has_value() != args.k.has_value()) {
    throw Error("--alpha and --k must be given together");
  }
  const int by = args.alpha ? g.iterate_power(args.x, *args.alpha, *args.k) : args.x;
  const IFSubset e = extend(g, by, a);

  ojson report;
  report["x"] = args.x;
  if (args.alpha) {
    report["alpha"] = *args.alpha;
    report["k"] = *args.k;
  }
  report["by"] = by;
  report["result"] = ifs_to_json(e);
  if (!args.t.empty()) report["cut"] = cut_commutation_json(g, by, a, Grade::parse(args.t));

  if (args.format == "json") {
    emit(json_line(report), args.out_path);
    return kOk;
  }
  std::string text = "extension by " + g.s_name(by);
  if (args.alpha) {
    text += " = (" + g.s_name(args.x) + "." + g.g_name(*args.alpha) + ")^" +
            std::to_string(*args.k) + " " + g.s_name(args.x);
  }
  text += ":\n  mu = " + report["result"]["mu"].dump() + "\n  nu = " +
          report["result"]["nu"].dump() + "\n";
  if (report.contains("cut")) {
    const ojson& c = report["cut"];
    text += "cut commutation at t = " + c["t"].get<std::string>() + ":\n";
    text += "  cut of extension:  upper " + c["cut_of_extension"]["upper"].dump() + "  lower " +
            c["cut_of_extension"]["lower"].dump() + "\n";
    text += "  extension of cut:  upper " + c["extension_of_cut"]["upper"].dump() + "  lower " +
            c["extension_of_cut"]["lower"].dump() + "\n";
    text += std::string("  agree: ") + yesno(c["agree"].get<bool>()) + "\n";
  }
  emit(text, args.out_path);
  return kOk;
}

struct CutArgs {
  std::string ifs_path, structure_path, t, format = "table", out_path;
  std::optional<int> x;
};

int cmd_cut(const CutArgs& args) {
  const IFSubset a = ifs_from_json(read_json_file(args.ifs_path));
  const Grade t = Grade::parse(args.t);
  ojson report;
  report["t"] = t.str();
  report["cut"] = cut_pair_json(level_cut(a, t));
  std::optional<GammaSemigroup> g;
  if (!args.structure_path.empty()) {
    g = structure_from_json(read_json_file(args.structure_path));
    if (g->n() != a.size()) {
      throw LengthError("IF subset has " + std::to_string(a.size()) + " points, structure has " +
                        std::to_string(g->n()));
    }
    if (args.x) report["commutation"] = cut_commutation_json(*g, *args.x, a, t);
  } else if (args.x) {
    throw Error("--x needs --structure");
  }
  if (args.format == "json") {
    emit(json_line(report), args.out_path);
    return kOk;
  }
  std::string text = "cut at t = " + t.str() + ": upper " + report["cut"]["upper"].dump() +
                     "  lower " + report["cut"]["lower"].dump() + "\n";
  if (report.contains("commutation")) {
    text += std::string("commutation with extension by ") + std::to_string(*args.x) + ": " +
            yesno(report["commutation"]["agree"].get<bool>()) + "\n";
  }
  emit(text, args.out_path);
  return kOk;
}

struct QueryArgs {
  int n_max = 1, m_max = 1, denominator = 1;
  bool commutative_only = false, dedup = false;
  std::optional<std::int64_t> count;
  std::uint64_t seed = 0;
};

StructureQuery to_query(const QueryArgs& args) {
  StructureQuery q;
  q.n_max = args.n_max;
  q.m_max = args.m_max;
  q.grade_denominator = args.denominator;
  q.commutative_only = args.commutative_only;
  q.dedup_relabel = args.dedup;
  if (args.count) {
    q.ifs_mode = StructureQuery::IfsMode::Random;
    q.random_count = *args.count;
    q.seed = args.seed;
  }
  return q;
}

int cmd_verify(const QueryArgs& qargs, int workers, const std::string& format,
               const std::string& out_path) {
  SuiteOptions opt;
  opt.workers = workers;
  const SuiteReport report = run_suite(law_catalog(), to_query(qargs), opt);
  emit(format == "json" ? json_line(suite_report_to_json(report))
                        : suite_report_to_table(report),
       out_path);
  return report.total_violations() == 0 ? kOk : kFound;
}

int cmd_enumerate(int n, int m, bool dedup, bool commutative_only, const std::string& out_path) {
  StructureQuery q;
  q.n_min = q.n_max = n;
  q.m_min = q.m_max = m;
  q.dedup_relabel = dedup;
  q.commutative_only = commutative_only;
  std::string text;
  std::int64_t count = 0;
  for_each_structure(q, [&](const GammaSemigroup& g) {
    text += structure_to_json(g).dump() + "\n";
    ++count;
    return true;
  });
  ojson summary;
  summary["summary"]["n"] = n;
  summary["summary"]["m"] = m;
  summary["summary"]["count"] = count;
  summary["summary"]["dedup"] = dedup;
  text += summary.dump() + "\n";
  emit(text, out_path);
  return kOk;
}

int cmd_hunt(const std::string& law, const std::string& drop, const QueryArgs& qargs,
             const std::string& format, const std::string& out_path) {
  const HuntResult result = hunt_counterexample(law, to_query(qargs), drop);
  ojson report;
  report["law"] = law;
  if (!drop.empty()) report["dropped_hypothesis"] = drop;
  report["structures_scanned"] = result.structures_scanned;
  report["instances_scanned"] = result.instances_scanned;
  if (result.found) {
    report["found"] = true;
    report["violation"] = violation_to_json(result.record);
  } else {
    report["found"] = false;
    report["exhausted"] = true;
  }
  if (format == "json") {
    emit(json_line(report), out_path);
  } else {
    std::string text = "hunt " + law;
    if (!drop.empty()) text += " without \"" + drop + "\"";
    text += ": ";
    if (result.found) {
      text += "violation found\n  witness: " + result.record.witness.str() + "\n  instance: " +
              result.record.instance.dump() + "\n";
    } else {
      text += "exhausted (" + std::to_string(result.structures_scanned) + " structures, " +
              std::to_string(result.instances_scanned) + " instances)\n";
    }
    emit(text, out_path);
  }
  return result.found ? kFound : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gil: finite gamma-semigroups, exact intuitionistic fuzzy ideal extensions, and "
               "a law verification suite"};
  app.require_subcommand(1);

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand(
      "check", "validate a structure file; profile an IF subset and/or crisp subset against it");
  check->add_option("--structure", check_args.structure_path, "structure JSON file")->required();
  check->add_option("--ifs", check_args.ifs_path, "IF subset JSON file");
  check->add_option("--subset", check_args.subset_path, "crisp subset JSON file");
  check->add_option("--format", check_args.format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));
  check->add_option("--out", check_args.out_path, "output path (default stdout)");

  ExtendArgs extend_args;
  CLI::App* extend_cmd = app.add_subcommand(
      "extend", "compute the IF ideal extension <x,A> (or by the power (x.alpha)^k x)");
  extend_cmd->add_option("--structure", extend_args.structure_path, "structure JSON file")
      ->required();
  extend_cmd->add_option("--ifs", extend_args.ifs_path, "IF subset JSON file")->required();
  extend_cmd->add_option("--x", extend_args.x, "extension point")->required();
  extend_cmd->add_option("--alpha", extend_args.alpha, "gamma index of the power word");
  extend_cmd->add_option("--k", extend_args.k, "power");
  extend_cmd->add_option("--t", extend_args.t, "also check cut commutation at this grade");
  extend_cmd->add_option("--format", extend_args.format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));
  extend_cmd->add_option("--out", extend_args.out_path, "output path (default stdout)");

  CutArgs cut_args;
  CLI::App* cut_cmd =
      app.add_subcommand("cut", "level cuts U(mu:t), L(nu:t) of an IF subset");
  cut_cmd->add_option("--ifs", cut_args.ifs_path, "IF subset JSON file")->required();
  cut_cmd->add_option("--t", cut_args.t, "cut threshold (exact grade)")->required();
  cut_cmd->add_option("--structure", cut_args.structure_path, "structure JSON file");
  cut_cmd->add_option("--x", cut_args.x, "also check cut commutation for this extension point");
  cut_cmd->add_option("--format", cut_args.format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));
  cut_cmd->add_option("--out", cut_args.out_path, "output path (default stdout)");

  QueryArgs verify_query;
  int workers = default_workers();
  std::string verify_format = "table", verify_out;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the full law catalog over an enumerated instance space");
  verify->add_option("--n-max", verify_query.n_max, "largest |S|")->check(CLI::Range(1, 6));
  verify->add_option("--m-max", verify_query.m_max, "largest |Gamma|")->check(CLI::Range(1, 6));
  verify->add_option("--denominator", verify_query.denominator, "grade grid denominator")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--commutative-only", verify_query.commutative_only,
                   "restrict to commutative structures");
  verify->add_flag("--dedup", verify_query.dedup, "deduplicate structures under relabeling");
  verify->add_option("--count", verify_query.count,
                     "sample this many IF subsets per structure instead of the full grid");
  verify->add_option("--seed", verify_query.seed, "seed for --count sampling");
  verify->add_option("--workers", workers, "worker threads (default GIL_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", verify_format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));
  verify->add_option("--out", verify_out, "output path (default stdout)");

  int enum_n = 1, enum_m = 1;
  bool enum_dedup = false, enum_comm = false;
  std::string enum_out;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "write every structure of the given exact sizes, one JSON per line");
  enumerate->add_option("--n", enum_n, "|S|")->required()->check(CLI::Range(1, 6));
  enumerate->add_option("--m", enum_m, "|Gamma|")->required()->check(CLI::Range(1, 6));
  enumerate->add_flag("--dedup", enum_dedup, "deduplicate under relabeling");
  enumerate->add_flag("--commutative-only", enum_comm, "restrict to commutative structures");
  enumerate->add_option("--out", enum_out, "output path (default stdout)");

  QueryArgs hunt_query;
  std::string hunt_law, hunt_drop, hunt_format = "table", hunt_out;
  CLI::App* hunt = app.add_subcommand(
      "hunt", "search for a counterexample to one law, optionally dropping a hypothesis");
  hunt->add_option("--law", hunt_law, "law id, e.g. L-3.2")->required();
  hunt->add_option("--drop", hunt_drop, "hypothesis name to drop, e.g. commutativity");
  hunt->add_option("--n-max", hunt_query.n_max, "largest |S|")->check(CLI::Range(1, 6));
  hunt->add_option("--m-max", hunt_query.m_max, "largest |Gamma|")->check(CLI::Range(1, 6));
  hunt->add_option("--denominator", hunt_query.denominator, "grade grid denominator")
      ->check(CLI::PositiveNumber);
  hunt->add_flag("--commutative-only", hunt_query.commutative_only,
                 "restrict to commutative structures");
  hunt->add_flag("--dedup", hunt_query.dedup, "deduplicate structures under relabeling");
  hunt->add_option("--count", hunt_query.count, "sample IF subsets instead of the full grid");
  hunt->add_option("--seed", hunt_query.seed, "seed for --count sampling");
  hunt->add_option("--format", hunt_format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));
  hunt->add_option("--out", hunt_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(check_args);
    if (extend_cmd->parsed()) return cmd_extend(extend_args);
    if (cut_cmd->parsed()) return cmd_cut(cut_args);
    if (verify->parsed()) return cmd_verify(verify_query, workers, verify_format, verify_out);
    if (enumerate->parsed()) return cmd_enumerate(enum_n, enum_m, enum_dedup, enum_comm, enum_out);
    if (hunt->parsed()) return cmd_hunt(hunt_law, hunt_drop, hunt_query, hunt_format, hunt_out);
  } catch (const gil::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
