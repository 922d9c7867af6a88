#include "gil/laws.hpp"

#include <algorithm>

#include "gil/errors.hpp"

namespace gil {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Vacuous: return "vacuous";
    case Outcome::Violation: return "violation";
  }
  return "?";
}

std::vector<Grade> grade_grid(int denominator) {
  if (denominator < 1) throw Error("grade denominator must be at least 1");
  std::vector<Grade> out;
  out.reserve(denominator + 1);
  for (int k = 0; k <= denominator; ++k) out.push_back(Grade(Rational(k, denominator)));
  return out;
}

std::vector<Grade> default_cut_grid(const IFSubset& a) {
  std::vector<Grade> out{Grade::zero(), Grade::one()};
  for (int x = 0; x < a.size(); ++x) {
    out.push_back(a.mu(x));
    out.push_back(a.nu(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

const GammaSemigroup& req_structure(const Instance& i) {
  if (!i.structure) throw Error("law instance has no structure");
  return *i.structure;
}

const IFSubset& req_ifs(const Instance& i) {
  if (!i.ifs) throw Error("law instance has no IF subset");
  return *i.ifs;
}

const IFSubset& req_ifs2(const Instance& i) {
  if (!i.ifs2) throw Error("law instance has no second IF subset");
  return *i.ifs2;
}

const CrispSubset& req_subset(const Instance& i) {
  if (!i.subset) throw Error("law instance has no subset");
  return *i.subset;
}

const CrispSubset& req_subset2(const Instance& i) {
  if (!i.subset2) throw Error("law instance has no second subset");
  return *i.subset2;
}

bool kept(const LawOptions& o, const char* name) { return o.drop.find(name) == o.drop.end(); }

LawVerdict pass(const char* id) { return {id, Outcome::Pass, {}}; }
LawVerdict vacuous(const char* id) { return {id, Outcome::Vacuous, {}}; }
LawVerdict violation(const char* id, Witness w) { return {id, Outcome::Violation, std::move(w)}; }

std::string triple(int x, int gamma, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(gamma) + "," + std::to_string(y) + ")";
}

std::string ifs_str(const IFSubset& a) {
  std::string mu = "(", nu = "(";
  for (int x = 0; x < a.size(); ++x) {
    if (x) {
      mu += ",";
      nu += ",";
    }
    mu += a.mu(x).str();
    nu += a.nu(x).str();
  }
  return "mu=" + mu + ") nu=" + nu + ")";
}

void put_ideal_fail(Witness& w, const IfIdealVerdict& v) {
  if (v.state == IfIdealVerdict::State::Empty) {
    w.put("reason", "empty IF subset");
    return;
  }
  w.put("side", v.side == 'l' ? "left" : "right");
  w.put("component", v.component == 'm' ? "mu" : "nu");
  w.put("at", triple(v.x, v.gamma, v.y));
  w.put("lhs", v.lhs);
  w.put("rhs", v.rhs);
}

void put_cmp_fail(Witness& w, const GradeCompareWitness& v) {
  w.put("wx", v.x);
  if (v.y >= 0) w.put("wy", v.y);
  w.put("component", v.component == 'm' ? "mu" : "nu");
  w.put("lhs", v.lhs);
  w.put("rhs", v.rhs);
}

void put_pred_fail(Witness& w, const IfPredicateVerdict& v) {
  if (v.state == IfPredicateVerdict::State::NotIdeal) {
    w.put("reason", "not an IF ideal");
    put_ideal_fail(w, v.ideal);
  } else if (v.fail) {
    put_cmp_fail(w, *v.fail);
  }
}

// L-2.9: the crisp ideal/prime/semiprime predicates of a non-empty M agree
// with the IF predicates of its characteristic function.
LawVerdict eval_2_9(const Instance& inst, const LawOptions& opt) {
  const auto& g = req_structure(inst);
  const auto& m = req_subset(inst);
  if (kept(opt, "nonempty") && m.is_empty()) return vacuous("L-2.9");
  const IFSubset chi = characteristic(m);

  const bool crisp_ideal = is_crisp_ideal(g, m, opt.faults).holds();
  const bool fuzzy_ideal = is_if_ideal(g, chi, opt.faults).holds();
  const bool crisp_prime = is_crisp_prime(g, m, opt.faults).holds();
  const bool fuzzy_prime = is_if_prime(g, chi, opt.faults).holds();
  const bool crisp_semi = is_crisp_semiprime(g, m, opt.faults).holds();
  const bool fuzzy_semi = is_if_semiprime(g, chi, opt.faults).holds();

  const auto mismatch = [&](const char* predicate, bool crisp, bool fuzzy) {
    Witness w;
    w.put("M", m);
    w.put("predicate", predicate);
    w.put("crisp", crisp ? "true" : "false");
    w.put("fuzzy(characteristic)", fuzzy ? "true" : "false");
    return violation("L-2.9", std::move(w));
  };
  if (crisp_ideal != fuzzy_ideal) return mismatch("ideal", crisp_ideal, fuzzy_ideal);
  if (crisp_prime != fuzzy_prime) return mismatch("prime", crisp_prime, fuzzy_prime);
  if (crisp_semi != fuzzy_semi) return mismatch("semiprime", crisp_semi, fuzzy_semi);
  return pass("L-2.9");
}

// L-2.10: for a crisp ideal, the ideal-pair, elementwise, and sandwich
// formulations of primeness agree, and likewise for semiprimeness.
LawVerdict eval_2_10(const Instance& inst, const LawOptions& opt) {
  const auto& g = req_structure(inst);
  const auto& m = req_subset(inst);
  if (kept(opt, "ideal") && !is_crisp_ideal(g, m, opt.faults).holds()) return vacuous("L-2.10");

  const bool p_pair = !crisp_prime_pair_fail(g, m, opt.faults);
  const bool p_elem = !crisp_prime_elementwise_fail(g, m);
  const bool p_sand = !crisp_prime_sandwich_fail(g, m);
  const bool s_pair = !crisp_semiprime_pair_fail(g, m, opt.faults);
  const bool s_elem = !crisp_semiprime_elementwise_fail(g, m);
  const bool s_sand = !crisp_semiprime_sandwich_fail(g, m);

  const auto mismatch = [&](const char* predicate, bool pair, bool elem, bool sand) {
    Witness w;
    w.put("M", m);
    w.put("predicate", predicate);
    w.put("ideal-pair form", pair ? "true" : "false");
    w.put("elementwise form", elem ? "true" : "false");
    w.put("sandwich form", sand ? "true" : "false");
    return violation("L-2.10", std::move(w));
  };
  if (p_pair != p_elem || p_elem != p_sand) return mismatch("prime", p_pair, p_elem, p_sand);
  if (s_pair != s_elem || s_elem != s_sand) return mismatch("semiprime", s_pair, s_elem, s_sand);
  return pass("L-2.10");
}

// L-3.2: over a commutative structure the extension of an IF ideal is an IF
// ideal, for every x.
LawVerdict eval_3_2(const Instance& inst, const LawOptions& opt) {
  const auto& g = req_structure(inst);
  const auto& a = req_ifs(inst);
  if (kept(opt, "commutativity") && !g.is_commutative().commutative) return vacuous("L-3.2");
  if (kept(opt, "ideal") && !is_if_ideal(g, a, opt.faults).holds()) return vacuous("L-3.2");
  for (int x = 0; x < g.n(); ++x) {
    const IfIdealVerdict v = is_if_ideal(g, extend(g, x, a), opt.faults);
    if (!v.holds()) {
      Witness w;
      w.put("x", x);
      w.put("conclusion", "extension is not an IF ideal");
      put_ideal_fail(w, v);
      return violation("L-3.2", std::move(w));
    }
  }
  return pass("L-3.2");
}

// L-3.3: no commutativity needed on the right-handed side: the extension of an
// IF right ideal is an IF right ideal.
LawVerdict eval_3_3(const Instance& inst, const LawOptions& opt) {
  const auto& g = req_structure(inst);
  const auto& a = req_ifs(inst);
  if (kept(opt, "right-ideal") && !is_if_right_ideal(g, a, opt.faults).holds()) {
    return vacuous("L-3.3");
  }
  // The conclusion is the absorbing inequality property: extending a right
  // ideal by a point with mu(x) = 0 can yield an empty IF subset whose
  // inequalities still hold (e.g. char({1}) extended by 0 over the left
  // projection), so the non-emptiness gate stays on the hypothesis side.
  for (int x = 0; x < g.n(); ++x) {
    const IfIdealVerdict v = if_right_ideal_property(g, extend(g, x, a), opt.faults);
    if (!v.holds()) {
      Witness w;
      w.put("x", x);
      w.put("conclusion", "extension breaks the right-ideal inequalities");
      put_ideal_fail(w, v);
      return violation("L-3.3", std::move(w));
    }
  }
  return pass("L-3.3");
}

// L-3.4: over a commutative structure the extension of an IF prime ideal is an
// IF prime ideal.
LawVerdict eval_3_4(const Instance& inst, const LawOptions& opt) {
  const auto& g = req_structure(inst);
  const auto& a = req_ifs(inst);
  if (kept(opt, "commutativity") && !g.is_commutative().commutative) return vacuous("L-3.4");
  if (kept(opt, "prime") && !is_if_prime(g, a, opt.faults).holds()) return vacuous("L-3.4");
  for (int x = 0; x < g.n(); ++x) {
    const IfPredicateVerdict v = is_if_prime(g, extend(g, x, a), opt.faults);
    if (!v.holds()) {
      Witness w;
      w.put("x", x);
      w.put("conclusion", "extension is not an IF prime ideal");
      put_pred_fail(w, v);
      return violation("L-3.4", std::move(w));
    }
  }
  return pass("L-3.4");
}

// L-3.6.1: A is contained in <x, A> for every x when A is an IF ideal.
LawVerdict eval_3_6_1(const Instance& inst, const LawOptions& opt) {
  const auto& g = req_structure(inst);
  const auto& a = req_ifs(inst);
  if (kept(opt, "ideal") && !is_if_ideal(g, a, opt.faults).holds()) return vacuous("L-3.6.1");
  for (int x = 0; x < g.n(); ++x) {
    const IFSubset e = extend(g, x, a);
    for (int y = 0; y < g.n(); ++y) {
      if (a.mu(y) > e.mu(y) || a.nu(y) < e.nu(y)) {
        const bool mu_broke = a.mu(y) > e.mu(y);
        Witness w;
        w.put("x", x);
        w.put("y", y);
        w.put("component", mu_broke ? "mu" : "nu");
        w.put("A(y)", mu_broke ? a.mu(y) : a.nu(y));
        w.put("<x,A>(y)", mu_broke ? e.mu(y) : e.nu(y));
        return violation("L-3.6.1", std::move(w));
      }
    }
  }
  return pass("L-3.6.1");
}

// L-3.6.2: the iterate chain <(x.al)^k x, A> is monotone in k (k = 0
// included), for IF ideals.
LawVerdict eval_3_6_2(const Instance& inst, const LawOptions& opt) {
  const auto& g = req_structure(inst);
  const auto& a = req_ifs(inst);
  if (kept(opt, "ideal") && !is_if_ideal(g, a, opt.faults).holds()) return vacuous("L-3.6.2");
  constexpr int kMaxPower = 3;
  for (int x = 0; x < g.n(); ++x)
    for (int al = 0; al < g.m(); ++al) {
      IFSubset prev = extend_iterated(g, x, al, 0, a);
      for (int k = 1; k <= kMaxPower + 1; ++k) {
        const IFSubset cur = extend_iterated(g, x, al, k, a);
        if (!ifs_leq(prev, cur)) {
          Witness w;
          w.put("x", x);
          w.put("alpha", al);
          w.put("k", k - 1);
          w.put("lhs", ifs_str(prev));
          w.put("rhs", ifs_str(cur));
          return violation("L-3.6.2", std::move(w));
        }
        prev = cur;
      }
    }
  return pass("L-3.6.2");
}

// L-3.6.3: when A is an IF ideal and mu(x) > 0, nu(x) < 1, the extension by x
// has full support and full inff.
LawVerdict eval_3_6_3(const Instance& inst, const LawOptions& opt) {
  const auto& g = req_structure(inst);
  const auto& a = req_ifs(inst);
  if (kept(opt, "ideal") && !is_if_ideal(g, a, opt.faults).holds()) return vacuous("L-3.6.3");
  for (int x = 0; x < g.n(); ++x) {
    if (!(a.mu(x) > Grade::zero() && a.nu(x) < Grade::one())) continue;
    const IFSubset e = extend(g, x, a);
    const CrispSubset supp = support(e);
    const CrispSubset in = inff(e);
    if (!supp.is_full() || !in.is_full()) {
      Witness w;
      w.put("x", x);
      w.put("supp", supp);
      w.put("inff", in);
      return violation("L-3.6.3", std::move(w));
    }
  }
  return pass("L-3.6.3");
}

// L-3.9: extension commutes with the characteristic function:
// <x, char(M)> == char(<x, M>).
LawVerdict eval_3_9(const Instance& inst, const LawOptions& opt) {
  const auto& g = req_structure(inst);
  const auto& m = req_subset(inst);
  if (kept(opt, "nonempty") && m.is_empty()) return vacuous("L-3.9");
  const IFSubset chi = characteristic(m);
  for (int x = 0; x < g.n(); ++x) {
    const IFSubset lhs = extend(g, x, chi);
    const IFSubset rhs = characteristic(crisp_extension(g, x, m));
    if (lhs != rhs) {
      Witness w;
      w.put("M", m);
      w.put("x", x);
      w.put("<x,char(M)>", ifs_str(lhs));
      w.put("char(<x,M>)", ifs_str(rhs));
      return violation("L-3.9", std::move(w));
    }
  }
  return pass("L-3.9");
}

// L-3.10: extension commutes with level cuts at every threshold of the grid.
LawVerdict eval_3_10(const Instance& inst, const LawOptions& opt) {
  const auto& g = req_structure(inst);
  const auto& a = req_ifs(inst);
  if (kept(opt, "nonempty") && !is_nonempty(a)) return vacuous("L-3.10");
  const std::vector<Grade> grid = inst.cut_grid.empty() ? default_cut_grid(a) : inst.cut_grid;
  for (int x = 0; x < g.n(); ++x) {
    const IFSubset e = extend(g, x, a);
    for (const Grade& t : grid) {
      const CutPair cut_of_extension = level_cut(e, t);
      const CutPair cut_of_a = level_cut(a, t);
      const CrispSubset upper = crisp_extension(g, x, cut_of_a.upper);
      const CrispSubset lower = crisp_extension(g, x, cut_of_a.lower);
      if (cut_of_extension.upper != upper || cut_of_extension.lower != lower) {
        const bool upper_broke = cut_of_extension.upper != upper;
        Witness w;
        w.put("x", x);
        w.put("t", t);
        w.put("component", upper_broke ? "upper" : "lower");
        w.put("<x,A>_t", upper_broke ? cut_of_extension.upper : cut_of_extension.lower);
        w.put("<x,A_t>", upper_broke ? upper : lower);
        return violation("L-3.10", std::move(w));
      }
    }
  }
  return pass("L-3.10");
}

// L-3.11: over a commutative structure, an IF subset fixed by every extension
// is constant.
LawVerdict eval_3_11(const Instance& inst, const LawOptions& opt) {
  const auto& g = req_structure(inst);
  const auto& a = req_ifs(inst);
  if (kept(opt, "commutativity") && !g.is_commutative().commutative) return vacuous("L-3.11");
  if (kept(opt, "all-fixed") && !fixed_point_set(g, a).is_full()) return vacuous("L-3.11");
  if (!is_constant(a)) {
    Witness w;
    w.put("conclusion", "A is not constant");
    w.put("A", ifs_str(a));
    return violation("L-3.11", std::move(w));
  }
  return pass("L-3.11");
}

// L-3.11c: a non-constant IF prime ideal of a commutative structure is not
// maximal: some extension strictly enlarges it.
LawVerdict eval_3_11c(const Instance& inst, const LawOptions& opt) {
  const auto& g = req_structure(inst);
  const auto& a = req_ifs(inst);
  if (kept(opt, "commutativity") && !g.is_commutative().commutative) return vacuous("L-3.11c");
  if (kept(opt, "prime") && !is_if_prime(g, a, opt.faults).holds()) return vacuous("L-3.11c");
  if (kept(opt, "nonconstant") && is_constant(a)) return vacuous("L-3.11c");
  for (int x = 0; x < g.n(); ++x) {
    const IFSubset e = extend(g, x, a);
    if (ifs_leq(a, e) && e != a) return pass("L-3.11c");
  }
  Witness w;
  w.put("conclusion", "no x yields a strictly larger extension");
  w.put("A", ifs_str(a));
  return violation("L-3.11c", std::move(w));
}

// L-3.13: over a commutative structure the extension of an IF semiprime ideal
// is an IF semiprime ideal.
LawVerdict eval_3_13(const Instance& inst, const LawOptions& opt) {
  const auto& g = req_structure(inst);
  const auto& a = req_ifs(inst);
  if (kept(opt, "commutativity") && !g.is_commutative().commutative) return vacuous("L-3.13");
  if (kept(opt, "semiprime") && !is_if_semiprime(g, a, opt.faults).holds()) {
    return vacuous("L-3.13");
  }
  for (int x = 0; x < g.n(); ++x) {
    const IfPredicateVerdict v = is_if_semiprime(g, extend(g, x, a), opt.faults);
    if (!v.holds()) {
      Witness w;
      w.put("x", x);
      w.put("conclusion", "extension is not an IF semiprime ideal");
      put_pred_fail(w, v);
      return violation("L-3.13", std::move(w));
    }
  }
  return pass("L-3.13");
}

// L-3.14: extensions of the pointwise inf of a family of IF semiprime ideals
// stay IF semiprime (commutative structure).
LawVerdict eval_3_14(const Instance& inst, const LawOptions& opt) {
  const auto& g = req_structure(inst);
  const auto& a = req_ifs(inst);
  const auto& b = req_ifs2(inst);
  if (kept(opt, "commutativity") && !g.is_commutative().commutative) return vacuous("L-3.14");
  if (kept(opt, "semiprime-family") && !(is_if_semiprime(g, a, opt.faults).holds() &&
                                         is_if_semiprime(g, b, opt.faults).holds())) {
    return vacuous("L-3.14");
  }
  const IFSubset inf = family_inf({a, b});
  for (int x = 0; x < g.n(); ++x) {
    const IfPredicateVerdict v = is_if_semiprime(g, extend(g, x, inf), opt.faults);
    if (!v.holds()) {
      Witness w;
      w.put("x", x);
      w.put("inf", ifs_str(inf));
      w.put("conclusion", "extension of the family inf is not IF semiprime");
      put_pred_fail(w, v);
      return violation("L-3.14", std::move(w));
    }
  }
  return pass("L-3.14");
}

// L-3.15: the pointwise inf of IF semiprime ideals is an IF semiprime ideal,
// with no commutativity requirement.
LawVerdict eval_3_15(const Instance& inst, const LawOptions& opt) {
  const auto& g = req_structure(inst);
  const auto& a = req_ifs(inst);
  const auto& b = req_ifs2(inst);
  if (kept(opt, "semiprime-family") && !(is_if_semiprime(g, a, opt.faults).holds() &&
                                         is_if_semiprime(g, b, opt.faults).holds())) {
    return vacuous("L-3.15");
  }
  const IFSubset inf = family_inf({a, b});
  const IfPredicateVerdict v = is_if_semiprime(g, inf, opt.faults);
  if (!v.holds()) {
    Witness w;
    w.put("inf", ifs_str(inf));
    w.put("conclusion", "family inf is not an IF semiprime ideal");
    put_pred_fail(w, v);
    return violation("L-3.15", std::move(w));
  }
  return pass("L-3.15");
}

// L-3.16: for crisp semiprime ideals with non-empty intersection, extensions
// of the characteristic function of the intersection are IF semiprime
// (commutative structure).
LawVerdict eval_3_16(const Instance& inst, const LawOptions& opt) {
  const auto& g = req_structure(inst);
  const auto& m1 = req_subset(inst);
  const auto& m2 = req_subset2(inst);
  if (kept(opt, "commutativity") && !g.is_commutative().commutative) return vacuous("L-3.16");
  if (kept(opt, "semiprime-family") && !(is_crisp_semiprime(g, m1, opt.faults).holds() &&
                                         is_crisp_semiprime(g, m2, opt.faults).holds())) {
    return vacuous("L-3.16");
  }
  const CrispSubset inter = m1.intersect(m2);
  if (kept(opt, "nonempty-intersection") && inter.is_empty()) return vacuous("L-3.16");
  const IFSubset chi = characteristic(inter);
  for (int x = 0; x < g.n(); ++x) {
    const IfPredicateVerdict v = is_if_semiprime(g, extend(g, x, chi), opt.faults);
    if (!v.holds()) {
      Witness w;
      w.put("intersection", inter);
      w.put("x", x);
      w.put("conclusion", "extension of char(intersection) is not IF semiprime");
      put_pred_fail(w, v);
      return violation("L-3.16", std::move(w));
    }
  }
  return pass("L-3.16");
}

// L-3.17f: an IF prime ideal is fixed by extension at any point whose grades
// are (min mu, max nu).
LawVerdict eval_3_17f(const Instance& inst, const LawOptions& opt) {
  const auto& g = req_structure(inst);
  const auto& a = req_ifs(inst);
  if (kept(opt, "prime") && !is_if_prime(g, a, opt.faults).holds()) return vacuous("L-3.17f");
  const Grade mu_min = *std::min_element(a.mu_values().begin(), a.mu_values().end());
  const Grade nu_max = *std::max_element(a.nu_values().begin(), a.nu_values().end());
  std::vector<int> points;
  for (int x = 0; x < g.n(); ++x) {
    if (a.mu(x) == mu_min && a.nu(x) == nu_max) points.push_back(x);
  }
  if (kept(opt, "minimal-point") && points.empty()) return vacuous("L-3.17f");
  for (int x : points) {
    const IFSubset e = extend(g, x, a);
    if (e != a) {
      Witness w;
      w.put("x", x);
      w.put("A", ifs_str(a));
      w.put("<x,A>", ifs_str(e));
      return violation("L-3.17f", std::move(w));
    }
  }
  return pass("L-3.17f");
}

// L-3.17c: an IF ideal fixed by extension at every point whose grade pair is
// not maximal in the image is IF prime.
LawVerdict eval_3_17c(const Instance& inst, const LawOptions& opt) {
  const auto& g = req_structure(inst);
  const auto& a = req_ifs(inst);
  if (kept(opt, "ideal") && !is_if_ideal(g, a, opt.faults).holds()) return vacuous("L-3.17c");
  if (kept(opt, "nonmaximal-fixed")) {
    const std::vector<GradePair> maximal = maximal_pairs(a);
    for (int y = 0; y < g.n(); ++y) {
      const bool is_max = std::find(maximal.begin(), maximal.end(), a.at(y)) != maximal.end();
      if (!is_max && extend(g, y, a) != a) return vacuous("L-3.17c");
    }
  }
  const IfPredicateVerdict v = is_if_prime(g, a, opt.faults);
  if (!v.holds()) {
    Witness w;
    w.put("conclusion", "A is not IF prime");
    w.put("A", ifs_str(a));
    put_pred_fail(w, v);
    return violation("L-3.17c", std::move(w));
  }
  return pass("L-3.17c");
}

// L-3.18: a proper crisp ideal is prime exactly when the characteristic
// function is fixed by extension at every point outside the ideal.
LawVerdict eval_3_18(const Instance& inst, const LawOptions& opt) {
  const auto& g = req_structure(inst);
  const auto& m = req_subset(inst);
  if (kept(opt, "ideal") && !is_crisp_ideal(g, m, opt.faults).holds()) return vacuous("L-3.18");
  if (kept(opt, "proper") && m.is_full()) return vacuous("L-3.18");
  const bool prime = is_crisp_prime(g, m, opt.faults).holds();
  const IFSubset chi = characteristic(m);
  bool all_fixed = true;
  int breaking_x = -1;
  for (int x = 0; x < g.n(); ++x) {
    if (m.contains(x)) continue;
    if (extend(g, x, chi) != chi) {
      all_fixed = false;
      breaking_x = x;
      break;
    }
  }
  if (prime != all_fixed) {
    Witness w;
    w.put("M", m);
    w.put("crisp prime", prime ? "true" : "false");
    w.put("char fixed outside M", all_fixed ? "true" : "false");
    if (breaking_x >= 0) w.put("x", breaking_x);
    return violation("L-3.18", std::move(w));
  }
  return pass("L-3.18");
}

}  // namespace

const LawCatalog& law_catalog() {
  static const LawCatalog catalog = {
      {"L-2.9", "crisp ideal/prime/semiprime agree with the IF predicates of the characteristic",
       InstanceKind::Subset, {"nonempty"}, eval_2_9},
      {"L-2.10", "the three crisp prime (and semiprime) formulations agree on ideals",
       InstanceKind::Subset, {"ideal"}, eval_2_10},
      {"L-3.2", "extensions of IF ideals are IF ideals (commutative)", InstanceKind::Ifs,
       {"commutativity", "ideal"}, eval_3_2},
      {"L-3.3", "extensions of IF right ideals are IF right ideals", InstanceKind::Ifs,
       {"right-ideal"}, eval_3_3},
      {"L-3.4", "extensions of IF prime ideals are IF prime ideals (commutative)",
       InstanceKind::Ifs, {"commutativity", "prime"}, eval_3_4},
      {"L-3.6.1", "an IF ideal is contained in each of its extensions", InstanceKind::Ifs,
       {"ideal"}, eval_3_6_1},
      {"L-3.6.2", "iterated-power extensions form a monotone chain", InstanceKind::Ifs, {"ideal"},
       eval_3_6_2},
      {"L-3.6.3", "extensions by interior points have full support and inff", InstanceKind::Ifs,
       {"ideal"}, eval_3_6_3},
      {"L-3.9", "extension commutes with characteristic functions", InstanceKind::Subset,
       {"nonempty"}, eval_3_9},
      {"L-3.10", "extension commutes with level cuts", InstanceKind::Ifs, {"nonempty"},
       eval_3_10},
      {"L-3.11", "an IF subset fixed by every extension is constant (commutative)",
       InstanceKind::Ifs, {"commutativity", "all-fixed"}, eval_3_11},
      {"L-3.11c", "a non-constant IF prime ideal is enlarged by some extension (commutative)",
       InstanceKind::Ifs, {"commutativity", "prime", "nonconstant"}, eval_3_11c},
      {"L-3.13", "extensions of IF semiprime ideals are IF semiprime (commutative)",
       InstanceKind::Ifs, {"commutativity", "semiprime"}, eval_3_13},
      {"L-3.14", "extensions of the inf of IF semiprime ideals are IF semiprime (commutative)",
       InstanceKind::IfsPair, {"commutativity", "semiprime-family"}, eval_3_14},
      {"L-3.15", "the inf of IF semiprime ideals is an IF semiprime ideal", InstanceKind::IfsPair,
       {"semiprime-family"}, eval_3_15},
      {"L-3.16", "extensions of char of an intersection of crisp semiprime ideals are IF "
                 "semiprime (commutative)",
       InstanceKind::SubsetPair, {"commutativity", "semiprime-family", "nonempty-intersection"},
       eval_3_16},
      {"L-3.17f", "IF prime ideals are fixed by extensions at minimal-grade points",
       InstanceKind::Ifs, {"prime", "minimal-point"}, eval_3_17f},
      {"L-3.17c", "an IF ideal fixed at all non-maximal points is IF prime", InstanceKind::Ifs,
       {"ideal", "nonmaximal-fixed"}, eval_3_17c},
      {"L-3.18", "a proper crisp ideal is prime iff char is fixed outside it",
       InstanceKind::Subset, {"ideal", "proper"}, eval_3_18},
  };
  return catalog;
}

const LawDef& law_by_id(const std::string& id) {
  for (const LawDef& def : law_catalog()) {
    if (def.id == id) return def;
  }
  throw UnknownLawError("unknown law \"" + id + "\"");
}

LawVerdict verify_law(const std::string& id, const Instance& instance, const LawOptions& options) {
  const LawDef& def = law_by_id(id);
  for (const std::string& name : options.drop) {
    if (std::find(def.hypotheses.begin(), def.hypotheses.end(), name) == def.hypotheses.end()) {
      throw UnknownHypothesisError("law " + id + " has no hypothesis \"" + name + "\"");
    }
  }
  return def.eval(instance, options);
}

}  // namespace gil
