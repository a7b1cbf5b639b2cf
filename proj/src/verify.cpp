#include "hkt/verify.hpp"

#include <functional>
#include <ostream>
#include <sstream>

namespace hkt {

namespace {

void checkEq(CaseResult& res, const std::string& label, const KForm& expected,
             const KForm& computed) {
  res.checks.push_back({label, expected.str(), computed.str(), expected == computed});
}

void checkFlag(CaseResult& res, const std::string& label, bool expected,
               std::optional<bool> computed) {
  std::string comp = computed ? (*computed ? "true" : "false") : "(absent)";
  res.checks.push_back({label, expected ? "true" : "false", comp,
                        computed.has_value() && *computed == expected});
}

void checkTrue(CaseResult& res, const std::string& label, bool value,
               const std::string& detail = "") {
  res.checks.push_back({label, "true", value ? "true" : ("false" + (detail.empty() ? "" : " (" + detail + ")")),
                        value});
}

/// Compares the classification of a built-in entry against its expected table.
void checkExpected(CaseResult& res, const CatalogEntry& entry, const Report& r) {
  auto flagValue = [&](const std::string& key) -> std::optional<bool> {
    if (key == "hkt") return r.hkt;
    if (key == "strong") return r.strong;
    if (key == "weak") return r.weak;
    if (key == "balanced") return r.balanced;
    if (key == "conformally_balanced") return r.conformallyBalanced;
    if (key == "torsion_coclosed") return r.torsionCoclosed;
    if (key == "abelian_hypercomplex") return r.abelianHypercomplex;
    if (key == "hyper_kahler") return r.hyperKahler;
    if (key == "kahler") return r.kahler;
    if (key == "hermitian") return r.hermitian;
    if (key == "hypercomplex") return r.hypercomplex;
    if (key == "hyper_hermitian") return r.hyperHermitian;
    return std::nullopt;
  };
  for (const auto& [key, want] : entry.expected.flags)
    checkFlag(res, entry.name + ": " + key, want, flagValue(key));
  for (const auto& [key, want] : entry.expected.forms) {
    auto it = r.forms.find(key);
    if (it == r.forms.end()) {
      res.checks.push_back({entry.name + ": " + key + " (" + want.source + ")",
                            want.value.str(), "(absent)", false});
    } else {
      checkEq(res, entry.name + ": " + key + " (" + want.source + ")", want.value,
              it->second);
    }
  }
}

// J-invariant averaging of a seed symmetric matrix; exact and positive
// definite for seeds close to the gram matrix.
Mat averagedCompatibleMetric(const GeomStructure& s, const Mat& seed) {
  Mat sum = seed;
  for (int a = 0; a < 3; ++a)
    sum += Mat(s.J[static_cast<size_t>(a)].transpose() * seed * s.J[static_cast<size_t>(a)]);
  return sum;
}

CaseResult caseE2Tangent() {
  CaseResult res{"e2_tangent", {}};
  CatalogEntry base = builtin("e2_central");
  CatalogEntry stored = builtin("e2_tangent");
  GeomStructure built = kaehlerToHkt(base.structure, base.connections.at("D"));
  CatalogEntry builtEntry{"built", built, {}, {}, {}};
  checkTrue(res, "doubling reproduces the stored 8-dimensional entry",
            sameStructure(builtEntry, stored));
  Report r = classify(stored.structure);
  checkExpected(res, stored, r);
  return res;
}

CaseResult caseSu21Tangent() {
  CaseResult res{"su21_tangent", {}};
  CatalogEntry base = builtin("su21_solv");
  CatalogEntry stored = builtin("su21_tangent");
  GeomStructure built = kaehlerToHkt(base.structure, base.connections.at("D"));
  CatalogEntry builtEntry{"built", built, {}, {}, {}};
  checkTrue(res, "doubling reproduces the stored 8-dimensional entry",
            sameStructure(builtEntry, stored));
  Report r = classify(stored.structure);
  checkExpected(res, stored, r);
  return res;
}

CaseResult caseSp1U1Tangent() {
  CaseResult res{"sp1u1_tangent", {}};
  CatalogEntry base = builtin("sp1_u1");
  CatalogEntry stored = builtin("sp1u1_tangent");
  GeomStructure built = tangentAlgebra(base.structure, base.connections.at("D"));
  CatalogEntry builtEntry{"built", built, {}, {}, {}};
  checkTrue(res, "tangent double reproduces the stored structure constants",
            sameStructure(builtEntry, stored));
  Report r = classify(stored.structure);
  checkExpected(res, stored, r);
  checkTrue(res, "torsion 3-form of the double is closed",
            r.forms.at("dc").isZeroForm());
  // Bismut connection of the base vanishes identically.
  Connection bb = bismut(base.structure, 0);
  bool allZero = true;
  for (const Endo& m : bb.gamma) allZero = allZero && isZero(m);
  checkTrue(res, "base Bismut connection is identically zero", allZero);
  checkTrue(res, "torsion-free triple-parallel connection of the double is flat",
            isFlat(obata(stored.structure), stored.structure.algebra));
  return res;
}

CaseResult caseAlg4() {
  CaseResult res{"alg4", {}};
  CatalogEntry entry = builtin("alg4");
  const LieAlgebra& g = entry.structure.algebra;

  // Independent copies of the commutant basis used by the expected table.
  auto endo4 = [&](std::initializer_list<std::pair<std::pair<int, int>, Scalar>> terms) {
    Endo m = Endo::Constant(4, 4, Scalar(0));
    for (const auto& [pos, c] : terms) m(pos.second - 1, pos.first - 1) = c;
    return m;
  };
  const Scalar h2 = Scalar(Rational(0), Rational(1, 2));   // sqrt2/2
  const Scalar q2 = Scalar(Rational(0), Rational(1, 4));   // sqrt2/4
  const Scalar s2 = Scalar::sqrt2();
  Endo jp1 = endo4({{{1, 4}, Scalar(-1)}, {{2, 3}, Scalar(-1)}, {{3, 2}, Scalar(1)}, {{4, 1}, Scalar(1)}});
  Endo jp2 = endo4({{{1, 2}, -h2}, {{2, 1}, s2}, {{3, 4}, -s2}, {{4, 3}, h2}});
  Endo jp3 = endo4({{{1, 3}, h2}, {{2, 4}, -s2}, {{3, 1}, -s2}, {{4, 2}, h2}});

  Connection ob = obata(entry.structure);
  checkTrue(res, "nabla_{e1} = 3/4 id",
            isZero(Mat(ob.gamma[0] - Scalar::fraction(3, 4) * Mat::Identity(4, 4))));
  checkTrue(res, "nabla_{e2} = -(sqrt2/4) J'_2", isZero(Mat(ob.gamma[1] + q2 * jp2)));
  checkTrue(res, "nabla_{e3} = (sqrt2/4) J'_3", isZero(Mat(ob.gamma[2] - q2 * jp3)));
  checkTrue(res, "nabla_{e4} = 1/4 J'_1",
            isZero(Mat(ob.gamma[3] - Scalar::fraction(1, 4) * jp1)));

  auto hol = infinitesimalHolonomy(ob, g);
  checkTrue(res, "holonomy algebra has dimension 3", hol.size() == 3,
            "dimension " + std::to_string(hol.size()));
  IncrementalSpan span(16);
  for (const Endo& m : hol) span.insert(flatten(m));
  bool spansPrimes = span.contains(flatten(jp1)) && span.contains(flatten(jp2)) &&
                     span.contains(flatten(jp3));
  checkTrue(res, "holonomy algebra equals span{J'_1, J'_2, J'_3}", spansPrimes);

  GeomStructure lift = tangentAlgebra(entry.structure, entry.connections.at("D"));
  auto liftHol = infinitesimalHolonomy(obata(lift), lift.algebra);
  checkTrue(res, "tangent lift holonomy has the same dimension",
            liftHol.size() == hol.size(),
            std::to_string(liftHol.size()) + " vs " + std::to_string(hol.size()));

  Report r = classify(entry.structure);
  checkExpected(res, entry, r);
  return res;
}

CaseResult caseHeis8() {
  CaseResult res{"heis8", {}};
  CatalogEntry entry = builtin("heis8");
  Report r = classify(entry.structure);
  checkExpected(res, entry, r);
  checkTrue(res, "Lee form vanishes", r.forms.at("theta").isZeroForm());

  CatalogEntry stored = builtin("heis8_rho12");
  GeomStructure built = rhoExtension(entry.structure, entry.quatReps.at("rho1"));
  CatalogEntry builtEntry{"built", built, {}, {}, {}};
  checkTrue(res, "rho extension reproduces the stored 12-dimensional entry",
            sameStructure(builtEntry, stored));
  Report r12 = classify(stored.structure);
  checkExpected(res, stored, r12);
  return res;
}

CaseResult caseAffC() {
  CaseResult res{"aff_C", {}};
  CatalogEntry entry = builtin("aff_C");
  auto hom = checkSpHomomorphism(entry.connections.at("D"), entry.structure);
  checkTrue(res, "D is a homomorphism into sp(1)", hom.ok(),
            hom.ok() ? "" : hom.violations.front().what);
  Report base = classify(entry.structure);
  checkExpected(res, entry, base);
  GeomStructure lift = tangentAlgebra(entry.structure, entry.connections.at("D"));
  Report lifted = classify(lift);
  checkFlag(res, "lift: hkt", true, lifted.hkt);
  checkFlag(res, "lift: weak", true, lifted.weak);
  checkFlag(res, "lift: abelian_hypercomplex", false, lifted.abelianHypercomplex);
  return res;
}

// Embeds a form on the base factor into the doubled algebra.
KForm embedFirstFactor(const KForm& f, int totalDim) {
  KForm out(totalDim, f.degree());
  for (const auto& [idx, c] : f.coefficients()) out.add(idx, c);
  return out;
}

CaseResult caseTheorems() {
  CaseResult res{"theorems", {}};

  // (a) The two HKT certificates agree on every hyper-Hermitian entry and on
  // averaged compatible metric perturbations. Disagreement throws, so running
  // is the check.
  {
    bool agreed = true;
    std::string detail;
    try {
      for (const auto& name : builtinNames()) {
        CatalogEntry entry = builtin(name);
        if (!entry.structure.hasTriple()) continue;
        hktCheck(entry.structure);
        Mat seed = entry.structure.metric->gram;
        seed(0, 0) += Scalar::fraction(1, 3);
        int n = entry.structure.dim();
        seed(n - 1, n - 1) += Scalar::fraction(1, 7);
        GeomStructure perturbed = entry.structure;
        perturbed.metric = Metric{averagedCompatibleMetric(entry.structure, seed)};
        if (!perturbed.metric->isPositiveDefinite())
          throw ValidationError("perturbed metric not positive definite");
        hktCheck(perturbed);
      }
    } catch (const std::exception& ex) {
      agreed = false;
      detail = ex.what();
    }
    checkTrue(res, "(a) HKT certificates agree on catalog and perturbed metrics", agreed, detail);
  }

  // (b) Tangent lift is HKT iff the base is HKT and D is metric.
  {
    bool positive = true;
    for (const char* name : {"sp1_u1", "aff_C", "alg3", "alg4"}) {
      CatalogEntry entry = builtin(name);
      GeomStructure lift = tangentAlgebra(entry.structure, entry.connections.at("D"));
      positive = positive && hktCheck(lift).hkt;
    }
    checkTrue(res, "(b) lifts of metric homomorphisms are HKT", positive);

    CatalogEntry entry = builtin("aff_C");
    Connection broken = entry.connections.at("D");
    broken.gamma[2] += Mat::Identity(4, 4);  // symmetric part breaks D g = 0
    GeomStructure lift = tangentAlgebra(entry.structure, broken);
    checkTrue(res, "(b) breaking D g = 0 breaks the lifted HKT condition",
              !hktCheck(lift).hkt);
  }

  // (c) The doubling of a Hermitian algebra is HKT iff the base is Kaehler.
  {
    CatalogEntry e2 = builtin("e2_central");
    GeomStructure out = kaehlerToHkt(e2.structure, e2.connections.at("D"));
    checkTrue(res, "(c) Kaehler base gives an HKT double", hktCheck(out).hkt);

    GeomStructure hermitianOnly = e2.structure;
    Mat gram = Mat::Identity(4, 4);
    gram(0, 3) = gram(3, 0) = Scalar::fraction(-1, 2);
    gram(1, 2) = gram(2, 1) = Scalar::fraction(1, 2);
    hermitianOnly.metric = Metric{gram};
    bool baseKahler =
        ceDifferential(hermitianOnly.kaehlerForm(0), hermitianOnly.algebra).isZeroForm();
    GeomStructure out2 = kaehlerToHkt(hermitianOnly, e2.connections.at("D"));
    checkTrue(res, "(c) non-Kaehler Hermitian base gives a non-HKT double",
              !baseKahler && !hktCheck(out2).hkt);
  }

  // (d) strong / weak / balanced / hyper-Kaehler are preserved by the lifts.
  {
    bool ok = true;
    std::ostringstream detail;
    auto flagsOf = [](const GeomStructure& s) {
      Report r = classify(s);
      return std::array<bool, 4>{r.strong.value_or(false), r.weak.value_or(false),
                                 r.balanced.value_or(false), r.hyperKahler.value_or(false)};
    };
    for (const char* name : {"sp1_u1", "aff_C", "alg3", "alg4"}) {
      CatalogEntry entry = builtin(name);
      auto base = flagsOf(entry.structure);
      auto lift = flagsOf(tangentAlgebra(entry.structure, entry.connections.at("D")));
      if (base != lift) {
        ok = false;
        detail << name << " flags changed; ";
      }
    }
    {
      CatalogEntry entry = builtin("heis8");
      auto base = flagsOf(entry.structure);
      auto lift = flagsOf(rhoExtension(entry.structure, entry.quatReps.at("rho1")));
      if (base != lift) {
        ok = false;
        detail << "heis8 rho extension flags changed; ";
      }
    }
    {
      // One more tangent step on the 12-dimensional balanced entry.
      CatalogEntry entry = builtin("heis8_rho12");
      GeomStructure lift = tangentAlgebra(entry.structure, entry.connections.at("Dtilde"));
      Connection b = bismut(lift, 0);
      auto c = torsionThreeForm(b, lift);
      bool balanced = c && leeForm(lift, *c, 0).isZeroForm();
      bool weak = c && !ceDifferential(*c, lift.algebra).isZeroForm();
      if (!hktCheck(lift).hkt || !balanced || !weak) {
        ok = false;
        detail << "24-dimensional tangent step lost balanced weak HKT; ";
      }
    }
    {
      // Hyper-Kaehler branch: abelian base, trivial connection.
      GeomStructure flat{LieAlgebra(4), Metric{Mat::Identity(4, 4)},
                         {leftMult(0, 1), leftMult(1, 1), leftMult(2, 1)}};
      Connection zero;
      zero.gamma.assign(4, Mat::Constant(4, 4, Scalar(0)));
      Report lifted = classify(tangentAlgebra(flat, zero));
      if (!lifted.hyperKahler.value_or(false)) {
        ok = false;
        detail << "trivial central extension not hyper-Kaehler; ";
      }
    }
    checkTrue(res, "(d) strong/weak/balanced/hyper-Kaehler preserved by lifts", ok,
              detail.str());
  }

  // (e) Torsion and Lee form of a tangent lift restrict from the base factor.
  {
    bool ok = true;
    std::ostringstream detail;
    for (const char* name : {"sp1_u1", "aff_C"}) {
      CatalogEntry entry = builtin(name);
      GeomStructure lift = tangentAlgebra(entry.structure, entry.connections.at("D"));
      auto cBase = torsionThreeForm(bismut(entry.structure, 0), entry.structure);
      auto cLift = torsionThreeForm(bismut(lift, 0), lift);
      if (!cBase || !cLift || *cLift != embedFirstFactor(*cBase, lift.dim())) {
        ok = false;
        detail << name << ": torsion does not restrict; ";
      }
      KForm thetaBase = leeForm(entry.structure, *cBase, 0);
      KForm thetaLift = leeForm(lift, *cLift, 0);
      if (thetaLift != embedFirstFactor(thetaBase, lift.dim())) {
        ok = false;
        detail << name << ": Lee form does not restrict; ";
      }
      KForm dcBase = ceDifferential(*cBase, entry.structure.algebra);
      KForm dcLift = ceDifferential(*cLift, lift.algebra);
      if (dcLift != embedFirstFactor(dcBase, lift.dim())) {
        ok = false;
        detail << name << ": dc does not restrict; ";
      }
    }
    checkTrue(res, "(e) torsion and Lee form lift identities", ok, detail.str());
  }

  // (f) d^2 = 0, Bismut defining properties and uniqueness of the
  // triple-parallel torsion-free connection on every entry.
  {
    bool ok = true;
    std::ostringstream detail;
    for (const auto& name : builtinNames()) {
      CatalogEntry entry = builtin(name);
      const LieAlgebra& g = entry.structure.algebra;
      // d^2 = 0 on the Kaehler forms and on all basis one-forms.
      for (size_t a = 0; a < entry.structure.J.size(); ++a) {
        KForm w = entry.structure.kaehlerForm(static_cast<int>(a));
        if (!ceDifferential(ceDifferential(w, g), g).isZeroForm()) {
          ok = false;
          detail << name << ": d^2 omega != 0; ";
        }
      }
      for (int i = 1; i <= g.dim(); ++i)
        if (!ceDifferential(ceDifferential(KForm::monomial(g.dim(), {i}), g), g).isZeroForm()) {
          ok = false;
          detail << name << ": d^2 e^" << i << " != 0; ";
        }
      if (!entry.structure.J.empty()) {
        // Bismut defining properties are asserted inside bismut(); the torsion
        // must lower to a 3-form.
        auto c = torsionThreeForm(bismut(entry.structure, 0), entry.structure);
        if (!c) {
          ok = false;
          detail << name << ": Bismut torsion not totally antisymmetric; ";
        }
        if (entry.structure.hasTriple() && hktCheck(entry.structure).hkt) {
          Connection b1 = bismut(entry.structure, 0);
          if (!(bismut(entry.structure, 1) == b1) || !(bismut(entry.structure, 2) == b1)) {
            ok = false;
            detail << name << ": Bismut connections differ across the triple; ";
          }
        }
      }
      if (entry.structure.hasTriple()) {
        try {
          obata(entry.structure);  // throws unless the solution is unique
        } catch (const std::exception& ex) {
          ok = false;
          detail << name << ": " << ex.what() << "; ";
        }
      }
    }
    checkTrue(res, "(f) d^2 = 0, Bismut properties, unique Obata solve", ok, detail.str());
  }
  return res;
}

CaseResult caseExclusions() {
  CaseResult res{"exclusions", {}};
  res.checks.push_back(
      {"group-level claims (lattices, compact quotients, holonomy groups) are out of "
       "scope; the algebra-level surrogates (balanced flag, infinitesimal holonomy "
       "dimension) stand in for them",
       "excluded", "excluded", true});
  return res;
}

}  // namespace

std::vector<std::string> verifyCaseNames() {
  return {"e2_tangent", "su21_tangent", "sp1u1_tangent", "alg4",
          "heis8",      "aff_C",        "theorems",      "exclusions"};
}

CaseResult runVerifyCase(const std::string& name) {
  if (name == "e2_tangent") return caseE2Tangent();
  if (name == "su21_tangent") return caseSu21Tangent();
  if (name == "sp1u1_tangent") return caseSp1U1Tangent();
  if (name == "alg4") return caseAlg4();
  if (name == "heis8") return caseHeis8();
  if (name == "aff_C") return caseAffC();
  if (name == "theorems") return caseTheorems();
  if (name == "exclusions") return caseExclusions();
  throw ValidationError("unknown verification case '" + name + "'");
}

bool runVerification(std::ostream& os, const std::string& filter) {
  std::vector<std::string> names;
  if (filter.empty())
    names = verifyCaseNames();
  else
    names.push_back(filter);
  bool all = true;
  for (const auto& name : names) {
    CaseResult res = runVerifyCase(name);
    os << "case " << res.name << '\n';
    for (const auto& line : res.checks) {
      os << "  [" << (line.pass ? "PASS" : "FAIL") << "] " << line.label;
      if (!line.pass || line.expected != "true")
        os << "\n         expected: " << line.expected << "\n         computed: " << line.computed;
      os << '\n';
    }
    os << (res.pass() ? "  => PASS " : "  => FAIL ") << res.name << '\n';
    all = all && res.pass();
  }
  os << (all ? "verification passed" : "verification FAILED") << '\n';
  return all;
}

}  // namespace hkt
