#include "cremona/examples_corpus.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "cremona/dynclass.hpp"
#include "cremona/groupexplore.hpp"
#include "cremona/parser.hpp"
#include "cremona/toric.hpp"

namespace cremona {

namespace {

using Result = std::pair<bool, std::string>;

Result ok(const std::string &detail) { return {true, detail}; }
Result fail(const std::string &detail) { return {false, detail}; }

BirMap standard_involution() {
  return birmap_new(HomogPoly::monomial({0, 1, 1}),
                    HomogPoly::monomial({1, 0, 1}),
                    HomogPoly::monomial({1, 1, 0}));
}

Result run_sigma() {
  BirMap sigma = standard_involution();
  DegreeSequence seq = degree_sequence(sigma, 10);
  for (int i = 0; i < 10; ++i)
    if (seq.entries[i] != (i % 2 == 0 ? 2 : 1))
      return fail("unexpected degree at n=" + std::to_string(i + 1));
  GrowthClass cls = classify_growth(seq);
  if (cls.kind != GrowthKind::Elliptic)
    return fail("classified as " + to_string(cls.kind));
  return ok("degrees alternate 2,1; elliptic with period 2");
}

Result run_jonquieres() {
  BirMap f = map_expr_to_birmap(parse_map("(x*y, y)"));
  DegreeSequence seq = degree_sequence(f, 10);
  for (int i = 0; i < 10; ++i)
    if (seq.entries[i] != i + 2)
      return fail("degree at n=" + std::to_string(i + 1) + " is not " +
                  std::to_string(i + 2));
  GrowthClass cls = classify_growth(seq);
  if (cls.kind != GrowthKind::JonquieresTwist)
    return fail("classified as " + to_string(cls.kind));
  LambdaEstimate est = estimate_lambda(degree_sequence(f, 100));
  if (std::abs(est.value - 1.0) > 0.05)
    return fail("lambda estimate " + std::to_string(est.value));
  return ok("degrees 2..11, linear growth, lambda near 1");
}

Result run_hyperbolic() {
  BirMap f = map_expr_to_birmap(parse_map("(x^2*y, x*y)"));
  DegreeSequence seq = degree_sequence(f, 6, 400);
  const long expected[6] = {3, 8, 21, 55, 144, 377};
  for (int i = 0; i < 6; ++i)
    if (seq.entries[i] != expected[i])
      return fail("generic composition degree mismatch at n=" +
                  std::to_string(i + 1));
  if (classify_growth(seq).kind != GrowthKind::Hyperbolic)
    return fail("not classified hyperbolic");

  IntMatrix2 m{2, 1, 1, 1};
  LambdaEstimate est = estimate_lambda(monomial_degree_sequence(m, 40));
  double exact = (3.0 + std::sqrt(5.0)) / 2.0;
  if (std::abs(est.value - exact) > 1e-3)
    return fail("fast-path lambda " + std::to_string(est.value));
  if (std::abs(translation_length(est) - 0.96242) > 1e-3)
    return fail("translation length " +
                std::to_string(translation_length(est)));
  if (lehmer_gap_check(est).status !=
      LehmerDiagnostic::Status::ConsistentHyperbolic)
    return fail("gap status not consistent-hyperbolic");
  return ok("degrees 3,8,21,55,144,377; lambda = (3+sqrt 5)/2 to 1e-3");
}

Result run_lehmer() {
  double root = lehmer_root();
  if (!(root > 1.17 && root < 1.18))
    return fail("root " + std::to_string(root));
  if (std::floor(root * 1000.0) != 1176.0)
    return fail("leading digits are not 1.176");
  if (lehmer_residual(root) >= 1e-10)
    return fail("residual " + std::to_string(lehmer_residual(root)));
  std::ostringstream os;
  os.precision(13);
  os << "root " << root << ", residual below 1e-10";
  return ok(os.str());
}

Result run_s3_closure() {
  auto gens = s3_generator_matrices();
  std::vector<ToricElement> group{ToricElement::identity()};
  auto contains = [&](const ToricElement &e) {
    for (const auto &g : group)
      if (g == e)
        return true;
    return false;
  };
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < group.size(); ++i)
      for (const auto &m : gens) {
        ToricElement next =
            toric_compose(group[i], ToricElement::monomial(m));
        if (!contains(next)) {
          group.push_back(next);
          grew = true;
        }
      }
  }
  if (group.size() != 6)
    return fail("closure has " + std::to_string(group.size()) + " elements");
  std::set<int> orders;
  for (const auto &e : group) {
    SpectralData sd = spectral_data(e.matrix);
    if (!sd.finite_order || *sd.finite_order > 3)
      return fail("element without finite order <= 3");
    orders.insert(*sd.finite_order);
    DegreeSequence seq = degree_sequence(toric_to_birmap(e), 8);
    GrowthClass cls = classify_growth(seq);
    if (cls.kind != GrowthKind::Elliptic)
      return fail("degree sequence of a torsion element is not periodic");
  }
  if (orders != std::set<int>{1, 2, 3})
    return fail("matrix orders are not {1,2,3}");
  return ok("6 elements, matrix orders {1,2,3}, periodic degree sequences");
}

Result run_commutator_formula() {
  const IntMatrix2 ms[10] = {{2, 1, 1, 1},  {1, 1, 0, 1},  {0, -1, 1, 0},
                             {3, 2, 1, 1},  {1, 0, 1, -1}, {-1, 1, 0, 1},
                             {5, 2, 2, 1},  {2, -1, -1, 1}, {1, 2, 1, 3},
                             {7, 3, 2, 1}};
  TorusCoord alpha = TorusCoord::symbol("alpha");
  TorusCoord beta = TorusCoord::symbol("beta");
  for (const auto &m : ms) {
    ToricElement c = toric_commutator(m, {alpha, beta});
    if (!c.matrix.is_identity())
      return fail("commutator with a nontrivial matrix part");
    TorusCoord want0 = alpha.pow(m.p - 1) * beta.pow(m.q);
    TorusCoord want1 = alpha.pow(m.r) * beta.pow(m.s - 1);
    if (c.diag[0] != want0 || c.diag[1] != want1)
      return fail("symbolic exponents do not match for " + m.str());
  }
  // Rational instantiation against generic composition.
  IntMatrix2 m{2, 1, 1, 1};
  ToricElement c = toric_commutator(
      m, {TorusCoord(Rational(2)), TorusCoord(Rational(3))});
  Presentation pres;
  pres.generators = {
      {"f", monomial_birmap(m), monomial_birmap(m.inverse())},
      {"t", toric_to_birmap(ToricElement::diagonal(TorusCoord(Rational(2)),
                                                   TorusCoord(Rational(3)))),
       toric_to_birmap(ToricElement::diagonal(
           TorusCoord(Rational(1, 2)), TorusCoord(Rational(1, 3))))}};
  Word wf{{{0, 1}}};
  Word wt{{{1, 1}}};
  auto [cw, cmap] = commutator(pres, wf, wt);
  if (!equals(cmap, toric_to_birmap(c)))
    return fail("rational instantiation disagrees with generic composition");
  if (!(c.diag[0] == TorusCoord(Rational(6)) &&
        c.diag[1] == TorusCoord(Rational(2))))
    return fail("instantiated commutator is not diag(6, 2)");
  return ok("exponent matrix [[p-1,q],[r,s-1]] on 10 matrices; diag(6,2) "
            "instantiation matches");
}

Result run_foliations() {
  int checked = 0;
  for (long long p = -3; p <= 3 && checked < 20; ++p)
    for (long long q = -3; q <= 3 && checked < 20; ++q)
      for (long long r = -3; r <= 3 && checked < 20; ++r)
        for (long long s = -3; s <= 3 && checked < 20; ++s) {
          IntMatrix2 m{p, q, r, s};
          if (!m.is_unimodular() || !is_hyperbolic(m))
            continue;
          SpectralData sd = spectral_data(m);
          if (!sd.foliations)
            return fail("hyperbolic matrix without foliations: " + m.str());
          if (!foliation_pullback_check(m, sd.foliations->first) ||
              !foliation_pullback_check(m, sd.foliations->second))
            return fail("eigen-equation fails for " + m.str());
          QuadModulus mod{m.trace(), m.det()};
          FoliationForm control{QuadExtElem::from_rational(Rational(1), mod),
                                QuadExtElem::from_rational(Rational(0), mod)};
          if (m.r != 0 && foliation_pullback_check(m, control))
            return fail("non-eigenvector control passed for " + m.str());
          ++checked;
        }
  if (checked < 20)
    return fail("only " + std::to_string(checked) + " matrices enumerated");
  return ok("both foliations invariant on 20 matrices; controls rejected");
}

Result run_cornulier() {
  SearchCaps caps{6, 64, 200};
  LowerBoundCertificate cert =
      solvable_length_lower_bound(preset("cornulier"), caps, 5);
  if (cert.bound < 3)
    return fail("bound " + std::to_string(cert.bound));
  return ok("lower bound " + std::to_string(cert.bound) +
            " with witness at level " + std::to_string(cert.witness_level));
}

Result run_martelo_ribon() {
  SearchCaps caps{4, 48, 120};
  LowerBoundCertificate cert =
      solvable_length_lower_bound(preset("martelo-ribon"), caps, 6);
  if (cert.bound < 4)
    return fail("bound " + std::to_string(cert.bound));
  return ok("lower bound " + std::to_string(cert.bound) +
            " with witness at level " + std::to_string(cert.witness_level));
}

Result run_bs_relations() {
  const char *as[3] = {"x", "1/x", "x^2/(x+1)"};
  const char *nus[3] = {"x", "1/x", "(x+1)/(x-1)"};
  for (long long n : {2, 3, 5})
    for (const char *a : as)
      for (const char *nu : nus) {
        RatFunc2 af = expr_to_ratfunc(parse_expr(a));
        RatFunc2 nf = expr_to_ratfunc(parse_expr(nu));
        BsReport rep = bs_embedding(n, nf, af);
        if (!rep.relation_holds)
          return fail("relation fails for n=" + std::to_string(n) + ", a=" +
                      a + ", nu=" + nu);
      }
  return ok("r s r^-1 = s^n for all nine (a, nu) pairs and n in {2,3,5}");
}

} // namespace

std::vector<CorpusItem> examples_corpus() {
  return {
      {"standard-involution", run_sigma},
      {"jonquieres-anchor", run_jonquieres},
      {"hyperbolic-anchor", run_hyperbolic},
      {"lehmer-root", run_lehmer},
      {"s3-monomial-closure", run_s3_closure},
      {"diagonal-commutator-formula", run_commutator_formula},
      {"foliation-invariance", run_foliations},
      {"cornulier-lower-bound", run_cornulier},
      {"martelo-ribon-lower-bound", run_martelo_ribon},
      {"baumslag-solitar-relations", run_bs_relations},
  };
}

} // namespace cremona
