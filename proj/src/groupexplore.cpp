#include "cremona/groupexplore.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cremona {

bool validate(const Presentation &pres) {
  BirMap id = BirMap::identity();
  for (const auto &g : pres.generators) {
    if (!equals(compose(g.map, g.inverse), id) ||
        !equals(compose(g.inverse, g.map), id))
      throw BadInverse(g.name);
  }
  return true;
}

Word Word::inverse() const {
  Word w;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.push_back({it->generator, -it->sign});
  return w;
}

Word Word::reduced() const {
  Word w;
  for (const auto &l : letters) {
    if (!w.letters.empty() && w.letters.back().generator == l.generator &&
        w.letters.back().sign == -l.sign)
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

Word operator*(const Word &a, const Word &b) {
  Word w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w.reduced();
}

std::string Word::str(const Presentation &pres) const {
  if (letters.empty())
    return "1";
  std::string out;
  for (const auto &l : letters) {
    if (!out.empty())
      out += " ";
    out += pres.generators[l.generator].name;
    if (l.sign < 0)
      out += "^-1";
  }
  return out;
}

namespace {

const BirMap &letter_map(const Presentation &pres, const Letter &l) {
  return l.sign > 0 ? pres.generators[l.generator].map
                    : pres.generators[l.generator].inverse;
}

} // namespace

BirMap word_eval(const Presentation &pres, const Word &w,
                 long long degree_cap) {
  BirMap acc = BirMap::identity();
  std::size_t done = 0;
  for (const auto &l : w.letters) {
    try {
      acc = compose(acc, letter_map(pres, l), degree_cap);
    } catch (DegreeCapExceeded &e) {
      e.context = "word prefix of length " + std::to_string(done + 1);
      throw;
    }
    ++done;
  }
  return acc;
}

std::pair<Word, BirMap> commutator(const Presentation &pres, const Word &u,
                                   const Word &v, long long degree_cap) {
  Word w = u * v * u.inverse() * v.inverse();
  return {w, word_eval(pres, w, degree_cap)};
}

const std::vector<SampleElement> &DerivedSample::elements_at(int level) const {
  static const std::vector<SampleElement> empty;
  if (level < 0 || level >= static_cast<int>(levels.size()))
    return empty;
  return levels[level];
}

namespace {

// Level 0: breadth-first enumeration of freely reduced words of length <= L,
// maps evaluated incrementally (one composition per word), deduplicated by
// normalized form, identities discarded, first B distinct survivors kept.
std::vector<SampleElement> enumerate_base(const Presentation &pres,
                                          const SearchCaps &caps,
                                          bool &breadth_exhausted,
                                          bool &degree_cap_hit) {
  struct Node {
    Word word;
    BirMap map;
  };
  const int gens = static_cast<int>(pres.generators.size());
  std::vector<SampleElement> out;
  std::set<std::string> seen;
  std::vector<Node> frontier{{Word{}, BirMap::identity()}};

  for (int len = 1; len <= caps.max_word_length; ++len) {
    std::vector<Node> next;
    for (const auto &node : frontier) {
      for (int g = 0; g < gens; ++g) {
        for (int sign : {+1, -1}) {
          if (!node.word.letters.empty()) {
            const Letter &last = node.word.letters.back();
            if (last.generator == g && last.sign == -sign)
              continue; // would cancel; not freely reduced
          }
          Letter l{g, sign};
          BirMap m = BirMap::identity();
          try {
            m = compose(node.map, letter_map(pres, l), caps.degree_cap);
          } catch (const DegreeCapExceeded &) {
            degree_cap_hit = true;
            continue;
          }
          Word w = node.word;
          w.letters.push_back(l);
          next.push_back({w, m});

          if (!m.is_identity() && seen.insert(m.canonical_key()).second) {
            out.push_back({w, m, word_eval(pres, w.inverse(), caps.degree_cap),
                           std::nullopt});
            if (static_cast<int>(out.size()) >= caps.breadth) {
              breadth_exhausted = true;
              return out;
            }
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// Level k+1 from level k: evaluate all ordered-pair commutators from the
// stored maps (three compositions each), drop identities, sort canonically so
// the result is independent of evaluation order, deduplicate, truncate to B,
// then fill in inverses ([u,v]^-1 = [v,u]) for the survivors.
std::vector<SampleElement> next_level(const std::vector<SampleElement> &prev,
                                      const SearchCaps &caps,
                                      bool &breadth_exhausted,
                                      bool &degree_cap_hit) {
  struct Candidate {
    std::string key;
    int a, b;
    Word word;
    BirMap map;
  };
  std::vector<Candidate> cands;
  const int n = static_cast<int>(prev.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b)
        continue;
      const auto &u = prev[a];
      const auto &v = prev[b];
      BirMap m = BirMap::identity();
      try {
        m = compose(compose(compose(u.map, v.map, caps.degree_cap),
                            u.inverse_map, caps.degree_cap),
                    v.inverse_map, caps.degree_cap);
      } catch (const DegreeCapExceeded &) {
        degree_cap_hit = true;
        continue;
      }
      if (m.is_identity())
        continue;
      Word w = u.word * v.word * u.word.inverse() * v.word.inverse();
      cands.push_back({m.canonical_key(), a, b, std::move(w), std::move(m)});
    }
  }

  std::sort(cands.begin(), cands.end(),
            [](const Candidate &x, const Candidate &y) {
              if (x.key != y.key)
                return x.key < y.key;
              if (x.word.size() != y.word.size())
                return x.word.size() < y.word.size();
              return std::make_pair(x.a, x.b) < std::make_pair(y.a, y.b);
            });

  std::vector<SampleElement> out;
  std::string last_key;
  for (auto &c : cands) {
    if (c.key == last_key)
      continue;
    last_key = c.key;
    if (static_cast<int>(out.size()) >= caps.breadth) {
      breadth_exhausted = true;
      break;
    }
    const auto &u = prev[c.a];
    const auto &v = prev[c.b];
    BirMap inv = compose(compose(compose(v.map, u.map, caps.degree_cap),
                                 v.inverse_map, caps.degree_cap),
                         u.inverse_map, caps.degree_cap);
    out.push_back({std::move(c.word), std::move(c.map), std::move(inv),
                   std::make_pair(c.a, c.b)});
  }
  return out;
}

} // namespace

DerivedSample derived_sample(const Presentation &pres, int level,
                             const SearchCaps &caps) {
  if (level < 0)
    throw Error("derived_sample needs level >= 0");
  validate(pres);

  DerivedSample s;
  s.requested_level = level;
  s.caps = caps;
  s.levels.push_back(enumerate_base(pres, caps, s.breadth_exhausted,
                                    s.degree_cap_hit));
  for (int k = 1; k <= level && !s.levels.back().empty(); ++k)
    s.levels.push_back(next_level(s.levels.back(), caps, s.breadth_exhausted,
                                  s.degree_cap_hit));
  return s;
}

LowerBoundCertificate solvable_length_lower_bound(const Presentation &pres,
                                                  const SearchCaps &caps,
                                                  int max_level) {
  DerivedSample s = derived_sample(pres, max_level, caps);
  LowerBoundCertificate cert;
  cert.caps = caps;
  cert.breadth_exhausted = s.breadth_exhausted;
  cert.degree_cap_hit = s.degree_cap_hit;
  for (const auto &lvl : s.levels)
    cert.level_sizes.push_back(static_cast<int>(lvl.size()));
  for (int k = static_cast<int>(s.levels.size()) - 1; k >= 0; --k) {
    if (!s.levels[k].empty()) {
      cert.bound = k + 1;
      cert.witness = s.levels[k].front().word;
      cert.witness_level = k;
      break;
    }
  }
  return cert;
}

namespace {

// Moebius data (alpha x + beta)/(gamma x + delta) extracted from a rational
// function of x alone.
struct Mobius {
  Rational alpha, beta, gamma, delta;
};

Mobius as_mobius(const RatFunc2 &nu) {
  auto coeff = [](const Poly2 &p, int xe) {
    for (const auto &[e, c] : p.terms())
      if (e.x == xe && e.y == 0)
        return c;
    return Rational(0);
  };
  for (const auto &[e, c] : nu.num().terms())
    if (e.y != 0 || e.x > 1)
      throw BadMobius("numerator is not linear in x alone");
  for (const auto &[e, c] : nu.den().terms())
    if (e.y != 0 || e.x > 1)
      throw BadMobius("denominator is not linear in x alone");
  Mobius m{coeff(nu.num(), 1), coeff(nu.num(), 0), coeff(nu.den(), 1),
           coeff(nu.den(), 0)};
  if ((m.alpha * m.delta - m.beta * m.gamma).is_zero())
    throw BadMobius("zero determinant");
  return m;
}

RatFunc2 mobius_to_func(const Mobius &m) {
  Poly2 num = Poly2::monomial({1, 0}, m.alpha) + Poly2::constant(m.beta);
  Poly2 den = Poly2::monomial({1, 0}, m.gamma) + Poly2::constant(m.delta);
  return RatFunc2(num, den);
}

} // namespace

BsReport bs_embedding(long long n, const RatFunc2 &nu, const RatFunc2 &a) {
  if (n == 0 || n == 1)
    throw Error("relation target n must differ from 0 and 1");
  Mobius m = as_mobius(nu);
  RatFunc2 nu_inv = mobius_to_func({m.delta, -m.beta, -m.gamma, m.alpha});
  for (const auto &[e, c] : a.num().terms())
    if (e.y != 0)
      throw Error("a must be a function of x alone");
  for (const auto &[e, c] : a.den().terms())
    if (e.y != 0)
      throw Error("a must be a function of x alone");

  RatFunc2 x = RatFunc2::var_x();
  RatFunc2 y = RatFunc2::var_y();
  RatFunc2 cn = RatFunc2::constant(Rational(n));

  BirMap r = from_affine(nu, cn * (y + a));
  BirMap r_inv =
      from_affine(nu_inv, y / cn - a.substitute(nu_inv, y));
  BirMap s = from_affine(x, y + RatFunc2::constant(Rational(1)));
  BirMap s_inv = from_affine(x, y - RatFunc2::constant(Rational(1)));

  BsReport rep;
  rep.n = n;
  rep.presentation.generators = {{"r", r, r_inv}, {"s", s, s_inv}};
  rep.presentation.note = "solvable Baumslag-Solitar embedding, n = " +
                          std::to_string(n);
  validate(rep.presentation);

  long long cap = 4096; // small closed-form maps; generous working room
  BirMap lhs = compose(compose(r, s, cap), r_inv, cap);
  BirMap rhs = from_affine(x, y + RatFunc2::constant(Rational(n)));
  rep.relation_holds = equals(lhs, rhs);
  rep.lhs = lhs.str();
  rep.rhs = rhs.str();
  return rep;
}

std::vector<std::string> preset_names() {
  return {"abelian", "cornulier", "martelo-ribon", "s3-monomial"};
}

} // namespace cremona
