#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/affine.hpp"
#include "cremona/birmap.hpp"

namespace cremona {

/// Generator with an explicit inverse witness; general inversion of plane
/// maps is out of scope, so every presentation carries its inverses.
struct Generator {
  std::string name;
  BirMap map;
  BirMap inverse;
};

struct Presentation {
  std::vector<Generator> generators;
  std::string note;
  /// Expected soluble length recorded as preset metadata; the search itself
  /// only ever certifies lower bounds.
  std::optional<int> expected_length;
};

/// Checks both inverse identities for every generator; throws BadInverse
/// naming the first offender.
bool validate(const Presentation &pres);

struct Letter {
  int generator = 0;
  int sign = 1; // +1 or -1

  friend bool operator==(const Letter &a, const Letter &b) {
    return a.generator == b.generator && a.sign == b.sign;
  }
};

/// Formal word over the generators; evaluation composes letter maps so that
/// the rightmost letter acts first.
struct Word {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  /// Reversed word with flipped signs.
  Word inverse() const;

  /// Free reduction: cancel adjacent g g^-1 pairs only.
  Word reduced() const;

  friend Word operator*(const Word &a, const Word &b);

  friend bool operator==(const Word &a, const Word &b) {
    return a.letters == b.letters;
  }

  std::string str(const Presentation &pres) const;
};

BirMap word_eval(const Presentation &pres, const Word &w,
                 long long degree_cap = kDefaultDegreeCap);

/// The word u v u^-1 v^-1 and its exact evaluation.
std::pair<Word, BirMap> commutator(const Presentation &pres, const Word &u,
                                   const Word &v,
                                   long long degree_cap = kDefaultDegreeCap);

struct SearchCaps {
  int max_word_length = 6;
  int breadth = 64;
  long long degree_cap = kDefaultDegreeCap;
};

/// One sampled subgroup element. Level-0 elements come from the word
/// enumeration; deeper elements record the pair of previous-level indices
/// whose commutator they are, so certificates can be re-derived bottom-up.
struct SampleElement {
  Word word;
  BirMap map;
  BirMap inverse_map;
  std::optional<std::pair<int, int>> parents;
};

/// Breadth-first sample of the derived series: level 0 holds reduced words of
/// bounded length, level j+1 the pairwise commutators of level j, always
/// deduplicated, identity-free, canonically ordered and truncated to the
/// breadth cap. Levels stop early once one comes out empty.
struct DerivedSample {
  int requested_level = 0;
  std::vector<std::vector<SampleElement>> levels;
  SearchCaps caps;
  bool breadth_exhausted = false;
  bool degree_cap_hit = false;

  const std::vector<SampleElement> &elements_at(int level) const;
  bool level_nonempty(int level) const {
    return level < static_cast<int>(levels.size()) && !levels[level].empty();
  }
};

DerivedSample derived_sample(const Presentation &pres, int level,
                             const SearchCaps &caps);

/// Proven lower bound on the soluble length: one more than the deepest level
/// where the sample still contains a non-identity element.
struct LowerBoundCertificate {
  int bound = 0;
  std::optional<Word> witness;
  int witness_level = -1;
  std::vector<int> level_sizes;
  SearchCaps caps;
  bool breadth_exhausted = false;
  bool degree_cap_hit = false;
};

LowerBoundCertificate solvable_length_lower_bound(const Presentation &pres,
                                                  const SearchCaps &caps,
                                                  int max_level = 8);

/// Solvable Baumslag-Solitar embedding r = (nu(x), n(y + a(x))), s = (x, y+1)
/// with exact inverse witnesses, plus the defining-relation check
/// r s r^-1 = s^n.
struct BsReport {
  Presentation presentation;
  long long n = 0;
  bool relation_holds = false;
  std::string lhs; // r s r^-1 as a plane map
  std::string rhs; // s^n
};

/// nu must be a Moebius function of x alone (BadMobius otherwise); a must be
/// a rational function of x alone.
BsReport bs_embedding(long long n, const RatFunc2 &nu, const RatFunc2 &a);

/// Named example presentations.
std::vector<std::string> preset_names();
Presentation preset(const std::string &name);

} // namespace cremona
