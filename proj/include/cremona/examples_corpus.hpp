#pragma once

#include <functional>
#include <string>
#include <vector>

namespace cremona {

/// One reproduction item: a named check over the library's own surface.
struct CorpusItem {
  std::string name;
  std::function<std::pair<bool, std::string>()> run;
};

/// The desk-scale reproduction corpus driven by `cremona examples`: the
/// standard involution, the linear and exponential anchors, the Lehmer root,
/// the finite monomial group, the commutator identity, foliation invariance,
/// the derived-length searches, and the Baumslag-Solitar relations.
std::vector<CorpusItem> examples_corpus();

} // namespace cremona
