#include "cremona/groupexplore.hpp"
#include "cremona/parser.hpp"
#include "cremona/toric.hpp"

namespace cremona {

namespace {

Generator gen(const std::string &name, const std::string &map,
              const std::string &inverse) {
  return {name, map_expr_to_birmap(parse_map(map)),
          map_expr_to_birmap(parse_map(inverse))};
}

} // namespace

Presentation preset(const std::string &name) {
  Presentation p;
  if (name == "abelian") {
    p.generators = {gen("a", "(x+1, y)", "(x-1, y)"),
                    gen("b", "(x, y+1)", "(x, y-1)")};
    p.note = "two commuting translations of the affine plane";
    p.expected_length = 1;
    return p;
  }
  if (name == "cornulier") {
    p.generators = {gen("g1", "(x+1, y)", "(x-1, y)"),
                    gen("g2", "(x, y+1)", "(x, y-1)"),
                    gen("g3", "(x, x*y)", "(x, y/x)")};
    p.note = "two translations and the fiberwise scaling (x, xy); preserves "
             "the vertical fibration";
    p.expected_length = 3;
    return p;
  }
  if (name == "martelo-ribon") {
    p.generators = {gen("g1", "(x+y^2, y)", "(x-y^2, y)"),
                    gen("g2", "(x*(1+y), y)", "(x/(1+y), y)"),
                    gen("g3", "(x, y/(1+y))", "(x, y/(1-y))"),
                    gen("g4", "(x, 2*y)", "(x, y/2)")};
    p.note = "four triangular generators mixing additive and multiplicative "
             "parts in both coordinates";
    p.expected_length = 4;
    return p;
  }
  if (name == "s3-monomial") {
    auto mats = s3_generator_matrices();
    p.generators.reserve(2);
    const char *names[2] = {"a", "b"};
    for (int i = 0; i < 2; ++i)
      p.generators.push_back({names[i], monomial_birmap(mats[i]),
                              monomial_birmap(mats[i].inverse())});
    p.note = "monomial maps of an order-6 matrix group; every element has "
             "finite order";
    p.expected_length = 2;
    return p;
  }
  throw UsageError("unknown preset '" + name + "'");
}

} // namespace cremona
