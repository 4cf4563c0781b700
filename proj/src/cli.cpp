#include "cremona/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>

#include "cremona/examples_corpus.hpp"
#include "cremona/parser.hpp"
#include "cremona/report.hpp"

namespace cremona {

namespace {

/// Toric inputs (both coordinates single-term rational monomials) iterate
/// through matrix powers instead of polynomial composition; degrees are
/// unaffected by the diagonal part.
std::optional<IntMatrix2> monomial_matrix(const RatFunc2 &fx,
                                          const RatFunc2 &fy) {
  auto single = [](const Poly2 &p, Exp2 &e) {
    if (p.terms().size() != 1)
      return false;
    e = p.terms().begin()->first;
    return true;
  };
  Exp2 nx, dx, ny, dy;
  if (!single(fx.num(), nx) || !single(fx.den(), dx) ||
      !single(fy.num(), ny) || !single(fy.den(), dy))
    return std::nullopt;
  IntMatrix2 m{nx.x - dx.x, nx.y - dx.y, ny.x - dy.x, ny.y - dy.y};
  if (!m.is_unimodular())
    return std::nullopt;
  return m;
}

struct MapInput {
  MapExpr expr;
  BirMap map;
  std::optional<IntMatrix2> fast;
  bool dominant = true;

  static MapInput read(const std::string &text) {
    MapExpr e = parse_map(text);
    RatFunc2 fx = expr_to_ratfunc(e.fx);
    RatFunc2 fy = expr_to_ratfunc(e.fy);
    MapInput in{e, from_affine(fx, fy), monomial_matrix(fx, fy), true};
    in.dominant = dominance_check(in.map);
    return in;
  }
};

Json map_inputs_json(const MapInput &in, int n, long long cap) {
  Json j;
  j["map"] = print_map(in.expr);
  j["homogeneous"] = in.map.str();
  j["n"] = n;
  j["degree_cap"] = cap;
  j["path"] = in.fast ? "monomial-fast" : "generic";
  j["dominant"] = in.dominant;
  if (!in.dominant)
    j["warning"] = "map is not dominant; degree growth has weaker meaning";
  return j;
}

DegreeSequence sequence_for(const MapInput &in, int n, long long cap) {
  if (in.fast)
    return monomial_degree_sequence(*in.fast, n);
  return degree_sequence(in.map, n, cap);
}

void emit(std::ostream &out, const Json &j) { out << j.dump(2) << "\n"; }

int run_examples(std::ostream &out) {
  bool all = true;
  for (const auto &item : examples_corpus()) {
    std::pair<bool, std::string> r;
    try {
      r = item.run();
    } catch (const std::exception &e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    all = all && r.first;
    out << (r.first ? "PASS" : "FAIL") << " " << item.name << " — "
        << r.second << "\n";
  }
  out << (all ? "all items passed" : "some items FAILED") << "\n";
  return all ? 0 : 3;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"exact computations with plane birational maps: degree growth, "
               "dynamical degrees, the toric subgroup, and derived-series "
               "search"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string map_text;
  int seq_n = 12;
  long long degree_cap = kDefaultDegreeCap;

  auto add_map_options = [&](CLI::App *sub) {
    sub->add_option("map", map_text, "affine map, e.g. \"(x^2*y, x*y)\"")
        ->required();
    sub->add_option("--n", seq_n, "length of the degree sequence")
        ->envname("CREMONA_SEQUENCE_N")
        ->check(CLI::PositiveNumber);
    sub->add_option("--degree-cap", degree_cap,
                    "stop composing past this degree")
        ->envname("CREMONA_DEGREE_CAP")
        ->check(CLI::PositiveNumber);
  };

  CLI::App *classify = app.add_subcommand(
      "classify", "degree sequence, growth class, and lambda estimate");
  add_map_options(classify);
  CLI::App *degrees =
      app.add_subcommand("degrees", "degree sequence of the iterates");
  add_map_options(degrees);
  CLI::App *lambda =
      app.add_subcommand("lambda", "dynamical degree estimate");
  add_map_options(lambda);

  std::vector<long long> matrix_entries;
  CLI::App *toric = app.add_subcommand(
      "toric", "spectral data of a GL(2,Z) monomial map");
  toric->add_option("entries", matrix_entries, "matrix entries p q r s")
      ->expected(4);
  CLI::App *foliations = app.add_subcommand(
      "foliations", "invariant foliations of a hyperbolic monomial map");
  foliations->add_option("entries", matrix_entries, "matrix entries p q r s")
      ->expected(4);

  std::string preset_name;
  SearchCaps caps;
  int max_level = 8;
  CLI::App *group = app.add_subcommand(
      "group", "derived-series sampling and soluble-length lower bound");
  group->add_option("--preset", preset_name, "one of: abelian, cornulier, "
                                             "martelo-ribon, s3-monomial")
      ->required();
  group->add_option("--max-word-len", caps.max_word_length,
                    "generator-word length cap at level 0")
      ->envname("CREMONA_MAX_WORD_LEN");
  group->add_option("--breadth", caps.breadth, "elements kept per level")
      ->envname("CREMONA_BREADTH");
  group->add_option("--degree-cap", caps.degree_cap,
                    "map degree cap during the search")
      ->envname("CREMONA_DEGREE_CAP");
  group->add_option("--max-level", max_level, "deepest derived level sampled");

  long long bs_n = 2;
  std::string bs_a = "x", bs_nu = "x";
  CLI::App *bs = app.add_subcommand(
      "bs-check", "Baumslag-Solitar relation r s r^-1 = s^n");
  bs->add_option("--n", bs_n, "relation exponent, n != 0, 1")->required();
  bs->add_option("--a", bs_a, "rational function a(x)");
  bs->add_option("--mobius", bs_nu, "Moebius function nu(x)");

  CLI::App *examples = app.add_subcommand(
      "examples", "run the whole reproduction corpus and report per item");

  std::vector<std::string> argv_store = args;
  argv_store.insert(argv_store.begin(), "cremona");
  std::vector<char *> argv;
  argv.reserve(argv_store.size());
  for (auto &s : argv_store)
    argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*classify || *degrees || *lambda) {
      MapInput in = MapInput::read(map_text);
      DegreeSequence seq = sequence_for(in, seq_n, degree_cap);
      Json results;
      std::string command;
      if (*degrees) {
        command = "degrees";
        results["sequence"] = to_json(seq);
      } else if (*lambda) {
        command = "lambda";
        LambdaEstimate est = estimate_lambda(seq);
        results["lambda"] = to_json(est);
        results["translation_length"] = translation_length(est);
      } else {
        command = "classify";
        GrowthClass cls = classify_growth(seq);
        LambdaEstimate est = estimate_lambda(seq);
        results = growth_report(seq, cls, est, lehmer_gap_check(est));
      }
      emit(out, report_envelope(command, map_inputs_json(in, seq_n, degree_cap),
                                Json{{"n", seq_n}, {"degree_cap", degree_cap}},
                                results));
      return 0;
    }

    if (*toric || *foliations) {
      IntMatrix2 m{matrix_entries[0], matrix_entries[1], matrix_entries[2],
                   matrix_entries[3]};
      SpectralData sd = spectral_data(m);
      Json results = to_json(sd);
      if (*foliations) {
        results["hyperbolic"] = is_hyperbolic(m);
        if (sd.foliations) {
          results["pullback_check"] = Json::array(
              {foliation_pullback_check(m, sd.foliations->first),
               foliation_pullback_check(m, sd.foliations->second)});
        }
      }
      results["monomial_map"] = monomial_birmap(m).str();
      emit(out, report_envelope(*toric ? "toric" : "foliations",
                                Json{{"matrix", m.str()}}, Json::object(),
                                results));
      return 0;
    }

    if (*group) {
      Presentation pres = preset(preset_name);
      LowerBoundCertificate cert =
          solvable_length_lower_bound(pres, caps, max_level);
      Json inputs;
      inputs["preset"] = preset_name;
      inputs["note"] = pres.note;
      if (pres.expected_length)
        inputs["expected_length"] = *pres.expected_length;
      Json caps_json{{"max_word_length", caps.max_word_length},
                     {"breadth", caps.breadth},
                     {"degree_cap", caps.degree_cap},
                     {"max_level", max_level}};
      emit(out, report_envelope("group", inputs, caps_json,
                                certificate_json(pres, cert)));
      return 0;
    }

    if (*bs) {
      if (bs_n == 0 || bs_n == 1)
        throw UsageError("--n must differ from 0 and 1");
      RatFunc2 a = expr_to_ratfunc(parse_expr(bs_a));
      RatFunc2 nu = expr_to_ratfunc(parse_expr(bs_nu));
      BsReport rep = bs_embedding(bs_n, nu, a);
      emit(out, report_envelope(
                    "bs-check",
                    Json{{"n", bs_n}, {"a", bs_a}, {"mobius", bs_nu}},
                    Json::object(), to_json(rep)));
      return 0;
    }

    if (*examples)
      return run_examples(out);
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

} // namespace cremona
