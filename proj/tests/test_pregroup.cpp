#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "autocat/autocat.hpp"
#include "oracles.hpp"

using namespace autocat;

namespace {

std::string fixture(const std::string& name) {
  const char* dir = std::getenv("AUTOCAT_FIXTURES");
  return std::string(dir ? dir : "tests/fixtures") + "/" + name;
}

std::string fixture_dir() {
  const char* dir = std::getenv("AUTOCAT_FIXTURES");
  return dir ? dir : "tests/fixtures";
}

Signature& grammar() {
  static Signature sig = [] {
    std::ifstream in(fixture("grammar.sig"));
    if (!in) throw std::runtime_error("missing grammar.sig fixture");
    return Signature::parse(in);
  }();
  return sig;
}

Lexicon& lexicon() {
  static Lexicon lex = [] {
    std::ifstream in(fixture("lexicon.lex"));
    if (!in) throw std::runtime_error("missing lexicon.lex fixture");
    return Lexicon::parse(in, grammar(), fixture_dir());
  }();
  return lex;
}

Interpretation grammar_interp() {
  Interpretation interp;
  interp.dims = grammar().dims();
  interp.model = std::make_shared<MatTensorModel>(interp.dims);
  return interp;
}

using LinkSet = std::vector<std::pair<std::size_t, std::size_t>>;

}  // namespace

TEST_CASE("type parsing and printing") {
  CHECK(parse_type("n_s^r s n^l") ==
        Interface{{CBase::basic("n_s"), 1},
                  {CBase::basic("s"), 0},
                  {CBase::basic("n"), -1}});
  CHECK(parse_type("n^rl") == Interface{{CBase::basic("n"), 0}});
  CHECK(parse_type("n^rr") == Interface{{CBase::basic("n"), 2}});
  CHECK(parse_type("") == Interface{});
  CHECK(print_type(parse_type("n_s^r s n^ll")) == "n_s^r s n^ll");
  CHECK_THROWS(parse_type("n^x"));
  CHECK_THROWS(parse_type("q", &grammar()));
}

TEST_CASE("contraction respects windings and the reversed order") {
  Signature& sig = grammar();
  auto at = [](const std::string& name, int w) {
    return SignedObject{CBase::basic(name), w};
  };
  CHECK(pg::can_link(at("n", 0), at("n", 1), sig));
  CHECK(!pg::can_link(at("n", 0), at("n", 2), sig));
  CHECK(!pg::can_link(at("n", 1), at("n", 0), sig));
  // even winding: left base below right base
  CHECK(pg::can_link(at("n_s", 0), at("n", 1), sig));
  CHECK(!pg::can_link(at("n", 0), at("n_s", 1), sig));
  // odd winding: order flips
  CHECK(pg::can_link(at("n", -1), at("n_s", 0), sig));
  CHECK(!pg::can_link(at("n_s", -1), at("n", 0), sig));
}

TEST_CASE("the example sentence reduces with the expected links") {
  Signature& sig = grammar();
  Lexicon& lex = lexicon();
  std::vector<std::string> words = {"Clouzot", "directed", "an", "Italian",
                                    "movie"};
  std::vector<Interface> types;
  for (const auto& w : words) types.push_back(lex.entry(w).type);
  Interface target = parse_type("s");

  auto red = find_reduction(types, target, sig);
  REQUIRE(red);
  CHECK(red->links == LinkSet{{0, 1}, {3, 8}, {4, 5}, {6, 7}});
  CHECK(red->survivors == std::vector<std::size_t>{2});
  CHECK(!reduction_error(*red, types, sig));

  SECTION("the reduction diagram is four nested cups") {
    Diagram d = reduction_to_diagram(*red, types, sig);
    CHECK(count_nodes(d) == NodeCount{0, 4, 0});
    CHECK(d.cod() == Interface{{CBase::basic("s"), 0}});
    CHECK(!validate_error(d));
    // the subtyped link (3,8) is a monochrome cup over the lesser base
    bool found = false;
    for (const Slice& s : d.slices)
      for (const Item& it : s.items)
        if (const auto* c = std::get_if<Cup>(&it))
          if (c->level == -1) {
            CHECK(c->base == CBase::basic("n_s"));
            found = true;
          }
    CHECK(found);
  }

  SECTION("the strict variant reduces too") {
    std::vector<Interface> strict_types = types;
    strict_types[1] = lex.entry("directed_strict").type;
    auto red2 = find_reduction(strict_types, target, sig);
    REQUIRE(red2);
    CHECK(red2->links == LinkSet{{0, 1}, {3, 8}, {4, 5}, {6, 7}});
  }
}

TEST_CASE("the reduction validator rejects malformed candidates") {
  Signature& sig = grammar();
  std::vector<Interface> types = {parse_type("n n n^r n^r")};

  Reduction crossing{{{0, 2}, {1, 3}}, {}};
  auto err = reduction_error(crossing, types, sig);
  REQUIRE(err);
  CHECK(err->find("crossing") != std::string::npos);

  Reduction doubled{{{0, 2}, {0, 3}}, {1}};
  err = reduction_error(doubled, types, sig);
  REQUIRE(err);
  CHECK(err->find("twice") != std::string::npos);

  Reduction bad_pair{{{2, 3}}, {0, 1}};  // two right adjoints cannot contract
  err = reduction_error(bad_pair, types, sig);
  REQUIRE(err);
  CHECK(err->find("not a valid contraction") != std::string::npos);

  Reduction bad_survivors{{{1, 2}}, {3, 0}};
  err = reduction_error(bad_survivors, types, sig);
  REQUIRE(err);
  CHECK(err->find("survivors") != std::string::npos);
}

TEST_CASE("exhaustive reduction search agrees with the planar oracle") {
  Signature& sig = grammar();
  DiagramGen gen(23);
  const std::vector<std::string> bases = {"n_s", "n"};
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t len = static_cast<std::size_t>(gen.uniform(0, 6));
    std::vector<SignedObject> atoms;
    for (std::size_t k = 0; k < len; ++k)
      atoms.push_back({CBase::basic(bases[static_cast<std::size_t>(
                           gen.uniform(0, 1))]),
                       static_cast<int>(gen.uniform(-1, 1))});
    std::vector<Interface> types = {Interface(atoms.begin(), atoms.end())};

    // enumerate all planar pairings whose survivors spell the empty target
    auto can = [&](std::size_t i, std::size_t j) {
      return pg::can_link(atoms[i], atoms[j], sig);
    };
    std::vector<LinkSet> expect;
    for (oracles::Pairing& p : oracles::planar_pairings(len, can)) {
      if (!p.survivors.empty()) continue;
      std::sort(p.links.begin(), p.links.end());
      expect.push_back(p.links);
    }
    std::sort(expect.begin(), expect.end());

    std::vector<LinkSet> got;
    for (const Reduction& r : all_reductions(types, Interface{}, sig))
      got.push_back(r.links);

    INFO("atoms " << to_string(Interface(atoms.begin(), atoms.end())));
    CHECK(got == expect);

    // spot-check: the greedy search agrees with emptiness of the full set
    CHECK(find_reduction(types, Interface{}, sig).has_value() == !expect.empty());
  }
}

TEST_CASE("sentence meaning matches the index-summation oracle") {
  Signature& sig = grammar();
  Lexicon& lex = lexicon();
  Interpretation interp = grammar_interp();
  std::vector<std::string> words = {"Clouzot", "directed", "an", "Italian",
                                    "movie"};
  auto meaning = sentence_meaning(words, lex, interp, parse_type("s"), sig);
  REQUIRE(meaning);
  const RatMatrix& v = MatTensorModel::mat(*meaning);
  REQUIRE(v.rows() == 2);
  REQUIRE(v.cols() == 1);

  oracles::ContractionProblem p;
  for (const auto& w : words) {
    const LexiconEntry& e = lex.entry(w);
    std::vector<Rational> flat;
    for (std::size_t i = 0; i < e.meaning->rows(); ++i)
      flat.push_back(e.meaning->at(i, 0));
    p.words.push_back(std::move(flat));
    p.word_arity.push_back(e.type.size());
  }
  p.links = {{0, 1}, {3, 8}, {4, 5}, {6, 7}};
  p.survivors = {2};
  auto expect = oracles::contract(p);
  REQUIRE(expect.size() == 2);
  CHECK(v.at(0, 0) == expect[0]);
  CHECK(v.at(1, 0) == expect[1]);

  SECTION("the strict variant evaluates as well") {
    std::vector<std::string> strict = {"Clouzot", "directed_strict", "an",
                                       "Italian", "movie"};
    auto m2 = sentence_meaning(strict, lex, interp, parse_type("s"), sig);
    REQUIRE(m2);
    // same tensors, same links: the vectors agree
    CHECK(MatTensorModel::mat(*m2) == v);
  }
}

TEST_CASE("ungrammatical sentences have no meaning") {
  auto meaning = sentence_meaning({"Clouzot", "movie"}, lexicon(),
                                  grammar_interp(), parse_type("s"), grammar());
  CHECK(!meaning);
}
