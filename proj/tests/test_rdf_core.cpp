#include <doctest.h>

#include <algorithm>
#include <random>

#include "aias/error.hpp"
#include "aias/rdf.hpp"

using namespace aias;

namespace {

Iri iri(const std::string& s) { return Iri(s); }

Triple t(const std::string& s, const std::string& p, const std::string& o) {
  return Triple(Iri(s), Iri(p), Iri(o));
}

}  // namespace

TEST_CASE("term construction enforces invariants") {
  CHECK_THROWS_AS(Iri(""), RdfError);
  CHECK_THROWS_AS(Iri("no-scheme"), RdfError);
  CHECK_NOTHROW(Iri("http://example.org/a"));
  CHECK_THROWS_AS(BlankNode(""), RdfError);
  CHECK_THROWS_AS(Variable(""), RdfError);

  auto tagged = Literal::tagged("hello", "en");
  CHECK(tagged.datatype.value == iris::rdf_lang_string);
  CHECK_THROWS_AS(Literal::tagged("hello", ""), RdfError);

  CHECK_THROWS_AS(Triple(Literal::plain("x"), Iri("http://e/p"), Iri("http://e/o")), RdfError);
}

TEST_CASE("term equality is exact text comparison") {
  CHECK(Term(iri("http://E/a")) != Term(iri("http://e/a")));
  CHECK(Term(Literal::typed("02", Iri(iris::xsd_integer))) !=
        Term(Literal::typed("2", Iri(iris::xsd_integer))));
  CHECK(Term(Literal::plain("x")) == Term(Literal::plain("x")));
  CHECK(Term(iri("http://e/a")) != Term(BlankNode("a")));
}

TEST_CASE("canonical term order: kind first, then text") {
  Term a = iri("http://e/z");
  Term b = BlankNode("a");
  Term c = Literal::plain("a");
  CHECK(a < b);
  CHECK(b < c);
  CHECK(Term(iri("http://e/a")) < Term(iri("http://e/b")));
}

TEST_CASE("expand_curie") {
  PrefixMap p;
  p.bind("AIAS", "https://w3id.org/aias#");
  CHECK(expand_curie(p, "AIAS:Function").value == "https://w3id.org/aias#Function");

  PrefixMap iso;
  iso.bind("ISO22989", "https://w3id.org/aias/iso22989#");
  CHECK(expand_curie(iso, "ISO22989:Training").value ==
        "https://w3id.org/aias/iso22989#Training");

  CHECK_THROWS_AS(expand_curie(PrefixMap{}, "sh:minCount"), UnboundPrefixError);
  CHECK_THROWS_AS(expand_curie(p, "AIAS"), MalformedCurieError);
  CHECK_THROWS_AS(expand_curie(p, "AIAS:a:b"), MalformedCurieError);
}

TEST_CASE("prefix map keeps insertion order and rebinding replaces") {
  PrefixMap p;
  p.bind("a", "http://a/");
  p.bind("b", "http://b/");
  p.bind("a", "http://a2/");
  REQUIRE(p.size() == 2);
  CHECK(p.entries()[0].first == "a");
  CHECK(*p.find("a") == "http://a2/");
}

TEST_CASE("graph insert has set semantics") {
  Graph g;
  Triple x = t("http://e/s", "http://e/p", "http://e/o");
  CHECK(g.insert(x));
  CHECK(g.size() == 1);
  CHECK_FALSE(g.insert(x));
  CHECK(g.size() == 1);

  // stamping-style assignment triple
  CHECK(g.insert(Triple(Iri("https://w3id.org/aias/examples/stamping#Cloud1"),
                        Iri("https://w3id.org/aias#isAssignedTo"),
                        Iri("https://w3id.org/aias/examples/stamping#A_train"))));
}

TEST_CASE("insert/remove round-trip restores the triple set") {
  Graph g;
  g.insert(t("http://e/s", "http://e/p", "http://e/o1"));
  g.insert(t("http://e/s", "http://e/p", "http://e/o2"));
  auto before = g.triples();
  Triple fresh = t("http://e/x", "http://e/p", "http://e/y");
  REQUIRE_FALSE(g.contains(fresh));
  g.insert(fresh);
  CHECK(g.remove(fresh));
  CHECK(g.triples() == before);
  CHECK_FALSE(g.remove(fresh));
}

TEST_CASE("match filters by fixed positions") {
  Graph g;
  g.insert(t("http://e/a", "http://e/p", "http://e/b"));
  g.insert(t("http://e/a", "http://e/q", "http://e/c"));
  g.insert(t("http://e/d", "http://e/p", "http://e/b"));

  TriplePattern all{Variable("s"), Variable("p"), Variable("o")};
  auto everything = g.match(all);
  CHECK(everything.size() == 3);
  CHECK(std::set<Triple>(everything.begin(), everything.end()) == g.triples());
  CHECK(std::is_sorted(everything.begin(), everything.end()));

  TriplePattern by_pred{Variable("s"), Term(iri("http://e/p")), Variable("o")};
  CHECK(g.match(by_pred).size() == 2);

  TriplePattern absent{Term(iri("http://e/zzz")), Variable("p"), Variable("o")};
  CHECK(g.match(absent).empty());
}

TEST_CASE("merge renames colliding blank labels") {
  Graph a;
  a.insert(Triple(BlankNode("n"), Iri("http://e/p"), Iri("http://e/1")));
  Graph b;
  b.insert(Triple(BlankNode("n"), Iri("http://e/p"), Iri("http://e/2")));
  b.prefixes().bind("e", "http://e/");

  a.merge(b);
  CHECK(a.size() == 2);
  CHECK(a.blank_labels().size() == 2);
  CHECK(a.prefixes().contains("e"));
}

TEST_CASE("graph isomorphism") {
  Graph g;
  g.insert(t("http://e/s", "http://e/p", "http://e/o"));
  CHECK(graph_isomorphic(g, g));

  Graph a, b;
  a.insert(Triple(BlankNode("a"), Iri("http://e/p"), Iri("http://e/o")));
  b.insert(Triple(BlankNode("b"), Iri("http://e/p"), Iri("http://e/o")));
  CHECK(graph_isomorphic(a, b));
  CHECK(graph_isomorphic(b, a));

  Graph c, d;
  c.insert(t("http://e/s", "http://e/p", "http://e/o1"));
  d.insert(t("http://e/s", "http://e/p", "http://e/o2"));
  CHECK_FALSE(graph_isomorphic(c, d));
}

TEST_CASE("isomorphism needs a consistent bijection") {
  // _:x -> both objects vs two blanks with one object each
  Graph a;
  a.insert(Triple(BlankNode("x"), Iri("http://e/p"), Iri("http://e/1")));
  a.insert(Triple(BlankNode("x"), Iri("http://e/p"), Iri("http://e/2")));
  Graph b;
  b.insert(Triple(BlankNode("y"), Iri("http://e/p"), Iri("http://e/1")));
  b.insert(Triple(BlankNode("z"), Iri("http://e/p"), Iri("http://e/2")));
  CHECK_FALSE(graph_isomorphic(a, b));

  // cycle of two blanks maps onto relabeled cycle
  Graph c;
  c.insert(Triple(BlankNode("m"), Iri("http://e/p"), BlankNode("n")));
  c.insert(Triple(BlankNode("n"), Iri("http://e/p"), BlankNode("m")));
  Graph d;
  d.insert(Triple(BlankNode("u"), Iri("http://e/p"), BlankNode("v")));
  d.insert(Triple(BlankNode("v"), Iri("http://e/p"), BlankNode("u")));
  CHECK(graph_isomorphic(c, d));
}

TEST_CASE("isomorphism on ground graphs equals set equality") {
  std::mt19937 rng(7);
  for (int round = 0; round < 40; ++round) {
    Graph a, b;
    auto pick = [&rng](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    for (int i = 0; i < 12; ++i) {
      Triple x = t("http://e/s" + std::to_string(pick(4)), "http://e/p" + std::to_string(pick(3)),
                   "http://e/o" + std::to_string(pick(4)));
      a.insert(x);
      if (pick(8) != 0) b.insert(x);
    }
    CHECK(graph_isomorphic(a, b) == (a.triples() == b.triples()));
  }
}
