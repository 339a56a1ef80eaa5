#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "autocat/autocat.hpp"

using namespace autocat;

namespace {

std::string fixture(const std::string& name) {
  const char* dir = std::getenv("AUTOCAT_FIXTURES");
  return std::string(dir ? dir : "tests/fixtures") + "/" + name;
}

Signature load_free_sig() {
  std::ifstream in(fixture("free.sig"));
  REQUIRE(in);
  return Signature::parse(in);
}

const std::vector<std::string> kDiagramFixtures = {
    "identity_A", "zigzag_A",   "zigzag_mirror_A", "box_f",
    "stack_fg",   "staircase_left", "staircase_right", "cup_A",
    "cup_B",      "cap_then_h", "state_u",         "w_then_h",
    "cupcap_mix", "idbox_A",    "tensor_fe",       "nested_snake"};

}  // namespace

TEST_CASE("interface adjoints reverse and shift windings") {
  CBase A = CBase::basic("A"), B = CBase::basic("B");
  Interface i{{A, 0}, {B, 2}};
  Interface l = left_adjoint(i);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == SignedObject{B, 1});
  CHECK(l[1] == SignedObject{A, -1});
  CHECK(right_adjoint(left_adjoint(i)) == i);
  CHECK(iterate_adjoint(i, -2) == left_adjoint(left_adjoint(i)));
}

TEST_CASE("elementary diagram constructors") {
  CBase A = CBase::basic("A");

  SECTION("identity has no slices and equal boundaries") {
    Diagram d = identity_diagram({{A, 0}, {A, 3}});
    CHECK(d.cod() == d.dom);
    CHECK(!validate_error(d));
  }

  SECTION("cup and cap boundaries at a winding level") {
    Diagram dcup = cup(A, 2);
    CHECK(dcup.dom == Interface{{A, 2}, {A, 3}});
    CHECK(dcup.cod() == Interface{});
    Diagram dcap = cap(A, 2);
    CHECK(dcap.dom == Interface{});
    CHECK(dcap.cod() == Interface{{A, 3}, {A, 2}});
    CHECK(!validate_error(dcup));
    CHECK(!validate_error(dcap));
  }

  SECTION("box diagram checks factorizations against the model") {
    Signature sig = load_free_sig();
    FreeSignatureModel m(sig);
    Diagram d = box_diagram(m.generator("h"), {CBase::basic("A"), CBase::basic("B")},
                            {CBase::basic("C")}, &m);
    CHECK(d.dom == Interface{{CBase::basic("A"), 0}, {CBase::basic("B"), 0}});
    CHECK(d.cod() == Interface{{CBase::basic("C"), 0}});
    CHECK_THROWS(box_diagram(m.generator("h"), {CBase::basic("A")},
                             {CBase::basic("C")}, &m));
  }
}

TEST_CASE("validation catches broken chaining") {
  CBase A = CBase::basic("A");
  Diagram d{{{A, 0}}, {Slice{{Wire{{A, 1}}}}}};
  auto err = validate_error(d);
  REQUIRE(err);
  CHECK(err->find("slice 0") != std::string::npos);
}

TEST_CASE("compose concatenates slices and reports mismatch position") {
  CBase A = CBase::basic("A"), B = CBase::basic("B");
  Diagram idA = identity_diagram({{A, 0}});

  Diagram two = compose(tensor(idA, cap(A, 0)), tensor(cup(A, 0), idA));
  CHECK(two.slices.size() == 2);
  CHECK(two.dom == Interface{{A, 0}});
  CHECK(two.cod() == Interface{{A, 0}});
  CHECK(!validate_error(two));

  try {
    compose(idA, identity_diagram({{A, 0}, {B, 0}}));
    FAIL("expected mismatch");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("position 1") != std::string::npos);
  }
}

TEST_CASE("tensor pads the shorter factor with wires") {
  CBase A = CBase::basic("A"), B = CBase::basic("B");
  Interface i{{A, 0}, {B, 1}};
  Diagram deep = snake_eps(i);  // two slices
  REQUIRE(deep.slices.size() == 2);
  Diagram shallow = cup(A, 0);  // one slice

  Diagram t = tensor(deep, shallow);
  CHECK(t.dom == concat(deep.dom, shallow.dom));
  CHECK(t.cod() == Interface{});
  CHECK(t.slices.size() == 2);
  CHECK(!validate_error(t));
  // the second slice carries the padding wires: shallow is done after slice 1
  CHECK(std::holds_alternative<Cup>(t.slices[0].items.back()));

  Diagram t2 = tensor(shallow, deep);
  CHECK(t2.dom == concat(shallow.dom, deep.dom));
  CHECK(!validate_error(t2));
}

TEST_CASE("snake witnesses have the adjunction boundaries") {
  CBase A = CBase::basic("A"), B = CBase::basic("B");
  Interface i{{A, 0}, {B, -1}, {A, 2}};

  Diagram eps = snake_eps(i);
  CHECK(eps.dom == concat(left_adjoint(i), i));
  CHECK(eps.cod() == Interface{});
  CHECK(eps.slices.size() == i.size());
  CHECK(!validate_error(eps));

  Diagram eta = snake_eta(i);
  CHECK(eta.dom == Interface{});
  CHECK(eta.cod() == concat(i, left_adjoint(i)));
  CHECK(eta.slices.size() == i.size());
  CHECK(!validate_error(eta));

  SECTION("empty interface gives empty witnesses") {
    CHECK(snake_eps({}).slices.empty());
    CHECK(snake_eta({}).slices.empty());
  }

  SECTION("zig-zag composites chain") {
    Diagram zig = compose(tensor(snake_eta(i), identity_diagram(i)),
                          tensor(identity_diagram(i), snake_eps(i)));
    CHECK(zig.dom == i);
    CHECK(zig.cod() == i);
    CHECK(!validate_error(zig));
  }
}

TEST_CASE("adjunction comparison between two witness pairs") {
  CBase A = CBase::basic("A");
  Interface i{{A, 0}, {A, 1}};
  Diagram iso = adjunction_iso(snake_eps(i), snake_eta(i), snake_eps(i),
                               snake_eta(i));
  CHECK(iso.dom == left_adjoint(i));
  CHECK(iso.cod() == left_adjoint(i));
  CHECK(!validate_error(iso));
}

TEST_CASE("repackaging isomorphism between factorizations") {
  Signature sig = load_free_sig();
  FreeSignatureModel m(sig);
  CBase A = CBase::basic("A"), B = CBase::basic("B");
  Diagram iso = assoc_iso(m, {A, B}, {m.tensor_obj(A, B)});
  CHECK(iso.dom == Interface{{A, 0}, {B, 0}});
  CHECK(iso.cod() == Interface{{m.tensor_obj(A, B), 0}});
  CHECK_THROWS(assoc_iso(m, {A, B}, {A}));
}

TEST_CASE("text format round trips on the fixture corpus") {
  Signature sig = load_free_sig();
  FreeSignatureModel m(sig);
  for (const auto& name : kDiagramFixtures) {
    INFO("fixture " << name);
    std::ifstream in(fixture("diagrams/" + name + ".diag"));
    REQUIRE(in);
    Diagram d = parse_diagram(in, m);
    std::string text = print_diagram(d);
    Diagram again = parse_diagram(text, m);
    CHECK(again == d);
    CHECK(print_diagram(again) == text);
  }
}

TEST_CASE("text format round trips matrix boxes") {
  MatTensorModel m;
  std::string text =
      "dom: 2, 3\n"
      "box mat[2x2:1,1/2,0,-3] [2] -> [2], wire 3\n";
  Diagram d = parse_diagram(text, m);
  REQUIRE(d.slices.size() == 1);
  const Box& b = std::get<Box>(d.slices[0].items[0]);
  CHECK(MatTensorModel::mat(b.value).at(0, 1) == Rational(1, 2));
  CHECK(parse_diagram(print_diagram(d), m) == d);
}

TEST_CASE("text format round trips term boxes") {
  Signature sig = load_free_sig();
  FreeSignatureModel m(sig);
  std::string text =
      "dom: A, A\n"
      "box (f x e) [A,A] -> [B]\n"
      "box (id(C) . g) [B] -> [C]\n";
  Diagram d = parse_diagram(text, m);
  CHECK(d.cod() == Interface{{CBase::basic("C"), 0}});
  CHECK(parse_diagram(print_diagram(d), m) == d);
}

TEST_CASE("parse errors carry line information") {
  Signature sig = load_free_sig();
  FreeSignatureModel m(sig);

  auto expect_error = [&](const std::string& text, const std::string& needle) {
    try {
      parse_diagram(text, m);
      FAIL("expected parse error for: " << text);
    } catch (const ParseError& e) {
      INFO(e.what());
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  expect_error("wire A\n", "dom:");
  expect_error("dom: A\nsplice A\n", "line 2");
  expect_error("dom: A\nbox nosuch [A] -> [A]\n", "nosuch");
  expect_error("dom: A\nbox mat[2x2:1,2,3] [A] -> [A]\n", "matrix");
  expect_error("dom: A\nwire B\n", "chain");
}

TEST_CASE("empty slices print as a dash and parse back") {
  Signature sig = load_free_sig();
  FreeSignatureModel m(sig);
  Diagram d{{}, {Slice{}, Slice{}}};
  std::string text = print_diagram(d);
  CHECK(text == "dom:\n-\n-\n");
  CHECK(parse_diagram(text, m) == d);
}
