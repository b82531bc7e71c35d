#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "pretop/errors.hpp"
#include "pretop/model.hpp"
#include "pretop/set_literal.hpp"

using namespace pretop;
using namespace pretop::model;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string model_file(const char* name) { return slurp(std::filesystem::path(PRETOP_MODELS_DIR) / name); }

}  // namespace

TEST_CASE("corpus round trip") {
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(PRETOP_MODELS_DIR)) {
    if (entry.path().extension() != ".pt") continue;
    CAPTURE(entry.path().string());
    const ModelDocument doc = parse_model(slurp(entry.path()));
    const std::string text = print_model(doc);
    const ModelDocument again = parse_model(text);
    CHECK(again == doc);
    CHECK(print_model(again) == text);
    ++files;
  }
  CHECK(files >= 3);
}

TEST_CASE("finite documents") {
  const ModelDocument doc = parse_model(model_file("finite.pt"));
  CHECK(doc.finite_space("Q3").vicinities() ==
        std::vector<Subset>{Subset::of({0, 1}), Subset::of({1, 2}), Subset::of({2})});
  CHECK(doc.finite_space("D2") == FinitePretop::discrete(2));
  CHECK(std::get<Subset>(doc.set("A").value) == Subset::of({2}));
  CHECK(doc.set("X").space == "Y");
  CHECK(doc.finite_map("fold").table() == std::vector<int>{0, 0, 1});
  CHECK(doc.extension("EY").base == Subset::of({0}));
  CHECK(doc.topology("SIERPINSKI").opens().size() == 3);
  CHECK(print_subset(doc.finite_space("Q3"), Subset::of({1, 2})) == "{2 3}");
  CHECK(parse_subset("{ 3 1 }", doc.finite_space("Q3").names()) == Subset::of({0, 2}));

  const ModelDocument q3 = parse_model("space Q3 { points: 1 2 3; vicinity 1: {1 2}; vicinity 2: {2 3}; }");
  CHECK(q3.decls().size() == 1);
  CHECK(q3.finite_space("Q3").min_vicinity(2) == Subset::of({2}));
}

TEST_CASE("three-space print then parse") {
  ModelDocument doc;
  doc.add(SpaceDecl{"A", FinitePretop::discrete(3)});
  doc.add(SpaceDecl{"B", FinitePretop::validate({"u", "v"}, {Subset::of({0, 1}), Subset::of({1})})});
  doc.add(SpaceDecl{"C", FinitePretop::validate({"z"}, {Subset::of({0})})});
  CHECK(parse_model(print_model(doc)) == doc);
}

TEST_CASE("symbolic documents") {
  const ModelDocument u = parse_model(model_file("urysohn.pt"));
  CHECK(std::get<DefSet>(u.set("AXIS").value) ==
        parse_set_literal("grid(G; cols=0)", u.symbolic_space("U").schema()));
  CHECK(u.builtin("KU").extension->added.size() == 1);
  CHECK(u.symbolic_space("UA").carrier() == std::get<DefSet>(u.set("A").value));

  const ModelDocument r = parse_model(model_file("rays.pt"));
  CHECK(r.symbolic_map("shift").describe() == "R0 -> R0 (n+1)\n");
  CHECK(r.map_decl("merge").strands[1].shift[0] == 1);
  CHECK(sym::sym_is_continuous(r.symbolic_map("squash")).continuous);
  CHECK(sym::sym_is_onto(r.symbolic_map("squash")));
  CHECK_FALSE(sym::sym_is_continuous(r.symbolic_map("jump")).continuous);
  CHECK(sym::sym_is_onto(r.symbolic_map("merge")));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_WITH_AS(parse_model("space Q {\n  points: a;\n  vicinity a {a};\n}"),
                       "ParseError: line 3:14: expected ':'", Error);
  CHECK_THROWS_WITH_AS(parse_model("space Q { points: a b; }\nfrobnicate X;"),
                       "ParseError: line 2:1: unknown statement 'frobnicate'", Error);
  CHECK_THROWS_WITH_AS(parse_model("set S in Q = {a};"), doctest::Contains("ResolutionError: line 1:14"), Error);
  CHECK_THROWS_WITH_AS(parse_model("builtin N = discrete_ray(1);\nmap f: N -> N {\n  R0 -> R0(2x);\n}"),
                       doctest::Contains("ParseError: line 3:3"), Error);
  CHECK_THROWS_WITH_AS(parse_model("space Q { points: a b"), doctest::Contains("ParseError"), Error);
}

TEST_CASE("resolution and validation errors") {
  CHECK_THROWS_WITH_AS(parse_model("space Q {\n  points: 1 2;\n  vicinity 1: {2};\n}"),
                       "AxiomViolation: line 1:1: 1", Error);
  CHECK_THROWS_WITH_AS(parse_model("space Q { points: a; vicinity b: {a}; }"),
                       doctest::Contains("ResolutionError: line 1:31: unknown point 'b'"), Error);
  CHECK_THROWS_WITH_AS(parse_model("space Q { points: a; }\nspace Q { points: b; }"),
                       "ResolutionError: line 2:1: name 'Q' declared twice", Error);
  CHECK_THROWS_WITH_AS(parse_model("space Q { points: a; }\nmap f: Q -> Z { a -> a; }"),
                       doctest::Contains("ResolutionError: line 2:8: unknown space 'Z'"), Error);
  CHECK_THROWS_WITH_AS(parse_model("space Q { points: a b; }\nmap f: Q -> Q { a -> a; }"),
                       doctest::Contains("no image for 'b'"), Error);
  CHECK_THROWS_WITH_AS(parse_model("builtin X = tent;"), doctest::Contains("UnknownBuiltin: line 1:13"), Error);
  CHECK_THROWS_WITH_AS(parse_model("builtin U = urysohn;\nbuiltin R = regularize(V);"),
                       doctest::Contains("ResolutionError: line 2:1"), Error);
  CHECK_THROWS_WITH_AS(parse_model("space D { points: 1 2; }\nextension E = D over {1};"),
                       doctest::Contains("NotDense: line 2:1"), Error);
  CHECK_THROWS_WITH_AS(parse_model("topology T { points: a b; opens: {a}; }"),
                       doctest::Contains("InvalidTopology: line 1:1"), Error);
  CHECK_THROWS_WITH_AS(parse_model("builtin N = discrete_ray(1);\nmap f: N -> N { R0 -> R0(n-1); }"),
                       doctest::Contains("UnknownPoint: line 2:1"), Error);
  CHECK_THROWS_WITH_AS(parse_model("builtin U = urysohn;\nset S = grid(H);"),
                       doctest::Contains("line 2:9"), Error);
}
