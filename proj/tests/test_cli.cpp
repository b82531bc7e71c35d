#include <regex>
#include <string>

#include "cli.hpp"
#include "doctest.h"

using pretop::cli::json;
using pretop::cli::run_command;

namespace {

const std::string corpus = PRETOP_CORPUS_DIR;
const std::string models = PRETOP_MODELS_DIR;

std::string c(const std::string& f) { return corpus + "/" + f; }
std::string m(const std::string& f) { return models + "/" + f; }

std::string strip_elapsed(const std::string& s) {
  static const std::regex elapsed("\"elapsed_ms\": [0-9.eE+-]+");
  return std::regex_replace(s, elapsed, "\"elapsed_ms\": 0");
}

}  // namespace

TEST_CASE("documented examples") {
  auto h = run_command({"check", "hausdorff", "-f", c("m.pt"), "--space", "Q3"});
  CHECK(h.exit_code == 1);
  CHECK(h.out == "false\nwitness: (1,2)\n");

  auto a = run_command({"compute", "adh", "-f", c("m.pt"), "--space", "Q3", "--set", "{3}"});
  CHECK(a.exit_code == 0);
  CHECK(a.out == "{2 3}\n");
  CHECK(run_command({"compute", "adh", "-f", c("m.pt"), "--space", "Q3", "--set", "A", "--iterations", "2"}).out ==
        "{1 2 3}\n");

  auto t = run_command(
      {"builtin", "urysohn", "--compute", "cl-theta", "--set", "grid(G; cols>0)", "--iterations", "2"});
  CHECK(t.exit_code == 0);
  CHECK(t.out == "atom(pinf) | atom(minf) | grid(G; cols>=0)\n");
  CHECK(run_command({"builtin", "urysohn", "--compute", "cl-theta", "--set", "grid(G; cols>0)"}).out ==
        "atom(pinf) | grid(G; cols>=0)\n");
}

TEST_CASE("json reports") {
  auto r = run_command({"check", "hausdorff", "-f", c("m.pt"), "--space", "Q3", "--json"});
  CHECK(r.exit_code == 1);
  const json j = json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"result", "witness", "elapsed_ms", "provenance"});
  CHECK(j["result"] == false);
  CHECK(j["witness"] == json::array({"1", "2"}));
  CHECK(j["provenance"]["command"] == "check");
  CHECK(j["provenance"]["op"] == "hausdorff");

  auto again = run_command({"check", "hausdorff", "-f", c("m.pt"), "--space", "Q3", "--json"});
  CHECK(strip_elapsed(r.out) == strip_elapsed(again.out));

  auto s = json::parse(run_command({"builtin", "urysohn", "--compute", "compact", "--json"}).out);
  CHECK(s["result"] == false);
  CHECK(s["witness"]["end"] == "G(row +end, col 0)");

  auto e = run_command({"validate", "-f", c("bad_axiom.pt"), "--json"});
  CHECK(e.exit_code == 3);
  const json ej = json::parse(e.out);
  CHECK(ej["error"]["kind"] == "AxiomViolation");
  CHECK(ej["result"].is_null());
}

TEST_CASE("exit codes") {
  CHECK(run_command({"validate", "-f", c("m.pt")}).exit_code == 0);
  CHECK(run_command({"validate", "-f", m("finite.pt")}).exit_code == 0);
  CHECK(run_command({"validate", "-f", m("urysohn.pt")}).exit_code == 0);
  CHECK(run_command({"validate", "-f", m("rays.pt")}).exit_code == 0);

  auto p = run_command({"validate", "-f", c("bad_parse.pt")});
  CHECK(p.exit_code == 2);
  CHECK(p.err == "ParseError: line 3:10: expected ':'\n");
  CHECK(run_command({"validate", "-f", c("bad_axiom.pt")}).exit_code == 3);
  CHECK(run_command({"validate", "-f", c("bad_reference.pt")}).exit_code == 3);
  CHECK(run_command({"validate", "-f", c("missing.pt")}).exit_code == 3);
  CHECK(run_command({"check", "hausdorff", "-f", c("m.pt"), "--space", "Z9"}).exit_code == 3);
  CHECK(run_command({"compute", "adh", "-f", c("m.pt"), "--space", "Q3", "--set", "{7}"}).exit_code == 3);
  CHECK(run_command({"compute", "adh", "-f", c("m.pt"), "--space", "Q3", "--set", "{3"}).exit_code == 2);

  CHECK(run_command({}).exit_code == 2);
  CHECK(run_command({"frobnicate"}).exit_code == 2);
  CHECK(run_command({"check"}).exit_code == 2);
  CHECK(run_command({"check", "nonsense", "-f", c("m.pt")}).exit_code == 2);
  CHECK(run_command({"check", "compact-at", "-f", c("m.pt"), "--set", "{1}", "--method", "magic"}).exit_code == 2);
  CHECK(run_command({"oracle", "--workers", "0"}).exit_code == 2);
  CHECK(run_command({"builtin", "moebius"}).exit_code == 3);
  CHECK(run_command({"builtin", "discrete_ray(x)"}).exit_code == 2);

  CHECK(run_command({"oracle", "--max-points", "5"}).exit_code == 4);
  auto esc = run_command({"construct", "end-extension", "-f", c("escape.pt"), "--space", "UB"});
  CHECK(esc.exit_code == 4);
  CHECK(esc.err.rfind("FragmentEscape", 0) == 0);
  auto un = run_command({"map", "continuous", "-f", c("escape.pt"), "--map", "id"});
  CHECK(un.exit_code == 4);
  CHECK(un.err.rfind("UnclassifiableImageTrace", 0) == 0);

  CHECK(run_command({"--help"}).exit_code == 0);
  CHECK(run_command({"--version"}).out == "0.1.0\n");
}

TEST_CASE("finite commands") {
  const std::string f = m("finite.pt");
  CHECK(run_command({"check", "topological", "-f", f, "--space", "Q3"}).out == "false\nwitness: {3}\n");
  CHECK(run_command({"check", "hausdorff", "-f", f, "--space", "D2"}).out == "true\n");
  CHECK(run_command({"check", "hset", "-f", f, "--space", "SIERPINSKI", "--set", "{b}"}).exit_code == 0);
  CHECK(run_command({"compute", "tower", "-f", f, "--space", "Q3", "--set", "{1}"}).out ==
        "F0 = {1}\nF1 = {1 2}\nF2 = {1 2 3}\nstabilized at 2, open false, inherent false\n");
  CHECK(run_command({"construct", "regularize", "-f", f, "--space", "Q3"}).out ==
        "space Q3_regularize {\n  points: 1 2 3;\n  vicinity 1: {1 2};\n  vicinity 2: {1 2 3};\n"
        "  vicinity 3: {2 3};\n}\n");
  for (const char* method : {"limit", "adh-filter", "adh-set", "inh", "vicinity"}) {
    CHECK(run_command({"map", "continuous", "-f", f, "--map", "fold", "--method", method}).exit_code == 0);
  }
  CHECK(run_command({"construct", "simple", "-f", f, "--space", "ES"}).exit_code == 0);
  CHECK(run_command({"construct", "simple", "-f", f, "--space", "Q3"}).exit_code == 3);
}

TEST_CASE("symbolic commands") {
  const std::string r = m("rays.pt");
  auto k = run_command({"map", "kappa", "-f", r, "--map", "shift"});
  CHECK(k.exit_code == 0);
  CHECK(k.out == "w_R0 -> w_R0\ncontinuous: true\nonto: false\n");
  auto j = run_command({"map", "continuous", "-f", r, "--map", "jump"});
  CHECK(j.exit_code == 1);
  CHECK(j.out == "false\nwitness: R0(+end)\n");
  CHECK(run_command({"map", "onto", "-f", r, "--map", "merge"}).exit_code == 0);
  CHECK(run_command({"map", "preimage", "-f", r, "--map", "evens", "--set", "ray(R0; 4..)"}).out == "ray(R0; 2..)\n");

  const std::string u = m("urysohn.pt");
  CHECK(run_command({"check", "compact", "-f", u, "--space", "RU"}).exit_code == 0);
  CHECK(run_command({"check", "hset", "-f", u, "--space", "U", "--set", "A"}).exit_code == 0);
  CHECK(run_command({"check", "compact", "-f", u, "--space", "UA"}).out == "false\nwitness: G(row +end, col 0)\n");
  CHECK(run_command({"check", "h-closed", "-f", u, "--space", "U"}).exit_code == 0);
  CHECK(run_command({"compute", "cl-theta", "-f", u, "--space", "U", "--set", "B", "--iterations", "2"}).out ==
        "atom(pinf) | atom(minf) | grid(G; cols>=0)\n");
  auto e = run_command({"builtin", "discrete_ray(1)", "--compute", "end-extension", "--json"});
  const json ej = json::parse(e.out);
  CHECK(ej["result"]["added"] == json::array({"w_R0"}));
  CHECK(ej["result"]["compact"] == true);
}

TEST_CASE("oracle command is byte-stable across worker counts") {
  std::string base;
  for (const char* w : {"1", "4", "8"}) {
    auto r = run_command({"oracle", "--max-points", "4", "--seed", "11", "--workers", w, "--json"});
    CHECK(r.exit_code == 1);
    const std::string body = json::parse(r.out)["result"].dump();
    if (base.empty()) base = body;
    CHECK(body == base);
  }
  auto one = run_command({"oracle", "continuity-5way", "--max-points", "2", "--json"});
  CHECK(one.exit_code == 0);
  const json s = json::parse(one.out)["result"];
  CHECK(s["suites"].size() == 1);
  CHECK(s["suites"][0]["by_size"]["2"] == 64);
}
