#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cctype>
#include <random>

#include "rtlgauge/frontend.hpp"

using namespace rtlgauge;

namespace {

// Independent token-boundary oracle: split on non-word characters and count
// bare `module` tokens. Used to cross-check list_modules against a scanner
// that knows nothing about the tokenizer under test.
int oracle_module_token_count(const std::string& text) {
  int count = 0;
  std::string tok;
  auto flush = [&] {
    if (tok == "module") ++count;
    tok.clear();
  };
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$') tok += c;
    else flush();
  }
  flush();
  return count;
}

}  // namespace

TEST_CASE("strip_comments removes line comments") {
  CHECK(strip_comments("assign y = a; // note") == "assign y = a; ");
}

TEST_CASE("strip_comments replaces a block comment region with one space") {
  CHECK(strip_comments("a /* x */ b") == "a  b");
  CHECK(strip_comments("a/*x*/b") == "a b");
}

TEST_CASE("strip_comments preserves string literals") {
  std::string s = "x = \"//not a comment\";";
  CHECK(strip_comments(s) == s);
  std::string t = "y = \"/* also not */\";";
  CHECK(strip_comments(t) == t);
}

TEST_CASE("strip_comments reports unterminated block comment with offset") {
  try {
    strip_comments("ab /* never closed");
    FAIL("expected FrontendError");
  } catch (const FrontendError& e) {
    CHECK(e.offset() == 3);
  }
}

TEST_CASE("strip_comments handles comment at end of file without newline") {
  CHECK(strip_comments("x // tail") == "x ");
  CHECK(strip_comments("// whole line") == " ");
}

TEST_CASE("strip_comments is idempotent on random comment-laden inputs") {
  std::mt19937 rng(1234);
  const std::string pieces[] = {"assign y = a;", "// c\n", "/* block */", "\"str//ing\"",
                                "module m;", "endmodule", "\n", " ", "a*b/c"};
  for (int iter = 0; iter < 300; ++iter) {
    std::string text;
    int n = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < n; ++i) text += pieces[rng() % std::size(pieces)];
    std::string once = strip_comments(text);
    CHECK(strip_comments(once) == once);
  }
}

TEST_CASE("strip_attributes removes (* ... *) but keeps (*)") {
  CHECK(strip_attributes("(* keep *) wire x;") == "  wire x;");
  CHECK(strip_attributes("always @(*) begin end") == "always @(*) begin end");
}

TEST_CASE("list_modules returns declarations in textual order") {
  auto mods = list_modules("module helper(); endmodule module top_module(); endmodule");
  REQUIRE(mods.size() == 2);
  CHECK(mods[0].name == "helper");
  CHECK(mods[1].name == "top_module");
  CHECK(mods[0].begin < mods[0].end);
  CHECK(mods[0].end <= mods[1].begin);
}

TEST_CASE("list_modules on text without module keywords") {
  CHECK(list_modules("wire x; assign x = 1;").empty());
}

TEST_CASE("list_modules ignores module inside identifiers (token-boundary oracle)") {
  std::string text = "wire my_module_x; assign my_module_x = 1;";
  CHECK(oracle_module_token_count(text) == 0);
  CHECK(list_modules(text).empty());

  std::string text2 = "module m; endmodule";
  CHECK(oracle_module_token_count(text2) == 1);
  CHECK(list_modules(text2).size() == 1);
}

TEST_CASE("list_modules rejects module keyword without identifier") {
  CHECK_THROWS_AS(list_modules("module ; endmodule"), FrontendError);
  CHECK_THROWS_AS(list_modules("module"), FrontendError);
}

TEST_CASE("list_modules over concatenation equals concatenated lists with shifted spans") {
  std::string a = "module first(); endmodule\n";
  std::string b = "module second(); endmodule\nmodule third(); endmodule\n";
  auto la = list_modules(a);
  auto lb = list_modules(b);
  auto lab = list_modules(a + b);
  REQUIRE(lab.size() == la.size() + lb.size());
  for (size_t i = 0; i < la.size(); ++i) {
    CHECK(lab[i].name == la[i].name);
    CHECK(lab[i].begin == la[i].begin);
  }
  for (size_t i = 0; i < lb.size(); ++i) {
    CHECK(lab[la.size() + i].name == lb[i].name);
    CHECK(lab[la.size() + i].begin == lb[i].begin + a.size());
  }
}

TEST_CASE("resolve_top_module prefers the expected name over file order") {
  std::string text =
      "module helper(input a, output y); assign y = a; endmodule\n"
      "module top_module(input a, output y); helper h(.a(a), .y(y)); endmodule\n";
  CHECK(resolve_top_module(text, "top_module") == "top_module");
}

TEST_CASE("resolve_top_module identity and fallback") {
  CHECK(resolve_top_module("module adder(); endmodule", "adder") == "adder");
  CHECK(resolve_top_module("module my_adder(); endmodule", "top_module") == "my_adder");
}

TEST_CASE("resolve_top_module errors when no module is declared") {
  CHECK_THROWS_AS(resolve_top_module("wire x;", "top"), FrontendError);
}

TEST_CASE("resolve_top_module ignores commented-out decoy declarations") {
  std::string text =
      "// module decoy(); endmodule\n"
      "/* module decoy2(); */\n"
      "module real_top(); endmodule\n";
  CHECK(resolve_top_module(text, "top_module") == "real_top");
  CHECK(resolve_top_module(text, "real_top") == "real_top");
}

TEST_CASE("resolve_top_module supports escaped identifiers") {
  std::string text = "module \\top_module (input a); endmodule\n";
  CHECK(resolve_top_module(text, "top_module") == "top_module");
}

TEST_CASE("resolve_top_module sees through attributes") {
  std::string text = "(* keep_hierarchy *) module top_module(); endmodule";
  CHECK(resolve_top_module(text, "top_module") == "top_module");
}

TEST_CASE("comment insertion never changes top-module resolution") {
  std::string base =
      "module helper(input a, output y);\n"
      "  assign y = a;\n"
      "endmodule\n"
      "module top_module(input a, output y);\n"
      "  helper h(.a(a), .y(y));\n"
      "endmodule\n";
  std::string expected = resolve_top_module(base, "top_module");
  REQUIRE(expected == "top_module");

  auto is_word = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
  };
  std::mt19937 rng(99);
  const std::string comments[] = {"/* injected */", "// injected\n", "/* module fake */",
                                  "// endmodule\n", "/* top_module */"};
  int injections = 0;
  while (injections < 500) {
    size_t pos = rng() % (base.size() + 1);
    // only at token boundaries: splitting an identifier changes the program
    bool before_word = pos > 0 && is_word(base[pos - 1]);
    bool after_word = pos < base.size() && is_word(base[pos]);
    if (before_word && after_word) continue;
    std::string mutated = base;
    mutated.insert(pos, comments[rng() % std::size(comments)]);
    CHECK(resolve_top_module(mutated, "top_module") == expected);
    ++injections;
  }
}

TEST_CASE("count_dependency_edges simple continuous assignment") {
  CHECK(count_dependency_edges("module m(input a, output y); assign y = a; endmodule") == 1);
}

TEST_CASE("count_dependency_edges two sources one target") {
  CHECK(count_dependency_edges(
            "module m(input a, input b, output y); assign y = a & b; endmodule") == 2);
}

TEST_CASE("count_dependency_edges zero for structure-only module") {
  CHECK(count_dependency_edges("module m(input a, output y); wire t; endmodule") == 0);
}

TEST_CASE("count_dependency_edges procedural assignments") {
  std::string text =
      "module m(input clk, input d, output reg q);\n"
      "  always @(posedge clk) q <= d;\n"
      "endmodule\n";
  CHECK(count_dependency_edges(text) == 1);  // d -> q

  std::string text2 =
      "module m(input clk, input a, input b, output reg y);\n"
      "  always @(posedge clk) begin\n"
      "    y <= a ^ b;\n"
      "  end\n"
      "endmodule\n";
  CHECK(count_dependency_edges(text2) == 2);  // a -> y, b -> y
}

TEST_CASE("count_dependency_edges instantiation ports") {
  std::string text =
      "module top(input a, input b, output y);\n"
      "  sub u0(.x(a), .z(y));\n"
      "endmodule\n";
  CHECK(count_dependency_edges(text) == 2);  // two connected ports

  std::string positional =
      "module top(input a, output y);\n"
      "  sub u0(a, y);\n"
      "endmodule\n";
  CHECK(count_dependency_edges(positional) == 2);

  std::string unconnected =
      "module top(input a, output y);\n"
      "  sub u0(.x(a), .z());\n"
      "endmodule\n";
  CHECK(count_dependency_edges(unconnected) == 1);
}

TEST_CASE("count_dependency_edges distinct pairs collapse within a statement") {
  // a appears twice on the RHS; the (a, y) pair counts once
  CHECK(count_dependency_edges("module m(input a, output y); assign y = a & a; endmodule") == 1);
}

TEST_CASE("count_dependency_edges rejects lexically malformed source") {
  CHECK_THROWS_AS(count_dependency_edges("module m; /* never closed"), FrontendError);
}

TEST_CASE("count_dependency_edges: generate loops count ports, not loop bookkeeping") {
  std::string gen =
      "module top(input [3:0] a, output [3:0] y);\n"
      "  genvar i;\n"
      "  generate\n"
      "    for (i = 0; i < 4; i = i + 1) begin : g\n"
      "      buf_cell u(.in(a[i]), .out(y[i]));\n"
      "    end\n"
      "  endgenerate\n"
      "endmodule\n";
  CHECK(count_dependency_edges(gen) == 2);
}

TEST_CASE("count_dependency_edges skips function bodies, counts call sites") {
  std::string fn =
      "module top(input [3:0] a, output [3:0] y);\n"
      "  function [3:0] twice(input [3:0] x); twice = x + x; endfunction\n"
      "  assign y = twice(a);\n"
      "endmodule\n";
  CHECK(count_dependency_edges(fn) == 2);  // twice -> y, a -> y
}

TEST_CASE("count_dependency_edges is deterministic") {
  std::string text =
      "module m(input a, input b, output y, output z);\n"
      "  assign y = a | b;\n"
      "  always @(*) z = y ? a : b;\n"
      "endmodule\n";
  long first = count_dependency_edges(text);
  for (int i = 0; i < 10; ++i) CHECK(count_dependency_edges(text) == first);
}

TEST_CASE("normalize_complexity degenerate range yields all ones") {
  auto w = normalize_complexity({{"t1", 5}, {"t2", 5}, {"t3", 5}});
  for (const auto& [id, cw] : w) CHECK(cw.weight == doctest::Approx(1.0));
}

TEST_CASE("normalize_complexity endpoints map to 1 and 24") {
  auto w = normalize_complexity({{"t1", 3}, {"t2", 17}});
  CHECK(w.at("t1").weight == doctest::Approx(1.0));
  CHECK(w.at("t2").weight == doctest::Approx(24.0));
}

TEST_CASE("normalize_complexity direct arithmetic on the formula") {
  auto w = normalize_complexity({{"t1", 0}, {"t2", 10}, {"t3", 20}});
  CHECK(w.at("t1").weight == doctest::Approx(1.0));
  CHECK(w.at("t2").weight == doctest::Approx(12.5));
  CHECK(w.at("t3").weight == doctest::Approx(24.0));
}

TEST_CASE("normalize_complexity rejects empty input") {
  CHECK_THROWS_AS(normalize_complexity({}), std::invalid_argument);
}

TEST_CASE("normalize_complexity weights stay within [1, 24] and affine progressions hold") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    std::map<std::string, long> edges;
    int n = 2 + static_cast<int>(rng() % 10);
    for (int i = 0; i < n; ++i) edges["t" + std::to_string(i)] = static_cast<long>(rng() % 500);
    auto w = normalize_complexity(edges);
    for (const auto& [id, cw] : w) {
      CHECK(cw.weight >= 1.0);
      CHECK(cw.weight <= 24.0);
    }
  }
  // arithmetic progression of edges -> arithmetic progression of weights
  auto w = normalize_complexity({{"a", 10}, {"b", 30}, {"c", 50}, {"d", 70}});
  double d1 = w.at("b").weight - w.at("a").weight;
  double d2 = w.at("c").weight - w.at("b").weight;
  double d3 = w.at("d").weight - w.at("c").weight;
  CHECK(d1 == doctest::Approx(d2).epsilon(1e-12));
  CHECK(d2 == doctest::Approx(d3).epsilon(1e-12));
}

TEST_CASE("monotonicity of edge counts maps to monotone weights") {
  auto w = normalize_complexity({{"small", 2}, {"mid", 9}, {"big", 40}});
  CHECK(w.at("small").weight < w.at("mid").weight);
  CHECK(w.at("mid").weight < w.at("big").weight);
}

TEST_CASE("frontend survives token soup: terminates, deterministic, spans ordered") {
  std::mt19937 rng(31337);
  const std::string pieces[] = {
      "module", "endmodule", "assign", "always", "initial", "begin", "end", "case", "endcase",
      "if", "else", "for", "while", "function", "endfunction", "generate", "=", "<=", "==",
      "(", ")", "[", "]", "{", "}", ";", ",", ":", ".", "#", "@", "*", "\\esc$name", "4'b10x1",
      "16'hBEEF", "3.5e2", "ident", "top_module", "$display", "`WIDTH", "\"str;ng\"", "\n", " "};
  for (int iter = 0; iter < 400; ++iter) {
    std::string text;
    int n = static_cast<int>(rng() % 60);
    for (int i = 0; i < n; ++i) {
      text += pieces[rng() % std::size(pieces)];
      text += ' ';
    }
    long a = -1, b = -2;
    try {
      a = count_dependency_edges(text);
      b = count_dependency_edges(text);
    } catch (const FrontendError&) {
      continue;  // lexical rejection is a legal outcome
    }
    CHECK(a == b);
    CHECK(a >= 0);
    try {
      auto mods = list_modules(strip_attributes(strip_comments(text)));
      for (size_t i = 0; i + 1 < mods.size(); ++i) {
        CHECK(mods[i].begin < mods[i].end);
        CHECK(mods[i].end <= mods[i + 1].begin);
      }
    } catch (const FrontendError&) {
    }
  }
}
