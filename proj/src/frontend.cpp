#include "rtlgauge/frontend.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_set>

namespace rtlgauge {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_base_char(char c) {
  switch (c) {
    case 'b': case 'B': case 'o': case 'O':
    case 'd': case 'D': case 'h': case 'H':
      return true;
    default:
      return false;
  }
}

enum class Tok { Ident, SysIdent, Macro, Number, Str, Punct };

struct Token {
  Tok kind;
  std::string text;  // escaped identifiers carry the unescaped name
  size_t offset = 0;
  bool escaped = false;  // escaped identifiers are never keywords
};

// Directives whose arguments occupy the rest of the line and are not code.
const std::unordered_set<std::string>& line_directives() {
  static const std::unordered_set<std::string> s = {
      "define", "include", "timescale", "ifdef", "ifndef", "else", "elsif",
      "endif", "undef", "undefineall", "resetall", "default_nettype",
      "pragma", "line", "celldefine", "endcelldefine"};
  return s;
}

const std::unordered_set<std::string>& keywords() {
  static const std::unordered_set<std::string> s = {
      "module", "endmodule", "macromodule", "input", "output", "inout",
      "wire", "reg", "logic", "integer", "real", "realtime", "time",
      "genvar", "parameter", "localparam", "defparam", "assign", "deassign",
      "always", "always_comb", "always_ff", "always_latch", "initial",
      "final", "begin", "end", "fork", "join", "join_any", "join_none",
      "if", "else", "case", "casex", "casez", "endcase", "default", "for",
      "while", "repeat", "forever", "wait", "disable", "force", "release",
      "function", "endfunction", "task", "endtask", "generate",
      "endgenerate", "posedge", "negedge", "edge", "or", "and", "not",
      "nand", "nor", "xor", "xnor", "buf", "bufif0", "bufif1", "notif0",
      "notif1", "supply0", "supply1", "tri", "tri0", "tri1", "triand",
      "trior", "trireg", "signed", "unsigned", "specify", "endspecify",
      "primitive", "endprimitive", "table", "endtable", "event", "typedef",
      "enum", "struct", "union", "packed", "unique", "priority", "return",
      "break", "continue", "int", "byte", "bit", "shortint", "longint",
      "automatic", "static", "const", "string", "void", "casebits",
      "scalared", "vectored", "small", "medium", "large", "highz0",
      "highz1", "pullup", "pulldown", "pull0", "pull1", "strong0",
      "strong1", "weak0", "weak1", "assert", "property", "cover"};
  return s;
}

const std::unordered_set<std::string>& gate_primitives() {
  static const std::unordered_set<std::string> s = {
      "and", "or", "nand", "nor", "xor", "xnor", "not", "buf",
      "bufif0", "bufif1", "notif0", "notif1"};
  return s;
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  size_t i = 0;
  const size_t n = s.size();
  auto peek = [&](size_t k) { return i + k < n ? s[i + k] : '\0'; };
  while (i < n) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '"') {
      size_t start = i++;
      std::string val;
      while (i < n && s[i] != '"') {
        if (s[i] == '\\' && i + 1 < n) {
          val += s[i];
          val += s[i + 1];
          i += 2;
        } else {
          val += s[i++];
        }
      }
      if (i < n) ++i;  // closing quote
      out.push_back({Tok::Str, val, start});
      continue;
    }
    if (c == '\\') {  // escaped identifier, runs to whitespace
      size_t start = i++;
      std::string name;
      while (i < n && !std::isspace(static_cast<unsigned char>(s[i]))) name += s[i++];
      out.push_back({Tok::Ident, name, start, true});
      continue;
    }
    if (c == '$' && is_ident_start(peek(1))) {
      size_t start = i++;
      std::string t = "$";
      while (i < n && is_ident_char(s[i])) t += s[i++];
      out.push_back({Tok::SysIdent, t, start});
      continue;
    }
    if (c == '`') {
      size_t start = i++;
      std::string name;
      while (i < n && is_ident_char(s[i])) name += s[i++];
      if (line_directives().count(name)) {
        while (i < n && s[i] != '\n') ++i;
      } else {
        out.push_back({Tok::Macro, name, start});
      }
      continue;
    }
    if (is_ident_start(c)) {
      size_t start = i;
      std::string t;
      while (i < n && is_ident_char(s[i])) t += s[i++];
      out.push_back({Tok::Ident, t, start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '\'' && (is_base_char(peek(1)) ||
                       ((peek(1) == 's' || peek(1) == 'S') && is_base_char(peek(2)))))) {
      size_t start = i;
      std::string t;
      while (i < n && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '_')) t += s[i++];
      if (i < n && s[i] == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        t += s[i++];
        while (i < n && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '_')) t += s[i++];
      }
      if (i < n && (s[i] == 'e' || s[i] == 'E') &&
          (std::isdigit(static_cast<unsigned char>(peek(1))) ||
           ((peek(1) == '+' || peek(1) == '-') && std::isdigit(static_cast<unsigned char>(peek(2)))))) {
        t += s[i++];
        if (s[i] == '+' || s[i] == '-') t += s[i++];
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) t += s[i++];
      }
      if (i < n && s[i] == '\'' &&
          (is_base_char(peek(1)) ||
           ((peek(1) == 's' || peek(1) == 'S') && is_base_char(peek(2))))) {
        t += s[i++];
        if (s[i] == 's' || s[i] == 'S') t += s[i++];
        t += s[i++];  // base char
        while (i < n && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '?')) t += s[i++];
      }
      out.push_back({Tok::Number, t, start});
      continue;
    }
    // punctuation, longest-match first
    static const char* multi[] = {"<<<", ">>>", "===", "!==", "<<", ">>", "<=",
                                  ">=", "==", "!=", "&&", "||", "**", "->",
                                  "+:", "-:", "::"};
    std::string matched;
    for (const char* m : multi) {
      size_t len = std::char_traits<char>::length(m);
      if (s.substr(i, len) == m) {
        matched = m;
        break;
      }
    }
    if (!matched.empty()) {
      out.push_back({Tok::Punct, matched, i});
      i += matched.size();
    } else {
      out.push_back({Tok::Punct, std::string(1, c), i});
      ++i;
    }
  }
  return out;
}

bool is_edge_ident(const Token& t) {
  return t.kind == Tok::Ident && (t.escaped || !keywords().count(t.text));
}

bool is_keyword_tok(const Token& t, const char* k) {
  return t.kind == Tok::Ident && !t.escaped && t.text == k;
}

// Recursive lexical walk that tallies dependency edges. Not a parser in the
// IEEE sense; see the edge definition in frontend.hpp.
class EdgeCounter {
 public:
  explicit EdgeCounter(std::vector<Token> toks) : t_(std::move(toks)) {}

  long run() {
    while (!eof()) module_item();
    return edges_;
  }

 private:
  std::vector<Token> t_;
  size_t i_ = 0;
  long edges_ = 0;

  bool eof() const { return i_ >= t_.size(); }
  const Token& cur() const { return t_[i_]; }
  bool is_punct(const char* p) const { return !eof() && cur().kind == Tok::Punct && cur().text == p; }
  bool is_kw(const char* k) const { return !eof() && is_keyword_tok(cur(), k); }
  bool is_any_kw(std::initializer_list<const char*> ks) const {
    for (const char* k : ks)
      if (is_kw(k)) return true;
    return false;
  }

  void skip_to_semi() {
    while (!eof() && !is_punct(";")) ++i_;
    if (!eof()) ++i_;
  }

  void skip_balanced(const char* open, const char* close) {
    if (!is_punct(open)) return;
    int depth = 0;
    while (!eof()) {
      if (is_punct(open)) ++depth;
      else if (is_punct(close)) {
        --depth;
        if (depth == 0) {
          ++i_;
          return;
        }
      }
      ++i_;
    }
  }

  void skip_until_kw(const char* k) {
    while (!eof() && !is_kw(k)) ++i_;
    if (!eof()) ++i_;
  }

  void skip_timing_controls() {
    while (!eof()) {
      if (is_punct("@")) {
        ++i_;
        if (is_punct("(")) skip_balanced("(", ")");
        else if (is_punct("*")) ++i_;
        else if (!eof() && cur().kind == Tok::Ident) ++i_;
      } else if (is_punct("#")) {
        ++i_;
        if (is_punct("(")) skip_balanced("(", ")");
        else if (!eof() && (cur().kind == Tok::Number || cur().kind == Tok::Ident)) ++i_;
      } else {
        break;
      }
    }
  }

  void optional_block_label() {
    if (is_punct(":")) {
      ++i_;
      if (!eof() && cur().kind == Tok::Ident) ++i_;
    }
  }

  // Collects tokens until ';' (depth-aware commas split sub-assignments).
  void assignment_like_statement() {
    std::vector<std::vector<Token>> segments(1);
    int depth = 0;
    while (!eof() && !(depth == 0 && is_punct(";"))) {
      if (is_punct("(") || is_punct("[") || is_punct("{")) ++depth;
      else if (is_punct(")") || is_punct("]") || is_punct("}")) --depth;
      if (depth == 0 && is_punct(",")) {
        segments.emplace_back();
      } else {
        segments.back().push_back(cur());
      }
      ++i_;
    }
    if (!eof()) ++i_;  // ';'
    for (const auto& seg : segments) analyze_assignment(seg);
  }

  void analyze_assignment(const std::vector<Token>& seg) {
    int depth = 0;
    size_t op = seg.size();
    for (size_t k = 0; k < seg.size(); ++k) {
      const Token& tk = seg[k];
      if (tk.kind == Tok::Punct) {
        if (tk.text == "(" || tk.text == "[" || tk.text == "{") ++depth;
        else if (tk.text == ")" || tk.text == "]" || tk.text == "}") --depth;
        else if (depth == 0 && (tk.text == "=" || tk.text == "<=")) {
          op = k;
          break;
        }
      }
    }
    if (op == seg.size()) return;
    std::set<std::string> targets, sources;
    int bdepth = 0;
    for (size_t k = 0; k < op; ++k) {
      const Token& tk = seg[k];
      if (tk.kind == Tok::Punct) {
        if (tk.text == "[") ++bdepth;
        else if (tk.text == "]") --bdepth;
        continue;
      }
      if (!is_edge_ident(tk)) continue;
      if (bdepth > 0) sources.insert(tk.text);  // index expressions feed the target
      else targets.insert(tk.text);
    }
    for (size_t k = op + 1; k < seg.size(); ++k)
      if (is_edge_ident(seg[k])) sources.insert(seg[k].text);
    edges_ += static_cast<long>(sources.size()) * static_cast<long>(targets.size());
  }

  void statement() {
    skip_timing_controls();
    if (eof()) return;
    if (is_punct(";")) {
      ++i_;
      return;
    }
    if (is_kw("begin")) {
      ++i_;
      optional_block_label();
      while (!eof() && !is_kw("end")) statement();
      if (!eof()) ++i_;
      optional_block_label();
      return;
    }
    if (is_kw("fork")) {
      ++i_;
      optional_block_label();
      while (!eof() && !is_any_kw({"join", "join_any", "join_none"})) statement();
      if (!eof()) ++i_;
      optional_block_label();
      return;
    }
    if (is_kw("if")) {
      ++i_;
      skip_balanced("(", ")");
      statement();
      if (is_kw("else")) {
        ++i_;
        statement();
      }
      return;
    }
    if (is_any_kw({"case", "casex", "casez"})) {
      case_statement();
      return;
    }
    if (is_any_kw({"for", "while", "repeat", "wait"})) {
      ++i_;
      skip_balanced("(", ")");
      statement();
      return;
    }
    if (is_kw("forever")) {
      ++i_;
      statement();
      return;
    }
    if (is_any_kw({"disable", "deassign", "release"})) {
      skip_to_semi();
      return;
    }
    if (is_kw("force")) {
      ++i_;
      assignment_like_statement();
      return;
    }
    if (!eof() && cur().kind == Tok::SysIdent) {
      skip_to_semi();
      return;
    }
    assignment_like_statement();
  }

  void case_statement() {
    ++i_;  // case keyword
    skip_balanced("(", ")");
    while (!eof() && !is_kw("endcase")) {
      if (is_kw("default")) {
        ++i_;
        if (is_punct(":")) ++i_;
        statement();
        continue;
      }
      // case label expression(s) up to a depth-0 ':'
      int depth = 0;
      while (!eof() && !is_kw("endcase")) {
        if (is_punct("(") || is_punct("[") || is_punct("{")) ++depth;
        else if (is_punct(")") || is_punct("]") || is_punct("}")) --depth;
        else if (depth == 0 && is_punct(":")) {
          ++i_;
          break;
        }
        ++i_;
      }
      if (!eof() && !is_kw("endcase")) statement();
    }
    if (!eof()) ++i_;  // endcase
  }

  // Counts connected ports inside the current '(...)' group.
  void count_instance_ports() {
    if (!is_punct("(")) return;
    ++i_;
    std::vector<std::vector<Token>> segs(1);
    int depth = 1;
    while (!eof() && depth > 0) {
      if (is_punct("(") || is_punct("[") || is_punct("{")) ++depth;
      else if (is_punct(")") || is_punct("]") || is_punct("}")) {
        --depth;
        if (depth == 0) {
          ++i_;
          break;
        }
      }
      if (depth == 1 && is_punct(",")) segs.emplace_back();
      else segs.back().push_back(cur());
      ++i_;
    }
    for (const auto& seg : segs) {
      if (seg.empty()) continue;
      if (seg[0].kind == Tok::Punct && seg[0].text == ".") {
        if (seg.size() >= 2 && seg[1].kind == Tok::Punct && seg[1].text == "*") continue;
        // named: .port(expr) connected iff the parens are non-empty; bare
        // .port is the SV implicit connection and counts
        bool has_paren = false, paren_nonempty = false;
        for (size_t k = 1; k < seg.size(); ++k) {
          if (seg[k].kind == Tok::Punct && seg[k].text == "(") {
            has_paren = true;
            paren_nonempty = k + 1 < seg.size() &&
                             !(seg[k + 1].kind == Tok::Punct && seg[k + 1].text == ")");
            break;
          }
        }
        if (!has_paren || paren_nonempty) ++edges_;
      } else {
        ++edges_;  // positional connection
      }
    }
  }

  bool try_instantiation() {
    size_t save = i_;
    ++i_;  // type name
    if (is_punct("#")) {
      ++i_;
      if (!is_punct("(")) {
        i_ = save;
        return false;
      }
      skip_balanced("(", ")");
    }
    if (eof() || !is_edge_ident(cur())) {
      i_ = save;
      return false;
    }
    ++i_;  // instance name
    if (is_punct("[")) skip_balanced("[", "]");
    if (!is_punct("(")) {
      i_ = save;
      return false;
    }
    count_instance_ports();
    while (is_punct(",")) {
      ++i_;
      if (!eof() && cur().kind == Tok::Ident) ++i_;
      if (is_punct("[")) skip_balanced("[", "]");
      if (is_punct("(")) count_instance_ports();
      else break;
    }
    if (is_punct(";")) ++i_;
    return true;
  }

  void gate_primitive() {
    ++i_;  // primitive keyword
    while (true) {
      if (!eof() && is_edge_ident(cur())) ++i_;
      if (is_punct("[")) skip_balanced("[", "]");
      if (is_punct("(")) count_instance_ports();
      if (is_punct(",")) {
        ++i_;
        continue;
      }
      break;
    }
    if (is_punct(";")) ++i_;
  }

  void module_item() {
    if (is_any_kw({"module", "macromodule"})) {
      skip_to_semi();  // header incl. port list
      return;
    }
    if (is_kw("assign")) {
      ++i_;
      skip_timing_controls();  // assign #1 y = ...
      assignment_like_statement();
      return;
    }
    if (is_any_kw({"always", "always_comb", "always_ff", "always_latch", "initial", "final"})) {
      ++i_;
      statement();
      return;
    }
    if (is_kw("function")) {
      skip_until_kw("endfunction");
      return;
    }
    if (is_kw("task")) {
      skip_until_kw("endtask");
      return;
    }
    // generate-control headers: loop bookkeeping is not a dependency
    if (is_any_kw({"for", "if", "case", "casex", "casez", "while", "repeat"})) {
      ++i_;
      skip_balanced("(", ")");
      return;
    }
    if (!eof() && is_edge_ident(cur())) {
      if (try_instantiation()) return;
      if (i_ + 1 < t_.size() && t_[i_ + 1].kind == Tok::Punct &&
          (t_[i_ + 1].text == "=" || t_[i_ + 1].text == "[")) {
        // declaration initializer (`wire x = a;`) counts like an assignment
        assignment_like_statement();
        return;
      }
      ++i_;
      return;
    }
    if (!eof() && cur().kind == Tok::Ident && !cur().escaped &&
        gate_primitives().count(cur().text)) {
      gate_primitive();
      return;
    }
    ++i_;
  }
};

}  // namespace

namespace {

// The comment region and any spaces/tabs immediately before it collapse to
// exactly one space, so `a /* x */ b` becomes `a  b` and a line comment after
// `; ` leaves a single trailing space.
void collapse_before_region(std::string& out) {
  while (!out.empty() && (out.back() == ' ' || out.back() == '\t')) out.pop_back();
}

}  // namespace

std::string strip_comments(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (c == '"') {
      out += c;
      ++i;
      while (i < n && text[i] != '"') {
        if (text[i] == '\\' && i + 1 < n) {
          out += text[i];
          out += text[i + 1];
          i += 2;
        } else {
          out += text[i++];
        }
      }
      if (i < n) {
        out += '"';
        ++i;
      }
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '/') {
      while (i < n && text[i] != '\n') ++i;
      collapse_before_region(out);
      out += ' ';
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '*') {
      size_t open = i;
      i += 2;
      while (i + 1 < n && !(text[i] == '*' && text[i + 1] == '/')) ++i;
      if (i + 1 >= n) throw FrontendError("unterminated block comment", open);
      i += 2;
      collapse_before_region(out);
      out += ' ';
      continue;
    }
    out += c;
    ++i;
  }
  return out;
}

std::string strip_attributes(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (c == '"') {
      out += c;
      ++i;
      while (i < n && text[i] != '"') {
        if (text[i] == '\\' && i + 1 < n) {
          out += text[i];
          out += text[i + 1];
          i += 2;
        } else {
          out += text[i++];
        }
      }
      if (i < n) {
        out += '"';
        ++i;
      }
      continue;
    }
    // `(*)` is the event-control shorthand, not an attribute
    if (c == '(' && i + 1 < n && text[i + 1] == '*' && !(i + 2 < n && text[i + 2] == ')')) {
      size_t open = i;
      i += 2;
      while (i + 1 < n && !(text[i] == '*' && text[i + 1] == ')')) ++i;
      if (i + 1 >= n) throw FrontendError("unterminated attribute", open);
      i += 2;
      collapse_before_region(out);
      out += ' ';
      continue;
    }
    out += c;
    ++i;
  }
  return out;
}

std::vector<ModuleDecl> list_modules(std::string_view stripped_text) {
  auto toks = tokenize(stripped_text);
  std::vector<ModuleDecl> out;
  bool open = false;
  for (size_t idx = 0; idx < toks.size(); ++idx) {
    const Token& t = toks[idx];
    if (t.kind != Tok::Ident || t.escaped) continue;
    if (t.text == "module" || t.text == "macromodule") {
      if (open && !out.empty()) {
        out.back().end = t.offset;
        open = false;
      }
      if (idx + 1 >= toks.size() || toks[idx + 1].kind != Tok::Ident ||
          (!toks[idx + 1].escaped && keywords().count(toks[idx + 1].text))) {
        throw FrontendError("module keyword with no following identifier", t.offset);
      }
      out.push_back({toks[idx + 1].text, t.offset, stripped_text.size()});
      open = true;
      ++idx;
    } else if (t.text == "endmodule") {
      if (open && !out.empty()) {
        out.back().end = t.offset + 9;
        open = false;
      }
    }
  }
  return out;
}

std::string resolve_top_module(std::string_view raw_text, std::string_view expected) {
  auto stripped = strip_attributes(strip_comments(raw_text));
  auto decls = list_modules(stripped);
  if (decls.empty()) throw FrontendError("no module declaration found", 0);
  for (const auto& d : decls)
    if (d.name == expected) return d.name;
  return decls.front().name;
}

long count_dependency_edges(std::string_view raw_text) {
  auto stripped = strip_attributes(strip_comments(raw_text));
  EdgeCounter counter(tokenize(stripped));
  return counter.run();
}

std::map<std::string, ComplexityWeight> normalize_complexity(
    const std::map<std::string, long>& raw_edges) {
  if (raw_edges.empty()) throw std::invalid_argument("normalize_complexity: empty input");
  long emin = raw_edges.begin()->second, emax = raw_edges.begin()->second;
  for (const auto& [id, e] : raw_edges) {
    emin = std::min(emin, e);
    emax = std::max(emax, e);
  }
  std::map<std::string, ComplexityWeight> out;
  for (const auto& [id, e] : raw_edges) {
    double w = 1.0;
    if (emax != emin)
      w = 1.0 + 23.0 * static_cast<double>(e - emin) / static_cast<double>(emax - emin);
    out[id] = ComplexityWeight{id, e, w};
  }
  return out;
}

bool is_verilog_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!is_ident_start(s[0])) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return is_ident_char(c); });
}

}  // namespace rtlgauge
