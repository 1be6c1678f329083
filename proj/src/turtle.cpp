#include "aias/turtle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "aias/error.hpp"
#include "scan.hpp"

namespace aias {

namespace {

using detail::Cursor;

enum class Tok {
  IriRef,
  Pname,
  BlankLabel,
  String,
  Integer,
  Decimal,
  Word,
  LangTag,
  AtPrefix,
  AtBase,
  Dot,
  Semicolon,
  Comma,
  LBracket,
  RBracket,
  LParen,
  RParen,
  DoubleCaret,
  Eof,
};

struct Token {
  Tok kind;
  std::string text;   // IRI text, label, lexical form, word, prefix label
  std::string local;  // local part of a prefixed name
  std::size_t line = 1;
  std::size_t column = 1;
};

unsigned long read_hex_escape(Cursor& c, int digits) {
  unsigned long cp = 0;
  for (int i = 0; i < digits; ++i) {
    if (c.at_end()) c.fail("unterminated escape sequence");
    char h = c.advance();
    cp <<= 4;
    if (h >= '0' && h <= '9') {
      cp |= static_cast<unsigned long>(h - '0');
    } else if (h >= 'a' && h <= 'f') {
      cp |= static_cast<unsigned long>(h - 'a' + 10);
    } else if (h >= 'A' && h <= 'F') {
      cp |= static_cast<unsigned long>(h - 'A' + 10);
    } else {
      c.fail("invalid hex digit in escape sequence", std::string(1, h));
    }
  }
  return cp;
}

// Consumes name characters including interior dot runs (a trailing dot
// stays in the stream so it can terminate the statement).
void read_name_tail(Cursor& c, std::string& out) {
  while (true) {
    char ch = c.peek();
    if (Cursor::is_name_char(ch)) {
      out.push_back(c.advance());
    } else if (ch == '.') {
      std::size_t run = 0;
      while (c.peek(run) == '.') ++run;
      if (!Cursor::is_name_char(c.peek(run))) break;
      for (std::size_t i = 0; i < run; ++i) out.push_back(c.advance());
    } else {
      break;
    }
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : c_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      Token t = next();
      bool eof = t.kind == Tok::Eof;
      out.push_back(std::move(t));
      if (eof) return out;
    }
  }

 private:
  Cursor c_;

  void skip_trivia() {
    while (!c_.at_end()) {
      char ch = c_.peek();
      if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
        c_.advance();
      } else if (ch == '#') {
        while (!c_.at_end() && c_.peek() != '\n') c_.advance();
      } else {
        break;
      }
    }
  }

  Token make(Tok kind, std::string text = "", std::string local = "") {
    return Token{kind, std::move(text), std::move(local), line_, col_};
  }

  Token next() {
    line_ = c_.line();
    col_ = c_.column();
    if (c_.at_end()) return make(Tok::Eof);

    char ch = c_.peek();
    switch (ch) {
      case '<':
        return lex_iriref();
      case '"':
        return lex_string();
      case '@':
        return lex_at();
      case '.':
        if (Cursor::is_digit(c_.peek(1))) return lex_number();
        c_.advance();
        return make(Tok::Dot);
      case ';':
        c_.advance();
        return make(Tok::Semicolon);
      case ',':
        c_.advance();
        return make(Tok::Comma);
      case '[':
        c_.advance();
        return make(Tok::LBracket);
      case ']':
        c_.advance();
        return make(Tok::RBracket);
      case '(':
        c_.advance();
        return make(Tok::LParen);
      case ')':
        c_.advance();
        return make(Tok::RParen);
      case '^':
        c_.advance();
        if (c_.peek() != '^') c_.fail("expected \"^^\"", "^");
        c_.advance();
        return make(Tok::DoubleCaret);
      case '\'':
        c_.fail("single-quoted strings are not supported", "'");
      default:
        break;
    }

    if (ch == '_' && c_.peek(1) == ':') return lex_blank_label();
    if (Cursor::is_digit(ch) || ((ch == '+' || ch == '-') &&
                                 (Cursor::is_digit(c_.peek(1)) ||
                                  (c_.peek(1) == '.' && Cursor::is_digit(c_.peek(2)))))) {
      return lex_number();
    }
    if (Cursor::is_name_start(ch) || ch == ':') return lex_word_or_pname();

    c_.fail("unexpected character", std::string(1, ch));
  }

  Token lex_iriref() {
    c_.advance();  // '<'
    std::string value;
    while (true) {
      if (c_.at_end()) c_.fail("unterminated IRI");
      char ch = c_.advance();
      if (ch == '>') break;
      if (ch == '\\') {
        char esc = c_.at_end() ? '\0' : c_.advance();
        if (esc == 'u') {
          detail::append_utf8(value, read_hex_escape(c_, 4));
        } else if (esc == 'U') {
          detail::append_utf8(value, read_hex_escape(c_, 8));
        } else {
          c_.fail("invalid escape in IRI", std::string(1, esc));
        }
        continue;
      }
      if (static_cast<unsigned char>(ch) <= 0x20 || ch == '<' || ch == '"' || ch == '{' ||
          ch == '}' || ch == '|' || ch == '^' || ch == '`') {
        c_.fail("character not allowed in IRI", std::string(1, ch));
      }
      value.push_back(ch);
    }
    return make(Tok::IriRef, std::move(value));
  }

  Token lex_string() {
    c_.advance();  // opening quote
    if (c_.peek() == '"' && c_.peek(1) == '"') {
      c_.fail("long strings are not supported", "\"\"\"");
    }
    std::string value;
    while (true) {
      if (c_.at_end()) c_.fail("unterminated string literal");
      char ch = c_.advance();
      if (ch == '"') break;
      if (ch == '\n') c_.fail("newline in string literal");
      if (ch == '\\') {
        char esc = c_.at_end() ? '\0' : c_.advance();
        switch (esc) {
          case 't': value.push_back('\t'); break;
          case 'b': value.push_back('\b'); break;
          case 'n': value.push_back('\n'); break;
          case 'r': value.push_back('\r'); break;
          case 'f': value.push_back('\f'); break;
          case '"': value.push_back('"'); break;
          case '\'': value.push_back('\''); break;
          case '\\': value.push_back('\\'); break;
          case 'u': detail::append_utf8(value, read_hex_escape(c_, 4)); break;
          case 'U': detail::append_utf8(value, read_hex_escape(c_, 8)); break;
          default: c_.fail("invalid string escape", std::string(1, esc));
        }
        continue;
      }
      value.push_back(ch);
    }
    return make(Tok::String, std::move(value));
  }

  Token lex_at() {
    c_.advance();  // '@'
    std::string word;
    while (std::isalpha(static_cast<unsigned char>(c_.peek())) != 0) word.push_back(c_.advance());
    if (word.empty()) c_.fail("expected directive or language tag after \"@\"");
    if (word == "prefix") return make(Tok::AtPrefix);
    if (word == "base") return make(Tok::AtBase);
    while (c_.peek() == '-') {
      word.push_back(c_.advance());
      if (std::isalnum(static_cast<unsigned char>(c_.peek())) == 0) {
        c_.fail("malformed language tag", word);
      }
      while (std::isalnum(static_cast<unsigned char>(c_.peek())) != 0) {
        word.push_back(c_.advance());
      }
    }
    return make(Tok::LangTag, std::move(word));
  }

  Token lex_blank_label() {
    c_.advance();  // '_'
    c_.advance();  // ':'
    std::string label;
    if (!Cursor::is_name_char(c_.peek())) c_.fail("expected blank node label after \"_:\"");
    label.push_back(c_.advance());
    read_name_tail(c_, label);
    return make(Tok::BlankLabel, std::move(label));
  }

  Token lex_number() {
    std::string text;
    if (c_.peek() == '+' || c_.peek() == '-') text.push_back(c_.advance());
    while (Cursor::is_digit(c_.peek())) text.push_back(c_.advance());
    if (c_.peek() == '.' && Cursor::is_digit(c_.peek(1))) {
      text.push_back(c_.advance());
      while (Cursor::is_digit(c_.peek())) text.push_back(c_.advance());
      return make(Tok::Decimal, std::move(text));
    }
    return make(Tok::Integer, std::move(text));
  }

  Token lex_word_or_pname() {
    std::string prefix;
    if (c_.peek() != ':') {
      prefix.push_back(c_.advance());
      read_name_tail(c_, prefix);
    }
    if (c_.peek() != ':') return make(Tok::Word, std::move(prefix));
    c_.advance();  // ':'
    std::string local;
    if (Cursor::is_name_char(c_.peek())) {
      local.push_back(c_.advance());
      read_name_tail(c_, local);
    }
    return make(Tok::Pname, std::move(prefix), std::move(local));
  }

  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view document) : tokens_(Lexer(document).run()) {
    for (const Token& t : tokens_) {
      if (t.kind == Tok::BlankLabel) used_labels_.insert(t.text);
    }
  }

  Graph run() {
    while (cur().kind != Tok::Eof) {
      if (cur().kind == Tok::AtPrefix) {
        parse_prefix_directive(true);
      } else if (cur().kind == Tok::Word && cur().text == "PREFIX") {
        parse_prefix_directive(false);
      } else if (cur().kind == Tok::AtBase || (cur().kind == Tok::Word && cur().text == "BASE")) {
        fail("base directives are not supported");
      } else {
        parse_statement();
      }
    }
    return std::move(graph_);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  Graph graph_;
  std::set<std::string> used_labels_;
  int anon_counter_ = 0;

  const Token& cur() const { return tokens_[index_]; }
  void skip() { ++index_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(cur().line, cur().column, message, cur().text);
  }

  void expect(Tok kind, const char* what) {
    if (cur().kind != kind) fail(std::string("expected ") + what);
    skip();
  }

  BlankNode fresh_blank() {
    std::string label;
    do {
      label = "anon" + std::to_string(anon_counter_++);
    } while (used_labels_.contains(label));
    used_labels_.insert(label);
    return BlankNode(label);
  }

  Iri from_iriref(const Token& t) {
    if (t.text.find(':') == std::string::npos) {
      throw ParseError(t.line, t.column, "relative IRIs are not supported (no base directive)",
                       t.text);
    }
    return Iri(t.text);
  }

  Iri resolve_pname(const Token& t) {
    const std::string* ns = graph_.prefixes().find(t.text);
    if (ns == nullptr) {
      throw ParseError(t.line, t.column, "unbound prefix \"" + t.text + ":\"", t.text);
    }
    return Iri(*ns + t.local);
  }

  void parse_prefix_directive(bool needs_dot) {
    skip();  // directive token
    if (cur().kind != Tok::Pname || !cur().local.empty()) fail("expected prefix label");
    std::string label = cur().text;
    skip();
    if (cur().kind != Tok::IriRef) fail("expected namespace IRI");
    std::string ns = cur().text;
    skip();
    if (needs_dot) expect(Tok::Dot, "\".\"");
    graph_.prefixes().bind(std::move(label), std::move(ns));
  }

  bool starts_verb() const {
    return cur().kind == Tok::IriRef || cur().kind == Tok::Pname ||
           (cur().kind == Tok::Word && cur().text == "a");
  }

  void parse_statement() {
    Term subject = [&]() -> Term {
      switch (cur().kind) {
        case Tok::IriRef: {
          Iri iri = from_iriref(cur());
          skip();
          return iri;
        }
        case Tok::Pname: {
          Iri iri = resolve_pname(cur());
          skip();
          return iri;
        }
        case Tok::BlankLabel: {
          BlankNode b(cur().text);
          skip();
          return b;
        }
        case Tok::LBracket:
          return parse_blank_property_list();
        case Tok::LParen:
          fail("collections are not supported");
        default:
          fail("expected subject");
      }
    }();

    // A bare "[ ... ] ." statement carries no outer predicate list.
    if (!(is_blank(subject) && cur().kind == Tok::Dot)) {
      parse_predicate_object_list(subject);
    }
    expect(Tok::Dot, "\".\"");
  }

  Term parse_blank_property_list() {
    skip();  // '['
    BlankNode node = fresh_blank();
    if (cur().kind != Tok::RBracket) parse_predicate_object_list(node);
    expect(Tok::RBracket, "\"]\"");
    return node;
  }

  void parse_predicate_object_list(const Term& subject) {
    while (true) {
      Iri predicate = [&]() -> Iri {
        if (cur().kind == Tok::Word && cur().text == "a") {
          skip();
          return Iri(iris::rdf_type);
        }
        if (cur().kind == Tok::IriRef) {
          Iri iri = from_iriref(cur());
          skip();
          return iri;
        }
        if (cur().kind == Tok::Pname) {
          Iri iri = resolve_pname(cur());
          skip();
          return iri;
        }
        fail("expected predicate");
      }();

      while (true) {
        Term object = parse_object();
        graph_.insert(Triple(subject, predicate, std::move(object)));
        if (cur().kind != Tok::Comma) break;
        skip();
      }

      if (cur().kind != Tok::Semicolon) return;
      while (cur().kind == Tok::Semicolon) skip();
      if (!starts_verb()) return;  // trailing ";"
    }
  }

  Term parse_object() {
    switch (cur().kind) {
      case Tok::IriRef: {
        Iri iri = from_iriref(cur());
        skip();
        return iri;
      }
      case Tok::Pname: {
        Iri iri = resolve_pname(cur());
        skip();
        return iri;
      }
      case Tok::BlankLabel: {
        BlankNode b(cur().text);
        skip();
        return b;
      }
      case Tok::LBracket:
        return parse_blank_property_list();
      case Tok::LParen:
        fail("collections are not supported");
      case Tok::String: {
        std::string lexical = cur().text;
        skip();
        if (cur().kind == Tok::DoubleCaret) {
          skip();
          if (cur().kind == Tok::IriRef) {
            Iri dt = from_iriref(cur());
            skip();
            return Literal::typed(std::move(lexical), std::move(dt));
          }
          if (cur().kind == Tok::Pname) {
            Iri dt = resolve_pname(cur());
            skip();
            return Literal::typed(std::move(lexical), std::move(dt));
          }
          fail("expected datatype IRI after \"^^\"");
        }
        if (cur().kind == Tok::LangTag) {
          std::string tag = cur().text;
          skip();
          return Literal::tagged(std::move(lexical), std::move(tag));
        }
        return Literal::plain(std::move(lexical));
      }
      case Tok::Integer: {
        Literal lit = Literal::typed(cur().text, Iri(iris::xsd_integer));
        skip();
        return lit;
      }
      case Tok::Decimal: {
        Literal lit = Literal::typed(cur().text, Iri(iris::xsd_decimal));
        skip();
        return lit;
      }
      case Tok::Word: {
        if (cur().text == "true" || cur().text == "false") {
          Literal lit = Literal::typed(cur().text, Iri(iris::xsd_boolean));
          skip();
          return lit;
        }
        fail("expected object");
      }
      default:
        fail("expected object");
    }
  }
};

}  // namespace

Graph parse_turtle(std::string_view document) { return Parser(document).run(); }

namespace {

bool emittable_prefix_label(const std::string& label) {
  if (label.empty()) return true;  // default prefix ":"
  if (!Cursor::is_name_start(label.front())) return false;
  return std::all_of(label.begin(), label.end(), Cursor::is_name_char);
}

void append_iri_escaped(std::string& out, std::string_view value) {
  static const char* hex = "0123456789ABCDEF";
  for (char ch : value) {
    auto u = static_cast<unsigned char>(ch);
    if (u <= 0x20 || ch == '<' || ch == '>' || ch == '"' || ch == '{' || ch == '}' || ch == '|' ||
        ch == '^' || ch == '`' || ch == '\\') {
      out += "\\u00";
      out.push_back(hex[u >> 4]);
      out.push_back(hex[u & 0xF]);
    } else {
      out.push_back(ch);
    }
  }
}

std::string render_iri(const Iri& iri, const PrefixMap& prefixes) {
  if (auto pname = prefixes.shorten(iri.value)) return *pname;
  std::string out = "<";
  append_iri_escaped(out, iri.value);
  out += ">";
  return out;
}

std::string render_literal(const Literal& lit, const PrefixMap& prefixes) {
  std::string out = "\"";
  static const char* hex = "0123456789ABCDEF";
  for (char ch : lit.lexical) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: {
        auto u = static_cast<unsigned char>(ch);
        if (u < 0x20) {
          out += "\\u00";
          out.push_back(hex[u >> 4]);
          out.push_back(hex[u & 0xF]);
        } else {
          out.push_back(ch);
        }
      }
    }
  }
  out += "\"";
  if (!lit.language.empty()) {
    out += "@" + lit.language;
  } else if (lit.datatype.value != iris::xsd_string) {
    out += "^^" + render_iri(lit.datatype, prefixes);
  }
  return out;
}

std::string render_term(const Term& term, const PrefixMap& prefixes,
                        const std::map<std::string, std::string>* relabel) {
  if (const auto* iri = std::get_if<Iri>(&term)) return render_iri(*iri, prefixes);
  if (const auto* blank = std::get_if<BlankNode>(&term)) {
    if (relabel != nullptr) return "_:" + relabel->at(blank->label);
    return "_:" + blank->label;
  }
  return render_literal(std::get<Literal>(term), prefixes);
}

}  // namespace

std::string term_to_turtle(const Term& term, const PrefixMap& prefixes) {
  return render_term(term, prefixes, nullptr);
}

std::string serialize_turtle(const Graph& graph) {
  PrefixMap usable;
  for (const auto& [label, ns] : graph.prefixes().entries()) {
    if (emittable_prefix_label(label)) usable.bind(label, ns);
  }

  std::string out;
  for (const auto& [label, ns] : usable.entries()) {
    out += "@prefix " + label + ": <";
    append_iri_escaped(out, ns);
    out += "> .\n";
  }

  if (graph.empty()) return out;
  if (usable.size() > 0) out += "\n";

  // Canonical blank labels in order of first appearance.
  std::map<std::string, std::string> relabel;
  auto assign = [&relabel](const Term& t) {
    if (const auto* b = std::get_if<BlankNode>(&t)) {
      if (!relabel.contains(b->label)) {
        relabel.emplace(b->label, "b" + std::to_string(relabel.size()));
      }
    }
  };
  for (const Triple& t : graph) {
    assign(t.subject);
    assign(t.object);
  }

  const Term* current_subject = nullptr;
  const Iri* current_predicate = nullptr;
  bool first_group = true;
  for (const Triple& t : graph) {
    if (current_subject == nullptr || !(*current_subject == t.subject)) {
      if (!first_group) out += " .\n\n";
      first_group = false;
      out += render_term(t.subject, usable, &relabel) + " ";
      current_subject = &t.subject;
      current_predicate = nullptr;
    }
    if (current_predicate == nullptr || !(*current_predicate == t.predicate)) {
      if (current_predicate != nullptr) out += " ;\n    ";
      out += (t.predicate.value == iris::rdf_type ? "a" : render_iri(t.predicate, usable)) + " ";
      current_predicate = &t.predicate;
    } else {
      out += ", ";
    }
    out += render_term(t.object, usable, &relabel);
  }
  out += " .\n";
  return out;
}

}  // namespace aias
