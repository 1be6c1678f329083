#include "aias/query.hpp"

#include <algorithm>
#include <set>

#include "aias/error.hpp"
#include "bgp.hpp"
#include "scan.hpp"

namespace aias {

namespace {

using detail::Cursor;

enum class QTok {
  Word,
  Var,
  Pname,
  IriRef,
  String,
  Integer,
  Decimal,
  LangTag,
  DoubleCaret,
  Star,
  LBrace,
  RBrace,
  Dot,
  Eof,
};

struct QToken {
  QTok kind;
  std::string text;
  std::string local;
  std::size_t line = 1;
  std::size_t column = 1;
};

class QueryLexer {
 public:
  explicit QueryLexer(std::string_view text) : c_(text) {}

  std::vector<QToken> run() {
    std::vector<QToken> out;
    while (true) {
      skip_trivia();
      QToken t = next();
      bool eof = t.kind == QTok::Eof;
      out.push_back(std::move(t));
      if (eof) return out;
    }
  }

 private:
  Cursor c_;
  std::size_t line_ = 1;
  std::size_t col_ = 1;

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

  QToken make(QTok kind, std::string text = "", std::string local = "") {
    return QToken{kind, std::move(text), std::move(local), line_, col_};
  }

  QToken next() {
    line_ = c_.line();
    col_ = c_.column();
    if (c_.at_end()) return make(QTok::Eof);
    char ch = c_.peek();
    switch (ch) {
      case '*': c_.advance(); return make(QTok::Star);
      case '{': c_.advance(); return make(QTok::LBrace);
      case '}': c_.advance(); return make(QTok::RBrace);
      case '.':
        if (Cursor::is_digit(c_.peek(1))) return lex_number();
        c_.advance();
        return make(QTok::Dot);
      case '?': {
        c_.advance();
        std::string name;
        while (Cursor::is_name_char(c_.peek())) name.push_back(c_.advance());
        if (name.empty()) c_.fail("expected variable name after \"?\"");
        return make(QTok::Var, std::move(name));
      }
      case '<': {
        c_.advance();
        std::string iri;
        while (!c_.at_end() && c_.peek() != '>' && c_.peek() != '\n') iri.push_back(c_.advance());
        if (c_.at_end() || c_.peek() != '>') c_.fail("unterminated IRI");
        c_.advance();
        return make(QTok::IriRef, std::move(iri));
      }
      case '"': {
        c_.advance();
        std::string value;
        while (true) {
          if (c_.at_end()) c_.fail("unterminated string literal");
          char d = c_.advance();
          if (d == '"') break;
          if (d == '\n') c_.fail("newline in string literal");
          if (d == '\\') {
            char esc = c_.at_end() ? '\0' : c_.advance();
            switch (esc) {
              case 't': value.push_back('\t'); break;
              case 'n': value.push_back('\n'); break;
              case 'r': value.push_back('\r'); break;
              case '"': value.push_back('"'); break;
              case '\\': value.push_back('\\'); break;
              default: c_.fail("invalid string escape", std::string(1, esc));
            }
            continue;
          }
          value.push_back(d);
        }
        return make(QTok::String, std::move(value));
      }
      case '@': {
        c_.advance();
        std::string tag;
        while (std::isalnum(static_cast<unsigned char>(c_.peek())) != 0 || c_.peek() == '-') {
          tag.push_back(c_.advance());
        }
        if (tag.empty()) c_.fail("expected language tag after \"@\"");
        return make(QTok::LangTag, std::move(tag));
      }
      case '^':
        c_.advance();
        if (c_.peek() != '^') c_.fail("expected \"^^\"", "^");
        c_.advance();
        return make(QTok::DoubleCaret);
      default:
        break;
    }
    if (Cursor::is_digit(ch) || ((ch == '+' || ch == '-') && Cursor::is_digit(c_.peek(1)))) {
      return lex_number();
    }
    if (Cursor::is_name_start(ch) || ch == ':') return lex_word_or_pname();
    c_.fail("unexpected character", std::string(1, ch));
  }

  QToken lex_number() {
    std::string text;
    if (c_.peek() == '+' || c_.peek() == '-') text.push_back(c_.advance());
    while (Cursor::is_digit(c_.peek())) text.push_back(c_.advance());
    if (c_.peek() == '.' && Cursor::is_digit(c_.peek(1))) {
      text.push_back(c_.advance());
      while (Cursor::is_digit(c_.peek())) text.push_back(c_.advance());
      return make(QTok::Decimal, std::move(text));
    }
    return make(QTok::Integer, std::move(text));
  }

  QToken lex_word_or_pname() {
    std::string word;
    if (c_.peek() != ':') {
      word.push_back(c_.advance());
      while (Cursor::is_name_char(c_.peek())) word.push_back(c_.advance());
    }
    if (c_.peek() != ':') return make(QTok::Word, std::move(word));
    c_.advance();
    std::string local;
    while (Cursor::is_name_char(c_.peek())) local.push_back(c_.advance());
    return make(QTok::Pname, std::move(word), std::move(local));
  }
};

class QueryParser {
 public:
  QueryParser(std::string_view text, const PrefixMap& base) : tokens_(QueryLexer(text).run()) {
    for (const auto& [label, ns] : base.entries()) query_.prefixes.bind(label, ns);
  }

  Query run() {
    while (cur().kind == QTok::Word && cur().text == "PREFIX") parse_prefix_line();

    if (!(cur().kind == QTok::Word && cur().text == "SELECT")) fail("expected SELECT");
    skip();
    if (cur().kind == QTok::Word && cur().text == "DISTINCT") {
      query_.distinct = true;
      skip();
    }

    if (cur().kind == QTok::Star) {
      query_.select_all = true;
      skip();
    } else {
      while (cur().kind == QTok::Var) {
        query_.projection.emplace_back(cur().text);
        skip();
      }
      if (query_.projection.empty()) fail("expected projection variables or \"*\"");
    }

    if (!(cur().kind == QTok::Word && cur().text == "WHERE")) fail("expected WHERE");
    skip();
    if (cur().kind != QTok::LBrace) fail("expected \"{\"");
    skip();

    while (cur().kind != QTok::RBrace) {
      if (cur().kind == QTok::Eof) fail("unterminated WHERE block");
      query_.patterns.push_back(parse_pattern());
      if (cur().kind == QTok::Dot) {
        skip();
      } else if (cur().kind != QTok::RBrace) {
        fail("expected \".\" or \"}\"");
      }
    }
    skip();  // '}'
    if (cur().kind != QTok::Eof) fail("unexpected trailing input");

    if (query_.patterns.empty()) fail("empty WHERE block");
    finish_projection();
    return std::move(query_);
  }

 private:
  std::vector<QToken> tokens_;
  std::size_t index_ = 0;
  Query query_;

  const QToken& cur() const { return tokens_[index_]; }
  void skip() { ++index_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(cur().line, cur().column, message, cur().text);
  }

  void parse_prefix_line() {
    skip();  // PREFIX
    if (cur().kind != QTok::Pname || !cur().local.empty()) fail("expected prefix label");
    std::string label = cur().text;
    skip();
    if (cur().kind != QTok::IriRef) fail("expected namespace IRI");
    if (cur().text.find(':') == std::string::npos) fail("namespace IRI must be absolute");
    query_.prefixes.bind(std::move(label), cur().text);
    skip();
  }

  Iri expand(const QToken& t) const {
    const std::string* ns = query_.prefixes.find(t.text);
    if (ns == nullptr) {
      throw UnboundPrefixError("unbound prefix \"" + t.text + ":\" at " +
                               std::to_string(t.line) + ":" + std::to_string(t.column));
    }
    return Iri(*ns + t.local);
  }

  Iri parse_iri() {
    if (cur().kind == QTok::Pname) {
      Iri iri = expand(cur());
      skip();
      return iri;
    }
    if (cur().kind == QTok::IriRef) {
      if (cur().text.find(':') == std::string::npos) fail("relative IRIs are not supported");
      Iri iri = Iri(cur().text);
      skip();
      return iri;
    }
    fail("expected IRI");
  }

  PatternTerm parse_subject() {
    if (cur().kind == QTok::Var) {
      Variable v(cur().text);
      skip();
      return v;
    }
    return Term(parse_iri());
  }

  PatternTerm parse_predicate() {
    if (cur().kind == QTok::Var) {
      Variable v(cur().text);
      skip();
      return v;
    }
    if (cur().kind == QTok::Word && cur().text == "a") {
      skip();
      return Term(Iri(iris::rdf_type));
    }
    return Term(parse_iri());
  }

  PatternTerm parse_object() {
    switch (cur().kind) {
      case QTok::Var: {
        Variable v(cur().text);
        skip();
        return v;
      }
      case QTok::String: {
        std::string lexical = cur().text;
        skip();
        if (cur().kind == QTok::DoubleCaret) {
          skip();
          return Term(Literal::typed(std::move(lexical), parse_iri()));
        }
        if (cur().kind == QTok::LangTag) {
          std::string tag = cur().text;
          skip();
          return Term(Literal::tagged(std::move(lexical), std::move(tag)));
        }
        return Term(Literal::plain(std::move(lexical)));
      }
      case QTok::Integer: {
        Term t = Literal::typed(cur().text, Iri(iris::xsd_integer));
        skip();
        return t;
      }
      case QTok::Decimal: {
        Term t = Literal::typed(cur().text, Iri(iris::xsd_decimal));
        skip();
        return t;
      }
      case QTok::Word:
        if (cur().text == "true" || cur().text == "false") {
          Term t = Literal::typed(cur().text, Iri(iris::xsd_boolean));
          skip();
          return t;
        }
        fail("expected object");
      default:
        return Term(parse_iri());
    }
  }

  TriplePattern parse_pattern() {
    PatternTerm s = parse_subject();
    PatternTerm p = parse_predicate();
    PatternTerm o = parse_object();
    return TriplePattern{std::move(s), std::move(p), std::move(o)};
  }

  void finish_projection() {
    std::vector<std::string> in_order;
    std::set<std::string> seen;
    auto note = [&](const PatternTerm& pt) {
      if (const auto* var = std::get_if<Variable>(&pt)) {
        if (seen.insert(var->name).second) in_order.push_back(var->name);
      }
    };
    for (const TriplePattern& p : query_.patterns) {
      note(p.subject);
      note(p.predicate);
      note(p.object);
    }

    if (query_.select_all) {
      for (const std::string& name : in_order) query_.projection.emplace_back(name);
      return;
    }
    for (const Variable& v : query_.projection) {
      if (!seen.contains(v.name)) {
        throw UnprojectableVariableError("projected variable ?" + v.name +
                                         " does not occur in any pattern");
      }
    }
  }
};

}  // namespace

Query parse_query(std::string_view text, const PrefixMap& base_prefixes) {
  return QueryParser(text, base_prefixes).run();
}

SolutionSequence evaluate_query(const Graph& graph, const Query& query) {
  SolutionSequence out;
  out.variables = query.projection;

  for (const detail::Binding& binding : detail::join_patterns(graph, query.patterns)) {
    std::vector<Term> row;
    row.reserve(query.projection.size());
    for (const Variable& v : query.projection) row.push_back(binding.at(v.name));
    out.rows.push_back(std::move(row));
  }

  std::sort(out.rows.begin(), out.rows.end());
  if (query.distinct) {
    out.rows.erase(std::unique(out.rows.begin(), out.rows.end()), out.rows.end());
  }
  return out;
}

}  // namespace aias
