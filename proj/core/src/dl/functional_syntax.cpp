#include "fmc/dl/functional_syntax.hpp"

#include <map>
#include <vector>

#include "fmc/error.hpp"
#include "internal/overloaded.hpp"

namespace fmc::dl {
namespace {

using internal::Overloaded;

constexpr std::string_view kOwlIri = "http://www.w3.org/2002/07/owl#";
constexpr std::string_view kXsdIri = "http://www.w3.org/2001/XMLSchema#";

// ---------------------------------------------------------------------------
// Writer

void write(std::string& out, const ClassExpression& e) {
  using K = ClassExpression::Kind;
  auto nary = [&](const char* head) {
    out += head;
    out += '(';
    bool first = true;
    for (const ClassExpression& op : e.operands()) {
      if (!first) out += ' ';
      first = false;
      write(out, op);
    }
    out += ')';
  };
  auto restriction = [&](const char* head) {
    out += head;
    out += "(:";
    out += e.name();
    out += ' ';
    write(out, e.filler());
    out += ')';
  };
  switch (e.kind()) {
    case K::kNamed: out += ':' + e.name(); break;
    case K::kThing: out += "owl:Thing"; break;
    case K::kComplement: nary("ObjectComplementOf"); break;
    case K::kIntersection: nary("ObjectIntersectionOf"); break;
    case K::kUnion: nary("ObjectUnionOf"); break;
    case K::kSome: restriction("ObjectSomeValuesFrom"); break;
    case K::kAll: restriction("ObjectAllValuesFrom"); break;
  }
}

void write(std::string& out, const Axiom& axiom) {
  std::visit(Overloaded{
                 [&](const Declaration& a) {
                   out += "Declaration(";
                   out += to_string(a.kind);
                   out += "(:" + a.name + "))";
                 },
                 [&](const SubClassOf& a) {
                   out += "SubClassOf(";
                   write(out, a.sub);
                   out += ' ';
                   write(out, a.sup);
                   out += ')';
                 },
                 [&](const EquivalentClasses& a) {
                   out += "EquivalentClasses(";
                   write(out, a.first);
                   out += ' ';
                   write(out, a.second);
                   out += ')';
                 },
                 [&](const DisjointClasses& a) {
                   out += "DisjointClasses(:" + a.first + " :" + a.second + ")";
                 },
                 [&](const ObjectPropertyRange& a) {
                   out += "ObjectPropertyRange(:" + a.property + ' ';
                   write(out, a.range);
                   out += ')';
                 },
                 [&](const DataPropertyDomain& a) {
                   out += "DataPropertyDomain(:" + a.property + " :" + a.domain + ")";
                 },
                 [&](const DataPropertyRange& a) {
                   out += "DataPropertyRange(:" + a.property + " xsd:" + to_string(a.range) + ")";
                 },
             },
             axiom);
}

// ---------------------------------------------------------------------------
// Reader

enum class Tok { kOpen, kClose, kEquals, kIri, kWord, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  SourceLocation location;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t pos = 0, line = 1, col = 1;
  auto advance = [&] {
    if (src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  };
  auto word_char = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '_' || c == ':' || c == '-' || c == '.';
  };
  for (;;) {
    while (pos < src.size() &&
           (src[pos] == ' ' || src[pos] == '\t' || src[pos] == '\r' || src[pos] == '\n')) {
      advance();
    }
    SourceLocation loc{line, col};
    if (pos >= src.size()) {
      out.push_back({Tok::kEnd, "", loc});
      return out;
    }
    char c = src[pos];
    if (c == '(' || c == ')' || c == '=') {
      advance();
      out.push_back({c == '(' ? Tok::kOpen : c == ')' ? Tok::kClose : Tok::kEquals,
                     std::string(1, c), loc});
    } else if (c == '<') {
      advance();
      std::string iri;
      while (pos < src.size() && src[pos] != '>') {
        if (src[pos] == '\n') throw ParseError(ErrorCode::kSyntax, loc, "unterminated IRI");
        iri.push_back(src[pos]);
        advance();
      }
      if (pos >= src.size()) throw ParseError(ErrorCode::kSyntax, loc, "unterminated IRI");
      advance();
      out.push_back({Tok::kIri, std::move(iri), loc});
    } else if (word_char(c)) {
      std::string word;
      while (pos < src.size() && word_char(src[pos])) {
        word.push_back(src[pos]);
        advance();
      }
      out.push_back({Tok::kWord, std::move(word), loc});
    } else {
      throw ParseError(ErrorCode::kSyntax, loc, std::string("unexpected character '") + c + "'");
    }
  }
}

class Reader {
 public:
  explicit Reader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Ontology run() {
    while (peek_word("Prefix")) parse_prefix();
    if (!peek_word("Ontology")) fail(peek(), "expected 'Prefix' or 'Ontology'");
    next();
    expect(Tok::kOpen, "'('");
    const Token& iri = peek();
    if (iri.kind != Tok::kIri) fail(iri, "expected the ontology IRI");
    next();
    if (auto it = prefixes_.find(""); it != prefixes_.end() && it->second != iri.text) {
      unsupported(iri, "default prefix differs from the ontology IRI");
    }
    prefixes_.emplace("", iri.text);
    Ontology ontology(iri.text);
    while (peek().kind != Tok::kClose) {
      if (peek().kind == Tok::kEnd) fail(peek(), "unterminated Ontology(");
      ontology.add(parse_axiom());
    }
    next();
    if (peek().kind != Tok::kEnd) fail(peek(), "unexpected text after the ontology");
    ontology.validate();
    return ontology;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ + 1 < tokens_.size() ? pos_++ : pos_]; }
  bool peek_word(std::string_view w) const {
    return peek().kind == Tok::kWord && peek().text == w;
  }

  [[noreturn]] static void fail(const Token& at, const std::string& message) {
    throw ParseError(ErrorCode::kSyntax, at.location,
                     message + (at.kind == Tok::kEnd ? " at end of input"
                                                     : ", found '" + at.text + "'"));
  }
  [[noreturn]] static void unsupported(const Token& at, const std::string& message) {
    throw ParseError(ErrorCode::kUnsupportedConstruct, at.location, message);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(peek(), std::string("expected ") + what);
    next();
  }

  void parse_prefix() {
    next();
    expect(Tok::kOpen, "'('");
    const Token& name = peek();
    if (name.kind != Tok::kWord || name.text.back() != ':' ||
        name.text.find(':') != name.text.size() - 1) {
      fail(name, "expected a prefix name");
    }
    next();
    expect(Tok::kEquals, "'='");
    const Token& iri = peek();
    if (iri.kind != Tok::kIri) fail(iri, "expected an IRI");
    next();
    expect(Tok::kClose, "')'");
    prefixes_[name.text.substr(0, name.text.size() - 1)] = iri.text;
  }

  // Expands a prefixed name or IRI into (namespace, local name).
  std::pair<std::string, std::string> resolve(const Token& t) const {
    if (t.kind == Tok::kIri) {
      const std::string& base = prefixes_.at("");
      if (t.text.size() > base.size() && t.text.compare(0, base.size(), base) == 0) {
        return {base, t.text.substr(base.size())};
      }
      unsupported(t, "IRI <" + t.text + "> is outside the ontology namespace");
    }
    auto colon = t.text.find(':');
    if (t.kind != Tok::kWord || colon == std::string::npos) fail(t, "expected an entity name");
    std::string prefix = t.text.substr(0, colon);
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail(t, "undeclared prefix '" + prefix + ":'");
    return {it->second, t.text.substr(colon + 1)};
  }

  // A name in the ontology's own namespace.
  std::string local_name() {
    const Token& t = peek();
    auto [ns, local] = resolve(t);
    if (ns != prefixes_.at("")) unsupported(t, "entity '" + t.text + "' is outside the subset");
    if (local.empty()) fail(t, "empty entity name");
    next();
    return local;
  }

  // Consumes `Head(` for a known head; throws unsupported for unknown ones.
  bool is_call() const {
    return peek().kind == Tok::kWord && peek().text.find(':') == std::string::npos &&
           pos_ + 1 < tokens_.size() && tokens_[pos_ + 1].kind == Tok::kOpen;
  }

  Axiom parse_axiom() {
    if (!is_call()) fail(peek(), "expected an axiom");
    const Token& head = next();
    next();  // '('
    if (peek().kind == Tok::kWord && peek().text == "Annotation") {
      unsupported(peek(), "axiom annotations are not supported");
    }
    Axiom axiom = [&]() -> Axiom {
      const std::string& h = head.text;
      if (h == "Declaration") return parse_declaration();
      if (h == "SubClassOf") {
        ClassExpression sub = parse_class();
        return SubClassOf{std::move(sub), parse_class()};
      }
      if (h == "EquivalentClasses") {
        ClassExpression first = parse_class();
        return EquivalentClasses{std::move(first), parse_class()};
      }
      if (h == "DisjointClasses") {
        std::string first = named_class();
        return DisjointClasses{std::move(first), named_class()};
      }
      if (h == "ObjectPropertyRange") {
        std::string property = object_property();
        return ObjectPropertyRange{std::move(property), parse_class()};
      }
      if (h == "DataPropertyDomain") {
        std::string property = local_name();
        return DataPropertyDomain{std::move(property), named_class()};
      }
      if (h == "DataPropertyRange") {
        std::string property = local_name();
        const Token& t = peek();
        auto [ns, local] = resolve(t);
        auto datatype = ns == kXsdIri ? xsd_from_string(local) : std::nullopt;
        if (!datatype) unsupported(t, "datatype '" + t.text + "' is not supported");
        next();
        return DataPropertyRange{std::move(property), *datatype};
      }
      unsupported(head, "axiom type '" + h + "' is not supported");
    }();
    if (peek().kind != Tok::kClose) {
      if (head.text == "EquivalentClasses" || head.text == "DisjointClasses") {
        unsupported(peek(), head.text + " with more than two operands is not supported");
      }
      fail(peek(), "expected ')'");
    }
    next();
    return axiom;
  }

  Axiom parse_declaration() {
    if (!is_call()) fail(peek(), "expected an entity kind");
    const Token& kind_token = next();
    next();
    EntityKind kind;
    if (kind_token.text == "Class") {
      kind = EntityKind::kClass;
    } else if (kind_token.text == "ObjectProperty") {
      kind = EntityKind::kObjectProperty;
    } else if (kind_token.text == "DataProperty") {
      kind = EntityKind::kDataProperty;
    } else {
      unsupported(kind_token, "declarations of '" + kind_token.text + "' are not supported");
    }
    std::string name = local_name();
    expect(Tok::kClose, "')'");
    return Declaration{kind, std::move(name)};
  }

  std::string object_property() {
    if (is_call()) unsupported(peek(), "property expression '" + peek().text + "'");
    return local_name();
  }

  std::string named_class() {
    if (is_call()) unsupported(peek(), "expected a named class, found '" + peek().text + "'");
    return local_name();
  }

  ClassExpression parse_class() {
    if (!is_call()) {
      const Token& t = peek();
      if (t.kind == Tok::kWord || t.kind == Tok::kIri) {
        auto [ns, local] = resolve(t);
        if (ns == kOwlIri) {
          if (local != "Thing") unsupported(t, "class '" + t.text + "' is not supported");
          next();
          return ClassExpression::thing();
        }
      }
      return ClassExpression::named(local_name());
    }
    const Token& head = next();
    next();  // '('
    const std::string& h = head.text;
    ClassExpression result = [&] {
      if (h == "ObjectComplementOf") return ClassExpression::complement(parse_class());
      if (h == "ObjectIntersectionOf" || h == "ObjectUnionOf") {
        std::vector<ClassExpression> ops;
        while (peek().kind != Tok::kClose) {
          if (peek().kind == Tok::kEnd) fail(peek(), "unterminated " + h);
          ops.push_back(parse_class());
        }
        if (ops.size() < 2) fail(peek(), h + " needs at least two operands");
        return h == "ObjectUnionOf" ? ClassExpression::union_of(std::move(ops))
                                    : ClassExpression::intersection(std::move(ops));
      }
      if (h == "ObjectSomeValuesFrom" || h == "ObjectAllValuesFrom") {
        std::string property = object_property();
        ClassExpression filler = parse_class();
        return h == "ObjectSomeValuesFrom" ? ClassExpression::some(std::move(property),
                                                                   std::move(filler))
                                           : ClassExpression::all(std::move(property),
                                                                  std::move(filler));
      }
      unsupported(head, "class expression '" + h + "' is not supported");
    }();
    expect(Tok::kClose, "')'");
    return result;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, std::string> prefixes_{{"owl", std::string(kOwlIri)},
                                               {"xsd", std::string(kXsdIri)}};
};

}  // namespace

std::string serialize_functional(const Ontology& ontology) {
  ontology.validate();
  std::string out;
  out += "Prefix(:=<" + ontology.iri() + ">)\n";
  out += "Prefix(owl:=<" + std::string(kOwlIri) + ">)\n";
  out += "Prefix(xsd:=<" + std::string(kXsdIri) + ">)\n";
  out += "Ontology(<" + ontology.iri() + ">\n";
  for (const Axiom& a : ontology.axioms()) {
    write(out, a);
    out += '\n';
  }
  out += ")\n";
  return out;
}

Ontology parse_functional(std::string_view text) { return Reader(tokenize(text)).run(); }

}  // namespace fmc::dl
