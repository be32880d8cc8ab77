#include "fmc/dsl.hpp"

#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "fmc/error.hpp"

namespace fmc {
namespace {

enum class TokenKind { kIdent, kLBrace, kRBrace, kColon, kEnd };

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  SourceLocation location;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::kIdent: return "'" + t.text + "'";
    case TokenKind::kLBrace: return "'{'";
    case TokenKind::kRBrace: return "'}'";
    case TokenKind::kColon: return "':'";
    case TokenKind::kEnd: return "end of input";
  }
  return "token";
}

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      SourceLocation loc{line_, col_};
      if (pos_ >= src_.size()) {
        out.push_back(Token{TokenKind::kEnd, "", loc});
        return out;
      }
      char c = src_[pos_];
      if (c == '{' || c == '}' || c == ':') {
        advance();
        out.push_back(Token{c == '{'   ? TokenKind::kLBrace
                            : c == '}' ? TokenKind::kRBrace
                                       : TokenKind::kColon,
                            std::string(1, c), loc});
      } else if (is_word_start(c)) {
        std::string word;
        while (pos_ < src_.size() && is_word_char(src_[pos_])) {
          word.push_back(src_[pos_]);
          advance();
        }
        out.push_back(Token{TokenKind::kIdent, std::move(word), loc});
      } else {
        throw ParseError(ErrorCode::kSyntax, loc,
                         std::string("unexpected character '") + c + "'");
      }
    }
  }

 private:
  static bool is_word_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
  }
  static bool is_word_char(char c) {
    return is_word_start(c) || (c >= '0' && c <= '9') || c == '_';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  FeatureModel run() {
    expect_keyword("feature");
    const Token& root = expect_name();
    builder_.emplace(root.text);
    if (peek().kind == TokenKind::kLBrace) parse_body(builder_->root());
    if (is_keyword_token(peek(), "constraints")) parse_constraints();
    if (peek().kind != TokenKind::kEnd) {
      error(peek(), "expected 'constraints' or end of input, found " + describe(peek()));
    }
    try {
      return builder_->build();
    } catch (const ModelError& e) {
      throw ParseError(e.code(), peek().location, e.what());
    }
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void error(const Token& at, const std::string& message,
                          ErrorCode code = ErrorCode::kSyntax) const {
    throw ParseError(code, at.location, message);
  }

  static bool is_keyword_token(const Token& t, std::string_view kw) {
    return t.kind == TokenKind::kIdent && t.text == kw;
  }

  void expect(TokenKind kind, const char* what) {
    if (peek().kind != kind) error(peek(), std::string("expected ") + what + ", found " +
                                               describe(peek()));
    next();
  }

  void expect_keyword(std::string_view kw) {
    if (!is_keyword_token(peek(), kw)) {
      error(peek(), "expected '" + std::string(kw) + "', found " + describe(peek()));
    }
    next();
  }

  const Token& expect_name() {
    const Token& t = peek();
    if (t.kind != TokenKind::kIdent) error(t, "expected a name, found " + describe(t));
    if (is_keyword(t.text)) error(t, "keyword '" + t.text + "' cannot be used as a name");
    return next();
  }

  // Runs a builder mutation, converting model errors into located parse errors.
  template <typename F>
  auto at(const Token& where, F&& f) {
    try {
      return f();
    } catch (const ModelError& e) {
      throw ParseError(e.code(), where.location, e.what());
    }
  }

  void parse_body(FeatureId owner) {
    expect(TokenKind::kLBrace, "'{'");
    for (;;) {
      const Token& t = peek();
      if (t.kind == TokenKind::kRBrace) {
        next();
        return;
      }
      if (is_keyword_token(t, "mandatory") || is_keyword_token(t, "optional")) {
        Variability v = t.text == "mandatory" ? Variability::kMandatory : Variability::kOptional;
        next();
        const Token& name = expect_name();
        FeatureId child = at(name, [&] { return builder_->add_child(owner, name.text, v); });
        if (peek().kind == TokenKind::kLBrace) parse_body(child);
      } else if (is_keyword_token(t, "or") || is_keyword_token(t, "alternative")) {
        GroupKind kind = t.text == "or" ? GroupKind::kOr : GroupKind::kAlternative;
        const Token& group_token = next();
        parse_group(owner, kind, group_token);
      } else if (is_keyword_token(t, "attribute")) {
        next();
        parse_attribute(owner);
      } else {
        error(t, "expected 'mandatory', 'optional', 'or', 'alternative', 'attribute' or '}', "
                 "found " + describe(t));
      }
    }
  }

  void parse_group(FeatureId owner, GroupKind kind, const Token& group_token) {
    expect(TokenKind::kLBrace, "'{'");
    GroupId group = builder_->add_group(owner, kind);
    std::size_t members = 0;
    while (peek().kind != TokenKind::kRBrace) {
      const Token& name = expect_name();
      FeatureId member = at(name, [&] { return builder_->add_group_member(group, name.text); });
      ++members;
      if (peek().kind == TokenKind::kLBrace) parse_body(member);
    }
    if (members < 2) {
      error(group_token, std::string(to_string(kind)) + " group needs at least 2 members",
            ErrorCode::kGroupTooSmall);
    }
    next();
  }

  void parse_attribute(FeatureId owner) {
    const Token& name = expect_name();
    expect(TokenKind::kColon, "':'");
    const Token& type = peek();
    auto datatype = type.kind == TokenKind::kIdent ? datatype_from_string(type.text) : std::nullopt;
    if (!datatype) {
      error(type, "expected a datatype (string, integer, decimal, boolean, date), found " +
                      describe(type));
    }
    next();
    at(name, [&] { builder_->add_attribute(owner, Attribute{name.text, *datatype}); });
  }

  void parse_constraints() {
    next();
    expect(TokenKind::kLBrace, "'{'");
    while (peek().kind != TokenKind::kRBrace) {
      const Token& source = expect_name();
      const Token& op = peek();
      ConstraintKind kind;
      if (is_keyword_token(op, "requires")) {
        kind = ConstraintKind::kRequires;
      } else if (is_keyword_token(op, "excludes")) {
        kind = ConstraintKind::kExcludes;
      } else {
        error(op, "expected 'requires' or 'excludes', found " + describe(op));
      }
      next();
      const Token& target = expect_name();
      auto s = builder_->find(source.text);
      if (!s) error(source, "unknown feature '" + source.text + "'", ErrorCode::kUnknownFeature);
      auto t = builder_->find(target.text);
      if (!t) error(target, "unknown feature '" + target.text + "'", ErrorCode::kUnknownFeature);
      at(source, [&] { builder_->add_constraint(kind, *s, *t); });
    }
    next();
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::optional<FeatureModelBuilder> builder_;
};

class Printer {
 public:
  explicit Printer(const FeatureModel& model) : model_(model) {}

  std::string run() {
    const Feature& root = model_.feature(model_.root());
    out_ << "feature " << root.name;
    print_body(root, 0);
    out_ << '\n';
    if (!model_.constraints().empty()) {
      out_ << "constraints {\n";
      for (const CrossTreeConstraint& c : model_.constraints()) {
        out_ << "  " << model_.name(c.source) << ' ' << to_string(c.kind) << ' '
             << model_.name(c.target) << '\n';
      }
      out_ << "}\n";
    }
    return out_.str();
  }

 private:
  static bool has_body(const FeatureModel& m, const Feature& f) {
    return !f.attributes.empty() || !m.children(f.id).empty();
  }

  void indent(int depth) { out_ << std::string(static_cast<std::size_t>(depth) * 2, ' '); }

  void print_body(const Feature& f, int depth) {
    if (!has_body(model_, f)) return;
    out_ << " {\n";
    for (const Attribute& a : f.attributes) {
      indent(depth + 1);
      out_ << "attribute " << a.name << " : " << to_string(a.datatype) << '\n';
    }
    std::set<GroupId> printed;
    for (FeatureId child_id : model_.children(f.id)) {
      const Feature& child = model_.feature(child_id);
      if (child.variability == Variability::kGroupMember) {
        if (!printed.insert(*child.group).second) continue;
        const Group& g = model_.group(*child.group);
        indent(depth + 1);
        out_ << to_string(g.kind) << " {\n";
        for (FeatureId m : g.members) {
          const Feature& member = model_.feature(m);
          indent(depth + 2);
          out_ << member.name;
          print_body(member, depth + 2);
          out_ << '\n';
        }
        indent(depth + 1);
        out_ << "}\n";
      } else {
        indent(depth + 1);
        out_ << to_string(child.variability) << ' ' << child.name;
        print_body(child, depth + 1);
        out_ << '\n';
      }
    }
    indent(depth);
    out_ << '}';
  }

  const FeatureModel& model_;
  std::ostringstream out_;
};

}  // namespace

FeatureModel parse_model(std::string_view source) {
  return Parser(Lexer(source).run()).run();
}

std::string print_model(const FeatureModel& model) { return Printer(model).run(); }

}  // namespace fmc
