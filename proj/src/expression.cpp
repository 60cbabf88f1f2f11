#include "cliquedyn/expression.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "cliquedyn/errors.hpp"

namespace cliquedyn {

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : s_(text) {}

  Graph parse() {
    Graph g = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a graph name");
    std::string id(s_.substr(start, pos_ - start));
    for (char& c : id) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return id;
  }

  std::size_t number() {
    skip_space();
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
    if (ec != std::errc{}) fail("expected a non-negative integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return value;
  }

  std::vector<std::size_t> numbers(std::size_t count) {
    std::vector<std::size_t> out;
    const bool paren = accept('(');
    for (std::size_t i = 0; i < count; ++i) {
      if (i > 0 && paren) expect(',');
      out.push_back(number());
    }
    if (paren) expect(')');
    return out;
  }

  Graph expr() {
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (name == "complement") {
      expect('(');
      Graph g = expr();
      expect(')');
      return complement(g);
    }
    if (name == "union" || name == "join") {
      expect('(');
      std::vector<Graph> parts{expr()};
      while (accept(',')) parts.push_back(expr());
      expect(')');
      if (name == "union") return disjoint_union(parts);
      Graph g = parts[0];
      for (std::size_t i = 1; i < parts.size(); ++i) g = join(g, parts[i]);
      return g;
    }
    if (name == "petersen") {
      if (accept('(')) expect(')');
      return make_petersen();
    }
    if (name == "bipartite") {
      const auto ab = numbers(2);
      return make_complete_bipartite(ab[0], ab[1]);
    }
    if (name == "cycle") return make_cycle(numbers(1)[0]);
    if (name == "complete") return make_complete(numbers(1)[0]);
    if (name == "empty") return make_empty(numbers(1)[0]);
    if (name == "path") return make_path(numbers(1)[0]);
    if (name == "octahedron") return make_octahedron(numbers(1)[0]);
    pos_ = start;
    skip_space();
    fail("unknown graph name '" + name + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_expression(std::string_view text) { return ExpressionParser(text).parse(); }

}  // namespace cliquedyn
