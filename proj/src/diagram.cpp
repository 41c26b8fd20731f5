#include "dehn/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

namespace dehn {

namespace {

bool is_label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class LineScanner {
 public:
  LineScanner(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column()); }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  std::string label() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a label");
    return std::string(text_.substr(start, pos_ - start));
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

struct EdgeUse {
  std::size_t component;
  std::size_t line;
  std::size_t count;
};

}  // namespace

Diagram parse_pd(std::string_view text) {
  Diagram d;
  std::map<std::string, std::size_t> index;
  bool declared = false;
  auto component_index = [&](const std::string& name, std::size_t line, std::size_t column) -> std::size_t {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    if (declared) throw ParseError("unknown component '" + name + "'", line, column);
    index.emplace(name, d.components.size());
    d.components.push_back(name);
    return d.components.size() - 1;
  };

  std::map<std::string, EdgeUse> edges;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? text.npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    LineScanner sc(line, line_no);
    if (sc.at_end()) continue;

    if (sc.accept("components")) {
      if (declared || !d.components.empty()) sc.fail("components must be declared once, before any crossing");
      sc.expect(':');
      declared = true;
      while (!sc.at_end()) {
        std::string name = sc.label();
        if (index.count(name)) sc.fail("duplicate component '" + name + "'");
        index.emplace(name, d.components.size());
        d.components.push_back(name);
        if (sc.peek() == ',') sc.get();
      }
      if (d.components.empty()) sc.fail("empty component list");
      continue;
    }

    if (sc.peek() != 'X') sc.fail("expected a crossing 'X[a,b,c,d]' or 'components:'");
    sc.get();
    Crossing x;
    x.line = line_no;
    sc.expect('[');
    for (int k = 0; k < 4; ++k) {
      if (k) sc.expect(',');
      x.strands[k] = sc.label();
    }
    sc.expect(']');

    std::optional<int> sign;
    std::optional<std::pair<std::string, std::string>> comps;
    std::size_t comps_column = 0;
    while (!sc.at_end()) {
      if (sc.accept("sign")) {
        sc.expect('=');
        sc.skip_space();
        char c = sc.get();
        if (c == '+') sign = 1;
        else if (c == '-') sign = -1;
        else sc.fail("sign must be '+' or '-'");
      } else if (sc.accept("comps")) {
        sc.expect('=');
        sc.expect('(');
        sc.skip_space();
        comps_column = sc.column();
        std::string under = sc.label();
        sc.expect(',');
        std::string over = sc.label();
        sc.expect(')');
        comps.emplace(under, over);
      } else {
        sc.fail("unexpected token");
      }
    }
    if (!sign) sc.fail("unsigned crossing (missing sign=+|-)");
    if (!comps) sc.fail("crossing without comps=(under,over)");
    x.sign = *sign;
    x.under = component_index(comps->first, line_no, comps_column);
    x.over = component_index(comps->second, line_no, comps_column);

    for (int k = 0; k < 4; ++k) {
      std::size_t comp = (k % 2 == 0) ? x.under : x.over;
      auto [it, fresh] = edges.try_emplace(x.strands[k], EdgeUse{comp, line_no, 0});
      if (!fresh && it->second.component != comp)
        throw ParseError("edge '" + x.strands[k] + "' used on components '" + d.components[it->second.component] +
                             "' and '" + d.components[comp] + "'",
                         line_no, 1);
      ++it->second.count;
    }
    d.crossings.push_back(std::move(x));
  }

  if (d.components.empty()) throw ParseError("empty diagram", 1, 1);
  for (const auto& [label, use] : edges) {
    if (use.count == 1) throw ParseError("dangling strand reference '" + label + "'", use.line, 1);
    if (use.count > 2) throw ParseError("edge '" + label + "' used more than twice", use.line, 1);
  }
  return d;
}

IntMatrix linking_matrix(const Diagram& d) {
  const std::size_t n = d.components.size();
  IntMatrix twice(n, n);
  for (const auto& x : d.crossings) {
    if (x.under == x.over) continue;
    twice(x.under, x.over) += x.sign;
    twice(x.over, x.under) += x.sign;
  }
  IntMatrix lk(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (mpz_odd_p(twice(i, j).get_mpz_t()))
        throw Error("odd signed crossing count between '" + d.components[i] + "' and '" + d.components[j] +
                    "': corrupted diagram");
      lk(i, j) = twice(i, j) / 2;
    }
  return lk;
}

}  // namespace dehn
