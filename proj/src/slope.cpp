#include "dehn/slope.hpp"

#include <cctype>
#include <utility>

namespace dehn {

Slope::Slope(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == 0 && q_ == 0) throw Error("undefined slope 0/0");
  if (q_ == 0) {
    p_ = 1;
    return;
  }
  if (q_ < 0) {
    p_ = -p_;
    q_ = -q_;
  }
  Integer g = gcd(p_, q_);
  if (g != 1) {
    p_ /= g;
    q_ /= g;
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  out = Integer(digits, 10);
  return true;
}

}  // namespace

Slope Slope::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "inf" || s == "infinity") return infinity();
  Integer p, q = 1;
  auto slash = s.find('/');
  bool ok = slash == std::string_view::npos
                ? parse_integer(s, p)
                : parse_integer(trim(s.substr(0, slash)), p) && parse_integer(trim(s.substr(slash + 1)), q);
  if (!ok) throw Error("malformed slope '" + std::string(text) + "'");
  if (p == 0 && q == 0) throw Error("undefined slope 0/0");
  return Slope(p, q);
}

std::string Slope::to_string() const {
  if (is_infinite()) return "inf";
  if (q_ == 1) return p_.get_str();
  return p_.get_str() + "/" + q_.get_str();
}

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
  if (a.is_infinite()) return std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  Integer lhs = a.num() * b.den();
  Integer rhs = b.num() * a.den();
  int c = cmp(lhs, rhs);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Integer slope_distance(const Slope& a, const Slope& b) {
  Integer d = a.num() * b.den() - b.num() * a.den();
  return abs_value(d);
}

Slope subtract_reciprocal(const Slope& a, const Slope& b) {
  // Homogeneous form of [[p, -q], [q, 0]] acting on (c, d).
  Integer p = a.num() * b.num() - a.den() * b.den();
  Integer q = a.den() * b.num();
  if (p == 0 && q == 0) throw Error("indeterminate chain: inf - inf");
  return Slope(p, q);
}

Slope add_integer(const Slope& a, const Integer& t) {
  if (a.is_infinite()) return a;
  return Slope(a.num() + t * a.den(), a.den());
}

std::vector<Integer> cf_negative_expand(const Slope& r) {
  if (r.is_infinite()) throw Error("cannot expand the infinite slope");
  if (r.num() == 0) throw Error("cannot expand the zero slope");
  std::vector<Integer> out;
  Slope x = r;
  while (true) {
    if (x.is_integral()) {
      out.push_back(x.num());
      return out;
    }
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    out.push_back(c);
    // x = c - 1/x'  =>  x' = 1/(c - x), and 0 < c - x < 1.
    Integer rem = c * x.den() - x.num();
    x = Slope(x.den(), rem);
  }
}

Slope cf_chain_evaluate(std::span<const Slope> coeffs) {
  if (coeffs.empty()) throw Error("empty chain");
  Slope x = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) x = subtract_reciprocal(coeffs[i], x);
  return x;
}

std::vector<Slope> parse_slope_list(std::string_view text) {
  std::vector<Slope> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(Slope::parse(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_slope_list(std::span<const Slope> slopes) {
  std::string out;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    if (i) out += ",";
    out += slopes[i].to_string();
  }
  return out;
}

}  // namespace dehn
