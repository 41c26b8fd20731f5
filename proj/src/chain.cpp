#include "dehn/chain.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace dehn {

namespace {

// Coordinates of a slope on the component being twisted: mu = mu' + t lambda'.
Slope twist_self(const Slope& s, const Integer& t) { return Slope(s.num(), s.den() + t * s.num()); }

// Coordinates on a component whose framing changes by k = t * lk^2.
Slope twist_linked(const Slope& s, const Integer& k) { return Slope(s.num() + k * s.den(), s.den()); }

}  // namespace

// ---------------------------------------------------------------------------
// Lens spaces

LensSpace::LensSpace(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ < 0) {
    p_ = -p_;
    q_ = -q_;
  }
  if (p_ == 0) {
    if (abs_value(q_) != 1) throw Error("L(0,q) needs q = +-1");
    q_ = 1;
  } else if (p_ == 1) {
    q_ = 0;
  } else {
    q_ = mod_floor(q_, p_);
    if (gcd(p_, q_) != 1) throw Error("L(p,q) needs gcd(p,q) = 1");
  }
}

LensSpace LensSpace::from_slope(const Slope& s, LensConvention convention) {
  return LensSpace(s.num(), convention == LensConvention::kSlopeNamesLens ? Integer(s.den()) : Integer(-s.den()));
}

LensSpace LensSpace::canonical() const {
  if (p_ < 2) return *this;
  Integer inv = mod_inverse(q_, p_);
  return LensSpace(p_, std::min(q_, inv));
}

LensSpace LensSpace::mirror() const { return LensSpace(p_, -q_).canonical(); }

std::string LensSpace::to_string() const {
  if (p_ == 1) return "S3";
  if (p_ == 0) return "S1xS2";
  return "L(" + p_.get_str() + "," + q_.get_str() + ")";
}

bool lens_equivalent(const LensSpace& a, const LensSpace& b, bool oriented) {
  if (a.p() != b.p()) return false;
  const Integer& p = a.p();
  if (p < 2) return true;
  auto same = [&](const Integer& x, const Integer& y) { return mod_floor(x - y, p) == 0; };
  Integer prod = a.q() * b.q();
  if (same(b.q(), a.q()) || same(prod, 1)) return true;
  if (oriented) return false;
  return same(b.q(), -a.q()) || same(prod, -1);
}

// ---------------------------------------------------------------------------
// Chains

ChainPresentation::ChainPresentation(std::vector<Slope> coeffs, std::vector<std::optional<Slope>> meridians)
    : coeffs_(std::move(coeffs)), meridians_(std::move(meridians)) {
  if (meridians_.empty()) meridians_.resize(coeffs_.size());
  if (meridians_.size() != coeffs_.size()) throw Error("one meridian slot per chain component");
}

ChainPresentation ChainPresentation::with_meridians(std::vector<Slope> coeffs) {
  std::vector<std::optional<Slope>> m(coeffs.size(), Slope::infinity());
  return ChainPresentation(std::move(coeffs), std::move(m));
}

ChainPresentation ChainPresentation::parse(std::string_view text) {
  auto coeffs = parse_slope_list(text);
  if (coeffs.empty()) throw Error("empty chain");
  return ChainPresentation(std::move(coeffs));
}

bool ChainPresentation::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Slope& s) { return s.is_integral(); });
}

std::string ChainPresentation::to_string() const { return format_slope_list(coeffs_); }

namespace {

LensSpace combine_summands(const LensSpace& a, const LensSpace& b) {
  if (a.is_sphere()) return b;
  if (b.is_sphere()) return a;
  throw Error("connected sum " + a.to_string() + " # " + b.to_string() + " is not a lens space");
}

LensSpace reduce_to_lens(std::vector<Slope> c, LensConvention convention) {
  auto inf = std::find_if(c.begin(), c.end(), [](const Slope& s) { return s.is_infinite(); });
  if (inf != c.end()) {
    std::vector<Slope> left(c.begin(), inf), right(inf + 1, c.end());
    return combine_summands(reduce_to_lens(std::move(left), convention), reduce_to_lens(std::move(right), convention));
  }
  if (c.empty()) return LensSpace(1, 0);

  const std::size_t n = c.size();
  if (n == 1) return LensSpace::from_slope(c[0], convention).canonical();

  // Absorb an end into its neighbour: valid when the neighbour is integral
  // (slam-dunk) or the end is 1/k (Rolfsen untwist); both give neighbour - 1/end.
  if (c[n - 2].is_integral() || c[n - 1].is_reciprocal_integer()) {
    c[n - 2] = subtract_reciprocal(c[n - 2], c[n - 1]);
    c.pop_back();
    return reduce_to_lens(std::move(c), convention);
  }
  if (c[1].is_integral() || c[0].is_reciprocal_integer()) {
    c[1] = subtract_reciprocal(c[1], c[0]);
    c.erase(c.begin());
    return reduce_to_lens(std::move(c), convention);
  }
  if (n == 2) {
    // Expand the right end into an integral chain, then slam from the left.
    Slope x = c[0];
    for (const auto& entry : cf_negative_expand(c[1])) x = subtract_reciprocal(Slope(entry), x);
    return reduce_to_lens({x}, convention);
  }
  throw Error("chain " + format_slope_list(c) +
              " does not reduce to an unknot: three or more exceptional fibres, not a lens space");
}

void check_index(const ChainPresentation& chain, std::size_t index) {
  if (index >= chain.size())
    throw Error("component " + std::to_string(index + 1) + " out of range for a chain of length " +
                std::to_string(chain.size()));
}

}  // namespace

LensSpace chain_to_lens(const ChainPresentation& chain, LensConvention convention) {
  return reduce_to_lens(chain.coeffs(), convention);
}

bool slam_dunk_applies(const ChainPresentation& chain) {
  return !chain.empty() && !chain.coeffs().back().is_integral() && !chain.coeffs().back().is_infinite();
}

ChainPresentation slam_dunk(const ChainPresentation& chain) {
  if (!slam_dunk_applies(chain)) return chain;
  ChainPresentation out = chain;
  auto expansion = cf_negative_expand(out.coeffs_.back());
  out.coeffs_.back() = Slope(expansion.front());
  for (std::size_t k = 1; k < expansion.size(); ++k) {
    out.coeffs_.emplace_back(expansion[k]);
    out.meridians_.emplace_back(std::nullopt);
  }
  return out;
}

ChainPresentation blow_down_chain(const ChainPresentation& chain, std::size_t index) {
  check_index(chain, index);
  const Slope& c = chain.coeffs_[index];
  if (!c.is_integral() || abs_value(c.num()) != 1)
    throw Error("not blow-downable: component " + std::to_string(index + 1) + " has coefficient " + c.to_string());
  Integer shift = -c.num();
  ChainPresentation out = chain;
  for (std::size_t nb : {index - 1, index + 1}) {
    if (nb >= chain.size()) continue;  // index - 1 wraps when index == 0
    out.coeffs_[nb] = twist_linked(out.coeffs_[nb], shift);
    if (out.meridians_[nb]) out.meridians_[nb] = twist_linked(*out.meridians_[nb], shift);
  }
  out.coeffs_.erase(out.coeffs_.begin() + static_cast<std::ptrdiff_t>(index));
  out.meridians_.erase(out.meridians_.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

ChainPresentation rolfsen_twist(const ChainPresentation& chain, std::size_t index, const Integer& t) {
  check_index(chain, index);
  if (t == 0) return chain;
  if (index > 0 && index + 1 < chain.size())
    throw Error("twist along interior component " + std::to_string(index + 1) +
                " would link its neighbours; not a chain move");
  ChainPresentation out = chain;
  out.coeffs_[index] = twist_self(out.coeffs_[index], t);
  if (out.meridians_[index]) out.meridians_[index] = twist_self(*out.meridians_[index], t);
  for (std::size_t nb : {index - 1, index + 1}) {
    if (nb >= chain.size()) continue;
    out.coeffs_[nb] = twist_linked(out.coeffs_[nb], t);
    if (out.meridians_[nb]) out.meridians_[nb] = twist_linked(*out.meridians_[nb], t);
  }
  return out;
}

ChainPresentation drop_trivial_end(const ChainPresentation& chain, std::size_t index) {
  check_index(chain, index);
  if (index != 0 && index + 1 != chain.size()) throw Error("only end components can be dropped");
  if (!chain.coeffs_[index].is_infinite()) throw Error("only unsurgered (inf) components can be dropped");
  ChainPresentation out = chain;
  out.coeffs_.erase(out.coeffs_.begin() + static_cast<std::ptrdiff_t>(index));
  out.meridians_.erase(out.meridians_.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

// ---------------------------------------------------------------------------
// Move scripts

std::string ChainMove::to_string() const {
  switch (kind) {
    case Kind::kSlamDunk: return "slam";
    case Kind::kBlowDown: return "blowdown " + std::to_string(index + 1);
    case Kind::kTwist: return "twist " + std::to_string(index + 1) + " " + twist.get_str();
    case Kind::kDrop: return "drop " + std::to_string(index + 1);
  }
  return "?";
}

std::vector<ChainMove> parse_move_script(std::string_view text) {
  std::vector<ChainMove> out;
  std::size_t line = 1;
  std::string item;
  auto flush = [&]() {
    std::vector<std::string> tok;
    std::string cur;
    for (char ch : item) {
      if (std::isspace(static_cast<unsigned char>(ch))) {
        if (!cur.empty()) tok.push_back(std::move(cur)), cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) tok.push_back(std::move(cur));
    item.clear();
    if (tok.empty()) return;
    auto index_of = [&](const std::string& s) -> std::size_t {
      try {
        long v = std::stol(s);
        if (v >= 1) return static_cast<std::size_t>(v - 1);
      } catch (const std::exception&) {
      }
      throw ParseError("bad component index '" + s + "'", line, 1);
    };
    ChainMove m;
    if (tok[0] == "slam" && tok.size() == 1) {
      m.kind = ChainMove::Kind::kSlamDunk;
    } else if (tok[0] == "blowdown" && tok.size() == 2) {
      m.kind = ChainMove::Kind::kBlowDown;
      m.index = index_of(tok[1]);
    } else if (tok[0] == "drop" && tok.size() == 2) {
      m.kind = ChainMove::Kind::kDrop;
      m.index = index_of(tok[1]);
    } else if (tok[0] == "twist" && tok.size() == 3) {
      m.kind = ChainMove::Kind::kTwist;
      m.index = index_of(tok[1]);
      if (mpz_set_str(m.twist.get_mpz_t(), tok[2].c_str(), 10) != 0)
        throw ParseError("bad twist count '" + tok[2] + "'", line, 1);
    } else {
      throw ParseError("unknown move '" + tok[0] + "'", line, 1);
    }
    out.push_back(std::move(m));
  };
  for (char ch : text) {
    if (ch == '\n' || ch == ';') {
      flush();
      if (ch == '\n') ++line;
    } else {
      item += ch;
    }
  }
  flush();
  return out;
}

std::string format_move_script(const std::vector<ChainMove>& moves) {
  std::string out;
  for (const auto& m : moves) out += m.to_string() + "\n";
  return out;
}

ChainPresentation apply_move(const ChainPresentation& chain, const ChainMove& move) {
  switch (move.kind) {
    case ChainMove::Kind::kSlamDunk: return slam_dunk(chain);
    case ChainMove::Kind::kBlowDown: return blow_down_chain(chain, move.index);
    case ChainMove::Kind::kTwist: return rolfsen_twist(chain, move.index, move.twist);
    case ChainMove::Kind::kDrop: return drop_trivial_end(chain, move.index);
  }
  return chain;
}

ChainPresentation apply_moves(ChainPresentation chain, const std::vector<ChainMove>& moves) {
  for (const auto& m : moves) chain = apply_move(chain, m);
  return chain;
}

Reduction reduce_chain(const ChainPresentation& chain) {
  Reduction r{chain, {}};
  auto push = [&](ChainMove m) {
    r.result = apply_move(r.result, m);
    r.moves.push_back(std::move(m));
  };
  while (!r.result.empty()) {
    const auto& c = r.result.coeffs();
    const std::size_t n = c.size();
    auto unit = std::find_if(c.begin(), c.end(),
                             [](const Slope& s) { return s.is_integral() && abs_value(s.num()) == 1; });
    if (unit != c.end()) {
      push({ChainMove::Kind::kBlowDown, static_cast<std::size_t>(unit - c.begin()), 0});
      continue;
    }
    bool moved = false;
    for (std::size_t end : {std::size_t{0}, n - 1}) {
      if (c[end].is_infinite()) {
        push({ChainMove::Kind::kDrop, end, 0});
        moved = true;
        break;
      }
      if (c[end].is_reciprocal_integer()) {
        // 1/k with k = q * p (p = +-1) untwists to inf with t = -k.
        push({ChainMove::Kind::kTwist, end, -(c[end].den() * c[end].num())});
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return r;
}

IntMatrix chain_linking_matrix(const ChainPresentation& chain) {
  if (!chain.is_integral()) throw Error("chain linking matrix needs integral coefficients");
  const std::size_t n = chain.size();
  IntMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    b(i, i) = chain.coeffs()[i].num();
    if (i + 1 < n) b(i, i + 1) = b(i + 1, i) = 1;
  }
  return b;
}

// ---------------------------------------------------------------------------
// Dual slopes

DualPresentation dual_slopes_integral(const IntMatrix& b) {
  if (!b.is_square() || !b.is_symmetric()) throw Error("not a surgery presentation of S^3: matrix must be symmetric");
  auto inv = unimodular_inverse(b);
  if (!inv) throw Error("not a surgery presentation of S^3: |det| = " + abs_value(determinant(b)).get_str());
  const std::size_t n = b.rows();
  DualPresentation d{IntMatrix(n, n), {}};
  for (std::size_t i = 0; i < n; ++i) {
    d.slopes.emplace_back(-(*inv)(i, i));
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) d.linking(i, j) = -(*inv)(i, j);
  }
  return d;
}

namespace {

// Every original component stays present: once its coefficient reaches inf it is
// the core of its filling and only its framing coordinates keep changing.  The
// tracked meridian is kept as an oriented pair (a, b) = a mu + b lambda so that each
// core can be oriented like the original meridian at the end.
struct OracleState {
  std::vector<Slope> coeff;
  std::vector<std::pair<Integer, Integer>> tracked;
  IntMatrix lk;

  explicit OracleState(const ChainPresentation& chain) : coeff(chain.coeffs()), lk(chain.size(), chain.size()) {
    const std::size_t n = chain.size();
    tracked.assign(n, {Integer(1), Integer(0)});
    for (std::size_t i = 0; i + 1 < n; ++i) lk(i, i + 1) = lk(i + 1, i) = 1;
  }

  std::size_t size() const { return coeff.size(); }
  bool active(std::size_t i) const { return !coeff[i].is_infinite(); }
  bool any_active() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (active(i)) return true;
    return false;
  }
  std::size_t active_neighbours(std::size_t i) const {
    std::size_t count = 0;
    for (std::size_t k = 0; k < size(); ++k)
      if (k != i && active(k) && lk(i, k) != 0) ++count;
    return count;
  }
  bool is_unit(std::size_t i) const { return coeff[i].is_integral() && abs_value(coeff[i].num()) == 1; }

  bool legal(const TwistStep& s) const {
    if (s.component >= size() || !active(s.component) || s.twist == 0) return false;
    if (active_neighbours(s.component) <= 1) return true;
    return is_unit(s.component) && s.twist == -coeff[s.component].num();
  }

  void twist(const TwistStep& s) {
    const std::size_t j = s.component, n = size();
    const Integer& t = s.twist;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j || lk(k, j) == 0) continue;
      Integer shift = t * lk(k, j) * lk(k, j);
      coeff[k] = twist_linked(coeff[k], shift);
      tracked[k].first += shift * tracked[k].second;
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        if (a == j || b == j) continue;
        Integer delta = t * lk(a, j) * lk(b, j);
        if (delta == 0) continue;
        lk(a, b) += delta;
        lk(b, a) = lk(a, b);
      }
    coeff[j] = twist_self(coeff[j], t);
    tracked[j].second += t * tracked[j].first;
  }

  OracleResult result(std::vector<TwistStep> steps) const {
    // Once every component is unsurgered the original meridian meets the current
    // one once, so b = +-1 and the core oriented like that meridian is b times the component.
    IntMatrix linking = lk;
    std::vector<Slope> slopes;
    for (std::size_t i = 0; i < size(); ++i) {
      linking(i, i) = 0;
      slopes.emplace_back(tracked[i].first, tracked[i].second);
      for (std::size_t j = 0; j < size(); ++j)
        if (i != j) linking(i, j) *= tracked[i].second * tracked[j].second;
    }
    return {{linking, slopes}, std::move(steps)};
  }
};

constexpr int kMaxFreeTwists = 4;
constexpr long kTwistRange = 3;

bool search(const OracleState& state, int budget, std::vector<TwistStep>& steps, OracleState& solved) {
  if (!state.any_active()) {
    solved = state;
    return true;
  }
  // Reductions first: each one turns a component into a core.
  std::vector<TwistStep> reductions;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (!state.active(i)) continue;
    if (state.is_unit(i)) reductions.push_back({i, Integer(-state.coeff[i].num())});
    else if (state.coeff[i].is_reciprocal_integer() && state.active_neighbours(i) <= 1)
      reductions.push_back({i, Integer(-(state.coeff[i].den() * state.coeff[i].num()))});
  }
  for (const auto& r : reductions) {
    OracleState next = state;
    next.twist(r);
    steps.push_back(r);
    if (search(next, budget, steps, solved)) return true;
    steps.pop_back();
  }
  if (budget == 0) return false;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (!state.active(i) || state.active_neighbours(i) > 1) continue;
    for (long t = -kTwistRange; t <= kTwistRange; ++t) {
      if (t == 0) continue;
      TwistStep s{i, Integer(t)};
      OracleState next = state;
      next.twist(s);
      steps.push_back(s);
      if (search(next, budget - 1, steps, solved)) return true;
      steps.pop_back();
    }
  }
  return false;
}

}  // namespace

OracleResult blow_down_sequence_oracle(const ChainPresentation& chain) {
  if (chain.empty()) return {{IntMatrix(), {}}, {}};
  OracleState start(chain);
  for (int budget = 0; budget <= kMaxFreeTwists; ++budget) {
    std::vector<TwistStep> steps;
    OracleState solved = start;
    if (search(start, budget, steps, solved)) return solved.result(std::move(steps));
  }
  throw Error("out of oracle scope: no blow-down/twist sequence empties chain " + chain.to_string());
}

OracleResult replay_twist_steps(const ChainPresentation& chain, const std::vector<TwistStep>& steps) {
  OracleState state(chain);
  for (const auto& s : steps) {
    if (!state.legal(s))
      throw Error("illegal twist " + s.twist.get_str() + " along component " + std::to_string(s.component + 1));
    state.twist(s);
  }
  if (state.any_active()) throw Error("replayed steps leave surgered components");
  return state.result(steps);
}

}  // namespace dehn
