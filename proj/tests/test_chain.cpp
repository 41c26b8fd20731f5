#include <functional>
#include <numeric>
#include <random>

#include "chain_oracle.hpp"
#include "dehn/chain.hpp"
#include "dehn/homology.hpp"
#include "doctest.h"

using dehn::ChainPresentation;
using dehn::IntMatrix;
using dehn::LensSpace;
using dehn::Slope;

namespace {

ChainPresentation chain(const char* text) { return ChainPresentation::parse(text); }

// Lens space name, or "not-lens" when the chain presents something else.
std::string outcome(const ChainPresentation& c) {
  try {
    return dehn::chain_to_lens(c).to_string();
  } catch (const dehn::Error&) {
    return "not-lens";
  }
}

std::vector<std::vector<long>> integral_chains(std::size_t max_len, long lo, long hi) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  std::function<void()> rec = [&]() {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == max_len) return;
    for (long v = lo; v <= hi; ++v) {
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

ChainPresentation from_longs(const std::vector<long>& v) {
  std::vector<Slope> s;
  for (long x : v) s.emplace_back(x);
  return ChainPresentation(s);
}

}  // namespace

TEST_CASE("lens space normal forms") {
  CHECK(LensSpace(3, 2).to_string() == "L(3,2)");
  CHECK(LensSpace(3, -1) == LensSpace(3, 2));
  CHECK(LensSpace(-3, 1) == LensSpace(3, 2));
  CHECK(LensSpace(1, 7).to_string() == "S3");
  CHECK(LensSpace(0, -1).to_string() == "S1xS2");
  CHECK_THROWS_AS(LensSpace(4, 2), dehn::Error);
  CHECK_THROWS_AS(LensSpace(0, 2), dehn::Error);
  CHECK(LensSpace(7, 4).canonical() == LensSpace(7, 2));
  CHECK(LensSpace(3, 1).mirror() == LensSpace(3, 2));
  CHECK(LensSpace(5, 2).mirror() == LensSpace(5, 2));
}

TEST_CASE("lens space equivalence") {
  CHECK_FALSE(dehn::lens_equivalent(LensSpace(3, 2), LensSpace(3, 1), true));
  CHECK(dehn::lens_equivalent(LensSpace(3, 2), LensSpace(3, 1), false));
  CHECK(dehn::lens_equivalent(LensSpace(7, 2), LensSpace(7, 4), true));
  CHECK_FALSE(dehn::lens_equivalent(LensSpace(7, 2), LensSpace(7, 3), true));
  CHECK(dehn::lens_equivalent(LensSpace(7, 2), LensSpace(7, 3), false));
  CHECK_FALSE(dehn::lens_equivalent(LensSpace(5, 1), LensSpace(7, 1), false));
  // Classification rule against brute force over units.
  for (long p = 2; p <= 30; ++p)
    for (long a = 1; a < p; ++a)
      for (long b = 1; b < p; ++b) {
        if (std::gcd(a, p) != 1 || std::gcd(b, p) != 1) continue;
        bool oriented = (a - b) % p == 0 || (a * b - 1) % p == 0;
        CHECK(dehn::lens_equivalent(LensSpace(p, a), LensSpace(p, b), true) == oriented);
        CHECK((LensSpace(p, a).canonical() == LensSpace(p, b).canonical()) == oriented);
      }
}

TEST_CASE("chain_to_lens examples") {
  CHECK(dehn::chain_to_lens(chain("1/2,1,1/2")) == LensSpace(3, 2));
  CHECK(dehn::chain_to_lens(chain("2,2")) == LensSpace(3, 2));
  CHECK(dehn::chain_to_lens(chain("1/5")).is_sphere());
  CHECK(dehn::chain_to_lens(chain("-1/3")).is_sphere());
  CHECK(dehn::chain_to_lens(chain("0")).to_string() == "S1xS2");
  CHECK(dehn::chain_to_lens(chain("0,0")).is_sphere());
  CHECK(dehn::chain_to_lens(chain("7/3")) == LensSpace(7, 3).canonical());
  CHECK(dehn::chain_to_lens(chain("2,2,2,2")) == LensSpace(5, 4));
  CHECK(dehn::chain_to_lens(chain("3/2,5/3")).p() == 9);
  CHECK(dehn::chain_to_lens(chain("2,inf,1")) == LensSpace(2, 1));
  CHECK_THROWS_WITH_AS(dehn::chain_to_lens(chain("2,inf,3")), doctest::Contains("connected sum"), dehn::Error);
  CHECK_THROWS_WITH_AS(dehn::chain_to_lens(chain("3/2,5/3,3/2")), doctest::Contains("not a lens space"),
                       dehn::Error);
  CHECK(dehn::chain_to_lens(chain("1/2,1,1/2"), dehn::LensConvention::kSlopeNamesMirror) == LensSpace(3, 1));
}

TEST_CASE("lens order matches the homology of the chain link") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4), len(1, 4);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<Slope> s;
    for (long k = len(rng); k > 0; --k) {
      long p = num(rng);
      s.emplace_back(p == 0 ? 1 : p, den(rng));
    }
    ChainPresentation c(s);
    LensSpace l(1, 0);
    try {
      l = dehn::chain_to_lens(c);
    } catch (const dehn::Error&) {
      continue;
    }
    IntMatrix lk(s.size(), s.size());
    for (std::size_t i = 0; i + 1 < s.size(); ++i) lk(i, i + 1) = lk(i + 1, i) = 1;
    auto order = dehn::h1_order(dehn::FramedLink(lk, s));
    CHECK(order.value_or(0) == l.p());
  }
}

TEST_CASE("chain_to_lens agrees with the linking-form oracle") {
  const int eps = oracle::form_sign();
  for (const auto& v : integral_chains(4, -3, 3)) {
    auto c = from_longs(v);
    try {
      auto l = dehn::chain_to_lens(c);
      CHECK_MESSAGE(oracle::lens_consistency(c.coeffs(), l, eps).empty(), c.to_string());
    } catch (const dehn::Error& e) {
      FAIL_CHECK(c.to_string() << ": " << e.what());
    }
  }
  for (long p = 2; p <= 40; ++p)
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ChainPresentation single({Slope(p, q)});
      CHECK(oracle::lens_consistency(single.coeffs(), dehn::chain_to_lens(single), eps).empty());
    }
}

TEST_CASE("slam dunk") {
  CHECK(dehn::slam_dunk(chain("1,3/2")) == chain("1,2,2"));
  CHECK(dehn::slam_dunk(chain("5")) == chain("5"));
  CHECK_FALSE(dehn::slam_dunk_applies(chain("5")));
  auto expanded = dehn::slam_dunk(chain("1/2,1,1/2"));
  CHECK(expanded == chain("1/2,1,1,2"));
  CHECK(dehn::chain_to_lens(expanded) == dehn::chain_to_lens(chain("1/2,1,1/2")));
  CHECK(dehn::chain_to_lens(chain("1,3/2")) == dehn::chain_to_lens(chain("1,2,2")));
}

TEST_CASE("blow-downs") {
  CHECK(dehn::blow_down_chain(chain("1,2,2"), 0) == chain("1,2"));
  CHECK(dehn::blow_down_chain(chain("2,1,2"), 1) == chain("1,1"));
  CHECK(dehn::blow_down_chain(chain("-1"), 0).empty());
  CHECK(dehn::blow_down_chain(chain("3,-1,1/2"), 1) == chain("4,3/2"));
  CHECK_THROWS_WITH_AS(dehn::blow_down_chain(chain("2,2"), 0), doctest::Contains("not blow-downable"), dehn::Error);
  CHECK_THROWS_AS(dehn::blow_down_chain(chain("1"), 1), dehn::Error);
  for (const char* c : {"1,2,2", "2,1,2", "-2,-1,3,1"}) {
    auto before = chain(c);
    for (std::size_t i = 0; i < before.size(); ++i) {
      if (abs(before.coeffs()[i].num()) != 1 || !before.coeffs()[i].is_integral()) continue;
      CHECK(outcome(dehn::blow_down_chain(before, i)) == outcome(before));
    }
  }
}

TEST_CASE("Rolfsen twists") {
  CHECK(dehn::rolfsen_twist(chain("1/2"), 0, -2) == chain("inf"));
  auto twisted = dehn::rolfsen_twist(chain("1/2,1,1/2"), 0, 1);
  CHECK(twisted == chain("1/3,2,1/2"));
  CHECK(dehn::chain_to_lens(twisted) == LensSpace(3, 2));
  CHECK(dehn::rolfsen_twist(chain("1/2,1,1/2"), 1, 0) == chain("1/2,1,1/2"));
  CHECK_THROWS_WITH_AS(dehn::rolfsen_twist(chain("1/2,1,1/2"), 1, 1), doctest::Contains("interior"), dehn::Error);
  CHECK(dehn::drop_trivial_end(chain("inf,3"), 0) == chain("3"));
  CHECK_THROWS_AS(dehn::drop_trivial_end(chain("2,3"), 0), dehn::Error);
  CHECK_THROWS_AS(dehn::drop_trivial_end(chain("2,inf,3"), 1), dehn::Error);
}

TEST_CASE("meridian decorations follow the moves") {
  auto c = ChainPresentation::with_meridians({Slope(1, 3)});
  auto t = dehn::rolfsen_twist(c, 0, -3);
  CHECK(t.coeffs()[0].is_infinite());
  CHECK(*t.meridians()[0] == Slope(-1, 3));

  auto d = dehn::blow_down_chain(ChainPresentation::with_meridians({Slope(2), Slope(1)}), 1);
  CHECK(d.coeffs() == std::vector<Slope>{Slope(1)});
  CHECK(*d.meridians()[0] == Slope::infinity());  // meridian is unaffected by framing changes
  CHECK(d.meridians().size() == 1);
  auto s = dehn::slam_dunk(ChainPresentation::with_meridians({Slope(3, 2)}));
  CHECK(s.meridians().size() == 2);
  CHECK_FALSE(s.meridians()[1]);
}

TEST_CASE("chain_to_lens is invariant under every move on small integral chains") {
  for (const auto& v : integral_chains(4, -3, 3)) {
    auto c = from_longs(v);
    const auto expected = outcome(c);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto& s = c.coeffs()[i];
      if (abs(s.num()) == 1) CHECK_MESSAGE(outcome(dehn::blow_down_chain(c, i)) == expected, c.to_string());
      if (i == 0 || i + 1 == c.size())
        for (long t = -2; t <= 2; ++t)
          CHECK_MESSAGE(outcome(dehn::rolfsen_twist(c, i, t)) == expected, c.to_string() << " twist " << t);
    }
  }
}

TEST_CASE("random move sequences on rational chains preserve the lens space") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 3), len(1, 4), twist(-2, 2);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Slope> s;
    for (long k = len(rng); k > 0; --k) {
      long p = num(rng);
      s.emplace_back(p == 0 ? 1 : p, den(rng));
    }
    ChainPresentation c(s);
    const auto expected = outcome(c);
    for (int step = 0; step < 6 && !c.empty(); ++step) {
      std::vector<dehn::ChainMove> legal;
      if (dehn::slam_dunk_applies(c)) legal.push_back({dehn::ChainMove::Kind::kSlamDunk, 0, 0});
      for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& x = c.coeffs()[i];
        if (x.is_integral() && abs(x.num()) == 1) legal.push_back({dehn::ChainMove::Kind::kBlowDown, i, 0});
        if (i == 0 || i + 1 == c.size()) legal.push_back({dehn::ChainMove::Kind::kTwist, i, twist(rng)});
      }
      auto move = legal[std::uniform_int_distribution<std::size_t>(0, legal.size() - 1)(rng)];
      c = dehn::apply_move(c, move);
      CHECK_MESSAGE(outcome(c) == expected, ChainPresentation(s).to_string() << " after " << move.to_string());
    }
  }
}

TEST_CASE("move scripts") {
  CHECK_THROWS_AS(dehn::parse_move_script("twist 1"), dehn::ParseError);
  CHECK_THROWS_AS(dehn::parse_move_script("blowdown 0"), dehn::ParseError);
  CHECK_THROWS_AS(dehn::parse_move_script("hop 1"), dehn::ParseError);
  auto script = dehn::parse_move_script("slam; blowdown 2\n\ntwist 1 3; drop 1");
  REQUIRE(script.size() == 4);
  CHECK(script[1].index == 1);
  CHECK(script[2].twist == 3);
  CHECK(dehn::format_move_script(script) == "slam\nblowdown 2\ntwist 1 3\ndrop 1\n");
  CHECK(dehn::parse_move_script(dehn::format_move_script(script)) == script);

  auto result = dehn::apply_moves(chain("1/2"), dehn::parse_move_script("twist 1 -2; drop 1"));
  CHECK(result.empty());
}

TEST_CASE("greedy reduction") {
  CHECK(dehn::reduce_chain(chain("5")).moves.empty());
  auto r = dehn::reduce_chain(chain("-2,1"));
  CHECK(r.result == chain("-3"));
  REQUIRE(r.moves.size() == 1);
  CHECK(r.moves[0].to_string() == "blowdown 2");
  auto hopf = dehn::reduce_chain(chain("1/2,1,1/2"));
  CHECK(dehn::chain_to_lens(hopf.result) == LensSpace(3, 2));
  CHECK(dehn::apply_moves(chain("1/2,1,1/2"), hopf.moves) == hopf.result);
  CHECK(dehn::reduce_chain(chain("1,2")).result.empty());
  CHECK(dehn::reduce_chain(chain("1,1")).result == chain("0"));
}

TEST_CASE("dual slopes by the matrix route") {
  auto one = dehn::dual_slopes_integral(IntMatrix::from_rows({{1}}));
  CHECK(one.slopes == std::vector<Slope>{Slope(-1)});
  auto hopf = dehn::dual_slopes_integral(IntMatrix::from_rows({{1, 1}, {1, 2}}));
  CHECK(hopf.slopes == std::vector<Slope>{Slope(-2), Slope(-1)});
  CHECK(abs(hopf.linking(0, 1)) == 1);
  auto id = dehn::dual_slopes_integral(IntMatrix::identity(3));
  CHECK(id.slopes == std::vector<Slope>(3, Slope(-1)));
  CHECK(id.linking == IntMatrix(3, 3));
  CHECK_THROWS_WITH_AS(dehn::dual_slopes_integral(IntMatrix::from_rows({{2}})),
                       doctest::Contains("not a surgery presentation of S^3"), dehn::Error);
  CHECK_THROWS_AS(dehn::dual_slopes_integral(IntMatrix::from_rows({{1, 2}, {0, 1}})), dehn::Error);
}

TEST_CASE("blow-down oracle on hand-checked chains") {
  CHECK(dehn::blow_down_sequence_oracle(chain("1")).dual.slopes == std::vector<Slope>{Slope(-1)});
  CHECK(dehn::blow_down_sequence_oracle(chain("1/4")).dual.slopes == std::vector<Slope>{Slope(-1, 4)});
  CHECK(dehn::blow_down_sequence_oracle(chain("-1/2")).dual.slopes == std::vector<Slope>{Slope(1, 2)});
  auto two = dehn::blow_down_sequence_oracle(chain("1,2"));
  CHECK(two.dual.slopes == std::vector<Slope>{Slope(-2), Slope(-1)});
  CHECK(abs(two.dual.linking(0, 1)) == 1);
  CHECK_THROWS_WITH_AS(dehn::blow_down_sequence_oracle(chain("2")), doctest::Contains("out of oracle scope"),
                       dehn::Error);
}

TEST_CASE("matrix and move routes agree, and duality is an involution") {
  std::size_t compared = 0;
  for (const auto& v : integral_chains(3, -3, 3)) {
    auto c = from_longs(v);
    auto b = dehn::chain_linking_matrix(c);
    if (abs(dehn::determinant(b)) != 1) continue;
    auto matrix = dehn::dual_slopes_integral(b);
    auto moves = dehn::blow_down_sequence_oracle(c);
    CHECK_MESSAGE(matrix.slopes == moves.dual.slopes, c.to_string());
    CHECK_MESSAGE(matrix.linking == moves.dual.linking, c.to_string());
    CHECK(dehn::replay_twist_steps(c, moves.steps).dual.slopes == moves.dual.slopes);

    IntMatrix d = matrix.linking;
    for (std::size_t i = 0; i < c.size(); ++i) d(i, i) = matrix.slopes[i].num();
    auto back = dehn::dual_slopes_integral(d);
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(back.slopes[i] == c.coeffs()[i]);
    IntMatrix lk = b;
    for (std::size_t i = 0; i < c.size(); ++i) lk(i, i) = 0;
    CHECK(back.linking == lk);
    ++compared;
  }
  CHECK(compared > 20);
}

TEST_CASE("replaying twist steps rejects illegal moves") {
  CHECK_THROWS_AS(dehn::replay_twist_steps(chain("2,2,2"), {{1, 1}}), dehn::Error);
  CHECK_THROWS_WITH_AS(dehn::replay_twist_steps(chain("2"), {{0, 1}}), doctest::Contains("leave"), dehn::Error);
}
