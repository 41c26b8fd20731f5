#include "dehn/reference_checks.hpp"

#include <algorithm>

#include "dehn/adjacency.hpp"
#include "dehn/diagram.hpp"
#include "dehn/enumeration.hpp"
#include "dehn/homology.hpp"
#include "dehn/link_io.hpp"

namespace dehn {

namespace {

using Outcome = std::optional<std::string>;

IntMatrix symmetric3(long l12, long l13, long l23) {
  IntMatrix m(3, 3);
  m(0, 1) = m(1, 0) = l12;
  m(0, 2) = m(2, 0) = l13;
  m(1, 2) = m(2, 1) = l23;
  return m;
}

Outcome expect_order(const FramedLink& link, long expected, const std::string& what) {
  auto order = h1_order(link);
  if (order && *order == expected) return std::nullopt;
  return what + ": expected |H1| = " + std::to_string(expected) + ", got " + format_order(order);
}

Outcome slope_distance_check(LensConvention) {
  auto d = slope_distance(Slope::infinity(), Slope(1, 5));
  if (d != 5) return "distance(inf, 1/5) = " + d.get_str();
  return std::nullopt;
}

Outcome borromean_diagram_check(LensConvention) {
  auto d = parse_pd(read_text_file(corpus_dir() / "borromean.pd"));
  auto lk = linking_matrix(d);
  if (lk != IntMatrix(3, 3)) return "Borromean linking matrix " + lk.to_string();
  return std::nullopt;
}

Outcome pair_matrix_check(LensConvention) {
  for (long l = -4; l <= 4; ++l)
    for (long q1 : {-3, -1, 1, 2, 5})
      for (long q2 : {-2, 1, 3}) {
        IntMatrix m(2, 2);
        m(0, 1) = m(1, 0) = l;
        FramedLink link(m, {Slope(1, q1), Slope(1, q2)});
        if (q1 > 0 && q2 > 0 && presentation_matrix(link) != IntMatrix::from_rows({{1, q2 * l}, {q1 * l, 1}}))
          return "pair presentation matrix " + presentation_matrix(link).to_string();
        Integer expected = abs_value(Integer(q1 * q2 * l * l - 1));
        auto order = h1_order(link);
        if (expected == 0 ? order.has_value() : (!order || *order != expected))
          return "pair l=" + std::to_string(l) + " q=(" + std::to_string(q1) + "," + std::to_string(q2) +
                 "): order " + format_order(order);
      }
  IntMatrix hopf(2, 2);
  hopf(0, 1) = hopf(1, 0) = 1;
  FramedLink pair(hopf, {Slope(1), Slope(1, 2)});
  if (!h1(pair).is_trivial()) return "Hopf pair (1,1/2) has H1 = " + h1(pair).to_string();
  if (check_pair_classification(1, Slope(1), Slope(1, 2)).verdict != Verdict::kPass)
    return "Hopf pair (1,1/2) rejected by the pair classification";
  return std::nullopt;
}

Outcome triple_matrices_check(LensConvention) {
  struct Case {
    IntMatrix linking;
    std::vector<Slope> slopes;
    IntMatrix expected;
  };
  std::vector<Case> cases{
      {symmetric3(1, 1, 0), {Slope(1), Slope(1, 2), Slope(1, 2)}, IntMatrix::from_rows({{1, 2, 2}, {1, 1, 0}, {1, 0, 1}})},
      {symmetric3(1, 0, 1), {Slope(1), Slope(1, 2), Slope(1)}, IntMatrix::from_rows({{1, 2, 0}, {1, 1, 1}, {0, 2, 1}})},
  };
  for (const auto& c : cases) {
    FramedLink link(c.linking, c.slopes);
    auto a = presentation_matrix(link);
    if (a != c.expected) return "presentation matrix " + a.to_string() + ", expected " + c.expected.to_string();
    auto g = h1(link);
    if (g.to_string() != "Z/3") return "triple " + a.to_string() + " has H1 = " + g.to_string();
  }
  return std::nullopt;
}

Outcome borromean_homology_check(LensConvention) {
  FramedLink link(IntMatrix(3, 3), {Slope(1), Slope(1), Slope(1)});
  if (auto bad = expect_order(link, 1, "(1,1,1) on the Borromean rings")) return bad;
  for (const auto& sel : nonempty_sublinks(3, true))
    if (auto bad = expect_order(sublink(link, sel), 1, "Borromean sublink " + sel.to_string())) return bad;
  if (!is_integer_homology_sphere(link)) return "Borromean (1,1,1) not recognised as a homology sphere";
  return std::nullopt;
}

Outcome pair_completeness_check(LensConvention) {
  auto set = enumerate_pair_solutions(10, 10);
  std::vector<PairSolution> expected;
  for (long l : {-1, 1})
    for (auto [a, b] : {std::pair{-2L, -1L}, {-1L, -2L}, {1L, 2L}, {2L, 1L}}) expected.push_back({l, a, b});
  std::sort(expected.begin(), expected.end());
  if (set.exceptional != expected)
    return "exceptional pair family has " + std::to_string(set.exceptional.size()) + " members, expected 8";
  return std::nullopt;
}

Outcome triple_obstruction_check(LensConvention) {
  auto rows = enumerate_triple_obstructions(2);
  auto contains = [&](std::array<long, 3> lk, std::array<Slope, 3> s) {
    return std::any_of(rows.begin(), rows.end(), [&](const TripleObstruction& t) {
      return t.linking[0] == lk[0] && t.linking[1] == lk[1] && t.linking[2] == lk[2] && t.slopes == s &&
             t.order && *t.order == 3;
    });
  };
  if (!contains({1, 1, 0}, {Slope(1), Slope(1, 2), Slope(1, 2)}))
    return "obstruction l12=l13=1, slopes (1,1/2,1/2) missing";
  if (!contains({1, 0, 1}, {Slope(1), Slope(1, 2), Slope(1)}))
    return "obstruction l12=l23=1, slopes (1,1/2,1) missing";
  return std::nullopt;
}

Outcome hopf_chain_conditions_check(LensConvention) {
  FramedLink chain(symmetric3(1, 0, 1), {Slope(1, 2), Slope(1), Slope(1, 2)});
  auto report = necessary_conditions(chain);
  if (report.verdict != Verdict::kInconclusive) return "Hopf chain (1/2,1,1/2): " + report.to_text();
  if (is_integer_homology_sphere(chain)) return "Hopf chain (1/2,1,1/2) reported as a homology sphere";
  return expect_order(chain, 3, "Hopf chain (1/2,1,1/2)");
}

Outcome bad_triple_check(LensConvention) {
  FramedLink link(symmetric3(1, 1, 0), {Slope(1), Slope(1, 2), Slope(1, 2)});
  auto report = necessary_conditions(link, {.target_homology_sphere = true});
  if (report.verdict != Verdict::kFail) return "triple (1,1/2,1/2) not rejected";
  for (const auto& v : report.violations)
    if (v.detail.find("order 3") != std::string::npos) return std::nullopt;
  return "triple (1,1/2,1/2) rejected without an order-3 witness";
}

Outcome integral_adjacency_check_reference(LensConvention) {
  for (const auto& slopes : {std::vector<Slope>{Slope(1), Slope(1), Slope(1)}, std::vector<Slope>{Slope(1), Slope(-1), Slope(1)}}) {
    FramedLink link(IntMatrix(3, 3), slopes);
    auto report = integral_adjacency_check(link);
    if (report.verdict == Verdict::kFail) return "integral slopes " + format_slope_list(slopes) + " rejected";
  }
  return std::nullopt;
}

Outcome split_hopf_check(LensConvention) {
  SplitHopfStructure structure(3, {{0, 1}});
  FramedLink link(split_hopf_linking(structure), {Slope(1), Slope(1, 2), Slope(1, 7)});
  auto report = certify_split_hopf_form(link, structure);
  if (report.verdict != Verdict::kPass) return "pair (1,1/2) with singleton 1/7: " + report.to_text();
  auto stream = enumerate_hopf_brunnian_slopes(2, {{0, 1}}, 5);
  std::vector<std::vector<Slope>> seen;
  while (auto s = stream.next()) seen.push_back(*s);
  std::vector<std::vector<Slope>> expected{
      {Slope(1), Slope(1, 2)}, {Slope(1, 2), Slope(1)}, {Slope(-1), Slope(-1, 2)}, {Slope(-1, 2), Slope(-1)}};
  std::sort(seen.begin(), seen.end());
  std::sort(expected.begin(), expected.end());
  if (seen != expected) return "one Hopf pair yields " + std::to_string(seen.size()) + " slope pairs, expected 4";
  return std::nullopt;
}

Outcome hopf_chain_lens_check(LensConvention convention) {
  auto chain = ChainPresentation::parse("1/2,1,1/2");
  auto lens = chain_to_lens(chain, convention);
  const LensSpace l31(3, 1), l32(3, 2);
  if (!lens_equivalent(lens, l32, true)) return "Hopf chain (1/2,1,1/2) gives " + lens.to_string() + ", expected -L(3,1)";
  if (lens_equivalent(lens, l31, true)) return "Hopf chain (1/2,1,1/2) is orientation-preservingly L(3,1)";
  if (!lens_equivalent(lens, l31, false)) return "Hopf chain (1/2,1,1/2) is not L(3,1) up to orientation";
  if (lens != l31.mirror()) return "-L(3,1) canonicalises to " + l31.mirror().to_string();
  return std::nullopt;
}

}  // namespace

const std::vector<ReferenceCheck>& reference_checks() {
  static const std::vector<ReferenceCheck> checks{
      {"slope-distance-inf-to-1/5-is-5", slope_distance_check},
      {"borromean-diagram-pairwise-unlinked", borromean_diagram_check},
      {"pair-matrix-order-is-|q1q2l^2-1|", pair_matrix_check},
      {"triple-matrices-have-order-3", triple_matrices_check},
      {"borromean-(1,1,1)-homology-sphere", borromean_homology_check},
      {"pair-classification-complete-to-10", pair_completeness_check},
      {"triple-obstructions-include-order-3-cases", triple_obstruction_check},
      {"hopf-chain-(1/2,1,1/2)-passes-sublink-conditions", hopf_chain_conditions_check},
      {"triple-(1,1/2,1/2)-fails-with-order-3", bad_triple_check},
      {"integral-adjacency-mixed-signs", integral_adjacency_check_reference},
      {"split-hopf-certificate-and-four-pair-slopes", split_hopf_check},
      {"hopf-chain-(1/2,1,1/2)-is-minus-L(3,1)", hopf_chain_lens_check},
  };
  return checks;
}

std::vector<CheckOutcome> run_reference_checks(LensConvention convention) {
  std::vector<CheckOutcome> out;
  for (const auto& check : reference_checks()) {
    CheckOutcome o{check.name, false, ""};
    try {
      auto failure = check.run(convention);
      o.passed = !failure;
      if (failure) o.detail = *failure;
    } catch (const std::exception& e) {
      o.detail = std::string("error: ") + e.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace dehn
