#include "dehn/enumeration.hpp"

#include <algorithm>
#include <future>

#include "dehn/homology.hpp"

namespace dehn {

namespace {

std::vector<long> nonzero_range(long bound) {
  std::vector<long> out;
  for (long v = -bound; v <= bound; ++v)
    if (v != 0) out.push_back(v);
  return out;
}

bool has_unit_order(const FramedLink& link) {
  auto order = h1_order(link);
  return order && *order == 1;
}

std::vector<PairSolution> pair_solutions_for(long l, long bound_q) {
  std::vector<PairSolution> out;
  IntMatrix m(2, 2);
  m(0, 1) = m(1, 0) = l;
  for (long q1 : nonzero_range(bound_q))
    for (long q2 : nonzero_range(bound_q))
      if (has_unit_order(FramedLink(m, {Slope(1, q1), Slope(1, q2)}))) out.push_back({l, q1, q2});
  return out;
}

}  // namespace

PairSolutionSet enumerate_pair_solutions(long bound_l, long bound_q) {
  if (bound_l < 0 || bound_q < 1) throw Error("enumeration bounds must be positive");
  std::vector<std::future<std::vector<PairSolution>>> jobs;
  for (long l = -bound_l; l <= bound_l; ++l)
    jobs.push_back(std::async(std::launch::async, pair_solutions_for, l, bound_q));
  PairSolutionSet set;
  for (auto& job : jobs)
    for (auto& s : job.get()) (s.linking == 0 ? set.unlinked : set.exceptional).push_back(std::move(s));
  std::sort(set.unlinked.begin(), set.unlinked.end());
  std::sort(set.exceptional.begin(), set.exceptional.end());
  return set;
}

std::vector<TripleObstruction> enumerate_triple_obstructions(long bound_q) {
  if (bound_q < 2) throw Error("triple enumeration needs bound_q >= 2");
  const auto qs = nonzero_range(bound_q);
  auto for_leading = [&](long l12) {
    std::vector<TripleObstruction> out;
    for (long l13 = -1; l13 <= 1; ++l13)
      for (long l23 = -1; l23 <= 1; ++l23) {
        if (l12 == 0 && l13 == 0 && l23 == 0) continue;
        IntMatrix m(3, 3);
        m(0, 1) = m(1, 0) = l12;
        m(0, 2) = m(2, 0) = l13;
        m(1, 2) = m(2, 1) = l23;
        for (long q1 : qs)
          for (long q2 : qs)
            for (long q3 : qs) {
              std::array<Slope, 3> s{Slope(1, q1), Slope(1, q2), Slope(1, q3)};
              if (check_pair_classification(l12, s[0], s[1]).verdict != Verdict::kPass ||
                  check_pair_classification(l13, s[0], s[2]).verdict != Verdict::kPass ||
                  check_pair_classification(l23, s[1], s[2]).verdict != Verdict::kPass)
                continue;
              auto order = h1_order(FramedLink(m, {s[0], s[1], s[2]}));
              if (order && *order == 1) continue;
              out.push_back({{Integer(l12), Integer(l13), Integer(l23)}, s, order});
            }
      }
    return out;
  };
  std::vector<std::future<std::vector<TripleObstruction>>> jobs;
  for (long l12 = -1; l12 <= 1; ++l12) jobs.push_back(std::async(std::launch::async, for_leading, l12));
  std::vector<TripleObstruction> all;
  for (auto& job : jobs)
    for (auto& t : job.get()) all.push_back(std::move(t));
  // Slopes 1/q are ordered by q, matching the enumeration order within a pattern.
  std::sort(all.begin(), all.end(), [](const TripleObstruction& a, const TripleObstruction& b) {
    auto key = [](const TripleObstruction& t) {
      auto q = [](const Slope& s) -> Integer { return s.den() * s.num(); };
      return std::tuple(t.linking[0], t.linking[1], t.linking[2], q(t.slopes[0]), q(t.slopes[1]), q(t.slopes[2]));
    };
    return key(a) < key(b);
  });
  return all;
}

IntMatrix split_hopf_linking(const SplitHopfStructure& structure) {
  IntMatrix m(structure.size(), structure.size());
  for (const auto& [a, b] : structure.pairs()) m(a, b) = m(b, a) = 1;
  return m;
}

HopfBrunnianStream::HopfBrunnianStream(SplitHopfStructure structure, long bound_k)
    : structure_(std::move(structure)) {
  if (bound_k < 1) throw Error("bound_k must be at least 1");
  const Slope one(1), half(1, 2), mone(-1), mhalf(-1, 2);
  for (const auto& [a, b] : structure_.pairs())
    units_.push_back({{a, b}, {{one, half}, {half, one}, {mone, mhalf}, {mhalf, mone}}});
  std::vector<std::vector<Slope>> singleton_options;
  for (long k : nonzero_range(bound_k)) singleton_options.push_back({Slope(1, k)});
  for (auto s : structure_.singletons()) units_.push_back({{s}, singleton_options});
  std::sort(units_.begin(), units_.end(),
            [](const Unit& x, const Unit& y) { return x.components.front() < y.components.front(); });
  cursor_.assign(units_.size(), 0);
  done_ = structure_.size() == 0;
}

std::size_t HopfBrunnianStream::count() const {
  if (structure_.size() == 0) return 0;
  std::size_t total = 1;
  for (const auto& u : units_) total *= u.options.size();
  return total;
}

std::optional<std::vector<Slope>> HopfBrunnianStream::next() {
  if (done_) return std::nullopt;
  std::vector<Slope> slopes(structure_.size(), Slope::infinity());
  for (std::size_t u = 0; u < units_.size(); ++u) {
    const auto& chosen = units_[u].options[cursor_[u]];
    for (std::size_t k = 0; k < chosen.size(); ++k) slopes[units_[u].components[k]] = chosen[k];
  }
  std::size_t u = units_.size();
  while (u > 0) {
    --u;
    if (++cursor_[u] < units_[u].options.size()) break;
    cursor_[u] = 0;
    if (u == 0) done_ = true;
  }
  return slopes;
}

HopfBrunnianStream enumerate_hopf_brunnian_slopes(std::size_t n,
                                                  std::vector<std::pair<std::size_t, std::size_t>> pairs,
                                                  long bound_k) {
  return HopfBrunnianStream(SplitHopfStructure(n, std::move(pairs)), bound_k);
}

namespace {

std::string order_string(const std::optional<Integer>& order) { return order ? order->get_str() : "infinite"; }

nlohmann::json order_json(const std::optional<Integer>& order) {
  if (!order) return "infinite";
  return nlohmann::json::parse(order->get_str());
}

}  // namespace

std::string pair_solutions_csv(const PairSolutionSet& set) {
  std::string out = "family,linking,q1,q2\n";
  auto emit = [&](const char* family, const std::vector<PairSolution>& rows) {
    for (const auto& r : rows)
      out += std::string(family) + "," + r.linking.get_str() + "," + r.q1.get_str() + "," + r.q2.get_str() + "\n";
  };
  emit("unlinked", set.unlinked);
  emit("exceptional", set.exceptional);
  return out;
}

std::string pair_solutions_jsonl(const PairSolutionSet& set) {
  std::string out;
  auto emit = [&](const char* family, const std::vector<PairSolution>& rows) {
    for (const auto& r : rows) {
      nlohmann::json j = {{"family", family},
                          {"linking", r.linking.get_si()},
                          {"q1", r.q1.get_si()},
                          {"q2", r.q2.get_si()}};
      out += j.dump() + "\n";
    }
  };
  emit("unlinked", set.unlinked);
  emit("exceptional", set.exceptional);
  return out;
}

std::string triple_obstructions_csv(const std::vector<TripleObstruction>& rows) {
  std::string out = "l12,l13,l23,s1,s2,s3,order\n";
  for (const auto& r : rows) {
    out += r.linking[0].get_str() + "," + r.linking[1].get_str() + "," + r.linking[2].get_str();
    for (const auto& s : r.slopes) out += "," + s.to_string();
    out += "," + order_string(r.order) + "\n";
  }
  return out;
}

std::string triple_obstructions_jsonl(const std::vector<TripleObstruction>& rows) {
  std::string out;
  for (const auto& r : rows) {
    nlohmann::json j = {{"linking", {r.linking[0].get_si(), r.linking[1].get_si(), r.linking[2].get_si()}},
                        {"slopes", {r.slopes[0].to_string(), r.slopes[1].to_string(), r.slopes[2].to_string()}},
                        {"order", order_json(r.order)}};
    out += j.dump() + "\n";
  }
  return out;
}

std::string multi_slope_csv_header(std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += (i ? ",s" : "s") + std::to_string(i + 1);
  return out + "\n";
}

std::string multi_slope_csv_row(const std::vector<Slope>& slopes) {
  std::string out;
  for (std::size_t i = 0; i < slopes.size(); ++i) out += (i ? "," : "") + slopes[i].to_string();
  return out + "\n";
}

std::string multi_slope_jsonl_row(const std::vector<Slope>& slopes) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : slopes) arr.push_back(s.to_string());
  return nlohmann::json{{"slopes", arr}}.dump() + "\n";
}

}  // namespace dehn
