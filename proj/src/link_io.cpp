#include "dehn/link_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dehn/diagram.hpp"

namespace dehn {

namespace {

Integer json_integer(const nlohmann::json& v) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()), 10);
  if (v.is_string()) {
    try {
      return Integer(v.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
    }
  }
  throw Error("linking entries must be integers, got " + v.dump());
}

}  // namespace

LinkSpec link_spec_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw Error("link spec must be a JSON object");
  if (!j.contains("slopes") || !j["slopes"].is_array()) throw Error("link spec needs a \"slopes\" array");

  std::vector<Slope> slopes;
  for (const auto& s : j["slopes"]) {
    if (s.is_string()) slopes.push_back(Slope::parse(s.get<std::string>()));
    else if (s.is_number_integer()) slopes.emplace_back(Integer(std::to_string(s.get<long long>()), 10));
    else throw Error("slopes must be strings like \"1/2\", \"3\" or \"inf\"");
  }

  std::vector<std::string> labels;
  IntMatrix lk;
  if (j.contains("linking")) {
    const auto& rows = j["linking"];
    if (!rows.is_array()) throw Error("\"linking\" must be an array of rows");
    lk = IntMatrix(rows.size(), rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!rows[r].is_array() || rows[r].size() != rows.size()) throw Error("\"linking\" must be square");
      for (std::size_t c = 0; c < rows.size(); ++c) lk(r, c) = json_integer(rows[r][c]);
    }
  } else if (j.contains("diagram")) {
    auto path = base_dir / j["diagram"].get<std::string>();
    Diagram d = parse_pd(read_text_file(path));
    lk = linking_matrix(d);
    labels = d.components;
  } else {
    throw Error("link spec needs \"linking\" or \"diagram\"");
  }

  if (j.contains("labels")) {
    labels.clear();
    for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
  }

  LinkSpec spec{FramedLink(std::move(lk), std::move(slopes), std::move(labels))};
  if (j.contains("target_homology_sphere")) spec.target_homology_sphere = j["target_homology_sphere"].get<bool>();
  return spec;
}

LinkSpec read_link_spec(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(path.string() + ": " + e.what());
  }
  return link_spec_from_json(j, path.parent_path());
}

nlohmann::json to_json(const FramedLink& link) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < link.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < link.size(); ++k) {
      const Integer& v = link.linking(i, k);
      if (v.fits_slong_p()) row.push_back(v.get_si());
      else row.push_back(v.get_str());
    }
    rows.push_back(row);
  }
  nlohmann::json slopes = nlohmann::json::array();
  for (const auto& s : link.slopes()) slopes.push_back(s.to_string());
  return {{"labels", link.labels()}, {"linking", rows}, {"slopes", slopes}};
}

std::filesystem::path corpus_dir() {
  if (const char* env = std::getenv("SURGERY_CORPUS_DIR"); env && *env) return env;
  return DEHN_DEFAULT_CORPUS_DIR;
}

std::filesystem::path resolve_input(const std::string& name, const std::string& extension) {
  std::filesystem::path p(name);
  if (std::filesystem::exists(p)) return p;
  auto in_corpus = corpus_dir() / p;
  if (std::filesystem::exists(in_corpus)) return in_corpus;
  if (!extension.empty() && !p.has_extension()) {
    in_corpus += extension;
    if (std::filesystem::exists(in_corpus)) return in_corpus;
  }
  throw Error("no such file: " + name);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace dehn
