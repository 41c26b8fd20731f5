#pragma once

#include <filesystem>
#include <string>

#include "dehn/framed_link.hpp"
#include "json.hpp"

namespace dehn {

/// A framed link read from a JSON link spec:
///
///   {"labels": ["a","b"], "linking": [[0,1],[1,0]], "slopes": ["1","1/2"]}
///
/// "linking" may be replaced by "diagram": "<file>.pd", a signed PD code file
/// resolved relative to the spec's directory.  The optional boolean
/// "target_homology_sphere" records that the surgered manifold is assumed to be
/// an integer homology sphere.
struct LinkSpec {
  FramedLink link;
  bool target_homology_sphere = false;
};

LinkSpec link_spec_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
LinkSpec read_link_spec(const std::filesystem::path& path);
nlohmann::json to_json(const FramedLink& link);

/// Directory holding the shipped example links; SURGERY_CORPUS_DIR overrides it.
std::filesystem::path corpus_dir();

/// `name` itself when it exists, otherwise the same name inside corpus_dir(),
/// then with `extension` appended when the name has none.
std::filesystem::path resolve_input(const std::string& name, const std::string& extension = "");

std::string read_text_file(const std::filesystem::path& path);

}  // namespace dehn
