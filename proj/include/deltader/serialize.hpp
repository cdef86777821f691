#pragma once

// JSON interchange. Scalars are exact strings ("3", "-7/4"); quotient-ring
// elements are arrays of base coefficients, lowest degree first. Output is
// canonical: sorted keys, two-space indentation, trailing newline.

#include <string>

#include <json.hpp>

#include "deltader/algebra.hpp"
#include "deltader/solver.hpp"

namespace deltader {

using json = nlohmann::json;

std::string canonical_dump(const json& j);

json field_to_json(const Field& f);
Field field_from_json(const json& j);

json element_to_json(const FieldElement& x);
FieldElement element_from_json(const Field& f, const json& j);

json map_to_json(const LinearMap& m);
LinearMap map_from_json(const Field& f, const json& j);

json algebra_to_json(const Algebra& alg);
/// Parses the structure; laws are not checked here (see load_algebra).
Algebra algebra_from_json(const json& j);

json solution_to_json(const SolutionSpace& s);
/// Reads maps from a solution file or a bare list of matrices.
std::vector<LinearMap> maps_from_json(const Field& f, const json& j);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Reads an algebra file and checks its law (and form, if present);
/// violations raise InputError.
Algebra load_algebra(const std::string& path);

/// Fixture directory: $DELTA_DER_FIXTURES if set, else the build-time default.
std::string fixtures_dir();
Algebra load_fixture(const std::string& name);

}  // namespace deltader
