#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "semisym/field.hpp"
#include "semisym/group.hpp"

namespace semisym {

enum class StandardKind { Symmetric, Alternating, Cyclic, Dihedral };

// Dihedral uses n as the polygon size, so the order is 2n.
GeneratedGroup make_standard(StandardKind kind, std::size_t n);

enum class FormKind { None, Hermitian };

struct MatrixGroupSpec {
  std::size_t dimension = 2;
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  std::vector<Matrix> generators;
  FormKind form = FormKind::None;
  Matrix form_matrix;  // Gram matrix of the Hermitian form, when present
  // Extra generators x -> x^(p^j) applied to coordinates.
  std::vector<std::uint32_t> field_automorphisms;
};

// Row vectors, v -> vM, on projective points (isotropic ones for a Hermitian
// form). Point order: normalized vectors in increasing coordinate code.
GeneratedGroup projective_action(const MatrixGroupSpec& spec);

GeneratedGroup psl2(std::uint32_t q);
GeneratedGroup pgl2(std::uint32_t q);
GeneratedGroup psigmal2(std::uint32_t q);
GeneratedGroup pgammal2(std::uint32_t q);
GeneratedGroup psl3(std::uint32_t p);
// PSL3(p) extended by the inverse-transpose graph automorphism, acting on
// points followed by lines.
GeneratedGroup psl3_graph_extension(std::uint32_t p);
GeneratedGroup psu3(std::uint32_t p);
// PSU3(p) extended by the field automorphism of GF(p^2).
GeneratedGroup psu3_field_extension(std::uint32_t p);

GeneratedGroup wreath_product(const GeneratedGroup& base, const GeneratedGroup& top);
// Translations plus the given linear maps on GF(p)^n, p prime.
GeneratedGroup affine_group(std::uint32_t p, std::size_t n, const std::vector<std::vector<std::int64_t>>& linear);
GeneratedGroup direct_product(const GeneratedGroup& a, const GeneratedGroup& b);

// "M12", "Aut(M12)", "G2(2)", "PGL2(9)", "M10", "PGammaL2(9)", "Sym(6)" (as
// PSigmaL2(9) on 10 points). "Aut(G2(3))" is recognized but not built.
GeneratedGroup literature_group(const std::string& name);
std::vector<std::string> literature_names();

// JSON group file.
nlohmann::json group_to_json(const GeneratedGroup& g, const nlohmann::json& extra_metadata = nlohmann::json::object());
GeneratedGroup group_from_json(const nlohmann::json& j);
void write_text_atomic(const std::string& path, const std::string& content);
// Throws std::invalid_argument when the file cannot be opened.
std::string read_text(const std::string& path);

}  // namespace semisym
