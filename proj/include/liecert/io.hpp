#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "liecert/certificate.hpp"
#include "liecert/errors.hpp"
#include "liecert/forms.hpp"
#include "liecert/lie_algebra.hpp"
#include "liecert/quantum_torus.hpp"

namespace liecert {

enum class InputErrorKind { io, syntax, format, index, axiom };

const char* to_string(InputErrorKind k);

/// A problem with a user-supplied file, located by a JSON pointer (or by
/// line/column for syntax errors).
class InputError : public Error {
 public:
  InputError(InputErrorKind kind, std::string location, const std::string& message);

  InputErrorKind kind() const { return kind_; }
  const std::string& location() const { return location_; }
  /// Violating basis triple for axiom errors.
  std::optional<std::array<std::size_t, 3>> triple;

 private:
  InputErrorKind kind_;
  std::string location_;
};

struct ParsedAlgebra {
  LieAlgebra algebra;
  std::optional<BilinearForm> form;
};

// Algebra file layout (indices are 0-based, coefficients are exact strings):
//
//   {
//     "field": {"kind": "rational"} | {"kind": "prime", "p": 5},
//     "dim": 3,
//     "basis": ["e", "f", "h"],
//     "table": [ {"i": 0, "j": 1, "coeffs": [[2, "1"]]}, ... ],   // i < j
//     "form": [["0", "4", "0"], ...]                               // optional
//   }
//
// Pairs missing from "table" bracket to zero.

nlohmann::json field_to_json(const Field& f);
Field field_from_json(const nlohmann::json& j, const std::string& location = "/field");

nlohmann::json vec_to_json(std::span<const Scalar> v);
nlohmann::json mat_to_json(const Mat& m);
nlohmann::json int_vec_to_json(std::span<const mpz_class> v);

/// check_axioms = false skips the Jacobi check (used by `validate`).
ParsedAlgebra parse_algebra_json(const nlohmann::json& j, bool check_axioms = true);
ParsedAlgebra parse_algebra_text(std::string_view text, bool check_axioms = true);
ParsedAlgebra parse_algebra_file(const std::filesystem::path& path, bool check_axioms = true);

nlohmann::json algebra_to_json(const LieAlgebra& l, const BilinearForm* form = nullptr);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

/// {"n": 2, "N": 5, "E": [0, 1, 4, 0]} with E row-major.
ExponentTorus parse_torus_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& c);

/// Reads a whole file; throws InputError(io) on failure.
std::string read_file(const std::filesystem::path& path);

/// "fnv1a64:" followed by 16 hex digits.
std::string content_digest(std::string_view bytes);

}  // namespace liecert
