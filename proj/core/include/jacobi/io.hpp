#pragma once

// File formats and run configuration.
//
// Every file is a JSON object with a "schema" field:
//
//   jacobi-field/v1        p, n, q, modulus, generator[, addition, multiplication]
//   jacobi-table/v1        factors, conductor, entries (exact, "p/q" strings)
//   jacobi-table-approx/v1 factors, conductor, entries ([re, im] pairs)
//   jacobi-verify/v1       verification report
//   jacobi-reconstruct/v1  reconstruction report
//   jacobi-enumerate/v1    enumeration summary
//
// Table rows and columns follow the group's index order (lexicographic over
// coordinate vectors). Output is deterministic: the same input gives
// byte-identical files.

#include <filesystem>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "jacobi/enumerator.hpp"
#include "jacobi/finite_field.hpp"
#include "jacobi/jacobi_table.hpp"
#include "jacobi/reconstructor.hpp"
#include "jacobi/verifier.hpp"

namespace jacobi {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFieldSchema = "jacobi-field/v1";
inline constexpr const char* kTableSchema = "jacobi-table/v1";
inline constexpr const char* kApproxTableSchema = "jacobi-table-approx/v1";
inline constexpr const char* kVerifySchema = "jacobi-verify/v1";
inline constexpr const char* kReconstructSchema = "jacobi-reconstruct/v1";
inline constexpr const char* kEnumerateSchema = "jacobi-enumerate/v1";

/// Field tables are embedded in field files up to this order.
inline constexpr unsigned kFieldTablesMaxOrder = 64;

struct RunConfig {
  VerifyConfig verify;
  unsigned max_field_order = FiniteField::kDefaultMaxOrder;
  /// Largest group order accepted by verify and reconstruct.
  std::size_t max_table_order = 64;
  std::size_t max_enumerate_order = 7;
  unsigned threads = 0;

  /// Throws DomainError unless thresholds are ordered and tolerance > 0.
  void validate() const;
};

Json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j);
/// "2,4" -> {2, 4}.
GroupSpec parse_group(const std::string& text);

Json element_to_json(const GroupSpec& g, std::size_t index);

Json cyclotomic_to_json(const Cyclotomic& z);
Cyclotomic cyclotomic_from_json(unsigned m, const Json& j);

Json field_to_json(const FiniteField& f, bool with_tables);
/// Rebuilds the field from p and n and checks the stored modulus and
/// generator against it.
FiniteField field_from_json(const Json& j, unsigned max_order = FiniteField::kDefaultMaxOrder);

Json table_to_json(const JacobiTable& t);
Json table_to_json(const ApproxTable& t);
using AnyTable = std::variant<JacobiTable, ApproxTable>;
AnyTable table_from_json(const Json& j);

Json verification_to_json(const GroupSpec& g, const VerificationReport& r);
Json reconstruction_to_json(const ReconstructionReport& r);
Json enumeration_to_json(const EnumerationResult& r, bool list_tables);

/// Compact JSON plus a trailing newline.
std::string dump(const Json& j);
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace jacobi
