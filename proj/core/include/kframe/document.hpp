#ifndef KFRAME_DOCUMENT_HPP
#define KFRAME_DOCUMENT_HPP

#include <map>
#include <string>
#include <vector>

#include "kframe/frame.hpp"
#include "kframe/matrix.hpp"
#include "kframe/space.hpp"

namespace kframe {

/// On-disk description of spaces, families, operators and spectrum/norm
/// specs. Complex numbers are 2-element [re, im] arrays; everything round
/// trips bit-exactly through emit/parse.
struct Document {
  struct FamilyEntry {
    std::string space;
    Matrix synthesis;  // column n = vector n
  };
  struct OperatorEntry {
    std::string space;  // may be empty when the operator is free-standing
    Matrix matrix;
  };
  struct SpecEntry {
    std::vector<double> eigenvalues;  // exactly one of the two is non-empty
    std::vector<double> norms;
  };

  std::string version = "1";
  std::map<std::string, PontryaginSpace> spaces;
  std::map<std::string, FamilyEntry> families;
  std::map<std::string, OperatorEntry> operators;
  std::map<std::string, SpecEntry> specs;

  /// Resolves a family against its declared space; throws DocumentError.
  VectorFamily family(const std::string& name) const;
  const PontryaginSpace& space(const std::string& name) const;
  const OperatorEntry& op(const std::string& name) const;
  const SpecEntry& spec(const std::string& name) const;
};

Document parse_document(const std::string& text);
std::string emit_document(const Document& doc);

// JSON fragments shared with the CLI output paths
std::string emit_matrix_json(const Matrix& m);

}  // namespace kframe

#endif
