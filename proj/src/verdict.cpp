#include "grouplang/verdict.hpp"

namespace grouplang {

std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::SimplePath:
      return "simple_path_violation";
    case ViolationKind::Conjugate:
      return "conjugate_violation";
    case ViolationKind::DistinctLabels:
      return "distinct_labels_violation";
    case ViolationKind::LiteralTriple:
      return "literal_triple_violation";
  }
  return "unknown";
}

std::string describe(const InclusionVerdict& v) {
  if (const auto* h = std::get_if<Holds>(&v)) {
    return h->empty_language ? "holds (empty language)" : "holds";
  }
  if (const auto* f = std::get_if<Fails>(&v)) {
    std::string out = "fails (";
    switch (f->reason) {
      case ViolationKind::SimplePath:
        out += "accepting walk with non-trivial label";
        break;
      case ViolationKind::Conjugate:
        out += "conjugate violation at vertex " + std::to_string(f->vertex);
        break;
      case ViolationKind::DistinctLabels:
        out += "two distinct labels in cell (" + std::to_string(f->cell->row) + ", " +
               std::to_string(f->cell->col) + ")";
        break;
      case ViolationKind::LiteralTriple:
        out += "literal triple violation at vertex " + std::to_string(f->vertex) + ", no witness word";
        break;
    }
    return out + ")";
  }
  const auto& r = std::get<ResourceExceeded>(v);
  return "resource exceeded (cell (" + std::to_string(r.cell.row) + ", " + std::to_string(r.cell.col) +
         ") reached " + std::to_string(r.cardinality) + " elements)";
}

}  // namespace grouplang
