#ifndef PACIOLI_MODEL_IO_HPP
#define PACIOLI_MODEL_IO_HPP

#include <string>

#include "pacioli/polyhedron.hpp"

namespace pacioli {

enum class ModelFormat { Off, Obj };

// Deterministic text export. Coordinates are interval midpoints at 128 bits
// printed with at most `digits` significant decimal digits, trailing zeros
// trimmed. OFF carries the true edge count. Throws std::invalid_argument for
// digits outside [6, 40].
std::string export_model(const Polyhedron& mesh, ModelFormat format, int digits = 17);

// Parses OFF text (comments and blank lines allowed). Coordinates become
// exact dyadic leaves of the Real layer. Declared edge counts of 0 are
// tolerated (common convention); other mismatches are errors.
// Throws MalformedHeader, CountMismatch, IndexOutOfRange.
Polyhedron parse_off(const std::string& bytes);

}  // namespace pacioli

#endif
