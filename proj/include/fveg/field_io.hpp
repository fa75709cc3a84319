#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fveg/grid.hpp"

namespace fveg {

enum class FieldFormat { Csv, VtkStructured };

using Provenance = std::vector<std::pair<std::string, std::string>>;

// Writes the field at cell centers, row-major (x fastest), 17 significant
// digits. CSV: '#'-prefixed provenance lines, then header `x,y,comp0,...`.
// VTK: legacy structured-points ASCII with one scalar field per component and
// the provenance packed into the title line.
void write_field(const CellField& field, const Grid& grid, const std::string& path,
                 FieldFormat format, const Provenance& provenance = {});

} // namespace fveg
