#include "fveg/field_io.hpp"

#include <cstdio>
#include <fstream>

#include "fveg/version.hpp"

namespace fveg {

namespace {

std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(const CellField& field, const Grid& grid, std::ofstream& out,
               const Provenance& provenance) {
    out << "# " << version_string << "\n";
    for (const auto& [k, v] : provenance) out << "# " << k << " = " << v << "\n";
    out << "x,y";
    for (int c = 0; c < field.ncomp(); ++c) out << ",comp" << c;
    out << "\n";
    for (int j = 0; j < grid.ny(); ++j)
        for (int i = 0; i < grid.nx(); ++i) {
            out << g17(grid.cell_center_x(i)) << ',' << g17(grid.cell_center_y(j));
            const int cell = grid.cell_index(i, j);
            for (int c = 0; c < field.ncomp(); ++c) out << ',' << g17(field.at(cell, c));
            out << "\n";
        }
}

void write_vtk(const CellField& field, const Grid& grid, std::ofstream& out,
               const Provenance& provenance) {
    std::string title = version_string;
    for (const auto& [k, v] : provenance) {
        const std::string piece = " " + k + "=" + v;
        if (title.size() + piece.size() > 250) break; // legacy title line limit
        title += piece;
    }
    out << "# vtk DataFile Version 3.0\n";
    out << title << "\n";
    out << "ASCII\n";
    out << "DATASET STRUCTURED_POINTS\n";
    out << "DIMENSIONS " << grid.nx() << " " << grid.ny() << " 1\n";
    out << "ORIGIN " << g17(grid.cell_center_x(0)) << " " << g17(grid.cell_center_y(0)) << " 0\n";
    out << "SPACING " << g17(grid.h()) << " " << g17(grid.h()) << " 1\n";
    out << "POINT_DATA " << grid.cell_count() << "\n";
    for (int c = 0; c < field.ncomp(); ++c) {
        out << "SCALARS comp" << c << " double 1\n";
        out << "LOOKUP_TABLE default\n";
        for (int j = 0; j < grid.ny(); ++j)
            for (int i = 0; i < grid.nx(); ++i) out << g17(field.at(grid.cell_index(i, j), c)) << "\n";
    }
}

} // namespace

void write_field(const CellField& field, const Grid& grid, const std::string& path,
                 FieldFormat format, const Provenance& provenance) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    if (format == FieldFormat::Csv)
        write_csv(field, grid, out, provenance);
    else
        write_vtk(field, grid, out, provenance);
    if (!out) throw IoError("write failed for " + path);
}

} // namespace fveg
