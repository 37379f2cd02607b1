#pragma once

#include "symsum/sum.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace symsum {

/// Parse failure with the offending line.
struct DescriptorError : std::runtime_error {
    DescriptorError(const std::string& file, int line, const std::string& msg)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + msg), line_no(line) {}
    int line_no;
};

struct ParsedManifold {
    ManifoldModel model;
    std::vector<SurfaceInModel> surfaces;

    const SurfaceInModel& surface(const std::string& name) const;
};

/// Line-oriented manifold descriptor.  Keys:
///   kind rational|ruled_trivial|ruled_twisted|s2xs2|general
///   n, h                      blowups / base genus for the built-in kinds
///   name                      optional display name
///   labels L1 .. Lr           general: basis labels; built-ins: must match
///                             the canonical labels if given
///   gram r11 .. r1r ; r21 ..  general: rows of the pairing matrix
///   K c1 .. cr                general: canonical class coefficients
///   b1, bplus                 general: first Betti number, b+
///   omega c1 .. cr            general: reference symplectic class
///   minimal, aspherical true|false      general flags
///   minimal_model rational|ruled|neither
///   full_lattice true|false   general: lattice spans all of H2 (default true)
///   chern c1sq c2             general: asserted Chern pair
///   exceptional c1 .. cr      general: one asserted exceptional class (repeatable;
///                             their presence asserts the list is complete)
///   surface NAME GENUS c1 .. cr          named surface (repeatable)
/// Coefficient vectors follow the basis order of the labels; no reordering.
ParsedManifold parse_manifold_file(const std::filesystem::path& path);

struct ParsedSum {
    SumDescriptor sum;
    std::filesystem::path file1, file2;
    std::string surface1, surface2;
};

/// Sum descriptor: two lines
///   side1 MANIFOLD_FILE SURFACE_NAME
///   side2 MANIFOLD_FILE SURFACE_NAME
/// with paths resolved relative to the descriptor's directory.
ParsedSum parse_sum_file(const std::filesystem::path& path);

} // namespace symsum
