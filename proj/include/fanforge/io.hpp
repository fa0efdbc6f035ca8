#ifndef FANFORGE_IO_HPP
#define FANFORGE_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "fanforge/matroid.hpp"
#include "fanforge/repr.hpp"

namespace fanforge {

/// Contents of a ".mtx" matroid file: a named matroid given either by
/// its basis list or by a GF(p) representation block.
struct MtxFile {
  std::string name;
  Matroid matroid;
  std::optional<ReprMatroid> repr;
};

/// Parses the text of a ".mtx" file. Basis-form inputs are validated
/// against the matroid axioms. Column digits are little-endian: the
/// first digit is row 0 of the column vector.
MtxFile parse_mtx(const std::string& text);
MtxFile read_mtx_file(const std::string& path);

std::string write_mtx(const std::string& name, const Matroid& m);
std::string write_mtx(const std::string& name, const ReprMatroid& r);

/// ".fans" file: `fan <e1> ... <ek>` lines plus an optional
/// `target <matroid-name>` line.
struct FansFile {
  std::vector<std::vector<std::string>> fans;
  std::string target;
};

FansFile parse_fans(const std::string& text);
FansFile read_fans_file(const std::string& path);
std::string write_fans(const FansFile& f);

/// ".graft" file: `vertices <n>`, `edge <u> <v> <label>` lines, and a
/// `gamma <v> ...` line.
Graft parse_graft(const std::string& text);
Graft read_graft_file(const std::string& path);

/// ".bp" blueprint file: `core <matroid-file>` (path resolved against
/// the blueprint's directory), `triangle <i> <a> <b> <c>`,
/// `rank <i> <r>`, `delete <e> ...`.
struct BlueprintFile {
  std::string core_path;
  std::vector<std::array<std::string, 3>> triangles;  // by index order
  std::vector<int> ranks;
  std::vector<std::string> remove;
};

BlueprintFile parse_bp(const std::string& text);
BlueprintFile read_bp_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace fanforge

#endif  // FANFORGE_IO_HPP
