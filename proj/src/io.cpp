#include "fanforge/io.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace fanforge {

namespace {

// Lines tokenized on whitespace; '#' starts a comment.
std::vector<std::vector<std::string>> tokenize(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw input_error(std::string("expected an integer for ") + what +
                      ", got '" + s + "'");
  }
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write file: " + path);
  out << text;
}

MtxFile parse_mtx(const std::string& text) {
  auto lines = tokenize(text);
  std::size_t i = 0;
  if (i >= lines.size() || lines[i][0] != "matroid" || lines[i].size() != 2)
    throw input_error("mtx: expected 'matroid <name>' on the first line");
  MtxFile out;
  out.name = lines[i++][1];
  if (i >= lines.size() || lines[i][0] != "elements")
    throw input_error("mtx: expected 'elements <e1> ...'");
  std::vector<std::string> labels(lines[i].begin() + 1, lines[i].end());
  ++i;
  if (i >= lines.size() || lines[i][0] != "rank" || lines[i].size() != 2)
    throw input_error("mtx: expected 'rank <r>'");
  int rank = parse_int(lines[i][1], "rank");
  ++i;
  if (i < lines.size() && lines[i][0] == "repr") {
    // repr GF(<p>) rows <r>
    if (lines[i].size() != 4 || lines[i][2] != "rows")
      throw input_error("mtx: expected 'repr GF(<p>) rows <r>'");
    const std::string& gf = lines[i][1];
    if (gf.size() < 5 || gf.substr(0, 3) != "GF(" || gf.back() != ')')
      throw input_error("mtx: malformed field '" + gf + "'");
    int p = parse_int(gf.substr(3, gf.size() - 4), "field order");
    int rows = parse_int(lines[i][3], "rows");
    ++i;
    std::vector<Vec> cols(labels.size());
    std::vector<bool> seen(labels.size(), false);
    for (; i < lines.size(); ++i) {
      if (lines[i][0] != "col" || lines[i].size() != 3)
        throw input_error("mtx: expected 'col <e> <digits>'");
      auto it = std::find(labels.begin(), labels.end(), lines[i][1]);
      if (it == labels.end())
        throw input_error("mtx: col for unknown element " + lines[i][1]);
      std::size_t idx = it - labels.begin();
      if (seen[idx]) throw input_error("mtx: duplicate col " + lines[i][1]);
      seen[idx] = true;
      const std::string& digits = lines[i][2];
      if (static_cast<int>(digits.size()) != rows)
        throw input_error("mtx: column has wrong height: " + lines[i][1]);
      Vec v(rows);
      for (int d = 0; d < rows; ++d) {
        if (digits[d] < '0' || digits[d] > '9')
          throw input_error("mtx: bad digit in column " + lines[i][1]);
        v[d] = static_cast<std::uint8_t>(digits[d] - '0');
      }
      cols[idx] = std::move(v);
    }
    for (bool s : seen)
      if (!s) throw input_error("mtx: missing column for an element");
    out.repr = ReprMatroid(PrimeField(p), rows, labels, cols);
    out.matroid = out.repr->to_matroid();
  } else {
    std::vector<Subset> bases;
    for (; i < lines.size(); ++i) {
      if (lines[i][0] != "basis")
        throw input_error("mtx: expected 'basis <e> ...' lines");
      Subset b = 0;
      for (std::size_t j = 1; j < lines[i].size(); ++j) {
        auto it = std::find(labels.begin(), labels.end(), lines[i][j]);
        if (it == labels.end())
          throw input_error("mtx: basis mentions unknown element " +
                            lines[i][j]);
        b |= bit(static_cast<int>(it - labels.begin()));
      }
      bases.push_back(b);
    }
    out.matroid = Matroid::from_bases(labels, bases);
  }
  if (out.matroid.rank() != rank)
    throw input_error("mtx: declared rank disagrees with the bases");
  return out;
}

MtxFile read_mtx_file(const std::string& path) {
  return parse_mtx(read_text_file(path));
}

std::string write_mtx(const std::string& name, const Matroid& m) {
  std::ostringstream out;
  out << "matroid " << name << "\n";
  out << "elements";
  for (const auto& l : m.labels()) out << ' ' << l;
  out << "\nrank " << m.rank() << "\n";
  for (Subset b : m.bases()) {
    out << "basis";
    for (int e : set_elements(b)) out << ' ' << m.label(e);
    out << "\n";
  }
  return out.str();
}

std::string write_mtx(const std::string& name, const ReprMatroid& r) {
  std::ostringstream out;
  out << "matroid " << name << "\n";
  out << "elements";
  for (const auto& l : r.labels()) out << ' ' << l;
  out << "\nrank " << r.rank() << "\n";
  out << "repr GF(" << r.field().p() << ") rows " << r.rows() << "\n";
  for (int j = 0; j < r.size(); ++j) {
    out << "col " << r.label(j) << ' ';
    for (int i = 0; i < r.rows(); ++i)
      out << static_cast<char>('0' + r.column(j)[i]);
    out << "\n";
  }
  return out.str();
}

FansFile parse_fans(const std::string& text) {
  FansFile out;
  for (const auto& toks : tokenize(text)) {
    if (toks[0] == "fan") {
      if (toks.size() < 4)
        throw input_error("fans: a fan needs at least three elements");
      out.fans.emplace_back(toks.begin() + 1, toks.end());
    } else if (toks[0] == "target" && toks.size() == 2) {
      out.target = toks[1];
    } else {
      throw input_error("fans: unexpected line starting with '" + toks[0] +
                        "'");
    }
  }
  return out;
}

FansFile read_fans_file(const std::string& path) {
  return parse_fans(read_text_file(path));
}

std::string write_fans(const FansFile& f) {
  std::ostringstream out;
  if (!f.target.empty()) out << "target " << f.target << "\n";
  for (const auto& fan : f.fans) {
    out << "fan";
    for (const auto& e : fan) out << ' ' << e;
    out << "\n";
  }
  return out.str();
}

Graft parse_graft(const std::string& text) {
  Graft g;
  bool have_vertices = false;
  for (const auto& toks : tokenize(text)) {
    if (toks[0] == "vertices" && toks.size() == 2) {
      g.graph.vertices = parse_int(toks[1], "vertices");
      have_vertices = true;
    } else if (toks[0] == "edge" && toks.size() == 4) {
      g.graph.edges.push_back({parse_int(toks[1], "edge endpoint"),
                               parse_int(toks[2], "edge endpoint"), toks[3]});
    } else if (toks[0] == "gamma") {
      for (std::size_t j = 1; j < toks.size(); ++j)
        g.gamma.push_back(parse_int(toks[j], "gamma vertex"));
    } else {
      throw input_error("graft: unexpected line starting with '" + toks[0] +
                        "'");
    }
  }
  if (!have_vertices) throw input_error("graft: missing 'vertices' line");
  return g;
}

Graft read_graft_file(const std::string& path) {
  return parse_graft(read_text_file(path));
}

BlueprintFile parse_bp(const std::string& text) {
  BlueprintFile out;
  for (const auto& toks : tokenize(text)) {
    if (toks[0] == "core" && toks.size() == 2) {
      out.core_path = toks[1];
    } else if (toks[0] == "triangle" && toks.size() == 5) {
      std::size_t idx = static_cast<std::size_t>(parse_int(toks[1], "index"));
      if (out.triangles.size() < idx) out.triangles.resize(idx);
      if (idx == 0) throw input_error("bp: attachment indices start at 1");
      out.triangles[idx - 1] = {toks[2], toks[3], toks[4]};
    } else if (toks[0] == "rank" && toks.size() == 3) {
      std::size_t idx = static_cast<std::size_t>(parse_int(toks[1], "index"));
      if (idx == 0) throw input_error("bp: attachment indices start at 1");
      if (out.ranks.size() < idx) out.ranks.resize(idx, 0);
      out.ranks[idx - 1] = parse_int(toks[2], "wheel rank");
    } else if (toks[0] == "delete") {
      for (std::size_t j = 1; j < toks.size(); ++j)
        out.remove.push_back(toks[j]);
    } else {
      throw input_error("bp: unexpected line starting with '" + toks[0] + "'");
    }
  }
  if (out.core_path.empty()) throw input_error("bp: missing 'core' line");
  if (out.triangles.size() != out.ranks.size())
    throw input_error("bp: triangle and rank lines disagree");
  return out;
}

BlueprintFile read_bp_file(const std::string& path) {
  return parse_bp(read_text_file(path));
}

}  // namespace fanforge
