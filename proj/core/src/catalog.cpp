#include "th/catalog.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "th/errors.hpp"

namespace th::catalog {
namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, const std::string& key, int line) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad numeric value for " + key + ": '" + text + "'", line);
  }
  if (pos != text.size())
    throw ParseError("trailing junk after " + key + " value: '" + text + "'", line);
  if (!std::isfinite(v))
    throw ParseError(key + " must be finite", line);
  return v;
}

void check_entry(const CatalogEntry& e, int line) {
  if (e.name.empty()) throw ParseError("entry without a name", line);
  if (!e.r_e) throw ParseError("entry '" + e.name + "' is missing re_A", line);
  if (!e.b_h) throw ParseError("entry '" + e.name + "' is missing bh_invA", line);
  if (!(*e.r_e > 0.0))
    throw ParseError("entry '" + e.name + "': re_A must satisfy r_e > 0", line);
  if (!(*e.b_h > 0.0))
    throw ParseError("entry '" + e.name + "': bh_invA must satisfy b_h > 0", line);
  if (e.c_h && !(std::fabs(*e.c_h) < 1.0))
    throw ParseError("entry '" + e.name + "': ch must satisfy |c_h| < 1", line);
  if (e.D && !(*e.D > 0.0))
    throw ParseError("entry '" + e.name + "': D_cm1 must satisfy D > 0", line);
  if (e.mu && !(*e.mu > 0.0))
    throw ParseError("entry '" + e.name + "': mu_amu must satisfy mu > 0", line);
  if ((e.D || e.mu) && e.source.empty())
    throw ParseError("entry '" + e.name +
                         "': a source= note is required when D_cm1 or mu_amu is given",
                     line);
}

}  // namespace

model::MoleculeParams CatalogEntry::to_params(
    std::optional<double> ch_override) const {
  auto ch = ch_override ? ch_override : c_h;
  if (!D || !mu)
    throw DomainError("molecule '" + name +
                      "' is threshold-only: D_cm1 and mu_amu are required to solve");
  if (!ch)
    throw DomainError("molecule '" + name +
                      "' has no ch; supply one in the catalog or via override");
  model::MoleculeParams p{name, *D, *r_e, *b_h, *ch, *mu};
  model::validate(p);
  return p;
}

std::vector<CatalogEntry> parse_catalog(std::istream& in) {
  std::vector<CatalogEntry> out;
  std::set<std::string> seen;
  CatalogEntry cur;
  bool open = false;
  int line_no = 0;
  int block_line = 0;

  auto flush = [&]() {
    if (!open) return;
    check_entry(cur, block_line);
    if (!seen.insert(cur.name).second)
      throw ParseError("duplicate molecule name '" + cur.name + "'", block_line);
    out.push_back(cur);
    cur = CatalogEntry{};
    open = false;
  };

  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected key=value, got '" + s + "'", line_no);
    std::string key = trim(s.substr(0, eq));
    std::string val = trim(s.substr(eq + 1));
    if (key == "name") {
      flush();
      if (val.empty()) throw ParseError("empty molecule name", line_no);
      cur.name = val;
      cur.line = block_line = line_no;
      open = true;
      continue;
    }
    if (!open)
      throw ParseError("'" + key + "=' before any name=", line_no);
    if (key == "D_cm1")
      cur.D = parse_number(val, key, line_no);
    else if (key == "re_A")
      cur.r_e = parse_number(val, key, line_no);
    else if (key == "bh_invA")
      cur.b_h = parse_number(val, key, line_no);
    else if (key == "ch")
      cur.c_h = parse_number(val, key, line_no);
    else if (key == "mu_amu")
      cur.mu = parse_number(val, key, line_no);
    else if (key == "source")
      cur.source = val;
    else
      throw ParseError("unknown key '" + key + "'", line_no);
  }
  flush();
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog file '" + path.string() + "'");
  return parse_catalog(in);
}

}  // namespace th::catalog
