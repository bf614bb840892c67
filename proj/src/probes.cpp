#include "mcgpres/probes.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef MCGPRES_FIXTURES_DIR
#define MCGPRES_FIXTURES_DIR "fixtures"
#endif

namespace mcgpres {

namespace {

bool has_family(const FiniteAssignment& a, Family f) {
  return std::any_of(a.images().begin(), a.images().end(),
                     [f](const auto& kv) { return kv.first.family() == f; });
}

FiniteAssignment restrict_to_crosscap(const FiniteAssignment& a) {
  FiniteAssignment out = a.kind() == TargetKind::Permutations
                             ? FiniteAssignment::permutations(a.degree())
                             : FiniteAssignment::matrices(a.degree(), a.modulus());
  for (const auto& [g, img] : a.images())
    if (g.family() == Family::A || g.family() == Family::U || g.family() == Family::B)
      out.assign(g, img);
  return out;
}

std::string hom_status(const Presentation& p, const FiniteAssignment& base) {
  try {
    auto failing = check_homomorphism(p, realize(p, base));
    if (failing.empty()) return "hom";
    std::string out = "fails";
    for (const auto& l : failing) out += " " + l;
    return out;
  } catch (const MissingGenerator& e) {
    return std::string("undefined: ") + e.what();
  }
}

}  // namespace

FiniteAssignment realize(const Presentation& p, const FiniteAssignment& base) {
  if (has_family(base, Family::Y) && !has_family(base, Family::U))
    return extend_from_slide_generators(p, base);
  return extend_from_crosscap_generators(p, base);
}

std::vector<ShippedAssignment> computed_assignments(int g, bool closed) {
  std::vector<ShippedAssignment> out;
  out.push_back({"homology-mod2", homology_mod2_action(g)});
  const Presentation source = closed ? build_parszep_closed(g) : build_parszep_bordered(g);
  auto chars = sign_characters(source);
  for (std::size_t i = 0; i < chars.size(); ++i)
    out.push_back({"sign-" + std::to_string(i + 1), restrict_to_crosscap(chars[i])});
  return out;
}

std::vector<ShippedAssignment> load_assignment_fixtures(const std::string& dir, int g,
                                                        bool closed) {
  namespace fs = std::filesystem;
  std::vector<ShippedAssignment> out;
  const fs::path root = fs::path(dir) / "assignments";
  std::error_code ec;
  if (!fs::is_directory(root, ec)) return out;
  const std::string prefix =
      "g" + std::to_string(g) + (closed ? "-closed-" : "-bordered-");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(root)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.rfind(prefix, 0) == 0 &&
        entry.path().extension() == ".txt")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string name = f.stem().string().substr(prefix.size());
    try {
      out.push_back({name, parse_assignment(ss.str())});
    } catch (const std::exception& e) {
      throw std::runtime_error(f.string() + ": " + e.what());
    }
  }
  return out;
}

std::vector<ShippedAssignment> shipped_assignments(int g, bool closed,
                                                   const std::string& fixtures_dir) {
  auto out = computed_assignments(g, closed);
  for (auto& a : load_assignment_fixtures(fixtures_dir, g, closed)) out.push_back(std::move(a));
  return out;
}

std::string default_fixtures_dir() {
  if (const char* env = std::getenv("MCGPRES_FIXTURES"); env && *env) return env;
  return MCGPRES_FIXTURES_DIR;
}

bool Comparison::equal() const {
  return std::all_of(probes.begin(), probes.end(),
                     [](const ProbeResult& r) { return r.equal; });
}

Comparison compare_presentations(const Presentation& left, const Presentation& right,
                                 const std::vector<ShippedAssignment>& assignments) {
  Comparison c;
  const auto l_row = abelianization(left, Pivoting::RowFirst);
  const auto l_col = abelianization(left, Pivoting::ColumnFirst);
  const auto r_row = abelianization(right, Pivoting::RowFirst);
  const auto r_col = abelianization(right, Pivoting::ColumnFirst);
  c.probes.push_back({"abelianization", format_abelianization(l_row),
                      format_abelianization(r_row),
                      l_row == r_row && l_col == r_col && l_row == l_col});
  for (const auto& a : assignments) {
    const std::string l = hom_status(left, a.base);
    const std::string r = hom_status(right, a.base);
    c.probes.push_back({"hom:" + a.name, l, r, l == "hom" && r == "hom"});
  }
  return c;
}

}  // namespace mcgpres
