// SPDX-License-Identifier: Apache-2.0

#include "equisolid/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

#include "equisolid/links.hpp"

namespace equisolid::cli {

namespace fs = std::filesystem;

SpecError::SpecError(const std::string& msg, std::size_t pos, std::size_t line, std::size_t column)
    : ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg,
                 pos),
      line_(line),
      column_(column) {}

namespace {

// ---- spec parsing ----

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t begin, std::size_t end)
      : text_(text), pos_(begin), end_(end) {}

  [[noreturn]] void error(const std::string& msg) const { error_at(msg, pos_); }

  [[noreturn]] void error_at(const std::string& msg, std::size_t pos) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SpecError(msg, pos, line, col);
  }

  void skip_ws() {
    while (pos_ < end_ && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= end_;
  }
  char peek() {
    skip_ws();
    return pos_ < end_ ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  std::size_t pos() const { return pos_; }

  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < end_ && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  /// A double-quoted string or a bare word.
  std::string string_value() {
    if (!accept('"')) {
      std::string w = word();
      if (w.empty()) error("expected a value");
      return w;
    }
    const std::size_t start = pos_;
    while (pos_ < end_ && text_[pos_] != '"') ++pos_;
    if (pos_ >= end_) error_at("unterminated string", start - 1);
    std::string s(text_.substr(start, pos_ - start));
    ++pos_;
    return s;
  }

  bool bool_value() {
    const std::size_t at = (skip_ws(), pos_);
    const std::string w = word();
    if (w == "true" || w == "1") return true;
    if (w == "false" || w == "0") return false;
    error_at("expected true or false", at);
  }

  CycNum scalar() {
    skip_ws();
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < end_) {
      const char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == ',' || c == ']')) break;
      ++pos_;
    }
    std::string_view tok = text_.substr(start, pos_ - start);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    if (tok.empty()) error_at("expected a scalar", start);
    try {
      return cyclo::parse_scalar(tok);
    } catch (const ParseError& e) {
      std::string msg = e.what();
      msg = msg.substr(0, msg.rfind(" at position "));
      error_at("bad scalar '" + std::string(tok) + "': " + msg, start + e.position());
    }
  }

  /// `[a, b, ...]` of scalars, or `[[...], ...]` of such rows.
  std::vector<Vec> rows(bool& nested) {
    expect('[');
    std::vector<Vec> out;
    nested = peek() == '[';
    if (nested) {
      do {
        bool inner = false;
        const std::size_t at = (skip_ws(), pos_);
        auto r = rows(inner);
        if (inner) error_at("matrices nest at most two levels", at);
        out.push_back(r.front());
      } while (accept(','));
    } else {
      Vec row;
      do row.push_back(scalar());
      while (accept(','));
      out.push_back(std::move(row));
    }
    expect(']');
    return out;
  }

 private:
  std::string_view text_;
  std::size_t pos_, end_;
};

struct PendingGen {
  GeneratorSpec gen;
  std::vector<std::vector<Vec>> raw;  // bracketed items as read
  std::vector<bool> nested;
  std::vector<std::size_t> item_pos;
  std::size_t pos = 0;
};

PendingGen parse_gen(Cursor& c) {
  PendingGen g;
  g.pos = (c.skip_ws(), c.pos());
  bool swap_seen = false;
  do {
    const std::size_t at = (c.skip_ws(), c.pos());
    if (c.peek() == '[') {
      if (swap_seen) c.error_at("swap must come last", at);
      bool nested = false;
      g.raw.push_back(c.rows(nested));
      g.nested.push_back(nested);
      g.item_pos.push_back(at);
      continue;
    }
    const std::string w = c.word();
    if (w != "swap") c.error_at("expected a bracketed matrix or 'swap'", at);
    if (swap_seen) c.error_at("swap given twice", at);
    swap_seen = true;
    g.gen.swap = c.accept('=') ? c.bool_value() : true;
  } while (c.accept(','));
  if (!c.done()) c.error("unexpected text after generator");
  return g;
}

std::size_t surface_dim(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::P2:
    case SurfaceKind::DP6:
      return 3;
    case SurfaceKind::P1xP1:
      return 2;
    default:
      return 0;
  }
}

void check_gen(const Cursor& c, SurfaceKind surface, PendingGen& g) {
  const auto at = [&](std::size_t k) { return k < g.item_pos.size() ? g.item_pos[k] : g.pos; };
  if (surface == SurfaceKind::DP5) {
    if (g.raw.size() != 1 || g.nested[0]) c.error_at("dP5 generators are one permutation list", g.pos);
    if (g.gen.swap) c.error_at("dP5 generators take no swap flag", g.pos);
    std::vector<int> p;
    for (const CycNum& x : g.raw[0][0]) {
      if (!x.is_rational() || x.rational().get_den() != 1 || !x.rational().get_num().fits_sint_p())
        c.error_at("permutation entries must be integers", at(0));
      p.push_back(static_cast<int>(x.rational().get_num().get_si()));
    }
    std::vector<int> s = p;
    std::sort(s.begin(), s.end());
    if (s != std::vector<int>{0, 1, 2, 3, 4}) c.error_at("not a permutation of 0..4", at(0));
    g.gen.permutation = std::move(p);
    return;
  }
  const std::size_t n = surface_dim(surface);
  const std::size_t want = surface == SurfaceKind::P2 ? 1 : 2;
  if (g.raw.size() != want)
    c.error_at(surface_kind_name(surface) + " generators take " + std::to_string(want) +
                   (want == 1 ? " matrix" : " matrices"),
               g.pos);
  if (surface == SurfaceKind::P2 && g.gen.swap) c.error_at("P2 generators take no swap flag", g.pos);
  for (std::size_t k = 0; k < g.raw.size(); ++k) {
    const auto& rows = g.raw[k];
    if (!g.nested[k] || rows.size() != n)
      c.error_at("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix", at(k));
    for (const auto& r : rows)
      if (r.size() != n)
        c.error_at("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix", at(k));
    Mat m = Mat::from_rows(rows);
    if (det(m).is_zero()) c.error_at("singular matrix", at(k));
    g.gen.matrices.push_back(std::move(m));
  }
  if (surface == SurfaceKind::DP6 &&
      !dp6_membership(ProjMat(g.gen.matrices[0]), ProjMat(g.gen.matrices[1]), g.gen.swap))
    c.error_at("not an automorphism of the dP6 model: the pullback of span{xu-yv, xu-zw} "
               "differs from the span",
               g.pos);
}

SurfaceKind parse_surface(const Cursor& c, const std::string& s, std::size_t at, AssertedFacts& facts) {
  if (s.rfind("asserted", 0) == 0 && s.size() > 8) {
    const std::string d = s.substr(8);
    if (d.size() != 1 || d[0] < '1' || d[0] > '4')
      c.error_at("asserted surfaces have degree 1 to 4", at);
    facts.degree = d[0] - '0';
    return SurfaceKind::Asserted;
  }
  for (SurfaceKind k : {SurfaceKind::P2, SurfaceKind::P1xP1, SurfaceKind::DP6, SurfaceKind::DP5})
    if (surface_kind_name(k) == s) return k;
  c.error_at("unknown surface '" + s + "'", at);
}

std::string surface_value(const GroupSpec& s) {
  if (s.surface == SurfaceKind::Asserted) return "asserted" + std::to_string(s.facts.degree);
  return surface_kind_name(s.surface);
}

// ---- reports ----

Json str_list(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

Json input_echo(const GroupSpec& spec, const ClassifyInput& in) {
  Json j;
  j["surface"] = surface_value(spec);
  j["name"] = spec.name ? Json(*spec.name) : Json(nullptr);
  j["degree"] = in.degree();
  Json gens = Json::array();
  for (const auto& g : spec.generators) {
    Json e;
    if (spec.surface == SurfaceKind::DP5) {
      e["permutation"] = g.permutation;
    } else {
      Json ms = Json::array();
      for (const auto& m : g.matrices) ms.push_back(matrix_literal(m));
      e["matrices"] = ms;
      if (spec.surface != SurfaceKind::P2) e["swap"] = g.swap;
    }
    gens.push_back(e);
  }
  j["generators"] = gens;
  if (spec.surface == SurfaceKind::Asserted) {
    j["rank_one"] = spec.facts.rank_one;
    j["fixes_general_point"] = spec.facts.fixes_general_point;
  }
  std::ostringstream hex;
  hex << std::hex << fnv1a(render(spec));
  j["digest"] = hex.str();
  return j;
}

Json group_block(const FiniteGroup& g) {
  const Identification id = identify_named(g);
  Json j;
  j["order"] = g.order();
  j["name"] = id.name;
  j["recognized"] = id.recognized;
  return j;
}

Json group_of(const ClassifyInput& in) {
  if (in.surface == SurfaceKind::Asserted) return nullptr;
  if (in.surface == SurfaceKind::DP5) {
    auto perms = in.permutations;
    if (perms.empty()) perms.push_back({0, 1, 2, 3, 4});
    return group_block(permutation_group(perms).group);
  }
  return group_block(input_group(in).group);
}

Json verdict_block(const SolidityVerdict& v) {
  Json j;
  j["verdict"] = verdict_str(v.verdict);
  j["rationale"] = v.rationale;
  j["degree"] = v.degree;
  j["invariant_rank"] = v.invariant_rank ? Json(*v.invariant_rank) : Json(nullptr);
  j["mori_fibre_space"] = v.mori_fibre_space;
  j["group_order"] = v.group_order;
  j["group_name"] = v.group_name;
  j["flags"] = str_list(v.flags);
  Json c;
  c["fixed_points"] = str_list(v.certificate.fixed_points);
  c["orbits"] = str_list(v.certificate.orbits);
  c["links"] = str_list(v.certificate.links);
  c["identifications"] = str_list(v.certificate.identifications);
  c["notes"] = str_list(v.certificate.notes);
  j["certificate"] = c;
  return j;
}

int exit_code_for(Verdict v) {
  if (v == Verdict::NotMinimal) return 2;
  if (v == Verdict::Indeterminate) return 3;
  return 0;
}

Json plane_orbit_json(const PlaneOrbit& o) {
  Json j;
  j["length"] = o.length();
  Json pts = Json::array();
  for (const auto& p : o.orbit.points) pts.push_back(p.str());
  j["points"] = pts;
  j["general_position"] = o.general_position;
  j["collinear_triple"] = o.collinear_triple;
  j["conic"] = o.conic ? Json(conic_str(*o.conic)) : Json(nullptr);
  j["family"] = o.family;
  if (o.family) {
    Json lines = Json::array();
    for (const auto& l : o.lines) lines.push_back(vec_str(l));
    j["lines"] = lines;
  }
  return j;
}

bool is_polyhedral(const SurfaceGroup& g) {
  const std::string n = identify_named(g.group).name;
  return n == "A4" || n == "S4";
}

std::vector<SurfaceAut> generators_of(const SurfaceGroup& g, Model m) {
  std::vector<SurfaceAut> gens;
  for (Index i : g.group.generators()) gens.push_back(g.elements[i]);
  if (gens.empty()) gens.push_back(SurfaceAut::identity(m));
  return gens;
}

Model model_for(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::P2:
      return Model::P2;
    case SurfaceKind::P1xP1:
      return Model::P1xP1;
    case SurfaceKind::DP6:
      return Model::DP6;
    default:
      fail("this command needs a geometric model (P2, P1xP1 or dP6)");
  }
}

Json subgroup_types(const FiniteGroup& g) {
  if (g.order() > kMaxSearchOrder) return nullptr;
  std::map<std::pair<std::size_t, std::string>, std::size_t> count;
  for (const Subgroup& s : subgroups_up_to(g)) ++count[{s.size(), identify_named(induced(g, s)).name}];
  Json a = Json::array();
  for (const auto& [key, n] : count) {
    Json e;
    e["order"] = key.first;
    e["name"] = key.second;
    e["count"] = n;
    a.push_back(e);
  }
  return a;
}

Json identify_block(const FiniteGroup& g) {
  const Identification id = identify_named(g);
  Json j;
  j["order"] = g.order();
  j["name"] = id.name;
  j["recognized"] = id.recognized;
  j["fingerprint"] = id.fingerprint.str();
  j["subgroup_types"] = subgroup_types(g);
  return j;
}

ProjGroup factor_group(const SurfaceGroup& g, const Subgroup& part, bool first) {
  std::vector<ProjMat> gens;
  for (Index i : part) gens.push_back(first ? g.elements[i].a : g.elements[i].b);
  return close_projective(gens);
}

Json matrices_json(const ProjGroup& h, const Subgroup& s) {
  Json a = Json::array();
  for (Index i : s) a.push_back(h.elements[i].str());
  return a;
}

Json goursat_report(const SurfaceGroup& g) {
  const Subgroup part = swap_free_part(g);
  const ProjGroup h1 = factor_group(g, part, true), h2 = factor_group(g, part, false);
  std::vector<std::pair<Index, Index>> gens;
  for (Index i : part) gens.emplace_back(*h1.find(g.elements[i].a), *h2.find(g.elements[i].b));
  const EmbeddedGroup r = subgroup_of_product(h1.group, h2.group, gens);
  const GoursatData d = goursat_decompose(r, h1.group, h2.group);
  auto lift = [](const Subgroup& image, const Subgroup& local) {
    Subgroup out;
    for (Index k : local) out.push_back(image[k]);
    std::sort(out.begin(), out.end());
    return out;
  };
  const Subgroup k1 = lift(d.image1, d.phi.kernel()), k2 = lift(d.image2, d.psi.kernel());
  Json j;
  j["subgroup"] = group_block(r.group);
  j["factor1"] = group_block(*d.h1);
  j["factor2"] = group_block(*d.h2);
  j["quotient"] = group_block(*d.d);
  j["kernel1"] = group_block(induced(h1.group, k1));
  j["kernel1"]["elements"] = matrices_json(h1, k1);
  j["kernel2"] = group_block(induced(h2.group, k2));
  j["kernel2"]["elements"] = matrices_json(h2, k2);
  // only meaningful when both projections land in the same matrix group
  auto as_set = [](const ProjGroup& h, const Subgroup& s) {
    std::vector<std::string> v;
    for (Index i : s) v.push_back(h.elements[i].str());
    std::sort(v.begin(), v.end());
    return v;
  };
  const bool same_factor = as_set(h1, d.image1) == as_set(h2, d.image2);
  j["same_factor"] = same_factor;
  const bool kernels_equal = same_factor && as_set(h1, k1) == as_set(h2, k2);
  j["kernels_equal"] = same_factor ? Json(kernels_equal) : Json(nullptr);
  // a copy of the factor inside the fibre product needs a complement to the common kernel
  if (kernels_equal) {
    std::size_t complements = 0;
    const std::size_t want = h1.group.order() / k1.size();
    for (const Subgroup& c : subgroups_up_to(h1.group, {want, std::nullopt})) {
      Subgroup meet;
      std::set_intersection(c.begin(), c.end(), k1.begin(), k1.end(), std::back_inserter(meet));
      if (meet.size() == 1) ++complements;
    }
    j["kernel_complements"] = complements;
  }
  return j;
}

Json catalog_report() {
  Json entries = Json::array();
  bool all = true;
  for (const auto& row : catalog_verdicts()) {
    const CatalogEntry& e = catalog_entry(row.name);
    Json j;
    j["name"] = row.name;
    j["description"] = e.description;
    j["surface"] = surface_kind_name(e.input.surface);
    j["degree"] = row.verdict.degree;
    j["group_order"] = row.verdict.group_order;
    j["group_name"] = row.verdict.group_name;
    j["verdict"] = verdict_str(row.verdict.verdict);
    j["expected"] = verdict_str(row.expected);
    j["matches"] = row.matches();
    j["rationale"] = row.verdict.rationale;
    all = all && row.matches();
    entries.push_back(j);
  }
  Json j;
  j["entries"] = entries;
  j["all_match"] = all;
  return j;
}

// ---- cache ----

std::optional<fs::path> cache_dir(const Options& o) {
  if (!o.use_cache) return std::nullopt;
  if (o.cache_dir) return fs::path(*o.cache_dir);
  if (const char* env = std::getenv("EQUISOLID_CACHE_DIR"); env && *env) return fs::path(env);
  return std::nullopt;
}

std::string cache_key(const std::string& command, const std::optional<GroupSpec>& spec,
                      const Options& o) {
  std::string material = std::string(kSchema) + "\n" + command + "\n";
  if (command == "orbits") material += "max-length " + std::to_string(o.max_length) + "\n";
  if (spec) material += render(*spec);
  std::ostringstream hex;
  hex << std::hex;
  hex.width(16);
  hex.fill('0');
  hex << fnv1a(material);
  return hex.str();
}

std::optional<Outcome> cache_load(const fs::path& file) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    if (!j.contains("report") || !j.contains("exit_code")) return std::nullopt;
    return Outcome{j["report"], j["exit_code"].get<int>(), true};
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void cache_store(const fs::path& dir, const fs::path& file, const Outcome& out) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) return;
  Json j;
  j["report"] = out.report;
  j["exit_code"] = out.exit_code;
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream os(tmp);
    if (!os) return;
    os << j.dump();
  }
  fs::rename(tmp, file, ec);
}

Outcome compute(const std::string& command, const std::optional<GroupSpec>& spec,
                const Options& options) {
  Outcome out;
  Json& r = out.report;
  r["schema"] = kSchema;
  r["command"] = command;
  if (command == "catalog") {
    Json body = catalog_report();
    for (auto it = body.begin(); it != body.end(); ++it) r[it.key()] = it.value();
    return out;
  }
  if (!spec) fail("command '" + command + "' needs a group spec");
  const ClassifyInput in = to_input(*spec);
  r["input"] = input_echo(*spec, in);
  if (command == "classify") {
    const SolidityVerdict v = classify(in);
    r["group"] = group_of(in);
    r["result"] = verdict_block(v);
    out.exit_code = exit_code_for(v.verdict);
    return out;
  }
  if (command == "identify") {
    if (in.surface == SurfaceKind::Asserted) fail("asserted surfaces carry no group");
    if (in.surface == SurfaceKind::DP5) {
      auto perms = in.permutations;
      if (perms.empty()) perms.push_back({0, 1, 2, 3, 4});
      r["group"] = identify_block(permutation_group(perms).group);
      return out;
    }
    const SurfaceGroup g = input_group(in);
    r["group"] = identify_block(g.group);
    if (in.surface != SurfaceKind::P2) {
      const Subgroup part = swap_free_part(g);
      r["factor_preserving"] = identify_block(induced(g.group, part));
    }
    return out;
  }
  const Model m = model_for(in.surface);
  const SurfaceGroup g = input_group(in);
  r["group"] = group_block(g.group);
  if (command == "orbits") {
    r["max_length"] = options.max_length;
    Json lens = Json::array();
    for (const auto& [len, rep] : minimal_orbit_lengths(g, options.max_length).witnesses) {
      Json e;
      e["length"] = len;
      Json pts = Json::array();
      for (const auto& p : rep.points) pts.push_back(p.str());
      e["points"] = pts;
      e["stabilizer_order"] = rep.stabilizer.size();
      if (m == Model::P1xP1) e["general_position"] = in_general_position_p1p1(rep.points);
      lens.push_back(e);
    }
    r["orbits"] = lens;
    if (m == Model::P2 && is_polyhedral(g)) {
      Json a = Json::array();
      for (const auto& o : enumerate_small_orbits(g, options.max_length)) a.push_back(plane_orbit_json(o));
      r["plane_orbits"] = a;
    }
    return out;
  }
  if (command == "fixed-points") {
    const FixedLocus f = fixed_locus(generators_of(g, m), m);
    Json c = Json::array();
    for (const auto& comp : f.components) c.push_back(comp.str());
    r["fixed_locus"] = {{"whole", f.whole}, {"unresolved", f.unresolved}, {"components", c}};
    return out;
  }
  if (command == "links") {
    if (m != Model::P2) fail("links are enumerated on P2 only");
    const LinkEnumeration e = enumerate_links_p2(g);
    Json links = Json::array();
    for (const auto& l : e.links) {
      Json j;
      j["type"] = l.type == 1 ? "I" : "II";
      j["center"] = plane_orbit_json(l.center);
      j["target"] = l.target;
      j["map"] = l.map ? Json(*l.map) : Json(nullptr);
      links.push_back(j);
    }
    Json blocked = Json::array();
    for (const auto& b : e.blocked) {
      Json j;
      j["center"] = plane_orbit_json(b.center);
      j["reason"] = b.reason;
      blocked.push_back(j);
    }
    r["links"] = links;
    r["blocked"] = blocked;
    return out;
  }
  if (command == "goursat") {
    if (m == Model::P2) fail("goursat needs a product model (P1xP1 or dP6)");
    r["goursat"] = goursat_report(g);
    return out;
  }
  fail("unknown command '" + command + "'");
}

}  // namespace

// ---- public ----

GroupSpec parse_spec(std::string_view text) {
  GroupSpec spec;
  std::optional<std::size_t> surface_at;
  std::vector<PendingGen> gens;
  std::optional<std::size_t> facts_at;
  bool has_name = false;
  std::size_t start = 0;
  Cursor whole(text, 0, text.size());
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::size_t stop = end;
    bool quoted = false;
    for (std::size_t i = start; i < end; ++i) {
      if (text[i] == '"') quoted = !quoted;
      if (text[i] == '#' && !quoted) {
        stop = i;
        break;
      }
    }
    Cursor c(text, start, stop);
    if (!c.done()) {
      const std::size_t key_at = c.pos();
      const std::string key = c.word();
      if (key.empty()) c.error("expected a key");
      c.expect('=');
      if (key == "surface") {
        if (surface_at) c.error_at("surface given twice", key_at);
        const std::size_t at = (c.skip_ws(), c.pos());
        spec.surface = parse_surface(c, c.string_value(), at, spec.facts);
        surface_at = key_at;
      } else if (key == "name") {
        if (has_name) c.error_at("name given twice", key_at);
        spec.name = c.string_value();
        has_name = true;
      } else if (key == "gen") {
        gens.push_back(parse_gen(c));
      } else if (key == "rank_one") {
        spec.facts.rank_one = c.bool_value();
        facts_at = key_at;
      } else if (key == "fixes_general_point") {
        spec.facts.fixes_general_point = c.bool_value();
        facts_at = key_at;
      } else {
        c.error_at("unknown key '" + key + "'", key_at);
      }
      if (!c.done()) c.error("unexpected text after value");
    }
    start = end + 1;
  }
  if (!surface_at) whole.error_at("missing 'surface'", 0);
  if (spec.surface == SurfaceKind::Asserted) {
    if (!gens.empty()) whole.error_at("asserted surfaces take no generators", gens[0].pos);
  } else if (facts_at) {
    whole.error_at("facts apply to asserted surfaces only", *facts_at);
  }
  for (auto& g : gens) {
    check_gen(whole, spec.surface, g);
    spec.generators.push_back(std::move(g.gen));
  }
  return spec;
}

std::string matrix_literal(const Mat& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).str();
    s += "]";
  }
  return s + "]";
}

std::string render(const GroupSpec& spec) {
  std::string s = "surface = \"" + surface_value(spec) + "\"\n";
  if (spec.name) {
    if (spec.name->find_first_of("\"\n") != std::string::npos) fail("name cannot contain quotes or newlines");
    s += "name = \"" + *spec.name + "\"\n";
  }
  if (spec.surface == SurfaceKind::Asserted) {
    s += std::string("rank_one = ") + (spec.facts.rank_one ? "true" : "false") + "\n";
    s += std::string("fixes_general_point = ") + (spec.facts.fixes_general_point ? "true" : "false") +
         "\n";
  }
  for (const auto& g : spec.generators) {
    s += "gen = ";
    if (spec.surface == SurfaceKind::DP5) {
      s += "[";
      for (std::size_t i = 0; i < g.permutation.size(); ++i)
        s += (i ? ", " : "") + std::to_string(g.permutation[i]);
      s += "]";
    } else {
      for (std::size_t i = 0; i < g.matrices.size(); ++i) s += (i ? ", " : "") + matrix_literal(g.matrices[i]);
      if (spec.surface != SurfaceKind::P2) s += g.swap ? ", swap = 1" : ", swap = 0";
    }
    s += "\n";
  }
  return s;
}

ClassifyInput to_input(const GroupSpec& spec) {
  ClassifyInput in;
  in.surface = spec.surface;
  in.name = spec.name.value_or("");
  if (spec.surface == SurfaceKind::Asserted) in.facts = spec.facts;
  for (const auto& g : spec.generators) {
    switch (spec.surface) {
      case SurfaceKind::P2:
        in.generators.push_back(SurfaceAut::p2(ProjMat(g.matrices.at(0))));
        break;
      case SurfaceKind::P1xP1:
        in.generators.push_back(
            SurfaceAut::p1p1(ProjMat(g.matrices.at(0)), ProjMat(g.matrices.at(1)), g.swap));
        break;
      case SurfaceKind::DP6:
        in.generators.push_back(
            SurfaceAut::dp6(ProjMat(g.matrices.at(0)), ProjMat(g.matrices.at(1)), g.swap));
        break;
      case SurfaceKind::DP5:
        in.permutations.push_back(g.permutation);
        break;
      case SurfaceKind::Asserted:
        fail("asserted surfaces take no generators");
    }
  }
  return in;
}

GroupSpec spec_from_input(const ClassifyInput& input) {
  GroupSpec spec;
  spec.surface = input.surface;
  if (!input.name.empty()) spec.name = input.name;
  if (input.surface == SurfaceKind::Asserted) spec.facts = input.facts;
  for (const auto& g : input.generators) {
    GeneratorSpec gs;
    gs.matrices.push_back(g.a.mat());
    if (g.is_product()) gs.matrices.push_back(g.b.mat());
    gs.swap = g.swap;
    spec.generators.push_back(std::move(gs));
  }
  for (const auto& p : input.permutations) {
    GeneratorSpec gs;
    gs.permutation = p;
    spec.generators.push_back(std::move(gs));
  }
  return spec;
}

GroupSpec catalog_spec(const std::string& name) { return spec_from_input(catalog_entry(name).input); }

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"classify", "orbits",  "fixed-points", "links",
                                          "identify", "goursat", "catalog"};
  return c;
}

Outcome run_command(const std::string& command, const std::optional<GroupSpec>& spec,
                    const Options& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto dir = cache_dir(options);
  std::optional<fs::path> file;
  Outcome out;
  bool have = false;
  if (dir && std::find(commands().begin(), commands().end(), command) != commands().end()) {
    file = *dir / (cache_key(command, spec, options) + ".json");
    if (auto hit = cache_load(*file)) {
      out = std::move(*hit);
      have = true;
    }
  }
  if (!have) {
    try {
      out = compute(command, spec, options);
      if (file) cache_store(*dir, *file, out);
    } catch (const Error& e) {
      out = Outcome{};
      out.report["schema"] = kSchema;
      out.report["command"] = command;
      out.report["error"] = e.what();
      out.exit_code = 1;
    }
  }
  if (options.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
    out.report["timing"] = {{"elapsed_ms", ms.count()}, {"cached", out.from_cache}};
  }
  return out;
}

std::string dump(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace equisolid::cli
