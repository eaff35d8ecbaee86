#include "dflow/report.hpp"

#include <sstream>

#include "dflow/dihomotopy.hpp"
#include "dflow/homology.hpp"

namespace dflow {

namespace {

const char* side_sign(Side side) { return side == Side::minus ? "-" : "+"; }

Json integer_json(const Integer& v) {
  if (v >= Integer(INT64_MIN) && v <= Integer(INT64_MAX)) return v.convert_to<long long>();
  return v.str();
}

Json matrix_json(const IntegerMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

std::string matrix_text(const IntegerMatrix& m) {
  std::ostringstream out;
  out << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << (i ? "; " : "");
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).str();
  }
  out << "]";
  return out.str();
}

Json string_list(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

std::string subset_name(const Flow& x, const std::vector<int>& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + x.states()[a[i]];
  return s + "}";
}

struct Output {
  Json json = Json::object();
  std::ostringstream text;
  int code = exit_code::ok;
};

void warnings_out(Output& o, const std::vector<std::string>& warnings) {
  o.json["warnings"] = string_list(warnings);
  for (const auto& w : warnings) o.text << "warning: " << w << "\n";
}

void cmd_validate(Output& o, const std::filesystem::path& file) {
  const LoadedFlow loaded = load_flow_file(file);
  const Flow& x = *loaded.flow;
  const ValidationReport r = validate(x);
  o.json["kind"] = loaded.kind;
  o.json["states"] = string_list(x.states());
  o.json["cofibrant"] = x.cofibrant();
  Json spaces = Json::array();
  for (const auto& [pair, space] : x.path_spaces())
    spaces.push_back({{"from", x.states()[pair.first]},
                      {"to", x.states()[pair.second]},
                      {"dimension", space->dimension()},
                      {"simplices", space->total()}});
  o.json["path_spaces"] = spaces;
  o.json["valid"] = r.ok();
  o.json["problems"] = string_list(r.problems);
  o.text << loaded.kind << " flow with " << x.state_count() << " states, "
         << x.path_spaces().size() << " nonempty path spaces, " << x.total_path_simplices()
         << " path simplices" << (x.cofibrant() ? ", cofibrant" : "") << "\n";
  if (r.broken_associator) {
    const auto [a, b, c, d] = *r.broken_associator;
    o.json["broken_associator"] = string_list(
        {x.states()[a], x.states()[b], x.states()[c], x.states()[d]});
  }
  for (const auto& p : r.problems) o.text << "problem: " << p << "\n";
  o.text << (r.ok() ? "valid" : "invalid") << "\n";
  if (!r.ok()) o.code = exit_code::validation;
}

void cmd_germs(Output& o, const std::filesystem::path& file, Side side, const CommandOptions& opt) {
  const LoadedFlow loaded = load_flow_file(file);
  const Flow& x = *loaded.flow;
  const GermSpace g = homotopy_germ_space(x, side, opt.mode);
  std::vector<int> states;
  if (opt.state) {
    states.push_back(x.state_index(*opt.state));
  } else {
    for (int a = 0; a < x.state_count(); ++a) states.push_back(a);
  }
  o.json["side"] = side == Side::minus ? "minus" : "plus";
  o.text << (side == Side::minus ? "branching" : "merging") << " space: "
         << g.total->vertex_count() << " germ vertices, " << g.total->total() << " simplices\n";
  Json parts = Json::array();
  for (const int a : states) {
    const Subcomplex c = germ_component(g, a);
    const bool empty = c.set->total() == 0;
    const bool point = !empty && is_homology_point(*c.set);
    Json part = {{"state", x.states()[a]},
                 {"vertices", c.set->vertex_count()},
                 {"simplices", c.set->total()},
                 {"dimension", c.set->dimension()},
                 {"homology_point", point}};
    o.text << "  " << x.states()[a] << ": " << c.set->vertex_count() << " vertices, "
           << c.set->total() << " simplices" << (point ? ", homology point" : "") << "\n";
    if (opt.dump) {
      part["dump"] = export_simplicial_set(*c.set);
      o.text << "    " << part["dump"].dump() << "\n";
    }
    parts.push_back(part);
  }
  o.json["states"] = parts;
  warnings_out(o, g.warnings);
}

void cmd_homology(Output& o, const std::filesystem::path& file, const CommandOptions& opt) {
  const LoadedFlow loaded = load_flow_file(file);
  const Flow& x = *loaded.flow;
  const AugmentedComplex aug = augmented_complex(x, opt.side, opt.mode);
  Json groups = Json::array();
  for (int n = 0; n <= opt.max_dim; ++n) {
    const std::string label = std::string("H") + side_sign(opt.side) + "_" + std::to_string(n);
    const std::string group = homology(aug.complex, n - 1).to_string();
    groups.push_back({{"degree", n}, {"label", label}, {"group", group}});
    o.text << label << " = " << group << "\n";
  }
  o.json["side"] = opt.side == Side::minus ? "minus" : "plus";
  o.json["groups"] = groups;
  warnings_out(o, aug.germs.warnings);
}

void cmd_les(Output& o, const std::filesystem::path& file, const CommandOptions& opt) {
  const LoadedMorphism m = load_morphism_file(file);
  LesReport r = long_exact_sequence(m.morphism, opt.side, opt.mode);
  if (m.zero_map) {
    if (*m.zero_map < 0 || *m.zero_map >= static_cast<int>(r.maps.size()))
      throw ValidationError("mutate_les.zero_map is out of range");
    r.maps[*m.zero_map].setZero();
    r.warnings.push_back("map " + std::to_string(*m.zero_map) + " replaced by zero on request");
  }
  const ExactnessVerdict v = verify_exactness(r);
  Json nodes = Json::array(), maps = Json::array();
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    const auto& n = r.nodes[i];
    nodes.push_back({{"label", n.label}, {"group", n.group.to_string()}, {"exact", v.node_exact[i]}});
    o.text << n.label << " = " << n.group.to_string() << (v.node_exact[i] ? "" : "  (not exact)") << "\n";
    if (i < r.maps.size()) {
      maps.push_back(matrix_json(r.maps[i]));
      o.text << "  -> " << matrix_text(r.maps[i]) << "\n";
    }
  }
  o.json["side"] = opt.side == Side::minus ? "minus" : "plus";
  o.json["nodes"] = nodes;
  o.json["maps"] = maps;
  o.json["exact"] = v.exact;
  if (!v.exact) {
    Json w = Json::array();
    for (Eigen::Index i = 0; i < v.witness.size(); ++i) w.push_back(integer_json(v.witness(i)));
    o.json["inexact_node"] = r.nodes[v.node].label;
    o.json["witness"] = w;
    o.json["defect"] = v.defect;
    o.text << "inexact at " << r.nodes[v.node].label << ": " << v.defect << "\n";
    o.code = exit_code::negative;
  } else {
    o.text << "exact\n";
  }
  warnings_out(o, r.warnings);
}

void cmd_check(Output& o, const std::filesystem::path& file, const CommandOptions& opt) {
  if (opt.st_class < 0 || opt.st_class > 3) throw ValidationError("class must be st0 .. st3");
  const LoadedMorphism m = load_morphism_file(file);
  const StClassVerdict v = check_st(m.morphism, opt.st_class, opt.mode);
  Json conditions = Json::array();
  o.text << v.label << ": " << (v.member ? "member" : "not a member") << "\n";
  for (const auto& c : v.conditions) {
    conditions.push_back({{"name", c.name}, {"holds", c.holds}, {"details", string_list(c.details)}});
    o.text << "  " << c.name << ": " << (c.holds ? "holds" : "fails");
    for (const auto& d : c.details) o.text << " " << d;
    o.text << "\n";
  }
  o.json["class"] = v.label;
  o.json["member"] = v.member;
  o.json["conditions"] = conditions;
  o.json["note"] = v.semi_decision_note;
  if (!v.semi_decision_note.empty()) o.text << "note: " << v.semi_decision_note << "\n";
  warnings_out(o, v.warnings);
  if (!v.member) o.code = exit_code::negative;
}

void cmd_essential(Output& o, const std::filesystem::path& file, const CommandOptions& opt) {
  const LoadedFlow loaded = load_flow_file(file);
  const Flow& x = *loaded.flow;
  const auto subsets = essential_subsets(x, opt.mode);
  Json list = Json::array();
  for (const auto& a : subsets) {
    bool minimal = true;
    for (const auto& b : subsets)
      if (b.size() < a.size() && std::includes(a.begin(), a.end(), b.begin(), b.end())) minimal = false;
    list.push_back({{"states", subset_name(x, a)}, {"minimal", minimal}});
    o.text << subset_name(x, a) << (minimal ? "  minimal" : "") << "\n";
  }
  o.json["essential"] = list;
}

}  // namespace

CommandResult run_command(const std::string& verb, const std::filesystem::path& file,
                          const CommandOptions& options) {
  Output o;
  o.json["command"] = verb;
  o.json["format_version"] = format_version;
  try {
    if (verb == "validate") cmd_validate(o, file);
    else if (verb == "branch") cmd_germs(o, file, Side::minus, options);
    else if (verb == "merge") cmd_germs(o, file, Side::plus, options);
    else if (verb == "homology") cmd_homology(o, file, options);
    else if (verb == "les") cmd_les(o, file, options);
    else if (verb == "check") cmd_check(o, file, options);
    else if (verb == "essential") cmd_essential(o, file, options);
    else throw std::invalid_argument("unknown command '" + verb + "'");
  } catch (const Error& e) {
    std::string type = "validation";
    o.code = exit_code::validation;
    if (dynamic_cast<const ParseError*>(&e)) {
      type = "parse";
      o.code = exit_code::parse;
    } else if (dynamic_cast<const CofibrancyError*>(&e)) {
      type = "cofibrancy";
    } else if (dynamic_cast<const SizeGuardError*>(&e)) {
      type = "size_guard";
      o.code = exit_code::size_guard;
    }
    Json out = {{"command", verb}, {"format_version", format_version},
                {"error", {{"type", type}, {"message", e.what()}}}};
    return {out, "error (" + type + "): " + e.what() + "\n", o.code};
  } catch (const Json::exception& e) {
    Json out = {{"command", verb}, {"format_version", format_version},
                {"error", {{"type", "parse"}, {"message", e.what()}}}};
    return {out, std::string("error (parse): ") + e.what() + "\n", exit_code::parse};
  }
  o.json["exit_code"] = o.code;
  return {o.json, o.text.str(), o.code};
}

}  // namespace dflow
