#include "dflow/document.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace dflow {

namespace {

const Json& field(const Json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError("missing field '" + key + "'");
  return j.at(key);
}

std::string text(const Json& j, const std::string& what) {
  if (!j.is_string()) throw ParseError(what + " must be a string");
  return j.get<std::string>();
}

int integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
  return j.get<int>();
}

const Json& array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array");
  return j;
}

void check_version(const Json& doc) {
  if (doc.contains("format_version") && integer(doc.at("format_version"), "format_version") != format_version)
    throw ParseError("unsupported format_version");
}

// Sorted, duplicate-free state names and their lookup.
struct StateNames {
  std::vector<std::string> names;
  std::map<std::string, int> index;

  explicit StateNames(const Json& list) {
    for (const auto& s : array(list, "states")) names.push_back(text(s, "state name"));
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end())
      throw ValidationError("duplicate state names");
    for (int i = 0; i < static_cast<int>(names.size()); ++i) index[names[i]] = i;
  }
  int operator()(const Json& j) const {
    const auto name = text(j, "state reference");
    auto it = index.find(name);
    if (it == index.end()) throw ValidationError("unknown state name '" + name + "'");
    return it->second;
  }
};

Simplex checked_simplex(const std::string& s, const FiniteSimplicialSet& set) {
  const Simplex x = parse_simplex(s);
  if (x.base_dim > set.dimension() || x.index >= set.count(x.base_dim))
    throw ValidationError("simplex " + s + " does not exist");
  return x;
}

std::vector<std::vector<Simplex>> parse_assignment(const Json& per_dim, const FiniteSimplicialSet& source,
                                                   const FiniteSimplicialSet& target) {
  std::vector<std::vector<Simplex>> a(source.dimension() + 1);
  array(per_dim, "map");
  if (static_cast<int>(per_dim.size()) != source.dimension() + 1)
    throw ParseError("map needs one list per dimension of the source");
  for (int k = 0; k <= source.dimension(); ++k) {
    const auto& row = array(per_dim[k], "map entry");
    if (static_cast<int>(row.size()) != source.count(k))
      throw ParseError("map needs one image per simplex in dimension " + std::to_string(k));
    for (const auto& s : row) {
      const Simplex x = checked_simplex(text(s, "simplex"), target);
      if (x.dim() != k) throw ValidationError("image of a " + std::to_string(k) + "-simplex has the wrong dimension");
      a[k].push_back(x);
    }
  }
  return a;
}

// A per-dimension map, or a single vertex for a one-point source.
SimplicialMap parse_map(const Json& j, const SimplicialSetPtr& source, const SimplicialSetPtr& target) {
  if (j.is_string()) {
    if (source->total() != 1) throw ParseError("a single image needs a one-point source");
    return SimplicialMap(source, target, {{checked_simplex(j.get<std::string>(), *target)}});
  }
  return SimplicialMap(source, target, parse_assignment(j, *source, *target));
}

std::string pair_name(const Flow& x, int a, int b) { return x.states()[a] + "->" + x.states()[b]; }

SimplicialMap image_map(const Json& given, const SimplicialSetPtr& k, const LoadedFlow& target,
                        int fa, int fb) {
  const Flow& y = *target.flow;
  if (!y.has_paths(fa, fb))
    throw ValidationError("target has no paths " + pair_name(y, fa, fb));
  const auto space = y.path_space(fa, fb);
  if (given.is_string()) return parse_map(given, k, space);
  if (given.is_object() && given.contains("map")) return parse_map(given.at("map"), k, space);
  if (!given.is_object() || !given.contains("edges"))
    throw ParseError("a path image needs 'map' or 'edges'");
  const FreeStructure* fs = y.free_structure();
  if (!fs) throw ValidationError("edge images need a free target");
  std::vector<int> edges;
  for (const auto& e : array(given.at("edges"), "edges")) {
    auto it = target.edges.find(text(e, "edge name"));
    if (it == target.edges.end()) throw ValidationError("unknown edge '" + e.get<std::string>() + "'");
    edges.push_back(it->second);
  }
  const auto& summands = fs->summands.at({fa, fb});
  int part = -1;
  for (int p = 0; p < static_cast<int>(summands.size()); ++p)
    if (summands[p].edges == edges) part = p;
  if (part < 0) throw ValidationError("edges do not form a path " + pair_name(y, fa, fb));
  const auto& maps = array(field(given, "maps"), "maps");
  if (maps.size() != edges.size()) throw ParseError("need one map per edge");
  std::vector<SimplicialMap> pieces;
  for (std::size_t j = 0; j < edges.size(); ++j)
    pieces.push_back(parse_map(maps[j], k, fs->graph.edges[edges[j]].label));
  const auto& product = *summands[part].product;
  const auto& u = fs->unions.at({fa, fb});
  std::vector<std::vector<Simplex>> a(k->dimension() + 1);
  for (int d = 0; d <= k->dimension(); ++d)
    for (int i = 0; i < k->count(d); ++i) {
      std::vector<Simplex> comps;
      for (const auto& m : pieces) comps.push_back(m(nondegenerate(d, i)));
      a[d].push_back(u.include(part, product.locate(comps)));
    }
  return SimplicialMap(k, space, std::move(a));
}

LoadedFlow load_flow_inner(const Json& doc) {
  check_version(doc);
  LoadedFlow out;
  out.kind = text(field(doc, "kind"), "kind");
  if (out.kind == "cube") {
    out.flow = share(cube_flow(integer(field(doc, "dimension"), "dimension")));
  } else if (out.kind == "glob") {
    std::vector<std::string> names{"0", "1"};
    if (doc.contains("states")) {
      names.clear();
      for (const auto& s : array(doc.at("states"), "states")) names.push_back(text(s, "state name"));
      if (names.size() != 2) throw ValidationError("a globe has two states");
    }
    FlowBuilder b(names);
    b.set_paths(0, 1, share(parse_simplicial_set(field(doc, "label")))).set_cofibrant(true);
    out.flow = share(b.build());
  } else if (out.kind == "poset") {
    const StateNames states(field(doc, "states"));
    const int n = static_cast<int>(states.names.size());
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) le[i][i] = true;
    for (const auto& r : array(field(doc, "relations"), "relations")) {
      if (!r.is_array() || r.size() != 2) throw ParseError("a relation is a pair of states");
      le[states(r[0])][states(r[1])] = true;
    }
    for (int m = 0; m < n; ++m)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (le[i][m] && le[m][j]) le[i][j] = true;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (le[i][j] && le[j][i])
          throw ValidationError("relations contain a cycle through " + states.names[i] + " and " +
                                states.names[j]);
    out.flow = share(poset_flow({n, [le](int a, int b) { return static_cast<bool>(le[a][b]); }},
                                states.names));
  } else if (out.kind == "free") {
    const StateNames states(field(doc, "states"));
    std::map<std::string, SimplicialSetPtr> labels;
    if (doc.contains("labels")) {
      if (!doc.at("labels").is_object()) throw ParseError("labels must be an object");
      for (const auto& [name, def] : doc.at("labels").items())
        labels[name] = share(parse_simplicial_set(def));
    }
    LabeledDigraph g;
    g.vertices = states.names;
    for (const auto& e : array(field(doc, "edges"), "edges")) {
      LabeledEdge edge;
      edge.name = text(field(e, "name"), "edge name");
      if (out.edges.count(edge.name)) throw ValidationError("duplicate edge name '" + edge.name + "'");
      edge.from = states(field(e, "from"));
      edge.to = states(field(e, "to"));
      const Json& label = field(e, "label");
      if (label.is_string()) {
        auto it = labels.find(label.get<std::string>());
        if (it == labels.end()) throw ValidationError("unknown label '" + label.get<std::string>() + "'");
        edge.label = it->second;
      } else {
        edge.label = share(parse_simplicial_set(label));
      }
      out.edges[edge.name] = static_cast<int>(g.edges.size());
      g.edges.push_back(std::move(edge));
    }
    out.flow = share(free_flow(g));
  } else if (out.kind == "presented_discrete") {
    const StateNames states(field(doc, "states"));
    std::vector<PresentedPath> paths;
    std::map<std::string, int> by_name;
    for (const auto& p : array(field(doc, "paths"), "paths")) {
      PresentedPath path{text(field(p, "name"), "path name"), states(field(p, "from")),
                         states(field(p, "to"))};
      if (by_name.count(path.name)) throw ValidationError("duplicate path name '" + path.name + "'");
      by_name[path.name] = static_cast<int>(paths.size());
      paths.push_back(path);
    }
    auto path_ref = [&](const Json& j) {
      auto it = by_name.find(text(j, "path reference"));
      if (it == by_name.end()) throw ValidationError("unknown path '" + j.get<std::string>() + "'");
      return it->second;
    };
    std::map<std::pair<int, int>, int> table;
    if (doc.contains("compose"))
      for (const auto& c : array(doc.at("compose"), "compose")) {
        if (!c.is_array() || c.size() != 3) throw ParseError("a composition entry is [p, q, p*q]");
        const int p = path_ref(c[0]), q = path_ref(c[1]), r = path_ref(c[2]);
        if (paths[p].to != paths[q].from)
          throw ValidationError("paths '" + paths[p].name + "' and '" + paths[q].name + "' do not compose");
        if (!table.emplace(std::make_pair(p, q), r).second)
          throw ValidationError("composition of '" + paths[p].name + "' and '" + paths[q].name + "' given twice");
      }
    std::map<std::pair<int, int>, int> slots;
    for (const auto& p : paths)
      out.paths[p.name] = {p.from, p.to, slots[{p.from, p.to}]++};
    out.flow = share(presented_discrete_flow(states.names, paths, table));
  } else {
    throw ParseError("unknown kind '" + out.kind + "'");
  }
  return out;
}

LoadedFlow resolve_flow(const Json& j, const std::filesystem::path& base) {
  if (j.is_object() && j.contains("path") && !j.contains("kind"))
    return load_flow_file(base / text(j.at("path"), "path"));
  return load_flow(j);
}

LoadedMorphism load_morphism_inner(const Json& doc, const std::filesystem::path& base) {
  check_version(doc);
  LoadedMorphism m;
  m.source = resolve_flow(field(doc, "source"), base);
  if (doc.contains("mutate_les"))
    m.zero_map = integer(field(doc.at("mutate_les"), "zero_map"), "zero_map");
  if (doc.value("identity", false)) {
    m.target = doc.contains("target") ? resolve_flow(doc.at("target"), base) : m.source;
    m.morphism = FlowMorphism::identity(m.source.flow);
    m.morphism.target = m.target.flow;
  } else {
    m.target = resolve_flow(field(doc, "target"), base);
    const Flow& x = *m.source.flow;
    const Flow& y = *m.target.flow;
    const Json& sm = field(doc, "state_map");
    if (!sm.is_object()) throw ParseError("state_map must be an object");
    std::vector<int> states;
    for (const auto& name : x.states()) {
      if (!sm.contains(name)) throw ValidationError("state_map misses state '" + name + "'");
      states.push_back(y.state_index(text(sm.at(name), "state name")));
    }
    const Json empty = Json::object();
    const Json& pm = doc.contains("path_map") ? doc.at("path_map") : empty;
    if (!pm.is_object()) throw ParseError("path_map must be an object");
    auto entry = [&](const std::string& key) -> const Json& {
      if (!pm.contains(key)) throw ValidationError("path_map misses '" + key + "'");
      return pm.at(key);
    };
    const std::string& kind = m.source.kind;
    if (kind == "free") {
      const auto& g = x.free_structure()->graph;
      std::vector<SimplicialMap> edge_maps;
      for (const auto& e : g.edges)
        edge_maps.push_back(image_map(entry(e.name), e.label, m.target, states[e.from], states[e.to]));
      m.morphism = extend_free_morphism(m.source.flow, m.target.flow, states, edge_maps);
    } else if (kind == "glob") {
      FlowMorphism f{m.source.flow, m.target.flow, states, {}};
      if (x.has_paths(0, 1))
        f.path_maps.emplace(StatePair{0, 1}, image_map(entry("path"), x.path_space(0, 1), m.target,
                                                       states[0], states[1]));
      m.morphism = f;
    } else if (kind == "poset" || kind == "presented_discrete") {
      const auto pt = share(point());
      std::map<std::tuple<int, int, int>, Simplex> images;
      for (const auto& [key, given] : pm.items()) {
        std::tuple<int, int, int> where;
        if (kind == "poset") {
          const auto arrow = key.find("->");
          if (arrow == std::string::npos) throw ParseError("poset path keys read 'a->b'");
          where = {x.state_index(key.substr(0, arrow)), x.state_index(key.substr(arrow + 2)), 0};
        } else {
          auto it = m.source.paths.find(key);
          if (it == m.source.paths.end()) throw ValidationError("unknown path '" + key + "'");
          where = it->second;
        }
        const auto [a, b, v] = where;
        if (!x.has_paths(a, b)) throw ValidationError("no path " + key + " in the source");
        images[where] = image_map(given, pt, m.target, states[a], states[b]).image(0, 0);
      }
      m.morphism = extend_discrete_morphism(m.source.flow, m.target.flow, states, images);
    } else {
      throw ParseError("morphisms out of " + kind + " documents must be identities");
    }
  }
  const auto problems = m.morphism.check();
  if (!problems.empty()) {
    std::string all = "not a morphism of flows:";
    for (const auto& p : problems) all += "\n  " + p;
    throw ValidationError(all);
  }
  return m;
}

// At most one path between two states and none from a state to itself.
bool is_poset_shaped(const Flow& x) {
  for (const auto& [pair, space] : x.path_spaces())
    if (pair.first == pair.second || space->vertex_count() != 1) return false;
  return true;
}

}  // namespace

Json read_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot read " + file.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(file.string() + ": " + e.what());
  }
}

Simplex parse_simplex(const std::string& s) {
  static const std::regex form(R"(\s*(\d+)\.(\d+)(?:\[([\d ]*)\])?\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, form)) throw ParseError("malformed simplex '" + s + "'");
  Simplex x = nondegenerate(std::stoi(m[1]), std::stoi(m[2]));
  if (m[3].matched) {
    std::istringstream values(m[3].str());
    Degeneracy d;
    for (int v; values >> v;) d.push_back(v);
    bool ok = !d.empty() && d.front() == 0 && d.back() == x.base_dim;
    for (std::size_t i = 1; ok && i < d.size(); ++i) ok = d[i] == d[i - 1] || d[i] == d[i - 1] + 1;
    if (!ok) throw ParseError("malformed degeneracy in '" + s + "'");
    x.degeneracy = d;
  }
  return x;
}

FiniteSimplicialSet parse_simplicial_set(const Json& j) {
  try {
    if (!j.is_object()) throw ParseError("a simplicial set is an object");
    if (j.contains("builtin")) {
      const auto kind = text(j.at("builtin"), "builtin");
      const int n = j.contains("n") ? integer(j.at("n"), "n") : 0;
      if (n < 0 || n > 8) throw ValidationError("builtin size out of range");
      if (kind == "point") return point();
      if (kind == "empty") return empty_set();
      if (kind == "simplex") return standard_simplex(n);
      if (kind == "discrete") return discrete(n);
      if (kind == "boundary") {
        if (n < 1) throw ValidationError("boundary needs n >= 1");
        return boundary_simplex(n);
      }
      throw ParseError("unknown builtin '" + kind + "'");
    }
    FiniteSimplicialSet s;
    const int v = integer(field(j, "vertices"), "vertices");
    for (int i = 0; i < v; ++i) s.add_vertex();
    if (j.contains("simplices")) {
      int dim = 0;
      for (const auto& level : array(j.at("simplices"), "simplices")) {
        ++dim;
        for (const auto& faces : array(level, "simplex list")) {
          if (!faces.is_array() || static_cast<int>(faces.size()) != dim + 1)
            throw ParseError("a " + std::to_string(dim) + "-simplex has " + std::to_string(dim + 1) + " faces");
          std::vector<Simplex> fs;
          for (const auto& f : faces) {
            const Simplex x = parse_simplex(text(f, "face"));
            if (x.dim() != dim - 1 || x.base_dim > s.dimension() || x.index >= s.count(x.base_dim))
              throw ValidationError("face " + f.get<std::string>() + " does not exist");
            fs.push_back(x);
          }
          s.add_simplex(std::move(fs));
        }
      }
    }
    const auto problems = s.check();
    if (!problems.empty()) throw ValidationError("not a simplicial set: " + problems.front());
    return s;
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

Json export_simplicial_set(const FiniteSimplicialSet& s) {
  Json j;
  j["vertices"] = s.vertex_count();
  Json levels = Json::array();
  for (int k = 1; k <= s.dimension(); ++k) {
    Json level = Json::array();
    for (int i = 0; i < s.count(k); ++i) {
      Json faces = Json::array();
      for (const auto& f : s.faces(k, i)) faces.push_back(to_string(f));
      level.push_back(faces);
    }
    levels.push_back(level);
  }
  j["simplices"] = levels;
  return j;
}

LoadedFlow load_flow(const Json& doc) {
  try {
    return load_flow_inner(doc);
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

LoadedFlow load_flow_file(const std::filesystem::path& file) { return load_flow(read_json(file)); }

LoadedMorphism load_morphism(const Json& doc, const std::filesystem::path& base) {
  try {
    return load_morphism_inner(doc, base);
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

LoadedMorphism load_morphism_file(const std::filesystem::path& file) {
  return load_morphism(read_json(file), file.parent_path());
}

Json export_flow(const Flow& x) {
  Json doc;
  doc["format_version"] = format_version;
  Json states = Json::array();
  for (const auto& s : x.states()) states.push_back(s);
  bool discrete = true;
  for (const auto& [pair, space] : x.path_spaces()) discrete = discrete && space->dimension() <= 0;

  if (const FreeStructure* fs = x.free_structure()) {
    doc["kind"] = "free";
    doc["states"] = states;
    Json labels = Json::object(), edges = Json::array();
    for (std::size_t e = 0; e < fs->graph.edges.size(); ++e) {
      const auto& edge = fs->graph.edges[e];
      const std::string label = "l" + std::to_string(e);
      labels[label] = export_simplicial_set(*edge.label);
      edges.push_back({{"name", edge.name}, {"from", x.states()[edge.from]},
                       {"to", x.states()[edge.to]}, {"label", label}});
    }
    doc["labels"] = labels;
    doc["edges"] = edges;
  } else if (x.state_count() == 2 && x.compositions().empty() && !x.has_paths(1, 0) &&
             !x.has_paths(0, 0) && !x.has_paths(1, 1) && x.cofibrant()) {
    doc["kind"] = "glob";
    doc["states"] = states;
    doc["label"] = export_simplicial_set(*x.path_space(0, 1));
  } else if (discrete && x.cofibrant() && is_poset_shaped(x)) {
    doc["kind"] = "poset";
    doc["states"] = states;
    Json relations = Json::array();
    for (const auto& [pair, space] : x.path_spaces())
      relations.push_back({x.states()[pair.first], x.states()[pair.second]});
    doc["relations"] = relations;
  } else if (discrete) {
    doc["kind"] = "presented_discrete";
    doc["states"] = states;
    auto name = [&](int a, int b, int v) {
      return "p" + std::to_string(a) + "_" + std::to_string(b) + "_" + std::to_string(v);
    };
    Json paths = Json::array(), table = Json::array();
    for (const auto& [pair, space] : x.path_spaces())
      for (int v = 0; v < space->vertex_count(); ++v)
        paths.push_back({{"name", name(pair.first, pair.second, v)},
                         {"from", x.states()[pair.first]}, {"to", x.states()[pair.second]}});
    for (const auto& [abc, comp] : x.compositions()) {
      const auto [a, b, c] = abc;
      for (int j = 0; j < comp.domain->set()->vertex_count(); ++j) {
        const auto s = comp.domain->components(nondegenerate(0, j));
        table.push_back({name(a, b, s[0].index), name(b, c, s[1].index),
                         name(a, c, comp.map.image(0, j).index)});
      }
    }
    doc["paths"] = paths;
    doc["compose"] = table;
  } else {
    int n = 0;
    while ((1 << n) < x.state_count()) ++n;
    if (n < 1 || n > 4 || (1 << n) != x.state_count())
      throw std::invalid_argument("flow has no document form");
    const Flow cube = cube_flow(n);
    bool same = cube.states() == x.states() && cube.path_spaces().size() == x.path_spaces().size();
    for (const auto& [pair, space] : cube.path_spaces())
      same = same && x.has_paths(pair.first, pair.second) && *x.path_space(pair.first, pair.second) == *space;
    if (!same) throw std::invalid_argument("flow has no document form");
    doc["kind"] = "cube";
    doc["dimension"] = n;
  }
  return doc;
}

}  // namespace dflow
