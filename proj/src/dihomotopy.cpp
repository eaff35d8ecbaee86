#include "dflow/dihomotopy.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dflow {

namespace {

const char* const semi_decision =
    "weak equivalences and weak contractibility are checked through integral homology "
    "(necessary conditions)";

void check_states(const Flow& x, const std::vector<int>& states) {
  for (int s : states)
    if (s < 0 || s >= x.state_count()) throw ValidationError("unknown state");
}

std::vector<int> all_states(const Flow& x) {
  std::vector<int> out(x.state_count());
  for (int i = 0; i < x.state_count(); ++i) out[i] = i;
  return out;
}

std::vector<int> from_mask(unsigned mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1u) out.push_back(i);
  return out;
}

std::string subset_name(const Flow& x, const std::vector<int>& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + x.states()[a[i]];
  return out + "}";
}

// Whether the induced map is an isomorphism on H_n.
bool homology_iso(const SimplicialMap& m, int n) {
  const auto a = homology_basis(normalized_chains(*m.source()), n);
  const auto b = homology_basis(normalized_chains(*m.target()), n);
  if (a.group != b.group) return false;
  if (a.orders.empty()) return true;
  LesReport r;
  r.nodes = {{"", a.group, a.orders}, {"", b.group, b.orders}};
  r.maps = {induced_matrix(a, b, chain_map_matrix(m, n))};
  return verify_exactness(r).exact;
}

// Germ space at each state passes the requested test, for both sides.
std::vector<bool> trivial_germs(const Flow& y, int level, CofibrancyMode mode,
                                std::vector<std::string>* warnings) {
  std::vector<bool> ok(y.state_count(), true);
  for (Side side : {Side::minus, Side::plus}) {
    const GermSpace g = level >= 2 ? homotopy_germ_space(y, side, mode) : germ_space(y, side);
    if (warnings)
      for (const auto& w : g.warnings) warnings->push_back(w);
    for (int s = 0; s < y.state_count(); ++s) {
      if (!ok[s]) continue;
      const auto component = germ_component(g, s).set;
      ok[s] = level == 0 ? component->total() == 1 : is_homology_point(*component);
    }
  }
  return ok;
}

bool essential_with(const Flow& x, const std::vector<int>& a, const std::vector<bool>& trivial) {
  if (!surrounded(x, all_states(x), a)) return false;
  for (int s = 0; s < x.state_count(); ++s)
    if (!trivial[s] && !std::binary_search(a.begin(), a.end(), s)) return false;
  return true;
}

void finish(StClassVerdict& v) {
  v.member = std::all_of(v.conditions.begin(), v.conditions.end(),
                         [](const Condition& c) { return c.holds; });
  v.semi_decision_note = semi_decision;
}

}  // namespace

bool surrounded(const Flow& x, const std::vector<int>& a, const std::vector<int>& b) {
  check_states(x, a);
  check_states(x, b);
  const std::set<int> in_b(b.begin(), b.end());
  for (int s : a) {
    if (in_b.count(s)) continue;
    bool from = false, to = false;
    for (int t : b) {
      from = from || x.has_paths(t, s);
      to = to || x.has_paths(s, t);
    }
    if (!from || !to) return false;
  }
  return true;
}

SEquivalenceVerdict is_homology_s_equivalence(const FlowMorphism& f) {
  SEquivalenceVerdict v;
  const Flow& x = *f.source;
  const Flow& y = *f.target;
  std::set<int> image(f.state_map.begin(), f.state_map.end());
  if (static_cast<int>(image.size()) != x.state_count() || x.state_count() != y.state_count()) {
    v.holds = false;
    v.failures.push_back("not a bijection on states");
    return v;
  }
  std::vector<int> back(y.state_count());
  for (int s = 0; s < x.state_count(); ++s) back[f.state_map[s]] = s;
  for (const auto& [pair, space] : y.path_spaces())
    if (!x.has_paths(back[pair.first], back[pair.second]))
      v.failures.push_back("no paths in the source over P(" + y.states()[pair.first] + "," +
                           y.states()[pair.second] + ")");
  for (const auto& [pair, map] : f.path_maps) {
    const int top = std::max(map.source()->dimension(), map.target()->dimension());
    for (int n = 0; n <= top; ++n)
      if (!homology_iso(map, n)) {
        v.failures.push_back("P(" + x.states()[pair.first] + "," + x.states()[pair.second] +
                             ") is not a homology isomorphism in degree " + std::to_string(n));
        break;
      }
  }
  v.holds = v.failures.empty();
  return v;
}

StClassVerdict check_st(const FlowMorphism& f, int level, CofibrancyMode mode) {
  if (level == 3) return check_st3(f, mode);
  if (level < 0 || level > 3) throw std::invalid_argument("class level must lie in [0, 3]");
  StClassVerdict v;
  v.label = "ST" + std::to_string(level);
  const Flow& x = *f.source;
  const Flow& y = *f.target;

  Condition equivalence{"restriction-equivalence", true, {}};
  const std::set<int> image(f.state_map.begin(), f.state_map.end());
  if (static_cast<int>(image.size()) != x.state_count()) {
    equivalence.holds = false;
    equivalence.details.push_back("not injective on states");
  } else {
    const auto s = is_homology_s_equivalence(restrict_morphism(f, all_states(x)));
    equivalence.holds = s.holds;
    equivalence.details = s.failures;
  }
  v.conditions.push_back(equivalence);

  Condition germs{"germ-condition", true, {}};
  const auto trivial = trivial_germs(y, level, mode, &v.warnings);
  for (int s = 0; s < y.state_count(); ++s)
    if (!image.count(s) && !trivial[s]) {
      germs.holds = false;
      germs.details.push_back(y.states()[s]);
    }
  v.conditions.push_back(germs);

  Condition around{"surrounded", true, {}};
  const std::vector<int> targets(image.begin(), image.end());
  for (int s = 0; s < y.state_count(); ++s)
    if (!surrounded(y, {s}, targets)) {
      around.holds = false;
      around.details.push_back(y.states()[s]);
    }
  v.conditions.push_back(around);
  finish(v);
  return v;
}

StClassVerdict check_st0(const FlowMorphism& f) { return check_st(f, 0); }
StClassVerdict check_st1(const FlowMorphism& f) { return check_st(f, 1); }
StClassVerdict check_st2(const FlowMorphism& f, CofibrancyMode mode) { return check_st(f, 2, mode); }

bool is_essential(const Flow& x, const std::vector<int>& a, CofibrancyMode mode) {
  check_states(x, a);
  std::vector<int> sorted = a;
  std::sort(sorted.begin(), sorted.end());
  return essential_with(x, sorted, trivial_germs(x, 2, mode, nullptr));
}

std::vector<std::vector<int>> essential_subsets(const Flow& x, CofibrancyMode mode) {
  const int n = x.state_count();
  if (n > essential_size_guard)
    throw SizeGuardError("essential subsets are enumerated for at most " +
                         std::to_string(essential_size_guard) + " states");
  const auto trivial = trivial_germs(x, 2, mode, nullptr);
  std::vector<unsigned> found;
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    // essential sets are closed upward
    const bool above = std::any_of(found.begin(), found.end(),
                                   [mask](unsigned m) { return (m & mask) == m; });
    if (above || essential_with(x, from_mask(mask, n), trivial)) {
      if (!above) found.push_back(mask);
      out.push_back(from_mask(mask, n));
    }
  }
  return out;
}

StClassVerdict check_st3(const FlowMorphism& f, CofibrancyMode mode) {
  const Flow& x = *f.source;
  const Flow& y = *f.target;
  if (x.state_count() > essential_size_guard || y.state_count() > essential_size_guard)
    throw SizeGuardError("ST3 is checked for at most " + std::to_string(essential_size_guard) +
                         " states");
  StClassVerdict v;
  v.label = "ST3";
  const int n = x.state_count();
  const auto trivial_x = trivial_germs(x, 2, mode, &v.warnings);
  const auto trivial_y = trivial_germs(y, 2, mode, &v.warnings);
  std::vector<bool> essential(1u << n);
  Condition correspondence{"essential-correspondence", true, {}};
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const auto a = from_mask(mask, n);
    std::set<int> image;
    for (int s : a) image.insert(f.state_map[s]);
    essential[mask] = essential_with(x, a, trivial_x);
    const bool image_essential = essential_with(y, {image.begin(), image.end()}, trivial_y);
    if (essential[mask] != image_essential) {
      correspondence.holds = false;
      correspondence.details.push_back(subset_name(x, a));
    }
  }
  v.conditions.push_back(correspondence);

  Condition restriction{"essential-restriction", true, {}};
  std::map<unsigned, bool> equivalent;
  auto equivalent_on = [&](unsigned b) {
    auto it = equivalent.find(b);
    if (it != equivalent.end()) return it->second;
    const auto states = from_mask(b, n);
    std::set<int> image;
    for (int s : states) image.insert(f.state_map[s]);
    const bool ok = image.size() == states.size() &&
                    is_homology_s_equivalence(restrict_morphism(f, states)).holds;
    equivalent.emplace(b, ok);
    return ok;
  };
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!essential[mask]) continue;
    bool witnessed = false;
    for (unsigned b = mask;; b = (b - 1) & mask) {
      if (essential[b] && equivalent_on(b)) {
        witnessed = true;
        break;
      }
      if (b == 0) break;
    }
    if (!witnessed) {
      restriction.holds = false;
      restriction.details.push_back(subset_name(x, from_mask(mask, n)));
    }
  }
  v.conditions.push_back(restriction);
  finish(v);
  return v;
}

}  // namespace dflow
