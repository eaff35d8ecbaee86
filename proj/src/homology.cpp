#include "dflow/homology.hpp"

#include <algorithm>
#include <set>

namespace dflow {

namespace {

IntegerMatrix induced(const HomologyBasis& from, const HomologyBasis& to, const IntegerMatrix& chain) {
  if (from.orders.empty() || to.orders.empty())
    return IntegerMatrix::Zero(static_cast<Eigen::Index>(to.orders.size()),
                               static_cast<Eigen::Index>(from.orders.size()));
  return induced_matrix(from, to, chain);
}

SequenceNode node(std::string label, const HomologyBasis& h) {
  return {std::move(label), h.group, h.orders};
}

IntegerMatrix relations(const std::vector<Integer>& orders) {
  std::vector<Eigen::Index> torsion;
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] != 0) torsion.push_back(static_cast<Eigen::Index>(i));
  IntegerMatrix r = IntegerMatrix::Zero(static_cast<Eigen::Index>(orders.size()),
                                        static_cast<Eigen::Index>(torsion.size()));
  for (std::size_t j = 0; j < torsion.size(); ++j) r(torsion[j], j) = orders[torsion[j]];
  return r;
}

IntegerMatrix without_row(const IntegerMatrix& m, Eigen::Index row) {
  IntegerMatrix out(m.rows() - 1, m.cols());
  for (Eigen::Index i = 0, k = 0; i < m.rows(); ++i)
    if (i != row) out.row(k++) = m.row(i);
  return out;
}

std::string prefix(Side side) { return side == Side::minus ? "-" : "+"; }

}  // namespace

AugmentedComplex augmented_complex(const Flow& x, Side side, CofibrancyMode mode) {
  AugmentedComplex a;
  a.germs = homotopy_germ_space(x, side, mode);
  const auto chains = normalized_chains(*a.germs.total);
  a.augmentation = IntegerMatrix::Zero(x.state_count(), a.germs.total->vertex_count());
  for (int v = 0; v < a.germs.total->vertex_count(); ++v) a.augmentation(a.germs.state_of[v], v) = 1;
  a.complex = augment(chains, x.state_count(), a.augmentation);
  return a;
}

AbelianGroup germ_homology(const Flow& x, Side side, int n, CofibrancyMode mode) {
  if (n < 0) return {};
  return homology(augmented_complex(x, side, mode).complex, n - 1);
}

AbelianGroup branching_homology(const Flow& x, int n, CofibrancyMode mode) {
  return germ_homology(x, Side::minus, n, mode);
}

AbelianGroup merging_homology(const Flow& x, int n, CofibrancyMode mode) {
  return germ_homology(x, Side::plus, n, mode);
}

ExactnessVerdict verify_exactness(const LesReport& r) {
  ExactnessVerdict v;
  const std::size_t count = r.nodes.size();
  for (std::size_t i = 0; i < count; ++i) {
    const auto g = static_cast<Eigen::Index>(r.nodes[i].orders.size());
    const IntegerMatrix here = relations(r.nodes[i].orders);
    const IntegerMatrix in = i == 0 ? IntegerMatrix::Zero(g, 0) : r.maps[i - 1];
    const IntegerMatrix image = hstack(in, here);
    IntegerMatrix kernel;
    if (i + 1 < count) {
      const IntegerMatrix there = relations(r.nodes[i + 1].orders);
      const IntegerMatrix& out = r.maps[i];
      const IntegerMatrix k = kernel_basis<Integer>(IntegerMatrix(hstack(out, IntegerMatrix(-there))));
      kernel = hstack(IntegerMatrix(k.topRows(g)), here);
    } else {
      kernel = IntegerMatrix::Identity(g, g);
    }
    Eigen::Index j = -1;
    std::string defect;
    IntegerVector witness;
    if (!lattice_contains<Integer>(kernel, image, &j)) {
      defect = "composite of consecutive maps is nonzero";
      witness = image.col(j);
    } else if (!lattice_contains<Integer>(image, kernel, &j)) {
      defect = i + 1 < count ? "kernel larger than image" : "final map is not surjective";
      witness = kernel.col(j);
    }
    v.node_exact.push_back(defect.empty());
    if (!defect.empty() && v.exact) {
      v.exact = false;
      v.node = static_cast<int>(i);
      v.witness = witness;
      v.defect = defect;
    }
  }
  return v;
}

ShortExactVerdict short_exact_check(const Flow& x, Side side, CofibrancyMode mode) {
  const auto a = augmented_complex(x, side, mode);
  const auto plain = normalized_chains(*a.germs.total);
  const auto h1 = homology_basis(a.complex, 0);
  const auto h0 = homology_basis(plain, 0);
  std::vector<int> hit;
  for (int s = 0; s < x.state_count(); ++s)
    if ((a.augmentation.row(s).array() != Integer(0)).any()) hit.push_back(s);
  const int rank0 = plain.rank(0);
  LesReport r;
  r.warnings = a.germs.warnings;
  r.nodes.push_back(node("H" + prefix(side) + "_1", h1));
  r.nodes.push_back(node("H_0(hoP" + prefix(side) + ")", h0));
  r.nodes.push_back({"image of the augmentation", AbelianGroup{static_cast<int>(hit.size()), {}},
                     std::vector<Integer>(hit.size(), 0)});
  r.maps.push_back(induced(h1, h0, IntegerMatrix::Identity(rank0, rank0)));
  IntegerMatrix onto(static_cast<Eigen::Index>(hit.size()), h0.generators.cols());
  for (Eigen::Index j = 0; j < h0.generators.cols(); ++j)
    for (std::size_t s = 0; s < hit.size(); ++s)
      onto(s, j) = (a.augmentation.row(hit[s]) * h0.generators.col(j))(0, 0);
  r.maps.push_back(onto);
  ShortExactVerdict out{r, verify_exactness(r)};
  return out;
}

ConeBranchingData cone_branching_data(const FlowMorphism& f, Side side, CofibrancyMode mode) {
  ConeBranchingData d;
  d.source = homotopy_germ_space(*f.source, side, mode);
  d.target = homotopy_germ_space(*f.target, side, mode);
  d.germ_map = germ_map(f, d.source, d.target);
  d.cone = mapping_cone(d.germ_map);
  const Flow& y = *f.target;
  std::set<int> collapsed(f.state_map.begin(), f.state_map.end());
  std::vector<int> class_of(y.state_count());
  std::string merged;
  for (int s = 0; s < y.state_count(); ++s)
    if (!collapsed.count(s)) {
      class_of[s] = static_cast<int>(d.cone_states.size());
      d.cone_states.push_back(y.states()[s]);
    } else {
      merged += (merged.empty() ? "" : ",") + y.states()[s];
    }
  const int apex_class = static_cast<int>(d.cone_states.size());
  d.cone_states.push_back(merged.empty() ? "*" : "[" + merged + "]");
  for (int s : collapsed) class_of[s] = apex_class;
  d.state_of.assign(d.cone.set->vertex_count(), apex_class);
  for (int v = 0; v < d.target.total->vertex_count(); ++v)
    d.state_of[d.cone.target_inclusion.image(0, v).index] = class_of[d.target.state_of[v]];
  return d;
}

LesReport long_exact_sequence(const FlowMorphism& f, Side side, CofibrancyMode mode) {
  const auto d = cone_branching_data(f, side, mode);
  LesReport r;
  r.warnings = d.source.warnings;
  for (const auto& w : d.target.warnings) r.warnings.push_back(w);
  const auto a = normalized_chains(*d.source.total);
  const auto b = normalized_chains(*d.target.total);
  const auto m = drop_basis_element(normalized_chains(*d.cone.set), 0, d.cone.apex);
  const int top = d.cone.set->dimension();

  auto label = [&](int k, const std::string& which) {
    return k >= 1 ? "H" + prefix(side) + "_" + std::to_string(k + 1) + "(" + which + ")"
                  : "H_0(hoP" + prefix(side) + which + ")";
  };
  auto into_cone = [&](int k) {
    IntegerMatrix j = chain_map_matrix(d.cone.target_inclusion, k);
    if (k == 0) j = without_row(j, d.cone.apex);
    return j;
  };
  // D(x * apex) = x
  auto connecting = [&](int k) {
    IntegerMatrix delta = IntegerMatrix::Zero(a.rank(k), m.rank(k + 1));
    for (int x = 0; x < a.rank(k); ++x) delta(x, d.cone.cone_of[k][x].index) = 1;
    return delta;
  };

  std::optional<HomologyBasis> previous_cone;
  for (int k = top; k >= 0; --k) {
    const auto hx = homology_basis(a, k);
    const auto hy = homology_basis(b, k);
    const auto hc = homology_basis(m, k);
    if (previous_cone) r.maps.push_back(induced(*previous_cone, hx, connecting(k)));
    r.nodes.push_back(node(label(k, "X"), hx));
    r.nodes.push_back(node(label(k, "Y"), hy));
    r.nodes.push_back(node(label(k, "Cf"), hc));
    r.maps.push_back(induced(hx, hy, chain_map_matrix(d.germ_map, k)));
    r.maps.push_back(induced(hy, hc, into_cone(k)));
    previous_cone = hc;
  }
  return r;
}

}  // namespace dflow
