#include "dflow/chains.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dflow/constructions.hpp"

namespace dflow {

std::string AbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << 'Z';
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return os.str();
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  // Re-derive the invariant factors from the diagonal presentation.
  const std::size_t n = a.torsion.size() + b.torsion.size();
  IntegerMatrix m = IntegerMatrix::Zero(n, n);
  std::size_t i = 0;
  for (const auto& t : a.torsion) m(i, i) = t, ++i;
  for (const auto& t : b.torsion) m(i, i) = t, ++i;
  AbelianGroup out;
  out.free_rank = a.free_rank + b.free_rank;
  for (const auto& d : smith_normal_form(m).diagonal())
    if (d > 1) out.torsion.push_back(d);
  return out;
}

ChainComplex::ChainComplex(int lowest_degree, std::vector<int> ranks,
                           std::vector<IntegerMatrix> boundaries)
    : lowest_(lowest_degree), ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
  if (boundaries_.size() != ranks_.size())
    throw std::invalid_argument("one boundary matrix per degree expected");
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    const int below = i == 0 ? 0 : ranks_[i - 1];
    if (boundaries_[i].rows() != below || boundaries_[i].cols() != ranks_[i])
      throw std::invalid_argument("boundary matrix has wrong shape");
  }
}

int ChainComplex::rank(int degree) const {
  const int i = degree - lowest_;
  return i >= 0 && i < static_cast<int>(ranks_.size()) ? ranks_[i] : 0;
}

IntegerMatrix ChainComplex::boundary(int degree) const {
  const int i = degree - lowest_;
  if (i >= 0 && i < static_cast<int>(boundaries_.size())) return boundaries_[i];
  return IntegerMatrix::Zero(rank(degree - 1), rank(degree));
}

std::vector<int> ChainComplex::check() const {
  std::vector<int> bad;
  for (int n = lowest_ + 1; n <= top_degree(); ++n) {
    const IntegerMatrix dd = boundary(n - 1) * boundary(n);
    if (!(dd.array() == Integer(0)).all()) bad.push_back(n);
  }
  return bad;
}

ChainComplex normalized_chains(const FiniteSimplicialSet& s) {
  std::vector<int> ranks;
  std::vector<IntegerMatrix> boundaries;
  for (int k = 0; k <= s.dimension(); ++k) {
    ranks.push_back(s.count(k));
    IntegerMatrix d = IntegerMatrix::Zero(k == 0 ? 0 : s.count(k - 1), s.count(k));
    if (k > 0)
      for (int x = 0; x < s.count(k); ++x)
        for (int i = 0; i <= k; ++i) {
          const Simplex& f = s.faces(k, x)[i];
          if (!f.degenerate()) d(f.index, x) += (i % 2 ? -1 : 1);
        }
    boundaries.push_back(std::move(d));
  }
  return ChainComplex(0, std::move(ranks), std::move(boundaries));
}

IntegerMatrix chain_map_matrix(const SimplicialMap& f, int degree) {
  IntegerMatrix m = IntegerMatrix::Zero(f.target()->count(degree), f.source()->count(degree));
  for (int x = 0; x < f.source()->count(degree); ++x) {
    const Simplex& img = f.image(degree, x);
    if (!img.degenerate()) m(img.index, x) += 1;
  }
  return m;
}

namespace {

IntegerMatrix drop_row(const IntegerMatrix& m, int row) {
  IntegerMatrix out(m.rows() - 1, m.cols());
  out.topRows(row) = m.topRows(row);
  out.bottomRows(m.rows() - row - 1) = m.bottomRows(m.rows() - row - 1);
  return out;
}

IntegerMatrix drop_col(const IntegerMatrix& m, int col) {
  IntegerMatrix out(m.rows(), m.cols() - 1);
  out.leftCols(col) = m.leftCols(col);
  out.rightCols(m.cols() - col - 1) = m.rightCols(m.cols() - col - 1);
  return out;
}

}  // namespace

ChainComplex drop_basis_element(const ChainComplex& c, int degree, int index) {
  std::vector<int> ranks;
  std::vector<IntegerMatrix> boundaries;
  for (int n = c.lowest_degree(); n <= c.top_degree(); ++n) {
    IntegerMatrix d = c.boundary(n);
    int r = c.rank(n);
    if (n == degree) {
      d = drop_col(d, index);
      --r;
    }
    if (n == degree + 1) d = drop_row(d, index);
    ranks.push_back(r);
    boundaries.push_back(std::move(d));
  }
  return ChainComplex(c.lowest_degree(), std::move(ranks), std::move(boundaries));
}

ChainComplex augment(const ChainComplex& c, int rank, const IntegerMatrix& augmentation) {
  std::vector<int> ranks{rank};
  std::vector<IntegerMatrix> boundaries{IntegerMatrix::Zero(0, rank)};
  for (int n = c.lowest_degree(); n <= c.top_degree(); ++n) {
    ranks.push_back(c.rank(n));
    boundaries.push_back(n == c.lowest_degree() ? augmentation : c.boundary(n));
  }
  if (c.top_degree() < c.lowest_degree()) {
    ranks.push_back(0);
    boundaries.push_back(IntegerMatrix::Zero(rank, 0));
  }
  return ChainComplex(c.lowest_degree() - 1, std::move(ranks), std::move(boundaries));
}

IntegerVector HomologyBasis::coordinates(const IntegerVector& cycle) const {
  const IntegerSolver<Integer> solver(cycle_basis);
  const auto w = solver.solve(cycle);
  if (!w) throw std::invalid_argument("vector is not a cycle");
  const IntegerVector y = to_smith * *w;
  IntegerVector out(kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j) {
    Integer v = y(kept[j]);
    if (orders[j] != 0) {
      v %= orders[j];
      if (v < 0) v += orders[j];
    }
    out(j) = v;
  }
  return out;
}

HomologyBasis homology_basis(const ChainComplex& c, int degree) {
  HomologyBasis h;
  h.chain_rank = c.rank(degree);
  const int n = h.chain_rank;
  if (n == 0) {
    h.generators = IntegerMatrix::Zero(0, 0);
    h.cycle_basis = IntegerMatrix::Zero(0, 0);
    h.to_smith = IntegerMatrix::Zero(0, 0);
    return h;
  }
  h.cycle_basis = kernel_basis<Integer>(c.boundary(degree));
  const Eigen::Index z = h.cycle_basis.cols();
  // boundaries expressed in cycle coordinates
  const IntegerMatrix up = c.boundary(degree + 1);
  IntegerMatrix bz(z, up.cols());
  {
    const IntegerSolver<Integer> solver(h.cycle_basis);
    for (Eigen::Index j = 0; j < up.cols(); ++j) {
      const auto w = solver.solve(up.col(j));
      if (!w) throw std::logic_error("boundary is not a cycle");
      bz.col(j) = *w;
    }
  }
  const auto s = smith_normal_form(bz);
  h.to_smith = s.u;
  std::vector<Eigen::Index> free_slots, torsion_slots;
  for (Eigen::Index i = 0; i < z; ++i) {
    if (i >= s.rank)
      free_slots.push_back(i);
    else if (s.d(i, i) > 1)
      torsion_slots.push_back(i);
  }
  const IntegerMatrix reps = h.cycle_basis * s.u_inverse;
  h.generators.resize(n, free_slots.size() + torsion_slots.size());
  Eigen::Index col = 0;
  for (auto i : free_slots) {
    h.kept.push_back(i);
    h.orders.push_back(0);
    h.generators.col(col++) = reps.col(i);
  }
  for (auto i : torsion_slots) {
    h.kept.push_back(i);
    h.orders.push_back(s.d(i, i));
    h.generators.col(col++) = reps.col(i);
    h.group.torsion.push_back(s.d(i, i));
  }
  h.group.free_rank = static_cast<int>(free_slots.size());
  return h;
}

AbelianGroup homology(const ChainComplex& c, int degree) {
  return homology_basis(c, degree).group;
}

AbelianGroup homology(const FiniteSimplicialSet& s, int degree) {
  return homology(normalized_chains(s), degree);
}

AbelianGroup reduced_homology(const FiniteSimplicialSet& s, int degree) {
  if (s.empty()) return homology(s, degree);
  return homology(drop_basis_element(normalized_chains(s), 0, 0), degree);
}

IntegerMatrix induced_matrix(const HomologyBasis& from, const HomologyBasis& to,
                             const IntegerMatrix& chain_map) {
  IntegerMatrix m(to.orders.size(), from.orders.size());
  for (Eigen::Index j = 0; j < from.generators.cols(); ++j)
    m.col(j) = to.coordinates(chain_map * from.generators.col(j));
  return m;
}

IntegerMatrix induced_map(const SimplicialMap& f, int degree) {
  const auto from = homology_basis(normalized_chains(*f.source()), degree);
  const auto to = homology_basis(normalized_chains(*f.target()), degree);
  if (from.orders.empty() || to.orders.empty())
    return IntegerMatrix::Zero(to.orders.size(), from.orders.size());
  return induced_matrix(from, to, chain_map_matrix(f, degree));
}

bool is_homology_point(const FiniteSimplicialSet& s) {
  if (s.empty() || pi0(s).size() != 1) return false;
  const ChainComplex c = drop_basis_element(normalized_chains(s), 0, 0);
  for (int n = 0; n <= s.dimension(); ++n)
    if (!homology(c, n).trivial()) return false;
  return true;
}

}  // namespace dflow
