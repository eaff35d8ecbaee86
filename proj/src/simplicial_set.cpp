#include "dflow/simplicial_set.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dflow {

Degeneracy identity_degeneracy(int dim) {
  Degeneracy d(dim + 1);
  std::iota(d.begin(), d.end(), 0);
  return d;
}

bool is_identity(const Degeneracy& d) {
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] != static_cast<int>(k)) return false;
  return true;
}

Degeneracy compose(const Degeneracy& outer, const Degeneracy& inner) {
  Degeneracy out(inner.size());
  for (std::size_t k = 0; k < inner.size(); ++k) out[k] = outer[inner[k]];
  return out;
}

Simplex nondegenerate(int dim, int index) {
  return Simplex{dim, index, identity_degeneracy(dim)};
}

Simplex degeneracy_of(const Simplex& s, int i) {
  const int n = s.dim();
  if (i < 0 || i > n) throw std::out_of_range("degeneracy index");
  Simplex out = s;
  out.degeneracy.clear();
  for (int k = 0; k <= n + 1; ++k) out.degeneracy.push_back(s.degeneracy[k <= i ? k : k - 1]);
  return out;
}

std::string to_string(const Simplex& s) {
  std::ostringstream os;
  os << s.base_dim << '.' << s.index;
  if (s.degenerate()) {
    os << '[';
    for (std::size_t k = 0; k < s.degeneracy.size(); ++k)
      os << (k ? " " : "") << s.degeneracy[k];
    os << ']';
  }
  return os.str();
}

int FiniteSimplicialSet::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

long FiniteSimplicialSet::euler_characteristic() const {
  long chi = 0;
  for (int k = 0; k <= dimension(); ++k) chi += (k % 2 ? -1L : 1L) * counts_[k];
  return chi;
}

Simplex FiniteSimplicialSet::face(const Simplex& s, int i) const {
  const int n = s.dim();
  if (n == 0 || i < 0 || i > n) throw std::out_of_range("face index");
  Degeneracy tau;
  tau.reserve(n);
  for (int k = 0; k <= n; ++k)
    if (k != i) tau.push_back(s.degeneracy[k]);
  const int removed = s.degeneracy[i];
  const bool still_onto =
      (i > 0 && s.degeneracy[i - 1] == removed) ||
      (i < n && s.degeneracy[i + 1] == removed);
  if (still_onto) return Simplex{s.base_dim, s.index, std::move(tau)};
  // tau misses `removed`: tau = delta_removed o tau'.
  for (int& v : tau)
    if (v > removed) --v;
  const Simplex& base_face = faces_[s.base_dim][s.index][removed];
  return Simplex{base_face.base_dim, base_face.index, compose(base_face.degeneracy, tau)};
}

int FiniteSimplicialSet::add_vertex() {
  if (counts_.empty()) {
    counts_.push_back(0);
    faces_.emplace_back();
  }
  faces_[0].emplace_back();
  return counts_[0]++;
}

int FiniteSimplicialSet::add_simplex(std::vector<Simplex> faces) {
  const int dim = static_cast<int>(faces.size()) - 1;
  if (dim < 1) throw std::invalid_argument("add_simplex needs at least two faces");
  for (const auto& f : faces) {
    if (f.dim() != dim - 1) throw std::invalid_argument("face of wrong dimension");
    if (f.base_dim > dimension() || f.index < 0 || f.index >= counts_[f.base_dim])
      throw std::invalid_argument("face refers to a missing simplex");
  }
  while (dimension() < dim) {
    counts_.push_back(0);
    faces_.emplace_back();
  }
  faces_[dim].push_back(std::move(faces));
  return counts_[dim]++;
}

std::vector<std::string> FiniteSimplicialSet::check() const {
  std::vector<std::string> problems;
  for (int k = 2; k <= dimension(); ++k) {
    for (int x = 0; x < counts_[k]; ++x) {
      const Simplex s = nondegenerate(k, x);
      for (int j = 1; j <= k; ++j)
        for (int i = 0; i < j; ++i)
          if (face(face(s, j), i) != face(face(s, i), j - 1)) {
            std::ostringstream os;
            os << "simplex " << to_string(s) << " violates d" << i << " d" << j
               << " = d" << j - 1 << " d" << i;
            problems.push_back(os.str());
          }
    }
  }
  return problems;
}

std::string dump(const FiniteSimplicialSet& s) {
  std::ostringstream os;
  for (int k = 0; k <= s.dimension(); ++k) {
    os << "dim " << k << ": " << s.count(k) << '\n';
    if (k == 0) continue;
    for (int x = 0; x < s.count(k); ++x) {
      os << "  " << k << '.' << x << ':';
      for (const auto& f : s.faces(k, x)) os << ' ' << to_string(f);
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace dflow
