#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace oracle {

namespace {

// <beta, alpha_i^vee> for beta in simple-root coordinates.
long coroot(const lieops::CartanDatum& d, const IntVec& beta, int i) {
  long s = 0;
  for (int j = 0; j < d.rank; ++j) s += beta[j] * d.entry(j, i);
  return s;
}

std::set<IntVec> root_orbit(const lieops::CartanDatum& d, int simple) {
  IntVec start(d.rank, 0);
  start[simple] = 1;
  std::set<IntVec> seen{start};
  std::deque<IntVec> queue{start};
  while (!queue.empty()) {
    IntVec b = queue.front();
    queue.pop_front();
    for (int i = 0; i < d.rank; ++i) {
      IntVec c = b;
      c[i] -= coroot(d, b, i);
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return seen;
}

IntVec weight_of_root(const lieops::CartanDatum& d, const IntVec& beta) {
  IntVec w(d.rank, 0);
  for (int j = 0; j < d.rank; ++j)
    for (int k = 0; k < d.rank; ++k) w[k] += beta[j] * d.entry(j, k);
  return w;
}

Matrix identity(int n) {
  Matrix m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const int n = static_cast<int>(a.size());
  Matrix c(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

bool nonnegative(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](long x) { return x >= 0; });
}

class Kostant {
 public:
  explicit Kostant(std::vector<IntVec> roots) : roots_(std::move(roots)) {}

  long operator()(const IntVec& m) { return count(m, 0); }

 private:
  long count(const IntVec& m, std::size_t idx) {
    if (!nonnegative(m)) return 0;
    if (idx == roots_.size()) return std::all_of(m.begin(), m.end(), [](long x) { return x == 0; }) ? 1 : 0;
    auto key = std::make_pair(m, idx);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    long total = 0;
    IntVec rest = m;
    while (nonnegative(rest)) {
      total += count(rest, idx + 1);
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= roots_[idx][j];
    }
    memo_.emplace(key, total);
    return total;
  }

  std::vector<IntVec> roots_;
  std::map<std::pair<IntVec, std::size_t>, long> memo_;
};

}  // namespace

std::vector<OracleRoot> positive_roots(const lieops::CartanDatum& d) {
  std::vector<bool> short_simple(d.rank, false);
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j)
      if (i != j && d.entry(j, i) < -1) short_simple[i] = true;

  // A root is short iff it lies in the orbit of some short simple root.
  std::map<IntVec, bool> found;
  for (int i = 0; i < d.rank; ++i)
    for (const IntVec& b : root_orbit(d, i))
      if (nonnegative(b)) found.emplace(b, true).first->second &= !short_simple[i];
  std::vector<OracleRoot> out;
  for (const auto& [c, is_long] : found) out.push_back({c, is_long});
  return out;
}

IntVec apply(const Matrix& m, const IntVec& v) {
  IntVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

std::vector<GroupElement> weyl_group(const lieops::CartanDatum& d) {
  const int n = d.rank;
  std::vector<Matrix> gens;
  for (int i = 0; i < n; ++i) {
    Matrix s = identity(n);
    for (int k = 0; k < n; ++k) s[k][i] -= d.entry(i, k);
    gens.push_back(s);
  }
  std::map<Matrix, int> seen{{identity(n), 0}};
  std::deque<Matrix> queue{identity(n)};
  std::vector<GroupElement> out;
  while (!queue.empty()) {
    Matrix g = queue.front();
    queue.pop_front();
    const int len = seen[g];
    out.push_back({g, len});
    for (const Matrix& s : gens) {
      Matrix h = multiply(s, g);
      if (seen.emplace(h, len + 1).second) queue.push_back(h);
    }
  }
  return out;
}

BggOracle bgg(const lieops::CartanDatum& d, const std::vector<int>& crossed, const IntVec& dominant) {
  const int n = d.rank;
  IntVec shifted = dominant;
  for (auto& x : shifted) x += 1;
  BggOracle out;
  for (const auto& g : weyl_group(d)) {
    IntVec x = oracle::apply(g.m, shifted);
    for (auto& c : x) c -= 1;
    bool ok = true;
    for (int j = 0; j < n; ++j)
      if (std::find(crossed.begin(), crossed.end(), j) == crossed.end() && x[j] < 0) ok = false;
    if (ok) out.vertices.push_back({x, g.length});
  }
  std::vector<std::pair<IntVec, IntVec>> roots;
  for (const auto& r : oracle::positive_roots(d)) roots.emplace_back(r.coords, weight_of_root(d, r.coords));
  for (const auto& a : out.vertices)
    for (const auto& b : out.vertices) {
      if (b.length != a.length + 1) continue;
      IntVec diff(n);
      for (int j = 0; j < n; ++j) diff[j] = b.weight[j] - a.weight[j];
      for (const auto& [coords, w] : roots) {
        int pivot = 0;
        while (w[pivot] == 0) ++pivot;
        if (diff[pivot] % w[pivot] != 0) continue;
        const long c = diff[pivot] / w[pivot];
        bool multiple = c != 0;
        for (int j = 0; j < n && multiple; ++j) multiple = diff[j] == c * w[j];
        if (multiple) out.edges.push_back({a.weight, b.weight, coords});
      }
    }
  return out;
}

Character irreducible_character(const lieops::CartanDatum& d, const std::vector<int>& nodes, const IntVec& highest) {
  const std::size_t r = nodes.size();
  for (int j : nodes)
    if (highest[j] < 0) throw std::invalid_argument("highest weight is not dominant");

  std::vector<IntVec> levi_roots;
  for (const auto& root : oracle::positive_roots(d)) {
    bool inside = true;
    for (int k = 0; k < d.rank; ++k)
      if (root.coords[k] != 0 && std::find(nodes.begin(), nodes.end(), k) == nodes.end()) inside = false;
    if (!inside) continue;
    IntVec c;
    for (int j : nodes) c.push_back(root.coords[j]);
    levi_roots.push_back(c);
  }
  Kostant partitions(levi_roots);

  // Dot orbit of the highest weight: w.lambda = lambda - sum n_j alpha_j.
  struct Term {
    IntVec n;
    int sign;
  };
  std::map<IntVec, Term> orbit{{highest, {IntVec(r, 0), 1}}};
  std::deque<IntVec> queue{highest};
  while (!queue.empty()) {
    const IntVec w = queue.front();
    queue.pop_front();
    const Term t = orbit.at(w);
    for (std::size_t idx = 0; idx < r; ++idx) {
      const int j = nodes[idx];
      const long step = w[j] + 1;
      IntVec next = w;
      for (int k = 0; k < d.rank; ++k) next[k] -= step * d.entry(j, k);
      Term nt = t;
      nt.n[idx] += step;
      nt.sign = -t.sign;
      if (orbit.emplace(next, nt).second) queue.push_back(next);
    }
  }

  auto multiplicity = [&](const IntVec& m) {
    long total = 0;
    for (const auto& [w, t] : orbit) {
      IntVec diff(r);
      for (std::size_t j = 0; j < r; ++j) diff[j] = m[j] - t.n[j];
      total += t.sign * partitions(diff);
    }
    return total;
  };

  Character ch;
  std::set<IntVec> visited{IntVec(r, 0)};
  std::deque<IntVec> frontier{IntVec(r, 0)};
  while (!frontier.empty()) {
    const IntVec m = frontier.front();
    frontier.pop_front();
    const long mult = multiplicity(m);
    if (mult < 0) throw std::logic_error("negative weight multiplicity");
    if (mult == 0) continue;
    IntVec weight = highest;
    for (std::size_t idx = 0; idx < r; ++idx)
      for (int k = 0; k < d.rank; ++k) weight[k] -= m[idx] * d.entry(nodes[idx], k);
    ch[weight] = mult;
    for (std::size_t idx = 0; idx < r; ++idx) {
      IntVec next = m;
      ++next[idx];
      if (visited.insert(next).second) frontier.push_back(next);
    }
  }
  return ch;
}

std::map<IntVec, long> decompose_product(const lieops::CartanDatum& d, const std::vector<int>& nodes,
                                         const Character& a, const Character& b, const lieops::InvariantForm& form) {
  Character product;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) {
      IntVec w(d.rank);
      for (int k = 0; k < d.rank; ++k) w[k] = wa[k] + wb[k];
      product[w] += ma * mb;
    }
  auto level = [&](const IntVec& w) {
    lieops::Rational s = 0;
    for (int k = 0; k < d.rank; ++k)
      for (int j : nodes) s += w[k] * form.weight_gram(k, j);
    return s;
  };

  std::map<IntVec, long> result;
  while (true) {
    const IntVec* top = nullptr;
    lieops::Rational best;
    for (const auto& [w, m] : product) {
      if (m == 0) continue;
      const lieops::Rational l = level(w);
      if (!top || l > best) {
        top = &w;
        best = l;
      }
    }
    if (!top) break;
    const IntVec hw = *top;
    const long mult = product[hw];
    if (mult < 0) throw std::logic_error("negative multiplicity while peeling");
    result[hw] = mult;
    for (const auto& [w, m] : irreducible_character(d, nodes, hw)) product[w] -= mult * m;
  }
  return result;
}

long dimension(const Character& ch) {
  long s = 0;
  for (const auto& [w, m] : ch) s += m;
  return s;
}

}  // namespace oracle
