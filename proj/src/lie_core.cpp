#include "lieops/lie_core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace lieops {

namespace {

using Matrix = std::vector<RationalVector>;

Matrix to_rational(const std::vector<std::vector<int>>& m) {
  Matrix out(m.size(), RationalVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m[i][j];
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.size(), RationalVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[j][i] = m[i][j];
  return out;
}

// Gauss-Jordan over the rationals. The input is assumed invertible.
Matrix inverse(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw InvariantViolation("singular Cartan matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

void link(std::vector<std::vector<int>>& m, int i, int j) {
  m[i][j] = -1;
  m[j][i] = -1;
}

// Squared lengths of simple roots with long roots normalized to 2.
std::vector<Rational> simple_root_norms(const CartanDatum& d) {
  const int r = d.rank;
  std::vector<Rational> norm(r);
  std::vector<bool> seen(r, false);
  norm[0] = 1;
  seen[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < r; ++j) {
      if (seen[j] || d.entry(i, j) == 0) continue;
      // a_ij |alpha_j|^2 = a_ji |alpha_i|^2
      norm[j] = norm[i] * Rational(d.entry(j, i)) / d.entry(i, j);
      norm[j].canonicalize();
      seen[j] = true;
      queue.push_back(j);
    }
  }
  const Rational longest = *std::max_element(norm.begin(), norm.end());
  for (auto& n : norm) n = 2 * n / longest;
  return norm;
}

Rational unit_root_norm(const std::vector<int>& c, const Matrix& gram) {
  Rational s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] != 0) s += c[i] * c[j] * gram[i][j];
  }
  return s;
}

Matrix unit_gram(const CartanDatum& d, const std::vector<Rational>& norm) {
  Matrix g(d.rank, RationalVector(d.rank));
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) g[i][j] = Rational(d.entry(i, j)) * norm[j] / 2;
  return g;
}

}  // namespace

char series_letter(Series s) { return "ABCDEFG"[static_cast<int>(s)]; }

std::string CartanDatum::name() const { return series_letter(series) + std::to_string(rank); }

CartanDatum make_cartan_datum(Series series, int rank) {
  auto bad = [&] {
    return DomainError(std::string("unsupported rank ") + std::to_string(rank) + " for series " +
                       series_letter(series));
  };
  switch (series) {
    case Series::A: if (rank < 1) throw bad(); break;
    case Series::B: if (rank < 2) throw bad(); break;
    case Series::C: if (rank < 3) throw bad(); break;
    case Series::D: if (rank < 4) throw bad(); break;
    case Series::E: if (rank < 6 || rank > 8) throw bad(); break;
    case Series::F: if (rank != 4) throw bad(); break;
    case Series::G: if (rank != 2) throw bad(); break;
  }
  constexpr int max_rank = 64;
  if (rank > max_rank) throw bad();

  CartanDatum d;
  d.series = series;
  d.rank = rank;
  auto& m = d.cartan_matrix;
  m.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) m[i][i] = 2;

  switch (series) {
    case Series::A:
      for (int i = 0; i + 1 < rank; ++i) link(m, i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 1 < rank; ++i) link(m, i, i + 1);
      m[rank - 2][rank - 1] = -2;  // alpha_r short
      break;
    case Series::C:
      for (int i = 0; i + 1 < rank; ++i) link(m, i, i + 1);
      m[rank - 1][rank - 2] = -2;  // alpha_r long
      break;
    case Series::D:
      for (int i = 0; i + 2 < rank; ++i) link(m, i, i + 1);
      link(m, rank - 3, rank - 1);
      break;
    case Series::E:
      link(m, 0, 2);
      link(m, 1, 3);
      for (int i = 2; i + 1 < rank; ++i) link(m, i, i + 1);
      break;
    case Series::F:
      link(m, 0, 1);
      link(m, 1, 2);
      link(m, 2, 3);
      m[1][2] = -2;
      break;
    case Series::G:
      link(m, 0, 1);
      m[0][1] = -3;  // alpha_1 long
      break;
  }
  for (int i = 1; i <= rank; ++i) d.node_labels.push_back("α" + std::to_string(i));
  return d;
}

CartanDatum parse_dynkin(std::string_view spec) {
  std::string_view s = spec;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.size() < 2) throw ParseError("Dynkin spec must look like G2 or A4, got '" + std::string(spec) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s.front())));
  if (letter < 'A' || letter > 'G') throw ParseError("unknown series '" + std::string(1, s.front()) + "'");
  int rank = 0;
  const auto digits = s.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw ParseError("bad rank in Dynkin spec '" + std::string(spec) + "'");
  try {
    return make_cartan_datum(static_cast<Series>(letter - 'A'), rank);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Integer cartan_determinant(const CartanDatum& datum) {
  Matrix a = to_rational(datum.cartan_matrix);
  Rational det = 1;
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det.get_num();
}

Integer weyl_group_order(const CartanDatum& d) {
  Integer fact = 1;
  for (int i = 2; i <= d.rank; ++i) fact *= i;
  switch (d.series) {
    case Series::A: return fact * (d.rank + 1);
    case Series::B:
    case Series::C: return fact * (Integer(1) << d.rank);
    case Series::D: return fact * (Integer(1) << (d.rank - 1));
    case Series::E:
      return d.rank == 6 ? Integer(51840) : d.rank == 7 ? Integer(2903040) : Integer(696729600);
    case Series::F: return 1152;
    case Series::G: return 12;
  }
  return 0;
}

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool Root::is_positive() const {
  return std::any_of(coords.begin(), coords.end(), [](int c) { return c > 0; });
}

Root Root::operator-() const {
  Root r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

Weight Weight::zero(int rank) { return Weight(RationalVector(rank)); }

Weight Weight::fundamental(int rank, int i) {
  Weight w = zero(rank);
  w.coords_[i] = 1;
  return w;
}

Weight Weight::from_ints(const std::vector<long>& coords) {
  RationalVector v;
  v.reserve(coords.size());
  for (long c : coords) v.emplace_back(c);
  return Weight(std::move(v));
}

bool Weight::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return is_integer(q); });
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Weight operator*(const Rational& s, Weight w) {
  for (auto& c : w.coords_) c *= s;
  return w;
}

Weight Weight::operator-() const { return Rational(-1) * *this; }

std::string Weight::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += to_string(coords_[i]);
  }
  return out + ")";
}

Weight root_to_weight(const Root& root, const CartanDatum& datum) {
  Weight w = Weight::zero(datum.rank);
  for (int i = 0; i < datum.rank; ++i) {
    if (root.coords[i] == 0) continue;
    for (int j = 0; j < datum.rank; ++j) w[j] += root.coords[i] * datum.entry(i, j);
  }
  return w;
}

RationalVector weight_to_root_basis(const Weight& w, const CartanDatum& datum) {
  // omega coords v = A^T c, hence c = (A^T)^{-1} v.
  const Matrix b = inverse(transpose(to_rational(datum.cartan_matrix)));
  RationalVector c(datum.rank);
  for (int i = 0; i < datum.rank; ++i)
    for (int j = 0; j < datum.rank; ++j) c[i] += b[i][j] * w[j];
  return c;
}

Weight root_basis_to_weight(const RationalVector& c, const CartanDatum& datum) {
  Weight w = Weight::zero(datum.rank);
  for (int i = 0; i < datum.rank; ++i)
    for (int j = 0; j < datum.rank; ++j) w[j] += c[i] * datum.entry(i, j);
  return w;
}

std::vector<Root> positive_roots(const CartanDatum& datum) {
  const int r = datum.rank;
  const auto norms = simple_root_norms(datum);
  const Matrix gram = unit_gram(datum, norms);

  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < r; ++i) {
    std::vector<int> c(r, 0);
    c[i] = 1;
    layer.push_back(c);
    known.insert(c);
  }
  std::vector<std::vector<int>> all = layer;
  // Extend by simple roots using root strings: beta + alpha_i is a root iff
  // p - (beta, alpha_i^vee) > 0, where p is the length of the downward string.
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < r; ++i) {
        int pairing = 0;
        for (int j = 0; j < r; ++j) pairing += beta[j] * datum.entry(j, i);
        int p = 0;
        auto down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.contains(down)) break;
          ++p;
        }
        if (p - pairing <= 0) continue;
        auto up = beta;
        up[i] += 1;
        if (known.insert(up).second) next.push_back(up);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }

  std::vector<Root> roots;
  roots.reserve(all.size());
  for (auto& c : all) {
    Root root;
    root.length_class = unit_root_norm(c, gram) == 2 ? LengthClass::long_root : LengthClass::short_root;
    root.coords = std::move(c);
    roots.push_back(std::move(root));
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    const int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coords > b.coords;
  });
  return roots;
}

InvariantForm::InvariantForm(CartanDatum datum, Rational scale)
    : datum_(std::move(datum)), scale_(std::move(scale)) {
  if (scale_ == 0) throw DomainError("invariant form scale must be nonzero");
  const int r = datum_.rank;
  simple_norm2_ = simple_root_norms(datum_);
  for (auto& n : simple_norm2_) n *= scale_;
  gram_ = unit_gram(datum_, simple_norm2_);
  // (omega_i, omega_j) = c_i(omega_j) |alpha_i|^2 / 2 with c = (A^T)^{-1}.
  to_root_basis_ = inverse(transpose(to_rational(datum_.cartan_matrix)));
  weight_gram_.assign(r, RationalVector(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) weight_gram_[i][j] = to_root_basis_[i][j] * simple_norm2_[i] / 2;
  positive_ = lieops::positive_roots(datum_);
}

Rational InvariantForm::operator()(const Weight& a, const Weight& b) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j)
      if (b[j] != 0) s += a[i] * weight_gram_[i][j] * b[j];
  }
  return s;
}

Rational InvariantForm::operator()(const Weight& a, const Root& b) const {
  // (omega_i, alpha_j) = delta_ij |alpha_j|^2 / 2
  Rational s = 0;
  for (int i = 0; i < rank(); ++i)
    if (b.coords[i] != 0) s += a[i] * b.coords[i] * simple_norm2_[i];
  return s / 2;
}

Rational InvariantForm::operator()(const Root& a, const Root& b) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < rank(); ++j)
      if (b.coords[j] != 0) s += a.coords[i] * gram_[i][j] * b.coords[j];
  }
  return s;
}

RationalVector InvariantForm::to_root_basis(const Weight& w) const {
  RationalVector c(rank());
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (w[j] != 0) c[i] += to_root_basis_[i][j] * w[j];
  return c;
}

bool InvariantForm::is_root(const Root& r) const {
  if (static_cast<int>(r.coords.size()) != rank()) return false;
  const Root pos = r.is_positive() ? r : -r;
  return std::binary_search(positive_.begin(), positive_.end(), pos, [](const Root& a, const Root& b) {
    const int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coords > b.coords;
  });
}

InvariantForm invariant_form(const CartanDatum& datum, const Rational& scale) {
  return InvariantForm(datum, scale);
}

Weight delta(const CartanDatum& datum) {
  Weight w = Weight::zero(datum.rank);
  for (int i = 0; i < datum.rank; ++i) w[i] = 1;
  return w;
}

Rational coroot_pairing(const Weight& v, const Root& alpha, const InvariantForm& form) {
  return 2 * form(v, alpha) / form.norm2(alpha);
}

Weight reflect(const Weight& v, const Root& alpha, const InvariantForm& form) {
  if (!form.is_root(alpha)) throw DomainError("reflection direction is not a root");
  const Rational k = coroot_pairing(v, alpha, form);
  return v - k * root_to_weight(alpha, form.datum());
}

Weight simple_reflect(const Weight& v, int i, const CartanDatum& datum) {
  Weight w = v;
  if (v[i] == 0) return w;
  const Rational k = v[i];
  for (int j = 0; j < datum.rank; ++j)
    if (datum.entry(i, j) != 0) w[j] -= k * datum.entry(i, j);
  return w;
}

std::vector<Weight> weyl_orbit(const Weight& v, const InvariantForm& form, const WeylCaps& caps) {
  const auto& datum = form.datum();
  if (datum.rank > caps.max_rank)
    throw CapExceeded("rank " + std::to_string(datum.rank) + " exceeds Weyl enumeration bound " +
                      std::to_string(caps.max_rank));
  std::set<Weight> seen{v};
  std::deque<Weight> queue{v};
  while (!queue.empty()) {
    Weight w = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < datum.rank; ++i) {
      if (w[i] == 0) continue;
      Weight s = simple_reflect(w, i, datum);
      if (seen.insert(s).second) {
        if (seen.size() > caps.max_orbit)
          throw CapExceeded("Weyl orbit exceeds cap of " + std::to_string(caps.max_orbit));
        queue.push_back(std::move(s));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::string root_label(const Root& root, const std::vector<Root>& positive) {
  const bool neg = !root.is_positive();
  const Root pos = neg ? -root : root;
  auto it = std::find(positive.begin(), positive.end(), pos);
  if (it == positive.end()) return {};
  return std::string(neg ? "-" : "") + "α" + std::to_string(it - positive.begin() + 1);
}

std::string root_expression(const Root& root) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < root.coords.size(); ++i) {
    int c = root.coords[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = std::abs(c);
    if (c != 1) os << c;
    os << "α" << (i + 1);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace lieops
