#include "wmha/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace wmha {

namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

}  // namespace

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_zero(q); });
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same(a.size(), b.size(), "vector sum");
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same(a.size(), b.size(), "vector difference");
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  if (is_zero(s)) return r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_zero(v[i])) r[i] = s * v[i];
  }
  return r;
}

void axpy(Vector& y, const Rational& a, const Vector& x) {
  require_same(y.size(), x.size(), "axpy");
  if (is_zero(a)) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_zero(x[i])) y[i] += a * x[i];
  }
}

Rational dot(const Vector& a, const Vector& b) {
  require_same(a.size(), b.size(), "dot");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
  }
  return s;
}

SparseVec to_sparse(const Vector& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_zero(v[i])) s.emplace_back(i, v[i]);
  }
  return s;
}

Vector to_dense(const SparseVec& v, std::size_t n) {
  Vector d(n);
  for (const auto& [i, q] : v) d.at(i) = q;
  return d;
}

std::size_t leading_index(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_zero(v[i])) return i;
  }
  return v.size();
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same(rows[i].size(), cols, "matrix row");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<long>(i * cols_),
                data_.begin() + static_cast<long>((i + 1) * cols_));
}

void Matrix::set_column(std::size_t j, const Vector& v) {
  require_same(v.size(), rows_, "matrix column");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Vector Matrix::apply(const Vector& v) const {
  require_same(v.size(), cols_, "matrix apply");
  Vector r(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (wmha::is_zero(v[j])) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& a = (*this)(i, j);
      if (!wmha::is_zero(a)) r[i] += a * v[j];
    }
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& q) { return wmha::is_zero(q); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same(a.cols_, b.rows_, "matrix product");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (!is_zero(y)) r(i, j) += x * y;
      }
    }
  }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same(a.rows_, b.rows_, "matrix sum rows");
  require_same(a.cols_, b.cols_, "matrix sum cols");
  Matrix r(a);
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same(a.rows_, b.rows_, "matrix difference rows");
  require_same(a.cols_, b.cols_, "matrix difference cols");
  Matrix r(a);
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix r(m);
  for (auto& q : r.data_) q *= s;
  return r;
}

Echelon::Echelon(std::size_t ambient) : ambient_(ambient), pivot_row_(ambient, -1) {}

void Echelon::reduce_in_place(Vector& v) const {
  require_same(v.size(), ambient_, "echelon reduce");
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (pivot_row_[c] < 0 || is_zero(v[c])) continue;
    Rational f = v[c];
    for (const auto& [j, q] : rows_[static_cast<std::size_t>(pivot_row_[c])]) {
      v[j] -= f * q;
    }
  }
}

Vector Echelon::reduce(Vector v) const {
  reduce_in_place(v);
  return v;
}

bool Echelon::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Echelon::insert(const Vector& v) {
  Vector r = reduce(v);
  if (is_zero(r)) return false;
  insert_reduced(std::move(r));
  return true;
}

SparseVec Echelon::reduce(const SparseVec& v) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& [c, q] : v) {
    if (c >= ambient_) throw DimensionMismatch("sparse index out of range");
    if (pivot_row_[c] < 0) acc[c] += q;
  }
  for (const auto& [c, q] : v) {
    if (pivot_row_[c] < 0) continue;
    for (const auto& [j, r] : rows_[static_cast<std::size_t>(pivot_row_[c])]) {
      if (j != c) acc[j] -= q * r;
    }
  }
  SparseVec out;
  for (auto& [c, q] : acc) {
    if (!is_zero(q)) out.emplace_back(c, std::move(q));
  }
  return out;
}

bool Echelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  insert_reduced(to_dense(r, ambient_));
  return true;
}

void Echelon::insert_reduced(Vector v) {
  std::size_t p = leading_index(v);
  Rational inv = 1 / v[p];
  for (auto& q : v) {
    if (!is_zero(q)) q *= inv;
  }
  SparseVec row = to_sparse(v);
  // Clear column p from the existing rows.
  for (auto& other : rows_) {
    auto it = std::lower_bound(other.begin(), other.end(), p,
                               [](const auto& e, std::size_t k) { return e.first < k; });
    if (it == other.end() || it->first != p) continue;
    Rational f = it->second;
    SparseVec merged;
    merged.reserve(other.size() + row.size());
    auto a = other.begin();
    auto b = row.begin();
    while (a != other.end() || b != row.end()) {
      if (b == row.end() || (a != other.end() && a->first < b->first)) {
        merged.push_back(std::move(*a++));
      } else if (a == other.end() || b->first < a->first) {
        merged.emplace_back(b->first, -f * b->second);
        ++b;
      } else {
        Rational q = a->second - f * b->second;
        if (!is_zero(q)) merged.emplace_back(a->first, std::move(q));
        ++a;
        ++b;
      }
    }
    other = std::move(merged);
  }
  pivot_row_[p] = static_cast<long>(rows_.size());
  row_pivot_.push_back(p);
  rows_.push_back(std::move(row));
}

std::vector<std::size_t> Echelon::pivots() const {
  std::vector<std::size_t> p(row_pivot_);
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Vector> Echelon::basis() const {
  std::vector<Vector> b;
  for (std::size_t c : pivots()) {
    b.push_back(to_dense(rows_[static_cast<std::size_t>(pivot_row_[c])], ambient_));
  }
  return b;
}

std::vector<std::size_t> Echelon::free_columns() const {
  std::vector<std::size_t> f;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (pivot_row_[c] < 0) f.push_back(c);
  }
  return f;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& gens) {
  Subspace s(ambient);
  for (const auto& g : gens) s.ech_.insert(g);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.ech_.insert(unit_vector(ambient, i));
  return s;
}

bool Subspace::contains(const Vector& v) const { return ech_.contains(v); }

bool Subspace::contains(const Subspace& other) const {
  require_same(ambient(), other.ambient(), "subspace containment");
  for (const auto& b : other.basis()) {
    if (!contains(b)) return false;
  }
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  require_same(a.ambient(), b.ambient(), "subspace equality");
  return a.dim() == b.dim() && a.basis() == b.basis();
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same(a.ambient(), b.ambient(), "subspace sum");
  Subspace s = a;
  for (const auto& v : b.basis()) s.add(v);
  return s;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same(a.ambient(), b.ambient(), "subspace intersection");
  // Solve sum alpha_i a_i - sum beta_j b_j = 0; the intersection is spanned by
  // sum alpha_i a_i over kernel vectors.
  auto ab = a.basis();
  auto bb = b.basis();
  std::vector<Vector> cols = ab;
  for (const auto& v : bb) cols.push_back(Rational(-1) * v);
  if (cols.empty()) return Subspace(a.ambient());
  Matrix m = Matrix::from_columns(a.ambient(), cols);
  Subspace k = kernel(m);
  Subspace r(a.ambient());
  for (const auto& c : k.basis()) {
    Vector v(a.ambient());
    for (std::size_t i = 0; i < ab.size(); ++i) axpy(v, c[i], ab[i]);
    r.add(v);
  }
  return r;
}

Subspace kernel(const Matrix& m) {
  Echelon e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  auto basis = e.basis();
  auto piv = e.pivots();
  Subspace k(m.cols());
  for (std::size_t f : e.free_columns()) {
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -basis[r][f];
    k.add(v);
  }
  return k;
}

Subspace image(const Matrix& m) {
  Subspace s(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) s.add(m.column(j));
  return s;
}

std::size_t quotient_dim(const Subspace& sub) { return sub.ambient() - sub.dim(); }

std::size_t rank(const Matrix& m) {
  Echelon e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  return e.rank();
}

std::optional<LinearSolution> solve(const Matrix& m, const Vector& b) {
  require_same(b.size(), m.rows(), "linear solve");
  std::size_t n = m.cols();
  Echelon e(n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vector r = m.row(i);
    r.push_back(b[i]);
    e.insert(r);
  }
  if (e.is_pivot(n)) return std::nullopt;
  LinearSolution sol;
  sol.particular = Vector(n);
  auto basis = e.basis();
  auto piv = e.pivots();
  for (std::size_t r = 0; r < piv.size(); ++r) sol.particular[piv[r]] = basis[r][n];
  for (std::size_t f : e.free_columns()) {
    if (f == n) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -basis[r][f];
    sol.kernel_basis.push_back(std::move(v));
  }
  return sol;
}

std::optional<Vector> coordinates(const Matrix& basis, const Vector& v) {
  auto sol = solve(basis, v);
  if (!sol) return std::nullopt;
  return sol->particular;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  Echelon e(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector r = m.row(i);
    r.resize(2 * n);
    r[n + i] = 1;
    e.insert(r);
  }
  auto piv = e.pivots();
  if (piv.size() != n || (n > 0 && piv.back() >= n)) return std::nullopt;
  auto basis = e.basis();
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j) inv(r, j) = basis[r][n + j];
  return inv;
}

std::string format_vector(const Vector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << to_string(v[i]);
  }
  os << ']';
  return os.str();
}

}  // namespace wmha
