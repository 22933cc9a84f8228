#pragma once

// Exact linear algebra over a field type K (division ring ops required):
// dense matrices with rank / kernel / determinant, and a sparse incremental
// echelon form kept fully reduced, used for rank and span-membership queries
// on large structured systems.

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace nforge {

template <class K>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<K> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, K(0)) {}

  K& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const K& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }

  bool is_zero() const {
    for (const K& x : a)
      if (!x.is_zero()) return false;
    return true;
  }

  Mat& operator+=(const Mat& o) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += o.a[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= o.a[k];
    return *this;
  }
  friend Mat operator+(Mat x, const Mat& y) { return x += y; }
  friend Mat operator-(Mat x, const Mat& y) { return x -= y; }
  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
    Mat out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const K& v = x.at(i, k);
        if (v.is_zero()) continue;
        for (int j = 0; j < y.cols; ++j) {
          const K& w = y.at(k, j);
          if (!w.is_zero()) out.at(i, j) += v * w;
        }
      }
    return out;
  }
  Mat scaled(const K& c) const {
    Mat out = *this;
    for (K& x : out.a) x = x * c;
    return out;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
};

// Row-reduces m in place; returns pivot columns (one per pivot row).
template <class K>
std::vector<int> row_reduce(Mat<K>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    K inv = m.at(r, c).inverse();
    for (int j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      K f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
int rank(Mat<K> m) {
  return static_cast<int>(row_reduce(m).size());
}

// Basis of the right kernel {x : m x = 0}.
template <class K>
std::vector<std::vector<K>> kernel_basis(Mat<K> m) {
  std::vector<int> pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<K>> out;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<K> x(m.cols, K(0));
    x[f] = K(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m.at(static_cast<int>(r), f);
    out.push_back(std::move(x));
  }
  return out;
}

template <class K>
K det(Mat<K> m) {
  if (m.rows != m.cols) throw std::invalid_argument("det of non-square matrix");
  K out(1);
  for (int c = 0; c < m.cols; ++c) {
    int p = -1;
    for (int i = c; i < m.rows; ++i)
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return K(0);
    if (p != c) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(c, j));
      out = -out;
    }
    out = out * m.at(c, c);
    K inv = m.at(c, c).inverse();
    for (int i = c + 1; i < m.rows; ++i) {
      if (m.at(i, c).is_zero()) continue;
      K f = m.at(i, c) * inv;
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return out;
}

// Incremental echelon basis of sparse row vectors, kept fully reduced: every
// stored row is monic at its pivot (its largest column), and no stored row
// contains another row's pivot column. Suited to systems whose reduced rows
// stay sparse.
template <class K>
class Echelon {
 public:
  using Row = std::map<int, K>;  // column -> nonzero coefficient

  // Residual of v after elimination by the stored rows (not inserted).
  Row reduce(Row v) const {
    while (!v.empty()) {
      int lead = v.rbegin()->first;
      auto it = pivot_row_.find(lead);
      if (it == pivot_row_.end()) break;
      axpy(v, -v.rbegin()->second, rows_[it->second]);
    }
    return v;
  }

  bool in_span(Row v) const { return reduce(std::move(v)).empty(); }

  // Returns true when the vector enlarges the span.
  bool insert(Row v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    int lead = v.rbegin()->first;
    K inv = v.rbegin()->second.inverse();
    for (auto& [c, x] : v) x = x * inv;
    int idx = static_cast<int>(rows_.size());
    // back-substitute the new pivot column out of existing rows
    auto hit = col_rows_.find(lead);
    if (hit != col_rows_.end()) {
      std::vector<int> touched(hit->second.begin(), hit->second.end());
      for (int r : touched) {
        K c = rows_[r].at(lead);
        unindex(r);
        axpy(rows_[r], -c, v);
        index(r);
      }
    }
    rows_.push_back(std::move(v));
    pivot_row_[lead] = idx;
    index(idx);
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<Row>& rows() const { return rows_; }

 private:
  static void axpy(Row& dst, const K& c, const Row& src) {
    for (const auto& [col, x] : src) {
      auto it = dst.find(col);
      if (it == dst.end()) {
        K v = c * x;
        if (!v.is_zero()) dst.emplace(col, std::move(v));
      } else {
        it->second += c * x;
        if (it->second.is_zero()) dst.erase(it);
      }
    }
  }
  void index(int r) {
    for (const auto& [col, x] : rows_[r]) col_rows_[col].insert(r);
  }
  void unindex(int r) {
    for (const auto& [col, x] : rows_[r]) {
      auto it = col_rows_.find(col);
      if (it != col_rows_.end()) {
        it->second.erase(r);
        if (it->second.empty()) col_rows_.erase(it);
      }
    }
  }

  std::vector<Row> rows_;
  std::map<int, int> pivot_row_;
  std::map<int, std::set<int>> col_rows_;
};

}  // namespace nforge
