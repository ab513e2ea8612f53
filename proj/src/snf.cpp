#include "spl/snf.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "spl/error.hpp"

namespace spl {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix operator*(const IntegerMatrix& x, const IntegerMatrix& y) {
  if (x.cols_ != y.rows_) throw Error(Errc::InvalidArgument, "matrix shapes do not multiply");
  IntegerMatrix out(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const BigInt& a = x(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) out(i, j) += a * y(k, j);
    }
  return out;
}

bool IntegerMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

BigInt IntegerMatrix::determinant() const {
  if (rows_ != cols_) throw Error(Errc::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntegerMatrix a = *this;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::string format_matrix(const IntegerMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? " " : "") + m(i, j).str();
    out += "]\n";
  }
  return out;
}

IntegerMatrix reduced_laplacian(const SandpileGraph& g) {
  const auto& sites = g.sites();
  std::vector<std::size_t> pos(g.vertex_count(), 0);
  for (std::size_t i = 0; i < sites.size(); ++i) pos[sites[i]] = i;
  IntegerMatrix l(sites.size(), sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const VertexId v = sites[i];
    l(i, i) += g.out_degree(v);
    for (EdgeId e : g.graph().out_edges(v)) {
      const VertexId w = g.graph().edge(e).range;
      if (w != g.sink()) l(i, pos[w]) -= 1;
    }
  }
  return l;
}

std::string format_factors(const InvariantFactors& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.factors.size(); ++i) out += (i ? ", " : "") + f.factors[i].str();
  return out + "]";
}

namespace {

class SmithReducer {
 public:
  explicit SmithReducer(const IntegerMatrix& m)
      : a_(m), u_(IntegerMatrix::identity(m.rows())), v_(IntegerMatrix::identity(m.cols())) {}

  void run() {
    const std::size_t n = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < n; ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        if (!clear_cross(t)) continue;
        if (auto bad = non_divisible(t)) {
          add_row(t, *bad, 1);  // brings a non-multiple into row t
          continue;
        }
        break;
      }
      if (a_(t, t) < 0) negate_row(t);
    }
  }

  IntegerMatrix& a() { return a_; }
  IntegerMatrix& u() { return u_; }
  IntegerMatrix& v() { return v_; }

 private:
  // Moves the smallest nonzero entry of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        if (a_(i, j) == 0) continue;
        if (!best || abs(a_(i, j)) < abs(a_(best->first, best->second))) best = {{i, j}};
      }
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  // Reduces row t and column t modulo the pivot. Returns true once both are
  // zero off the pivot; returns false after re-pivoting on a remainder.
  bool clear_cross(std::size_t t) {
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      if (a_(i, t) == 0) continue;
      const BigInt q = a_(i, t) / a_(t, t);
      add_row(i, t, -q);
    }
    for (std::size_t j = t + 1; j < a_.cols(); ++j) {
      if (a_(t, j) == 0) continue;
      const BigInt q = a_(t, j) / a_(t, t);
      add_col(j, t, -q);
    }
    bool clean = true;
    for (std::size_t i = t + 1; i < a_.rows() && clean; ++i) clean = a_(i, t) == 0;
    for (std::size_t j = t + 1; j < a_.cols() && clean; ++j) clean = a_(t, j) == 0;
    if (!clean) {
      // A nonzero remainder is strictly smaller than the pivot.
      place_pivot_in_cross(t);
    }
    return clean;
  }

  void place_pivot_in_cross(std::size_t t) {
    std::pair<std::size_t, std::size_t> best{t, t};
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      if (a_(i, t) != 0 && abs(a_(i, t)) < abs(a_(best.first, best.second))) best = {i, t};
    for (std::size_t j = t + 1; j < a_.cols(); ++j)
      if (a_(t, j) != 0 && abs(a_(t, j)) < abs(a_(best.first, best.second))) best = {t, j};
    swap_rows(t, best.first);
    swap_cols(t, best.second);
  }

  std::optional<std::size_t> non_divisible(std::size_t t) {
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      for (std::size_t j = t + 1; j < a_.cols(); ++j)
        if (a_(i, j) % a_(t, t) != 0) return i;
    return std::nullopt;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_(i, j), a_(k, j));
    for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(i, j), u_(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, j), a_(i, k));
    for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, j), v_(i, k));
  }
  // row i += q * row k
  void add_row(std::size_t i, std::size_t k, const BigInt& q) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(i, j) += q * a_(k, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(i, j) += q * u_(k, j);
  }
  // col j += q * col k
  void add_col(std::size_t j, std::size_t k, const BigInt& q) {
    for (std::size_t i = 0; i < a_.rows(); ++i) a_(i, j) += q * a_(i, k);
    for (std::size_t i = 0; i < v_.rows(); ++i) v_(i, j) += q * v_(i, k);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(i, j) = -a_(i, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(i, j) = -u_(i, j);
  }

  IntegerMatrix a_, u_, v_;
};

}  // namespace

SmithNormalForm smith_normal_form(const IntegerMatrix& m) {
  SmithReducer r(m);
  r.run();
  SmithNormalForm out;
  out.diagonal = std::move(r.a());
  out.left = std::move(r.u());
  out.right = std::move(r.v());

  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < n; ++i) out.diagonal_entries.push_back(out.diagonal(i, i));
  std::vector<BigInt> zeros;
  for (const BigInt& d : out.diagonal_entries) {
    if (d == 0)
      zeros.push_back(0);
    else if (d != 1)
      out.nontrivial.factors.push_back(d);
  }
  for (const BigInt& d : out.nontrivial.factors) out.nontrivial.order *= d;
  if (!zeros.empty()) out.nontrivial.order = 0;
  out.nontrivial.factors.insert(out.nontrivial.factors.end(), zeros.begin(), zeros.end());

  bool chain = out.diagonal.is_diagonal();
  for (std::size_t i = 0; i < n && chain; ++i) {
    if (out.diagonal_entries[i] < 0) chain = false;
    if (i + 1 < n && out.diagonal_entries[i] != 0) {
      chain = chain && out.diagonal_entries[i + 1] % out.diagonal_entries[i] == 0;
    } else if (i + 1 < n) {
      chain = chain && out.diagonal_entries[i + 1] == 0;
    }
  }
  const BigInt du = out.left.determinant();
  const BigInt dv = out.right.determinant();
  out.certified = chain && (du == 1 || du == -1) && (dv == 1 || dv == -1) &&
                  out.left * m * out.right == out.diagonal;
  return out;
}

}  // namespace spl
