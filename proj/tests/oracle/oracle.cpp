#include "oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace oracle {

Dense zeros(std::size_t rows, std::size_t cols) { return Dense(rows, std::vector<mpq_class>(cols, 0)); }

Dense identity(std::size_t n) {
  Dense m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::size_t cols_of(const Dense& a, std::size_t fallback) { return a.empty() ? fallback : a[0].size(); }

Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = cols_of(b);
  Dense out = zeros(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

Dense add(const Dense& a, const Dense& b, int sign) {
  Dense out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += sign * b[i][j];
  }
  return out;
}

Dense transpose(const Dense& a) {
  Dense out = zeros(cols_of(a), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  }
  return out;
}

bool is_zero(const Dense& a) {
  for (const auto& row : a) {
    for (const auto& x : row) {
      if (x != 0) return false;
    }
  }
  return true;
}

namespace {

mpz_class residue(const mpq_class& x, long p) {
  const mpz_class pp = p;
  mpz_class den = x.get_den();
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t()) == 0) {
    throw std::domain_error("denominator divisible by p");
  }
  mpz_class r = (x.get_num() * inv) % pp;
  if (r < 0) r += pp;
  return r;
}

std::size_t rank_mod_p(const Dense& m, long p) {
  const mpz_class pp = p;
  std::vector<std::vector<mpz_class>> a;
  for (const auto& row : m) {
    std::vector<mpz_class> r;
    for (const auto& x : row) r.push_back(residue(x, p));
    a.push_back(std::move(r));
  }
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), a[r][c].get_mpz_t(), pp.get_mpz_t());
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const mpz_class f = (a[i][c] * inv) % pp;
      for (std::size_t j = c; j < cols; ++j) {
        a[i][j] = (a[i][j] - f * a[r][j]) % pp;
        if (a[i][j] < 0) a[i][j] += pp;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const Dense& m, long p) {
  if (p != 0) return rank_mod_p(m, p);
  Dense a = m;
  std::size_t r = 0;
  const std::size_t cols = cols_of(a);
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

mpq_class determinant(Dense a) {
  const std::size_t n = a.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const mpq_class f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

std::vector<mpz_class> smith_diagonal(const Dense& m) {
  std::vector<std::vector<mpz_class>> a;
  for (const auto& row : m) {
    std::vector<mpz_class> r;
    for (const auto& x : row) {
      if (x.get_den() != 1) throw std::domain_error("non-integer entry");
      r.push_back(x.get_num());
    }
    a.push_back(std::move(r));
  }
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) return diag;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const mpz_class q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const mpz_class q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

std::vector<mpz_class> determinantal_factors(const Dense& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = cols_of(m);
  std::vector<mpz_class> out;
  mpz_class previous = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    mpz_class g = 0;
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        Dense minor;
        for (std::size_t i = 0; i < rows; ++i) {
          if (!rsel[i]) continue;
          std::vector<mpq_class> row;
          for (std::size_t j = 0; j < cols; ++j) {
            if (csel[j]) row.push_back(m[i][j]);
          }
          minor.push_back(std::move(row));
        }
        const mpq_class det = determinant(minor);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpz_class(det.get_num()).get_mpz_t());
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

std::vector<std::size_t> betti(const std::vector<std::size_t>& dims, const std::vector<Dense>& d, long p) {
  std::vector<std::size_t> ranks(dims.size() + 1, 0);
  for (std::size_t n = 1; n < dims.size(); ++n) ranks[n] = rank(d[n], p);
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n + 1 < dims.size(); ++n) out.push_back(dims[n] - ranks[n] - ranks[n + 1]);
  return out;
}

std::vector<IntegralGroup> integral_homology(const std::vector<std::size_t>& dims, const std::vector<Dense>& d) {
  std::vector<IntegralGroup> out;
  std::vector<std::size_t> ranks(dims.size() + 1, 0);
  for (std::size_t n = 1; n < dims.size(); ++n) ranks[n] = rank(d[n]);
  for (std::size_t n = 0; n + 1 < dims.size(); ++n) {
    IntegralGroup g;
    g.free_rank = dims[n] - ranks[n] - ranks[n + 1];
    for (const auto& x : smith_diagonal(d[n + 1])) {
      if (x > 1) g.torsion.push_back(x);
    }
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

using Tuple = std::vector<int>;

std::vector<Tuple> tuples(int base, int length) {
  std::vector<Tuple> out;
  Tuple t(static_cast<std::size_t>(length), 0);
  for (;;) {
    out.push_back(t);
    int k = length - 1;
    while (k >= 0 && t[static_cast<std::size_t>(k)] == base - 1) t[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) return out;
    ++t[static_cast<std::size_t>(k)];
  }
}

std::size_t encode(const Tuple& t, int base) {
  std::size_t code = 0;
  for (int x : t) code = code * static_cast<std::size_t>(base) + static_cast<std::size_t>(x);
  return code;
}

// Alternating face sum on tuple sets of the given lengths.
Chains tuple_chains(int base, int top, int length_shift, const std::function<Tuple(int, int, const Tuple&)>& face) {
  Chains c;
  c.d.emplace_back();
  for (int n = 0; n <= top; ++n) c.dims.push_back(tuples(base, n + length_shift).size());
  for (int n = 1; n <= top; ++n) {
    const auto sources = tuples(base, n + length_shift);
    Dense d = zeros(c.dims[static_cast<std::size_t>(n - 1)], sources.size());
    for (std::size_t x = 0; x < sources.size(); ++x) {
      for (int i = 0; i <= n; ++i) {
        d[encode(face(n, i, sources[x]), base)][x] += (i % 2 == 0) ? 1 : -1;
      }
    }
    c.d.push_back(std::move(d));
  }
  return c;
}

}  // namespace

Chains circle_chains(int top) {
  // degree n: code 0 is the base point, code k in 1..n is the map with k zeros
  Chains c;
  c.d.emplace_back();
  for (int n = 0; n <= top; ++n) c.dims.push_back(static_cast<std::size_t>(n) + 1);
  for (int n = 1; n <= top; ++n) {
    Dense d = zeros(static_cast<std::size_t>(n), static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      for (int i = 0; i <= n; ++i) {
        int target = 0;
        if (k != 0) {
          const int zeros_left = i < k ? k - 1 : k;
          target = (zeros_left == 0 || zeros_left == n) ? 0 : zeros_left;
        }
        d[static_cast<std::size_t>(target)][static_cast<std::size_t>(k)] += (i % 2 == 0) ? 1 : -1;
      }
    }
    c.d.push_back(std::move(d));
  }
  return c;
}

Chains bar_chains(const std::vector<std::vector<int>>& table, int top) {
  const int order = static_cast<int>(table.size());
  return tuple_chains(order, top, 0, [&](int n, int i, const Tuple& g) {
    Tuple out;
    if (i == 0) return Tuple(g.begin() + 1, g.end());
    if (i == n) return Tuple(g.begin(), g.end() - 1);
    for (int k = 0; k < n; ++k) {
      if (k == i - 1) {
        out.push_back(table[static_cast<std::size_t>(g[static_cast<std::size_t>(k)])]
                           [static_cast<std::size_t>(g[static_cast<std::size_t>(k + 1)])]);
        ++k;
      } else {
        out.push_back(g[static_cast<std::size_t>(k)]);
      }
    }
    return out;
  });
}

Chains cyclic_bar_chains(const std::vector<std::vector<int>>& table, int top) {
  const int order = static_cast<int>(table.size());
  return tuple_chains(order, top, 1, [&](int n, int i, const Tuple& g) {
    auto at = [&](int k) { return static_cast<std::size_t>(g[static_cast<std::size_t>(k)]); };
    Tuple out;
    if (i == n) {
      out.push_back(table[at(n)][at(0)]);
      for (int k = 1; k < n; ++k) out.push_back(g[static_cast<std::size_t>(k)]);
      return out;
    }
    for (int k = 0; k <= n; ++k) {
      if (k == i) {
        out.push_back(table[at(k)][at(k + 1)]);
        ++k;
      } else {
        out.push_back(g[static_cast<std::size_t>(k)]);
      }
    }
    return out;
  });
}

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  }
  return t;
}

namespace {

Algebra blank(int dim) {
  Algebra a;
  a.dim = dim;
  a.mul.assign(static_cast<std::size_t>(dim),
               std::vector<std::vector<mpq_class>>(static_cast<std::size_t>(dim),
                                                   std::vector<mpq_class>(static_cast<std::size_t>(dim), 0)));
  a.unit.assign(static_cast<std::size_t>(dim), 0);
  return a;
}

}  // namespace

Algebra ground() {
  Algebra a = blank(1);
  a.mul[0][0][0] = 1;
  a.unit[0] = 1;
  return a;
}

Algebra truncpoly(int k) {
  Algebra a = blank(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; i + j < k; ++j) {
      a.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(i + j)] = 1;
    }
  }
  a.unit[0] = 1;
  return a;
}

Algebra productfield(int m) {
  Algebra a = blank(m);
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
    a.mul[i][i][i] = 1;
    a.unit[i] = 1;
  }
  return a;
}

Algebra group_algebra(const std::vector<std::vector<int>>& table) {
  const int order = static_cast<int>(table.size());
  Algebra a = blank(order);
  int e = 0;
  for (int g = 0; g < order; ++g) {
    bool left_unit = true;
    for (int h = 0; h < order; ++h) left_unit = left_unit && table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] == h;
    if (left_unit) e = g;
    for (int h = 0; h < order; ++h) {
      a.mul[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]
           [static_cast<std::size_t>(table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)])] = 1;
    }
  }
  a.unit[static_cast<std::size_t>(e)] = 1;
  return a;
}

namespace {

// d_i : A^{(x) n+1} -> A^{(x) n}.
Dense hochschild_face(const Algebra& a, int n, int i) {
  const auto sources = tuples(a.dim, n + 1);
  const std::size_t target_dim = tuples(a.dim, n).size();
  Dense d = zeros(target_dim, sources.size());
  for (std::size_t x = 0; x < sources.size(); ++x) {
    const Tuple& t = sources[x];
    const int left = i == n ? t[static_cast<std::size_t>(n)] : t[static_cast<std::size_t>(i)];
    const int right = i == n ? t[0] : t[static_cast<std::size_t>(i + 1)];
    for (int k = 0; k < a.dim; ++k) {
      const mpq_class& c = a.mul[static_cast<std::size_t>(left)][static_cast<std::size_t>(right)][static_cast<std::size_t>(k)];
      if (c == 0) continue;
      Tuple out;
      if (i == n) {
        out.push_back(k);
        for (int s = 1; s < n; ++s) out.push_back(t[static_cast<std::size_t>(s)]);
      } else {
        for (int s = 0; s <= n; ++s) {
          if (s == i) {
            out.push_back(k);
            ++s;
          } else {
            out.push_back(t[static_cast<std::size_t>(s)]);
          }
        }
      }
      d[encode(out, a.dim)][x] += c;
    }
  }
  return d;
}

Dense face_sum(const Algebra& a, int n, int last) {
  Dense d = zeros(tuples(a.dim, n).size(), tuples(a.dim, n + 1).size());
  for (int i = 0; i <= last; ++i) d = add(d, hochschild_face(a, n, i), i % 2 == 0 ? 1 : -1);
  return d;
}

}  // namespace

Dense hochschild_b(const Algebra& a, int n) { return face_sum(a, n, n); }
Dense hochschild_bprime(const Algebra& a, int n) { return face_sum(a, n, n - 1); }

Dense signed_rotation(const Algebra& a, int n) {
  const auto sources = tuples(a.dim, n + 1);
  Dense t = zeros(sources.size(), sources.size());
  for (std::size_t x = 0; x < sources.size(); ++x) {
    Tuple out{sources[x].back()};
    out.insert(out.end(), sources[x].begin(), sources[x].end() - 1);
    t[encode(out, a.dim)][x] = (n % 2 == 0) ? 1 : -1;
  }
  return t;
}

Dense norm(const Algebra& a, int n) {
  const Dense t = signed_rotation(a, n);
  Dense power = identity(t.size());
  Dense sum = zeros(t.size(), t.size());
  for (int k = 0; k <= n; ++k) {
    sum = add(sum, power);
    power = multiply(t, power);
  }
  return sum;
}

std::vector<std::size_t> hh_betti(const Algebra& a, int top, long p) {
  std::vector<std::size_t> dims;
  std::vector<Dense> d{Dense{}};
  for (int n = 0; n <= top + 1; ++n) dims.push_back(tuples(a.dim, n + 1).size());
  for (int n = 1; n <= top + 1; ++n) d.push_back(hochschild_b(a, n));
  return betti(dims, d, p);
}

std::vector<Dense> cyclic_total(const Algebra& a, int top, std::vector<std::size_t>& dims) {
  const int columns = top + 1;
  auto cdim = [&](int q) { return tuples(a.dim, q + 1).size(); };
  // cell offsets inside each total degree, by increasing column p
  auto offset = [&](int n, int p) {
    std::size_t o = 0;
    for (int r = 0; r < p; ++r) o += cdim(n - r);
    return o;
  };
  dims.clear();
  for (int n = 0; n <= top + 1; ++n) {
    std::size_t total = 0;
    for (int p = 0; p <= std::min(n, columns); ++p) total += cdim(n - p);
    dims.push_back(total);
  }
  std::vector<Dense> d{Dense{}};
  for (int n = 1; n <= top + 1; ++n) {
    Dense m = zeros(dims[static_cast<std::size_t>(n - 1)], dims[static_cast<std::size_t>(n)]);
    for (int p = 0; p <= std::min(n, columns); ++p) {
      const int q = n - p;
      auto place = [&](const Dense& block, std::size_t row0, std::size_t col0) {
        for (std::size_t i = 0; i < block.size(); ++i) {
          for (std::size_t j = 0; j < block[i].size(); ++j) m[row0 + i][col0 + j] += block[i][j];
        }
      };
      const std::size_t col0 = offset(n, p);
      if (q >= 1) {
        const Dense v = p % 2 == 0 ? hochschild_b(a, q) : add(zeros(cdim(q - 1), cdim(q)), hochschild_bprime(a, q), -1);
        place(v, offset(n - 1, p), col0);
      }
      if (p >= 1) {
        const Dense h = p % 2 == 1 ? add(identity(cdim(q)), signed_rotation(a, q), -1) : norm(a, q);
        place(h, offset(n - 1, p - 1), col0);
      }
    }
    d.push_back(std::move(m));
  }
  return d;
}

std::vector<std::size_t> hc_betti(const Algebra& a, int top, long p) {
  std::vector<std::size_t> dims;
  const auto d = cyclic_total(a, top, dims);
  return betti(dims, d, p);
}

namespace {

// Quotient of Q^ambient by a span: reduced rows plus pivot bookkeeping.
struct Quotient {
  std::size_t ambient = 0;
  Dense rows;                    // reduced echelon rows
  std::vector<long> pivot_row;   // per coordinate, row index or -1
  std::vector<std::size_t> free; // non-pivot coordinates

  Quotient(std::size_t n, Dense spanning) : ambient(n), pivot_row(n, -1) {
    Dense a = std::move(spanning);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < a.size(); ++c) {
      std::size_t piv = r;
      while (piv < a.size() && a[piv][c] == 0) ++piv;
      if (piv == a.size()) continue;
      std::swap(a[piv], a[r]);
      const mpq_class lead = a[r][c];
      for (auto& x : a[r]) x /= lead;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == r || a[i][c] == 0) continue;
        const mpq_class f = a[i][c];
        for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
      }
      pivot_row[c] = static_cast<long>(r);
      ++r;
    }
    a.resize(r);
    rows = std::move(a);
    for (std::size_t c = 0; c < n; ++c) {
      if (pivot_row[c] < 0) free.push_back(c);
    }
  }

  std::vector<mpq_class> coordinates(std::vector<mpq_class> v) const {
    for (std::size_t c = 0; c < ambient; ++c) {
      if (pivot_row[c] < 0 || v[c] == 0) continue;
      const mpq_class f = v[c];
      for (std::size_t j = 0; j < ambient; ++j) v[j] -= f * rows[static_cast<std::size_t>(pivot_row[c])][j];
    }
    std::vector<mpq_class> out;
    for (std::size_t c : free) out.push_back(v[c]);
    return out;
  }
};

}  // namespace

KaehlerDims kaehler_dims(const Algebra& a) {
  const std::size_t d = static_cast<std::size_t>(a.dim);
  auto idx = [&](std::size_t i, std::size_t j) { return i * d + j; };
  // a0 d(bc) = a0 b dc + a0 c db on basis triples
  Dense rel;
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t c = 0; c < d; ++c) {
        std::vector<mpq_class> v(d * d, 0);
        for (std::size_t k = 0; k < d; ++k) {
          v[idx(x, k)] += a.mul[b][c][k];
          const mpq_class xb = a.mul[x][b][k];
          const mpq_class xc = a.mul[x][c][k];
          if (xb != 0) v[idx(k, c)] -= xb;
          if (xc != 0) v[idx(k, b)] -= xc;
        }
        rel.push_back(std::move(v));
      }
    }
  }
  const Quotient omega1(d * d, rel);
  KaehlerDims out;
  out.omega1 = omega1.free.size();
  const std::size_t m = out.omega1;
  if (m == 0) return out;

  // action of basis element s on the quotient basis of Omega^1
  std::vector<Dense> act(d, zeros(m, m));
  for (std::size_t s = 0; s < d; ++s) {
    for (std::size_t g = 0; g < m; ++g) {
      const std::size_t i = omega1.free[g] / d;
      const std::size_t j = omega1.free[g] % d;
      std::vector<mpq_class> v(d * d, 0);
      for (std::size_t k = 0; k < d; ++k) v[idx(k, j)] += a.mul[s][i][k];
      const auto coords = omega1.coordinates(std::move(v));
      for (std::size_t h = 0; h < m; ++h) act[s][h][g] = coords[h];
    }
  }
  // Omega^1 (x)_A Omega^1 modulo w (x) w
  auto pos = [&](std::size_t u, std::size_t w) { return u * m + w; };
  Dense rel2;
  for (std::size_t s = 0; s < d; ++s) {
    for (std::size_t u = 0; u < m; ++u) {
      for (std::size_t w = 0; w < m; ++w) {
        std::vector<mpq_class> v(m * m, 0);
        for (std::size_t h = 0; h < m; ++h) {
          v[pos(h, w)] += act[s][h][u];
          v[pos(u, h)] -= act[s][h][w];
        }
        rel2.push_back(std::move(v));
      }
    }
  }
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t w = u; w < m; ++w) {
      std::vector<mpq_class> v(m * m, 0);
      v[pos(u, w)] += 1;
      v[pos(w, u)] += 1;
      rel2.push_back(std::move(v));
    }
  }
  out.omega2 = m * m - rank(rel2);
  return out;
}

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

PeriodicMap normalized(int m, int n, std::vector<int> values) {
  const int shift = floor_div(values[0], n + 1) * (n + 1);
  for (int& v : values) v -= shift;
  return {m, n, std::move(values)};
}

int evaluate(const PeriodicMap& f, int x) {
  const int q = floor_div(x, f.m + 1);
  const int r = x - q * (f.m + 1);
  return f.values[static_cast<std::size_t>(r)] + q * (f.n + 1);
}

}  // namespace

PeriodicMap periodic_identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  std::iota(v.begin(), v.end(), 0);
  return {n, n, v};
}

PeriodicMap periodic_face(int n, int i) {
  std::vector<int> v;
  for (int x = 0; x < n; ++x) v.push_back(x < i ? x : x + 1);
  return normalized(n - 1, n, v);
}

PeriodicMap periodic_degeneracy(int n, int j) {
  std::vector<int> v;
  for (int x = 0; x <= n + 1; ++x) v.push_back(x <= j ? x : x - 1);
  return normalized(n + 1, n, v);
}

PeriodicMap periodic_rotation(int n) {
  std::vector<int> v;
  for (int x = 0; x <= n; ++x) v.push_back(x - 1);
  return normalized(n, n, v);
}

PeriodicMap periodic_compose(const PeriodicMap& f, const PeriodicMap& g) {
  if (g.n != f.m) throw std::invalid_argument("not composable");
  std::vector<int> v;
  for (int x = 0; x <= g.m; ++x) v.push_back(evaluate(f, g.values[static_cast<std::size_t>(x)]));
  return normalized(g.m, f.n, v);
}

std::size_t count_monotone(int m, int n) {
  std::size_t count = 0;
  std::vector<int> v(static_cast<std::size_t>(m) + 1, 0);
  for (;;) {
    ++count;
    int k = m;
    while (k >= 0 && v[static_cast<std::size_t>(k)] == n) --k;
    if (k < 0) return count;
    const int next = v[static_cast<std::size_t>(k)] + 1;
    for (int s = k; s <= m; ++s) v[static_cast<std::size_t>(s)] = next;
  }
}

}  // namespace oracle
