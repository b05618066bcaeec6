#include "higgins/lattice.hpp"

#include <cstdlib>
#include <utility>

#include "higgins/error.hpp"

namespace higgins {

  namespace {
    std::int64_t floor_div(std::int64_t a, std::int64_t b) {
      std::int64_t q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
      }
      return q;
    }

    void axpy(IntVector& y, std::int64_t a, IntVector const& x) {
      for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] += a * x[i];
      }
    }
  }  // namespace

  Lattice::Lattice(std::size_t dim, std::vector<IntVector> const& rows)
      : _dim(dim), _num_input(rows.size()) {
    std::vector<IntVector> M = rows;
    std::vector<IntVector> T(rows.size(), IntVector(rows.size(), 0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != dim) {
        throw Error("lattice row has the wrong dimension");
      }
      T[i][i] = 1;
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim && r < M.size(); ++c) {
      // Euclid on column c among rows r..end
      while (true) {
        std::size_t best = M.size();
        for (std::size_t i = r; i < M.size(); ++i) {
          if (M[i][c] != 0
              && (best == M.size() || std::llabs(M[i][c]) < std::llabs(M[best][c]))) {
            best = i;
          }
        }
        if (best == M.size()) {
          break;
        }
        std::swap(M[r], M[best]);
        std::swap(T[r], T[best]);
        bool done = true;
        for (std::size_t i = r + 1; i < M.size(); ++i) {
          if (M[i][c] != 0) {
            std::int64_t q = M[i][c] / M[r][c];
            axpy(M[i], -q, M[r]);
            axpy(T[i], -q, T[r]);
            if (M[i][c] != 0) {
              done = false;
            }
          }
        }
        if (done) {
          break;
        }
      }
      if (M[r][c] == 0) {
        continue;
      }
      if (M[r][c] < 0) {
        for (auto& x : M[r]) {
          x = -x;
        }
        for (auto& x : T[r]) {
          x = -x;
        }
      }
      for (std::size_t i = 0; i < r; ++i) {
        std::int64_t q = floor_div(M[i][c], M[r][c]);
        axpy(M[i], -q, M[r]);
        axpy(T[i], -q, T[r]);
      }
      _pivot.push_back(c);
      ++r;
    }
    M.resize(r);
    T.resize(r);
    _hnf       = std::move(M);
    _transform = std::move(T);
  }

  IntVector Lattice::reduce(IntVector v, IntVector* coeffs) const {
    if (v.size() != _dim) {
      throw Error("vector has the wrong dimension");
    }
    if (coeffs != nullptr) {
      coeffs->assign(_num_input, 0);
    }
    for (std::size_t i = 0; i < _hnf.size(); ++i) {
      std::size_t  c = _pivot[i];
      std::int64_t q = floor_div(v[c], _hnf[i][c]);
      if (q != 0) {
        axpy(v, -q, _hnf[i]);
        if (coeffs != nullptr) {
          axpy(*coeffs, q, _transform[i]);
        }
      }
    }
    return v;
  }

  bool Lattice::contains(IntVector const& v) const {
    IntVector r = reduce(v);
    for (auto x : r) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

}  // namespace higgins
