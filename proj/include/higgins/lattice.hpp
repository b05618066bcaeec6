// Integer lattices in Z^n in Hermite normal form, used for cosets of
// subgroups of finitely generated abelian groups.

#ifndef HIGGINS_LATTICE_HPP_
#define HIGGINS_LATTICE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace higgins {

  using IntVector = std::vector<std::int64_t>;

  struct IntVectorHash {
    std::size_t operator()(IntVector const& v) const noexcept {
      std::size_t h = 0x84222325cbf29ce4ULL;
      for (auto x : v) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6)
             + (h >> 2);
      }
      return h;
    }
  };

  class Lattice {
   public:
    // The lattice spanned by rows (each of length dim).
    Lattice(std::size_t dim, std::vector<IntVector> const& rows);

    std::size_t dim() const noexcept {
      return _dim;
    }
    std::size_t rank() const noexcept {
      return _hnf.size();
    }
    std::vector<IntVector> const& basis() const noexcept {
      return _hnf;
    }
    std::vector<std::size_t> const& pivots() const noexcept {
      return _pivot;
    }

    // The unique representative of v + L whose pivot coordinates lie in
    // [0, pivot). If coeffs is given it receives c with
    // v = reduce(v) + sum_i c[i] * rows[i] (indices of the input rows).
    IntVector reduce(IntVector v, IntVector* coeffs = nullptr) const;
    bool      contains(IntVector const& v) const;

   private:
    std::size_t              _dim;
    std::size_t              _num_input;
    std::vector<IntVector>   _hnf;
    std::vector<IntVector>   _transform;  // _hnf[i] = sum_j _transform[i][j] rows[j]
    std::vector<std::size_t> _pivot;
  };

}  // namespace higgins

#endif  // HIGGINS_LATTICE_HPP_
