#include "cayley/multivec.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace cayley {

BladeBasis::BladeBasis(int dim, int degree) : dim_(dim), degree_(degree) {
  index_.fill(-1);
  std::vector<int> current;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(current.size()) == degree) {
      Blade b = 0;
      for (int i : current) b = static_cast<Blade>(b | (1u << (i - 1)));
      index_[b] = static_cast<int>(blades_.size());
      blades_.push_back(b);
      return;
    }
    for (int i = start; i <= dim; ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
}

const BladeBasis& BladeBasis::get(int dim, int degree) {
  if (dim < 1 || dim > kMaxDim || degree < 0 || degree > dim) {
    throw PreconditionError("no blade basis for dim " + std::to_string(dim) + ", degree " + std::to_string(degree));
  }
  static std::once_flag once;
  static std::unique_ptr<BladeBasis> table[kMaxDim + 1][kMaxDim + 1];
  std::call_once(once, [] {
    for (int n = 1; n <= kMaxDim; ++n) {
      for (int k = 0; k <= n; ++k) table[n][k].reset(new BladeBasis(n, k));
    }
  });
  return *table[dim][degree];
}

int wedge_sign(Blade a, Blade b) {
  if (a & b) return 0;
  // Count pairs (i in a, j in b) with i > j.
  int inversions = 0;
  for (int j = 0; j < 16; ++j) {
    if (!(b & (1u << j))) continue;
    inversions += std::popcount(static_cast<unsigned>(a >> (j + 1)));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Blade make_blade(std::span<const int> indices, int dim, int* sign) {
  Blade b = 0;
  int s = 1;
  for (std::size_t p = 0; p < indices.size(); ++p) {
    const int i = indices[p];
    if (i < 1 || i > dim) throw PreconditionError("blade index " + std::to_string(i) + " out of range 1.." + std::to_string(dim));
    const Blade bit = static_cast<Blade>(1u << (i - 1));
    if (b & bit) throw PreconditionError("repeated blade index " + std::to_string(i));
    // Moving index i past the larger ones already placed.
    if (std::popcount(static_cast<unsigned>(b >> i)) % 2 == 1) s = -s;
    b = static_cast<Blade>(b | bit);
  }
  if (sign) *sign = s;
  return b;
}

std::vector<int> blade_indices(Blade b) {
  std::vector<int> out;
  for (int i = 0; i < 16; ++i) {
    if (b & (1u << i)) out.push_back(i + 1);
  }
  return out;
}

std::string blade_name(Blade b) {
  std::string out = "e";
  for (int i : blade_indices(b)) out += std::to_string(i);
  return out;
}

}  // namespace cayley
