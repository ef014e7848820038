#include "trigrid/reduction.hpp"

namespace trigrid {

std::vector<Rational> tail_sequence_exact(int n) {
  if (n < 1) throw std::invalid_argument("tail_sequence: n must be >= 1");
  return top_tails(reduce_streaming(uniform_grid(n, Rational(1))));
}

std::vector<BigFloat> tail_sequence_float(int n, unsigned precision_bits) {
  if (n < 1) throw std::invalid_argument("tail_sequence: n must be >= 1");
  return top_tails(reduce_streaming(uniform_grid(n, BigFloat(1L, precision_bits))));
}

}  // namespace trigrid
