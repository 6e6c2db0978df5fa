#include "lrlab/dimension.hpp"

#include "lrlab/error.hpp"

namespace lrlab {

BigInt gl_dimension(const Partition& p, int d) {
  if (d < 1) throw Error(Errc::IndexOutOfRange, "dimension needs d >= 1");
  if (p.length() > d) return 0;
  const Partition cols = conjugate(p);
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 1; i <= p.length(); ++i) {
    for (int j = 1; j <= p[i]; ++j) {
      num *= d + j - i;
      den *= (p[i] - j) + (cols[j] - i) + 1;
    }
  }
  return num / den;
}

}  // namespace lrlab
