#include "ssc/integrals.hpp"

namespace ssc::integrals {

FormalDegree formal_degree_check(int q, std::uint64_t cap) {
  if (q > 7) throw BadParameter("formal degree check is limited to q <= 7");
  const auto orders = gsp4::residue_group_order(q, cap);
  FormalDegree r;
  r.index = orders.index();
  // vol(Z\K) = 1 and vol(Z\H') = 2 vol(Z\H) = 2 / [K : H cap K]; f_min is its own matrix coefficient
  r.volume = Rational(2, static_cast<long>(r.index));
  r.volume.canonicalize();
  r.degree = 1 / r.volume;
  return r;
}

}  // namespace ssc::integrals
