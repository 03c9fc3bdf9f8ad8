#pragma once

#include "gwl/lambda_ring.hpp"
#include "gwl/milnor.hpp"
#include "gwl/symfunc.hpp"

#include <cstddef>
#include <span>
#include <vector>

// Hot loops with a serial reference and an OpenMP version.  Both versions
// return identical results regardless of thread count.
namespace gwl::kernels {

MultiPoly poly_product_serial(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_product_parallel(const MultiPoly& a, const MultiPoly& b);
/// Parallel above a term-pair threshold, serial otherwise.
MultiPoly poly_product(const MultiPoly& a, const MultiPoly& b);

F2Poly f2_product_serial(const F2Poly& a, const F2Poly& b);
F2Poly f2_product_parallel(const F2Poly& a, const F2Poly& b);
F2Poly f2_product(const F2Poly& a, const F2Poly& b);

/// All non-zero products l * r, sorted and deduplicated.
std::vector<GroupElement> pairwise_products_serial(const RingModel& m,
                                                   std::span<const GroupElement> left,
                                                   std::span<const GroupElement> right);
std::vector<GroupElement> pairwise_products_parallel(const RingModel& m,
                                                     std::span<const GroupElement> left,
                                                     std::span<const GroupElement> right);
std::vector<GroupElement> pairwise_products(const RingModel& m,
                                            std::span<const GroupElement> left,
                                            std::span<const GroupElement> right);

ClauwensReport clauwens_scan_serial(const RingModel& m, std::span<const GroupElement> elements);
ClauwensReport clauwens_scan_parallel(const RingModel& m, std::span<const GroupElement> elements);

/// Work size (term pairs or element pairs) from which the dispatchers go parallel.
inline constexpr std::size_t parallel_threshold = 4096;

}  // namespace gwl::kernels
