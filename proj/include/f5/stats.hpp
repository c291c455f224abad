#ifndef F5_STATS_HPP
#define F5_STATS_HPP

#include <cstddef>
#include <string>
#include <string_view>

namespace f5 {

struct RunStats {
  std::size_t pairs_created = 0;
  std::size_t rejected_f5 = 0;
  std::size_t rejected_rewritten = 0;
  std::size_t rejected_collision = 0;
  std::size_t rejected_product = 0;
  std::size_t rejected_chain = 0;
  std::size_t reductions_to_zero = 0;
  std::size_t reduction_steps = 0;
  std::size_t splits = 0;
  std::size_t signature_inversions = 0;
  std::size_t witness_checks = 0;
  std::size_t basis_size = 0;
};

/// `key: value` lines, one per counter, identical keys for every engine.
std::string render_stats(const RunStats& stats, std::string_view engine,
                         std::size_t reduced_basis_size);

}  // namespace f5

#endif  // F5_STATS_HPP
