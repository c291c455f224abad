#include "f5/stats.hpp"

#include <utility>

namespace f5 {

std::string render_stats(const RunStats& s, std::string_view engine, std::size_t reduced_basis_size) {
  const std::pair<const char*, std::size_t> rows[] = {
      {"pairs-created", s.pairs_created},
      {"rejected-f5-criterion", s.rejected_f5},
      {"rejected-rewritten", s.rejected_rewritten},
      {"rejected-collision", s.rejected_collision},
      {"rejected-product", s.rejected_product},
      {"rejected-chain", s.rejected_chain},
      {"reductions-to-zero", s.reductions_to_zero},
      {"reduction-steps", s.reduction_steps},
      {"splits", s.splits},
      {"signature-inversions", s.signature_inversions},
      {"basis-size", s.basis_size},
      {"reduced-basis-size", reduced_basis_size},
  };
  std::string out = "engine: " + std::string(engine) + "\n";
  for (const auto& [key, value] : rows) out += std::string(key) + ": " + std::to_string(value) + "\n";
  return out;
}

}  // namespace f5
