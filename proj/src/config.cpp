#include "graphmon/config.hpp"

#include "graphmon/error.hpp"

namespace graphmon {

void Config::validate() const {
  if (depth == 0 || size_bound == 0 || n_bound == 0 || lattice_cap == 0 ||
      reduct_cap == 0)
    throw DomainError("bounds must be positive");
  if (lattice_cap > 30) throw DomainError("lattice cap must be at most 30");
}

}  // namespace graphmon
