#pragma once

#include <cstddef>

namespace graphmon {

enum class OutputFormat { text, json };

/// Search and enumeration bounds shared by the library and the CLI.
struct Config {
  std::size_t depth = 12;          // rewrite steps explored per side
  std::size_t size_bound = 4;      // total multiplicity of swept elements
  std::size_t n_bound = 3;         // largest multiplier in order checks
  std::size_t lattice_cap = 20;    // max vertices for subset enumeration
  std::size_t reduct_cap = 100000; // max elements held by one reduct search
  OutputFormat format = OutputFormat::text;

  /// Throws DomainError when a bound is zero or the lattice cap exceeds the
  /// width of the subset masks.
  void validate() const;
};

/// Budget used by the confluence property tests for zig-zags of length d.
constexpr std::size_t zigzag_budget(std::size_t d) { return 4 * d + 8; }

}  // namespace graphmon
