#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graphmon/element.hpp"
#include "graphmon/word_problem.hpp"

namespace graphmon {

/// Partition of a list of elements into congruence classes. Elements are
/// compared only against class representatives inside their bucket, so a
/// bucket key must be a congruence invariant.
struct Partition {
  std::vector<std::size_t> class_of;          // per element
  std::vector<std::size_t> representative;    // per class: element index
  /// Class pairs whose representatives compared Unknown.
  std::set<std::pair<std::size_t, std::size_t>> unresolved;

  std::size_t class_count() const noexcept { return representative.size(); }
  Verdict relation(std::size_t i, std::size_t j) const;
};

using Comparator = std::function<Verdict(const Element&, const Element&)>;
using BucketKey = std::function<VertexSet(const Element&)>;

/// Buckets are processed in parallel; class numbering follows the order of
/// first appearance, independent of scheduling.
Partition partition_classes(const std::vector<Element>& elems,
                            const Comparator& cmp, const BucketKey& key);

/// Congruence classes of every element of size at most `max_size`.
class ClassTable {
 public:
  ClassTable(const WordProblem& wp, std::size_t max_size,
             std::optional<std::size_t> depth = std::nullopt);

  const std::vector<Element>& elements() const noexcept { return elems_; }
  const Partition& partition() const noexcept { return part_; }
  std::size_t max_size() const noexcept { return max_size_; }
  /// Throws DomainError for elements beyond the table.
  std::size_t index(const Element& x) const;
  Verdict relation(const Element& x, const Element& y) const;

 private:
  std::size_t max_size_;
  std::vector<Element> elems_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
  Partition part_;
};

enum class PropertyVerdict { holds, counterexample, unknown };
std::string to_string(PropertyVerdict v);

struct PropertyReport {
  std::string name;
  PropertyVerdict verdict = PropertyVerdict::holds;
  std::size_t size_bound = 0;
  std::size_t n_bound = 0;
  std::size_t depth = 0;
  /// Instances examined and instances left undecided.
  std::size_t checked = 0;
  std::size_t undecided = 0;
  /// Counterexample elements, labelled (e.g. {"a", x}, {"b", y}).
  std::vector<std::pair<std::string, Element>> payload;
  std::size_t multiplier = 0;  // n of a counterexample, when relevant
  std::string detail;
};

/// Sweeps report holds unless a counterexample or an undecided instance is
/// found; the first counterexample in enumeration order wins.
PropertyReport is_prime(const WordProblem& wp, const Element& p,
                        std::size_t size_bound,
                        std::optional<std::size_t> depth = std::nullopt);
PropertyReport check_separativity(const WordProblem& wp, std::size_t size_bound,
                                  std::size_t n_bound,
                                  std::optional<std::size_t> depth = std::nullopt);
PropertyReport check_unperforation(const WordProblem& wp,
                                   std::size_t size_bound, std::size_t n_bound,
                                   std::optional<std::size_t> depth = std::nullopt);
/// Every equal pair of decompositions a1 + a2 ~ b1 + b2 with both sides of
/// size at most size_bound refines, with verified row and column sums.
PropertyReport check_refinement(const WordProblem& wp, std::size_t size_bound,
                                std::optional<std::size_t> depth = std::nullopt);

/// Serial references for the parallel sweeps.
PropertyReport check_separativity_serial(const WordProblem& wp,
                                         std::size_t size_bound,
                                         std::size_t n_bound,
                                         std::optional<std::size_t> depth = std::nullopt);
PropertyReport check_unperforation_serial(const WordProblem& wp,
                                          std::size_t size_bound,
                                          std::size_t n_bound,
                                          std::optional<std::size_t> depth = std::nullopt);

/// Pairwise non-congruent elements of size at most size_bound that pass
/// is_prime at the same bound. Undecided candidates are left out.
std::vector<Element> primes_up_to(const WordProblem& wp, std::size_t size_bound,
                                  std::optional<std::size_t> depth = std::nullopt);

/// Re-derives every claim of a counterexample payload through decide/leq.
bool verify_counterexample(const WordProblem& wp, const PropertyReport& r);

}  // namespace graphmon
