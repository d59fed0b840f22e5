#include "graphmon/properties.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "graphmon/error.hpp"

namespace graphmon {

using LeqValue = LeqVerdict::Value;

// -------------------------------------------------------------- partition

Verdict Partition::relation(std::size_t i, std::size_t j) const {
  const std::size_t a = class_of.at(i);
  const std::size_t b = class_of.at(j);
  if (a == b) return Verdict::equal;
  if (unresolved.count({std::min(a, b), std::max(a, b)})) return Verdict::unknown;
  return Verdict::distinct;
}

namespace {

std::string key_string(const VertexSet& s) {
  std::string out(s.universe(), '0');
  for (Vertex v : s.members()) out[v] = '1';
  return out;
}

struct BucketResult {
  std::vector<std::size_t> reps;                   // element indices
  std::vector<std::size_t> local;                  // per member: rep slot
  std::vector<std::pair<std::size_t, std::size_t>> unresolved;  // rep slots
};

}  // namespace

Partition partition_classes(const std::vector<Element>& elems,
                            const Comparator& cmp, const BucketKey& key) {
  std::map<std::string, std::size_t> bucket_of;
  std::vector<std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    auto [it, fresh] = bucket_of.emplace(key_string(key(elems[i])), buckets.size());
    if (fresh) buckets.emplace_back();
    buckets[it->second].push_back(i);
  }

  std::vector<BucketResult> results(buckets.size());
  const auto count = static_cast<long long>(buckets.size());
#pragma omp parallel for schedule(dynamic)
  for (long long b = 0; b < count; ++b) {
    BucketResult& r = results[b];
    for (std::size_t i : buckets[b]) {
      std::optional<std::size_t> found;
      std::vector<std::size_t> unknown;
      for (std::size_t slot = 0; slot < r.reps.size() && !found; ++slot) {
        switch (cmp(elems[i], elems[r.reps[slot]])) {
          case Verdict::equal: found = slot; break;
          case Verdict::unknown: unknown.push_back(slot); break;
          case Verdict::distinct: break;
        }
      }
      if (!found) {
        found = r.reps.size();
        r.reps.push_back(i);
        for (std::size_t u : unknown) r.unresolved.emplace_back(u, *found);
      }
      r.local.push_back(*found);
    }
  }

  // Global numbering by the element index of each representative.
  std::vector<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> reps;
  for (std::size_t b = 0; b < buckets.size(); ++b)
    for (std::size_t slot = 0; slot < results[b].reps.size(); ++slot)
      reps.push_back({results[b].reps[slot], {b, slot}});
  std::sort(reps.begin(), reps.end());
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> global;
  Partition p;
  for (const auto& [elem, where] : reps) {
    global[where] = p.representative.size();
    p.representative.push_back(elem);
  }
  p.class_of.assign(elems.size(), 0);
  for (std::size_t b = 0; b < buckets.size(); ++b) {
    for (std::size_t k = 0; k < buckets[b].size(); ++k)
      p.class_of[buckets[b][k]] = global.at({b, results[b].local[k]});
    for (auto [u, v] : results[b].unresolved) {
      std::size_t x = global.at({b, u});
      std::size_t y = global.at({b, v});
      p.unresolved.insert({std::min(x, y), std::max(x, y)});
    }
  }
  return p;
}

ClassTable::ClassTable(const WordProblem& wp, std::size_t max_size,
                       std::optional<std::size_t> depth)
    : max_size_(max_size),
      elems_(elements_up_to(wp.graph().vertex_count(), max_size)) {
  for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
  part_ = partition_classes(
      elems_,
      [&](const Element& x, const Element& y) { return wp.compare(x, y, depth); },
      [&](const Element& x) { return wp.invariants().closure(x); });
}

std::size_t ClassTable::index(const Element& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) throw DomainError("element lies outside the class table");
  return it->second;
}

Verdict ClassTable::relation(const Element& x, const Element& y) const {
  return part_.relation(index(x), index(y));
}

// ------------------------------------------------------------ properties

std::string to_string(PropertyVerdict v) {
  switch (v) {
    case PropertyVerdict::holds: return "holds-within-bounds";
    case PropertyVerdict::counterexample: return "counterexample";
    case PropertyVerdict::unknown: return "unknown";
  }
  return "?";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::size_t total(const Element& x) { return x.size().get_ui(); }

void finish(PropertyReport& r) {
  if (!r.payload.empty())
    r.verdict = PropertyVerdict::counterexample;
  else if (r.undecided > 0)
    r.verdict = PropertyVerdict::unknown;
  else
    r.verdict = PropertyVerdict::holds;
}

PropertyReport start(const WordProblem& wp, std::string name,
                     std::size_t size_bound, std::size_t n_bound,
                     std::optional<std::size_t> depth) {
  PropertyReport r;
  r.name = std::move(name);
  r.size_bound = size_bound;
  r.n_bound = n_bound;
  r.depth = depth.value_or(wp.config().depth);
  return r;
}

// Outcome of one sweep instance.
enum class Outcome { ok, undecided, counterexample };

// Runs outcome(i) for i in [0, count), serially or with OpenMP, and returns
// the checked count, undecided count and first counterexample index.
template <class F>
void sweep(std::size_t count, bool parallel, F&& outcome, PropertyReport& r,
           std::size_t& first) {
  std::size_t undecided = 0;
  std::size_t best = kNone;
  const auto n = static_cast<long long>(count);
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : undecided) reduction(min : best)
    for (long long i = 0; i < n; ++i) {
      switch (outcome(static_cast<std::size_t>(i))) {
        case Outcome::ok: break;
        case Outcome::undecided: ++undecided; break;
        case Outcome::counterexample:
          best = std::min(best, static_cast<std::size_t>(i));
          break;
      }
    }
  } else {
    for (long long i = 0; i < n && best == kNone; ++i) {
      switch (outcome(static_cast<std::size_t>(i))) {
        case Outcome::ok: break;
        case Outcome::undecided: ++undecided; break;
        case Outcome::counterexample: best = static_cast<std::size_t>(i); break;
      }
    }
  }
  r.checked += count;
  r.undecided += undecided;
  first = best;
}

}  // namespace

PropertyReport is_prime(const WordProblem& wp, const Element& p,
                        std::size_t size_bound,
                        std::optional<std::size_t> depth) {
  if (p.universe() != wp.graph().vertex_count())
    throw DomainError("element does not belong to the graph");
  if (p.is_zero()) throw DomainError("0 is not a candidate prime");
  PropertyReport r = start(wp, "prime", size_bound, 0, depth);
  const auto elems = elements_up_to(wp.graph().vertex_count(), size_bound);
  std::vector<LeqValue> below(elems.size());
  const auto m = static_cast<long long>(elems.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < m; ++i) below[i] = wp.leq(p, elems[i], depth).value;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j)
      if (total(elems[i]) + total(elems[j]) <= size_bound) pairs.emplace_back(i, j);

  std::size_t first = kNone;
  sweep(pairs.size(), true, [&](std::size_t k) {
    auto [i, j] = pairs[k];
    if (below[i] == LeqValue::yes || below[j] == LeqValue::yes) return Outcome::ok;
    const LeqValue sum = wp.leq(p, elems[i] + elems[j], depth).value;
    if (sum == LeqValue::no) return Outcome::ok;
    if (sum == LeqValue::yes && below[i] == LeqValue::no && below[j] == LeqValue::no)
      return Outcome::counterexample;
    return Outcome::undecided;
  }, r, first);
  if (first != kNone) {
    r.payload = {{"p", p}, {"a1", elems[pairs[first].first]},
                 {"a2", elems[pairs[first].second]}};
    r.detail = "p <= a1 + a2 but neither p <= a1 nor p <= a2";
  }
  finish(r);
  return r;
}

namespace {

PropertyReport separativity(const WordProblem& wp, std::size_t size_bound,
                            std::size_t n_bound, std::optional<std::size_t> depth,
                            bool parallel) {
  PropertyReport r = start(wp, "separativity", size_bound, n_bound, depth);
  const ClassTable table(wp, 2 * size_bound, depth);
  const auto elems = elements_up_to(wp.graph().vertex_count(), size_bound);
  const std::size_t m = elems.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  const Integer n(static_cast<unsigned long>(n_bound));

  // c <= n*a is monotone in n, so n = n_bound covers every smaller n.
  auto instance = [&](std::size_t i, std::size_t j, std::size_t k) {
    const Element& a = elems[i];
    const Element& b = elems[j];
    const Element& c = elems[k];
    const Verdict sum = table.relation(a + c, b + c);
    if (sum == Verdict::distinct) return Outcome::ok;
    const LeqValue ca = wp.leq(c, a * n, depth).value;
    if (ca == LeqValue::no) return Outcome::ok;
    const LeqValue cb = wp.leq(c, b * n, depth).value;
    if (cb == LeqValue::no) return Outcome::ok;
    if (sum == Verdict::equal && ca == LeqValue::yes && cb == LeqValue::yes &&
        table.relation(a, b) == Verdict::distinct)
      return Outcome::counterexample;
    return Outcome::undecided;
  };

  std::size_t first = kNone;
  std::size_t first_k = kNone;
  sweep(pairs.size(), parallel, [&](std::size_t p) {
    auto [i, j] = pairs[p];
    if (table.relation(elems[i], elems[j]) == Verdict::equal) return Outcome::ok;
    Outcome worst = Outcome::ok;
    for (std::size_t k = 0; k < m; ++k) {
      Outcome o = instance(i, j, k);
      if (o == Outcome::counterexample) return o;
      if (o == Outcome::undecided) worst = o;
    }
    return worst;
  }, r, first);
  r.checked = pairs.size() * m;
  if (first != kNone) {
    auto [i, j] = pairs[first];
    for (std::size_t k = 0; k < m && first_k == kNone; ++k)
      if (instance(i, j, k) == Outcome::counterexample) first_k = k;
    r.payload = {{"a", elems[i]}, {"b", elems[j]}, {"c", elems[first_k]}};
    r.multiplier = n_bound;
    r.detail = "a + c ~ b + c, c <= n*a, c <= n*b, but a and b are distinct";
  }
  finish(r);
  return r;
}

PropertyReport unperforation(const WordProblem& wp, std::size_t size_bound,
                             std::size_t n_bound, std::optional<std::size_t> depth,
                             bool parallel) {
  PropertyReport r = start(wp, "unperforation", size_bound, n_bound, depth);
  const auto elems = elements_up_to(wp.graph().vertex_count(), size_bound);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::vector<std::size_t> multiplier(pairs.size(), 0);

  std::size_t first = kNone;
  sweep(pairs.size(), parallel, [&](std::size_t p) {
    const Element& a = elems[pairs[p].first];
    const Element& b = elems[pairs[p].second];
    const LeqValue base = wp.leq(a, b, depth).value;
    if (base == LeqValue::yes) return Outcome::ok;
    bool undecided = false;
    for (std::size_t n = 2; n <= n_bound; ++n) {
      const Integer k(static_cast<unsigned long>(n));
      const LeqValue scaled = wp.leq(a * k, b * k, depth).value;
      if (scaled == LeqValue::no) continue;
      if (scaled == LeqValue::yes && base == LeqValue::no) {
        multiplier[p] = n;
        return Outcome::counterexample;
      }
      undecided = true;
    }
    return undecided ? Outcome::undecided : Outcome::ok;
  }, r, first);
  if (first != kNone) {
    r.payload = {{"a", elems[pairs[first].first]}, {"b", elems[pairs[first].second]}};
    r.multiplier = multiplier[first];
    r.detail = "n*a <= n*b but a is not below b";
  }
  finish(r);
  return r;
}

}  // namespace

PropertyReport check_separativity(const WordProblem& wp, std::size_t size_bound,
                                  std::size_t n_bound,
                                  std::optional<std::size_t> depth) {
  return separativity(wp, size_bound, n_bound, depth, true);
}

PropertyReport check_separativity_serial(const WordProblem& wp,
                                         std::size_t size_bound,
                                         std::size_t n_bound,
                                         std::optional<std::size_t> depth) {
  return separativity(wp, size_bound, n_bound, depth, false);
}

PropertyReport check_unperforation(const WordProblem& wp, std::size_t size_bound,
                                   std::size_t n_bound,
                                   std::optional<std::size_t> depth) {
  return unperforation(wp, size_bound, n_bound, depth, true);
}

PropertyReport check_unperforation_serial(const WordProblem& wp,
                                          std::size_t size_bound,
                                          std::size_t n_bound,
                                          std::optional<std::size_t> depth) {
  return unperforation(wp, size_bound, n_bound, depth, false);
}

PropertyReport check_refinement(const WordProblem& wp, std::size_t size_bound,
                                std::optional<std::size_t> depth) {
  PropertyReport r = start(wp, "refinement", size_bound, 0, depth);
  const ClassTable table(wp, size_bound, depth);
  const auto elems = elements_up_to(wp.graph().vertex_count(), size_bound);
  std::vector<std::pair<std::size_t, std::size_t>> sides;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j)
      if (total(elems[i]) + total(elems[j]) <= size_bound) sides.emplace_back(i, j);
  std::vector<std::pair<std::size_t, std::size_t>> instances;
  for (std::size_t s = 0; s < sides.size(); ++s)
    for (std::size_t t = s; t < sides.size(); ++t) {
      const Element x = elems[sides[s].first] + elems[sides[s].second];
      const Element y = elems[sides[t].first] + elems[sides[t].second];
      const Verdict v = table.relation(x, y);
      if (v == Verdict::unknown) ++r.undecided;
      if (v == Verdict::equal) instances.emplace_back(s, t);
    }

  auto check = [&](const Element& lhs, const Element& rhs) {
    switch (wp.compare(lhs, rhs, depth)) {
      case Verdict::equal: return Outcome::ok;
      case Verdict::distinct: return Outcome::counterexample;
      case Verdict::unknown: return Outcome::undecided;
    }
    return Outcome::undecided;
  };
  std::size_t first = kNone;
  sweep(instances.size(), true, [&](std::size_t k) {
    const Element& a1 = elems[sides[instances[k].first].first];
    const Element& a2 = elems[sides[instances[k].first].second];
    const Element& b1 = elems[sides[instances[k].second].first];
    const Element& b2 = elems[sides[instances[k].second].second];
    Refinement ref = refine(wp, a1, a2, b1, b2, depth);
    if (ref.verdict != Verdict::equal) return Outcome::undecided;
    const auto& g = ref.gamma;
    Outcome worst = Outcome::ok;
    for (Outcome o : {check(a1, g[0][0] + g[0][1]), check(a2, g[1][0] + g[1][1]),
                      check(b1, g[0][0] + g[1][0]), check(b2, g[0][1] + g[1][1])}) {
      if (o == Outcome::counterexample) return o;
      if (o == Outcome::undecided) worst = o;
    }
    return worst;
  }, r, first);
  if (first != kNone) {
    const auto [s, t] = instances[first];
    r.payload = {{"a1", elems[sides[s].first]}, {"a2", elems[sides[s].second]},
                 {"b1", elems[sides[t].first]}, {"b2", elems[sides[t].second]}};
    r.detail = "refinement matrix fails a row or column check";
  }
  finish(r);
  return r;
}

std::vector<Element> primes_up_to(const WordProblem& wp, std::size_t size_bound,
                                  std::optional<std::size_t> depth) {
  const auto elems = elements_up_to(wp.graph().vertex_count(), size_bound);
  std::vector<char> prime(elems.size(), 0);
  for (std::size_t i = 1; i < elems.size(); ++i)
    prime[i] = is_prime(wp, elems[i], size_bound, depth).verdict ==
               PropertyVerdict::holds;
  std::vector<Element> out;
  for (std::size_t i = 1; i < elems.size(); ++i) {
    if (!prime[i]) continue;
    bool duplicate = false;
    for (const Element& q : out)
      if (wp.compare(elems[i], q, depth) == Verdict::equal) duplicate = true;
    if (!duplicate) out.push_back(elems[i]);
  }
  return out;
}

bool verify_counterexample(const WordProblem& wp, const PropertyReport& r) {
  if (r.verdict != PropertyVerdict::counterexample) return false;
  std::map<std::string, Element> e(r.payload.begin(), r.payload.end());
  auto leq_is = [&](const Element& x, const Element& y, LeqValue v) {
    return wp.leq(x, y, r.depth).value == v;
  };
  auto eq_is = [&](const Element& x, const Element& y, Verdict v) {
    EqVerdict d = wp.decide(x, y, r.depth);
    return d.verdict == v && wp.verify(x, y, d);
  };
  const Integer n(static_cast<unsigned long>(r.multiplier));
  if (r.name == "prime")
    return leq_is(e.at("p"), e.at("a1") + e.at("a2"), LeqValue::yes) &&
           leq_is(e.at("p"), e.at("a1"), LeqValue::no) &&
           leq_is(e.at("p"), e.at("a2"), LeqValue::no);
  if (r.name == "separativity")
    return eq_is(e.at("a") + e.at("c"), e.at("b") + e.at("c"), Verdict::equal) &&
           leq_is(e.at("c"), e.at("a") * n, LeqValue::yes) &&
           leq_is(e.at("c"), e.at("b") * n, LeqValue::yes) &&
           eq_is(e.at("a"), e.at("b"), Verdict::distinct);
  if (r.name == "unperforation")
    return leq_is(e.at("a") * n, e.at("b") * n, LeqValue::yes) &&
           leq_is(e.at("a"), e.at("b"), LeqValue::no);
  if (r.name == "refinement") {
    Refinement ref = refine(wp, e.at("a1"), e.at("a2"), e.at("b1"), e.at("b2"),
                            r.depth);
    if (ref.verdict != Verdict::equal) return false;
    const auto& g = ref.gamma;
    return eq_is(e.at("a1"), g[0][0] + g[0][1], Verdict::distinct) ||
           eq_is(e.at("a2"), g[1][0] + g[1][1], Verdict::distinct) ||
           eq_is(e.at("b1"), g[0][0] + g[1][0], Verdict::distinct) ||
           eq_is(e.at("b2"), g[0][1] + g[1][1], Verdict::distinct);
  }
  return false;
}

}  // namespace graphmon
