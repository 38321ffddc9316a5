#ifndef RUEPPEL_CATALOG_HPP
#define RUEPPEL_CATALOG_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rueppel/integer.hpp"
#include "rueppel/series.hpp"

namespace rueppel {

enum class GeneratorKind { direct_rule, gf_derived, relation_derived };
const char* to_string(GeneratorKind k);

/// One registered OEIS sequence. Terms are indexed exactly as in the OEIS
/// (`offset` is the OEIS offset); `printed` is the reference prefix, which may
/// start at a later index than `offset`.
struct CatalogEntry {
  std::string id;
  long offset = 0;
  GeneratorKind kind = GeneratorKind::direct_rule;
  std::string description;
  std::vector<Integer> printed;
  long printed_start = 0;
  /// Terms offset, offset+1, ..., offset+N-1.
  std::function<std::vector<Integer>(std::size_t)> generate;
  /// Independent second derivation, when one exists.
  std::function<std::vector<Integer>(std::size_t)> oracle;
  /// The oracle only determines absolute values.
  bool oracle_abs_only = false;
  std::string oracle_description;
};

/// All sixteen sequences in A-number order. Immutable after first use.
const std::vector<CatalogEntry>& catalog();
/// UnknownSequence when `id` is not registered.
const CatalogEntry& catalog_entry(std::string_view id);
/// First N terms at the entry's OEIS offset.
Sequence<Integer> catalog_terms(std::string_view id, std::size_t n);

struct BinaryRuns {
  unsigned total_runs = 0;
  unsigned runs_of_ones = 0;
  unsigned digit_alternations = 0;
};
/// Digit scan of n in base 2; all zero for n = 0.
BinaryRuns binary_runs(std::uint64_t n);

/// Regular paper-folding value at offset 0: with n+1 = 2^k m, m odd,
/// P(n) = 1 iff m = 1 mod 4.
int paperfold(std::uint64_t n);

struct JosephusPipeline {
  std::vector<Integer> marked;
  std::vector<Integer> partial1;
  std::vector<Integer> doubled;
  std::vector<Integer> partial2;
};
/// Marks the zeros of 1 - r_{n+2} with -(i+1)/2, prepends 1, 0, and forms the
/// partial sums before and after doubling all but the first term. N >= 4.
JosephusPipeline josephus_pipeline(std::size_t n);

std::vector<Integer> motzkin_terms(std::size_t n);

/// Non-squashing partitions of n into distinct parts, by exhaustive search.
Integer count_nonsquashing_distinct(unsigned n);

/// Printed-prefix closed forms, in 0-based position k of the printed prefix.
Integer a062050_closed_form(std::uint64_t k);
Integer a006257_closed_form(std::uint64_t k);

/// Smallest shift s in [0, max_shift] with values[s + i] == prefix[i] for all i.
std::optional<std::size_t> calibrate_shift(std::span<const Integer> values, std::span<const Integer> prefix,
                                           std::size_t max_shift);

}  // namespace rueppel

#endif  // RUEPPEL_CATALOG_HPP
