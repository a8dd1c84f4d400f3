#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "welsch/arith.hpp"

namespace welsch {

// Finitely supported sequence of non-negative integers, the container for
// tangency data: entry k counts intersection points of multiplicity k with
// the fixed curve. Zeros are never stored, so structural equality is
// semantic equality and instances can serve directly as memo-key parts.
class SeqZ {
 public:
  using Entry = std::pair<int, int>;  // (index k >= 1, value >= 1)

  SeqZ() = default;

  // count * theta_k, the k-th generator.
  static SeqZ theta(int k, int count = 1);

  // Comma-separated values "a1,a2,..." with trailing zeros omitted; ""
  // denotes the empty sequence. Throws std::invalid_argument on bad input.
  static SeqZ parse(std::string_view text);

  bool empty() const { return ents_.empty(); }
  int at(int k) const;                 // a_k (0 if absent)
  int max_index() const;               // 0 when empty
  const std::vector<Entry>& entries() const { return ents_; }

  int norm() const;                    // sum a_k
  long iweight() const;                // sum k * a_k
  Int ipow() const;                    // prod k^(a_k)
  bool odd_supported() const;          // a_k == 0 for all even k

  // Multiplicity of the i-th point (1-based) when the sequence is expanded
  // in increasing index order. Throws std::out_of_range outside 1..norm().
  int multiplicity_at(int i) const;

  void add(int k, int count = 1);      // a_k += count (count may be negative)
  SeqZ plus_theta(int k) const;
  SeqZ minus_theta(int k) const;       // requires a_k >= 1

  bool leq(const SeqZ& other) const;   // componentwise <=

  SeqZ operator+(const SeqZ& o) const;
  SeqZ operator-(const SeqZ& o) const; // requires o.leq(*this)

  bool operator==(const SeqZ&) const = default;
  std::strong_ordering operator<=>(const SeqZ& o) const {
    return ents_ <=> o.ents_;
  }

  std::string str() const;
  std::size_t hash() const;

 private:
  std::vector<Entry> ents_;
};

// prod_k a_k! / (parts[0]_k! ... parts[s-1]_k! (a_k - sum parts_k)!).
// Rejects parts whose componentwise sum exceeds a.
Int seq_multinomial(const SeqZ& a, std::span<const SeqZ> parts);

// prod_k C(b_k, bt_k); rejects bt not componentwise <= b.
Int seq_binomial(const SeqZ& b, const SeqZ& bt);

// Every sequence t <= b with norm(t) == size, each exactly once, sorted in
// the canonical SeqZ order. Empty list when none exist.
std::vector<SeqZ> enumerate_sub_seqs(const SeqZ& b, int size);

// Every sequence t <= b with iweight(t) <= max_iweight (the empty sequence
// included), sorted canonically.
std::vector<SeqZ> sub_seqs_bounded(const SeqZ& b, long max_iweight);

// Every sequence with the given iweight (partitions of w written as
// multiplicity vectors), optionally restricted to odd indices. Sorted
// canonically; for w == 0 the list holds just the empty sequence.
std::vector<SeqZ> seqs_with_iweight(long w, bool odd_only = false);

}  // namespace welsch
