#include "welsch/seq.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace welsch {

namespace detail {
void check_fail(const char* what) {
  throw std::logic_error(std::string("internal check failed: ") + what);
}
}  // namespace detail

const Int& factorial(long n) {
  internal_check(n >= 0, "factorial of negative argument");
  thread_local std::vector<Int> table{1_mpz};
  while (static_cast<long>(table.size()) <= n) {
    table.push_back(table.back() * static_cast<long>(table.size()));
  }
  return table[static_cast<std::size_t>(n)];
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int multinomial(std::span<const long> parts) {
  long total = 0;
  Int den = 1;
  for (long p : parts) {
    internal_check(p >= 0, "negative multinomial part");
    total += p;
    den *= factorial(p);
  }
  return exact_div(factorial(total), den);
}

Int exact_div(const Int& num, const Int& den) {
  internal_check(den != 0, "division by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  internal_check(r == 0, "division expected to be exact has a remainder");
  return q;
}

SeqZ SeqZ::theta(int k, int count) {
  SeqZ s;
  s.add(k, count);
  return s;
}

SeqZ SeqZ::parse(std::string_view text) {
  SeqZ s;
  if (text.empty()) return s;
  int k = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0) {
      throw std::invalid_argument("bad sequence entry '" + std::string(tok) +
                                  "'");
    }
    if (value > 0) s.add(k, value);
    ++k;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return s;
}

int SeqZ::at(int k) const {
  for (const auto& [idx, v] : ents_) {
    if (idx == k) return v;
    if (idx > k) break;
  }
  return 0;
}

int SeqZ::max_index() const { return ents_.empty() ? 0 : ents_.back().first; }

int SeqZ::norm() const {
  int n = 0;
  for (const auto& [idx, v] : ents_) n += v;
  return n;
}

long SeqZ::iweight() const {
  long w = 0;
  for (const auto& [idx, v] : ents_) w += static_cast<long>(idx) * v;
  return w;
}

Int SeqZ::ipow() const {
  Int r = 1;
  for (const auto& [idx, v] : ents_) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(idx),
                  static_cast<unsigned long>(v));
    r *= p;
  }
  return r;
}

bool SeqZ::odd_supported() const {
  for (const auto& [idx, v] : ents_) {
    if (idx % 2 == 0) return false;
  }
  return true;
}

int SeqZ::multiplicity_at(int i) const {
  if (i < 1) throw std::out_of_range("sequence position below 1");
  int seen = 0;
  for (const auto& [idx, v] : ents_) {
    seen += v;
    if (i <= seen) return idx;
  }
  throw std::out_of_range("sequence position beyond norm");
}

void SeqZ::add(int k, int count) {
  if (count == 0) return;
  if (k < 1) throw std::invalid_argument("sequence index below 1");
  auto it = std::lower_bound(
      ents_.begin(), ents_.end(), k,
      [](const Entry& e, int key) { return e.first < key; });
  if (it != ents_.end() && it->first == k) {
    it->second += count;
    if (it->second < 0) throw std::invalid_argument("sequence entry underflow");
    if (it->second == 0) ents_.erase(it);
  } else {
    if (count < 0) throw std::invalid_argument("sequence entry underflow");
    ents_.insert(it, {k, count});
  }
}

SeqZ SeqZ::plus_theta(int k) const {
  SeqZ s = *this;
  s.add(k, 1);
  return s;
}

SeqZ SeqZ::minus_theta(int k) const {
  SeqZ s = *this;
  s.add(k, -1);
  return s;
}

bool SeqZ::leq(const SeqZ& other) const {
  for (const auto& [idx, v] : ents_) {
    if (v > other.at(idx)) return false;
  }
  return true;
}

SeqZ SeqZ::operator+(const SeqZ& o) const {
  SeqZ s = *this;
  for (const auto& [idx, v] : o.ents_) s.add(idx, v);
  return s;
}

SeqZ SeqZ::operator-(const SeqZ& o) const {
  SeqZ s = *this;
  for (const auto& [idx, v] : o.ents_) s.add(idx, -v);
  return s;
}

std::string SeqZ::str() const {
  if (ents_.empty()) return "";
  std::string out;
  int top = max_index();
  for (int k = 1; k <= top; ++k) {
    if (k > 1) out += ',';
    out += std::to_string(at(k));
  }
  return out;
}

std::size_t SeqZ::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (const auto& [idx, v] : ents_) {
    mix(static_cast<std::size_t>(idx));
    mix(static_cast<std::size_t>(v));
  }
  return h;
}

Int seq_multinomial(const SeqZ& a, std::span<const SeqZ> parts) {
  SeqZ used;
  for (const SeqZ& p : parts) used = used + p;
  if (!used.leq(a)) {
    throw std::invalid_argument("multinomial parts exceed the base sequence");
  }
  Int result = 1;
  for (const auto& [k, ak] : a.entries()) {
    Int den = 1;
    int taken = 0;
    for (const SeqZ& p : parts) {
      int pk = p.at(k);
      taken += pk;
      den *= factorial(pk);
    }
    den *= factorial(ak - taken);
    result *= exact_div(factorial(ak), den);
  }
  return result;
}

Int seq_binomial(const SeqZ& b, const SeqZ& bt) {
  if (!bt.leq(b)) {
    throw std::invalid_argument("binomial lower sequence exceeds upper");
  }
  Int result = 1;
  for (const auto& [k, btk] : bt.entries()) {
    result *= binomial(b.at(k), btk);
  }
  return result;
}

namespace {

void sub_seq_rec(const std::vector<SeqZ::Entry>& ents, std::size_t i,
                 int remaining, SeqZ& cur, std::vector<SeqZ>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (i == ents.size()) return;
  int avail = 0;
  for (std::size_t j = i; j < ents.size(); ++j) avail += ents[j].second;
  if (avail < remaining) return;
  auto [k, bk] = ents[i];
  for (int take = 0; take <= std::min(bk, remaining); ++take) {
    if (take > 0) cur.add(k, take);
    sub_seq_rec(ents, i + 1, remaining - take, cur, out);
    if (take > 0) cur.add(k, -take);
  }
}

void bounded_sub_seq_rec(const std::vector<SeqZ::Entry>& ents, std::size_t i,
                         long budget, SeqZ& cur, std::vector<SeqZ>& out) {
  if (i == ents.size()) {
    out.push_back(cur);
    return;
  }
  auto [k, bk] = ents[i];
  for (int take = 0; take <= bk && static_cast<long>(k) * take <= budget;
       ++take) {
    if (take > 0) cur.add(k, take);
    bounded_sub_seq_rec(ents, i + 1, budget - static_cast<long>(k) * take, cur,
                        out);
    if (take > 0) cur.add(k, -take);
  }
}

void iweight_rec(long remaining, int max_k, bool odd_only, SeqZ& cur,
                 std::vector<SeqZ>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min<long>(max_k, remaining); k >= 1; --k) {
    if (odd_only && k % 2 == 0) continue;
    cur.add(k, 1);
    iweight_rec(remaining - k, k, odd_only, cur, out);
    cur.add(k, -1);
  }
}

}  // namespace

std::vector<SeqZ> enumerate_sub_seqs(const SeqZ& b, int size) {
  std::vector<SeqZ> out;
  if (size < 0) return out;
  SeqZ cur;
  sub_seq_rec(b.entries(), 0, size, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SeqZ> sub_seqs_bounded(const SeqZ& b, long max_iweight) {
  std::vector<SeqZ> out;
  if (max_iweight < 0) return out;
  SeqZ cur;
  bounded_sub_seq_rec(b.entries(), 0, max_iweight, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SeqZ> seqs_with_iweight(long w, bool odd_only) {
  std::vector<SeqZ> out;
  if (w < 0) return out;
  SeqZ cur;
  iweight_rec(w, static_cast<int>(w), odd_only, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace welsch
