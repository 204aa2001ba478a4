#ifndef HOOKSPH_PERM_HPP
#define HOOKSPH_PERM_HPP

#include <cstddef>
#include <iosfwd>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hooksph {

// Positions and block indices are 0-based throughout the library API; the text
// forms (cycle notation, CLI flags) are 1-based.

// A permutation of {0..N-1} in one-line form: images()[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless images is a bijection of {0..N-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // 1-based one-line form, e.g. {3,2,1}.
  static Permutation from_one_line(std::span<const int> one_based);
  // The cycle (c_0 c_1 ... c_{r-1}): c_0 -> c_1 -> ... -> c_0.
  static Permutation cycle(int n, std::span<const int> positions);
  static Permutation transposition(int n, int i, int j);
  // Cycle notation with 1-based points, e.g. "(1 3 6)(2 5)" or "()" for the
  // identity. Commas are accepted as separators. Throws ParseError.
  static Permutation parse_cycles(std::string_view text, int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  // Cycle notation, 1-based, fixed points omitted; "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// (u v)(i) = u(v(i)): right-to-left as functions. Throws on size mismatch.
Permutation compose(const Permutation& u, const Permutation& v);

// Conjugacy class label: cycle lengths sorted descending.
class CycleType {
 public:
  CycleType() = default;
  // Throws std::invalid_argument unless parts are positive; sorts descending.
  explicit CycleType(std::vector<int> parts);

  // Parses "2,1,1"; throws ParseError.
  static CycleType parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int total() const;
  std::string str() const;
  // Number of permutations in S_N with this cycle type.
  unsigned long long class_size() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;

 private:
  std::vector<int> parts_;
};

CycleType cycle_type(const Permutation& w);

// All partitions of n, each weakly decreasing, in reverse lexicographic order.
std::vector<CycleType> partitions_of(int n);

// The composition n = (n_1..n_p) of N and its consecutive intervals I_j.
class BlockStructure {
 public:
  struct Interval {
    int first;  // 0-based, inclusive
    int last;   // 0-based, inclusive
  };

  BlockStructure() = default;
  // Throws std::invalid_argument for an empty list or a size < 1.
  explicit BlockStructure(std::vector<int> sizes);

  // Parses "2,3,1"; throws ParseError.
  static BlockStructure parse(std::string_view text);

  int block_count() const noexcept { return static_cast<int>(sizes_.size()); }
  int total() const noexcept { return total_; }
  int size(int j) const { return sizes_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& sizes() const noexcept { return sizes_; }
  Interval interval(int j) const;
  int first(int j) const { return interval(j).first; }
  // Block index containing position s.
  int block_of(int s) const;
  // Order of the Young subgroup, prod n_j!.
  unsigned long long subgroup_order() const;
  std::string str() const;

  friend bool operator==(const BlockStructure&, const BlockStructure&) = default;

 private:
  std::vector<int> sizes_;
  std::vector<int> offsets_;
  int total_ = 0;
};

// Strictly increasing, nonempty set of 0-based block indices.
class SupportSet {
 public:
  SupportSet() = default;
  // Sorts; throws std::invalid_argument on duplicates, negatives or emptiness.
  explicit SupportSet(std::vector<int> members);
  // Parses 1-based "1,3"; throws ParseError.
  static SupportSet parse(std::string_view text);

  const std::vector<int>& members() const noexcept { return members_; }
  int size() const noexcept { return static_cast<int>(members_.size()); }
  bool contains(int j) const;
  // 1-based "1,3".
  std::string str() const;

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  std::vector<int> members_;
};

// The l-cycle through the first position of each interval I_a, a in A ascending.
// Identity when #A = 1. Throws std::out_of_range for a member >= p.
Permutation support_cycle(const BlockStructure& blocks, const SupportSet& support);

// Enumerates the Young subgroup S_{n_1} x ... x S_{n_p} as a mixed-radix
// product of per-block permutations. The last block varies fastest; each
// block runs through its permutations in lexicographic order.
class YoungSubgroup {
 public:
  explicit YoungSubgroup(BlockStructure blocks) : blocks_(std::move(blocks)) {}

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class YoungSubgroup;
    iterator(const BlockStructure* blocks, bool done);

    const BlockStructure* blocks_ = nullptr;
    std::vector<int> images_;
    Permutation current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(&blocks_, false); }
  iterator end() const { return iterator(&blocks_, true); }
  unsigned long long order() const { return blocks_.subgroup_order(); }
  const BlockStructure& blocks() const noexcept { return blocks_; }

  // True when h maps each interval of the blocks onto itself.
  static bool contains(const BlockStructure& blocks, const Permutation& h);

 private:
  BlockStructure blocks_;
};

// Parses a comma-separated list of integers such as "2,3,1".
std::vector<int> parse_int_list(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Permutation& w);
std::ostream& operator<<(std::ostream& os, const CycleType& ct);
std::ostream& operator<<(std::ostream& os, const BlockStructure& blocks);

}  // namespace hooksph

#endif
