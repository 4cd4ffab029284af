#pragma once

#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "ordfn/ordinal.hpp"

namespace ordfn {

// Convex piece [start, end] or [start, end) of an ordinal. The right-open
// form is reserved for limit ends; [a, b) with b a successor canonicalizes
// to [a, b-1].
struct Block {
  Ordinal start;
  Ordinal end;
  bool end_included = true;

  bool contains(const Ordinal& x) const;

  bool operator==(const Block& other) const = default;
};

// Suborder of [0, ambient) as a canonical finite union of convex blocks:
// ascending, pairwise disjoint, never adjacent (adjacent pieces merge into
// one convex block).
class SubOrder {
 public:
  SubOrder(Ordinal ambient, std::vector<Block> raw_blocks);

  const Ordinal& ambient() const { return ambient_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  bool contains(const Ordinal& x) const;

  bool operator==(const SubOrder& other) const = default;

 private:
  Ordinal ambient_;
  std::vector<Block> blocks_;
};

// Dedekind section <A, B> of a suborder: A is the union of the first
// left_blocks blocks, B the rest. Recorded with sup A taken in
// [0, ambient]. Sections exist exactly where A ends in a right-open block,
// so max A is missing while A and B stay closed; min B always exists in a
// well-order, and <empty, X> is never a section for the same reason.
struct GapPoint {
  std::size_t left_blocks;
  Ordinal sup_in_ambient;

  bool operator==(const GapPoint& other) const = default;
};

// All Dedekind sections, ascending by supremum. Includes <X, empty> iff
// the last block is right-open.
std::vector<GapPoint> dedekind_sections(const SubOrder& x);

// Suprema of the sections: the Dedekind remainder of x.
std::vector<Ordinal> remainder(const SubOrder& x);

// Independent route to the same set: limit points of x inside
// [0, ambient] that are not in x, each candidate tested against the
// closure definition (sup of the points below it).
std::vector<Ordinal> closure_remainder_oracle(const SubOrder& x);

using CompletionEntry = std::variant<Block, GapPoint>;

// Blocks and gaps interleaved in ambient order; every gap sits strictly
// between its A and B.
std::vector<CompletionEntry> completion_order(const SubOrder& x);

// Characteristic bits of B blockwise: 0 on every block of A, 1 on every
// block of B. Distinct gaps of the same suborder give distinct vectors.
// DomainError when gap is not a section of x.
std::vector<bool> gap_characteristic(const SubOrder& x, const GapPoint& gap);

// Block-union syntax used by the CLI: "[0,w) + [w+1, w*2)".
std::vector<Block> parse_block_union(std::string_view text);

std::string format_block(const Block& b);

}  // namespace ordfn
