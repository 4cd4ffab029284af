#include "ordfn/suborder.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

namespace ordfn {

bool Block::contains(const Ordinal& x) const {
  if (x < start) return false;
  return end_included ? x <= end : x < end;
}

SubOrder::SubOrder(Ordinal ambient, std::vector<Block> raw_blocks)
    : ambient_(std::move(ambient)), blocks_(std::move(raw_blocks)) {
  for (Block& b : blocks_) {
    if (b.end_included) {
      if (b.end < b.start)
        throw ValidationError("block " + format_block(b) + " ends before it starts");
    } else {
      if (!(b.start < b.end))
        throw ValidationError("empty block " + format_block(b));
      if (classify(b.end) == OrdinalClass::Successor) {
        b.end = predecessor(b.end);
        b.end_included = true;
        if (b.end < b.start) throw ValidationError("empty block " + format_block(b));
      }
    }
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& a, const Block& b) { return a.start < b.start; });
  std::vector<Block> merged;
  for (Block& b : blocks_) {
    if (merged.empty()) {
      merged.push_back(std::move(b));
      continue;
    }
    Block& prev = merged.back();
    // First point past prev: succ(end) when closed, end itself when open.
    const Ordinal frontier = prev.end_included ? successor(prev.end) : prev.end;
    if (b.start < frontier)
      throw ValidationError("overlapping blocks " + format_block(prev) + " and " +
                            format_block(b));
    if (b.start == frontier) {
      prev.end = std::move(b.end);
      prev.end_included = b.end_included;
    } else {
      merged.push_back(std::move(b));
    }
  }
  for (const Block& b : merged) {
    const bool fits = b.end_included ? b.end < ambient_ : b.end <= ambient_;
    if (!fits)
      throw ValidationError("block " + format_block(b) + " exceeds the ambient ordinal " +
                            format_ordinal(ambient_));
  }
  blocks_ = std::move(merged);
}

bool SubOrder::contains(const Ordinal& x) const {
  for (const Block& b : blocks_) {
    if (b.contains(x)) return true;
    if (x < b.start) break;
  }
  return false;
}

std::vector<GapPoint> dedekind_sections(const SubOrder& x) {
  std::vector<GapPoint> out;
  const auto& blocks = x.blocks();
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    // A boundary after block j is a section iff block j is right-open:
    // then max A does not exist, and sup A lies outside x so A is closed.
    // A closed terminal block gives both max A and min B, hence no section.
    if (!blocks[j].end_included) out.push_back(GapPoint{j + 1, blocks[j].end});
  }
  return out;
}

std::vector<Ordinal> remainder(const SubOrder& x) {
  std::vector<Ordinal> out;
  for (const GapPoint& gap : dedekind_sections(x)) out.push_back(gap.sup_in_ambient);
  return out;
}

std::vector<Ordinal> closure_remainder_oracle(const SubOrder& x) {
  // Candidates come from the block geometry; each is accepted by the
  // closure definition alone: a limit ordinal outside x that is the
  // supremum of the points of x below it.
  std::set<Ordinal> candidates;
  for (const Block& b : x.blocks()) {
    candidates.insert(b.start);
    candidates.insert(b.end);
  }
  candidates.insert(x.ambient());
  std::vector<Ordinal> out;
  for (const Ordinal& lambda : candidates) {
    if (classify(lambda) != OrdinalClass::Limit) continue;
    if (x.contains(lambda)) continue;
    bool any_below = false;
    Ordinal sup_below;
    for (const Block& b : x.blocks()) {
      if (!(b.start < lambda)) break;
      // Surviving candidates are never interior to a block, so any block
      // starting below lambda lies entirely below it; its point-supremum
      // is the end boundary.
      any_below = true;
      sup_below = b.end;
    }
    if (any_below && sup_below == lambda) out.push_back(lambda);
  }
  return out;
}

std::vector<CompletionEntry> completion_order(const SubOrder& x) {
  std::vector<CompletionEntry> out;
  const auto gaps = dedekind_sections(x);
  std::size_t gi = 0;
  const auto& blocks = x.blocks();
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    out.emplace_back(blocks[j]);
    if (gi < gaps.size() && gaps[gi].left_blocks == j + 1) out.emplace_back(gaps[gi++]);
  }
  return out;
}

std::vector<bool> gap_characteristic(const SubOrder& x, const GapPoint& gap) {
  const auto sections = dedekind_sections(x);
  if (std::find(sections.begin(), sections.end(), gap) == sections.end())
    throw DomainError("gap with sup " + format_ordinal(gap.sup_in_ambient) +
                      " is not a Dedekind section of this suborder");
  std::vector<bool> bits(x.blocks().size());
  for (std::size_t j = 0; j < bits.size(); ++j) bits[j] = j >= gap.left_blocks;
  return bits;
}

namespace {

std::size_t skip_ws(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos;
}

// Scans to the next top-level occurrence of one of the stop characters,
// treating '(' ')' as nesting (ordinal exponents carry parentheses).
std::size_t scan_to(std::string_view text, std::size_t pos, std::string_view stops) {
  int depth = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '(') {
      ++depth;
    } else if (depth > 0) {
      if (c == ')') --depth;
    } else if (stops.find(c) != std::string_view::npos) {
      return pos;
    }
  }
  return pos;
}

}  // namespace

std::vector<Block> parse_block_union(std::string_view text) {
  std::vector<Block> out;
  std::size_t pos = skip_ws(text, 0);
  if (pos == text.size()) throw ParseError("expected a block at position 0", 0);
  while (true) {
    pos = skip_ws(text, pos);
    if (pos == text.size() || text[pos] != '[')
      throw ParseError("expected '[' at position " + std::to_string(pos), pos);
    ++pos;
    const std::size_t comma = scan_to(text, pos, ",");
    if (comma == text.size())
      throw ParseError("expected ',' at position " + std::to_string(comma), comma);
    const Ordinal start = parse_ordinal(text.substr(pos, comma - pos));
    pos = comma + 1;
    const std::size_t close = scan_to(text, pos, ")]");
    if (close == text.size())
      throw ParseError("expected ')' or ']' at position " + std::to_string(close), close);
    const Ordinal end = parse_ordinal(text.substr(pos, close - pos));
    out.push_back(Block{start, end, text[close] == ']'});
    pos = skip_ws(text, close + 1);
    if (pos == text.size()) break;
    if (text[pos] != '+')
      throw ParseError("expected '+' between blocks at position " + std::to_string(pos), pos);
    ++pos;
  }
  return out;
}

std::string format_block(const Block& b) {
  return "[" + format_ordinal(b.start) + ", " + format_ordinal(b.end) +
         (b.end_included ? "]" : ")");
}

}  // namespace ordfn
