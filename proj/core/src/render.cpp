#include "ld/render.hpp"

#include <algorithm>
#include <vector>

namespace ld {

namespace {

struct Block {
  std::vector<std::string> rows;
  int width() const { return rows.empty() ? 0 : (int)rows[0].size(); }
  int height() const { return (int)rows.size(); }
};

Block text_block(const std::string& s) { return Block{{s}}; }

Block pad_to_height(Block b, int h) {
  std::string blank(b.width(), ' ');
  while (b.height() < h) b.rows.push_back(blank);
  return b;
}

Block beside(const Block& a, const Block& b) {
  if (a.rows.empty()) return b;
  if (b.rows.empty()) return a;
  int h = std::max(a.height(), b.height());
  Block pa = pad_to_height(a, h), pb = pad_to_height(b, h);
  Block out;
  for (int i = 0; i < h; ++i) out.rows.push_back(pa.rows[i] + " " + pb.rows[i]);
  return out;
}

Block boxed(const Block& inner, bool alt) {
  const char h = alt ? '=' : '-';
  const char v = alt ? '"' : '|';
  int w = std::max(inner.width(), 1);
  Block out;
  out.rows.push_back("+" + std::string(w + 2, h) + "+");
  if (inner.rows.empty()) {
    out.rows.push_back(std::string(1, v) + std::string(w + 2, ' ') + std::string(1, v));
  } else {
    for (const std::string& r : inner.rows) {
      std::string row = r;
      row.resize(w, ' ');
      out.rows.push_back(std::string(1, v) + " " + row + " " + std::string(1, v));
    }
  }
  out.rows.push_back("+" + std::string(w + 2, h) + "+");
  return out;
}

Block block_of(const Graph& g);

Block block_of_item(const GraphItem& it) {
  switch (it.kind) {
    case GKind::AtomC: return text_block(it.name);
    case GKind::AtomA: return text_block("@" + it.name);
    case GKind::CutC: return boxed(block_of(it.child), false);
    case GKind::CutA: return boxed(block_of(it.child), true);
  }
  return {};
}

Block block_of(const Graph& g) {
  Block out;
  for (const GraphItem& it : g.items) out = beside(out, block_of_item(it));
  return out;
}

}  // namespace

std::string render_graph(const Graph& g) {
  if (g.items.empty()) return "(blank sheet)\n";
  Block b = block_of(g);
  std::string out;
  for (const std::string& r : b.rows) {
    out += r;
    out += "\n";
  }
  return out;
}

}  // namespace ld
