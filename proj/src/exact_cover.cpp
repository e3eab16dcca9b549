#include "sedfkit/exact_cover.hpp"

#include <algorithm>

#include "sedfkit/group.hpp"

namespace sedfkit {

// Node 0 is the root; nodes 1..num_items are item headers.
void ExactCover::reset(int num_items) {
  num_items_ = num_items;
  num_options_ = 0;
  nodes_.clear();
  nodes_.reserve(static_cast<std::size_t>(num_items) * 8 + 1);
  size_.assign(num_items + 1, 0);
  chosen_.clear();
  for (int i = 0; i <= num_items; ++i) {
    nodes_.push_back({i == 0 ? num_items : i - 1, i == num_items ? 0 : i + 1, i, i, i == 0 ? -1 : i, -1});
  }
}

int ExactCover::add_option(std::span<const int> items) {
  const int id = num_options_++;
  if (items.empty()) return id;
  const int first = static_cast<int>(nodes_.size());
  for (std::size_t k = 0; k < items.size(); ++k) {
    const int header = items[k] + 1;
    if (items[k] < 0 || items[k] >= num_items_) throw Error("exact cover item out of range");
    const int idx = static_cast<int>(nodes_.size());
    Node node;
    node.item = header;
    node.option = id;
    node.up = nodes_[header].up;
    node.down = header;
    node.left = k == 0 ? idx : idx - 1;
    node.right = first;
    nodes_.push_back(node);
    nodes_[nodes_[header].up].down = idx;
    nodes_[header].up = idx;
    if (k > 0) {
      nodes_[idx - 1].right = idx;
      nodes_[first].left = idx;
    }
    ++size_[header];
  }
  return id;
}

void ExactCover::cover(int item) {
  Node& h = nodes_[item];
  nodes_[h.right].left = h.left;
  nodes_[h.left].right = h.right;
  for (int i = h.down; i != item; i = nodes_[i].down) {
    for (int j = nodes_[i].right; j != i; j = nodes_[j].right) {
      nodes_[nodes_[j].down].up = nodes_[j].up;
      nodes_[nodes_[j].up].down = nodes_[j].down;
      --size_[nodes_[j].item];
    }
  }
}

void ExactCover::uncover(int item) {
  Node& h = nodes_[item];
  for (int i = h.up; i != item; i = nodes_[i].up) {
    for (int j = nodes_[i].left; j != i; j = nodes_[j].left) {
      ++size_[nodes_[j].item];
      nodes_[nodes_[j].down].up = j;
      nodes_[nodes_[j].up].down = j;
    }
  }
  nodes_[h.right].left = item;
  nodes_[h.left].right = item;
}

bool ExactCover::search(const std::function<bool(std::span<const int>)>& visit, std::size_t& found) {
  if (nodes_[0].right == 0) {
    ++found;
    sorted_ = chosen_;
    std::sort(sorted_.begin(), sorted_.end());
    return visit(sorted_);
  }
  // branch on the item with the fewest remaining options
  int best = nodes_[0].right;
  for (int c = nodes_[best].right; c != 0; c = nodes_[c].right) {
    if (size_[c] < size_[best]) best = c;
  }
  if (size_[best] == 0) return true;

  cover(best);
  bool keep_going = true;
  for (int r = nodes_[best].down; r != best && keep_going; r = nodes_[r].down) {
    chosen_.push_back(nodes_[r].option);
    for (int j = nodes_[r].right; j != r; j = nodes_[j].right) cover(nodes_[j].item);
    keep_going = search(visit, found);
    for (int j = nodes_[r].left; j != r; j = nodes_[j].left) uncover(nodes_[j].item);
    chosen_.pop_back();
  }
  uncover(best);
  return keep_going;
}

std::size_t ExactCover::solve(const std::function<bool(std::span<const int>)>& visit) {
  std::size_t found = 0;
  chosen_.clear();
  search(visit, found);
  return found;
}

}  // namespace sedfkit
