#pragma once

// Exact cover by dancing links (Knuth's Algorithm X on a toroidal doubly
// linked list). Items are the things to be covered exactly once; options are
// the subsets of items that may be selected.

#include <functional>
#include <span>
#include <vector>

namespace sedfkit {

class ExactCover {
 public:
  explicit ExactCover(int num_items = 0) { reset(num_items); }

  /// Drops all options and resizes; storage is kept for reuse.
  void reset(int num_items);

  /// Items must be distinct and in [0, num_items). Returns the option id.
  int add_option(std::span<const int> items);

  int num_items() const { return num_items_; }
  int num_options() const { return num_options_; }

  /// Calls `visit` with the chosen option ids (ascending) of every exact
  /// cover. Returning false from `visit` stops the search. Returns the number
  /// of covers visited.
  std::size_t solve(const std::function<bool(std::span<const int>)>& visit);

 private:
  struct Node {
    int left, right, up, down;
    int item;    // header index for option nodes; -1 for the root
    int option;  // option id; -1 for headers
  };

  void cover(int item);
  void uncover(int item);
  bool search(const std::function<bool(std::span<const int>)>& visit, std::size_t& found);

  int num_items_ = 0;
  int num_options_ = 0;
  std::vector<Node> nodes_;
  std::vector<int> size_;
  std::vector<int> chosen_;
  std::vector<int> sorted_;
};

}  // namespace sedfkit
