#ifndef EDIS_PARTITION_HPP_
#define EDIS_PARTITION_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace edis {

//! An equivalence relation on {0, ..., n - 1} stored as a class-index vector.
//! Class ids are contiguous 0 .. num_classes - 1, numbered by first
//! occurrence, so equal partitions compare equal element-wise.
class Partition {
 public:
  Partition() = default;

  //! The trivial (diagonal) partition on n points.
  explicit Partition(int n);

  //! From an arbitrary class-id labelling; ids are renumbered.
  static Partition from_labels(std::vector<int> const& labels);

  int size() const { return static_cast<int>(class_of_.size()); }
  int num_classes() const { return num_classes_; }
  int class_of(int i) const { return class_of_[i]; }
  bool same(int i, int j) const { return class_of_[i] == class_of_[j]; }

  bool is_trivial() const { return num_classes_ == size(); }
  bool is_universal() const { return size() == 0 || num_classes_ == 1; }

  std::vector<std::vector<int>> classes() const;

  //! true iff every class of *this is contained in a class of other.
  bool refines(Partition const& other) const;

  bool operator==(Partition const& other) const {
    return class_of_ == other.class_of_;
  }
  bool operator!=(Partition const& other) const { return !(*this == other); }
  bool operator<(Partition const& other) const {
    return class_of_ < other.class_of_;
  }

  std::size_t hash() const;

  //! One line of space-separated class ids.
  std::string      to_string() const;
  static Partition parse(std::string const& line);

 private:
  std::vector<int> class_of_;
  int              num_classes_ = 0;
};

struct PartitionHash {
  std::size_t operator()(Partition const& p) const { return p.hash(); }
};

//! Plain union-find over {0, ..., n - 1}.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) {
      parent_[i] = i;
    }
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x          = parent_[x];
    }
    return x;
  }

  //! returns true if x and y were in different classes.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    if (x > y) {
      std::swap(x, y);
    }
    parent_[y] = x;
    return true;
  }

  Partition to_partition();

 private:
  std::vector<int> parent_;
};

}  // namespace edis
#endif  // EDIS_PARTITION_HPP_
