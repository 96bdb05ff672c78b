#include "edis/partition.hpp"

#include <sstream>

#include "edis/errors.hpp"

namespace edis {

Partition::Partition(int n) : class_of_(n), num_classes_(n) {
  for (int i = 0; i < n; ++i) {
    class_of_[i] = i;
  }
}

Partition Partition::from_labels(std::vector<int> const& labels) {
  Partition        p;
  std::vector<int> relabel;
  p.class_of_.resize(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int lab  = labels[i];
    int next = -1;
    for (std::size_t k = 0; k < relabel.size(); ++k) {
      if (relabel[k] == lab) {
        next = static_cast<int>(k);
        break;
      }
    }
    if (next == -1) {
      next = static_cast<int>(relabel.size());
      relabel.push_back(lab);
    }
    p.class_of_[i] = next;
  }
  p.num_classes_ = static_cast<int>(relabel.size());
  return p;
}

std::vector<std::vector<int>> Partition::classes() const {
  std::vector<std::vector<int>> out(num_classes_);
  for (int i = 0; i < size(); ++i) {
    out[class_of_[i]].push_back(i);
  }
  return out;
}

bool Partition::refines(Partition const& other) const {
  if (other.size() != size()) {
    return false;
  }
  std::vector<int> image(num_classes_, -1);
  for (int i = 0; i < size(); ++i) {
    int c = class_of_[i];
    if (image[c] == -1) {
      image[c] = other.class_of_[i];
    } else if (image[c] != other.class_of_[i]) {
      return false;
    }
  }
  return true;
}

std::size_t Partition::hash() const {
  std::size_t h = 0;
  for (int v : class_of_) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6)
         + (h >> 2);
  }
  return h;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    if (i > 0) {
      os << ' ';
    }
    os << class_of_[i];
  }
  return os.str();
}

Partition Partition::parse(std::string const& line) {
  std::istringstream is(line);
  std::vector<int>   labels;
  int                v;
  while (is >> v) {
    labels.push_back(v);
  }
  if (!is.eof()) {
    throw ParseError("partition: bad token in \"" + line + "\"");
  }
  return from_labels(labels);
}

Partition UnionFind::to_partition() {
  std::vector<int> labels(parent_.size());
  for (std::size_t i = 0; i < parent_.size(); ++i) {
    labels[i] = find(static_cast<int>(i));
  }
  return Partition::from_labels(labels);
}

}  // namespace edis
