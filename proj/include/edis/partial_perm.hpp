#ifndef EDIS_PARTIAL_PERM_HPP_
#define EDIS_PARTIAL_PERM_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace edis {

//! An injective partial map on {0, ..., degree - 1}.
//!
//! Composition is left-to-right: (i)(f * g) = ((i)f)g, matching composition
//! of binary relations.
class PartialPerm {
 public:
  static constexpr int UNDEFINED = -1;

  PartialPerm() : degree_(0) {}

  //! The empty map on deg points.
  explicit PartialPerm(int deg) : degree_(deg), images_(deg, UNDEFINED) {}

  //! images[i] is the image of i, or UNDEFINED; throws on non-injective data.
  PartialPerm(int deg, std::vector<int> images);

  static PartialPerm identity(int deg);
  static PartialPerm from_pairs(int deg,
                                std::vector<std::pair<int, int>> const& pairs);

  int  degree() const { return degree_; }
  int  operator[](int i) const { return images_[i]; }
  bool defined(int i) const { return images_[i] != UNDEFINED; }
  int  dom_size() const;

  //! apply this, then other.
  PartialPerm operator*(PartialPerm const& other) const;
  PartialPerm inverse() const;
  bool        is_idempotent() const;

  bool operator==(PartialPerm const& other) const {
    return degree_ == other.degree_ && images_ == other.images_;
  }
  bool operator!=(PartialPerm const& other) const { return !(*this == other); }
  bool operator<(PartialPerm const& other) const;

  std::size_t hash() const;

  //! Text format: "deg <degree>; i1->j1 i2->j2 ..."; round-trips exactly.
  std::string        to_string() const;
  static PartialPerm parse(std::string const& text);

 private:
  int              degree_;
  std::vector<int> images_;
};

struct PartialPermHash {
  std::size_t operator()(PartialPerm const& p) const { return p.hash(); }
};

//! Every partial injection on {0, ..., n - 1}, ordered deterministically.
std::vector<PartialPerm> all_partial_perms(int n);

}  // namespace edis
#endif  // EDIS_PARTIAL_PERM_HPP_
