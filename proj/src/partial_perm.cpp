#include "edis/partial_perm.hpp"

#include <algorithm>
#include <sstream>

#include "edis/errors.hpp"

namespace edis {

PartialPerm::PartialPerm(int deg, std::vector<int> images)
    : degree_(deg), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != deg) {
    throw ParseError("partial perm: expected " + std::to_string(deg)
                     + " image entries, got " + std::to_string(images_.size()));
  }
  std::vector<char> seen(deg, 0);
  for (int i = 0; i < deg; ++i) {
    int j = images_[i];
    if (j == UNDEFINED) {
      continue;
    }
    if (j < 0 || j >= deg) {
      throw ParseError("partial perm: image " + std::to_string(j)
                       + " out of range");
    }
    if (seen[j]) {
      throw ParseError("partial perm: not injective at image "
                       + std::to_string(j));
    }
    seen[j] = 1;
  }
}

PartialPerm PartialPerm::identity(int deg) {
  std::vector<int> im(deg);
  for (int i = 0; i < deg; ++i) {
    im[i] = i;
  }
  return PartialPerm(deg, std::move(im));
}

PartialPerm
PartialPerm::from_pairs(int deg, std::vector<std::pair<int, int>> const& pairs) {
  std::vector<int> im(deg, UNDEFINED);
  for (auto [i, j] : pairs) {
    if (i < 0 || i >= deg || j < 0 || j >= deg) {
      throw ParseError("partial perm: point out of range");
    }
    if (im[i] != UNDEFINED) {
      throw ParseError("partial perm: point " + std::to_string(i)
                       + " mapped twice");
    }
    im[i] = j;
  }
  return PartialPerm(deg, std::move(im));
}

int PartialPerm::dom_size() const {
  int k = 0;
  for (int v : images_) {
    k += (v != UNDEFINED);
  }
  return k;
}

PartialPerm PartialPerm::operator*(PartialPerm const& other) const {
  if (degree_ != other.degree_) {
    throw Error("partial perm product: degree mismatch");
  }
  std::vector<int> im(degree_, UNDEFINED);
  for (int i = 0; i < degree_; ++i) {
    int j = images_[i];
    if (j != UNDEFINED && other.images_[j] != UNDEFINED) {
      im[i] = other.images_[j];
    }
  }
  return PartialPerm(degree_, std::move(im));
}

PartialPerm PartialPerm::inverse() const {
  std::vector<int> im(degree_, UNDEFINED);
  for (int i = 0; i < degree_; ++i) {
    if (images_[i] != UNDEFINED) {
      im[images_[i]] = i;
    }
  }
  return PartialPerm(degree_, std::move(im));
}

bool PartialPerm::is_idempotent() const {
  for (int i = 0; i < degree_; ++i) {
    if (images_[i] != UNDEFINED && images_[i] != i) {
      return false;
    }
  }
  return true;
}

bool PartialPerm::operator<(PartialPerm const& other) const {
  if (degree_ != other.degree_) {
    return degree_ < other.degree_;
  }
  return images_ < other.images_;
}

std::size_t PartialPerm::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::size_t>(degree_);
  for (int v : images_) {
    h ^= static_cast<std::size_t>(v + 2) + 0x9e3779b97f4a7c15ULL + (h << 6)
         + (h >> 2);
  }
  return h;
}

std::string PartialPerm::to_string() const {
  std::ostringstream os;
  os << "deg " << degree_ << ";";
  for (int i = 0; i < degree_; ++i) {
    if (images_[i] != UNDEFINED) {
      os << " " << i << "->" << images_[i];
    }
  }
  return os.str();
}

PartialPerm PartialPerm::parse(std::string const& text) {
  std::istringstream is(text);
  std::string        kw;
  int                deg = 0;
  char               semi = 0;
  if (!(is >> kw) || kw != "deg" || !(is >> deg) || !(is >> semi)
      || semi != ';' || deg < 0) {
    throw ParseError("partial perm: expected \"deg <n>; ...\", got \"" + text
                     + "\"");
  }
  std::vector<std::pair<int, int>> pairs;
  std::string                      tok;
  while (is >> tok) {
    auto arrow = tok.find("->");
    if (arrow == std::string::npos) {
      throw ParseError("partial perm: bad mapping token \"" + tok + "\"");
    }
    try {
      int i = std::stoi(tok.substr(0, arrow));
      int j = std::stoi(tok.substr(arrow + 2));
      pairs.emplace_back(i, j);
    } catch (std::exception const&) {
      throw ParseError("partial perm: bad mapping token \"" + tok + "\"");
    }
  }
  return from_pairs(deg, pairs);
}

std::vector<PartialPerm> all_partial_perms(int n) {
  std::vector<PartialPerm> out;
  // images over {UNDEFINED, 0, .., n-1} in odometer order, keep injective ones
  std::vector<int> im(n, PartialPerm::UNDEFINED);
  while (true) {
    bool              ok = true;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n && ok; ++i) {
      if (im[i] != PartialPerm::UNDEFINED) {
        if (seen[im[i]]) {
          ok = false;
        }
        seen[im[i]] = 1;
      }
    }
    if (ok) {
      out.emplace_back(n, im);
    }
    int pos = n - 1;
    while (pos >= 0 && im[pos] == n - 1) {
      im[pos] = PartialPerm::UNDEFINED;
      --pos;
    }
    if (pos < 0) {
      break;
    }
    ++im[pos];
  }
  return out;
}

}  // namespace edis
