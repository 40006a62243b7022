#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "braidmod/braid.hpp"

namespace braidmod {

using bigint = boost::multiprecision::cpp_int;

// Representative of {+M, -M} in PSL(2,Z), det 1, sign-normalized so the
// first nonzero entry of the top row is positive.
struct Psl2zImage {
  bigint a, b, c, d;

  void normalize();
  bigint trace() const { return a + d; }
  bool is_identity() const { return b == 0 && c == 0 && a == 1 && d == 1; }
  Psl2zImage times(const Psl2zImage& rhs) const;
  bool operator==(const Psl2zImage&) const = default;
};

// Image of a 3-braid under sigma_1 -> [[1,1],[0,1]], sigma_2 -> [[1,0],[-1,1]].
// The kernel of B_3 -> PSL(2,Z) is the center, generated by the full twist.
Psl2zImage psl2z_image(const BraidWord& w);

// Canonical form of the PSL(2,Z) conjugacy class of the image of w, via the
// free-product structure PSL(2,Z) = Z/2 * Z/3: the cyclically reduced
// syllable word, rotated to its lexicographic minimum. Equal strings iff the
// images are conjugate in PSL(2,Z).
std::string psl2z_conjugacy_key(const BraidWord& w);

}  // namespace braidmod
