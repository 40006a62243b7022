#pragma once

#include <iosfwd>

#include "braidmod/monodromy.hpp"

namespace braidmod {

// Loop file format: a JSON object with fields
//   n       integer degree
//   samples array of { "theta": <radians>, "coeffs": [[re, im], ...] }
// with n coefficient pairs per sample, constant term first, and strictly
// increasing angles in [0, 2pi).
PolynomialLoop read_loop(std::istream& in);
PolynomialLoop read_loop_file(const std::string& path);
void write_loop(std::ostream& out, const PolynomialLoop& loop);

// Strand trajectories as tab-separated lines: theta, strand, re, im.
void write_track(std::ostream& out, const RootTrack& track);

}  // namespace braidmod
