#ifndef BRAIDCOVER_IO_HPP
#define BRAIDCOVER_IO_HPP

#include <iosfwd>
#include <string>

#include "braidcover/orbit.hpp"

namespace braidcover {

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& m) : std::runtime_error(m) {}
};

// Hurwitz system file: first line "m n", then n lines "x y" with x < y.
HurwitzSystem read_hurwitz(std::istream& in);
void write_hurwitz(std::ostream& out, const HurwitzSystem& h);

// Skeleton file: header "g b m n", then b boundary lines (marked points in
// ccw order), m fan lines (arc ends "arc.end" in ccw order), n arc lines
// "index end0 end1".
DissectionSkeleton read_skeleton(std::istream& in);
void write_skeleton(std::ostream& out, const DissectionSkeleton& skel);

// Dissection file: ambient surface, then one serialized arc class per line.
// Corners are written as (point, ccw corner index); letters as
// (reference arc, side).
Dissection read_dissection(std::istream& in);
void write_dissection(std::ostream& out, const Dissection& d);

// One-line form of a Hurwitz system used in orbit listings.
std::string hurwitz_line(const HurwitzSystem& h);

// GradingData file: lines "point pos degree" (1-based point, ccw pos).
GradingData read_grading(std::istream& in);

std::string read_file(const std::string& path);
HurwitzSystem read_hurwitz_file(const std::string& path);
Dissection read_dissection_file(const std::string& path);
DissectionSkeleton read_skeleton_file(const std::string& path);

}  // namespace braidcover

#endif
